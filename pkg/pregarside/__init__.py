"""Word problems and parabolic cosets in preGarside monoids of FC type."""

__version__ = '0.0.1'
