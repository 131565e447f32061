from pregarside.frontend.decision import (
    Session, coset_membership, monoid_membership, torsion_probe, word_problem)
from pregarside.frontend.preset import PRESETS, load_preset
from pregarside.oracle import oracle_closure, oracle_equal
