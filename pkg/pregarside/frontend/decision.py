"""Decision procedures read off the canonical coset words of the FC tree."""
import logging
from functools import cached_property
from typing import Iterable

from yacs.config import CfgNode

from pregarside.amalgam.node import FcNode
from pregarside.amalgam.tree import FcTreeBuilder
from pregarside.errors import PreconditionViolated
from pregarside.garside.catalog import LeafCatalog
from pregarside.oracle import RewritingOracle
from pregarside.parabolic import ParabolicHandle, make_parabolic
from pregarside.presentation import (
    PresentationSpec, derive_complements, load_presentation, require_valid,
    validate_atoms)
from pregarside.frontend.preset import load_preset
from pregarside.word import Letter, inverse, is_positive

logger = logging.getLogger(__name__)


def _subset(parabolic) -> frozenset:
    if isinstance(parabolic, ParabolicHandle):
        return parabolic.atoms
    return frozenset(parabolic)


def word_problem(w1: Iterable[Letter], w2: Iterable[Letter], tree: FcNode) -> bool:
    return not tree.m_star(tuple(w1) + inverse(w2), ())


def monoid_membership(w: Iterable[Letter], tree: FcNode) -> bool:
    return is_positive(tree.m_star(tuple(w), ()))


def coset_membership(w: Iterable[Letter], parabolic, tree: FcNode) -> bool:
    """Whether the element of ``w`` lies in G(P)."""
    return not tree.m_star(tuple(w), _subset(parabolic))


def torsion_probe(w: Iterable[Letter], k_max: int, tree: FcNode) -> bool:
    """True when ``w^2 .. w^k_max`` are all nontrivial."""
    w = tuple(w)
    if word_problem(w, (), tree):
        raise PreconditionViolated('the word represents the identity')
    for k in range(2, k_max + 1):
        if word_problem(w * k, (), tree):
            logger.info('power %d of the word is trivial', k)
            return False
    return True


class Session:
    """A presentation with its derived data, built lazily on first use."""
    def __init__(self, spec: PresentationSpec, cfg: CfgNode):
        self.spec = spec
        self.cfg = cfg

    @classmethod
    def from_config(cls, cfg: CfgNode, path: str = None, preset: str = None) -> 'Session':
        assert (path is None) != (preset is None), 'give exactly one of path and preset'
        spec = load_preset(preset) if preset is not None else load_presentation(path)
        return cls(spec, cfg)

    @cached_property
    def cp(self):
        return derive_complements(self.spec)

    @cached_property
    def atom_report(self):
        return validate_atoms(self.spec, self.cp)

    @cached_property
    def oracle(self) -> RewritingOracle:
        return RewritingOracle.from_config(self.spec, self.cfg)

    @cached_property
    def catalog(self) -> LeafCatalog:
        return LeafCatalog.from_config(self.spec, self.cfg)

    @cached_property
    def builder(self) -> FcTreeBuilder:
        require_valid(self.spec, self.cp)
        return FcTreeBuilder(self.spec, self.cp, self.catalog)

    @cached_property
    def tree(self) -> FcNode:
        return self.builder.build()

    def parabolic(self, subset: Iterable[str]) -> ParabolicHandle:
        return make_parabolic(subset, self.spec, self.cp, self.catalog)
