"""Minimal representatives of left cosets g G(N) inside a leaf.

Here N is a parabolic submonoid of a Garside leaf, so it is spherical with
Garside element ``delta_N``. For ``g = a b^-1`` the representative is
``phi_g(delta_N^k)`` for any ``k`` at least the simple length of ``g``.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable

from cachetools import LRUCache

from pregarside.garside.group import (
    GroupElement, group_nf, reduce_fraction, simple_length, simple_letters)
from pregarside.garside.structure import GarsideStructure
from pregarside.parabolic import ParabolicHandle, parabolic_delta
from pregarside.word import Letter

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class CosetContext:
    gs: GarsideStructure
    N: ParabolicHandle
    delta_N: tuple = None
    _powers: LRUCache = field(default_factory=lambda: LRUCache(maxsize=32), repr=False)

    def __post_init__(self):
        if self.delta_N is None:
            self.delta_N = parabolic_delta(self.N, self.gs)

    @classmethod
    def from_subset(cls, gs: GarsideStructure, subset: Iterable[str]) -> 'CosetContext':
        subset = frozenset(subset)
        atoms = tuple(atom for atom in gs.atoms if atom in subset)
        delta = parabolic_delta(ParabolicHandle(atoms, True, ()), gs)
        return cls(gs, ParabolicHandle(atoms, True, gs.word(delta)), delta)

    def power(self, k: int) -> tuple:
        if k not in self._powers:
            self._powers[k] = self.gs.power(self.delta_N, k)
        return self._powers[k]

    def contains(self, element: tuple) -> bool:
        return self.N.contains(self.gs.word(element))

    def divisors_of_power(self, k: int) -> list:
        """Left divisors of ``delta_N^k``, all of which lie in N."""
        gs = self.gs
        top = self.power(k)
        atoms = [(gs.atom_index(atom),) for atom in self.N.atom_subset]
        seen = {()}
        frontier = [()]
        while frontier:
            grown = []
            for e in frontier:
                for x in atoms:
                    f = gs.multiply(e, x)
                    if f not in seen and gs.left_divides_element(f, top):
                        seen.add(f)
                        grown.append(f)
            frontier = grown
        return sorted(seen, key=lambda e: (len(gs.word(e)), e))


def strip_left_parabolic(g: tuple, context: CosetContext) -> tuple:
    """``(g ^_L delta_N^|g|)^-1 g``: ``g`` with its greatest left divisor in N removed."""
    if not g:
        return g
    gs = context.gs
    return gs.left_quotient(gs.gcd_left(g, context.power(len(g))), g)


def phi(g: GroupElement, h: tuple, context: CosetContext) -> GroupElement:
    gs = context.gs
    hb = gs.multiply(h, g.denominator)
    e = gs.gcd_right(g.numerator, hb)
    c = gs.right_quotient(g.numerator, e)
    d = strip_left_parabolic(gs.right_quotient(hb, e), context)
    return reduce_fraction(c, d, gs)


def m_N(g: GroupElement, context: CosetContext) -> GroupElement:
    k = simple_length(g)
    representative = phi(g, context.power(k), context)
    logger.debug('m_N over {%s} at delta_N^%d: %d simples', ', '.join(context.N.atom_subset),
                 k, simple_length(representative))
    return representative


def leq_N(first: GroupElement, second: GroupElement, context: CosetContext,
          bound: int = None) -> bool:
    """Whether ``first <=_N second``: the numerators satisfy ``a2 = a1 a`` and some
    ``h1, h2`` in N give ``h2 b2 = h1 b1 a`` with ``h2 ^ h1 = h2 ^ (h1 b1)``.

    ``h1`` ranges over the left divisors of ``delta_N^bound``, by default the
    summed simple lengths of both fractions.
    """
    gs = context.gs
    a1, b1 = first.numerator, first.denominator
    a2, b2 = second.numerator, second.denominator
    if not gs.left_divides_element(a1, a2):
        return False
    a = gs.left_quotient(a1, a2)
    if bound is None:
        bound = simple_length(first) + simple_length(second)
    for h1 in context.divisors_of_power(bound):
        h1b1 = gs.multiply(h1, b1)
        x = gs.multiply(h1b1, a)
        if not gs.right_divides_element(b2, x):
            continue
        h2 = gs.right_quotient(x, b2)
        if not context.contains(h2):
            continue
        if gs.gcd_left(h2, h1) == gs.gcd_left(h2, h1b1):
            return True
    return False


def m_N_star(letters: Iterable[Letter], context: CosetContext) -> tuple[Letter, ...]:
    """Word over simples spelling the minimal representative of the coset of the input."""
    gs = context.gs
    representative = m_N(group_nf(letters, gs), context)
    return simple_letters(representative, gs)
