"""Parabolic submonoids.

A subset X of atoms generates a parabolic submonoid exactly when the
complements of pairs inside X stay over X, and for x in X, y outside X with
an edge, neither ``f_L(x, y)`` nor ``f_R(y, x)`` is written over X alone.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from pregarside.errors import IntersectionNotParabolic, NotParabolic, UnknownAtom
from pregarside.garside.catalog import LeafCatalog
from pregarside.garside.structure import GarsideStructure
from pregarside.presentation import ComplementPair, PresentationSpec
from pregarside.word import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParabolicHandle:
    atom_subset: Word
    spherical: bool = False
    delta_N: Word = None

    def __post_init__(self):
        assert self.spherical == (self.delta_N is not None)

    @property
    def atoms(self) -> frozenset:
        return frozenset(self.atom_subset)

    def contains(self, word: Iterable[str]) -> bool:
        return frozenset(word) <= self.atoms

    def __str__(self) -> str:
        return '<' + ', '.join(self.atom_subset) + '>'


def is_parabolic(subset: Iterable[str], cp: ComplementPair) -> bool:
    inside = frozenset(subset)
    unknown = inside - frozenset(cp.atoms)
    if unknown:
        raise UnknownAtom(f'unknown atoms: {", ".join(sorted(unknown))}')

    def over(word):
        return frozenset(word) <= inside

    for (x, y), u in cp.f_left.items():
        if x in inside and y in inside and not over(u):
            return False
        if x in inside and y not in inside and over(u):
            return False
    for (x, y), u in cp.f_right.items():
        if x in inside and y in inside and not over(u):
            return False
        # key (y, x) with x inside and y outside
        if x not in inside and y in inside and over(u):
            return False
    return True


def is_spherical_candidate(subset: Iterable[str], cp: ComplementPair) -> bool:
    """Parabolic with a complete induced graph, the shape of every spherical parabolic."""
    subset = tuple(subset)
    return cp.is_complete(subset) and is_parabolic(subset, cp)


def make_parabolic(subset: Iterable[str], spec: PresentationSpec, cp: ComplementPair,
                   catalog: LeafCatalog) -> ParabolicHandle:
    atoms = spec.order(subset)
    if not is_parabolic(atoms, cp):
        raise NotParabolic(f'{{{", ".join(atoms)}}} does not generate a parabolic submonoid')
    if not cp.is_complete(atoms):
        return ParabolicHandle(atoms)
    return ParabolicHandle(atoms, True, catalog.structure(atoms).delta)


def enumerate_spherical_parabolics(spec: PresentationSpec, cp: ComplementPair,
                                   catalog: LeafCatalog = None) -> list[ParabolicHandle]:
    if catalog is None:
        catalog = LeafCatalog(spec)
    handles = []
    for size in range(len(spec.atoms) + 1):
        for subset in combinations(spec.atoms, size):
            if not is_spherical_candidate(subset, cp):
                continue
            handles.append(ParabolicHandle(subset, True, catalog.structure(subset).delta))
    logger.info('%d spherical parabolic submonoids', len(handles))
    return handles


def spherical_simples(handles: Iterable[ParabolicHandle], catalog: LeafCatalog) -> list[Word]:
    """Union of the simples of the spherical parabolics, sorted length-lex."""
    simples = set()
    for handle in handles:
        simples.update(catalog.structure(handle.atom_subset).simples)
    return sorted(simples, key=catalog.spec.word_key)


def intersect_parabolics(first: ParabolicHandle, second: ParabolicHandle,
                         cp: ComplementPair, catalog: LeafCatalog) -> ParabolicHandle:
    atoms = tuple(atom for atom in first.atom_subset if atom in second.atoms)
    if not is_parabolic(atoms, cp):
        raise IntersectionNotParabolic(
            f'{first} and {second} intersect in a non-parabolic submonoid')
    if first.spherical or second.spherical:
        return ParabolicHandle(atoms, True, catalog.structure(atoms).delta)
    return ParabolicHandle(atoms)


def parabolic_delta(handle: ParabolicHandle, gs: GarsideStructure) -> tuple:
    """Left join of the simples of ``gs`` written over the handle's atoms."""
    members = [i for i, word in enumerate(gs.simples) if handle.contains(word)]
    delta = ()
    right = ()
    for i in members:
        delta = gs.lcm_left(delta, (i,))
        right = gs.lcm_right(right, (i,))

    top = delta[0] if delta else gs.identity
    divisors = {i for i in range(len(gs.simples)) if gs.left_divides[i, top]}
    if divisors != set(members) or right != delta:
        raise NotParabolic(f'{handle} has no Garside element inside {{{", ".join(gs.atoms)}}}')
    return delta


def strip_right_parabolic(g: tuple, handle: ParabolicHandle,
                          gs: GarsideStructure) -> tuple[tuple, tuple]:
    """Split ``g = g' h`` with ``h`` the greatest right divisor of ``g`` in N."""
    delta = parabolic_delta(handle, gs)
    k = len(gs.word(g))
    h = gs.gcd_right(g, gs.power(delta, k))
    return gs.right_quotient(g, h), h
