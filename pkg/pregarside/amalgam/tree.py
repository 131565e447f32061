"""FC trees: Garside leaves glued by amalgamated products.

A node over atoms X whose induced graph is complete is a leaf. Otherwise X
is split into X1, X2 with X1 u X2 = X such that no edge joins X1 - X2 to
X2 - X1, complements of edges inside each side stay over that side, and
both sides are parabolic; the node is then M(X1) *_{M(X1 n X2)} M(X2).
"""
import logging
from itertools import product as cartesian
from typing import Iterable

from pregarside.amalgam.coset import canonical_word, m_T_P
from pregarside.amalgam.node import FcNode, GarsideLeaf
from pregarside.amalgam.normal_form import (
    AmalgamNF, GroupAmalgamNF, amalgam_mul, amalgam_nf, group_amalgam_mul,
    group_amalgam_nf, push_monoid)
from pregarside.amalgam.reduction import m_star_T_P
from pregarside.errors import NoValidSplit
from pregarside.garside.catalog import LeafCatalog
from pregarside.parabolic import is_parabolic
from pregarside.presentation import ComplementPair, PresentationSpec, require_valid
from pregarside.word import Letter, Word, format_positive

logger = logging.getLogger(__name__)


class AmalgamNode(FcNode):
    def __init__(self, atoms: Word, left: FcNode, right: FcNode, shared: FcNode):
        super().__init__(atoms)
        self.left = left
        self.right = right
        self.shared = shared

    def __repr__(self) -> str:
        return f'AmalgamNode({self.left!r}, {self.right!r}, over={{{", ".join(self.shared.atoms)}}})'

    @property
    def is_leaf(self) -> bool:
        return False

    @property
    def depth(self) -> int:
        return 1 + max(self.left.depth, self.right.depth)

    def side(self, side: int) -> FcNode:
        assert side in (1, 2)
        return self.left if side == 1 else self.right

    def lift(self, h, side: int):
        """An element of the N-subtree as an element of one side."""
        return self.side(side).monoid_nf(self.shared.monoid_word(h))

    def lift_group(self, h, side: int):
        return self.side(side).group_nf(self.shared.group_letters(h))

    # monoid

    @property
    def monoid_identity(self) -> AmalgamNF:
        return AmalgamNF((), self.shared.monoid_identity)

    def monoid_nf(self, word: Word) -> AmalgamNF:
        return amalgam_nf(word, self)

    def monoid_word(self, element: AmalgamNF) -> Word:
        word = ()
        for side, factor in element.factors:
            word += self.side(side).monoid_word(factor)
        return word + self.shared.monoid_word(element.tail)

    def monoid_mul(self, a: AmalgamNF, b: AmalgamNF) -> AmalgamNF:
        return amalgam_mul(a, b, self)

    def divide_right_atom(self, element: AmalgamNF, atom: str):
        if not element.factors:
            tail = self.shared.divide_right_atom(element.tail, atom)
            return None if tail is None else AmalgamNF((), tail)
        side, last = element.factors[-1]
        child = self.side(side)
        if atom not in child.atom_set:
            return None
        quotient = child.divide_right_atom(
            child.monoid_mul(last, self.lift(element.tail, side)), atom)
        if quotient is None:
            return None
        prefix = AmalgamNF(element.factors[:-1], self.shared.monoid_identity)
        return push_monoid(self, prefix, side, quotient)

    def format_monoid(self, element: AmalgamNF) -> str:
        factors = ' | '.join(f'{side}:{self.side(side).format_monoid(factor)}'
                             for side, factor in element.factors)
        return f'({factors} ; {self.shared.format_monoid(element.tail)})'

    # group of fractions

    @property
    def group_identity(self) -> GroupAmalgamNF:
        return GroupAmalgamNF((), self.shared.group_identity)

    def group_nf(self, letters: Iterable[Letter]) -> GroupAmalgamNF:
        return group_amalgam_nf(letters, self)

    def group_letters(self, g: GroupAmalgamNF) -> tuple[Letter, ...]:
        letters = ()
        for side, factor in g.factors:
            letters += self.side(side).group_letters(factor)
        return letters + self.shared.group_letters(g.tail)

    def group_mul(self, g: GroupAmalgamNF, h: GroupAmalgamNF) -> GroupAmalgamNF:
        return group_amalgam_mul(g, h, self)

    def coset_rep(self, g: GroupAmalgamNF, subset: Iterable[str]) -> GroupAmalgamNF:
        return m_T_P(g, subset, self)

    def coset_word(self, g: GroupAmalgamNF, subset: Iterable[str]) -> tuple[Letter, ...]:
        return canonical_word(self.coset_rep(g, subset), self)

    def _m_star(self, letters: tuple, subset: frozenset) -> tuple[Letter, ...]:
        return m_star_T_P(letters, subset, self)

    def format_group(self, g: GroupAmalgamNF) -> str:
        factors = ' | '.join(f'{side}:{self.side(side).format_group(factor)}'
                             for side, factor in g.factors)
        return f'({factors} ; {self.shared.format_group(g.tail)})'


def _positions(atoms: Word, order: dict) -> tuple:
    return tuple(sorted(order[atom] for atom in atoms))


def is_admissible_split(first: Word, second: Word, cp: ComplementPair) -> bool:
    only_first = frozenset(first) - frozenset(second)
    only_second = frozenset(second) - frozenset(first)
    if any(cp.has_edge(x, y) for x in only_first for y in only_second):
        return False
    for side in (frozenset(first), frozenset(second)):
        for table in (cp.f_left, cp.f_right):
            for (x, y), u in table.items():
                if x in side and y in side and not frozenset(u) <= side:
                    return False
    return is_parabolic(first, cp) and is_parabolic(second, cp)


def find_split(atoms: Word, cp: ComplementPair) -> tuple[Word, Word]:
    """The admissible split with the smallest intersection, ties broken by atom positions."""
    sub = cp.restrict(atoms)
    order = {atom: i for i, atom in enumerate(cp.atoms)}
    best = None
    for assignment in cartesian((1, 2, 3), repeat=len(atoms)):
        first = tuple(a for a, t in zip(atoms, assignment) if t != 2)
        second = tuple(a for a, t in zip(atoms, assignment) if t != 1)
        if not first or not second or len(first) == len(atoms) or len(second) == len(atoms):
            continue
        key = (len(first) + len(second) - len(atoms),
               _positions(first, order), _positions(second, order))
        if best is not None and key >= best[0]:
            continue
        if is_admissible_split(first, second, sub):
            best = (key, first, second)
    if best is None:
        raise NoValidSplit(f'no admissible split of {{{", ".join(atoms)}}}')
    logger.debug('split {%s} into {%s} and {%s}', ', '.join(atoms),
                 ', '.join(best[1]), ', '.join(best[2]))
    return best[1], best[2]


class FcTreeBuilder:
    """Builds FC trees over one presentation, sharing leaves between subtrees."""
    def __init__(self, spec: PresentationSpec, cp: ComplementPair, catalog: LeafCatalog = None):
        self.spec = spec
        self.cp = cp
        self.catalog = catalog if catalog is not None else LeafCatalog(spec)
        self._leaves = {}

    def leaf(self, atoms: Iterable[str]) -> GarsideLeaf:
        key = frozenset(atoms)
        if key not in self._leaves:
            self._leaves[key] = GarsideLeaf(self.catalog.structure(key))
        return self._leaves[key]

    def build(self, atoms: Iterable[str] = None) -> FcNode:
        atoms = self.spec.atoms if atoms is None else self.spec.order(atoms)
        if self.cp.is_complete(atoms):
            return self.leaf(atoms)
        first, second = find_split(atoms, self.cp)
        logger.info('{%s} = {%s} *_{%s} {%s}', ', '.join(atoms), ', '.join(first),
                    ', '.join(a for a in first if a in second), ', '.join(second))
        left = self.build(first)
        right = self.build(second)
        return AmalgamNode(atoms, left, right, self.restrict(left, right.atom_set))

    def restrict(self, node: FcNode, subset: Iterable[str]) -> FcNode:
        """FC tree of the parabolic submonoid generated by ``subset`` inside ``node``."""
        subset = frozenset(subset) & node.atom_set
        if node.is_leaf:
            return self.leaf(subset)
        first = node.left.atom_set & subset
        second = node.right.atom_set & subset
        if first <= second:
            return self.restrict(node.right, subset)
        if second <= first:
            return self.restrict(node.left, subset)
        left = self.restrict(node.left, subset)
        right = self.restrict(node.right, subset)
        return AmalgamNode(self.spec.order(subset), left, right,
                           self.restrict(left, right.atom_set))


def build_fc_tree(spec: PresentationSpec, cp: ComplementPair,
                  catalog: LeafCatalog = None) -> FcNode:
    require_valid(spec, cp)
    return FcTreeBuilder(spec, cp, catalog).build()


def restrict_tree(node: FcNode, subset: Iterable[str], builder: FcTreeBuilder) -> FcNode:
    return builder.restrict(node, subset)


def format_tree(node: FcNode, indent: int = 0) -> str:
    pad = '  ' * indent
    atoms = ', '.join(node.atoms)
    if node.is_leaf:
        gs = node.gs
        return f'{pad}leaf {{{atoms}}} delta {format_positive(gs.delta)} ({len(gs.simples)} simples)'
    lines = [f'{pad}amalgam {{{atoms}}} over {{{", ".join(node.shared.atoms)}}}',
             format_tree(node.left, indent + 1),
             format_tree(node.right, indent + 1)]
    return '\n'.join(lines)
