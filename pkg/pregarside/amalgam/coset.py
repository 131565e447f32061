"""Minimal coset representatives m_{T,P} over an FC tree.

The map is built bottom-up. At an inner node it is applied to the last
normal-form factor together with the tail inside that factor's side. The
prefix is kept unless the result falls back into G(N), in which case the
shortened element is processed again.
"""
from typing import Iterable

from pregarside.amalgam.normal_form import GroupAmalgamNF, push_group
from pregarside.word import Letter


def m_T_P(g, subset: Iterable[str], node):
    if node.is_leaf:
        return node.coset_rep(g, subset)
    subset = frozenset(subset) & node.atom_set
    shared = node.shared

    while True:
        if not g.factors:
            return GroupAmalgamNF((), shared.coset_rep(g.tail, subset & shared.atom_set))
        side, last = g.factors[-1]
        child = node.side(side)
        y = child.group_mul(last, node.lift_group(g.tail, side))
        x = child.coset_rep(y, subset & child.atom_set)
        prefix = GroupAmalgamNF(g.factors[:-1], shared.group_identity)
        result = push_group(node, prefix, side, x)
        if len(g.factors) == 1 or not child.in_subgroup(x, shared.atoms):
            return result
        g = result


def canonical_word(g, node) -> tuple[Letter, ...]:
    """Word over simples of a normal form whose factors are transversal elements.

    Factors are spelled by their children's canonical words relative to N and
    the tail by the N-subtree's canonical word.
    """
    letters = []
    for side, factor in g.factors:
        letters.extend(node.side(side).coset_word(factor, node.shared.atoms))
    letters.extend(node.shared.coset_word(g.tail, ()))
    return tuple(letters)
