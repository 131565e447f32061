"""Word-level coset representatives by rewriting pre-expressions.

A pre-expression over ``M1 *_N M2`` is a list of side-tagged blocks
``u_1 ... u_l`` followed by a tail ``v`` over N. Five local rewrites are
applied, always the first applicable type at its leftmost position:

    I    merge two adjacent blocks of the same side
    II   a block lying in G(N) moves into the next block, or into the tail
    III  a block is replaced by its canonical transversal word and the
         N-part it leaves over moves right
    IV   the tail is replaced by its canonical word in the N-subtree
         (relative to P n N once no block is left)
    V    the last block and the tail are replaced by the canonical word of
         their coset modulo the side's part of P

Children are queried through their own ``m_star``, so the same procedure
runs recursively down the tree and bottoms out at the Garside leaves.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable

from pregarside.errors import InvalidWord
from pregarside.word import Letter, expand, inverse, support

logger = logging.getLogger(__name__)


@dataclass
class PreExpression:
    blocks: list = field(default_factory=list)
    sides: list = field(default_factory=list)
    tail: tuple = ()

    @classmethod
    def from_letters(cls, letters: Iterable[Letter], node) -> 'PreExpression':
        expression = cls()
        for letter in letters:
            letter_support = support((letter,))
            if letter_support <= node.left.atom_set:
                side = 1
            elif letter_support <= node.right.atom_set:
                side = 2
            else:
                raise InvalidWord(f'{letter} is not a simple of either side')
            expression.blocks.append((letter,))
            expression.sides.append(side)
        return expression

    def word(self) -> tuple[Letter, ...]:
        return sum(self.blocks, ()) + tuple(self.tail)

    def push_right(self, i: int, letters: tuple):
        """Prepend ``letters`` to the block after position ``i``, or to the tail."""
        if i + 1 < len(self.blocks):
            self.blocks[i + 1] = letters + self.blocks[i + 1]
        else:
            self.tail = letters + tuple(self.tail)


def _merge_sides(expression: PreExpression, node) -> bool:
    for i in range(len(expression.sides) - 1):
        if expression.sides[i] == expression.sides[i + 1]:
            expression.blocks[i:i + 2] = [expression.blocks[i] + expression.blocks[i + 1]]
            del expression.sides[i + 1]
            return True
    return False


def _drop_shared_block(expression: PreExpression, node) -> bool:
    shared = node.shared.atoms
    for i, (block, side) in enumerate(zip(expression.blocks, expression.sides)):
        child = node.side(side)
        if child.m_star(block, shared):
            continue
        moved = expand(child.m_star(block, ()))
        del expression.blocks[i]
        del expression.sides[i]
        expression.push_right(i - 1, moved)
        return True
    return False


def _canonical_block(expression: PreExpression, node) -> bool:
    shared = node.shared.atoms
    for i, (block, side) in enumerate(zip(expression.blocks, expression.sides)):
        child = node.side(side)
        transversal = child.m_star(block, shared)
        if not transversal or transversal == block:
            continue
        remainder = child.m_star(inverse(transversal) + block, ())
        expression.blocks[i] = transversal
        expression.push_right(i, expand(remainder))
        return True
    return False


def _canonical_tail(expression: PreExpression, node, subset: frozenset) -> bool:
    target = () if expression.blocks else subset & node.shared.atom_set
    tail = node.shared.m_star(expression.tail, target)
    if tail == tuple(expression.tail):
        return False
    expression.tail = tail
    return True


def _absorb_tail(expression: PreExpression, node, subset: frozenset) -> bool:
    if not expression.blocks:
        return False
    child = node.side(expression.sides[-1])
    word = expression.blocks[-1] + tuple(expression.tail)
    representative = child.m_star(word, subset & child.atom_set)
    if child.m_star(representative, ()) == child.m_star(word, ()):
        return False
    expression.blocks[-1] = representative
    expression.tail = ()
    return True


def reduce_pre_expression(expression: PreExpression, node, subset: frozenset) -> PreExpression:
    steps = 0
    while (_merge_sides(expression, node)
           or _drop_shared_block(expression, node)
           or _canonical_block(expression, node)
           or _canonical_tail(expression, node, subset)
           or _absorb_tail(expression, node, subset)):
        steps += 1
    logger.debug('pre-expression reduced in %d steps to %d blocks', steps, len(expression.blocks))
    return expression


def m_star_T_P(letters: Iterable[Letter], subset: Iterable[str], node) -> tuple[Letter, ...]:
    if node.is_leaf:
        return node.m_star(letters, subset)
    subset = frozenset(subset) & node.atom_set
    expression = PreExpression.from_letters(letters, node)
    return reduce_pre_expression(expression, node, subset).word()
