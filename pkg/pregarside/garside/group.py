"""Group of fractions of a leaf.

Every element is ``a b^-1`` with ``a, b`` positive and right coprime; that
pair is unique and is the canonical form used here.
"""
from dataclasses import dataclass
from typing import Iterable

from pregarside.garside.structure import GarsideStructure
from pregarside.word import Letter, expand, letters_of


@dataclass(frozen=True)
class GroupElement:
    numerator: tuple = ()
    denominator: tuple = ()

    @property
    def is_positive(self) -> bool:
        return not self.denominator

    @property
    def is_identity(self) -> bool:
        return not self.numerator and not self.denominator


IDENTITY = GroupElement()


def reduce_fraction(a: tuple, b: tuple, gs: GarsideStructure) -> GroupElement:
    e = gs.gcd_right(a, b)
    if e:
        a = gs.right_quotient(a, e)
        b = gs.right_quotient(b, e)
    return GroupElement(a, b)


def group_nf(letters: Iterable[Letter], gs: GarsideStructure) -> GroupElement:
    a, b = (), ()
    for letter in expand(letters):
        x = (gs.atom_index(letter.simple[0]),)
        if letter.inverse:
            b = gs.multiply(x, b)
        else:
            # b^-1 x = (b\x)(x\b)^-1
            b_over_x, x_over_b = gs.left.complement_elements(b, x)
            a = gs.multiply(a, b_over_x)
            b = x_over_b
    return reduce_fraction(a, b, gs)


def multiply(g: GroupElement, h: GroupElement, gs: GarsideStructure) -> GroupElement:
    # a b^-1 c d^-1 = a (b\c) ((c\b) d)^-1
    b_over_c, c_over_b = gs.left.complement_elements(g.denominator, h.numerator)
    return reduce_fraction(gs.multiply(g.numerator, b_over_c),
                           gs.multiply(h.denominator, c_over_b), gs)


def invert(g: GroupElement, gs: GarsideStructure) -> GroupElement:
    return reduce_fraction(g.denominator, g.numerator, gs)


def simple_length(g: GroupElement) -> int:
    return len(g.numerator) + len(g.denominator)


def atom_letters(g: GroupElement, gs: GarsideStructure) -> tuple[Letter, ...]:
    """Signed atom word ``word(a) word(b)^-1``."""
    return letters_of(gs.word(g.numerator)) + letters_of(gs.word(g.denominator), inverse=True)


def simple_letters(g: GroupElement, gs: GarsideStructure) -> tuple[Letter, ...]:
    """Right greedy factors of the numerator, then the inverted right greedy factors of the denominator.

    For ``a = a_p ... a_1`` and ``b = b_q ... b_1`` this spells
    ``a_p ... a_1 b_1^-1 ... b_q^-1``.
    """
    numerator = tuple(Letter(gs.simples[s]) for s in gs.right_greedy(g.numerator))
    denominator = tuple(Letter(gs.simples[s], True) for s in gs.to_mirror(g.denominator))
    return numerator + denominator
