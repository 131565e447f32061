"""Nodes of an FC tree.

Every node computes in its own monoid and in that monoid's group of
fractions. Elements are opaque values owned by the node: greedy normal forms
and fractions at a leaf, amalgam normal forms at an inner node. Elements
travel between nodes as words.
"""
from abc import ABC, abstractmethod
from functools import cached_property
from typing import Iterable

from cachetools import LRUCache

from pregarside.coset import CosetContext, m_N, m_N_star
from pregarside.garside import group as fractions
from pregarside.garside.structure import GarsideStructure
from pregarside.parabolic import strip_right_parabolic
from pregarside.word import Letter, Word, format_word, inverse, support

# coset words remembered per node
STAR_CACHE_SIZE = 4096


class FcNode(ABC):
    def __init__(self, atoms: Word):
        self.atoms = tuple(atoms)
        self._star_cache = LRUCache(maxsize=STAR_CACHE_SIZE)

    @cached_property
    def atom_set(self) -> frozenset:
        return frozenset(self.atoms)

    @property
    @abstractmethod
    def is_leaf(self) -> bool:
        pass

    @property
    @abstractmethod
    def depth(self) -> int:
        pass

    # monoid

    @property
    @abstractmethod
    def monoid_identity(self):
        pass

    @abstractmethod
    def monoid_nf(self, word: Word):
        pass

    @abstractmethod
    def monoid_word(self, element) -> Word:
        pass

    @abstractmethod
    def monoid_mul(self, a, b):
        pass

    @abstractmethod
    def divide_right_atom(self, element, atom: str):
        """``element atom^-1`` when ``atom`` right-divides ``element``, else None."""

    @abstractmethod
    def format_monoid(self, element) -> str:
        pass

    def strip_right(self, element, subset: Iterable[str]) -> tuple:
        """Split ``element = g' h`` with ``h`` its greatest right divisor over ``subset``."""
        peel = [atom for atom in self.atoms if atom in frozenset(subset)]
        stripped = []
        progress = True
        while progress:
            progress = False
            for atom in peel:
                quotient = self.divide_right_atom(element, atom)
                if quotient is not None:
                    element = quotient
                    stripped.append(atom)
                    progress = True
                    break
        return element, self.monoid_nf(tuple(reversed(stripped)))

    # group of fractions

    @property
    @abstractmethod
    def group_identity(self):
        pass

    @abstractmethod
    def group_nf(self, letters: Iterable[Letter]):
        pass

    @abstractmethod
    def group_letters(self, g) -> tuple[Letter, ...]:
        """Signed atom word spelling ``g``."""

    @abstractmethod
    def group_mul(self, g, h):
        pass

    def group_inverse(self, g):
        return self.group_nf(inverse(self.group_letters(g)))

    @abstractmethod
    def coset_rep(self, g, subset: Iterable[str]):
        """Minimal representative of ``g G(P)`` for the parabolic P over ``subset``."""

    @abstractmethod
    def coset_word(self, g, subset: Iterable[str]) -> tuple[Letter, ...]:
        """Canonical word over simples of ``coset_rep(g, subset)``."""

    @abstractmethod
    def _m_star(self, letters: tuple, subset: frozenset) -> tuple[Letter, ...]:
        pass

    def m_star(self, letters: Iterable[Letter], subset: Iterable[str]) -> tuple[Letter, ...]:
        """Word over simples for the minimal representative of ``w G(P)``, read off ``w``."""
        key = (tuple(letters), frozenset(subset) & self.atom_set)
        if key in self._star_cache:
            return self._star_cache[key]
        word = self._star_cache[key] = self._m_star(*key)
        return word

    def format_group(self, g) -> str:
        return format_word(self.coset_word(g, ()))

    def in_subgroup(self, g, subset: Iterable[str]) -> bool:
        return support(self.group_letters(g)) <= frozenset(subset)


class GarsideLeaf(FcNode):
    def __init__(self, gs: GarsideStructure):
        super().__init__(gs.atoms)
        self.gs = gs
        # one context per subset of the leaf atoms
        self._contexts = {}

    def __repr__(self) -> str:
        return f'GarsideLeaf({{{", ".join(self.atoms)}}})'

    @property
    def is_leaf(self) -> bool:
        return True

    @property
    def depth(self) -> int:
        return 0

    def context(self, subset: Iterable[str]) -> CosetContext:
        key = frozenset(subset) & self.atom_set
        if key not in self._contexts:
            self._contexts[key] = CosetContext.from_subset(self.gs, key)
        return self._contexts[key]

    @property
    def monoid_identity(self) -> tuple:
        return ()

    def monoid_nf(self, word: Word) -> tuple:
        return self.gs.element(word)

    def monoid_word(self, element: tuple) -> Word:
        return self.gs.word(element)

    def monoid_mul(self, a: tuple, b: tuple) -> tuple:
        return self.gs.multiply(a, b)

    def divide_right_atom(self, element: tuple, atom: str):
        if atom not in self.atom_set:
            return None
        x = (self.gs.atom_index(atom),)
        if not self.gs.right_divides_element(x, element):
            return None
        return self.gs.right_quotient(element, x)

    def strip_right(self, element: tuple, subset: Iterable[str]) -> tuple:
        return strip_right_parabolic(element, self.context(subset).N, self.gs)

    def format_monoid(self, element: tuple) -> str:
        return format_word(Letter(word) for word in self.gs.greedy_words(element))

    @property
    def group_identity(self) -> fractions.GroupElement:
        return fractions.IDENTITY

    def group_nf(self, letters: Iterable[Letter]) -> fractions.GroupElement:
        return fractions.group_nf(letters, self.gs)

    def group_letters(self, g: fractions.GroupElement) -> tuple[Letter, ...]:
        return fractions.atom_letters(g, self.gs)

    def group_mul(self, g, h) -> fractions.GroupElement:
        return fractions.multiply(g, h, self.gs)

    def group_inverse(self, g) -> fractions.GroupElement:
        return fractions.invert(g, self.gs)

    def coset_rep(self, g, subset: Iterable[str]) -> fractions.GroupElement:
        return m_N(g, self.context(subset))

    def coset_word(self, g, subset: Iterable[str]) -> tuple[Letter, ...]:
        return fractions.simple_letters(self.coset_rep(g, subset), self.gs)

    def _m_star(self, letters: tuple, subset: frozenset) -> tuple[Letter, ...]:
        return m_N_star(letters, self.context(subset))

