"""Brute-force word equality by exhaustive rewriting.

Positive relations preserve nothing but the monoid element, so the set of
words reachable from ``w`` by replacing a factor equal to one side of a
relation with the other side is exactly the set of words spelling ``w``.
"""
import logging
from collections import deque

from cachetools import LRUCache

from pregarside.errors import ClosureBudgetExceeded
from pregarside.presentation import PresentationSpec
from pregarside.word import Word

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 1000000
DEFAULT_CACHE_SIZE = 200000


class RewritingOracle:
    def __init__(self, spec: PresentationSpec, budget: int = DEFAULT_BUDGET,
                 cache_size: int = DEFAULT_CACHE_SIZE):
        self.spec = spec
        self.budget = budget
        self.rules = []
        for rel in spec.relations:
            self.rules.append((rel.lhs, rel.rhs))
            self.rules.append((rel.rhs, rel.lhs))
        # least recently used words are forgotten past cache_size entries
        self._closures = LRUCache(maxsize=cache_size)
        self._canonical = LRUCache(maxsize=cache_size)

    @classmethod
    def from_config(cls, spec: PresentationSpec, cfg):
        return cls(spec, budget=cfg.oracle.budget, cache_size=cfg.oracle.cache_size)

    def _neighbours(self, word: Word):
        for lhs, rhs in self.rules:
            width = len(lhs)
            for start in range(len(word) - width + 1):
                if word[start:start + width] == lhs:
                    yield word[:start] + rhs + word[start + width:]

    def closure(self, word: Word) -> frozenset:
        word = tuple(word)
        if word in self._closures:
            return self._closures[word]

        seen = {word}
        queue = deque([word])
        while queue:
            for neighbour in self._neighbours(queue.popleft()):
                if neighbour in seen:
                    continue
                seen.add(neighbour)
                if len(seen) > self.budget:
                    raise ClosureBudgetExceeded(self.budget)
                queue.append(neighbour)

        closure = frozenset(seen)
        for member in closure:
            self._closures[member] = closure
        logger.debug('closure of %s has %d words', ' '.join(word), len(closure))
        return closure

    def canonical(self, word: Word) -> Word:
        """Length-lexicographically least word of the closure."""
        word = tuple(word)
        if word in self._canonical:
            return self._canonical[word]
        closure = self.closure(word)
        best = min(closure, key=self.spec.word_key)
        for member in closure:
            self._canonical[member] = best
        return best

    def equal(self, w1: Word, w2: Word) -> bool:
        return tuple(w2) in self.closure(w1)


def oracle_closure(word: Word, spec: PresentationSpec,
                   budget: int = DEFAULT_BUDGET) -> frozenset:
    return RewritingOracle(spec, budget).closure(word)


def oracle_equal(w1: Word, w2: Word, spec: PresentationSpec,
                 budget: int = DEFAULT_BUDGET) -> bool:
    return RewritingOracle(spec, budget).equal(w1, w2)
