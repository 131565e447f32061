import logging
from typing import Iterable

from pregarside.garside.structure import GarsideStructure, find_minimal_garside
from pregarside.oracle import DEFAULT_BUDGET, RewritingOracle
from pregarside.presentation import PresentationSpec

logger = logging.getLogger(__name__)


class LeafCatalog:
    """Garside structures of atom subsets, each discovered at most once."""
    def __init__(self, spec: PresentationSpec, max_word_length: int = None,
                 budget: int = DEFAULT_BUDGET):
        self.spec = spec
        self.max_word_length = max_word_length
        self.budget = budget
        self._structures = {}

    @classmethod
    def from_config(cls, spec: PresentationSpec, cfg):
        return cls(spec, max_word_length=cfg.garside.max_word_length or None,
                   budget=cfg.oracle.budget)

    def structure(self, subset: Iterable[str]) -> GarsideStructure:
        atoms = self.spec.order(subset)
        key = frozenset(atoms)
        if key not in self._structures:
            restricted = self.spec.restrict(atoms)
            logger.debug('discovering the Garside element of {%s}', ', '.join(atoms))
            self._structures[key] = find_minimal_garside(
                restricted, self.max_word_length,
                RewritingOracle(restricted, self.budget))
        return self._structures[key]

    def __len__(self) -> int:
        return len(self._structures)
