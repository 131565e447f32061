from pregarside.garside.catalog import LeafCatalog
from pregarside.garside.group import (
    GroupElement, group_nf, simple_length, simple_letters)
from pregarside.garside.lattice import SimpleLattice
from pregarside.garside.structure import (
    GarsideStructure, divisors, dump_structure, find_minimal_garside,
    lattice_op, load_structure)


def left_greedy_nf(word, gs: GarsideStructure) -> tuple:
    """Greedy factors of a positive word, each as the canonical word of a simple."""
    return gs.greedy_words(gs.element(word))
