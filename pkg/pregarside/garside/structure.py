"""Garside structures of leaf monoids.

A leaf is the monoid presented by the relations written over a subset X of
atoms. :func:`find_minimal_garside` first reverses the atoms into a common
right multiple, then walks canonical words in length-lex order until one has
the same left and right divisors and is divisible by every atom. Its
divisors are the simples; everything else is derived from their partial
product table.
"""
import logging
from functools import cached_property

import numpy as np

from pregarside.errors import ConflictingComplement, InvalidWord, SearchExhausted, UnknownAtom
from pregarside.garside.lattice import SimpleLattice
from pregarside.oracle import RewritingOracle
from pregarside.presentation import PresentationSpec, derive_complements
from pregarside.word import Letter, Word, format_positive

logger = logging.getLogger(__name__)


class GarsideStructure:
    """Simples of a leaf together with their divisibility tables.

    Args:
        atoms: atoms of the leaf, in declaration order.
        simples: canonical words of the simples sorted length-lex, identity first.
        product: partial product table, -1 where the product is not simple.
        atom_length: longest word length of each simple.
        delta_index: index of the Garside element.
    """
    def __init__(self, atoms: Word, simples: tuple, product: np.ndarray,
                 atom_length: tuple, delta_index: int):
        assert simples[0] == ()
        self.atoms = tuple(atoms)
        self.simples = tuple(tuple(s) for s in simples)
        self.product_partial = np.asarray(product, dtype=np.int64)
        self.atom_length = tuple(atom_length)
        self.delta_index = delta_index
        self.identity = 0

    def __repr__(self) -> str:
        return (f'GarsideStructure(atoms={self.atoms}, '
                f'delta={format_positive(self.delta)}, simples={len(self.simples)})')

    @property
    def delta(self) -> Word:
        return self.simples[self.delta_index]

    @cached_property
    def index(self) -> dict:
        return {word: i for i, word in enumerate(self.simples)}

    @cached_property
    def left(self) -> SimpleLattice:
        return SimpleLattice(self.product_partial, self.identity, self.delta_index)

    @cached_property
    def right(self) -> SimpleLattice:
        return self.left.mirror()

    @property
    def left_divides(self) -> np.ndarray:
        return self.left.divides

    @property
    def right_divides(self) -> np.ndarray:
        return self.right.divides

    # elements: tuples of simple indices in left greedy normal form

    def atom_index(self, atom: str) -> int:
        try:
            return self.index[(atom,)]
        except KeyError:
            raise UnknownAtom(f'atom {atom!r} is not in the leaf {{{", ".join(self.atoms)}}}')

    def element(self, word: Word) -> tuple:
        return self.left.normalize(self.atom_index(atom) for atom in word)

    def simple_of(self, letter: Letter) -> int:
        """Index of the simple a letter names; the letter must spell a simple."""
        nf = self.element(letter.simple)
        if len(nf) > 1:
            raise InvalidWord(f'{letter} is not a simple element of the leaf')
        return nf[0] if nf else self.identity

    def word(self, nf: tuple) -> Word:
        return tuple(atom for s in nf for atom in self.simples[s])

    def greedy_words(self, nf: tuple) -> tuple:
        return tuple(self.simples[s] for s in nf)

    @property
    def delta_element(self) -> tuple:
        return self.left.normalize((self.delta_index,))

    def multiply(self, a: tuple, b: tuple) -> tuple:
        return self.left.multiply(a, b)

    def power(self, a: tuple, k: int) -> tuple:
        return self.left.power(a, k)

    def gcd_left(self, a: tuple, b: tuple) -> tuple:
        return self.left.meet_elements(a, b)

    def lcm_left(self, a: tuple, b: tuple) -> tuple:
        return self.left.join_elements(a, b)

    def left_divides_element(self, a: tuple, b: tuple) -> bool:
        return self.left.divides_element(a, b)

    def left_quotient(self, a: tuple, b: tuple) -> tuple:
        return self.left.left_quotient(a, b)

    def to_mirror(self, a: tuple) -> tuple:
        """Greedy form of ``a`` in the opposite monoid: the right greedy factors, last first."""
        return self.right.normalize(reversed(a))

    def from_mirror(self, x: tuple) -> tuple:
        return self.left.normalize(reversed(x))

    def gcd_right(self, a: tuple, b: tuple) -> tuple:
        return self.from_mirror(self.right.meet_elements(self.to_mirror(a), self.to_mirror(b)))

    def lcm_right(self, a: tuple, b: tuple) -> tuple:
        return self.from_mirror(self.right.join_elements(self.to_mirror(a), self.to_mirror(b)))

    def right_divides_element(self, e: tuple, a: tuple) -> bool:
        return self.right.divides_element(self.to_mirror(e), self.to_mirror(a))

    def right_quotient(self, a: tuple, e: tuple) -> tuple:
        """``a e^-1`` for ``e`` right-dividing ``a``."""
        return self.from_mirror(self.right.left_quotient(self.to_mirror(e), self.to_mirror(a)))

    def right_greedy(self, a: tuple) -> tuple:
        """Right greedy factors ``a_p ... a_1`` of ``a``, leftmost first."""
        return tuple(reversed(self.to_mirror(a)))


def divisors(word: Word, oracle: RewritingOracle) -> tuple[frozenset, frozenset, frozenset]:
    """Left divisors, right divisors and factors of ``word`` as canonical words."""
    closure = oracle.closure(word)
    left, right, factors = set(), set(), set()
    for member in closure:
        n = len(member)
        for i in range(n + 1):
            left.add(oracle.canonical(member[:i]))
            right.add(oracle.canonical(member[i:]))
            for j in range(i, n + 1):
                factors.add(oracle.canonical(member[i:j]))
    return frozenset(left), frozenset(right), frozenset(factors)


def _end_divisors(word: Word, oracle: RewritingOracle) -> tuple[frozenset, frozenset]:
    closure = oracle.closure(word)
    left = frozenset(oracle.canonical(m[:i]) for m in closure for i in range(len(m) + 1))
    right = frozenset(oracle.canonical(m[i:]) for m in closure for i in range(len(m) + 1))
    return left, right


def _reverse(negative: Word, positive: Word, f_left: dict, limit: int):
    """Right reversing of ``negative^-1 positive`` into ``v u^-1``.

    Returns ``(v, u)`` with ``negative v = positive u``, or None when two
    letters meet without a relation or the word outgrows ``limit``.
    """
    word = [(x, -1) for x in reversed(negative)] + [(y, 1) for y in positive]
    for _ in range(4 * limit * limit):
        for i in range(len(word) - 1):
            if word[i][1] < 0 < word[i + 1][1]:
                break
        else:
            v = tuple(x for x, sign in word if sign > 0)
            u = tuple(x for x, sign in reversed(word) if sign < 0)
            return v, u
        x, y = word[i][0], word[i + 1][0]
        if x == y:
            replacement = []
        elif (x, y) in f_left:
            replacement = ([(z, 1) for z in f_left[(x, y)]]
                           + [(z, -1) for z in reversed(f_left[(y, x)])])
        else:
            return None
        word[i:i + 2] = replacement
        if len(word) > limit:
            return None
    return None


def atom_common_multiple(spec: PresentationSpec, max_word_length: int):
    """Common right multiple of all atoms found by right reversing.

    Returns None when reversing gets stuck or the multiple grows past
    ``max_word_length``. Every Garside element is a right multiple of it.
    """
    f_left = derive_complements(spec).f_left
    multiple = ()
    for atom in spec.atoms:
        reversed_ = _reverse(multiple, (atom,), f_left, 2 * max_word_length + 2)
        if reversed_ is None:
            return None
        multiple += reversed_[0]
        if len(multiple) > max_word_length:
            return None
    return multiple


def find_minimal_garside(spec: PresentationSpec, max_word_length: int = None,
                         oracle: RewritingOracle = None) -> GarsideStructure:
    atoms = spec.atoms
    if not max_word_length:
        max_word_length = 2 * len(atoms) ** 2
    if oracle is None:
        oracle = RewritingOracle(spec)

    try:
        multiple = atom_common_multiple(spec, max_word_length)
    except ConflictingComplement:
        multiple = ()
    if multiple is None:
        logger.info('leaf {%s}: atoms have no common multiple of length <= %d',
                    ', '.join(atoms), max_word_length)
        raise SearchExhausted(max_word_length, atoms)

    # prefixes of length-lex least words are length-lex least
    level = [()]
    for length in range(max_word_length + 1):
        if length:
            level = [word for word in (prefix + (atom,) for prefix in level for atom in atoms)
                     if oracle.canonical(word) == word]
        for candidate in level:
            if len(candidate) < len(multiple):
                continue
            left, right = _end_divisors(candidate, oracle)
            if not all((atom,) in left for atom in atoms):
                continue
            if left != right:
                continue
            structure = structure_from_delta(spec, candidate, left, oracle)
            logger.info('leaf {%s}: delta %s with %d simples', ', '.join(atoms),
                        format_positive(candidate), len(structure.simples))
            return structure
    raise SearchExhausted(max_word_length, atoms)


def structure_from_delta(spec: PresentationSpec, delta: Word, simples,
                         oracle: RewritingOracle) -> GarsideStructure:
    simples = sorted(simples, key=spec.word_key)
    index = {word: i for i, word in enumerate(simples)}
    atom_length = [max(len(m) for m in oracle.closure(word)) for word in simples]
    delta_index = index[tuple(delta)]
    bound = atom_length[delta_index]

    n = len(simples)
    product = np.full((n, n), -1, dtype=np.int64)
    for i, s in enumerate(simples):
        for j, t in enumerate(simples):
            # the longest spelling is additive, so longer products cannot divide delta
            if atom_length[i] + atom_length[j] > bound:
                continue
            k = index.get(oracle.canonical(s + t))
            if k is not None:
                product[i, j] = k
    return GarsideStructure(spec.atoms, tuple(simples), product,
                            tuple(atom_length), delta_index)


def dump_structure(gs: GarsideStructure) -> str:
    lines = [f'atoms: {" ".join(gs.atoms)}', f'delta: {" ".join(gs.delta)}']
    for word, length in zip(gs.simples, gs.atom_length):
        lines.append(f'simple: {length} {" ".join(word)}'.rstrip())
    for name, table in (('left', gs.left_divides), ('right', gs.right_divides)):
        for row in table:
            lines.append(f'{name}: {"".join("1" if v else "0" for v in row)}')
    for row in gs.product_partial:
        lines.append(f'product: {" ".join(str(int(v)) for v in row)}')
    return '\n'.join(lines) + '\n'


def load_structure(text: str) -> GarsideStructure:
    fields = {'atoms': [], 'delta': [], 'simple': [], 'left': [], 'right': [], 'product': []}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, value = line.partition(':')
        fields[key.strip()].append(value.split())

    atoms = tuple(fields['atoms'][0])
    delta = tuple(fields['delta'][0])
    simples = tuple(tuple(entry[1:]) for entry in fields['simple'])
    atom_length = tuple(int(entry[0]) for entry in fields['simple'])
    product = np.array([[int(v) for v in row] for row in fields['product']], dtype=np.int64)
    gs = GarsideStructure(atoms, simples, product, atom_length, simples.index(delta))

    left = np.array([[c == '1' for c in row[0]] for row in fields['left']])
    right = np.array([[c == '1' for c in row[0]] for row in fields['right']])
    assert (left == gs.left_divides).all() and (right == gs.right_divides).all()
    return gs


LATTICE_OPS = ('gcd_L', 'gcd_R', 'lcm_L', 'lcm_R', 'divides_L', 'divides_R')


def lattice_op(op: str, x: tuple, y: tuple, gs: GarsideStructure):
    """Lattice operation by name on two leaf elements; the divisibility tests return bool."""
    if op == 'gcd_L':
        return gs.gcd_left(x, y)
    if op == 'gcd_R':
        return gs.gcd_right(x, y)
    if op == 'lcm_L':
        return gs.lcm_left(x, y)
    if op == 'lcm_R':
        return gs.lcm_right(x, y)
    if op == 'divides_L':
        return gs.left_divides_element(x, y)
    if op == 'divides_R':
        return gs.right_divides_element(x, y)
    raise ValueError(f'unknown lattice operation {op!r}, expected one of {LATTICE_OPS}')
