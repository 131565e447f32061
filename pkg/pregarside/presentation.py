"""Positive presentations, their complement functions and validation.

File format::

    # comment
    atoms: a b c
    rel: a b a = b a b
    rel: b c b = c b c

The ``atoms:`` line must come before any relation.
"""
import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

from pregarside.errors import (
    ConflictingComplement, DuplicateAtom, GraphMismatch, MalformedRelation,
    NotAtomic, ParseError, UnknownAtom)
from pregarside.word import Word, is_atom_name

logger = logging.getLogger(__name__)

TOKEN = re.compile(r'\S+')


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    @property
    def letters(self) -> frozenset:
        return frozenset(self.lhs) | frozenset(self.rhs)

    def __str__(self) -> str:
        return f'rel: {" ".join(self.lhs)} = {" ".join(self.rhs)}'


@dataclass(frozen=True)
class PresentationSpec:
    atoms: Word
    relations: tuple[Relation, ...] = ()
    name: str = field(default=None, compare=False)

    @cached_property
    def index(self) -> dict:
        return {atom: i for i, atom in enumerate(self.atoms)}

    def order(self, subset: Iterable[str]) -> Word:
        """The atoms of ``subset`` in declaration order."""
        subset = frozenset(subset)
        unknown = subset - frozenset(self.atoms)
        if unknown:
            raise UnknownAtom(f'unknown atoms: {", ".join(sorted(unknown))}')
        return tuple(atom for atom in self.atoms if atom in subset)

    def restrict(self, subset: Iterable[str]) -> 'PresentationSpec':
        """Keep the atoms of ``subset`` and the relations written over them."""
        atoms = self.order(subset)
        kept = frozenset(atoms)
        relations = tuple(rel for rel in self.relations if rel.letters <= kept)
        return PresentationSpec(atoms, relations, name=self.name)

    def word_key(self, word: Word) -> tuple:
        """Length-lexicographic sort key, atoms ordered as declared."""
        return (len(word), tuple(self.index[atom] for atom in word))


def _atom_tokens(text: str, offset: int):
    for match in TOKEN.finditer(text):
        yield match.group(), offset + match.start() + 1


def parse_presentation(text: str, name: str = None) -> PresentationSpec:
    atoms = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0]
        if not line.strip():
            continue
        column = len(line) - len(line.lstrip()) + 1
        keyword, sep, rest = line.partition(':')
        keyword = keyword.strip()
        offset = len(line) - len(rest)
        if not sep or keyword not in ('atoms', 'rel'):
            raise ParseError('expected "atoms:" or "rel:"', lineno, column)

        if atoms is None:
            if keyword != 'atoms':
                raise ParseError('the "atoms:" line must come first', lineno, column)
            atoms = []
            for token, col in _atom_tokens(rest, offset):
                if not is_atom_name(token):
                    raise ParseError(f'invalid atom name {token!r}', lineno, col)
                if token in atoms:
                    raise DuplicateAtom(f'atom {token!r} declared twice', lineno, col)
                atoms.append(token)
            if not atoms:
                raise ParseError('no atoms declared', lineno, column)
            continue

        if keyword == 'atoms':
            raise ParseError('atoms declared twice', lineno, column)
        relations.append(_parse_relation(rest, offset, lineno, atoms))

    if atoms is None:
        raise ParseError('missing "atoms:" line', 1, 1)
    spec = PresentationSpec(tuple(atoms), tuple(relations), name=name)
    logger.debug('parsed %s: %d atoms, %d relations',
                 name, len(spec.atoms), len(spec.relations))
    return spec


def _parse_relation(rest: str, offset: int, lineno: int, atoms: list) -> Relation:
    if rest.count('=') != 1:
        raise MalformedRelation('a relation needs exactly one "="', lineno, offset + 1)
    left_text, _, right_text = rest.partition('=')
    sides = []
    for text, start in ((left_text, offset), (right_text, offset + len(left_text) + 1)):
        word = []
        for token, col in _atom_tokens(text, start):
            if token not in atoms:
                raise UnknownAtom(f'unknown atom {token!r}', lineno, col)
            word.append(token)
        if not word:
            raise MalformedRelation('empty side in relation', lineno, start + 1)
        sides.append(tuple(word))
    lhs, rhs = sides
    if lhs == rhs:
        raise MalformedRelation('both sides of the relation are identical',
                                lineno, offset + 1)
    return Relation(lhs, rhs)


def format_presentation(spec: PresentationSpec) -> str:
    lines = [f'atoms: {" ".join(spec.atoms)}']
    lines.extend(str(rel) for rel in spec.relations)
    return '\n'.join(lines) + '\n'


def load_presentation(path: str) -> PresentationSpec:
    with open(path) as file:
        text = file.read()
    return parse_presentation(text, name=path)


@dataclass(frozen=True)
class ComplementPair:
    """Left and right complement functions of a presentation.

    ``f_left[(x, y)] = u`` records a relation ``x u = y v``;
    ``f_right[(x, y)] = u`` records a relation ``u x = v y``.
    Pairs without a relation are absent.
    """
    atoms: Word
    f_left: dict = field(default_factory=dict)
    f_right: dict = field(default_factory=dict)

    @cached_property
    def graph_left(self) -> frozenset:
        return frozenset(frozenset(pair) for pair in self.f_left)

    @cached_property
    def graph_right(self) -> frozenset:
        return frozenset(frozenset(pair) for pair in self.f_right)

    def has_edge(self, x: str, y: str) -> bool:
        return frozenset((x, y)) in self.graph_left

    def is_complete(self, subset: Iterable[str]) -> bool:
        """Whether ``subset`` spans a complete subgraph."""
        return all(self.has_edge(x, y) for x, y in combinations(tuple(subset), 2))

    def restrict(self, subset: Iterable[str]) -> 'ComplementPair':
        kept = frozenset(subset)
        return ComplementPair(
            tuple(atom for atom in self.atoms if atom in kept),
            {k: v for k, v in self.f_left.items() if k[0] in kept and k[1] in kept},
            {k: v for k, v in self.f_right.items() if k[0] in kept and k[1] in kept},
        )


def _assign(table: dict, key: tuple, value: Word, side: str):
    if key in table:
        raise ConflictingComplement(
            f'two relations define the {side} complement of {key[0]} and {key[1]}')
    table[key] = value


def derive_complements(spec: PresentationSpec) -> ComplementPair:
    f_left, f_right = {}, {}
    for rel in spec.relations:
        x, y = rel.lhs[0], rel.rhs[0]
        if x != y:
            _assign(f_left, (x, y), rel.lhs[1:], 'left')
            _assign(f_left, (y, x), rel.rhs[1:], 'left')
        x, y = rel.lhs[-1], rel.rhs[-1]
        if x != y:
            _assign(f_right, (y, x), rel.lhs[:-1], 'right')
            _assign(f_right, (x, y), rel.rhs[:-1], 'right')
    return ComplementPair(spec.atoms, f_left, f_right)


@dataclass(frozen=True)
class AtomReport:
    verdicts: dict

    @property
    def non_atoms(self) -> tuple:
        return tuple(atom for atom, ok in self.verdicts.items() if not ok)

    @property
    def all_atoms(self) -> bool:
        return not self.non_atoms


def validate_atoms(spec: PresentationSpec, cp: ComplementPair) -> AtomReport:
    """A generator x is not an atom when some relation reads x = y v."""
    verdicts = {atom: True for atom in spec.atoms}
    for (x, _), u in cp.f_left.items():
        if not u:
            verdicts[x] = False
    return AtomReport(verdicts)


def check_graph_coincidence(cp: ComplementPair) -> bool:
    return cp.graph_left == cp.graph_right


def require_valid(spec: PresentationSpec, cp: ComplementPair):
    """Refuse presentations the FC machinery cannot work with."""
    report = validate_atoms(spec, cp)
    if not report.all_atoms:
        raise NotAtomic(report.non_atoms)
    if not check_graph_coincidence(cp):
        diff = cp.graph_left ^ cp.graph_right
        edges = ', '.join('-'.join(sorted(edge)) for edge in sorted(diff, key=sorted))
        raise GraphMismatch(f'left and right complement graphs differ on {edges}')
