"""Positive and signed words.

A positive word is a tuple of atom names. A signed word is a tuple of
:class:`Letter`, each naming a simple element by one of its atom words and
carrying an inversion flag. On the command line a letter is written as the
atoms joined by dots, with a trailing ``-`` for the inverse:
``a.b.a b- c``.
"""
import re
from typing import Iterable, NamedTuple

from pregarside.errors import InvalidWord

Word = tuple[str, ...]

ATOM_PATTERN = re.compile(r'[^\s#=:.\-]+')
IDENTITY_TOKEN = '1'


class Letter(NamedTuple):
    simple: Word
    inverse: bool = False

    def __str__(self) -> str:
        return '.'.join(self.simple) + ('-' if self.inverse else '')


def is_atom_name(name: str) -> bool:
    return ATOM_PATTERN.fullmatch(name) is not None


def parse_letter(token: str) -> Letter:
    inverse = token.endswith('-')
    body = token[:-1] if inverse else token
    parts = tuple(body.split('.'))
    if not body or not all(is_atom_name(part) for part in parts):
        raise InvalidWord(f'malformed letter: {token!r}')
    return Letter(parts, inverse)


def parse_word(text: str) -> tuple[Letter, ...]:
    """Parse a whitespace separated signed word; ``1`` or nothing is the empty word."""
    tokens = text.split()
    if tokens == [IDENTITY_TOKEN]:
        return ()
    return tuple(parse_letter(token) for token in tokens)


def parse_positive_word(text: str) -> Word:
    letters = parse_word(text)
    if not is_positive(letters):
        raise InvalidWord(f'expected a positive word: {text!r}')
    return tuple(atom for letter in letters for atom in letter.simple)


def format_word(letters: Iterable[Letter]) -> str:
    text = ' '.join(str(letter) for letter in letters)
    return text if text else IDENTITY_TOKEN


def format_positive(word: Word) -> str:
    return ' '.join(word) if word else IDENTITY_TOKEN


def letters_of(word: Word, inverse: bool = False) -> tuple[Letter, ...]:
    """One-atom letters spelling ``word``, or its inverse."""
    if inverse:
        return tuple(Letter((atom,), True) for atom in reversed(word))
    return tuple(Letter((atom,)) for atom in word)


def inverse(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    return tuple(Letter(letter.simple, not letter.inverse)
                 for letter in reversed(tuple(letters)))


def expand(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Replace every simple letter by its atoms, so (x1...xk)^-1 becomes xk^-1...x1^-1."""
    out = []
    for letter in letters:
        out.extend(letters_of(letter.simple, letter.inverse))
    return tuple(out)


def is_positive(letters: Iterable[Letter]) -> bool:
    return not any(letter.inverse for letter in letters)


def support(letters: Iterable[Letter]) -> frozenset:
    return frozenset(atom for letter in letters for atom in letter.simple)


def positive_part(letters: Iterable[Letter]) -> Word:
    """Atom word of a word that has no inverse letters."""
    letters = tuple(letters)
    assert is_positive(letters)
    return tuple(atom for letter in letters for atom in letter.simple)
