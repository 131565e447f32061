"""Normal forms in an amalgamated product M1 *_N M2.

Every element is uniquely ``g_1 ... g_m h`` with ``h`` in N and the ``g_i``
nontrivial transversal elements taken alternately from the two sides. The
transversal element of a side element ``x`` is ``x`` with its greatest right
divisor in N removed. The same shape describes the group, with the
transversal given by the minimal coset representatives of G(N).
"""
import logging
import random
from dataclasses import dataclass
from typing import Iterable

from pregarside.errors import InvalidWord
from pregarside.word import Letter, Word, expand

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AmalgamNF:
    """``factors`` holds ``(side, element)`` pairs, ``tail`` an element of the N-subtree."""
    factors: tuple
    tail: object


@dataclass(frozen=True)
class GroupAmalgamNF(AmalgamNF):
    pass


def ell_N(nf: AmalgamNF) -> int:
    return len(nf.factors)


def side_blocks(atoms: Iterable[str], node) -> list[tuple[int, list]]:
    """Cut a sequence of atoms, or of letters, into maximal same-side blocks.

    Atoms of N join the block in progress; a word starting in N opens a
    block on side 1.
    """
    blocks = []
    for item in atoms:
        atom = item.simple[0] if isinstance(item, Letter) else item
        if atom in node.shared.atom_set:
            side = blocks[-1][0] if blocks else 1
        elif atom in node.left.atom_set:
            side = 1
        elif atom in node.right.atom_set:
            side = 2
        else:
            raise InvalidWord(f'atom {atom!r} is not in {{{", ".join(node.atoms)}}}')
        if blocks and blocks[-1][0] == side:
            blocks[-1][1].append(item)
        else:
            blocks.append((side, [item]))
    return blocks


def push_monoid(node, nf: AmalgamNF, side: int, x) -> AmalgamNF:
    """Right-multiply ``nf`` by an element ``x`` of the side monoid."""
    child = node.side(side)
    factors = list(nf.factors)
    tail = node.lift(nf.tail, side)
    if factors and factors[-1][0] == side:
        _, last = factors.pop()
        x = child.monoid_mul(child.monoid_mul(last, tail), x)
    else:
        x = child.monoid_mul(tail, x)
    transversal, h = child.strip_right(x, node.shared.atoms)
    if transversal != child.monoid_identity:
        factors.append((side, transversal))
    return AmalgamNF(tuple(factors), node.shared.monoid_nf(child.monoid_word(h)))


def amalgam_nf(word: Word, node) -> AmalgamNF:
    nf = AmalgamNF((), node.shared.monoid_identity)
    for side, block in side_blocks(word, node):
        nf = push_monoid(node, nf, side, node.side(side).monoid_nf(tuple(block)))
    return nf


def amalgam_mul(u: AmalgamNF, v: AmalgamNF, node) -> AmalgamNF:
    for side, g in v.factors:
        u = push_monoid(node, u, side, g)
    return push_monoid(node, u, 1, node.lift(v.tail, 1))


def push_group(node, nf: GroupAmalgamNF, side: int, x) -> GroupAmalgamNF:
    """Right-multiply ``nf`` by an element ``x`` of the side group."""
    child = node.side(side)
    factors = list(nf.factors)
    tail = node.lift_group(nf.tail, side)
    if factors and factors[-1][0] == side:
        _, last = factors.pop()
        x = child.group_mul(child.group_mul(last, tail), x)
    else:
        x = child.group_mul(tail, x)
    transversal = child.coset_rep(x, node.shared.atoms)
    h = child.group_mul(child.group_inverse(transversal), x)
    if transversal != child.group_identity:
        factors.append((side, transversal))
    return GroupAmalgamNF(tuple(factors), node.shared.group_nf(child.group_letters(h)))


def group_amalgam_nf(letters: Iterable[Letter], node) -> GroupAmalgamNF:
    nf = GroupAmalgamNF((), node.shared.group_identity)
    for side, block in side_blocks(expand(letters), node):
        nf = push_group(node, nf, side, node.side(side).group_nf(block))
    return nf


def group_amalgam_mul(u: GroupAmalgamNF, v: GroupAmalgamNF, node) -> GroupAmalgamNF:
    for side, g in v.factors:
        u = push_group(node, u, side, g)
    return push_group(node, u, 1, node.lift_group(v.tail, 1))


# Reduction rules on sequences of pieces. A piece is (side, element): side 0
# holds an element of the N-subtree, sides 1 and 2 elements of the children.
#   (a) two adjacent pieces of one side monoid, not both in N, become [g g']_N
#   (b) a side piece outside N with a nontrivial right divisor in N is split
#   (c) two adjacent pieces in N are multiplied in N

def _in_shared(piece, node) -> bool:
    side, element = piece
    if side == 0:
        return True
    return frozenset(node.side(side).monoid_word(element)) <= node.shared.atom_set


def _split(node, side: int, x) -> list:
    child = node.side(side)
    transversal, h = child.strip_right(x, node.shared.atoms)
    tail = (0, node.shared.monoid_nf(child.monoid_word(h)))
    if transversal == child.monoid_identity:
        return [tail]
    return [(side, transversal), tail]


def _as_side(piece, side: int, node):
    piece_side, element = piece
    if piece_side == side:
        return element
    source = node.shared if piece_side == 0 else node.side(piece_side)
    return node.side(side).monoid_nf(source.monoid_word(element))


def _moves(pieces: list, node) -> list:
    moves = []
    shared = [_in_shared(piece, node) for piece in pieces]
    for i in range(len(pieces) - 1):
        if shared[i] and shared[i + 1]:
            moves.append(('c', i))
            continue
        sides = {pieces[j][0] for j in (i, i + 1) if not shared[j]}
        if len(sides) == 1 and _apply(pieces, ('a', i), node) != pieces:
            moves.append(('a', i))
    for i, piece in enumerate(pieces):
        if not shared[i] and _split(node, *piece)[-1][1] != node.shared.monoid_identity:
            moves.append(('b', i))
    return moves


def _apply(pieces: list, move: tuple, node) -> list:
    kind, i = move
    if kind == 'c':
        word = sum((_word_of(piece, node) for piece in pieces[i:i + 2]), ())
        return pieces[:i] + [(0, node.shared.monoid_nf(word))] + pieces[i + 2:]
    if kind == 'a':
        side = next(p[0] for p in pieces[i:i + 2] if not _in_shared(p, node))
        child = node.side(side)
        x = child.monoid_mul(_as_side(pieces[i], side, node), _as_side(pieces[i + 1], side, node))
        return pieces[:i] + _split(node, side, x) + pieces[i + 2:]
    side, element = pieces[i]
    return pieces[:i] + _split(node, side, element) + pieces[i + 1:]


def _word_of(piece, node) -> Word:
    side, element = piece
    source = node.shared if side == 0 else node.side(side)
    return source.monoid_word(element)


def initial_pieces(word: Word, node, rng: random.Random = None) -> list:
    """One piece per atom; atoms of N are tagged with N, or with a random side when ``rng`` is given."""
    pieces = []
    for atom in word:
        if atom in node.shared.atom_set:
            side = 0 if rng is None else rng.choice((0, 1, 2))
        else:
            side = 1 if atom in node.left.atom_set else 2
        source = node.shared if side == 0 else node.side(side)
        pieces.append((side, source.monoid_nf((atom,))))
    return pieces


def reduce_pieces(pieces: list, node, rng: random.Random = None) -> AmalgamNF:
    """Rewrite until no rule applies and read off the normal form.

    Without ``rng`` the leftmost applicable move is taken; with it, a
    uniformly random one. Every strategy ends at the same normal form.
    """
    pieces = list(pieces)
    steps = 0
    while True:
        moves = _moves(pieces, node)
        if not moves:
            break
        move = min(moves, key=lambda m: m[1]) if rng is None else rng.choice(moves)
        pieces = _apply(pieces, move, node)
        steps += 1
    logger.debug('reduced to %d pieces in %d steps', len(pieces), steps)

    factors = []
    tail_word = ()
    for piece in pieces:
        if _in_shared(piece, node):
            tail_word += _word_of(piece, node)
        else:
            assert not tail_word
            factors.append(piece)
    return AmalgamNF(tuple(factors), node.shared.monoid_nf(tail_word))
