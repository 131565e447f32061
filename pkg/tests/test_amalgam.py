import random
from itertools import combinations, product

import pytest

from pregarside.amalgam import (
    AmalgamNode, amalgam_mul, amalgam_nf, canonical_word, ell_N, find_split,
    format_tree, group_amalgam_nf, initial_pieces, m_star_T_P, m_T_P,
    reduce_pieces, restrict_tree)
from pregarside.errors import InvalidWord
from pregarside.frontend.decision import coset_membership
from pregarside.word import inverse, parse_word

INNER = ('FREE2', 'B3B3', 'RA2')


def _words(atoms, longest):
    return [w for n in range(longest + 1) for w in product(atoms, repeat=n)]


def _random_signed(rng, atoms, longest):
    return parse_word(' '.join(rng.choice(atoms) + rng.choice(('', '-'))
                               for _ in range(rng.randrange(longest + 1))))


def test_splits(b3b3, free2, ra2):
    assert find_split(b3b3.spec.atoms, b3b3.cp) == (('a', 'b'), ('b', 'c'))
    assert find_split(free2.spec.atoms, free2.cp) == (('a',), ('b',))
    assert find_split(ra2.spec.atoms, ra2.cp) == (('a', 'b'), ('b', 'c'))


def test_tree_shape(b3b3, b4):
    assert format_tree(b3b3.tree) == (
        'amalgam {a, b, c} over {b}\n'
        '  leaf {a, b} delta a b a (6 simples)\n'
        '  leaf {b, c} delta b c b (6 simples)')
    assert b3b3.tree.depth == 1
    assert b3b3.tree.shared.atoms == ('b',)
    assert b4.tree.is_leaf


def test_free_tree(free2):
    root = free2.tree
    assert isinstance(root, AmalgamNode)
    assert root.shared.atoms == ()
    assert len(root.shared.gs.simples) == 1


def test_restrict(b3b3):
    root = b3b3.tree
    assert restrict_tree(root, ('a', 'b'), b3b3.builder) is root.left
    wide = restrict_tree(root, ('a', 'c'), b3b3.builder)
    assert format_tree(wide) == (
        'amalgam {a, c} over {}\n'
        '  leaf {a} delta a (2 simples)\n'
        '  leaf {c} delta c (2 simples)')


def test_monoid_normal_forms(b3b3):
    root = b3b3.tree
    nf = root.monoid_nf
    assert root.format_monoid(nf(('c', 'a'))) == '(2:c | 1:a ; 1)'
    assert root.format_monoid(nf(('a', 'b'))) == '(1:a ; b)'
    assert root.format_monoid(nf(('b',))) == '( ; b)'
    assert ell_N(nf(('c', 'a'))) == 2
    assert ell_N(nf(('b',))) == 0
    assert amalgam_mul(nf(('c',)), nf(('b',)), root) == nf(('c', 'b'))
    assert root.format_monoid(nf(('c', 'b'))) == '(2:c ; b)'


def test_invalid_atom(b3b3):
    with pytest.raises(InvalidWord):
        b3b3.tree.monoid_nf(('d',))


@pytest.mark.parametrize('name', INNER)
def test_normal_form_agrees_with_oracle(sessions, name):
    session = sessions[name]
    root = session.tree
    forms = {}
    for w in _words(session.spec.atoms, 4):
        nf = amalgam_nf(w, root)
        assert session.oracle.equal(root.monoid_word(nf), w)
        forms.setdefault(nf, set()).add(session.oracle.canonical(w))
    assert all(len(classes) == 1 for classes in forms.values())
    assert len({c for classes in forms.values() for c in classes}) == len(forms)


@pytest.mark.parametrize('name', INNER)
def test_multiplication(sessions, name):
    session = sessions[name]
    root = session.tree
    rng = random.Random(7)
    for _ in range(30):
        u = tuple(rng.choices(session.spec.atoms, k=rng.randrange(6)))
        v = tuple(rng.choices(session.spec.atoms, k=rng.randrange(6)))
        assert root.monoid_mul(root.monoid_nf(u), root.monoid_nf(v)) == root.monoid_nf(u + v)


def test_strip_right(b3b3):
    root = b3b3.tree
    stripped, h = root.strip_right(root.monoid_nf(('a', 'b')), ('b',))
    assert stripped == root.monoid_nf(('a',))
    assert h == root.monoid_nf(('b',))


@pytest.mark.parametrize('name', INNER)
def test_reduction_strategies_agree(sessions, name):
    session = sessions[name]
    root = session.tree
    rng = random.Random(11)
    for _ in range(1000):
        w = tuple(rng.choices(session.spec.atoms, k=rng.randrange(11)))
        expected = amalgam_nf(w, root)
        assert reduce_pieces(initial_pieces(w, root), root) == expected
        for _ in range(10):
            pieces = initial_pieces(w, root, rng)
            assert reduce_pieces(pieces, root, rng) == expected


def test_group_normal_forms(b3b3):
    root = b3b3.tree
    assert root.format_group(group_amalgam_nf(parse_word('a b-'), root)) == '(1:a ; b-)'
    assert group_amalgam_nf(parse_word('b c a a- c- b-'), root) == root.group_identity
    assert root.group_nf(parse_word('c a')) == root.group_nf(parse_word('c a c c-'))


@pytest.mark.parametrize('name', INNER)
def test_group_multiplication(sessions, name):
    root = sessions[name].tree
    atoms = sessions[name].spec.atoms
    rng = random.Random(3)
    for _ in range(30):
        u = _random_signed(rng, atoms, 5)
        v = _random_signed(rng, atoms, 5)
        product_nf = root.group_mul(root.group_nf(u), root.group_nf(v))
        assert product_nf == root.group_nf(u + v)
        assert root.group_mul(product_nf, root.group_inverse(product_nf)) == root.group_identity


def test_coset_representatives(b3b3):
    root = b3b3.tree
    g = root.group_nf(parse_word('c a'))
    assert root.format_group(m_T_P(g, ('a',), root)) == '(2:c ; 1)'
    g = root.group_nf(parse_word('a b'))
    assert root.format_group(m_T_P(g, ('b',), root)) == '(1:a ; 1)'
    assert m_star_T_P(parse_word('c a'), ('a',), root) == parse_word('c')
    assert m_star_T_P(parse_word('a c a- c-'), (), root) != ()


@pytest.mark.parametrize('name', INNER)
def test_word_level_map_matches_normal_forms(sessions, name):
    session = sessions[name]
    root = session.tree
    atoms = session.spec.atoms
    rng = random.Random(5)
    for subset in (s for n in range(len(atoms) + 1) for s in combinations(atoms, n)):
        for _ in range(40):
            w = _random_signed(rng, atoms, 6)
            rep = m_T_P(root.group_nf(w), subset, root)
            word = root.m_star(w, subset)
            assert word == canonical_word(rep, root)
            assert root.m_star(word, subset) == word
            assert coset_membership(inverse(word) + w, subset, root)
            if subset:
                tail = parse_word(rng.choice(subset))
                assert root.m_star(w + tail, subset) == word


def _elements(root, atoms, longest):
    return sorted({amalgam_nf(w, root) for w in _words(atoms, longest)}, key=repr)


@pytest.mark.parametrize('name', INNER)
def test_cancellativity(sessions, name):
    session = sessions[name]
    root = session.tree
    elements = _elements(root, session.spec.atoms, 3)
    for g in elements:
        assert len({amalgam_mul(u, g, root) for u in elements}) == len(elements)
        assert len({amalgam_mul(g, u, root) for u in elements}) == len(elements)


def test_lcm_length_law(b3b3):
    root = b3b3.tree
    atoms = [amalgam_nf((atom,), root) for atom in b3b3.spec.atoms]
    # left divisors of every element up to length 8, built one atom at a time
    divisors = {root.monoid_identity: frozenset({root.monoid_identity})}
    length = {root.monoid_identity: 0}
    level = [root.monoid_identity]
    for n in range(1, 9):
        grown = {}
        for e in level:
            for x in atoms:
                f = amalgam_mul(e, x, root)
                grown.setdefault(f, set()).update(divisors[e])
        for f, below in grown.items():
            divisors[f] = frozenset(below | {f})
            length[f] = n
        level = list(grown)

    multiples = {}
    for f, below in divisors.items():
        for d in below:
            if length[d] <= 4:
                multiples.setdefault(d, set()).add(f)

    short = sorted(multiples, key=lambda e: (length[e], repr(e)))
    checked = 0
    for i, u in enumerate(short):
        for v in short[i:]:
            common = multiples[u] & multiples[v]
            if not common:
                continue
            shortest = min(length[f] for f in common)
            lcm = [f for f in common if length[f] == shortest]
            assert len(lcm) == 1
            assert all(lcm[0] in divisors[f] for f in common)
            assert ell_N(lcm[0]) == max(ell_N(u), ell_N(v))
            checked += 1
    assert checked > 100


@pytest.mark.parametrize('name', INNER)
def test_coset_representative_is_shortest(sessions, name):
    session = sessions[name]
    root = session.tree
    atoms = session.spec.atoms
    rng = random.Random(31)
    for subset in (s for n in range(len(atoms) + 1) for s in combinations(atoms, n)):
        for _ in range(10):
            g = root.group_nf(_random_signed(rng, atoms, 6))
            rep = m_T_P(g, subset, root)
            assert ell_N(rep) <= ell_N(g)
            for _ in range(3):
                h = root.group_nf(_random_signed(rng, subset, 4)) if subset else root.group_identity
                gh = root.group_mul(g, h)
                assert m_T_P(gh, subset, root) == rep
                assert ell_N(rep) <= ell_N(gh)
