from itertools import combinations, product

import pytest

from pregarside.errors import NotParabolic, UnknownAtom
from pregarside.frontend.preset import PRESETS
from pregarside.garside import LeafCatalog
from pregarside.oracle import oracle_closure
from pregarside.parabolic import (
    ParabolicHandle, enumerate_spherical_parabolics, intersect_parabolics,
    is_parabolic, is_spherical_candidate, make_parabolic, parabolic_delta,
    spherical_simples, strip_right_parabolic)
from pregarside.presentation import derive_complements, parse_presentation


def test_b3b3_spherical_parabolics(b3b3):
    handles = enumerate_spherical_parabolics(b3b3.spec, b3b3.cp, b3b3.catalog)
    assert [h.atom_subset for h in handles] == [
        (), ('a',), ('b',), ('c',), ('a', 'b'), ('b', 'c')]
    assert handles[4].delta_N == ('a', 'b', 'a')
    words = spherical_simples(handles, b3b3.catalog)
    assert len(words) == 10
    assert words[-2:] == [('a', 'b', 'a'), ('b', 'c', 'b')]


def test_every_b4_subset_is_parabolic(b4):
    atoms = b4.spec.atoms
    subsets = [s for n in range(4) for s in combinations(atoms, n)]
    assert len(subsets) == 8
    assert all(is_parabolic(s, b4.cp) for s in subsets)
    assert all(is_spherical_candidate(s, b4.cp) for s in subsets)


def test_disconnected_pair_is_parabolic(b3b3, ra2):
    assert is_parabolic(('a', 'c'), b3b3.cp)
    assert not is_spherical_candidate(('a', 'c'), b3b3.cp)
    assert is_parabolic(('a', 'c'), ra2.cp)


def test_not_parabolic():
    spec = parse_presentation('atoms: a b\nrel: a b = b b\n')
    cp = derive_complements(spec)
    assert not is_parabolic(('b',), cp)
    # b b = a b leaves the alphabet of <b>
    assert oracle_closure(('b', 'b'), spec) == {('b', 'b'), ('a', 'b')}
    with pytest.raises(NotParabolic):
        make_parabolic(('b',), spec, cp, LeafCatalog(spec))


def test_unknown_atom(b3):
    with pytest.raises(UnknownAtom):
        is_parabolic(('z',), b3.cp)


def test_make_parabolic(b3b3):
    spherical = b3b3.parabolic(('b', 'a'))
    assert spherical == ParabolicHandle(('a', 'b'), True, ('a', 'b', 'a'))
    assert str(spherical) == '<a, b>'
    wide = b3b3.parabolic(('a', 'c'))
    assert not wide.spherical and wide.delta_N is None
    assert wide.contains(('c', 'a', 'a'))
    assert not wide.contains(('b',))


def test_intersection(b3b3):
    meet = intersect_parabolics(b3b3.parabolic('ab'), b3b3.parabolic('bc'),
                                b3b3.cp, b3b3.catalog)
    assert meet == ParabolicHandle(('b',), True, ('b',))


def test_parabolic_delta_and_strip(b3_leaf):
    handle = ParabolicHandle(('a',), True, ('a',))
    assert parabolic_delta(handle, b3_leaf) == b3_leaf.element('a')
    g = b3_leaf.element('ba')
    assert strip_right_parabolic(g, handle, b3_leaf) == (b3_leaf.element('b'), b3_leaf.element('a'))
    g = b3_leaf.element('aab')
    assert strip_right_parabolic(g, handle, b3_leaf) == (g, ())


@pytest.mark.parametrize('name', PRESETS)
def test_parabolic_submonoids_are_closed_by_factors(sessions, name):
    session = sessions[name]
    atoms = session.spec.atoms
    for subset in (s for n in range(len(atoms) + 1) for s in combinations(atoms, n)):
        if not is_parabolic(subset, session.cp):
            continue
        for w in (w for n in range(5) for w in product(subset, repeat=n)):
            assert all(set(u) <= set(subset) for u in session.oracle.closure(w))
