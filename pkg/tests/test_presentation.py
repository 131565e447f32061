import pytest

from pregarside.errors import (
    ConflictingComplement, DuplicateAtom, GraphMismatch, MalformedRelation,
    NotAtomic, ParseError, UnknownAtom)
from pregarside.presentation import (
    Relation, check_graph_coincidence, derive_complements, format_presentation,
    parse_presentation, require_valid, validate_atoms)
from pregarside.frontend.preset import PRESETS, load_preset


def test_parse_b3():
    spec = parse_presentation('# braid monoid\natoms: a b\n\nrel: a b a = b a b  # braid\n')
    assert spec.atoms == ('a', 'b')
    assert spec.relations == (Relation(('a', 'b', 'a'), ('b', 'a', 'b')),)


@pytest.mark.parametrize('name', PRESETS)
def test_format_parse_identity(name):
    spec = load_preset(name)
    assert parse_presentation(format_presentation(spec)) == spec


def test_relation_before_atoms():
    with pytest.raises(ParseError) as info:
        parse_presentation('rel: a b = b a\natoms: a b\n')
    assert info.value.line == 1


def test_missing_atoms_line():
    with pytest.raises(ParseError):
        parse_presentation('# nothing here\n')


def test_duplicate_atom_position():
    with pytest.raises(DuplicateAtom) as info:
        parse_presentation('atoms: a a\n')
    assert (info.value.line, info.value.column) == (1, 10)


def test_unknown_atom_in_relation():
    with pytest.raises(UnknownAtom) as info:
        parse_presentation('atoms: a b\nrel: a c = c a\n')
    assert info.value.line == 2


@pytest.mark.parametrize('text', [
    'atoms: a b\nrel: a b = \n',
    'atoms: a b\nrel: a b\n',
    'atoms: a b\nrel: a b = b a = a b\n',
    'atoms: a b\nrel: a b = a b\n',
])
def test_malformed_relation(text):
    with pytest.raises(MalformedRelation):
        parse_presentation(text)


def test_complements_of_b3():
    cp = derive_complements(load_preset('B3'))
    assert cp.f_left[('a', 'b')] == ('b', 'a')
    assert cp.f_left[('b', 'a')] == ('a', 'b')
    assert cp.f_right[('a', 'b')] == ('b', 'a')
    assert cp.f_right[('b', 'a')] == ('a', 'b')
    assert check_graph_coincidence(cp)


def test_complements_of_commuting_pair():
    cp = derive_complements(load_preset('RA2'))
    assert cp.f_left[('a', 'b')] == ('b',)
    assert cp.f_left[('b', 'a')] == ('a',)
    assert cp.f_right[('a', 'b')] == ('a',)
    assert cp.f_right[('b', 'a')] == ('b',)
    assert not cp.has_edge('a', 'c')


def test_conflicting_complement():
    spec = parse_presentation('atoms: a b\nrel: a b = b a\nrel: a b a = b a b\n')
    with pytest.raises(ConflictingComplement):
        derive_complements(spec)


def test_non_atom_is_reported():
    spec = parse_presentation('atoms: a b\nrel: a = b a\n')
    cp = derive_complements(spec)
    report = validate_atoms(spec, cp)
    assert report.non_atoms == ('a',)
    assert not report.all_atoms
    assert not check_graph_coincidence(cp)
    with pytest.raises(NotAtomic):
        require_valid(spec, cp)


def test_removing_a_relation_keeps_atoms():
    spec = parse_presentation('atoms: a b c\nrel: a = b a\nrel: b c = c b\n')
    smaller = parse_presentation('atoms: a b c\nrel: b c = c b\n')
    before = validate_atoms(spec, derive_complements(spec))
    after = validate_atoms(smaller, derive_complements(smaller))
    for atom, ok in before.verdicts.items():
        assert after.verdicts[atom] or not ok


def test_graph_mismatch():
    spec = parse_presentation('atoms: a b c\nrel: a b c = b a a\n')
    cp = derive_complements(spec)
    assert not check_graph_coincidence(cp)
    with pytest.raises(GraphMismatch):
        require_valid(spec, cp)


def test_restrict_keeps_inner_relations():
    spec = load_preset('B3B3')
    sub = spec.restrict(['b', 'a'])
    assert sub.atoms == ('a', 'b')
    assert sub.relations == (Relation(('a', 'b', 'a'), ('b', 'a', 'b')),)
