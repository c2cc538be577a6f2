from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spets_kit.cyclotomic import CycNum
from spets_kit.invariants import fake_degree
from spets_kit.laurent import LaurentPoly
from spets_kit.oracle import (
    GroupElement,
    character_value,
    class_sizes,
    conjugacy_classes,
    det_char_series,
    enumerate_group,
    fake_degree_oracle,
    identity,
    inner_product,
    restricted_character,
    symmetric_character,
    wreath_character_table,
)
from spets_kit.partitions import GroupSpec, Multipartition, MultipartitionOrbit, enumerate_multipartitions, enumerate_orbits


def ge1n(text):
    return Multipartition.parse(text, text.count("|") + 1, 1)


def test_group_sizes():
    assert len(enumerate_group(GroupSpec(2, 1, 2))) == 8
    assert len(enumerate_group(GroupSpec(3, 1, 3))) == 162
    assert len(enumerate_group(GroupSpec(1, 3, 3))) == 54


def test_bound_is_enforced():
    with pytest.raises(ValueError):
        enumerate_group(GroupSpec(4, 1, 4))


def test_class_counts():
    # number of classes = number of irreducibles
    assert len(conjugacy_classes(GroupSpec(1, 2, 2))) == 4
    assert len(conjugacy_classes(GroupSpec(1, 3, 3))) == 10
    assert len(conjugacy_classes(GroupSpec(2, 1, 2))) == 5
    assert len(conjugacy_classes(GroupSpec(1, 6, 2))) == 6


@given(st.sampled_from([GroupSpec(2, 1, 2), GroupSpec(1, 3, 3), GroupSpec(3, 1, 2)]), st.data())
@settings(max_examples=30)
def test_group_closure(group, data):
    elements = enumerate_group(group)
    g = data.draw(st.sampled_from(elements))
    h = data.draw(st.sampled_from(elements))
    assert g * h in set(elements)
    assert g * g.inverse() == identity(group.m, group.n)


def test_symmetric_characters():
    assert symmetric_character((1, 2), (1, 1, 1)) == 2
    assert symmetric_character((1, 2), (3,)) == -1
    assert symmetric_character((1, 1, 1), (2, 1)) == -1
    assert symmetric_character((4,), (2, 2)) == 1


def test_character_values():
    t = GroupElement((1, 0), (0, 1), 2)
    assert character_value(ge1n("1|1"), t) == 0
    assert character_value(ge1n("1|1"), identity(2, 2)) == 2
    for g in enumerate_group(GroupSpec(3, 1, 2)):
        assert character_value(ge1n("2|-|-"), g) == 1


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_orthogonality(m, n):
    group = GroupSpec(m, 1, n)
    sizes = class_sizes(group)
    table = wreath_character_table(m, n)
    labels = list(table.values)
    for x in labels:
        for y in labels:
            assert inner_product(table.values[x], table.values[y], sizes, group.order) == (1 if x == y else 0)


def test_det_series():
    one = identity(1, 2)
    assert [c.to_rational() for c in det_char_series(one, 3)] == [1, 2, 3, 4]
    swap = GroupElement((0, 0), (1, 0), 1)
    assert [c.to_rational() for c in det_char_series(swap, 4)] == [1, 0, 1, 0, 1]


def test_oracle_examples():
    X = LaurentPoly.monomial(1)
    assert fake_degree_oracle(ge1n("1|1")) == X + X ** 3
    assert fake_degree_oracle(ge1n("2|-")) == LaurentPoly.constant(1)
    assert fake_degree_oracle(ge1n("-|1,1")) == X ** 4


@pytest.mark.parametrize("group", [GroupSpec(2, 1, 2), GroupSpec(3, 1, 2), GroupSpec(2, 1, 3), GroupSpec(4, 1, 2)])
def test_oracle_matches_formula_wreath(group):
    for alpha in enumerate_multipartitions(group, None):
        assert fake_degree_oracle(alpha) == fake_degree(alpha)


@pytest.mark.parametrize("group", [GroupSpec(1, 2, 2), GroupSpec(1, 2, 3), GroupSpec(1, 3, 3)])
def test_oracle_matches_formula_diagonal(group):
    for orbit in enumerate_orbits(group, None):
        assert fake_degree_oracle(orbit, group) == fake_degree(orbit) * orbit.stabilizer_order


def test_restricted_character_norm():
    # the restriction of chi_alpha to G(e,e,n) has norm s_e(alpha)
    group = GroupSpec(1, 3, 3)
    sizes = class_sizes(group)
    for orbit in enumerate_orbits(group):
        chi = restricted_character(orbit)
        assert inner_product(chi, chi, sizes, group.order) == orbit.stabilizer_order
