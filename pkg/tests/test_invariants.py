import pytest
from hypothesis import given
from hypothesis import strategies as st

from spets_kit.invariants import (
    a_value,
    b_closed_form,
    b_diagonal_staircase,
    b_value,
    b_wreath_staircase,
    check_spetsial,
    fake_degree,
    fake_degree_product_form,
    families,
    irreps,
    is_special,
    poincare,
)
from spets_kit.laurent import LaurentPoly
from spets_kit.partitions import GroupSpec, Multipartition, MultipartitionOrbit, enumerate_multipartitions, enumerate_orbits
from spets_kit.symbols import Weight, symbol_of
from spets_kit.truncated import rotated_diagonal_presymbol

X = LaurentPoly.monomial(1)


def ge1n(text):
    return Multipartition.parse(text, text.count("|") + 1, 1)


def test_poincare_examples():
    assert poincare(GroupSpec(2, 1, 2)) == LaurentPoly.parse("1 + 2X + 2X^2 + 2X^3 + X^4")
    for g in [GroupSpec(2, 1, 2), GroupSpec(1, 3, 3), GroupSpec(2, 2, 2), GroupSpec(1, 1, 4)]:
        assert poincare(g)(1) == g.order


def test_fake_degree_examples():
    assert fake_degree(ge1n("1|1")) == X + X ** 3
    assert fake_degree(MultipartitionOrbit(Multipartition.parse("1|1", 1, 2))) == X
    assert fake_degree(ge1n("2|-")) == LaurentPoly.constant(1)
    assert fake_degree(ge1n("-|1,1")) == X ** 4


def test_b_and_a_examples():
    assert b_value(ge1n("-|1,1|-")) == 5
    assert b_value(ge1n("2|-")) == 0
    assert a_value(ge1n("2|-")) == 0
    assert a_value(ge1n("1|1")) == 1 == b_value(ge1n("1|1"))
    assert is_special(ge1n("3|-|-"))


def test_fake_degree_forms_agree():
    for m in range(1, 5):
        for n in range(5):
            for alpha in enumerate_multipartitions(GroupSpec(m, 1, n), None):
                assert fake_degree(alpha) == fake_degree_product_form(alpha)


@pytest.mark.parametrize("group", [GroupSpec(1, 2, 3), GroupSpec(1, 3, 3), GroupSpec(2, 2, 2), GroupSpec(1, 4, 2), GroupSpec(3, 2, 2)])
def test_fake_degrees_sum_to_poincare(group):
    total = LaurentPoly()
    for label in irreps(group, None):
        total = total + fake_degree(label.orbit) * label.dimension
    assert total == poincare(group)


def test_b_formulas_agree():
    for e in range(1, 5):
        for n in range(5):
            for alpha in enumerate_multipartitions(GroupSpec(e, 1, n), None):
                b = b_value(alpha)
                lengths = Weight.b(e).lengths(alpha)
                assert b_closed_form(alpha) == b
                for extra in range(3):
                    assert b_wreath_staircase(alpha, lengths[1] + extra if e > 1 else lengths[0] - 1 + extra) == b
                for r, s in [(1, 0), (2, 1), (3, 3)]:
                    assert symbol_of(alpha, r, s, Weight.b(e)).b_c() == b
                    assert rotated_diagonal_presymbol(alpha, r).b_c() == b
        for n in range(5):
            for orbit in enumerate_orbits(GroupSpec(1, e, n), None):
                k = max(len(c) for c in orbit.representative.components)
                for extra in range(3):
                    assert b_diagonal_staircase(orbit.representative, k + extra) == b_value(orbit)


def test_spetsial_groups():
    for e in range(1, 5):
        for n in range(5):
            assert check_spetsial(GroupSpec(e, 1, n), None)
            assert check_spetsial(GroupSpec(1, e, n), None)


def test_a_value_needs_spetsial_family():
    with pytest.raises(ValueError):
        a_value(Multipartition.parse("1|1|-|-", 2, 2))


def test_cyclic_families():
    for e in range(2, 9):
        fams = families(GroupSpec(e, 1, 1))
        assert len(fams) == 2
        assert sorted(len(f) for f in fams) == [1, e - 1]


def test_stuttering_families():
    fams = families(GroupSpec(1, 3, 3))
    stutter = MultipartitionOrbit(Multipartition.parse("1|1|1", 1, 3))
    singles = [f for f in fams if f[0].orbit == stutter]
    assert len(singles) == 3 and all(len(f) == 1 for f in singles)


def test_symmetric_group_families_are_singletons():
    for n in range(1, 6):
        assert all(len(f) == 1 for f in families(GroupSpec(1, 1, n)))


def test_each_family_has_one_special():
    for g in [GroupSpec(2, 1, 3), GroupSpec(3, 1, 2), GroupSpec(1, 3, 3), GroupSpec(1, 2, 4)]:
        for fam in families(g):
            assert sum(is_special(x.orbit) for x in fam) == 1


def pairs_upto(total):
    def build(e):
        return st.tuples(st.integers(0, total), st.integers(0, total)).filter(lambda p: p[0] + p[1] <= total).flatmap(
            lambda p: st.tuples(
                st.sampled_from(enumerate_multipartitions(GroupSpec(e, 1, p[0]), None)),
                st.sampled_from(enumerate_multipartitions(GroupSpec(e, 1, p[1]), None)),
            )
        )
    return st.integers(1, 4).flatmap(build)


@given(pairs_upto(5))
def test_b_additive(pair):
    x, y = pair
    assert b_value(x + y) == b_value(x) + b_value(y)
