import pytest
from hypothesis import given
from hypothesis import strategies as st

from spets_kit.partitions import GroupSpec, Multipartition, enumerate_multipartitions, enumerate_orbits
from spets_kit.symbols import (
    Presymbol,
    Weight,
    precedes,
    presymbol_of,
    protosymbol,
    similar,
    symbol_of,
)

TYPES = [(1, 0), (1, 1), (2, 0), (2, 1), (3, 1)]
W100 = Weight.parse("1,0,0")


def mp(text, d=None, e=1):
    """G(m,1,n) label by default."""
    if d is None:
        d = text.count("|") + 1
    return Multipartition.parse(text, d, e)


def test_protosymbols():
    assert protosymbol(1, 0, (2, 1, 1)) == ((0, 1), (0,), (0,))
    assert protosymbol(3, 1, (2, 1, 1)) == ((0, 3), (1,), (1,))


def test_cyclic_group_symbols():
    for e in range(2, 7):
        assert protosymbol(1, 0, (2,) + (1,) * (e - 1)) == ((0, 1),) + ((0,),) * (e - 1)
        trivial = mp("1" + "|-" * (e - 1))
        assert str(symbol_of(trivial, 1, 0, Weight.b(e))) == "1" + "|-" * (e - 1)
        for i in range(1, e):
            comps = [()] * e
            comps[i] = (1,)
            rows = ["0,1"] + ["1" if k == i else "0" for k in range(1, e)]
            assert str(symbol_of(Multipartition(tuple(comps), e, 1), 1, 0, Weight.b(e))) == "|".join(rows)


def test_shift():
    assert Presymbol.parse("3|-|-", 3, 1).shift() == Presymbol.parse("0,6|1|1", 3, 1)
    assert Presymbol.parse("0,6|1|1", 3, 1).unshift() == Presymbol.parse("3|-|-", 3, 1)
    # the presymbol of ([2], -, [1]) is not a shift of anything smaller
    assert Presymbol.parse("0,5|1|2", 3, 1).unshift() is None


def test_symbol_examples():
    assert str(symbol_of(mp("3|-|-"), 3, 1, W100)) == "3|-|-"
    assert str(symbol_of(mp("2|-|1"), 3, 1, W100)) == "0,5|1|2"
    assert str(symbol_of(mp("1|1|1", 1, 3), 3, 0, Weight.d(3))) == "1|1|1"


def test_order_examples():
    assert precedes((0, 0), (2, 0))
    assert precedes((2, 0), (1, 0))
    assert precedes((1, 0), (0, 1))
    assert not precedes((1, 0), (2, 0))


def test_distinguished_examples():
    assert symbol_of(mp("3|-|-"), 3, 1, W100).is_distinguished()
    assert not symbol_of(mp("2|-|1"), 3, 1, W100).is_distinguished()


def test_similarity_class_example():
    syms = [symbol_of(mp(t), 3, 1, W100) for t in ("1|2|-", "-|3|-", "-|-|3")]
    assert [str(s) for s in syms] == ["0,4|3|1", "0,3|4|1", "0,3|1|4"]
    assert all(similar(a, b) for a in syms for b in syms)
    assert not similar(symbol_of(mp("3|-|-"), 3, 1, W100), symbol_of(mp("2|-|1"), 3, 1, W100))


def test_trivial_statistics():
    for e in range(1, 4):
        for n in range(4):
            triv = Multipartition(((n,) if n else (),) + ((),) * (e - 1), e, 1)
            for r, s in TYPES:
                sym = symbol_of(triv, r, s, Weight.b(e))
                assert sym.a_c() == 0 and sym.b_c() == 0


def sign_twist(e, n, k):
    comps = [()] * e
    comps[k] = (1,) * n
    return Multipartition(tuple(comps), e, 1)


def test_sign_twist_b_c():
    assert symbol_of(sign_twist(3, 2, 1), 1, 0, Weight.b(3)).b_c() == 5
    for e in range(1, 5):
        for n in range(1, 5):
            for k in range(e):
                got = symbol_of(sign_twist(e, n, k), 1, 0, Weight.b(e)).b_c()
                assert got == k * n + e * (n * n - n) // 2


def ge1n_label():
    return st.tuples(st.integers(1, 4), st.integers(0, 5)).flatmap(
        lambda en: st.sampled_from(enumerate_multipartitions(GroupSpec(en[0], 1, en[1]), None))
    )


@given(ge1n_label(), st.sampled_from(TYPES))
def test_a_c_at_most_b_c(alpha, rs):
    sym = symbol_of(alpha, *rs, Weight.b(alpha.m))
    a, b = sym.a_c(), sym.b_c()
    assert a <= b
    assert (a == b) == sym.is_distinguished()


@given(ge1n_label(), st.sampled_from(TYPES), st.integers(1, 3))
def test_statistics_stable_under_shift(alpha, rs, depth):
    sym = symbol_of(alpha, *rs, Weight.b(alpha.m))
    deeper = sym.presymbol(extra=depth)
    assert deeper == sym.presymbol().shifted(depth)
    assert deeper.a_c() == sym.a_c() and deeper.b_c() == sym.b_c()
    assert deeper.is_monotone() == sym.presymbol().is_monotone()


@given(ge1n_label())
def test_b_c_independent_of_type(alpha):
    lengths = Weight.b(alpha.m).lengths(alpha)
    values = {presymbol_of(alpha, r, s, lengths).b_c() for r, s in TYPES}
    assert len(values) == 1


def test_statistics_independent_of_representative():
    for e in (2, 3, 4):
        for n in range(1, 5):
            for orbit in enumerate_orbits(GroupSpec(1, e, n), None):
                for r in (1, 2, 3):
                    reps = symbol_of(orbit, r, 0, Weight.d(e)).representatives()
                    assert len({p.a_c() for p in reps}) == 1


def test_b_c_depends_on_rotation_representative():
    reps = symbol_of(mp("-|1", 1, 2), 1, 0, Weight.d(2)).representatives()
    assert sorted(p.b_c() for p in reps) == [0, 1]


def test_weight_must_match_group():
    with pytest.raises(ValueError):
        symbol_of(mp("1|1"), 1, 0, Weight.parse("1,0,0"))
    with pytest.raises(ValueError):
        symbol_of(mp("1|-|-|1", 2, 2), 1, 0, Weight.parse("1,0,0,1"))
