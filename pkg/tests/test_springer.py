import pytest
from hypothesis import given
from hypothesis import strategies as st

from spets_kit.cyclotomic import CycNum
from spets_kit.invariants import b_value, fake_degree, irreps, is_special
from spets_kit.partitions import GroupSpec
from spets_kit.springer import (
    DihedralLabel,
    DihedralSubgroup,
    Lattice,
    Reflection,
    block_pattern_cases,
    classify_dihedral_reflections,
    denominator_order,
    dihedral_irrep_dimension,
    dihedral_irrep_orbit,
    dihedral_irreps,
    dihedral_j_induce,
    dihedral_pseudoparabolics,
    dihedral_springer,
    dihedral_springer_formula,
    dihedral_stabilizer,
    dihedral_witness,
    identify_reflection_subgroup,
    in_lattice,
    lemma_reflection_group,
    predicted_reflections,
    pseudoparabolics,
    reflections,
    springer_reps,
    springer_reps_from_shapes,
    springer_type,
    stabilizer_reflections,
)

L1, L2, L0 = Lattice.L1, Lattice.L2, Lattice.L0


def chi(text):
    return DihedralLabel.parse(text)


def test_lattice_membership():
    one, zero = CycNum.rational(2, 1), CycNum.zero(2)
    assert in_lattice([zero, zero], L1) and in_lattice([zero, zero], L2)
    assert in_lattice([one, zero], L1) and not in_lattice([one, zero], L2)
    assert in_lattice([one, one], L2)
    # 1 - zeta is a unit for e = 6, so L2 = L1
    assert in_lattice([CycNum.rational(6, 1), CycNum.zero(6)], L2)


def test_stabilizer_examples():
    half = CycNum.rational(2, 1) / 2
    got = stabilizer_reflections([half, half], L2)
    assert got == {Reflection(False, 0, 1, 0), Reflection(False, 0, 1, 1)}
    z = CycNum.root(3)
    x = 1 / (1 - z)
    assert stabilizer_reflections([x, x], L1) == set(reflections(3, 2))
    zero = CycNum.zero(4)
    assert stabilizer_reflections([zero, zero, zero], L2) == set(reflections(4, 3))


def test_denominator_order():
    z = CycNum.root(4)
    assert denominator_order(CycNum.zero(4)) is None
    assert denominator_order(1 / (1 - z)) == 1
    assert denominator_order(1 / (1 - z * z)) == 2
    assert denominator_order(CycNum.rational(4, 1) / 7) == 4


@pytest.mark.parametrize("e", [2, 3, 4])
@pytest.mark.parametrize("n", [2, 3])
def test_block_lemma(e, n):
    for point, blocks, orders, _ in block_pattern_cases(e, n):
        for lattice in (L1, L2):
            got = stabilizer_reflections(point, lattice)
            assert got == predicted_reflections(blocks, orders, e, lattice)
            if len(blocks) == 1:
                assert identify_reflection_subgroup(got, e, n) == [lemma_reflection_group(orders[0], e, n, lattice)]


def test_springer_types():
    assert springer_type(GroupSpec(4, 1, 3), L1) == (2, 0)
    assert springer_type(GroupSpec(4, 1, 3), L2) == (2, 1)
    assert springer_type(GroupSpec(6, 1, 3), L2) == (1, 0)
    assert springer_type(GroupSpec(1, 3, 3), L2) == (3, 0)
    assert springer_type(GroupSpec(1, 6, 3), L1) == (1, 0)


def test_pseudoparabolic_tables():
    shapes = {str(s) for s in pseudoparabolics(GroupSpec(2, 1, 3), L1)}
    assert "G(2,1,2) x G(2,1,1)" in shapes and "G(2,2,3)" not in shapes
    assert {str(s) for s in pseudoparabolics(GroupSpec(6, 1, 2), L1)} == {"S1 x S1", "S2", "G(6,1,1) x S1", "G(6,1,2)"}
    assert [str(s) for s in pseudoparabolics(GroupSpec(4, 1, 0), L1)] == ["1"]


def test_unsupported_tables():
    with pytest.raises(ValueError):
        pseudoparabolics(GroupSpec(2, 2, 2), L1)
    with pytest.raises(ValueError):
        springer_reps(GroupSpec(1, 3, 3), L1)


def test_springer_reps_examples():
    g = GroupSpec(6, 1, 2)
    specials = {x for x in irreps(g) if is_special(x.orbit)}
    assert springer_reps(g, L1) == specials == springer_reps(g, L2)
    starred = {"-|-|3", "-|-|2,1", "-|-|1,1,1", "-|1,1|1", "-|2|1", "1|1|1"}
    assert {str(x.orbit) for x in springer_reps(GroupSpec(1, 3, 3), L2)} == starred


def test_springer_reps_from_pseudoparabolics():
    for e in range(1, 7):
        for n in range(4):
            for lattice in (L1, L2):
                if e > 1 and lattice is L2 and e not in (2, 3, 4, 5):
                    continue
                g = GroupSpec(e, 1, n)
                reps = springer_reps(g, lattice)
                assert reps == springer_reps_from_shapes(g, lattice)
                assert {x for x in irreps(g, None) if is_special(x.orbit)} <= reps
    for e in (2, 3, 4):
        g = GroupSpec(1, e, 3)
        assert springer_reps(g, L2) == springer_reps_from_shapes(g, L2)


def test_dihedral_irreps():
    assert [str(x) for x in dihedral_irreps(6)] == ["χ0", "χ1", "χ2", "χ3", "χ3'", "χ6"]
    assert [str(x) for x in dihedral_irreps(3)] == ["χ0", "χ1", "χ3"]
    assert len(dihedral_irreps(2)) == 4


def test_dihedral_labels_match_multipartitions():
    for e in range(2, 10):
        for label in dihedral_irreps(e):
            orbit, _ = dihedral_irrep_orbit(e, label)
            assert b_value(orbit) == label.b
            assert orbit.component_dimension() == dihedral_irrep_dimension(e, label)


def test_dihedral_induction():
    assert dihedral_j_induce(3, 6, False, chi("χ3")) == chi("χ3")
    assert dihedral_j_induce(3, 6, True, chi("χ3")) == chi("χ3'")
    assert dihedral_j_induce(6, 6, False, chi("χ1")) == chi("χ1")


def test_dihedral_springer_examples():
    assert {str(x) for x in dihedral_pseudoparabolics(6)} == {"G(1,1,2)", "G'(1,1,2)", "G(2,2,2)", "G(3,3,2)"}
    assert {str(x) for x in dihedral_springer(6)} == {"χ0", "χ1", "χ2", "χ3", "χ6"}
    assert {str(x) for x in dihedral_springer(4)} == {"χ0", "χ1", "χ2", "χ4"}
    assert dihedral_springer(2) == set(dihedral_irreps(2))


@pytest.mark.parametrize("e", range(3, 13))
def test_dihedral_witnesses(e):
    for sub in dihedral_pseudoparabolics(e, include_whole=True):
        point = dihedral_witness(e, sub)
        indices = dihedral_stabilizer(point)
        assert indices == sub.reflection_indices(e)
        assert classify_dihedral_reflections(indices, e) == sub
    assert dihedral_springer(e) == dihedral_springer_formula(e)


def test_dihedral_witness_needs_e_above_2():
    with pytest.raises(ValueError):
        dihedral_witness(2, DihedralSubgroup(1, False))


@given(st.text(min_size=1, max_size=4))
def test_lattice_parse_errors(text):
    if text.strip().upper() in ("L0", "L1", "L2"):
        return
    with pytest.raises(ValueError):
        Lattice.parse(text)


@pytest.mark.parametrize("e", [3, 4, 5, 6, 7, 8, 12])
def test_dihedral_search_matches_classification(e):
    from spets_kit.springer import dihedral_pseudoparabolics_by_search

    assert dihedral_pseudoparabolics_by_search(e) == set(dihedral_pseudoparabolics(e, include_whole=True))
