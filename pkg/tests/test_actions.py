"""Diagonal actions: eigen structure, dimensions, symplectic type."""

from random import Random

import pytest

from cubic_k3 import (
    FAMILY_ACTIONS,
    FERMAT_CUBIC,
    KLEIN_CUBIC,
    CubicForm,
    DiagonalAutomorphism,
    eigen_class_sizes,
    eigen_decomposition,
    family_dimension,
    family_dimension_breakdown,
    fixed_locus_ambient,
    generic_member,
    is_eigenform,
    is_symplectic,
    monomial_basis,
    monomial_weight,
)


def test_constructor_reduces_weights():
    auto = DiagonalAutomorphism(3, (0, 0, 0, 0, 0, 4))
    assert auto.weights == (0, 0, 0, 0, 0, 1)
    assert DiagonalAutomorphism(2, (0, 0, 0, 0, 0, -1)).weights == (0, 0, 0, 0, 0, 1)


def test_constructor_validation():
    with pytest.raises(ValueError):
        DiagonalAutomorphism(0, (0, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        DiagonalAutomorphism(3, (0, 0, 0, 0, 0))


def test_projective_triviality_flag():
    assert DiagonalAutomorphism(1, (0, 0, 0, 0, 0, 0)).is_projectively_trivial
    assert DiagonalAutomorphism(2, (1, 1, 1, 1, 1, 1)).is_projectively_trivial
    assert not DiagonalAutomorphism(2, (0, 0, 0, 0, 0, 1)).is_projectively_trivial


def test_weight_multiplicities():
    auto, _ = FAMILY_ACTIONS["V3"]
    assert auto.weight_multiplicities == {0: 3, 1: 2, 2: 1}
    assert auto.determinant_weight == 1


def test_monomial_weight_examples():
    v2, _ = FAMILY_ACTIONS["V2"]
    assert monomial_weight((0, 0, 0, 0, 2, 1), v2) == 0
    assert monomial_weight((0, 0, 0, 0, 0, 3), v2) == 0
    assert monomial_weight((1, 0, 0, 0, 0, 2), v2) == 2
    v3, _ = FAMILY_ACTIONS["V3"]
    assert monomial_weight((1, 1, 1, 0, 0, 0), v3) == 0
    assert monomial_weight((0, 0, 0, 3, 0, 0), v3) == 0


def test_eigen_class_sizes_order_three():
    v1, _ = FAMILY_ACTIONS["V1"]
    assert eigen_class_sizes(v1)[0] == 36  # 35 cubics in x0..x4 plus x5^3
    v2, _ = FAMILY_ACTIONS["V2"]
    assert eigen_class_sizes(v2)[0] == 24  # 20 cubics in x0..x3 plus 4 in x4,x5
    v3, _ = FAMILY_ACTIONS["V3"]
    assert eigen_class_sizes(v3) == {0: 21, 1: 18, 2: 17}
    t1, _ = FAMILY_ACTIONS["F3_symp3"]
    assert eigen_class_sizes(t1) == {0: 26, 1: 15, 2: 15}
    t2, _ = FAMILY_ACTIONS["G3"]
    assert eigen_class_sizes(t2) == {0: 20, 1: 18, 2: 18}


def test_eigen_class_sizes_involutions():
    f1, _ = FAMILY_ACTIONS["F1"]
    f2, _ = FAMILY_ACTIONS["F2"]
    f3, _ = FAMILY_ACTIONS["F3_inv"]
    assert eigen_class_sizes(f1) == {0: 40, 1: 16}
    assert eigen_class_sizes(f2) == {0: 32, 1: 24}
    assert eigen_class_sizes(f3) == {0: 28, 1: 28}


def test_eigen_decomposition_partitions_basis():
    rng = Random(5)
    for _ in range(50):
        order = rng.randint(1, 12)
        auto = DiagonalAutomorphism(order, tuple(rng.randrange(order) for _ in range(6)))
        classes = eigen_decomposition(auto)
        assert sum(len(v) for v in classes.values()) == 56
        seen = [e for v in classes.values() for e in v]
        assert sorted(seen) == sorted(monomial_basis())
        assert all(0 <= k < order for k in classes)
        for k, monomials in classes.items():
            assert all(monomial_weight(e, auto) == k for e in monomials)


def test_identity_has_single_class():
    identity = DiagonalAutomorphism(1, (0, 0, 0, 0, 0, 0))
    assert eigen_class_sizes(identity) == {0: 56}


def test_is_eigenform():
    g3, _ = FAMILY_ACTIONS["G3"]
    assert is_eigenform(FERMAT_CUBIC, g3) == 0
    v4, k4 = FAMILY_ACTIONS["V4"]
    assert is_eigenform(generic_member(v4, k4), v4) == 1
    v1, _ = FAMILY_ACTIONS["V1"]
    mixed = CubicForm.from_coefficients({(3, 0, 0, 0, 0, 0): 1, (2, 0, 0, 0, 0, 1): 1})
    assert is_eigenform(mixed, v1) is None
    with pytest.raises(ValueError):
        is_eigenform(CubicForm.zero(), v1)


def test_klein_cubic_order_eleven_eigenform():
    # the Klein cubic admits a diagonal symmetry of order 11, acting
    # symplectically on the Fano variety of lines
    klein_auto = DiagonalAutomorphism(11, (1, 9, 4, 3, 5, 0))
    assert is_eigenform(KLEIN_CUBIC, klein_auto) == 0
    assert is_symplectic(klein_auto, 0)
    assert not klein_auto.is_projectively_trivial


def test_symplectic_verdicts_for_named_actions():
    expected = {
        "F1": False,
        "F2": True,
        "F3_inv": False,
        "V1": False,
        "V2": False,
        "V3": False,
        "V4": False,
        "F3_symp3": True,
        "G3": True,
    }
    for name, verdict in expected.items():
        auto, eigenvalue = FAMILY_ACTIONS[name]
        assert is_symplectic(auto, eigenvalue) == verdict, name


def test_symplectic_depends_on_eigenvalue():
    auto, _ = FAMILY_ACTIONS["G3"]  # weights sum to 6 = 0 mod 3
    assert is_symplectic(auto, 0)
    assert not is_symplectic(auto, 1)
    assert not is_symplectic(auto, 2)


def test_family_dimensions_for_named_actions():
    expected = {
        "F1": 14,
        "F2": 12,
        "F3_inv": 10,
        "V1": 10,
        "V2": 4,
        "V3": 7,
        "V4": 6,
        "F3_symp3": 8,
        "G3": 8,
    }
    for name, dimension in expected.items():
        auto, eigenvalue = FAMILY_ACTIONS[name]
        assert family_dimension(auto, eigenvalue) == dimension, name


def test_trivial_action_gives_full_moduli():
    identity = DiagonalAutomorphism(1, (0, 0, 0, 0, 0, 0))
    assert family_dimension(identity, 0) == 20  # 55 - 35


def test_dimension_breakdown():
    auto, eigenvalue = FAMILY_ACTIONS["V3"]
    breakdown = family_dimension_breakdown(auto, eigenvalue)
    assert breakdown.eigen_count == 21
    assert breakdown.stabilizer_blocks == 14  # 3^2 + 2^2 + 1^2
    assert breakdown.raw == breakdown.dimension == 7
    assert not breakdown.degenerate


def test_empty_eigenclass_clamps_to_zero():
    auto = DiagonalAutomorphism(100, (0, 0, 0, 0, 0, 1))
    breakdown = family_dimension_breakdown(auto, 50)
    assert breakdown.eigen_count == 0
    assert breakdown.raw == -26
    assert breakdown.dimension == 0
    assert breakdown.degenerate
    assert family_dimension(auto, 50) == 0


def test_eigenvalue_reduced_mod_order():
    auto, _ = FAMILY_ACTIONS["V3"]
    assert family_dimension(auto, 3) == family_dimension(auto, 0)


def test_fixed_locus_ambient_examples():
    f1, _ = FAMILY_ACTIONS["F1"]
    components = fixed_locus_ambient(f1)
    assert [(c.eigen_weight, c.ambient_dim, c.variables) for c in components] == [
        (0, 4, (0, 1, 2, 3, 4)),
        (1, 0, (5,)),
    ]
    v3, _ = FAMILY_ACTIONS["V3"]
    assert [(c.ambient_dim, c.variables) for c in fixed_locus_ambient(v3)] == [
        (2, (0, 1, 2)),
        (1, (3, 4)),
        (0, (5,)),
    ]


def test_fixed_locus_partitions_coordinates():
    rng = Random(11)
    for _ in range(50):
        order = rng.randint(1, 9)
        auto = DiagonalAutomorphism(order, tuple(rng.randrange(order) for _ in range(6)))
        components = fixed_locus_ambient(auto)
        assert sum(c.ambient_dim + 1 for c in components) == 6
        weights = [c.eigen_weight for c in components]
        assert weights == sorted(weights)
        everything = sorted(i for c in components for i in c.variables)
        assert everything == list(range(6))


def test_generic_member_spans_class():
    rng = Random(3)
    for name, (auto, eigenvalue) in FAMILY_ACTIONS.items():
        plain = generic_member(auto, eigenvalue)
        seeded = generic_member(auto, eigenvalue, rng)
        count = eigen_class_sizes(auto)[eigenvalue]
        assert len(plain.terms) == count, name
        assert len(seeded.terms) == count, name
        assert is_eigenform(plain, auto) == eigenvalue
        assert is_eigenform(seeded, auto) == eigenvalue


def test_generic_member_rejects_empty_class():
    auto = DiagonalAutomorphism(100, (0, 0, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        generic_member(auto, 50)
