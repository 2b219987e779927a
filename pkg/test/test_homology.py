import pytest

from superhc.utils.catalog import BUILTINS, builtin
from superhc.utils.exactlin import FieldSpec
from superhc.utils.supercat import to_superalgebra
from superhc.utils.homology import (
    agreement_in_degree_zero,
    commutator_quotient_dim,
    graded_center,
    hochschild_cohomology,
    hochschild_homology,
)


# --- Hochschild homology ---

@pytest.mark.parametrize("normalized", [True, False])
def test_point_homology(point, normalized):
    assert hochschild_homology(point, 3, normalized=normalized).dims == [1, 0, 0, 0]

def test_clifford_homology(clifford1):
    assert hochschild_homology(clifford1, 3, normalized=True).dims == [1, 0, 0, 0]

def test_dual_even_homology(dual_even):
    assert hochschild_homology(dual_even, 3, normalized=True).dims == [2, 1, 1, 1]

def test_dual_even_full_complex_agrees(dual_even):
    assert hochschild_homology(dual_even, 2).dims == [2, 1, 1]

def test_dual_odd_homology(dual_odd):
    assert hochschild_homology(dual_odd, 3, normalized=True).dims == [2, 2, 2, 2]

def test_arrow_homology(arrow):
    assert hochschild_homology(arrow, 3, normalized=True).dims == [2, 0, 0, 0]

def test_kz2_homology():
    assert hochschild_homology(builtin("kz2"), 2, normalized=True).dims == [2, 0, 0]

def test_mat11_homology():
    assert hochschild_homology(builtin("mat11"), 2, normalized=True).dims == [1, 0, 0]

def test_dual_even_over_prime_field():
    # 2 is invertible mod 5, so the answer matches QQ
    cat = builtin("dual_even", FieldSpec.prime(5))
    assert hochschild_homology(cat, 2, normalized=True).dims == [2, 1, 1]

def test_result_marks_truncation(point):
    result = hochschild_homology(point, 2)
    assert result.truncated_degree == 2
    assert result.nmax == 2
    assert result[0] == 1
    assert result.method == "full"
    assert result.to_dict()["chain_dims"] == [1, 1, 1]

def test_representatives_match_dimensions(dual_even):
    result = hochschild_homology(dual_even, 2, normalized=True, with_representatives=True)
    assert [len(r.representatives) for r in result.representatives] == result.dims


# --- Hochschild cohomology ---

def test_point_cohomology(point):
    assert hochschild_cohomology(point, 3).dims == [1, 0, 0, 0]

def test_clifford_cohomology_degree_zero(clifford1):
    assert hochschild_cohomology(clifford1, 1).dims[0] == 1

def test_arrow_cohomology(arrow):
    assert hochschild_cohomology(arrow, 2).dims == [1, 0, 0]

def test_dual_even_cohomology(dual_even):
    assert hochschild_cohomology(dual_even, 2).dims[:2] == [2, 1]


# --- degree-0 shortcuts ---

def test_commutator_quotient_clifford(clifford1):
    result = commutator_quotient_dim(clifford1)
    assert result.dimension == 1
    assert result.basis == [{"x": clifford1.K.one}]

def test_graded_center_clifford(clifford1):
    assert graded_center(clifford1).dimension == 1

def test_graded_center_dual_odd(dual_odd):
    assert graded_center(dual_odd).dimension == 2

def test_arrow_degree_zero(arrow):
    assert commutator_quotient_dim(arrow).dimension == 2
    assert graded_center(arrow).dimension == 1

@pytest.mark.parametrize("name", list(BUILTINS))
def test_degree_zero_agreement(name):
    for complex_dim, shortcut_dim in agreement_in_degree_zero(builtin(name)).values():
        assert complex_dim == shortcut_dim


# --- category against its superalgebra ---

@pytest.mark.parametrize("name", ["arrow", "arrow_odd"])
def test_superalgebra_has_same_homology(name):
    cat = builtin(name)
    alg = to_superalgebra(cat)
    assert hochschild_homology(alg, 3).dims == hochschild_homology(cat, 3).dims
    assert hochschild_cohomology(alg, 2).dims == hochschild_cohomology(cat, 2).dims
