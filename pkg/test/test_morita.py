import pytest

from superhc.utils.catalog import builtin
from superhc.utils.morita import (
    IDEMPOTENT_FRAGMENT,
    MAT_TRUNCATION,
    CompletionSpec,
    idempotent_fragment,
    invariance_report,
    mat_truncation,
    matrix_unit_id,
    sequence_name,
    theory_dims,
    truncation_size,
)
from superhc.utils.supercat import MorphismVector, hom_profile, to_superalgebra, validate


# --- naming ---

def test_sequence_name():
    assert sequence_name(["X", "Y"]) == "[X,Y]"

def test_matrix_unit_id():
    assert matrix_unit_id("a", 2, 1, "[X]", "[X,Y]") == "a[2,1][X]>[X,Y]"

def test_truncation_size():
    assert truncation_size(2, 2) == 6


# --- mat_truncation ---

def test_mat1_of_point(point):
    cat = mat_truncation(point, 1)
    assert cat.objects == ("[*]",)
    assert hom_profile(cat) == [[(1, 0)]]

def test_mat2_of_point(point):
    cat = mat_truncation(point, 2)
    assert cat.objects == ("[*]", "[*,*]")
    assert hom_profile(cat) == [[(1, 0), (2, 0)], [(2, 0), (4, 0)]]
    assert cat.name == "Mat2(point)"

def test_mat2_of_clifford_keeps_parity(clifford1):
    cat = mat_truncation(clifford1, 2)
    assert hom_profile(cat) == [[(1, 1), (2, 2)], [(2, 2), (4, 4)]]

def test_mat2_identity_is_rebased(point):
    cat = mat_truncation(point, 2)
    assert cat.identities["[*,*]"] == "1_[*,*]"
    assert cat.identities["[*]"] == matrix_unit_id("1", 1, 1, "[*]", "[*]")

def test_matrix_units_multiply(point):
    cat = mat_truncation(point, 2)
    e12 = matrix_unit_id("1", 1, 2, "[*,*]", "[*,*]")
    e21 = matrix_unit_id("1", 2, 1, "[*,*]", "[*,*]")
    e11 = matrix_unit_id("1", 1, 1, "[*,*]", "[*,*]")
    # e12 after e21 is e11
    assert cat.compose(e21, e12) == {e11: cat.K.one}

def test_mat_of_arrow_is_valid(arrow):
    cat = mat_truncation(arrow, 2)
    assert len(cat.objects) == 6
    assert validate(cat).valid

def test_mat_rejects_length_zero(point):
    with pytest.raises(ValueError, match="at least 1"):
        mat_truncation(point, 0)

def test_mat_enforces_object_bound(point):
    with pytest.raises(ValueError, match="bound 2"):
        mat_truncation(point, 3, max_objects=2)


# --- idempotent_fragment ---

def test_fragment_with_only_identities(arrow):
    frag = idempotent_fragment(arrow, [])
    assert hom_profile(frag) == hom_profile(arrow)

def test_fragment_of_arrow_algebra(arrow):
    alg = to_superalgebra(arrow)
    frag = idempotent_fragment(alg, [("*", {"1_X": 1})])
    assert frag.objects == ("*|1_*", "*|1_X")
    assert hom_profile(frag)[1][1] == (1, 0)

def test_fragment_splits_matrix_idempotent(point):
    mat = mat_truncation(point, 2)
    eps = MorphismVector("[*,*]", "[*,*]", {matrix_unit_id("1", 1, 1, "[*,*]", "[*,*]"): 1})
    frag = idempotent_fragment(mat, [eps])
    profile = hom_profile(frag)
    assert len(frag.objects) == 3
    assert profile[2][2] == (1, 0)
    assert profile[0][2] == (1, 0)
    assert profile[2][0] == (1, 0)

def test_fragment_skips_duplicate_identities(point):
    frag = idempotent_fragment(point, [("*", {"1": 1})])
    assert len(frag.objects) == 1

def test_fragment_rejects_odd(clifford1):
    with pytest.raises(ValueError, match="not even"):
        idempotent_fragment(clifford1, [("*", {"x": 1})])

def test_fragment_rejects_non_idempotent(dual_even):
    with pytest.raises(ValueError, match="ε·ε = ε"):
        idempotent_fragment(dual_even, [("*", {"e": 1})])

def test_fragment_rejects_zero(point):
    with pytest.raises(ValueError, match="is zero"):
        idempotent_fragment(point, [("*", {"1": 0})])

def test_fragment_rejects_unknown_object(point):
    with pytest.raises(ValueError, match="unknown object"):
        idempotent_fragment(point, [("Z", {"1": 1})])

def test_fragment_rejects_non_endomorphism(arrow):
    with pytest.raises(ValueError, match="not an endomorphism"):
        idempotent_fragment(arrow, [MorphismVector("X", "Y", {"a": 1})])


# --- CompletionSpec ---

def test_completion_spec_mat(point):
    cat = CompletionSpec(MAT_TRUNCATION, length=2).apply(point)
    assert len(cat.objects) == 2

def test_completion_spec_fragment(point):
    cat = CompletionSpec(IDEMPOTENT_FRAGMENT).apply(point)
    assert len(cat.objects) == 1

def test_completion_spec_rejects_kind():
    with pytest.raises(ValueError, match="Unknown completion kind"):
        CompletionSpec("karoubi")

def test_completion_spec_rejects_length():
    with pytest.raises(ValueError):
        CompletionSpec(MAT_TRUNCATION, length=0)


# --- invariance ---

def test_theory_dims_of_point(point):
    dims = theory_dims(point, 2)
    assert dims == {"HH": [1, 0, 0], "HH*": [1, 0, 0], "HC": [1, 0, 1], "HC*": [1, 0, 1]}

def test_invariance_mat2_point(point):
    report = invariance_report(point, mat_truncation(point, 2), 2)
    assert report.invariant, report.to_dict()
    assert report.to_dict()["right"] == "Mat2(point)"

def test_invariance_mat2_clifford_low_degree(clifford1):
    report = invariance_report(clifford1, mat_truncation(clifford1, 2), 1)
    assert report.invariant, report.to_dict()

@pytest.mark.slow
@pytest.mark.parametrize(
    "name, hc",
    [("clifford1", [1, 0, 1, 0]), ("dual_odd", [2, 1, 2, 1]), ("arrow", [2, 0, 2, 0])],
)
def test_invariance_under_mat2(name, hc):
    cat = builtin(name)
    report = invariance_report(cat, mat_truncation(cat, 2), 3)
    assert report.invariant, report.to_dict()
    assert report.dims["HC"] == (hc, hc)

@pytest.mark.slow
@pytest.mark.parametrize("name", ["clifford1", "dual_odd"])
def test_invariance_when_splitting_a_matrix_idempotent(name):
    cat = builtin(name)
    mat = mat_truncation(cat, 2)
    unit = cat.identities["*"]
    e11 = MorphismVector("[*,*]", "[*,*]", {matrix_unit_id(unit, 1, 1, "[*,*]", "[*,*]"): 1})
    frag = idempotent_fragment(mat, [e11])
    assert len(frag.objects) == 3
    report = invariance_report(cat, frag, 3)
    assert report.invariant, report.to_dict()

@pytest.mark.parametrize("name", ["clifford1", "dual_odd", "arrow"])
def test_invariance_under_identity_fragment(name):
    cat = builtin(name)
    assert invariance_report(cat, idempotent_fragment(cat, []), 3).invariant

@pytest.mark.slow
def test_invariance_idempotent_fragment_of_arrow_algebra(arrow):
    alg = to_superalgebra(arrow)
    frag = idempotent_fragment(alg, [("*", {"1_X": 1})])
    report = invariance_report(alg, frag, 3)
    assert report.invariant, report.to_dict()
    assert invariance_report(arrow, frag, 3).invariant

def test_invariance_reports_mismatches(point, dual_even):
    report = invariance_report(point, dual_even, 1)
    assert not report.invariant
    assert report.mismatches["HH"] == [0, 1]
