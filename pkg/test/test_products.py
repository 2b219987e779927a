import pytest

from superhc.utils.catalog import BUILTINS, builtin
from superhc.utils.products import (
    IDENTITIES,
    ProductContext,
    ez_check,
    kunneth_check,
    resolve_convention,
    shuffle_associativity,
    shuffle_product,
    verify_chain_identities,
)
from superhc.utils.products_dir import (
    CONVENTIONS,
    CYCLIC_SHUFFLE,
    DEFAULT_CONVENTION,
    SignConvention,
    enumerate_shuffles,
    graded_sign,
)


# --- enumerate_shuffles ---

def test_shuffle_count():
    assert len(enumerate_shuffles(2, 1)) == 3
    assert len(enumerate_shuffles(2, 2)) == 6

def test_shuffle_signs():
    assert sorted(s.sign for s in enumerate_shuffles(1, 1)) == [-1, 1]

def test_shuffles_keep_block_order():
    for s in enumerate_shuffles(2, 2):
        arr = list(s.arrangement)
        assert arr.index(1) < arr.index(2)
        assert arr.index(3) < arr.index(4)

def test_empty_block_has_one_shuffle():
    assert [s.arrangement for s in enumerate_shuffles(0, 2)] == [(1, 2)]

def test_cyclic_shuffle_of_singletons():
    assert len(enumerate_shuffles(1, 1, CYCLIC_SHUFFLE)) == 1

def test_cyclic_shuffles_put_first_label_before_second_block():
    for s in enumerate_shuffles(2, 3, CYCLIC_SHUFFLE):
        arr = list(s.arrangement)
        assert arr.index(1) < arr.index(3)

def test_cyclic_shuffles_are_distinct():
    arrangements = [s.arrangement for s in enumerate_shuffles(2, 2, CYCLIC_SHUFFLE)]
    assert len(arrangements) == len(set(arrangements))

def test_permutation_one_line_notation():
    swap = [s for s in enumerate_shuffles(1, 1) if s.arrangement == (2, 1)][0]
    assert swap.permutation == (2, 1)

def test_shuffle_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_shuffles(-1, 1)

def test_shuffle_rejects_unknown_kind():
    with pytest.raises(ValueError, match="Unknown shuffle kind"):
        enumerate_shuffles(1, 1, "riffle")


# --- graded_sign ---

def swap():
    return [s for s in enumerate_shuffles(1, 1) if s.arrangement == (2, 1)][0]

def test_graded_sign_odd_swap():
    assert graded_sign(swap(), [1, 1]) == 1

def test_graded_sign_even_swap():
    assert graded_sign(swap(), [0, 0]) == -1

def test_graded_sign_mixed_swap():
    assert graded_sign(swap(), [1, 0]) == -1

def test_graded_sign_length_mismatch():
    with pytest.raises(ValueError, match="parities"):
        graded_sign(swap(), [1])


# --- SignConvention ---

def test_default_convention_name():
    assert DEFAULT_CONVENTION.name == "koszul-homological"

def test_parse_round_trip():
    for conv in CONVENTIONS:
        assert SignConvention.parse(conv.name) == conv

def test_parse_bare_source():
    assert SignConvention.parse("total") == SignConvention("total", True)

def test_parse_rejects_unknown():
    with pytest.raises(ValueError):
        SignConvention.parse("bogus")
    with pytest.raises(ValueError, match="prefix"):
        SignConvention.parse("weird-parity")

def test_convention_degree():
    assert SignConvention("total").degree(2, 1) == 3
    assert SignConvention("parity").degree(2, 1) == 1

def test_unknown_degree_source():
    with pytest.raises(ValueError):
        SignConvention("cohomological")

def test_resolver_order_starts_with_default():
    assert len(CONVENTIONS) == 6
    assert CONVENTIONS[0] == DEFAULT_CONVENTION


# --- shuffle_product ---

def test_sh_of_units_is_unit(point):
    K = point.K
    assert shuffle_product(point, point, {(0,): K.one}, {(0,): K.one}) == {(0,): K.one}

def test_sh_of_degree_one_chains(dual_even):
    K = dual_even.K
    # tensor basis: 1⊗1, 1⊗e, e⊗1, e⊗e
    out = shuffle_product(dual_even, dual_even, {(0, 1): K.one}, {(0, 1): K.one})
    assert out == {(0, 2, 1): K.one, (0, 1, 2): -K.one}

def test_sh_koszul_sign_on_odd_heads(dual_odd):
    K = dual_odd.K
    a = {(1,): K.one}
    assert shuffle_product(dual_odd, dual_odd, a, a) == {(3,): -K.one}
    plain = SignConvention.parse("plain-homological")
    assert shuffle_product(dual_odd, dual_odd, a, a, conv=plain) == {(3,): K.one}

def test_csh_of_degree_zero_chains(dual_even):
    K = dual_even.K
    out = shuffle_product(dual_even, dual_even, {(1,): K.one}, {(1,): K.one}, kind="csh")
    assert out == {(0, 2, 1): K.one}

def test_sh_lands_in_tensor_category(clifford1, arrow):
    ctx = ProductContext(clifford1, arrow)
    K = ctx.K
    out = shuffle_product(clifford1, arrow, {(1, 1): K.one}, {(0,): K.one}, ctx=ctx)
    assert all(len(chain) == 2 for chain in out)
    assert all(0 <= i < ctx.t.dimension for chain in out for i in chain)

def test_shuffle_product_unknown_kind(point):
    K = point.K
    with pytest.raises(ValueError, match="Unknown product"):
        shuffle_product(point, point, {(0,): K.one}, {(0,): K.one}, kind="cup")

def test_shuffle_product_mixed_degrees(point):
    K = point.K
    with pytest.raises(ValueError, match="mixes chain degrees"):
        shuffle_product(point, point, {(0,): K.one, (0, 0): K.one}, {(0,): K.one})


# --- chain identities ---

def test_identities_hold_for_points(point):
    report = verify_chain_identities(point, point, 3)
    assert report.holds
    assert set(report.checked) == set(IDENTITIES)

@pytest.mark.parametrize("pair", [("dual_even", "dual_even"), ("arrow", "dual_even")])
def test_identities_hold_trivially_graded(pair):
    a, b = (builtin(name) for name in pair)
    assert verify_chain_identities(a, b, 2).holds

def test_identities_hold_for_clifford(clifford1):
    report = verify_chain_identities(clifford1, clifford1, 2)
    assert report.holds, report.to_dict()

def test_plain_shuffle_breaks_boundary_identity(clifford1):
    report = verify_chain_identities(clifford1, clifford1, 2, SignConvention.parse("plain-homological"))
    assert not report.holds
    assert report.failures["[d,sh]"] > 0
    failure = report.first_failure["[d,sh]"]
    assert (failure.p, failure.q) == (0, 1)
    assert failure.witness == "(x) ⊗ (x, x)"

def test_sampling_is_seeded(clifford1):
    first = verify_chain_identities(clifford1, clifford1, 2, sample=3, seed=7)
    second = verify_chain_identities(clifford1, clifford1, 2, sample=3, seed=7)
    assert first.to_dict() == second.to_dict()
    assert first.checked["[d,sh]"] == 3 + 3 + 3

def test_resolver_selects_default_for_even_factors(dual_even):
    resolution = resolve_convention(dual_even, dual_even, 2)
    assert resolution.selected == "koszul-homological"
    assert resolution.to_dict()["selected"] == "koszul-homological"

@pytest.mark.slow
def test_resolver_selects_a_convention_for_odd_factors(dual_odd, clifford1):
    resolution = resolve_convention(dual_odd, clifford1, 2)
    assert resolution.selected is not None
    assert resolution.reports[resolution.selected].holds

def test_resolver_keeps_witnesses(clifford1):
    resolution = resolve_convention(clifford1, clifford1, 2)
    plain = resolution.reports["plain-homological"]
    assert not plain.holds
    assert plain.first_failure

@pytest.mark.slow
@pytest.mark.parametrize("a", list(BUILTINS))
@pytest.mark.parametrize("b", list(BUILTINS))
def test_identities_hold_for_all_builtin_pairs(a, b):
    report = verify_chain_identities(builtin(a), builtin(b), 2)
    assert report.holds, report.to_dict()

@pytest.mark.slow
@pytest.mark.parametrize(
    "pair",
    [("clifford1", "clifford1"), ("dual_odd", "clifford1"), ("arrow_odd", "dual_odd"), ("mat11", "clifford1")],
)
def test_identities_hold_for_odd_pairs_to_degree_four(pair):
    a, b = (builtin(name) for name in pair)
    report = verify_chain_identities(a, b, 4)
    assert report.holds, report.to_dict()
    assert all(report.checked[name] > 0 for name in IDENTITIES)


# --- associativity ---

def test_sh_is_associative_on_even_categories(point, dual_even, arrow):
    assert shuffle_associativity(dual_even, arrow, point, max_degree=2) == []
    assert shuffle_associativity(dual_even, dual_even, dual_even, max_degree=2) == []


# --- Eilenberg–Zilber ---

SMALL_FACTORS = ["point", "dual_even", "dual_odd", "clifford1"]

def test_ez_dual_numbers(dual_even):
    report = ez_check(dual_even, dual_even, 3)
    assert report.expected == [4, 4, 5, 6]
    assert report.holds, report.to_dict()

def test_ez_points(point):
    report = ez_check(point, point, 2)
    assert report.tensor_dims == [1, 0, 0]
    assert report.sh_ranks == [1, 0, 0]

@pytest.mark.slow
@pytest.mark.parametrize("a", SMALL_FACTORS)
@pytest.mark.parametrize("b", SMALL_FACTORS)
def test_ez_holds_for_small_factors(a, b):
    report = ez_check(builtin(a), builtin(b), 3)
    assert report.tensor_dims == report.expected, report.to_dict()
    # sh is onto HH(A⊗B)
    assert report.sh_ranks == report.expected, report.to_dict()


# --- Künneth ---

def test_kunneth_points(point):
    report = kunneth_check(point, point, 2)
    assert report.tensor_dims == [1, 0, 1]
    assert report.kernel_dims == [1, 0, 1]
    assert report.cokernel_dims == [0, 0, 0]
    assert report.holds

def test_kunneth_points_to_degree_three(point):
    assert kunneth_check(point, point, 3).tensor_dims == [1, 0, 1, 0]

def test_kunneth_report_dict(point):
    data = kunneth_check(point, point, 1).to_dict()
    assert data["predicted"] == data["tensor_dims"]
    assert data["holds"] is True

@pytest.mark.slow
def test_kunneth_arrow_and_point(arrow, point):
    assert kunneth_check(arrow, point, 2).holds

@pytest.mark.slow
def test_kunneth_odd_dual_numbers(dual_odd):
    report = kunneth_check(dual_odd, dual_odd, 3)
    assert report.tensor_dims == [4, 5, 8, 9]
    assert report.kernel_dims == [4, 4, 6, 6]
    assert report.cokernel_dims == [0, 1, 2, 3]

@pytest.mark.slow
@pytest.mark.parametrize("a", SMALL_FACTORS)
@pytest.mark.parametrize("b", SMALL_FACTORS)
def test_kunneth_holds_for_small_factors(a, b):
    report = kunneth_check(builtin(a), builtin(b), 3)
    assert report.holds, report.to_dict()
