import pytest

from superhc.config import (
    error_check_config,
    get_nested,
    is_enabled,
    validate_steps,
    validate_top_level,
)


def minimal_config(tmp_path):
    return {
        "categories": ["@point", "@clifford1"],
        "field": "QQ",
        "max_degree": 2,
        "output_dir": str(tmp_path),
        "threads": 1,
    }


def check_top_level(cfg):
    errors, warnings = [], []
    validate_top_level(cfg, errors, warnings)
    return errors, warnings


def check_steps(cfg):
    errors, warnings = [], []
    validate_steps(cfg, errors, warnings)
    return errors, warnings


# --- get_nested ---

def test_get_nested_simple():
    assert get_nested({"a": {"b": 1}}, "a", "b") == 1

def test_get_nested_missing():
    assert get_nested({"a": {}}, "a", "b") is None

def test_get_nested_through_non_dict():
    assert get_nested({"a": 3}, "a", "b") is None


# --- is_enabled ---

def test_is_enabled_true():
    assert is_enabled({"cyclic": {"run": True}}, ("cyclic",)) is True

def test_is_enabled_false():
    assert is_enabled({"cyclic": {"run": False}}, ("cyclic",)) is False

def test_is_enabled_truthy_string_is_not_enough():
    assert is_enabled({"cyclic": {"run": "yes"}}, ("cyclic",)) is False

def test_is_enabled_missing():
    assert is_enabled({}, ("cyclic",)) is False


# --- validate_top_level ---

def test_validate_top_level_ok(tmp_path):
    errors, warnings = check_top_level(minimal_config(tmp_path))
    assert errors == []

def test_validate_top_level_missing_field(tmp_path):
    cfg = minimal_config(tmp_path)
    del cfg["max_degree"]
    errors, _ = check_top_level(cfg)
    assert any("max_degree" in e for e in errors)

def test_validate_top_level_wrong_type(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["threads"] = "four"
    errors, _ = check_top_level(cfg)
    assert any("threads" in e for e in errors)

def test_validate_top_level_bool_is_not_int(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["max_degree"] = True
    errors, _ = check_top_level(cfg)
    assert any("max_degree" in e for e in errors)

def test_validate_top_level_negative_degree(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["max_degree"] = -1
    errors, _ = check_top_level(cfg)
    assert any("non-negative" in e for e in errors)

@pytest.mark.parametrize("field", ["QQ", "GF(3)", "GF(101)"])
def test_validate_top_level_fields_ok(tmp_path, field):
    cfg = minimal_config(tmp_path)
    cfg["field"] = field
    assert check_top_level(cfg)[0] == []

@pytest.mark.parametrize("field", ["GF(4)", "GF(2)", "RR"])
def test_validate_top_level_bad_field(tmp_path, field):
    cfg = minimal_config(tmp_path)
    cfg["field"] = field
    assert check_top_level(cfg)[0] != []

def test_validate_top_level_bad_method(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["method"] = "spectral"
    errors, _ = check_top_level(cfg)
    assert any("method" in e for e in errors)

def test_validate_top_level_unknown_builtin(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["categories"] = ["@nope"]
    errors, _ = check_top_level(cfg)
    assert any("Unknown builtin" in e for e in errors)

def test_validate_top_level_missing_file(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["categories"] = [str(tmp_path / "missing.yaml")]
    errors, _ = check_top_level(cfg)
    assert any("File not found" in e for e in errors)

def test_validate_top_level_existing_file(tmp_path):
    cat = tmp_path / "cat.yaml"
    cat.touch()
    cfg = minimal_config(tmp_path)
    cfg["categories"] = [str(cat)]
    assert check_top_level(cfg)[0] == []

def test_validate_top_level_empty_categories_warns(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["categories"] = []
    errors, warnings = check_top_level(cfg)
    assert errors == []
    assert any("empty" in w for w in warnings)


# --- validate_steps ---

def test_validate_steps_disabled_steps_are_skipped(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["ez"] = {"run": False}
    assert check_steps(cfg) == ([], [])

def test_validate_steps_defaults_warn(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["hochschild"] = {"run": True}
    errors, warnings = check_steps(cfg)
    assert errors == []
    assert any("hochschild.normalized" in w for w in warnings)

def test_validate_steps_pairs_required(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["kunneth"] = {"run": True}
    errors, _ = check_steps(cfg)
    assert "kunneth.pairs not set." in errors

def test_validate_steps_pairs_ok(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["ez"] = {"run": True, "pairs": [["@dual_even", "@dual_even"]]}
    assert check_steps(cfg)[0] == []

def test_validate_steps_pair_shape(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["ez"] = {"run": True, "pairs": [["@point"]]}
    errors, _ = check_steps(cfg)
    assert any("ez.pairs[0]" in e for e in errors)

def test_validate_steps_pairs_not_list(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["identities"] = {"run": True, "pairs": "@point"}
    errors, _ = check_steps(cfg)
    assert any("list of [A, B] pairs" in e for e in errors)

def test_validate_steps_pair_unknown_builtin(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["identities"] = {"run": True, "pairs": [["@point", "@nope"]]}
    errors, _ = check_steps(cfg)
    assert any("identities.pairs[0][1]" in e for e in errors)


# --- error_check_config ---

def test_error_check_config_ok(tmp_path):
    error_check_config(minimal_config(tmp_path), None)

def test_error_check_config_raises(tmp_path):
    cfg = minimal_config(tmp_path)
    del cfg["categories"]
    with pytest.raises(ValueError, match="config error"):
        error_check_config(cfg, None)

def test_error_check_config_not_mapping():
    with pytest.raises(ValueError, match="mapping"):
        error_check_config(["categories"], None)

def test_error_check_config_warnings_do_not_raise(tmp_path):
    cfg = minimal_config(tmp_path)
    cfg["cyclic"] = {"run": True}
    error_check_config(cfg, None)
