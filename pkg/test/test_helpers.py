import json

import pytest
import yaml
from rich.console import Console

from superhc.utils.catalog import BUILTINS, builtin
from superhc.utils.exactlin import FieldSpec
from superhc.utils.helper_dir import (
    CategoryFileError,
    RunReport,
    category_digest,
    display_dimensions,
    display_rows,
    load_category_file,
    load_idempotents,
    parse_category,
    resolve_category,
    serialize_category,
    write_category_file,
    write_report,
)


def clifford_data(**extra):
    data = {
        "name": "cl",
        "field": "QQ",
        "objects": ["*"],
        "morphisms": [
            {"id": "1", "source": "*", "target": "*", "parity": 0},
            {"id": "x", "source": "*", "target": "*", "parity": 1},
        ],
        "identities": {"*": "1"},
        "composition": [{"first": "x", "then": "x", "result": {"1": "1"}}],
    }
    data.update(extra)
    return data


# --- CategoryFileError ---

def test_error_message_has_location():
    err = CategoryFileError("bad", "cat.yaml", "objects")
    assert str(err) == "cat.yaml:objects: bad"
    assert err.field == "objects"

def test_error_without_location():
    assert str(CategoryFileError("bad")) == "bad"

def test_error_is_value_error():
    assert issubclass(CategoryFileError, ValueError)


# --- parse_category ---

def test_parse_clifford():
    cat = parse_category(clifford_data())
    assert cat.name == "cl"
    assert cat.compose("x", "x") == {"1": cat.K.one}

def test_parse_field_override():
    cat = parse_category(clifford_data(), field="GF(5)")
    assert cat.field == FieldSpec.prime(5)

def test_parse_fraction_mod_p():
    data = clifford_data(composition=[{"first": "x", "then": "x", "result": {"1": "1/3"}}])
    cat = parse_category(data, field="GF(5)")
    assert cat.compose("x", "x") == {"1": cat.K(2)}

def test_parse_rejects_unknown_top_level_field():
    with pytest.raises(CategoryFileError, match="unknown field"):
        parse_category(clifford_data(colour="red"))

def test_parse_requires_objects():
    data = clifford_data()
    del data["objects"]
    with pytest.raises(CategoryFileError) as exc:
        parse_category(data)
    assert exc.value.field == "objects"

def test_parse_missing_identity_names_object():
    data = clifford_data(identities={})
    with pytest.raises(CategoryFileError, match="object '\\*' has no identity") as exc:
        parse_category(data, path="cl.yaml")
    assert exc.value.field == "identities.*"
    assert exc.value.path == "cl.yaml"

def test_parse_rejects_float_coefficient():
    data = clifford_data(composition=[{"first": "x", "then": "x", "result": {"1": 0.5}}])
    with pytest.raises(CategoryFileError) as exc:
        parse_category(data)
    assert exc.value.field == "composition[0].result.1"

def test_parse_rejects_bad_parity():
    data = clifford_data()
    data["morphisms"][1]["parity"] = 2
    with pytest.raises(CategoryFileError) as exc:
        parse_category(data)
    assert exc.value.field == "morphisms[1].parity"

def test_parse_rejects_duplicate_products():
    entry = {"first": "x", "then": "x", "result": {"1": 1}}
    with pytest.raises(CategoryFileError, match="duplicate product"):
        parse_category(clifford_data(composition=[entry, dict(entry)]))

def test_parse_reports_invalid_category():
    data = clifford_data(composition=[{"first": "x", "then": "x", "result": {"x": 1}}])
    with pytest.raises(CategoryFileError) as exc:
        parse_category(data)
    assert exc.value.field == "validate"

def test_parse_without_check_keeps_invalid_category():
    data = clifford_data(composition=[{"first": "x", "then": "x", "result": {"x": 1}}])
    assert parse_category(data, check=False).dimension == 2

def test_parse_rejects_non_mapping():
    with pytest.raises(CategoryFileError, match="expected a mapping"):
        parse_category(["not", "a", "mapping"])

def test_parse_default_name_from_path():
    data = clifford_data()
    del data["name"]
    assert parse_category(data, path="/tmp/my_cat.yaml").name == "my_cat"


# --- load / write ---

def test_load_missing_file(tmp_path):
    with pytest.raises(CategoryFileError, match="file not found"):
        load_category_file(tmp_path / "nope.yaml")

def test_load_invalid_yaml(tmp_path):
    p = tmp_path / "bad.yaml"
    p.write_text("objects: [unclosed\n")
    with pytest.raises(CategoryFileError, match="not valid YAML"):
        load_category_file(p)

@pytest.mark.parametrize("name", list(BUILTINS))
def test_write_then_load_keeps_category(tmp_path, name):
    cat = builtin(name)
    path = write_category_file(cat, tmp_path / f"{name}.yaml")
    assert load_category_file(path).same_as(cat)

def test_serialize_uses_exact_strings():
    data = serialize_category(builtin("mat11"))
    results = [v for entry in data["composition"] for v in entry["result"].values()]
    assert "-1" in results
    assert all(isinstance(v, str) for v in results)

def test_written_file_is_plain_yaml(tmp_path):
    path = write_category_file(builtin("clifford1"), tmp_path / "out" / "cl.yaml")
    data = yaml.safe_load(path.read_text())
    assert data["field"] == "QQ"
    assert data["objects"] == ["*"]


# --- resolve_category ---

def test_resolve_builtin():
    assert resolve_category("@arrow").name == "arrow"

def test_resolve_unknown_builtin():
    with pytest.raises(CategoryFileError, match="unknown builtin"):
        resolve_category("@nope")

def test_resolve_file(tmp_path):
    path = tmp_path / "cl.yaml"
    path.write_text(yaml.safe_dump(clifford_data()))
    assert resolve_category(str(path), field="GF(3)").field == FieldSpec.prime(3)


# --- load_idempotents ---

def test_load_idempotents(tmp_path):
    cat = builtin("kz2")
    path = tmp_path / "idem.yaml"
    path.write_text(yaml.safe_dump([{"object": "*", "vector": {"1": "1/2", "g": "1/2"}}]))
    (vec,) = load_idempotents(path, cat)
    assert vec.source == vec.target == "*"
    assert vec.coefficients == {"1": cat.K(1, 2), "g": cat.K(1, 2)}

def test_load_idempotents_rejects_extra_fields(tmp_path):
    path = tmp_path / "idem.yaml"
    path.write_text(yaml.safe_dump([{"object": "*", "vector": {}, "weight": 1}]))
    with pytest.raises(CategoryFileError) as exc:
        load_idempotents(path, builtin("kz2"))
    assert exc.value.field == "[0]"

def test_load_idempotents_rejects_non_list(tmp_path):
    path = tmp_path / "idem.yaml"
    path.write_text("object: '*'\n")
    with pytest.raises(CategoryFileError, match="expected a list"):
        load_idempotents(path, builtin("kz2"))


# --- run reports ---

def test_digest_is_stable():
    assert category_digest(builtin("arrow")) == category_digest(builtin("arrow"))
    assert category_digest(builtin("arrow")) != category_digest(builtin("arrow_odd"))

def test_write_report_is_sorted_json(tmp_path):
    report = RunReport(command="hh", truncated_degree=2)
    report.dimensions["HH"] = [1, 0, 0]
    out = write_report(report, tmp_path / "r" / "report.json")
    data = json.loads(out.read_text())
    assert data["dimensions"] == {"HH": [1, 0, 0]}
    assert data["passed"] is True
    assert list(data) == sorted(data)

def test_report_round_trips_through_dict():
    report = RunReport(command="ez", convention="koszul-homological", seed=3)
    assert RunReport.from_dict(report.to_dict()) == report


# --- display ---

def test_display_dimensions_marks_truncation():
    console = Console(record=True, width=80)
    display_dimensions(console, "HH(point)", {"HH": [1, 0, 0]}, truncated_degree=2)
    text = console.export_text()
    assert "HH(point)" in text
    assert "2*" in text

def test_display_rows():
    console = Console(record=True, width=80)
    display_rows(console, "Builtins", ["name", "objects"], [("@point", 1)])
    assert "@point" in console.export_text()
