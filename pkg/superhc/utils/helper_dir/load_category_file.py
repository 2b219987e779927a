# superhc/utils/helper_dir/load_category_file.py
# In[1]: Imports
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..exactlin import FieldSpec, parse_scalar
from ..supercat import SuperCategory, build_category, validate
from .category_file_error import CategoryFileError

TOP_LEVEL_FIELDS = {"name", "field", "objects", "morphisms", "identities", "composition"}
REQUIRED_FIELDS = ("objects", "morphisms", "identities")
MORPHISM_FIELDS = {"id", "source", "target", "parity"}
COMPOSITION_FIELDS = {"first", "then", "result"}


# In[2]: Field helpers
def _require_mapping(value, path, where) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise CategoryFileError(f"expected a mapping, got {type(value).__name__}", path, where)
    return value


def _check_keys(entry: dict, allowed: set, path, where) -> None:
    unknown = sorted(str(k) for k in entry if k not in allowed)
    if unknown:
        raise CategoryFileError(f"unknown field(s) {', '.join(unknown)}", path, where)


def _name(value, path, where) -> str:
    if isinstance(value, bool) or value is None or isinstance(value, (list, dict, float)):
        raise CategoryFileError(f"expected a name, got {value!r}", path, where)
    return str(value)


# In[3]: Parsing
def parse_category(
    data: Any,
    path: Optional[str] = None,
    field: Optional[Any] = None,
    check: bool = True,
) -> SuperCategory:
    """
    Build a SuperCategory from the parsed contents of a category file.

    Args:
        data: Mapping with name, field, objects, morphisms, identities, composition
        path: Source file, used in diagnostics
        field: Field override (FieldSpec or string); defaults to the file's field, then QQ
        check: Run validate and raise on semantic failure

    Returns:
        SuperCategory: The (validated) category

    Raises:
        CategoryFileError: On unknown or missing fields, malformed entries, inexact
            coefficients, or a failed validation
    """
    data = _require_mapping(data, path, "")
    _check_keys(data, TOP_LEVEL_FIELDS, path, "")
    for key in REQUIRED_FIELDS:
        if key not in data:
            raise CategoryFileError(f"missing required field '{key}'", path, key)

    try:
        spec = FieldSpec.parse(field if field is not None else data.get("field", "QQ"))
    except ValueError as e:
        raise CategoryFileError(str(e), path, "field")
    K = spec.domain

    objects_raw = data["objects"]
    if not isinstance(objects_raw, list) or not objects_raw:
        raise CategoryFileError("expected a nonempty list of objects", path, "objects")
    objects = [_name(obj, path, f"objects[{k}]") for k, obj in enumerate(objects_raw)]

    morphisms = []
    if not isinstance(data["morphisms"], list):
        raise CategoryFileError("expected a list of morphisms", path, "morphisms")
    for k, entry in enumerate(data["morphisms"]):
        where = f"morphisms[{k}]"
        entry = _require_mapping(entry, path, where)
        _check_keys(entry, MORPHISM_FIELDS, path, where)
        for key in ("id", "source", "target"):
            if key not in entry:
                raise CategoryFileError(f"missing '{key}'", path, where)
        parity = entry.get("parity", 0)
        if parity not in (0, 1) or isinstance(parity, bool):
            raise CategoryFileError(f"parity must be 0 or 1, got {parity!r}", path, f"{where}.parity")
        morphisms.append(
            (
                _name(entry["id"], path, f"{where}.id"),
                _name(entry["source"], path, f"{where}.source"),
                _name(entry["target"], path, f"{where}.target"),
                parity,
            )
        )

    identities_raw = _require_mapping(data["identities"], path, "identities")
    identities = {str(obj): _name(mid, path, f"identities.{obj}") for obj, mid in identities_raw.items()}
    for obj in objects:
        if obj not in identities:
            raise CategoryFileError(f"object '{obj}' has no identity designation", path, f"identities.{obj}")

    composition = {}
    entries = data.get("composition") or []
    if not isinstance(entries, list):
        raise CategoryFileError("expected a list of products", path, "composition")
    for k, entry in enumerate(entries):
        where = f"composition[{k}]"
        entry = _require_mapping(entry, path, where)
        _check_keys(entry, COMPOSITION_FIELDS, path, where)
        for key in ("first", "then"):
            if key not in entry:
                raise CategoryFileError(f"missing '{key}'", path, where)
        result = _require_mapping(entry.get("result") or {}, path, f"{where}.result")
        vec = {}
        for mid, coef in result.items():
            try:
                vec[str(mid)] = parse_scalar(coef, K)
            except ValueError as e:
                raise CategoryFileError(str(e), path, f"{where}.result.{mid}")
        key = (_name(entry["first"], path, f"{where}.first"), _name(entry["then"], path, f"{where}.then"))
        if key in composition:
            raise CategoryFileError(f"duplicate product {key}", path, where)
        composition[key] = vec

    name = str(data.get("name") or (Path(path).stem if path else "category"))
    cat = build_category(spec, objects, morphisms, identities, composition, name=name)
    if check:
        report = validate(cat)
        if not report.valid:
            raise CategoryFileError(f"invalid category:\n{report}", path, "validate")
    return cat


def load_category_file(path, field=None, check: bool = True) -> SuperCategory:
    """
    Read a YAML category file.

    Raises:
        CategoryFileError: If the file is missing, not YAML, or not a valid category
    """
    path = Path(path).expanduser()
    if not path.exists():
        raise CategoryFileError("file not found", str(path))
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise CategoryFileError(f"not valid YAML: {e}", str(path))
    return parse_category(data, str(path), field=field, check=check)
