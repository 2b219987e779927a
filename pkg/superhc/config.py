# config.py
from pathlib import Path

from .utils.catalog import BUILTINS
from .utils.cyclic import METHODS
from .utils.exactlin import FieldSpec
from .utils.utils import log

# --- Top-level required fields ---
REQUIRED_TOP_LEVEL = {
    "categories": list,
    "field": str,
    "max_degree": int,
    "output_dir": str,
    "threads": int,
}

OPTIONAL_TOP_LEVEL = {
    "cross_check": bool,
    "method": str,
    "seed": int,
}

STEP_SCHEMA = [
    # hochschild
    {"path": ("hochschild", "normalized"), "gate": ("hochschild",), "default": "True"},
    {"path": ("hochschild", "cohomology"), "gate": ("hochschild",), "default": "True"},
    {"path": ("hochschild", "degree_zero"), "gate": ("hochschild",), "default": "True"},
    # cyclic
    {"path": ("cyclic", "cohomology"), "gate": ("cyclic",), "default": "True"},
    # gysin_connes
    {"path": ("gysin_connes", "max_degree"), "gate": ("gysin_connes",), "default": "max_degree"},
    # identities
    {"path": ("identities", "pairs"), "gate": ("identities",), "required": True, "is_pairs": True},
    {"path": ("identities", "convention"), "gate": ("identities",), "default": "'auto'"},
    {"path": ("identities", "max_degree"), "gate": ("identities",), "default": "max_degree"},
    {"path": ("identities", "sample"), "gate": ("identities",), "default": "None"},
    # ez
    {"path": ("ez", "pairs"), "gate": ("ez",), "required": True, "is_pairs": True},
    # kunneth
    {"path": ("kunneth", "pairs"), "gate": ("kunneth",), "required": True, "is_pairs": True},
    # morita
    {"path": ("morita", "length"), "gate": ("morita",), "default": "2"},
    {"path": ("morita", "max_degree"), "gate": ("morita",), "default": "max_degree"},
    {"path": ("morita", "max_objects"), "gate": ("morita",), "default": "64"},
]


def get_nested(config, *keys):
    """Navigate a nested dict by key path, returning None if any key is missing."""
    node = config
    for key in keys:
        if not isinstance(node, dict):
            return None
        node = node.get(key)
    return node


def is_enabled(config, gate):
    """Return True if the config section at gate path has run=True."""
    section = get_nested(config, *gate)
    return isinstance(section, dict) and section.get("run") is True


def _check_category(spec, where, errors):
    if not isinstance(spec, str):
        errors.append(f"{where} must be a '@builtin' name or a file path")
    elif spec.startswith("@"):
        if spec[1:] not in BUILTINS:
            errors.append(f"Unknown builtin: {where} = {spec}")
    elif not Path(spec).expanduser().exists():
        errors.append(f"File not found: {where} = {spec}")


def validate_top_level(config, errors, warnings):
    for key, expected_type in REQUIRED_TOP_LEVEL.items():
        if key not in config:
            errors.append(f"Missing required field: '{key}'")
        elif not isinstance(config[key], expected_type) or (
            expected_type is int and isinstance(config[key], bool)
        ):
            errors.append(f"'{key}' must be {expected_type.__name__}")

    for key, expected_type in OPTIONAL_TOP_LEVEL.items():
        if key in config and not isinstance(config[key], expected_type):
            errors.append(f"'{key}' must be {expected_type.__name__}")

    if isinstance(config.get("field"), str):
        try:
            FieldSpec.parse(config["field"])
        except ValueError as e:
            errors.append(str(e))
    if isinstance(config.get("max_degree"), int) and config["max_degree"] < 0:
        errors.append("'max_degree' must be non-negative")
    if config.get("method", METHODS[0]) not in METHODS:
        errors.append(f"'method' must be one of {', '.join(METHODS)}")

    for k, spec in enumerate(config.get("categories") or []):
        _check_category(spec, f"categories[{k}]", errors)
    if isinstance(config.get("categories"), list) and not config["categories"]:
        warnings.append("categories is empty. Only pair steps will run.")


def validate_steps(config, errors, warnings):
    for entry in STEP_SCHEMA:
        gate = entry.get("gate")
        if gate and not is_enabled(config, gate):
            continue

        value = get_nested(config, *entry["path"])
        field_name = ".".join(entry["path"])

        if value is None:
            if entry.get("required"):
                errors.append(f"{field_name} not set.")
            else:
                warnings.append(f"{field_name} not set. Defaulting to {entry['default']}.")
        elif entry.get("is_pairs"):
            if not isinstance(value, list):
                errors.append(f"{field_name} must be a list of [A, B] pairs")
                continue
            for k, pair in enumerate(value):
                if not isinstance(pair, list) or len(pair) != 2:
                    errors.append(f"{field_name}[{k}] must be a pair [A, B]")
                    continue
                for j, spec in enumerate(pair):
                    _check_category(spec, f"{field_name}[{k}][{j}]", errors)


def error_check_config(config, console):
    errors = []
    warnings = []

    if not isinstance(config, dict):
        raise ValueError("Config must be a YAML mapping.")

    validate_top_level(config, errors, warnings)
    validate_steps(config, errors, warnings)

    if errors:
        for e in errors:
            log(console, e, style="danger")
        raise ValueError(f"{len(errors)} config error(s) found. Aborting.")

    if warnings:
        for w in warnings:
            log(console, w, style="warning")
        log(
            console,
            f"{len(warnings)} config warning(s) found. Please review. Defaults will be used.",
            style="warning",
        )
