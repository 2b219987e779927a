"""
Builtin test categories: one-object superalgebras (point, dual numbers, the odd
Clifford algebra, the group algebra of Z/2, the odd matrix algebra) and the two
object arrow categories.
"""

# In[0]: Imports
from .exactlin import FieldSpec
from .supercat import SuperCategory, build_category, require_valid


# In[1]: Constructions
def _one_object(name, field, extra, products):
    morphisms = [("1", "*", "*", 0)] + [(mid, "*", "*", par) for mid, par in extra]
    return build_category(field, ["*"], morphisms, {"*": "1"}, products, name=name)


def _arrow(name, field, parity):
    return build_category(
        field,
        ["X", "Y"],
        [("1_X", "X", "X", 0), ("1_Y", "Y", "Y", 0), ("a", "X", "Y", parity)],
        {"X": "1_X", "Y": "1_Y"},
        {},
        name=name,
    )


def _mat11(field):
    # compose(first=y, then=x) = x·y for the matrix units e11, e12, e21 and e22 = 1 - e11
    products = {
        ("e11", "e11"): {"e11": 1},
        ("e12", "e11"): {"e12": 1},
        ("e11", "e21"): {"e21": 1},
        ("e21", "e12"): {"e11": 1},
        ("e12", "e21"): {"1": 1, "e11": -1},
    }
    return _one_object("mat11", field, [("e12", 1), ("e21", 1), ("e11", 0)], products)


# In[2]: Catalog
BUILTINS = {
    "point": lambda k: _one_object("point", k, [], {}),
    "dual_even": lambda k: _one_object("dual_even", k, [("e", 0)], {}),
    "dual_odd": lambda k: _one_object("dual_odd", k, [("e", 1)], {}),
    "clifford1": lambda k: _one_object("clifford1", k, [("x", 1)], {("x", "x"): {"1": 1}}),
    "kz2": lambda k: _one_object("kz2", k, [("g", 0)], {("g", "g"): {"1": 1}}),
    "arrow": lambda k: _arrow("arrow", k, 0),
    "arrow_odd": lambda k: _arrow("arrow_odd", k, 1),
    "mat11": _mat11,
}

TRIVIALLY_GRADED = ("point", "dual_even", "kz2", "arrow")


def builtin(name: str, field=None) -> SuperCategory:
    """
    Return a named test category.

    Args:
        name: One of BUILTINS
        field: FieldSpec or field string (defaults to QQ)

    Raises:
        ValueError: Unknown name
    """
    key = name.lstrip("@")
    if key not in BUILTINS:
        raise ValueError(f"Unknown builtin '{name}'. Available: {', '.join(BUILTINS)}")
    field = FieldSpec.parse(field) if field is not None else FieldSpec.rationals()
    return require_valid(BUILTINS[key](field))
