# superhc/utils/helper_dir/write_category_file.py
# In[1]: Imports
from pathlib import Path

import yaml

from ..exactlin import format_scalar
from ..supercat import SuperCategory
from ..utils import setup_output_file


# In[2]: Serialization
def serialize_category(cat: SuperCategory) -> dict:
    """Plain-data form of a category; coefficients become exact fraction strings."""
    K = cat.K
    return {
        "name": cat.name,
        "field": str(cat.field),
        "objects": list(cat.objects),
        "morphisms": [
            {"id": b.id, "source": b.source, "target": b.target, "parity": b.parity}
            for b in cat.basis
        ],
        "identities": {obj: cat.identities[obj] for obj in cat.objects},
        "composition": [
            {
                "first": first,
                "then": then,
                "result": {mid: format_scalar(c, K) for mid, c in vec.items()},
            }
            for (first, then), vec in cat.composition.items()
        ],
    }


def write_category_file(cat: SuperCategory, path) -> Path:
    """Write a category as YAML that load_category_file reads back unchanged."""
    out = setup_output_file(path)
    with open(out, "w") as f:
        yaml.safe_dump(serialize_category(cat), f, sort_keys=False, allow_unicode=True)
    return out
