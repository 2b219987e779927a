# superhc/utils/helper_dir/run_report.py
# In[1]: Imports
import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dataclasses_json import dataclass_json

from ..supercat import SuperCategory
from ..utils import setup_output_file
from .write_category_file import serialize_category


# In[2]: Report record
@dataclass_json
@dataclass
class RunReport:
    """
    Machine-readable record of one command. Everything except ``timings`` is a
    function of the inputs, the command and the seed.
    """

    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    dimensions: Dict[str, List[int]] = field(default_factory=dict)
    defects: Dict[str, Any] = field(default_factory=dict)
    convention: Optional[str] = None
    truncated_degree: Optional[int] = None
    seed: Optional[int] = None
    passed: bool = True
    details: Dict[str, Any] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)


def category_digest(cat: SuperCategory) -> str:
    """sha256 of the canonical serialization of a category."""
    text = json.dumps(serialize_category(cat), sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# In[3]: Writing
def write_report(report: RunReport, path):
    """Write a report as sorted, indented JSON."""
    out = setup_output_file(path)
    with open(out, "w") as f:
        f.write(json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False))
        f.write("\n")
    return out
