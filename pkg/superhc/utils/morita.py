"""
Finite Morita-type completions of a SuperCategory and the invariance harness that
compares HH, HH*, HC and HC* of a category with those of a completion.
"""

# In[0]: Imports
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .cyclic import cyclic_cohomology, cyclic_homology
from .homology import hochschild_cohomology, hochschild_homology
from .supercat import (
    BasisMorphism,
    MorphismDict,
    MorphismVector,
    SuperCategory,
    as_morphism_dict,
    idempotent_label,
    rebase_identities,
    require_valid,
    split_idempotents,
)
from .utils import parallel_map

MAT_TRUNCATION = "mat_truncation"
IDEMPOTENT_FRAGMENT = "idempotent_fragment"
DEFAULT_MAX_OBJECTS = 64

IdempotentInput = Union[MorphismVector, Tuple[str, MorphismDict]]


# In[1]: Completion spec
@dataclass
class CompletionSpec:
    """A finite completion: sequences up to length L, or a list of even idempotents."""

    kind: str
    length: int = 1
    idempotents: List[IdempotentInput] = field(default_factory=list)
    max_objects: int = DEFAULT_MAX_OBJECTS

    def __post_init__(self):
        if self.kind not in (MAT_TRUNCATION, IDEMPOTENT_FRAGMENT):
            raise ValueError(f"Unknown completion kind '{self.kind}'")
        if self.kind == MAT_TRUNCATION and self.length < 1:
            raise ValueError(f"Sequence length must be at least 1, got {self.length}")

    def apply(self, cat: SuperCategory) -> SuperCategory:
        if self.kind == MAT_TRUNCATION:
            return mat_truncation(cat, self.length, self.max_objects)
        return idempotent_fragment(cat, self.idempotents)


# In[2]: Matrix truncation
def sequence_name(objects: Sequence[str]) -> str:
    return "[" + ",".join(objects) + "]"


def matrix_unit_id(b: str, i: int, j: int, source: str, target: str) -> str:
    """Id of the matrix with b in row i, column j (1-based) from source to target."""
    return f"{b}[{i},{j}]{source}>{target}"


def truncation_size(n_objects: int, length: int) -> int:
    return sum(n_objects**k for k in range(1, length + 1))


def mat_truncation(cat: SuperCategory, length: int, max_objects: int = DEFAULT_MAX_OBJECTS) -> SuperCategory:
    """
    Objects are the nonempty object sequences of length <= L; a morphism from
    (X_1..X_m) to (Y_1..Y_n) is an n×m matrix with entries in hom(X_j, Y_i), and
    composition is matrix multiplication through the structure constants.

    Args:
        cat: Valid category
        length: Maximum sequence length L >= 1
        max_objects: Bound on the number of sequences

    Raises:
        ValueError: If L < 1 or the number of sequences exceeds max_objects
    """
    if length < 1:
        raise ValueError(f"Sequence length must be at least 1, got {length}")
    count = truncation_size(len(cat.objects), length)
    if count > max_objects:
        raise ValueError(
            f"Mat truncation of '{cat.name}' at length {length} has {count} objects "
            f"(bound {max_objects})"
        )
    K = cat.K
    sequences = [seq for k in range(1, length + 1) for seq in product(cat.objects, repeat=k)]
    names = [sequence_name(seq) for seq in sequences]

    # (source, target) -> [(i, j, b, id)]
    units: Dict[Tuple[int, int], List[Tuple[int, int, str, str]]] = {}
    basis: List[BasisMorphism] = []
    for s, src in enumerate(sequences):
        for t, tgt in enumerate(sequences):
            cell = []
            for i, y in enumerate(tgt, start=1):
                for j, x in enumerate(src, start=1):
                    for b in cat.hom(x, y):
                        mid = matrix_unit_id(b.id, i, j, names[s], names[t])
                        cell.append((i, j, b.id, mid))
                        basis.append(BasisMorphism(mid, names[s], names[t], b.parity))
            units[(s, t)] = cell

    lookup = {(s, t, i, j, b): mid for (s, t), cell in units.items() for i, j, b, mid in cell}
    table: Dict[Tuple[str, str], MorphismDict] = {}
    n = len(sequences)
    for s in range(n):
        for t in range(n):
            for u in range(n):
                for i, j, b, first in units[(s, t)]:
                    for k, l, c, then in units[(t, u)]:
                        if l != i:
                            continue
                        out = {lookup[(s, u, k, j, d)]: v for d, v in cat.compose(b, c).items()}
                        if out:
                            table[(first, then)] = out

    identity_vectors = {
        names[s]: {lookup[(s, s, i, i, cat.identities[x])]: K.one for i, x in enumerate(seq, start=1)}
        for s, seq in enumerate(sequences)
    }
    completed = rebase_identities(
        cat.field, names, basis, identity_vectors, table, name=f"Mat{length}({cat.name})"
    )
    return require_valid(completed)


# In[3]: Idempotent fragment
def _idempotent_entry(cat: SuperCategory, item: IdempotentInput, position: int):
    if isinstance(item, MorphismVector):
        if item.source != item.target:
            raise ValueError(f"Idempotent {position} is not an endomorphism")
        obj, vec = item.source, as_morphism_dict(item, cat.K)
    else:
        obj, raw = item
        vec = as_morphism_dict(raw, cat.K)
    if obj not in cat.objects:
        raise ValueError(f"Idempotent {position} lives on unknown object '{obj}'")
    for mid in vec:
        if mid not in {b.id for b in cat.hom(obj, obj)}:
            raise ValueError(f"Idempotent {position} uses '{mid}', not an endomorphism of '{obj}'")
        if cat.morphism(mid).parity:
            raise ValueError(f"Idempotent {position} is not even")
    if not vec:
        raise ValueError(f"Idempotent {position} is zero")
    if cat.compose_vectors(vec, vec) != vec:
        raise ValueError(f"Idempotent {position} does not satisfy ε·ε = ε")
    return obj, vec


def idempotent_fragment(cat: SuperCategory, idempotents: Sequence[IdempotentInput]) -> SuperCategory:
    """
    Objects (X, ε) for every identity 1_X and every supplied even idempotent ε, with
    hom((X,ε),(Y,ε′)) a basis of ε·hom(X,Y)·ε′.

    Args:
        cat: Valid category
        idempotents: MorphismVectors or (object, {id: coefficient}) pairs

    Raises:
        ValueError: If some ε is odd, not idempotent or not an endomorphism
    """
    K = cat.K
    entries = [(obj, {cat.identities[obj]: K.one}, cat.identities[obj]) for obj in cat.objects]
    for k, item in enumerate(idempotents):
        obj, vec = _idempotent_entry(cat, item, k)
        if any(obj == o and vec == v for o, v, _ in entries):
            continue
        label = idempotent_label(vec, k, K)
        if any(obj == o and label == lab for o, _, lab in entries):
            label = f"e{k}"
        entries.append((obj, vec, label))
    return require_valid(split_idempotents(cat, entries, name=f"{cat.name}^"))


# In[4]: Invariance harness
THEORIES = ("HH", "HH*", "HC", "HC*")


@dataclass
class InvarianceReport:
    left: str
    right: str
    nmax: int
    dims: Dict[str, Tuple[List[int], List[int]]]

    @property
    def mismatches(self) -> Dict[str, List[int]]:
        out = {}
        for theory, (a, b) in self.dims.items():
            bad = [n for n in range(self.nmax + 1) if a[n] != b[n]]
            if bad:
                out[theory] = bad
        return out

    @property
    def invariant(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "nmax": self.nmax,
            "dims": {k: {"left": a, "right": b} for k, (a, b) in self.dims.items()},
            "mismatches": self.mismatches,
            "invariant": self.invariant,
        }


def theory_dims(cat: SuperCategory, nmax: int, method: str = "mixed", threads: Optional[int] = None):
    """HH, HH*, HC and HC* dimensions of one category."""
    return {
        "HH": hochschild_homology(cat, nmax, normalized=True, threads=threads).dims,
        "HH*": hochschild_cohomology(cat, nmax, threads=threads).dims,
        "HC": cyclic_homology(cat, nmax, method=method, threads=threads).dims,
        "HC*": cyclic_cohomology(cat, nmax, method=method, threads=threads).dims,
    }


def invariance_report(
    cat: SuperCategory,
    completed: SuperCategory,
    nmax: int,
    method: str = "mixed",
    threads: Optional[int] = None,
) -> InvarianceReport:
    """Compare the four theories of cat and completed degree by degree; both sides run concurrently."""
    left, right = parallel_map(lambda c: theory_dims(c, nmax, method, threads), [cat, completed], threads)
    dims = {theory: (list(left[theory]), list(right[theory])) for theory in THEORIES}
    return InvarianceReport(cat.name, completed.name, nmax, dims)
