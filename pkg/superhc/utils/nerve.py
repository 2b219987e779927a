"""
Cyclic and plain nerves of a SuperCategory and the Hochschild boundary.

A cyclic chain of degree n is a tuple of basis positions (a0, a1, ..., an) with
a_j: X_j -> X_{j-1} for j >= 1 and a0: X0 -> Xn. The composite of the pair
(a_i, a_{i+1}) is compose(first=a_{i+1}, then=a_i). A plain chain is
(X0, a1, ..., an) with X0 an object position.
"""

# In[0]: Imports
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy.polys.matrices import DomainMatrix

from .exactlin import add_into, matrix_from_columns
from .supercat import CategoryIndex, SuperCategory

Chain = Tuple[int, ...]
ChainVector = Dict[Chain, object]

CYCLIC = "cyclic"
PLAIN = "plain"


# In[1]: Basis elements
@dataclass(frozen=True)
class ChainBasisElement:
    objects: Tuple[str, ...]
    entries: Tuple[str, ...]
    degree: int
    kind: str
    parity: int = 0

    def __str__(self):
        return "(" + ", ".join(self.entries) + ")"


def chain_objects(idx: CategoryIndex, chain: Chain, kind: str = CYCLIC) -> Tuple[int, ...]:
    """Object positions X0..Xn of a chain."""
    if kind == PLAIN:
        return (chain[0],) + tuple(idx.src[a] for a in chain[1:])
    return (idx.src[chain[0]],) + tuple(idx.src[a] for a in chain[1:])


def chain_parity(idx: CategoryIndex, chain: Chain, kind: str = CYCLIC) -> int:
    entries = chain[1:] if kind == PLAIN else chain
    return sum(idx.parity[a] for a in entries) % 2


def describe(cat: SuperCategory, chain: Chain, kind: str = CYCLIC) -> ChainBasisElement:
    """Named view of an internal chain tuple."""
    idx = cat.index()
    objects = tuple(cat.objects[k] for k in chain_objects(idx, chain, kind))
    entries = chain[1:] if kind == PLAIN else chain
    return ChainBasisElement(
        objects=objects,
        entries=tuple(idx.ids[a] for a in entries),
        degree=len(chain) - 1,
        kind=kind,
        parity=chain_parity(idx, chain, kind),
    )


# In[2]: Nerve bases
def _composable_strings(idx: CategoryIndex, n: int):
    """All (X0, a1..an) with a_j: X_j -> X_{j-1}."""
    strings = [(x0, ()) for x0 in range(len(idx.identity))]
    for _ in range(n):
        extended = []
        for x0, entries in strings:
            current = idx.src[entries[-1]] if entries else x0
            for a in idx.by_target[current]:
                extended.append((x0, entries + (a,)))
        strings = extended
    return strings


def _sort_key(idx: CategoryIndex, kind: str):
    def key(chain):
        return (chain_objects(idx, chain, kind), chain)

    return key


def nerve_basis(cat: SuperCategory, n: int, kind: str = CYCLIC) -> List[Chain]:
    """
    Ordered basis of the degree-n nerve, lexicographic in (objects, entries).

    Cyclic chains close up through a0 in hom(X0, Xn); plain chains are (X0, a1..an).
    """
    if n < 0:
        return []
    key = ("nerve", kind, n)
    cached = cat._cache.get(key)
    if cached is not None:
        return cached
    idx = cat.index()
    chains = []
    for x0, entries in _composable_strings(idx, n):
        xn = idx.src[entries[-1]] if entries else x0
        if kind == PLAIN:
            chains.append((x0,) + entries)
        else:
            for a0 in idx.hom_between(x0, xn):
                chains.append((a0,) + entries)
    chains.sort(key=_sort_key(idx, kind))
    cat._cache[key] = chains
    return chains


def basis_positions(cat: SuperCategory, n: int, kind: str = CYCLIC) -> Dict[Chain, int]:
    key = ("positions", kind, n)
    cached = cat._cache.get(key)
    if cached is None:
        cached = {c: k for k, c in enumerate(nerve_basis(cat, n, kind))}
        cat._cache[key] = cached
    return cached


# In[3]: Faces and boundaries
def face(cat: SuperCategory, i: int, chain: Chain) -> ChainVector:
    """
    The i-th face of a cyclic chain of degree n.

    For i < n the pair (a_i, a_{i+1}) is replaced by its composite; d_n moves a_n
    around to the front, (−1)^{|a_n|(|a_0|+...+|a_{n-1}|)} (a_n a_0, a_1, ..., a_{n-1}).

    Raises:
        IndexError: If i is outside 0..n
    """
    n = len(chain) - 1
    if not 0 <= i <= n or n == 0:
        raise IndexError(f"Face index {i} out of range for degree {n}")
    idx = cat.index()
    out: ChainVector = {}
    if i < n:
        head, tail = chain[:i], chain[i + 2 :]
        for k, c in idx.compose(chain[i + 1], chain[i]):
            add_into(out, {head + (k,) + tail: c})
        return out
    an = chain[n]
    negate = idx.parity[an] * (sum(idx.parity[a] for a in chain[:n]) % 2)
    for k, c in idx.compose(chain[0], an):
        add_into(out, {(k,) + chain[1:n]: -c if negate else c})
    return out


def boundary_vector(cat: SuperCategory, vec: ChainVector, variant: str = "full") -> ChainVector:
    """Apply ∂ = Σ_{i<=n} (−1)^i d_i (full) or ∂̄ = Σ_{i<n} (−1)^i d_i (bar) to a chain vector."""
    out: ChainVector = {}
    for chain, coef in vec.items():
        n = len(chain) - 1
        if n == 0:
            continue
        last = n if variant == "full" else n - 1
        for i in range(last + 1):
            add_into(out, face(cat, i, chain), -coef if i % 2 else coef)
    return out


def chain_matrix(cat, columns, n_rows, kind=CYCLIC):
    positions = basis_positions(cat, n_rows, kind)
    cols = [{positions[ch]: c for ch, c in col.items()} for col in columns]
    return matrix_from_columns(cols, len(positions), cat.K)


def face_matrix(cat: SuperCategory, n: int, i: int) -> DomainMatrix:
    """Matrix of d_i: C_n -> C_{n-1} on the cyclic nerve bases."""
    key = ("face", n, i)
    cached = cat._cache.get(key)
    if cached is None:
        columns = [face(cat, i, chain) for chain in nerve_basis(cat, n)]
        cached = chain_matrix(cat, columns, n - 1)
        cat._cache[key] = cached
    return cached


def boundary_matrix(cat: SuperCategory, n: int, variant: str = "full") -> DomainMatrix:
    """
    Matrix of ∂_n (variant "full") or ∂̄_n (variant "bar") from degree n to n-1.
    """
    if variant not in {"full", "bar"}:
        raise ValueError(f"Unknown boundary variant: {variant}")
    if n < 1:
        raise ValueError("Boundary matrices start in degree 1")
    key = ("boundary", variant, n)
    cached = cat._cache.get(key)
    if cached is None:
        K = cat.K
        columns = [boundary_vector(cat, {chain: K.one}, variant) for chain in nerve_basis(cat, n)]
        cached = chain_matrix(cat, columns, n - 1)
        cat._cache[key] = cached
    return cached


# In[4]: Normalized chains
@dataclass
class Normalization:
    """Normalized degree-n chains: no identity among the entries a1..an."""

    basis: List[Chain]
    projection: DomainMatrix
    section: DomainMatrix
    positions: Dict[Chain, int]

    @property
    def dimension(self):
        return len(self.basis)


def is_degenerate(idx: CategoryIndex, chain: Chain) -> bool:
    return any(idx.is_identity[a] for a in chain[1:])


def normalized_basis(cat: SuperCategory, n: int) -> List[Chain]:
    key = ("normalized", n)
    cached = cat._cache.get(key)
    if cached is None:
        idx = cat.index()
        cached = [c for c in nerve_basis(cat, n) if not is_degenerate(idx, c)]
        cat._cache[key] = cached
    return cached


def normalize(cat: SuperCategory, n: int) -> Normalization:
    """Projection onto and section of the normalized degree-n chains."""
    K = cat.K
    full = basis_positions(cat, n)
    basis = normalized_basis(cat, n)
    positions = {c: k for k, c in enumerate(basis)}
    section = matrix_from_columns([{full[c]: K.one} for c in basis], len(full), K)
    return Normalization(basis, section.transpose(), section, positions)


def project(cat: SuperCategory, vec: ChainVector) -> ChainVector:
    """Drop degenerate chains."""
    idx = cat.index()
    return {c: v for c, v in vec.items() if not is_degenerate(idx, c)}


def normalized_columns(cat: SuperCategory, n_target: int, columns: List[ChainVector]) -> DomainMatrix:
    """Matrix of normalized-coordinate columns (degenerate chains dropped)."""
    positions = {c: k for k, c in enumerate(normalized_basis(cat, n_target))}
    cols = []
    for col in columns:
        kept = {}
        for chain, c in col.items():
            p = positions.get(chain)
            if p is not None:
                kept[p] = c
        cols.append(kept)
    return matrix_from_columns(cols, len(positions), cat.K)


def normalized_boundary(cat: SuperCategory, n: int) -> DomainMatrix:
    """∂_n on normalized chains; equals projection·∂·section."""
    key = ("normalized_boundary", n)
    cached = cat._cache.get(key)
    if cached is None:
        K = cat.K
        columns = [boundary_vector(cat, {c: K.one}) for c in normalized_basis(cat, n)]
        cached = normalized_columns(cat, n - 1, columns)
        cat._cache[key] = cached
    return cached
