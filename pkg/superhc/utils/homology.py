"""
Hochschild homology and cohomology with coefficients in the category itself,
plus the degree-0 shortcuts (graded commutator quotient and graded center).
"""

# In[0]: Imports
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from .exactlin import (
    BasedComplex,
    ConsistencyError,
    HomologyBasis,
    homology_basis,
    homology_dims,
    independent_columns,
    kernel_basis,
    matrix_from_rows,
)
from .nerve import PLAIN, boundary_matrix, nerve_basis, normalized_basis, normalized_boundary
from .supercat import SuperCategory
from .utils import parallel_map


# In[1]: Results
@dataclass
class HomologyResult:
    """
    Dimensions of a (co)homology theory in degrees 0..nmax.

    The top degree is flagged as truncated: it is the edge of the computed range.
    """

    name: str
    dims: List[int]
    chain_dims: List[int]
    truncated_degree: int
    method: str = ""
    representatives: Optional[List[HomologyBasis]] = None
    complex: Optional[BasedComplex] = field(default=None, repr=False)

    @property
    def nmax(self) -> int:
        return len(self.dims) - 1

    def __getitem__(self, n: int) -> int:
        return self.dims[n]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dims": list(self.dims),
            "chain_dims": list(self.chain_dims),
            "truncated_degree": self.truncated_degree,
            "method": self.method,
        }


def homology_result(name, c: BasedComplex, nmax, method, with_representatives, threads):
    dims = homology_dims(c, threads=threads)[: nmax + 1]
    reps = None
    if with_representatives:
        reps = [homology_basis(c, n) for n in range(nmax + 1)]
        for n, rep in enumerate(reps):
            if len(rep.representatives) != dims[n]:
                raise ConsistencyError(
                    f"{name}_{n}: {len(rep.representatives)} representatives "
                    f"for dimension {dims[n]}"
                )
    return HomologyResult(
        name=name,
        dims=dims,
        chain_dims=list(c.dims[: nmax + 1]),
        truncated_degree=nmax,
        method=method,
        representatives=reps,
        complex=c,
    )


# In[2]: Hochschild homology
def hochschild_complex(cat: SuperCategory, top: int, normalized: bool = False, threads=None) -> BasedComplex:
    """The Hochschild chain complex in degrees 0..top."""
    if normalized:
        dims = [len(normalized_basis(cat, n)) for n in range(top + 1)]
        maps = parallel_map(lambda n: normalized_boundary(cat, n), range(1, top + 1), threads)
    else:
        dims = [len(nerve_basis(cat, n)) for n in range(top + 1)]
        maps = parallel_map(lambda n: boundary_matrix(cat, n), range(1, top + 1), threads)
    return BasedComplex(dims, list(maps), cat.K, "chain")


def hochschild_homology(
    cat: SuperCategory,
    nmax: int,
    normalized: bool = False,
    with_representatives: bool = False,
    threads: Optional[int] = None,
) -> HomologyResult:
    """
    dim HH_n(A, A) for n <= nmax.

    Args:
        cat: Valid category
        nmax: Highest degree reported
        normalized: Use the normalized complex (same dimensions, smaller matrices)
        with_representatives: Also return cycle representatives per degree
        threads: Worker cap for matrix assembly and ranks
    """
    c = hochschild_complex(cat, nmax + 1, normalized, threads)
    method = "normalized" if normalized else "full"
    return homology_result("HH", c, nmax, method, with_representatives, threads)


# In[3]: Hochschild cohomology
def cochain_basis(cat: SuperCategory, n: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Elementary cochains (T, b): the plain chain T = (X0, a1..an) is sent to b in hom(Xn, X0)."""
    key = ("cochains", n)
    cached = cat._cache.get(key)
    if cached is None:
        idx = cat.index()
        cached = []
        for chain in nerve_basis(cat, n, PLAIN):
            x0 = chain[0]
            xn = idx.src[chain[-1]] if n else x0
            for b in idx.hom_between(xn, x0):
                cached.append((chain, b))
        cat._cache[key] = cached
    return cached


def coboundary_matrix(cat: SuperCategory, n: int) -> DomainMatrix:
    """
    δ: C^n -> C^{n+1}, assembled row by row:

    (δφ)(a1..a_{n+1}) = (−1)^{|a1||φ|} a1 φ(a2..) + Σ_{i=1..n} (−1)^i φ(.., a_i a_{i+1}, ..)
                        + (−1)^{n+1} φ(a1..an) a_{n+1}
    """
    idx = cat.index()
    columns = {cell: k for k, cell in enumerate(cochain_basis(cat, n))}
    rows = cochain_basis(cat, n + 1)
    row_pos = {cell: k for k, cell in enumerate(rows)}
    entries: List[Dict[int, object]] = [{} for _ in rows]

    def put(row_cell, col_cell, value):
        r = row_pos.get(row_cell)
        c = columns.get(col_cell)
        if r is None or c is None or not value:
            return
        row = entries[r]
        total = row.get(c)
        total = value if total is None else total + value
        if total:
            row[c] = total
        else:
            row.pop(c, None)

    for chain in nerve_basis(cat, n + 1, PLAIN):
        x0, arrows = chain[0], chain[1:]
        x1 = idx.src[arrows[0]]
        xlast = idx.src[arrows[-1]]
        a1, alast = arrows[0], arrows[-1]

        inner = (x1,) + arrows[1:]
        inner_parity = sum(idx.parity[a] for a in arrows[1:])
        for b in idx.hom_between(xlast, x1):
            negate = idx.parity[a1] * (idx.parity[b] + inner_parity) % 2
            for k, coef in idx.compose(b, a1):
                put((chain, k), (inner, b), -coef if negate else coef)

        for i in range(1, n + 1):
            head, tail = arrows[: i - 1], arrows[i + 1 :]
            for k, coef in idx.compose(arrows[i], arrows[i - 1]):
                merged = (x0,) + head + (k,) + tail
                value = -coef if i % 2 else coef
                for c in idx.hom_between(xlast, x0):
                    put((chain, c), (merged, c), value)

        outer = (x0,) + arrows[:-1]
        xn = idx.src[arrows[-2]] if n else x0
        for b in idx.hom_between(xn, x0):
            for k, coef in idx.compose(alast, b):
                put((chain, k), (outer, b), -coef if (n + 1) % 2 else coef)

    return matrix_from_rows(entries, len(columns), cat.K)


def hochschild_cohomology(
    cat: SuperCategory,
    nmax: int,
    with_representatives: bool = False,
    threads: Optional[int] = None,
) -> HomologyResult:
    """dim HH^n(A, A) for n <= nmax from the cochain complex on the plain nerve."""
    top = nmax + 1
    dims = [len(cochain_basis(cat, n)) for n in range(top + 1)]
    maps = parallel_map(lambda n: coboundary_matrix(cat, n), range(top), threads)
    c = BasedComplex(dims, list(maps), cat.K, "cochain")
    return homology_result("HH*", c, nmax, "plain", with_representatives, threads)


# In[4]: Degree-0 shortcuts
@dataclass
class DegreeZeroResult:
    dimension: int
    basis: List[Dict[str, object]]


def _endomorphisms(cat: SuperCategory) -> List[int]:
    idx = cat.index()
    return [i for i in range(len(idx.ids)) if idx.src[i] == idx.tgt[i]]


def commutator_quotient_dim(cat: SuperCategory) -> DegreeZeroResult:
    """
    ⊕_X A(X,X) modulo the span of graded commutators αβ − (−1)^{|α||β|}βα over all
    basis pairs composable both ways.
    """
    idx = cat.index()
    K = cat.K
    ends = _endomorphisms(cat)
    pos = {i: k for k, i in enumerate(ends)}
    commutators = []
    for alpha in range(len(idx.ids)):
        for beta in idx.hom_between(idx.tgt[alpha], idx.src[alpha]):
            vec: Dict[int, object] = {}
            negate = idx.parity[alpha] * idx.parity[beta]
            for k, c in idx.compose(beta, alpha):
                vec[pos[k]] = vec.get(pos[k], K.zero) + c
            for k, c in idx.compose(alpha, beta):
                vec[pos[k]] = vec.get(pos[k], K.zero) + (c if negate else -c)
            vec = {k: c for k, c in vec.items() if c}
            if vec:
                commutators.append(vec)
    units = [{k: K.one} for k in range(len(ends))]
    picked = independent_columns(commutators + units, len(ends), K)
    nc = len(commutators)
    basis = [{idx.ids[ends[p - nc]]: K.one} for p in picked if p >= nc]
    return DegreeZeroResult(len(basis), basis)


def graded_center(cat: SuperCategory) -> DegreeZeroResult:
    """
    Families (φ_X) of endomorphisms, homogeneous of parity π, with
    ψ φ_X = (−1)^{|ψ|π} φ_Y ψ for every ψ: X -> Y; even and odd parts solved separately.
    """
    idx = cat.index()
    K = cat.K
    basis: List[Dict[str, object]] = []
    for parity in (0, 1):
        unknowns = [i for i in _endomorphisms(cat) if idx.parity[i] == parity]
        if not unknowns:
            continue
        col = {u: k for k, u in enumerate(unknowns)}
        by_object: Dict[int, List[int]] = {}
        for u in unknowns:
            by_object.setdefault(idx.src[u], []).append(u)
        rows: Dict[Tuple[int, int], Dict[int, object]] = {}
        for psi in range(len(idx.ids)):
            negate = idx.parity[psi] * parity
            for u in by_object.get(idx.src[psi], []):
                for k, c in idx.compose(u, psi):
                    row = rows.setdefault((psi, k), {})
                    row[col[u]] = row.get(col[u], K.zero) + c
            for v in by_object.get(idx.tgt[psi], []):
                for k, c in idx.compose(psi, v):
                    row = rows.setdefault((psi, k), {})
                    row[col[v]] = row.get(col[v], K.zero) + (c if negate else -c)
        system = matrix_from_rows(list(rows.values()), len(unknowns), K)
        for vec in kernel_basis(system):
            basis.append({idx.ids[unknowns[k]]: c for k, c in vec.items() if c})
    return DegreeZeroResult(len(basis), basis)


def agreement_in_degree_zero(cat: SuperCategory) -> Dict[str, Tuple[int, int]]:
    """Degree-0 values from the complexes next to the shortcuts."""
    hh = hochschild_homology(cat, 0, normalized=True)
    hcoh = hochschild_cohomology(cat, 0)
    return {
        "HH_0": (hh[0], commutator_quotient_dim(cat).dimension),
        "HH^0": (hcoh[0], graded_center(cat).dimension),
    }
