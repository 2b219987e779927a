"""
Exact field arithmetic and sparse linear algebra.

Every matrix in SuperHC is a sparse ``DomainMatrix`` over ``QQ`` or ``GF(p)``;
vectors are plain dicts ``{index: element}`` with no stored zeros.
"""

# In[0]: Imports
from __future__ import annotations

import heapq
import re
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Optional, Sequence

from sympy import isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from .utils import cross_check_enabled, parallel_map

Vector = Dict[int, object]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_FIELD_RE = re.compile(r"^\s*(?:GF|F|FF)\s*\(?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)
CHECK_PRIMES = (2147483647, 1000000007)


class ConsistencyError(RuntimeError):
    """Internal-consistency failure of an exact computation."""


# In[1]: Fields and scalars
@lru_cache(maxsize=None)
def _domain_for(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """
    Base field of a category: the rationals or a prime field of odd characteristic.

    Args:
        kind: "rationals" or "prime"
        characteristic: 0 for the rationals, an odd prime otherwise
    """

    kind: str = "rationals"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValueError("The rationals have characteristic 0")
        elif self.kind == "prime":
            if self.characteristic == 2:
                raise ValueError("Characteristic 2 is not supported: graded signs degenerate")
            if self.characteristic < 2 or not isprime(self.characteristic):
                raise ValueError(f"GF({self.characteristic}) is not a prime field")
        else:
            raise ValueError(f"Unknown field kind: {self.kind}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals", 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", int(p))

    @classmethod
    def parse(cls, text) -> "FieldSpec":
        """Parse 'QQ', 'Q', 'rationals', 'GF(p)' or 'Fp'."""
        if isinstance(text, FieldSpec):
            return text
        token = str(text).strip()
        if token.upper() in {"QQ", "Q", "RATIONALS"}:
            return cls.rationals()
        match = _FIELD_RE.match(token)
        if match:
            return cls.prime(int(match.group(1)))
        raise ValueError(f"Unknown field '{text}' (expected QQ or GF(p))")

    @property
    def domain(self):
        return _domain_for(self.characteristic)

    def __str__(self) -> str:
        return "QQ" if self.kind == "rationals" else f"GF({self.characteristic})"


def parse_scalar(text, K):
    """
    Parse an exact coefficient such as 3, "-1" or "3/2" into an element of K.

    Raises:
        ValueError: On floats, malformed strings, zero denominators, or denominators
            divisible by the characteristic
    """
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"Coefficient {text!r} is not an exact integer or fraction")
    if isinstance(text, int):
        return K(text)
    match = _SCALAR_RE.match(str(text))
    if not match:
        raise ValueError(f"Coefficient {text!r} is not an exact integer or fraction")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    if den == 0:
        raise ValueError(f"Coefficient {text!r} has a zero denominator")
    den_k = K(den)
    if not den_k:
        raise ValueError(f"Coefficient {text!r}: denominator vanishes in {K}")
    return K.quo(K(num), den_k)


def format_scalar(c, K) -> str:
    return str(K.to_sympy(c))


# In[2]: Sparse matrices and vectors
def zero_matrix(rows: int, cols: int, K) -> DomainMatrix:
    return DomainMatrix({}, (rows, cols), K)


def identity_matrix(n: int, K) -> DomainMatrix:
    return DomainMatrix({i: {i: K.one} for i in range(n)}, (n, n), K)


def matrix_from_columns(columns: Sequence[Vector], nrows: int, K) -> DomainMatrix:
    """Assemble a sparse matrix whose j-th column is columns[j]."""
    dod: Dict[int, Dict[int, object]] = {}
    for j, col in enumerate(columns):
        for i, c in col.items():
            if c:
                dod.setdefault(i, {})[j] = c
    return DomainMatrix(dod, (nrows, len(columns)), K)


def matrix_from_rows(rows: Sequence[Vector], ncols: int, K) -> DomainMatrix:
    dod = {}
    for i, row in enumerate(rows):
        kept = {j: c for j, c in row.items() if c}
        if kept:
            dod[i] = kept
    return DomainMatrix(dod, (len(rows), ncols), K)


def columns_of(m: DomainMatrix) -> List[Vector]:
    rep = m.transpose().to_sparse().rep
    return [dict(rep.get(j, {})) for j in range(m.shape[1])]


def apply(m: DomainMatrix, v: Vector) -> Vector:
    """Return m·v for a sparse vector v."""
    col = DomainMatrix({i: {0: c} for i, c in v.items() if c}, (m.shape[1], 1), m.domain)
    out = m.to_sparse().matmul(col).rep
    return {i: row[0] for i, row in out.items() if row.get(0)}


def add_into(target: dict, source: dict, coef=None) -> dict:
    """target += coef * source, dropping zeros. Keys may be any hashable."""
    for key, c in source.items():
        value = c if coef is None else coef * c
        total = target.get(key)
        total = value if total is None else total + value
        if total:
            target[key] = total
        else:
            target.pop(key, None)
    return target


def kron(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """Kronecker product a ⊗ b, rows and columns ordered a-major."""
    (ra, ca), (rb, cb) = a.shape, b.shape
    dok = {}
    b_items = list(b.to_dok().items())
    for (i, j), x in a.to_dok().items():
        for (k, l), y in b_items:
            value = x * y
            if value:
                dok[(i * rb + k, j * cb + l)] = value
    return DomainMatrix.from_dok(dok, (ra * rb, ca * cb), a.domain)


def block_matrix(blocks, row_sizes: Sequence[int], col_sizes: Sequence[int], K) -> DomainMatrix:
    """
    Assemble a block matrix.

    Args:
        blocks: dict (block_row, block_col) -> DomainMatrix; missing blocks are zero
        row_sizes: row count of each block row
        col_sizes: column count of each block column
        K: Domain of the result
    """
    row_off = [0]
    for size in row_sizes:
        row_off.append(row_off[-1] + size)
    col_off = [0]
    for size in col_sizes:
        col_off.append(col_off[-1] + size)
    dok = {}
    for (bi, bj), block in blocks.items():
        if block.shape != (row_sizes[bi], col_sizes[bj]):
            raise ValueError(
                f"Block ({bi},{bj}) has shape {block.shape}, "
                f"expected {(row_sizes[bi], col_sizes[bj])}"
            )
        for (i, j), c in block.to_dok().items():
            if c:
                dok[(row_off[bi] + i, col_off[bj] + j)] = c
    return DomainMatrix.from_dok(dok, (row_off[-1], col_off[-1]), K)


def is_zero(m: DomainMatrix) -> bool:
    return m.to_sparse().is_zero_matrix


def matrices_equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    if a.shape != b.shape:
        return False
    return is_zero(a.to_sparse() - b.to_sparse())


# In[3]: Rank, kernel and solving
def rank(m: Optional[DomainMatrix], method: str = "auto", cross_check: Optional[bool] = None) -> int:
    """
    Rank over the exact field of m.

    Args:
        m: Sparse matrix (None counts as the zero map)
        method: 'auto' for sparse elimination with Markowitz pivoting, or a sympy
            rref method ('GJ', 'FF' fraction-free, 'CD')
        cross_check: Compare against ranks modulo two large primes (QQ only);
            defaults to the SUPERHC_CROSS_CHECK environment switch

    Raises:
        ConsistencyError: If the modular ranks contradict the rational rank
    """
    if m is None:
        return 0
    rows, cols = m.shape
    if rows == 0 or cols == 0 or is_zero(m):
        return 0
    if method == "auto":
        r = markowitz_rank(m)
    else:
        r = len(_tall(m).rref(method=method)[1])

    if cross_check is None:
        cross_check = cross_check_enabled()
    if cross_check and m.domain == QQ:
        _cross_check_rank(m, r)
    return r


def _tall(m: DomainMatrix) -> DomainMatrix:
    # rank(m) = rank(m^T); eliminating along the longer side keeps rows short
    sm = m.to_sparse()
    rows, cols = sm.shape
    return sm.transpose() if cols > rows else sm


def markowitz_rank(m: DomainMatrix) -> int:
    """
    Rank by sparse Gaussian elimination with Markowitz pivot selection.

    Each step takes a shortest active row and, inside it, the column with the fewest
    active nonzeros, which minimises the Markowitz count (r - 1)(c - 1) along that row.
    Over QQ the matrix is scaled to integers and eliminated fraction-free, every
    updated row divided by the gcd of its entries; over GF(p) elimination is plain.
    """
    sm = _tall(m)
    K = sm.domain
    if K == QQ:
        _, sm = sm.clear_denoms(convert=True)
        K = sm.domain
    fraction_free = K == ZZ

    active = {i: dict(row) for i, row in sm.rep.items() if row}
    columns = defaultdict(set)
    for i, row in active.items():
        for j in row:
            columns[j].add(i)
    heap = [(len(row), i) for i, row in active.items()]
    heapq.heapify(heap)

    r = 0
    while heap:
        length, p = heapq.heappop(heap)
        pivot_row = active.get(p)
        # stale heap entry
        if pivot_row is None or len(pivot_row) != length:
            continue
        j = min(pivot_row, key=lambda c: (len(columns[c]), c))
        del active[p]
        for c in pivot_row:
            columns[c].discard(p)
        r += 1

        for k in list(columns[j]):
            target = active[k]
            before = set(target)
            _eliminate(target, pivot_row, j, K, fraction_free)
            after = set(target)
            for c in before - after:
                columns[c].discard(k)
            for c in after - before:
                columns[c].add(k)
            if target:
                heapq.heappush(heap, (len(target), k))
            else:
                del active[k]
    return r


def _eliminate(target: dict, pivot_row: dict, j: int, K, fraction_free: bool) -> None:
    """Clear column j of target with pivot_row, in place."""
    a, p = target[j], pivot_row[j]
    if fraction_free:
        # target <- p*target - a*pivot_row
        for c in target:
            target[c] = p * target[c]
        factor = a
    else:
        factor = a * p**-1
    for c, v in pivot_row.items():
        value = target.get(c, K.zero) - factor * v
        if value:
            target[c] = value
        else:
            target.pop(c, None)
    if fraction_free and target:
        g = reduce(K.gcd, target.values())
        if g != K.one:
            for c in target:
                target[c] = K.exquo(target[c], g)


def _cross_check_rank(m: DomainMatrix, r: int) -> None:
    _, num = m.to_sparse().clear_denoms(convert=True)
    mod_ranks = [markowitz_rank(num.convert_to(GF(p))) for p in CHECK_PRIMES]
    if any(rp > r for rp in mod_ranks) or r not in mod_ranks:
        raise ConsistencyError(
            f"Rank mismatch: rational rank {r}, modular ranks {mod_ranks} for shape {m.shape}"
        )


def kernel_basis(m: DomainMatrix) -> List[Vector]:
    """Basis of the null space of m; exactly cols - rank(m) vectors v with m·v = 0."""
    rows, cols = m.shape
    K = m.domain
    if cols == 0:
        return []
    if rows == 0 or is_zero(m):
        return [{j: K.one} for j in range(cols)]
    reduced, pivots = m.to_sparse().rref()
    null = reduced.nullspace_from_rref(pivots).to_sparse().rep
    return [dict(null[i]) for i in sorted(null)]


def solve(m: DomainMatrix, rhs: Sequence[Vector]) -> List[Vector]:
    """
    Particular solutions x of m·x = b for each b in rhs.

    Raises:
        ConsistencyError: If some b is not in the column span of m
    """
    rows, cols = m.shape
    K = m.domain
    if not rhs:
        return []
    if rows == 0:
        return [{} for _ in rhs]

    aug_cols = columns_of(m) + list(rhs)
    aug = matrix_from_columns(aug_cols, rows, K)
    if is_zero(aug):
        return [{} for _ in rhs]
    reduced, pivots = aug.rref()
    if any(p >= cols for p in pivots):
        raise ConsistencyError("Right-hand side is not in the column span")

    red = reduced.to_sparse().rep
    solutions = []
    for j in range(len(rhs)):
        x = {}
        for r, p in enumerate(pivots):
            c = red.get(r, {}).get(cols + j)
            if c:
                x[p] = c
        solutions.append(x)
    return solutions


def independent_columns(vectors: Sequence[Vector], dim: int, K) -> List[int]:
    """Positions of a greedy (left-to-right) maximal independent subset of vectors."""
    if not vectors or dim == 0:
        return []
    mat = matrix_from_columns(vectors, dim, K)
    if is_zero(mat):
        return []
    return list(mat.rref()[1])


# In[4]: Based complexes
@dataclass
class BasedComplex:
    """
    Finite complex of based vector spaces.

    For grading "chain", maps[k] is the differential from degree k+1 to degree k
    (shape dims[k] x dims[k+1]); for "cochain", maps[k] goes from degree k to k+1
    (shape dims[k+1] x dims[k]). The differential leaving the top degree (chain) or
    entering past the top (cochain) is taken to be zero; the top degree is therefore
    a truncation artifact.
    """

    dims: List[int]
    maps: List[DomainMatrix]
    domain: object
    grading: str = "chain"

    def __post_init__(self):
        if self.grading not in {"chain", "cochain"}:
            raise ValueError(f"Unknown grading: {self.grading}")
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ValueError("A complex on N+1 degrees needs exactly N differentials")
        for k, m in enumerate(self.maps):
            expected = (
                (self.dims[k], self.dims[k + 1])
                if self.grading == "chain"
                else (self.dims[k + 1], self.dims[k])
            )
            if m.shape != expected:
                raise ValueError(f"Differential {k} has shape {m.shape}, expected {expected}")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    @property
    def truncated_degree(self) -> int:
        return self.top

    def outgoing(self, n: int) -> Optional[DomainMatrix]:
        if self.grading == "chain":
            return self.maps[n - 1] if n >= 1 else None
        return self.maps[n] if n < self.top else None

    def incoming(self, n: int) -> Optional[DomainMatrix]:
        if self.grading == "chain":
            return self.maps[n] if n < self.top else None
        return self.maps[n - 1] if n >= 1 else None

    def square_defects(self) -> List[int]:
        """Degrees n where the composite of the two differentials through n is nonzero."""
        bad = []
        for n in range(1, self.top):
            first, second = self.incoming(n), self.outgoing(n)
            if not is_zero(second.matmul(first)):
                bad.append(n)
        return bad

    def check(self) -> None:
        bad = self.square_defects()
        if bad:
            raise ValueError(f"Differentials do not square to zero at degree(s) {bad}")

    def dual(self) -> "BasedComplex":
        """Degreewise dual complex with transposed differentials."""
        flipped = "cochain" if self.grading == "chain" else "chain"
        return BasedComplex(
            list(self.dims), [m.transpose() for m in self.maps], self.domain, flipped
        )


def homology_dims(c: BasedComplex, check: bool = True, threads: Optional[int] = None) -> List[int]:
    """
    dim H_n = dim ker(outgoing) - rank(incoming) for every degree of c.

    The value at c.truncated_degree assumes the next differential is zero.
    """
    if check:
        c.check()
    ranks = parallel_map(rank, c.maps, threads=threads)
    # maps[n-1] and maps[n] are the two differentials touching degree n in either grading
    return [
        c.dims[n] - (ranks[n - 1] if n >= 1 else 0) - (ranks[n] if n < c.top else 0)
        for n in range(len(c.dims))
    ]


@dataclass
class HomologyBasis:
    """Representatives of ker(outgoing) / im(incoming) at one degree."""

    dimension: int
    boundaries: List[Vector]
    representatives: List[Vector]
    domain: object

    def coordinates(self, vectors: Sequence[Vector]) -> DomainMatrix:
        """
        Coordinates of cycles in the representative basis (modulo boundaries).

        Raises:
            ConsistencyError: If some vector is not a cycle
        """
        K = self.domain
        nb, nr = len(self.boundaries), len(self.representatives)
        if not vectors:
            return zero_matrix(nr, 0, K)
        basis = matrix_from_columns(self.boundaries + self.representatives, self.dimension, K)
        solutions = solve(basis, vectors)
        cols = [{k - nb: c for k, c in x.items() if k >= nb} for x in solutions]
        return matrix_from_columns(cols, nr, K)


def homology_basis(c: BasedComplex, n: int) -> HomologyBasis:
    K = c.domain
    dim = c.dims[n]
    out = c.outgoing(n)
    inc = c.incoming(n)
    cycles = kernel_basis(out) if out is not None else [{j: K.one} for j in range(dim)]
    boundaries = [col for col in columns_of(inc) if col] if inc is not None else []
    picked = independent_columns(boundaries + cycles, dim, K)
    nb = len(boundaries)
    reps = [cycles[p - nb] for p in picked if p >= nb]
    return HomologyBasis(dim, boundaries, reps, K)


# In[5]: Long sequences
def exactness_defects(spaces: Sequence[int], maps: Sequence[DomainMatrix]) -> List[int]:
    """
    Exactness defects of V_0 -> V_1 -> ... -> V_k.

    Args:
        spaces: Dimensions of V_0..V_k
        maps: maps[i]: V_i -> V_{i+1}, shape (spaces[i+1], spaces[i])

    Returns:
        dim ker(outgoing) - rank(incoming) at each interior node V_1..V_{k-1}

    Raises:
        ValueError: On non-composable maps or a nonzero composite
    """
    if len(maps) != len(spaces) - 1:
        raise ValueError("Need exactly one map between consecutive spaces")
    for i, m in enumerate(maps):
        if m.shape != (spaces[i + 1], spaces[i]):
            raise ValueError(
                f"Map {i} has shape {m.shape}, not composable with spaces "
                f"{spaces[i]} -> {spaces[i + 1]}"
            )
    for i in range(1, len(maps)):
        if not is_zero(maps[i].matmul(maps[i - 1])):
            raise ValueError(f"Composite of maps {i - 1} and {i} is not zero")
    ranks = [rank(m) for m in maps]
    return [spaces[i] - ranks[i] - ranks[i - 1] for i in range(1, len(spaces) - 1)]
