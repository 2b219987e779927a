"""
Cyclic operators, the cyclic bicomplex, cyclic (co)homology and the Gysin–Connes
sequence HH_n -> HC_n -> HC_{n-2} -> HH_{n-1} -> ...
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
    add_into,
    apply,
    block_matrix,
    exactness_defects,
    homology_basis,
    identity_matrix,
    is_zero,
    rank,
    solve,
    zero_matrix,
)
from .homology import HomologyResult, hochschild_complex, homology_result
from .nerve import (
    ChainVector,
    chain_matrix,
    boundary_matrix,
    nerve_basis,
    normalized_basis,
    normalized_boundary,
    normalized_columns,
)
from .supercat import SuperCategory
from .utils import parallel_map

OPERATORS = ("t", "N", "s", "B")


# In[1]: Chain-level operators
def t_vector(cat: SuperCategory, vec: ChainVector) -> ChainVector:
    """t(a0..an) = (−1)^{n + |an|(|a0|+...+|a_{n-1}|)} (an, a0, ..., a_{n-1})."""
    idx = cat.index()
    out: ChainVector = {}
    for chain, c in vec.items():
        n = len(chain) - 1
        an = chain[-1]
        rest = sum(idx.parity[a] for a in chain[:-1])
        negate = (n + idx.parity[an] * rest) % 2
        add_into(out, {(an,) + chain[:-1]: -c if negate else c})
    return out


def norm_vector(cat: SuperCategory, vec: ChainVector) -> ChainVector:
    """N = 1 + t + ... + t^n."""
    out: ChainVector = {}
    for chain, c in vec.items():
        current = {chain: c}
        for _ in range(len(chain)):
            add_into(out, current)
            current = t_vector(cat, current)
    return out


def s_vector(cat: SuperCategory, vec: ChainVector) -> ChainVector:
    """Extra degeneracy s(a0..an) = (1_{Xn}, a0, ..., an)."""
    idx = cat.index()
    out: ChainVector = {}
    for chain, c in vec.items():
        unit = idx.identity[idx.tgt[chain[0]]]
        add_into(out, {(unit,) + chain: c})
    return out


def connes_b_vector(cat: SuperCategory, vec: ChainVector) -> ChainVector:
    """Connes' operator B = (1 − t) s N, raising degree by one."""
    lifted = s_vector(cat, norm_vector(cat, vec))
    out = dict(lifted)
    add_into(out, t_vector(cat, lifted), -cat.K.one)
    return out


def _operator_matrix(cat, n, func, target_degree):
    K = cat.K
    columns = [func(cat, {chain: K.one}) for chain in nerve_basis(cat, n)]
    return chain_matrix(cat, columns, target_degree)


def cyclic_operator(cat: SuperCategory, n: int, kind: str, normalized: Optional[bool] = None) -> DomainMatrix:
    """
    Matrix of t, N (degree n -> n), s or B (degree n -> n+1) on the cyclic nerve.

    B defaults to the normalized quotient (projection·(1−t)sN·section); pass
    normalized=False for the matrix on all chains.
    """
    if kind not in OPERATORS:
        raise ValueError(f"Unknown cyclic operator '{kind}' (expected one of {OPERATORS})")
    if kind == "B" and normalized is None:
        normalized = True
    key = ("operator", kind, n, bool(normalized))
    cached = cat._cache.get(key)
    if cached is not None:
        return cached
    if kind == "t":
        cached = _operator_matrix(cat, n, t_vector, n)
    elif kind == "N":
        cached = _operator_matrix(cat, n, norm_vector, n)
    elif kind == "s":
        cached = _operator_matrix(cat, n, s_vector, n + 1)
    elif normalized:
        K = cat.K
        columns = [connes_b_vector(cat, {c: K.one}) for c in normalized_basis(cat, n)]
        cached = normalized_columns(cat, n + 1, columns)
    else:
        cached = _operator_matrix(cat, n, connes_b_vector, n + 1)
    cat._cache[key] = cached
    return cached


def one_minus_t(cat: SuperCategory, n: int) -> DomainMatrix:
    t = cyclic_operator(cat, n, "t")
    return identity_matrix(t.shape[0], cat.K) - t


# In[2]: Cyclic bicomplex
@dataclass
class Bicomplex:
    """
    CC_{p,q} = C_q. Column p carries ∂ (p even) or −∂̄ (p odd); the horizontal map
    out of column p is 1 − t for p odd and N for p even, p >= 2.
    """

    cat: SuperCategory
    top: int

    def dim(self, q: int) -> int:
        return len(nerve_basis(self.cat, q))

    def vertical(self, p: int, q: int) -> DomainMatrix:
        """CC_{p,q} -> CC_{p,q-1}."""
        if p % 2 == 0:
            return boundary_matrix(self.cat, q, "full")
        return boundary_matrix(self.cat, q, "bar").neg()

    def horizontal(self, p: int, q: int) -> DomainMatrix:
        """CC_{p,q} -> CC_{p-1,q}."""
        if p % 2 == 1:
            return one_minus_t(self.cat, q)
        return cyclic_operator(self.cat, q, "N")

    def square_defects(self) -> List[Tuple[int, int]]:
        """Squares (p, q) where vertical·horizontal + horizontal·vertical != 0."""
        bad = []
        for p in range(1, self.top + 1):
            for q in range(1, self.top - p + 1):
                # CC_{p,q} -> CC_{p-1,q-1} both ways round
                lhs = self.vertical(p - 1, q).matmul(self.horizontal(p, q))
                rhs = self.horizontal(p, q - 1).matmul(self.vertical(p, q))
                if not is_zero(lhs + rhs):
                    bad.append((p, q))
        return bad

    def total(self, threads: Optional[int] = None) -> "TotalComplex":
        return total_complex(self.cat, self.top, threads=threads)


@dataclass
class TotalComplex:
    """Tot_n = ⊕_p blocks; offsets[n][p] is where block p starts inside Tot_n."""

    complex: BasedComplex
    block_sizes: List[List[int]]
    offsets: List[List[int]] = field(default_factory=list)

    def __post_init__(self):
        self.offsets = []
        for sizes in self.block_sizes:
            off = [0]
            for size in sizes:
                off.append(off[-1] + size)
            self.offsets.append(off)

    def block(self, n: int, p: int, vec: Dict[int, object]) -> Dict[int, object]:
        """Block-p component of a Tot_n vector, in block coordinates."""
        lo, hi = self.offsets[n][p], self.offsets[n][p + 1]
        return {i - lo: c for i, c in vec.items() if lo <= i < hi}

    def embed(self, n: int, p: int, vec: Dict[int, object]) -> Dict[int, object]:
        lo = self.offsets[n][p]
        return {lo + i: c for i, c in vec.items()}


def _assemble(cat, sizes, blocks_for, top, threads):
    K = cat.K

    def differential(n):
        return block_matrix(blocks_for(n), sizes[n - 1], sizes[n], K)

    maps = parallel_map(differential, range(1, top + 1), threads)
    dims = [sum(s) for s in sizes]
    return BasedComplex(dims, list(maps), K, "chain")


def total_complex(cat: SuperCategory, top: int, threads: Optional[int] = None) -> TotalComplex:
    """Tot_n = ⊕_{p=0..n} CC_{p,n-p} with d = vertical + horizontal, degrees 0..top."""
    bic = Bicomplex(cat, top)
    sizes = [[bic.dim(n - p) for p in range(n + 1)] for n in range(top + 1)]

    def blocks_for(n):
        blocks = {}
        for p in range(n + 1):
            q = n - p
            if q >= 1:
                blocks[(p, p)] = bic.vertical(p, q)
            if p >= 1:
                blocks[(p - 1, p)] = bic.horizontal(p, q)
        return blocks

    return TotalComplex(_assemble(cat, sizes, blocks_for, top, threads), sizes)


def mixed_total_complex(cat: SuperCategory, top: int, threads: Optional[int] = None) -> TotalComplex:
    """
    Normalized (b, B) complex: Tot_n = ⊕_k N̄_{n-2k}, b keeps block k and B moves
    block k to block k-1.
    """
    dims = [len(normalized_basis(cat, n)) for n in range(top + 1)]
    sizes = [[dims[n - 2 * k] for k in range(n // 2 + 1)] for n in range(top + 1)]

    def blocks_for(n):
        blocks = {}
        for k in range(n // 2 + 1):
            q = n - 2 * k
            if q >= 1:
                blocks[(k, k)] = normalized_boundary(cat, q)
            if k >= 1:
                blocks[(k - 1, k)] = cyclic_operator(cat, q, "B", normalized=True)
        return blocks

    return TotalComplex(_assemble(cat, sizes, blocks_for, top, threads), sizes)


# In[3]: Cyclic homology and cohomology
METHODS = ("bicomplex", "mixed")


def cyclic_homology(
    cat: SuperCategory,
    nmax: int,
    method: str = "bicomplex",
    with_representatives: bool = False,
    threads: Optional[int] = None,
) -> HomologyResult:
    """
    dim HC_n for n <= nmax from the cyclic bicomplex (or the normalized mixed complex).

    The total complex is built through degree nmax + 1.
    """
    if method not in METHODS:
        raise ValueError(f"Unknown method '{method}' (expected one of {METHODS})")
    build = total_complex if method == "bicomplex" else mixed_total_complex
    tot = build(cat, nmax + 1, threads=threads)
    return homology_result("HC", tot.complex, nmax, method, with_representatives, threads)


def cyclic_cohomology(
    cat: SuperCategory,
    nmax: int,
    method: str = "bicomplex",
    threads: Optional[int] = None,
) -> HomologyResult:
    """dim HC^n from the dual of the total complex (transposed differentials)."""
    if method not in METHODS:
        raise ValueError(f"Unknown method '{method}' (expected one of {METHODS})")
    build = total_complex if method == "bicomplex" else mixed_total_complex
    tot = build(cat, nmax + 1, threads=threads)
    return homology_result("HC*", tot.complex.dual(), nmax, method, False, threads)


# In[4]: Maps on homology
@dataclass
class HomologyLevelMaps:
    """
    Matrices in the representative bases:
    I[n]: HH_n -> HC_n, S[n]: HC_n -> HC_{n-2}, B[m]: HC_m -> HH_{m+1}.
    """

    nmax: int
    domain: object
    hh: List[HomologyBasis]
    hc: List[HomologyBasis]
    I: Dict[int, DomainMatrix]
    S: Dict[int, DomainMatrix]
    B: Dict[int, DomainMatrix]

    def hh_dim(self, n: int) -> int:
        return len(self.hh[n].representatives) if 0 <= n <= self.nmax else 0

    def hc_dim(self, n: int) -> int:
        return len(self.hc[n].representatives) if 0 <= n <= self.nmax else 0


def _shift(tot: TotalComplex, vec, n_from: int, n_to: int, p_shift: int):
    """Move the blocks of a Tot_{n_from} vector by p_shift columns into Tot_{n_to}."""
    out = {}
    for p in range(len(tot.block_sizes[n_from])):
        target = p + p_shift
        if 0 <= target < len(tot.block_sizes[n_to]):
            part = tot.block(n_from, p, vec)
            if part:
                out.update(tot.embed(n_to, target, part))
    return out


def _coordinates(basis: HomologyBasis, vectors, K) -> DomainMatrix:
    if not basis.representatives:
        return zero_matrix(0, len(vectors), K)
    return basis.coordinates(vectors)


def homology_level_maps(cat: SuperCategory, nmax: int, threads: Optional[int] = None) -> HomologyLevelMaps:
    """
    I, S and the connecting map B on explicit representatives.

    B lifts a cycle y of Tot_m into columns >= 2 of Tot_{m+2}, applies d to land in
    columns 0 and 1, clears column 1 with a solution w of −∂̄w = u1 and reads the
    column-0 cycle u0 − (1 − t)w in HH_{m+1}.

    Raises:
        ConsistencyError: If a lift or a projection fails
    """
    K = cat.K
    top = nmax + 1
    hoch = hochschild_complex(cat, top, threads=threads)
    tot = total_complex(cat, top, threads=threads)
    hh = parallel_map(lambda n: homology_basis(hoch, n), range(nmax + 1), threads)
    hc = parallel_map(lambda n: homology_basis(tot.complex, n), range(nmax + 1), threads)

    I_maps, S_maps, B_maps = {}, {}, {}
    for n in range(nmax + 1):
        images = [tot.embed(n, 0, z) for z in hh[n].representatives]
        I_maps[n] = _coordinates(hc[n], images, K)

    for n in range(2, nmax + 1):
        images = [_shift(tot, x, n, n - 2, -2) for x in hc[n].representatives]
        S_maps[n] = _coordinates(hc[n - 2], images, K)

    for m in range(nmax):
        d = tot.complex.maps[m + 1]
        bar = boundary_matrix(cat, m + 1, "bar")
        omt = one_minus_t(cat, m + 1)
        images = []
        for y in hc[m].representatives:
            image = apply(d, _shift(tot, y, m, m + 2, 2))
            if any(tot.block(m + 1, p, image) for p in range(2, m + 2)):
                raise ConsistencyError(f"Lift of an HC_{m} cycle leaves columns 0 and 1")
            u0 = tot.block(m + 1, 0, image)
            u1 = tot.block(m + 1, 1, image)
            cycle = dict(u0)
            if u1:
                w = solve(bar, [{i: -c for i, c in u1.items()}])[0]
                add_into(cycle, apply(omt, w), -K.one)
            images.append(cycle)
        B_maps[m] = _coordinates(hh[m + 1], images, K)

    return HomologyLevelMaps(nmax, K, hh, hc, I_maps, S_maps, B_maps)


# In[5]: Gysin–Connes exactness
@dataclass
class GysinConnesReport:
    labels: List[str]
    dims: List[int]
    defects: List[int]

    @property
    def exact(self) -> bool:
        return not any(self.defects)

    def to_dict(self) -> dict:
        return {
            "labels": self.labels,
            "dims": self.dims,
            "defects": self.defects,
            "exact": self.exact,
        }


def gysin_connes_sequence(maps: HomologyLevelMaps):
    """
    Nodes and maps of HC_{nmax-1} -B-> HH_nmax -I-> HC_nmax -S-> HC_{nmax-2} -B-> ...
    -> HH_0 -I-> HC_0 -S-> 0.
    """
    K, nmax = maps.domain, maps.nmax
    labels, spaces, arrows = [], [], []

    def node(label, dim):
        labels.append(label)
        spaces.append(dim)

    if nmax >= 1:
        node(f"HC_{nmax - 1}", maps.hc_dim(nmax - 1))
        arrows.append(maps.B[nmax - 1])
    for n in range(nmax, -1, -1):
        node(f"HH_{n}", maps.hh_dim(n))
        arrows.append(maps.I[n])
        node(f"HC_{n}", maps.hc_dim(n))
        if n >= 2:
            arrows.append(maps.S[n])
            node(f"HC_{n - 2}", maps.hc_dim(n - 2))
            arrows.append(maps.B[n - 2])
        else:
            arrows.append(zero_matrix(0, maps.hc_dim(n), K))
            node("0", 0)
            if n == 1:
                arrows.append(zero_matrix(maps.hh_dim(0), 0, K))
    return labels, spaces, arrows


def verify_gysin_connes(cat: SuperCategory, nmax: int, threads: Optional[int] = None) -> GysinConnesReport:
    """Exactness defects at the interior nodes of the Gysin–Connes sequence up to degree nmax."""
    maps = homology_level_maps(cat, nmax, threads=threads)
    labels, spaces, arrows = gysin_connes_sequence(maps)
    return GysinConnesReport(labels, spaces, exactness_defects(spaces, arrows))


def connes_b_on_homology(
    cat: SuperCategory, nmax: int, threads: Optional[int] = None
) -> Dict[int, Tuple[int, int]]:
    """
    For m < nmax: rank of B∘I: HH_m -> HH_{m+1} from the zig-zag, next to the rank of
    the map induced by the chain-level (1 − t)sN.
    """
    maps = homology_level_maps(cat, nmax, threads=threads)
    out = {}
    for m in range(nmax):
        zigzag = maps.B[m].matmul(maps.I[m]) if maps.hc_dim(m) else None
        chain_b = cyclic_operator(cat, m, "B", normalized=False)
        images = [apply(chain_b, z) for z in maps.hh[m].representatives]
        induced = _coordinates(maps.hh[m + 1], images, maps.domain) if images else None
        out[m] = (rank(zigzag), rank(induced))
    return out
