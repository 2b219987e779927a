"""
Shuffle and cyclic shuffle products into the nerve of a tensor product category,
their chain-level identities, and the Eilenberg–Zilber and Künneth checks.

Chains of A, B and A ⊗ B are internal tuples of basis positions (see nerve.py); the
basis of A ⊗ B is ordered a-major, so (α, β) sits at α·|B| + β.
"""

# In[0]: Imports
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .cyclic import connes_b_vector, cyclic_homology, homology_level_maps
from .exactlin import add_into, block_matrix, identity_matrix, kron, rank
from .homology import hochschild_homology
from .nerve import (
    Chain,
    ChainVector,
    boundary_vector,
    describe,
    nerve_basis,
    normalized_basis,
    project,
)
from .products_dir import (
    CONVENTIONS,
    CYCLIC_SHUFFLE,
    DEFAULT_CONVENTION,
    SHUFFLE,
    SignConvention,
    enumerate_shuffles,
    graded_sign,
)
from .supercat import SuperCategory, tensor_product
from .utils import parallel_map

PairVector = Dict[Tuple[Chain, Chain], object]


# In[1]: Product context
class ProductContext:
    """A pair of categories together with their tensor product."""

    def __init__(self, a_cat: SuperCategory, b_cat: SuperCategory, tensor: Optional[SuperCategory] = None):
        self.a = a_cat
        self.b = b_cat
        self.t = tensor if tensor is not None else tensor_product(a_cat, b_cat)
        self.ia = a_cat.index()
        self.ib = b_cat.index()
        self.nb = len(self.ib.ids)
        self.K = a_cat.K

    def pair(self, alpha: int, beta: int) -> int:
        return alpha * self.nb + beta

    def parity(self, chain: Chain, idx) -> int:
        return sum(idx.parity[x] for x in chain) % 2


# In[2]: sh and csh on basis chains
def _sh_basis(ctx: ProductContext, a: Chain, b: Chain, conv: SignConvention) -> ChainVector:
    ia, ib = ctx.ia, ctx.ib
    p, q = len(a) - 1, len(b) - 1
    pa = [ia.parity[x] for x in a]
    pb = [ib.parity[y] for y in b]
    x_objs = [ia.src[x] for x in a]
    y_objs = [ib.src[y] for y in b]
    head = ctx.pair(a[0], b[0])
    if conv.koszul_in_shuffle:
        lead = -1 if (pb[0] * sum(pa[1:]) + pa[0] * pb[0]) % 2 else 1
    else:
        lead = 1

    out: ChainVector = {}
    for sigma in enumerate_shuffles(p, q, SHUFFLE):
        entries = [head]
        i = j = 0
        for label in sigma.arrangement:
            if label <= p:
                i += 1
                entries.append(ctx.pair(a[i], ib.identity[y_objs[j]]))
            else:
                j += 1
                entries.append(ctx.pair(ia.identity[x_objs[i]], b[j]))
        if conv.koszul_in_shuffle:
            sign = lead * graded_sign(sigma, pa[1:] + pb[1:])
        else:
            sign = sigma.sign
        add_into(out, {tuple(entries): ctx.K.one if sign > 0 else -ctx.K.one})
    return out


def _csh_basis(ctx: ProductContext, a: Chain, b: Chain, conv: SignConvention) -> ChainVector:
    """s(a) ⊥ s(b): cyclic shuffles of the blocks (a0..ap) and (b0..bq) behind the unit."""
    ia, ib = ctx.ia, ctx.ib
    big_p, big_q = len(a), len(b)
    pa = [ia.parity[x] for x in a]
    pb = [ib.parity[y] for y in b]
    degree_sign = -1 if conv.degree(big_p - 1, sum(pa) % 2) % 2 else 1

    out: ChainVector = {}
    for sigma in enumerate_shuffles(big_p, big_q, CYCLIC_SHUFFLE):
        arr = sigma.arrangement
        first_a = next(label for label in arr if label <= big_p) - 1
        first_b = next(label for label in arr if label > big_p) - big_p - 1
        x_cur = ia.tgt[a[first_a]]
        y_cur = ib.tgt[b[first_b]]
        unit = ctx.pair(ia.identity[x_cur], ib.identity[y_cur])
        entries = [unit]
        for label in arr:
            if label <= big_p:
                x = a[label - 1]
                entries.append(ctx.pair(x, ib.identity[y_cur]))
                x_cur = ia.src[x]
            else:
                y = b[label - big_p - 1]
                entries.append(ctx.pair(ia.identity[x_cur], y))
                y_cur = ib.src[y]
        if conv.koszul_in_shuffle:
            sign = degree_sign * graded_sign(sigma, pa + pb)
        else:
            sign = degree_sign * sigma.sign
        add_into(out, {tuple(entries): ctx.K.one if sign > 0 else -ctx.K.one})
    return out


PRODUCT_KINDS = {"sh": _sh_basis, "csh": _csh_basis}


def shuffle_product(
    a_cat: SuperCategory,
    b_cat: SuperCategory,
    a: ChainVector,
    b: ChainVector,
    kind: str = "sh",
    conv: SignConvention = DEFAULT_CONVENTION,
    ctx: Optional[ProductContext] = None,
) -> ChainVector:
    """
    sh (degree p+q) or csh (degree p+q+2) of two chain vectors, landing in the cyclic
    nerve of tensor_product(a_cat, b_cat).

    Raises:
        ValueError: On an unknown kind or inputs of mixed degree
    """
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"Unknown product '{kind}' (expected sh or csh)")
    for name, vec in (("first", a), ("second", b)):
        if len({len(c) for c in vec}) > 1:
            raise ValueError(f"The {name} factor mixes chain degrees")
    ctx = ctx or ProductContext(a_cat, b_cat)
    return _pairs_product(ctx, {(x, y): cx * cy for x, cx in a.items() for y, cy in b.items()}, kind, conv)


def _pairs_product(ctx: ProductContext, pairs: PairVector, kind: str, conv: SignConvention) -> ChainVector:
    func = PRODUCT_KINDS[kind]
    out: ChainVector = {}
    for (x, y), c in pairs.items():
        add_into(out, func(ctx, x, y, conv), c)
    return out


# In[3]: Tensor-of-complexes operators
def _tensor_operator(
    ctx: ProductContext,
    pairs: PairVector,
    conv: SignConvention,
    op_a: Callable[[ChainVector], ChainVector],
    op_b: Callable[[ChainVector], ChainVector],
) -> PairVector:
    """op(x ⊗ y) = op(x) ⊗ y + (−1)^{deg x} x ⊗ op(y)."""
    out: PairVector = {}
    for (x, y), c in pairs.items():
        for x2, cx in op_a({x: ctx.K.one}).items():
            add_into(out, {(x2, y): cx * c})
        deg = conv.degree(len(x) - 1, ctx.parity(x, ctx.ia))
        coef = -c if deg % 2 else c
        for y2, cy in op_b({y: ctx.K.one}).items():
            add_into(out, {(x, y2): cy * coef})
    return out


def _normalized_ops(cat: SuperCategory):
    def boundary(vec):
        return project(cat, boundary_vector(cat, vec))

    def connes_b(vec):
        return project(cat, connes_b_vector(cat, vec))

    return boundary, connes_b


# In[4]: Chain identities
IDENTITIES = ("[d,sh]", "[B,sh]+[d,csh]", "[B,csh]")


@dataclass
class IdentityFailure:
    identity: str
    p: int
    q: int
    witness: str


@dataclass
class IdentityReport:
    convention: str
    nmax: int
    checked: Dict[str, int] = field(default_factory=dict)
    failures: Dict[str, int] = field(default_factory=dict)
    first_failure: Dict[str, IdentityFailure] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not any(self.failures.values())

    def to_dict(self) -> dict:
        return {
            "convention": self.convention,
            "nmax": self.nmax,
            "checked": dict(self.checked),
            "failures": dict(self.failures),
            "first_failure": {
                k: {"p": f.p, "q": f.q, "witness": f.witness} for k, f in self.first_failure.items()
            },
            "holds": self.holds,
        }


def _basis_pairs(ctx: ProductContext, nmax: int, sample: Optional[int], seed: Optional[int]):
    rng = random.Random(seed)
    pairs = []
    for total in range(nmax + 1):
        degree_pairs = [
            (p, total - p, x, y)
            for p in range(total + 1)
            for x in normalized_basis(ctx.a, p)
            for y in normalized_basis(ctx.b, total - p)
        ]
        if sample is not None and len(degree_pairs) > sample:
            degree_pairs = rng.sample(degree_pairs, sample)
        pairs.extend(degree_pairs)
    return pairs


def _identity_defects(ctx: ProductContext, x: Chain, y: Chain, conv: SignConvention) -> Dict[str, ChainVector]:
    bd_a, cb_a = _normalized_ops(ctx.a)
    bd_b, cb_b = _normalized_ops(ctx.b)
    bd_t, cb_t = _normalized_ops(ctx.t)
    one = {(x, y): ctx.K.one}
    minus = -ctx.K.one

    sh = project(ctx.t, _sh_basis(ctx, x, y, conv))
    csh = project(ctx.t, _csh_basis(ctx, x, y, conv))
    d_pairs = _tensor_operator(ctx, one, conv, bd_a, bd_b)
    b_pairs = _tensor_operator(ctx, one, conv, cb_a, cb_b)

    def sh_of(pairs, kind):
        return project(ctx.t, _pairs_product(ctx, pairs, kind, conv))

    first = dict(bd_t(sh))
    add_into(first, sh_of(d_pairs, "sh"), minus)

    second = dict(cb_t(sh))
    add_into(second, sh_of(b_pairs, "sh"), minus)
    add_into(second, bd_t(csh))
    add_into(second, sh_of(d_pairs, "csh"), minus)

    third = dict(cb_t(csh))
    add_into(third, sh_of(b_pairs, "csh"), minus)
    return dict(zip(IDENTITIES, (first, second, third)))


def verify_chain_identities(
    a_cat: SuperCategory,
    b_cat: SuperCategory,
    nmax: int,
    conv: SignConvention = DEFAULT_CONVENTION,
    seed: Optional[int] = None,
    sample: Optional[int] = None,
    stop_at_first: bool = False,
    threads: Optional[int] = None,
    ctx: Optional[ProductContext] = None,
) -> IdentityReport:
    """
    Evaluate [∂,sh] = 0, [B,sh] + [∂,csh] = 0 and [B,csh] = 0 on normalized basis pairs
    x ⊗ y with deg x + deg y <= nmax.

    Args:
        a_cat, b_cat: Valid categories over the same field
        nmax: Largest total degree p + q
        conv: Sign convention
        seed: Seed for sampling basis pairs
        sample: Evaluate at most this many pairs per total degree (None: all)
        stop_at_first: Stop after the first failing pair
        threads: Worker cap
    """
    ctx = ctx or ProductContext(a_cat, b_cat)
    report = IdentityReport(convention=conv.name, nmax=nmax)
    for name in IDENTITIES:
        report.checked[name] = 0
        report.failures[name] = 0
    pairs = _basis_pairs(ctx, nmax, sample, seed)

    def evaluate(item):
        p, q, x, y = item
        return item, _identity_defects(ctx, x, y, conv)

    batch = len(pairs) if not stop_at_first else 1
    for start in range(0, len(pairs), max(batch, 1)):
        results = parallel_map(evaluate, pairs[start : start + batch], threads)
        for (p, q, x, y), defects in results:
            for name, defect in defects.items():
                report.checked[name] += 1
                if defect:
                    report.failures[name] += 1
                    if name not in report.first_failure:
                        witness = f"{describe(ctx.a, x)} ⊗ {describe(ctx.b, y)}"
                        report.first_failure[name] = IdentityFailure(name, p, q, witness)
        if stop_at_first and not report.holds:
            break
    return report


@dataclass
class ConventionResolution:
    selected: Optional[str]
    reports: Dict[str, IdentityReport]

    def to_dict(self) -> dict:
        return {
            "selected": self.selected,
            "reports": {name: r.to_dict() for name, r in self.reports.items()},
        }


def resolve_convention(
    a_cat: SuperCategory,
    b_cat: SuperCategory,
    nmax: int,
    seed: Optional[int] = None,
    sample: Optional[int] = None,
    threads: Optional[int] = None,
) -> ConventionResolution:
    """
    Try every SignConvention in resolver order and select the first one under which
    all three identities hold; every rejected convention keeps its first witness.
    """
    ctx = ProductContext(a_cat, b_cat)
    selected = None
    reports = {}
    for conv in CONVENTIONS:
        report = verify_chain_identities(
            a_cat, b_cat, nmax, conv, seed, sample, stop_at_first=True, threads=threads, ctx=ctx
        )
        reports[conv.name] = report
        if selected is None and report.holds:
            selected = conv.name
    return ConventionResolution(selected, reports)


# In[5]: Associativity
def shuffle_associativity(
    a_cat: SuperCategory,
    b_cat: SuperCategory,
    c_cat: SuperCategory,
    max_degree: int = 2,
    conv: SignConvention = DEFAULT_CONVENTION,
) -> List[str]:
    """
    Compare sh(sh(a, b), c) with sh(a, sh(b, c)) on basis chains of total degree
    <= max_degree; chains of (A⊗B)⊗C and A⊗(B⊗C) are matched by their morphism ids.

    Returns:
        list: Descriptions of mismatching triples (empty when associative)
    """
    ab = ProductContext(a_cat, b_cat)
    ab_c = ProductContext(ab.t, c_cat)
    bc = ProductContext(b_cat, c_cat)
    a_bc = ProductContext(a_cat, bc.t)

    def named(cat, vec):
        return {describe(cat, chain).entries: c for chain, c in vec.items()}

    mismatches = []
    for total in range(max_degree + 1):
        for p in range(total + 1):
            for q in range(total - p + 1):
                r = total - p - q
                for x in nerve_basis(a_cat, p):
                    for y in nerve_basis(b_cat, q):
                        xy = _sh_basis(ab, x, y, conv)
                        for z in nerve_basis(c_cat, r):
                            yz = _sh_basis(bc, y, z, conv)
                            left = _pairs_product(ab_c, {(w, z): c for w, c in xy.items()}, "sh", conv)
                            right = _pairs_product(a_bc, {(x, w): c for w, c in yz.items()}, "sh", conv)
                            if named(ab_c.t, left) != named(a_bc.t, right):
                                mismatches.append(
                                    f"{describe(a_cat, x)} ⊗ {describe(b_cat, y)} ⊗ {describe(c_cat, z)}"
                                )
    return mismatches


# In[6]: Eilenberg–Zilber
@dataclass
class EZReport:
    tensor_dims: List[int]
    expected: List[int]
    sh_ranks: List[int]

    @property
    def holds(self) -> bool:
        return self.tensor_dims == self.expected and self.sh_ranks == self.expected

    def to_dict(self) -> dict:
        return {
            "tensor_dims": self.tensor_dims,
            "expected": self.expected,
            "sh_ranks": self.sh_ranks,
            "holds": self.holds,
        }


def _as_chain_vector(cat: SuperCategory, degree: int, vec: Dict[int, object]) -> ChainVector:
    basis = normalized_basis(cat, degree)
    return {basis[i]: c for i, c in vec.items()}


def ez_check(
    a_cat: SuperCategory,
    b_cat: SuperCategory,
    nmax: int,
    conv: SignConvention = DEFAULT_CONVENTION,
    threads: Optional[int] = None,
) -> EZReport:
    """
    dim HH_n(A⊗B) against Σ_{p+q=n} dim HH_p(A)·dim HH_q(B), and the rank of sh on
    products of representatives, read in HH_n(A⊗B).
    """
    ctx = ProductContext(a_cat, b_cat)
    hh_a = hochschild_homology(a_cat, nmax, normalized=True, with_representatives=True, threads=threads)
    hh_b = hochschild_homology(b_cat, nmax, normalized=True, with_representatives=True, threads=threads)
    hh_t = hochschild_homology(ctx.t, nmax, normalized=True, with_representatives=True, threads=threads)

    expected, ranks = [], []
    for n in range(nmax + 1):
        expected.append(sum(hh_a[p] * hh_b[n - p] for p in range(n + 1)))
        positions = {c: k for k, c in enumerate(normalized_basis(ctx.t, n))}
        images = []
        for p in range(n + 1):
            for za in hh_a.representatives[p].representatives:
                for zb in hh_b.representatives[n - p].representatives:
                    x = _as_chain_vector(a_cat, p, za)
                    y = _as_chain_vector(b_cat, n - p, zb)
                    image = project(ctx.t, shuffle_product(a_cat, b_cat, x, y, "sh", conv, ctx))
                    images.append({positions[c]: v for c, v in image.items()})
        basis_t = hh_t.representatives[n]
        ranks.append(rank(basis_t.coordinates(images)) if images and basis_t.representatives else 0)
    return EZReport(list(hh_t.dims), expected, ranks)


# In[7]: Künneth sequence
@dataclass
class KunnethReport:
    tensor_dims: List[int]
    kernel_dims: List[int]
    cokernel_dims: List[int]

    @property
    def predicted(self) -> List[int]:
        return [k + c for k, c in zip(self.kernel_dims, self.cokernel_dims)]

    @property
    def holds(self) -> bool:
        return self.tensor_dims == self.predicted

    def to_dict(self) -> dict:
        return {
            "tensor_dims": self.tensor_dims,
            "kernel_dims": self.kernel_dims,
            "cokernel_dims": self.cokernel_dims,
            "predicted": self.predicted,
            "holds": self.holds,
        }


def kunneth_map(maps_a, maps_b, m: int, K):
    """
    φ_m = S⊗id − id⊗S from ⊕_{p+q=m} HC_p(A)⊗HC_q(B) to ⊕_{p+q=m-2}.

    Returns:
        tuple: (matrix, source dimension, target dimension)
    """
    src = [(p, m - p) for p in range(m + 1)]
    tgt = [(p, m - 2 - p) for p in range(m - 1)] if m >= 2 else []
    src_sizes = [maps_a.hc_dim(p) * maps_b.hc_dim(q) for p, q in src]
    tgt_sizes = [maps_a.hc_dim(p) * maps_b.hc_dim(q) for p, q in tgt]
    tgt_pos = {pq: k for k, pq in enumerate(tgt)}
    blocks = {}
    for j, (p, q) in enumerate(src):
        if not src_sizes[j]:
            continue
        if p >= 2 and tgt_sizes[tgt_pos[(p - 2, q)]]:
            blocks[(tgt_pos[(p - 2, q)], j)] = kron(maps_a.S[p], identity_matrix(maps_b.hc_dim(q), K))
        if q >= 2 and tgt_sizes[tgt_pos[(p, q - 2)]]:
            block = kron(identity_matrix(maps_a.hc_dim(p), K), maps_b.S[q]).neg()
            key = (tgt_pos[(p, q - 2)], j)
            blocks[key] = blocks[key] + block if key in blocks else block
    return block_matrix(blocks, tgt_sizes, src_sizes, K), sum(src_sizes), sum(tgt_sizes)


def kunneth_check(
    a_cat: SuperCategory,
    b_cat: SuperCategory,
    nmax: int,
    threads: Optional[int] = None,
) -> KunnethReport:
    """dim HC_n(A⊗B) against dim ker φ_n + dim coker φ_{n+1} for n <= nmax."""
    K = a_cat.K
    maps_a = homology_level_maps(a_cat, nmax + 1, threads=threads)
    maps_b = homology_level_maps(b_cat, nmax + 1, threads=threads)
    tensor = tensor_product(a_cat, b_cat)
    hc_t = cyclic_homology(tensor, nmax, method="mixed", threads=threads)

    phis = {m: kunneth_map(maps_a, maps_b, m, K) for m in range(nmax + 2)}
    kernels, cokernels = [], []
    for n in range(nmax + 1):
        phi, src_dim, _ = phis[n]
        kernels.append(src_dim - rank(phi))
        phi_next, _, tgt_dim = phis[n + 1]
        cokernels.append(tgt_dim - rank(phi_next))
    return KunnethReport(list(hc_t.dims), kernels, cokernels)
