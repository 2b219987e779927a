"""
Finite superadditive categories given by structure constants.

Composition is stored as ``compose(first, then)``: for first: X -> Y and
then: Y -> Z the product is a vector in hom(X, Z).
"""

# In[0]: Imports
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exactlin import (
    FieldSpec,
    add_into,
    independent_columns,
    matrix_from_columns,
    parse_scalar,
    solve,
)

MorphismDict = Dict[str, object]


# In[1]: Data model
@dataclass(frozen=True)
class BasisMorphism:
    id: str
    source: str
    target: str
    parity: int


@dataclass(frozen=True)
class MorphismVector:
    """A linear combination of basis morphisms of one hom space."""

    source: str
    target: str
    coefficients: Mapping[str, object]


@dataclass(frozen=True, eq=False)
class SuperCategory:
    field: FieldSpec
    objects: Tuple[str, ...]
    basis: Tuple[BasisMorphism, ...]
    identities: Dict[str, str]
    composition: Dict[Tuple[str, str], MorphismDict]
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def K(self):
        return self.field.domain

    def morphism(self, morphism_id: str) -> BasisMorphism:
        return self.basis[self.index().pos[morphism_id]]

    def hom(self, source: str, target: str) -> List[BasisMorphism]:
        return [b for b in self.basis if b.source == source and b.target == target]

    def compose(self, first: str, then: str) -> MorphismDict:
        """Structure constants of first-then-then; empty for zero or non-composable pairs."""
        return dict(self.composition.get((first, then), {}))

    def compose_vectors(self, first: Mapping[str, object], then: Mapping[str, object]) -> MorphismDict:
        out: MorphismDict = {}
        for i, a in first.items():
            for j, b in then.items():
                product = self.composition.get((i, j))
                if product:
                    add_into(out, product, a * b)
        return out

    def index(self) -> "CategoryIndex":
        idx = self._cache.get("index")
        if idx is None:
            idx = CategoryIndex(self)
            self._cache["index"] = idx
        return idx

    def same_as(self, other: "SuperCategory") -> bool:
        """Basis-level equality (order of objects and basis included)."""
        return (
            self.field == other.field
            and self.objects == other.objects
            and self.basis == other.basis
            and self.identities == other.identities
            and self.composition == other.composition
        )

    @property
    def dimension(self) -> int:
        return len(self.basis)


class CategoryIndex:
    """Integer-indexed view of a category used by the chain-level code."""

    def __init__(self, cat: SuperCategory):
        self.ids = [b.id for b in cat.basis]
        self.pos = {mid: i for i, mid in enumerate(self.ids)}
        self.obj_pos = {obj: k for k, obj in enumerate(cat.objects)}
        self.parity = [b.parity for b in cat.basis]
        self.src = [self.obj_pos[b.source] for b in cat.basis]
        self.tgt = [self.obj_pos[b.target] for b in cat.basis]
        self.identity = [self.pos[cat.identities[obj]] for obj in cat.objects]
        self.is_identity = [False] * len(self.ids)
        for i in self.identity:
            self.is_identity[i] = True
        n_obj = len(cat.objects)
        self.by_source: List[List[int]] = [[] for _ in range(n_obj)]
        self.by_target: List[List[int]] = [[] for _ in range(n_obj)]
        self.hom: Dict[Tuple[int, int], List[int]] = {}
        for i in range(len(self.ids)):
            self.by_source[self.src[i]].append(i)
            self.by_target[self.tgt[i]].append(i)
            self.hom.setdefault((self.src[i], self.tgt[i]), []).append(i)
        self.table: Dict[Tuple[int, int], List[Tuple[int, object]]] = {}
        for (first, then), vec in cat.composition.items():
            self.table[(self.pos[first], self.pos[then])] = [
                (self.pos[k], c) for k, c in vec.items()
            ]

    def compose(self, first: int, then: int) -> List[Tuple[int, object]]:
        return self.table.get((first, then), [])

    def hom_between(self, source: int, target: int) -> List[int]:
        return self.hom.get((source, target), [])


# In[2]: Construction
def _coerce(c, K):
    if isinstance(c, (int, str)) and not isinstance(c, bool):
        return parse_scalar(c, K)
    if K.of_type(c):
        return c
    return K.convert(c)


def build_category(
    field_spec: FieldSpec,
    objects: Sequence[str],
    morphisms: Iterable[Tuple[str, str, str, int]],
    identities: Mapping[str, str],
    composition: Mapping[Tuple[str, str], Mapping[str, object]],
    name: str = "",
    fill_identity_laws: bool = True,
) -> SuperCategory:
    """
    Assemble a SuperCategory from plain tables.

    Args:
        field_spec: Base field
        objects: Object names in order
        morphisms: (id, source, target, parity) in basis order
        identities: object -> identity basis id
        composition: (first, then) -> {id: coefficient}; coefficients may be ints,
            exact strings or domain elements, zero products may be omitted
        name: Display name
        fill_identity_laws: Add 1_X-compositions that the table leaves out
    """
    K = field_spec.domain
    basis = tuple(BasisMorphism(mid, src, tgt, int(par)) for mid, src, tgt, par in morphisms)
    table: Dict[Tuple[str, str], MorphismDict] = {}
    for key, vec in composition.items():
        coerced = {mid: _coerce(c, K) for mid, c in vec.items()}
        coerced = {mid: c for mid, c in coerced.items() if c}
        if coerced:
            table[tuple(key)] = coerced

    if fill_identity_laws:
        ids = set(identities.values())
        for b in basis:
            left, right = identities.get(b.source), identities.get(b.target)
            if left in ids and (left, b.id) not in table:
                table[(left, b.id)] = {b.id: K.one}
            if right in ids and (b.id, right) not in table:
                table[(b.id, right)] = {b.id: K.one}

    return SuperCategory(
        field=field_spec,
        objects=tuple(objects),
        basis=basis,
        identities=dict(identities),
        composition=table,
        name=name,
    )


def _fresh_id(candidate: str, taken: set) -> str:
    new_id = candidate
    while new_id in taken:
        new_id += "'"
    taken.add(new_id)
    return new_id


# In[3]: Validation
@dataclass
class ValidationReport:
    problems: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.problems

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return "\n".join(self.problems)


def validate(cat: SuperCategory) -> ValidationReport:
    """List every violated axiom of a superadditive category."""
    report = ValidationReport()
    problems = report.problems

    if not cat.objects:
        problems.append("objects: category has no objects")
    if len(set(cat.objects)) != len(cat.objects):
        problems.append("objects: duplicate object names")
    if any(not obj for obj in cat.objects):
        problems.append("objects: empty object name")

    objects = set(cat.objects)
    by_id: Dict[str, BasisMorphism] = {}
    for b in cat.basis:
        if not b.id:
            problems.append("basis: empty morphism id")
        if b.id in by_id:
            problems.append(f"basis: duplicate morphism id '{b.id}'")
        by_id[b.id] = b
        if b.source not in objects or b.target not in objects:
            problems.append(f"basis: '{b.id}' has unknown source or target")
        if b.parity not in (0, 1):
            problems.append(f"basis: '{b.id}' has parity {b.parity}, expected 0 or 1")

    for obj in cat.objects:
        ident = cat.identities.get(obj)
        if ident is None:
            problems.append(f"identity: object '{obj}' has no identity designation")
            continue
        b = by_id.get(ident)
        if b is None:
            problems.append(f"identity: '{ident}' of object '{obj}' is not a basis morphism")
        elif b.source != obj or b.target != obj or b.parity != 0:
            problems.append(f"identity: '{ident}' is not an even endomorphism of '{obj}'")
    for obj in cat.identities:
        if obj not in objects:
            problems.append(f"identity: designation for unknown object '{obj}'")

    for (first, then), vec in cat.composition.items():
        f, t = by_id.get(first), by_id.get(then)
        if f is None or t is None:
            problems.append(f"composition: ({first}, {then}) names an unknown morphism")
            continue
        if f.target != t.source:
            problems.append(f"composition: ({first}, {then}) is not composable")
            continue
        for mid, c in vec.items():
            r = by_id.get(mid)
            if r is None:
                problems.append(f"composition: ({first}, {then}) yields unknown '{mid}'")
            elif r.source != f.source or r.target != t.target:
                problems.append(f"composition: ({first}, {then}) yields '{mid}' in the wrong hom space")
            elif r.parity != (f.parity + t.parity) % 2:
                problems.append(
                    f"parity: compose({first}, {then}) contains '{mid}' of parity {r.parity}, "
                    f"expected {(f.parity + t.parity) % 2}"
                )
            if not c:
                problems.append(f"composition: ({first}, {then}) stores a zero coefficient")

    if problems:
        return report

    K = cat.K
    for b in cat.basis:
        unit = {b.id: K.one}
        left = cat.compose(cat.identities[b.source], b.id)
        right = cat.compose(b.id, cat.identities[b.target])
        if left != unit:
            problems.append(f"identity law: 1_{b.source} then {b.id} != {b.id}")
        if right != unit:
            problems.append(f"identity law: {b.id} then 1_{b.target} != {b.id}")

    idx = cat.index()
    for a in range(len(idx.ids)):
        for b in idx.by_source[idx.tgt[a]]:
            ab = cat.compose(idx.ids[a], idx.ids[b])
            for c in idx.by_source[idx.tgt[b]]:
                bc = cat.compose(idx.ids[b], idx.ids[c])
                lhs = cat.compose_vectors(ab, {idx.ids[c]: K.one})
                rhs = cat.compose_vectors({idx.ids[a]: K.one}, bc)
                if lhs != rhs:
                    problems.append(
                        f"associativity: ({idx.ids[a]}, {idx.ids[b]}, {idx.ids[c]})"
                    )
    return report


def require_valid(cat: SuperCategory) -> SuperCategory:
    report = validate(cat)
    if not report.valid:
        raise ValueError(f"Invalid category '{cat.name}':\n{report}")
    return cat


# In[4]: Opposite, tensor product, enveloping category
def opposite(cat: SuperCategory) -> SuperCategory:
    """Opposite category with the Koszul rule φᵒψᵒ = (−1)^{|φ||ψ|}(ψφ)ᵒ."""
    require_valid(cat)
    par = {b.id: b.parity for b in cat.basis}
    table = {}
    for (first, then), vec in cat.composition.items():
        sign = -1 if par[first] * par[then] else 1
        table[(then, first)] = {mid: c if sign > 0 else -c for mid, c in vec.items()}
    return SuperCategory(
        field=cat.field,
        objects=cat.objects,
        basis=tuple(BasisMorphism(b.id, b.target, b.source, b.parity) for b in cat.basis),
        identities=dict(cat.identities),
        composition=table,
        name=f"{cat.name}^op",
    )


def tensor_id(left: str, right: str) -> str:
    return f"{left}⊗{right}"


def tensor_product(a: SuperCategory, b: SuperCategory) -> SuperCategory:
    """
    Tensor product with (φ₁⊗φ₂) then (ψ₁⊗ψ₂) = (−1)^{|φ₂||ψ₁|} (φ₁ then ψ₁)⊗(φ₂ then ψ₂).
    """
    if a.field != b.field:
        raise ValueError(f"Field mismatch: {a.field} vs {b.field}")
    require_valid(a)
    require_valid(b)
    par_a = {m.id: m.parity for m in a.basis}
    par_b = {m.id: m.parity for m in b.basis}

    objects = tuple(tensor_id(x, y) for x in a.objects for y in b.objects)
    basis = tuple(
        BasisMorphism(
            tensor_id(f.id, g.id),
            tensor_id(f.source, g.source),
            tensor_id(f.target, g.target),
            (f.parity + g.parity) % 2,
        )
        for f in a.basis
        for g in b.basis
    )
    identities = {
        tensor_id(x, y): tensor_id(a.identities[x], b.identities[y])
        for x in a.objects
        for y in b.objects
    }
    table = {}
    b_items = list(b.composition.items())
    for (f1, g1), va in a.composition.items():
        for (f2, g2), vb in b_items:
            negate = par_b[f2] * par_a[g1] == 1
            out = {}
            for i, ci in va.items():
                for j, cj in vb.items():
                    c = ci * cj
                    out[tensor_id(i, j)] = -c if negate else c
            table[(tensor_id(f1, f2), tensor_id(g1, g2))] = out
    return SuperCategory(
        field=a.field,
        objects=objects,
        basis=basis,
        identities=identities,
        composition=table,
        name=f"{a.name}⊗{b.name}",
    )


def enveloping(cat: SuperCategory) -> SuperCategory:
    """The enveloping category 𝒜 ⊗ 𝒜ᵒᵖ."""
    return tensor_product(cat, opposite(cat))


# In[5]: Identity rebasing
def rebase_identities(
    field_spec: FieldSpec,
    objects: Sequence[str],
    basis: Sequence[BasisMorphism],
    identity_vectors: Mapping[str, Mapping[str, object]],
    composition: Mapping[Tuple[str, str], MorphismDict],
    name: str = "",
) -> SuperCategory:
    """
    Build a category whose identities are given as vectors.

    An identity vector that is not a single basis element with coefficient 1 becomes
    a new basis element replacing the last basis element e of its support; structure
    constants are rewritten through e = (u - Σ_{f≠e} v_f f) / v_e.
    """
    K = field_spec.domain
    order = {b.id: k for k, b in enumerate(basis)}
    new_basis = list(basis)
    identities: Dict[str, str] = {}
    replaced: Dict[str, Tuple[str, Dict[str, object], object]] = {}
    expansion: Dict[str, Dict[str, object]] = {}
    taken = set(order)

    for obj in objects:
        vec = {mid: c for mid, c in identity_vectors[obj].items() if c}
        if len(vec) == 1:
            (mid, c), = vec.items()
            if c == K.one:
                identities[obj] = mid
                continue
        for mid in vec:
            b = basis[order[mid]]
            if b.source != obj or b.target != obj or b.parity != 0:
                raise ValueError(f"Identity of '{obj}' uses '{mid}', not an even endomorphism")
        e = max(vec, key=order.__getitem__)
        new_id = _fresh_id(f"1_{obj}", taken)
        new_basis[order[e]] = BasisMorphism(new_id, obj, obj, 0)
        replaced[e] = (new_id, vec, vec[e])
        expansion[new_id] = vec
        identities[obj] = new_id

    def to_new(vec_old: Mapping[str, object]) -> MorphismDict:
        out: MorphismDict = {}
        for mid, c in vec_old.items():
            if mid in replaced:
                new_id, vec, lead = replaced[mid]
                scale = K.quo(c, lead)
                add_into(out, {new_id: scale})
                for f, vf in vec.items():
                    if f != mid:
                        add_into(out, {f: -(scale * vf)})
            else:
                add_into(out, {mid: c})
        return out

    def compose_old(u: Mapping[str, object], w: Mapping[str, object]) -> MorphismDict:
        out: MorphismDict = {}
        for i, a in u.items():
            for j, b in w.items():
                product = composition.get((i, j))
                if product:
                    add_into(out, product, a * b)
        return out

    by_source: Dict[str, List[BasisMorphism]] = {}
    for b in new_basis:
        by_source.setdefault(b.source, []).append(b)
    table = {}
    for f in new_basis:
        f_old = expansion.get(f.id, {f.id: K.one})
        for g in by_source.get(f.target, []):
            g_old = expansion.get(g.id, {g.id: K.one})
            product = to_new(compose_old(f_old, g_old))
            if product:
                table[(f.id, g.id)] = product

    return SuperCategory(
        field=field_spec,
        objects=tuple(objects),
        basis=tuple(new_basis),
        identities=identities,
        composition=table,
        name=name,
    )


# In[6]: Category <-> superalgebra
ALGEBRA_OBJECT = "*"


def to_superalgebra(cat: SuperCategory) -> SuperCategory:
    """
    The one-object category Λ = ⊕ hom(X, Y) with product given by composition and
    zero on non-composable pairs. A one-object category is returned unchanged.
    """
    if len(cat.objects) == 1:
        return cat
    K = cat.K
    basis = [BasisMorphism(b.id, ALGEBRA_OBJECT, ALGEBRA_OBJECT, b.parity) for b in cat.basis]
    unit = {cat.identities[obj]: K.one for obj in cat.objects}
    return rebase_identities(
        cat.field,
        [ALGEBRA_OBJECT],
        basis,
        {ALGEBRA_OBJECT: unit},
        cat.composition,
        name=f"Λ({cat.name})",
    )


def superalgebra_idempotents(cat: SuperCategory, alg: SuperCategory) -> List[MorphismDict]:
    """The identities 1_X of cat written in the basis of alg = to_superalgebra(cat)."""
    K = cat.K
    if alg is cat:
        return [{cat.identities[cat.objects[0]]: K.one}]
    unit = alg.identities[ALGEBRA_OBJECT]
    kept = {mid for mid in (b.id for b in alg.basis)}
    vectors = []
    for obj in cat.objects:
        ident = cat.identities[obj]
        if ident in kept:
            vectors.append({ident: K.one})
        else:
            vec = {unit: K.one}
            for other in cat.objects:
                if other != obj:
                    vec[cat.identities[other]] = -K.one
            vectors.append(vec)
    return vectors


def as_morphism_dict(vec, K) -> MorphismDict:
    """Coefficients of a MorphismVector or raw dict coerced into K, zeros dropped."""
    coefficients = vec.coefficients if isinstance(vec, MorphismVector) else vec
    out = {mid: _coerce(c, K) for mid, c in coefficients.items()}
    return {mid: c for mid, c in out.items() if c}


def idempotent_label(vec: MorphismDict, position: int, K) -> str:
    # a single basis morphism with coefficient 1 keeps its id
    if len(vec) == 1:
        (mid, c), = vec.items()
        if c == K.one:
            return mid
    return f"e{position}"


def split_idempotents(
    cat: SuperCategory, entries: Sequence[Tuple[str, MorphismDict, str]], name: str
) -> SuperCategory:
    """
    Objects (X, ε) with hom((X,ε),(Y,ε′)) = image of φ ↦ ε then φ then ε′.

    Hom bases are picked greedily among [ε (endomorphisms only), images of basis
    morphisms]; compositions are expanded by solving in the target basis.
    """
    K = cat.K
    idx = cat.index()
    dim = len(idx.ids)
    obj_names = [f"{obj}|{label}" for obj, _, label in entries]
    taken: set = set()

    def to_int(vec: MorphismDict) -> Dict[int, object]:
        return {idx.pos[mid]: c for mid, c in vec.items()}

    hom_vectors: Dict[Tuple[int, int], List[MorphismDict]] = {}
    hom_ids: Dict[Tuple[int, int], List[str]] = {}
    morphisms = []
    identities = {}
    for s, (xs, es, _) in enumerate(entries):
        for t, (xt, et, _) in enumerate(entries):
            candidates: List[Tuple[MorphismDict, Optional[str]]] = []
            if s == t:
                candidates.append((es, None))
            for b in cat.hom(xs, xt):
                image = cat.compose_vectors(cat.compose_vectors(es, {b.id: K.one}), et)
                if image:
                    candidates.append((image, b.id))
            picked = independent_columns([to_int(v) for v, _ in candidates], dim, K)
            vectors, ids = [], []
            for p in picked:
                vec, origin = candidates[p]
                if origin is None:
                    base = idempotent_label(vec, s, K) if len(vec) == 1 else f"id[{obj_names[s]}]"
                    new_id = _fresh_id(base, taken)
                    identities[obj_names[s]] = new_id
                    parity = 0
                else:
                    single = len(vec) == 1 and next(iter(vec.values())) == K.one
                    base = next(iter(vec)) if single else f"{origin}[{obj_names[s]}>{obj_names[t]}]"
                    new_id = _fresh_id(base, taken)
                    parity = cat.morphism(origin).parity
                vectors.append(vec)
                ids.append(new_id)
                morphisms.append((new_id, obj_names[s], obj_names[t], parity))
            hom_vectors[(s, t)] = vectors
            hom_ids[(s, t)] = ids

    table = {}
    n_obj = len(entries)
    for s in range(n_obj):
        for t in range(n_obj):
            for r in range(n_obj):
                left, right = hom_vectors[(s, t)], hom_vectors[(t, r)]
                target_basis = hom_vectors[(s, r)]
                if not left or not right:
                    continue
                pairs, products = [], []
                for i, u in enumerate(left):
                    for j, w in enumerate(right):
                        product = cat.compose_vectors(u, w)
                        if product:
                            pairs.append((i, j))
                            products.append(to_int(product))
                if not products:
                    continue
                basis_matrix = matrix_from_columns([to_int(v) for v in target_basis], dim, K)
                coords = solve(basis_matrix, products)
                for (i, j), x in zip(pairs, coords):
                    vec = {hom_ids[(s, r)][k]: c for k, c in x.items() if c}
                    if vec:
                        table[(hom_ids[(s, t)][i], hom_ids[(t, r)][j])] = vec

    return build_category(
        cat.field,
        obj_names,
        morphisms,
        identities,
        table,
        name=name,
        fill_identity_laws=False,
    )


def from_algebra_with_idempotents(alg: SuperCategory, idempotents: Sequence) -> SuperCategory:
    """
    Category with one object per idempotent of a complete orthogonal family E,
    hom(e, f) = e·A·f.

    Raises:
        ValueError: If alg has several objects, or E is not even, idempotent,
            orthogonal and complete
    """
    if len(alg.objects) != 1:
        raise ValueError("from_algebra_with_idempotents expects a one-object category")
    K = alg.K
    obj = alg.objects[0]
    vectors = [as_morphism_dict(v, K) for v in idempotents]
    par = {b.id: b.parity for b in alg.basis}

    for k, e in enumerate(vectors):
        unknown = [mid for mid in e if mid not in par]
        if unknown:
            raise ValueError(f"Idempotent {k} uses unknown morphisms {unknown}")
        if any(par[mid] for mid in e):
            raise ValueError(f"Idempotent {k} is not even")
        if alg.compose_vectors(e, e) != e:
            raise ValueError(f"Idempotent {k} does not satisfy e·e = e")
    for k, e in enumerate(vectors):
        for l, f in enumerate(vectors):
            if k != l and alg.compose_vectors(e, f):
                raise ValueError(f"Idempotents {k} and {l} are not orthogonal")
    total: MorphismDict = {}
    for e in vectors:
        add_into(total, e)
    if total != {alg.identities[obj]: K.one}:
        raise ValueError("Idempotents are not complete: their sum is not the identity")

    if len(vectors) == 1:
        return alg
    entries = [(obj, e, idempotent_label(e, k, K)) for k, e in enumerate(vectors)]
    return split_idempotents(alg, entries, name=f"{alg.name}[E]")


# In[7]: Shape comparison
def hom_profile(cat: SuperCategory) -> List[List[Tuple[int, int]]]:
    """(even, odd) hom dimensions for every ordered pair of objects, in object order."""
    profile = []
    for x in cat.objects:
        row = []
        for y in cat.objects:
            homs = cat.hom(x, y)
            odd = sum(b.parity for b in homs)
            row.append((len(homs) - odd, odd))
        profile.append(row)
    return profile
