"""
Trivially graded categories against a classical Hochschild implementation.

The reference below works on the algebra ⊕ hom(X, Y) of a category with the
unnormalized complexes A^{⊗(n+1)} and Hom(A^{⊗n}, A), and computes cyclic homology
through the Connes quotient C/(1 - t). It only reads the composition table.
"""
from itertools import product

import pytest
from sympy.polys.matrices import DomainMatrix

from superhc.utils.catalog import TRIVIALLY_GRADED, builtin
from superhc.utils.cyclic import cyclic_homology
from superhc.utils.homology import hochschild_cohomology, hochschild_homology

MAX_DEGREE = 3


class ClassicalAlgebra:
    def __init__(self, cat):
        self.K = cat.K
        ids = [b.id for b in cat.basis]
        self.d = len(ids)
        pos = {mid: k for k, mid in enumerate(ids)}
        # mult[(u, v)] = u·v, where u·v applies v first
        self.mult = {}
        for u, v in product(range(self.d), repeat=2):
            prod = cat.compose(first=ids[v], then=ids[u])
            self.mult[(u, v)] = {pos[mid]: c for mid, c in prod.items() if c}

    def tuples(self, n):
        return list(product(range(self.d), repeat=n))

    def rank(self, columns, n_rows):
        rows = {}
        for j, col in enumerate(columns):
            for i, c in col.items():
                if c:
                    rows.setdefault(i, {})[j] = c
        if not columns or not n_rows:
            return 0
        return DomainMatrix(rows, (n_rows, len(columns)), self.K).rank()

    def boundary(self, n):
        """b: A^{⊗(n+1)} -> A^{⊗n} as columns over the tuple basis."""
        index = {t: k for k, t in enumerate(self.tuples(n))}
        columns = []
        for chain in self.tuples(n + 1):
            col = {}
            for i in range(n):
                for k, c in self.mult[(chain[i], chain[i + 1])].items():
                    key = index[chain[:i] + (k,) + chain[i + 2 :]]
                    col[key] = col.get(key, 0) + (-c if i % 2 else c)
            for k, c in self.mult[(chain[n], chain[0])].items():
                key = index[(k,) + chain[1:n]]
                col[key] = col.get(key, 0) + (-c if n % 2 else c)
            columns.append(col)
        return columns

    def one_minus_t(self, n):
        index = {t: k for k, t in enumerate(self.tuples(n + 1))}
        columns = []
        for chain in self.tuples(n + 1):
            col = {index[chain]: self.K.one}
            rotated = index[(chain[-1],) + chain[:-1]]
            col[rotated] = col.get(rotated, 0) + (self.K.one if n % 2 else -self.K.one)
            columns.append(col)
        return columns

    def coboundary(self, n):
        """δ: Hom(A^{⊗n}, A) -> Hom(A^{⊗(n+1)}, A) on the basis (tuple, value)."""
        index = {(t, m): k for k, (t, m) in enumerate(product(self.tuples(n + 1), range(self.d)))}
        columns = []
        for inputs, value in product(self.tuples(n), range(self.d)):
            col = {}

            def add(key, c):
                col[index[key]] = col.get(index[key], 0) + c

            for a in range(self.d):
                for m, c in self.mult[(a, value)].items():
                    add(((a,) + inputs, m), c)
                for m, c in self.mult[(value, a)].items():
                    add((inputs + (a,), m), -c if n % 2 == 0 else c)
            for chain in self.tuples(n + 1):
                for i in range(n):
                    for k, c in self.mult[(chain[i], chain[i + 1])].items():
                        if chain[:i] + (k,) + chain[i + 2 :] == inputs:
                            add((chain, value), c if i % 2 else -c)
            columns.append(col)
        return columns

    def hh(self, nmax):
        ranks = [0] + [self.rank(self.boundary(n), self.d ** n) for n in range(1, nmax + 2)]
        return [self.d ** (n + 1) - ranks[n] - ranks[n + 1] for n in range(nmax + 1)]

    def hh_cohomology(self, nmax):
        ranks = [self.rank(self.coboundary(n), self.d ** (n + 2)) for n in range(nmax + 1)]
        return [self.d ** (n + 1) - ranks[n] - (ranks[n - 1] if n else 0) for n in range(nmax + 1)]

    def hc(self, nmax):
        # dim H_n(C/I) with I = im(1 - t): quotient ranks come from stacked columns
        image = [self.rank(self.one_minus_t(n), self.d ** (n + 1)) for n in range(nmax + 2)]
        induced = [0]
        for n in range(1, nmax + 2):
            stacked = self.boundary(n) + self.one_minus_t(n - 1)
            induced.append(self.rank(stacked, self.d ** n) - image[n - 1])
        return [
            self.d ** (n + 1) - image[n] - induced[n] - induced[n + 1] for n in range(nmax + 1)
        ]


@pytest.fixture(scope="module", params=TRIVIALLY_GRADED)
def pair(request):
    cat = builtin(request.param)
    return cat, ClassicalAlgebra(cat)


# --- reference values ---

def test_reference_point():
    ref = ClassicalAlgebra(builtin("point"))
    assert ref.hh(3) == [1, 0, 0, 0]
    assert ref.hh_cohomology(3) == [1, 0, 0, 0]
    assert ref.hc(3) == [1, 0, 1, 0]

def test_reference_dual_numbers():
    ref = ClassicalAlgebra(builtin("dual_even"))
    assert ref.hh(3) == [2, 1, 1, 1]
    assert ref.hc(3) == [2, 0, 2, 0]


# --- agreement ---

def test_hochschild_homology_agrees(pair):
    cat, ref = pair
    assert hochschild_homology(cat, MAX_DEGREE).dims == ref.hh(MAX_DEGREE)

def test_hochschild_cohomology_agrees(pair):
    cat, ref = pair
    assert hochschild_cohomology(cat, MAX_DEGREE).dims == ref.hh_cohomology(MAX_DEGREE)

@pytest.mark.parametrize("method", ["bicomplex", "mixed"])
def test_cyclic_homology_agrees(pair, method):
    cat, ref = pair
    assert cyclic_homology(cat, MAX_DEGREE, method=method).dims == ref.hc(MAX_DEGREE)
