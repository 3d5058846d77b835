"""Brute-force normalized Hochschild chains over small structure-constant algebras.

Algebras are finite bases with an exact multiplication tensor; capped
Weyl-type algebras mark out-of-cap products as poisoned rather than silently
truncating, and any boundary computation that needs a poisoned product raises
Overflow.  The fundamental even-degree cycle of the Weyl algebra is built with
the permutation sign; the unsigned variant printed without it is kept around
because it demonstrably fails the cycle test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .errors import CapExceeded, Overflow

_OVERFLOW = object()  # sentinel for capped products outside the cap


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class StructureConstantAlgebra:
    """A finite-dimensional algebra given by labels and a multiplication tensor.

    `table[(i, j)]` is a tuple of (basis index, Fraction) pairs, the sentinel
    for a capped product, or missing (= zero product).  Unit axioms always
    hold; associativity is verified on construction for every triple whose
    products are all representable, and the skipped (capped) triples are
    counted in `capped_triples`.
    """

    def __init__(self, labels, unit: int, table, check: bool = True):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.unit = unit
        self.table = dict(table)
        self.capped_triples = 0
        if check:
            self._check_unit()
            self._check_associativity()

    def product(self, i: int, j: int):
        """Sparse product of basis elements, or the overflow sentinel."""
        out = self.table.get((i, j), ())
        return out

    def is_capped(self, i: int, j: int) -> bool:
        return self.table.get((i, j)) is _OVERFLOW

    def _check_unit(self):
        for i in range(self.dim):
            left = self.table.get((self.unit, i), ())
            right = self.table.get((i, self.unit), ())
            if left is _OVERFLOW or right is _OVERFLOW:
                raise ValueError("unit products must be representable")
            if dict(left) != {i: Fraction(1)} or dict(right) != {i: Fraction(1)}:
                raise ValueError(f"unit axiom fails at basis element {i}")

    def _mul_sparse(self, vec: dict, j: int):
        out: dict = {}
        for i, c in vec.items():
            prod = self.table.get((i, j), ())
            if prod is _OVERFLOW:
                return _OVERFLOW
            for k, x in prod:
                out[k] = out.get(k, Fraction(0)) + c * x
        return {k: v for k, v in out.items() if v}

    def _check_associativity(self):
        for i, j, k in product(range(self.dim), repeat=3):
            ij = self.table.get((i, j), ())
            jk = self.table.get((j, k), ())
            if ij is _OVERFLOW or jk is _OVERFLOW:
                self.capped_triples += 1
                continue
            left = self._mul_sparse(dict(ij), k)
            right: dict = {}
            overflow = False
            for m, c in jk:
                prod = self.table.get((i, m), ())
                if prod is _OVERFLOW:
                    overflow = True
                    break
                for t, x in prod:
                    right[t] = right.get(t, Fraction(0)) + c * x
            if left is _OVERFLOW or overflow:
                self.capped_triples += 1
                continue
            right = {k2: v for k2, v in right.items() if v}
            if left != right:
                raise ValueError(f"associativity fails on triple ({i},{j},{k})")


def group_algebra(group) -> StructureConstantAlgebra:
    """The group algebra of a FiniteMatrixGroup as structure constants."""
    table = {}
    one = Fraction(1)
    for i in range(group.order):
        for j in range(group.order):
            table[(i, j)] = ((group.mul(i, j), one),)
    labels = [f"g{i}" for i in range(group.order)]
    return StructureConstantAlgebra(labels, 0, table, check=False)


def capped_weyl_algebra(k: int, cap: int = 2) -> StructureConstantAlgebra:
    """The Weyl algebra on k generator pairs, capped at total degree `cap`.

    Basis monomials x^a d^b with |a| + |b| <= cap; the product rule moves all
    derivatives to the right:
        (x^a d^b)(x^c d^d) = sum_j prod_i C(b_i,j_i) C(c_i,j_i) j_i! x^{a+c-j} d^{b+d-j}.
    Products whose top term leaves the cap are poisoned, never truncated.
    """
    from math import comb, factorial

    monos = []

    def gen(prefix, remaining, slots):
        if slots == 0:
            monos.append(tuple(prefix))
            return
        for v in range(remaining + 1):
            gen(prefix + [v], remaining - v, slots - 1)

    gen([], cap, 2 * k)  # exponent vector (a_1..a_k, b_1..b_k)
    monos.sort(key=lambda m: (sum(m), m))
    index = {m: i for i, m in enumerate(monos)}

    table = {}
    for i, m1 in enumerate(monos):
        a, b = m1[:k], m1[k:]
        for j, m2 in enumerate(monos):
            c, d = m2[:k], m2[k:]
            if sum(a) + sum(b) + sum(c) + sum(d) > cap:
                table[(i, j)] = _OVERFLOW
                continue
            terms: dict = {}
            ranges = [range(min(b[t], c[t]) + 1) for t in range(k)]
            for jvec in product(*ranges):
                coeff = 1
                for t in range(k):
                    coeff *= comb(b[t], jvec[t]) * comb(c[t], jvec[t]) * factorial(jvec[t])
                na = tuple(a[t] + c[t] - jvec[t] for t in range(k))
                nb = tuple(b[t] + d[t] - jvec[t] for t in range(k))
                tgt = index[na + nb]
                terms[tgt] = terms.get(tgt, 0) + coeff
            table[(i, j)] = tuple((t, Fraction(v)) for t, v in sorted(terms.items()) if v)

    def label(m):
        parts = []
        for t in range(k):
            if m[t]:
                parts.append(f"x{t + 1}" + (f"^{m[t]}" if m[t] > 1 else ""))
        for t in range(k):
            if m[k + t]:
                parts.append(f"d{t + 1}" + (f"^{m[k + t]}" if m[k + t] > 1 else ""))
        return "*".join(parts) if parts else "1"

    return StructureConstantAlgebra([label(m) for m in monos],
                                    index[(0,) * (2 * k)], table)


def weyl_generator_indices(algebra: StructureConstantAlgebra, k: int):
    """Indices of (d_1, x_1, d_2, x_2, ...) inside a capped Weyl algebra."""
    pairs = []
    for t in range(1, k + 1):
        d = algebra.labels.index(f"d{t}")
        x = algebra.labels.index(f"x{t}")
        pairs.extend([d, x])
    return pairs


class HochschildChain:
    """A formal sum of elementary tensors a_0 x ... x a_p with exact coefficients."""

    def __init__(self, algebra: StructureConstantAlgebra, degree: int,
                 terms=None, normalized: bool = True):
        self.algebra = algebra
        self.degree = degree
        self.normalized = normalized
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for key, coeff in (terms or {}).items():
            if len(key) != degree + 1:
                raise ValueError("tensor length must be degree + 1")
            coeff = Fraction(coeff)
            if coeff:
                self.terms[tuple(key)] = self.terms.get(tuple(key), Fraction(0)) + coeff
        if normalized:
            self._normalize()
        self.terms = {k: v for k, v in self.terms.items() if v}

    def _normalize(self):
        unit = self.algebra.unit
        self.terms = {
            key: c for key, c in self.terms.items()
            if not any(idx == unit for idx in key[1:])
        }

    def renormalized(self) -> "HochschildChain":
        return HochschildChain(self.algebra, self.degree, self.terms, normalized=True)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "HochschildChain") -> "HochschildChain":
        assert self.degree == other.degree and self.algebra is other.algebra
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return HochschildChain(self.algebra, self.degree, merged,
                               self.normalized and other.normalized)

    def __eq__(self, other):
        return (isinstance(other, HochschildChain)
                and self.degree == other.degree and self.terms == other.terms)

    def __repr__(self):
        labels = self.algebra.labels
        parts = []
        for key, c in sorted(self.terms.items()):
            tensor = "(x)".join(labels[i] for i in key)
            parts.append(f"{c}*{tensor}")
        return " + ".join(parts) if parts else "0"


def hochschild_boundary(chain: HochschildChain,
                        algebra: StructureConstantAlgebra | None = None) -> HochschildChain:
    """The Hochschild differential b; raises Overflow on poisoned products.

    b(a_0 x ... x a_p) = sum_{i<p} (-1)^i a_0 x .. x a_i a_{i+1} x .. x a_p
                         + (-1)^p a_p a_0 x a_1 x .. x a_{p-1},
    normalized afterwards when the input chain is normalized.
    """
    algebra = algebra or chain.algebra
    if chain.degree == 0:
        return HochschildChain(algebra, 0, {}, chain.normalized)
    out: dict[tuple[int, ...], Fraction] = {}

    def add(key, coeff):
        out[key] = out.get(key, Fraction(0)) + coeff

    for key, coeff in chain.terms.items():
        p = chain.degree
        for i in range(p):
            prod = algebra.product(key[i], key[i + 1])
            if prod is _OVERFLOW:
                raise Overflow(
                    f"product of basis elements {key[i]}, {key[i + 1]} is capped")
            sign = -1 if i % 2 else 1
            for target, x in prod:
                add(key[:i] + (target,) + key[i + 2:], sign * coeff * x)
        prod = algebra.product(key[p], key[0])
        if prod is _OVERFLOW:
            raise Overflow(f"product of basis elements {key[p]}, {key[0]} is capped")
        sign = -1 if p % 2 else 1
        for target, x in prod:
            add((target,) + key[1:p], sign * coeff * x)
    return HochschildChain(algebra, chain.degree - 1, out, chain.normalized)


def fundamental_cycle(k: int, algebra: StructureConstantAlgebra | None = None,
                      signed: bool = True, normalized: bool = True) -> HochschildChain:
    """The degree-2k chain sum_sigma sgn(sigma) 1 x u_{sigma(1)} x ... x u_{sigma(2k)}.

    The interleaved generators are u_{2i-1} = d_i, u_{2i} = x_i of the Weyl
    algebra on k pairs.  With the sign it is a cycle of the normalized
    complex; `signed=False` builds the unsigned variant, which is not.
    """
    if k == 0:
        algebra = algebra or capped_weyl_algebra(1, 2)
        return HochschildChain(algebra, 0, {(algebra.unit,): Fraction(1)}, normalized)
    algebra = algebra or capped_weyl_algebra(k, 2)
    gens = weyl_generator_indices(algebra, k)
    unit = algebra.unit
    terms = {}
    for perm in permutations(range(2 * k)):
        sign = _perm_sign(perm) if signed else 1
        key = (unit,) + tuple(gens[p] for p in perm)
        terms[key] = Fraction(sign)
    return HochschildChain(algebra, 2 * k, terms, normalized)


def group_algebra_hh0(group, cap: int = 2000) -> int:
    """dim A/[A, A] for the group algebra A, by exact rank of the commutators.

    Equals the number of conjugacy classes; the rank computation is kept
    independent of the conjugacy machinery so the two can cross-check.
    """
    n = group.order
    if n > cap:
        raise CapExceeded(f"group order {n} exceeds cap {cap}")
    # commutator of basis elements g, h is e_{gh} - e_{hg}: integer vectors
    rows = []
    pivot_of_col: dict[int, list[Fraction]] = {}
    rank = 0
    for i in range(n):
        for j in range(i + 1, n):
            a, b = group.mul(i, j), group.mul(j, i)
            if a == b:
                continue
            vec = {a: Fraction(1), b: Fraction(-1)}
            # incremental reduction against the pivots found so far
            while vec:
                lead = min(vec)
                piv = pivot_of_col.get(lead)
                if piv is None:
                    inv = 1 / vec[lead]
                    pivot_of_col[lead] = {c: v * inv for c, v in vec.items()}
                    rank += 1
                    break
                f = vec[lead]
                for c2, v2 in piv.items():
                    vec[c2] = vec.get(c2, Fraction(0)) - f * v2
                vec = {c: v for c, v in vec.items() if v}
    return n - rank
