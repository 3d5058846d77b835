"""Finite matrix groups over cyclotomic fields and their reflection structure.

A group is built once by breadth-first closure from generators and then
queried: conjugacy classes, complex reflections with roots and coroots,
support, invariant degrees from the Molien series, Coxeter data, regularity
and the decomposition into irreducible reflection factors.  Everything is
exact; element equality is structural equality of reduced matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .cyclo import CyclotomicNumber, CycloMatrix, char_det, cyclo
from .errors import (
    CapExceeded,
    HypothesisViolated,
    NonIntegral,
    NotInvertible,
    NotReflectionGroup,
)

DEFAULT_CAP = 20000


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class FiniteMatrixGroup:
    """A finite subgroup of GL_n over a single cyclotomic field.

    Elements are indexed in construction (breadth-first) order with the
    identity at index 0.  After closure every matrix is lifted to the global
    conductor lcm(input conductor, exponent of the group), so that all
    eigenvalues of all elements live in the working field.
    """

    def __init__(self, elements, generator_indices, conductor):
        self.dim = elements[0].rows
        self.conductor = conductor
        self.elements = list(elements)
        self.generator_indices = tuple(generator_indices)
        self._index = {m: i for i, m in enumerate(self.elements)}
        self._mul_memo = {}
        self._inv = None
        self._orders = None

    # -- bookkeeping -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def index_of(self, matrix: CycloMatrix) -> int:
        m = matrix.lift(self.conductor) if matrix.conductor != self.conductor else matrix
        return self._index[m]

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        k = self._mul_memo.get(key)
        if k is None:
            k = self._index[self.elements[i] * self.elements[j]]
            self._mul_memo[key] = k
        return k

    def inv(self, i: int) -> int:
        if self._inv is None:
            inv = [None] * self.order
            for a in range(self.order):
                if inv[a] is not None:
                    continue
                b = a
                while True:
                    c = self.mul(a, b)
                    if c == 0:
                        inv[a], inv[b] = b, a
                        break
                    b = c
            self._inv = inv
        return self._inv[i]

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [None] * self.order
            self._orders[0] = 1
        if self._orders[i] is None:
            k, cur = 1, i
            while cur != 0:
                cur = self.mul(cur, i)
                k += 1
            self._orders[i] = k
        return self._orders[i]

    @property
    def exponent(self) -> int:
        e = 1
        for i in range(self.order):
            e = _lcm(e, self.element_order(i))
        return e

    def one(self) -> CyclotomicNumber:
        return CyclotomicNumber.from_rational(1, self.conductor)

    def scalar(self, q) -> CyclotomicNumber:
        return cyclo(q, self.conductor)


def generate_group(generators, cap: int = DEFAULT_CAP, dim: int | None = None,
                   conductor: int | None = None) -> FiniteMatrixGroup:
    """Enumerate the group generated by the matrices by breadth-first closure.

    Raises CapExceeded once more than `cap` distinct elements appear (the
    input is then non-finite or simply too large for desk scale) and
    NotInvertible for singular generators.  An empty generator list builds
    the trivial group; `dim` is then required.
    """
    gens = [g if isinstance(g, CycloMatrix) else CycloMatrix(g, conductor)
            for g in generators]
    if gens:
        e = conductor or 1
        for g in gens:
            e = _lcm(e, g.conductor)
        gens = [g.lift(e) for g in gens]
        dim = gens[0].rows
        if any(g.rows != dim or g.cols != dim for g in gens):
            raise ValueError("generators must be square matrices of equal size")
        for g in gens:
            try:
                g.inverse()
            except NotInvertible:
                raise NotInvertible("generator is singular")
    else:
        if dim is None:
            raise ValueError("dim is required to build the trivial group")
        e = conductor or 1

    ident = CycloMatrix.identity(dim, e)
    elements = [ident]
    index = {ident: 0}
    gen_indices = []
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = m * g
                if p not in index:
                    index[p] = len(elements)
                    elements.append(p)
                    nxt.append(p)
                    if len(elements) > cap:
                        raise CapExceeded(
                            f"closure exceeded cap={cap}; input may be infinite")
        frontier = nxt
    for g in gens:
        gen_indices.append(index[g])

    group = FiniteMatrixGroup(elements, gen_indices, e)
    target = _lcm(e, group.exponent)
    if target != e:
        lifted = [m.lift(target) for m in elements]
        lifted_group = FiniteMatrixGroup(lifted, gen_indices, target)
        lifted_group._orders = group._orders
        return lifted_group
    return group


def trivial_group(dim: int, conductor: int = 1) -> FiniteMatrixGroup:
    return generate_group([], dim=dim, conductor=conductor)


# -- conjugacy classes -----------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]
    centralizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


def conjugacy_classes(group: FiniteMatrixGroup) -> list[ConjugacyClass]:
    """Partition the group into conjugacy classes, ordered by minimal member."""
    n = group.order
    seen = [False] * n
    classes = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for g in group.generator_indices:
                y = group.mul(group.mul(g, x), group.inv(g))
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        members = tuple(sorted(orbit))
        for m in members:
            seen[m] = True
        cent = group.order // len(members)
        assert cent * len(members) == group.order
        classes.append(ConjugacyClass(members[0], members, cent))
    assert sum(c.size for c in classes) == group.order
    return classes


# -- reflections -----------------------------------------------------------

@dataclass(frozen=True)
class ReflectionData:
    """A complex reflection: rank(g - 1) = 1 with its root/coroot pair.

    `root` spans the moving line in h (eigenvector for `eigenvalue_on_root`),
    `coroot` is the linear form cutting out the fixed hyperplane, rescaled so
    that coroot(root) = 2.  `eigenvalue` is the nontrivial eigenvalue of the
    contragredient action on the coroot line (the conormal direction), i.e.
    the inverse of `eigenvalue_on_root`.
    """
    element: int
    eigenvalue_on_root: CyclotomicNumber
    eigenvalue: CyclotomicNumber
    root: tuple[CyclotomicNumber, ...]
    coroot: tuple[CyclotomicNumber, ...]
    hyperplane: tuple[CyclotomicNumber, ...]


@dataclass(frozen=True)
class ReflectionCensus:
    reflections: tuple[ReflectionData, ...]
    hyperplanes: tuple[tuple[CyclotomicNumber, ...], ...]

    @property
    def count(self) -> int:
        return len(self.reflections)

    @property
    def hyperplane_count(self) -> int:
        return len(self.hyperplanes)


def _normalize_vector(vec):
    for x in vec:
        if x:
            inv = x.inverse()
            return tuple(v * inv for v in vec)
    raise ValueError("zero vector")


def find_reflections(group: FiniteMatrixGroup) -> ReflectionCensus:
    """All elements with rank(g - 1) = 1, with roots, coroots and hyperplanes."""
    ident = CycloMatrix.identity(group.dim, group.conductor)
    reflections = []
    hyperplanes = []
    seen_hyperplanes = set()
    for i in range(1, group.order):
        g = group.elements[i]
        m = g - ident
        if m.rank() != 1:
            continue
        # image of (g - 1) is the root line: take the first nonzero column
        cols = list(zip(*m.entries))
        root = None
        for col in cols:
            if any(x for x in col):
                root = _normalize_vector(col)
                break
        # any nonzero row of (g - 1) cuts out the fixed hyperplane
        coroot = None
        for row in m.entries:
            if any(x for x in row):
                coroot = _normalize_vector(row)
                break
        pairing = sum((a * b for a, b in zip(coroot, root)),
                      group.scalar(0))
        assert pairing, "coroot must not vanish on the root"
        scale = group.scalar(2) / pairing
        coroot_scaled = tuple(x * scale for x in coroot)
        # eigenvalue on the root line: g root = lambda_vee root
        g_root = [sum((g.entries[r][c] * root[c] for c in range(group.dim)),
                      group.scalar(0)) for r in range(group.dim)]
        lam_vee = None
        for a, b in zip(g_root, root):
            if b:
                lam_vee = a / b
                break
        assert lam_vee is not None and lam_vee != 1
        hyper = _normalize_vector(coroot)
        if hyper not in seen_hyperplanes:
            seen_hyperplanes.add(hyper)
            hyperplanes.append(hyper)
        reflections.append(ReflectionData(
            element=i,
            eigenvalue_on_root=lam_vee,
            eigenvalue=lam_vee.inverse(),
            root=root,
            coroot=coroot_scaled,
            hyperplane=hyper,
        ))
    return ReflectionCensus(tuple(reflections), tuple(hyperplanes))


# -- support, irreducibility, degrees ---------------------------------------

def _span_basis(vectors, dim, conductor):
    """Subset-of-input basis for the span of the given vectors."""
    if not vectors:
        return []
    rows = CycloMatrix([list(v) for v in vectors], conductor)
    _, pivots = rows.transpose()._echelon()
    return [vectors[p] for p in pivots]


@dataclass(frozen=True)
class SupportReport:
    basis: tuple[tuple[CyclotomicNumber, ...], ...]
    rank: int
    fixed_basis: tuple[tuple[CyclotomicNumber, ...], ...]
    fixed_dim: int
    splits: bool  # dim h^G + rank == n (checked when G is a reflection group)


def fixed_subspace(group: FiniteMatrixGroup) -> list[tuple[CyclotomicNumber, ...]]:
    """Basis of h^G, the common fixed space of all elements."""
    if not group.generator_indices:
        ident = CycloMatrix.identity(group.dim, group.conductor)
        return [tuple(col) for col in zip(*ident.entries)]
    ident = CycloMatrix.identity(group.dim, group.conductor)
    stacked = []
    for gi in group.generator_indices:
        m = group.elements[gi] - ident
        stacked.extend(list(row) for row in m.entries)
    return CycloMatrix(stacked, group.conductor).kernel_basis()


def support_and_rank(group: FiniteMatrixGroup,
                     census: ReflectionCensus | None = None) -> SupportReport:
    """Span of all roots, its dimension, and the fixed space h^G."""
    census = census or find_reflections(group)
    roots = [r.root for r in census.reflections]
    basis = _span_basis(roots, group.dim, group.conductor)
    fixed = fixed_subspace(group)
    splits = len(basis) + len(fixed) == group.dim
    return SupportReport(tuple(basis), len(basis), tuple(fixed), len(fixed), splits)


def character_norm(group: FiniteMatrixGroup) -> Fraction:
    """The exact inner product <chi, chi> of the defining character."""
    total = group.scalar(0)
    for i in range(group.order):
        total = total + group.elements[i].trace() * group.elements[group.inv(i)].trace()
    val = (total * Fraction(1, group.order))
    if not val.is_rational:
        raise NonIntegral("character norm did not come out rational")
    q = val.rational_value
    if q.denominator != 1 or q < 0:
        raise NonIntegral(f"character norm {q} is not a nonnegative integer")
    return q


def is_irreducible(group: FiniteMatrixGroup) -> bool:
    """True iff the defining representation is irreducible (<chi,chi> = 1)."""
    return character_norm(group) == 1


def _support_character_norm(group: FiniteMatrixGroup, fixed_dim: int) -> Fraction:
    # character of the action on supp(G) is tr(g) - dim h^G
    total = group.scalar(0)
    f = Fraction(fixed_dim)
    for i in range(group.order):
        a = group.elements[i].trace() - f
        b = group.elements[group.inv(i)].trace() - f
        total = total + a * b
    val = total * Fraction(1, group.order)
    return val.rational_value


def _series_reciprocal(poly, cutoff, conductor):
    """Truncated power series 1/p(t) where p has constant term 1."""
    zero = CyclotomicNumber.from_rational(0, conductor)
    p = list(poly) + [zero] * (cutoff + 1 - len(poly))
    out = [CyclotomicNumber.from_rational(1, conductor)] + [zero] * cutoff
    for k in range(1, cutoff + 1):
        acc = zero
        for j in range(1, k + 1):
            if p[j] and out[k - j]:
                acc = acc + p[j] * out[k - j]
        out[k] = -acc
    return out


def molien_series(group: FiniteMatrixGroup, cutoff: int) -> list[Fraction]:
    """Coefficients of (1/|G|) sum_g 1/det(1 - t g) up to t^cutoff."""
    total = [group.scalar(0) for _ in range(cutoff + 1)]
    for g in group.elements:
        inv = _series_reciprocal(char_det(g), cutoff, group.conductor)
        total = [a + b for a, b in zip(total, inv)]
    out = []
    for c in total:
        v = c * Fraction(1, group.order)
        if not v.is_rational:
            raise NotReflectionGroup("Molien coefficient is not rational")
        out.append(v.rational_value)
    return out


def molien_degrees(group: FiniteMatrixGroup, cutoff: int | None = None) -> list[int]:
    """The invariant degrees d_1 <= ... <= d_n read off the Molien series.

    Peels factors 1/(1 - t^d) from the truncated series: d is repeatedly the
    lowest order at which the running product differs from 1; after exactly
    n = dim steps the product must be 1 up to the cutoff, otherwise the input
    is not a reflection group on its space.
    """
    n = group.dim
    if cutoff is None:
        cutoff = group.order + n + 1
    series = molien_series(group, cutoff)
    degrees = []
    cur = list(series)
    for _ in range(n):
        d = None
        for k in range(1, cutoff + 1):
            if cur[k] != 0:
                d = k
                break
        if d is None:
            raise NotReflectionGroup(
                f"series exhausted after degrees {degrees}; expected {n} factors")
        # multiply by (1 - t^d)
        nxt = list(cur)
        for k in range(cutoff, d - 1, -1):
            nxt[k] = cur[k] - cur[k - d]
        cur = nxt
        degrees.append(d)
    if any(c != 0 for c in cur[1:]) or cur[0] != 1:
        raise NotReflectionGroup("degree extraction left a non-unit remainder")
    degrees.sort()
    prod = 1
    for d in degrees:
        prod *= d
    if prod != group.order:
        raise NotReflectionGroup(
            f"product of degrees {degrees} does not equal the group order {group.order}")
    return degrees


def coxeter_number(group: FiniteMatrixGroup,
                   census: ReflectionCensus | None = None,
                   degrees: list[int] | None = None) -> int:
    """h = (N + N*) / rank for an irreducible reflection group on its support."""
    census = census or find_reflections(group)
    support = support_and_rank(group, census)
    if support.rank == 0:
        raise HypothesisViolated("group has no reflections")
    num = census.count + census.hyperplane_count
    if num % support.rank:
        raise NonIntegral(
            f"(N + N*) = {num} is not divisible by the rank {support.rank}")
    h = num // support.rank
    if degrees is not None and degrees and h != max(degrees):
        raise NonIntegral(
            f"Coxeter number {h} does not match the top degree {max(degrees)}")
    return h


# -- generation ------------------------------------------------------------

def generated_order(group: FiniteMatrixGroup, indices, cap: int | None = None) -> int:
    """Order of the subgroup generated by the given element indices."""
    cap = cap or group.order
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in indices:
                y = group.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceeded("subgroup closure exceeded cap")
        frontier = nxt
    return len(seen)


def generated_subgroup(group: FiniteMatrixGroup, indices) -> list[int]:
    """Sorted element indices of the subgroup generated by the given indices."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in indices:
                y = group.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def is_reflection_group(group: FiniteMatrixGroup,
                        census: ReflectionCensus | None = None) -> bool:
    census = census or find_reflections(group)
    if not census.reflections and group.order > 1:
        return False
    if group.order == 1:
        return True
    return len(generated_subgroup(
        group, [r.element for r in census.reflections])) == group.order


def is_well_generated(group: FiniteMatrixGroup,
                      census: ReflectionCensus | None = None):
    """Search for rank(G) reflections generating G; returns (flag, witness).

    Subsets whose roots do not span the support are pruned outright (the
    generated subgroup fixes the orthogonal complement pointwise, so it can
    never be all of G); the rest are closed and compared against |G|.
    """
    census = census or find_reflections(group)
    support = support_and_rank(group, census)
    r = support.rank
    if r == 0:
        return (group.order == 1, () if group.order == 1 else None)
    refl = census.reflections
    for subset in combinations(range(len(refl)), r):
        roots = [refl[i].root for i in subset]
        if len(_span_basis(roots, group.dim, group.conductor)) != r:
            continue
        indices = [refl[i].element for i in subset]
        if generated_order(group, indices) == group.order:
            return True, tuple(indices)
    return False, None


# -- regular and Coxeter elements -------------------------------------------

def _apply_form(form, vec, zero):
    return sum((a * b for a, b in zip(form, vec)), zero)


def find_regular_element(group: FiniteMatrixGroup, zeta_value: CyclotomicNumber,
                         census: ReflectionCensus | None = None,
                         element_pool=None, hyperplane_forms=None):
    """First element (by index) with a zeta-eigenvector avoiding all hyperplanes.

    The witness is searched deterministically over vectors e_1 + k e_2 + k^2 e_3
    + ... for k = 1, 2, ...; each hyperplane form restricted to the eigenspace
    is a nonzero polynomial in k of degree < dim E, so a finite union of
    proper subspaces cannot exhaust the search and termination is guaranteed.
    """
    census = census or find_reflections(group)
    zv = cyclo(zeta_value, group.conductor)
    if hyperplane_forms is None:
        hyperplane_forms = [r.coroot for r in census.reflections]
    # distinct forms only; scale plays no role in the avoidance condition
    forms = list({_normalize_vector(f) for f in hyperplane_forms})
    zero = group.scalar(0)
    pool = element_pool if element_pool is not None else range(group.order)
    ident = CycloMatrix.identity(group.dim, group.conductor)
    for i in pool:
        g = group.elements[i]
        eig = (g - ident * zv).kernel_basis()
        if not eig:
            continue
        d = len(eig)
        if any(all(_apply_form(f, b, zero).is_zero for b in eig) for f in forms):
            continue  # eigenspace trapped inside a hyperplane
        bound = len(forms) * (d - 1) + 1
        for k in range(1, bound + 1):
            vec = [zero] * group.dim
            weight = group.one()
            kq = group.scalar(k)
            for b in eig:
                vec = [v + weight * x for v, x in zip(vec, b)]
                weight = weight * kq
            if all(not _apply_form(f, vec, zero).is_zero for f in forms):
                return i, tuple(vec)
        raise AssertionError("witness search exceeded its guaranteed bound")
    return None


def find_coxeter_element(group: FiniteMatrixGroup,
                         census: ReflectionCensus | None = None) -> int:
    """A zeta_h-regular element; exists for irreducible well-generated inputs."""
    census = census or find_reflections(group)
    support = support_and_rank(group, census)
    if support.fixed_dim != 0:
        raise HypothesisViolated("group has nonzero fixed space h^G")
    if not is_reflection_group(group, census):
        raise HypothesisViolated("group is not generated by its reflections")
    if _support_character_norm(group, 0) != 1:
        raise HypothesisViolated("group is not irreducible on its space")
    h = coxeter_number(group, census)
    if group.conductor % h:
        raise HypothesisViolated(
            f"no element can have a primitive {h}-th root of unity eigenvalue")
    zeta_h = CyclotomicNumber.zeta(group.conductor, group.conductor // h)
    found = find_regular_element(group, zeta_h, census)
    if found is None:
        raise HypothesisViolated(
            "no Coxeter element exists; the group is likely not well-generated")
    idx, _ = found
    ident = CycloMatrix.identity(group.dim, group.conductor)
    if (group.elements[idx] - ident).kernel_basis():
        raise HypothesisViolated("regular element unexpectedly has eigenvalue 1")
    if group.element_order(idx) != h:
        raise HypothesisViolated("regular element does not have order h")
    return idx


# -- decomposition into irreducible factors ---------------------------------

def invariant_form(group: FiniteMatrixGroup) -> CycloMatrix:
    """The G-invariant Hermitian form sum_g g*^T g (conjugation z -> z^-1)."""
    acc = None
    for g in group.elements:
        t = g.conjugate_transpose() * g
        acc = t if acc is None else acc + t
    return acc


def decompose_reflection_group(group: FiniteMatrixGroup,
                               census: ReflectionCensus | None = None):
    """Split h = h^G + h_1 + ... + h_m into irreducible reflection factors.

    Two reflections land in the same factor when their roots pair nontrivially
    under the averaged invariant Hermitian form, transitively closed; each
    factor is the span of its block's roots together with the reflections
    rooted there.  Returns a list of (basis, reflection element indices).
    """
    census = census or find_reflections(group)
    refl = census.reflections
    if not refl:
        return []
    form = invariant_form(group)

    def pair(u, v):
        acc = group.scalar(0)
        for i in range(group.dim):
            ui = u[i].conjugate()
            if not ui:
                continue
            for j in range(group.dim):
                if form.entries[i][j] and v[j]:
                    acc = acc + ui * form.entries[i][j] * v[j]
        return acc

    parent = list(range(len(refl)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(refl)):
        for j in range(i + 1, len(refl)):
            if find(i) != find(j) and not pair(refl[i].root, refl[j].root).is_zero:
                parent[find(i)] = find(j)

    blocks = {}
    for i in range(len(refl)):
        blocks.setdefault(find(i), []).append(i)
    factors = []
    for block in blocks.values():
        roots = [refl[i].root for i in block]
        basis = _span_basis(roots, group.dim, group.conductor)
        elements = tuple(sorted(refl[i].element for i in block))
        factors.append((tuple(basis), elements))
    factors.sort(key=lambda f: f[1])
    total = sum(len(b) for b, _ in factors)
    fixed = fixed_subspace(group)
    assert total + len(fixed) == group.dim, "factor dimensions do not add up"
    return factors


def restrict_to_subspace(group: FiniteMatrixGroup, basis,
                         element_indices=None) -> FiniteMatrixGroup:
    """The action of the listed elements on an invariant subspace, as a group.

    The restriction of each element is solved exactly from B M = g B; the
    returned group is rebuilt by closure of the restricted generators.
    """
    cols = [[b[i] for b in basis] for i in range(group.dim)]
    bmat = CycloMatrix(cols, group.conductor)
    pool = element_indices if element_indices is not None else group.generator_indices
    restricted = []
    for gi in pool:
        g = group.elements[gi]
        restricted.append(bmat.solve(g * bmat))
    return generate_group(restricted, cap=group.order, dim=len(basis),
                          conductor=group.conductor)


# -- full report -------------------------------------------------------------

@dataclass
class GroupReport:
    order: int
    dim: int
    reflection_count: int
    hyperplane_count: int
    rank: int
    fixed_dim: int
    irreducible: bool
    degrees: list[int]
    coxeter_number: int | None
    well_generated: bool
    witness: tuple[int, ...] | None
    coxeter_element: int | None
    reflection_group: bool


def group_report(group: FiniteMatrixGroup) -> GroupReport:
    """The analyze-group summary: census, degrees and Coxeter data."""
    census = find_reflections(group)
    support = support_and_rank(group, census)
    refl_group = is_reflection_group(group, census)
    try:
        degrees = molien_degrees(group)
    except NotReflectionGroup:
        degrees = []
    if refl_group and degrees:
        assert sum(d - 1 for d in degrees) == census.count
    wg, witness = is_well_generated(group, census)
    h = None
    cox = None
    if support.rank:
        num = census.count + census.hyperplane_count
        if num % support.rank == 0:
            h = num // support.rank
    if h is not None and support.fixed_dim == 0 and refl_group and wg:
        try:
            if is_irreducible(group):
                cox = find_coxeter_element(group, census)
        except (HypothesisViolated, NonIntegral):
            cox = None
    return GroupReport(
        order=group.order,
        dim=group.dim,
        reflection_count=census.count,
        hyperplane_count=census.hyperplane_count,
        rank=support.rank,
        fixed_dim=support.fixed_dim,
        irreducible=is_irreducible(group),
        degrees=degrees,
        coxeter_number=h,
        well_generated=wg,
        witness=witness,
        coxeter_element=cox,
        reflection_group=refl_group,
    )
