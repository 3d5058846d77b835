"""Dunkl operators on truncated polynomial algebras and relation verification.

The rational Cherednik algebra is realized concretely: group elements act on
polynomials by substitution, elements of h act by Dunkl operators
    D_y = t d_y + sum_s (2 c(s) / (1 - lambda_s)) * coroot_s(y) * (s - 1) / coroot_s,
and elements of h* act by multiplication.  Operators are stored as exact
column maps on the monomial basis of C[x_1..x_n] up to a degree cap; a
multiplication whose image leaves the cap poisons that column instead of
silently truncating, and every check is restricted to degrees where nothing
is poisoned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .cyclo import CyclotomicNumber, cyclo
from .errors import DivisionFailure
from .groups import (
    FiniteMatrixGroup,
    ReflectionCensus,
    ReflectionData,
    conjugacy_classes,
    find_reflections,
)

# -- truncated multivariate polynomials --------------------------------------
# a polynomial is a dict {exponent tuple: CyclotomicNumber}; zero keys dropped


def monomials_up_to(n: int, cap: int):
    """All exponent tuples with total degree <= cap, graded lexicographic."""
    out = [(0,) * n]
    for d in range(1, cap + 1):
        level = []
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            level.append(tuple(e))
        out.extend(sorted(level))
    return out


class TruncatedPolynomialAlgebra:
    """Exact polynomials in n variables of total degree <= cap."""

    def __init__(self, n: int, cap: int, conductor: int = 1):
        self.n = n
        self.cap = cap
        self.conductor = conductor
        self.basis = monomials_up_to(n, cap)
        self.index = {m: i for i, m in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def zero(self) -> CyclotomicNumber:
        return CyclotomicNumber.from_rational(0, self.conductor)

    def one(self) -> CyclotomicNumber:
        return CyclotomicNumber.from_rational(1, self.conductor)

    def scalar(self, q) -> CyclotomicNumber:
        return cyclo(q, self.conductor)

    # polynomial helpers --------------------------------------------------

    def poly_add(self, p: dict, q: dict) -> dict:
        out = dict(p)
        for m, c in q.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return {m: c for m, c in out.items() if c}

    def poly_scale(self, p: dict, c) -> dict:
        c = self.scalar(c) if not isinstance(c, CyclotomicNumber) else c
        if c.is_zero:
            return {}
        return {m: x * c for m, x in p.items()}

    def poly_mul(self, p: dict, q: dict):
        """Product with truncation; returns (poly, overflowed flag)."""
        out: dict = {}
        overflow = False
        for m1, c1 in p.items():
            for m2, c2 in q.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if sum(m) > self.cap:
                    overflow = True
                    continue
                s = out.get(m)
                prod = c1 * c2
                out[m] = prod if s is None else s + prod
        return {m: c for m, c in out.items() if c}, overflow

    def directional_derivative(self, p: dict, y) -> dict:
        """d_y p for a direction vector y in h."""
        out: dict = {}
        for m, c in p.items():
            for i, yi in enumerate(y):
                if m[i] == 0:
                    continue
                coef = c * yi * m[i] if isinstance(yi, CyclotomicNumber) \
                    else c * self.scalar(yi) * m[i]
                if coef.is_zero:
                    continue
                key = m[:i] + (m[i] - 1,) + m[i + 1:]
                s = out.get(key)
                out[key] = coef if s is None else s + coef
        return {m: c for m, c in out.items() if c}

    def substitute_linear(self, p: dict, forms) -> dict:
        """p with x_i replaced by the linear form forms[i]; degree-preserving."""
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                if k == 0:
                    cache[key] = {(0,) * self.n: self.one()}
                else:
                    prev = power(i, k - 1)
                    form = {m: c for m, c in forms[i].items()}
                    prod, over = self.poly_mul(prev, form)
                    assert not over, "degree-preserving substitution overflowed"
                    cache[key] = prod
            return cache[key]

        out: dict = {}
        for m, c in p.items():
            term = {(0,) * self.n: c}
            for i, e in enumerate(m):
                if e:
                    term, over = self.poly_mul(term, power(i, e))
                    assert not over
            out = self.poly_add(out, term)
        return out

    def divide_by_linear(self, p: dict, form: dict) -> dict:
        """Exact division by a homogeneous linear form; DivisionFailure if inexact."""
        pivot = None
        for m, c in form.items():
            if sum(m) != 1:
                raise ValueError("divisor must be homogeneous linear")
            if pivot is None and c:
                pivot = (m.index(1), c)
        if pivot is None:
            raise ZeroDivisionError("division by the zero form")
        j, cj = pivot
        inv = cj.inverse()
        rest = {m: c for m, c in form.items() if m.index(1) != j and c}
        quotient: dict = {}
        work = dict(p)
        while work:
            kmax = max(m[j] for m in work)
            if kmax == 0:
                raise DivisionFailure("nonzero remainder in exact linear division")
            top = {m: c for m, c in work.items() if m[j] == kmax}
            q_part = {}
            for m, c in top.items():
                key = m[:j] + (m[j] - 1,) + m[j + 1:]
                q_part[key] = c * inv
            quotient = self.poly_add(quotient, q_part)
            prod, over = self.poly_mul(q_part, rest)
            assert not over, "division intermediate left the cap"
            work = {m: c for m, c in work.items() if m[j] != kmax}
            work = self.poly_add(work, self.poly_scale(prod, -1))
        return quotient


POISON = None  # marker for a truncated (dishonest) operator column


class LinearOperator:
    """Exact column map on the monomial basis, with per-column poisoning.

    `cols[mono]` is the image polynomial of that basis monomial, or POISON if
    the honest image does not fit under the cap.  Compositions propagate
    poisoning, so comparisons on a degree window are meaningful exactly when
    no window column is poisoned.
    """

    def __init__(self, algebra: TruncatedPolynomialAlgebra, cols, shift: int = 0):
        self.algebra = algebra
        self.cols = cols
        self.shift = shift

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, {m: {} for m in algebra.basis}, 0)

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, {m: {m: algebra.one()} for m in algebra.basis}, 0)

    @classmethod
    def from_map(cls, algebra, fn, shift=0):
        return cls(algebra, {m: fn(m) for m in algebra.basis}, shift)

    def apply(self, poly: dict):
        out: dict = {}
        for m, c in poly.items():
            col = self.cols[m]
            if col is POISON:
                return POISON
            for m2, c2 in col.items():
                s = out.get(m2)
                prod = c * c2
                out[m2] = prod if s is None else s + prod
        return {m: c for m, c in out.items() if c}

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """self after other."""
        cols = {}
        for m, col in other.cols.items():
            cols[m] = POISON if col is POISON else self.apply(col)
        return LinearOperator(self.algebra, cols, self.shift + other.shift)

    def __add__(self, other):
        cols = {}
        for m in self.algebra.basis:
            a, b = self.cols[m], other.cols[m]
            cols[m] = POISON if (a is POISON or b is POISON) \
                else self.algebra.poly_add(a, b)
        return LinearOperator(self.algebra, cols, max(self.shift, other.shift))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "LinearOperator":
        cols = {}
        for m in self.algebra.basis:
            col = self.cols[m]
            cols[m] = POISON if col is POISON else self.algebra.poly_scale(col, c)
        return LinearOperator(self.algebra, cols, self.shift)

    def commutator(self, other: "LinearOperator") -> "LinearOperator":
        return self.compose(other) - other.compose(self)

    def is_zero_on(self, max_deg: int) -> bool:
        return self.equals_on(LinearOperator.zero(self.algebra), max_deg)

    def equals_on(self, other: "LinearOperator", max_deg: int) -> bool:
        """Exact equality on all columns of degree <= max_deg; POISON never equal."""
        for m in self.algebra.basis:
            if sum(m) > max_deg:
                continue
            a, b = self.cols[m], other.cols[m]
            if a is POISON or b is POISON:
                return False
            if self.algebra.poly_add(a, self.algebra.poly_scale(b, -1)):
                return False
        return True

    def restricted_vector(self, max_deg: int):
        """Flatten columns of degree <= max_deg into one coefficient vector."""
        vec = {}
        for m in self.algebra.basis:
            if sum(m) > max_deg:
                continue
            col = self.cols[m]
            assert col is not POISON, "poisoned column in restricted vector"
            for m2, c in col.items():
                vec[(m, m2)] = c
        return vec


def multiplication_operator(algebra: TruncatedPolynomialAlgebra, poly: dict) -> LinearOperator:
    deg = max((sum(m) for m in poly), default=0)

    def col(m):
        prod, over = algebra.poly_mul({m: algebra.one()}, poly)
        return POISON if over else prod

    return LinearOperator.from_map(algebra, col, shift=deg)


def derivative_operator(algebra: TruncatedPolynomialAlgebra, y) -> LinearOperator:
    return LinearOperator.from_map(
        algebra, lambda m: algebra.directional_derivative({m: algebra.one()}, y),
        shift=-1)


def group_action_operator(algebra: TruncatedPolynomialAlgebra,
                          group: FiniteMatrixGroup, element: int) -> LinearOperator:
    """rho(g) f = f o g^{-1}, a degree-preserving substitution operator."""
    g_inv = group.elements[group.inv(element)]
    forms = []
    for i in range(algebra.n):
        form = {}
        for j in range(algebra.n):
            c = g_inv.entries[i][j]
            if c:
                key = tuple(1 if t == j else 0 for t in range(algebra.n))
                form[key] = c
        forms.append(form)
    return LinearOperator.from_map(
        algebra,
        lambda m: algebra.substitute_linear({m: algebra.one()}, forms),
        shift=0)


# -- the Dunkl representation -------------------------------------------------

@dataclass
class DunklRep:
    """Group, reflection census, parameters t and c, and the degree cap.

    `c` maps the conjugacy-class representative of each reflection to an
    exact rational; passing a single Fraction uses it for every class and a
    dict may be keyed by any class member (ad-invariance is enforced by
    resolving every reflection through its class representative).
    """

    group: FiniteMatrixGroup
    t: Fraction
    c: dict
    cap: int
    census: ReflectionCensus = None

    def __post_init__(self):
        self.t = Fraction(self.t)
        if self.census is None:
            self.census = find_reflections(self.group)
        classes = conjugacy_classes(self.group)
        rep_of = {}
        for cl in classes:
            for m in cl.members:
                rep_of[m] = cl.representative
        self.class_of_reflection = {
            r.element: rep_of[r.element] for r in self.census.reflections}
        self.reflection_class_reps = tuple(sorted(set(self.class_of_reflection.values())))
        if isinstance(self.c, (int, Fraction)):
            self.c = {rep: Fraction(self.c) for rep in self.reflection_class_reps}
        else:
            resolved = {}
            for key, val in self.c.items():
                resolved[rep_of[key]] = Fraction(val)
            for rep in self.reflection_class_reps:
                resolved.setdefault(rep, Fraction(0))
            self.c = resolved
        self.algebra = TruncatedPolynomialAlgebra(
            self.group.dim, self.cap, self.group.conductor)

    def c_of(self, reflection: ReflectionData) -> Fraction:
        return self.c[self.class_of_reflection[reflection.element]]


def dunkl_operator(rep: DunklRep, y) -> LinearOperator:
    """The Dunkl operator for a direction y in h; lowers degree by one.

    D_y = t d_y + sum over reflections of
          (2 c(s) / (1 - lambda_s)) * coroot_s(y) * [f -> ((s f) - f) / coroot_s],
    with lambda_s the nontrivial eigenvalue on the conormal line.  The
    difference (s f) - f vanishes on the reflecting hyperplane, so the
    division is exact; a failure signals a wrong root/coroot pairing.
    """
    alg = rep.algebra
    group = rep.group
    y = tuple(alg.scalar(v) if not isinstance(v, CyclotomicNumber) else v for v in y)
    total = derivative_operator(alg, y).scale(rep.t)
    one = alg.one()
    for refl in rep.census.reflections:
        c_s = rep.c_of(refl)
        if c_s == 0:
            continue
        coroot_of_y = sum((a * b for a, b in zip(refl.coroot, y)), alg.zero())
        if coroot_of_y.is_zero:
            continue
        factor = (alg.scalar(2 * c_s) / (one - refl.eigenvalue)) * coroot_of_y
        action = group_action_operator(alg, group, refl.element)
        form = {tuple(1 if t == i else 0 for t in range(alg.n)): c
                for i, c in enumerate(refl.coroot) if c}

        def col(m, action=action, form=form, factor=factor):
            moved = action.cols[m]
            diff = alg.poly_add(moved, alg.poly_scale({m: one}, -1))
            if not diff:
                return {}
            return alg.poly_scale(alg.divide_by_linear(diff, form), factor)

        total = total + LinearOperator.from_map(alg, col, shift=-1)
    return total


def coordinate_dunkl_operators(rep: DunklRep) -> list[LinearOperator]:
    n = rep.group.dim
    return [dunkl_operator(rep, tuple(1 if j == i else 0 for j in range(n)))
            for i in range(n)]


# -- relation verification -----------------------------------------------------

@dataclass
class CheckEntry:
    key: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RelationReport:
    entries: list[CheckEntry]
    t_fit: CyclotomicNumber | None
    kappa: dict
    kappa_ratio: dict  # class rep -> kappa / c, None where c = 0

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def lines(self):
        out = [f"{'PASS' if e.passed else 'FAIL'} {e.name}"
               + (f" ({e.detail})" if e.detail else "") for e in self.entries]
        for rep, ratio in sorted(self.kappa_ratio.items()):
            shown = "undefined (c=0)" if ratio is None else str(ratio)
            out.append(f"kappa/c ratio for reflection class {rep}: {shown}")
        return out


def _solve_exact(rows, conductor):
    """Solve an overdetermined exact linear system; (solution, consistent)."""
    zero = CyclotomicNumber.from_rational(0, conductor)
    pivots = {}
    for coeffs, rhs in rows:
        vec = {j: c for j, c in enumerate(coeffs) if c}
        r = rhs
        while vec:
            lead = min(vec)
            piv = pivots.get(lead)
            if piv is None:
                inv = vec[lead].inverse()
                pivots[lead] = ({j: c * inv for j, c in vec.items()}, r * inv)
                break
            f = vec[lead]
            pvec, pr = piv
            for j, c in pvec.items():
                nxt = vec.get(j, zero) - f * c
                if nxt.is_zero:
                    vec.pop(j, None)
                else:
                    vec[j] = nxt
            r = r - f * pr
        else:
            if not r.is_zero:
                return None, False
    # back-substitute (pivot rows only have entries at or right of their lead)
    solution = {}
    for lead in sorted(pivots, reverse=True):
        pvec, pr = pivots[lead]
        val = pr
        for j, c in pvec.items():
            if j != lead:
                val = val - c * solution.get(j, zero)
        solution[lead] = val
    return solution, True


def verify_commutation_relations(rep: DunklRep) -> RelationReport:
    """Machine-check the defining relations on the truncated representation.

    (a) pairwise commutativity of the Dunkl operators, (b) commutativity of
    multiplications, (c) equivariance rho(g) D_y rho(g)^{-1} = D_{g y} on the
    generators, (d) the mixed commutator [D_u, X_y] fitted against
    a (u, y) id + sum over reflection classes kappa * coroot_s(u) root_s(y) s;
    the fitted kappa/c ratio is recorded per class instead of asserting any
    normalization.  Failures become report entries, never exceptions.
    """
    alg = rep.algebra
    group = rep.group
    n, cap = alg.n, alg.cap
    entries = []
    dunkls = coordinate_dunkl_operators(rep)

    ok = all(dunkls[i].commutator(dunkls[j]).is_zero_on(cap)
             for i in range(n) for j in range(i + 1, n))
    entries.append(CheckEntry("dunkl_commutativity", "[D_y, D_y'] = 0", ok))

    mults = [multiplication_operator(
        alg, {tuple(1 if t == j else 0 for t in range(n)): alg.one()})
        for j in range(n)]
    ok = all(mults[i].commutator(mults[j]).is_zero_on(cap - 2)
             for i in range(n) for j in range(i + 1, n))
    entries.append(CheckEntry("multiplication_commutativity", "[x_u, x_u'] = 0", ok))

    ok = True
    for gi in group.generator_indices:
        rho = group_action_operator(alg, group, gi)
        rho_inv = group_action_operator(alg, group, group.inv(gi))
        g = group.elements[gi]
        for i in range(n):
            gy = tuple(g.entries[r][i] for r in range(group.dim))
            lhs = rho.compose(dunkls[i]).compose(rho_inv)
            if not lhs.equals_on(dunkl_operator(rep, gy), cap):
                ok = False
    entries.append(CheckEntry("equivariance", "g D_y g^-1 = D_{gy}", ok))

    # (d) fit M_ij = a delta_ij Id + sum_cl kappa_cl T_ij_cl on degrees <= cap-1
    window = cap - 1
    class_reps = rep.reflection_class_reps
    unknown_index = {"a": 0}
    for k, cl in enumerate(class_reps):
        unknown_index[cl] = k + 1
    rows = []
    rho_cache = {r.element: group_action_operator(alg, group, r.element)
                 for r in rep.census.reflections}
    for i in range(n):
        for j in range(n):
            m_op = dunkls[i].commutator(mults[j])
            t_terms = {}
            for refl in rep.census.reflections:
                w = refl.coroot[i] * refl.root[j]
                if w.is_zero:
                    continue
                cl = rep.class_of_reflection[refl.element]
                cur = t_terms.get(cl)
                contrib = rho_cache[refl.element].scale(w)
                t_terms[cl] = contrib if cur is None else cur + contrib
            for mono in alg.basis:
                if sum(mono) > window:
                    continue
                lhs_col = m_op.cols[mono]
                assert lhs_col is not POISON
                targets = set(lhs_col)
                for op in t_terms.values():
                    targets |= set(op.cols[mono])
                if i == j:
                    targets.add(mono)
                for target in targets:
                    coeffs = [alg.zero()] * (1 + len(class_reps))
                    if i == j and target == mono:
                        coeffs[0] = alg.one()
                    for cl, op in t_terms.items():
                        coeffs[unknown_index[cl]] = op.cols[mono].get(target, alg.zero())
                    rhs = lhs_col.get(target, alg.zero())
                    rows.append((coeffs, rhs))
    solution, consistent = _solve_exact(rows, group.conductor)
    t_fit = None
    kappa = {}
    ratios = {}
    if consistent:
        t_fit = solution.get(0, alg.zero())
        for cl in class_reps:
            kappa[cl] = solution.get(unknown_index[cl], alg.zero())
            c_cl = rep.c[cl]
            ratios[cl] = None if c_cl == 0 else kappa[cl] / alg.scalar(c_cl)
        expected_t = alg.scalar(rep.t)
        entries.append(CheckEntry(
            "mixed_commutator_shape", "mixed commutator has the Cherednik shape",
            t_fit == expected_t, f"t coefficient fits to {t_fit}"))
        entries.append(CheckEntry(
            "kappa_fit", "single fitted kappa per reflection class", True,
            ", ".join(f"class {cl}: kappa={kappa[cl]}" for cl in class_reps)))
    else:
        entries.append(CheckEntry(
            "mixed_commutator_shape", "mixed commutator has the Cherednik shape",
            False, "no consistent (t, kappa) fit exists"))
    return RelationReport(entries, t_fit, kappa, ratios)


@dataclass
class PbwReport:
    filtration_level: int
    word_count: int
    rank: int

    @property
    def matches(self) -> bool:
        return self.word_count == self.rank


def _rank_of_vectors(vectors, conductor) -> int:
    zero = CyclotomicNumber.from_rational(0, conductor)
    pivots = {}
    rank = 0
    for vec in vectors:
        work = {k: v for k, v in vec.items() if v}
        while work:
            lead = min(work)
            piv = pivots.get(lead)
            if piv is None:
                inv = work[lead].inverse()
                pivots[lead] = {k: v * inv for k, v in work.items()}
                rank += 1
                break
            f = work[lead]
            for k, v in piv.items():
                nxt = work.get(k, zero) - f * v
                if nxt.is_zero:
                    work.pop(k, None)
                else:
                    work[k] = nxt
    return rank


def pbw_spot_check(rep: DunklRep, level: int) -> PbwReport:
    """Exact-rank comparison of normal-ordered words against the symbol count.

    Words x^a D^b g with |b| <= level and |a| <= cap - level act on the
    degree <= cap truncation; they are built inside a large enough ambient
    truncation that no product overflows, so the span's dimension is honest.
    The predicted dimension is the plain count of symbols (a, b, g).
    """
    cap = rep.cap
    n = rep.group.dim
    ext = TruncatedPolynomialAlgebra(n, 2 * cap - level, rep.group.conductor)
    ext_rep = DunklRep(rep.group, rep.t, dict(rep.c), ext.cap, census=rep.census)
    dunkls = coordinate_dunkl_operators(ext_rep)
    group = rep.group

    a_list = [m for m in monomials_up_to(n, cap - level)]
    b_list = [m for m in monomials_up_to(n, level)]
    vectors = []
    mult_cache = {}
    dunkl_power_cache = {(0,) * n: LinearOperator.identity(ext)}

    def dunkl_power(b):
        if b not in dunkl_power_cache:
            i = next(k for k, v in enumerate(b) if v)
            smaller = b[:i] + (b[i] - 1,) + b[i + 1:]
            dunkl_power_cache[b] = dunkls[i].compose(dunkl_power(smaller))
        return dunkl_power_cache[b]

    for g in range(group.order):
        rho = group_action_operator(ext, group, g)
        for b in b_list:
            db = dunkl_power(b).compose(rho)
            for a in a_list:
                if a not in mult_cache:
                    mult_cache[a] = multiplication_operator(ext, {a: ext.one()})
                word = mult_cache[a].compose(db)
                vectors.append(word.restricted_vector(cap))
    rank = _rank_of_vectors(vectors, group.conductor)
    return PbwReport(level, len(a_list) * len(b_list) * group.order, rank)
