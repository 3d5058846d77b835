"""Truncated graded series: the A-hat genus, Chern characters and index densities.

Series live in named degree-2 curvature symbols with coefficients that are
exact Laurent polynomials in the formal parameter hbar; division of a symbol
by hbar is pure bookkeeping on the Laurent grading.  The module supplies the
three classical factors (multiplicative A-hat from Chern roots, additive
Chern character, moment-twisted Chern character), their product's homogeneous
components, and the degree-(n-l) index density with its exact hbar powers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import MissingMoment, TruncationTooLow


class LaurentQ:
    """Exact Laurent polynomial in hbar over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if isinstance(terms, LaurentQ):
            data = dict(terms.terms)
        elif isinstance(terms, (int, Fraction)):
            if terms:
                data[0] = Fraction(terms)
        elif terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    data[k] = data.get(k, Fraction(0)) + v
        self.terms = {k: v for k, v in data.items() if v}

    @classmethod
    def hbar(cls, power: int = 1, coeff=1) -> "LaurentQ":
        return cls({power: Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_order(self):
        return min(self.terms) if self.terms else None

    def _coerce(self, other):
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQ(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in o.terms.items():
                k = k1 + k2
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return LaurentQ(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            v = self.terms[k]
            if k == 0:
                parts.append(str(v))
            else:
                parts.append(f"{v}*hbar^{k}")
        return " + ".join(parts)


_L0 = LaurentQ(0)
_L1 = LaurentQ(1)


class GradedSeries:
    """Truncated series in named degree-2 symbols with LaurentQ coefficients.

    Monomials are exponent tuples over a fixed symbol universe; products are
    truncated above the order, which counts total monomial degree in the
    symbols (each symbol carries cohomological degree 2, so monomial degree k
    stands for a 2k-form component).
    """

    def __init__(self, symbols, order: int, terms=None):
        self.symbols = tuple(symbols)
        self.order = order
        self.terms: dict[tuple[int, ...], LaurentQ] = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(coeff, LaurentQ):
                coeff = LaurentQ(coeff)
            if sum(mono) <= order and not coeff.is_zero:
                cur = self.terms.get(mono)
                self.terms[mono] = coeff if cur is None else cur + coeff
        self.terms = {m: c for m, c in self.terms.items() if not c.is_zero}

    @classmethod
    def constant(cls, symbols, order, value=1) -> "GradedSeries":
        n = len(tuple(symbols))
        return cls(symbols, order, {(0,) * n: LaurentQ(value)})

    def _aligned(self, other: "GradedSeries"):
        if self.symbols == other.symbols:
            return self, other
        universe = tuple(dict.fromkeys(self.symbols + other.symbols))

        def remap(series):
            pos = [universe.index(s) for s in series.symbols]
            terms = {}
            for mono, c in series.terms.items():
                new = [0] * len(universe)
                for p, e in zip(pos, mono):
                    new[p] = e
                terms[tuple(new)] = c
            return GradedSeries(universe, series.order, terms)

        return remap(self), remap(other)

    def __add__(self, other):
        a, b = self._aligned(other)
        out = dict(a.terms)
        for m, c in b.terms.items():
            cur = out.get(m)
            out[m] = c if cur is None else cur + c
        return GradedSeries(a.symbols, min(a.order, b.order), out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentQ)):
            return self.scale(other)
        a, b = self._aligned(other)
        order = min(a.order, b.order)
        out: dict = {}
        for m1, c1 in a.terms.items():
            d1 = sum(m1)
            for m2, c2 in b.terms.items():
                if d1 + sum(m2) > order:
                    continue
                m = tuple(x + y for x, y in zip(m1, m2))
                prod = c1 * c2
                cur = out.get(m)
                out[m] = prod if cur is None else cur + prod
        return GradedSeries(a.symbols, order, out)

    __rmul__ = __mul__

    def scale(self, c) -> "GradedSeries":
        if not isinstance(c, LaurentQ):
            c = LaurentQ(c)
        return GradedSeries(self.symbols, self.order,
                            {m: v * c for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def homogeneous_component(self, k: int) -> "GradedSeries":
        return GradedSeries(self.symbols, self.order,
                            {m: c for m, c in self.terms.items() if sum(m) == k})

    @property
    def constant_term(self) -> LaurentQ:
        return self.terms.get((0,) * len(self.symbols), _L0)

    def coefficient(self, mono) -> LaurentQ:
        return self.terms.get(tuple(mono), _L0)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            factors = [f"{s}^{e}" if e > 1 else s
                       for s, e in zip(self.symbols, mono) if e]
            name = "*".join(factors) if factors else "1"
            parts.append(f"({self.terms[mono]})*{name}")
        return " + ".join(parts)


@dataclass(frozen=True)
class RootTerm:
    """A curvature argument: scale * symbol, or a plain scalar when symbol is None.

    The scale is an exact Laurent coefficient, so -theta/hbar is the root
    term with symbol "theta" and scale -hbar^(-1).
    """
    symbol: str | None
    scale: LaurentQ = field(default_factory=lambda: _L1)

    @classmethod
    def of(cls, value, hbar_power: int = 0, coeff=1) -> "RootTerm":
        scale = LaurentQ.hbar(hbar_power, coeff)
        if isinstance(value, str):
            return cls(value, scale)
        return cls(None, scale * LaurentQ(Fraction(value)))


def _root_power_series(root: RootTerm, coeffs, symbols, order) -> GradedSeries:
    """sum_k coeffs[k] * root^k as a graded series over the symbol universe."""
    universe = tuple(symbols)
    n = len(universe)
    terms: dict = {}
    if root.symbol is None:
        total = _L0
        val = root.scale
        acc = _L1
        for k in range(len(coeffs)):
            if coeffs[k]:
                total = total + acc * coeffs[k]
            acc = acc * val
        terms[(0,) * n] = total
        return GradedSeries(universe, order, terms)
    # coefficient of symbol^k picks up scale^k
    pos = universe.index(root.symbol)
    out = {}
    acc = _L1
    for k in range(min(order, len(coeffs) - 1) + 1):
        if coeffs[k]:
            c = coeffs[k] if isinstance(coeffs[k], LaurentQ) else LaurentQ(coeffs[k])
            mono = tuple(k if i == pos else 0 for i in range(n))
            out[mono] = c * acc
        acc = acc * root.scale
    return GradedSeries(universe, order, out)


def _normalize_roots(roots):
    out = []
    for r in roots:
        if isinstance(r, RootTerm):
            out.append(r)
        elif isinstance(r, str):
            out.append(RootTerm(r))
        else:
            out.append(RootTerm(None, LaurentQ(Fraction(r))))
    return out


def _symbol_universe(roots, extra=()):
    seen = dict.fromkeys(r.symbol for r in roots if r.symbol is not None)
    for s in extra:
        seen.setdefault(s)
    return tuple(seen)


def ahat_coefficients(order: int) -> list[Fraction]:
    """Taylor coefficients of (x/2)/sinh(x/2): series reciprocal, exact."""
    # sinh(x/2)/(x/2) = sum_k x^(2k) / (4^k (2k+1)!)
    denom = [Fraction(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        denom[2 * k] = Fraction(1, 4 ** k * factorial(2 * k + 1))
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            if denom[j]:
                acc += denom[j] * out[m - j]
        out[m] = -acc
    return out


def exp_coefficients(order: int) -> list[Fraction]:
    return [Fraction(1, factorial(k)) for k in range(order + 1)]


def series_a_hat(roots, order: int, symbols=None) -> GradedSeries:
    """prod over roots of the one-variable A-hat series, truncated.

    Scalars are substituted into the truncated one-root series, which keeps
    everything exact; the empty product is the constant series 1.
    """
    roots = _normalize_roots(roots)
    universe = _symbol_universe(roots) if symbols is None else tuple(symbols)
    coeffs = ahat_coefficients(order)
    out = GradedSeries.constant(universe, order)
    for r in roots:
        out = out * _root_power_series(r, coeffs, universe, order)
    return out


def series_ch(roots, order: int, symbols=None) -> GradedSeries:
    """sum over roots of exp(root), truncated; constant term = root count."""
    roots = _normalize_roots(roots)
    universe = _symbol_universe(roots) if symbols is None else tuple(symbols)
    coeffs = exp_coefficients(order)
    out = GradedSeries(universe, order)
    for r in roots:
        out = out + _root_power_series(r, coeffs, universe, order)
    return out


class TraceFunctional:
    """Moment sequence m_0 = 1, m_1, ... of a normalized trace.

    m_k stands for the trace applied to the k-th power of the normal
    curvature argument; moments may carry exact hbar content.
    """

    def __init__(self, moments):
        self.moments = [m if isinstance(m, LaurentQ) else LaurentQ(Fraction(m))
                        for m in moments]
        if not self.moments or self.moments[0] != _L1:
            raise ValueError("trace functional must be normalized: m_0 = 1")

    @classmethod
    def trivial(cls, order: int) -> "TraceFunctional":
        """phi = evaluation at the identity: m_k = delta_{k,0}."""
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def constant(cls, order: int) -> "TraceFunctional":
        """All moments 1 (the exponential functional)."""
        return cls([Fraction(1)] * (order + 1))

    @classmethod
    def geometric(cls, lam, mu, order: int) -> "TraceFunctional":
        """m_k = lam * mu^k for k >= 1, with m_0 forced to 1."""
        lam, mu = Fraction(lam), Fraction(mu)
        return cls([Fraction(1)] + [lam * mu ** k for k in range(1, order + 1)])

    @classmethod
    def from_weighted_traces(cls, weights, rows) -> "TraceFunctional":
        """Combine rows of per-trace moment data with the given weights.

        Realizes a decomposition phi = sum_k lambda_k tr_k(.) at the moment
        level: m_j = sum_k weights[k] * rows[k][j], renormalized so m_0 = 1.
        """
        if not rows:
            raise ValueError("need at least one trace row")
        length = min(len(r) for r in rows)
        combined = []
        for j in range(length):
            acc = _L0
            for w, row in zip(weights, rows):
                wv = w if isinstance(w, LaurentQ) else LaurentQ(Fraction(w))
                rv = row[j] if isinstance(row[j], LaurentQ) else LaurentQ(Fraction(row[j]))
                acc = acc + wv * rv
            combined.append(acc)
        m0 = combined[0]
        if m0.is_zero:
            raise ValueError("weighted combination has m_0 = 0; cannot normalize")
        if len(m0.terms) != 1:
            raise ValueError("m_0 must be a single exact Laurent term to normalize")
        (k0, v0), = m0.terms.items()
        inv = LaurentQ({-k0: 1 / v0})
        return cls([m * inv for m in combined])

    def moment(self, k: int) -> LaurentQ:
        if k >= len(self.moments):
            raise MissingMoment(
                f"moment m_{k} not supplied (have {len(self.moments)})")
        return self.moments[k]


def series_ch_phi(tf: TraceFunctional, symbol, order: int,
                  symbols=None, hbar_power: int = 0) -> GradedSeries:
    """sum_k (m_k / k!) * symbol^k, the moment-twisted Chern character.

    `symbol` may be a RootTerm (its scale multiplies each power) or a symbol
    name; `hbar_power` scales power k by hbar^(power*k) on top of that.
    """
    root = symbol if isinstance(symbol, RootTerm) else RootTerm.of(symbol)
    if hbar_power:
        root = RootTerm(root.symbol, root.scale * LaurentQ.hbar(hbar_power))
    universe = _symbol_universe([root]) if symbols is None else tuple(symbols)
    n = len(universe)
    terms: dict = {}
    acc = _L1
    top = order if root.symbol is not None else min(order, len(tf.moments) - 1)
    for k in range(top + 1):
        coeff = tf.moment(k) * Fraction(1, factorial(k)) * acc
        if root.symbol is None:
            cur = terms.get((0,) * n, _L0)
            terms[(0,) * n] = cur + coeff
        else:
            pos = universe.index(root.symbol)
            mono = tuple(k if i == pos else 0 for i in range(n))
            terms[mono] = coeff
        acc = acc * root.scale
    return GradedSeries(universe, order, terms)


@dataclass
class CurvatureData:
    """Curvature symbols for one stratum: tangent Chern roots, the central
    2-form symbol and the normal moments with their symbol."""

    tangent_roots: tuple = ()
    theta: str | Fraction | None = "theta"
    normal_symbol: str | None = "nu"
    rank: int = 1
    moments: TraceFunctional | None = None


def index_density(cd: CurvatureData, n: int, l: int,
                  tf: TraceFunctional | None = None,
                  order: int | None = None) -> GradedSeries:
    """The degree-(n-l) component of hbar^(n-l) A-hat(R_T) Ch(-Theta/hbar) Ch_phi(R_N/hbar).

    Every 1/hbar from the arguments is tracked exactly in the Laurent
    coefficients, so for polynomial inputs the output has no negative total
    hbar order after the hbar^(n-l) prefactor.
    """
    k = n - l
    if k < 0:
        raise ValueError("need l <= n")
    if order is None:
        order = k
    if order < k:
        raise TruncationTooLow(f"truncation {order} < requested component {k}")
    tf = tf or cd.moments or TraceFunctional.trivial(order)

    roots = _normalize_roots(cd.tangent_roots)
    extra = []
    if isinstance(cd.theta, str):
        extra.append(cd.theta)
    if cd.normal_symbol is not None:
        extra.append(cd.normal_symbol)
    universe = _symbol_universe(roots, extra)

    ahat = series_a_hat(roots, order, universe)

    if cd.theta is None:
        ch = GradedSeries.constant(universe, order, cd.rank)
    else:
        theta_root = (RootTerm(cd.theta, LaurentQ.hbar(-1, -1))
                      if isinstance(cd.theta, str)
                      else RootTerm(None, LaurentQ.hbar(-1, -Fraction(cd.theta))))
        ch = series_ch([theta_root] * cd.rank, order, universe)

    if cd.normal_symbol is None:
        chphi = GradedSeries.constant(universe, order, tf.moment(0))
    else:
        normal_root = RootTerm(cd.normal_symbol, LaurentQ.hbar(-1))
        chphi = series_ch_phi(tf, normal_root, order, universe)

    product = ahat * ch * chphi
    component = product.homogeneous_component(k)
    return component.scale(LaurentQ.hbar(k))


@dataclass
class GeneratingFunctionReport:
    order: int
    component_tables: list  # (degree, path1 terms, path2 terms, equal)
    ahat_scaling_ok: bool

    @property
    def passed(self) -> bool:
        return self.ahat_scaling_ok and all(t[3] for t in self.component_tables)


def series_a_hat_hbar(roots, order: int, symbols=None) -> GradedSeries:
    """The hbar-scaled A-hat: coefficient of x^k carries hbar^k.

    Implemented on the coefficient side (c_k -> c_k hbar^k), deliberately a
    different route than substituting hbar-scaled roots into the plain
    series; the scaling identity between the two is a checkable fact, not a
    definition.
    """
    roots = _normalize_roots(roots)
    universe = _symbol_universe(roots) if symbols is None else tuple(symbols)
    scaled = [LaurentQ({k: c}) if c else _L0
              for k, c in enumerate(ahat_coefficients(order))]
    out = GradedSeries.constant(universe, order)
    for r in roots:
        out = out * _root_power_series(r, scaled, universe, order)
    return out


def generating_function_check(y_roots, gl_roots, tf: TraceFunctional,
                              order: int, z_symbol: str = "z") -> GeneratingFunctionReport:
    """Compare the two assembly routes of (A-hat_hbar Ch Ch_phi)_k for k <= order.

    Route one multiplies the three truncated factors and extracts homogeneous
    components; route two assembles each component directly from homogeneous
    pieces of separately truncated factors.  Also verifies the scaling
    identity A-hat_hbar(X) = A-hat(hbar X) term by term.
    """
    y_roots = _normalize_roots(y_roots)
    gl_roots = _normalize_roots(gl_roots)
    z_root = RootTerm(z_symbol)
    universe = _symbol_universe(y_roots + gl_roots + [z_root])

    ahat = series_a_hat_hbar(y_roots, order, universe)
    ch = series_ch(gl_roots, order, universe)
    chphi = series_ch_phi(tf, z_root, order, universe)
    full = ahat * ch * chphi

    tables = []
    for k in range(order + 1):
        path1 = full.homogeneous_component(k)
        acc = GradedSeries(universe, order)
        for i in range(k + 1):
            for j in range(k - i + 1):
                piece = (ahat.homogeneous_component(i)
                         * ch.homogeneous_component(j)
                         * chphi.homogeneous_component(k - i - j))
                acc = acc + piece
        path2 = acc.homogeneous_component(k)
        tables.append((k, dict(path1.terms), dict(path2.terms), path1 == path2))

    # A-hat_hbar(X) = A-hat(hbar X): substitute scaled roots into the plain series
    direct = series_a_hat(
        [RootTerm(r.symbol, r.scale * LaurentQ.hbar(1)) for r in y_roots],
        order, universe)
    scaling_ok = direct == ahat
    return GeneratingFunctionReport(order, tables, scaling_ok)
