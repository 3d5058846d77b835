"""Exact arithmetic in cyclotomic fields Q(zeta_e) and exact linear algebra over them.

Numbers are stored in the power basis 1, z, ..., z^(phi(e)-1) of Q(zeta_e),
fully reduced modulo the e-th cyclotomic polynomial, so structural equality
coincides with field equality and values are safely hashable.  Everything is
built on `fractions.Fraction`; no floating point enters any computation (an
optional complex() embedding exists for display only).
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConductorMismatch, NotInvertible

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _totient(e: int) -> int:
    result, n, p = e, e, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divide_int(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, ascending, monic."""
    if e == 1:
        return (-1, 1)
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divide_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(e: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced coordinates of z^j for j = 0 .. max(e-1, 2*phi(e)-2)."""
    phi = _totient(e)
    cyc = cyclotomic_polynomial(e)
    # z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1})
    top = tuple(Fraction(-c) for c in cyc[:phi])
    table = []
    cur = [_ONE] + [_ZERO] * (phi - 1)
    for _ in range(max(e, 2 * phi - 1)):
        table.append(tuple(cur))
        lead = cur[phi - 1]
        nxt = [_ZERO] + cur[: phi - 1]
        if lead:
            nxt = [a + lead * b for a, b in zip(nxt, top)]
        cur = nxt
    return tuple(table)


def _reduce_raw(raw, e: int) -> tuple[Fraction, ...]:
    phi = _totient(e)
    table = _power_table(e)
    out = [_ZERO] * phi
    for j, c in enumerate(raw):
        if not c:
            continue
        c = Fraction(c)
        row = table[j % e] if j >= len(table) else table[j]
        for i in range(phi):
            out[i] += c * row[i]
    return tuple(out)


class CyclotomicNumber:
    """An element of Q(zeta_e) in canonical reduced form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != _totient(conductor):
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def reduce(cls, raw, conductor: int) -> "CyclotomicNumber":
        """Canonical representative of sum_j raw[j] * z^j modulo Phi_e."""
        return cls(conductor, _reduce_raw(raw, conductor))

    @classmethod
    def from_rational(cls, value, conductor: int = 1) -> "CyclotomicNumber":
        phi = _totient(conductor)
        return cls(conductor, (Fraction(value),) + (_ZERO,) * (phi - 1))

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CyclotomicNumber":
        raw = [0] * (power % conductor) + [1] if conductor > 1 else [1]
        return cls.reduce(raw, conductor)

    # -- predicates and conversions ---------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    @property
    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, conductor: int) -> "CyclotomicNumber":
        """Embed into Q(zeta_E) for a multiple E of the own conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ConductorMismatch(
                f"cannot lift conductor {self.conductor} into {conductor}")
        step = conductor // self.conductor
        raw = {}
        for j, c in enumerate(self.coeffs):
            if c:
                raw[j * step] = c
        out = [_ZERO] * (max(raw) + 1) if raw else [_ZERO]
        for j, c in raw.items():
            out[j] = c
        return CyclotomicNumber.reduce(out, conductor)

    def __complex__(self) -> complex:
        # display-only embedding at the primitive root exp(2*pi*i/e)
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.conductor == self.conductor:
                return other
            e = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
            if e == self.conductor:
                return other.lift(e)
            raise ConductorMismatch(
                f"conductors {self.conductor} and {other.conductor} differ; lift first")
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.conductor)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.conductor,
                                tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.conductor,
                                tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational:
            q = o.coeffs[0]
            return CyclotomicNumber(self.conductor, tuple(q * a for a in self.coeffs))
        if self.is_rational:
            q = self.coeffs[0]
            return CyclotomicNumber(self.conductor, tuple(q * a for a in o.coeffs))
        a, b = self.coeffs, o.coeffs
        conv = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CyclotomicNumber.reduce(conv, self.conductor)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclid algorithm mod Phi_e."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational:
            return CyclotomicNumber.from_rational(1 / self.coeffs[0], self.conductor)
        phi_e = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = phi_e, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:  # nonzero constant: gcd reached (Phi_e irreducible)
                c = r1[0]
                return CyclotomicNumber.reduce([x / c for x in s1], self.conductor)
            q = [_ZERO] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            for k in range(len(q) - 1, -1, -1):
                f = rem[k + len(r1) - 1] / r1[-1]
                q[k] = f
                if f:
                    for i, d in enumerate(r1):
                        rem[k + i] -= f * d
            del rem[len(r1) - 1:]
            # s_next = s0 - q * s1
            prod = [_ZERO] * (len(q) + len(s1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        prod[i + j] += qi * sj
            s_next = [
                (s0[i] if i < len(s0) else _ZERO) - (prod[i] if i < len(prod) else _ZERO)
                for i in range(max(len(s0), len(prod)))
            ]
            r0, r1 = r1, rem
            s0, s1 = s1, s_next

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CyclotomicNumber.from_rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CyclotomicNumber":
        """The Galois conjugate z -> z^(-1) (complex conjugation on values)."""
        e = self.conductor
        raw = [_ZERO] * e
        for j, c in enumerate(self.coeffs):
            raw[(e - j) % e] += c
        return CyclotomicNumber.reduce(raw, e)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coeffs[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.conductor == self.conductor:
            return self.coeffs == other.coeffs
        if self.is_rational or other.is_rational:
            return (self.is_rational and other.is_rational
                    and self.coeffs[0] == other.coeffs[0])
        e = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.lift(e).coeffs == other.lift(e).coeffs

    def __hash__(self):
        if self.is_rational:
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"CyclotomicNumber({self.conductor}, {self})"

    def __str__(self):
        """Literal in the input grammar: a sum of `<rat>*z^<k>` terms."""
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def reduce(raw, conductor: int) -> CyclotomicNumber:
    """Canonicalize a raw power-basis coefficient sequence; idempotent."""
    return CyclotomicNumber.reduce(raw, conductor)


def cyclo(value, conductor: int = 1) -> CyclotomicNumber:
    """Coerce an int/Fraction/CyclotomicNumber to the given conductor."""
    if isinstance(value, CyclotomicNumber):
        return value.lift(conductor) if value.conductor != conductor else value
    return CyclotomicNumber.from_rational(value, conductor)


def zeta(conductor: int, power: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.zeta(conductor, power)


class CycloMatrix:
    """Dense immutable matrix over one cyclotomic field."""

    __slots__ = ("conductor", "rows", "cols", "entries")

    def __init__(self, entries, conductor: int | None = None):
        rows = []
        for row in entries:
            rows.append(tuple(row))
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        if conductor is None:
            conductor = 1
            for row in rows:
                for x in row:
                    if isinstance(x, CyclotomicNumber):
                        conductor = conductor * x.conductor // gcd(conductor, x.conductor)
        fixed = tuple(
            tuple(cyclo(x, conductor) for x in row) for row in rows
        )
        ncols = len(fixed[0])
        if any(len(r) != ncols for r in fixed):
            raise ValueError("ragged rows")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "rows", len(fixed))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", fixed)

    def __setattr__(self, *_):
        raise AttributeError("CycloMatrix is immutable")

    @classmethod
    def identity(cls, n: int, conductor: int = 1) -> "CycloMatrix":
        one = CyclotomicNumber.from_rational(1, conductor)
        zero = CyclotomicNumber.from_rational(0, conductor)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)],
                   conductor)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def lift(self, conductor: int) -> "CycloMatrix":
        if conductor == self.conductor:
            return self
        return CycloMatrix(
            [[x.lift(conductor) for x in row] for row in self.entries], conductor)

    def _check(self, other: "CycloMatrix"):
        if self.conductor != other.conductor:
            raise ConductorMismatch("matrix conductors differ; lift first")

    def __mul__(self, other):
        if isinstance(other, CycloMatrix):
            self._check(other)
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            bt = list(zip(*other.entries))
            out = []
            for row in self.entries:
                out_row = []
                for col in bt:
                    acc = CyclotomicNumber.from_rational(0, self.conductor)
                    for a, b in zip(row, col):
                        if a and b:
                            acc = acc + a * b
                    out_row.append(acc)
                out.append(out_row)
            return CycloMatrix(out, self.conductor)
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            c = cyclo(other, self.conductor)
            return CycloMatrix(
                [[x * c for x in row] for row in self.entries], self.conductor)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        self._check(other)
        return CycloMatrix(
            [[a + b for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)], self.conductor)

    def __sub__(self, other):
        self._check(other)
        return CycloMatrix(
            [[a - b for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)], self.conductor)

    def __neg__(self):
        return CycloMatrix([[-a for a in row] for row in self.entries], self.conductor)

    def transpose(self) -> "CycloMatrix":
        return CycloMatrix(list(zip(*self.entries)), self.conductor)

    def conjugate_transpose(self) -> "CycloMatrix":
        return CycloMatrix(
            [[x.conjugate() for x in col] for col in zip(*self.entries)],
            self.conductor)

    def trace(self) -> CyclotomicNumber:
        acc = CyclotomicNumber.from_rational(0, self.conductor)
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    @property
    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x != (1 if i == j else 0):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            all(a == b for r1, r2 in zip(self.entries, other.entries)
                for a, b in zip(r1, r2))

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"CycloMatrix[{self.rows}x{self.cols}]({body})"

    # -- elimination-based queries ----------------------------------------

    def _echelon(self):
        """Row echelon form with first-nonzero pivoting; returns (rows, pivots)."""
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def kernel_basis(self) -> list[tuple[CyclotomicNumber, ...]]:
        """Exact basis of the right kernel, one column vector per free variable."""
        m, pivots = self._echelon()
        free = [c for c in range(self.cols) if c not in pivots]
        zero = CyclotomicNumber.from_rational(0, self.conductor)
        one = CyclotomicNumber.from_rational(1, self.conductor)
        basis = []
        for f in free:
            vec = [zero] * self.cols
            vec[f] = one
            for r, p in enumerate(pivots):
                vec[p] = -m[r][f]
            basis.append(tuple(vec))
        return basis

    def inverse(self) -> "CycloMatrix":
        if self.rows != self.cols:
            raise NotInvertible("non-square matrix")
        n = self.rows
        zero = CyclotomicNumber.from_rational(0, self.conductor)
        one = CyclotomicNumber.from_rational(1, self.conductor)
        m = [list(row) + [one if i == j else zero for j in range(n)]
             for i, row in enumerate(self.entries)]
        for c in range(n):
            pr = None
            for i in range(c, n):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                raise NotInvertible("singular matrix")
            m[c], m[pr] = m[pr], m[c]
            inv = m[c][c].inverse()
            m[c] = [x * inv for x in m[c]]
            for i in range(n):
                if i != c and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return CycloMatrix([row[n:] for row in m], self.conductor)

    def solve(self, rhs: "CycloMatrix") -> "CycloMatrix":
        """A unique exact solution X of self @ X = rhs (raises if inconsistent)."""
        self._check(rhs)
        aug = CycloMatrix(
            [list(r1) + list(r2) for r1, r2 in zip(self.entries, rhs.entries)],
            self.conductor)
        m, pivots = aug._echelon()
        zero = CyclotomicNumber.from_rational(0, self.conductor)
        if any(p >= self.cols for p in pivots):
            raise NotInvertible("inconsistent linear system")
        sol = [[zero] * rhs.cols for _ in range(self.cols)]
        for r, p in enumerate(pivots):
            for j in range(rhs.cols):
                sol[p][j] = m[r][self.cols + j]
        return CycloMatrix(sol, self.conductor)

    def charpoly(self) -> list[CyclotomicNumber]:
        """det(xI - A) by Faddeev-LeVerrier; ascending coefficients, monic."""
        if self.rows != self.cols:
            raise ValueError("characteristic polynomial needs a square matrix")
        n = self.rows
        ident = CycloMatrix.identity(n, self.conductor)
        coeffs = [CyclotomicNumber.from_rational(1, self.conductor)]  # leading
        m = ident
        for k in range(1, n + 1):
            m = self * m
            c = m.trace() * Fraction(-1, k)
            coeffs.append(c)
            if k < n:
                m = m + ident * c
        return coeffs[::-1]

    def det(self) -> CyclotomicNumber:
        cp = self.charpoly()
        d = cp[0]  # det(xI - A) at x=0 is (-1)^n det(A)
        return d if self.rows % 2 == 0 else -d


def kernel_basis(matrix: CycloMatrix) -> list[tuple[CyclotomicNumber, ...]]:
    """Exact basis of the right kernel of the matrix."""
    return matrix.kernel_basis()


def char_det(g: CycloMatrix) -> list[CyclotomicNumber]:
    """det(1 - t*g) as ascending coefficients [1, c_1, ..., c_n]."""
    cp = g.charpoly()  # ascending coefficients of det(xI - g)
    # det(1 - t g) = t^n det((1/t) I - g) = sum_k cp[n-k] t^k
    n = g.rows
    return [cp[n - k] for k in range(n + 1)]
