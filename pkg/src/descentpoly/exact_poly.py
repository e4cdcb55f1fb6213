"""Exact polynomial arithmetic over the integers.

Three polynomial flavours are used throughout the package:

* :class:`IntPolynomial` -- univariate in ``t`` (also used for polynomials in
  ``q``; :data:`QPolynomial` is an alias),
* :class:`QZPolynomial` -- polynomial in ``t`` whose coefficients are sparse
  bivariate polynomials in ``q`` and ``z``.

All values are immutable and every operation returns canonical form: no
trailing zero coefficients, the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence


class GuardError(ArithmeticError):
    """A generating-function extraction left nonzero coefficients past its cap."""


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return poly_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Evaluate by Horner's rule; works for ints and Fractions."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return poly_derivative(self)

    def stretch(self, k: int) -> "IntPolynomial":
        """Substitute ``x -> x**k``."""
        if not self.coeffs:
            return self
        out = [0] * (k * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPolynomial(out)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
        return g


QPolynomial = IntPolynomial


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def format_poly(coeffs: Sequence[int], var: str = "t") -> str:
    """Human-readable rendering, e.g. ``1 + 31t + 55t^2 + 9t^3``."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def poly_add(p: IntPolynomial, r: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, r.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPolynomial(out)


def poly_mul(p: IntPolynomial, r: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, r.coeffs
    if not a or not b:
        return IntPolynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return IntPolynomial(out)


def poly_derivative(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Long division over the integers; requires ``b`` to have leading
    coefficient dividing every step (always true for monic ``b``)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading
    quot = [0] * max(len(rem) - db, 0)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db]
        if c == 0:
            continue
        qk, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact integer division in poly_divmod")
        quot[k] = qk
        for j, bc in enumerate(b.coeffs):
            rem[k + j] -= qk * bc
    return IntPolynomial(quot), IntPolynomial(rem)


def _q_factorial_factor(i: int) -> IntPolynomial:
    # 1 - q**i
    return IntPolynomial([1] + [0] * (i - 1) + [-1])


def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial coefficient ``[n choose k]_q`` as a polynomial in q.

    Boundary convention: 1 when ``k == 0`` and ``n >= -1``; 0 for ``k < 0``,
    for ``k > n >= 0``, for ``n < -1``, and for ``n == -1, k > 0``.
    """
    if k < 0 or n < -1:
        return IntPolynomial()
    if k == 0:
        return IntPolynomial([1])
    if n < k:
        return IntPolynomial()
    k = min(k, n - k)
    if k == 0:
        return IntPolynomial([1])
    # (q;q)_n / ((q;q)_{n-k} (q;q)_k) = prod_{i=n-k+1}^{n}(1-q^i) / prod_{i=1}^{k}(1-q^i)
    num = IntPolynomial([1])
    for i in range(n - k + 1, n + 1):
        num = num * _q_factorial_factor(i)
    for i in range(1, k + 1):
        num, rem = poly_divmod(num, _q_factorial_factor(i))
        if not rem.is_zero():
            raise ArithmeticError(f"q-binomial ({n},{k}) division left remainder")
    return num


def q_integer(n: int) -> IntPolynomial:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    return IntPolynomial([1] * n)


# -- trivariate -------------------------------------------------------------

Bivariate = Mapping[tuple[int, int], int]


def _biv_add_into(acc: dict, other: Bivariate, scale: int = 1) -> None:
    for key, c in other.items():
        v = acc.get(key, 0) + scale * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def _biv_mul(a: Bivariate, b: Bivariate) -> dict:
    out: dict = {}
    for (j1, l1), c1 in a.items():
        for (j2, l2), c2 in b.items():
            key = (j1 + j2, l1 + l2)
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


class QZPolynomial:
    """Polynomial in ``t`` with sparse ``(q, z)`` coefficients.

    ``t_coeffs[i]`` maps ``(q_exp, z_exp)`` to a nonzero integer.
    """

    __slots__ = ("t_coeffs",)

    def __init__(self, t_coeffs: Iterable[Bivariate] = ()):
        cs = []
        for d in t_coeffs:
            cs.append({k: int(v) for k, v in d.items() if v})
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "t_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QZPolynomial is immutable")

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int, int]]) -> "QZPolynomial":
        """Build from ``(t_exp, q_exp, z_exp, coeff)`` tuples; repeats are summed."""
        rows: list[dict] = []
        for i, j, l, c in terms:
            while len(rows) <= i:
                rows.append({})
            _biv_add_into(rows[i], {(j, l): c})
        return cls(rows)

    @classmethod
    def from_q_polynomial(cls, p: IntPolynomial, t_exp: int = 0, z_exp: int = 0) -> "QZPolynomial":
        return cls.from_terms((t_exp, j, z_exp, c) for j, c in enumerate(p.coeffs) if c)

    @classmethod
    def from_t_polynomial(cls, p: IntPolynomial) -> "QZPolynomial":
        return cls.from_terms((i, 0, 0, c) for i, c in enumerate(p.coeffs) if c)

    @property
    def degree(self) -> int:
        return len(self.t_coeffs) - 1

    def is_zero(self) -> bool:
        return not self.t_coeffs

    def terms(self) -> list[tuple[int, int, int, int]]:
        """Sorted ``(t_exp, q_exp, z_exp, coeff)`` tuples."""
        return [
            (i, j, l, c)
            for i, row in enumerate(self.t_coeffs)
            for (j, l), c in sorted(row.items())
        ]

    def coefficient(self, i: int) -> dict:
        return dict(self.t_coeffs[i]) if 0 <= i < len(self.t_coeffs) else {}

    def __eq__(self, other):
        if not isinstance(other, QZPolynomial):
            return NotImplemented
        return self.t_coeffs == other.t_coeffs

    def __hash__(self):
        return hash(tuple(self.terms()))

    def __repr__(self):
        return f"QZPolynomial.from_terms({self.terms()})"

    def __add__(self, other: "QZPolynomial") -> "QZPolynomial":
        n = max(len(self.t_coeffs), len(other.t_coeffs))
        rows = []
        for i in range(n):
            acc = dict(self.t_coeffs[i]) if i < len(self.t_coeffs) else {}
            if i < len(other.t_coeffs):
                _biv_add_into(acc, other.t_coeffs[i])
            rows.append(acc)
        return QZPolynomial(rows)

    def __mul__(self, other: "QZPolynomial") -> "QZPolynomial":
        return self.mul_truncated(other, None)

    def mul_truncated(self, other: "QZPolynomial", length: int | None) -> "QZPolynomial":
        """Product keeping only t-degrees below ``length`` (all if None)."""
        a, b = self.t_coeffs, other.t_coeffs
        if not a or not b:
            return QZPolynomial()
        n = len(a) + len(b) - 1
        if length is not None:
            n = min(n, length)
        rows: list[dict] = [{} for _ in range(n)]
        for i, x in enumerate(a):
            if i >= n:
                break
            if not x:
                continue
            for j, y in enumerate(b):
                if i + j >= n:
                    break
                if y:
                    _biv_add_into(rows[i + j], _biv_mul(x, y))
        return QZPolynomial(rows)

    def stretch_q(self, k: int) -> "QZPolynomial":
        """Substitute ``q -> q**k``."""
        return QZPolynomial.from_terms((i, k * j, l, c) for i, j, l, c in self.terms())

    def substitute(self, q=None, z=None) -> "QZPolynomial":
        """Evaluate ``q`` and/or ``z`` at rationals; untouched variables stay.

        Raises ValueError when a resulting coefficient is not an integer.
        """
        q = None if q is None else Fraction(q)
        z = None if z is None else Fraction(z)
        rows = []
        for row in self.t_coeffs:
            acc: dict = {}
            for (j, l), c in row.items():
                val = Fraction(c)
                nj, nl = j, l
                if q is not None:
                    val *= q ** j
                    nj = 0
                if z is not None:
                    val *= z ** l
                    nl = 0
                acc[(nj, nl)] = acc.get((nj, nl), 0) + val
            for key, v in acc.items():
                if v.denominator != 1:
                    raise ValueError(f"non-integer coefficient {v} after substitution")
                acc[key] = v.numerator
            rows.append(acc)
        return QZPolynomial(rows)


def q_shift_factorial_in_t(n: int, q_step: int = 1) -> QZPolynomial:
    """``prod_{i=0}^{n-1} (1 - t q^(i*q_step))`` as a QZPolynomial."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = QZPolynomial([{(0, 0): 1}])
    for i in range(n):
        out = out * QZPolynomial([{(0, 0): 1}, {(i * q_step, 0): -1}])
    return out


def qz_specialize(p: QZPolynomial, q_val, z_val) -> IntPolynomial:
    """Evaluate both ``q`` and ``z`` and return the resulting t-polynomial."""
    s = p.substitute(q=q_val, z=z_val)
    return IntPolynomial(row.get((0, 0), 0) for row in s.t_coeffs)


def truncated_series_numerator(
    f_values: Sequence[int], pole_order: int, degree_cap: int, guard: int = 3
) -> IntPolynomial:
    """Numerator ``c(t)`` of ``sum_k f(k) t^k = c(t) / (1-t)^pole_order``.

    ``f_values[k]`` must be given for ``k = 0 .. degree_cap + guard``.  The
    coefficients of ``(1-t)^pole_order * sum f(k) t^k`` at degrees
    ``degree_cap+1 .. degree_cap+guard`` must vanish, otherwise GuardError.
    """
    if pole_order < 1:
        raise ValueError("pole_order must be >= 1")
    if guard < 1:
        raise ValueError("guard must be >= 1")
    need = degree_cap + guard + 1
    if len(f_values) < need:
        raise ValueError(f"need at least {need} series values, got {len(f_values)}")
    signs = [(-1) ** j * comb(pole_order, j) for j in range(pole_order + 1)]

    def coeff(i):
        return sum(signs[j] * f_values[i - j] for j in range(min(i, pole_order) + 1))

    for i in range(degree_cap + 1, degree_cap + guard + 1):
        c = coeff(i)
        if c:
            raise GuardError(f"guard coefficient at t^{i} is {c}, expected 0")
    return IntPolynomial(coeff(i) for i in range(degree_cap + 1))


def qz_series_numerator(
    series: Sequence[QZPolynomial | Bivariate],
    denominator: QZPolynomial,
    degree_cap: int,
    guard: int = 3,
) -> QZPolynomial:
    """Trivariate analogue of :func:`truncated_series_numerator`.

    ``series[k]`` is the (q, z) coefficient of ``t^k`` and the denominator is an
    explicit polynomial in t (typically a q-shift factorial).
    """
    need = degree_cap + guard + 1
    if len(series) < need:
        raise ValueError(f"need at least {need} series terms, got {len(series)}")
    rows = []
    for f in series[:need]:
        if isinstance(f, QZPolynomial):
            if f.degree > 0:
                raise ValueError("series coefficients must be free of t")
            rows.append(f.coefficient(0))
        else:
            rows.append(dict(f))
    full = QZPolynomial(rows).mul_truncated(denominator, need)
    for i in range(degree_cap + 1, need):
        if full.coefficient(i):
            raise GuardError(f"guard coefficient at t^{i} is nonzero: {full.coefficient(i)}")
    return QZPolynomial(full.t_coeffs[: degree_cap + 1])
