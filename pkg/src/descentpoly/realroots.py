"""Exact real-rootedness, log-concavity and unimodality certificates.

Real-rootedness is decided with Sturm sequences over the integers: the
polynomial is split into ``t^k`` times squarefree factors (Yun), and the
distinct real roots of every factor are counted inside a Cauchy bound.
No floating point is used anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .exact_poly import IntPolynomial, poly_derivative
from .words import as_multiplicities


class NotSquarefree(ValueError):
    pass


# -- rational helpers (squarefree decomposition only) ---------------------------

def _qtrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a, b):
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    quot = [Fraction(0)] * max(len(rem) - db, 0)
    for k in range(len(rem) - 1 - db, -1, -1):
        qk = rem[k + db] / lb
        quot[k] = qk
        if qk:
            for j, bc in enumerate(b):
                rem[k + j] -= qk * bc
    return _qtrim(quot), _qtrim(rem[:db] if db > 0 else [])


def _qmonic(a):
    return [c / a[-1] for c in a]


def _qgcd(a, b):
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return _qmonic(a)


def _qderiv(a):
    return _qtrim([i * c for i, c in enumerate(a)][1:])


def _qsub(a, b):
    n = max(len(a), len(b))
    return _qtrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _to_primitive_int(a) -> IntPolynomial:
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive(IntPolynomial(c * den for c in a))


def _primitive(p: IntPolynomial) -> IntPolynomial:
    """Divide out the content and make the leading coefficient positive."""
    if p.is_zero():
        return p
    g = p.content()
    if p.leading < 0:
        g = -g
    return IntPolynomial(c // g for c in p.coeffs)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: ``p = c * prod f_i^i`` with primitive squarefree ``f_i``.

    Constant factors are omitted from the result.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    f = [Fraction(c) for c in p.coeffs]
    if len(f) == 1:
        return []
    df = _qderiv(f)
    a = _qgcd(f, df)
    b = _qdivmod(f, a)[0]
    c = _qdivmod(df, a)[0]
    d = _qsub(c, _qderiv(b))
    out = []
    i = 1
    while len(b) > 1:
        a = _qgcd(b, d)
        if len(a) > 1:
            out.append((_to_primitive_int(a), i))
        b = _qdivmod(b, a)[0]
        c = _qdivmod(d, a)[0]
        d = _qsub(c, _qderiv(b))
        i += 1
    return out


def is_squarefree(p: IntPolynomial) -> bool:
    f = [Fraction(c) for c in p.coeffs]
    return len(_qgcd(f, _qderiv(f))) <= 1


# -- Sturm sequences ---------------------------------------------------------------

def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of ``lc(b)^e * a`` by ``b``, with ``e`` chosen so ``lc(b)^e > 0``."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    if a.degree < b.degree:
        return a
    lb = b.leading
    e = a.degree - b.degree + 1
    if lb < 0 and e % 2:
        e += 1
    rem = [c * lb ** e for c in a.coeffs]
    db = b.degree
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db]
        if c == 0:
            continue
        qk = c // lb
        for j, bc in enumerate(b.coeffs):
            rem[k + j] -= qk * bc
    return IntPolynomial(rem[:db])


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """``p, p', -rem(p, p'), ...`` with integer coefficients.

    Every remainder is scaled only by positive constants so sign-variation
    counts are those of the classical Sturm sequence.
    """
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p]
    nxt = poly_derivative(p)
    while not nxt.is_zero():
        chain.append(nxt)
        r = -pseudo_remainder(chain[-2], chain[-1])
        if not r.is_zero():
            r = IntPolynomial(c // r.content() for c in r.coeffs)
        nxt = r
    return chain


def sign_variations(chain: Sequence[IntPolynomial], x) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v:
            signs.append(v > 0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_real_roots(p: IntPolynomial, lo, hi) -> int:
    """Distinct real roots of squarefree ``p`` in ``(lo, hi]``."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if not is_squarefree(p):
        raise NotSquarefree("count_real_roots needs a squarefree polynomial")
    if p(lo) == 0:
        raise ValueError("lower endpoint is a root; perturb the interval")
    chain = sturm_chain(p)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """Every complex root has modulus at most ``1 + max|c_i| / |c_lead|``."""
    lead = abs(p.leading)
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lead)


@dataclass
class FactorRecord:
    factor: IntPolynomial
    multiplicity: int
    chain_length: int
    variations_lo: int
    variations_hi: int
    real_roots: int


@dataclass
class SturmCertificate:
    polynomial: IntPolynomial
    zero_root_multiplicity: int
    factors: list = field(default_factory=list)
    interval_bound: Fraction = Fraction(0)
    real_rooted: bool = False

    @property
    def squarefree_factors(self) -> list[tuple[IntPolynomial, int]]:
        return [(f.factor, f.multiplicity) for f in self.factors]

    def real_root_count(self) -> int:
        """Real roots counted with multiplicity."""
        return self.zero_root_multiplicity + sum(f.multiplicity * f.real_roots for f in self.factors)

    def summary(self) -> dict:
        return {
            "real_rooted": self.real_rooted,
            "degree": self.polynomial.degree,
            "real_roots_with_multiplicity": self.real_root_count(),
            "zero_root_multiplicity": self.zero_root_multiplicity,
            "interval_bound": str(self.interval_bound),
            "factors": [
                {
                    "coeffs": [str(c) for c in f.factor.coeffs],
                    "multiplicity": f.multiplicity,
                    "chain_length": f.chain_length,
                    "variations": [f.variations_lo, f.variations_hi],
                    "real_roots": f.real_roots,
                }
                for f in self.factors
            ],
        }


def is_real_rooted(p: IntPolynomial) -> SturmCertificate:
    """Decide whether every complex root of ``p`` is real."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    core = IntPolynomial(p.coeffs[k:])
    cert = SturmCertificate(p, k)
    if core.degree <= 0:
        cert.real_rooted = True
        return cert
    bound = cauchy_bound(core)
    cert.interval_bound = bound
    lo, hi = -bound - 1, bound + 1
    for factor, mult in squarefree_decomposition(core):
        chain = sturm_chain(factor)
        vlo, vhi = sign_variations(chain, lo), sign_variations(chain, hi)
        cert.factors.append(FactorRecord(factor, mult, len(chain), vlo, vhi, vlo - vhi))
    cert.real_rooted = cert.real_root_count() == p.degree
    return cert


# -- coefficient sequence properties ----------------------------------------------

def _nonnegative(p: IntPolynomial):
    if any(c < 0 for c in p.coeffs):
        raise ValueError("polynomial has a negative coefficient")
    return p.coeffs


def is_log_concave(p: IntPolynomial) -> bool:
    """``c_i^2 >= c_{i-1} c_{i+1}`` with no internal zeros."""
    c = _nonnegative(p)
    support = [i for i, x in enumerate(c) if x]
    if support and support[-1] - support[0] + 1 != len(support):
        return False
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def is_unimodal(p: IntPolynomial) -> bool:
    c = _nonnegative(p)
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def pf_class(p: IntPolynomial) -> str | None:
    """``"PF"`` if real-rooted with nonnegative coefficients, ``"PF1"`` if only
    the coefficients are nonnegative, else None."""
    if any(c < 0 for c in p.coeffs):
        return None
    if not p.is_zero() and is_real_rooted(p).real_rooted:
        return "PF"
    return "PF1"


# -- Brenti step ------------------------------------------------------------------

def brenti_step(F: IntPolynomial, a, b, n: int) -> IntPolynomial:
    """``((a n - b) t + b) F + a t (1 - t) F'``.

    If ``F / (1-t)^n = sum f(k) t^k`` then the result ``G`` satisfies
    ``G / (1-t)^(n+1) = sum f(k) (a k + b) t^k``.  Computed over Q; a
    non-integer coefficient raises ValueError.
    """
    a, b = Fraction(a), Fraction(b)
    fc = [Fraction(c) for c in F.coeffs]
    dfc = [i * c for i, c in enumerate(fc)][1:]
    out = [Fraction(0)] * (len(fc) + 2)
    for i, c in enumerate(fc):
        out[i] += b * c
        out[i + 1] += (a * n - b) * c
    for i, c in enumerate(dfc):
        out[i + 1] += a * c
        out[i + 2] -= a * c
    for c in out:
        if c.denominator != 1:
            raise ValueError(f"brenti_step produced non-integer coefficient {c}")
    return IntPolynomial(c.numerator for c in out)


def brenti_chain(m: Sequence[int], signed: bool = True) -> list[tuple[tuple[int, ...], IntPolynomial]]:
    """Descent polynomials along the multiplicity-increment path to ``m``.

    Starts at ``m = (1,)`` and raises ``m_1`` to its target, then appends
    letter 2 and raises it, and so on.  Raising a multiplicity from ``j - 1``
    to ``j`` multiplies the series term by ``(2k + j) / j`` (signed) or
    ``(k + j) / j`` (unsigned), i.e. one step with ``b = 1`` and
    ``a = 2/j`` or ``1/j``.
    """
    m = as_multiplicities(m)
    scale = 2 if signed else 1
    vec: list[int] = [1]
    F = IntPolynomial([1, 1]) if signed else IntPolynomial([1])
    out = [(tuple(vec), F)]
    for r, target in enumerate(m):
        if r > 0:
            vec.append(0)
        while vec[r] < target:
            j = vec[r] + 1
            F = brenti_step(F, Fraction(scale, j), 1, sum(vec) + 1)
            vec[r] = j
            out.append((tuple(vec), F))
    return out
