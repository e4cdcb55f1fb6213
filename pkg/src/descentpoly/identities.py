"""Descent and ascent polynomials by independent routes, and identity checks.

Routes:

* ``brute`` -- exhaustive enumeration of words or inversion sequences,
* ``recurrence`` -- the three-term coefficient recurrence for the
  ``(2, ..., 2)`` family, and the Brenti chain for general ``m``
  (see :mod:`descentpoly.realroots`),
* ``gf`` -- numerator extraction from the factorial generating functions.

The ``verify_*`` functions never raise on disagreement; they return an
:class:`IdentityReport` describing every route and the first mismatch.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, prod
from typing import Any, Sequence

from .exact_poly import (
    GuardError,
    IntPolynomial,
    QZPolynomial,
    q_binomial,
    q_integer,
    q_shift_factorial_in_t,
    qz_series_numerator,
    qz_specialize,
    truncated_series_numerator,
)
from .words import (
    as_multiplicities,
    as_s_sequence,
    ascent_set,
    des,
    enumerate_inversion_seqs,
    enumerate_multiset_perms,
    enumerate_signed_multiperms,
    fmaj,
    maj,
    neg_count,
    sign_vectors,
    signed_alphabet,
    sv_signed_s,
    sv_unsigned_s,
)

DEFAULT_MAX_TOTAL = 10
DEFAULT_MAX_PRODUCT = 10 ** 7
GUARD = 3


class CapExceeded(ValueError):
    """An enumeration would exceed its configured size cap."""


def _check_total(m, max_total):
    if sum(m) > max_total:
        raise CapExceeded(f"sum of multiplicities {sum(m)} exceeds cap {max_total}")


# -- brute force -------------------------------------------------------------

def _des_histogram(letters: Sequence[int]) -> list[int]:
    """Descent counts over all distinct rearrangements of ``letters``.

    Depth-first over prefixes; once a single letter value is left the
    subtree holds exactly one word, which is counted directly.
    """
    vals = sorted(set(letters))
    cnt = [letters.count(v) for v in vals]
    hist = [0] * (len(letters) + 1)
    if not letters:
        hist[0] = 1
        return hist
    kinds_all = range(len(vals))

    def rec(prev, d):
        kinds = [i for i in kinds_all if cnt[i]]
        if len(kinds) == 1:
            hist[d + (prev > vals[kinds[0]])] += 1
            return
        for i in kinds:
            v = vals[i]
            cnt[i] -= 1
            rec(v, d + (prev > v))
            cnt[i] += 1

    rec(0, 0)
    return hist


def descent_poly_partition(m: Sequence[int], signs: Sequence[int]) -> IntPolynomial:
    """Descent polynomial of the words with sign vector ``signs``."""
    return IntPolynomial(_des_histogram(signed_alphabet(m, signs)))


def descent_poly_bruteforce(m: Sequence[int], signed: bool = True,
                            max_total: int = DEFAULT_MAX_TOTAL) -> IntPolynomial:
    """``sum t^des(w)`` over all (signed) permutations of the multiset."""
    m = as_multiplicities(m)
    _check_total(m, max_total)
    if not signed:
        return descent_poly_partition(m, [0] * len(m))
    hist = [0] * (sum(m) + 1)
    for signs in sign_vectors(m):
        for i, c in enumerate(_des_histogram(signed_alphabet(m, signs))):
            hist[i] += c
    return IntPolynomial(hist)


def descent_poly_by_stream(m: Sequence[int], signed: bool = True,
                           max_total: int = DEFAULT_MAX_TOTAL) -> IntPolynomial:
    """Same as :func:`descent_poly_bruteforce`, applying ``des`` word by word."""
    m = as_multiplicities(m)
    _check_total(m, max_total)
    words = enumerate_signed_multiperms(m) if signed else enumerate_multiset_perms(m)
    hist = [0] * (sum(m) + 1)
    for w in words:
        hist[des(w)] += 1
    return IntPolynomial(hist)


def qz_descent_poly_bruteforce(m: Sequence[int],
                               max_total: int = DEFAULT_MAX_TOTAL) -> QZPolynomial:
    """``sum t^des q^fmaj z^N`` over signed permutations."""
    m = as_multiplicities(m)
    _check_total(m, max_total)
    return QZPolynomial.from_terms(
        (des(w), fmaj(w), neg_count(w), 1) for w in enumerate_signed_multiperms(m)
    )


def macmahon_poly_bruteforce(m: Sequence[int],
                             max_total: int = DEFAULT_MAX_TOTAL) -> QZPolynomial:
    """``sum t^des q^maj`` over unsigned permutations (z-degree 0)."""
    m = as_multiplicities(m)
    _check_total(m, max_total)
    return QZPolynomial.from_terms(
        (des(w), maj(w), 0, 1) for w in enumerate_multiset_perms(m)
    )


def ascent_poly_bruteforce(s: Sequence[int],
                           max_product: int = DEFAULT_MAX_PRODUCT) -> IntPolynomial:
    """``sum t^asc(e)`` over all s-inversion sequences."""
    s = as_s_sequence(s)
    if prod(s) > max_product:
        raise CapExceeded(f"product of s-entries {prod(s)} exceeds cap {max_product}")
    hist = [0] * (len(s) + 1)
    for e in enumerate_inversion_seqs(s):
        hist[len(ascent_set(e, s))] += 1
    return IntPolynomial(hist)


# -- recurrences -------------------------------------------------------------

def _two_two_recurrence(start: IntPolynomial, n: int) -> IntPolynomial:
    """Apply the coefficient recurrence from index 1 up to ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cur = start
    for k in range(1, n):
        nxt = []
        for i in range(2 * (k + 1)):
            nxt.append(
                (2 * i * i + 3 * i + 1) * cur[i]
                + (2 * i * (4 * k - 2 * i + 3) + 2 * k + 1) * (cur[i - 1] if i >= 1 else 0)
                + (2 * k + 2 - i) * (4 * k - 2 * i + 5) * (cur[i - 2] if i >= 2 else 0)
            )
        cur = IntPolynomial(nxt)
    return cur


def E_poly_recurrence(n: int) -> IntPolynomial:
    """Ascent polynomial over ``(1,4,3,8,...,2n-1,4n)``-inversion sequences."""
    return _two_two_recurrence(IntPolynomial([1, 3]), n)


def P_poly_recurrence(n: int) -> IntPolynomial:
    """Signed descent polynomial of ``{1,1,...,n,n}`` (same recurrence)."""
    return _two_two_recurrence(IntPolynomial([1, 3]), n)


# -- generating-function extraction ------------------------------------------

def ascent_poly_ehrhart(n: int, guard: int = GUARD) -> IntPolynomial:
    if n < 1:
        raise ValueError("n must be >= 1")
    cap = 2 * n - 1
    f = [((k + 1) * (2 * k + 1)) ** n for k in range(cap + guard + 1)]
    return truncated_series_numerator(f, 2 * n + 1, cap, guard)


def signed_descent_poly_gf(m: Sequence[int], guard: int = GUARD,
                           max_total: int = DEFAULT_MAX_TOTAL) -> IntPolynomial:
    """Signed descent polynomial from ``sum_k prod_r C(2k+m_r, m_r) t^k``."""
    m = as_multiplicities(m)
    _check_total(m, max_total)
    total = sum(m)
    f = [prod(comb(2 * k + mr, mr) for mr in m) for k in range(total + guard + 1)]
    return truncated_series_numerator(f, total + 1, total, guard)


def unsigned_descent_poly_gf(m: Sequence[int], guard: int = GUARD,
                             max_total: int = DEFAULT_MAX_TOTAL) -> IntPolynomial:
    """Unsigned descent polynomial from ``sum_k prod_r C(k+m_r, m_r) t^k``."""
    m = as_multiplicities(m)
    _check_total(m, max_total)
    total = sum(m)
    f = [prod(comb(k + mr, mr) for mr in m) for k in range(total + guard + 1)]
    return truncated_series_numerator(f, total + 1, total, guard)


def _qpoly_to_biv(p: IntPolynomial, z_exp: int = 0) -> dict:
    return {(j, z_exp): c for j, c in enumerate(p.coeffs) if c}


def _biv_product(factors) -> dict:
    out = QZPolynomial([{(0, 0): 1}])
    for f in factors:
        out = out * QZPolynomial([f])
    return out.coefficient(0)


def macmahon_series_term(m: Sequence[int], k: int) -> dict:
    """``prod_r [m_r + k choose m_r]_q`` as a (q, z) coefficient."""
    return _biv_product(_qpoly_to_biv(q_binomial(mr + k, mr)) for mr in m)


def signed_series_term(m: Sequence[int], k: int) -> dict:
    """``prod_r sum_i (zq)^i [m_r-i+k, m_r-i]_{q^2} [i+k-1, i]_{q^2}``."""
    factors = []
    for mr in m:
        acc = QZPolynomial()
        for i in range(mr + 1):
            qpart = q_binomial(mr - i + k, mr - i).stretch(2) * q_binomial(i + k - 1, i).stretch(2)
            shifted = IntPolynomial([0] * i + list(qpart.coeffs)) if not qpart.is_zero() else qpart
            acc = acc + QZPolynomial([_qpoly_to_biv(shifted, z_exp=i)])
        factors.append(acc.coefficient(0))
    return _biv_product(factors)


def macmahon_poly_gf(m: Sequence[int], guard: int = GUARD,
                     max_total: int = DEFAULT_MAX_TOTAL) -> QZPolynomial:
    """``sum t^des q^maj`` over unsigned permutations via the q-binomial series."""
    m = as_multiplicities(m)
    _check_total(m, max_total)
    total = sum(m)
    series = [macmahon_series_term(m, k) for k in range(total + guard + 1)]
    return qz_series_numerator(series, q_shift_factorial_in_t(total + 1, 1), total, guard)


def qz_descent_poly_gf(m: Sequence[int], guard: int = GUARD,
                       max_total: int = DEFAULT_MAX_TOTAL) -> QZPolynomial:
    """``sum t^des q^fmaj z^N`` over signed permutations via the q^2-binomial series."""
    m = as_multiplicities(m)
    _check_total(m, max_total)
    total = sum(m)
    series = [signed_series_term(m, k) for k in range(total + guard + 1)]
    return qz_series_numerator(series, q_shift_factorial_in_t(total + 1, 2), total, guard)


def expand_over_shift_factorial(numerator: QZPolynomial, order: int, q_step: int,
                                length: int) -> QZPolynomial:
    """Power series of ``numerator / (t; q^q_step)_order`` up to ``t^(length-1)``."""
    out = numerator
    for i in range(order):
        geom = QZPolynomial([{(i * q_step * j, 0): 1} for j in range(length)])
        out = out.mul_truncated(geom, length)
    return out


# -- reports -----------------------------------------------------------------

@dataclass
class IdentityReport:
    identity: str
    inputs: dict
    routes: dict = field(default_factory=dict)
    equal: bool = True
    mismatch: dict | None = None
    checks: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.equal and all(self.checks.values())


def first_difference(a: Any, b: Any):
    """First coefficient at which two polynomials differ, or None.

    For t-polynomials the key is the t-degree, for trivariate ones the
    ``(t, q, z)`` exponent triple.
    """
    if isinstance(a, IntPolynomial) and isinstance(b, IntPolynomial):
        for i in range(max(len(a), len(b))):
            if a[i] != b[i]:
                return {"t": i, "left": a[i], "right": b[i]}
        return None
    ta = {(i, j, l): c for i, j, l, c in a.terms()}
    tb = {(i, j, l): c for i, j, l, c in b.terms()}
    for key in sorted(set(ta) | set(tb)):
        if ta.get(key, 0) != tb.get(key, 0):
            return {"t": key[0], "q": key[1], "z": key[2],
                    "left": ta.get(key, 0), "right": tb.get(key, 0)}
    return None


def compare_routes(report: IdentityReport) -> IdentityReport:
    """Fill ``equal``/``mismatch`` by comparing every route to the first one."""
    names = list(report.routes)
    report.equal = True
    report.mismatch = None
    for other in names[1:]:
        diff = first_difference(report.routes[names[0]], report.routes[other])
        if diff is not None:
            report.equal = False
            report.mismatch = {"routes": [names[0], other], **diff}
            break
    return report


def verify_equidistribution(n: int, max_total: int = DEFAULT_MAX_TOTAL,
                            max_product: int = DEFAULT_MAX_PRODUCT) -> IdentityReport:
    """Signed descents on ``{1,1,...,n,n}`` vs ascents on ``(1,4,...,2n-1,4n)``."""
    rep = IdentityReport("equidistribution", {"n": n})
    _check_total((2,) * n, max_total)
    if prod(sv_signed_s(n)) > max_product:
        raise CapExceeded(f"product of s-entries {prod(sv_signed_s(n))} exceeds cap {max_product}")
    rep.routes["signed_des_brute"] = descent_poly_bruteforce((2,) * n, True, max_total)
    rep.routes["asc_brute"] = ascent_poly_bruteforce(sv_signed_s(n), max_product)
    rep.routes["E_recurrence"] = E_poly_recurrence(n)
    rep.routes["P_recurrence"] = P_poly_recurrence(n)
    rep.routes["ehrhart"] = ascent_poly_ehrhart(n)
    return compare_routes(rep)


def verify_unsigned_equidistribution(n: int, max_total: int = DEFAULT_MAX_TOTAL,
                                     max_product: int = DEFAULT_MAX_PRODUCT) -> IdentityReport:
    rep = IdentityReport("unsigned-equidistribution", {"n": n})
    _check_total((2,) * n, max_total)
    if prod(sv_unsigned_s(n)) > max_product:
        raise CapExceeded(f"product of s-entries {prod(sv_unsigned_s(n))} exceeds cap {max_product}")
    rep.routes["unsigned_des_brute"] = descent_poly_bruteforce((2,) * n, False, max_total)
    rep.routes["asc_brute"] = ascent_poly_bruteforce(sv_unsigned_s(n), max_product)
    rep.routes["unsigned_gf"] = unsigned_descent_poly_gf((2,) * n, max_total=max_total)
    return compare_routes(rep)


def verify_ehrhart(n: int, max_product: int = DEFAULT_MAX_PRODUCT) -> IdentityReport:
    rep = IdentityReport("ehrhart", {"n": n})
    try:
        rep.routes["ehrhart"] = ascent_poly_ehrhart(n)
        rep.checks["guard_vanishes"] = True
    except GuardError as exc:
        rep.checks["guard_vanishes"] = False
        rep.notes.append(str(exc))
        return rep
    rep.routes["E_recurrence"] = E_poly_recurrence(n)
    if prod(sv_signed_s(n)) <= max_product:
        rep.routes["asc_brute"] = ascent_poly_bruteforce(sv_signed_s(n), max_product)
    return compare_routes(rep)


def verify_qz_gf(m: Sequence[int], max_total: int = DEFAULT_MAX_TOTAL) -> IdentityReport:
    m = as_multiplicities(m)
    rep = IdentityReport("qz-gf", {"m": list(m)})
    rep.routes["qz_gf"] = qz_descent_poly_gf(m, max_total=max_total)
    rep.routes["qz_brute"] = qz_descent_poly_bruteforce(m, max_total)
    return compare_routes(rep)


def verify_macmahon(m: Sequence[int], max_total: int = DEFAULT_MAX_TOTAL) -> IdentityReport:
    m = as_multiplicities(m)
    rep = IdentityReport("macmahon", {"m": list(m)})
    rep.routes["macmahon_gf"] = macmahon_poly_gf(m, max_total=max_total)
    rep.routes["des_maj_brute"] = macmahon_poly_bruteforce(m, max_total)
    compare_routes(rep)
    # fmaj = 2 maj when no letter is negative, so z = 0 lands on q -> q^2
    at_z0 = qz_descent_poly_gf(m, max_total=max_total).substitute(z=0)
    rep.checks["qz_gf_at_z0_equals_macmahon_at_q2"] = at_z0 == rep.routes["macmahon_gf"].stretch_q(2)
    return rep


def verify_signed_gf(m: Sequence[int], max_total: int = DEFAULT_MAX_TOTAL) -> IdentityReport:
    from .realroots import brenti_chain

    m = as_multiplicities(m)
    rep = IdentityReport("signed-gf", {"m": list(m)})
    rep.routes["signed_gf"] = signed_descent_poly_gf(m, max_total=max_total)
    rep.routes["signed_des_brute"] = descent_poly_bruteforce(m, True, max_total)
    rep.routes["qz_gf_at_q1_z1"] = qz_specialize(qz_descent_poly_gf(m, max_total=max_total), 1, 1)
    rep.routes["brenti_chain"] = brenti_chain(m)[-1][1]
    return compare_routes(rep)


def verify_chow_gessel(n: int, kmax: int = 5) -> IdentityReport:
    """Signed permutations of ``{1..n}``: re-expand the (des, fmaj) numerator.

    Dividing by ``(t;q^2)_{n+1}`` must give ``[2k+1]_q^n`` as the coefficient
    of ``t^k``.  The exponent ``2n+1`` is tried as well and its outcome is
    recorded, not enforced.
    """
    rep = IdentityReport("chow-gessel", {"n": n, "kmax": kmax})
    numerator = qz_descent_poly_gf((1,) * n).substitute(z=1)
    rep.routes["numerator_z1"] = numerator
    expected = [_qpoly_to_biv(q_integer(2 * k + 1) ** n) for k in range(kmax + 1)]

    def matches(order):
        series = expand_over_shift_factorial(numerator, order, 2, kmax + 1)
        return all(series.coefficient(k) == expected[k] for k in range(kmax + 1))

    rep.checks[f"denominator_exponent_{n + 1}"] = matches(n + 1)
    printed = matches(2 * n + 1)
    rep.info[f"denominator_exponent_{2 * n + 1}_reproduces"] = printed
    rep.notes.append(
        f"denominator exponent 2n+1={2 * n + 1} "
        + ("also reproduces" if printed else "does not reproduce")
        + f" [2k+1]_q^n for k<={kmax}; exponent n+1={n + 1} is the one implied by m=(1,...,1)"
    )
    return rep
