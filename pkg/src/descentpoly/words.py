"""Multiset permutations, signed multipermutations and s-inversion sequences.

Words are plain tuples of nonzero ints; a negative letter ``-r`` is the
barred copy of ``r``.  All enumerations are lazy generators in a fixed,
deterministic order.
"""
from __future__ import annotations

from itertools import product
from math import factorial, prod
from typing import Iterator, Sequence

Word = tuple[int, ...]


def as_multiplicities(m: Sequence[int]) -> tuple[int, ...]:
    """Validate a multiplicity vector ``(m_1, ..., m_n)``."""
    m = tuple(int(x) for x in m)
    if not m:
        raise ValueError("multiplicity vector must be nonempty")
    if any(x < 1 for x in m):
        raise ValueError(f"multiplicities must be positive, got {m}")
    return m


def as_s_sequence(s: Sequence[int]) -> tuple[int, ...]:
    s = tuple(int(x) for x in s)
    if not s:
        raise ValueError("s-sequence must be nonempty")
    if any(x < 1 for x in s):
        raise ValueError(f"s-sequence entries must be positive, got {s}")
    return s


def multiset_letters(m: Sequence[int]) -> list[int]:
    """``[1]*m_1 + [2]*m_2 + ...``."""
    return [r for r, k in enumerate(m, 1) for _ in range(k)]


def count_multiset_perms(m: Sequence[int]) -> int:
    return factorial(sum(m)) // prod(factorial(k) for k in m)


def count_signed_multiperms(m: Sequence[int]) -> int:
    return 2 ** sum(m) * count_multiset_perms(m)


def distinct_permutations(letters: Sequence[int]) -> Iterator[Word]:
    """Distinct rearrangements of ``letters`` in lexicographic order.

    Classic next-permutation walk (Knuth 7.2.1.2, algorithm L).
    """
    a = sorted(letters)
    n = len(a)
    yield tuple(a)
    if n < 2:
        return
    while True:
        j = n - 2
        while j >= 0 and a[j] >= a[j + 1]:
            j -= 1
        if j < 0:
            return
        k = n - 1
        while a[j] >= a[k]:
            k -= 1
        a[j], a[k] = a[k], a[j]
        a[j + 1:] = a[:j:-1]
        yield tuple(a)


def enumerate_multiset_perms(m: Sequence[int]) -> Iterator[Word]:
    m = as_multiplicities(m)
    return distinct_permutations(multiset_letters(m))


def sign_vectors(m: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Negative-letter counts ``(j_1, ..., j_n)``, ``0 <= j_r <= m_r``, lexicographic."""
    return product(*(range(k + 1) for k in m))


def signed_alphabet(m: Sequence[int], signs: Sequence[int]) -> list[int]:
    """Letters of the word class with ``signs[r-1]`` copies of ``-r``."""
    letters = []
    for r, (k, j) in enumerate(zip(m, signs), 1):
        letters += [-r] * j + [r] * (k - j)
    return letters


def enumerate_signed_multiperms(m: Sequence[int]) -> Iterator[Word]:
    """Every signed permutation of ``{1^m_1, ..., n^m_n}`` exactly once.

    Outer loop over sign vectors, inner loop lexicographic; each sign vector
    is an independent partition of the stream.
    """
    m = as_multiplicities(m)
    for signs in sign_vectors(m):
        yield from distinct_permutations(signed_alphabet(m, signs))


def enumerate_inversion_seqs(s: Sequence[int]) -> Iterator[Word]:
    """All ``e`` with ``0 <= e_i < s_i``, in mixed-radix counting order."""
    s = as_s_sequence(s)
    return product(*(range(k) for k in s))


# -- statistics on words ------------------------------------------------------

def descent_set(w: Sequence[int]) -> set[int]:
    """Descent positions, with a phantom ``0`` in front of the word."""
    prev = 0
    out = set()
    for i, x in enumerate(w):
        if prev > x:
            out.add(i)
        prev = x
    return out


def des(w: Sequence[int]) -> int:
    prev = 0
    d = 0
    for x in w:
        if prev > x:
            d += 1
        prev = x
    return d


def maj(w: Sequence[int]) -> int:
    return sum(descent_set(w))


def neg_count(w: Sequence[int]) -> int:
    return sum(1 for x in w if x < 0)


def fmaj(w: Sequence[int]) -> int:
    """Flag major index ``2*maj + N``."""
    return 2 * maj(w) + neg_count(w)


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w)


# -- inversion sequences -------------------------------------------------------

def ascent_set(e: Sequence[int], s: Sequence[int]) -> set[int]:
    """Positions ``i`` with ``e_i/s_i < e_{i+1}/s_{i+1}``, where ``e_0/s_0 = 0``.

    Compared by cross-multiplication; all ``s_i`` are positive.
    """
    if len(e) != len(s):
        raise ValueError("e and s must have the same length")
    out = set()
    pe, ps = 0, 1
    for i, (x, k) in enumerate(zip(e, s)):
        if not 0 <= x < k:
            raise ValueError(f"e_{i + 1}={x} out of range for s_{i + 1}={k}")
        if pe * k < x * ps:
            out.add(i)
        pe, ps = x, k
    return out


def asc(e: Sequence[int], s: Sequence[int]) -> int:
    return len(ascent_set(e, s))


def sv_signed_s(n: int) -> tuple[int, ...]:
    """``(1, 4, 3, 8, ..., 2n-1, 4n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[int] = []
    for i in range(1, n + 1):
        out += [2 * i - 1, 4 * i]
    return tuple(out)


def sv_unsigned_s(n: int) -> tuple[int, ...]:
    """``(1, 1, 3, 2, ..., 2n-1, n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[int] = []
    for i in range(1, n + 1):
        out += [2 * i - 1, i]
    return tuple(out)
