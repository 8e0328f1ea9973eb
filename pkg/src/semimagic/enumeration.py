"""Counting lattice paths from the zero square, plus the related sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator

from .core import (
    PERMUTATION_MATRICES,
    SemiMagicSquare,
    SextupleLike,
    as_sextuple,
    as_square,
    min_max_entries,
    sextuples_with_line_sum,
)


@lru_cache(maxsize=4096)
def _factorial(n: int) -> int:
    return factorial(n)


def multinomial(n: int, *parts: int) -> int:
    """Multinomial coefficient; zero if a part is negative or the parts miss ``n``."""
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out = _factorial(n)
    for p in parts:
        out //= _factorial(p)
    return out


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class PathPolynomial:
    coeffs: tuple[int, ...]
    rho: int

    def __call__(self, z):
        out = 0
        for c in reversed(self.coeffs):
            out = out * z + c
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def reversed(self) -> PathPolynomial:
        return PathPolynomial(self.coeffs[::-1], self.rho)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs], "rho": self.rho}


@dataclass(frozen=True)
class HypergeometricFactor:
    base: int
    terms: tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.terms, Fraction(0))

    @property
    def value(self) -> Fraction:
        return self.base * self.total


def _terms(a) -> Iterator[tuple[int, ...]]:
    m0 = min(a[:3])
    for t in range(m0 + 1):
        yield (a[0] - t, a[1] - t, a[2] - t, a[3] + t, a[4] + t, a[5] + t)


def path_polynomial(a: SextupleLike) -> PathPolynomial:
    a = as_sextuple(a)
    rho = a.rho
    # upshifted, so min(a1, a2, a3) is also the minimum entry of the square
    assert min(a.top) == min_max_entries(a)[0]
    return PathPolynomial(tuple(multinomial(rho, *parts) for parts in _terms(a.a)), rho)


def path_number(a: SextupleLike) -> int:
    return sum(path_polynomial(a).coeffs)


def hypergeometric_factor(a: SextupleLike) -> HypergeometricFactor:
    a = as_sextuple(a)
    base = multinomial(a.rho, *a.a)
    terms = []
    for t in range(min(a.top) + 1):
        num = binomial(a[0], t) * binomial(a[1], t) * binomial(a[2], t)
        den = binomial(a[3] + t, t) * binomial(a[4] + t, t) * binomial(a[5] + t, t)
        terms.append(Fraction(num, den))
    return HypergeometricFactor(base, tuple(terms))


def hypergeometric_parameters(a: SextupleLike) -> tuple[tuple[int, ...], tuple[int, ...], str]:
    """Upper and lower parameters of the terminating 3F2 series in ``-z``.

    One lower parameter always equals 1 (an upshifted sextuple has a zero in
    its bottom row); it plays the role of the ``t!`` of the series.
    """
    a = as_sextuple(a)
    return tuple(-x for x in a.top), tuple(x + 1 for x in a.bottom), "-z"


def row_sum_check(t: int) -> tuple[int, int]:
    total = sum(path_number(a) for a in sextuples_with_line_sum(t))
    return 6**t, total


def oracle_path_count(M: SemiMagicSquare | SextupleLike) -> int:
    """Count words in the permutation matrices summing to ``M``, rank by rank."""
    target = as_square(M).flat
    steps = [tuple(x for row in P for x in row) for P in PERMUTATION_MATRICES]
    level = {(0,) * 9: 1}
    for _ in range(sum(target[:3])):
        nxt: dict = {}
        for cell, count in level.items():
            for step in steps:
                new = tuple(x + y for x, y in zip(cell, step))
                if all(x <= y for x, y in zip(new, target)):
                    nxt[new] = nxt.get(new, 0) + count
        level = nxt
    return level.get(target, 0)


def franel(s: int) -> int:
    return sum(comb(s, t) ** 3 for t in range(s + 1))


def p_of_s(s: int) -> int:
    """Number of lattice paths to ``s*J``."""
    return multinomial(3 * s, s, s, s) * franel(s)


def franel_by_recurrence(s: int) -> int:
    f_prev, f = 1, 2
    if s == 0:
        return 1
    for k in range(1, s):
        num = (7 * k * k + 7 * k + 2) * f + 8 * k * k * f_prev
        f_prev, f = f, num // ((k + 1) ** 2)
    return f


def franel_recurrence_check(s: int, F: Callable[[int], int] = franel) -> bool:
    return (s + 1) ** 2 * F(s + 1) == (7 * s * s + 7 * s + 2) * F(s) + 8 * s * s * F(s - 1)


def p_recurrence_check(s: int, p: Callable[[int], int] = p_of_s) -> bool:
    lhs = (s + 1) ** 4 * p(s + 1)
    rhs = 3 * (3 * s + 2) * (3 * s + 1) * (7 * s * s + 7 * s + 2) * p(s) + 72 * (
        9 * s * s - 4
    ) * (9 * s * s - 1) * p(s - 1)
    return lhs == rhs


def p_by_recurrence(s: int) -> int:
    vals = [1, 12]
    for k in range(1, s):
        rhs = 3 * (3 * k + 2) * (3 * k + 1) * (7 * k * k + 7 * k + 2) * vals[k] + 72 * (
            9 * k * k - 4
        ) * (9 * k * k - 1) * vals[k - 1]
        q, r = divmod(rhs, (k + 1) ** 4)
        assert r == 0
        vals.append(q)
    return vals[s]


def sequence_rows(max_s: int) -> list[dict]:
    rows = []
    for s in range(max_s + 1):
        rows.append(
            {
                "s": s,
                "franel": franel(s),
                "p": p_of_s(s),
                "franel_recurrence": franel_recurrence_check(s) if s >= 1 else None,
                "p_recurrence": p_recurrence_check(s) if s >= 1 else None,
            }
        )
    return rows


def sequences_csv(max_s: int) -> str:
    lines = ["s,franel,p_of_s"]
    lines += [f"{r['s']},{r['franel']},{r['p']}" for r in sequence_rows(max_s)]
    return "\n".join(lines) + "\n"


def row_sums_csv(max_t: int) -> str:
    lines = ["t,6^t,sum_v"]
    for t in range(max_t + 1):
        lhs, rhs = row_sum_check(t)
        lines.append(f"{t},{lhs},{rhs}")
    return "\n".join(lines) + "\n"
