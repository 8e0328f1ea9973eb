"""Semi-magic squares of size three and their sextuple (rectangle) encoding.

A sextuple ``(a1, ..., a6)`` stands for ``sum(a_t * P_t)`` over the six 3x3
permutation matrices below.  The only linear relation among them is

    P1 + P2 + P3 == J == P4 + P5 + P6

so a sextuple is determined by its square up to adding multiples of
``(1, 1, 1, -1, -1, -1)``.  The canonical ("upshifted") representative has
``min(a4, a5, a6) == 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

from .errors import NegativeEntry, NotSemiMagic, OutOfBounds, Unrepresentable

Grid = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

# P1 = e, P2 = (123), P3 = (132), P4 = (13), P5 = (12), P6 = (23)
PERMUTATION_MATRICES: tuple[Grid, ...] = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
)

SYZYGY = (1, 1, 1, -1, -1, -1)
J_VECTOR = (1, 1, 1, 0, 0, 0)


@dataclass(frozen=True)
class SemiMagicSquare:
    entries: Grid
    line_sum: int

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.entries)

    def __add__(self, other: SemiMagicSquare) -> SemiMagicSquare:
        return validate_square(
            [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    @property
    def rho(self) -> int:
        return self.line_sum

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.entries for x in row)

    def min_entry(self) -> int:
        return min(self.flat)

    def max_entry(self) -> int:
        return max(self.flat)

    def transpose(self) -> SemiMagicSquare:
        t = tuple(zip(*self.entries))
        return SemiMagicSquare(t, self.line_sum)  # type: ignore[arg-type]

    def le(self, other: SemiMagicSquare) -> bool:
        """Entrywise comparison, the partial order on squares."""
        return all(x <= y for x, y in zip(self.flat, other.flat))

    @cached_property
    def sextuple(self) -> Sextuple:
        return to_sextuple(self)

    def to_json(self) -> dict:
        return {"matrix": [list(row) for row in self.entries]}

    def __str__(self) -> str:
        width = max(len(str(x)) for x in self.flat)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.entries)


@dataclass(frozen=True)
class Sextuple:
    a: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if len(a) != 6:
            raise ValueError(f"a sextuple needs 6 entries, got {len(a)}")
        if any(x < 0 for x in a):
            raise NegativeEntry(f"sextuple has a negative entry: {a}")
        object.__setattr__(self, "a", a)

    def __iter__(self) -> Iterator[int]:
        return iter(self.a)

    def __getitem__(self, t: int) -> int:
        return self.a[t]

    def __len__(self) -> int:
        return 6

    @property
    def rho(self) -> int:
        return sum(self.a)

    @property
    def top(self) -> tuple[int, int, int]:
        return self.a[:3]

    @property
    def bottom(self) -> tuple[int, int, int]:
        return self.a[3:]

    @property
    def is_upshifted(self) -> bool:
        return min(self.bottom) == 0

    def rectangle(self) -> str:
        """Two-row tableau picture, e.g. ``"2 3 4\\n0 1 0"``."""
        width = max(len(str(x)) for x in self.a)
        return "\n".join(
            " ".join(str(x).rjust(width) for x in row) for row in (self.top, self.bottom)
        )

    def to_json(self) -> dict:
        return {"a": list(self.a)}

    def __str__(self) -> str:
        return "({},{},{};{},{},{})".format(*self.a)


@dataclass(frozen=True)
class ReducedDecomposition:
    m0: int
    reduced: Sextuple

    def to_json(self) -> dict:
        return {"m0": self.m0, "reduced": self.reduced.to_json()}


SextupleLike = Union[Sextuple, Sequence[int]]


def validate_square(entries: Iterable[Iterable[int]]) -> SemiMagicSquare:
    grid = tuple(tuple(int(x) for x in row) for row in entries)
    if len(grid) != 3 or any(len(row) != 3 for row in grid):
        raise NotSemiMagic("a square of size three needs 3 rows of 3 entries")
    if any(x < 0 for row in grid for x in row):
        raise NegativeEntry(f"negative entry in {grid}")
    rho = sum(grid[0])
    sums = [sum(row) for row in grid] + [sum(col) for col in zip(*grid)]
    if any(x != rho for x in sums):
        raise NotSemiMagic(f"line sums differ: rows {sums[:3]}, columns {sums[3:]}")
    return SemiMagicSquare(grid, rho)  # type: ignore[arg-type]


def upshift(raw: Sequence[int]) -> Sextuple:
    raw = tuple(int(x) for x in raw)
    if len(raw) != 6:
        raise ValueError(f"a sextuple needs 6 entries, got {len(raw)}")
    t = min(raw[3:])
    shifted = tuple(x + t * d for x, d in zip(raw, SYZYGY))
    if min(shifted[:3]) < 0:
        raise Unrepresentable(f"{raw} does not represent a semi-magic square")
    return Sextuple(shifted)  # type: ignore[arg-type]


def as_sextuple(x: SextupleLike | SemiMagicSquare) -> Sextuple:
    """Coerce a square, a sextuple or a raw vector to the upshifted sextuple."""
    if isinstance(x, SemiMagicSquare):
        return x.sextuple
    if isinstance(x, Sextuple) and x.is_upshifted:
        return x
    return upshift(tuple(x))


def as_square(x: SextupleLike | SemiMagicSquare) -> SemiMagicSquare:
    if isinstance(x, SemiMagicSquare):
        return x
    return from_sextuple(x)


def from_sextuple(a: SextupleLike) -> SemiMagicSquare:
    a = a if isinstance(a, Sextuple) else Sextuple(tuple(a))  # type: ignore[arg-type]
    a1, a2, a3, a4, a5, a6 = a.a
    grid = (
        (a1 + a6, a3 + a5, a2 + a4),
        (a2 + a5, a1 + a4, a3 + a6),
        (a3 + a4, a2 + a6, a1 + a5),
    )
    return SemiMagicSquare(grid, a.rho)


def to_sextuple(M: SemiMagicSquare) -> Sextuple:
    (m11, m12, m13), (m21, m22, m23), (m31, m32, m33) = M.entries
    t = max(0, m31 - m12, m22 - m11)
    a1, a2, a3 = m22 - t, m13 - t, m31 - t
    raw = (a1, a2, a3, t, m12 - a3, m11 - a1)
    a = upshift(raw)
    # every semi-magic square of size 3 decomposes, so this only trips on bad input
    if from_sextuple(a).entries != M.entries:
        raise NotSemiMagic(f"{M.entries} is not a semi-magic square")
    return a


def reduce(a: SextupleLike) -> ReducedDecomposition:
    a = as_sextuple(a)
    m0 = min(a.top)
    reduced = Sextuple(tuple(x - m0 * j for x, j in zip(a.a, J_VECTOR)))  # type: ignore[arg-type]
    return ReducedDecomposition(m0, reduced)


def min_max_entries(a: SextupleLike) -> tuple[int, int]:
    a = tuple(a)
    return min(a[:3]) + min(a[3:]), max(a[:3]) + max(a[3:])


def dual(a: SextupleLike, s: int) -> Sextuple:
    """Upshifted sextuple of ``s*J - M``."""
    a = as_sextuple(a)
    if min_max_entries(a)[1] > s:
        raise OutOfBounds(f"max entry of {a} exceeds s={s}")
    m1 = max(a.bottom)
    s1 = s - m1
    return Sextuple(tuple([s1 - x for x in a.top] + [m1 - x for x in a.bottom]))  # type: ignore[arg-type]


def sextuples_with_line_sum(r: int) -> Iterator[Sextuple]:
    """All upshifted sextuples with coordinate sum ``r``, each square once."""
    for bottom in product(range(r + 1), repeat=3):
        if min(bottom) != 0 or sum(bottom) > r:
            continue
        rest = r - sum(bottom)
        for a1 in range(rest + 1):
            for a2 in range(rest - a1 + 1):
                yield Sextuple((a1, a2, rest - a1 - a2) + bottom)  # type: ignore[arg-type]


def squares_with_line_sum(r: int) -> Iterator[SemiMagicSquare]:
    for a in sextuples_with_line_sum(r):
        yield from_sextuple(a)


def square_from_json(obj: dict) -> SemiMagicSquare:
    if "matrix" in obj:
        return validate_square(obj["matrix"])
    if "a" in obj:
        return from_sextuple(upshift(obj["a"]))
    raise ValueError("expected an object with a 'matrix' or 'a' key")


def sextuple_from_json(obj: dict) -> Sextuple:
    if "a" in obj:
        return upshift(obj["a"])
    return square_from_json(obj).sextuple
