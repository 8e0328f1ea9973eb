"""The order-72 group of row/column permutations and transpose.

An element is stored as ``(row_perm, col_perm, transpose)`` with 0-based
one-line permutations.  Acting on a square ``M``::

    g.M[row_perm[i]][col_perm[j]] = X[i][j],   X = M or M.T

Each element also permutes the six permutation matrices among themselves,
which gives its action on sextuple slots.  That correspondence is found by
brute force: apply ``g`` to every ``P_t`` and look up the result.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

from .core import (
    PERMUTATION_MATRICES,
    SemiMagicSquare,
    Sextuple,
    SextupleLike,
    as_sextuple,
    as_square,
    reduce,
    upshift,
)

Perm = tuple[int, ...]

ORBIT_SIZES = {
    "zero": 1,
    "class6": 6,
    "class9": 9,
    "class12": 12,
    "class18": 18,
    "class36a": 36,
    "class36b": 36,
    "class72": 72,
}

# isomorphism type of the stabilizer of the preferred representative
STABILIZER_TYPES = {
    "zero": "G",
    "class6": "D12",
    "class9": "D8",
    "class12": "S3",
    "class18": "Z2xZ2",
    "class36a": "Z2",
    "class36b": "Z2",
    "class72": "trivial",
}


def _act_grid(row: Perm, col: Perm, transpose: bool, grid) -> tuple:
    src = tuple(zip(*grid)) if transpose else grid
    out = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            out[row[i]][col[j]] = src[i][j]
    return tuple(tuple(r) for r in out)


def _slot_perm(row: Perm, col: Perm, transpose: bool) -> Perm:
    images = []
    for P in PERMUTATION_MATRICES:
        images.append(PERMUTATION_MATRICES.index(_act_grid(row, col, transpose, P)))
    return tuple(images)


@dataclass(frozen=True)
class GroupElement:
    row_perm: Perm
    col_perm: Perm
    transpose: int
    slot_perm: Perm = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "row_perm", tuple(self.row_perm))
        object.__setattr__(self, "col_perm", tuple(self.col_perm))
        object.__setattr__(self, "transpose", int(bool(self.transpose)))
        for p in (self.row_perm, self.col_perm):
            if sorted(p) != [0, 1, 2]:
                raise ValueError(f"not a permutation of three letters: {p}")
        object.__setattr__(
            self, "slot_perm", _slot_perm(self.row_perm, self.col_perm, self.transpose)
        )

    @property
    def is_identity(self) -> bool:
        return self.slot_perm == tuple(range(6))

    @property
    def preserves_rows(self) -> bool:
        """True if the slot sets {1,2,3} and {4,5,6} are each preserved."""
        return self.slot_perm[0] < 3

    def position_map(self) -> tuple[tuple[int, int], ...]:
        """Image of each of the 9 positions, row-major."""
        out = []
        for i, j in product(range(3), repeat=2):
            if self.transpose:
                i, j = j, i
            out.append((self.row_perm[i], self.col_perm[j]))
        return tuple(out)

    def __matmul__(self, other: GroupElement) -> GroupElement:
        """Composition: ``(g @ h)`` acts as ``h`` first, then ``g``."""
        mine = self.position_map()
        theirs = other.position_map()
        composite = tuple(mine[3 * i + j] for i, j in theirs)
        return _by_position_map()[composite]

    def inverse(self) -> GroupElement:
        e = identity()
        for h in all_elements():
            if self @ h == e:
                return h
        raise AssertionError("group is not closed")

    def cycle_notation(self) -> str:
        return cycles_string(self.slot_perm)

    def to_json(self) -> dict:
        return {
            "row": "".join(str(x + 1) for x in self.row_perm),
            "col": "".join(str(x + 1) for x in self.col_perm),
            "transpose": self.transpose,
            "slots": [x + 1 for x in self.slot_perm],
        }

    def __str__(self) -> str:
        r = "".join(str(x + 1) for x in self.row_perm)
        c = "".join(str(x + 1) for x in self.col_perm)
        return f"R={r},C={c},T={self.transpose} {self.cycle_notation()}"


@lru_cache(maxsize=None)
def all_elements() -> tuple[GroupElement, ...]:
    perms = list(permutations(range(3)))
    return tuple(
        GroupElement(r, c, t) for t in (0, 1) for r in perms for c in perms
    )


@lru_cache(maxsize=None)
def _by_position_map() -> dict:
    return {g.position_map(): g for g in all_elements()}


@lru_cache(maxsize=None)
def _by_slot_perm() -> dict:
    return {g.slot_perm: g for g in all_elements()}


def identity() -> GroupElement:
    return all_elements()[0]


def element_from_slots(slot_perm: Sequence[int]) -> GroupElement:
    """Look up the element inducing a 0-based slot permutation."""
    try:
        return _by_slot_perm()[tuple(slot_perm)]
    except KeyError:
        raise ValueError(f"slot permutation {tuple(slot_perm)} is not in G") from None


def cycles_string(perm: Perm) -> str:
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "()"


def parse_element(text: str) -> GroupElement:
    """Parse ``"(14)(25)(36)"``, ``"e"`` or ``"R=132,C=123,T=0"``."""
    text = text.replace(" ", "")
    if text in ("", "e", "()", "id"):
        return identity()
    if text.startswith("("):
        if not re.fullmatch(r"(\([1-6]+\))+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        perm = list(range(6))
        for cyc in re.findall(r"\(([1-6]+)\)", text):
            pts = [int(c) - 1 for c in cyc]
            if len(set(pts)) != len(pts):
                raise ValueError(f"repeated point in cycle ({cyc})")
            for x, y in zip(pts, pts[1:] + pts[:1]):
                perm[x] = y
        if sorted(perm) != list(range(6)):
            raise ValueError(f"cycles in {text!r} are not disjoint")
        return element_from_slots(perm)
    fields = dict(part.split("=", 1) for part in text.split(","))
    try:
        row = tuple(int(c) - 1 for c in fields.get("R", "123"))
        col = tuple(int(c) - 1 for c in fields.get("C", "123"))
        t = int(fields.get("T", "0"))
    except ValueError:
        raise ValueError(f"bad group element: {text!r}") from None
    if t not in (0, 1):
        raise ValueError("T must be 0 or 1")
    return GroupElement(row, col, t)


def act(g: GroupElement, M: SemiMagicSquare) -> SemiMagicSquare:
    return SemiMagicSquare(_act_grid(g.row_perm, g.col_perm, g.transpose, M.entries), M.line_sum)


def permute_slots(g: GroupElement, a: SextupleLike) -> tuple[int, ...]:
    """Move slot ``t`` to slot ``g.slot_perm[t]``, without upshifting."""
    a = tuple(a)
    out = [0] * 6
    for t, x in enumerate(a):
        out[g.slot_perm[t]] = x
    return tuple(out)


def act_slots(g: GroupElement, a: SextupleLike) -> Sextuple:
    return upshift(permute_slots(g, as_sextuple(a)))


def _arrangements(row: Sequence[int]) -> int:
    return len(set(permutations(row)))


def classify_reduced(a: SextupleLike) -> str:
    """Orbit class of the reduced part of ``a`` (any representative accepted)."""
    red = reduce(as_sextuple(a)).reduced
    n1, n2 = _arrangements(red.top), _arrangements(red.bottom)
    same = sorted(red.top) == sorted(red.bottom)
    n1, n2 = sorted((n1, n2))
    if (n1, n2) == (1, 1):
        return "zero"
    if n1 == 1:
        return "class6" if n2 == 3 else "class12"
    if (n1, n2) == (3, 3):
        return "class9" if same else "class18"
    if (n1, n2) == (3, 6):
        return "class36a"
    return "class36b" if same else "class72"


def preferred_representative(a: SextupleLike) -> Sextuple:
    """Orbit representative in the tableau convention used for display.

    Rows of the reduced part are sorted non-increasing, the row with fewer
    zeros goes first (ties: larger row first), then ``m0`` is added back.
    """
    dec = reduce(as_sextuple(a))
    rows = [tuple(sorted(r, reverse=True)) for r in (dec.reduced.top, dec.reduced.bottom)]
    rows.sort(key=lambda r: (r.count(0), tuple(-x for x in r)))
    top = tuple(x + dec.m0 for x in rows[0])
    return Sextuple(top + rows[1])  # type: ignore[arg-type]


@dataclass(frozen=True)
class OrbitReport:
    representative: Sextuple
    preferred: Sextuple
    size: int
    stabilizer_order: int
    orbit_class: str
    stabilizer: tuple[GroupElement, ...]
    members: frozenset

    @property
    def stabilizer_type(self) -> str:
        return STABILIZER_TYPES[self.orbit_class]

    def to_json(self) -> dict:
        return {
            "rep": self.representative.to_json(),
            "preferred": self.preferred.to_json(),
            "size": self.size,
            "stab_order": self.stabilizer_order,
            "class": self.orbit_class,
            "stabilizer": [g.cycle_notation() for g in self.stabilizer],
        }


def orbit(M: SemiMagicSquare | SextupleLike) -> OrbitReport:
    M = as_square(M)
    images = [act(g, M) for g in all_elements()]
    members = frozenset(images)
    stab = tuple(g for g, N in zip(all_elements(), images) if N == M)
    rep = min(N.sextuple.a for N in members)
    return OrbitReport(
        representative=Sextuple(rep),  # type: ignore[arg-type]
        preferred=preferred_representative(M),
        size=len(members),
        stabilizer_order=len(stab),
        orbit_class=classify_reduced(M.sextuple),
        stabilizer=stab,
        members=members,
    )
