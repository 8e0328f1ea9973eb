"""The finite graded poset of squares with entries bounded by ``s``."""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .core import (
    SemiMagicSquare,
    Sextuple,
    as_square,
    dual,
    from_sextuple,
    min_max_entries,
    upshift,
)
from .errors import ResourceBound
from .group import orbit, preferred_representative

DEFAULT_MAX_S = 6
MAX_S_ENV = "SEMIMAGIC_MAX_S"


def max_s_bound() -> int:
    return int(os.environ.get(MAX_S_ENV, DEFAULT_MAX_S))


@dataclass(frozen=True)
class GradedPoset:
    s: int
    levels: tuple[tuple[SemiMagicSquare, ...], ...]
    covers: dict  # square -> tuple of squares covering it
    path_numbers: dict  # square -> number of maximal chains from the bottom

    @property
    def elements(self) -> list[SemiMagicSquare]:
        return [M for level in self.levels for M in level]

    @property
    def rank(self) -> int:
        return 3 * self.s

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)

    def __contains__(self, M) -> bool:
        return M in self.path_numbers

    def edges(self) -> list[tuple[SemiMagicSquare, SemiMagicSquare]]:
        return [(M, N) for M in self.elements for N in self.covers[M]]

    def dual(self, M: SemiMagicSquare) -> SemiMagicSquare:
        return from_sextuple(dual(M.sextuple, self.s))

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "levels": [[M.to_json()["matrix"] for M in level] for level in self.levels],
            "v": {
                str(M.sextuple): str(self.path_numbers[M]) for M in self.elements
            },
        }


def _level_sextuples(s: int, k: int) -> list[Sextuple]:
    out = []
    for bottom in product(range(s + 1), repeat=3):
        if min(bottom) != 0:
            continue
        room = s - max(bottom)
        rest = k - sum(bottom)
        if rest < 0:
            continue
        for a1 in range(min(room, rest) + 1):
            for a2 in range(min(room, rest - a1) + 1):
                a3 = rest - a1 - a2
                if a3 <= room:
                    out.append(Sextuple((a1, a2, a3) + bottom))  # type: ignore[arg-type]
    return sorted(out, key=lambda x: x.a)


def build(s: int, max_s: int | None = None) -> GradedPoset:
    bound = max_s_bound() if max_s is None else max_s
    if s < 0:
        raise ValueError("s must be non-negative")
    if s > bound:
        raise ResourceBound(f"s={s} exceeds the configured bound {bound} (set {MAX_S_ENV})")
    levels = tuple(
        tuple(from_sextuple(a) for a in _level_sextuples(s, k)) for k in range(3 * s + 1)
    )
    covers: dict = {}
    v: dict = {levels[0][0]: 1}
    for level in levels:
        for M in level:
            ups = []
            for t in range(6):
                raw = list(M.sextuple.a)
                raw[t] += 1
                if min_max_entries(raw)[1] <= s:
                    ups.append(from_sextuple(upshift(raw)))
            covers[M] = tuple(sorted(set(ups), key=lambda N: N.sextuple.a))
            # lower ranks are finished, so v[M] is final here
            for N in covers[M]:
                v[N] = v.get(N, 0) + v[M]
    return GradedPoset(s, levels, covers, v)


@dataclass(frozen=True)
class ConvolutionTerm:
    representative: Sextuple
    orbit_size: int
    v: int
    v_dual: int

    @property
    def product(self) -> int:
        return self.orbit_size * self.v * self.v_dual


@dataclass(frozen=True)
class ConvolutionReport:
    s: int
    k: int
    total: int
    flat_sum: int
    breakdown: tuple[ConvolutionTerm, ...]

    @property
    def holds(self) -> bool:
        return self.flat_sum == self.total == sum(t.product for t in self.breakdown)

    def text(self) -> str:
        terms = " + ".join(f"{t.orbit_size}·{t.v}·{t.v_dual}" for t in self.breakdown)
        return f"{self.total} = {terms}"

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "k": self.k,
            "total": str(self.total),
            "holds": self.holds,
            "breakdown": [
                {
                    "rep": t.representative.to_json(),
                    "orbit_size": t.orbit_size,
                    "v": str(t.v),
                    "v_dual": str(t.v_dual),
                    "term": str(t.product),
                }
                for t in self.breakdown
            ],
        }


def vandermonde_check(P: GradedPoset, k: int) -> ConvolutionReport:
    if not 0 <= k <= P.rank:
        raise ValueError(f"rank {k} outside 0..{P.rank}")
    top = P.levels[-1][0]
    total = P.path_numbers[top]
    flat = 0
    groups: dict = {}
    for M in P.levels[k]:
        v, vd = P.path_numbers[M], P.path_numbers[P.dual(M)]
        flat += v * vd
        rep = preferred_representative(M.sextuple)
        if rep not in groups:
            groups[rep] = [0, v, vd]
        groups[rep][0] += 1
    breakdown = tuple(
        ConvolutionTerm(rep, n, v, vd)
        for rep, (n, v, vd) in sorted(groups.items(), key=lambda kv: kv[0].a, reverse=True)
    )
    return ConvolutionReport(P.s, k, total, flat, breakdown)


def orbit_table(P: GradedPoset) -> list[list[tuple[Sextuple, int, int]]]:
    """Per rank: (preferred representative, orbit size, path number)."""
    table = []
    for level in P.levels:
        seen: dict = {}
        for M in level:
            rep = preferred_representative(M.sextuple)
            if rep not in seen:
                seen[rep] = (rep, orbit(M).size, P.path_numbers[M])
        table.append(sorted(seen.values(), key=lambda r: r[0].a, reverse=True))
    return table


def order_ideal_size(M: SemiMagicSquare) -> int:
    M = as_square(M)
    e = M.entries
    # a_t <= each entry of M in which it appears (see the sextuple dictionary)
    caps = [
        min(e[0][0], e[1][1], e[2][2]),
        min(e[0][2], e[1][0], e[2][1]),
        min(e[0][1], e[1][2], e[2][0]),
        min(e[0][2], e[1][1], e[2][0]),
        min(e[0][1], e[1][0], e[2][2]),
        min(e[0][0], e[1][2], e[2][1]),
    ]
    count = 0
    for a in product(*(range(c + 1) for c in caps)):
        if min(a[3:]) != 0:
            continue
        if from_sextuple(a).le(M):
            count += 1
    return count


LABEL_STYLES = ("matrix", "rectangle", "path-number")


def export_dot(P: GradedPoset, labels: str = "path-number") -> str:
    if labels not in LABEL_STYLES:
        raise ValueError(f"labels must be one of {LABEL_STYLES}")
    ids = {M: f"n{i}" for i, M in enumerate(P.elements)}

    def label(M: SemiMagicSquare) -> str:
        if labels == "matrix":
            return "\\n".join(" ".join(map(str, row)) for row in M.entries)
        rect = "\\n".join(
            " ".join(map(str, row)) for row in (M.sextuple.top, M.sextuple.bottom)
        )
        if labels == "rectangle":
            return rect
        return f"{rect}\\nv={P.path_numbers[M]}"

    lines = [f"digraph M3_{P.s} {{", "\trankdir=BT;", "\tnode [shape=box];"]
    for k, level in enumerate(P.levels):
        lines.append(f"\tsubgraph rank_{k} {{")
        lines.append("\t\trank=same;")
        for M in level:
            lines.append(f'\t\t{ids[M]} [label="{label(M)}"];')
        lines.append("\t}")
    for M, N in P.edges():
        lines.append(f"\t{ids[M]} -> {ids[N]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
