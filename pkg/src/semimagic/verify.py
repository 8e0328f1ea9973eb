"""Invariant suites runnable from the command line (``verify --suite NAME``)."""
from __future__ import annotations

import random
from typing import Callable, Iterator

from . import cg, core, enumeration, group, poset
from .core import from_sextuple, sextuples_with_line_sum

Check = tuple[str, bool]


def _upto(r: int) -> Iterator[core.Sextuple]:
    for rho in range(r + 1):
        yield from sextuples_with_line_sum(rho)


def random_square(rng: random.Random, max_rho: int) -> core.SemiMagicSquare:
    """Sum of a random word in the permutation matrices."""
    counts = [0] * 6
    for _ in range(rng.randint(0, max_rho)):
        counts[rng.randrange(6)] += 1
    return from_sextuple(counts)


def core_suite() -> list[Check]:
    roundtrip = syzygy = minmax = decomposition = True
    for a in _upto(8):
        M = from_sextuple(a)
        roundtrip &= core.to_sextuple(M) == a and core.validate_square(M.entries) == M
        shifted = tuple(x - d for x, d in zip(a.a, core.SYZYGY))
        if min(shifted) >= 0:
            syzygy &= from_sextuple(shifted) == M
        minmax &= core.min_max_entries(a) == (M.min_entry(), M.max_entry())
        dec = core.reduce(a)
        decomposition &= (
            tuple(dec.m0 * j + x for j, x in zip(core.J_VECTOR, dec.reduced.a)) == a.a
            and from_sextuple(dec.reduced).min_entry() == 0
        )
    involution = True
    for s in range(4):
        for level in poset.build(s, max_s=s).levels:
            for M in level:
                d = core.dual(M.sextuple, s)
                involution &= core.dual(d, s) == M.sextuple
                involution &= all(x + y == s for x, y in zip(M.flat, from_sextuple(d).flat))
    return [
        ("round trip square <-> sextuple, rho <= 8", roundtrip),
        ("syzygy shift gives the same square", syzygy),
        ("min/max from sextuple match matrix scan", minmax),
        ("reduced decomposition reconstructs", decomposition),
        ("dual is an involution with M + M* = sJ, s <= 3", involution),
    ]


def group_suite() -> list[Check]:
    G = group.all_elements()
    closed = len(set(G)) == 72 and all((g @ h) in G for g in G for h in G)
    slots_ok = {g.slot_perm for g in G} == _generated_slot_group()
    coherent = laws = True
    e = group.identity()
    for a in _upto(4):
        M = from_sextuple(a)
        laws &= group.act(e, M) == M
        for g in G:
            coherent &= group.act_slots(g, a) == group.act(g, M).sextuple
    rng = random.Random(7)
    for _ in range(50):
        M = random_square(rng, 10)
        g, h = rng.choice(G), rng.choice(G)
        laws &= group.act(g, group.act(h, M)) == group.act(g @ h, M)
    orbit_stab = class_ok = True
    for a in _upto(6):
        rep = group.orbit(a)
        orbit_stab &= rep.size * rep.stabilizer_order == 72
        class_ok &= group.ORBIT_SIZES[rep.orbit_class] == rep.size
    return [
        ("72 distinct elements, closed under composition", closed),
        ("slot permutations = <(12),(23),(14)(25)(36)>", slots_ok),
        ("action laws (identity, composition)", laws),
        ("matrix action agrees with slot action, rho <= 4", coherent),
        ("orbit-stabilizer, rho <= 6", orbit_stab),
        ("class tags predict orbit sizes, rho <= 6", class_ok),
    ]


def _generated_slot_group() -> set:
    gens = [(1, 0, 2, 3, 4, 5), (0, 2, 1, 3, 4, 5), (3, 4, 5, 0, 1, 2)]
    seen = {tuple(range(6))}
    frontier = list(seen)
    while frontier:
        p = frontier.pop()
        for q in gens:
            r = tuple(q[p[t]] for t in range(6))
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    return seen


def enumeration_suite() -> list[Check]:
    oracle = all(
        enumeration.path_number(a) == enumeration.oracle_path_count(a) for a in _upto(6)
    )
    rng = random.Random(11)
    oracle &= all(
        enumeration.path_number(M.sextuple) == enumeration.oracle_path_count(M)
        for M in (random_square(rng, 12) for _ in range(50))
    )
    rows = all(lhs == rhs for lhs, rhs in map(enumeration.row_sum_check, range(7)))
    factor = all(
        enumeration.hypergeometric_factor(a).value == enumeration.path_number(a)
        for a in _upto(6)
    )
    seqs = all(
        enumeration.p_of_s(s) == enumeration.path_number((s, s, s, 0, 0, 0)) for s in range(9)
    )
    recs = all(enumeration.franel_recurrence_check(s) for s in range(1, 21)) and all(
        enumeration.p_recurrence_check(s) for s in range(1, 9)
    )
    return [
        ("path number = DP oracle (rho <= 6, 50 random rho <= 12)", oracle),
        ("row sums equal 6^t, t <= 6", rows),
        ("multinomial x hypergeometric sum = path number", factor),
        ("p(s) = v(sJ), s <= 8", seqs),
        ("Franel and p(s) recurrences", recs),
    ]


def poset_suite() -> list[Check]:
    out = []
    for s in (1, 2, 3):
        P = poset.build(s, max_s=s)
        sizes = [len(level) for level in P.levels]
        out.append((f"s={s}: level sizes palindromic", sizes == sizes[::-1]))
        out.append(
            (
                f"s={s}: DP path numbers match formula",
                all(P.path_numbers[M] == enumeration.path_number(M.sextuple) for M in P.elements),
            )
        )
        out.append(
            (
                f"s={s}: convolution at every rank",
                all(poset.vandermonde_check(P, k).holds for k in range(3 * s + 1)),
            )
        )
    return out


def cg_suite() -> list[Check]:
    dictionary = all(
        cg.square_from_cg(cg.cg_from_square(from_sextuple(a))) == from_sextuple(a)
        for a in _upto(8)
    )
    recip = all(l == r for l, r, _ in map(cg.reciprocity_check, _upto(8)))
    rng = random.Random(13)
    samples = [random_square(rng, 10).sextuple for _ in range(10)]
    regge = True
    for a in samples:
        try:
            cg.regge_orbit_table(a)
        except AssertionError:
            regge = False
    return [
        ("dictionary round trip, rho <= 8", dictionary),
        ("reciprocity, rho <= 8", recip),
        ("72 Regge identities on 10 random squares", regge),
    ]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "core": core_suite,
    "group": group_suite,
    "enumeration": enumeration_suite,
    "poset": poset_suite,
    "cg": cg_suite,
}


def run(name: str) -> list[tuple[str, str, bool]]:
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return [(n, label, ok) for n in names for label, ok in SUITES[n]()]
