"""Un-normalized Clebsch-Gordan coefficients indexed by semi-magic squares.

Tensor-product indices ``(m, n, k, i, j)`` fill a square as::

    [ n-k   m-k   k     ]
    [ i     j     m'    ]      m' = m + n - i - j - k
    [ m-i   n-j   i+j-k ]

and ``C(M)`` is the signed integer sum
``sum_t (-1)^t C(i+j-k, i-t) C(m-i, k-t) C(n-j, t)``.

Under a group element ``g`` the path polynomial either stays put or has its
coefficients reversed; at ``z = -1`` this relates ``C(M)`` to ``C(g.M)`` up
to a sign and a ratio of multinomials.  ``regge_identity`` derives that
relation for any ``g`` and checks it in exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    SYZYGY,
    SemiMagicSquare,
    Sextuple,
    SextupleLike,
    as_sextuple,
    as_square,
    from_sextuple,
    validate_square,
)
from .enumeration import binomial, multinomial, path_polynomial
from .errors import InvalidIndex
from .group import GroupElement, all_elements, permute_slots


@dataclass(frozen=True)
class CGIndex:
    m: int
    n: int
    k: int
    i: int
    j: int

    @property
    def m_prime(self) -> int:
        return self.m + self.n - self.i - self.j - self.k

    @property
    def three_j_doubled(self) -> tuple[int, int, int, int, int, int]:
        """(2j1, 2j2, 2j3, 2m1, 2m2, 2m3); the m's sum to zero."""
        m, n, k, i, j = self.m, self.n, self.k, self.i, self.j
        two_j3 = m + n - 2 * k
        return (m, n, two_j3, m - 2 * i, n - 2 * j, two_j3 - 2 * self.m_prime)

    def entries(self) -> list[list[int]]:
        m, n, k, i, j = self.m, self.n, self.k, self.i, self.j
        return [[n - k, m - k, k], [i, j, self.m_prime], [m - i, n - j, i + j - k]]

    def three_j_text(self) -> str:
        vals = [_half(x) for x in self.three_j_doubled]
        return "(j1 j2 j3; m1 m2 m3) = ({} {} {}; {} {} {})".format(*vals)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "i": self.i,
            "j": self.j,
            "m_prime": self.m_prime,
            "three_j_doubled": list(self.three_j_doubled),
        }


def _half(x: int) -> str:
    return str(x // 2) if x % 2 == 0 else f"{x}/2"


def square_from_cg(idx: CGIndex) -> SemiMagicSquare:
    entries = idx.entries()
    if any(x < 0 for row in entries for x in row):
        raise InvalidIndex(f"{idx} gives a negative dictionary entry: {entries}")
    return validate_square(entries)


def cg_from_square(M: SemiMagicSquare | SextupleLike) -> CGIndex:
    e = as_square(M).entries
    k = e[0][2]
    return CGIndex(m=e[0][1] + k, n=e[0][0] + k, k=k, i=e[1][0], j=e[1][1])


def cg_coefficient(M: SemiMagicSquare | SextupleLike) -> int:
    idx = cg_from_square(as_square(M))
    m, n, k, i, j = idx.m, idx.n, idx.k, idx.i, idx.j
    lo = max(0, i - (i + j - k), k - (m - i))
    hi = min(i, k, n - j)
    total = 0
    for t in range(lo, hi + 1):
        term = binomial(i + j - k, i - t) * binomial(m - i, k - t) * binomial(n - j, t)
        total += -term if t % 2 else term
    return total


def _weight(a: Sextuple) -> int:
    """Multinomial prefactor relating F(M,-1) to C(M)."""
    return multinomial(a.rho, a[0] + a[4], a[1] + a[5], a[2] + a[3])


def reciprocity_check(a: SextupleLike) -> tuple[int, int, int]:
    """Return ``(F(M,-1), (-1)^a2 * weight * C(M), F(M,1))``.

    The first two always agree.  Writing the sign as ``(-1)^(a2 + m0)``
    instead is wrong whenever ``m0`` is odd and ``C(M) != 0``; see
    ``printed_reciprocity_rhs``.
    """
    a = as_sextuple(a)
    poly = path_polynomial(a)
    sign = -1 if a[1] % 2 else 1
    return poly(-1), sign * _weight(a) * cg_coefficient(a), poly(1)


def printed_reciprocity_rhs(a: SextupleLike) -> int:
    """``(-1)^(a2 + m0) * weight * C(M)``; differs from F(M,-1) by ``(-1)^m0``."""
    a = as_sextuple(a)
    sign = -1 if (a[1] + min(a.top)) % 2 else 1
    return sign * _weight(a) * cg_coefficient(a)


def transform_polynomial(g: GroupElement, a: SextupleLike) -> tuple[Sextuple, bool]:
    a = as_sextuple(a)
    moved = permute_slots(g, a)
    if g.preserves_rows:
        return Sextuple(moved), False  # type: ignore[arg-type]
    m0 = min(a.top)
    return Sextuple(tuple(x + m0 * d for x, d in zip(moved, SYZYGY))), True  # type: ignore[arg-type]


def _slot(t: int) -> str:
    return f"a{t + 1}"


def symbolic_relation(g: GroupElement) -> str:
    """The identity for ``g`` written in the source slots a1..a6.

    ``a'_u`` is ``a_{g^-1(u)}``, shifted by +-m0 when the rows swap; the
    shifts cancel in every multinomial part and in the sign exponent.
    """
    src = [0] * 6
    for t, u in enumerate(g.slot_perm):
        src[u] = t
    right = ", ".join(f"{_slot(src[x])}+{_slot(src[y])}" for x, y in ((0, 4), (1, 5), (2, 3)))
    x = src[1]
    sign = "" if x == 1 else f"(-1)^{{a2+{_slot(x)}}}·"
    return (
        f"multinom(rho; a1+a5, a2+a6, a3+a4)·C(M) = "
        f"{sign}multinom(rho; {right})·C(M')"
    )


@dataclass(frozen=True)
class ReggeIdentity:
    g: GroupElement
    source: Sextuple
    target: Sextuple
    sign: int
    left_multinomial: int
    right_multinomial: int
    c_source: int
    c_target: int
    reversed: bool

    def __post_init__(self):
        lhs = self.left_multinomial * self.c_source
        rhs = self.sign * self.right_multinomial * self.c_target
        if lhs != rhs:
            raise AssertionError(f"identity fails for g={self.g}, a={self.source}: {lhs} != {rhs}")

    @property
    def value(self) -> int:
        return self.left_multinomial * self.c_source

    @property
    def formula(self) -> str:
        return symbolic_relation(self.g)

    def render(self) -> str:
        src, tgt = cg_from_square(self.source), cg_from_square(self.target)
        rho = self.source.rho
        s = "-" if self.sign < 0 else ""

        def tensor(w: Sextuple, idx: CGIndex) -> str:
            parts = ",".join(str(x) for x in (w[0] + w[4], w[1] + w[5], w[2] + w[3]))
            return f"multinom({rho}; {parts}) c_{{{idx.m},{idx.n},{idx.k}}}({idx.i},{idx.j})"

        return "\n".join(
            [
                f"g = {self.g.cycle_notation()}: a = {self.source} -> a' = {self.target}",
                f"  {self.formula}",
                f"  {tensor(self.source, src)} = {s}{tensor(self.target, tgt)}",
                f"  {self.left_multinomial}·{self.c_source} = "
                f"{s}{self.right_multinomial}·{self.c_target} = {self.value}",
                f"  source 3j {src.three_j_text()}",
                f"  target 3j {tgt.three_j_text()}",
            ]
        )

    def to_json(self) -> dict:
        return {
            "g": self.g.to_json(),
            "sign": self.sign,
            "left_multinomial": str(self.left_multinomial),
            "right_multinomial": str(self.right_multinomial),
            "c_source": str(self.c_source),
            "c_target": str(self.c_target),
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "reversed": self.reversed,
            "formula": self.formula,
        }


def regge_identity(g: GroupElement, a: SextupleLike) -> ReggeIdentity:
    a = as_sextuple(a)
    target, rev = transform_polynomial(g, a)
    m0 = min(a.top)
    # F(M,-1) = (-1)^(m0 * rev) F(M',-1); expand both sides by reciprocity
    exponent = (m0 if rev else 0) + a[1] + target[1]
    return ReggeIdentity(
        g=g,
        source=a,
        target=target,
        sign=-1 if exponent % 2 else 1,
        left_multinomial=_weight(a),
        right_multinomial=_weight(target),
        c_source=cg_coefficient(a),
        c_target=cg_coefficient(from_sextuple(target)),
        reversed=rev,
    )


def regge_orbit_table(a: SextupleLike) -> list[ReggeIdentity]:
    return [regge_identity(g, a) for g in all_elements()]
