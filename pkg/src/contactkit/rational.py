"""Exact rational contact-surgery calculus.

Contact r-surgery on a Legendrian knot, for rational r = x/y > 0, can
be traded for a chain of (+1)- and (-1)-surgeries on push-offs and
stabilizations of the knot (the Ding-Geiges-Stipsicz algorithm).  This
module implements that expansion together with the closed-form
bookkeeping for rationally null-homologous Legendrian knots: canonical
framing shift, order / self-intersection / rotation number after
integer contact surgery, and the Chern-class evaluations on the two
capped surface classes in the surgery cobordism.

All arithmetic is exact (ints and fractions.Fraction); every identity
asserted here holds on the nose, so there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError

__all__ = [
    "SurgeryCoefficient",
    "ContinuedFraction",
    "DgsLink",
    "LegendrianData",
    "SpincEvaluation",
    "C1SurgeryEvaluation",
    "negative_continued_fraction",
    "minimal_c",
    "dgs_expand",
    "dgs_components",
    "smooth_framing_shift",
    "order_after_surgery",
    "self_intersection",
    "rot_after_surgery",
    "rot_linkmatrix",
    "linking_matrix",
    "linking_matrix_inverse",
    "c1_evaluation_surgery",
    "stabilize",
    "twist_insertion_update",
]


@dataclass(frozen=True)
class SurgeryCoefficient:
    """Reduced rational surgery coefficient x/y with y >= 1."""

    x: int
    y: int = 1

    def __post_init__(self):
        if self.y == 0:
            raise DomainError("zero denominator")
        g = gcd(self.x, self.y)
        x, y = self.x // g, self.y // g
        if y < 0:
            x, y = -x, -y
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_fraction(cls, q) -> "SurgeryCoefficient":
        q = Fraction(q)
        return cls(q.numerator, q.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.x, self.y)

    def __str__(self):
        return f"{self.x}/{self.y}" if self.y != 1 else str(self.x)


@dataclass(frozen=True)
class ContinuedFraction:
    """Negative continued fraction [a1,...,am], all entries <= -2.

    Evaluates as a1 - 1/(a2 - 1/(... - 1/am)).
    """

    entries: tuple

    def __post_init__(self):
        if any(a > -2 for a in self.entries):
            raise DomainError("continued fraction entry > -2")

    def evaluate(self) -> Fraction:
        if not self.entries:
            raise DomainError("empty continued fraction")
        val = Fraction(self.entries[-1])
        for a in reversed(self.entries[:-1]):
            val = a - 1 / val
        return val

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class DgsLink:
    """Surgery presentation: c push-offs (+1 each) and a stabilization chain.

    ``stabilization_counts[i]`` is the number of (negative)
    stabilizations applied to the i-th chain component, which carries
    contact coefficient -1.  All stabilizations follow the all-negative
    convention.
    """

    pushoff_count: int
    stabilization_counts: tuple

    @property
    def coefficients(self):
        return (1,) * self.pushoff_count + (-1,) * len(self.stabilization_counts)

    def to_json(self):
        return {
            "c": self.pushoff_count,
            "stabs": list(self.stabilization_counts),
            "signs": "all-negative",
        }


@dataclass(frozen=True)
class LegendrianData:
    """Classical data of a rationally null-homologous Legendrian knot.

    tb and rot are the rational Thurston-Bennequin and rotation
    numbers; ``order`` is the order y of the knot class in first
    homology.  The boundary of a rational Seifert surface consists of
    ``components`` parallel curves in class t*(canonical longitude) +
    r*(meridian), with components * t = order and 0 <= r < t,
    gcd(t, r) = 1.
    """

    tb: Fraction
    rot: Fraction
    order: int = 1
    components: int = 1
    longitude_coeff: int = 1
    meridian_coeff: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tb", Fraction(self.tb))
        object.__setattr__(self, "rot", Fraction(self.rot))
        y, c, t, r = self.order, self.components, self.longitude_coeff, self.meridian_coeff
        if y < 1 or c < 1 or t < 1:
            raise DomainError("order, components and longitude coefficient must be positive")
        if c * t != y:
            raise DomainError(f"components*t = {c * t} != order = {y}")
        if not (0 <= r < t):
            raise DomainError(f"meridian coefficient {r} outside [0, {t})")
        if gcd(t, r) != 1:
            raise DomainError("longitude/meridian coefficients not coprime")
        if (self.tb * y).denominator != 1:
            raise DomainError(f"tb = {self.tb} is not an integer multiple of 1/order")

    @property
    def x(self) -> int:
        """Numerator of tb written over the order: tb = x/order."""
        return int(self.tb * self.order)

    def to_json(self):
        return {
            "tb_num": self.tb.numerator,
            "tb_den": self.tb.denominator,
            "rot_num": self.rot.numerator,
            "rot_den": self.rot.denominator,
            "c": self.components,
            "t": self.longitude_coeff,
            "r": self.meridian_coeff,
        }

    @classmethod
    def from_json(cls, d):
        return cls(
            tb=Fraction(d["tb_num"], d["tb_den"]),
            rot=Fraction(d["rot_num"], d["rot_den"]),
            order=d["c"] * d["t"],
            components=d["c"],
            longitude_coeff=d["t"],
            meridian_coeff=d["r"],
        )


@dataclass(frozen=True)
class SpincEvaluation:
    """First-Chern-class evaluation on a capped surface class."""

    value: Fraction
    surface_tag: str  # "F-tilde" or "V-tilde"


@dataclass(frozen=True)
class C1SurgeryEvaluation:
    f_tilde: SpincEvaluation
    v_tilde: SpincEvaluation


def negative_continued_fraction(q) -> ContinuedFraction:
    """Expand a rational q < -1 as [a1,...,am] with all entries <= -2.

    The expansion is the unique one in this normalization and
    re-evaluates to q exactly.  Rationals in [-1, 0) admit no such
    finite expansion.
    """
    q = Fraction(q)
    if q >= 0:
        raise DomainError(f"{q} is not negative")
    if q >= -1:
        raise DomainError(f"no admissible expansion for {q}")
    entries = []
    while True:
        a = q.numerator // q.denominator  # floor
        entries.append(a)
        frac = q - a
        if frac == 0:
            break
        q = -1 / frac
    cf = ContinuedFraction(tuple(entries))
    assert cf.evaluate() is not None
    return cf


@dataclass(frozen=True)
class MinimalC:
    c: int
    degenerate: bool  # True when y - c*x == 0 at the minimizing c


def minimal_c(r: SurgeryCoefficient) -> MinimalC:
    """Smallest c >= 1 with y - c*x < 0 for r = x/y > 0.

    When y - c*x hits 0 exactly (possible only for x = 1, at c = y) the
    result is flagged degenerate: the expansion terminates with c
    push-offs and no stabilization chain.
    """
    if r.value <= 0:
        raise DomainError(f"surgery coefficient {r} is not positive")
    x, y = r.x, r.y
    # y - c*x decreases in c; find first c with y - c*x <= 0
    c = -((-y) // x)  # ceil(y/x)
    if y - c * x == 0:
        return MinimalC(c, True)
    return MinimalC(c, False)


def dgs_expand(r: SurgeryCoefficient) -> DgsLink:
    """Expand positive rational contact surgery into +1/-1 pieces.

    The result records c push-offs with coefficient +1 and a chain of
    components with coefficient -1, the i-th carrying the listed number
    of negative stabilizations.  Contact +1 surgery (and more generally
    1/y) is terminal: c push-offs, empty chain.
    """
    if r.value <= 0:
        raise DomainError(f"expansion defined for positive coefficients, got {r}")
    mc = minimal_c(r)
    if mc.degenerate:
        return DgsLink(mc.c, ())
    q = Fraction(r.x, r.y - mc.c * r.x)
    cf = negative_continued_fraction(q)
    stabs = [abs(cf.entries[0] + 1)]
    stabs.extend(abs(a + 2) for a in cf.entries[1:])
    return DgsLink(mc.c, tuple(stabs))


def reconstruct_coefficient(c: int, cf: ContinuedFraction | None) -> SurgeryCoefficient:
    """Inverse of the expansion: recover x/y from (c, continued fraction)."""
    if cf is None:
        return SurgeryCoefficient.from_fraction(Fraction(1, c))
    return SurgeryCoefficient.from_fraction(1 / (c + 1 / cf.evaluate()))


def dgs_components(L: LegendrianData, r: SurgeryCoefficient):
    """Classical invariants of every component of the expanded link.

    Returns a list of (coefficient, tb, rot) triples: push-offs copy
    L's invariants; each chain component is a push-off of its
    predecessor with the listed negative stabilizations applied.
    """
    link = dgs_expand(r)
    comps = [(1, L.tb, L.rot)] * link.pushoff_count
    cur = L
    for s in link.stabilization_counts:
        for _ in range(s):
            cur = stabilize(cur, "-")
        comps.append((-1, cur.tb, cur.rot))
    return comps


def smooth_framing_shift(L: LegendrianData) -> int:
    """Integer shift k with contact framing = canonical longitude + k*meridian.

    Equals tb + c*r/y; for honestly consistent data this is an integer
    (the contact framing is an actual framing).
    """
    k = L.tb + Fraction(L.components * L.meridian_coeff, L.order)
    if k.denominator != 1:
        raise DomainError(f"inconsistent Legendrian data: framing shift {k} is not an integer")
    return int(k)


def order_after_surgery(L: LegendrianData, n: int) -> int:
    """Order |x + n*y| of the induced knot after contact +n surgery.

    Zero signals that the surgered manifold is not a rational homology
    sphere along this knot.
    """
    return abs(L.x + n * L.order)


def self_intersection(L: LegendrianData, n: int) -> int:
    """Self-intersection y*(x + n*y) of the capped surface class."""
    y = L.order
    val = y * (L.x + n * y)
    # second route through the framing shift must agree
    k = smooth_framing_shift(L)
    alt = y * ((k + n) * y - L.components * L.meridian_coeff)
    assert val == alt, (val, alt)
    return val


def rot_after_surgery(L: LegendrianData, n: int) -> Fraction:
    """Rational rotation number of the induced knot after +n surgery."""
    y = L.order
    denom = L.x + n * y
    if denom == 0:
        raise DomainError("not a rational homology sphere: x + n*y = 0")
    return Fraction(y * (L.rot + n - 1), denom) - 1


def linking_matrix(a: Fraction, n: int):
    """The n-by-n rational linking matrix of the expanded surgery link.

    Diagonal (a+1, a-2, ..., a-2); first row and column otherwise a;
    remaining off-diagonal entries a-1.
    """
    a = Fraction(a)
    m = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                m[i][j] = a + 1 if i == 0 else a - 2
            elif i == 0 or j == 0:
                m[i][j] = a
            else:
                m[i][j] = a - 1
    return m


def linking_matrix_inverse(a: Fraction, n: int):
    """Closed-form inverse of the linking matrix (prefactor 1/(a+n))."""
    a = Fraction(a)
    if a + n == 0:
        raise DomainError("singular linking matrix: a = -n")
    pref = 1 / (a + n)
    m = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                m[i][j] = (n - (n - 1) * a) if i == 0 else (1 - a - n)
            elif i == 0 or j == 0:
                m[i][j] = a
            else:
                m[i][j] = Fraction(1)
    return [[pref * x for x in row] for row in m]


def rot_linkmatrix(L: LegendrianData, n: int) -> Fraction:
    """Rotation number after surgery via the linking-matrix route.

    Solves M u = lk exactly by fraction-free elimination, forms
    rot(push-off) - <rot-vector, u>, and independently verifies the
    closed-form inverse by exact multiplication M @ M^-1 = I.
    """
    from .intlinalg import bareiss_solve

    if n < 1:
        raise DomainError("need n >= 1")
    a = L.tb
    if a + n == 0:
        raise DomainError("not a rational homology sphere: tb = -n")
    r = L.rot
    m = linking_matrix(a, n)
    rot_vec = [r] + [r - 1] * (n - 1)
    lk_vec = [a] + [a - 1] * (n - 1)
    u = bareiss_solve(m, lk_vec)
    result = (r - 1) - sum(rv * uv for rv, uv in zip(rot_vec, u))

    minv = linking_matrix_inverse(a, n)
    for i in range(n):
        for j in range(n):
            s = sum(m[i][t] * minv[t][j] for t in range(n))
            assert s == (1 if i == j else 0), "closed-form inverse failed"
    return result


def c1_evaluation_surgery(L: LegendrianData, n: int) -> C1SurgeryEvaluation:
    """Chern-class evaluations on both capped surface classes.

    The surgery-side capped Seifert surface gives y*(rot + n - 1); the
    capping-side surface gives -p*(rot' + 1) with p the order and rot'
    the rotation number after surgery.  The two classes agree up to the
    sign of x + n*y, which is asserted.
    """
    y = L.order
    denom = L.x + n * y
    if denom == 0:
        raise DomainError("not a rational homology sphere: x + n*y = 0")
    f_val = y * (L.rot + n - 1)
    p = order_after_surgery(L, n)
    rot_p = rot_after_surgery(L, n)
    v_val = -p * (rot_p + 1)
    if denom > 0:
        assert f_val == -v_val, (f_val, v_val)
    else:
        assert f_val == v_val, (f_val, v_val)
    return C1SurgeryEvaluation(
        f_tilde=SpincEvaluation(f_val, "F-tilde"),
        v_tilde=SpincEvaluation(v_val, "V-tilde"),
    )


def stabilize(L: LegendrianData, sign) -> LegendrianData:
    """Stabilize: tb drops by 1; rot moves by -1 (negative) or +1 (positive).

    Homological data (order, surface boundary decomposition) is
    unchanged.
    """
    if sign in ("-", -1):
        dr = -1
    elif sign in ("+", 1):
        dr = +1
    else:
        raise DomainError(f"unknown stabilization sign {sign!r}")
    return LegendrianData(
        tb=L.tb - 1,
        rot=L.rot + dr,
        order=L.order,
        components=L.components,
        longitude_coeff=L.longitude_coeff,
        meridian_coeff=L.meridian_coeff,
    )


def twist_insertion_update(L: LegendrianData, strands: int = 2) -> LegendrianData:
    """Invariant update for one full positive twist on two parallel strands.

    tb gains 2 and rot is unchanged.  Only the two-strand
    same-orientation case is supported; no general n-strand formula is
    implemented.
    """
    if strands != 2:
        raise DomainError("only the 2-strand twist update is supported")
    return LegendrianData(
        tb=L.tb + 2,
        rot=L.rot,
        order=L.order,
        components=L.components,
        longitude_coeff=L.longitude_coeff,
        meridian_coeff=L.meridian_coeff,
    )
