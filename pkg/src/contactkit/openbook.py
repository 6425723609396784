"""Open books as homological objects.

A page P of genus g with r boundary components carries H1(P) of rank
k = 2g + r - 1 with a fixed basis: symplectic pairs x1,y1,...,xg,yg
followed by boundary-parallel classes d1,...,d_{r-1} (d_j parallel to
boundary component j; component 0 is the "outer" one, with class
-(d1+...+d_{r-1})).  H1(P, dP) carries the dual basis of arcs, so the
arc/curve intersection pairing is the identity matrix.

Monodromies are words of Dehn twists recorded by the homology classes
of their twisting curves.  A right-handed twist along a curve c acts on
classes by the transvection z -> z + (c.z) c; this sign convention is
fixed once here (it makes a twist along a curve meeting z once
positively add +c).  Three matrices are tracked per word: the action on
H1(P), the action on H1(P, dP), and the difference map
Z -> word(Z) - Z from H1(P, dP) to H1(P), whose cokernel computes the
first homology of the open-book 3-manifold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .intlinalg import SmithNormalForm, identity, mat_mul, mat_vec, minimal_multiple_in_image

__all__ = [
    "PageSurface",
    "OpenBook",
    "TwoChain",
    "boundary_class",
    "twist_action",
    "word_maps",
    "cap_off",
    "positive_stabilize",
    "surgery_monodromy",
    "h1_total_space",
    "order_in_total_space",
    "euler_measure",
    "rot_from_euler",
]


@dataclass(frozen=True)
class PageSurface:
    """Compact oriented surface with boundary, with its fixed H1 bases."""

    genus: int
    boundary_count: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 1:
            raise DomainError("need genus >= 0 and at least one boundary component")

    @property
    def rank(self) -> int:
        return 2 * self.genus + self.boundary_count - 1

    def basis_labels(self):
        labels = []
        for i in range(self.genus):
            labels += [f"x{i + 1}", f"y{i + 1}"]
        labels += [f"d{j}" for j in range(1, self.boundary_count)]
        return labels

    def intersection_form(self):
        """Skew pairing on H1(P): unit symplectic blocks, d_j central."""
        k = self.rank
        om = [[0] * k for _ in range(k)]
        for i in range(self.genus):
            om[2 * i][2 * i + 1] = 1
            om[2 * i + 1][2 * i] = -1
        return om

    def pairing_matrix(self):
        """Arc basis of H1(P,dP) against curve basis of H1(P): identity."""
        return identity(self.rank)


def boundary_class(page: PageSurface, index: int):
    """H1 class of the oriented boundary component ``index``."""
    if not 0 <= index < page.boundary_count:
        raise DomainError(f"no boundary component {index}")
    k = page.rank
    v = [0] * k
    if index == 0:
        for j in range(page.boundary_count - 1):
            v[2 * page.genus + j] = -1
    else:
        v[2 * page.genus + index - 1] = 1
    return v


@dataclass(frozen=True)
class OpenBook:
    """Page plus monodromy word; letters are applied first to last."""

    page: PageSurface
    word: tuple = ()  # tuple of (class vector tuple, sign in {+1,-1})

    def __post_init__(self):
        k = self.page.rank
        norm = []
        for vec, sign in self.word:
            vec = tuple(int(x) for x in vec)
            if len(vec) != k:
                raise DomainError("twist class has wrong length for this page")
            if sign not in (1, -1):
                raise DomainError(f"twist sign must be +-1, got {sign}")
            norm.append((vec, sign))
        object.__setattr__(self, "word", tuple(norm))

    def to_json(self):
        return {
            "genus": self.page.genus,
            "boundaries": self.page.boundary_count,
            "monodromy": [{"class": list(v), "sign": s} for v, s in self.word],
        }

    @classmethod
    def from_json(cls, d):
        page = PageSurface(d["genus"], d["boundaries"])
        word = tuple((tuple(l["class"]), l["sign"]) for l in d["monodromy"])
        return cls(page, word)


def _check_primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g != 1:
        raise DomainError(f"twist class {vec} is not primitive")


def _letter_maps(page: PageSurface, vec, sign):
    """(T, R, D) for a single twist: H1 action, relative action, difference."""
    _check_primitive(vec)
    k = page.rank
    om = page.intersection_form()
    # w[i] = (c . e_i) with c = vec: pairing row used by the transvection
    w = [sum(vec[m] * om[m][i] for m in range(k)) for i in range(k)]
    t = identity(k)
    r = identity(k)
    d = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            t[j][i] += sign * vec[j] * w[i]
            # relative classes: arc A_i crosses c with sign -vec[i]
            r[j][i] += sign * (-vec[i]) * w[j]
            d[j][i] += sign * (-vec[i]) * vec[j]
    return t, r, d


def word_maps(page: PageSurface, word):
    """Compose a twist word into (H1 action, relative action, difference map)."""
    k = page.rank
    t_total = identity(k)
    r_total = identity(k)
    d_total = [[0] * k for _ in range(k)]
    for vec, sign in word:
        t, r, d = _letter_maps(page, vec, sign)
        t_total = mat_mul(t, t_total)
        d_total = [
            [d_total[i][j] + sum(d[i][m] * r_total[m][j] for m in range(k)) for j in range(k)]
            for i in range(k)
        ]
        r_total = mat_mul(r, r_total)
    return t_total, r_total, d_total


def twist_action(ob_or_page, word=None):
    """Composite H1(P) action matrix of a twist word."""
    if word is None:
        page, word = ob_or_page.page, ob_or_page.word
    else:
        page = ob_or_page
    return word_maps(page, word)[0]


def cap_off(ob: OpenBook, boundary_index: int) -> OpenBook:
    """Glue a disk to the chosen boundary component.

    The class of that component dies; twist letters whose class becomes
    zero are dropped (such curves bound once the disk is glued, so
    their homological action is trivial).  Capping the last boundary is
    unsupported (closed pages are out of scope).
    """
    page = ob.page
    r = page.boundary_count
    if r < 2:
        raise DomainError("cannot cap the last boundary component")
    if not 0 <= boundary_index < r:
        raise DomainError(f"no boundary component {boundary_index}")
    g = page.genus
    new_page = PageSurface(g, r - 1)
    k, k_new = page.rank, new_page.rank

    def quot(vec):
        out = [0] * k_new
        for i in range(2 * g):
            out[i] += vec[i]
        if boundary_index == 0:
            # boundaries renumber j -> j-1; old component 1 is the new outer,
            # so its class becomes minus the sum of the remaining d's
            for j in range(1, r):
                coeff = vec[2 * g + j - 1]
                if j == 1:
                    for m in range(r - 2):
                        out[2 * g + m] -= coeff
                else:
                    out[2 * g + j - 2] += coeff
        else:
            for j in range(1, r):
                if j == boundary_index:
                    continue
                jj = j if j < boundary_index else j - 1
                out[2 * g + jj - 1] += vec[2 * g + j - 1]
        return out

    new_word = []
    for vec, sign in ob.word:
        q = quot(list(vec))
        if any(q):
            new_word.append((tuple(q), sign))
    return OpenBook(new_page, tuple(new_word))


def _stabilization_data(page: PageSurface, at_boundary: int):
    """Embedding and distinguished classes for a boundary-split stabilization.

    Attaching the new 1-handle with both feet on component ``at_boundary``
    splits it into a remnant (keeping its index) and a new component B
    (last index).  Returns (new_page, embed, k_class, b_class) where
    ``embed`` maps old classes into the new page, ``k_class`` is the
    stabilizing curve's class (parallel to the remnant) and ``b_class``
    the new boundary's class.
    """
    g, r = page.genus, page.boundary_count
    if not 0 <= at_boundary < r:
        raise DomainError(f"no boundary component {at_boundary}")
    new_page = PageSurface(g, r + 1)
    k, k_new = page.rank, new_page.rank

    def embed(vec):
        out = [0] * k_new
        for i in range(2 * g):
            out[i] = vec[i]
        for j in range(1, r):
            out[2 * g + j - 1] = vec[2 * g + j - 1]
        if at_boundary >= 1:
            # old class of the split component now means remnant + B
            out[2 * g + r - 1] = vec[2 * g + at_boundary - 1]
        return out

    k_class = boundary_class(new_page, at_boundary)
    b_class = boundary_class(new_page, r)
    return new_page, embed, k_class, b_class


def positive_stabilize(ob: OpenBook, at_boundary: int = 0) -> OpenBook:
    """Attach a 1-handle at a boundary component, plus the right twist over it.

    H1 rank grows by one; the new boundary component gets the last
    index.  Capping that component off again recovers the original
    H1 action.
    """
    new_page, embed, k_class, _ = _stabilization_data(ob.page, at_boundary)
    word = [(tuple(embed(list(v))), s) for v, s in ob.word]
    word.append((tuple(k_class), 1))
    return OpenBook(new_page, tuple(word))


def surgery_monodromy(ob: OpenBook, L, n: int, at_boundary: int) -> OpenBook:
    """Open book of contact +n surgery along a boundary-parallel Legendrian.

    ``L`` must be the class of the boundary component ``at_boundary``
    (the knot runs parallel to that binding).  The page is stabilized
    once so the negatively stabilized knot is parallel to a new binding
    B (always the last boundary index of the result); the monodromy
    gains a right twist over the handle, a left twist along L, and
    n - 1 right twists along the stabilized knot.
    """
    if n < 1:
        raise DomainError("surgery coefficient n must be a positive integer")
    if list(L) != boundary_class(ob.page, at_boundary):
        raise DomainError("L must be oriented parallel to the chosen binding")
    new_page, embed, k_class, b_class = _stabilization_data(ob.page, at_boundary)
    l_new = embed(list(L))
    l_stab = [a - b for a, b in zip(l_new, k_class)]
    assert l_stab == b_class, "stabilized knot should be parallel to the new binding"
    word = [(tuple(embed(list(v))), s) for v, s in ob.word]
    word.append((tuple(k_class), 1))
    word.append((tuple(l_new), -1))
    word.extend([(tuple(l_stab), 1)] * (n - 1))
    return OpenBook(new_page, tuple(word))


def h1_total_space(ob: OpenBook):
    """First homology of the open-book 3-manifold.

    Computed as the cokernel of the difference map on relative classes;
    returns (torsion invariant factors, free rank).
    """
    _, _, d = word_maps(ob.page, ob.word)
    if ob.page.rank == 0:
        return [], 0
    return SmithNormalForm(d).invariant_factors()


def is_rational_homology_sphere(ob: OpenBook) -> bool:
    _, free = h1_total_space(ob)
    return free == 0


def order_in_total_space(ob: OpenBook, L):
    """Order of a page curve class in the 3-manifold, with witness.

    Returns (p, witness) where p >= 1 is minimal with p*[L] in the
    image of the difference map and the witness satisfies
    difference(witness) = p*[L] exactly; (None, None) means infinite
    order.
    """
    _, _, d = word_maps(ob.page, ob.word)
    L = [int(x) for x in L]
    p, witness = minimal_multiple_in_image(d, L)
    if p is None:
        return None, None
    check = mat_vec(d, witness)
    assert check == [p * x for x in L], "witness verification failed"
    return p, witness


# ---------------------------------------------------------------------------
# Two-chains and Euler measure


@dataclass(frozen=True)
class TwoChain:
    """Region multiplicities with per-region Euler/corner data.

    ``regions`` is a sequence of (multiplicity, euler_characteristic,
    corner_count) triples; the optional declared boundary is kept for
    callers that want to cross-check against curve data.
    """

    regions: tuple
    declared_boundary: tuple = field(default=())

    @classmethod
    def from_json(cls, d):
        regions = tuple((r["mult"], r["chi"], r["corners"]) for r in d["regions"])
        return cls(regions, tuple(d.get("boundary", ())))


def euler_measure(chain: TwoChain) -> Fraction:
    """Sum of multiplicity * (chi - corners/4) over regions."""
    total = Fraction(0)
    for mult, chi, corners in chain.regions:
        total += mult * (Fraction(chi) - Fraction(corners, 4))
    return total


def rot_from_euler(chain: TwoChain, p: int) -> Fraction:
    """Rational rotation number from a bounding two-chain of order p."""
    if p == 0:
        raise DomainError("order must be nonzero")
    return euler_measure(chain) / p
