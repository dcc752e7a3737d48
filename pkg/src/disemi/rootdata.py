"""Root systems and weight combinatorics for the classical families A-D.

Conventions
-----------
Roots are stored by their coordinates in the simple-root basis, weights
by their coordinates in the fundamental-weight basis.  The Cartan matrix
is A[i][j] = <alpha_i, alpha_j^vee>, so a Chevalley basis satisfies
[h_i, e_j] = A[j][i] e_j.  Long roots are normalised to squared length 2.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

FAMILIES = ("A", "B", "C", "D")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class SimpleType:
    """One simple classical type, e.g. SimpleType('A', 2) for sl3."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(
                "unsupported family %r: only the classical families A, B, C, D "
                "are implemented (exceptional types are out of scope)" % (self.family,))
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise ValueError("rank %r invalid for family %s (minimum %d)"
                             % (self.rank, self.family, _MIN_RANK[self.family]))

    def __str__(self):
        return "%s%d" % (self.family, self.rank)

    @property
    def algebra_dim(self):
        l = self.rank
        if self.family == "A":
            return l * (l + 2)
        if self.family in ("B", "C"):
            return l * (2 * l + 1)
        return l * (2 * l - 1)

    @property
    def natural_dim(self):
        l = self.rank
        if self.family == "A":
            return l + 1
        if self.family == "B":
            return 2 * l + 1
        return 2 * l


@dataclass(frozen=True)
class DominantWeight:
    """A dominant integral weight in fundamental coordinates."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if any(c < 0 for c in self.coords):
            raise ValueError("dominant weight needs non-negative coordinates")

    def valid_for(self, t):
        return len(self.coords) == t.rank

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def as_coords(t, lam):
    """Coerce a DominantWeight or raw coordinate sequence for type t."""
    coords = lam.coords if isinstance(lam, DominantWeight) else tuple(int(c) for c in lam)
    if len(coords) != t.rank:
        raise ValueError("weight %r has %d coordinates, type %s has rank %d"
                         % (coords, len(coords), t, t.rank))
    if any(c < 0 for c in coords):
        raise ValueError("weight %r is not dominant" % (coords,))
    return coords


def fundamental(t, k):
    """The k-th fundamental weight of t, 1-indexed."""
    if not 1 <= k <= t.rank:
        raise ValueError("fundamental weight index %d out of range for %s" % (k, t))
    return tuple(1 if i == k - 1 else 0 for i in range(t.rank))


def zero_weight(t):
    return (0,) * t.rank


@dataclass(frozen=True)
class RootSystem:
    simple_roots: tuple      # unit vectors in the simple-root basis
    positive_roots: tuple    # all positive roots, simple-root coordinates
    cartan_matrix: tuple     # A[i][j] = <alpha_i, alpha_j^vee>
    rho: tuple               # half-sum of positive roots, fundamental coords


@lru_cache(maxsize=None)
def cartan_matrix(t):
    l = t.rank
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
    fam = t.family
    chain = l if fam != "D" else l - 1
    for i in range(chain - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    if fam == "B" and l >= 2:
        # last simple root short: <alpha_{l-1}, alpha_l^vee> = -2
        a[l - 2][l - 1] = -2
        a[l - 1][l - 2] = -1
    elif fam == "C" and l >= 2:
        # last simple root long
        a[l - 2][l - 1] = -1
        a[l - 1][l - 2] = -2
    elif fam == "D":
        a[l - 3][l - 1] = -1
        a[l - 1][l - 3] = -1
    return tuple(tuple(row) for row in a)


def _half_lengths(t):
    """(alpha_i, alpha_i)/2 per simple root, long roots normalised to 2."""
    l = t.rank
    if t.family == "B":
        return [1] * (l - 1) + [Fraction(1, 2)]
    if t.family == "C":
        return [Fraction(1, 2)] * (l - 1) + [1]
    return [1] * l


@lru_cache(maxsize=None)
def root_system(t):
    """The root system of t, positive roots found by reflection closure."""
    l = t.rank
    a = cartan_matrix(t)
    simple = tuple(tuple(1 if i == j else 0 for j in range(l)) for i in range(l))
    roots = set(simple) | set(tuple(-x for x in r) for r in simple)
    frontier = set(roots)
    while frontier:
        new = set()
        for r in frontier:
            for i in range(l):
                # s_i(r) = r - <r, alpha_i^vee> alpha_i
                pairing = sum(r[j] * a[j][i] for j in range(l))
                img = tuple(x - pairing * (1 if j == i else 0)
                            for j, x in enumerate(r))
                if img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    positive = sorted(r for r in roots if all(x >= 0 for x in r))
    positive.sort(key=lambda r: (sum(r), r))
    counts = {"A": l * (l + 1) // 2, "B": l * l, "C": l * l, "D": l * (l - 1)}
    if len(positive) != counts[t.family]:
        raise AssertionError("positive root count %d does not match the closed "
                             "formula %d for %s" % (len(positive), counts[t.family], t))
    return RootSystem(simple_roots=simple,
                      positive_roots=tuple(positive),
                      cartan_matrix=a,
                      rho=(1,) * l)


def num_positive_roots(t):
    return len(root_system(t).positive_roots)


def weyl_dim(t, lam):
    """Dimension of the irreducible module with highest weight lam.

    Evaluates the Weyl dimension formula over exact rationals; for a
    positive root alpha = sum c_j alpha_j and lam = sum m_j omega_j,
    (lam + rho, alpha) = sum_j c_j d_j (m_j + 1) with d_j the half
    squared root lengths.
    """
    coords = as_coords(t, lam)
    rs = root_system(t)
    d = _half_lengths(t)
    num = 1
    den = 1
    for alpha in rs.positive_roots:
        num *= sum(c * dj * (m + 1) for c, dj, m in zip(alpha, d, coords) if c)
        den *= sum(c * dj for c, dj in zip(alpha, d) if c)
    dim = Fraction(num) / den
    if dim.denominator != 1:
        raise AssertionError("non-integral Weyl dimension for %s, %r" % (t, coords))
    return int(dim)


def dual_weight(t, lam):
    """Highest weight of the dual module, i.e. -w0(lam)."""
    coords = as_coords(t, lam)
    l = t.rank
    if t.family == "A":
        return tuple(reversed(coords))
    if t.family == "D" and l % 2 == 1:
        # odd-rank D: the diagram flip swaps the two spin nodes
        return coords[: l - 2] + (coords[l - 1], coords[l - 2])
    return coords
