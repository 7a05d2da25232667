"""Exact type-A root-system combinatorics on the Cartan algebra of su(N).

Conventions (fixed once, used by every module):

* The Cartan algebra h of su(N) is modelled as Q^{N-1} in coroot
  coordinates: a vector with coords (x_1, .., x_{N-1}) stands for
  2*pi * sum_k x_k e_k, so the central lattice is exactly the set of
  integral coordinate vectors.  All arithmetic is exact rational.
* e_1, .., e_{N-1} are the coroots, f_k = 2 e_k - e_{k-1} - e_{k+1}
  the simple roots (e_0 = e_N = 0), and <f_k, e_l> = delta_{kl}.
* <e_j, e_k> = min(j,k) * (N - max(j,k)) / N, in units of 2*pi.
* Dominance: x <= y iff <y - x, e_k> >= 0 for every k; "<<" is the
  strict variant.
* The negative Weyl chamber C_- is the locus <x, f_k> <= 0 for all k
  (interior: strict).
* exp(2*pi*e_k) is the central element exp(-2*pi*i*k/N) * Id, so an
  integral vector l has center class  -(sum_k k * x_k) mod N.
* Degree weights D_k = 2k(N-k) and D(l) = -sum_k x_k D_k.  A legacy
  variant with D_k = k(N-k) can be requested explicitly; nothing in
  this package uses it by default (the cross-checks in the pipeline
  only close up with the 2k(N-k) normalization).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence


class IntegrityError(RuntimeError):
    """An internal invariant failed; indicates an implementation bug."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not allowed in exact Cartan coordinates")
    return Fraction(value)


@dataclass(frozen=True)
class CartanVector:
    """Point of the Cartan algebra in rescaled coroot coordinates."""

    n: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank parameter must be >= 2, got {self.n}")
        if len(self.coords) != self.n - 1:
            raise ValueError(
                f"expected {self.n - 1} coordinates, got {len(self.coords)}"
            )
        object.__setattr__(
            self, "coords", tuple(_as_fraction(c) for c in self.coords)
        )

    def __add__(self, other: "CartanVector") -> "CartanVector":
        _check_same_rank(self, other)
        return CartanVector(
            self.n, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "CartanVector") -> "CartanVector":
        _check_same_rank(self, other)
        return CartanVector(
            self.n, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "CartanVector":
        return CartanVector(self.n, tuple(-a for a in self.coords))

    def scale(self, c) -> "CartanVector":
        c = _as_fraction(c)
        return CartanVector(self.n, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_integral(self) -> bool:
        """Lattice membership: the exponential is central iff all
        coordinates are integers."""
        return all(a.denominator == 1 for a in self.coords)


def cartan(n: int, coords: Sequence) -> CartanVector:
    return CartanVector(n, tuple(_as_fraction(c) for c in coords))


def zero(n: int) -> CartanVector:
    return CartanVector(n, (Fraction(0),) * (n - 1))


def e_vec(n: int, k: int) -> CartanVector:
    _check_index(n, k)
    return CartanVector(
        n, tuple(Fraction(1 if j == k else 0) for j in range(1, n))
    )


def f_vec(n: int, k: int) -> CartanVector:
    """f_k = 2 e_k - e_{k-1} - e_{k+1}, with e_0 = e_N = 0."""
    _check_index(n, k)
    coords = [Fraction(0)] * (n - 1)
    coords[k - 1] = Fraction(2)
    if k - 2 >= 0:
        coords[k - 2] = Fraction(-1)
    if k < n - 1:
        coords[k] = Fraction(-1)
    return CartanVector(n, tuple(coords))


def e_subset(n: int, indices: Iterable[int]) -> CartanVector:
    """sum of e_i over i in the given subset of {1..N-1}."""
    coords = [Fraction(0)] * (n - 1)
    for i in indices:
        _check_index(n, i)
        coords[i - 1] += 1
    return CartanVector(n, tuple(coords))


def _check_index(n: int, k: int):
    if not 1 <= k <= n - 1:
        raise ValueError(f"index {k} out of range 1..{n - 1}")


def _check_same_rank(x: CartanVector, y: CartanVector):
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} != {y.n}")


def gram_e(n: int, j: int, k: int) -> Fraction:
    """<e_j, e_k> = min(j,k) * (N - max(j,k)) / N."""
    _check_index(n, j)
    _check_index(n, k)
    return Fraction(min(j, k) * (n - max(j, k)), n)


def pair_e(v: CartanVector, k: int) -> Fraction:
    """<v, e_k> in units of 2*pi."""
    _check_index(v.n, k)
    return sum(
        (x * gram_e(v.n, j, k) for j, x in enumerate(v.coords, start=1)),
        Fraction(0),
    )


def pair_f(v: CartanVector, k: int) -> Fraction:
    """<v, f_k> in units of 2*pi; equals the k-th coroot coordinate."""
    _check_index(v.n, k)
    return v.coords[k - 1]


def e_profile(v: CartanVector) -> tuple[Fraction, ...]:
    """All pairings (<v,e_1>, .., <v,e_{N-1}>) at once."""
    return tuple(pair_e(v, k) for k in range(1, v.n))


def dominance_leq(x: CartanVector, y: CartanVector) -> bool:
    """x <= y iff <y - x, e_k> >= 0 for all k."""
    _check_same_rank(x, y)
    d = y - x
    return all(pair_e(d, k) >= 0 for k in range(1, x.n))


def dominance_ll(x: CartanVector, y: CartanVector) -> bool:
    """Strict dominance x << y: <y - x, e_k> > 0 for all k."""
    _check_same_rank(x, y)
    d = y - x
    return all(pair_e(d, k) > 0 for k in range(1, x.n))


class WeylPosition(Enum):
    INTERIOR_MINUS = "interior_minus"
    BOUNDARY_MINUS = "boundary_minus"
    OUTSIDE = "outside"


def weyl_chamber(x: CartanVector) -> WeylPosition:
    """Position of x relative to the negative chamber C_-.

    ``interior_minus``: every <x, f_k> < 0; ``boundary_minus``: every
    <x, f_k> <= 0 with at least one zero; ``outside`` otherwise.
    """
    signs = [pair_f(x, k) for k in range(1, x.n)]
    if all(s < 0 for s in signs):
        return WeylPosition.INTERIOR_MINUS
    if all(s <= 0 for s in signs):
        return WeylPosition.BOUNDARY_MINUS
    return WeylPosition.OUTSIDE


def in_c_minus(x: CartanVector) -> bool:
    return weyl_chamber(x) is not WeylPosition.OUTSIDE


def i_set(x: CartanVector) -> frozenset[int]:
    """I_x = indices with <x, f_k> < 0."""
    return frozenset(k for k in range(1, x.n) if pair_f(x, k) < 0)


def j_positive_set(x: CartanVector) -> frozenset[int]:
    """Indices with <x, f_k> > 0 (empty exactly on C_-)."""
    return frozenset(k for k in range(1, x.n) if pair_f(x, k) > 0)


@dataclass(frozen=True)
class CenterClass:
    """Central element exp(2*pi*i*residue/N) * Id of SU(N)."""

    n: int
    residue: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank parameter must be >= 2, got {self.n}")
        object.__setattr__(self, "residue", self.residue % self.n)

    def __add__(self, other: "CenterClass") -> "CenterClass":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return CenterClass(self.n, self.residue + other.residue)


def _require_integral(l: CartanVector):
    if not l.is_integral():
        raise ValueError(f"lattice operation on non-integral vector {l.coords}")


def center_class(l: CartanVector) -> CenterClass:
    """Center class of exp(l): residue = -(sum_k k * x_k) mod N."""
    _require_integral(l)
    s = sum(k * int(x) for k, x in enumerate(l.coords, start=1))
    return CenterClass(l.n, -s)


@dataclass(frozen=True)
class DegreeWeights:
    """Weights D_1..D_{N-1} entering the degree function D."""

    n: int
    d_k: tuple[int, ...]

    def __post_init__(self):
        if len(self.d_k) != self.n - 1:
            raise ValueError("weight count must be N-1")
        for k, d in enumerate(self.d_k, start=1):
            if d <= 0:
                raise ValueError("degree weights must be positive")
            if d != self.d_k[self.n - k - 1]:
                raise ValueError("degree weights must satisfy D_k = D_{N-k}")

    @classmethod
    def standard(cls, n: int) -> "DegreeWeights":
        """D_k = 2k(N-k), the real dimension of the Grassmannian Gr(k, N)."""
        return cls(n, tuple(2 * k * (n - k) for k in range(1, n)))

    @classmethod
    def halved(cls, n: int) -> "DegreeWeights":
        """Experimental override D_k = k(N-k).  The internal stalk
        cross-check fails with this choice; it exists only so the
        discrepancy can be demonstrated."""
        return cls(n, tuple(k * (n - k) for k in range(1, n)))


def d_degree(l: CartanVector, weights: DegreeWeights | None = None) -> int:
    """D(l) = -sum_k x_k D_k for integral l."""
    _require_integral(l)
    w = weights if weights is not None else DegreeWeights.standard(l.n)
    if w.n != l.n:
        raise ValueError("rank mismatch between vector and weights")
    return -sum(int(x) * d for x, d in zip(l.coords, w.d_k))


def enumerate_lattice(
    z: CenterClass,
    bounds: Sequence[tuple[Fraction | int, Fraction | int]],
) -> list[CartanVector]:
    """All integral vectors in the closed coordinate box with the given
    center class, in lexicographic coordinate order.

    ``bounds`` gives one (lo, hi) pair per coordinate; the box must be
    finite.
    """
    n = z.n
    if len(bounds) != n - 1:
        raise ValueError(f"expected {n - 1} bound pairs, got {len(bounds)}")
    ranges = []
    for lo, hi in bounds:
        if lo is None or hi is None:
            raise ValueError("unbounded box")
        lo_f, hi_f = _as_fraction(lo), _as_fraction(hi)
        lo_i = -((-lo_f.numerator) // lo_f.denominator)  # ceil
        hi_i = hi_f.numerator // hi_f.denominator  # floor
        ranges.append(range(lo_i, hi_i + 1))
    out = []
    for combo in itertools.product(*ranges):
        v = CartanVector(n, tuple(Fraction(c) for c in combo))
        if center_class(v) == z:
            out.append(v)
    out.sort(key=lambda v: v.coords)
    return out


def shevel_witness(x: CartanVector, y: CartanVector) -> int:
    """Some k in I_x with <y - x, e_k> > 0, for x, y in C_- with y > x.

    The search is total: for valid inputs a witness always exists, and
    an exhausted search is reported as an internal invariant violation
    rather than a user error.
    """
    _check_same_rank(x, y)
    _require_integral(x)
    _require_integral(y)
    if not in_c_minus(x) or not in_c_minus(y):
        raise ValueError("both arguments must lie in C_-")
    if x.coords == y.coords:
        raise ValueError("arguments must be distinct")
    if not dominance_leq(x, y):
        raise ValueError("dominance y >= x violated")
    for k in sorted(i_set(x)):
        if pair_e(y - x, k) > 0:
            return k
    raise IntegrityError(
        f"no witness index for x={x.coords}, y={y.coords}; "
        "this contradicts the chamber-walk lemma"
    )
