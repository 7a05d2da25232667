"""Formal complexes of constant sheaves on polyhedral regions of the
Cartan algebra, with a center-class label on every summand.

A ``SheafComplex`` is a finite list of generators; each generator is a
constant sheaf on one region, placed in one total complex degree,
tensored with a graded multiplicity space.  Differential entries are
rational multiples of canonical maps (restrictions onto smaller closed
cones, extensions into larger open lower sets), so stalks and sections
turn the complex into an ordinary finite complex of K-vector spaces
with the same coefficients.

Supported regions (parameters are exact rational Cartan vectors):

* ``UMinusOpen(x)``  {y in interior(C_-) : y << x}
* ``UOpen(x)``       {y : y << x}
* ``KCone(J, l)``    {y : <y - l, e_j> >= 0 for all j in J}
* ``WBox(I, x, eps)``  <y - x, e_k> in [0, eps) on I, < 0 off I

Windowed direct sums over the central lattice truncate to a finite
coordinate box; the apex box is recorded in the metadata, and queries
are exact for every lattice summand inside it.  Certified margins for
specific queries are derived in :mod:`flagsheaf.pipeline`.

Soundness contract for sections: for a generator which is a cone
``KCone(J, l)``, sections over a convex open U are K exactly when the
cone meets U (the intersection is closed in U and convex).  For a
generator ``UMinusOpen(y)``, sections over ``UOpen(x)`` or
``UMinusOpen(x)`` are K exactly when x <= y in dominance order; this
encodes the propagation of such sheaves across the lower boundary and
is the one place where the model imports a sheaf-theoretic fact
instead of re-deriving it.  Higher section cohomology of a single
generator over these sets vanishes (convexity), so the rules above
determine the section complex entirely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .graded import GradedDims
from .linalg import connected_components, rank_triplets
from .root_system import (
    CartanVector,
    CenterClass,
    IntegrityError,
    cartan,
    center_class,
    d_degree,
    dominance_leq,
    e_profile,
    f_vec,
    i_set,
    in_c_minus,
    pair_e,
    pair_f,
)

# ---------------------------------------------------------------------------
# regions


@dataclass(frozen=True)
class UMinusOpen:
    x: CartanVector


@dataclass(frozen=True)
class UOpen:
    x: CartanVector


@dataclass(frozen=True)
class KCone:
    indices: frozenset[int]
    apex: CartanVector

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(self.indices))
        for j in self.indices:
            if not 1 <= j <= self.apex.n - 1:
                raise ValueError(f"cone index {j} out of range")


@dataclass(frozen=True)
class WBox:
    indices: frozenset[int]
    x: CartanVector
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(self.indices))
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.eps <= 0:
            raise ValueError("box width must be positive")


Region = UMinusOpen | UOpen | KCone | WBox


def region_rank(region: Region) -> int:
    if isinstance(region, KCone):
        return region.apex.n
    return region.x.n


@lru_cache(maxsize=None)
def _u_profile(v: CartanVector) -> tuple[Fraction, ...]:
    return e_profile(v)


def region_contains(region: Region, p: CartanVector) -> bool:
    """Exact membership via the defining pairings."""
    n = region_rank(region)
    if p.n != n:
        raise ValueError(f"rank mismatch: region has N={n}, point N={p.n}")
    pu = _u_profile(p)
    if isinstance(region, UMinusOpen):
        xu = _u_profile(region.x)
        return all(c < 0 for c in p.coords) and all(
            pu[k] < xu[k] for k in range(n - 1)
        )
    if isinstance(region, UOpen):
        xu = _u_profile(region.x)
        return all(pu[k] < xu[k] for k in range(n - 1))
    if isinstance(region, KCone):
        au = _u_profile(region.apex)
        return all(pu[j - 1] >= au[j - 1] for j in region.indices)
    if isinstance(region, WBox):
        xu = _u_profile(region.x)
        for k in range(1, n):
            d = pu[k - 1] - xu[k - 1]
            if k in region.indices:
                if not (0 <= d < region.eps):
                    return False
            elif not d < 0:
                return False
        return True
    raise TypeError(f"unknown region kind {type(region).__name__}")


# ---------------------------------------------------------------------------
# rational feasibility (used for cone-vs-UMinusOpen sections)

Constraint = tuple[tuple[Fraction, ...], Fraction, bool]  # coeffs . u (<|<=) rhs


def _feasible(constraints: list[Constraint], nvars: int) -> bool:
    """Fourier-Motzkin feasibility of strict/non-strict inequalities."""
    system = [
        (tuple(Fraction(c) for c in coeffs), Fraction(rhs), strict)
        for coeffs, rhs, strict in constraints
    ]
    for var in range(nvars):
        uppers, lowers, rest = [], [], []
        for coeffs, rhs, strict in system:
            c = coeffs[var]
            if c > 0:
                uppers.append((coeffs, rhs, strict, c))
            elif c < 0:
                lowers.append((coeffs, rhs, strict, c))
            else:
                rest.append((coeffs, rhs, strict))
        for (uc, ur, us, cu), (lc, lr, ls, cl) in itertools.product(
            uppers, lowers
        ):
            coeffs = tuple(
                a / cu - b / cl for a, b in zip(uc, lc)
            )
            rest.append((coeffs, ur / cu - lr / cl, us or ls))
        system = rest
    for _, rhs, strict in system:
        if rhs < 0 or (strict and rhs == 0):
            return False
    return True


def _cone_meets_uminus(cone: KCone, x: CartanVector) -> bool:
    """Nonemptiness of KCone(J, l) & interior(C_-) & {u << x}, exactly."""
    n = cone.apex.n
    au = _u_profile(cone.apex)
    xu = _u_profile(x)
    cons: list[Constraint] = []
    for j in cone.indices:  # u_j >= apex_j
        coeffs = tuple(
            Fraction(-1 if k == j - 1 else 0) for k in range(n - 1)
        )
        cons.append((coeffs, -au[j - 1], False))
    for k in range(n - 1):  # u_k < x_k
        coeffs = tuple(Fraction(1 if i == k else 0) for i in range(n - 1))
        cons.append((coeffs, xu[k], True))
    for m in range(1, n):  # <y, f_m> < 0 in u-coordinates
        coeffs = [Fraction(0)] * (n - 1)
        coeffs[m - 1] += 2
        if m - 2 >= 0:
            coeffs[m - 2] -= 1
        if m < n - 1:
            coeffs[m] -= 1
        cons.append((tuple(coeffs), Fraction(0), True))
    return _feasible(cons, n - 1)


# ---------------------------------------------------------------------------
# the complex


@dataclass(frozen=True)
class SheafGenerator:
    """One summand: (constant sheaf on region) placed in total complex
    degree ``degree``, tensored with the graded space ``mult``.

    A multiplicity entry {delta: m} contributes m basis lines in total
    degree ``degree + delta`` wherever the generator is alive.
    """

    region: Region
    center: CenterClass
    degree: int
    mult: GradedDims = field(default_factory=GradedDims.line)
    label: tuple = ()


def _check_entry_regions(src: SheafGenerator, dst: SheafGenerator):
    """Accept only entries proportional to a canonical nonzero map.

    Closed cones map by restriction onto smaller cones (same apex, a
    larger index set); open lower sets map by extension into larger
    ones (dominance of the parameters).  Either way the map is the
    identity on every stalk both regions contain.
    """
    rs, rd = src.region, dst.region
    if isinstance(rs, KCone) and isinstance(rd, KCone):
        if rs.apex.coords == rd.apex.coords and rs.indices <= rd.indices:
            return
    if isinstance(rs, UMinusOpen) and isinstance(rd, UMinusOpen):
        if dominance_leq(rs.x, rd.x):
            return
    raise ValueError(
        f"no canonical sheaf map supports the entry {rs} -> {rd}"
    )


class SheafComplex:
    """Immutable windowed complex of labelled constant sheaves."""

    def __init__(
        self,
        n: int,
        generators: Sequence[SheafGenerator],
        entries: Sequence[tuple[int, int, Fraction]],
        meta: dict | None = None,
        check: bool = True,
    ):
        self.n = n
        self.generators = tuple(generators)
        self.entries = tuple(
            (int(i), int(j), Fraction(c)) for i, j, c in entries
        )
        self.meta = dict(meta or {})
        if check:
            self.validate()

    def validate(self):
        for gen in self.generators:
            if region_rank(gen.region) != self.n or gen.center.n != self.n:
                raise ValueError("generator rank mismatch")
        for i, j, c in self.entries:
            src, dst = self.generators[i], self.generators[j]
            if src.center != dst.center:
                raise ValueError("differential entry mixes center classes")
            if dst.degree != src.degree + 1:
                raise ValueError("differential entry is not of degree +1")
            if dst.mult != src.mult:
                raise ValueError("differential entry mixes multiplicities")
            if c == 0:
                raise ValueError("zero differential entry")
            _check_entry_regions(src, dst)
        self.verify_dd_zero()

    def verify_dd_zero(self):
        """Symbolic d*d = 0 on generator indices."""
        outgoing: dict[int, list[tuple[int, Fraction]]] = {}
        for i, j, c in self.entries:
            outgoing.setdefault(i, []).append((j, c))
        square: dict[tuple[int, int], Fraction] = {}
        for i, firsts in outgoing.items():
            for j, c1 in firsts:
                for k, c2 in outgoing.get(j, ()):
                    key = (i, k)
                    square[key] = square.get(key, Fraction(0)) + c1 * c2
        bad = {k: v for k, v in square.items() if v != 0}
        if bad:
            raise IntegrityError(f"d*d != 0 on generator pairs {bad}")

    # -- serialization ------------------------------------------------

    SCHEMA = "flagsheaf/sheaf-complex/1"

    def to_json(self) -> dict:
        return {
            "schema": self.SCHEMA,
            "n": self.n,
            "generators": [
                {
                    "region": region_to_json(g.region),
                    "center": g.center.residue,
                    "degree": g.degree,
                    "mult": g.mult.to_json(),
                    "label": [str(part) for part in g.label],
                }
                for g in self.generators
            ],
            "differential": [
                [i, j, str(c)] for i, j, c in self.entries
            ],
            "meta": {k: str(v) for k, v in self.meta.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "SheafComplex":
        if data.get("schema") != cls.SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        n = int(data["n"])
        gens = [
            SheafGenerator(
                region=region_from_json(g["region"], n),
                center=CenterClass(n, int(g["center"])),
                degree=int(g["degree"]),
                mult=GradedDims.from_json(g["mult"]),
                label=tuple(g.get("label", ())),
            )
            for g in data["generators"]
        ]
        entries = [
            (int(i), int(j), Fraction(c)) for i, j, c in data["differential"]
        ]
        return cls(n, gens, entries)


def _coords_json(v: CartanVector) -> list[str]:
    return [str(c) for c in v.coords]


def region_to_json(region: Region) -> dict:
    if isinstance(region, UMinusOpen):
        return {"kind": "u_minus_open", "x": _coords_json(region.x)}
    if isinstance(region, UOpen):
        return {"kind": "u_open", "x": _coords_json(region.x)}
    if isinstance(region, KCone):
        return {
            "kind": "k_cone",
            "indices": sorted(region.indices),
            "apex": _coords_json(region.apex),
        }
    if isinstance(region, WBox):
        return {
            "kind": "w_box",
            "indices": sorted(region.indices),
            "x": _coords_json(region.x),
            "eps": str(region.eps),
        }
    raise TypeError(f"unknown region kind {type(region).__name__}")


def region_from_json(data: dict, n: int) -> Region:
    kind = data["kind"]
    if kind == "u_minus_open":
        return UMinusOpen(cartan(n, [Fraction(c) for c in data["x"]]))
    if kind == "u_open":
        return UOpen(cartan(n, [Fraction(c) for c in data["x"]]))
    if kind == "k_cone":
        return KCone(
            frozenset(data["indices"]),
            cartan(n, [Fraction(c) for c in data["apex"]]),
        )
    if kind == "w_box":
        return WBox(
            frozenset(data["indices"]),
            cartan(n, [Fraction(c) for c in data["x"]]),
            Fraction(data["eps"]),
        )
    raise ValueError(f"unknown region kind {kind!r}")


# ---------------------------------------------------------------------------
# the windowed standard complex Y

LatticeBox = tuple[tuple[int, int], ...]


def _box_points(n: int, window: LatticeBox):
    if len(window) != n - 1:
        raise ValueError(f"window must have {n - 1} coordinate ranges")
    ranges = [range(lo, hi + 1) for lo, hi in window]
    if any(len(r) == 0 for r in ranges):
        raise ValueError("empty window")
    for combo in itertools.product(*ranges):
        yield cartan(n, combo)


def _subset_sign(j_small: frozenset[int], added: int) -> int:
    """(-1)**(number of elements of the larger subset below ``added``)."""
    sigma = sum(1 for x in j_small if x < added)
    return -1 if sigma % 2 else 1


def build_standard_complex(n: int, window: LatticeBox) -> SheafComplex:
    """Windowed standard complex: for every subset J of {1..N-1} and
    every lattice l in the window with <l, f_i> <= 0 off J, one cone
    generator K(J, l) in total degree |J| - D(l) at center exp(l),
    with differential the signed restrictions J -> J + {e}."""
    all_indices = list(range(1, n))
    generators: list[SheafGenerator] = []
    index: dict[tuple[tuple[Fraction, ...], frozenset[int]], int] = {}
    for l in _box_points(n, window):
        jl = frozenset(k for k in all_indices if pair_f(l, k) > 0)
        cc = center_class(l)
        dl = d_degree(l)
        for r in range(n):
            for combo in itertools.combinations(all_indices, r):
                j = frozenset(combo)
                if not jl <= j:
                    continue
                gen = SheafGenerator(
                    region=KCone(j, l),
                    center=cc,
                    degree=len(j) - dl,
                    label=("std", tuple(sorted(j)), l.coords),
                )
                index[(l.coords, j)] = len(generators)
                generators.append(gen)
    entries: list[tuple[int, int, Fraction]] = []
    for (coords, j1), i in index.items():
        for added in all_indices:
            if added in j1:
                continue
            j2 = j1 | {added}
            key = (coords, j2)
            if key in index:
                entries.append(
                    (i, index[key], Fraction(_subset_sign(j2, added)))
                )
    return SheafComplex(
        n,
        generators,
        entries,
        meta={"kind": "standard", "window": window},
    )


# ---------------------------------------------------------------------------
# finite complexes and exact cohomology


class FiniteComplex:
    """Finite complex of K-vector spaces with rational differentials.

    Basis elements carry a total degree; entries are (src, dst, coeff)
    with degree(dst) = degree(src) + 1.
    """

    def __init__(
        self,
        degrees: Sequence[int],
        entries: Sequence[tuple[int, int, Fraction]],
        labels: Sequence[tuple] | None = None,
    ):
        self.degrees = tuple(int(d) for d in degrees)
        self.entries = tuple(
            (int(i), int(j), Fraction(c)) for i, j, c in entries
        )
        self.labels = tuple(labels) if labels is not None else None
        for i, j, c in self.entries:
            if self.degrees[j] != self.degrees[i] + 1:
                raise ValueError("entry is not of degree +1")

    def dims(self) -> GradedDims:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return GradedDims(out)

    def _verify_dd_zero(self):
        outgoing: dict[int, list[tuple[int, Fraction]]] = {}
        for i, j, c in self.entries:
            outgoing.setdefault(i, []).append((j, c))
        square: dict[tuple[int, int], Fraction] = {}
        for i, firsts in outgoing.items():
            for j, c1 in firsts:
                for k, c2 in outgoing.get(j, ()):
                    key = (i, k)
                    square[key] = square.get(key, Fraction(0)) + c1 * c2
        bad = {k: v for k, v in square.items() if v != 0}
        if bad:
            raise IntegrityError(f"d*d != 0 on basis pairs {bad}")

    def cohomology(self) -> GradedDims:
        """dim H^k = dim_k - rank d_k - rank d_{k-1}, by exact
        fraction-free elimination on connected components."""
        self._verify_dd_zero()
        comps = connected_components(
            len(self.degrees), [(i, j) for i, j, _ in self.entries]
        )
        by_node: dict[int, int] = {}
        for ci, comp in enumerate(comps):
            for node in comp:
                by_node[node] = ci
        comp_entries: dict[int, list[tuple[int, int, Fraction]]] = {}
        for i, j, c in self.entries:
            comp_entries.setdefault(by_node[i], []).append((i, j, c))
        result: dict[int, int] = {}
        for ci, comp in enumerate(comps):
            local_dims: dict[int, int] = {}
            local_pos: dict[int, int] = {}
            for node in comp:
                d = self.degrees[node]
                local_pos[node] = local_dims.get(d, 0)
                local_dims[d] = local_dims.get(d, 0) + 1
            mats: dict[int, list[tuple[int, int, Fraction]]] = {}
            for i, j, c in comp_entries.get(ci, ()):
                mats.setdefault(self.degrees[i], []).append(
                    (local_pos[i], local_pos[j], c)
                )
            ranks: dict[int, int] = {}
            for d, triplets in mats.items():
                ranks[d] = rank_triplets(
                    triplets, local_dims[d], local_dims.get(d + 1, 0)
                )
            for d, dim in local_dims.items():
                h = dim - ranks.get(d, 0) - ranks.get(d - 1, 0)
                if h:
                    result[d] = result.get(d, 0) + h
        return GradedDims(result)


def cohomology_dims(c: FiniteComplex) -> GradedDims:
    return c.cohomology()


# ---------------------------------------------------------------------------
# stalks, sections, corner complexes


def _expand_members(
    s: SheafComplex,
    alive: Sequence[bool],
    degree_offset: Sequence[int] | None = None,
) -> FiniteComplex:
    """Finite complex spanned by the alive generators (multiplicity
    expanded), with the induced differential entries."""
    offsets = degree_offset or [0] * len(s.generators)
    basis_of_gen: dict[int, list[int]] = {}
    degrees: list[int] = []
    labels: list[tuple] = []
    for gi, gen in enumerate(s.generators):
        if not alive[gi]:
            continue
        ids = []
        for delta, count in gen.mult.items():
            for copy in range(count):
                ids.append(len(degrees))
                degrees.append(gen.degree + delta + offsets[gi])
                labels.append(gen.label + (delta, copy))
        basis_of_gen[gi] = ids
    entries = []
    for i, j, c in s.entries:
        if i in basis_of_gen and j in basis_of_gen:
            for a, b in zip(basis_of_gen[i], basis_of_gen[j]):
                entries.append((a, b, c))
    return FiniteComplex(degrees, entries, labels)


def stalk_complex(
    s: SheafComplex, z: CenterClass, p: CartanVector
) -> FiniteComplex:
    """Stalk at p of the center-z part: keep generators whose region
    contains p; restriction entries become identity scalars."""
    if p.n != s.n:
        raise ValueError("rank mismatch")
    alive = [
        gen.center == z and region_contains(gen.region, p)
        for gen in s.generators
    ]
    return _expand_members(s, alive)


def _section_value(region: Region, u: UOpen | UMinusOpen) -> bool:
    """Whether RGamma(U; K_region) = K (degree 0), per the module
    soundness contract."""
    if isinstance(region, UMinusOpen):
        return dominance_leq(u.x, region.x)
    if isinstance(region, KCone):
        if isinstance(u, UOpen):
            xu = _u_profile(u.x)
            au = _u_profile(region.apex)
            return all(xu[j - 1] > au[j - 1] for j in region.indices)
        return _cone_meets_uminus(region, u.x)
    raise ValueError(
        f"unsupported generator region {type(region).__name__} in sections"
    )


def sections_complex(
    s: SheafComplex, z: CenterClass, u: UOpen | UMinusOpen
) -> FiniteComplex:
    """Sections over a lower set U of the center-z part."""
    if not isinstance(u, (UOpen, UMinusOpen)):
        raise ValueError("sections are supported over UOpen/UMinusOpen only")
    if region_rank(u) != s.n:
        raise ValueError("rank mismatch")
    alive = [
        gen.center == z and _section_value(gen.region, u)
        for gen in s.generators
    ]
    return _expand_members(s, alive)


def select_epsilon(points: Sequence[CartanVector], l: CartanVector) -> Fraction:
    """Return the verified corner width 1/2 for a finite lattice family
    in C_- with one fixed center class.

    For every other member l', either some k in I_l has
    <l' - l, e_k> outside [0, eps], or some k off I_l has
    <l', e_k> < <l, e_k>.  Differences within a center class lie in
    the root lattice, so their coroot pairings are integers and any
    eps in (0, 1) works; the disjunction is re-verified and a failure
    is an internal contradiction, not an input error.
    """
    eps = Fraction(1, 2)
    if not any(p.coords == l.coords for p in points):
        raise ValueError("base point is not a member of the family")
    for p in points:
        if not (p.is_integral() and in_c_minus(p)):
            raise ValueError("family must consist of lattice points in C_-")
        if center_class(p) != center_class(l):
            raise ValueError("family must have a single center class")
    il = i_set(l)
    off = [k for k in range(1, l.n) if k not in il]
    for q in points:
        if q.coords == l.coords:
            continue
        first = any(
            not 0 <= pair_e(q - l, k) <= eps for k in sorted(il)
        )
        second = any(pair_e(q, k) < pair_e(l, k) for k in off)
        if not (first or second):
            raise IntegrityError(
                f"corner separation failed for l={l.coords}, l'={q.coords}"
            )
    return eps


def rhom_generators(g1: UMinusOpen, g2: UMinusOpen) -> GradedDims:
    """Morphisms between lower-set generators: one line in degree 0
    when the sources dominate, nothing otherwise."""
    if dominance_leq(g1.x, g2.x):
        return GradedDims.line(0)
    return GradedDims.empty()


def jump_complex(
    s: SheafComplex,
    indices: Iterable[int],
    m: CartanVector,
    eps: Fraction = Fraction(1, 2),
) -> FiniteComplex:
    """Corner complex computing the jump functor at (I, m).

    Total complex over corners L inside I of sections over
    UOpen(m + eps * sum_{k in L} f_k), the corner placed in degree
    -|L| (the |I|-shift of the jump functor is already folded in).
    Koszul signs on the corner cube, (-1)^{|L|} on the inner
    differential.
    """
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(
            f"corner width {eps} outside the verified range (0, 1)"
        )
    if m.n != s.n:
        raise ValueError("rank mismatch")
    idx = sorted(set(indices))
    for k in idx:
        if not 1 <= k <= s.n - 1:
            raise ValueError(f"index {k} out of range")
    for gen in s.generators:
        if not isinstance(gen.region, (KCone, UMinusOpen)):
            raise ValueError(
                "jump functor requires cone or lower-set generators"
            )

    corners = [
        frozenset(c)
        for r in range(len(idx) + 1)
        for c in itertools.combinations(idx, r)
    ]
    corner_point = {
        corner: sum(
            (f_vec(s.n, k).scale(eps) for k in corner), start=m
        )
        for corner in corners
    }
    corner_u = {c: UOpen(corner_point[c]) for c in corners}

    alive: dict[tuple[frozenset[int], int], list[int]] = {}
    degrees: list[int] = []
    labels: list[tuple] = []
    for corner in corners:
        u = corner_u[corner]
        for gi, gen in enumerate(s.generators):
            if not _section_value(gen.region, u):
                continue
            ids = []
            for delta, count in gen.mult.items():
                for copy in range(count):
                    ids.append(len(degrees))
                    degrees.append(gen.degree + delta - len(corner))
                    labels.append(
                        (tuple(sorted(corner)),) + gen.label + (delta, copy)
                    )
            alive[(corner, gi)] = ids

    entries: list[tuple[int, int, Fraction]] = []
    for corner in corners:
        sign_inner = Fraction(-1 if len(corner) % 2 else 1)
        for i, j, c in s.entries:
            src = alive.get((corner, i))
            dst = alive.get((corner, j))
            if src and dst:
                for a, b in zip(src, dst):
                    entries.append((a, b, c * sign_inner))
        for k in sorted(corner):
            smaller = corner - {k}
            sign = Fraction(
                -1 if sum(1 for x in corner if x < k) % 2 else 1
            )
            for gi in range(len(s.generators)):
                src = alive.get((corner, gi))
                dst = alive.get((smaller, gi))
                if src and dst:
                    for a, b in zip(src, dst):
                        entries.append((a, b, sign))
    return FiniteComplex(degrees, entries, labels)


def jump_graded(
    s: SheafComplex,
    indices: Iterable[int],
    m: CartanVector,
    eps: Fraction = Fraction(1, 2),
) -> GradedDims:
    """Graded cohomology of the jump functor's corner complex."""
    return jump_complex(s, indices, m, eps).cohomology()
