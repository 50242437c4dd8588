"""Hom-space dimensions between indecomposables, their biadditive
extension to objects, the difference data attached to a same-type pair
(multiplicity deltas and hom deltas), the finite test set that decides
the hom order, and the four-term mesh identity that recovers
multiplicity deltas from hom deltas.

The dimension of the morphism space between two indecomposables is a
closed formula in the parameters, built from truncated minima:

==========  ===============  ===========  =============================  ===============
X \\ Y       P0(m)            P2(m)        B2(m,r)                        P1(m)
==========  ===============  ===========  =============================  ===============
P0(l)       min(l,m)         min(l,m)     min(l,m)+min(l,r)              min(l,m)
P2(l)       min(l-2,m)       min(l,m)     min(l-1,m)+min(l-1,r)          min(l-1,m)
B2(l,t)     min(l-1,m)       min(l,m)     min(l-1,m)+min(t,m)            min(l-1,m)
            +min(t-1,m)      +min(t,m)    +min(l-1,r)+min(t,r)           +min(t,m)
                                          -[l>m and t<=r]
P1(l)       min(l-1,m)       min(l,m)     min(l,m)+min(l-1,r)            min(l,m)
==========  ===============  ===========  =============================  ===============

The bipicket formulas remain valid at the boundary parameter r = m - 1,
where they agree with the sum over the pair ``P2(m) + P0(m-1)``; this is
what makes the band coordinates below consistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import TypeMismatch
from .objects import B2, P0, P1, P2, Indecomposable, S2Object, object_type
from .partitions import Partition


def table_entry(xkind: str, xl: int, xt: int, ykind: str, ym: int, yr: int) -> int:
    """Raw table formula; bipicket parameters may take the boundary
    value t = l - 1 (resp. r = m - 1), standing for the ``P2 + P0`` pair."""
    if xkind == "P0":
        if ykind == "B2":
            return min(xl, ym) + min(xl, yr)
        return min(xl, ym)
    if xkind == "P2":
        if ykind == "P0":
            return min(xl - 2, ym)
        if ykind == "P2":
            return min(xl, ym)
        if ykind == "B2":
            return min(xl - 1, ym) + min(xl - 1, yr)
        return min(xl - 1, ym)
    if xkind == "B2":
        if ykind == "P0":
            return min(xl - 1, ym) + min(xt - 1, ym)
        if ykind == "P2":
            return min(xl, ym) + min(xt, ym)
        if ykind == "B2":
            corr = 1 if (xl > ym and xt <= yr) else 0
            return min(xl - 1, ym) + min(xt, ym) + min(xl - 1, yr) + min(xt, yr) - corr
        return min(xl - 1, ym) + min(xt, ym)
    if xkind == "P1":
        if ykind == "P0":
            return min(xl - 1, ym)
        if ykind == "P2":
            return min(xl, ym)
        if ykind == "B2":
            return min(xl, ym) + min(xl - 1, yr)
        return min(xl, ym)
    raise ValueError(f"unknown kind {xkind!r}")


@lru_cache(maxsize=None)
def hom_indec(x: Indecomposable, y: Indecomposable) -> int:
    """Dimension of the space of morphisms from x to y."""
    return table_entry(x.kind, x.m, x.r, y.kind, y.m, y.r)


@lru_cache(maxsize=None)
def _hom_against(x: Indecomposable, obj: S2Object) -> int:
    return sum(hom_indec(x, s) for s in obj.summands)


def hom_obj(a: S2Object, b: S2Object) -> int:
    """Morphism-space dimension between objects, biadditive in both."""
    return sum(_hom_against(s, b) for s in a.summands)


def _require_same_type(y: S2Object, z: S2Object) -> Partition:
    ty, tz = object_type(y), object_type(z)
    if ty != tz:
        raise TypeMismatch(
            f"objects have types ({ty[0].to_text()};{ty[1].to_text()}) and ({tz[0].to_text()};{tz[1].to_text()})"
        )
    return ty[0]


def delta_hom(y: S2Object, z: S2Object, x: Indecomposable) -> int:
    """[x, z] - [x, y] for same-type objects y, z."""
    _require_same_type(y, z)
    return _hom_against(x, z) - _hom_against(x, y)


def delta_mult(y: S2Object, z: S2Object, x: Indecomposable) -> int:
    """Multiplicity of x in z minus its multiplicity in y."""
    _require_same_type(y, z)
    return z.multiplicity(x) - y.multiplicity(x)


def test_set(beta: Partition, bound: int | None = None) -> tuple[Indecomposable, ...]:
    """The finite set of test objects that decides the hom order on
    objects of ambient type ``beta``.

    Hom deltas vanish on every P0 and P2, equal the stabilized P1 value
    on bipickets B2(l, t) once l exceeds ``beta[0] + 1``, and vanish on
    P1(l) for l > beta[0]; so P1(1..beta[0]) together with all bipickets
    B2(l, t), l <= beta[0] + 1 suffice.  ``bound`` overrides the bipicket
    cutoff (P1 then runs to bound - 1), which is how the default cutoff
    is cross-validated.
    """
    if bound is None:
        bound = beta.max_part + 1
    members: list[Indecomposable] = [P1(t) for t in range(1, bound)]
    for ell in range(3, bound + 1):
        members.extend(B2(ell, t) for t in range(1, ell - 1))
    return tuple(members)


@lru_cache(maxsize=None)
def _hom_profile(obj: S2Object, bound: int | None) -> tuple[int, ...]:
    beta = object_type(obj)[0]
    return tuple(_hom_against(x, obj) for x in test_set(beta, bound))


def hom_leq(y: S2Object, z: S2Object, bound: int | None = None) -> bool:
    """True when [x, y] <= [x, z] for every test object x."""
    _require_same_type(y, z)
    py, pz = _hom_profile(y, bound), _hom_profile(z, bound)
    return all(a <= b for a, b in zip(py, pz))


@dataclass(frozen=True)
class HomDelta:
    """Difference data of a same-type pair (y, z): hom deltas and
    multiplicity deltas, indexed by indecomposables."""

    y: S2Object
    z: S2Object

    def __post_init__(self):
        _require_same_type(self.y, self.z)

    @property
    def beta(self) -> Partition:
        return object_type(self.y)[0]

    def hom(self, x: Indecomposable) -> int:
        return delta_hom(self.y, self.z, x)

    def mult(self, x: Indecomposable) -> int:
        return delta_mult(self.y, self.z, x)

    def hom_map(self, bound: int | None = None) -> dict[Indecomposable, int]:
        """Hom deltas over the deciding test set."""
        return {x: self.hom(x) for x in test_set(self.beta, bound)}

    def nonnegative(self, bound: int | None = None) -> bool:
        return all(v >= 0 for v in self.hom_map(bound).values())


@dataclass(frozen=True)
class BandCell:
    """One position of the stripe carrying the nonzero hom deltas.

    Cells are indexed by (ell, t) with 0 <= t <= ell - 1; the translate
    direction is (ell, t) -> (ell + 1, t + 1).  The label is P1(ell) at
    t = 0, the pair P2(ell) + P0(ell-1) at t = ell - 1 (those cells
    always carry hom delta 0), and B2(ell, t) in between.
    """

    ell: int
    t: int

    def __post_init__(self):
        if not (self.ell >= 1 and 0 <= self.t <= self.ell - 1):
            raise ValueError(f"band cell ({self.ell},{self.t}) is out of range")

    @property
    def is_composite(self) -> bool:
        return self.t == self.ell - 1 and self.ell >= 2

    @property
    def label(self) -> tuple[Indecomposable, ...]:
        if self.is_composite:
            return (P2(self.ell), P0(self.ell - 1))
        if self.t == 0:
            return (P1(self.ell),)
        return (B2(self.ell, self.t),)


def band_delta_hom(y: S2Object, z: S2Object, ell: int, t: int) -> int:
    """Hom delta at a band cell; composite cells give 0."""
    cell = BandCell(ell, t)
    if cell.is_composite:
        return 0
    return delta_hom(y, z, cell.label[0])


@dataclass(frozen=True)
class MeshViolation:
    ell: int
    t: int
    label: Indecomposable
    mult_delta: int
    mesh_value: int


def mesh_defect_report(y: S2Object, z: S2Object, n: int) -> list[MeshViolation]:
    """Check the four-term identity relating multiplicity deltas to hom
    deltas on every band cell (ell, t) with 2 <= ell <= n - 1 and
    0 <= t <= ell - 2:

        mult_delta(label(ell, t)) ==
            dh(ell, t) + dh(ell+1, t+1) - dh(ell+1, t) - dh(ell, t+1)

    where dh is the hom delta at the cell label and composite cells
    contribute 0.  Returns the violated cells; an empty report is the
    expected outcome for every same-type pair.  Requires n to be at
    least beta[0] + 3 so the window covers all nonzero deltas.
    """
    beta = _require_same_type(y, z)
    if n < beta.max_part + 3:
        raise ValueError(f"window bound {n} is below the required {beta.max_part + 3}")
    violations: list[MeshViolation] = []
    for ell in range(2, n):
        for t in range(0, ell - 1):
            label = P1(ell) if t == 0 else B2(ell, t)
            lhs = delta_mult(y, z, label)
            rhs = (
                band_delta_hom(y, z, ell, t)
                + band_delta_hom(y, z, ell + 1, t + 1)
                - band_delta_hom(y, z, ell + 1, t)
                - band_delta_hom(y, z, ell, t + 1)
            )
            if lhs != rhs:
                violations.append(MeshViolation(ell, t, label, lhs, rhs))
    return violations
