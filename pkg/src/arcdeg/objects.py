"""Invariant subspaces of nilpotent operators with subspace exponent at
most two: the classification of indecomposables, objects as multisets of
summands, the object/arc-diagram bijection, crossing counts, and the
enumeration of all objects of a fixed ambient/quotient type.

Every indecomposable is one of four kinds:

* ``P0(m)`` -- the zero subspace of a single Jordan block of size m;
* ``P1(m)`` -- the 1-dimensional invariant subspace of a block of size m;
* ``P2(m)`` -- the 2-dimensional invariant subspace of a block of size m
  (needs m >= 2);
* ``B2(m, r)`` -- a 2-dimensional subspace embedded diagonally into two
  Jordan blocks of sizes m and r, with 1 <= r <= m - 2.

The boundary value r = m - 1 is deliberately *not* an indecomposable:
that embedding decomposes as ``P2(m) + P0(m-1)``.  Arc diagrams record
one arc per ``B2(m, r)``, one arc (m, m-1) per ``P2(m) + P0(m-1)`` pair,
one pole per ``P1``, and one loop per unpaired ``P2``; ``P0`` summands
are invisible.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations

from .errors import InconsistentDiagram
from .partitions import Partition

_KIND_RANK = {"B2": 0, "P2": 1, "P1": 2, "P0": 3}


@dataclass(frozen=True)
class Indecomposable:
    """One indecomposable summand; ``r`` is meaningful only for kind B2."""

    kind: str
    m: int
    r: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown summand kind {self.kind!r}")
        if self.kind == "B2":
            if not (1 <= self.r <= self.m - 2):
                raise ValueError(f"B2({self.m},{self.r}) needs 1 <= r <= m-2")
        else:
            if self.r != 0:
                raise ValueError(f"{self.kind} takes a single parameter")
            if self.m < 1 or (self.kind == "P2" and self.m < 2):
                raise ValueError(f"{self.kind}({self.m}) is out of range")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_RANK[self.kind], -self.m, -self.r)

    def ambient_parts(self) -> tuple[int, ...]:
        """Jordan block sizes this summand contributes to the ambient space."""
        return (self.m, self.r) if self.kind == "B2" else (self.m,)

    def quotient_parts(self) -> tuple[int, ...]:
        """Jordan block sizes contributed to the quotient (zeros dropped)."""
        if self.kind == "P0":
            raw = (self.m,)
        elif self.kind == "P1":
            raw = (self.m - 1,)
        elif self.kind == "P2":
            raw = (self.m - 2,)
        else:
            raw = (self.m - 1, self.r - 1)
        return tuple(p for p in raw if p > 0)

    def alpha_parts(self) -> tuple[int, ...]:
        """Jordan block sizes of the subspace itself."""
        if self.kind == "P0":
            return ()
        if self.kind == "P1":
            return (1,)
        return (2,)

    def to_text(self) -> str:
        if self.kind == "B2":
            return f"B({self.m},{self.r})"
        return f"{self.kind}({self.m})"

    def __str__(self) -> str:
        return self.to_text()

    def to_json_dict(self) -> dict:
        d = {"kind": self.kind, "m": self.m}
        if self.kind == "B2":
            d["r"] = self.r
        return d


def P0(m: int) -> Indecomposable:
    return Indecomposable("P0", m)


def P1(m: int) -> Indecomposable:
    return Indecomposable("P1", m)


def P2(m: int) -> Indecomposable:
    return Indecomposable("P2", m)


def B2(m: int, r: int) -> Indecomposable:
    return Indecomposable("B2", m, r)


def arc_summands(m: int, r: int) -> tuple[Indecomposable, ...]:
    """Summands encoded by an arc from m to r (m > r >= 1).

    Arcs with r <= m - 2 are bipickets; the boundary arc (m, m-1) is the
    decomposable pair ``P2(m) + P0(m-1)``.
    """
    if not m > r >= 1:
        raise ValueError(f"arc ({m},{r}) needs m > r >= 1")
    if r == m - 1:
        return (P2(m), P0(m - 1))
    return (B2(m, r),)


_SUMMAND_RE = re.compile(r"^(B2?|P[012])\((\d+)(?:,(\d+))?\)$")


@dataclass(frozen=True)
class S2Object:
    """An isomorphism class: a multiset of indecomposables.

    Summands are kept in a canonical order (B2 before P2 before P1
    before P0, then lexicographically descending on the parameters), so
    equality of objects is multiset equality.
    """

    summands: tuple[Indecomposable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands, key=lambda s: s.sort_key)))

    @classmethod
    def of(cls, *summands: Indecomposable) -> "S2Object":
        return cls(tuple(summands))

    @classmethod
    def from_text(cls, text: str) -> "S2Object":
        """Parse the ``+``-joined text form, e.g. ``"B(7,3)+P2(5)+P1(1)"``.

        ``B`` and ``B2`` are both accepted for bipickets; the empty
        string is the zero object.
        """
        text = text.strip()
        if not text:
            return cls()
        summands = []
        for token in text.split("+"):
            token = token.strip().replace(" ", "")
            mt = _SUMMAND_RE.match(token)
            if not mt:
                raise ValueError(f"cannot parse summand {token!r}")
            kind, m, r = mt.group(1), int(mt.group(2)), mt.group(3)
            if kind in ("B", "B2"):
                if r is None:
                    raise ValueError(f"bipicket {token!r} needs two parameters")
                summands.append(B2(m, int(r)))
            else:
                if r is not None:
                    raise ValueError(f"{token!r}: pickets take a single parameter")
                summands.append(Indecomposable(kind, m))
        return cls(tuple(summands))

    def to_text(self) -> str:
        return "+".join(s.to_text() for s in self.summands)

    def __str__(self) -> str:
        return self.to_text()

    def to_json_dict(self) -> dict:
        return {"summands": [s.to_json_dict() for s in self.summands]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "S2Object":
        summands = []
        for sd in d["summands"]:
            if sd["kind"] == "B2":
                summands.append(B2(sd["m"], sd["r"]))
            else:
                summands.append(Indecomposable(sd["kind"], sd["m"]))
        return cls(tuple(summands))

    def multiplicity(self, x: Indecomposable) -> int:
        return sum(1 for s in self.summands if s == x)

    def __add__(self, other: "S2Object") -> "S2Object":
        return S2Object(self.summands + other.summands)

    def __len__(self) -> int:
        return len(self.summands)

    @property
    def sort_key(self):
        return tuple(s.sort_key for s in self.summands)


@dataclass(frozen=True)
class ArcDiagram:
    """Multisets of arcs, poles and loops on the points 1, 2, 3, ...

    Arcs are pairs (m, r) with m > r >= 1 (the boundary case r = m - 1
    is allowed), poles are single points, loops mark points m >= 2 and
    are untouched by every move.
    """

    arcs: tuple[tuple[int, int], ...] = ()
    poles: tuple[int, ...] = ()
    loops: tuple[int, ...] = ()

    def __post_init__(self):
        for m, r in self.arcs:
            if not m > r >= 1:
                raise ValueError(f"arc ({m},{r}) needs m > r >= 1")
        for p in self.poles:
            if p < 1:
                raise ValueError(f"pole at {p} is out of range")
        for q in self.loops:
            if q < 2:
                raise ValueError(f"loop at {q} is out of range (loops need m >= 2)")
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs, reverse=True)))
        object.__setattr__(self, "poles", tuple(sorted(self.poles, reverse=True)))
        object.__setattr__(self, "loops", tuple(sorted(self.loops, reverse=True)))

    @classmethod
    def of(cls, arcs=(), poles=(), loops=()) -> "ArcDiagram":
        return cls(tuple(tuple(a) for a in arcs), tuple(poles), tuple(loops))

    @classmethod
    def from_text(cls, text: str) -> "ArcDiagram":
        """Parse the grouped text form ``"arcs:5-3,4-2; poles:3,1; loops:5"``.

        Groups may come in any order and may be empty or missing.
        """
        arcs: list[tuple[int, int]] = []
        poles: list[int] = []
        loops: list[int] = []
        for group in text.split(";"):
            group = group.strip()
            if not group:
                continue
            name, _, body = group.partition(":")
            name = name.strip().lower()
            body = body.strip()
            items = [tok.strip() for tok in body.split(",") if tok.strip()] if body else []
            if name == "arcs":
                for tok in items:
                    m, r = tok.split("-")
                    arcs.append((int(m), int(r)))
            elif name == "poles":
                poles.extend(int(tok) for tok in items)
            elif name == "loops":
                loops.extend(int(tok) for tok in items)
            else:
                raise ValueError(f"unknown diagram group {name!r}")
        return cls.of(arcs, poles, loops)

    def to_text(self) -> str:
        arcs = ",".join(f"{m}-{r}" for m, r in self.arcs)
        poles = ",".join(str(p) for p in self.poles)
        loops = ",".join(str(q) for q in self.loops)
        return f"arcs:{arcs}; poles:{poles}; loops:{loops}"

    def __str__(self) -> str:
        return self.to_text()

    def to_json_dict(self) -> dict:
        return {
            "arcs": [list(a) for a in self.arcs],
            "poles": list(self.poles),
            "loops": list(self.loops),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ArcDiagram":
        return cls.of(
            [tuple(a) for a in d.get("arcs", ())],
            d.get("poles", ()),
            d.get("loops", ()),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def object_type(obj: S2Object) -> tuple[Partition, Partition]:
    """The (ambient, quotient) pair of Jordan types of an object."""
    beta: list[int] = []
    gamma: list[int] = []
    for s in obj.summands:
        beta.extend(s.ambient_parts())
        gamma.extend(s.quotient_parts())
    return Partition(tuple(beta)), Partition(tuple(gamma))


def alpha_of(obj: S2Object) -> Partition:
    """Jordan type of the subspace: a 2 per arc or loop, a 1 per pole."""
    parts: list[int] = []
    for s in obj.summands:
        parts.extend(s.alpha_parts())
    return Partition(tuple(parts))


def diagram_of_object(obj: S2Object) -> ArcDiagram:
    """The arc diagram of an object.

    ``P2(m)`` summands pair greedily with ``P0(m-1)`` summands into arcs
    (m, m-1) while both remain; unpaired ``P2`` become loops, ``P1``
    become poles, remaining ``P0`` contribute nothing.
    """
    arcs: list[tuple[int, int]] = []
    poles: list[int] = []
    p2_count: dict[int, int] = {}
    p0_count: dict[int, int] = {}
    for s in obj.summands:
        if s.kind == "B2":
            arcs.append((s.m, s.r))
        elif s.kind == "P1":
            poles.append(s.m)
        elif s.kind == "P2":
            p2_count[s.m] = p2_count.get(s.m, 0) + 1
        else:
            p0_count[s.m] = p0_count.get(s.m, 0) + 1
    loops: list[int] = []
    for m, c2 in p2_count.items():
        paired = min(c2, p0_count.get(m - 1, 0))
        arcs.extend([(m, m - 1)] * paired)
        loops.extend([m] * (c2 - paired))
    return ArcDiagram.of(arcs, poles, loops)


def object_of_diagram(diagram: ArcDiagram, beta: Partition, gamma: Partition) -> S2Object:
    """The unique object of type (beta, gamma) with the given diagram.

    Arcs, poles and loops determine their summands directly; every
    ambient part of beta not consumed that way becomes an invisible
    ``P0``.  Raises :class:`InconsistentDiagram` when the leftover parts
    do not exist in beta or the resulting quotient type is not gamma.
    """
    summands: list[Indecomposable] = []
    for m, r in diagram.arcs:
        summands.extend(arc_summands(m, r))
    summands.extend(P2(q) for q in diagram.loops)
    summands.extend(P1(p) for p in diagram.poles)

    remaining = list(beta.parts)
    for s in summands:
        for part in s.ambient_parts():
            try:
                remaining.remove(part)
            except ValueError:
                raise InconsistentDiagram(
                    f"diagram needs an ambient part {part} not available in {beta.to_text() or '()'}"
                ) from None
    summands.extend(P0(w) for w in remaining)
    obj = S2Object(tuple(summands))
    got_beta, got_gamma = object_type(obj)
    if (got_beta, got_gamma) != (beta, gamma):
        raise InconsistentDiagram(
            f"diagram completes to type ({got_beta.to_text()};{got_gamma.to_text()}), "
            f"not ({beta.to_text()};{gamma.to_text()})"
        )
    return obj


def _arcs_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    # strict interleaving only; shared endpoints, nesting and tangency do not count
    (m, r), (n, s) = (a, b) if a >= b else (b, a)
    return m > n > r > s


def crossings(diagram: ArcDiagram) -> int:
    """Number of crossings: strictly interleaved arc pairs plus poles
    strictly inside an arc.  Loops never cross anything."""
    count = 0
    for a, b in combinations(diagram.arcs, 2):
        if _arcs_cross(a, b):
            count += 1
    for m, r in diagram.arcs:
        for p in diagram.poles:
            if m > p > r:
                count += 1
    return count


def _remove_values(pool: tuple[int, ...], values: tuple[int, ...]) -> tuple[int, ...] | None:
    out = list(pool)
    for v in values:
        try:
            out.remove(v)
        except ValueError:
            return None
    return tuple(out)


def _roles(m: int, rest: tuple[int, ...]):
    """Choices for the largest remaining ambient part m, in canonical order.

    Yields (token, summand, quotient-parts-consumed, partner-part-or-None);
    the token orders equal-part choices so each multiset of summands is
    produced exactly once.
    """
    for r in sorted({p for p in rest if 1 <= p <= m - 2}, reverse=True):
        yield (0, -r), B2(m, r), tuple(p for p in (m - 1, r - 1) if p > 0), r
    if m >= 2:
        yield (1, 0), P2(m), tuple(p for p in (m - 2,) if p > 0), None
    yield (2, 0), P1(m), tuple(p for p in (m - 1,) if p > 0), None
    yield (3, 0), P0(m), (m,), None


def enumerate_objects(beta: Partition, gamma: Partition) -> list[S2Object]:
    """All objects of type (beta, gamma), without duplicates, in canonical
    order.  The list is empty exactly when the type is unrealizable."""
    results: list[S2Object] = []

    def rec(beta_rem: tuple[int, ...], gamma_rem: tuple[int, ...], acc: list[Indecomposable], prev):
        if not beta_rem:
            if not gamma_rem:
                results.append(S2Object(tuple(acc)))
            return
        if gamma_rem and gamma_rem[0] > beta_rem[0]:
            return
        m, rest = beta_rem[0], beta_rem[1:]
        for token, summand, used_gamma, partner in _roles(m, rest):
            if prev is not None and prev[0] == m and token < prev[1]:
                continue
            new_gamma = _remove_values(gamma_rem, used_gamma)
            if new_gamma is None:
                continue
            new_beta = rest
            if partner is not None:
                new_beta = _remove_values(rest, (partner,))
            acc.append(summand)
            rec(new_beta, new_gamma, acc, (m, token))
            acc.pop()

    rec(beta.parts, gamma.parts, [], None)
    results.sort(key=lambda o: o.sort_key)
    return results
