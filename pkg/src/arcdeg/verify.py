"""Whole-library property sweep over every type up to a weight bound.

For each ambient type beta up to the bound and each quotient type gamma
contained in it, the sweep enumerates the objects of the type and
checks, exhaustively:

* diagram round trip: the object of the diagram of an object is the
  object itself;
* equivalence of the arc order and the hom order on every ordered pair;
* agreement of the hom order computed with the default test-set cutoff
  and with a cutoff three columns wider;
* vanishing of the hom delta on every P0 and P2;
* strict growth of the stratum dimension along every single down-move;
* the integer identity tying the stratum dimension to the orbit
  dimension and the automorphism degrees;
* a unique maximal element whose diagram carries no arc, and agreement
  of the minimal-element count with the Littlewood-Richardson
  prediction whenever the skew type is a column strip.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .geometry import aut_degree, stratum_dim, subspace_orbit_dim
from .homcalc import P0, P2, delta_hom, hom_leq, mesh_defect_report, test_set
from .moves import down_moves, extrema, region, unit_pair
from .objects import (
    B2,
    P1,
    Indecomposable,
    S2Object,
    alpha_of,
    diagram_of_object,
    enumerate_objects,
    object_of_diagram,
    object_type,
)
from .lr import minimal_count_prediction
from .moves import Move, arc_leq
from .partitions import Partition, is_column_strip


def all_partitions(max_weight: int) -> list[Partition]:
    """Every partition of weight 0..max_weight."""
    out = [Partition()]
    def rec(remaining: int, cap: int, acc: list[int]):
        for p in range(min(cap, remaining), 0, -1):
            acc.append(p)
            out.append(Partition(tuple(acc)))
            rec(remaining - p, p, acc)
            acc.pop()
    rec(max_weight, max_weight, [])
    return out


def subpartitions(beta: Partition) -> list[Partition]:
    """Every partition contained in beta."""
    out: list[Partition] = []
    def rec(i: int, cap: int, acc: list[int]):
        out.append(Partition(tuple(acc)))
        if i >= len(beta.parts):
            return
        for p in range(min(cap, beta.parts[i]), 0, -1):
            acc.append(p)
            rec(i + 1, p, acc)
            acc.pop()
    rec(0, beta.max_part, [])
    return out


def iter_types(max_weight: int):
    """All (beta, gamma) with 1 <= |beta| <= max_weight and gamma inside beta."""
    for beta in all_partitions(max_weight):
        if not beta.parts:
            continue
        for gamma in subpartitions(beta):
            yield beta, gamma


@dataclass
class SweepReport:
    max_weight: int
    types_seen: int = 0
    types_realizable: int = 0
    objects_total: int = 0
    pairs_checked: int = 0
    move_edges: int = 0
    failures: dict[str, list[str]] = field(default_factory=dict)

    def fail(self, kind: str, message: str):
        self.failures.setdefault(kind, []).append(message)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary_lines(self) -> list[str]:
        lines = [
            f"types seen:       {self.types_seen}",
            f"types realizable: {self.types_realizable}",
            f"objects:          {self.objects_total}",
            f"ordered pairs:    {self.pairs_checked}",
            f"move edges:       {self.move_edges}",
        ]
        if self.ok:
            lines.append("all checks passed")
        else:
            for kind, msgs in sorted(self.failures.items()):
                lines.append(f"FAILED {kind}: {len(msgs)} case(s); first: {msgs[0]}")
        return lines


def equivalence_sweep(max_weight: int) -> SweepReport:
    """Run the exhaustive per-type checks up to the weight bound."""
    report = SweepReport(max_weight=max_weight)
    for beta, gamma in iter_types(max_weight):
        report.types_seen += 1
        objects = enumerate_objects(beta, gamma)
        if not objects:
            continue
        report.types_realizable += 1
        report.objects_total += len(objects)
        probes = [P0(m) for m in range(1, beta.max_part + 2)]
        probes += [P2(m) for m in range(2, beta.max_part + 2)]
        for obj in objects:
            if object_of_diagram(diagram_of_object(obj), beta, gamma) != obj:
                report.fail("roundtrip", obj.to_text())
            lhs = stratum_dim(obj)
            alpha = alpha_of(obj)
            rhs = (
                alpha.weight() ** 2
                + beta.weight() ** 2
                - (aut_degree(alpha) + aut_degree(beta))
                + subspace_orbit_dim(obj)
            )
            if lhs != rhs:
                report.fail("dimension-identity", obj.to_text())
        by_diagram = {diagram_of_object(o): o for o in objects}
        for obj in objects:
            for move, nxt in down_moves(diagram_of_object(obj)):
                report.move_edges += 1
                target = by_diagram.get(nxt)
                if target is None:
                    report.fail("move-type", f"{move} leaves the type from {obj.to_text()}")
                    continue
                if stratum_dim(target) < stratum_dim(obj) + 1:
                    report.fail(
                        "dimension-monotonicity",
                        f"{move} from {obj.to_text()} ({stratum_dim(obj)} -> {stratum_dim(target)})",
                    )
        for y in objects:
            for z in objects:
                report.pairs_checked += 1
                hom = hom_leq(y, z)
                if arc_leq(y, z) != hom:
                    report.fail("order-equivalence", f"{y.to_text()} vs {z.to_text()}")
                if hom_leq(y, z, bound=beta.max_part + 4) != hom:
                    report.fail("test-set-bound", f"{y.to_text()} vs {z.to_text()}")
                for probe in probes:
                    if delta_hom(y, z, probe) != 0:
                        report.fail(
                            "picket-delta-zero",
                            f"{probe.to_text()} on {y.to_text()} vs {z.to_text()}",
                        )
        maximal, minimal = extrema(beta, gamma)
        if len(maximal) != 1:
            report.fail("unique-maximal", f"type ({beta.to_text()};{gamma.to_text()})")
        elif diagram_of_object(maximal[0]).arcs:
            report.fail("maximal-has-arc", f"type ({beta.to_text()};{gamma.to_text()})")
        if is_column_strip(beta, gamma):
            predicted = minimal_count_prediction(beta, gamma)
            if predicted != len(minimal):
                report.fail(
                    "minimal-count",
                    f"type ({beta.to_text()};{gamma.to_text()}): predicted {predicted}, found {len(minimal)}",
                )
    return report


def random_same_type_pairs(count: int, max_weight: int, seed: int):
    """Deterministic stream of (y, z) pairs of equal type with the
    ambient weight bounded; used by the randomized mesh check."""
    rng = random.Random(seed)
    betas = [p for p in all_partitions(max_weight) if p.parts]
    cache: dict[tuple[Partition, Partition], list[S2Object]] = {}
    produced = 0
    while produced < count:
        beta = rng.choice(betas)
        subs = subpartitions(beta)
        gamma = rng.choice(subs)
        key = (beta, gamma)
        if key not in cache:
            cache[key] = enumerate_objects(beta, gamma)
        objects = cache[key]
        if not objects:
            continue
        y = rng.choice(objects)
        z = rng.choice(objects)
        produced += 1
        yield y, z


def random_unit_pairs(count: int, max_point: int, seed: int):
    """Deterministic stream of (move, smaller, larger) unit-move pairs
    with a little shared context; used by the randomized region check."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        kind = rng.choice("ABCDE")
        need = {"A": 4, "B": 3, "C": 4, "D": 3, "E": 2}[kind]
        pts = tuple(sorted(rng.sample(range(1, max_point + 1), need), reverse=True))
        move = Move(kind, pts)
        context: list[Indecomposable] = []
        for _ in range(rng.randrange(0, 3)):
            k = rng.choice(("P0", "P1", "P2", "B2"))
            if k == "B2":
                m = rng.randrange(3, max_point + 1)
                context.append(B2(m, rng.randrange(1, m - 1)))
            elif k == "P2":
                context.append(P2(rng.randrange(2, max_point + 1)))
            else:
                context.append(Indecomposable(k, rng.randrange(1, max_point + 1)))
        smaller, larger = unit_pair(move, context)
        produced += 1
        yield move, smaller, larger


def mesh_check(pairs: int, max_weight: int, seed: int) -> list[str]:
    """Mesh identity over a random pair stream; returns failure texts."""
    failures = []
    for y, z in random_same_type_pairs(pairs, max_weight, seed):
        beta = object_type(y)[0]
        report = mesh_defect_report(y, z, beta.max_part + 4)
        if report:
            failures.append(f"{y.to_text()} vs {z.to_text()}: {report[0]}")
    return failures


def region_check(pairs: int, max_point: int, seed: int) -> list[str]:
    """Region indicator versus hom delta over random unit pairs."""
    failures = []
    for move, smaller, larger in random_unit_pairs(pairs, max_point, seed):
        beta = object_type(smaller)[0]
        pred = region(move)
        for x in test_set(beta):
            expected = 1 if pred(x) else 0
            if delta_hom(smaller, larger, x) != expected:
                failures.append(f"{move} at {x.to_text()}")
                break
    return failures
