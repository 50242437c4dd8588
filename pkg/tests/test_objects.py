import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcdeg.errors import InconsistentDiagram
from arcdeg.objects import (
    B2,
    P0,
    P1,
    P2,
    ArcDiagram,
    Indecomposable,
    S2Object,
    alpha_of,
    crossings,
    diagram_of_object,
    enumerate_objects,
    object_of_diagram,
    object_type,
)
from arcdeg.partitions import Partition

# the running classification example: every summand kind at once
MIXED = S2Object.of(B2(5, 3), B2(4, 2), P2(5), P0(2), P2(3), P1(3), P0(1), P1(1))


def indecomposables(max_m=7):
    singles = [P0(m) for m in range(1, max_m + 1)]
    singles += [P1(m) for m in range(1, max_m + 1)]
    singles += [P2(m) for m in range(2, max_m + 1)]
    singles += [B2(m, r) for m in range(3, max_m + 1) for r in range(1, m - 1)]
    return singles


objects_strategy = st.lists(st.sampled_from(indecomposables()), max_size=6).map(
    lambda xs: S2Object(tuple(xs))
)


def test_indecomposable_validation():
    with pytest.raises(ValueError):
        B2(4, 3)  # the boundary parameter is the pair P2(4) + P0(3), not a summand
    with pytest.raises(ValueError):
        B2(3, 0)
    with pytest.raises(ValueError):
        P2(1)
    with pytest.raises(ValueError):
        P0(0)


def test_object_type_examples():
    beta, gamma = object_type(MIXED)
    assert beta == Partition.of(5, 5, 4, 3, 3, 3, 2, 2, 1, 1)
    assert gamma == Partition.of(4, 3, 3, 2, 2, 2, 1, 1, 1)
    for m in (1, 2, 5):
        assert object_type(S2Object.of(P0(m))) == (Partition.of(m), Partition.of(m))
    assert object_type(S2Object.of(P1(1))) == (Partition.of(1), Partition())


def test_alpha_of_examples():
    obj = S2Object.of(B2(6, 3), B2(5, 1), P1(7), P1(4), P1(2))
    assert alpha_of(obj) == Partition.of(2, 2, 1, 1, 1)
    assert alpha_of(S2Object.of(P0(3), P0(1))) == Partition()
    assert alpha_of(S2Object.of(P2(5), P0(4))) == Partition.of(2)


def test_diagram_of_object_examples():
    d = diagram_of_object(MIXED)
    assert d == ArcDiagram.of([(5, 3), (4, 2), (3, 2)], [3, 1], [5])
    obj = S2Object.of(P1(7), P1(4), P1(2), B2(6, 3), B2(5, 1))
    assert diagram_of_object(obj) == ArcDiagram.of([(6, 3), (5, 1)], [7, 4, 2], [])
    assert diagram_of_object(S2Object.of(P0(4), P0(2))) == ArcDiagram()


def test_greedy_pairing_is_maximal():
    obj = S2Object.of(P2(3), P2(3), P0(2))
    assert diagram_of_object(obj) == ArcDiagram.of([(3, 2)], [], [3])


def test_object_of_diagram_examples():
    assert object_of_diagram(
        ArcDiagram.of([(2, 1)]), Partition.of(2, 1), Partition.of(1)
    ) == S2Object.of(P2(2), P0(1))
    assert object_of_diagram(
        ArcDiagram(), Partition.of(3, 1), Partition.of(3, 1)
    ) == S2Object.of(P0(3), P0(1))
    with pytest.raises(InconsistentDiagram):
        object_of_diagram(ArcDiagram.of([], [3]), Partition.of(2, 1), Partition.of(1))
    with pytest.raises(InconsistentDiagram):
        # parts exist but the quotient type comes out wrong
        object_of_diagram(ArcDiagram.of([], [2]), Partition.of(2, 1), Partition.of(2))


def test_crossings_examples():
    assert crossings(ArcDiagram.of([(4, 3), (2, 1)], [], [3])) == 0
    assert crossings(ArcDiagram.of([(4, 1), (3, 2)], [], [3])) == 0
    assert crossings(ArcDiagram.of([(4, 1)], [3, 2], [3])) == 2
    assert crossings(diagram_of_object(MIXED)) == 2


def test_crossings_multiplicity_and_shared_endpoints():
    # doubled arcs never cross each other; a doubled pole counts twice
    assert crossings(ArcDiagram.of([(4, 1), (4, 1)], [], [])) == 0
    assert crossings(ArcDiagram.of([(4, 1)], [2, 2], [])) == 2
    assert crossings(ArcDiagram.of([(4, 2), (2, 1)], [], [])) == 0  # shared endpoint


def test_enumerate_objects_counts():
    assert len(enumerate_objects(Partition.of(4, 3, 3, 2, 1), Partition.of(3, 2, 1, 1))) == 10
    assert len(enumerate_objects(Partition.of(3, 3, 2, 1), Partition.of(2, 2, 1))) == 5
    two = enumerate_objects(Partition.of(2, 1), Partition.of(1))
    assert two == [S2Object.of(P2(2), P0(1)), S2Object.of(P1(2), P1(1))]


def test_enumerate_objects_unrealizable_type_is_empty():
    assert enumerate_objects(Partition.of(4), Partition.of(1)) == []


def test_enumerate_against_direct_generation():
    # independent oracle: build all objects over a small summand pool and
    # group by type
    beta, gamma = Partition.of(3, 2, 1), Partition.of(2, 1)
    pool = indecomposables(max_m=3)
    found = set()

    def gen(idx, acc, remaining):
        obj = S2Object(tuple(acc))
        if object_type(obj) == (beta, gamma):
            found.add(obj)
        for i in range(idx, len(pool)):
            w = sum(pool[i].ambient_parts())
            if w <= remaining:
                acc.append(pool[i])
                gen(i, acc, remaining - w)
                acc.pop()

    gen(0, [], beta.weight())
    assert set(enumerate_objects(beta, gamma)) == found


@given(objects_strategy)
def test_diagram_round_trip(obj):
    beta, gamma = object_type(obj)
    assert object_of_diagram(diagram_of_object(obj), beta, gamma) == obj


@given(objects_strategy)
def test_type_weights_split(obj):
    beta, gamma = object_type(obj)
    assert beta.weight() == gamma.weight() + alpha_of(obj).weight()


@given(objects_strategy, st.integers(min_value=2, max_value=8), st.integers(min_value=1, max_value=8))
def test_crossings_ignore_loops_and_invisible_summands(obj, m, w):
    # an extra P2 becomes a loop or a boundary arc (m, m-1), an extra P0
    # is invisible or completes a boundary arc; neither can ever cross
    base = crossings(diagram_of_object(obj))
    assert crossings(diagram_of_object(S2Object(obj.summands + (P2(m),)))) == base
    assert crossings(diagram_of_object(S2Object(obj.summands + (P0(w),)))) == base


def test_fixed_type_injectivity():
    beta, gamma = Partition.of(4, 3, 3, 2, 1), Partition.of(3, 2, 1, 1)
    objs = enumerate_objects(beta, gamma)
    diagrams = [diagram_of_object(o) for o in objs]
    assert len(set(diagrams)) == len(objs)


def test_text_and_json_round_trips():
    text = MIXED.to_text()
    assert S2Object.from_text(text) == MIXED
    assert S2Object.from_text("B2(5,3)") == S2Object.from_text("B(5,3)")
    assert S2Object.from_text("") == S2Object()
    assert S2Object.from_json_dict(json.loads(json.dumps(MIXED.to_json_dict()))) == MIXED

    d = diagram_of_object(MIXED)
    assert ArcDiagram.from_text(d.to_text()) == d
    assert ArcDiagram.from_text("arcs:; poles:; loops:") == ArcDiagram()
    assert ArcDiagram.from_text("poles:2; arcs:7-3") == ArcDiagram.of([(7, 3)], [2], [])
    assert ArcDiagram.from_json_dict(json.loads(d.to_json())) == d
    with pytest.raises(ValueError):
        S2Object.from_text("Q(3)")
