"""Dimension formulas for the strata of same-type objects and for the
orbits of embeddings with both Jordan types fixed.

All quantities are exact integers; Python's arbitrary-precision ints
rule out overflow.
"""

from __future__ import annotations

from .objects import S2Object, alpha_of, crossings, diagram_of_object, object_type
from .partitions import Partition


def stratum_dim(obj: S2Object) -> int:
    """Dimension of the stratum of all representations isomorphic to the
    object, inside the variety of embeddings with ambient type beta and
    quotient type gamma:

        |beta|^2 + |alpha|^2 - n(alpha) - n(beta) - n(gamma) - |beta| - x

    where n is the moment, alpha the subspace type and x the crossing
    number of the object's diagram.
    """
    beta, gamma = object_type(obj)
    alpha = alpha_of(obj)
    x = crossings(diagram_of_object(obj))
    return (
        beta.weight() ** 2
        + alpha.weight() ** 2
        - alpha.moment()
        - beta.moment()
        - gamma.moment()
        - beta.weight()
        - x
    )


def hall_degree(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Degree of the Hall polynomial counting subobjects of the given
    types: n(beta) - n(alpha) - n(gamma)."""
    return beta.moment() - alpha.moment() - gamma.moment()


def aut_degree(alpha: Partition) -> int:
    """Degree of the polynomial counting automorphisms of a nilpotent
    operator of type alpha over a finite field: |alpha| + 2 n(alpha)."""
    return alpha.weight() + 2 * alpha.moment()


def subspace_orbit_dim(obj: S2Object) -> int:
    """Dimension of the orbit of the embedding under the automorphism
    groups of subspace and ambient space, with all three types fixed:
    hall_degree + aut_degree(alpha) - crossings."""
    beta, gamma = object_type(obj)
    alpha = alpha_of(obj)
    x = crossings(diagram_of_object(obj))
    return hall_degree(alpha, beta, gamma) + aut_degree(alpha) - x
