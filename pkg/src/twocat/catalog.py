"""Assemble a Fin2Cat from structured, hashable cells.

1-cells and 2-cells expose ``source`` and ``target`` attributes (the
structured cells one level down). The enumerators in ``strictify`` and
``equivariant`` produce such cells and hand them to ``assemble``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core2 import Fin2Cat
from .gaction import GroupAction2


@dataclass(eq=False)
class Catalog:
    """A finite 2-category together with the structured data behind each cell id."""

    action: GroupAction2
    cat: Fin2Cat
    zero: list
    one: list
    two: list
    ids0: dict = field(default_factory=dict)
    ids1: dict = field(default_factory=dict)
    ids2: dict = field(default_factory=dict)


def assemble(action, name, zero, one, two, unit_of, id2_of, compose1, vcompose, hcompose,
             prefixes=("P", "X", "m")) -> Catalog:
    """Build the tables; every composite must already be among the listed cells.

    ``vcompose(b, a)`` is ``b`` after ``a``; ``hcompose(a, b)`` puts ``b`` first.
    """
    ids0 = {P: i for i, P in enumerate(zero)}
    ids1 = {c: i for i, c in enumerate(one)}
    ids2 = {c: i for i, c in enumerate(two)}
    unit1 = [ids1[unit_of(P)] for P in zero]
    id2 = [ids2[id2_of(c)] for c in one]

    two_from: dict = {}
    for k, c in enumerate(two):
        two_from.setdefault(ids1[c.source], []).append(k)
    vcomp = {}
    for k, a in enumerate(two):
        for k2 in two_from.get(ids1[a.target], []):
            vcomp[k2, k] = ids2[vcompose(two[k2], a)]

    one_from: dict = {}
    for k, c in enumerate(one):
        one_from.setdefault(ids0[c.source], []).append(k)
    hcomp1 = {}
    for y, cy in enumerate(one):
        for x in one_from.get(ids0[cy.target], []):
            hcomp1[x, y] = ids1[compose1(one[x], cy)]

    two_by_start: dict = {}
    for k, c in enumerate(two):
        two_by_start.setdefault(ids0[c.source.source], []).append(k)
    hcomp2 = {}
    for b, cb in enumerate(two):
        for a in two_by_start.get(ids0[cb.source.target], []):
            hcomp2[a, b] = ids2[hcompose(two[a], cb)]

    p0, p1, p2 = prefixes
    cat = Fin2Cat(
        [f"{p0}{i}" for i in range(len(zero))],
        [(f"{p1}{i}", ids0[c.source], ids0[c.target]) for i, c in enumerate(one)],
        [(f"{p2}{i}", ids1[c.source], ids1[c.target]) for i, c in enumerate(two)],
        unit1, id2, vcomp, hcomp1, hcomp2, name)
    return Catalog(action, cat, list(zero), list(one), list(two), ids0, ids1, ids2)
