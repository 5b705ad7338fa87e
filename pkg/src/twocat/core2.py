"""Finite groups, finite categories and finite strict 2-categories.

Cells are integer ids. Composites are table lookups, so equality of pasted
diagrams is equality of integers. Vertical composition ``v(a, b)`` means
``a`` after ``b``; horizontal composition ``h(x, y)`` of ``y: A -> B`` and
``x: B -> C`` gives ``x∘y: A -> C``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from ._backend import kernels
from .errors import NoInverse, NoUnit, NotAssociative, NotComposable

# --------------------------------------------------------------------------
# validation reports


class Violation(NamedTuple):
    axiom: str
    cells: tuple


def _sort_key(v: Violation):
    return (v.axiom, tuple(repr(c) for c in v.cells))


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @classmethod
    def of(cls, violations: Iterable[Violation]) -> "ValidationReport":
        unique = {(v.axiom, tuple(v.cells)): v for v in violations}
        return cls(tuple(sorted(unique.values(), key=_sort_key)))

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def tags(self) -> set:
        return {v.axiom for v in self.violations}

    def merged(self, *others: "ValidationReport") -> "ValidationReport":
        return ValidationReport.of(
            itertools.chain(self.violations, *(o.violations for o in others))
        )

    def prefixed(self, label) -> "ValidationReport":
        return ValidationReport.of(
            Violation(v.axiom, (label,) + tuple(v.cells)) for v in self.violations
        )

    def __repr__(self):
        shown = ", ".join(f"{v.axiom}{v.cells}" for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f", +{len(self.violations) - 5}"
        return f"ValidationReport({self.status}{': ' + shown + more if shown else ''})"


class Collector:
    """Accumulates violations; ``check`` records one when the condition fails."""

    def __init__(self):
        self.items: list[Violation] = []

    def check(self, condition, axiom, *cells) -> bool:
        if not condition:
            self.items.append(Violation(axiom, tuple(cells)))
        return bool(condition)

    def add(self, axiom, *cells):
        self.items.append(Violation(axiom, tuple(cells)))

    def extend(self, report: ValidationReport, *label):
        for v in report.violations:
            self.items.append(Violation(v.axiom, tuple(label) + tuple(v.cells)))

    def report(self) -> ValidationReport:
        return ValidationReport.of(self.items)


# --------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class FinGroup:
    elements: tuple
    mult: tuple
    unit: int
    inv: tuple
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def m(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def prod(self, *xs: int) -> int:
        out = self.unit
        for x in xs:
            out = self.mult[out][x]
        return out

    def index(self, name) -> int:
        return self.elements.index(name)

    def __iter__(self):
        return iter(range(len(self.elements)))

    def center(self) -> list[int]:
        return [z for z in self if all(self.mult[z][x] == self.mult[x][z] for x in self)]

    def conj(self, g: int, x: int) -> int:
        return self.mult[self.mult[g][x]][self.inv[g]]


def make_fin_group(elements: Sequence, mult, unit, name: str = "") -> FinGroup:
    """Build a group from a multiplication table.

    ``mult`` is a square table whose entries are element names or indices;
    ``unit`` is a name or an index. Raises ``NotAssociative``, ``NoUnit`` or
    ``NoInverse`` with the witnessing tuple.
    """
    elements = tuple(elements)
    n = len(elements)
    pos = {e: i for i, e in enumerate(elements)}

    def as_index(v):
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool) and v not in pos:
            return int(v)
        return pos[v]

    table = tuple(tuple(as_index(v) for v in row) for row in mult)
    if len(table) != n or any(len(row) != n for row in table):
        raise NotAssociative("multiplication table is not square", (n,))
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise NotAssociative("table entry outside the element set", (v,))
    u = as_index(unit)
    for x in range(n):
        if table[u][x] != x or table[x][u] != x:
            raise NoUnit("unit is not two-sided", (elements[u], elements[x]))
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAssociative("associativity fails", (elements[a], elements[b], elements[c]))
    inv = []
    for x in range(n):
        found = [y for y in range(n) if table[x][y] == u and table[y][x] == u]
        if not found:
            raise NoInverse("element has no inverse", (elements[x],))
        inv.append(found[0])
    return FinGroup(elements, table, u, tuple(inv), name)


def cyclic_group(n: int) -> FinGroup:
    if n == 2:
        names = ["e", "s"]
    else:
        names = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    return make_fin_group(names, [[(a + b) % n for b in range(n)] for a in range(n)], 0, f"C{n}")


def product_group(g1: FinGroup, g2: FinGroup, name: str = "") -> FinGroup:
    pairs = [(a, b) for a in g1 for b in g2]
    names = []
    for a, b in pairs:
        na, nb = g1.elements[a], g2.elements[b]
        if a == g1.unit and b == g2.unit:
            names.append("e")
        elif b == g2.unit:
            names.append(f"{na}1")
        elif a == g1.unit:
            names.append(f"{nb}2")
        else:
            names.append(f"{na}1{nb}2")
    table = [[pairs.index((g1.m(a, c), g2.m(b, d))) for (c, d) in pairs] for (a, b) in pairs]
    return make_fin_group(names, table, pairs.index((g1.unit, g2.unit)),
                          name or f"{g1.name}x{g2.name}")


def symmetric_group3() -> FinGroup:
    perms = list(itertools.permutations(range(3)))
    r = (1, 2, 0)
    s = (1, 0, 2)

    def mul(p, q):  # p after q
        return tuple(p[q[i]] for i in range(3))

    ident = (0, 1, 2)
    words = {ident: "e", r: "r", mul(r, r): "r2", s: "s", mul(s, r): "sr",
             mul(s, mul(r, r)): "sr2"}
    names = [words[p] for p in perms]
    table = [[perms.index(mul(p, q)) for q in perms] for p in perms]
    return make_fin_group(names, table, perms.index(ident), "S3")


def trivial_group() -> FinGroup:
    return make_fin_group(["e"], [[0]], 0, "C1")


def fixture_groups() -> dict[str, FinGroup]:
    return {
        "C1": trivial_group(),
        "C2": cyclic_group(2),
        "C3": cyclic_group(3),
        "C4": cyclic_group(4),
        "C2xC2": product_group(cyclic_group(2), cyclic_group(2), "C2xC2"),
        "S3": symmetric_group3(),
    }


# --------------------------------------------------------------------------
# finite categories


@dataclass
class FinCat:
    """A finite category with arbitrary hashable object and morphism labels."""

    objects: tuple
    src: tuple
    tgt: tuple
    comp: dict
    identity: tuple
    labels: tuple = ()

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    def compose(self, a: int, b: int) -> int:
        try:
            return self.comp[a, b]
        except KeyError:
            raise NotComposable("morphisms do not compose", (a, b)) from None

    def hom(self, x: int, y: int) -> list[int]:
        return [m for m in range(len(self.src)) if self.src[m] == x and self.tgt[m] == y]

    def dense(self) -> np.ndarray:
        n = len(self.src)
        table = np.full((n, n), -1, dtype=np.int32)
        for (a, b), c in self.comp.items():
            if 0 <= a < n and 0 <= b < n:
                table[a, b] = c
        return table


_CATEGORY_TAGS = {0: "Totality", 1: "Typing", 2: "Unit", 3: "Assoc", 4: "DanglingReference"}


def _category_scan(src, tgt, table, ident, tags, label):
    out = []
    for code, cells in kernels.category_violations(src, tgt, table, ident):
        out.append(Violation(tags[code], (label,) + tuple(cells)))
    return out


def validate_fincat(C: FinCat) -> ValidationReport:
    col = Collector()
    n_obj = len(C.objects)
    for m in range(len(C.src)):
        col.check(0 <= C.src[m] < n_obj and 0 <= C.tgt[m] < n_obj, "DanglingReference", "morphism", m)
    for x, i in enumerate(C.identity):
        if col.check(0 <= i < len(C.src), "DanglingReference", "identity", x):
            col.check(C.src[i] == x and C.tgt[i] == x, "Typing", "identity", x)
    if col.items:
        return col.report()
    return ValidationReport.of(
        _category_scan(C.src, C.tgt, C.dense(), C.identity, _CATEGORY_TAGS, "compose")
    )


# --------------------------------------------------------------------------
# strict 2-categories


class Cell1Ref(NamedTuple):
    source: int
    target: int
    cell: int


class Cell2Ref(NamedTuple):
    source: int
    target: int
    cell: int
    source1: int
    target1: int


class Fin2Cat:
    """A finite strict 2-category stored as explicit tables.

    ``cells1`` and ``cells2`` are sequences of ``(name, source, target)``; a
    1-cell's endpoints are 0-cell ids and a 2-cell's endpoints are 1-cell ids.
    ``unit1[A]`` is the identity 1-cell of ``A`` and ``id2[X]`` the identity
    2-cell of ``X``. ``vcomp``, ``hcomp1`` and ``hcomp2`` map id pairs to ids.
    """

    def __init__(self, cells0, cells1, cells2, unit1, id2, vcomp, hcomp1, hcomp2,
                 name: str = ""):
        self.name = name
        self.cells0 = tuple(cells0)
        self.names1 = tuple(c[0] for c in cells1)
        self.src1 = tuple(int(c[1]) for c in cells1)
        self.tgt1 = tuple(int(c[2]) for c in cells1)
        self.names2 = tuple(c[0] for c in cells2)
        self.src2 = tuple(int(c[1]) for c in cells2)
        self.tgt2 = tuple(int(c[2]) for c in cells2)
        self.unit1 = tuple(int(u) for u in unit1)
        self.id2 = tuple(int(i) for i in id2)
        self.vc = dict(vcomp)
        self.hc1 = dict(hcomp1)
        self.hc2 = dict(hcomp2)
        self._homs1 = None
        self._homs2 = None
        self._inv2 = None
        self._inv1 = {}
        self._index = None

    # sizes and lookups -----------------------------------------------------

    @property
    def n0(self) -> int:
        return len(self.cells0)

    @property
    def n1(self) -> int:
        return len(self.src1)

    @property
    def n2(self) -> int:
        return len(self.src2)

    def counts(self) -> dict:
        return {"cells0": self.n0, "cells1": self.n1, "cells2": self.n2}

    def _build_homs(self):
        homs1: dict = {}
        for x in range(self.n1):
            homs1.setdefault((self.src1[x], self.tgt1[x]), []).append(x)
        homs2: dict = {}
        for a in range(self.n2):
            homs2.setdefault((self.src2[a], self.tgt2[a]), []).append(a)
        self._homs1, self._homs2 = homs1, homs2
        self._arriving, self._leaving = {}, {}
        for x in range(self.n1):
            self._arriving.setdefault(self.tgt1[x], []).append(x)
            self._leaving.setdefault(self.src1[x], []).append(x)

    def arriving(self, A: int) -> list[int]:
        """1-cells with target ``A``."""
        if self._homs1 is None:
            self._build_homs()
        return self._arriving.get(A, [])

    def leaving(self, A: int) -> list[int]:
        if self._homs1 is None:
            self._build_homs()
        return self._leaving.get(A, [])

    def hom1(self, A: int, B: int) -> list[int]:
        if self._homs1 is None:
            self._build_homs()
        return self._homs1.get((A, B), [])

    def hom2(self, X: int, Y: int) -> list[int]:
        if self._homs2 is None:
            self._build_homs()
        return self._homs2.get((X, Y), [])

    def cells2_of_hom(self, A: int, B: int) -> list[int]:
        return [a for X in self.hom1(A, B) for Y in self.hom1(A, B) for a in self.hom2(X, Y)]

    def hom(self, A: int, B: int) -> FinCat:
        """The hom-category ``B(A, B)`` as a standalone FinCat."""
        objs = self.hom1(A, B)
        opos = {x: i for i, x in enumerate(objs)}
        mors = self.cells2_of_hom(A, B)
        mpos = {a: i for i, a in enumerate(mors)}
        comp = {}
        for a in mors:
            for b in mors:
                if (a, b) in self.vc:
                    comp[mpos[a], mpos[b]] = mpos.get(self.vc[a, b], -1)
        return FinCat(tuple(self.names1[x] for x in objs),
                      tuple(opos[self.src2[a]] for a in mors),
                      tuple(opos[self.tgt2[a]] for a in mors),
                      comp, tuple(mpos[self.id2[x]] for x in objs),
                      tuple(self.names2[a] for a in mors))

    def index(self, level: int, name) -> int:
        if self._index is None:
            self._index = (
                {n: i for i, n in enumerate(self.cells0)},
                {n: i for i, n in enumerate(self.names1)},
                {n: i for i, n in enumerate(self.names2)},
            )
        return self._index[level][name]

    # compositions -------------------------------------------------------

    def v(self, a: int, b: int) -> int:
        """``a`` after ``b`` (vertical)."""
        try:
            return self.vc[a, b]
        except KeyError:
            raise NotComposable("2-cells are not vertically composable", (a, b)) from None

    def vseq(self, *cells: int) -> int:
        """Vertical composite in diagram order: the first argument acts first."""
        out = cells[0]
        for c in cells[1:]:
            out = self.v(c, out)
        return out

    def h(self, x: int, y: int) -> int:
        """``x∘y`` for 1-cells ``y: A -> B`` and ``x: B -> C``."""
        try:
            return self.hc1[x, y]
        except KeyError:
            raise NotComposable("1-cells are not composable", (x, y)) from None

    def hpath(self, *cells: int) -> int:
        """Composite of 1-cells listed in functional order (leftmost acts last)."""
        out = cells[-1]
        for x in reversed(cells[:-1]):
            out = self.h(x, out)
        return out

    def h2(self, a: int, b: int) -> int:
        try:
            return self.hc2[a, b]
        except KeyError:
            raise NotComposable("2-cells are not horizontally composable", (a, b)) from None

    def h2path(self, *cells: int) -> int:
        out = cells[-1]
        for x in reversed(cells[:-1]):
            out = self.h2(x, out)
        return out

    def ident(self, x: int) -> int:
        return self.id2[x]

    def whisker(self, left, cell: int, right=None) -> int:
        """``id_left ∘ cell ∘ id_right``; either side may be ``None``."""
        out = cell
        if left is not None:
            out = self.h2(self.id2[left], out)
        if right is not None:
            out = self.h2(out, self.id2[right])
        return out

    def s0(self, x: int) -> int:
        return self.src1[x]

    def t0(self, x: int) -> int:
        return self.tgt1[x]

    # inverses -----------------------------------------------------------

    def inv2(self, a: int):
        """Vertical inverse of a 2-cell, or ``None``."""
        if self._inv2 is None:
            n = self.n2
            table = np.full((n, n), -1, dtype=np.int32)
            for (p, q), r in self.vc.items():
                table[p, q] = r
            self._inv2 = [None if i < 0 else int(i)
                          for i in kernels.inverse_table(self.src2, self.tgt2, table, self.id2)]
        return self._inv2[a]

    def is_invertible2(self, a: int) -> bool:
        return self.inv2(a) is not None

    def inv1(self, x: int):
        """Strict inverse of a 1-cell (``x∘y = I`` and ``y∘x = I``) or ``None``."""
        if x not in self._inv1:
            found = None
            A, B = self.src1[x], self.tgt1[x]
            for y in self.hom1(B, A):
                if self.hc1.get((x, y)) == self.unit1[B] and self.hc1.get((y, x)) == self.unit1[A]:
                    found = y
                    break
            self._inv1[x] = found
        return self._inv1[x]

    def is_equivalence1(self, x: int) -> bool:
        """Whether ``x`` has a quasi-inverse up to invertible 2-cells."""
        key = ("eq", x)
        if key not in self._inv1:
            A, B = self.src1[x], self.tgt1[x]

            def iso(p, q):
                return any(self.inv2(a) is not None for a in self.hom2(p, q))

            self._inv1[key] = any(
                iso(self.hc1[y, x], self.unit1[A]) and iso(self.hc1[x, y], self.unit1[B])
                for y in self.hom1(B, A))
        return self._inv1[key]

    # canonical form -----------------------------------------------------

    def tables(self) -> tuple:
        """Everything that defines the 2-category, in canonical order."""
        return (
            self.cells0,
            tuple(zip(self.names1, self.src1, self.tgt1)),
            tuple(zip(self.names2, self.src2, self.tgt2)),
            self.unit1,
            self.id2,
            tuple(sorted(self.vc.items())),
            tuple(sorted(self.hc1.items())),
            tuple(sorted(self.hc2.items())),
        )

    def same_tables(self, other: "Fin2Cat") -> bool:
        return self is other or self.tables() == other.tables()

    def dense(self):
        n1, n2 = self.n1, self.n2

        def fill(n, items):
            table = np.full((n, n), -1, dtype=np.int32)
            for (a, b), c in items:
                if 0 <= a < n and 0 <= b < n:
                    table[a, b] = c
            return table

        return fill(n1, self.hc1.items()), fill(n2, self.vc.items()), fill(n2, self.hc2.items())

    def __repr__(self):
        return f"Fin2Cat({self.name or '?'}: {self.n0}/{self.n1}/{self.n2})"


# --------------------------------------------------------------------------
# validation

_VERTICAL_TAGS = {0: "Totality", 1: "Typing", 2: "VerticalUnit", 3: "VerticalAssoc",
                  4: "DanglingReference"}
_HCOMP1_TAGS = {0: "Totality", 1: "Typing", 2: "UnitOrAssoc", 3: "UnitOrAssoc",
                4: "DanglingReference"}
_HCOMP2_TAGS = {0: "Totality", 1: "Typing", 2: "HorizontalUnit", 3: "HorizontalAssoc",
                4: "DanglingReference", 5: "IdentityPreservation", 6: "Interchange"}


def _reference_check(B: Fin2Cat) -> list[Violation]:
    col = Collector()
    col.check(B.n0 >= 1, "NoZeroCells")
    for x in range(B.n1):
        col.check(0 <= B.src1[x] < B.n0 and 0 <= B.tgt1[x] < B.n0, "DanglingReference", "cell1", x)
    for a in range(B.n2):
        if col.check(0 <= B.src2[a] < B.n1 and 0 <= B.tgt2[a] < B.n1,
                     "DanglingReference", "cell2", a):
            X, Y = B.src2[a], B.tgt2[a]
            col.check(B.src1[X] == B.src1[Y] and B.tgt1[X] == B.tgt1[Y], "Typing", "cell2", a)
    col.check(len(B.unit1) == B.n0, "DanglingReference", "unit1")
    for A, u in enumerate(B.unit1):
        if col.check(0 <= u < B.n1, "DanglingReference", "unit1", A):
            col.check(B.src1[u] == A and B.tgt1[u] == A, "Typing", "unit1", A)
    col.check(len(B.id2) == B.n1, "DanglingReference", "id2")
    for x, i in enumerate(B.id2):
        if col.check(0 <= i < B.n2, "DanglingReference", "id2", x):
            col.check(B.src2[i] == x and B.tgt2[i] == x, "Typing", "id2", x)
    for label, table, n in (("vcomp", B.vc, B.n2), ("hcomp1", B.hc1, B.n1), ("hcomp2", B.hc2, B.n2)):
        for (p, q), r in table.items():
            col.check(0 <= p < n and 0 <= q < n, "DanglingReference", label, p, q)
            col.check(0 <= r < n, "DanglingReference", label, p, q, r)
    return col.items


def validate_2category(B: Fin2Cat) -> ValidationReport:
    """Exhaustively check every strict 2-category axiom on the stored tables."""
    problems = _reference_check(B)
    if problems:
        return ValidationReport.of(problems)
    h1, vc, h2 = B.dense()
    found = _category_scan(B.src2, B.tgt2, vc, B.id2, _VERTICAL_TAGS, "vcomp")
    found += _category_scan(B.src1, B.tgt1, h1, B.unit1, _HCOMP1_TAGS, "hcomp1")
    if not found:
        for code, cells in kernels.horizontal_violations(
                B.src1, B.tgt1, h1, B.unit1, B.src2, B.tgt2, h2, vc, B.id2):
            found.append(Violation(_HCOMP2_TAGS[code], ("hcomp2",) + tuple(cells)))
    return ValidationReport.of(found)


# --------------------------------------------------------------------------
# reference-level operations


def ref1(B: Fin2Cat, x: int) -> Cell1Ref:
    return Cell1Ref(B.src1[x], B.tgt1[x], x)


def ref2(B: Fin2Cat, a: int) -> Cell2Ref:
    X = B.src2[a]
    return Cell2Ref(B.src1[X], B.tgt1[X], a, X, B.tgt2[a])


def _cell(r):
    return r.cell if isinstance(r, (Cell1Ref, Cell2Ref)) else int(r)


def hcompose(B: Fin2Cat, X, Y) -> Cell1Ref:
    """``X∘Y`` where ``Y`` is applied first."""
    x, y = _cell(X), _cell(Y)
    if B.tgt1[y] != B.src1[x]:
        raise NotComposable("endpoints do not match", (x, y))
    return ref1(B, B.h(x, y))


def vcompose(B: Fin2Cat, a, b) -> Cell2Ref:
    """``a`` after ``b``."""
    p, q = _cell(a), _cell(b)
    if B.tgt2[q] != B.src2[p]:
        raise NotComposable("endpoints do not match", (p, q))
    return ref2(B, B.v(p, q))


def hcompose2(B: Fin2Cat, a, b) -> Cell2Ref:
    p, q = _cell(a), _cell(b)
    if B.tgt1[B.src2[q]] != B.src1[B.src2[p]]:
        raise NotComposable("endpoints do not match", (p, q))
    return ref2(B, B.h2(p, q))


def find_inverse_1cell(B: Fin2Cat, X):
    """The strict inverse of ``X`` as a reference, or ``None``."""
    y = B.inv1(_cell(X))
    return None if y is None else ref1(B, y)


# --------------------------------------------------------------------------
# fixture constructors


def delooping(G: FinGroup, name: str = "") -> Fin2Cat:
    """One 0-cell, 1-cells the group elements, identity 2-cells only."""
    n = G.order
    cells1 = [(G.elements[x], 0, 0) for x in G]
    cells2 = [(f"id_{G.elements[x]}", x, x) for x in G]
    hc = {(x, y): G.m(x, y) for x in G for y in G}
    return Fin2Cat(["*"], cells1, cells2, [G.unit], list(range(n)),
                   {(x, x): x for x in G}, hc, hc, name or f"Sigma{G.name}")


def unit_2cat() -> Fin2Cat:
    return Fin2Cat(["*"], [("I", 0, 0)], [("id_I", 0, 0)], [0], [0],
                   {(0, 0): 0}, {(0, 0): 0}, {(0, 0): 0}, "unit")


def op_2category(B: Fin2Cat) -> Fin2Cat:
    """Reverse the 1-cells; 2-cells keep their direction."""
    cells1 = list(zip(B.names1, B.tgt1, B.src1))
    cells2 = list(zip(B.names2, B.src2, B.tgt2))
    return Fin2Cat(B.cells0, cells1, cells2, B.unit1, B.id2, B.vc,
                   {(y, x): z for (x, y), z in B.hc1.items()},
                   {(b, a): c for (a, b), c in B.hc2.items()},
                   f"{B.name}^op")


def delooping_with_2cells(G: FinGroup, A: FinGroup, name: str = "") -> Fin2Cat:
    """One 0-cell, 1-cells ``G``, and for each ``g`` an ``A``-torsor of endo 2-cells.

    ``A`` must be abelian; horizontal composition multiplies both components.
    This is the strict 2-group with trivial crossed-module action.
    """
    for a in A:
        for b in A:
            if A.m(a, b) != A.m(b, a):
                raise NotAssociative("2-cell group must be abelian", (a, b))
    cells1 = [(G.elements[x], 0, 0) for x in G]
    code = {(x, a): x * A.order + a for x in G for a in A}
    cells2 = [(f"{G.elements[x]}:{A.elements[a]}", x, x) for x in G for a in A]
    vc = {(code[x, a], code[x, b]): code[x, A.m(a, b)] for x in G for a in A for b in A}
    hc2 = {(code[x, a], code[y, b]): code[G.m(x, y), A.m(a, b)]
           for x in G for y in G for a in A for b in A}
    hc1 = {(x, y): G.m(x, y) for x in G for y in G}
    return Fin2Cat(["*"], cells1, cells2, [G.unit], [code[x, A.unit] for x in G],
                   vc, hc1, hc2, name or f"Sigma{G.name}[{A.name}]")


def arrow_2cat() -> Fin2Cat:
    """Two 0-cells with a single non-identity 1-cell ``f: 0 -> 1``."""
    cells1 = [("I0", 0, 0), ("I1", 1, 1), ("f", 0, 1)]
    cells2 = [("id_I0", 0, 0), ("id_I1", 1, 1), ("id_f", 2, 2)]
    hc1 = {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2}
    return Fin2Cat(["a", "b"], cells1, cells2, [0, 1], [0, 1, 2],
                   {(i, i): i for i in range(3)}, hc1, dict(hc1), "arrow")


__all__ = [
    "Cell1Ref", "Cell2Ref", "Collector", "FinCat", "FinGroup", "Fin2Cat",
    "ValidationReport", "Violation", "arrow_2cat", "cyclic_group", "delooping",
    "delooping_with_2cells", "find_inverse_1cell", "fixture_groups", "hcompose",
    "hcompose2", "make_fin_group", "op_2category", "product_group", "ref1", "ref2",
    "symmetric_group3", "trivial_group", "unit_2cat", "validate_2category",
    "validate_fincat", "vcompose",
]

