"""Strictification of a unital group action.

Given an action of ``G`` on ``B`` by 2-functors, the 2-category ``B[G]`` has
as 0-cells ``G``-indexed families ``A_g`` glued by equivalences
``θ_{g,h}: F_g(A_h) → A_{gh}`` and invertible 2-cells
``α_{g,h,f}: θ_{gh,f}∘χ⁰_{g,h} ⇒ θ_{g,hf}∘F_g(θ_{h,f})``. Right translation
of the indices gives a strict action on ``B[G]``, and ``B`` embeds into it
by a G-pseudofunctor that is a biequivalence.

Families are stored flat: ``theta[g*n + h]`` and ``alpha[(g*n + h)*n + f]``
where ``n = |G|``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._search import Budget, solve
from .catalog import Catalog, assemble
from .core2 import Collector, Fin2Cat, ValidationReport
from .errors import RequiresTwoFunctors, SearchBudgetExceeded
from .gaction import GPseudoFunctor, GroupAction2, action_from_automorphisms, pi_source, pi_target
from .pseudo import Modification, PseudoNat, compose_pseudofunctors, two_functor


@dataclass(frozen=True)
class BGZeroCell:
    A: tuple
    theta: tuple
    alpha: tuple

    @property
    def order(self) -> int:
        return len(self.A)

    def th(self, g: int, h: int) -> int:
        return self.theta[g * len(self.A) + h]

    def al(self, g: int, h: int, f: int) -> int:
        n = len(self.A)
        return self.alpha[(g * n + h) * n + f]


@dataclass(frozen=True)
class BG1Cell:
    source: BGZeroCell
    target: BGZeroCell
    X: tuple
    l: tuple

    def lg(self, g: int, h: int) -> int:
        return self.l[g * len(self.X) + h]


@dataclass(frozen=True)
class BG2Cell:
    source: BG1Cell
    target: BG1Cell
    m: tuple


@dataclass(frozen=True)
class BGCaps:
    max_group_order: int = 4
    max_hom_1cells: int = 8
    search_budget: int = 10**6


def _require_two_functors(action: GroupAction2):
    if not action.by_two_functors:
        raise RequiresTwoFunctors(
            "strictification needs an action by unital 2-functors; "
            "replace pseudofunctor components by equivalent 2-functors first", (action.name,))


# --------------------------------------------------------------------------
# axiom instances, parametrised by accessors so search and validation share them


def _alpha_ends(action, A, th, g, h, f):
    """Source and target 1-cells of ``α_{g,h,f}``."""
    B, m = action.base, action.group.m
    src = B.h(th(m(g, h), f), action.c0(g, h, A(f)))
    tgt = B.h(th(g, m(h, f)), action.act1(g, th(h, f)))
    return src, tgt


def _obj_axiom(action, A, th, al, g, h, f, k) -> bool:
    B, m = action.base, action.group.m
    Ak = A(k)
    ghf = m(m(g, h), f)
    E1 = B.whisker(th(ghf, k), action.omega[g, h, f].comp[Ak])
    E2 = B.whisker(None, al(g, m(h, f), k), action.act1(g, action.c0(h, f, Ak)))
    E3 = B.whisker(th(g, m(m(h, f), k)), action.act2(g, al(h, f, k)))
    Q1 = B.whisker(None, al(m(g, h), f, k), action.c0(g, h, action.act0(f, Ak)))
    nat = B.inv2(action.chi[g, h].comp2[th(f, k)])
    if nat is None:
        return False
    Q2 = B.whisker(th(m(g, h), m(f, k)), nat)
    Q3 = B.whisker(None, al(g, h, m(f, k)), action.act1(g, action.act1(h, th(f, k))))
    return B.vseq(E1, E2, E3) == B.vseq(Q1, Q2, Q3)


def _l_ends(action, P, Q, X, g, h):
    """Source and target 1-cells of ``l_{g,h}`` for a 1-cell ``P → Q``."""
    B, m = action.base, action.group.m
    return B.h(Q.th(g, h), action.act1(g, X(h))), B.h(X(m(g, h)), P.th(g, h))


def _one_cell_axiom(action, P, Q, X, l, f, g, h) -> bool:
    B, m = action.base, action.group.m
    K1 = B.whisker(None, Q.al(f, g, h), action.act1(f, action.act1(g, X(h))))
    K2 = B.whisker(Q.th(f, m(g, h)), action.act2(f, l(g, h)))
    K3 = B.whisker(None, l(f, m(g, h)), action.act1(f, P.th(g, h)))
    M1 = B.whisker(Q.th(m(f, g), h), action.chi[f, g].comp2[X(h)])
    M2 = B.whisker(None, l(m(f, g), h), action.c0(f, g, P.A[h]))
    M3 = B.whisker(X(m(m(f, g), h)), P.al(f, g, h))
    return B.vseq(K1, K2, K3) == B.vseq(M1, M2, M3)


def _two_cell_axiom(action, src: BG1Cell, tgt: BG1Cell, mg, g, h) -> bool:
    B, m = action.base, action.group.m
    P, Q = src.source, src.target
    lhs = B.v(B.whisker(None, mg(m(g, h)), P.th(g, h)), src.lg(g, h))
    rhs = B.v(tgt.lg(g, h), B.whisker(Q.th(g, h), action.act2(g, mg(h))))
    return lhs == rhs


def _invertible_in(B: Fin2Cat, src: int, tgt: int) -> list[int]:
    return [a for a in B.hom2(src, tgt) if B.inv2(a) is not None]


# --------------------------------------------------------------------------
# validators


def validate_bg_0cell(action: GroupAction2, P: BGZeroCell) -> ValidationReport:
    G, B = action.group, action.base
    n = G.order
    e = G.unit
    col = Collector()
    if not col.check(len(P.A) == n and len(P.theta) == n * n and len(P.alpha) == n ** 3, "Shape"):
        return col.report()
    if not col.check(all(0 <= a < B.n0 for a in P.A), "DanglingReference", "A"):
        return col.report()
    for g, h in itertools.product(G, repeat=2):
        x = P.th(g, h)
        ok = col.check(0 <= x < B.n1 and B.src1[x] == action.act0(g, P.A[h])
                       and B.tgt1[x] == P.A[G.m(g, h)], "Typing", "theta", g, h)
        if ok:
            col.check(B.is_equivalence1(x), "Equivalence", "theta", g, h)
    for g in G:
        col.check(P.th(e, g) == B.unit1[P.A[g]], "Unitality", "theta", e, g)
    if col.items:
        return col.report()
    for g, h, f in itertools.product(G, repeat=3):
        a = P.al(g, h, f)
        src, tgt = _alpha_ends(action, lambda i: P.A[i], P.th, g, h, f)
        ok = col.check(0 <= a < B.n2 and B.src2[a] == src and B.tgt2[a] == tgt, "Typing", "alpha", g, h, f)
        if ok:
            col.check(B.inv2(a) is not None, "Invertibility", "alpha", g, h, f)
            if e in (g, h):
                col.check(a == B.id2[src], "Unitality", "alpha", g, h, f)
    if col.items:
        return col.report()
    for g, h, f, k in itertools.product(G, repeat=4):
        col.check(_obj_axiom(action, lambda i: P.A[i], P.th, P.al, g, h, f, k), "ObjAxiom", g, h, f, k)
    return col.report()


def validate_bg_1cell(action: GroupAction2, c: BG1Cell) -> ValidationReport:
    G, B = action.group, action.base
    n = G.order
    P, Q = c.source, c.target
    col = Collector()
    if not col.check(len(c.X) == n and len(c.l) == n * n, "Shape"):
        return col.report()
    for g in G:
        x = c.X[g]
        col.check(0 <= x < B.n1 and B.src1[x] == P.A[g] and B.tgt1[x] == Q.A[g], "Typing", "X", g)
    if col.items:
        return col.report()
    X = c.X.__getitem__
    for g, h in itertools.product(G, repeat=2):
        a = c.lg(g, h)
        src, tgt = _l_ends(action, P, Q, X, g, h)
        ok = col.check(0 <= a < B.n2 and B.src2[a] == src and B.tgt2[a] == tgt, "Typing", "l", g, h)
        if ok:
            col.check(B.inv2(a) is not None, "Invertibility", "l", g, h)
            if g == G.unit:
                col.check(a == B.id2[c.X[h]], "Unitality", "l", g, h)
    if col.items:
        return col.report()
    for f, g, h in itertools.product(G, repeat=3):
        col.check(_one_cell_axiom(action, P, Q, X, c.lg, f, g, h), "OneCellAxiom", f, g, h)
    return col.report()


def validate_bg_2cell(action: GroupAction2, c: BG2Cell) -> ValidationReport:
    G, B = action.group, action.base
    col = Collector()
    src, tgt = c.source, c.target
    if not col.check(src.source == tgt.source and src.target == tgt.target, "Shape", "endpoints"):
        return col.report()
    if not col.check(len(c.m) == G.order, "Shape"):
        return col.report()
    for g in G:
        a = c.m[g]
        col.check(0 <= a < B.n2 and B.src2[a] == src.X[g] and B.tgt2[a] == tgt.X[g], "Typing", "m", g)
    if col.items:
        return col.report()
    for g, h in itertools.product(G, repeat=2):
        col.check(_two_cell_axiom(action, src, tgt, c.m.__getitem__, g, h), "TwoCellAxiom", g, h)
    return col.report()


# --------------------------------------------------------------------------
# enumeration


def _zero_cells(action: GroupAction2, budget: Budget) -> list[BGZeroCell]:
    G, B = action.group, action.base
    e, m = G.unit, G.m
    fixed_t = {(e, g): None for g in G}
    tvars = [("t", g, h) for g in G for h in G if g != e]
    avars = [("a", g, h, f) for g in G for h in G for f in G if e not in (g, h)]
    order = [("A", g) for g in G] + tvars + avars
    varset = set(order)

    def A_of(asg):
        return lambda i: asg["A", i]

    def th_of(asg):
        return lambda g, h: B.unit1[asg["A", h]] if (g, h) in fixed_t else asg["t", g, h]

    def al_of(asg):
        th = th_of(asg)

        def al(g, h, f):
            if e in (g, h):
                return B.id2[_alpha_ends(action, A_of(asg), th, g, h, f)[0]]
            return asg["a", g, h, f]
        return al

    def domain(var, asg):
        if var[0] == "A":
            return range(B.n0)
        if var[0] == "t":
            _, g, h = var
            return [x for x in B.hom1(action.act0(g, asg["A", h]), asg["A", m(g, h)]) if B.is_equivalence1(x)]
        _, g, h, f = var
        return _invertible_in(B, *_alpha_ends(action, A_of(asg), th_of(asg), g, h, f))

    def tvar(g, h):
        return ("t", g, h) if g != e else ("A", h)

    constraints = []
    for g, h, f in itertools.product(G, repeat=3):
        if e in (g, h):
            continue
        deps = [tvar(m(g, h), f), tvar(g, m(h, f)), tvar(h, f)]
        constraints.append((deps, lambda asg, g=g, h=h, f=f: bool(
            _invertible_in(B, *_alpha_ends(action, A_of(asg), th_of(asg), g, h, f)))))
    for g, h, f, k in itertools.product(G, repeat=4):
        refs = [("a", g, m(h, f), k), ("a", h, f, k), ("a", m(g, h), f, k), ("a", g, h, m(f, k))]
        deps = [v for v in refs if v in varset] or [v for v in tvars + [("A", x) for x in G]]
        constraints.append((deps, lambda asg, q=(g, h, f, k): _obj_axiom(
            action, A_of(asg), th_of(asg), al_of(asg), *q)))

    out = []
    for asg in solve(order, domain, constraints, budget):
        th, al = th_of(asg), al_of(asg)
        out.append(BGZeroCell(
            tuple(asg["A", g] for g in G),
            tuple(th(g, h) for g in G for h in G),
            tuple(al(g, h, f) for g in G for h in G for f in G)))
    return out


def _one_cells(action: GroupAction2, P: BGZeroCell, Q: BGZeroCell, budget: Budget) -> list[BG1Cell]:
    G, B = action.group, action.base
    e, m = G.unit, G.m
    lvars = [("l", g, h) for g in G for h in G if g != e]
    order = [("X", g) for g in G] + lvars

    def X_of(asg):
        return lambda g: asg["X", g]

    def l_of(asg):
        return lambda g, h: B.id2[asg["X", h]] if g == e else asg["l", g, h]

    def domain(var, asg):
        if var[0] == "X":
            return B.hom1(P.A[var[1]], Q.A[var[1]])
        _, g, h = var
        return _invertible_in(B, *_l_ends(action, P, Q, X_of(asg), g, h))

    constraints = []
    for g, h in itertools.product(G, repeat=2):
        if g != e:
            constraints.append(([("X", h), ("X", m(g, h))], lambda asg, g=g, h=h: bool(
                _invertible_in(B, *_l_ends(action, P, Q, X_of(asg), g, h)))))
    for f, g, h in itertools.product(G, repeat=3):
        refs = [("l", g, h), ("l", f, m(g, h)), ("l", m(f, g), h)]
        deps = [v for v in refs if v[1] != e] or [("X", x) for x in G]
        constraints.append((deps, lambda asg, q=(f, g, h): _one_cell_axiom(
            action, P, Q, X_of(asg), l_of(asg), *q)))

    out = []
    for asg in solve(order, domain, constraints, budget):
        lf = l_of(asg)
        out.append(BG1Cell(P, Q, tuple(asg["X", g] for g in G),
                           tuple(lf(g, h) for g in G for h in G)))
    return out


def _two_cells(action: GroupAction2, src: BG1Cell, tgt: BG1Cell, budget: Budget) -> list[BG2Cell]:
    G, B, m = action.group, action.base, action.group.m
    order = [("m", g) for g in G]

    def domain(var, asg):
        return B.hom2(src.X[var[1]], tgt.X[var[1]])

    constraints = [([("m", h), ("m", m(g, h))],
                    lambda asg, g=g, h=h: _two_cell_axiom(action, src, tgt, lambda i: asg["m", i], g, h))
                   for g in G for h in G]
    return [BG2Cell(src, tgt, tuple(asg["m", g] for g in G))
            for asg in solve(order, domain, constraints, budget)]


def identity_bg_1cell(action: GroupAction2, P: BGZeroCell) -> BG1Cell:
    B = action.base
    return BG1Cell(P, P, tuple(B.unit1[a] for a in P.A), tuple(B.id2[x] for x in P.theta))


def compose_bg_1cells(action: GroupAction2, X: BG1Cell, Y: BG1Cell) -> BG1Cell:
    """``(X, l)∘(Y, s)`` with ``t_{g,h} = (1_{X_{gh}}∘s_{g,h})(l_{g,h}∘1_{F_g(Y_h)})``."""
    G, B = action.group, action.base
    Z = tuple(B.h(X.X[g], Y.X[g]) for g in G)
    t = tuple(B.v(B.whisker(X.X[G.m(g, h)], Y.lg(g, h)), B.whisker(None, X.lg(g, h), action.act1(g, Y.X[h])))
              for g in G for h in G)
    return BG1Cell(Y.source, X.target, Z, t)


def enumerate_BG(action: GroupAction2, caps: BGCaps = BGCaps()) -> Catalog:
    """Enumerate every cell of ``B[G]`` and assemble the tables."""
    _require_two_functors(action)
    G, B = action.group, action.base
    if G.order > caps.max_group_order:
        raise SearchBudgetExceeded("group order for B[G] enumeration", caps.max_group_order)
    budget = Budget(caps.search_budget, "B[G] candidate assignments")
    zero = _zero_cells(action, budget)
    one: list[BG1Cell] = []
    for P in zero:
        for Q in zero:
            cells = _one_cells(action, P, Q, budget)
            if len(cells) > caps.max_hom_1cells:
                raise SearchBudgetExceeded("1-cells per hom of B[G]", caps.max_hom_1cells)
            one.extend(cells)
    by_hom: dict = {}
    for c in one:
        by_hom.setdefault((c.source, c.target), []).append(c)
    two = [cell for cells in by_hom.values() for x in cells for y in cells
           for cell in _two_cells(action, x, y, budget)]
    return assemble(
        action, f"{B.name}[{G.name}]", zero, one, two,
        unit_of=lambda P: identity_bg_1cell(action, P),
        id2_of=lambda c: BG2Cell(c, c, tuple(B.id2[x] for x in c.X)),
        compose1=lambda x, y: compose_bg_1cells(action, x, y),
        vcompose=lambda b, a: BG2Cell(a.source, b.target, tuple(B.v(b.m[g], a.m[g]) for g in G)),
        hcompose=lambda a, b: BG2Cell(compose_bg_1cells(action, a.source, b.source),
                                      compose_bg_1cells(action, a.target, b.target),
                                      tuple(B.h2(a.m[g], b.m[g]) for g in G)))


# --------------------------------------------------------------------------
# strict action by right translation


def _translate0(P: BGZeroCell, g: int, G) -> BGZeroCell:
    r = lambda x: G.m(x, g)  # noqa: E731
    return BGZeroCell(tuple(P.A[r(x)] for x in G),
                      tuple(P.th(x, r(y)) for x in G for y in G),
                      tuple(P.al(x, y, r(z)) for x in G for y in G for z in G))


def _translate1(c: BG1Cell, g: int, G) -> BG1Cell:
    return BG1Cell(_translate0(c.source, g, G), _translate0(c.target, g, G),
                   tuple(c.X[G.m(x, g)] for x in G),
                   tuple(c.lg(x, G.m(y, g)) for x in G for y in G))


def _translate2(c: BG2Cell, g: int, G) -> BG2Cell:
    return BG2Cell(_translate1(c.source, g, G), _translate1(c.target, g, G),
                   tuple(c.m[G.m(x, g)] for x in G))


def strict_action_on_BG(bg: Catalog) -> GroupAction2:
    G = bg.action.group
    L = {}
    for g in G:
        L[g] = two_functor(
            bg.cat, bg.cat,
            [bg.ids0[_translate0(P, g, G)] for P in bg.zero],
            [bg.ids1[_translate1(c, g, G)] for c in bg.one],
            [bg.ids2[_translate2(c, g, G)] for c in bg.two],
            f"L_{G.elements[g]}")
    return action_from_automorphisms(G, bg.cat, L, f"L on {bg.cat.name}")


# --------------------------------------------------------------------------
# the embedding


def h_zero(action: GroupAction2, A: int) -> BGZeroCell:
    G = action.group
    return BGZeroCell(tuple(action.act0(g, A) for g in G),
                      tuple(action.c0(g, h, A) for g in G for h in G),
                      tuple(action.omega[g, h, f].comp[A] for g in G for h in G for f in G))


def h_one(action: GroupAction2, x: int) -> BG1Cell:
    G, B = action.group, action.base
    return BG1Cell(h_zero(action, B.src1[x]), h_zero(action, B.tgt1[x]),
                   tuple(action.act1(g, x) for g in G),
                   tuple(action.chi[g, h].comp2[x] for g in G for h in G))


def h_two(action: GroupAction2, a: int) -> BG2Cell:
    G, B = action.group, action.base
    return BG2Cell(h_one(action, B.src2[a]), h_one(action, B.tgt2[a]), tuple(action.act2(g, a) for g in G))


def gamma_one_cell(action: GroupAction2, g: int, A: int) -> BG1Cell:
    """``γ⁰_A: H(F_g A) → L_g H(A)`` with ``X_x = χ⁰_{x,g}`` and ``l_{f,h} = ω⁻¹_{f,h,g}``."""
    G, B = action.group, action.base
    return BG1Cell(h_zero(action, action.act0(g, A)), _translate0(h_zero(action, A), g, G),
                   tuple(action.c0(x, g, A) for x in G),
                   tuple(B.inv2(action.omega[f, h, g].comp[A]) for f in G for h in G))


def embedding_H(bg: Catalog) -> GPseudoFunctor:
    """``H: B → B[G]`` with its canonical G-structure ``(γ, Π)``."""
    action = bg.action
    _require_two_functors(action)
    G, B = action.group, action.base
    T = bg.cat
    H = two_functor(B, T,
                    [bg.ids0[h_zero(action, A)] for A in range(B.n0)],
                    [bg.ids1[h_one(action, x)] for x in range(B.n1)],
                    [bg.ids2[h_two(action, a)] for a in range(B.n2)], "H")
    L = strict_action_on_BG(bg)
    gamma = {}
    for g in G:
        comp0 = tuple(bg.ids1[gamma_one_cell(action, g, A)] for A in range(B.n0))
        comp2 = []
        for x in range(B.n1):
            s, t = B.src1[x], B.tgt1[x]
            src = bg.one[T.h(comp0[t], H.map1[action.act1(g, x)])]
            tgt = bg.one[T.h(L.act1(g, H.map1[x]), comp0[s])]
            comp2.append(bg.ids2[BG2Cell(src, tgt, tuple(action.chi[y, g].comp2[x] for y in G))])
        gamma[g] = PseudoNat(compose_pseudofunctors(H, action.F[g]), compose_pseudofunctors(L.F[g], H),
                             comp0, tuple(comp2))
    Hs = GPseudoFunctor(H, action, L, gamma, {}, "H")
    for f in G:
        for g in G:
            src, tgt = pi_source(Hs, f, g), pi_target(Hs, f, g)
            comps = []
            for A in range(B.n0):
                cell = BG2Cell(bg.one[src.comp0[A]], bg.one[tgt.comp0[A]],
                               tuple(action.omega[x, f, g].comp[A] for x in G))
                comps.append(bg.ids2[cell])
            Hs.Pi[f, g] = Modification(src, tgt, tuple(comps))
    return Hs


def check_H_biequivalence(bg: Catalog, Hs: GPseudoFunctor | None = None) -> ValidationReport:
    """Bi-essential surjectivity, local essential surjectivity and local full faithfulness of ``H``."""
    action = bg.action
    G, B = action.group, action.base
    e = G.unit
    T = bg.cat
    Hs = Hs or embedding_H(bg)
    H = Hs.H
    col = Collector()
    for i, P in enumerate(bg.zero):
        cell = BG1Cell(h_zero(action, P.A[e]), P,
                       tuple(P.th(g, e) for g in G),
                       tuple(B.inv2(P.al(g, h, e)) for g in G for h in G))
        k = bg.ids1.get(cell)
        if col.check(k is not None, "EssentiallySurjective", f"P{i}", "not a 1-cell"):
            col.check(T.is_equivalence1(k), "EssentiallySurjective", f"P{i}", "not an equivalence")
    images = {H.obj[A]: A for A in range(B.n0)}
    for k, c in enumerate(bg.one):
        s, t = bg.ids0[c.source], bg.ids0[c.target]
        if s not in images or t not in images or bg.zero[s] != h_zero(action, images[s]) \
                or bg.zero[t] != h_zero(action, images[t]):
            continue
        x1 = c.X[e]
        cell = BG2Cell(h_one(action, x1), c, tuple(c.lg(g, e) for g in G))
        w = bg.ids2.get(cell)
        if col.check(w is not None, "LocallyEssentiallySurjective", f"X{k}", "not a 2-cell"):
            col.check(T.inv2(w) is not None, "LocallyEssentiallySurjective", f"X{k}", "not invertible")
    for x in range(B.n1):
        for y in B.hom1(B.src1[x], B.tgt1[x]):
            cells = B.hom2(x, y)
            col.check(len({H.map2[a] for a in cells}) == len(cells), "LocallyFaithful", x, y)
            for w in T.hom2(H.map1[x], H.map1[y]):
                mg = bg.two[w].m
                col.check(all(mg[g] == action.act2(g, mg[e]) for g in G), "LocallyFull", x, y, f"m{w}")
    return col.report()
