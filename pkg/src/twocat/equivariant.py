"""The equivariant 2-category ``B^G`` in unpacked form.

An equivariant 0-cell is ``(A, U, Π)``: a 0-cell ``A``, strictly invertible
1-cells ``U_g: A → F_g(A)`` with ``U_1 = I_A``, and invertible 2-cells
``Π_{g,h}: χ⁰_{g,h}∘F_g(U_h)∘U_g ⇒ U_{gh}``. An equivariant 1-cell is
``(θ, θ_g)`` with ``θ_g: F_g(θ)∘U_g ⇒ Ũ_g∘θ``, and an equivariant 2-cell is
a 2-cell ``α: θ ⇒ σ`` commuting with the ``θ_g`` and ``σ_g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._search import Budget, solve
from .catalog import Catalog, assemble
from .core2 import Collector, ValidationReport, unit_2cat
from .errors import NotComposable, RequiresTwoFunctors
from .gaction import (
    GPseudoFunctor,
    GroupAction2,
    make_g_pseudonat,
    pi_source,
    pi_target,
    trivial_action,
)
from .pseudo import Modification, PseudoFunctor, PseudoNat, compose_pseudofunctors, two_functor

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class EqZeroCell:
    A: int
    U: tuple
    Pi: tuple

    def pi(self, g: int, h: int) -> int:
        return self.Pi[g * len(self.U) + h]


@dataclass(frozen=True)
class Eq1Cell:
    source: EqZeroCell
    target: EqZeroCell
    theta: int
    theta_g: tuple


@dataclass(frozen=True)
class Eq2Cell:
    source: Eq1Cell
    target: Eq1Cell
    alpha: int


# --------------------------------------------------------------------------
# axiom instances


def _pi_ends(action, A, U, g, h):
    B = action.base
    return B.hpath(action.c0(g, h, A), action.act1(g, U(h)), U(g)), U(action.group.m(g, h))


def _pi_axiom(action, A, U, Pi, f, g, h) -> bool:
    B, m = action.base, action.group.m
    lhs = B.vseq(
        B.whisker(None, action.omega[f, g, h].comp[A],
                  B.hpath(action.act1(f, action.act1(g, U(h))), action.act1(f, U(g)), U(f))),
        B.whisker(action.c0(f, m(g, h), A), action.act2(f, Pi(g, h)), U(f)),
        Pi(f, m(g, h)),
    )
    rhs = B.vseq(
        B.whisker(action.c0(m(f, g), h, A), action.chi[f, g].comp2[U(h)],
                  B.h(action.act1(f, U(g)), U(f))),
        B.whisker(B.h(action.c0(m(f, g), h, A), action.act1(m(f, g), U(h))), Pi(f, g)),
        Pi(m(f, g), h),
    )
    return lhs == rhs


def _theta_g_ends(action, P: EqZeroCell, Q: EqZeroCell, theta: int, g: int):
    B = action.base
    return B.h(action.act1(g, theta), P.U[g]), B.h(Q.U[g], theta)


def _one_cell_axiom(action, P, Q, theta, tg, g, f) -> bool:
    B, m = action.base, action.group.m
    lhs = B.vseq(
        B.whisker(action.c0(g, f, Q.A), action.act2(g, tg(f)), P.U[g]),
        B.whisker(B.h(action.c0(g, f, Q.A), action.act1(g, Q.U[f])), tg(g)),
        B.whisker(None, Q.pi(g, f), theta),
    )
    rhs = B.vseq(
        B.whisker(None, action.chi[g, f].comp2[theta], B.h(action.act1(g, P.U[f]), P.U[g])),
        B.whisker(action.act1(m(g, f), theta), P.pi(g, f)),
        tg(m(g, f)),
    )
    return lhs == rhs


def _two_cell_axiom(action, src: Eq1Cell, tgt: Eq1Cell, alpha: int, g: int) -> bool:
    B = action.base
    lhs = B.v(B.whisker(tgt.target.U[g], alpha), src.theta_g[g])
    rhs = B.v(tgt.theta_g[g], B.whisker(None, action.act2(g, alpha), src.source.U[g]))
    return lhs == rhs


def _invertible_in(B, src, tgt):
    return [a for a in B.hom2(src, tgt) if B.inv2(a) is not None]


# --------------------------------------------------------------------------
# validators


def validate_eq_0cell(action: GroupAction2, P: EqZeroCell) -> ValidationReport:
    G, B = action.group, action.base
    n, e = G.order, G.unit
    col = Collector()
    if not col.check(0 <= P.A < B.n0 and len(P.U) == n and len(P.Pi) == n * n, "Shape"):
        return col.report()
    for g in G:
        u = P.U[g]
        ok = col.check(0 <= u < B.n1 and B.src1[u] == P.A and B.tgt1[u] == action.act0(g, P.A),
                       "Typing", "U", G.elements[g])
        if ok:
            col.check(B.inv1(u) is not None, "Invertibility", "U", G.elements[g])
    col.check(P.U[e] == B.unit1[P.A], "Unitality", "U", G.elements[e])
    if col.items:
        return col.report()
    U = P.U.__getitem__
    for g, h in itertools.product(G, repeat=2):
        a = P.pi(g, h)
        names = (G.elements[g], G.elements[h])
        src, tgt = _pi_ends(action, P.A, U, g, h)
        ok = col.check(0 <= a < B.n2 and B.src2[a] == src and B.tgt2[a] == tgt, "Typing", "Pi", *names)
        if ok:
            col.check(B.inv2(a) is not None, "Invertibility", "Pi", *names)
            if e in (g, h):
                col.check(a == B.id2[P.U[G.m(g, h)]], "Unitality", "Pi", *names)
    if col.items:
        return col.report()
    for f, g, h in itertools.product(G, repeat=3):
        col.check(_pi_axiom(action, P.A, U, P.pi, f, g, h), "PiAxiom", *(G.elements[i] for i in (f, g, h)))
    return col.report()


def validate_eq_1cell(action: GroupAction2, c: Eq1Cell) -> ValidationReport:
    G, B = action.group, action.base
    P, Q = c.source, c.target
    col = Collector()
    t = c.theta
    if not col.check(0 <= t < B.n1 and B.src1[t] == P.A and B.tgt1[t] == Q.A, "Typing", "theta"):
        return col.report()
    if not col.check(len(c.theta_g) == G.order, "Shape"):
        return col.report()
    for g in G:
        a = c.theta_g[g]
        src, tgt = _theta_g_ends(action, P, Q, t, g)
        ok = col.check(0 <= a < B.n2 and B.src2[a] == src and B.tgt2[a] == tgt, "Typing", "theta_g", G.elements[g])
        if ok:
            col.check(B.inv2(a) is not None, "Invertibility", "theta_g", G.elements[g])
    if col.items:
        return col.report()
    col.check(c.theta_g[G.unit] == B.id2[t], "Unitality", "theta_1")
    for g, f in itertools.product(G, repeat=2):
        col.check(_one_cell_axiom(action, P, Q, t, c.theta_g.__getitem__, g, f),
                  "OneCellAxiom", G.elements[g], G.elements[f])
    return col.report()


def validate_eq_2cell(action: GroupAction2, c: Eq2Cell) -> ValidationReport:
    G, B = action.group, action.base
    col = Collector()
    src, tgt = c.source, c.target
    if not col.check(src.source == tgt.source and src.target == tgt.target, "Shape", "endpoints"):
        return col.report()
    a = c.alpha
    if not col.check(0 <= a < B.n2 and B.src2[a] == src.theta and B.tgt2[a] == tgt.theta, "Typing", "alpha"):
        return col.report()
    for g in G:
        col.check(_two_cell_axiom(action, src, tgt, a, g), "TwoCellAxiom", G.elements[g])
    return col.report()


# --------------------------------------------------------------------------
# enumeration and composition


def _require_two_functors(action: GroupAction2):
    if not action.by_two_functors:
        raise RequiresTwoFunctors(
            "the unpacked equivariant 2-category needs an action by unital 2-functors; "
            "strictify the action first", (action.name,))


def equivariant_zero_cells(action: GroupAction2, budget: Budget) -> list[EqZeroCell]:
    G, B = action.group, action.base
    e, m = G.unit, G.m
    order = [("A",)] + [("U", g) for g in G if g != e] + \
        [("P", g, h) for g in G for h in G if e not in (g, h)]

    def U_of(asg):
        return lambda g: B.unit1[asg["A",]] if g == e else asg["U", g]

    def Pi_of(asg):
        U = U_of(asg)
        return lambda g, h: B.id2[U(m(g, h))] if e in (g, h) else asg["P", g, h]

    def domain(var, asg):
        if var[0] == "A":
            return range(B.n0)
        A = asg["A",]
        if var[0] == "U":
            return [u for u in B.hom1(A, action.act0(var[1], A)) if B.inv1(u) is not None]
        return _invertible_in(B, *_pi_ends(action, A, U_of(asg), var[1], var[2]))

    def uvar(g):
        return ("U", g) if g != e else ("A",)

    constraints = []
    for g, h in itertools.product(G, repeat=2):
        if e not in (g, h):
            constraints.append(([uvar(g), uvar(h), uvar(m(g, h))], lambda asg, g=g, h=h: bool(
                _invertible_in(B, *_pi_ends(action, asg["A",], U_of(asg), g, h)))))
    for f, g, h in itertools.product(G, repeat=3):
        refs = [("P", g, h), ("P", f, m(g, h)), ("P", f, g), ("P", m(f, g), h)]
        deps = [v for v in refs if e not in v[1:]] or [uvar(x) for x in G]
        constraints.append((deps, lambda asg, q=(f, g, h): _pi_axiom(
            action, asg["A",], U_of(asg), Pi_of(asg), *q)))
    out = []
    for asg in solve(order, domain, constraints, budget):
        U, Pi = U_of(asg), Pi_of(asg)
        out.append(EqZeroCell(asg["A",], tuple(U(g) for g in G), tuple(Pi(g, h) for g in G for h in G)))
    return out


def equivariant_one_cells(action, P: EqZeroCell, Q: EqZeroCell, budget: Budget) -> list[Eq1Cell]:
    G, B = action.group, action.base
    e = G.unit
    order = [("t",)] + [("g", g) for g in G if g != e]

    def tg_of(asg):
        return lambda g: B.id2[asg["t",]] if g == e else asg["g", g]

    def domain(var, asg):
        if var[0] == "t":
            return B.hom1(P.A, Q.A)
        return _invertible_in(B, *_theta_g_ends(action, P, Q, asg["t",], var[1]))

    constraints = []
    for g, f in itertools.product(G, repeat=2):
        refs = [("g", f), ("g", g), ("g", G.m(g, f))]
        deps = [v for v in refs if v[1] != e] or [("t",)]
        constraints.append((deps, lambda asg, g=g, f=f: _one_cell_axiom(
            action, P, Q, asg["t",], tg_of(asg), g, f)))
    out = []
    for asg in solve(order, domain, constraints, budget):
        tg = tg_of(asg)
        out.append(Eq1Cell(P, Q, asg["t",], tuple(tg(g) for g in G)))
    return out


def equivariant_two_cells(action, src: Eq1Cell, tgt: Eq1Cell) -> list[Eq2Cell]:
    B, G = action.base, action.group
    return [Eq2Cell(src, tgt, a) for a in B.hom2(src.theta, tgt.theta)
            if all(_two_cell_axiom(action, src, tgt, a, g) for g in G)]


def identity_eq_1cell(action: GroupAction2, P: EqZeroCell) -> Eq1Cell:
    B = action.base
    return Eq1Cell(P, P, B.unit1[P.A], tuple(B.id2[u] for u in P.U))


def compose_eq_1cells(action: GroupAction2, theta: Eq1Cell, sigma: Eq1Cell) -> Eq1Cell:
    """``θ∘σ`` with ``(θ∘σ)_g = (θ_g ∘ id_σ)(id_{F_g(θ)} ∘ σ_g)``."""
    if sigma.target != theta.source:
        raise NotComposable("equivariant 1-cells do not compose", (sigma.target.A, theta.source.A))
    B, G = action.base, action.group
    comps = tuple(B.v(B.whisker(None, theta.theta_g[g], sigma.theta),
                      B.whisker(action.act1(g, theta.theta), sigma.theta_g[g])) for g in G)
    return Eq1Cell(sigma.source, theta.target, B.h(theta.theta, sigma.theta), comps)


def enumerate_equivariant(action: GroupAction2, cap: int = DEFAULT_CAP) -> Catalog:
    """All equivariant cells, assembled into a Fin2Cat."""
    _require_two_functors(action)
    B, G = action.base, action.group
    budget = Budget(cap, "equivariant candidate assignments")
    zero = equivariant_zero_cells(action, budget)
    one = [c for P in zero for Q in zero for c in equivariant_one_cells(action, P, Q, budget)]
    by_hom: dict = {}
    for c in one:
        by_hom.setdefault((c.source, c.target), []).append(c)
    two = []
    for cells in by_hom.values():
        for x in cells:
            for y in cells:
                budget.spend(len(B.hom2(x.theta, y.theta)))
                two.extend(equivariant_two_cells(action, x, y))
    return assemble(
        action, f"{B.name}^{G.name}", zero, one, two,
        unit_of=lambda P: identity_eq_1cell(action, P),
        id2_of=lambda c: Eq2Cell(c, c, B.id2[c.theta]),
        compose1=lambda x, y: compose_eq_1cells(action, x, y),
        vcompose=lambda b, a: Eq2Cell(a.source, b.target, B.v(b.alpha, a.alpha)),
        hcompose=lambda a, b: Eq2Cell(compose_eq_1cells(action, a.source, b.source),
                                      compose_eq_1cells(action, a.target, b.target),
                                      B.h2(a.alpha, b.alpha)),
        prefixes=("E", "t", "a"))


def forgetful_Phi(catalog: Catalog) -> PseudoFunctor:
    """The strict 2-functor ``(A, U, Π) ↦ A``, ``(θ, θ_g) ↦ θ``, ``α ↦ α``."""
    B = catalog.action.base
    return two_functor(catalog.cat, B,
                       [P.A for P in catalog.zero],
                       [c.theta for c in catalog.one],
                       [c.alpha for c in catalog.two], "Phi")


# --------------------------------------------------------------------------
# the folded reading: equivariant cells as G-pseudofunctors out of the unit


def as_g_pseudofunctor(action: GroupAction2, P: EqZeroCell) -> GPseudoFunctor:
    B, G = action.base, action.group
    unit = unit_2cat()
    unit_action = trivial_action(G, unit, "trivial_on_unit")
    H = two_functor(unit, B, [P.A], [B.unit1[P.A]], [B.id2[B.unit1[P.A]]], f"E{P.A}")
    gamma = {g: PseudoNat(compose_pseudofunctors(H, unit_action.F[g]), compose_pseudofunctors(action.F[g], H),
                          (P.U[g],), (B.id2[P.U[g]],)) for g in G}
    Hs = GPseudoFunctor(H, unit_action, action, gamma, {}, H.name)
    for f in G:
        for g in G:
            Hs.Pi[f, g] = Modification(pi_source(Hs, f, g), pi_target(Hs, f, g), (P.pi(f, g),))
    return Hs


def as_g_pseudonat(action: GroupAction2, c: Eq1Cell, source: GPseudoFunctor | None = None,
                   target: GPseudoFunctor | None = None):
    B, G = action.base, action.group
    Hs = source or as_g_pseudofunctor(action, c.source)
    Ht = target or as_g_pseudofunctor(action, c.target)
    theta = PseudoNat(Hs.H, Ht.H, (c.theta,), (B.id2[c.theta],))
    return make_g_pseudonat(Hs, Ht, theta, {g: (c.theta_g[g],) for g in G})


__all__ = [
    "EqZeroCell", "Eq1Cell", "Eq2Cell", "as_g_pseudofunctor", "as_g_pseudonat", "compose_eq_1cells",
    "enumerate_equivariant", "equivariant_one_cells", "equivariant_two_cells", "equivariant_zero_cells",
    "forgetful_Phi", "identity_eq_1cell", "validate_eq_0cell", "validate_eq_1cell", "validate_eq_2cell",
]
