"""Unital group actions on finite 2-categories and the G-equivariant layer.

An action stores, for every group element ``g``, a pseudofunctor ``F[g]``;
for every pair a pseudonat ``chi[g, h]: F_g∘F_h → F_{gh}``; and for every
triple a modification ``omega[g, h, f]`` from ``χ_{gh,f}·(χ_{g,h}⊗1)`` to
``χ_{g,hf}·(1⊗χ_{h,f})``. Composite pastings are evaluated component-wise at
each 0-cell: a path of 1-cells is rewritten one region at a time, and each
region is whiskered by the identities of the untouched part of the path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core2 import Collector, FinGroup, Fin2Cat, ValidationReport
from .errors import NotComposable, NotHomomorphism, RequiresTwoFunctors, ShapeMismatch
from .pseudo import (
    Modification,
    PseudoFunctor,
    PseudoNat,
    compose_pseudofunctors,
    compose_pseudonats,
    identity_modification,
    identity_pseudofunctor,
    identity_pseudonat,
    tensor_pseudonat,
    validate_modification,
    validate_pseudofunctor,
    validate_pseudonat,
)


@dataclass(eq=False)
class GroupAction2:
    group: FinGroup
    base: Fin2Cat
    F: tuple
    chi: dict
    omega: dict
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def strict(self) -> bool:
        if "strict" not in self._cache:
            G = self.group
            self._cache["strict"] = (
                all(f.strict for f in self.F)
                and all(compose_pseudofunctors(self.F[g], self.F[h]).same_as(self.F[G.m(g, h)])
                        for g in G for h in G)
                and all(self.chi[g, h].key() == identity_pseudonat(self.F[G.m(g, h)]).key()
                        for g in G for h in G)
                and all(_is_identity_modification(self.omega[t]) for t in self.omega)
            )
        return self._cache["strict"]

    @property
    def by_two_functors(self) -> bool:
        return all(f.is_two_functor and f.unital for f in self.F)

    def c0(self, g: int, h: int, A: int) -> int:
        """``(χ⁰_{g,h})_A: F_g F_h A → F_{gh} A``."""
        return self.chi[g, h].comp0[A]

    def act0(self, g: int, A: int) -> int:
        return self.F[g].obj[A]

    def act1(self, g: int, x: int) -> int:
        return self.F[g].map1[x]

    def act2(self, g: int, a: int) -> int:
        return self.F[g].map2[a]

    def __repr__(self):
        return f"GroupAction2({self.name or '?'}: {self.group.name} on {self.base.name})"


def _is_identity_modification(m: Modification) -> bool:
    T = m.source.source.target
    return m.source.key() == m.target.key() and all(
        c == T.id2[x] for c, x in zip(m.comp, m.source.comp0))


def omega_source(action: GroupAction2, g: int, h: int, f: int) -> PseudoNat:
    G = action.group
    return compose_pseudonats(
        action.chi[G.m(g, h), f],
        tensor_pseudonat(action.chi[g, h], identity_pseudonat(action.F[f])),
    )


def omega_target(action: GroupAction2, g: int, h: int, f: int) -> PseudoNat:
    G = action.group
    return compose_pseudonats(
        action.chi[g, G.m(h, f)],
        tensor_pseudonat(identity_pseudonat(action.F[g]), action.chi[h, f]),
    )


# --------------------------------------------------------------------------
# constructors


def action_from_automorphisms(G: FinGroup, B: Fin2Cat, phi, name: str = "") -> GroupAction2:
    """Strict action from a homomorphism ``g ↦ φ_g`` into strict 2-automorphisms.

    ``phi`` maps group element ids to 2-functors ``B → B``. Raises
    ``NotHomomorphism`` with the witnessing pair when ``φ_g∘φ_h ≠ φ_{gh}``.
    """
    F = tuple(phi[g] for g in G)
    if not F[G.unit].same_as(identity_pseudofunctor(B)):
        raise NotHomomorphism("identity element must act as the identity", (G.elements[G.unit],))
    for g in G:
        if not F[g].strict:
            raise NotHomomorphism("components must be strict 2-functors", (G.elements[g],))
    for g in G:
        for h in G:
            if not compose_pseudofunctors(F[g], F[h]).same_as(F[G.m(g, h)]):
                raise NotHomomorphism("composition is not preserved", (G.elements[g], G.elements[h]))
    chi = {}
    for g in G:
        for h in G:
            ident = identity_pseudonat(F[G.m(g, h)])
            chi[g, h] = PseudoNat(compose_pseudofunctors(F[g], F[h]), F[G.m(g, h)],
                                  ident.comp0, ident.comp2)
    action = GroupAction2(G, B, F, chi, {}, name)
    for g, h, f in itertools.product(G, repeat=3):
        src = omega_source(action, g, h, f)
        action.omega[g, h, f] = Modification(src, omega_target(action, g, h, f),
                                             identity_modification(src).comp)
    return action


def trivial_action(G: FinGroup, B: Fin2Cat, name: str = "") -> GroupAction2:
    ident = identity_pseudofunctor(B)
    return action_from_automorphisms(G, B, {g: ident for g in G}, name or f"trivial_{G.name}")


def inversion_action(G: FinGroup, C: FinGroup, name: str = "") -> GroupAction2:
    """A group of order 2 acting on ΣC by ``x ↦ x⁻¹`` (C abelian)."""
    from .core2 import delooping
    from .pseudo import two_functor

    B = delooping(C)
    inv = two_functor(B, B, [0], [C.inv[x] for x in C], [C.inv[x] for x in C], "inv")
    phi = {g: (identity_pseudofunctor(B) if g == G.unit else inv) for g in G}
    return action_from_automorphisms(G, B, phi, name or "inv_act")


def cocycle_action(G: FinGroup, B: Fin2Cat, omega_value, name: str = "") -> GroupAction2:
    """Trivial functors and multiplicativity data, with ``ω_{g,h,f}`` given by
    a normalized 3-cocycle with values in the automorphisms of identity 1-cells.

    ``omega_value(g, h, f, A)`` returns an invertible 2-cell ``I_A ⇒ I_A``
    that commutes horizontally with every 2-cell; the validator decides
    whether the result is an action.
    """
    ident = identity_pseudofunctor(B)
    F = tuple(ident for _ in G)
    chi = {}
    for g in G:
        for h in G:
            base = identity_pseudonat(ident)
            chi[g, h] = PseudoNat(compose_pseudofunctors(ident, ident), ident, base.comp0, base.comp2)
    action = GroupAction2(G, B, F, chi, {}, name)
    for g, h, f in itertools.product(G, repeat=3):
        action.omega[g, h, f] = Modification(
            omega_source(action, g, h, f), omega_target(action, g, h, f),
            tuple(omega_value(g, h, f, A) for A in range(B.n0)))
    return action


# --------------------------------------------------------------------------
# action validation


def _functor_comp_inverse(F: PseudoFunctor, x: int, y: int) -> int:
    T = F.target
    inv = T.inv2(F.comp[x, y])
    if inv is None:
        raise NotComposable("compositor is not invertible", (x, y))
    return inv


def mn2_sides(action: GroupAction2, g: int, h: int, f: int, k: int, A: int):
    """Both sides of the pentagon for ω at ``(g, h, f, k)`` and 0-cell ``A``.

    Each side is a vertical composite of whiskered components; the
    compositors of ``F_g`` are inserted around ``F_g(ω_{h,f,k})``.
    """
    G, B = action.group, action.base
    m = G.m
    c0 = action.c0
    Fg = action.F[g]
    Fk_A = action.act0(k, A)
    Ff_Fk_A = action.act0(f, Fk_A)
    om = action.omega
    # left side
    L1 = B.whisker(c0(m(m(g, h), f), k, A), om[g, h, f].comp[Fk_A])
    L2 = B.whisker(None, om[g, m(h, f), k].comp[A], Fg.map1[c0(h, f, Fk_A)])
    inner_src = (c0(m(h, f), k, A), c0(h, f, Fk_A))
    inner_tgt = (c0(h, m(f, k), A), action.act1(h, c0(f, k, A)))
    L3 = B.whisker(c0(g, m(m(h, f), k), A), B.vseq(
        Fg.comp[inner_src], Fg.map2[om[h, f, k].comp[A]], _functor_comp_inverse(Fg, *inner_tgt)))
    # right side
    R1 = B.whisker(None, om[m(g, h), f, k].comp[A], c0(g, h, Ff_Fk_A))
    chi_gh = action.chi[g, h]
    nat = B.inv2(chi_gh.comp2[c0(f, k, A)])
    if nat is None:
        raise NotComposable("naturality 2-cell is not invertible", (g, h))
    R2 = B.whisker(c0(m(g, h), m(f, k), A), nat)
    R3 = B.whisker(None, om[g, h, m(f, k)].comp[A], chi_gh.source.map1[c0(f, k, A)])
    return B.vseq(L1, L2, L3), B.vseq(R1, R2, R3)


def validate_action(action: GroupAction2) -> ValidationReport:
    """Unitality, component validity, ω typing, and the ω pentagon at every
    0-cell and every quadruple of group elements."""
    G, B = action.group, action.base
    col = Collector()
    e = G.unit
    ident = identity_pseudofunctor(B)
    col.check(action.F[e].same_as(ident), "Unitality", "F_1")
    for g in G:
        col.extend(validate_pseudofunctor(action.F[g]), "F", G.elements[g])
        col.check(action.F[g].unital, "Unitality", "F", G.elements[g])
    if col.items:
        return col.report()
    for g in G:
        for h in G:
            chi = action.chi[g, h]
            ok = col.check(chi.source.same_as(compose_pseudofunctors(action.F[g], action.F[h]))
                           and chi.target.same_as(action.F[G.m(g, h)]),
                           "ChiShape", G.elements[g], G.elements[h])
            if ok:
                col.extend(validate_pseudonat(chi), "chi", G.elements[g], G.elements[h])
    for g in G:
        for idx in ((g, e), (e, g)):
            col.check(action.chi[idx].key() == identity_pseudonat(action.F[g]).key(),
                      "Unitality", "chi", *(G.elements[i] for i in idx))
    if col.items:
        return col.report()
    for g, h, f in itertools.product(G, repeat=3):
        om = action.omega[g, h, f]
        names = tuple(G.elements[i] for i in (g, h, f))
        try:
            src, tgt = omega_source(action, g, h, f), omega_target(action, g, h, f)
        except (NotComposable, ShapeMismatch) as exc:
            col.add("OmegaShape", *names, str(exc))
            continue
        if not col.check(om.source.key() == src.key() and om.target.key() == tgt.key(),
                         "OmegaShape", *names):
            continue
        col.extend(validate_modification(Modification(src, tgt, om.comp)), "omega", *names)
        for A in range(B.n0):
            w = om.comp[A]
            col.check(0 <= w < B.n2 and B.inv2(w) is not None, "OmegaInvertible", *names, A)
        if e in (g, h, f):
            tag = "MN1" if h == e else "Unitality"
            col.check(_is_identity_modification(Modification(src, tgt, om.comp)), tag, *names)
    # a mistyped ω entry also breaks the pentagon, so keep going unless a reference dangles
    if any(not (0 <= w < B.n2) for om in action.omega.values() for w in om.comp):
        return col.report()
    for g, h, f, k in itertools.product(G, repeat=4):
        for A in range(B.n0):
            names = tuple(G.elements[i] for i in (g, h, f, k))
            try:
                lhs, rhs = mn2_sides(action, g, h, f, k, A)
            except NotComposable as exc:
                col.add("PentagonMN2", *names, A, str(exc))
                continue
            col.check(lhs == rhs, "PentagonMN2", *names, A)
    return col.report()


# --------------------------------------------------------------------------
# G-pseudofunctors, G-pseudonats, G-modifications


@dataclass(eq=False)
class GPseudoFunctor:
    H: PseudoFunctor
    source_action: GroupAction2
    target_action: GroupAction2
    gamma: dict
    Pi: dict
    name: str = ""

    def gamma0(self, g: int, A: int) -> int:
        return self.gamma[g].comp0[A]


@dataclass(eq=False)
class GPseudoNat:
    source: GPseudoFunctor
    target: GPseudoFunctor
    theta: PseudoNat
    theta_g: dict

    def key(self):
        G = self.source.source_action.group
        return (self.theta.key(), tuple(self.theta_g[g].comp for g in G))


@dataclass(eq=False)
class GModification:
    source: GPseudoNat
    target: GPseudoNat
    alpha: Modification


def gamma_source_functor(Hs: GPseudoFunctor, g: int) -> PseudoFunctor:
    return compose_pseudofunctors(Hs.H, Hs.source_action.F[g])


def gamma_target_functor(Hs: GPseudoFunctor, g: int) -> PseudoFunctor:
    return compose_pseudofunctors(Hs.target_action.F[g], Hs.H)


def pi_source(Hs: GPseudoFunctor, f: int, g: int) -> PseudoNat:
    act, tact = Hs.source_action, Hs.target_action
    G = act.group
    first = tensor_pseudonat(Hs.gamma[f], identity_pseudonat(act.F[g]))
    second = tensor_pseudonat(identity_pseudonat(tact.F[f]), Hs.gamma[g])
    third = tensor_pseudonat(tact.chi[f, g], identity_pseudonat(Hs.H))
    del G
    return compose_pseudonats(third, compose_pseudonats(second, first))


def pi_target(Hs: GPseudoFunctor, f: int, g: int) -> PseudoNat:
    act = Hs.source_action
    return compose_pseudonats(Hs.gamma[act.group.m(f, g)],
                              tensor_pseudonat(identity_pseudonat(Hs.H), act.chi[f, g]))


def _require_two_functor_actions(*actions: GroupAction2):
    for act in actions:
        if not act.by_two_functors:
            raise RequiresTwoFunctors("G-structure checks need actions by unital 2-functors", (act.name,))


def pi_axiom_sides(Hs: GPseudoFunctor, f: int, g: int, h: int, A: int):
    """Both pastings of the Π coherence diagram evaluated at the 0-cell ``A``."""
    act, tact = Hs.source_action, Hs.target_action
    G = act.group
    m = G.m
    H = Hs.H
    T = H.target
    g0 = Hs.gamma0
    Ff = tact.F[f]
    HA = H.obj[A]
    Fh_A = act.act0(h, A)
    t1 = g0(f, act.act0(g, Fh_A))
    t2 = tact.act1(f, g0(g, Fh_A))
    t3 = tact.act1(f, tact.act1(g, g0(h, A)))
    t5 = tact.c0(m(f, g), h, HA)
    c_gh = act.c0(g, h, A)
    # left pasting
    S1 = T.whisker(None, tact.omega[f, g, h].comp[HA], T.hpath(t3, t2, t1))
    S2 = T.whisker(tact.c0(f, m(g, h), HA), Ff.map2[Hs.Pi[g, h].comp[A]], t1)
    gamma_f_nat = T.inv2(Hs.gamma[f].comp2[c_gh])
    S3 = T.whisker(T.h(tact.c0(f, m(g, h), HA), tact.act1(f, g0(m(g, h), A))), gamma_f_nat)
    S4 = T.whisker(None, Hs.Pi[f, m(g, h)].comp[A], H.map1[act.act1(f, c_gh)])
    # right pasting
    chi_fg_t = tact.chi[f, g]
    R1 = T.whisker(t5, chi_fg_t.comp2[g0(h, A)], T.h(t2, t1))
    R2 = T.whisker(T.h(t5, tact.act1(m(f, g), g0(h, A))), Hs.Pi[f, g].comp[Fh_A])
    R3 = T.whisker(None, Hs.Pi[m(f, g), h].comp[A], H.map1[act.c0(f, g, Fh_A)])
    pre = H.comp[act.c0(m(f, g), h, A), act.c0(f, g, Fh_A)]
    post = T.inv2(H.comp[act.c0(f, m(g, h), A), act.act1(f, c_gh)])
    R4 = T.whisker(g0(m(m(f, g), h), A), T.vseq(pre, H.map2[act.omega[f, g, h].comp[A]], post))
    return T.vseq(S1, S2, S3, S4), T.vseq(R1, R2, R3, R4)


def validate_g_pseudofunctor(Hs: GPseudoFunctor) -> ValidationReport:
    act, tact = Hs.source_action, Hs.target_action
    G = act.group
    col = Collector()
    try:
        _require_two_functor_actions(act, tact)
    except RequiresTwoFunctors as exc:
        col.add("RequiresTwoFunctors", str(exc))
        return col.report()
    col.extend(validate_pseudofunctor(Hs.H), "H")
    col.check(Hs.H.unital, "Unitality", "H")
    if col.items:
        return col.report()
    for g in G:
        gam = Hs.gamma[g]
        ok = col.check(gam.source.same_as(gamma_source_functor(Hs, g))
                       and gam.target.same_as(gamma_target_functor(Hs, g)), "GammaShape", G.elements[g])
        if ok:
            col.extend(validate_pseudonat(gam), "gamma", G.elements[g])
    col.check(Hs.gamma[G.unit].key() == identity_pseudonat(Hs.H).key(), "Unitality", "gamma_1")
    if col.items:
        return col.report()
    for f in G:
        for g in G:
            names = (G.elements[f], G.elements[g])
            src, tgt = pi_source(Hs, f, g), pi_target(Hs, f, g)
            P = Hs.Pi[f, g]
            if not col.check(P.source.key() == src.key() and P.target.key() == tgt.key(), "PiShape", *names):
                continue
            col.extend(validate_modification(Modification(src, tgt, P.comp)), "Pi", *names)
            if G.unit in (f, g):
                col.check(_is_identity_modification(Modification(src, tgt, P.comp)), "Unitality", "Pi", *names)
    if col.items:
        return col.report()
    B = act.base
    for f, g, h in itertools.product(G, repeat=3):
        for A in range(B.n0):
            names = tuple(G.elements[i] for i in (f, g, h))
            try:
                lhs, rhs = pi_axiom_sides(Hs, f, g, h, A)
            except NotComposable as exc:
                col.add("PiAxiom", *names, A, str(exc))
                continue
            col.check(lhs == rhs, "PiAxiom", *names, A)
    return col.report()


def theta_g_source(Hs: GPseudoFunctor, Ht: GPseudoFunctor, theta: PseudoNat, g: int) -> PseudoNat:
    return compose_pseudonats(tensor_pseudonat(identity_pseudonat(Ht.target_action.F[g]), theta), Hs.gamma[g])


def theta_g_target(Hs: GPseudoFunctor, Ht: GPseudoFunctor, theta: PseudoNat, g: int) -> PseudoNat:
    return compose_pseudonats(Ht.gamma[g], tensor_pseudonat(theta, identity_pseudonat(Hs.source_action.F[g])))


def g_pseudonat_sides(n: GPseudoNat, g: int, f: int, A: int):
    """Both pastings of the G-pseudonat coherence at ``(g, f)`` and ``A``."""
    Hs, Ht = n.source, n.target
    act, tact = Hs.source_action, Hs.target_action
    G = act.group
    m = G.m
    T = Hs.H.target
    th = n.theta
    Ffa = act.act0(f, A)
    p1 = Hs.gamma0(g, Ffa)
    p2 = tact.act1(g, Hs.gamma0(f, A))
    HpA = Ht.H.obj[A]
    c_gf = act.c0(g, f, A)
    D11 = T.whisker(None, T.inv2(tact.chi[g, f].comp2[th.comp0[A]]), T.h(p2, p1))
    D12 = T.whisker(tact.c0(g, f, HpA), tact.act2(g, n.theta_g[f].comp[A]), p1)
    D13 = T.whisker(T.h(tact.c0(g, f, HpA), tact.act1(g, Ht.gamma0(f, A))), n.theta_g[g].comp[Ffa])
    D14 = T.whisker(None, Ht.Pi[g, f].comp[A], th.comp0[act.act0(g, Ffa)])
    D21 = T.whisker(tact.act1(m(g, f), th.comp0[A]), Hs.Pi[g, f].comp[A])
    D22 = T.whisker(None, n.theta_g[m(g, f)].comp[A], Hs.H.map1[c_gf])
    D23 = T.whisker(Ht.gamma0(m(g, f), A), th.comp2[c_gf])
    return T.vseq(D11, D12, D13, D14), T.vseq(D21, D22, D23)


def validate_g_pseudonat(n: GPseudoNat) -> ValidationReport:
    Hs, Ht = n.source, n.target
    act = Hs.source_action
    G = act.group
    col = Collector()
    try:
        _require_two_functor_actions(act, Hs.target_action)
    except RequiresTwoFunctors as exc:
        col.add("RequiresTwoFunctors", str(exc))
        return col.report()
    th = n.theta
    if not col.check(th.source.same_as(Hs.H) and th.target.same_as(Ht.H), "ThetaShape"):
        return col.report()
    col.extend(validate_pseudonat(th), "theta")
    if col.items:
        return col.report()
    for g in G:
        src = theta_g_source(Hs, Ht, th, g)
        tgt = theta_g_target(Hs, Ht, th, g)
        tg = n.theta_g[g]
        col.extend(validate_modification(Modification(src, tgt, tg.comp)), "theta_g", G.elements[g])
        T = Hs.H.target
        for w in tg.comp:
            col.check(0 <= w < T.n2 and T.inv2(w) is not None, "Invertibility", G.elements[g])
    col.check(_is_identity_modification(n.theta_g[G.unit]) if n.theta_g[G.unit].source.key()
              == n.theta_g[G.unit].target.key() else False, "Unitality", "theta_1")
    if col.items:
        return col.report()
    for g, f in itertools.product(G, repeat=2):
        for A in range(act.base.n0):
            names = (G.elements[g], G.elements[f])
            try:
                lhs, rhs = g_pseudonat_sides(n, g, f, A)
            except NotComposable as exc:
                col.add("GPseudoNatAxiom", *names, A, str(exc))
                continue
            col.check(lhs == rhs, "GPseudoNatAxiom", *names, A)
    return col.report()


def make_g_pseudonat(Hs: GPseudoFunctor, Ht: GPseudoFunctor, theta: PseudoNat, comps: dict) -> GPseudoNat:
    """Wrap per-``g`` component tuples into modifications with computed shapes."""
    G = Hs.source_action.group
    theta_g = {g: Modification(theta_g_source(Hs, Ht, theta, g), theta_g_target(Hs, Ht, theta, g),
                               tuple(comps[g])) for g in G}
    return GPseudoNat(Hs, Ht, theta, theta_g)


def identity_g_pseudonat(Hs: GPseudoFunctor) -> GPseudoNat:
    theta = identity_pseudonat(Hs.H)
    T = Hs.H.target
    G = Hs.source_action.group
    comps = {g: tuple(T.id2[c] for c in Hs.gamma[g].comp0) for g in G}
    return make_g_pseudonat(Hs, Hs, theta, comps)


def compose_g_pseudonats(sigma: GPseudoNat, theta: GPseudoNat) -> GPseudoNat:
    """``σ∘θ`` with ``(ρ_g)_A = ((σ_g)_A ∘ id)(id_{F̃_g(σ⁰_A)} ∘ (θ_g)_A)``."""
    if theta.target is not sigma.source and not theta.target.H.same_as(sigma.source.H):
        raise ShapeMismatch("G-pseudonats do not compose", ())
    Hs = theta.source
    tact = Hs.target_action
    T = Hs.H.target
    G = Hs.source_action.group
    rho = compose_pseudonats(sigma.theta, theta.theta)
    comps = {}
    for g in G:
        row = []
        for A in range(Hs.H.source.n0):
            FgA = Hs.source_action.act0(g, A)
            first = T.whisker(tact.act1(g, sigma.theta.comp0[A]), theta.theta_g[g].comp[A])
            second = T.whisker(None, sigma.theta_g[g].comp[A], theta.theta.comp0[FgA])
            row.append(T.v(second, first))
        comps[g] = tuple(row)
    return make_g_pseudonat(Hs, sigma.target, rho, comps)


def validate_g_modification(gm: GModification) -> ValidationReport:
    theta, sigma = gm.source, gm.target
    Hs, Ht = theta.source, theta.target
    act, tact = Hs.source_action, Hs.target_action
    G = act.group
    col = Collector()
    alpha = gm.alpha
    col.extend(validate_modification(alpha), "alpha")
    if col.items:
        return col.report()
    col.check(alpha.source.key() == theta.theta.key() and alpha.target.key() == sigma.theta.key(), "AlphaShape")
    T = Hs.H.target
    for g in G:
        for A in range(act.base.n0):
            FgA = act.act0(g, A)
            lhs = T.v(T.whisker(Ht.gamma0(g, A), alpha.comp[FgA]), theta.theta_g[g].comp[A])
            rhs = T.v(sigma.theta_g[g].comp[A], T.whisker(None, tact.act2(g, alpha.comp[A]), Hs.gamma0(g, A)))
            col.check(lhs == rhs, "GModificationAxiom", G.elements[g], A)
    return col.report()


def identity_g_pseudofunctor(action: GroupAction2) -> GPseudoFunctor:
    """``Id_B`` with identity γ and Π; a G-pseudofunctor when the action is strict."""
    B, G = action.base, action.group
    ident = identity_pseudofunctor(B)
    gamma = {}
    for g in G:
        base = identity_pseudonat(action.F[g])
        gamma[g] = PseudoNat(compose_pseudofunctors(ident, action.F[g]),
                             compose_pseudofunctors(action.F[g], ident), base.comp0, base.comp2)
    Hs = GPseudoFunctor(ident, action, action, gamma, {}, "Id")
    for f in G:
        for g in G:
            src = pi_source(Hs, f, g)
            Hs.Pi[f, g] = Modification(src, pi_target(Hs, f, g), identity_modification(src).comp)
    return Hs
