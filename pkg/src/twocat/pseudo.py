"""Pseudofunctors, pseudonatural transformations, modifications and Z(H).

Conventions follow ``core2``: ``B.v(a, b)`` is ``a`` after ``b`` and
``B.h(x, y)`` is ``x∘y`` with ``y`` applied first. A pseudofunctor's
compositor at a composable pair ``(x, y)`` is a 2-cell ``F(x)∘F(y) ⇒ F(x∘y)``
and its unit constraint at ``A`` is a 2-cell ``I_{F(A)} ⇒ F(I_A)``.
A pseudonatural transformation ``χ: F → G`` stores ``χ⁰_A: F(A) → G(A)`` and
``χ_X: χ⁰_B∘F(X) ⇒ G(X)∘χ⁰_A``.
"""

from __future__ import annotations

import itertools

import numpy as np
from dataclasses import dataclass, field

from ._backend import kernels
from .core2 import Collector, FinCat, Fin2Cat, ValidationReport, validate_fincat
from .errors import NotComposable, NotUnital, SearchBudgetExceeded, ShapeMismatch, SourceTargetMismatch

DEFAULT_CAP = 10**6


# --------------------------------------------------------------------------
# data


@dataclass(eq=False)
class PseudoFunctor:
    source: Fin2Cat
    target: Fin2Cat
    obj: tuple
    map1: tuple
    map2: tuple
    comp: dict
    unit: tuple
    name: str = ""

    def key(self) -> tuple:
        return (self.obj, self.map1, self.map2, tuple(sorted(self.comp.items())), self.unit)

    def same_as(self, other: "PseudoFunctor") -> bool:
        return (self is other) or (
            self.source.same_tables(other.source)
            and self.target.same_tables(other.target)
            and self.key() == other.key()
        )

    @property
    def unital(self) -> bool:
        T = self.target
        return all(
            self.map1[self.source.unit1[A]] == T.unit1[self.obj[A]]
            and self.unit[A] == T.id2[T.unit1[self.obj[A]]]
            for A in range(self.source.n0)
        )

    @property
    def is_two_functor(self) -> bool:
        T = self.target
        return all(c == T.id2[self.map1[self.source.h(x, y)]] for (x, y), c in self.comp.items())

    @property
    def strict(self) -> bool:
        return self.unital and self.is_two_functor

    def __call__(self, x: int) -> int:
        return self.map1[x]

    def __repr__(self):
        return f"PseudoFunctor({self.name or '?'}: {self.source.name} -> {self.target.name})"


@dataclass(eq=False)
class PseudoNat:
    source: PseudoFunctor
    target: PseudoFunctor
    comp0: tuple
    comp2: tuple
    name: str = ""

    def key(self) -> tuple:
        return (self.comp0, self.comp2)

    def same_as(self, other: "PseudoNat") -> bool:
        return (self is other) or (
            self.key() == other.key()
            and self.source.same_as(other.source)
            and self.target.same_as(other.target)
        )

    def __repr__(self):
        return f"PseudoNat({self.name or self.comp0})"


@dataclass(eq=False)
class Modification:
    source: PseudoNat
    target: PseudoNat
    comp: tuple
    name: str = ""

    def key(self) -> tuple:
        return self.comp

    def same_as(self, other: "Modification") -> bool:
        return (self is other) or (
            self.comp == other.comp
            and self.source.same_as(other.source)
            and self.target.same_as(other.target)
        )

    def __repr__(self):
        return f"Modification({self.name or self.comp})"


@dataclass
class MonoidalCat:
    """A strict monoidal category stored as tables over a FinCat."""

    cat: FinCat
    tensor_obj: dict
    tensor_mor: dict
    unit: int
    braid: dict = field(default_factory=dict)

    @property
    def objects(self):
        return self.cat.objects

    def counts(self) -> dict:
        return {"objects": self.cat.n_objects, "morphisms": self.cat.n_morphisms}


# --------------------------------------------------------------------------
# constructors


def identity_pseudofunctor(B: Fin2Cat) -> PseudoFunctor:
    return PseudoFunctor(
        B, B, tuple(range(B.n0)), tuple(range(B.n1)), tuple(range(B.n2)),
        {(x, y): B.id2[z] for (x, y), z in B.hc1.items()},
        tuple(B.id2[B.unit1[A]] for A in range(B.n0)), f"Id_{B.name}",
    )


def two_functor(source: Fin2Cat, target: Fin2Cat, obj, map1, map2, name: str = "") -> PseudoFunctor:
    """A pseudofunctor with identity compositors and unit constraints.

    The compositor at ``(x, y)`` is the identity of ``F(x∘y)``; the validator
    reports a typing failure if ``F(x)∘F(y)`` differs from ``F(x∘y)``.
    """
    return PseudoFunctor(
        source, target, tuple(obj), tuple(map1), tuple(map2),
        {(x, y): target.id2[map1[z]] for (x, y), z in source.hc1.items()},
        tuple(target.id2[target.unit1[obj[A]]] for A in range(source.n0)), name,
    )


def compose_pseudofunctors(G: PseudoFunctor, F: PseudoFunctor) -> PseudoFunctor:
    """``G∘F`` with compositor ``G(α^F_{x,y}) · α^G_{F x, F y}``."""
    if not F.target.same_tables(G.source):
        raise SourceTargetMismatch("target of the first functor is not the source of the second",
                                   (F.name, G.name))
    B, C = F.source, G.target
    comp = {}
    for (x, y) in B.hc1:
        comp[x, y] = C.v(G.map2[F.comp[x, y]], G.comp[F.map1[x], F.map1[y]])
    unit = tuple(C.v(G.map2[F.unit[A]], G.unit[F.obj[A]]) for A in range(B.n0))
    return PseudoFunctor(
        B, C,
        tuple(G.obj[a] for a in F.obj),
        tuple(G.map1[x] for x in F.map1),
        tuple(G.map2[a] for a in F.map2),
        comp, unit,
        f"{G.name}{F.name}" if G.name and F.name else "",
    )


def identity_pseudonat(F: PseudoFunctor) -> PseudoNat:
    T = F.target
    comp0 = tuple(T.unit1[F.obj[A]] for A in range(F.source.n0))
    comp2 = tuple(T.id2[F.map1[x]] for x in range(F.source.n1))
    return PseudoNat(F, F, comp0, comp2, f"id_{F.name}")


def identity_modification(chi: PseudoNat) -> Modification:
    T = chi.source.target
    return Modification(chi, chi, tuple(T.id2[c] for c in chi.comp0))


# --------------------------------------------------------------------------
# validators


def validate_pseudofunctor(F: PseudoFunctor, claim_unital=None, claim_strict=None) -> ValidationReport:
    """Check functoriality, compositor typing/naturality, the associativity
    hexagon and the unit triangles on every instance.

    ``claim_unital``/``claim_strict`` additionally assert the flags.
    """
    B, T = F.source, F.target
    col = Collector()
    if not (len(F.obj) == B.n0 and len(F.map1) == B.n1 and len(F.map2) == B.n2 and len(F.unit) == B.n0):
        col.add("DanglingReference", "table sizes")
        return col.report()
    for A in range(B.n0):
        col.check(0 <= F.obj[A] < T.n0, "DanglingReference", "obj", A)
    for x in range(B.n1):
        fx = F.map1[x]
        if col.check(0 <= fx < T.n1, "DanglingReference", "map1", x):
            col.check(T.src1[fx] == F.obj[B.src1[x]] and T.tgt1[fx] == F.obj[B.tgt1[x]],
                      "Typing", "map1", x)
    for a in range(B.n2):
        fa = F.map2[a]
        if col.check(0 <= fa < T.n2, "DanglingReference", "map2", a):
            col.check(T.src2[fa] == F.map1[B.src2[a]] and T.tgt2[fa] == F.map1[B.tgt2[a]],
                      "Typing", "map2", a)
    if col.items:
        return col.report()
    for x in range(B.n1):
        col.check(F.map2[B.id2[x]] == T.id2[F.map1[x]], "Functoriality", "identity", x)
    for (a, b), c in B.vc.items():
        col.check(F.map2[c] == T.v(F.map2[a], F.map2[b]), "Functoriality", "vcomp", a, b)
    # compositor typing and invertibility
    for (x, y), z in B.hc1.items():
        c = F.comp.get((x, y))
        if not col.check(c is not None and 0 <= c < T.n2, "CompositorTyping", x, y):
            continue
        fxy = T.hc1.get((F.map1[x], F.map1[y]))
        ok = col.check(T.src2[c] == fxy and T.tgt2[c] == F.map1[z], "CompositorTyping", x, y)
        if ok:
            col.check(T.inv2(c) is not None, "CompositorInvertible", x, y)
    for A in range(B.n0):
        u = F.unit[A]
        ok = col.check(0 <= u < T.n2 and T.src2[u] == T.unit1[F.obj[A]]
                       and T.tgt2[u] == F.map1[B.unit1[A]], "UnitTyping", A)
        if ok:
            col.check(T.inv2(u) is not None, "UnitInvertible", A)
    if col.items:
        return col.report()
    # naturality of the compositor in both arguments
    for (a, b), ab in B.hc2.items():
        x, y = B.src2[a], B.src2[b]
        x2, y2 = B.tgt2[a], B.tgt2[b]
        lhs = T.v(F.comp[x2, y2], T.h2(F.map2[a], F.map2[b]))
        rhs = T.v(F.map2[ab], F.comp[x, y])
        col.check(lhs == rhs, "CompositorNaturality", a, b)
    # associativity hexagon (target is strict, so it is a square)
    for (x, y), xy in B.hc1.items():
        for z in B.arriving(B.src1[y]):
            yz = B.hc1[y, z]
            lhs = T.v(F.comp[xy, z], T.h2(F.comp[x, y], T.id2[F.map1[z]]))
            rhs = T.v(F.comp[x, yz], T.h2(T.id2[F.map1[x]], F.comp[y, z]))
            col.check(lhs == rhs, "CompositorAssociativity", x, y, z)
    # unit triangles
    for x in range(B.n1):
        A, Bt = B.src1[x], B.tgt1[x]
        fx_id = T.id2[F.map1[x]]
        right = T.v(F.comp[x, B.unit1[A]], T.h2(fx_id, F.unit[A]))
        left = T.v(F.comp[B.unit1[Bt], x], T.h2(F.unit[Bt], fx_id))
        col.check(right == fx_id, "UnitTriangle", "right", x)
        col.check(left == fx_id, "UnitTriangle", "left", x)
    if claim_unital:
        col.check(F.unital, "Unitality")
    if claim_strict:
        col.check(F.strict, "Strictness")
    return col.report()


def _check_pseudonat_shape(chi: PseudoNat, col: Collector) -> bool:
    F, G = chi.source, chi.target
    if not (F.source.same_tables(G.source) and F.target.same_tables(G.target)):
        col.add("ShapeMismatch", "functors are not parallel")
        return False
    B, T = F.source, F.target
    if len(chi.comp0) != B.n0 or len(chi.comp2) != B.n1:
        col.add("DanglingReference", "table sizes")
        return False
    for A in range(B.n0):
        c = chi.comp0[A]
        if col.check(0 <= c < T.n1, "DanglingReference", "comp0", A):
            col.check(T.src1[c] == F.obj[A] and T.tgt1[c] == G.obj[A], "Typing", "comp0", A)
    if col.items:
        return False
    for x in range(B.n1):
        c = chi.comp2[x]
        A, Bt = B.src1[x], B.tgt1[x]
        if not col.check(0 <= c < T.n2, "DanglingReference", "comp2", x):
            continue
        want_src = T.hc1.get((chi.comp0[Bt], F.map1[x]))
        want_tgt = T.hc1.get((G.map1[x], chi.comp0[A]))
        if col.check(T.src2[c] == want_src and T.tgt2[c] == want_tgt, "Naturality", "comp2", x):
            col.check(T.inv2(c) is not None, "Invertibility", x)
    return not col.items


def _forced_composite(chi_comp0, F, G, T, B, x, y, cx, cy):
    """The value of ``χ_{x∘y}`` forced by ``χ_x = cx`` and ``χ_y = cy``."""
    A = B.src1[y]
    C = B.tgt1[x]
    step1 = T.h2(cx, T.id2[F.map1[y]])
    step2 = T.h2(T.id2[G.map1[x]], cy)
    step3 = T.h2(G.comp[x, y], T.id2[chi_comp0[A]])
    pre = T.inv2(T.h2(T.id2[chi_comp0[C]], F.comp[x, y]))
    if pre is None:
        raise NotComposable("compositor is not invertible", (x, y))
    return T.vseq(pre, step1, step2, step3)


def _forced_unit(chi_comp0, F, G, T, B, A):
    pre = T.inv2(T.h2(T.id2[chi_comp0[A]], F.unit[A]))
    return T.v(T.h2(G.unit[A], T.id2[chi_comp0[A]]), pre)


def validate_pseudonat(chi: PseudoNat) -> ValidationReport:
    col = Collector()
    if not _check_pseudonat_shape(chi, col):
        return col.report()
    F, G = chi.source, chi.target
    B, T = F.source, F.target
    c0, c2 = chi.comp0, chi.comp2
    for a in range(B.n2):
        x, y = B.src2[a], B.tgt2[a]
        Bt, A = B.tgt1[x], B.src1[x]
        lhs = T.v(c2[y], T.h2(T.id2[c0[Bt]], F.map2[a]))
        rhs = T.v(T.h2(G.map2[a], T.id2[c0[A]]), c2[x])
        col.check(lhs == rhs, "Naturality", a)
    for (x, y), xy in B.hc1.items():
        col.check(_forced_composite(c0, F, G, T, B, x, y, c2[x], c2[y]) == c2[xy],
                  "Composition", x, y)
    for A in range(B.n0):
        col.check(_forced_unit(c0, F, G, T, B, A) == c2[B.unit1[A]], "UnitCompatibility", A)
    return col.report()


def validate_modification(omega: Modification) -> ValidationReport:
    col = Collector()
    chi, theta = omega.source, omega.target
    if not (chi.source.same_as(theta.source) and chi.target.same_as(theta.target)):
        col.add("ShapeMismatch", "pseudonats are not parallel")
        return col.report()
    F, G = chi.source, chi.target
    B, T = F.source, F.target
    if len(omega.comp) != B.n0:
        col.add("DanglingReference", "table sizes")
        return col.report()
    for A in range(B.n0):
        w = omega.comp[A]
        if col.check(0 <= w < T.n2, "DanglingReference", "comp", A):
            col.check(T.src2[w] == chi.comp0[A] and T.tgt2[w] == theta.comp0[A], "Typing", A)
    if col.items:
        return col.report()
    for x in range(B.n1):
        A, Bt = B.src1[x], B.tgt1[x]
        lhs = T.v(T.h2(T.id2[G.map1[x]], omega.comp[A]), chi.comp2[x])
        rhs = T.v(theta.comp2[x], T.h2(omega.comp[Bt], T.id2[F.map1[x]]))
        col.check(lhs == rhs, "ModificationSquare", x)
    return col.report()


# --------------------------------------------------------------------------
# operations on pseudonats and modifications


def compose_pseudonats(theta: PseudoNat, chi: PseudoNat) -> PseudoNat:
    """``θ·χ`` for ``χ: F → G`` and ``θ: G → K`` (``χ`` acts first)."""
    if not chi.target.same_as(theta.source):
        raise ShapeMismatch("pseudonats do not compose", (chi.name, theta.name))
    F = chi.source
    B, T = F.source, F.target
    comp0 = tuple(T.h(theta.comp0[A], chi.comp0[A]) for A in range(B.n0))
    comp2 = []
    for x in range(B.n1):
        A, Bt = B.src1[x], B.tgt1[x]
        first = T.h2(T.id2[theta.comp0[Bt]], chi.comp2[x])
        second = T.h2(theta.comp2[x], T.id2[chi.comp0[A]])
        comp2.append(T.v(second, first))
    return PseudoNat(F, theta.target, comp0, tuple(comp2))


def compose_modifications(second: Modification, first: Modification) -> Modification:
    """Pointwise vertical composite, ``first`` acting first."""
    if not first.target.same_as(second.source):
        raise ShapeMismatch("modifications do not compose", (first.comp, second.comp))
    T = first.source.source.target
    return Modification(first.source, second.target,
                        tuple(T.v(b, a) for a, b in zip(first.comp, second.comp)))


def tensor_pseudonat(beta: PseudoNat, alpha: PseudoNat) -> PseudoNat:
    """``β⊗α: G∘F → G'∘F'`` for ``α: F → F'`` and ``β: G → G'``.

    Component 1-cells are ``β⁰_{F'A}∘G(α⁰_A)``; the 2-cell part pastes
    ``G(α_X)`` and ``β_{F'X}`` with the compositors of ``G`` inserted.
    """
    F, Fp = alpha.source, alpha.target
    G, Gp = beta.source, beta.target
    if not F.target.same_tables(G.source):
        raise ShapeMismatch("pseudonats are not horizontally composable", (alpha.name, beta.name))
    B, T = F.source, G.target
    comp0 = tuple(T.h(beta.comp0[Fp.obj[A]], G.map1[alpha.comp0[A]]) for A in range(B.n0))
    comp2 = []
    for x in range(B.n1):
        A, Bt = B.src1[x], B.tgt1[x]
        b_top = beta.comp0[Fp.obj[Bt]]
        s1 = T.whisker(b_top, G.comp[alpha.comp0[Bt], F.map1[x]])
        s2 = T.whisker(b_top, G.map2[alpha.comp2[x]])
        back = T.inv2(G.comp[Fp.map1[x], alpha.comp0[A]])
        if back is None:
            raise ShapeMismatch("compositor is not invertible", (Fp.map1[x], alpha.comp0[A]))
        s3 = T.whisker(b_top, back)
        s4 = T.whisker(None, beta.comp2[Fp.map1[x]], G.map1[alpha.comp0[A]])
        comp2.append(T.vseq(s1, s2, s3, s4))
    return PseudoNat(compose_pseudofunctors(G, F), compose_pseudofunctors(Gp, Fp), comp0, tuple(comp2))


def tensor_modifications(omega: Modification, omega_p: Modification) -> Modification:
    """``(ω⊗ω')_A = ω_{F'A}∘G(ω'_A)`` for ``ω: β ⇒ β'`` and ``ω': α ⇒ α'``."""
    beta, beta_p = omega.source, omega.target
    alpha, alpha_p = omega_p.source, omega_p.target
    Fp = alpha.target
    G = beta.source
    if not alpha.target.target.same_tables(beta.source.source):
        raise ShapeMismatch("modifications are not horizontally composable", ())
    T = G.target
    B = alpha.source.source
    comp = tuple(T.h2(omega.comp[Fp.obj[A]], G.map2[omega_p.comp[A]]) for A in range(B.n0))
    return Modification(tensor_pseudonat(beta, alpha), tensor_pseudonat(beta_p, alpha_p), comp)


def comparison_constraint(alpha: PseudoNat, beta: PseudoNat) -> Modification:
    """``c_{α,β}: (id_{F'}⊗β)·(α⊗id_H) ⇒ α⊗β`` with components ``α_{β_A}⁻¹``.

    Here ``α: F → F'`` and ``β: H → H'``; ``F`` and ``F'`` must be unital.
    """
    F, Fp = alpha.source, alpha.target
    H, Hp = beta.source, beta.target
    if not H.target.same_tables(F.source):
        raise ShapeMismatch("pseudonats are not horizontally composable", ())
    if not (F.unital and Fp.unital):
        raise NotUnital("comparison constraint needs unital outer functors", (F.name, Fp.name))
    T = F.target
    src = compose_pseudonats(tensor_pseudonat(identity_pseudonat(Fp), beta),
                             tensor_pseudonat(alpha, identity_pseudonat(H)))
    tgt = tensor_pseudonat(alpha, beta)
    comp = []
    for A in range(H.source.n0):
        inv = T.inv2(alpha.comp2[beta.comp0[A]])
        comp.append(inv)
    return Modification(src, tgt, tuple(comp))


def associativity_constraint(alpha: PseudoNat, beta: PseudoNat, gamma: PseudoNat) -> Modification:
    """``a: (α⊗β)⊗γ ⇒ α⊗(β⊗γ)`` with ``a_A = id ∘ G₂(β_{H'A}, F(γ_A))``.

    ``α: G → G'``, ``β: F → F'``, ``γ: H → H'``; ``G₂`` is the compositor of ``G``.
    """
    G = alpha.source
    F = beta.source
    Hp = gamma.target
    Fp = beta.target
    T = G.target
    src = tensor_pseudonat(tensor_pseudonat(alpha, beta), gamma)
    tgt = tensor_pseudonat(alpha, tensor_pseudonat(beta, gamma))
    comp = []
    for A in range(gamma.source.source.n0):
        b = beta.comp0[Hp.obj[A]]
        fg = F.map1[gamma.comp0[A]]
        comp.append(T.whisker(alpha.comp0[Fp.obj[Hp.obj[A]]], G.comp[b, fg]))
    return Modification(src, tgt, tuple(comp))


def pentagon_report(alpha: PseudoNat, beta: PseudoNat, gamma: PseudoNat, delta: PseudoNat) -> ValidationReport:
    """Compare the two pastings of associativity constraints on four pseudonats."""
    col = Collector()
    ida = identity_modification(alpha)
    idd = identity_modification(delta)
    bg = tensor_pseudonat(beta, gamma)
    gd = tensor_pseudonat(gamma, delta)
    ab = tensor_pseudonat(alpha, beta)
    try:
        lhs = compose_modifications(
            tensor_modifications(ida, associativity_constraint(beta, gamma, delta)),
            compose_modifications(
                associativity_constraint(alpha, bg, delta),
                tensor_modifications(associativity_constraint(alpha, beta, gamma), idd),
            ),
        )
        rhs = compose_modifications(
            associativity_constraint(alpha, beta, gd),
            associativity_constraint(ab, gamma, delta),
        )
    except (ShapeMismatch, NotComposable) as exc:
        col.add("PentagonShape", str(exc))
        return col.report()
    for A, (p, q) in enumerate(zip(lhs.comp, rhs.comp)):
        col.check(p == q, "Pentagon", A)
    return col.report()


# --------------------------------------------------------------------------
# enumeration


class _Budget:
    def __init__(self, cap: int, what: str):
        self.cap = cap
        self.used = 0
        self.what = what

    def spend(self, k: int = 1):
        self.used += k
        if self.used > self.cap:
            raise SearchBudgetExceeded(self.what, self.cap)


def _pseudonat_search(F: PseudoFunctor, G: PseudoFunctor, budget: _Budget, comp0_choices=None):
    """Yield every valid pseudonat ``F → G`` in deterministic order.

    Backtracks over component 1-cells, then over 2-cells of generating
    1-cells; composites and units are forced and checked by propagation.
    """
    B, T = F.source, F.target
    choices = comp0_choices if comp0_choices is not None else _component_choices(F, G, budget)
    nat_by_cell: dict = {}
    for a in range(B.n2):
        nat_by_cell.setdefault(B.src2[a], []).append(a)
        nat_by_cell.setdefault(B.tgt2[a], []).append(a)
    pairs_by_cell: dict = {}
    for (x, y) in B.hc1:
        pairs_by_cell.setdefault(x, []).append((x, y))
        pairs_by_cell.setdefault(y, []).append((x, y))
    order = sorted(range(B.n1), key=lambda x: (B.src1[x], B.tgt1[x], x))
    for c0 in choices:
        budget.spend()
        c0 = tuple(c0)
        domains = []
        empty = False
        for x in range(B.n1):
            s = T.hc1.get((c0[B.tgt1[x]], F.map1[x]))
            t = T.hc1.get((G.map1[x], c0[B.src1[x]]))
            dom = [a for a in T.hom2(s, t) if T.inv2(a) is not None] if s is not None and t is not None else []
            if not dom:
                empty = True
                break
            domains.append(dom)
        if empty:
            continue
        start: dict = {}
        ok = True
        for A in range(B.n0):
            if not _assign(start, B.unit1[A], _forced_unit(c0, F, G, T, B, A), c0, F, G, T, B,
                           domains, nat_by_cell, pairs_by_cell):
                ok = False
                break
        if not ok:
            continue
        for sol in _extend(start, order, c0, F, G, T, B, domains, nat_by_cell, pairs_by_cell, budget):
            yield PseudoNat(F, G, c0, tuple(sol[x] for x in range(B.n1)))


def _component_choices(F: PseudoFunctor, G: PseudoFunctor, budget: _Budget):
    """Component 1-cells in lexicographic order, pruned as soon as some 1-cell
    between assigned objects admits no invertible naturality 2-cell."""
    B, T = F.source, F.target
    cand0 = [T.hom1(F.obj[A], G.obj[A]) for A in range(B.n0)]
    closing: list[list[int]] = [[] for _ in range(B.n0)]
    for x in range(B.n1):
        closing[max(B.src1[x], B.tgt1[x])].append(x)

    def admissible(c0, x):
        s = T.hc1.get((c0[B.tgt1[x]], F.map1[x]))
        t = T.hc1.get((G.map1[x], c0[B.src1[x]]))
        return s is not None and t is not None and any(T.inv2(a) is not None for a in T.hom2(s, t))

    c0: list[int] = []

    def walk(A):
        if A == B.n0:
            yield tuple(c0)
            return
        for y in cand0[A]:
            budget.spend()
            c0.append(y)
            if all(admissible(c0, x) for x in closing[A]):
                yield from walk(A + 1)
            c0.pop()

    yield from walk(0)


def _assign(state, x, value, c0, F, G, T, B, domains, nat_by_cell, pairs_by_cell) -> bool:
    """Assign ``χ_x = value`` and propagate forced composites in place."""
    work = [(x, value)]
    while work:
        x, value = work.pop()
        if x in state:
            if state[x] != value:
                return False
            continue
        if value not in domains[x]:
            return False
        state[x] = value
        for a in nat_by_cell.get(x, ()):
            p, q = B.src2[a], B.tgt2[a]
            if p in state and q in state:
                A, Bt = B.src1[p], B.tgt1[p]
                lhs = T.v(state[q], T.h2(T.id2[c0[Bt]], F.map2[a]))
                rhs = T.v(T.h2(G.map2[a], T.id2[c0[A]]), state[p])
                if lhs != rhs:
                    return False
        for (p, q) in pairs_by_cell.get(x, ()):
            if p in state and q in state:
                forced = _forced_composite(c0, F, G, T, B, p, q, state[p], state[q])
                work.append((B.hc1[p, q], forced))
    return True


def _extend(state, order, c0, F, G, T, B, domains, nat_by_cell, pairs_by_cell, budget):
    free = next((x for x in order if x not in state), None)
    if free is None:
        yield state
        return
    for value in domains[free]:
        budget.spend()
        trial = dict(state)
        if _assign(trial, free, value, c0, F, G, T, B, domains, nat_by_cell, pairs_by_cell):
            yield from _extend(trial, order, c0, F, G, T, B, domains, nat_by_cell, pairs_by_cell, budget)


def enumerate_pseudonats(F: PseudoFunctor, G: PseudoFunctor, cap: int = DEFAULT_CAP) -> list[PseudoNat]:
    if not (F.source.same_tables(G.source) and F.target.same_tables(G.target)):
        raise ShapeMismatch("functors are not parallel", (F.name, G.name))
    return list(_pseudonat_search(F, G, _Budget(cap, "pseudonat search")))


def enumerate_modifications(chi: PseudoNat, theta: PseudoNat, budget: _Budget | None = None) -> list[Modification]:
    F, G = chi.source, chi.target
    B, T = F.source, F.target
    budget = budget or _Budget(DEFAULT_CAP, "modification search")
    per_object = [T.hom2(chi.comp0[A], theta.comp0[A]) for A in range(B.n0)]
    found = []
    for comp in itertools.product(*per_object):
        budget.spend()
        good = True
        for x in range(B.n1):
            A, Bt = B.src1[x], B.tgt1[x]
            lhs = T.v(T.h2(T.id2[G.map1[x]], comp[A]), chi.comp2[x])
            rhs = T.v(theta.comp2[x], T.h2(comp[Bt], T.id2[F.map1[x]]))
            if lhs != rhs:
                good = False
                break
        if good:
            found.append(Modification(chi, theta, tuple(comp)))
    return found


def category_of(objects: list, morphisms_between, compose, identity_of, label=lambda m: m) -> FinCat:
    """Assemble a FinCat from objects and a function listing morphisms.

    ``morphisms_between(i, j)`` returns morphisms from object ``i`` to ``j``
    (the identity must be among them when ``i == j``); ``compose(m2, m1)``
    returns a morphism equal to an existing one by ``key()``.
    """
    mors, src, tgt = [], [], []
    for i in range(len(objects)):
        for j in range(len(objects)):
            for m in morphisms_between(i, j):
                mors.append(m)
                src.append(i)
                tgt.append(j)
    index = {(src[k], tgt[k], mors[k].key()): k for k in range(len(mors))}
    comp = {}
    for b in range(len(mors)):
        for a in range(len(mors)):
            if src[a] == tgt[b]:
                c = compose(mors[a], mors[b])
                comp[a, b] = index[src[b], tgt[a], c.key()]
    identity = [index[i, i, identity_of(obj).key()] for i, obj in enumerate(objects)]
    return FinCat(tuple(objects), tuple(src), tuple(tgt), comp, tuple(identity),
                  tuple(label(m) for m in mors))


def pseudonat_category(F: PseudoFunctor, G: PseudoFunctor, cap: int = DEFAULT_CAP) -> FinCat:
    """Pseu-Nat(F, G): every valid pseudonat and every valid modification."""
    budget = _Budget(cap, "pseudonat category")
    objects = list(_pseudonat_search(F, G, budget))
    if not (F.source.same_tables(G.source)):
        raise ShapeMismatch("functors are not parallel", (F.name, G.name))
    return category_of(
        objects,
        lambda i, j: enumerate_modifications(objects[i], objects[j], budget),
        compose_modifications,
        identity_modification,
        lambda m: m.comp,
    )


def relative_center(H: PseudoFunctor, cap: int = DEFAULT_CAP) -> MonoidalCat:
    """Z(H): pseudonatural endo-transformations of a unital pseudofunctor.

    Tensor on objects is composition of transformations, on morphisms the
    horizontal composite of components; the unit is the identity pseudonat.
    """
    if not H.unital:
        raise NotUnital("relative center needs a unital pseudofunctor", (H.name,))
    cat = pseudonat_category(H, H, cap)
    return monoidal_from_pseudonats(cat)


def monoidal_from_pseudonats(cat: FinCat) -> MonoidalCat:
    objects = cat.objects
    if not objects:
        return MonoidalCat(cat, {}, {}, -1)
    T = objects[0].source.target
    obj_index = {o.key(): i for i, o in enumerate(objects)}
    tensor_obj = {}
    for i, V in enumerate(objects):
        for j, W in enumerate(objects):
            tensor_obj[i, j] = obj_index[compose_pseudonats(V, W).key()]
    mor_index = {(cat.src[m], cat.tgt[m], cat.labels[m]): m for m in range(cat.n_morphisms)}
    tensor_mor = {}
    for a in range(cat.n_morphisms):
        for b in range(cat.n_morphisms):
            comp = tuple(T.h2(p, q) for p, q in zip(cat.labels[a], cat.labels[b]))
            key = (tensor_obj[cat.src[a], cat.src[b]], tensor_obj[cat.tgt[a], cat.tgt[b]], comp)
            tensor_mor[a, b] = mor_index[key]
    unit = obj_index[identity_pseudonat(objects[0].source).key()]
    return MonoidalCat(cat, tensor_obj, tensor_mor, unit)


_MONOIDAL_TAGS = {
    7: ("TensorUnit",), 8: ("TensorAssoc",), 2: ("TensorUnit", "mor"), 3: ("TensorAssoc", "mor"),
    1: ("TensorTyping",), 5: ("TensorIdentity",), 6: ("TensorInterchange",),
}


def validate_monoidal(M: MonoidalCat) -> ValidationReport:
    """Strict associativity/unitality of the tensor tables and functoriality."""
    C = M.cat
    col = Collector()
    col.extend(validate_fincat(C), "category")
    if col.items:
        return col.report()
    n, m = C.n_objects, C.n_morphisms
    if n == 0:
        return col.report()
    t_obj = np.full((n, n), -1, dtype=np.int32)
    t_mor = np.full((m, m), -1, dtype=np.int32)
    for (i, j), k in M.tensor_obj.items():
        if 0 <= i < n and 0 <= j < n:
            t_obj[i, j] = k
    for (a, b), k in M.tensor_mor.items():
        if 0 <= a < m and 0 <= b < m:
            t_mor[a, b] = k
    col.check(0 <= M.unit < n, "DanglingReference", "unit")
    for table, size, what in ((t_obj, n, "objects"), (t_mor, m, "morphisms")):
        for pos in zip(*np.nonzero((table < 0) | (table >= size))):
            col.check(False, "DanglingReference", "tensor", what, *map(int, pos))
    if col.items:
        return col.report()
    found = kernels.monoidal_violations(C.src, C.tgt, C.dense(), C.identity, t_obj, t_mor, M.unit)
    for code, cells in found:
        tag, *label = _MONOIDAL_TAGS[code]
        col.check(False, tag, *label, *cells)
    return col.report()