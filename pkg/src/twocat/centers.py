"""Centers: the braided G-crossed center, the braided center, and equivariantization.

``build_ZG`` collects pseudonatural transformations ``Id_B ⇒ F_g`` for a
strict action, graded by ``g``. The tensor of ``X`` (grade ``g``) and ``Y``
(grade ``h``) has components ``X_{F_h A}∘Y_A``; the group acts by
``g_*(X)_A = F_g(X_{F_{g⁻¹} A})``; and the braiding ``X⊗Y → g_*(Y)⊗X`` has
components ``X_{Y_A}``, the naturality 2-cell of ``X`` at the 1-cell ``Y_A``.

The second half builds the G-action on the relative center ``Z(Φ)`` of the
forgetful 2-functor ``Φ: B^G → B``, its equivariantization, and the
comparison functor into ``Z(B^G)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._search import Budget, solve
from .catalog import Catalog
from .core2 import Collector, FinCat, FinGroup, ValidationReport, trivial_group
from .equivariant import (
    Eq1Cell,
    Eq2Cell,
    EqZeroCell,
    compose_eq_1cells,
    enumerate_equivariant,
    forgetful_Phi,
    validate_eq_1cell,
    validate_eq_2cell,
)
from .errors import NotStrictAction, ShapeMismatch
from .gaction import GroupAction2
from .pseudo import (
    DEFAULT_CAP,
    MonoidalCat,
    PseudoNat,
    _Budget,
    category_of,
    compose_modifications,
    enumerate_modifications,
    enumerate_pseudonats,
    identity_modification,
    identity_pseudofunctor,
    identity_pseudonat,
    relative_center,
    validate_monoidal,
)


# --------------------------------------------------------------------------
# data


@dataclass(frozen=True, eq=False)
class GradedCenterObj:
    grade: int
    X: PseudoNat

    def key(self) -> tuple:
        return (self.grade, self.X.key())


@dataclass(eq=False)
class GCrossedCat:
    """A strict braided G-crossed category stored as tables.

    All grades share one ``FinCat``; ``grade[i]`` is the grade of object ``i``.
    ``act_obj[g]`` and ``act_mor[g]`` tabulate ``g_*``; ``braid[i, j]`` is the
    morphism ``c_{X_i, X_j}`` or ``-1`` when the expected morphism is missing.
    """

    group: FinGroup
    cat: FinCat
    grade: tuple
    tensor_obj: dict
    tensor_mor: dict
    unit: int
    act_obj: dict
    act_mor: dict
    braid: dict
    name: str = ""

    @property
    def monoidal(self) -> MonoidalCat:
        return MonoidalCat(self.cat, self.tensor_obj, self.tensor_mor, self.unit, self.braid)

    def component(self, g: int) -> list[int]:
        return [i for i, d in enumerate(self.grade) if d == g]

    def counts(self) -> dict:
        return {
            "objects": self.cat.n_objects,
            "morphisms": self.cat.n_morphisms,
            "objects_per_grade": {self.group.elements[g]: len(self.component(g)) for g in self.group},
        }


@dataclass(eq=False)
class MonCatGAction:
    """A strict action by monoidal functors up to the coherent isomorphisms ``ν``.

    The functors ``g_*`` are strict monoidal, so ``ξ^g`` is the identity and
    is not stored. ``nu[g, h][i]`` is the morphism ``g_*h_*(X_i) → (gh)_*(X_i)``.
    """

    group: FinGroup
    base: MonoidalCat
    act_obj: dict
    act_mor: dict
    nu: dict
    name: str = ""


@dataclass(frozen=True)
class EquivariantMonObj:
    X: int
    s: tuple

    def key(self) -> tuple:
        return (self.X, self.s)


@dataclass(frozen=True)
class EquivariantMonMor:
    source: EquivariantMonObj
    target: EquivariantMonObj
    f: int

    def key(self) -> int:
        return self.f


# --------------------------------------------------------------------------
# helpers over finite categories


def _mor_index(C: FinCat) -> dict:
    return {(C.src[m], C.tgt[m], C.labels[m]): m for m in range(C.n_morphisms)}


def _inverse_in(C: FinCat, m: int):
    for k in C.hom(C.tgt[m], C.src[m]):
        if C.comp.get((k, m)) == C.identity[C.src[m]] and C.comp.get((m, k)) == C.identity[C.tgt[m]]:
            return k
    return None


def _isos(C: FinCat, x: int, y: int) -> list[int]:
    return [m for m in C.hom(x, y) if _inverse_in(C, m) is not None]


def _require_strict(action: GroupAction2):
    if not action.strict:
        raise NotStrictAction("this construction needs a strict action; strictify first", (action.name,))


# --------------------------------------------------------------------------
# the braided G-crossed center


def _tensor_comps(action, X: PseudoNat, Y: PseudoNat, h: int):
    B, Fh = action.base, action.F[h]
    comp0 = tuple(B.h(X.comp0[Fh.obj[A]], Y.comp0[A]) for A in range(B.n0))
    comp2 = tuple(
        B.v(B.whisker(None, X.comp2[Fh.map1[w]], Y.comp0[B.src1[w]]),
            B.whisker(X.comp0[Fh.obj[B.tgt1[w]]], Y.comp2[w]))
        for w in range(B.n1))
    return comp0, comp2


def _pushed_comps(action, g: int, X: PseudoNat):
    B, G = action.base, action.group
    Fg, Fi = action.F[g], action.F[G.inv[g]]
    comp0 = tuple(Fg.map1[X.comp0[Fi.obj[A]]] for A in range(B.n0))
    comp2 = tuple(Fg.map2[X.comp2[Fi.map1[w]]] for w in range(B.n1))
    return comp0, comp2


def build_ZG(B, action: GroupAction2, cap: int = DEFAULT_CAP) -> GCrossedCat:
    """Tabulate ``Z_G(B)`` for a strict action of ``G`` on ``B``."""
    if not B.same_tables(action.base):
        raise ShapeMismatch("the action does not act on the given 2-category", (B.name, action.base.name))
    _require_strict(action)
    G = action.group
    Id = identity_pseudofunctor(B)
    objects = [GradedCenterObj(g, X) for g in G for X in enumerate_pseudonats(Id, action.F[g], cap)]
    budget = _Budget(cap, "center morphism search")

    def between(i, j):
        a, b = objects[i], objects[j]
        return enumerate_modifications(a.X, b.X, budget) if a.grade == b.grade else []

    cat = category_of(objects, between, compose_modifications,
                      lambda o: identity_modification(o.X), label=lambda m: m.comp)
    return _tabulate_crossed(action, cat, f"Z_{G.name}({B.name})")


def _tabulate_crossed(action, cat: FinCat, name: str) -> GCrossedCat:
    B, G = action.base, action.group
    objects = cat.objects
    grade = tuple(o.grade for o in objects)
    obj_id = {o.key(): i for i, o in enumerate(objects)}
    mor_id = _mor_index(cat)

    tensor_obj = {}
    for i, x in enumerate(objects):
        for j, y in enumerate(objects):
            tensor_obj[i, j] = obj_id[G.m(x.grade, y.grade), _tensor_comps(action, x.X, y.X, y.grade)]
    tensor_mor = {}
    for a in range(cat.n_morphisms):
        for b in range(cat.n_morphisms):
            hb = grade[cat.src[b]]
            comp = tuple(B.h2(cat.labels[a][action.F[hb].obj[A]], cat.labels[b][A]) for A in range(B.n0))
            key = (tensor_obj[cat.src[a], cat.src[b]], tensor_obj[cat.tgt[a], cat.tgt[b]], comp)
            tensor_mor[a, b] = mor_id[key]

    act_obj, act_mor = {}, {}
    for g in G:
        act_obj[g] = tuple(obj_id[G.conj(g, o.grade), _pushed_comps(action, g, o.X)] for o in objects)
        Fg, Fi = action.F[g], action.F[G.inv[g]]
        act_mor[g] = tuple(
            mor_id[act_obj[g][cat.src[m]], act_obj[g][cat.tgt[m]],
                   tuple(Fg.map2[cat.labels[m][Fi.obj[A]]] for A in range(B.n0))]
            for m in range(cat.n_morphisms))

    braid = {}
    for i, x in enumerate(objects):
        for j, y in enumerate(objects):
            comp = tuple(x.X.comp2[y.X.comp0[A]] for A in range(B.n0))
            target = tensor_obj[act_obj[x.grade][j], i]
            braid[i, j] = mor_id.get((tensor_obj[i, j], target, comp), -1)

    unit = obj_id[G.unit, identity_pseudonat(identity_pseudofunctor(B)).key()]
    return GCrossedCat(G, cat, grade, tensor_obj, tensor_mor, unit, act_obj, act_mor, braid, name)


def check_g_crossed_axioms(C: GCrossedCat) -> ValidationReport:
    """Exhaustive check of grading, the action and the three braiding axioms."""
    col = Collector()
    col.extend(validate_monoidal(C.monoidal), "monoidal")
    if col.items:
        return col.report()
    G, K = C.group, C.cat
    n, nm = K.n_objects, K.n_morphisms
    t, tm, comp = C.tensor_obj, C.tensor_mor, K.comp
    ident = K.identity

    col.check(C.grade[C.unit] == G.unit if n else True, "Grading", "unit")
    for i in range(n):
        for j in range(n):
            col.check(C.grade[t[i, j]] == G.m(C.grade[i], C.grade[j]), "Grading", i, j)
    for m in range(nm):
        col.check(C.grade[K.src[m]] == C.grade[K.tgt[m]], "Grading", "morphism", m)

    for g in G:
        ao, am = C.act_obj[g], C.act_mor[g]
        for i in range(n):
            col.check(C.grade[ao[i]] == G.conj(g, C.grade[i]), "ActGrading", g, i)
            col.check(am[ident[i]] == ident[ao[i]], "ActFunctor", g, "identity", i)
        for m in range(nm):
            col.check(K.src[am[m]] == ao[K.src[m]] and K.tgt[am[m]] == ao[K.tgt[m]], "ActFunctor", g, m)
        for (p, q), r in comp.items():
            col.check(am[r] == comp.get((am[p], am[q])), "ActFunctor", g, p, q)
        col.check(ao[C.unit] == C.unit if n else True, "ActMonoidal", g, "unit")
        for i in range(n):
            for j in range(n):
                col.check(ao[t[i, j]] == t[ao[i], ao[j]], "ActMonoidal", g, i, j)
        for a in range(nm):
            for b in range(nm):
                col.check(am[tm[a, b]] == tm[am[a], am[b]], "ActMonoidal", g, "mor", a, b)
        for h in G:
            gh = G.m(g, h)
            col.check(all(ao[C.act_obj[h][i]] == C.act_obj[gh][i] for i in range(n))
                      and all(am[C.act_mor[h][m]] == C.act_mor[gh][m] for m in range(nm)),
                      "ActComposition", g, h)
    col.check(C.act_obj[G.unit] == tuple(range(n)) and C.act_mor[G.unit] == tuple(range(nm)),
              "ActUnit", G.unit)

    c = C.braid
    typed = {}
    for i in range(n):
        g = C.grade[i]
        for j in range(n):
            m = c.get((i, j), -1)
            ok = 0 <= m < nm and K.src[m] == t[i, j] and K.tgt[m] == t[C.act_obj[g][j], i]
            typed[i, j] = ok
            if col.check(ok, "BraidTyping", i, j):
                col.check(_inverse_in(K, m) is not None, "BraidInvertible", i, j)
    if not all(typed.values()):
        return col.report()

    for a in range(nm):
        x, x2 = K.src[a], K.tgt[a]
        g = C.grade[x]
        for b in range(nm):
            y, y2 = K.src[b], K.tgt[b]
            lhs = comp[c[x2, y2], tm[a, b]]
            rhs = comp[tm[C.act_mor[g][b], a], c[x, y]]
            col.check(lhs == rhs, "BraidNaturality", a, b)

    for i in range(n):
        k = C.grade[i]
        for j in range(n):
            gj = C.grade[j]
            for z in range(n):
                for g in G:
                    ao, am = C.act_obj[g], C.act_mor[g]
                    col.check(am[c[i, z]] == c[ao[i], ao[z]], "BraidAxiom1", g, i, z)
                two = comp[tm[ident[C.act_obj[k][j]], c[i, z]], tm[c[i, j], ident[z]]]
                col.check(c[i, t[j, z]] == two, "BraidAxiom2", i, j, z)
                three = comp[tm[c[i, C.act_obj[gj][z]], ident[j]], tm[ident[i], c[j, z]]]
                col.check(c[t[i, j], z] == three, "BraidAxiom3", i, j, z)
    return col.report()


def trivial_component_center(B) -> MonoidalCat:
    """``Z(B)`` with the braiding ``c_{V,W}`` given by the components ``V_{W_A}``."""
    M = relative_center(identity_pseudofunctor(B))
    K = M.cat
    mor_id = _mor_index(K)
    braid = {}
    for i, V in enumerate(K.objects):
        for j, W in enumerate(K.objects):
            comp = tuple(V.comp2[W.comp0[A]] for A in range(B.n0))
            braid[i, j] = mor_id.get((M.tensor_obj[i, j], M.tensor_obj[j, i], comp), -1)
    return MonoidalCat(K, M.tensor_obj, M.tensor_mor, M.unit, braid)


def as_trivially_graded(M: MonoidalCat) -> GCrossedCat:
    """View a braided monoidal category as G-crossed over the trivial group."""
    G = trivial_group()
    K = M.cat
    return GCrossedCat(G, K, (G.unit,) * K.n_objects, M.tensor_obj, M.tensor_mor, M.unit,
                       {G.unit: tuple(range(K.n_objects))}, {G.unit: tuple(range(K.n_morphisms))},
                       M.braid, "trivially graded")


def validate_braided(M: MonoidalCat) -> ValidationReport:
    """Hexagons, naturality and invertibility of ``M.braid``."""
    return check_g_crossed_axioms(as_trivially_graded(M))


# --------------------------------------------------------------------------
# the ε cells of an equivariant 0-cell


def _ustar(action, P: EqZeroCell) -> tuple:
    B = action.base
    out = tuple(B.inv1(u) for u in P.U)
    if any(u is None for u in out):
        raise ShapeMismatch("equivariant 0-cell has a 1-cell U_g without strict inverse", (P.A,))
    return out


def epsilon_data(action: GroupAction2, P: EqZeroCell) -> dict:
    """``ε_{g,h}: U*_g∘F_g(U*_h) ⇒ U*_{gh}`` obtained by conjugating ``Π⁻¹``."""
    _require_strict(action)
    B, G = action.base, action.group
    Us = _ustar(action, P)
    eps = {}
    for g in G:
        for h in G:
            pinv = B.inv2(P.pi(g, h))
            eps[g, h] = B.whisker(B.h(Us[g], action.act1(g, Us[h])), pinv, Us[G.m(g, h)])
    return eps


def check_epsilon(action: GroupAction2, P: EqZeroCell, eps: dict | None = None) -> ValidationReport:
    """The two inverse identities between ``ε`` and ``Π`` and the cocycle law for ``ε``."""
    B, G = action.base, action.group
    eps = eps if eps is not None else epsilon_data(action, P)
    Us = _ustar(action, P)
    col = Collector()
    for g in G:
        for h in G:
            e = eps[g, h]
            col.check(0 <= e < B.n2 and B.src2[e] == B.h(Us[g], action.act1(g, Us[h]))
                      and B.tgt2[e] == Us[G.m(g, h)], "EpsilonShape", g, h)
    if col.items:
        return col.report()
    for g in G:
        for h in G:
            e, p = eps[g, h], P.pi(g, h)
            col.check(B.h2(e, p) == B.id2[B.unit1[P.A]], "EpsilonPi", "eps.pi", g, h)
            col.check(B.h2(p, e) == B.id2[B.unit1[action.act0(G.m(g, h), P.A)]], "EpsilonPi", "pi.eps", g, h)
    for g in G:
        for h in G:
            for f in G:
                gh, hf = G.m(g, h), G.m(h, f)
                lhs = B.v(eps[gh, f], B.whisker(None, eps[g, h], action.act1(gh, Us[f])))
                rhs = B.v(eps[g, hf], B.whisker(Us[g], action.act2(g, eps[h, f])))
                col.check(lhs == rhs, "EpsilonPi2", g, h, f)
    return col.report()


# --------------------------------------------------------------------------
# the G-action on Z(Φ)


def action_on_ZPhi(B, action: GroupAction2, *, catalog: Catalog | None = None,
                   center: MonoidalCat | None = None, cap: int = DEFAULT_CAP) -> MonCatGAction:
    """The action ``X ↦ U*_g∘F_g(X)∘U_g`` on ``Z(Φ)`` for ``Φ: B^G → B``.

    Missing images are recorded as ``-1`` and reported by the validator.
    """
    if not B.same_tables(action.base):
        raise ShapeMismatch("the action does not act on the given 2-category", (B.name, action.base.name))
    _require_strict(action)
    G = action.group
    catalog = catalog or enumerate_equivariant(action, cap)
    Z = center or relative_center(forgetful_Phi(catalog), cap)
    K = Z.cat
    zero, one = catalog.zero, catalog.one
    us = [_ustar(action, P) for P in zero]
    eps = [epsilon_data(action, P) for P in zero]
    obj_id = {o.key(): i for i, o in enumerate(K.objects)}
    mor_id = _mor_index(K)

    def conj(g, p, x):
        return B.hpath(us[p][g], action.act1(g, x), zero[p].U[g])

    def push_obj(g, X):
        comp0 = tuple(conj(g, p, X.comp0[p]) for p in range(len(zero)))
        comp2 = []
        for k, tau in enumerate(one):
            p, q = catalog.ids0[tau.source], catalog.ids0[tau.target]
            xs, xt = X.comp0[p], X.comp0[q]
            tg = tau.theta_g[g]
            Fg = action.F[g]
            comp2.append(B.vseq(
                B.whisker(B.h(us[q][g], Fg.map1[xt]), B.inv2(tg)),
                B.whisker(us[q][g], Fg.map2[X.comp2[k]], zero[p].U[g]),
                B.whisker(us[q][g], tg, B.hpath(us[p][g], Fg.map1[xs], zero[p].U[g]))))
        return obj_id.get((comp0, tuple(comp2)), -1)

    act_obj, act_mor = {}, {}
    for g in G:
        act_obj[g] = tuple(push_obj(g, X) for X in K.objects)
        images = []
        for m in range(K.n_morphisms):
            comp = tuple(B.whisker(us[p][g], action.act2(g, a), zero[p].U[g]) for p, a in enumerate(K.labels[m]))
            images.append(mor_id.get((act_obj[g][K.src[m]], act_obj[g][K.tgt[m]], comp), -1))
        act_mor[g] = tuple(images)

    nu = {}
    for g in G:
        for h in G:
            gh = G.m(g, h)
            row = []
            for i, X in enumerate(K.objects):
                src = act_obj[g][act_obj[h][i]] if act_obj[h][i] >= 0 else -1
                comp = tuple(B.h2path(eps[p][g, h], B.id2[action.act1(gh, X.comp0[p])], zero[p].pi(g, h))
                             for p in range(len(zero)))
                row.append(mor_id.get((src, act_obj[gh][i], comp), -1))
            nu[g, h] = tuple(row)
    return MonCatGAction(G, Z, act_obj, act_mor, nu, f"{G.name} on Z(Phi)")


def validate_mon_g_action(C: MonCatGAction) -> ValidationReport:
    """Well-definedness, strict monoidality of each ``g_*`` and the laws for ``ν``."""
    col = Collector()
    G, M = C.group, C.base
    K = M.cat
    n, nm = K.n_objects, K.n_morphisms
    t, tm, comp, ident = M.tensor_obj, M.tensor_mor, K.comp, K.identity
    for g in G:
        col.check(all(x >= 0 for x in C.act_obj[g]) and all(x >= 0 for x in C.act_mor[g]),
                  "ActWellDefined", g)
    for key, row in C.nu.items():
        col.check(all(x >= 0 for x in row), "NuWellDefined", *key)
    if col.items:
        return col.report()

    for g in G:
        ao, am = C.act_obj[g], C.act_mor[g]
        for m in range(nm):
            col.check(K.src[am[m]] == ao[K.src[m]] and K.tgt[am[m]] == ao[K.tgt[m]], "ActFunctor", g, m)
        for i in range(n):
            col.check(am[ident[i]] == ident[ao[i]], "ActFunctor", g, "identity", i)
        for (p, q), r in comp.items():
            col.check(am[r] == comp.get((am[p], am[q])), "ActFunctor", g, p, q)
        if n:
            col.check(ao[M.unit] == M.unit, "ActMonoidal", g, "unit")
        for i in range(n):
            for j in range(n):
                col.check(ao[t[i, j]] == t[ao[i], ao[j]], "ActMonoidal", g, i, j)
        for a in range(nm):
            for b in range(nm):
                col.check(am[tm[a, b]] == tm[am[a], am[b]], "ActMonoidal", g, "mor", a, b)
    e = G.unit
    col.check(C.act_obj[e] == tuple(range(n)) and C.act_mor[e] == tuple(range(nm)), "ActUnit", e)

    for g in G:
        for h in G:
            gh = G.m(g, h)
            row = C.nu[g, h]
            for i in range(n):
                m = row[i]
                col.check(K.src[m] == C.act_obj[g][C.act_obj[h][i]] and K.tgt[m] == C.act_obj[gh][i],
                          "NuTyping", g, h, i)
                col.check(_inverse_in(K, m) is not None, "NuInvertible", g, h, i)
                if g == e or h == e:
                    col.check(m == ident[C.act_obj[gh][i]], "NuUnit", g, h, i)
            for f in range(nm):
                x, y = K.src[f], K.tgt[f]
                lhs = comp.get((row[y], C.act_mor[g][C.act_mor[h][f]]))
                col.check(lhs == comp.get((C.act_mor[gh][f], row[x])), "NuNatural", g, h, f)
            for i in range(n):
                for j in range(n):
                    col.check(row[t[i, j]] == tm[row[i], row[j]], "NuMonoidal", g, h, i, j)
    for g in G:
        for h in G:
            for f in G:
                gh, hf = G.m(g, h), G.m(h, f)
                for i in range(n):
                    lhs = comp.get((C.nu[gh, f][i], C.nu[g, h][C.act_obj[f][i]]))
                    rhs = comp.get((C.nu[g, hf][i], C.act_mor[g][C.nu[h, f][i]]))
                    col.check(lhs is not None and lhs == rhs, "NuAssociativity", g, h, f, i)
    return col.report()


# --------------------------------------------------------------------------
# equivariantization


def _equivariant_structures(C: MonCatGAction, i: int, budget: Budget) -> list[tuple]:
    G, K = C.group, C.base.cat
    e = G.unit
    order = list(G)

    def domain(g, asg):
        if g == e:
            return [K.identity[i]]
        found = _isos(K, C.act_obj[g][i], i)
        budget.spend(len(found))
        return found

    constraints = []
    for g in G:
        for h in G:
            gh = G.m(g, h)

            def tc3(asg, g=g, h=h, gh=gh):
                return K.comp.get((asg[gh], C.nu[g, h][i])) == K.comp.get((asg[g], C.act_mor[g][asg[h]]))
            constraints.append(((g, h, gh), tc3))
    return [tuple(asg[g] for g in G) for asg in solve(order, domain, constraints, budget)]


def validate_equivariant_object(C: MonCatGAction, obj: EquivariantMonObj) -> ValidationReport:
    G, K = C.group, C.base.cat
    col = Collector()
    for g in G:
        s = obj.s[g]
        col.check(K.src[s] == C.act_obj[g][obj.X] and K.tgt[s] == obj.X, "StructureTyping", g)
        col.check(_inverse_in(K, s) is not None, "StructureInvertible", g)
    col.check(obj.s[G.unit] == K.identity[obj.X], "StructureUnit")
    if col.items:
        return col.report()
    for g in G:
        for h in G:
            gh = G.m(g, h)
            lhs = K.comp.get((obj.s[gh], C.nu[g, h][obj.X]))
            rhs = K.comp.get((obj.s[g], C.act_mor[g][obj.s[h]]))
            col.check(lhs == rhs, "StructureCocycle", g, h)
    return col.report()


def equivariantize_monoidal(C: MonCatGAction, cap: int = DEFAULT_CAP) -> MonoidalCat:
    """``C^G``: objects ``(X, s)`` with ``s_g: g_*X → X`` and morphisms commuting with ``s``."""
    G, M = C.group, C.base
    K = M.cat
    budget = Budget(cap, "equivariant structure search")
    objects = [EquivariantMonObj(i, s) for i in range(K.n_objects)
               for s in _equivariant_structures(C, i, budget)]

    def between(a, b):
        x, y = objects[a], objects[b]
        return [EquivariantMonMor(x, y, f) for f in K.hom(x.X, y.X)
                if all(K.comp[f, x.s[g]] == K.comp[y.s[g], C.act_mor[g][f]] for g in G)]

    cat = category_of(objects, between,
                      lambda f2, f1: EquivariantMonMor(f1.source, f2.target, K.comp[f2.f, f1.f]),
                      lambda o: EquivariantMonMor(o, o, K.identity[o.X]),
                      label=lambda m: m.f)
    obj_id = {o.key(): i for i, o in enumerate(objects)}
    mor_id = _mor_index(cat)
    tensor_obj = {}
    for i, x in enumerate(objects):
        for j, y in enumerate(objects):
            r = tuple(M.tensor_mor[x.s[g], y.s[g]] for g in G)
            tensor_obj[i, j] = obj_id[M.tensor_obj[x.X, y.X], r]
    tensor_mor = {}
    for a in range(cat.n_morphisms):
        for b in range(cat.n_morphisms):
            key = (tensor_obj[cat.src[a], cat.src[b]], tensor_obj[cat.tgt[a], cat.tgt[b]],
                   M.tensor_mor[cat.labels[a], cat.labels[b]])
            tensor_mor[a, b] = mor_id[key]
    unit = obj_id[M.unit, tuple(K.identity[M.unit] for _ in G)] if objects else -1
    return MonoidalCat(cat, tensor_obj, tensor_mor, unit)


# --------------------------------------------------------------------------
# the comparison Z(Φ)^G → Z(B^G)


@dataclass(eq=False)
class CenterComparison:
    """Both sides of the comparison together with the tabulated functor ``Ψ``."""

    catalog: Catalog
    action_on_center: MonCatGAction
    equivariantized: MonoidalCat
    center_of_equivariant: MonoidalCat
    psi_obj: tuple
    psi_mor: tuple
    report: ValidationReport = field(default_factory=ValidationReport)

    def counts(self) -> dict:
        return {
            "ZPhi_G_objects": self.equivariantized.cat.n_objects,
            "ZPhi_G_morphisms": self.equivariantized.cat.n_morphisms,
            "Z_BG_objects": self.center_of_equivariant.cat.n_objects,
            "Z_BG_morphisms": self.center_of_equivariant.cat.n_morphisms,
        }


def compare_centers(B, action: GroupAction2, cap: int = DEFAULT_CAP, *, catalog: Catalog | None = None,
                    center_of_equivariant=None) -> CenterComparison:
    """Build ``Z(Φ)^G`` and ``Z(B^G)`` independently and tabulate ``Ψ`` between them.

    ``center_of_equivariant`` may be supplied, or a future resolving to it,
    when ``Z(B^G)`` is computed elsewhere from the same ``catalog``.
    """
    _require_strict(action)
    G = action.group
    catalog = catalog or enumerate_equivariant(action, cap)
    E = catalog.cat
    Cact = action_on_ZPhi(B, action, catalog=catalog, cap=cap)
    col = Collector()
    col.extend(validate_mon_g_action(Cact), "action")
    ZG = equivariantize_monoidal(Cact, cap) if not col.items else None
    if hasattr(center_of_equivariant, "result"):
        center_of_equivariant = center_of_equivariant.result()
    ZBG = center_of_equivariant or relative_center(identity_pseudofunctor(E), cap)
    if ZG is None:
        return CenterComparison(catalog, Cact, MonoidalCat(FinCat((), (), (), {}, ()), {}, {}, -1), ZBG,
                                (), (), col.report())

    K = Cact.base.cat
    zero, one = catalog.zero, catalog.one
    zbg_obj = {o.key(): i for i, o in enumerate(ZBG.cat.objects)}
    zbg_mor = _mor_index(ZBG.cat)

    def psi_one_cells(obj):
        X = K.objects[obj.X]
        cells = []
        for p, P in enumerate(zero):
            s_at = [K.labels[obj.s[g]][p] for g in G]
            cells.append(Eq1Cell(P, P, X.comp0[p], tuple(B.whisker(P.U[g], s_at[g]) for g in G)))
        return X, cells

    psi_obj, vcells = [], []
    for i, obj in enumerate(ZG.cat.objects):
        X, cells = psi_one_cells(obj)
        vcells.append(cells)
        comp0 = []
        for p, c in enumerate(cells):
            col.extend(validate_eq_1cell(action, c), "PsiWellDefined", i, p)
            comp0.append(catalog.ids1.get(c, -1))
        comp2 = []
        for k, tau in enumerate(one):
            p, q = catalog.ids0[tau.source], catalog.ids0[tau.target]
            try:
                cell = Eq2Cell(compose_eq_1cells(action, cells[q], tau),
                               compose_eq_1cells(action, tau, cells[p]), X.comp2[k])
            except Exception:
                col.check(False, "PsiWellDefined", i, "tau", k)
                comp2.append(-1)
                continue
            col.extend(validate_eq_2cell(action, cell), "PsiWellDefined", i, "tau", k)
            comp2.append(catalog.ids2.get(cell, -1))
        image = zbg_obj.get((tuple(comp0), tuple(comp2)), -1)
        col.check(image >= 0, "PsiWellDefined", "object", i)
        psi_obj.append(image)

    psi_mor = []
    for m in range(ZG.cat.n_morphisms):
        a, b = ZG.cat.src[m], ZG.cat.tgt[m]
        f = K.labels[ZG.cat.labels[m]]
        comp = tuple(catalog.ids2.get(Eq2Cell(vcells[a][p], vcells[b][p], f[p]), -1) for p in range(len(zero)))
        image = zbg_mor.get((psi_obj[a], psi_obj[b], comp), -1)
        col.check(image >= 0, "PsiWellDefined", "morphism", m)
        psi_mor.append(image)

    if not col.items:
        col.check(len(set(psi_obj)) == len(psi_obj), "PsiInjective", "objects")
        col.check(len(set(psi_mor)) == len(psi_mor), "PsiInjective", "morphisms")
        col.check(ZG.cat.n_objects == ZBG.cat.n_objects, "PsiSurjective", "objects",
                  ZG.cat.n_objects, ZBG.cat.n_objects)
        col.check(ZG.cat.n_morphisms == ZBG.cat.n_morphisms, "PsiSurjective", "morphisms",
                  ZG.cat.n_morphisms, ZBG.cat.n_morphisms)
        if ZG.cat.n_objects:
            col.check(psi_obj[ZG.unit] == ZBG.unit, "PsiMonoidal", "unit")
        for (i, j), k in ZG.tensor_obj.items():
            col.check(psi_obj[k] == ZBG.tensor_obj[psi_obj[i], psi_obj[j]], "PsiMonoidal", i, j)
        for (a, b), k in ZG.tensor_mor.items():
            col.check(psi_mor[k] == ZBG.tensor_mor[psi_mor[a], psi_mor[b]], "PsiMonoidal", "mor", a, b)
        for (a, b), k in ZG.cat.comp.items():
            col.check(psi_mor[k] == ZBG.cat.comp[psi_mor[a], psi_mor[b]], "PsiFunctor", a, b)
    return CenterComparison(catalog, Cact, ZG, ZBG, tuple(psi_obj), tuple(psi_mor), col.report())


def check_center_theorem(B, action: GroupAction2, cap: int = DEFAULT_CAP) -> ValidationReport:
    """Pass iff ``Ψ: Z(Φ)^G → Z(B^G)`` is well defined, bijective and strictly monoidal."""
    return compare_centers(B, action, cap).report


__all__ = [
    "CenterComparison", "EquivariantMonMor", "EquivariantMonObj", "GCrossedCat", "GradedCenterObj",
    "MonCatGAction", "action_on_ZPhi", "as_trivially_graded", "build_ZG", "check_center_theorem",
    "check_epsilon", "check_g_crossed_axioms", "compare_centers", "epsilon_data",
    "equivariantize_monoidal", "trivial_component_center", "validate_braided",
    "validate_equivariant_object", "validate_mon_g_action",
]
