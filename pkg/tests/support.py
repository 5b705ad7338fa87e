"""Cached fixture builders shared across test modules."""

from __future__ import annotations

from functools import lru_cache

from twocat.equivariant import enumerate_equivariant
from twocat.gaction import trivial_action
from twocat.standard import standard_2categories, standard_actions, standard_groups
from twocat.strictify import enumerate_BG, strict_action_on_BG

GROUP_NAMES = ("c1", "c2", "c3", "c4", "c2xc2", "s3")
ACTION_NAMES = tuple(standard_actions())


@lru_cache(maxsize=None)
def group(name):
    return standard_groups()[name]


@lru_cache(maxsize=None)
def two_category(name):
    return standard_2categories()[name]


STRICTIFIED = "+strictified"

# extra strict actions with richer cell structure, used by the sampled suites
EXTRA_ACTIONS = {
    "trivial_c2_on_c4": ("c2", "sigma_c4"),
    "trivial_c2_on_c1_c2": ("c2", "sigma_c1_c2"),
    "trivial_c3_on_c1_c2": ("c3", "sigma_c1_c2"),
}


@lru_cache(maxsize=None)
def action(name):
    """``(base, action)`` for a shipped action fixture or one of ``EXTRA_ACTIONS``."""
    if name.endswith(STRICTIFIED):
        bg = strictification(name[: -len(STRICTIFIED)])
        return bg.cat, strict_action_on_BG(bg)
    if name in EXTRA_ACTIONS:
        gname, bname = EXTRA_ACTIONS[name]
        B = two_category(bname)
        return B, trivial_action(group(gname), B, name)
    _, base_name, act = standard_actions()[name]
    return two_category(base_name), act


@lru_cache(maxsize=None)
def strictification(name):
    return enumerate_BG(action(name)[1])


@lru_cache(maxsize=None)
def strict_pair(name):
    """The fixture itself when strict, otherwise its strictification with the translation action."""
    B, act = action(name)
    if act.strict:
        return B, act
    bg = strictification(name)
    return bg.cat, strict_action_on_BG(bg)


@lru_cache(maxsize=None)
def equivariant(name):
    return enumerate_equivariant(action(name)[1])


SAMPLED_ACTIONS = ACTION_NAMES + tuple(EXTRA_ACTIONS) + ("cocycle_c2" + STRICTIFIED,)


def identity_grade_differences(Z, M) -> list[str]:
    """Compare the identity-grade part of a G-crossed table with a braided center.

    Objects are matched by their transformation data and morphisms by their
    components; every table is then compared through that matching.
    """
    e = Z.group.unit
    K, C = Z.cat, M.cat
    rows = Z.component(e)
    key_z = {i: K.objects[i].X.key() for i in rows}
    key_m = {i: C.objects[i].key() for i in range(C.n_objects)}
    problems = []
    if sorted(key_z.values()) != sorted(key_m.values()):
        return ["objects differ"]
    to_m = {i: next(j for j, k in key_m.items() if k == key_z[i]) for i in rows}
    mors_z = {m: (to_m[K.src[m]], to_m[K.tgt[m]], K.labels[m]) for m in range(K.n_morphisms) if K.src[m] in to_m}
    mors_m = {(C.src[m], C.tgt[m], C.labels[m]): m for m in range(C.n_morphisms)}
    if sorted(mors_z.values()) != sorted(mors_m):
        return ["morphisms differ"]
    mor_to_m = {m: mors_m[k] for m, k in mors_z.items()}
    if to_m.get(Z.unit) != M.unit:
        problems.append("unit")
    for i in rows:
        for j in rows:
            if to_m[Z.tensor_obj[i, j]] != M.tensor_obj[to_m[i], to_m[j]]:
                problems.append(f"tensor {i} {j}")
            if mor_to_m.get(Z.braid[i, j]) != M.braid[to_m[i], to_m[j]]:
                problems.append(f"braid {i} {j}")
    for a in mor_to_m:
        for b in mor_to_m:
            if mor_to_m[Z.tensor_mor[a, b]] != M.tensor_mor[mor_to_m[a], mor_to_m[b]]:
                problems.append(f"tensor_mor {a} {b}")
    for (a, b), c in K.comp.items():
        if a in mor_to_m and b in mor_to_m and mor_to_m[c] != C.comp[mor_to_m[a], mor_to_m[b]]:
            problems.append(f"comp {a} {b}")
    return problems
