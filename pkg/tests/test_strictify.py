import pytest

from oracles import coherent_family_count, cyclic_table, identity_maps, inversion_maps
from support import ACTION_NAMES, action, strictification
from twocat.core2 import cyclic_group, unit_2cat, validate_2category
from twocat.gaction import trivial_action, validate_action, validate_g_pseudofunctor
from twocat.pseudo import identity_pseudofunctor, validate_pseudofunctor
from twocat.strictify import (
    BGCaps,
    BGZeroCell,
    check_H_biequivalence,
    embedding_H,
    enumerate_BG,
    h_zero,
    strict_action_on_BG,
    validate_bg_0cell,
    validate_bg_1cell,
    validate_bg_2cell,
)
from twocat.errors import SearchBudgetExceeded


def constant_family(act, A):
    G, B = act.group, act.base
    n = G.order
    return BGZeroCell((A,) * n, (B.unit1[A],) * (n * n), (B.id2[B.unit1[A]],) * (n ** 3))


def test_constant_family_over_trivial_action():
    _, act = action("trivial_c2")
    assert validate_bg_0cell(act, constant_family(act, 0)).ok


def test_non_identity_theta_at_unit_fails_unitality():
    _, act = action("trivial_c2")
    P = constant_family(act, 0)
    bad = BGZeroCell(P.A, (1,) + P.theta[1:], P.alpha)
    assert "Unitality" in validate_bg_0cell(act, bad).tags()


@pytest.mark.parametrize("name", ACTION_NAMES)
def test_image_of_every_0cell_is_a_family(name):
    B, act = action(name)
    for A in range(B.n0):
        assert validate_bg_0cell(act, h_zero(act, A)).ok


def test_unit_2cat_strictifies_to_a_point():
    bg = enumerate_BG(trivial_action(cyclic_group(2), unit_2cat()))
    assert bg.cat.counts() == {"cells0": 1, "cells1": 1, "cells2": 1}


@pytest.mark.parametrize("name, group_order, cells, phi", [
    ("trivial_c2", 2, 2, identity_maps(2, 2)),
    ("trivial_c3", 3, 2, identity_maps(3, 2)),
    ("inv_act", 2, 4, inversion_maps(4)),
])
def test_zero_cell_count_matches_oracle(name, group_order, cells, phi):
    expected = coherent_family_count(cyclic_table(group_order), 0, cyclic_table(cells), 0, phi)
    assert strictification(name).cat.n0 == expected


@pytest.mark.parametrize("name", ACTION_NAMES)
def test_strictification_is_a_valid_2category(name):
    bg = strictification(name)
    assert validate_2category(bg.cat).ok
    act = bg.action
    for P in bg.zero:
        assert validate_bg_0cell(act, P).ok
    for c in bg.one:
        assert validate_bg_1cell(act, c).ok
    for c in bg.two:
        assert validate_bg_2cell(act, c).ok


@pytest.mark.parametrize("name", ACTION_NAMES)
def test_translation_action_is_strict(name):
    bg = strictification(name)
    L = strict_action_on_BG(bg)
    G = L.group
    assert L.strict and validate_action(L).ok
    assert L.F[G.unit].same_as(identity_pseudofunctor(bg.cat))
    for g in G:
        for h in G:
            LgLh = tuple(L.F[g].map1[x] for x in L.F[h].map1)
            assert LgLh == L.F[G.m(g, h)].map1
    for i, P in enumerate(bg.zero):
        for g in G:
            moved = bg.zero[L.F[g].obj[i]]
            assert moved.A == tuple(P.A[G.m(x, g)] for x in G)


def test_l_s_squares_to_identity_on_c2_fixtures():
    for name in ("trivial_c2", "inv_act", "arrow_trivial_c2", "cocycle_c2"):
        L = strict_action_on_BG(strictification(name))
        Ls = L.F[1]
        assert tuple(Ls.map1[x] for x in Ls.map1) == tuple(range(len(Ls.map1)))
        assert tuple(Ls.map2[a] for a in Ls.map2) == tuple(range(len(Ls.map2)))


@pytest.mark.parametrize("name", ACTION_NAMES)
def test_embedding_and_biequivalence(name):
    bg = strictification(name)
    Hs = embedding_H(bg)
    assert validate_pseudofunctor(Hs.H).ok
    assert validate_g_pseudofunctor(Hs).ok
    G = bg.action.group
    T = bg.cat
    for g in G:
        assert all(c == T.id2[s] for c, s in zip(Hs.Pi[G.unit, g].comp, Hs.Pi[G.unit, g].source.comp0))
    assert check_H_biequivalence(bg, Hs).ok


def test_embedding_of_unit_2cat_is_an_isomorphism():
    bg = enumerate_BG(trivial_action(cyclic_group(2), unit_2cat()))
    H = embedding_H(bg).H
    assert (H.obj, H.map1, H.map2) == ((0,), (0,), (0,))


def test_budget_is_enforced():
    with pytest.raises(SearchBudgetExceeded):
        enumerate_BG(action("inv_act")[1], BGCaps(search_budget=3))
