import itertools

import pytest

from oracles import (
    cyclic_table,
    equivariant_one_cells,
    equivariant_zero_cell_count,
    equivariant_zero_cells,
    identity_maps,
    inversion_maps,
)
from support import ACTION_NAMES, action, equivariant, group
from twocat.core2 import delooping, unit_2cat, validate_2category
from twocat.equivariant import (
    EqZeroCell,
    compose_eq_1cells,
    enumerate_equivariant,
    forgetful_Phi,
    identity_eq_1cell,
    validate_eq_0cell,
    validate_eq_1cell,
    validate_eq_2cell,
)
from twocat.errors import NotComposable
from twocat.gaction import trivial_action
from twocat.pseudo import validate_pseudofunctor


def table(G):
    return [list(row) for row in G.mult]


def test_trivial_structure_is_equivariant():
    _, act = action("trivial_c2")
    B = act.base
    P = EqZeroCell(0, (B.unit1[0],) * 2, (B.id2[B.unit1[0]],) * 4)
    assert validate_eq_0cell(act, P).ok


def test_non_identity_unit_component_fails_unitality():
    _, act = action("trivial_c2")
    P = EqZeroCell(0, (1, 1), (0, 0, 0, 0))
    assert ("Unitality", ("U", "e")) in {(v.axiom, v.cells) for v in validate_eq_0cell(act, P).violations}


def test_trivial_c2_count():
    assert equivariant("trivial_c2").cat.n0 == 2 == equivariant_zero_cell_count(
        cyclic_table(2), 0, cyclic_table(2), 0, identity_maps(2, 2))


def test_inversion_count_and_candidates_match_oracle():
    cat = equivariant("inv_act")
    expected = equivariant_zero_cells(cyclic_table(2), 0, cyclic_table(4), 0, inversion_maps(4))
    assert len(expected) == 4
    assert sorted(P.U for P in cat.zero) == sorted(expected)


def test_trivial_s3_count_matches_oracle():
    G = group("s3")
    act = trivial_action(G, delooping(G))
    expected = equivariant_zero_cell_count(table(G), G.unit, table(G), G.unit, identity_maps(6, 6))
    assert enumerate_equivariant(act).cat.n0 == expected == 10


@pytest.mark.parametrize("name, phi, n", [
    ("trivial_c2", identity_maps(2, 2), 2),
    ("inv_act", inversion_maps(4), 4),
])
def test_one_cells_match_oracle(name, phi, n):
    cat = equivariant(name)
    for P, Q in itertools.product(cat.zero, repeat=2):
        found = sorted(c.theta for c in cat.one if c.source == P and c.target == Q)
        assert found == equivariant_one_cells(cyclic_table(2), cyclic_table(n), phi, P.U, Q.U)


def test_unit_2cat_is_its_own_equivariantization():
    cat = enumerate_equivariant(trivial_action(group("c3"), unit_2cat())).cat
    assert cat.counts() == {"cells0": 1, "cells1": 1, "cells2": 1}


def test_inversion_endpoint_bookkeeping():
    cat = equivariant("inv_act")
    for c in cat.one:
        assert c.target.U[1] == (c.source.U[1] - 2 * c.theta) % 4
    for c, d in itertools.product(cat.one, repeat=2):
        if d.target == c.source:
            composite = compose_eq_1cells(cat.action, c, d)
            assert composite.theta == (c.theta + d.theta) % 4
            assert (composite.source, composite.target) == (d.source, c.target)


@pytest.mark.parametrize("name", ACTION_NAMES)
def test_every_enumerated_cell_validates(name):
    cat = equivariant(name)
    act = cat.action
    assert all(validate_eq_0cell(act, P).ok for P in cat.zero)
    assert all(validate_eq_1cell(act, c).ok for c in cat.one)
    assert all(validate_eq_2cell(act, c).ok for c in cat.two)
    if cat.cat.n0:
        assert validate_2category(cat.cat).ok


def test_identity_is_a_unit_for_composition():
    cat = equivariant("inv_act")
    for c in cat.one:
        assert compose_eq_1cells(cat.action, identity_eq_1cell(cat.action, c.target), c) == c
        assert compose_eq_1cells(cat.action, c, identity_eq_1cell(cat.action, c.source)) == c


def test_composition_rejects_mismatched_endpoints():
    cat = equivariant("inv_act")
    c = next(c for c in cat.one if c.source != c.target)
    with pytest.raises(NotComposable):
        compose_eq_1cells(cat.action, c, c)


def test_obstructed_cocycle_has_no_equivariant_cells():
    assert equivariant("cocycle_c2").cat.n0 == 0


@pytest.mark.parametrize("name", ["trivial_c2", "trivial_c3", "unit_trivial_c2", "arrow_trivial_c2"])
def test_forgetful_functor_on_trivial_actions(name):
    B, _ = action(name)
    cat = equivariant(name)
    Phi = forgetful_Phi(cat)
    assert set(Phi.obj) == set(range(B.n0))
    E = cat.cat
    assert validate_pseudofunctor(Phi).ok
    for P in range(E.n0):
        assert Phi.map1[E.unit1[P]] == B.unit1[Phi.obj[P]]
    for (x, y), z in E.hc1.items():
        assert Phi.map1[z] == B.hc1[Phi.map1[x], Phi.map1[y]]
    for (a, b), c in E.vc.items():
        assert Phi.map2[c] == B.vc[Phi.map2[a], Phi.map2[b]]
    for (a, b), c in E.hc2.items():
        assert Phi.map2[c] == B.hc2[Phi.map2[a], Phi.map2[b]]
