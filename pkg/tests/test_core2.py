import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mutations import _rebuild, _with, mutants
from support import GROUP_NAMES, group, two_category
from twocat.core2 import (
    FinCat,
    arrow_2cat,
    cyclic_group,
    delooping,
    find_inverse_1cell,
    hcompose,
    hcompose2,
    make_fin_group,
    op_2category,
    product_group,
    ref1,
    ref2,
    trivial_group,
    unit_2cat,
    validate_2category,
    validate_fincat,
    vcompose,
)
from twocat.errors import NoInverse, NotAssociative, NoUnit, NotComposable


def test_trivial_group():
    G = make_fin_group(["e"], [["e"]], "e")
    assert G.order == 1 and G.inv == (0,)


def test_c2_inverses_are_identity_map():
    assert cyclic_group(2).inv == (0, 1)


def test_corrupted_c4_reports_a_real_associativity_witness():
    table = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    table[2][3] = 3
    table[3][2] = 3
    with pytest.raises(NotAssociative) as info:
        make_fin_group(["e", "g", "g2", "g3"], table, 0)
    a, b, c = (["e", "g", "g2", "g3"].index(x) for x in info.value.witness)
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_associativity_witness_is_first_failing_triple():
    table = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    table[1][1] = 3  # g*g = g3 breaks associativity but keeps the unit row
    with pytest.raises(NotAssociative) as info:
        make_fin_group(range(4), table, 0)
    expected = next(t for t in itertools.product(range(4), repeat=3)
                    if table[table[t[0]][t[1]]][t[2]] != table[t[0]][table[t[1]][t[2]]])
    assert info.value.witness == expected


def test_missing_unit_and_inverse():
    with pytest.raises(NoUnit):
        make_fin_group(["a", "b"], [["a", "b"], ["b", "b"]], "b")
    with pytest.raises(NoInverse) as info:
        make_fin_group(["e", "z"], [["e", "z"], ["z", "z"]], "e")
    assert info.value.witness == ("z",)


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_delooping_is_valid(name):
    assert validate_2category(delooping(group(name))).ok


def test_small_fixtures_are_valid():
    for B in (unit_2cat(), arrow_2cat(), two_category("sigma_c1_c2")):
        assert validate_2category(B).ok, B


def test_delooping_counts():
    B = delooping(cyclic_group(4))
    assert (B.n0, B.n1, B.n2) == (1, 4, 4)


def test_delooping_trivial_group_matches_unit():
    B, U = delooping(trivial_group()), unit_2cat()
    assert (B.n0, B.n1, B.n2, B.hc1, B.hc2, B.vc) == (U.n0, U.n1, U.n2, U.hc1, U.hc2, U.vc)


def test_op_is_an_involution():
    B = delooping(cyclic_group(2))
    assert op_2category(op_2category(B)).tables() == B.tables()
    A = arrow_2cat()
    assert op_2category(op_2category(A)).tables() == A.tables()
    assert validate_2category(op_2category(A)).ok


def test_hcompose_examples():
    C2, C4 = delooping(cyclic_group(2)), delooping(cyclic_group(4))
    assert hcompose(C2, ref1(C2, 1), ref1(C2, 1)).cell == 0
    for g in range(4):
        assert hcompose(C4, ref1(C4, g), ref1(C4, g)).cell == (2 * g) % 4


def test_compose_rejects_mismatched_endpoints():
    A = arrow_2cat()
    f = ref1(A, 2)
    with pytest.raises(NotComposable):
        hcompose(A, f, f)
    with pytest.raises(NotComposable):
        vcompose(A, ref2(A, 0), ref2(A, 2))
    with pytest.raises(NotComposable):
        hcompose2(A, ref2(A, 2), ref2(A, 2))


def test_find_inverse():
    C2, A = delooping(cyclic_group(2)), arrow_2cat()
    assert find_inverse_1cell(C2, ref1(C2, 0)).cell == 0
    assert find_inverse_1cell(C2, ref1(C2, 1)).cell == 1
    assert find_inverse_1cell(A, ref1(A, 2)) is None


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_inverse_is_symmetric(name):
    B = delooping(group(name))
    for x in range(B.n1):
        y = find_inverse_1cell(B, ref1(B, x))
        assert find_inverse_1cell(B, y).cell == x


def test_idempotent_rewiring_in_sigma_c2_is_a_typing_failure():
    B = two_category("sigma_c2")
    report = validate_2category(_rebuild(B, hcomp1=_with(B.hc1, (1, 1), 1)))
    assert report.tags() == {"Typing"}
    assert report.violations[0].cells == ("hcomp2", 1, 1, 0)


def test_consistent_idempotent_rewiring_is_a_valid_2category():
    B = two_category("sigma_c2")
    assert validate_2category(_rebuild(B, hcomp1=_with(B.hc1, (1, 1), 1),
                                       hcomp2=_with(B.hc2, (1, 1), 1))).ok


def test_rewiring_in_sigma_c3_breaks_associativity():
    B = two_category("sigma_c3")
    report = validate_2category(_rebuild(B, hcomp1=_with(B.hc1, (1, 1), 1),
                                         hcomp2=_with(B.hc2, (1, 1), 1)))
    assert "UnitOrAssoc" in report.tags()
    for v in report.violations:
        a, b, c = v.cells[1:]
        assert 1 in (a, b, c)


def test_breaking_a_unit_row():
    B = two_category("sigma_c3")
    report = validate_2category(_rebuild(B, hcomp1=_with(B.hc1, (0, 1), 2),
                                         hcomp2=_with(B.hc2, (0, 1), 2)))
    assert ("UnitOrAssoc", ("hcomp1", 1)) in {(v.axiom, v.cells) for v in report.violations}


def test_interchange_failure_is_detected():
    B = two_category("sigma_c1_c2")
    report = validate_2category(_rebuild(B, hcomp2=_with(B.hc2, (1, 1), 1)))
    assert report.tags() == {"Interchange"}


@pytest.mark.parametrize("name", GROUP_NAMES)
@pytest.mark.parametrize("index", range(10))
def test_mutation_is_caught_with_its_witness(name, index):
    m = mutants(delooping(group(name)))[index]
    report = validate_2category(m.cat)
    assert (m.axiom, m.witness) in {(v.axiom, tuple(v.cells)) for v in report.violations}, (m.label, report)


def test_fincat_validation():
    good = FinCat(("x",), (0,), (0,), {(0, 0): 0}, (0,))
    assert validate_fincat(good).ok
    missing = FinCat(("x",), (0, 0), (0, 0), {(0, 0): 0, (1, 1): 1}, (0,))
    assert "Totality" in validate_fincat(missing).tags()


def test_horizontal_identity_units_every_2cell():
    for B in (two_category("sigma_c1_c2"), arrow_2cat(), delooping(cyclic_group(3))):
        for a in range(B.n2):
            s, t = B.src1[B.src2[a]], B.tgt1[B.src2[a]]
            assert B.hc2[B.id2[B.unit1[t]], a] == a == B.hc2[a, B.id2[B.unit1[s]]]


cyclic_orders = st.integers(min_value=1, max_value=6)


@settings(max_examples=25, deadline=None)
@given(cyclic_orders, cyclic_orders)
def test_delooping_of_any_product_is_valid(m, n):
    G = product_group(cyclic_group(m), cyclic_group(n)) if m * n <= 12 else cyclic_group(m)
    assert validate_2category(delooping(G)).ok


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.data())
def test_interchange_on_sampled_quadruples(n, data):
    B = two_category("sigma_c1_c2") if n == 2 else delooping(cyclic_group(n))
    a, b, c, d = (data.draw(st.integers(0, B.n2 - 1)) for _ in range(4))
    if B.tgt2[c] == B.src2[a] and B.tgt2[d] == B.src2[b]:
        assert B.vc[B.hc2[a, b], B.hc2[c, d]] == B.hc2[B.vc[a, c], B.vc[b, d]]
