import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from support import ACTION_NAMES, action
from twocat.core2 import cyclic_group, delooping, delooping_with_2cells, product_group
from twocat.formats import (
    EXTENSIONS,
    ParseError,
    SchemaError,
    ValidationError,
    Workspace,
    parse_document,
    serialize,
)
from twocat.standard import FIXTURE_DIR, standard_2categories, standard_actions, standard_groups


def fixture_workspace():
    return Workspace(search_paths=[str(FIXTURE_DIR)])


def test_shipped_files_match_the_constructors():
    for name, G in standard_groups().items():
        assert (FIXTURE_DIR / f"{name}.grp").read_text(encoding="utf-8") == serialize(G, name)
    for name, B in standard_2categories().items():
        assert (FIXTURE_DIR / f"{name}.2cat").read_text(encoding="utf-8") == serialize(B, name)
    for name, (g, b, act) in standard_actions().items():
        text = serialize(act, name, group_name=g, base_name=b)
        assert (FIXTURE_DIR / f"{name}.act").read_text(encoding="utf-8") == text


def test_sigma_c4_file_is_the_delooping():
    B = fixture_workspace().get("sigma_c4", "2category")
    assert B.tables()[1:] == delooping(cyclic_group(4)).tables()[1:]


def test_every_fixture_loads_and_reports_provenance():
    ws = fixture_workspace()
    for path in sorted(FIXTURE_DIR.iterdir()):
        name = path.stem
        ws.get(name)
        entry = ws.entry(name)
        assert entry.path == str(path)
        assert len(entry.sha256) == 64
        assert path.suffix == EXTENSIONS[entry.kind]


def test_empty_document_gives_an_empty_workspace():
    ws = Workspace()
    assert parse_document("", ws) == []
    assert ws.entries == {}
    assert parse_document("---\n...\n", ws) == []


def test_non_associative_group_names_the_triple():
    text = """
kind: group
name: broken
elements: [e, a, b]
unit: e
table:
  - [e, a, b]
  - [a, b, e]
  - [b, e, b]
"""
    with pytest.raises(SchemaError) as info:
        parse_document(text)
    witness = info.value.witness
    assert len(witness) == 3
    idx = {"e": 0, "a": 1, "b": 2}
    table = [[0, 1, 2], [1, 2, 0], [2, 0, 2]]
    x, y, z = (idx[w] for w in witness)
    assert table[table[x][y]][z] != table[x][table[y][z]]


def test_group_without_inverse():
    text = "kind: group\nname: m\nelements: [e, z]\nunit: e\ntable: [[e, z], [z, z]]\n"
    with pytest.raises(SchemaError) as info:
        parse_document(text)
    assert info.value.witness == ("z",)


def test_yaml_syntax_error_has_a_location():
    with pytest.raises(ParseError) as info:
        parse_document("kind: group\nname: [unclosed\n", path="bad.grp")
    assert info.value.line is not None and info.value.column is not None
    assert "bad.grp" in str(info.value)


def test_unknown_kind_and_missing_fields():
    with pytest.raises(SchemaError):
        parse_document("kind: monoid\nname: m\n")
    with pytest.raises(SchemaError) as info:
        parse_document("kind: group\nname: g\nelements: [e]\n")
    assert "table" in str(info.value)


def test_unknown_reference_is_named():
    text = "kind: group\nname: g\nelements: [e]\nunit: e\ntable: [[x]]\n"
    with pytest.raises(SchemaError) as info:
        parse_document(text)
    assert info.value.witness == ("x",)
    assert info.value.field_path == ("table", 0, 0)


def test_non_unital_action_data_is_rejected():
    ws = fixture_workspace()
    text = (FIXTURE_DIR / "trivial_c2.act").read_text(encoding="utf-8").replace("name: trivial_c2", "name: t2")
    text += "iota: {}\n"
    with pytest.raises(SchemaError) as info:
        parse_document(text, ws)
    assert info.value.field_path == ("iota",)


def test_invalid_2category_raises_validation_error():
    text = serialize(delooping(cyclic_group(3)), "c3_bad").replace("- [g, g, g2]", "- [g, g, g]")
    assert text != serialize(delooping(cyclic_group(3)), "c3_bad")
    with pytest.raises(ValidationError) as info:
        parse_document(text)
    assert info.value.axiom in {"UnitOrAssoc", "Typing"}
    assert parse_document(text, Workspace(validate=False)) == ["c3_bad"]


def test_duplicate_names_are_rejected():
    ws = Workspace()
    text = serialize(cyclic_group(2), "c2")
    parse_document(text, ws)
    with pytest.raises(SchemaError):
        parse_document(text, ws)


def test_kind_mismatch_on_lookup():
    with pytest.raises(SchemaError):
        fixture_workspace().get("c2", "2category")


def test_multiple_documents_in_one_text():
    text = serialize(cyclic_group(2), "g2") + "---\n" + serialize(delooping(cyclic_group(2)), "b2")
    ws = Workspace()
    assert parse_document(text, ws) == ["g2", "b2"]


@pytest.mark.parametrize("name", ACTION_NAMES)
def test_action_round_trip(name):
    gname, bname, act = standard_actions()[name]
    ws = fixture_workspace()
    ws.get(bname)
    ws.get(gname)
    text = serialize(act, "copy", group_name=gname, base_name=bname)
    parse_document(text, ws)
    again = ws.get("copy", "action")
    for g in act.group:
        assert again.F[g].same_as(act.F[g])
        for h in act.group:
            assert again.chi[g, h].key() == act.chi[g, h].key()
    assert all(again.omega[t].comp == act.omega[t].comp for t in act.omega)
    assert serialize(again, "copy", group_name=gname, base_name=bname) == text


def test_2category_with_nontrivial_2cells_round_trips():
    B = delooping_with_2cells(cyclic_group(2), cyclic_group(3))
    names = parse_document(serialize(B, "b"), ws := Workspace())
    assert ws.get(names[0]).tables()[1:] == B.tables()[1:]


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3))
def test_group_and_delooping_round_trip(m, n):
    G = product_group(cyclic_group(m), cyclic_group(n)) if m > 1 and n > 1 else cyclic_group(max(m, n, 2))
    ws = Workspace()
    parse_document(serialize(G, "g") + "---\n" + serialize(delooping(G), "b"), ws)
    H = ws.get("g")
    assert (H.elements, H.mult, H.unit, H.inv) == (G.elements, G.mult, G.unit, G.inv)
    assert ws.get("b").tables()[1:] == delooping(G).tables()[1:]


def test_cached_fixture_pairs_agree_with_files():
    ws = fixture_workspace()
    for name in ACTION_NAMES:
        B, _ = action(name)
        loaded = ws.get(name, "action")
        assert loaded.base.same_tables(B)
        assert all(itertools.starmap(lambda f, g: f.same_as(g), zip(loaded.F, action(name)[1].F)))
