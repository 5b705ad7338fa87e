import pytest

from oracles import centralizer_size
from support import GROUP_NAMES, group, two_category
from twocat.core2 import cyclic_group, delooping, unit_2cat
from twocat.errors import NotUnital, ShapeMismatch, SourceTargetMismatch
from twocat.gaction import inversion_action
from twocat.pseudo import (
    MonoidalCat,
    Modification,
    PseudoFunctor,
    PseudoNat,
    associativity_constraint,
    comparison_constraint,
    compose_pseudofunctors,
    enumerate_modifications,
    enumerate_pseudonats,
    identity_modification,
    identity_pseudofunctor,
    identity_pseudonat,
    pentagon_report,
    pseudonat_category,
    relative_center,
    tensor_modifications,
    tensor_pseudonat,
    validate_modification,
    validate_monoidal,
    validate_pseudofunctor,
    validate_pseudonat,
)


def inversion_functor():
    return inversion_action(cyclic_group(2), cyclic_group(4)).F[1]


def central_nat(B, z):
    Id = identity_pseudofunctor(B)
    return PseudoNat(Id, Id, (z,), tuple(B.id2[B.h(x, z)] for x in range(B.n1)))


def test_identity_and_inversion_functors_validate():
    assert validate_pseudofunctor(identity_pseudofunctor(two_category("sigma_c2"))).ok
    assert validate_pseudofunctor(inversion_functor()).ok


def test_corrupted_compositor_fails():
    F = inversion_functor()
    comp = dict(F.comp)
    comp[0, 1] = (comp[0, 1] + 1) % 4
    bad = PseudoFunctor(F.source, F.target, F.obj, F.map1, F.map2, comp, F.unit)
    assert validate_pseudofunctor(bad).tags() == {"CompositorTyping"}


def test_non_unital_claim_is_reported():
    B = two_category("sigma_c1_c2")
    Id = identity_pseudofunctor(B)
    skewed = PseudoFunctor(B, B, Id.obj, Id.map1, Id.map2, Id.comp, (1,))
    assert not validate_pseudofunctor(skewed).ok
    with pytest.raises(NotUnital):
        relative_center(skewed)


def test_identity_pseudonat_validates():
    for B in (two_category("sigma_c4"), two_category("arrow"), two_category("sigma_c1_c2")):
        assert validate_pseudonat(identity_pseudonat(identity_pseudofunctor(B))).ok


def test_every_element_of_c4_gives_a_pseudonat():
    B = two_category("sigma_c4")
    for z in range(4):
        assert validate_pseudonat(central_nat(B, z)).ok


def test_non_central_element_of_s3_fails_naturality():
    G = group("s3")
    B = delooping(G)
    central = set(G.center())
    for z in G:
        report = validate_pseudonat(central_nat(B, z))
        assert report.ok == (z in central)
        if z not in central:
            assert report.tags() == {"Naturality"}
            witnesses = {v.cells[1] for v in report.violations}
            assert witnesses == {x for x in G if G.m(x, z) != G.m(z, x)}


def test_compose_pseudofunctors():
    F = inversion_functor()
    Id = identity_pseudofunctor(F.source)
    assert compose_pseudofunctors(Id, F).same_as(F)
    assert compose_pseudofunctors(F, Id).same_as(F)
    assert compose_pseudofunctors(F, F).same_as(Id)
    with pytest.raises(SourceTargetMismatch):
        compose_pseudofunctors(identity_pseudofunctor(two_category("sigma_c2")), F)


def test_tensor_of_identities_is_identity():
    F = inversion_functor()
    t = tensor_pseudonat(identity_pseudonat(F), identity_pseudonat(F))
    assert t.key() == identity_pseudonat(compose_pseudofunctors(F, F)).key()
    m = identity_modification(identity_pseudonat(F))
    assert all(c == F.target.id2[F.target.unit1[0]] for c in tensor_modifications(m, m).comp)


def test_tensor_in_c4_multiplies_components():
    B = two_category("sigma_c4")
    for z in range(4):
        for w in range(4):
            t = tensor_pseudonat(central_nat(B, z), central_nat(B, w))
            assert t.comp0 == ((z + w) % 4,)
            assert validate_pseudonat(t).ok


def test_tensor_shape_mismatch():
    a = identity_pseudonat(identity_pseudofunctor(two_category("sigma_c2")))
    b = identity_pseudonat(identity_pseudofunctor(two_category("sigma_c4")))
    with pytest.raises(ShapeMismatch):
        tensor_pseudonat(a, b)
    with pytest.raises(ShapeMismatch):
        tensor_modifications(identity_modification(a), identity_modification(b))


def test_comparison_constraint_is_identity_with_identity_2cells():
    B = two_category("sigma_c4")
    for z in range(4):
        for w in range(4):
            c = comparison_constraint(central_nat(B, z), central_nat(B, w))
            assert c.comp == (B.id2[(z + w) % 4],)
            assert validate_modification(c).ok


def test_comparison_constraint_with_an_identity_argument():
    B = two_category("sigma_c1_c2")
    nats = enumerate_pseudonats(identity_pseudofunctor(B), identity_pseudofunctor(B))
    ident = identity_pseudonat(identity_pseudofunctor(B))
    for n in nats:
        for c in (comparison_constraint(ident, n), comparison_constraint(n, ident)):
            assert c.comp == identity_modification(c.target).comp
            assert validate_modification(c).ok


def test_associativity_constraint_is_identity_for_two_functors():
    B = two_category("sigma_c4")
    for z in range(4):
        a = associativity_constraint(central_nat(B, z), central_nat(B, 1), central_nat(B, 3))
        assert a.comp == (B.id2[a.source.comp0[0]],)
        assert validate_modification(a).ok


def test_pentagon_on_every_c4_quadruple():
    B = two_category("sigma_c4")
    nats = [central_nat(B, z) for z in range(4)]
    for a in nats:
        for b in nats:
            for c in nats:
                for d in nats:
                    assert pentagon_report(a, b, c, d).ok


def test_pseudonat_category_counts():
    U = unit_2cat()
    cat = pseudonat_category(identity_pseudofunctor(U), identity_pseudofunctor(U))
    assert (cat.n_objects, cat.n_morphisms) == (1, 1)
    cat = pseudonat_category(identity_pseudofunctor(two_category("sigma_c4")),
                             identity_pseudofunctor(two_category("sigma_c4")))
    assert (cat.n_objects, cat.n_morphisms) == (4, 4)
    assert all(cat.src[m] == cat.tgt[m] for m in range(4))


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_center_size_matches_centralizer_oracle(name):
    G = group(name)
    Z = relative_center(identity_pseudofunctor(delooping(G)))
    assert Z.cat.n_objects == centralizer_size([list(r) for r in G.mult])
    assert validate_monoidal(Z).ok


def test_center_of_c4_tensor_is_group_law():
    Z = relative_center(identity_pseudofunctor(two_category("sigma_c4")))
    comp0 = [X.comp0[0] for X in Z.objects]
    for (i, j), k in Z.tensor_obj.items():
        assert comp0[k] == (comp0[i] + comp0[j]) % 4
    assert comp0[Z.unit] == 0


def test_center_with_nontrivial_2cells():
    Z = relative_center(identity_pseudofunctor(two_category("sigma_c1_c2")))
    assert Z.counts() == {"objects": 1, "morphisms": 2}
    assert validate_monoidal(Z).ok


def test_corrupted_tensor_table_fails_validation():
    Z = relative_center(identity_pseudofunctor(two_category("sigma_c4")))
    tensor = dict(Z.tensor_obj)
    tensor[1, 1] = 1
    bad = MonoidalCat(Z.cat, tensor, Z.tensor_mor, Z.unit)
    assert not validate_monoidal(bad).ok


def test_modifications_between_center_objects():
    B = two_category("sigma_c1_c2")
    Id = identity_pseudofunctor(B)
    (n,) = enumerate_pseudonats(Id, Id)
    mods = enumerate_modifications(n, n)
    assert len(mods) == 2
    for m in mods:
        assert validate_modification(m).ok
        for m2 in mods:
            assert validate_modification(tensor_modifications(m, m2)).ok


def test_mismatched_modification_shape():
    B = two_category("sigma_c4")
    bad = Modification(central_nat(B, 1), central_nat(B, 2), (B.id2[1],))
    assert not validate_modification(bad).ok
