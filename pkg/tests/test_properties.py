import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from properties import SUITES, pools, run_suites
from support import SAMPLED_ACTIONS
from twocat.pseudo import PseudoNat, tensor_pseudonat, validate_pseudonat


@pytest.mark.parametrize("suite", SUITES)
@pytest.mark.parametrize("name", SAMPLED_ACTIONS)
def test_sampled_outputs_validate(name, suite):
    drawn, failures = run_suites(name)[suite]
    assert drawn in (0, 1000)
    assert failures == []


def test_every_suite_is_exercised_somewhere():
    for suite in SUITES:
        assert any(run_suites(name)[suite][0] for name in SAMPLED_ACTIONS), suite


def test_validators_are_not_vacuous():
    _, nats, *_ = pools("trivial_c2_on_c1_c2")
    t = tensor_pseudonat(nats[0], nats[0])
    B = t.source.target
    other = tuple(b for b in range(B.n2) if B.src2[b] == B.src2[t.comp2[0]] and b != t.comp2[0])
    bent = PseudoNat(t.source, t.target, t.comp0, (other[0],) + t.comp2[1:])
    assert not validate_pseudonat(bent).ok


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_tensor_is_associative_on_components(data):
    _, nats, *_ = pools("inv_act")
    a, b, c = (data.draw(st.sampled_from(nats)) for _ in range(3))
    left = tensor_pseudonat(tensor_pseudonat(a, b), c)
    right = tensor_pseudonat(a, tensor_pseudonat(b, c))
    assert left.comp0 == right.comp0
    assert left.source.same_as(right.source) and left.target.same_as(right.target)
