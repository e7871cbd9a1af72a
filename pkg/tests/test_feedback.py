from fractions import Fraction

import pytest

from src.channel import FadingSpec
from src.exceptions import FeedbackError
from src.feedback import (
    FeedbackModel1,
    FeedbackModel2,
    canonical_model,
    check_scheme_csit,
    csit_available,
    normalized_parameter,
    scheme_csit_requirements,
)

FAST = FadingSpec(num_users=3)


def test_normalized_parameters():
    assert normalized_parameter(FeedbackModel1(T_n=1, T_f=2)) == Fraction(2, 3)
    assert normalized_parameter(FeedbackModel1(T_n=3, T_f=1)) == Fraction(1, 4)
    assert normalized_parameter(FeedbackModel2(T_fb=1, T_c=3)) == Fraction(1, 3)


@pytest.mark.parametrize("args", [(0, 0), (-1, 2)])
def test_model1_rejects_empty_cycle(args):
    with pytest.raises(FeedbackError):
        FeedbackModel1(*args)


def test_model2_rejects_zero_coherence():
    with pytest.raises(FeedbackError):
        FeedbackModel2(T_fb=1, T_c=0)


def test_model1_view_is_local_to_cycle():
    model = FeedbackModel1(T_n=1, T_f=2)

    assert csit_available(model, FAST, 1).known == frozenset()
    view = csit_available(model, FAST, 3)
    assert view.knows({(u, s) for u in range(3) for s in (1, 2, 3)})
    assert all(view.has_current.values())
    assert csit_available(model, FAST, 4).known == frozenset()
    assert csit_available(model, FAST, 6).knows({(0, 5), (2, 6)})
    assert not csit_available(model, FAST, 6).knows({(0, 3)})


def test_model2_view_after_delay():
    spec = FadingSpec.block(3, 3)
    model = FeedbackModel2(T_fb=1, T_c=3)

    assert csit_available(model, spec, 1).known == frozenset()
    assert all(csit_available(model, spec, 2).has_current.values())

    view = csit_available(model, spec, 4)
    assert view.knows({(0, 1), (1, 2), (2, 3)})
    assert not any(view.has_current.values())
    assert all(csit_available(model, spec, 5).has_current.values())


def test_model_channel_pairing():
    with pytest.raises(FeedbackError):
        csit_available(FeedbackModel2(T_fb=1, T_c=3), FAST, 1)
    with pytest.raises(FeedbackError):
        csit_available(FeedbackModel1(T_n=1, T_f=1), FadingSpec.block(3, 3), 1)
    with pytest.raises(FeedbackError):
        csit_available(FeedbackModel2(T_fb=1, T_c=2), FadingSpec.block(3, 3), 1)


def test_requirements_of_point_c():
    frame_len, needs = scheme_csit_requirements("pointC", 3)
    assert frame_len == 3
    assert needs[2] == {(u, s) for u in range(3) for s in (1, 2)}


@pytest.mark.parametrize("K", [3, 4])
@pytest.mark.parametrize("scheme", ["tdma", "zf", "mat2", "pointB", "pointC", "ls"])
def test_canonical_models_are_feasible(scheme, K):
    model = canonical_model(scheme, K)
    assert check_scheme_csit(scheme, K, model, FadingSpec(num_users=K)) >= 1


def test_point_c_starved_by_sparse_feedback():
    with pytest.raises(FeedbackError):
        check_scheme_csit("pointC", 3, FeedbackModel1(T_n=2, T_f=1), FAST)


def test_zf_needs_current_csi():
    with pytest.raises(FeedbackError):
        check_scheme_csit("zf", 3, FeedbackModel1(T_n=1, T_f=0), FAST)


def test_unknown_scheme():
    with pytest.raises(FeedbackError):
        canonical_model("dpc", 3)


@pytest.mark.parametrize("model, spec", [
    (FeedbackModel1(T_n=1, T_f=2), FAST),
    (FeedbackModel1(T_n=3, T_f=1), FAST),
    (FeedbackModel2(T_fb=1, T_c=3), FadingSpec.block(3, 3)),
    (FeedbackModel2(T_fb=4, T_c=3), FadingSpec.block(3, 3)),
])
def test_views_never_hold_future_slots(model, spec):
    for tx_slot in range(1, 13):
        view = csit_available(model, spec, tx_slot)
        assert all(s <= tx_slot for _, s in view.known)
        assert view.has_current == {u: (u, tx_slot) in view.known for u in range(3)}


@pytest.mark.parametrize("model", [FeedbackModel1(T_n=1, T_f=2), FeedbackModel1(T_n=2, T_f=3)])
def test_model1_knowledge_grows_within_cycle(model):
    T = model.cycle_length
    for cycle_start in (1, T + 1, 2 * T + 1):
        views = [csit_available(model, FAST, cycle_start + i).known for i in range(T)]
        assert all(a <= b for a, b in zip(views, views[1:]))


@pytest.mark.parametrize("T_fb", [0, 1, 2, 5])
def test_model2_knowledge_grows_forever(T_fb):
    spec = FadingSpec.block(3, 3)
    model = FeedbackModel2(T_fb=T_fb, T_c=3)
    views = [csit_available(model, spec, s).known for s in range(1, 16)]
    assert all(a <= b for a, b in zip(views, views[1:]))


def test_full_feedback_always_has_current():
    model = FeedbackModel1(T_n=0, T_f=1)
    assert normalized_parameter(model) == 1
    for tx_slot in range(1, 10):
        assert all(csit_available(model, FAST, tx_slot).has_current.values())


@pytest.mark.parametrize("T_n", [1, 4])
def test_no_feedback_never_knows_anything(T_n):
    model = FeedbackModel1(T_n=T_n, T_f=0)
    assert normalized_parameter(model) == 0
    for tx_slot in range(1, 20):
        assert csit_available(model, FAST, tx_slot).known == frozenset()
