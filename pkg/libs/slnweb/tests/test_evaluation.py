import pytest

from slnweb.evaluation import (
    d_shift, ev, ev_by_shape, ev_oracle, glued_evaluation, kuperberg_pair, tensor_expansion,
)
from slnweb.exceptions import BoundaryMismatch, InvalidWeight, ResourceLimitExceeded
from slnweb.qlaurent import LaurentPoly, parse, qbin, qint
from slnweb.tableaux import MultiPartition
from slnweb.webs import Flow, flow_boundary
from slnweb_models import EngineConfig

from programs import (
    CUP, NESTED_ARCS, SL3_CIRCLE, SL4_FLOW, SL4_WEB, SL5_WEB, STACKED_CIRCLE, TWO_CIRCLES,
    TWO_CIRCLES_ALT, circle, fprog,
)

q = LaurentPoly.q()


@pytest.mark.parametrize("program", [TWO_CIRCLES, TWO_CIRCLES_ALT])
def test_two_circles(program):
    assert ev(program) == parse("q^2 + 2 + q^-2")


def test_stacked_circle_has_one_end_shape():
    shapes = ev_by_shape(STACKED_CIRCLE)
    assert list(shapes.values()) == [q + q ** -1]
    assert list(shapes) == [MultiPartition.from_rows(1, [[2], [2]])]


def test_sl3_circle():
    assert ev(SL3_CIRCLE) == qint(3)


@pytest.mark.parametrize("n", range(2, 6))
def test_circle_of_every_color(n):
    for color in range(1, n):
        assert ev(circle(n, color)) == qbin(n, color)


@pytest.mark.parametrize("program", [CUP, NESTED_ARCS, STACKED_CIRCLE, SL3_CIRCLE, SL5_WEB])
def test_agrees_with_flow_enumeration(program):
    assert ev(program) == ev_oracle(program)


def test_cup_shapes():
    shapes = ev_by_shape(CUP)
    assert shapes == {
        MultiPartition.from_rows(1, [[], [1]]): LaurentPoly.one(),
        MultiPartition.from_rows(1, [[1], []]): q,
    }
    assert ev(NESTED_ARCS) == (1 + q) ** 2


def test_empty_program():
    assert ev(fprog(3, 3, 2)) == 1


@pytest.mark.parametrize("weight,n,ell,expected", [
    ((1, 1), 2, 1, 1),
    ((2, 0), 2, 1, 0),
    ((1, 1, 1), 3, 1, 3),
    ((1, 1, 0, 2, 3, 1, 2, 2), 4, 3, 12),
])
def test_d_shift(weight, n, ell, expected):
    assert d_shift(weight, n, ell) == expected


def test_d_shift_rejects_bad_weight():
    with pytest.raises(InvalidWeight):
        d_shift((3, 0), 2, 1)


def test_cup_pairing():
    assert kuperberg_pair(CUP, CUP) == 1 + q ** 2
    assert glued_evaluation(CUP, CUP) == qint(2)


def test_closed_pairing_is_the_square():
    assert kuperberg_pair(TWO_CIRCLES, TWO_CIRCLES) == ev(TWO_CIRCLES) ** 2


def test_pairing_needs_matching_boundaries():
    with pytest.raises(BoundaryMismatch):
        kuperberg_pair(CUP, fprog(2, 2, 1))
    with pytest.raises(BoundaryMismatch):
        glued_evaluation(CUP, fprog(2, 3, 1, 1))


def test_tensor_expansion_of_cup():
    expansion = tensor_expansion(CUP)
    assert expansion == {
        (frozenset({2}), frozenset({1})): LaurentPoly.one(),
        (frozenset({1}), frozenset({2})): -q,
    }


def test_tensor_expansion_of_empty_program():
    assert tensor_expansion(fprog(2, 2, 1)) == {(frozenset({1, 2}), frozenset()): 1}


def test_tensor_expansion_carries_signs():
    state = flow_boundary(SL4_WEB, Flow.of(SL4_FLOW))
    assert tensor_expansion(SL4_WEB)[state].coefficient(9) < 0


def test_resource_limit():
    with pytest.raises(ResourceLimitExceeded) as info:
        ev(CUP, EngineConfig(max_states=1))
    assert info.value.step == 1


def test_parallel_steps_match_sequential():
    config = EngineConfig(jobs=2, parallel_threshold=1)
    assert ev_by_shape(NESTED_ARCS, config) == ev_by_shape(NESTED_ARCS)
    assert ev(TWO_CIRCLES, config) == ev(TWO_CIRCLES)
