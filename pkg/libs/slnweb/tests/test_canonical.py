import pytest

from slnweb.canonical import (
    canonical_degree, canonical_flow, canonical_tableau, dual_canonical_report, is_dual_canonical,
)
from slnweb.evaluation import d_shift, glued_evaluation
from slnweb.tableaux import Dominance, MultiTableau, dominance_mp
from slnweb.webs import apply_fstring, arc_program, enumerate_flows, flow_to_tableau

from programs import (
    CUP, NESTED_ARCS, SL4_CANONICAL_FILLINGS, SL4_WEB, TWO_CIRCLES, noncrossing_matchings,
)

ARC_PROGRAMS = [arc_program(2, 1, pairs) for k in range(1, 4) for pairs in noncrossing_matchings(k)]


def test_cup():
    assert canonical_flow(CUP).rungs == (frozenset({1}),)
    assert canonical_tableau(CUP).text() == "[][1]"
    assert canonical_degree(CUP) == 0
    assert is_dual_canonical(CUP)


def test_sl4_canonical_tableau():
    tableau = canonical_tableau(SL4_WEB)
    assert tableau == MultiTableau.from_fillings(4, 3, SL4_CANONICAL_FILLINGS)
    assert canonical_degree(SL4_WEB) == -1
    assert not is_dual_canonical(SL4_WEB)


@pytest.mark.parametrize("program", ARC_PROGRAMS)
def test_crossingless_matchings_are_dual_canonical(program):
    assert is_dual_canonical(program)
    assert canonical_degree(program) == 0


def test_matchings_cover_catalan_numbers():
    assert [len(noncrossing_matchings(k)) for k in range(5)] == [1, 1, 2, 5, 14]


CIRCLED_ARC_PROGRAMS = [
    arc_program(2, 1, pairs, circles=1) for k in range(1, 4) for pairs in noncrossing_matchings(k)
]


@pytest.mark.parametrize("program", CIRCLED_ARC_PROGRAMS)
def test_a_circle_spoils_dual_canonicity(program):
    assert not is_dual_canonical(program)


def test_two_circles_are_not_dual_canonical():
    assert not is_dual_canonical(TWO_CIRCLES)


def glued_lowest_coefficient(program):
    d = d_shift(apply_fstring(program), program.n, program.ell)
    return glued_evaluation(program, program).coefficient(-d)


@pytest.mark.parametrize("program", ARC_PROGRAMS)
def test_self_gluing_has_unit_lowest_term(program):
    d = d_shift(apply_fstring(program), program.n, program.ell)
    assert glued_evaluation(program, program).min_degree() == -d
    assert glued_lowest_coefficient(program) == 1


@pytest.mark.parametrize("program", [SL4_WEB, TWO_CIRCLES, CIRCLED_ARC_PROGRAMS[0]])
def test_self_gluing_of_other_webs_is_not_unit(program):
    assert glued_lowest_coefficient(program) != 1


def test_self_gluing_lowest_coefficients():
    assert glued_lowest_coefficient(SL4_WEB) == 15
    assert glued_lowest_coefficient(TWO_CIRCLES) == 6
    assert glued_lowest_coefficient(arc_program(2, 1, [(1, 2)], circles=1)) == 3


@pytest.mark.parametrize("program", [CUP, NESTED_ARCS])
def test_canonical_shape_is_dominated_by_every_flow(program):
    lowest = canonical_tableau(program).shape
    for flow in enumerate_flows(program):
        shape = flow_to_tableau(program, flow).shape
        assert dominance_mp(lowest, shape) in (Dominance.LT, Dominance.EQ)


def test_report_for_dual_canonical_web():
    report = dual_canonical_report(CUP)
    assert report.is_dual_canonical
    assert report.explanation() == "dual canonical: ev has lowest term 1"


def test_report_for_two_circles():
    report = dual_canonical_report(TWO_CIRCLES)
    assert not report.is_dual_canonical
    assert (report.min_degree, report.multiplicity, report.canonical_degree) == (-2, 1, -2)
    assert report.explanation().startswith("not dual canonical: ev has a term of negative degree -2")
