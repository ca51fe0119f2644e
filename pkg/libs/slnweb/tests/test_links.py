import pytest

from slnweb.evaluation import ev
from slnweb.exceptions import (
    BlockedCrossing, ColorOutOfRange, KilledProgram, MalformedBraid, NotClosed,
)
from slnweb.links import (
    BraidingSummand, CrossingColors, braiding_summands, compile_braid_closure, crossing_colors,
    ev_link, expand, mirror, normalization, rt, writhe,
)
from slnweb.qlaurent import LaurentPoly, qbin, qint
from slnweb.webs import apply_fstring
from slnweb_models import FMove

from programs import HOPF, UNKNOT, lprog

q = LaurentPoly.q()

HOPF_VALUE = q ** -2 * qint(2) ** 2 * qint(3) - 2 * q ** -1 * qint(2) * qint(3) + qint(3) ** 2


def moves(*pairs):
    return tuple(FMove(pos=pos, power=power) for pos, power in pairs)


def test_equal_colors_positive():
    assert braiding_summands((1, 1, 0), 1, 1) == [
        BraidingSummand(1, -1, moves((2, 1), (1, 1))),
        BraidingSummand(-1, 0, moves((1, 1), (2, 1))),
    ]


def test_equal_colors_negative():
    assert braiding_summands((1, 1, 0), 1, -1) == [
        BraidingSummand(1, 1, moves((2, 1), (1, 1))),
        BraidingSummand(-1, 0, moves((1, 1), (2, 1))),
    ]


def test_smaller_left_color():
    assert braiding_summands((1, 2, 0), 1, 1) == [
        BraidingSummand(-1, -1, moves((2, 1), (1, 1))),
        BraidingSummand(1, 0, moves((1, 1), (2, 1))),
    ]


def test_blocked_crossing():
    with pytest.raises(BlockedCrossing):
        braiding_summands((1, 1, 1), 1, 1)
    with pytest.raises(BlockedCrossing):
        braiding_summands((1, 1, 0), 2, 1)


def test_killed_summands_are_dropped():
    lp = lprog(2, 4, 2, 2, 3, ("T+", 1))
    (summand,) = expand(lp)
    assert (summand.sign, summand.qshift) == (-1, -1)
    assert summand.program.moves == moves((2, 1), (3, 1), (2, 1), (1, 2), (2, 1))
    assert apply_fstring(summand.program) == (0, 1, 2, 1)


def test_killed_move_outside_crossing():
    with pytest.raises(KilledProgram):
        expand(lprog(2, 3, 1, 1, 1, 1))


def test_unknot():
    assert len(expand(UNKNOT)) == 2
    assert crossing_colors(UNKNOT) == [CrossingColors(5, 2, 1, 1, -1)]
    assert writhe(UNKNOT) == -1
    assert normalization(UNKNOT) == (1, -2)
    assert ev_link(UNKNOT) == q ** 3 + q
    assert rt(UNKNOT) == qint(2)


def test_mirror_bars_the_value():
    assert ev_link(mirror(UNKNOT)) == ev_link(UNKNOT).bar()
    assert rt(mirror(UNKNOT)) == qint(2)
    assert mirror(mirror(HOPF)) == HOPF


def test_hopf_link():
    assert len(expand(HOPF)) == 4
    assert crossing_colors(HOPF) == [CrossingColors(6, 2, 1, 2, 1), CrossingColors(7, 3, 2, 1, 1)]
    assert normalization(HOPF) == (1, 0)
    assert ev_link(HOPF) == HOPF_VALUE
    assert rt(HOPF) == HOPF_VALUE


def test_open_link_program():
    with pytest.raises(NotClosed):
        ev_link(lprog(2, 2, 1, 1))


def test_compiled_hopf_link():
    lp = compile_braid_closure(3, [1, 2], [1, 1])
    assert lp.m == 7
    assert [(c.a, c.b, c.sign) for c in crossing_colors(lp)] == [(1, 2, 1), (2, 1, 1)]
    assert rt(lp) == HOPF_VALUE


def test_compiled_unknot():
    lp = compile_braid_closure(2, [1, 1], [-1])
    assert writhe(lp) == -1
    assert ev_link(lp) == q ** 3 + q
    assert rt(lp) == qint(2)


@pytest.mark.parametrize("n,color", [(2, 1), (3, 1), (4, 2), (5, 3)])
def test_compiled_trivial_braid(n, color):
    lp = compile_braid_closure(n, [color], [])
    assert lp.crossings == []
    assert rt(lp) == qbin(n, color)


TWO_STRAND_COLORS = [(2, (1, 1)), (3, (1, 1)), (3, (1, 2)), (3, (2, 1)), (3, (2, 2))]


@pytest.mark.parametrize("n,colors", TWO_STRAND_COLORS)
@pytest.mark.parametrize("word", [[1, -1], [-1, 1]])
def test_second_reidemeister_move(n, colors, word):
    unlink = compile_braid_closure(n, list(colors), [])
    assert rt(compile_braid_closure(n, list(colors), word)) == rt(unlink)
    assert rt(unlink) == qbin(n, colors[0]) * qbin(n, colors[1])


@pytest.mark.parametrize("n,colors", [(2, (1, 1, 1)), (3, (1, 1, 1)), (3, (1, 2, 1))])
def test_third_reidemeister_move(n, colors):
    left = compile_braid_closure(n, list(colors), [1, 2, 1])
    right = compile_braid_closure(n, list(colors), [2, 1, 2])
    assert rt(left) == rt(right)


@pytest.mark.parametrize("a", [1, 2, 3])
@pytest.mark.parametrize("b", [1, 2, 3])
@pytest.mark.parametrize("sign", [1, -1])
def test_summand_count_is_smaller_color_plus_one(a, b, sign):
    assert len(braiding_summands((a, b, 0), 1, sign)) == min(a, b) + 1


def test_leash_crossing_keeps_one_summand():
    lp = lprog(2, 4, 2, 2, 3, ("T+", 1), 3, 2)
    assert [(c.a, c.b) for c in crossing_colors(lp)] == [(2, 1)]
    assert len(braiding_summands((2, 1, 0, 1), 1, 1)) == 2
    (summand,) = expand(lp)
    assert apply_fstring(summand.program) == (0, 0, 2, 2)
    assert ev_link(lp) == ev(summand.program).scale(summand.sign, summand.qshift)


def test_braid_errors():
    with pytest.raises(ColorOutOfRange):
        compile_braid_closure(2, [2], [])
    with pytest.raises(MalformedBraid):
        compile_braid_closure(2, [1, 1], [2])
    with pytest.raises(MalformedBraid):
        compile_braid_closure(2, [1, 1], [0])
    with pytest.raises(MalformedBraid):
        compile_braid_closure(3, [1, 2], [1])
    with pytest.raises(MalformedBraid):
        compile_braid_closure(3, [], [])


def test_link_program_without_crossings():
    assert ev_link(lprog(2, 2, 1, 1, 1)) == qint(2)
    assert crossing_colors(lprog(2, 2, 1, 1, 1)) == []
