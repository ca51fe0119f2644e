import pytest

from slnweb.exceptions import ProgramParseError
from slnweb.textformat import parse_fprogram, parse_link_program, render_program

from programs import HOPF, SL4_WEB, TWO_CIRCLES, UNKNOT

TWO_CIRCLES_TEXT = """
# two circles
header n=2 m=4 l=2
F 2 2
F 1
F 1   # second half of the first circle
F 3
F 3
"""


def test_parse_fprogram():
    assert parse_fprogram(TWO_CIRCLES_TEXT) == TWO_CIRCLES


def test_parse_link_program():
    text = "header n=2 m=5 l=2\nF 2 2\nF 3\nF 4\nF 1\nT- 2\nF 1\nF 2\nF 4\n"
    assert parse_link_program(text) == UNKNOT


@pytest.mark.parametrize("program", [TWO_CIRCLES, SL4_WEB])
def test_render_is_read_back(program):
    assert parse_fprogram(render_program(program)) == program


def test_render_link_program():
    text = render_program(HOPF)
    assert "T+ 2\nT+ 3\n" in text
    assert parse_link_program(text) == HOPF


@pytest.mark.parametrize("text,line,column", [
    ("F 1\n", 1, None),
    ("header n=2 m=2\n", 1, None),
    ("header n=2 m=2 l=1 k=3\n", 1, None),
    ("header n=2 m=2 l=1\nF x\n", 2, 2),
    ("header n=2 m=2 l=1\nF 1\nF 2\n", 3, 2),
    ("header n=2 m=2 l=1\n\nG 1\n", 3, 1),
    ("header n=2 m=2 l=1\nF 1 0\n", 2, None),
    ("header n=2 m=2 l=1\nheader n=2 m=2 l=1\n", 2, None),
    ("header n=2 m=2 l=3\n", 1, None),
    ("# nothing\n", 1, None),
])
def test_parse_errors(text, line, column):
    with pytest.raises(ProgramParseError) as info:
        parse_fprogram(text)
    assert info.value.line == line
    assert info.value.column == column


def test_crossings_need_a_link_program():
    text = "header n=2 m=3 l=1\nT+ 1\n"
    with pytest.raises(ProgramParseError) as info:
        parse_fprogram(text)
    assert info.value.line == 2
    assert len(parse_link_program(text).crossings) == 1


def test_crossing_needs_room_on_the_right():
    with pytest.raises(ProgramParseError) as info:
        parse_link_program("header n=2 m=3 l=1\nT- 2\n")
    assert (info.value.line, info.value.column) == (2, 2)
