"""
Plain-text program files.

    # two circles
    header n=2 m=4 l=2
    F 2 2
    F 1
    F 1
    F 3
    F 3

One directive per line, '#' starts a comment. Link programs may also contain
crossing lines 'T+ <pos>' and 'T- <pos>'.
"""

from pydantic import ValidationError

from slnweb_models import Crossing, FMove, FProgram, LinkProgram

from .exceptions import ProgramParseError

_HEADER_KEYS = {"n": "n", "m": "m", "l": "ell"}


def _int(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ProgramParseError(f"expected an integer, found {token!r}", line, column) from None


def _first_error(exc: ValidationError) -> str:
    return exc.errors()[0]["msg"]


def _parse_header(tokens: list[str], line: int) -> dict:
    header = {}
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        if not sep or key not in _HEADER_KEYS:
            raise ProgramParseError(f"unknown header field {token!r}", line)
        header[_HEADER_KEYS[key]] = _int(value, line, None)
    missing = [k for k, v in _HEADER_KEYS.items() if v not in header]
    if missing:
        raise ProgramParseError(f"header lacks {', '.join(missing)}", line)
    return header


def _parse(text: str, allow_crossings: bool) -> tuple[dict, list, int]:
    header = None
    header_line = 0
    items = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        directive = tokens[0]
        if header is None:
            if directive != "header":
                raise ProgramParseError("program must start with a header line", line_no)
            header, header_line = _parse_header(tokens, line_no), line_no
            continue
        if directive == "header":
            raise ProgramParseError("duplicate header", line_no)
        try:
            if directive == "F":
                if len(tokens) not in (2, 3):
                    raise ProgramParseError("expected 'F <pos> [<power>]'", line_no)
                pos = _int(tokens[1], line_no, 2)
                power = _int(tokens[2], line_no, 3) if len(tokens) == 3 else 1
                item = FMove(pos=pos, power=power)
                limit = header["m"] - 1
            elif directive in ("T+", "T-"):
                if not allow_crossings:
                    raise ProgramParseError("crossings are only allowed in link programs", line_no)
                if len(tokens) != 2:
                    raise ProgramParseError(f"expected '{directive} <pos>'", line_no)
                item = Crossing(pos=_int(tokens[1], line_no, 2), sign=1 if directive == "T+" else -1)
                limit = header["m"] - 2
            else:
                raise ProgramParseError(f"unknown directive {directive!r}", line_no, 1)
        except ValidationError as exc:
            raise ProgramParseError(_first_error(exc), line_no) from None
        if item.pos > limit:
            raise ProgramParseError(f"position {item.pos} out of range (1-{limit})", line_no, 2)
        items.append(item)
    if header is None:
        raise ProgramParseError("missing header line", 1)
    return header, items, header_line


def parse_fprogram(text: str) -> FProgram:
    """
    Read an F-program.

    Raises:
        ProgramParseError: malformed text or an out-of-range header or move
    """
    header, items, header_line = _parse(text, allow_crossings=False)
    try:
        return FProgram(moves=items, **header)
    except ValidationError as exc:
        raise ProgramParseError(_first_error(exc), header_line) from None


def parse_link_program(text: str) -> LinkProgram:
    """Read a link program (F-moves and crossing lines)."""
    header, items, header_line = _parse(text, allow_crossings=True)
    try:
        return LinkProgram(items=items, **header)
    except ValidationError as exc:
        raise ProgramParseError(_first_error(exc), header_line) from None


def render_program(program: FProgram | LinkProgram) -> str:
    """Text form accepted by parse_fprogram / parse_link_program."""
    lines = [f"header n={program.n} m={program.m} l={program.ell}"]
    items = program.moves if isinstance(program, FProgram) else program.items
    for item in items:
        if isinstance(item, FMove):
            lines.append(f"F {item.pos} {item.power}")
        else:
            lines.append(f"T{'+' if item.sign > 0 else '-'} {item.pos}")
    return "\n".join(lines) + "\n"
