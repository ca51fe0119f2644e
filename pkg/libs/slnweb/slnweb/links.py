"""
Colored link diagrams in ladder form.

A crossing marker at column i meets the weight pattern (..., a, b, 0, ...) and is
replaced by a signed, q-shifted sum of three-move divided-power strings, each of which
leaves (..., 0, b, a, ...). Expanding all crossings turns a link program into a
signed sum of closed F-programs whose evaluations add up to the link polynomial.
"""

from collections import defaultdict
from typing import NamedTuple, Sequence

from slnweb_models import Crossing, EngineConfig, FMove, FProgram, LinkProgram

from .evaluation import ev
from .exceptions import (
    BlockedCrossing, ColorOutOfRange, ExpansionInconsistency, KilledProgram, MalformedBraid,
    NotClosed,
)
from .logging import get_logger
from .qlaurent import LaurentPoly, poly_sum
from .webs import GlWeight, apply_move, is_closed

logger = get_logger(__name__.split('.')[-1])


class BraidingSummand(NamedTuple):
    sign: int
    qpower: int
    moves: tuple[FMove, ...]


class ExpandedSummand(NamedTuple):
    sign: int
    qshift: int
    program: FProgram


class CrossingColors(NamedTuple):
    step: int
    pos: int
    a: int
    b: int
    sign: int


def _moves(*pairs: tuple[int, int]) -> tuple[FMove, ...]:
    return tuple(FMove(pos=pos, power=power) for pos, power in pairs if power)


def braiding_summands(weight: Sequence[int], pos: int, sign: int,
                      step: int = 0) -> list[BraidingSummand]:
    """
    Summands of the crossing at column `pos` on the running weight.

    With a = weight[pos], b = weight[pos+1] (1-based) and q-powers negated for
    negative crossings:

    - b <= a: k = 0..b, (-1)^(k+(a+1)b) q^-(b-k) F_{pos+1}^(b-k), F_pos^(a), F_{pos+1}^(a+k-b)
    - a < b: k = 0..a, (-1)^(k+(b+1)a) q^-(a-k) F_pos^(k), F_{pos+1}^(a), F_pos^(a-k)

    Moves are in application order; zero powers are dropped.

    Raises:
        BlockedCrossing: column pos+2 is missing or not empty
    """
    i = pos
    if i + 1 >= len(weight) or weight[i + 1] != 0:
        raise BlockedCrossing(step, weight)
    a, b = weight[i - 1], weight[i]
    out = []
    if b <= a:
        for k in range(b + 1):
            out.append(BraidingSummand(
                (-1) ** (k + (a + 1) * b),
                -sign * (b - k),
                _moves((i + 1, b - k), (i, a), (i + 1, a + k - b)),
            ))
    else:
        for k in range(a + 1):
            out.append(BraidingSummand(
                (-1) ** (k + (b + 1) * a),
                -sign * (a - k),
                _moves((i, k), (i + 1, a), (i, a - k)),
            ))
    return out


def _survives(weight: GlWeight, moves: Sequence[FMove], n: int) -> bool:
    try:
        for move in moves:
            weight = apply_move(weight, move, n)
    except KilledProgram:
        return False
    return True


def _crossed(weight: GlWeight, pos: int) -> GlWeight:
    out = list(weight)
    out[pos - 1], out[pos], out[pos + 1] = 0, weight[pos], weight[pos - 1]
    return tuple(out)


def crossing_colors(lp: LinkProgram) -> list[CrossingColors]:
    """Colors (a, b) met by every crossing, read from the running weight."""
    weight = lp.start_weight()
    out = []
    for step, item in enumerate(lp.items, start=1):
        if isinstance(item, FMove):
            weight = apply_move(weight, item, lp.n, step)
            continue
        if weight[item.pos + 1] != 0:
            raise BlockedCrossing(step, weight)
        out.append(CrossingColors(step, item.pos, weight[item.pos - 1], weight[item.pos], item.sign))
        weight = _crossed(weight, item.pos)
    return out


def expand(lp: LinkProgram) -> list[ExpandedSummand]:
    """
    Distribute the crossing expansions into signed, q-shifted F-programs.

    Summands killed inside a crossing are dropped.

    Raises:
        KilledProgram: an F-move outside a crossing leaves 0..n
        BlockedCrossing: a crossing without an empty column on its right
        ExpansionInconsistency: surviving summands move different numbers of units
    """
    weight = lp.start_weight()
    branches: list[tuple[int, int, tuple[FMove, ...]]] = [(1, 0, ())]
    for step, item in enumerate(lp.items, start=1):
        if isinstance(item, FMove):
            weight = apply_move(weight, item, lp.n, step)
            branches = [(sign, shift, moves + (item,)) for sign, shift, moves in branches]
            continue
        summands = [s for s in braiding_summands(weight, item.pos, item.sign, step)
                    if _survives(weight, s.moves, lp.n)]
        branches = [
            (sign * s.sign, shift + s.qpower, moves + s.moves)
            for sign, shift, moves in branches
            for s in summands
        ]
        weight = _crossed(weight, item.pos)
        logger.debug(f"item {step}: crossing at {item.pos} keeps {len(summands)} summands, "
                     f"{len(branches)} branches")

    summands = [
        ExpandedSummand(sign, shift, FProgram(n=lp.n, m=lp.m, ell=lp.ell, moves=moves))
        for sign, shift, moves in branches
    ]
    totals = {s.program.total_power() for s in summands}
    if len(totals) > 1:
        raise ExpansionInconsistency(f"Summands move {sorted(totals)} units in total")
    return summands


def ev_link(lp: LinkProgram, config: EngineConfig | None = None) -> LaurentPoly:
    """
    Signed sum of the evaluations of all expanded summands.

    Raises:
        NotClosed: a summand ends with an entry other than 0 or n
    """
    terms = []
    for summand in expand(lp):
        if not is_closed(summand.program):
            raise NotClosed("Link program does not end in a closed weight")
        terms.append(ev(summand.program, config).scale(summand.sign, summand.qshift))
    return poly_sum(terms)


def normalization(lp: LinkProgram) -> tuple[int, int]:
    """(sign, q-power) of the framing correction over all equally colored crossings."""
    sign, qpower = 1, 0
    for c in crossing_colors(lp):
        if c.a == c.b:
            sign *= (-1) ** (c.b + 1)
            qpower += c.sign * c.b * (lp.n + 1 - c.b)
    return sign, qpower


def rt(lp: LinkProgram, config: EngineConfig | None = None) -> LaurentPoly:
    """Normalized colored link polynomial."""
    sign, qpower = normalization(lp)
    return ev_link(lp, config).scale(sign, qpower)


def writhe(lp: LinkProgram) -> int:
    return sum(c.sign for c in lp.crossings)


def mirror(lp: LinkProgram) -> LinkProgram:
    """Flip the sign of every crossing."""
    items = [Crossing(pos=it.pos, sign=-it.sign) if isinstance(it, Crossing) else it
             for it in lp.items]
    return LinkProgram(n=lp.n, m=lp.m, ell=lp.ell, items=items)


class _ClosureLadder:
    """Running weight and emitted items of the braid-closure compiler."""

    def __init__(self, n: int, leashes: int):
        self.n = n
        self.weight: dict[int, int] = defaultdict(int)
        for c in range(1, leashes + 1):
            self.weight[c] = n
        self.items: list = []
        self.width = leashes

    def f(self, pos: int, power: int):
        if not power:
            return
        self.weight[pos] -= power
        self.weight[pos + 1] += power
        self.items.append(FMove(pos=pos, power=power))
        self.width = max(self.width, pos + 1)

    def cross(self, pos: int, sign: int):
        a, b = self.weight[pos], self.weight[pos + 1]
        self.weight[pos], self.weight[pos + 1], self.weight[pos + 2] = 0, b, a
        self.items.append(Crossing(pos=pos, sign=sign))
        self.width = max(self.width, pos + 2)


def compile_braid_closure(n: int, colors: Sequence[int], word: Sequence[int]) -> LinkProgram:
    """
    Ladder program of the closure of a colored braid.

    Strand j carries color colors[j-1]; generator +k (-k) is a positive (negative)
    crossing of strands k and k+1. Each strand is opened as a cup on a leash whose
    return runs down the left side; the strands are parked right of the returns,
    crossed pairwise, and finally capped against their returns from the innermost
    strand outward.

    Raises:
        ColorOutOfRange: a color outside 1..n-1
        MalformedBraid: a generator index outside 1..s-1, or a closure that
            would join strands of different colors
    """
    s = len(colors)
    if s < 1:
        raise MalformedBraid("A braid needs at least one strand")
    for c in colors:
        if not 1 <= c <= n - 1:
            raise ColorOutOfRange(f"Color {c} outside 1..{n - 1}")
    for g in word:
        if g == 0 or abs(g) > s - 1:
            raise MalformedBraid(f"Generator {g} does not act on {s} strands")

    ladder = _ClosureLadder(n, s)
    for j in range(s, 0, -1):
        c = colors[j - 1]
        ladder.f(s, c)
        for p in range(s - 1, s - j, -1):
            ladder.f(p, c)
        for p in range(s + 1, s + 1 + j):
            ladder.f(p, c)

    pos = {j: s + 1 + j for j in range(1, s + 1)}
    color = {j: colors[j - 1] for j in range(1, s + 1)}

    def shift_right(j: int):
        if j < s and pos[j + 1] == pos[j] + 1:
            shift_right(j + 1)
        ladder.f(pos[j], color[j])
        pos[j] += 1

    for g in word:
        k = abs(g)
        while pos[k] + 1 < pos[k + 1]:
            shift_right(k)
        if k + 2 <= s and pos[k + 2] == pos[k + 1] + 1:
            shift_right(k + 2)
        base = pos[k]
        ladder.cross(base, 1 if g > 0 else -1)
        pos[k], pos[k + 1] = base + 1, base + 2
        color[k], color[k + 1] = color[k + 1], color[k]

    for j in range(1, s + 1):
        if color[j] != colors[j - 1]:
            raise MalformedBraid(
                f"Closure joins a strand of color {color[j]} to one of color {colors[j - 1]}"
            )

    for j in range(1, s + 1):
        rest = n - colors[j - 1]
        x, z = s - j + 1, pos[j]
        while True:
            if ladder.weight[x + 1] == 0:
                ladder.f(x, rest)
                x += 1
            elif x + 1 == z:
                ladder.f(x, rest)
                break
            else:
                leash = max(c for c in range(x + 1, z) if ladder.weight[c] == n)
                while leash + 1 < z:
                    ladder.f(leash, n)
                    leash += 1
                ladder.f(leash, rest)
                z = leash

    logger.debug(f"braid closure on {s} strands: {len(ladder.items)} items, m={ladder.width}")
    return LinkProgram(n=n, m=ladder.width, ell=s, items=ladder.items)
