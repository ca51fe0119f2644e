"""Fixture programs shared by the test modules (moves listed in application order)."""

from hypothesis import strategies as st

from slnweb_models import Crossing, FMove, FProgram, LinkProgram


def fprog(n, m, ell, *moves):
    """Moves are column numbers or (column, power) pairs."""
    return FProgram(n=n, m=m, ell=ell, moves=[_move(mv) for mv in moves])


def lprog(n, m, ell, *items):
    """Items as for fprog, plus ('T+', pos) / ('T-', pos) crossings."""
    out = []
    for item in items:
        if isinstance(item, tuple) and isinstance(item[0], str):
            out.append(Crossing(pos=item[1], sign=1 if item[0] == "T+" else -1))
        else:
            out.append(_move(item))
    return LinkProgram(n=n, m=m, ell=ell, items=out)


def _move(mv):
    if isinstance(mv, tuple):
        return FMove(pos=mv[0], power=mv[1])
    return FMove(pos=mv)


CUP = fprog(2, 2, 1, 1)
TWO_CIRCLES = fprog(2, 4, 2, (2, 2), 1, 1, 3, 3)
TWO_CIRCLES_ALT = fprog(2, 3, 1, 1, 1, 2, 2)
STACKED_CIRCLE = fprog(2, 3, 1, 1, 2, 1, 2)
NESTED_ARCS = fprog(2, 4, 2, 2, 3, 1, 2)
SL3_CIRCLE = fprog(3, 2, 1, 1, (1, 2))

# sl_4 web on (4,4,4,0,0,0,0,0)
SL4_WEB = fprog(
    4, 8, 3,
    (3, 4), (4, 4), (5, 4), (6, 4), (2, 4), (3, 2), 1, 2, 4, 5, 4, (3, 2), (4, 2), 3, 1, 2, 1, 3,
    (7, 2),
)
SL4_FLOW = [
    {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4},
    {4, 3}, {3}, {3}, {4}, {4}, {3}, {2, 1}, {2, 1}, {3}, {4}, {4}, {1}, {4}, {4, 2},
]
SL4_FLOW_FILLINGS = [
    [[1, 2, 3, 4, 19], [5, 6, 9, 10], [15, 16, 18]],
    [[1, 2, 3, 4], [5, 6, 11], [7, 8, 14]],
    [[1, 2, 3, 4, 19], [5, 12, 13]],
    [[1, 2, 3, 4], [5, 12, 13], [17]],
]
SL4_CANONICAL_FILLINGS = [
    [[1, 2, 3, 4], [5, 14]],
    [[1, 2, 3, 4], [5, 12, 13], [17]],
    [[1, 2, 3, 4, 19], [5, 6, 11], [15, 16, 18]],
    [[1, 2, 3, 4, 19], [5, 6, 9, 10], [7, 8, 12, 13]],
]

# sl_5 web whose flow grows the tableau (-, [1 2], [1 2 / 4], -, [3])
SL5_WEB = fprog(5, 4, 2, (2, 2), (3, 2), 2, 1)
SL5_FLOW = [{4, 3}, {4, 3}, {1}, {3}]

UNKNOT = lprog(2, 5, 2, (2, 2), 3, 4, 1, ("T-", 2), 1, 2, 4)
HOPF = lprog(3, 6, 2, (2, 3), 1, 3, 4, 5, ("T+", 2), ("T+", 3), (1, 2), (2, 2), (3, 2), (5, 2))


def circle(n, color):
    moves = [(1, color), (1, n - color)]
    return fprog(n, 2, 1, *[mv for mv in moves if mv[1]])


def noncrossing_matchings(k):
    """All crossingless perfect matchings of 1..2k as lists of pairs."""
    if k == 0:
        return [[]]
    out = []
    for j in range(2, 2 * k + 1, 2):
        for inner in noncrossing_matchings(j // 2 - 1):
            for outer in noncrossing_matchings(k - j // 2):
                out.append(
                    [(1, j)]
                    + [(a + 1, b + 1) for a, b in inner]
                    + [(a + j, b + j) for a, b in outer]
                )
    return out


@st.composite
def small_programs(draw, max_n=4, max_m=6, max_moves=8):
    """Random non-killed F-programs."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    m = draw(st.integers(min_value=2, max_value=max_m))
    ell = draw(st.integers(min_value=1, max_value=m - 1))
    weight = [n] * ell + [0] * (m - ell)
    moves = []
    for _ in range(draw(st.integers(min_value=0, max_value=max_moves))):
        options = [i for i in range(m - 1) if weight[i] > 0 and weight[i + 1] < n]
        if not options:
            break
        i = draw(st.sampled_from(options))
        power = draw(st.integers(min_value=1, max_value=min(weight[i], n - weight[i + 1])))
        weight[i] -= power
        weight[i + 1] += power
        moves.append(FMove(pos=i + 1, power=power))
    return FProgram(n=n, m=m, ell=ell, moves=moves)
