"""
Ladder webs as strings of divided powers, their flows and the growth maps between
flows and multitableaux.

A program starts at the weight (n^l, 0^(m-l)). The move F_i^(j) takes j units from
column i to column i+1. A flow labels every column with a subset of {1..n} (its
front); the rung of move k is the subset that travels from column i to i+1.

Seen from the tableau side, row r of component s ends at column rowlen + l + 1 - r,
so adding a residue-i node to component s moves label s from column i to i+1.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from slnweb_models import FMove, FProgram

from .exceptions import (
    ColorOutOfRange, InvalidFlow, InvalidMatching, KilledProgram, ShapeMismatch
)
from .logging import get_logger
from .tableaux import EntryGroup, MultiPartition, MultiTableau, addable_node

logger = get_logger(__name__.split('.')[-1])

GlWeight = tuple[int, ...]
Front = tuple[frozenset[int], ...]


def apply_move(weight: Sequence[int], move: FMove, n: int, step: int = 0) -> GlWeight:
    """
    Apply F_pos^(power) to a weight.

    Raises:
        KilledProgram: an entry leaves 0..n
    """
    i = move.pos - 1
    left, right = weight[i] - move.power, weight[i + 1] + move.power
    if left < 0 or right > n:
        raise KilledProgram(step, weight)
    out = list(weight)
    out[i], out[i + 1] = left, right
    return tuple(out)


def weight_trace(p: FProgram) -> list[GlWeight]:
    """Weights before the first move and after every move."""
    weight = p.start_weight()
    trace = [weight]
    for step, move in enumerate(p.moves, start=1):
        weight = apply_move(weight, move, p.n, step)
        trace.append(weight)
    return trace


def apply_fstring(p: FProgram) -> GlWeight:
    """Final weight of the program."""
    return weight_trace(p)[-1]


def is_closed(p: FProgram) -> bool:
    """True when every final entry is 0 or n."""
    return all(k in (0, p.n) for k in apply_fstring(p))


@dataclass(frozen=True)
class Flow:
    """Rung subsets, one per move of the program the flow lives on."""

    rungs: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, rungs: Iterable[Iterable[int]]) -> 'Flow':
        return cls(tuple(frozenset(r) for r in rungs))

    def text(self) -> str:
        return " ".join(_render_set(r) for r in self.rungs)


def _render_set(labels: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(labels, reverse=True)) + "}"


def render_state_string(state: Sequence[Iterable[int]]) -> str:
    """Render a state string as e.g. '{2}{1}{}{4,3}'."""
    return "".join(_render_set(labels) for labels in state)


def initial_front(p: FProgram) -> Front:
    full = frozenset(range(1, p.n + 1))
    return (full,) * p.ell + (frozenset(),) * (p.m - p.ell)


def _advance_front(front: Front, pos: int, rung: frozenset[int]) -> Front:
    out = list(front)
    out[pos - 1] = front[pos - 1] - rung
    out[pos] = front[pos] | rung
    return tuple(out)


def flow_fronts(p: FProgram, f: Flow) -> list[Front]:
    """
    Fronts before the first move and after every move.

    Raises:
        InvalidFlow: wrong rung count or size, a rung not taken from the left column,
            or a label already present in the right column
    """
    if len(f.rungs) != len(p.moves):
        raise InvalidFlow(f"Flow has {len(f.rungs)} rungs for {len(p.moves)} moves")
    front = initial_front(p)
    fronts = [front]
    for step, (move, rung) in enumerate(zip(p.moves, f.rungs), start=1):
        if len(rung) != move.power:
            raise InvalidFlow(f"Step {step}: rung {_render_set(rung)} has size != {move.power}")
        if not rung <= front[move.pos - 1]:
            raise InvalidFlow(f"Step {step}: rung {_render_set(rung)} not in column {move.pos}")
        if rung & front[move.pos]:
            raise InvalidFlow(f"Step {step}: rung {_render_set(rung)} meets column {move.pos + 1}")
        front = _advance_front(front, move.pos, rung)
        fronts.append(front)
    return fronts


def flow_boundary(p: FProgram, f: Flow) -> Front:
    """Final front of the flow (its boundary state string)."""
    return flow_fronts(p, f)[-1]


def enumerate_flows(p: FProgram) -> list[Flow]:
    """All flows on a program, in lexicographic order of their rungs."""
    weight_trace(p)
    flows: list[Flow] = []

    def extend(front: Front, k: int, rungs: list[frozenset[int]]):
        if k == len(p.moves):
            flows.append(Flow(tuple(rungs)))
            return
        move = p.moves[k]
        free = sorted(front[move.pos - 1] - front[move.pos])
        for combo in combinations(free, move.power):
            rung = frozenset(combo)
            extend(_advance_front(front, move.pos, rung), k + 1, rungs + [rung])

    extend(initial_front(p), 0, [])
    logger.debug(f"{len(flows)} flows on {len(p.moves)} moves")
    return flows


def _interleave(s: Iterable[int], t: Iterable[int]) -> int:
    t = list(t)
    return sum(1 for a in s for b in t if a < b)


def flow_weight(p: FProgram, f: Flow) -> int:
    """
    Weight of a flow: per move with rung T taken from column i,
    #{a < t : a in column i} - #{a < t : a in column i+1} - |T|(|T|-1)/2,
    with both columns read before the move.
    """
    fronts = flow_fronts(p, f)
    total = 0
    for move, rung, front in zip(p.moves, f.rungs, fronts):
        j = len(rung)
        total += (_interleave(front[move.pos - 1], rung) - _interleave(front[move.pos], rung)
                  - j * (j - 1) // 2)
    return total


def flow_to_tableau(p: FProgram, f: Flow) -> MultiTableau:
    """Place one node of residue pos_k in every component of rung k, all labelled k."""
    flow_fronts(p, f)
    shape = MultiPartition.empty(p.n, p.ell)
    groups = []
    for step, (move, rung) in enumerate(zip(p.moves, f.rungs), start=1):
        nodes = []
        for s in sorted(rung, reverse=True):
            node = addable_node(shape, s, move.pos)
            if node is None:
                raise InvalidFlow(f"Step {step}: component {s} has no node of residue {move.pos}")
            nodes.append(node)
        for node in nodes:
            shape = shape.with_node(node.component, node.row)
        groups.append(EntryGroup(move.pos, tuple(nodes)))
    return MultiTableau(shape, tuple(groups))


def tableau_to_flow(tableau: MultiTableau, m: int) -> tuple[FProgram, Flow]:
    """Read off the program F_{res}^(mult) and the rungs from a standard multitableau."""
    moves = [FMove(pos=g.residue, power=len(g.nodes)) for g in tableau.groups]
    too_far = [mv.pos for mv in moves if not 1 <= mv.pos <= m - 1]
    if too_far:
        raise ShapeMismatch(f"Residue {too_far[0]} does not fit a ladder with {m} columns")
    program = FProgram(n=tableau.n, m=m, ell=tableau.ell, moves=moves)
    weight_trace(program)
    flow = Flow(tuple(frozenset(nd.component for nd in g.nodes) for g in tableau.groups))
    return program, flow


def _row_columns(shape: MultiPartition, s: int) -> list[int]:
    return [shape.row_length(s, r) + shape.ell + 1 - r for r in range(1, shape.ell + 1)]


def state_string_of_shape(shape: MultiPartition, m: int | None = None) -> Front:
    """
    Boundary labels of a shape: s sits in column rowlen + l + 1 - r for every row r <= l.

    `m` defaults to the rightmost occupied column.
    """
    columns = {s: _row_columns(shape, s) for s in range(1, shape.n + 1)}
    width = max([c for cols in columns.values() for c in cols] + [shape.ell])
    if m is None:
        m = width
    elif m < width:
        raise ShapeMismatch(f"Shape {shape} needs {width} columns, got {m}")
    labels: list[set[int]] = [set() for _ in range(m)]
    for s, cols in columns.items():
        for c in cols:
            labels[c - 1].add(s)
    return tuple(frozenset(x) for x in labels)


def shape_of_state_string(state: Sequence[Iterable[int]], n: int, ell: int) -> MultiPartition:
    """Inverse of state_string_of_shape."""
    comps = []
    for s in range(1, n + 1):
        cols = sorted((c for c, labels in enumerate(state, start=1) if s in labels), reverse=True)
        if len(cols) != ell:
            raise ShapeMismatch(f"Label {s} occurs in {len(cols)} columns, expected {ell}")
        rows = tuple(c - ell - 1 + r for r, c in enumerate(cols, start=1))
        comps.append(tuple(x for x in rows if x > 0))
    return MultiPartition(n, ell, tuple(comps))


def _arc_forest(pairs: Sequence[tuple[int, int]]) -> list:
    """Nest arcs into a forest of (left, right, children) sorted left to right."""
    count = 2 * len(pairs)
    ends = sorted((min(a, b), max(a, b)) for a, b in pairs)
    points = sorted(x for arc in ends for x in arc)
    if points != list(range(1, count + 1)):
        raise InvalidMatching(f"Arc endpoints {points} do not cover 1..{count} exactly once")
    roots: list = []
    stack: list = []
    for left, right in ends:
        while stack and stack[-1][1] < left:
            stack.pop()
        if stack and right > stack[-1][1]:
            raise InvalidMatching(f"Arc ({left}, {right}) crosses arc {stack[-1][:2]}")
        node = (left, right, [])
        (stack[-1][2] if stack else roots).append(node)
        stack.append(node)
    return roots


def _tree_size(tree) -> int:
    return 1 + sum(_tree_size(child) for child in tree[2])


def arc_program(n: int, color: int, pairs: Sequence[tuple[int, int]], circles: int = 0) -> FProgram:
    """
    Ladder realization of a crossingless matching of 2k boundary points.

    Every arc of `color` c is opened as a cup F^(c) at a leash; its right end is walked
    right to its boundary column and its left end is shifted left over the remaining
    leashes of its block, which then hold the nested arcs. Each closed circle is a
    cup and cap on an extra leash parked to the right of the arcs.

    Example:
        >>> arc_program(2, 1, [(1, 2)]).moves
        (FMove(kind='F', pos=1, power=1),)
    """
    if not 1 <= color <= n - 1:
        raise ColorOutOfRange(f"Color {color} outside 1..{n - 1}")
    if circles < 0:
        raise InvalidMatching("Number of circles must be nonnegative")
    forest = _arc_forest(pairs)
    k = len(pairs)
    moves: list[FMove] = []

    if circles:
        # park the extra leash right of the arc region, then close circles on it
        moves.extend(FMove(pos=c, power=n) for c in range(k + 1, 2 * k + 1))
        for idx in range(circles):
            col = 2 * k + 1 + idx
            moves.append(FMove(pos=col, power=color))
            moves.append(FMove(pos=col, power=n - color))

    def realize(trees, block_start: int):
        sizes = [_tree_size(t) for t in trees]
        starts = [block_start + sum(sizes[:i]) for i in range(len(trees))]
        for tree, size, leash_start in reversed(list(zip(trees, sizes, starts))):
            region = tree[0]
            for offset in reversed(range(size)):
                for c in range(leash_start + offset, region + offset):
                    moves.append(FMove(pos=c, power=n))
            cup = region + size - 1
            moves.append(FMove(pos=cup, power=color))
            for c in range(cup + 1, tree[1]):
                moves.append(FMove(pos=c, power=color))
            for c in range(cup - 1, region - 1, -1):
                moves.append(FMove(pos=c, power=color))
            realize(tree[2], region + 1)

    realize(forest, 1)
    ell = max(k + (1 if circles else 0), 1)
    m = max(2 * k + circles + (1 if circles else 0), ell)
    program = FProgram(n=n, m=m, ell=ell, moves=moves)
    logger.debug(f"arc program for {k} arcs and {circles} circles: {len(moves)} moves, m={program.m}")
    return program
