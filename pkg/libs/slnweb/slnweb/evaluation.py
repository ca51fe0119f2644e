"""
Evaluation of ladder webs as a dynamic program over multipartition shapes.

Every standard multitableau generated by a program is grown one entry group at a
time, and the degree increment of a group depends only on the current shape and the
placement. Tableaux are therefore merged by shape: the state after k moves maps each
live shape to the polynomial sum of q^deg over all tableaux reaching it.
"""

from contextlib import nullcontext
from itertools import combinations
from multiprocessing import Pool
from typing import Sequence

from slnweb_models import EngineConfig, FProgram

from .exceptions import BoundaryMismatch, InvalidWeight, ResourceLimitExceeded
from .logging import get_logger
from .qlaurent import LaurentPoly, poly_sum
from .tableaux import MultiPartition, addable_nodes, degree_increment
from .webs import (
    Front, apply_fstring, enumerate_flows, flow_weight, state_string_of_shape, weight_trace
)

logger = get_logger(__name__.split('.')[-1])

ShapePolyMap = dict[MultiPartition, LaurentPoly]


def _merge(into: ShapePolyMap, shape: MultiPartition, poly: LaurentPoly):
    into[shape] = into[shape] + poly if shape in into else poly


def _advance(items: Sequence[tuple[MultiPartition, LaurentPoly]], res: int,
             power: int) -> list[tuple[MultiPartition, LaurentPoly]]:
    """Route every (shape, poly) through all legal placements of one move."""
    out: ShapePolyMap = {}
    for shape, poly in items:
        comps = [node.component for node in addable_nodes(shape, res)]
        for combo in combinations(comps, power):
            inc, successor = degree_increment(shape, res, combo)
            _merge(out, successor, poly.shift(inc))
    return list(out.items())


def _chunks(items: list, count: int) -> list[list]:
    size = -(-len(items) // count)
    return [items[i:i + size] for i in range(0, len(items), size)]


def ev_by_shape(p: FProgram, config: EngineConfig | None = None) -> ShapePolyMap:
    """
    Map every end shape to the sum of q^deg over the tableaux of that shape.

    Steps with at least `config.parallel_threshold` live shapes are split over
    `config.jobs` worker processes; partial results are merged in submission order.

    Raises:
        KilledProgram: the program leaves 0..n
        ResourceLimitExceeded: more than `config.max_states` live shapes
    """
    config = config or EngineConfig()
    weight_trace(p)
    states: ShapePolyMap = {MultiPartition.empty(p.n, p.ell): LaurentPoly.one()}

    with (Pool(processes=config.jobs) if config.jobs > 1 else nullcontext()) as pool:
        for step, move in enumerate(p.moves, start=1):
            items = list(states.items())
            if pool is not None and len(items) >= config.parallel_threshold:
                proc = [pool.apply_async(_advance, (chunk, move.pos, move.power))
                        for chunk in _chunks(items, config.jobs)]
                parts = [r.get() for r in proc]
            else:
                parts = [_advance(items, move.pos, move.power)]
            successors: ShapePolyMap = {}
            for part in parts:
                for shape, poly in part:
                    _merge(successors, shape, poly)
            if len(successors) > config.max_states:
                raise ResourceLimitExceeded(config.max_states, step)
            states = successors
            logger.debug(f"step {step}: F_{move.pos}^({move.power}) -> {len(states)} live shapes")
    return states


def ev(p: FProgram, config: EngineConfig | None = None) -> LaurentPoly:
    """Sum of q^deg over every standard multitableau the program generates."""
    return poly_sum(ev_by_shape(p, config).values())


def ev_oracle(p: FProgram) -> LaurentPoly:
    """Brute-force evaluation by enumerating flows; agrees with ev on every program."""
    return poly_sum(LaurentPoly.monomial(flow_weight(p, f)) for f in enumerate_flows(p))


def d_shift(weight: Sequence[int], n: int, ell: int) -> int:
    """
    Normalization exponent (n(n-1)l - sum k(k-1)) / 2 of a weight.

    Raises:
        InvalidWeight: an entry outside 0..n
    """
    if any(not 0 <= k <= n for k in weight):
        raise InvalidWeight(f"Weight {list(weight)} has entries outside 0..{n}")
    return (n * (n - 1) * ell - sum(k * (k - 1) for k in weight)) // 2


def _check_pairable(u: FProgram, v: FProgram) -> tuple[int, ...]:
    if (u.n, u.m, u.ell) != (v.n, v.m, v.ell):
        raise BoundaryMismatch(
            f"Headers differ: (n={u.n}, m={u.m}, l={u.ell}) vs (n={v.n}, m={v.m}, l={v.ell})"
        )
    wu, wv = apply_fstring(u), apply_fstring(v)
    if wu != wv:
        raise BoundaryMismatch(f"End weights differ: {list(wu)} vs {list(wv)}")
    return wu


def kuperberg_pair(u: FProgram, v: FProgram, config: EngineConfig | None = None) -> LaurentPoly:
    """Sum over common end shapes of the product of the two shape polynomials."""
    _check_pairable(u, v)
    pu, pv = ev_by_shape(u, config), ev_by_shape(v, config)
    return poly_sum(poly * pv[shape] for shape, poly in pu.items() if shape in pv)


def glued_evaluation(u: FProgram, v: FProgram, config: EngineConfig | None = None) -> LaurentPoly:
    """Evaluation of v* glued on top of u: q^(-d) times the Kuperberg pairing."""
    weight = _check_pairable(u, v)
    return kuperberg_pair(u, v, config).shift(-d_shift(weight, u.n, u.ell))


def tensor_expansion(p: FProgram, config: EngineConfig | None = None) -> dict[Front, LaurentPoly]:
    """
    Coefficients of the web in the elementary tensor basis, keyed by state string.

    Each end shape contributes its polynomial at -q to the state it determines.
    """
    out: dict[Front, LaurentPoly] = {}
    for shape, poly in ev_by_shape(p, config).items():
        key = state_string_of_shape(shape, p.m)
        out[key] = out[key] + poly.at_minus_q() if key in out else poly.at_minus_q()
    return out
