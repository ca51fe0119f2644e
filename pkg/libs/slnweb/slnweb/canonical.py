"""
The canonical flow of a ladder web and the dual canonical basis test.
"""

from dataclasses import dataclass

from slnweb_models import EngineConfig, FProgram

from .evaluation import ev
from .exceptions import GreedyStuck
from .logging import get_logger
from .tableaux import MultiTableau, bkw_degree
from .webs import Flow, flow_to_tableau, initial_front, weight_trace

logger = get_logger(__name__.split('.')[-1])


def canonical_flow(p: FProgram) -> Flow:
    """
    Greedy flow placing every move's nodes in the rightmost admissible components.

    Admissible labels for a move at column i are those of column i missing from
    column i+1; the canonical rung takes the smallest of them.

    Raises:
        GreedyStuck: fewer admissible labels than the divided power
    """
    weight_trace(p)
    front = list(initial_front(p))
    rungs = []
    for step, move in enumerate(p.moves, start=1):
        free = sorted(front[move.pos - 1] - front[move.pos])
        if len(free) < move.power:
            raise GreedyStuck(step, move.power, len(free))
        rung = frozenset(free[:move.power])
        front[move.pos - 1] = front[move.pos - 1] - rung
        front[move.pos] = front[move.pos] | rung
        rungs.append(rung)
        logger.debug(f"step {step}: F_{move.pos}^({move.power}) takes {sorted(rung)} of {free}")
    return Flow(tuple(rungs))


def canonical_tableau(p: FProgram) -> MultiTableau:
    return flow_to_tableau(p, canonical_flow(p))


def canonical_degree(p: FProgram) -> int:
    """Degree of the canonical tableau; never positive."""
    return bkw_degree(canonical_tableau(p))


def is_dual_canonical(p: FProgram, config: EngineConfig | None = None) -> bool:
    """True when ev(p) lies in 1 + qN[q]."""
    value = ev(p, config)
    return value.min_degree() == 0 and value.coefficient(0) == 1


@dataclass(frozen=True)
class DualCanonicalReport:
    """
    Outcome of the dual canonical test with the data behind it.

    Attributes:
        is_dual_canonical: Verdict
        min_degree: Lowest exponent of ev(p), None when ev(p) vanishes
        multiplicity: Coefficient at that exponent
        canonical_degree: Degree of the canonical tableau, None when the greedy placement is stuck
    """

    is_dual_canonical: bool
    min_degree: int | None
    multiplicity: int
    canonical_degree: int | None

    def explanation(self) -> str:
        if self.is_dual_canonical:
            return "dual canonical: ev has lowest term 1"
        if self.min_degree is None:
            return "not dual canonical: ev vanishes"
        if self.min_degree < 0:
            return (f"not dual canonical: ev has a term of negative degree {self.min_degree} "
                    f"(closed sub-web or non-canonical tableau of degree <= 0)")
        if self.min_degree > 0:
            return f"not dual canonical: ev has no constant term (lowest degree {self.min_degree})"
        return f"not dual canonical: {self.multiplicity} tableaux of degree 0"


def dual_canonical_report(p: FProgram, config: EngineConfig | None = None) -> DualCanonicalReport:
    value = ev(p, config)
    low = value.min_degree()
    try:
        cdeg = canonical_degree(p)
    except GreedyStuck as exc:
        logger.debug(f"canonical placement unavailable: {exc}")
        cdeg = None
    return DualCanonicalReport(
        is_dual_canonical=low == 0 and value.coefficient(0) == 1,
        min_degree=low,
        multiplicity=value.coefficient(low) if low is not None else 0,
        canonical_degree=cdeg,
    )
