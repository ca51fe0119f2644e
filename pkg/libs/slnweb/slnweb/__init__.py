"""
slnweb

Evaluation of sl_n webs and colored link diagrams given as ladder programs.

Core Abstractions:
    LaurentPoly - exact integer Laurent polynomials in q
    MultiPartition / MultiTableau - shapes and standard fillings with divided-power entries
    FProgram / LinkProgram - ladder webs and link diagrams (from slnweb_models)
    ev / ev_link / rt - closed web evaluation and colored link polynomials
"""

from slnweb_models import Crossing, EngineConfig, FMove, FProgram, LinkProgram

from .canonical import (
    DualCanonicalReport, canonical_degree, canonical_flow, canonical_tableau,
    dual_canonical_report, is_dual_canonical,
)
from .evaluation import (
    d_shift, ev, ev_by_shape, ev_oracle, glued_evaluation, kuperberg_pair, tensor_expansion,
)
from .links import (
    braiding_summands, compile_braid_closure, crossing_colors, ev_link, expand, mirror,
    normalization, rt, writhe,
)
from .logging import debug_logging, disable_debug_logging, enable_debug_logging, get_logger
from .qlaurent import LaurentPoly, qbin, qfact, qint
from .tableaux import (
    Dominance, MultiPartition, MultiTableau, NodeRef, bkw_degree, column_reading_tableau,
    degree_increment, dominance_mp, dominance_mt, enumerate_standard, residue_sequence,
    row_reading_tableau,
)
from .textformat import parse_fprogram, parse_link_program, render_program
from .version import __version__
from .webs import (
    Flow, apply_fstring, arc_program, enumerate_flows, flow_to_tableau, flow_weight, is_closed,
    state_string_of_shape, tableau_to_flow,
)

__all__ = [
    '__version__',

    # Programs and configuration
    'FMove',
    'Crossing',
    'FProgram',
    'LinkProgram',
    'EngineConfig',
    'parse_fprogram',
    'parse_link_program',
    'render_program',

    # Polynomials
    'LaurentPoly',
    'qint',
    'qfact',
    'qbin',

    # Tableaux
    'MultiPartition',
    'MultiTableau',
    'NodeRef',
    'Dominance',
    'bkw_degree',
    'degree_increment',
    'dominance_mp',
    'dominance_mt',
    'enumerate_standard',
    'residue_sequence',
    'row_reading_tableau',
    'column_reading_tableau',

    # Webs and flows
    'Flow',
    'apply_fstring',
    'is_closed',
    'enumerate_flows',
    'flow_weight',
    'flow_to_tableau',
    'tableau_to_flow',
    'state_string_of_shape',
    'arc_program',

    # Evaluation
    'ev',
    'ev_by_shape',
    'ev_oracle',
    'd_shift',
    'kuperberg_pair',
    'glued_evaluation',
    'tensor_expansion',

    # Canonical basis
    'canonical_flow',
    'canonical_tableau',
    'canonical_degree',
    'is_dual_canonical',
    'dual_canonical_report',
    'DualCanonicalReport',

    # Links
    'braiding_summands',
    'expand',
    'crossing_colors',
    'ev_link',
    'normalization',
    'rt',
    'writhe',
    'mirror',
    'compile_braid_closure',

    # Logging
    'get_logger',
    'enable_debug_logging',
    'disable_debug_logging',
    'debug_logging',
]
