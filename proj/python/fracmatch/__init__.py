"""Round-synchronous simulator and maximal fractional matching toolkit.

Exact rational values cross the C++ boundary as "p/q" strings; feed them to
:class:`fractions.Fraction` when you want to compute with them.
"""

import json as _json
from fractions import Fraction

from ._core import (  # noqa: F401
    PortGraph,
    SimBudget,
    SimFault,
    TheoryViolation,
    algorithm_rounds,
    check_almost_saturating,
    class_index,
    encode_view,
    exhaustive_mfm_search,
    gen_cycle,
    gen_path,
    gen_random,
    has_loops,
    make_G0,
    mfm_rounds,
    node_load,
    obs32_witness_search,
    parse_graph,
    run,
    run_loopy,
    two_color,
    unfold_loops,
    validate,
    write_assignment,
    write_dot,
    write_graph,
)
from ._core import lb_harness_json as _lb_harness_json
from ._core import verify_json as _verify_json


def verify(graph, assignment, value_set=None):
    """Feasibility/maximality report as a dict (see ``verify_json``)."""
    return _json.loads(_verify_json(graph, assignment, value_set))


def lb_harness(algorithm, delta, model, d, T_override=None):
    """Replication-chain report as a dict (see ``lb_harness_json``)."""
    return _json.loads(_lb_harness_json(algorithm, delta, model, d, T_override))


def fractions_of(assignment):
    """Convert a list of "p/q" strings to :class:`fractions.Fraction`."""
    return [Fraction(v) for v in assignment]
