"""Certificates for 4-cycles, 8-cycles and induced paths in graphs of minimum degree >= 3."""

import json

from ._egcert import (
    Error,
    Graph,
    InternalInvariantError,
    MinDegreeError,
    ParseError,
    PreconditionError,
    brute_force_witness_exists,
    canonical_form,
    check_witness,
    cycle_spectrum,
    families,
    find_c4,
    find_cycle_of_length,
    generate_nonisomorphic,
    is_connected,
    is_pk_free,
    longest_induced_path,
    min_vertex_cut,
    parse_edge_list,
    parse_graph6,
    power_of_two_cycle,
    shortest_induced_cycle_at_least,
    verify_witness,
    vertex_connectivity,
    write_edge_list,
    write_graph6,
)
from . import _egcert


def p5_witness(g):
    """4-cycle or induced P5 as {"witness": {"kind", "vertices"}, "trace": {"events": [...]}}."""
    return json.loads(_egcert.p5_witness_json(g))


def eg_witness(g):
    """4-cycle, 8-cycle or induced P8, same shape as p5_witness."""
    return json.loads(_egcert.eg_witness_json(g))


def replay_trace(g, trace):
    return _egcert.replay_trace_json(g, json.dumps(trace))


def check(g, witnesses=True, max_cycle=12):
    return json.loads(_egcert.check_json(g, witnesses, max_cycle))


def sweep(n_min, n_max, min_degree=3, checks=(), jobs=1):
    return json.loads(_egcert.sweep_json(n_min, n_max, min_degree, list(checks), jobs))
