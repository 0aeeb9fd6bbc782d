"""``toricirc`` command line front end.

Exit status: 0 on success, 2 on unreadable or malformed input (and usage
errors), 3 when the input violates a command's precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .circuits import Binomial, Configuration, enumerate_circuits
from .classify import (
    check_generation_by_circuits,
    has_square_free_term,
    is_balanced,
    is_homogeneous,
)
from .graphs import (
    classify_graph_circuit,
    enumerate_graph_circuits,
    incidence_configuration,
    parse_graph,
    verify_edge_ring_theorem,
)
from .groebner import minimal_binomial_generators, toric_ideal_generators
from .linalg import parse_matrix, rank

COMMANDS = ("circuits", "toric", "classify", "graph-circuits", "verify", "graph-verify")
GRAPH_ONLY = ("graph-circuits", "graph-verify")

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION = 0, 2, 3


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricirc", description="Circuits of toric ideals.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-m", "--matrix", help="matrix file: 'n q' header then n rows")
    src.add_argument("-g", "--graph", help="graph file: 'vertices n' then one 'i j' per edge")
    p.add_argument("--max-degree", type=int, default=4, help="degree bound for bounded searches (default 4)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    return p


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _binomial_record(b: Binomial, names) -> dict:
    return {
        "plus": list(b.plus),
        "minus": list(b.minus),
        "binomial": b.format(names),
        "balanced": is_balanced(b),
        "squarefree_term": has_square_free_term(b),
    }


def _load(args):
    path = args.matrix or args.graph
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        if args.graph:
            G = parse_graph(text)
            return path, G, incidence_configuration(G)
        return path, None, Configuration.from_matrix(parse_matrix(text))
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None


def cmd_circuits(C, G, args):
    results, lines = [], []
    circuits = enumerate_circuits(C)
    lines.append(f"{len(circuits)} circuit(s), q = {C.q}, rank = {rank(C.matrix)}")
    for c in circuits:
        rec = {"vector": list(c.vector), **_binomial_record(c.binomial, C.names)}
        results.append(rec)
        lines.append(
            f"  {c.binomial.format(C.names)}  vector={list(c.vector)}"
            f"  balanced={_bool(rec['balanced'])} squarefree_term={_bool(rec['squarefree_term'])}"
        )
    return results, lines


def cmd_toric(C, G, args):
    if not is_homogeneous(C):
        raise PreconditionError("minimality trimming requires a grading (configuration is not homogeneous)")
    gens = minimal_binomial_generators(C, toric_ideal_generators(C).generators)
    results = [_binomial_record(b, C.names) for b in gens]
    if not gens:
        return results, ["I_A = (0)"]
    lines = [f"I_A is minimally generated by {len(gens)} binomial(s):"]
    lines += [f"  {b.format(C.names)}" for b in gens]
    return results, lines


def _report_record(r, C) -> dict:
    return {
        "homogeneous": r.homogeneous,
        "cond_a": r.cond_a,
        "cond_b": r.cond_b,
        "cond_c": r.cond_c,
        "connector_bound": r.connector_bound,
        "normal_up_to": None if r.normal_up_to is None else {"degree": r.normal_up_to[0], "normal": r.normal_up_to[1]},
        "gap_witness": None if r.gap_witness is None else list(r.gap_witness),
        "witnesses": [_binomial_record(b, C.names) for b in r.witnesses],
    }


def _report_lines(r, C) -> list[str]:
    lines = [f"homogeneous: {_bool(r.homogeneous)}"]
    if r.normal_up_to is None:
        lines.append("normal: not decided (no grading)")
    else:
        D, ok = r.normal_up_to
        extra = f", witness {list(r.gap_witness)}" if r.gap_witness is not None else ""
        lines.append(f"normal up to degree {D}: {_bool(ok)}{extra}")
    lines.append(f"(a) generated by circuits: {_bool(r.cond_a)}")
    lines.append(f"(b) generated by circuits with a square-free term: {_bool(r.cond_b)}")
    lines.append(f"(c) connector condition (square-free terms up to degree {r.connector_bound}): {r.cond_c}")
    for b in r.witnesses:
        lines.append(f"  generator outside the square-free circuit ideal: {b.format(C.names)}")
    return lines


def cmd_verify(C, G, args):
    r = check_generation_by_circuits(C, args.max_degree, normality_bound=args.max_degree)
    return [_report_record(r, C)], _report_lines(r, C)


def cmd_classify(C, G, args):
    r = check_generation_by_circuits(C, args.max_degree, normality_bound=args.max_degree)
    by_circuit = {cert.circuit.vector: cert for cert in r.connectors}
    rows, lines = [], ["circuits:"]
    for c in enumerate_circuits(C):
        rec = {"vector": list(c.vector), **_binomial_record(c.binomial, C.names), "connector": None}
        cert = by_circuit.get(c.vector)
        text = f"  {c.binomial.format(C.names)}  balanced={_bool(rec['balanced'])} squarefree_term={_bool(rec['squarefree_term'])}"
        if cert is not None:
            rec["connector"] = {
                **_binomial_record(cert.connector, C.names),
                "membership_witness": cert.membership_witness,
            }
            text += f"  connector: {cert.connector.format(C.names)} (in square-free circuit ideal: {_bool(cert.membership_witness)})"
        elif not rec["balanced"]:
            text += "  connector: none found"
        rows.append(rec)
        lines.append(text)
    report = _report_record(r, C)
    report["circuits"] = rows
    return [report], lines + _report_lines(r, C)


def cmd_graph_circuits(C, G, args):
    results, lines = [], []
    gcs = enumerate_graph_circuits(G)
    lines.append(f"{len(gcs)} graph circuit(s)")
    for gc in gcs:
        tag = classify_graph_circuit(gc)
        rec = {
            "kind": gc.kind,
            "walk": [k + 1 for k in gc.walk],
            **_binomial_record(gc.binomial, C.names),
            "class": tag,
        }
        results.append(rec)
        lines.append(f"  {gc.kind:<20} walk={rec['walk']}  {rec['binomial']}  [{tag}]")
    return results, lines


def cmd_graph_verify(C, G, args):
    r = verify_edge_ring_theorem(G, args.max_degree)
    D, normal, witness = r.normal_oracle
    rec = {
        "normal_oracle": {
            "degree": D,
            "normal": normal,
            "witness": None if witness is None else list(witness),
        },
        "odd_cycle_heuristic": r.odd_cycle_heuristic,
        "generated_by_sqfree_circuits": r.generated_by_sqfree_circuits,
        "generated_by_circuits": r.generated_by_circuits,
        "consistent_with_theorem_3_2": r.consistent_with_theorem_3_2,
    }
    if witness is None:
        normal_txt = f"normal: {_bool(normal)} (no gap up to degree {D})"
    else:
        wdeg = sum(witness) // 2
        normal_txt = f"normal: {_bool(normal)} (witness degree {wdeg})"
    lines = [
        f"{normal_txt}; generated by square-free circuits: {_bool(r.generated_by_sqfree_circuits)}; "
        f"consistent with Theorem 3.2: {'yes' if r.consistent_with_theorem_3_2 else 'no'}",
        f"normality bound: {D}",
    ]
    if witness is not None:
        lines.append(f"gap witness: {list(witness)}")
    lines.append(f"odd cycle heuristic (heuristic only): {_bool(r.odd_cycle_heuristic)}")
    return [rec], lines


HANDLERS = {
    "circuits": cmd_circuits,
    "toric": cmd_toric,
    "classify": cmd_classify,
    "graph-circuits": cmd_graph_circuits,
    "verify": cmd_verify,
    "graph-verify": cmd_graph_verify,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_degree < 1:
        parser.error("--max-degree must be at least 1")
    if args.command in GRAPH_ONLY and not args.graph:
        parser.error(f"{args.command} needs a graph file (-g)")
    try:
        path, G, C = _load(args)
        results, lines = HANDLERS[args.command](C, G, args)
    except InputError as e:
        print(f"toricirc: error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as e:
        print(f"toricirc: precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.json:
        doc = {"command": args.command, "input": path, "max_degree": args.max_degree, "results": results}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
