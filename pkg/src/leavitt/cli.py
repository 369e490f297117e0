"""Command line front end: ``leavitt <command> ...``.

Exit codes: 0 success (and ISO for ``classify``), 1 NON-ISO, 2 bad input,
out-of-scope graph or a certificate that fails verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (MAX_BASIS, ck_ideal_generators, ideal_basis, lpa_dimension_acyclic)
from .classify import (Iso, certificate_to_json, compare_cardinality, decide_graded_iso,
                       check_witness, canonical_invariant, default_base, depth_profile,
                       verify_certificate)
from .graph import GraphError, ScopeError, base_paths, is_acyclic, load_graph, validate
from .semigroup import DEFAULT_WINDOW, ExpressionError, enumerate_elements, multiply, parse_element
from .shifts import apply_move, lpa_descriptor, sink_descriptors


class CliError(Exception):
    pass


def _load(path):
    try:
        return load_graph(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except (GraphError, ValueError) as exc:
        raise CliError(f"{path}: {exc}") from exc


def _path_str(p):
    return " ".join(p.edges) if p.edges else p.start


def _dump(data, out):
    json.dump(data, out, indent=2, sort_keys=False)
    out.write("\n")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_validate(args, out):
    g = _load(args.graph)
    r = validate(g)
    if args.json:
        _dump(r.as_dict(), out)
        return 0
    print(f"vertices: {len(g.vertices)}  edges: {len(g.edges)}", file=out)
    print(f"connected: {'yes' if r.connected else 'no'}", file=out)
    print(f"max out-degree: {r.max_out_degree}", file=out)
    print(f"sinks: {' '.join(r.sinks) or '-'}", file=out)
    if r.cycle is not None:
        print(f"cycle: {_path_str(r.cycle.path)} (length {r.cycle.length})", file=out)
    elif not r.acyclic:
        print("cycles: more than one", file=out)
    else:
        print("cycle: none", file=out)
    print(f"classification scope: {'yes' if r.theorem_scope else 'no'}", file=out)
    return 0


def cmd_elements(args, out):
    g = _load(args.graph)
    cyclic = not is_acyclic(g)
    elems = enumerate_elements(g, args.window)
    if args.max_size is not None and len(elems) > args.max_size:
        raise CliError(f"{len(elems)} elements, above --max-size {args.max_size}")
    if args.json:
        data = {"count": len(elems), "elements": [str(a) for a in elems]}
        if cyclic:
            data["window"] = args.window
        _dump(data, out)
        return 0
    if cyclic:
        print(f"# window {args.window}: elements with |p|+|q| <= {args.window}", file=out)
    for a in elems:
        print(a, file=out)
    return 0


def cmd_mul(args, out):
    g = _load(args.graph)
    try:
        a = parse_element(g, args.a)
        b = parse_element(g, args.b)
    except ExpressionError as exc:
        raise CliError(str(exc)) from exc
    print(multiply(a, b), file=out)
    return 0


def cmd_invariant(args, out):
    g = _load(args.graph)
    inv = canonical_invariant(g)
    v0 = default_base(g)
    prof = depth_profile(g, v0)
    desc = lpa_descriptor(g, v0)
    if args.json:
        _dump({"invariant": inv.as_json(), "base": v0, "histogram": list(prof.histogram),
               "descriptor": {"n": desc.n, "step": desc.step, "shifts": list(desc.shifts)}}, out)
        return 0
    print(f"invariant: {inv}", file=out)
    print(f"base {v0}: depth histogram {list(prof.histogram)}", file=out)
    print(f"L_K(E) = {desc}", file=out)
    return 0


def _print_witness(cert: Iso, window, out):
    w = cert.witness
    ps, qs = base_paths(w.source, w.v0), base_paths(w.target, w.w0)
    print(f"witness: v0={w.v0} w0={w.w0} c={w.c}", file=out)
    print("  i  p_i -> q_sigma(i)  lambda_i", file=out)
    for i, (p, j, lam) in enumerate(zip(ps, w.sigma, w.lambdas), 1):
        print(f"  {i}  {_path_str(p)} -> q{j} = {_path_str(qs[j - 1])}  {lam}", file=out)
    print("  p_i C^k p_j* -> q_sigma(i) D^(k + lambda_i - lambda_j) q_sigma(j)*", file=out)
    d = lpa_descriptor(w.source, w.v0)
    print(f"moves: {d}", file=out)
    for m in cert.moves:
        d = apply_move(d, m)
        print(f"  {m} -> {d}", file=out)
    problem = check_witness(w, window)
    print(f"verified on window {window}: {'ok' if problem is None else problem}", file=out)


def cmd_classify(args, out):
    gE, gF = _load(args.graph_e), _load(args.graph_f)
    try:
        cert = decide_graded_iso(gE, gF, args.base_e, args.base_f)
    except ScopeError as exc:
        if not args.heuristic:
            raise
        return _heuristic(gE, gF, exc, args, out)
    if args.json:
        _dump(certificate_to_json(cert), out)
    else:
        print("ISO" if isinstance(cert, Iso) else "NON-ISO", file=out)
        print(f"invariants: {cert.invariant_e} vs {cert.invariant_f}", file=out)
        if args.witness and isinstance(cert, Iso):
            _print_witness(cert, args.window, out)
    return 0 if isinstance(cert, Iso) else 1


def _heuristic(gE, gF, scope_exc, args, out):
    try:
        verdict, ne, nf = compare_cardinality(gE, gF)
    except ValueError as exc:
        raise CliError(f"{scope_exc}; heuristic unavailable: {exc}") from exc
    if args.json:
        _dump({"result": verdict, "heuristic": "cardinality", "sizeE": ne, "sizeF": nf}, out)
    else:
        print("HEURISTIC (element count, proves non-isomorphism only)", file=out)
        print(f"|LI(E)\\0| = {ne}, |LI(F)\\0| = {nf}", file=out)
        print("NON-ISO as semigroups" if verdict == "noniso" else "UNDECIDED", file=out)
    return 1 if verdict == "noniso" else 2


def cmd_algebra_dim(args, out):
    g = _load(args.graph)
    if not is_acyclic(g):
        if args.json:
            _dump({"dimension": "infinite"}, out)
        else:
            print("dimension: infinite (graph has a cycle)", file=out)
        return 0
    basis, ideal, _ = ideal_basis(g, args.max_size)
    quotient = len(basis) - ideal.span_dimension
    blocks = sink_descriptors(g)
    if args.json:
        _dump({"semigroup_algebra": len(basis), "ideal": ideal.span_dimension,
               "dimension": quotient, "sink_formula": lpa_dimension_acyclic(g),
               "generators": [repr(x) for x in ck_ideal_generators(g)],
               "blocks": [str(d) for d in blocks]}, out)
        return 0
    print(f"dim K0 LI(E): {len(basis)}", file=out)
    print(f"dim ideal: {ideal.span_dimension}", file=out)
    for x in ideal.generators:
        print(f"  generator: {x!r}", file=out)
    print(f"dimension: {quotient}", file=out)
    print(f"sum over sinks: {lpa_dimension_acyclic(g)}  ({' + '.join(map(str, blocks))})", file=out)
    return 0


def cmd_verify(args, out):
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {args.certificate}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{args.certificate}: not JSON ({exc})") from exc
    gE, gF = _load(args.graph_e), _load(args.graph_f)
    problem = verify_certificate(data, gE, gF, args.window)
    if problem is not None:
        print(f"INVALID: {problem}", file=out)
        return 2
    print(f"VALID {data['result'].upper()} (window {args.window})", file=out)
    return 0


# ---------------------------------------------------------------------------

def _window(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("window must be >= 0")
    return n


def build_parser():
    ap = argparse.ArgumentParser(prog="leavitt", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="structure report for a graph file")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("elements", help="list nonzero elements of LI(E)")
    p.add_argument("graph")
    p.add_argument("--window", type=_window, default=DEFAULT_WINDOW)
    p.add_argument("--max-size", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_elements)

    p = sub.add_parser("mul", help="multiply two element expressions")
    p.add_argument("graph")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("invariant", help="canonical depth invariant and matrix descriptor")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("classify", help="decide graded isomorphism")
    p.add_argument("graph_e")
    p.add_argument("graph_f")
    p.add_argument("--witness", action="store_true", help="print the witness and move chain")
    p.add_argument("--window", type=_window, default=DEFAULT_WINDOW)
    p.add_argument("--json", action="store_true")
    p.add_argument("--base-e")
    p.add_argument("--base-f")
    p.add_argument("--heuristic", action="store_true",
                   help="for out-of-scope acyclic graphs, compare semigroup sizes")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("algebra-dim", help="dimension of L_K(E) for an acyclic graph")
    p.add_argument("graph")
    p.add_argument("--max-size", type=int, default=MAX_BASIS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_algebra_dim)

    p = sub.add_parser("verify", help="re-check a classify --json certificate")
    p.add_argument("certificate")
    p.add_argument("graph_e")
    p.add_argument("graph_f")
    p.add_argument("--window", type=_window, default=DEFAULT_WINDOW)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (CliError, ScopeError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
