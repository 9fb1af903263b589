"""
Command-line front end.

Every subcommand writes one JSON document to stdout; ``--pretty`` adds a human
summary on stderr. Exit status is 0 when all verdicts pass, 1 on a
verification failure and 2 on usage or input errors.

    linedigraph pipeline ck:d=2,l=4 --horizon 10
    linedigraph verify rand:n=8,p=0.3,seed=7 --verify-upto 5
    linedigraph export uni:n=3,d=2 --what quotient --format dot
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .digraph import (DEFAULT_VERTEX_BUDGET, Digraph, adjacency_matrix, line_digraph,
                      order_bruteforce)
from .errors import LineDigraphError, NotRegular, ParseError, SizeLimitExceeded, UnsupportedFormat
from .families import build_family, parse_family_spec, squarefree_count
from .linalg import minimal_polynomial, sandwich_sequence
from .partition import (Partition, characteristic_matrix, check_commutation,
                        coarsest_regular_partition, is_regular_partition, quotient_dot,
                        quotient_matrix, walk_count_check)
from .recurrence import classify, extend, recurrence_from_quotient

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _verdict(name: str, ok: Optional[bool], reason: str) -> dict:
    status = "skipped" if ok is None else ("pass" if ok else "fail")
    return {"name": name, "status": status, "reason": reason}


def load_digraph(args) -> tuple[str, Digraph]:
    if args.input:
        try:
            data = json.loads(Path(args.input).read_text())
            return args.input, Digraph.from_dict(data)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"cannot read digraph from {args.input}: {exc}") from exc
    if not args.spec:
        raise ParseError("give a family spec string or --input FILE")
    spec = parse_family_spec(args.spec)
    if args.seed is not None and "seed" in spec.params:
        spec = type(spec)(spec.tag, {**spec.params, "seed": args.seed})
        return str(spec), build_family(spec)
    return args.spec, build_family(spec)


def load_partition(args, G: Digraph) -> tuple[str, Partition]:
    if getattr(args, "partition", None):
        try:
            data = json.loads(Path(args.partition).read_text())
        except (OSError, ValueError) as exc:
            raise ParseError(f"cannot read partition from {args.partition}: {exc}") from exc
        return "supplied", Partition.from_dict(data, G.n)
    return "coarsest", coarsest_regular_partition(G)


def _emit(doc: dict, out=None) -> None:
    (out or sys.stdout).write(json.dumps(doc, indent=2) + "\n")


def _explicit_orders(G: Digraph, k_max: int, budget: int) -> list:
    """[|V(L^k(G))| or None when over budget, for k = 0..k_max]."""
    orders = []
    current: Optional[Digraph] = G
    for k in range(k_max + 1):
        if k and current is not None:
            try:
                current = line_digraph(current, budget=budget, labels=False)
            except SizeLimitExceeded:
                current = None
        orders.append(None if current is None else current.n)
    return orders


def run_pipeline(args) -> tuple[dict, int]:
    source, G = load_digraph(args)
    how, pi = load_partition(args, G)
    report: dict = {"input": source, "digraph": {"n": G.n, "arcs": G.num_arcs}}
    verdicts = []

    check = is_regular_partition(G, pi)
    report["partition"] = {"source": how, "m": pi.m, "sizes": list(pi.sizes)}
    verdicts.append(_verdict("regular_partition", check.regular,
                             "intersection numbers constant on every cell" if check
                             else f"vertices {check.witness[0]} and {check.witness[1]} differ on cell {check.witness[2]}"))
    if not check:
        report["verdicts"] = verdicts
        return report, EXIT_FAIL

    B = quotient_matrix(G, pi)
    mp = minimal_polynomial(B)
    rec = recurrence_from_quotient(pi.sizes, B)
    terms = extend(rec, args.horizon)
    report["quotient_matrix"] = B
    report["minimal_polynomial"] = {"text": str(mp), **mp.to_dict()}
    report["recurrence"] = {"text": rec.pretty(), **rec.to_dict()}
    report["terms"] = [str(x) for x in terms]
    report["classification"] = classify(rec, max(args.horizon, rec.effective_start + rec.order)).to_dict()

    A = adjacency_matrix(G)
    verdicts.append(_verdict("commutation", check_commutation(A, characteristic_matrix(pi), B),
                             "S B == A S"))
    walks_ok = all(walk_count_check(G, pi, k) for k in range(args.verify_upto + 1))
    verdicts.append(_verdict("walk_counts", walks_ok,
                             f"cell walk counts equal B^k entries for k <= {args.verify_upto}"))
    brute = [order_bruteforce(G, k) for k in range(args.horizon + 1)]
    verdicts.append(_verdict("bruteforce_agreement", brute == terms,
                             f"recurrence terms equal j A^k j^T for k <= {args.horizon}"))
    explicit = _explicit_orders(G, args.verify_upto, args.budget)
    for k, size in enumerate(explicit):
        if size is None:
            verdicts.append(_verdict(f"explicit_order k={k}", None,
                                     f"L^{k}(G) exceeds the vertex budget {args.budget}"))
        else:
            verdicts.append(_verdict(f"explicit_order k={k}", size == brute[k],
                                     f"|V(L^{k}(G))| = {size}"))
    report["verdicts"] = verdicts
    failed = any(v["status"] == "fail" for v in verdicts)
    return report, EXIT_FAIL if failed else EXIT_OK


def run_verify(args) -> tuple[dict, int]:
    source, G = load_digraph(args)
    pi = coarsest_regular_partition(G)
    B = quotient_matrix(G, pi)
    k_max = args.verify_upto
    quotient = sandwich_sequence(pi.sizes, B, k_max)
    explicit = _explicit_orders(G, k_max, args.budget)
    rows = []
    for k in range(k_max + 1):
        walks = order_bruteforce(G, k)
        row = {"k": k, "explicit": None if explicit[k] is None else str(explicit[k]),
               "walks": str(walks), "quotient": str(quotient[k])}
        if walks != quotient[k] or (explicit[k] is not None and explicit[k] != walks):
            row.update(status="fail", reason="orders disagree")
        elif explicit[k] is None:
            row.update(status="skipped",
                       reason=f"L^{k}(G) exceeds the vertex budget {args.budget}; j A^k j^T == s B^k j^T")
        else:
            row.update(status="pass", reason="|V(L^k(G))| == j A^k j^T == s B^k j^T")
        rows.append(row)
    failed = any(r["status"] == "fail" for r in rows)
    return {"input": source, "verdicts": rows}, EXIT_FAIL if failed else EXIT_OK


def run_export(args) -> tuple[str, int]:
    _, G = load_digraph(args)
    if args.format not in ("json", "dot"):
        raise UnsupportedFormat(args.format)
    if args.what == "quotient":
        _, pi = load_partition(args, G)
        B = quotient_matrix(G, pi)
        if args.format == "dot":
            return quotient_dot(B, pi.sizes), EXIT_OK
        return json.dumps({"sizes": list(pi.sizes), "B": B, **pi.to_dict()}) + "\n", EXIT_OK
    target = G if args.what == "digraph" else line_digraph(G, budget=args.budget)
    if args.format == "dot":
        return target.to_dot(), EXIT_OK
    return target.to_json() + "\n", EXIT_OK


def _recurrence_for(args):
    source, G = load_digraph(args)
    how, pi = load_partition(args, G)
    B = quotient_matrix(G, pi)
    return source, how, pi, B


def run_minpoly(args) -> tuple[dict, int]:
    source, how, pi, B = _recurrence_for(args)
    mp = minimal_polynomial(B)
    return {"input": source, "partition": how, "quotient_matrix": B,
            "minimal_polynomial": {"text": str(mp), **mp.to_dict()}}, EXIT_OK


def run_recurrence(args) -> tuple[dict, int]:
    source, how, pi, B = _recurrence_for(args)
    rec = recurrence_from_quotient(pi.sizes, B)
    return {"input": source, "partition": how, "recurrence": {"text": rec.pretty(), **rec.to_dict()}}, EXIT_OK


def run_seq(args) -> tuple[dict, int]:
    source, how, pi, B = _recurrence_for(args)
    rec = recurrence_from_quotient(pi.sizes, B)
    return {"input": source, "terms": [str(x) for x in extend(rec, args.horizon)]}, EXIT_OK


def run_squarefree(args) -> tuple[dict, int]:
    return {"counts": {str(n): str(squarefree_count(n, max_length=args.max_length))
                       for n in args.lengths}}, EXIT_OK


def _pretty(doc: dict) -> str:
    lines = []
    if "input" in doc:
        lines.append(f"input: {doc['input']}")
    if "partition" in doc and isinstance(doc["partition"], dict):
        p = doc["partition"]
        lines.append(f"partition ({p['source']}): {p['m']} cells, sizes {p['sizes']}")
    if "quotient_matrix" in doc:
        lines.append(f"quotient matrix: {doc['quotient_matrix']}")
    if "minimal_polynomial" in doc:
        lines.append(f"minimal polynomial: {doc['minimal_polynomial']['text']}")
    if "recurrence" in doc:
        lines.append(f"recurrence: {doc['recurrence']['text']}")
    if "terms" in doc:
        lines.append("terms: " + ", ".join(doc["terms"]))
    if "classification" in doc:
        c = doc["classification"]
        lines.append("behaviour: " + c["behaviour"] + (f"({c['value']})" if "value" in c else ""))
    if "counts" in doc:
        lines.extend(f"squarefree({n}) = {c}" for n, c in doc["counts"].items())
    for v in doc.get("verdicts", []):
        name = v.get("name", f"k={v.get('k')}")
        lines.append(f"[{v['status']}] {name}: {v['reason']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linedigraph",
                                     description="Order sequences of iterated line digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def source_args(p, partition=True):
        p.add_argument("spec", nargs="?", help="family spec, e.g. ck:d=2,l=4")
        p.add_argument("--input", help="digraph JSON file instead of a family spec")
        if partition:
            p.add_argument("--partition", help="partition JSON file (default: coarsest regular partition)")
        p.add_argument("--seed", type=int, help="override the seed of rand/dag specs")
        p.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET,
                       help="vertex budget for explicit line-digraph construction")
        p.add_argument("--pretty", action="store_true", help="human summary on stderr")

    p = sub.add_parser("pipeline", help="partition, quotient, minimal polynomial, recurrence, checks")
    source_args(p)
    p.add_argument("--horizon", type=int, default=10)
    p.add_argument("--verify-upto", type=int, default=5)
    p.set_defaults(func=run_pipeline)

    p = sub.add_parser("verify", help="compare |V(L^k)|, j A^k j^T and s B^k j^T")
    source_args(p, partition=False)
    p.add_argument("--verify-upto", type=int, default=5)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("export", help="write a digraph, its line digraph or its quotient")
    source_args(p)
    p.add_argument("--what", choices=["digraph", "line", "quotient"], default="digraph")
    p.add_argument("--format", default="json", help="json or dot")
    p.add_argument("--output", help="file to write (default stdout)")
    p.set_defaults(func=run_export)

    for name, func, text in (("minpoly", run_minpoly, "minimal polynomial of the quotient matrix"),
                             ("recurrence", run_recurrence, "recurrence for n_k"),
                             ("seq", run_seq, "terms n_0..n_horizon")):
        p = sub.add_parser(name, help=text)
        source_args(p)
        p.add_argument("--horizon", type=int, default=10)
        p.set_defaults(func=func)

    p = sub.add_parser("squarefree", help="count ternary words free of squares of length <= 2")
    p.add_argument("lengths", type=int, nargs="+")
    p.add_argument("--max-length", type=int, default=20)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=run_squarefree)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = args.func(args)
    except NotRegular as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (LineDigraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if isinstance(result, str):
        if getattr(args, "output", None):
            Path(args.output).write_text(result)
        else:
            sys.stdout.write(result)
        return code
    _emit(result)
    if args.pretty:
        sys.stderr.write(_pretty(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
