"""Command-line front end: count, orient, verify, product.

Inputs are either generator specs ("path:N", "cycle:N",
"tree-random:N:SEED") or paths to edge-list files ('#' comments,
"n m" header, then "u v" or "u -> v" lines).  Reports are human text or
JSON ({"request", "method", "count", "violations", "elapsed_ms"}), with
counts serialized as decimal strings so consumers never truncate them.

Exit codes: 0 ok, 2 parse error, 3 precondition/structure error,
4 size-limit guard, 5 verification violation (or a count exposing a
non-Pfaffian orientation), 6 numerical-consistency error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from .counting import (
    DEFAULT_BRUTE_GUARD,
    CountResult,
    count_brute,
    count_c4_tree,
    count_grid_dimer,
    count_p3_tree,
    count_p4_tree,
    count_pfaffian,
    verify_identities,
)
from .brute import has_perfect_matching
from .errors import (
    EdgeListParseError,
    InvalidCycleError,
    InvalidSizeError,
    NotAPerfectSquareError,
    NotATreeError,
    NotPfaffianError,
    NotSquarishError,
    NumericalConsistencyError,
    OddCycleParityError,
    PfmatchError,
    PreconditionError,
    SizeLimitError,
)
from .graphs import (
    DEFAULT_CYCLE_GUARD,
    Graph,
    cartesian_product,
    cycle_graph,
    format_edge_list,
    parse_edge_list,
    path_graph,
    random_tree,
    validate_tree,
)
from .orientation import (
    OrientedGraph,
    check_pfaffian,
    format_oriented_edge_list,
    orient_c4_tree,
    orient_double,
    orient_layered,
    orient_lexicographic,
    parse_oriented_edge_list,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_SIZE_LIMIT = 4
EXIT_VIOLATION = 5
EXIT_NUMERIC = 6

#: Environment variable overriding the default guards (flag still wins).
GUARD_ENV_VAR = "PFMATCH_MAX_VERTICES"

_GENERATOR_PREFIXES = ("path:", "cycle:", "tree-random:")


def _exit_code_for(exc: PfmatchError) -> int:
    if isinstance(exc, EdgeListParseError):
        return EXIT_PARSE
    if isinstance(exc, SizeLimitError):
        return EXIT_SIZE_LIMIT
    if isinstance(exc, NumericalConsistencyError):
        return EXIT_NUMERIC
    if isinstance(exc, (NotPfaffianError, NotSquarishError, NotAPerfectSquareError)):
        return EXIT_VIOLATION
    if isinstance(
        exc,
        (InvalidSizeError, NotATreeError, InvalidCycleError, OddCycleParityError, PreconditionError),
    ):
        return EXIT_PRECONDITION
    return EXIT_PRECONDITION


def parse_graph_spec(spec: str) -> Graph:
    """Generator spec or edge-list file path -> Graph."""
    if spec.startswith("path:"):
        return path_graph(_spec_int(spec, spec[5:]))
    if spec.startswith("cycle:"):
        return cycle_graph(_spec_int(spec, spec[6:]))
    if spec.startswith("tree-random:"):
        fields = spec.split(":")
        if len(fields) != 3:
            raise EdgeListParseError(f"bad generator spec {spec!r}: want tree-random:N:SEED")
        return random_tree(_spec_int(spec, fields[1]), _spec_int(spec, fields[2]))
    return parse_edge_list(_read_text(spec))


def _spec_int(spec: str, field: str) -> int:
    try:
        return int(field)
    except ValueError:
        raise EdgeListParseError(f"bad generator spec {spec!r}: {field!r} is not an integer")


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise EdgeListParseError(f"cannot read {path!r}: {exc}") from exc


def _guard(args: argparse.Namespace, default: int) -> int:
    if getattr(args, "max_vertices", None) is not None:
        return args.max_vertices
    env = os.environ.get(GUARD_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise EdgeListParseError(f"{GUARD_ENV_VAR}={env!r} is not an integer")
    return default


def _normalize_product_kind(kind: str) -> tuple[str, int]:
    """'c4' -> ('c4', 4); 'p2'/'p3'/'p4'/'pm:M' -> ('pm', M)."""
    if kind == "c4":
        return ("c4", 4)
    if kind in ("p2", "p3", "p4"):
        return ("pm", int(kind[1]))
    if kind.startswith("pm:"):
        m = _spec_int(kind, kind[3:])
        if m < 1:
            raise InvalidSizeError(f"need at least 1 layer, got {m}")
        return ("pm", m)
    raise EdgeListParseError(
        f"unknown product kind {kind!r}: want c4, p2, p3, p4, or pm:M"
    )


def _base_orientation(tree, args: argparse.Namespace) -> OrientedGraph:
    """Tree orientation fed to the constructors: a file's, or lexicographic."""
    if getattr(args, "orient_file", None):
        d = parse_oriented_edge_list(_read_text(args.orient_file))
        if d.base != Graph(n=tree.n, edges=tree.edges):
            raise PreconditionError("--orient-file does not orient the given tree")
        return d
    return orient_lexicographic(tree)


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def _count_product(kind: str, m: int, tree, method: str, args: argparse.Namespace) -> CountResult:
    brute_guard = _guard(args, DEFAULT_BRUTE_GUARD)

    def formula() -> Optional[CountResult]:
        if kind == "c4":
            return count_c4_tree(tree)
        if m == 4:
            return count_p4_tree(tree)
        if m == 3 and has_perfect_matching(tree):
            return count_p3_tree(tree)
        return None

    def pfaffian() -> Optional[CountResult]:
        d = _pfaffian_constructor(kind, m, tree, args)
        if d is None:
            return None
        return count_pfaffian(d.base, d)

    def brute() -> CountResult:
        factor = cycle_graph(4) if kind == "c4" else path_graph(m)
        return count_brute(cartesian_product(factor, tree), max_vertices=brute_guard)

    if method == "auto":
        result = formula()
        if result is None:
            result = pfaffian()
        if result is None:
            result = brute()
        return result
    if method == "formula":
        result = formula()
        if result is None:
            raise PreconditionError(
                "no closed form applies to this product/tree combination; "
                "try --method brute"
            )
        return result
    if method == "pfaffian":
        result = pfaffian()
        if result is None:
            raise PreconditionError(
                "no verified Pfaffian orientation constructor applies here; "
                "try --method brute"
            )
        return result
    return brute()


def _pfaffian_constructor(kind: str, m: int, tree, args: argparse.Namespace) -> Optional[OrientedGraph]:
    """The orientations with a proven Pfaffian guarantee, else None."""
    base = _base_orientation(tree, args)
    if kind == "c4":
        return orient_c4_tree(base)
    if m == 1:
        return base  # a tree has no cycles at all
    if m == 2:
        return orient_double(base)
    if m == 3:
        return orient_layered(base, 3) if has_perfect_matching(tree) else None
    if m == 4:
        return orient_layered(base, 4)
    return None  # m > 4: open territory, only brute force is trusted


def cmd_count(args: argparse.Namespace) -> tuple[dict, int]:
    request = {
        "command": "count",
        "method": args.method,
        "graph": args.graph,
        "product": args.product,
        "tree": args.tree,
        "grid": args.grid,
        "max_vertices": args.max_vertices,
    }
    if args.grid is not None:
        m, n = args.grid
        if args.method in ("auto", "formula"):
            result = count_grid_dimer(m, n)
        elif args.method == "brute":
            result = count_brute(
                cartesian_product(path_graph(m), path_graph(n)),
                max_vertices=_guard(args, DEFAULT_BRUTE_GUARD),
            )
        else:
            raise PreconditionError(
                "--grid supports auto, formula, or brute; for the Pfaffian "
                "route use --product p2/p3/p4 with --tree path:N"
            )
    elif args.product is not None:
        if args.tree is None:
            raise EdgeListParseError("--product needs --tree SPEC")
        kind, m = _normalize_product_kind(args.product)
        tree = validate_tree(parse_graph_spec(args.tree))
        result = _count_product(kind, m, tree, args.method, args)
    elif args.graph is not None:
        g = parse_graph_spec(args.graph)
        if args.method == "pfaffian":
            if not args.orient_file:
                raise PreconditionError(
                    "--method pfaffian on a plain graph needs --orient-file "
                    "(Pfaffian-ness is the caller's responsibility)"
                )
            d = parse_oriented_edge_list(_read_text(args.orient_file))
            if d.base != g:
                raise PreconditionError("--orient-file does not orient the given graph")
            result = count_pfaffian(g, d)
        elif args.method == "formula":
            raise PreconditionError(
                "no closed form applies to a plain graph; try --method brute"
            )
        else:
            result = count_brute(g, max_vertices=_guard(args, DEFAULT_BRUTE_GUARD))
    else:
        raise EdgeListParseError("count needs one of --graph, --product, or --grid")

    report = {
        "request": request,
        "method": result.method,
        "count": str(result.count),
        "violations": [],
    }
    lines = [f"method: {result.method}", f"count: {result.count}"]
    return _with_payload(report, lines), EXIT_OK


# ---------------------------------------------------------------------------
# orient
# ---------------------------------------------------------------------------

def _build_orientation(args: argparse.Namespace) -> tuple[OrientedGraph, str]:
    """(orientation, constructor tag) from --double/--c4/--layers flags."""
    chosen = [bool(args.double), bool(args.c4), args.layers is not None]
    if sum(chosen) != 1:
        raise EdgeListParseError("choose exactly one of --double, --c4, --layers M")
    if args.double:
        if args.graph is not None:
            g = parse_graph_spec(args.graph)
            base = (
                parse_oriented_edge_list(_read_text(args.orient_file))
                if args.orient_file
                else orient_lexicographic(g)
            )
            if base.base != g:
                raise PreconditionError("--orient-file does not orient the given graph")
        elif args.tree is not None:
            base = _base_orientation(validate_tree(parse_graph_spec(args.tree)), args)
        else:
            raise EdgeListParseError("--double needs --graph or --tree")
        return orient_double(base), "double"
    if args.tree is None:
        raise EdgeListParseError("--c4/--layers need --tree SPEC")
    tree = validate_tree(parse_graph_spec(args.tree))
    base = _base_orientation(tree, args)
    if args.c4:
        return orient_c4_tree(base), "c4-tree"
    return orient_layered(base, args.layers), f"layered:{args.layers}"


def cmd_orient(args: argparse.Namespace) -> tuple[dict, int]:
    request = {
        "command": "orient",
        "double": args.double,
        "c4": args.c4,
        "layers": args.layers,
        "graph": args.graph,
        "tree": args.tree,
        "orient_file": args.orient_file,
    }
    oriented, tag = _build_orientation(args)
    text = format_oriented_edge_list(
        oriented,
        comments=[
            f"orientation: {tag}",
            "vertex numbering is layer-major: copy index * copy size + vertex",
        ],
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    report = {
        "request": request,
        "method": tag,
        "count": None,
        "violations": [],
        "arcs": [f"{u} -> {v}" for u, v in sorted(oriented.arcs)],
    }
    lines = [text.rstrip("\n")] if not args.output else [f"wrote {args.output}"]
    return _with_payload(report, lines), EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> tuple[dict, int]:
    request = {
        "command": "verify",
        "pfaffian": args.pfaffian,
        "identities": args.identities,
        "double": args.double,
        "c4": args.c4,
        "layers": args.layers,
        "graph": args.graph,
        "tree": args.tree,
        "orient_file": args.orient_file,
        "max_vertices": args.max_vertices,
    }
    if args.pfaffian == args.identities:
        raise EdgeListParseError("choose exactly one of --pfaffian, --identities")

    if args.identities:
        if args.tree is None:
            raise EdgeListParseError("--identities needs --tree SPEC")
        tree = validate_tree(parse_graph_spec(args.tree))
        ident = verify_identities(tree, max_product_vertices=_guard(args, DEFAULT_BRUTE_GUARD))
        report = {
            "request": request,
            "method": "identities",
            "count": str(ident.c4_count),
            "violations": list(ident.failures),
        }
        lines = [
            f"tree vertices: {ident.tree_vertices}",
            f"count C4xT: {ident.c4_count} = {ident.factor} * {ident.root}^2",
        ]
        if ident.p3_count is not None:
            lines.append(f"count P3xT: {ident.p3_count} (squared: {ident.p3_count ** 2})")
        if ident.p4_count is not None:
            lines.append(f"count P4xT: {ident.p4_count}")
        lines.append(f"checks run: {', '.join(ident.checks)}")
        lines.append(f"verdict: {'pass' if ident.passed else 'FAIL ' + ', '.join(ident.failures)}")
        return _with_payload(report, lines), EXIT_OK if ident.passed else EXIT_VIOLATION

    if args.graph is not None and not (args.double or args.c4 or args.layers is not None):
        # explicit graph + orientation file, no constructor
        if not args.orient_file:
            raise EdgeListParseError("verify --pfaffian --graph needs --orient-file")
        g = parse_graph_spec(args.graph)
        oriented = parse_oriented_edge_list(_read_text(args.orient_file))
        if oriented.base != g:
            raise PreconditionError("--orient-file does not orient the given graph")
        tag = "file"
    else:
        oriented, tag = _build_orientation(args)
    result = check_pfaffian(oriented, max_vertices=_guard(args, DEFAULT_CYCLE_GUARD))
    report = {
        "request": request,
        "method": f"pfaffian-check:{tag}",
        "count": None,
        "violations": [list(c) for c in result.violations],
    }
    lines = [
        f"orientation: {tag}",
        f"nice even cycles: {result.nice_even_cycles}",
        f"verdict: {'pass' if result.passed else 'FAIL'}",
    ]
    for c in result.violations:
        lines.append("violation: " + "-".join(str(v) for v in c))
    return _with_payload(report, lines), EXIT_OK if result.passed else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# product
# ---------------------------------------------------------------------------

def cmd_product(args: argparse.Namespace) -> tuple[dict, int]:
    request = {"command": "product", "factors": [args.factor1, args.factor2]}
    g = parse_graph_spec(args.factor1)
    h = parse_graph_spec(args.factor2)
    product = cartesian_product(g, h)
    text = format_edge_list(
        product,
        comments=[
            f"cartesian product of {args.factor1} and {args.factor2}",
            f"vertex (i, j) of ({args.factor1}) x ({args.factor2}) is i*{h.n} + j (layer-major)",
        ],
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    report = {
        "request": request,
        "method": "cartesian-product",
        "count": None,
        "violations": [],
        "edges": [f"{u} {v}" for u, v in sorted(product.edges)],
        "vertices": product.n,
    }
    lines = [text.rstrip("\n")] if not args.output else [f"wrote {args.output}"]
    return _with_payload(report, lines), EXIT_OK


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

def _with_payload(report: dict, lines: list[str]) -> dict:
    report["_human_lines"] = lines
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfmatch",
        description="Exact perfect-matching counts for path/cycle-by-tree products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument(
            "--max-vertices",
            type=int,
            default=None,
            help=f"guard for exponential steps (default: ${GUARD_ENV_VAR} or built-in)",
        )

    count = sub.add_parser("count", help="count perfect matchings")
    count.add_argument("--graph", help="graph spec or edge-list file")
    count.add_argument("--product", help="product kind: c4, p2, p3, p4, or pm:M")
    count.add_argument("--tree", help="tree spec for --product")
    count.add_argument("--grid", nargs=2, type=int, metavar=("M", "N"), help="m x n grid")
    count.add_argument(
        "--method",
        choices=["auto", "brute", "pfaffian", "formula"],
        default="auto",
        help="auto prefers formula, then a proven orientation, then brute",
    )
    count.add_argument("--orient-file", help="oriented edge-list file (pfaffian method)")
    add_common(count)
    count.set_defaults(func=cmd_count)

    orient = sub.add_parser("orient", help="emit a constructed orientation")
    orient.add_argument("--double", action="store_true", help="two reversed copies plus rungs")
    orient.add_argument("--c4", action="store_true", help="the four-layer cyclic construction")
    orient.add_argument("--layers", type=int, help="M stacked alternating layers")
    orient.add_argument("--graph", help="base graph (for --double)")
    orient.add_argument("--tree", help="base tree spec")
    orient.add_argument("--orient-file", help="base orientation (default: lexicographic)")
    orient.add_argument("--output", help="write the oriented edge list here")
    add_common(orient)
    orient.set_defaults(func=cmd_orient)

    verify = sub.add_parser("verify", help="run the verification suites")
    verify.add_argument("--pfaffian", action="store_true", help="nice-even-cycle parity check")
    verify.add_argument("--identities", action="store_true", help="count identity cross-checks")
    verify.add_argument("--double", action="store_true")
    verify.add_argument("--c4", action="store_true")
    verify.add_argument("--layers", type=int)
    verify.add_argument("--graph", help="graph spec (with --orient-file)")
    verify.add_argument("--tree", help="tree spec")
    verify.add_argument("--orient-file", help="orientation to verify")
    add_common(verify)
    verify.set_defaults(func=cmd_verify)

    product = sub.add_parser("product", help="emit a Cartesian product edge list")
    product.add_argument("factor1", help="graph spec or file")
    product.add_argument("factor2", help="graph spec or file")
    product.add_argument("--output", help="write the edge list here")
    add_common(product)
    product.set_defaults(func=cmd_product)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report, code = args.func(args)
    except PfmatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    lines = report.pop("_human_lines")
    report["elapsed_ms"] = elapsed_ms
    if args.json:
        print(json.dumps(report))
    else:
        for line in lines:
            print(line)
        print(f"elapsed: {elapsed_ms:.1f} ms")
    return code


if __name__ == "__main__":
    sys.exit(main())
