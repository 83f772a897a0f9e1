"""Command-line interface.

One command per library operation, plus generators, oracles, a verification
suite and a benchmark harness.  Exit codes: 0 when a value was computed,
1 when a mathematical verdict is negative (the report carries the
certificate), 2 for usage or input errors.  Every report embeds the input
graph's signature hash and the tool version.
"""

from __future__ import annotations

import json
import statistics
import sys
import time

import click

from . import __version__
from .errors import (DisconnectedGraphError, NoSeparatorError,
                     NotTwoK2FreeError, SubclassError, TwoK2Error)
from .feedback import TAG_C3C4, TAG_C3C5, classify_subclass, fvs_c3c4, fvs_c3c5
from .generators import (enumerate_chain_graphs, enumerate_connected_graphs,
                         gen_2k2_free_rejection, gen_chain_graph,
                         gen_split_graph)
from .graph import (Graph, components_after_removal, graph_predicates,
                    parse_dimacs, parse_graph, serialize)
from .independent_sets import (enumerate_mis, max_independent_set,
                               min_vertex_cover, three_color)
from .oracles import (oracle_min_connected_separator, oracle_min_fvs,
                      oracle_minimal_separators, oracle_mis,
                      oracle_three_color)
from .recognition import (find_2k2_pair, find_forbidden_subgraph,
                          min_degree_separator, test_2k2_structural)
from .separators import (enumerate_mvs, min_clique_separator,
                         min_connected_separator, min_stable_separator)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _load_graph(path: str, fmt: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_dimacs(text) if fmt == "dimacs" else parse_graph(text)


def _render_text(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_render_text(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        if not value:
            return f"{pad}[]"
        lines = []
        for v in value:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines.append(_render_text(v, indent + 1))
            elif isinstance(v, list):
                lines.append(f"{pad}- [{', '.join(str(x) for x in v)}]")
            else:
                lines.append(f"{pad}- {v}")
        return "\n".join(lines)
    return str(value)


def _emit(report: dict, output: str) -> None:
    if output == "json":
        click.echo(json.dumps(report, indent=2))
    else:
        click.echo(_render_text(report))


def _report(graph: Graph, command: str, payload: dict) -> dict:
    return {
        "tool_version": __version__,
        "command": command,
        "graph": {"n": graph.n, "m": graph.m, "signature": graph.signature()},
        **payload,
    }


def _run(ctx, graph: Graph, output: str, command: str, handler) -> None:
    """Run a single-graph handler, emit its report and exit accordingly."""
    try:
        code, payload = handler(graph)
    except (NotTwoK2FreeError,) as exc:
        w = exc.witness
        payload = {"verdict": "not-2K2-free",
                   "witness": [w.a, w.b, w.c, w.d] if w else None,
                   "error": str(exc)}
        _emit(_report(graph, command, payload), output)
        ctx.exit(EXIT_NEGATIVE)
        return
    except (DisconnectedGraphError, NoSeparatorError, SubclassError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(EXIT_USAGE)
        return
    _emit(_report(graph, command, payload), output)
    ctx.exit(code)


def _per_component(ctx, graph: Graph, output: str, command: str,
                   handler) -> None:
    split = components_after_removal(graph, ())
    reports = []
    worst = EXIT_OK
    for comp in split.components:
        sub, ids = graph.induced(comp)
        try:
            code, payload = handler(sub)
        except (DisconnectedGraphError, NoSeparatorError, SubclassError,
                NotTwoK2FreeError) as exc:
            code, payload = EXIT_USAGE, {"error": str(exc)}
        reports.append({"component_vertices": list(ids), **payload})
        worst = max(worst, code)
    _emit(_report(graph, command, {"per_component": reports}), output)
    ctx.exit(worst)


def _dispatch(ctx, path, fmt, output, command, handler, per_component=False):
    try:
        graph = _load_graph(path, fmt)
    except (TwoK2Error, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(EXIT_USAGE)
        return
    if per_component:
        _per_component(ctx, graph, output, command, handler)
    else:
        _run(ctx, graph, output, command, handler)


def _common_options(fn):
    fn = click.argument("path", default="-")(fn)
    fn = click.option("--format", "fmt",
                      type=click.Choice(["edgelist", "dimacs"]),
                      default="edgelist", show_default=True)(fn)
    fn = click.option("--output", type=click.Choice(["json", "text"]),
                      default="text", show_default=True)(fn)
    fn = click.option("--per-component", is_flag=True,
                      help="Run on each connected component separately.")(fn)
    return fn


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Algorithms for 2K2-free graphs, with certificates and oracles."""


@main.command()
@_common_options
@click.pass_context
def recognize(ctx, path, fmt, output, per_component):
    """Decide 2K2-freeness; negative verdicts carry 2K2 and H1/H2/H3 witnesses."""

    def handler(graph: Graph):
        result = test_2k2_structural(graph)
        payload = {
            "verdict": "2K2-free" if result.is_2k2_free else "not-2K2-free",
            "trace": [{"separator": list(t.separator),
                       "condition": t.condition, "verdict": t.verdict}
                      for t in result.trace],
        }
        if result.is_2k2_free:
            return EXIT_OK, payload
        w = result.witness
        payload["witness"] = [w.a, w.b, w.c, w.d]
        forb = find_forbidden_subgraph(graph)
        payload["forbidden_subgraph"] = {
            "kind": forb.kind, "vertices": list(forb.vertices)}
        return EXIT_NEGATIVE, payload

    _dispatch(ctx, path, fmt, output, "recognize", handler, per_component)


def _record_payload(record) -> dict:
    return {
        "vertices": list(record.vertices),
        "component_count": record.component_count,
        "connected": record.connected,
        "stable": record.stable,
        "clique": record.clique,
        "source_vertices": list(record.source_vertices),
    }


@main.command()
@_common_options
@click.pass_context
def separators(ctx, path, fmt, output, per_component):
    """Enumerate all minimal vertex separators of a 2K2-free graph."""

    def handler(graph: Graph):
        records = enumerate_mvs(graph)
        return EXIT_OK, {"count": len(records),
                         "separators": [_record_payload(r) for r in records]}

    _dispatch(ctx, path, fmt, output, "separators", handler, per_component)


@main.command("min-connected-separator")
@_common_options
@click.option("--mode", type=click.Choice(["paper", "exhaustive"]),
              default="paper", show_default=True)
@click.pass_context
def min_connected_separator_cmd(ctx, path, fmt, output, per_component, mode):
    """Minimum connected vertex separator, or a proof of absence."""

    def handler(graph: Graph):
        answer = min_connected_separator(graph, mode=mode)
        if not answer.exists:
            return EXIT_NEGATIVE, {"exists": False, "mode": mode}
        return EXIT_OK, {"exists": True, "vertices": list(answer.vertices),
                         "cardinality": answer.cardinality,
                         "provenance": answer.provenance, "mode": mode}

    _dispatch(ctx, path, fmt, output, "min-connected-separator", handler,
              per_component)


def _constrained_separator_cmd(name, finder, doc):
    @main.command(name)
    @_common_options
    @click.pass_context
    def cmd(ctx, path, fmt, output, per_component):
        def handler(graph: Graph):
            record = finder(graph)
            if record is None:
                return EXIT_NEGATIVE, {"exists": False}
            return EXIT_OK, {"exists": True, **_record_payload(record)}

        _dispatch(ctx, path, fmt, output, name, handler, per_component)

    cmd.__doc__ = doc
    cmd.help = doc
    return cmd


_constrained_separator_cmd(
    "min-stable-separator", min_stable_separator,
    "Minimum stable (independent) minimal vertex separator, if any.")
_constrained_separator_cmd(
    "min-clique-separator", min_clique_separator,
    "Minimum clique minimal vertex separator, if any.")


@main.command()
@_common_options
@click.pass_context
def mis(ctx, path, fmt, output, per_component):
    """Enumerate all maximal independent sets of a 2K2-free graph."""

    def handler(graph: Graph):
        collection = enumerate_mis(graph)
        return EXIT_OK, {"count": len(collection.sets),
                         "sets": [list(s) for s in collection.sets]}

    _dispatch(ctx, path, fmt, output, "mis", handler, per_component)


@main.command("max-is")
@_common_options
@click.pass_context
def max_is(ctx, path, fmt, output, per_component):
    """Maximum independent set."""

    def handler(graph: Graph):
        s = max_independent_set(graph)
        return EXIT_OK, {"vertices": list(s), "cardinality": len(s)}

    _dispatch(ctx, path, fmt, output, "max-is", handler, per_component)


@main.command("min-vc")
@_common_options
@click.pass_context
def min_vc(ctx, path, fmt, output, per_component):
    """Minimum vertex cover (complement of the maximum independent set)."""

    def handler(graph: Graph):
        s = min_vertex_cover(graph)
        return EXIT_OK, {"vertices": list(s), "cardinality": len(s)}

    _dispatch(ctx, path, fmt, output, "min-vc", handler, per_component)


@main.command("three-color")
@_common_options
@click.pass_context
def three_color_cmd(ctx, path, fmt, output, per_component):
    """Decide 3-colorability via maximal independent set color classes."""

    def handler(graph: Graph):
        result = three_color(graph)
        payload = {"verdict": result.chromatic_verdict}
        if result.coloring is not None:
            payload["coloring"] = {str(v): c
                                   for v, c in sorted(result.coloring.items())}
        if result.certificate_mis is not None:
            payload["certificate_mis"] = list(result.certificate_mis)
        code = EXIT_OK if result.coloring is not None else EXIT_NEGATIVE
        return code, payload

    _dispatch(ctx, path, fmt, output, "three-color", handler, per_component)


@main.command()
@_common_options
@click.option("--subclass", "forced",
              type=click.Choice(["c3c4", "c3c5"]), default=None,
              help="Force a branch instead of auto-classifying.")
@click.pass_context
def fvs(ctx, path, fmt, output, per_component, forced):
    """Minimum feedback vertex set for the triangle-free subclasses."""

    def handler(graph: Graph):
        if forced == "c3c4":
            result = fvs_c3c4(graph)
        elif forced == "c3c5":
            result = fvs_c3c5(graph)
        else:
            tag = classify_subclass(graph)
            if tag.value == TAG_C3C4:
                result = fvs_c3c4(graph)
            elif tag.value == TAG_C3C5:
                result = fvs_c3c5(graph)
            else:
                raise SubclassError(
                    f"graph is {tag.value}; no closed feedback formula applies")
        return EXIT_OK, {
            "cardinality": result.cardinality,
            "vertices": list(result.vertices),
            "case_tag": result.case_tag,
            "ingredients": {k: list(v) for k, v in result.ingredients.items()},
        }

    _dispatch(ctx, path, fmt, output, "fvs", handler, per_component)


@main.command()
@click.option("--family", type=click.Choice(["split", "rejection",
                                             "exhaustive", "chain"]),
              required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--clique-fraction", type=float, default=0.5, show_default=True)
@click.option("--p-cross", type=float, default=0.5, show_default=True)
@click.option("--p", type=float, default=0.9, show_default=True)
@click.option("--max-level", type=int, default=None,
              help="Neighborhood size cap for chain graphs.")
@click.option("--two-k2-free", is_flag=True,
              help="Filter the exhaustive family to 2K2-free graphs.")
@click.option("--limit", type=int, default=None,
              help="Stop the exhaustive stream after this many graphs.")
@click.pass_context
def generate(ctx, family, n, seed, clique_fraction, p_cross, p, max_level,
             two_k2_free, limit):
    """Write edge-list documents for the test families to stdout."""
    try:
        if family == "split":
            click.echo(serialize(gen_split_graph(n, clique_fraction, p_cross,
                                                 seed)), nl=False)
        elif family == "rejection":
            graph = gen_2k2_free_rejection(n, p, seed)
            if graph is None:
                click.echo("error: no 2K2-free draw found", err=True)
                ctx.exit(EXIT_NEGATIVE)
                return
            click.echo(serialize(graph), nl=False)
        elif family == "chain":
            click.echo(serialize(gen_chain_graph(n, seed, max_level)),
                       nl=False)
        else:
            count = 0
            for graph in enumerate_connected_graphs(n,
                                                    two_k2_free=two_k2_free):
                click.echo(serialize(graph), nl=False)
                click.echo()
                count += 1
                if limit is not None and count >= limit:
                    break
    except TwoK2Error as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(EXIT_USAGE)


@main.command()
@click.argument("which", type=click.Choice(["minimal-separators", "mis",
                                            "min-fvs",
                                            "min-connected-separator",
                                            "three-color"]))
@_common_options
@click.pass_context
def oracle(ctx, which, path, fmt, output, per_component):
    """Run a brute-force reference implementation for cross-checking."""

    def handler(graph: Graph):
        if which == "minimal-separators":
            seps = oracle_minimal_separators(graph)
            return EXIT_OK, {"separators": [list(s) for s in seps]}
        if which == "mis":
            sets = oracle_mis(graph)
            return EXIT_OK, {"sets": [list(s) for s in sets]}
        if which == "min-fvs":
            s = oracle_min_fvs(graph)
            return EXIT_OK, {"vertices": list(s), "cardinality": len(s)}
        if which == "min-connected-separator":
            s = oracle_min_connected_separator(graph)
            if s is None:
                return EXIT_NEGATIVE, {"exists": False}
            return EXIT_OK, {"exists": True, "vertices": list(s)}
        coloring = oracle_three_color(graph)
        if coloring is None:
            return EXIT_NEGATIVE, {"verdict": "not-3-colorable"}
        return EXIT_OK, {"verdict": "3-colorable", "coloring": coloring}

    _dispatch(ctx, path, fmt, output, f"oracle {which}", handler,
              per_component)


@main.command()
@click.option("--suite", type=click.Choice(["all", "recognition",
                                            "separators", "mis", "fvs"]),
              default="all", show_default=True)
@click.option("--max-n", type=int, default=6, show_default=True)
@click.option("--output", type=click.Choice(["json", "text"]),
              default="text", show_default=True)
@click.pass_context
def verify(ctx, suite, max_n, output):
    """Compare the structural algorithms against the brute-force oracles."""
    findings: list[dict] = []
    counts: dict[str, int] = {}

    def check(name: str, graph: Graph, ok: bool, detail: str = "") -> None:
        counts[name] = counts.get(name, 0) + 1
        if not ok:
            findings.append({"suite": name, "detail": detail,
                             "graph": serialize(graph)})

    for n in range(1, max_n + 1):
        for graph in enumerate_connected_graphs(n):
            free = find_2k2_pair(graph) is None
            if suite in ("all", "recognition"):
                check("recognition", graph,
                      test_2k2_structural(graph).is_2k2_free == free)
                check("forbidden-subgraph", graph,
                      (find_forbidden_subgraph(graph) is None) == free)
            if not free or graph.m == graph.n * (graph.n - 1) // 2:
                continue
            if suite in ("all", "separators"):
                mine = [r.vertices for r in enumerate_mvs(graph)]
                check("separators", graph,
                      mine == oracle_minimal_separators(graph))
                check("min-degree-separator", graph,
                      min_degree_separator(graph)
                      in oracle_minimal_separators(graph))
            if suite in ("all", "mis"):
                check("mis", graph,
                      list(enumerate_mis(graph).sets) == oracle_mis(graph))
    if suite in ("all", "fvs"):
        for n in range(1, min(max_n, 9) + 1):
            for graph in enumerate_chain_graphs(n):
                if graph_predicates(graph)["acyclic"]:
                    continue
                check("fvs", graph,
                      fvs_c3c5(graph).cardinality
                      == len(oracle_min_fvs(graph)))

    report = {"tool_version": __version__, "suite": suite, "max_n": max_n,
              "checked": counts, "disagreements": findings}
    _emit(report, output)
    ctx.exit(EXIT_OK if not findings else EXIT_NEGATIVE)


_BENCH_TARGETS = ["enumerate_mvs", "test_2k2_structural",
                  "min_connected_separator", "enumerate_mis", "fvs_c3c5"]


@main.command()
@click.option("--target", type=click.Choice(_BENCH_TARGETS), required=True)
@click.option("--sizes", default="100,200,400", show_default=True,
              help="Comma-separated list of n values.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--runs", type=int, default=5, show_default=True)
@click.option("--output", type=click.Choice(["json", "text"]),
              default="text", show_default=True)
@click.pass_context
def bench(ctx, target, sizes, seed, runs, output):
    """Median wall time per size plus a doubling-ratio column (advisory)."""
    try:
        size_list = [int(s) for s in sizes.split(",") if s]
    except ValueError:
        click.echo("error: --sizes must be comma-separated integers", err=True)
        ctx.exit(EXIT_USAGE)
        return

    def instance(n: int) -> Graph:
        if target == "fvs_c3c5":
            return gen_chain_graph(n, seed, max_level=3)
        return gen_split_graph(n, 0.5, 0.5, seed)

    def call(graph: Graph):
        if target == "enumerate_mvs":
            return enumerate_mvs(graph, check=False, verify=False)
        if target == "test_2k2_structural":
            return test_2k2_structural(graph)
        if target == "min_connected_separator":
            return min_connected_separator(graph)
        if target == "enumerate_mis":
            return enumerate_mis(graph, check=False)
        return fvs_c3c5(graph, check=False)

    rows = []
    prev = None
    for n in size_list:
        graph = instance(n)
        times = []
        for _ in range(max(5, runs)):
            start = time.perf_counter()
            call(graph)
            times.append(time.perf_counter() - start)
        med = statistics.median(times)
        ratio = None if prev is None or prev == 0 else round(med / prev, 2)
        rows.append({"n": n, "median_s": round(med, 6),
                     "doubling_ratio": ratio})
        prev = med
    _emit({"tool_version": __version__, "target": target, "runs": runs,
           "rows": rows}, output)
    ctx.exit(EXIT_OK)


if __name__ == "__main__":
    main()
