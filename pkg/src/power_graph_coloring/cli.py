import argparse
from collections.abc import Sequence
import logging
from pathlib import Path
import sys
from typing import Literal

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from power_graph_coloring.__about__ import __version__
from power_graph_coloring.algebra.generators import generate
from power_graph_coloring.algebra.magma import check_power_associativity
from power_graph_coloring.config import Limits
from power_graph_coloring.engine import PowerGraphEngine
from power_graph_coloring.exceptions import PowerGraphError
from power_graph_coloring.formats.cayley import CayleyFormat, serialize_magma, serialize_magma_json, write_magma
from power_graph_coloring.formats.dot import export_dot
from power_graph_coloring.graph.coloring import color_finite
from power_graph_coloring.graph.power_graph import build_power_graph
from power_graph_coloring.models.family import FamilySpec
from power_graph_coloring.models.magma import Magma
from power_graph_coloring.models.report import AnalysisReport, ClaimVerdict, Verdict
from power_graph_coloring.models.window import Window
from power_graph_coloring.symbolic.families import family_from_name
from power_graph_coloring.utils.logging import get_logger, set_log_level

logger = get_logger(__name__)

ExitCode = Literal[0, 1, 2]

# Reports, tables and DOT text; diagnostics use the logger's stderr console
stdout = Console()

_VERDICT_STYLE = {Verdict.PASS: "green", Verdict.FAIL: "bold red", Verdict.SKIPPED: "yellow"}


def _engine(args: argparse.Namespace) -> PowerGraphEngine:
    limits = Limits.from_env(
        exact_chi_limit=getattr(args, "exact_limit", None),
        workers=getattr(args, "workers", None),
    )
    return PowerGraphEngine(limits=limits)


def _load(engine: PowerGraphEngine, source: str) -> Magma | None:
    """Resolve a SOURCE argument; ``None`` means the source is unusable (exit code 2)."""
    try:
        return engine.load(source)
    except (OSError, PowerGraphError) as exc:
        logger.error(f"Cannot load {source!r}: {exc}")
        return None


def _claims_table(title: str, claims: list[ClaimVerdict]) -> Table:
    table = Table(title=title)
    table.add_column("Claim", style="cyan")
    table.add_column("Verdict")
    table.add_column("Detail", overflow="fold")
    for claim in claims:
        style = _VERDICT_STYLE[claim.verdict]
        table.add_row(claim.claim, f"[{style}]{claim.verdict.value}[/{style}]", claim.detail or "")
    return table


def setup_gen_command(subparsers) -> None:
    """Setup the gen command."""
    parser = subparsers.add_parser("gen", help="Write the Cayley table of a family member")
    parser.add_argument(
        "spec", type=str, help="Family expression, e.g. 'monogenic(3,2)' or 'product(cyclic(2),quaternion8)'"
    )
    parser.add_argument("-o", "--output", type=str, help="Output file (default: standard output)")
    parser.add_argument(
        "--format",
        type=str,
        choices=[fmt.value for fmt in CayleyFormat],
        help="Cayley format; defaults to the output suffix ('.json' selects json), text on standard output",
    )
    parser.set_defaults(func=run_gen)


def run_gen(args) -> ExitCode:
    """Run the gen command."""
    limits = _engine(args).limits
    try:
        spec = FamilySpec.parse(args.spec)
        magma = generate(spec, limits.max_magma_size)
    except (OSError, PowerGraphError) as exc:
        logger.error(f"Invalid family expression {args.spec!r}: {exc}")
        return 2
    try:
        fmt = CayleyFormat(args.format) if args.format else None
        if args.output:
            path = write_magma(magma, Path(args.output), fmt)
            logger.info(f"Wrote {spec.label} ({magma.size} elements) to {path}")
        else:
            print(serialize_magma_json(magma) if fmt == CayleyFormat.JSON else serialize_magma(magma), end="")
    except Exception:
        logger.exception("Error generating the Cayley table")
        return 1
    else:
        return 0


def setup_analyze_command(subparsers) -> None:
    """Setup the analyze command."""
    parser = subparsers.add_parser("analyze", help="Profile, color and verify one magma (JSON report)")
    parser.add_argument("source", type=str, help="Cayley file or family expression")
    parser.add_argument("--exact-limit", type=int, help="Largest graph for the exact chromatic number")
    parser.set_defaults(func=run_analyze)


def run_analyze(args) -> ExitCode:
    """Run the analyze command."""
    engine = _engine(args)
    magma = _load(engine, args.source)
    if magma is None:
        return 2
    try:
        report = engine.analyze(magma)
        print(report.model_dump_json(indent=2))
    except Exception:
        logger.exception("Error during analysis")
        return 1
    else:
        return 0 if report.ok else 1


def setup_color_command(subparsers) -> None:
    """Setup the color command."""
    parser = subparsers.add_parser("color", help="Show the A/B coloring of a finite magma")
    parser.add_argument("source", type=str, help="Cayley file or family expression")
    parser.add_argument("--json", action="store_true", help="Print the coloring as JSON instead of a table")
    parser.set_defaults(func=run_color)


def run_color(args) -> ExitCode:
    """Run the color command."""
    engine = _engine(args)
    magma = _load(engine, args.source)
    if magma is None:
        return 2
    try:
        associativity = check_power_associativity(magma)
        if not associativity:
            logger.error(f"Not power-associative, witness (g, a, b) = {associativity.witness}")
            return 1
        coloring = color_finite(magma)
        if args.json:
            stdout.print_json(data={magma.name(g): str(tag) for g, tag in coloring.assignment.items()})
            return 0
        table = Table(title=f"{magma.metadata or 'magma'}: {coloring.palette_size} colors")
        table.add_column("Element", style="cyan")
        table.add_column("Order", justify="right")
        table.add_column("Index", justify="right")
        table.add_column("Period", justify="right")
        table.add_column("Color", style="magenta")
        for profile in magma.profiles:
            g = profile.element
            table.add_row(
                magma.name(g), str(profile.order), str(profile.index_m), str(profile.period_r), str(coloring[g])
            )
        stdout.print(table)
    except Exception:
        logger.exception("Error while coloring")
        return 1
    else:
        return 0


def setup_verify_command(subparsers) -> None:
    """Setup the verify command."""
    parser = subparsers.add_parser(
        "verify",
        help="Run the claim suite on one magma or on the default corpus",
        description="Exit code 0 means no claim failed; skipped claims count as success.",
    )
    parser.add_argument("source", type=str, nargs="?", help="Cayley file or family expression")
    parser.add_argument("--corpus", action="store_true", help="Verify the default corpus instead of one source")
    parser.add_argument("--workers", type=int, help="Worker processes for corpus verification")
    parser.add_argument("--exact-limit", type=int, help="Largest graph for the exact chromatic number")
    parser.set_defaults(func=run_verify)


def _print_corpus(reports: list[AnalysisReport]) -> None:
    table = Table(title="Corpus verification")
    table.add_column("Magma", style="cyan")
    table.add_column("Size", justify="right")
    table.add_column("Palette", justify="right")
    table.add_column("Chi", justify="right")
    table.add_column("Result")
    for report in reports:
        chi = report.chromatic.exact if report.chromatic and report.chromatic.exact is not None else "-"
        failed = [c.claim for c in report.claims if c.verdict == Verdict.FAIL]
        result = "[green]pass[/green]" if report.ok else f"[bold red]fail: {', '.join(failed)}[/bold red]"
        table.add_row(str(report.magma.metadata), str(report.magma.size), str(report.palette_size), str(chi), result)
    stdout.print(table)


def run_verify(args) -> ExitCode:
    """Run the verify command."""
    if args.corpus == bool(args.source):
        logger.error("verify needs exactly one of SOURCE or --corpus")
        return 2
    engine = _engine(args)
    try:
        if args.corpus:
            logger.print(Panel("[bold green]Verifying the default corpus[/bold green]", expand=False))
            corpus = engine.verify_corpus()
            _print_corpus(corpus.reports)
            logger.info(f"{len(corpus.reports) - len(corpus.failures)}/{len(corpus.reports)} magmas passed")
            return 0 if corpus.ok else 1

        magma = _load(engine, args.source)
        if magma is None:
            return 2
        report = engine.analyze(magma)
        stdout.print(_claims_table(f"Claims for {magma.metadata or args.source}", report.claims))
        if report.violations:
            logger.error(f"Improperly colored edges: {report.violations}")
    except Exception:
        logger.exception("Error during verification")
        return 1
    else:
        return 0 if report.ok else 1


def setup_chi_command(subparsers) -> None:
    """Setup the chi command."""
    parser = subparsers.add_parser("chi", help="Chromatic number of the power graph")
    parser.add_argument("source", type=str, help="Cayley file or family expression")
    parser.add_argument("--exact-limit", type=int, help="Largest graph for the exact chromatic number")
    parser.set_defaults(func=run_chi)


def run_chi(args) -> ExitCode:
    """Run the chi command; prints ``chi`` or ``lower..upper`` when the exact limit is exceeded."""
    engine = _engine(args)
    magma = _load(engine, args.source)
    if magma is None:
        return 2
    try:
        summary, _ = engine.chromatic_summary(build_power_graph(magma))
        print(summary.exact if summary.exact is not None else f"{summary.lower}..{summary.upper}")
    except Exception:
        logger.exception("Error computing the chromatic number")
        return 1
    else:
        return 0


def setup_window_command(subparsers) -> None:
    """Setup the window command."""
    parser = subparsers.add_parser("window", help="Color a symbolic infinite family inside a finite window")
    parser.add_argument("--family", type=str, required=True, help="Z, ZxZk:K (e.g. ZxZk:2) or FreeMono")
    parser.add_argument("--W", dest="w", type=int, help="Coordinate bound (default: POWER_GRAPH_WINDOW_W or 50)")
    parser.add_argument("--E", dest="e", type=int, help="Exponent bound (default: POWER_GRAPH_WINDOW_E or 24)")
    parser.add_argument("--pair-bound", type=int, help="Fail when a relation color needs m or n above this bound")
    parser.set_defaults(func=run_window)


def run_window(args) -> ExitCode:
    """Run the window command."""
    try:
        family = family_from_name(args.family)
    except PowerGraphError as exc:
        logger.error(str(exc))
        return 2
    try:
        limits = Limits.from_env(window_w=args.w, window_e=args.e)
        window = Window(w=limits.window_w, e=limits.window_e, pair_bound=args.pair_bound)
        report = PowerGraphEngine(limits=limits).analyze_window(family, window)
        print(report.model_dump_json(indent=2))
        for split in report.splits:
            logger.warning(f"Component {split.component_key} splits into {len(split.pieces)} pieces in this window")
    except Exception:
        logger.exception("Error during window analysis")
        return 1
    else:
        return 0 if report.ok else 1


def setup_export_dot_command(subparsers) -> None:
    """Setup the export-dot command."""
    parser = subparsers.add_parser("export-dot", help="Write the power graph in Graphviz DOT")
    parser.add_argument("source", type=str, help="Cayley file or family expression")
    parser.add_argument("--directed", action="store_true", help="Write the directed power graph D(G)")
    parser.add_argument("--color", action="store_true", help="Attach the A/B color of every vertex")
    parser.add_argument("-o", "--output", type=str, help="Output file (default: standard output)")
    parser.set_defaults(func=run_export_dot)


def run_export_dot(args) -> ExitCode:
    """Run the export-dot command."""
    engine = _engine(args)
    magma = _load(engine, args.source)
    if magma is None:
        return 2
    try:
        graph = build_power_graph(magma)
        coloring = color_finite(magma, graph) if args.color else None
        text = export_dot(graph, coloring, directed=args.directed, names=magma.names)
        if args.output:
            path = Path(args.output)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            logger.info(f"Wrote {path}")
        else:
            print(text, end="")
    except Exception:
        logger.exception("Error exporting DOT")
        return 1
    else:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="power-graph-coloring", description=f"power-graph-coloring v{__version__}")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    setup_gen_command(subparsers)
    setup_analyze_command(subparsers)
    setup_color_command(subparsers)
    setup_verify_command(subparsers)
    setup_chi_command(subparsers)
    setup_window_command(subparsers)
    setup_export_dot_command(subparsers)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and run the selected command.

    Returns:
        0 on success, 1 on a failed claim or analysis error, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help and --version exit with 0, argparse usage errors with 2
        return exc.code if isinstance(exc.code, int) else 2

    if args.verbose:
        set_log_level(logging.DEBUG)

    if not args.command:
        logger.print(Text(f"power-graph-coloring v{__version__}", style="bold blue"))
        logger.print("\nAvailable commands:")
        logger.print("  gen        - Write the Cayley table of a family member")
        logger.print("  analyze    - Profile, color and verify one magma")
        logger.print("  color      - Show the A/B coloring")
        logger.print("  verify     - Run the claim suite on one magma or the corpus")
        logger.print("  chi        - Chromatic number of the power graph")
        logger.print("  window     - Color a symbolic infinite family inside a window")
        logger.print("  export-dot - Write the power graph in Graphviz DOT")
        logger.print("Use 'power-graph-coloring <command> --help' for more information about a command.")
        return 0

    try:
        return args.func(args)
    except PowerGraphError as exc:
        # Invalid limits from the environment surface here
        logger.error(str(exc))
        return 1


def main() -> int:
    """Main entry point for the CLI."""
    return run_cli()


if __name__ == "__main__":
    sys.exit(main())
