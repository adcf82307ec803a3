"""
Command-line front end.

    chevlab verify --phi B2 --ring Z/5
    chevlab k2 --phi A2 --ring Z/4 --out k2.json
    chevlab bigcell --phi A2 --ring F2 --element "0,1,0; 1,0,0; 0,0,1"
    chevlab words --phi A2 --ring Z/4 --source Z/8 --images 1
    chevlab suite

Each command emits one JSON report (stdout or --out) and exits 0 iff every
check passed. A JSON file given with --config overrides the flags.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from chevlab import __version__
from chevlab.algebra.finring import split_top_level
from chevlab.config import settings
from chevlab.runner.models import Command, Report, RunConfig, SubgroupStrategy
from chevlab.runner.orchestrator import SuiteOrchestrator

logger = logging.getLogger("chevlab.cli")

_orchestrator: Optional[SuiteOrchestrator] = None


def orchestrator() -> SuiteOrchestrator:
    global _orchestrator
    if _orchestrator is None:
        _orchestrator = SuiteOrchestrator()
    return _orchestrator


# ── commands ─────────────────────────────────────────────

def _run(command: Command, config: RunConfig) -> Report:
    return orchestrator().run(config.model_copy(update={"command": command}))


def cmd_ring_info(config: RunConfig) -> Report:
    return _run(Command.RING_INFO, config)


def cmd_verify(config: RunConfig) -> Report:
    return _run(Command.VERIFY, config)


def cmd_k2(config: RunConfig) -> Report:
    return _run(Command.K2, config)


def cmd_bigcell(config: RunConfig, element: Optional[List[List[str]]] = None) -> Report:
    if element is not None:
        config = config.model_copy(update={"element": element})
    return _run(Command.BIGCELL, config)


def cmd_enumerate(config: RunConfig) -> Report:
    return _run(Command.ENUMERATE, config)


def cmd_words(config: RunConfig) -> Report:
    return _run(Command.WORDS, config)


def cmd_filtration(config: RunConfig) -> Report:
    return _run(Command.FILTRATION, config)


def cmd_suite(config: RunConfig) -> Report:
    return _run(Command.SUITE, config)


COMMANDS = {
    Command.RING_INFO: cmd_ring_info,
    Command.VERIFY: cmd_verify,
    Command.K2: cmd_k2,
    Command.BIGCELL: cmd_bigcell,
    Command.ENUMERATE: cmd_enumerate,
    Command.WORDS: cmd_words,
    Command.FILTRATION: cmd_filtration,
    Command.SUITE: cmd_suite,
}


# ── argument parsing ─────────────────────────────────────

def parse_matrix(text: str) -> List[List[str]]:
    """Rows separated by ';', entries by top-level commas."""
    return [split_top_level(row) for row in text.split(";") if row.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="Z/5", help="ring spec, e.g. Z/12, F3[x]/(x^2), Z/4 x Z/3")
    common.add_argument("--phi", default="A2", help="root system, e.g. A2, B2, G2")
    common.add_argument("--budget-cosets", type=int, default=settings.budget_cosets)
    common.add_argument("--budget-bfs", type=int, default=settings.budget_bfs)
    common.add_argument("--seed", type=int, default=settings.seed)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--config", help="JSON run config; its values override flags")

    parser = argparse.ArgumentParser(prog="chevlab", description="Exact Chevalley group computations.")
    parser.add_argument("--version", action="version", version=f"chevlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("ring-info", parents=[common], help="units, ideals, radical, local factors")
    sub.add_parser("verify", parents=[common], help="Steinberg relations in the matrix group")

    k2 = sub.add_parser("k2", parents=[common], help="|St|, K2 and Steinberg symbols")
    k2.add_argument("--subgroup", choices=[s.value for s in SubgroupStrategy], default="unipotent")
    k2.add_argument("--no-symbols", action="store_true", help="skip the symbol generation check")
    k2.add_argument("--dump", help="path prefix for presentation and coset-table text files")

    bigcell = sub.add_parser("bigcell", parents=[common], help="big-cell factorization or census")
    bigcell.add_argument("--element", type=parse_matrix, help='matrix rows, e.g. "1,1,0; 0,1,0; 0,0,1"')

    sub.add_parser("enumerate", parents=[common], help="order of G(R)⁺")

    words = sub.add_parser("words", parents=[common], help="ring reconstruction from word maps")
    words.add_argument("--source", help="source ring of the homomorphism (default: --ring)")
    words.add_argument("--images", type=split_top_level, help="images of the source generators")

    filtration = sub.add_parser("filtration", parents=[common], help="congruence filtration")
    filtration.add_argument("--level", type=int, default=1)
    filtration.add_argument("--s", type=int, default=1)
    filtration.add_argument("--t", type=int, default=1)
    filtration.add_argument("--samples", type=int, default=settings.sample_pairs)
    filtration.add_argument("--equivariance-samples", type=int, default=settings.equivariance_samples)
    filtration.add_argument("--levi", action="store_true", help="also check the Levi decomposition")

    sub.add_parser("suite", parents=[common], help="every acceptance instance, one combined report")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {
        "command": args.command,
        "ring": args.ring,
        "phi": args.phi,
        "budget_cosets": args.budget_cosets,
        "budget_bfs": args.budget_bfs,
        "seed": args.seed,
        "out": args.out,
    }
    optional = {
        "subgroup": "subgroup", "dump": "dump", "element": "element", "source": "source_ring",
        "images": "images", "level": "level", "s": "s", "t": "t", "samples": "sample_pairs",
        "equivariance_samples": "equivariance_samples", "levi": "levi",
    }
    for flag, field in optional.items():
        value = getattr(args, flag, None)
        if value is not None:
            values[field] = value
    if getattr(args, "no_symbols", False):
        values["symbols"] = False
    if args.config:
        values.update(json.loads(Path(args.config).read_text()))
        values["command"] = args.command
    return RunConfig.model_validate(values)


def emit(report: Report, out: Optional[str]) -> None:
    text = report.to_json()
    if out:
        Path(out).write_text(text + "\n")
        logger.info(f"💾 report written to {out}")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s │ %(name)-20s │ %(levelname)-7s │ %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except (ValidationError, ValueError, OSError) as e:
        logger.error(f"❌ invalid run configuration: {e}")
        return 2
    report = COMMANDS[config.command](config)
    emit(report, config.out)
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
