"""
Command-line front end: `region`, `simulate` and `verify`
"""
import argparse
import sys
from typing import List, Optional

from src.cli.commands import COMMANDS
from src.cli.config import CURVES, SUITES, build_config
from src.exceptions import ConfigError, FeedbackError, RegionError, SimulationError
from src.monitoring import record_error
from src.montecarlo.schemes import SCHEMES
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _snr_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of dB values: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stia", description="STIA broadcast channel simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="key = value file, flags override it")
    common.add_argument("--K", type=int, default=None)
    common.add_argument("--n", type=int, default=None, help="STIA sets of the composite schedule")
    common.add_argument("--out", type=str, default=None)
    common.add_argument("--format", type=str, default=None, choices=["csv", "json"])
    common.add_argument("--no-timestamp", dest="timestamp", action="store_false", default=None)

    region = sub.add_parser("region", parents=[common], help="sample an exact DoF curve")
    region.add_argument("--curve", type=str, default=None, choices=list(CURVES))
    region.add_argument("--grid", type=str, default=None, help="sampling step, e.g. 0.01 or 1/100")
    region.add_argument("--xmax", type=str, default=None, help="upper end for open-ended curves")

    simulate = sub.add_parser("simulate", parents=[common], help="estimate a scheme's sum-DoF")
    simulate.add_argument("--scheme", type=str, default=None, choices=list(SCHEMES))
    simulate.add_argument("--Nt", type=int, default=None, help="antennas for ls frames")
    simulate.add_argument("--Tn", type=int, default=None)
    simulate.add_argument("--Tf", type=int, default=None)
    simulate.add_argument("--Tfb", type=int, default=None)
    simulate.add_argument("--Tc", type=int, default=None)
    simulate.add_argument("--snr", type=_snr_list, default=None, help="dB values, comma separated")
    simulate.add_argument("--trials", type=int, default=None)
    simulate.add_argument("--seed", type=int, default=None)
    simulate.add_argument("--workers", type=int, default=None)

    verify = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    verify.add_argument("--suite", type=str, default=None, choices=list(SUITES))

    return parser


def run_cli(argv: Optional[List[str]] = None, stdout=None) -> int:
    """Exit code: 0 success, 1 failed verification, 2 bad flags or configuration"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2

    flags = vars(args).copy()
    command = flags.pop("command")
    config_file = flags.pop("config")

    try:
        config = build_config(command, flags, config_file)
        return COMMANDS[command](config, stdout=stdout)
    except (ConfigError, FeedbackError, RegionError) as e:
        record_error(type(e).__name__)
        logger.error(f"{command}: {e}")
        return 2
    except SimulationError as e:
        record_error(type(e).__name__)
        logger.error(f"{command} failed: {e}")
        return 1


def main():
    sys.exit(run_cli())
