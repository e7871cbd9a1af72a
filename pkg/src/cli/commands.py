"""
The three batch commands; each returns its exit code
"""
import sys

from src.cli.config import ExperimentConfig
from src.cli.verify import format_table, run_suites
from src.montecarlo import SchemeSpec, estimate_dof
from src.regions import curve_to_dict, region_curve, sample_curve
from src.utils.export import format_number, render_csv, render_json, write_output
from src.utils.logger import get_logger
from src.utils.validator import ExperimentValidator

logger = get_logger(__name__)


def run_region(config: ExperimentConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    curve = region_curve(config.curve, num_users=config.K, n=config.n)
    samples = sample_curve(curve, config.grid, config.xmax)

    if config.format == "csv":
        text = render_csv(
            ["x", "d"],
            [(format_number(x), format_number(d)) for x, d in samples],
            timestamp=config.timestamp,
        )
    else:
        payload = curve_to_dict(curve)
        payload["samples"] = [{"x": float(x), "d": float(d)} for x, d in samples]
        text = render_json(payload, timestamp=config.timestamp)

    write_output(text, config.out, stdout)
    logger.info(f"region {curve.kind.value}: {len(samples)} samples, breakpoints {[str(b) for b in curve.breakpoints]}")
    return 0


def run_simulate(config: ExperimentConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    spec = SchemeSpec(
        scheme=config.scheme,
        num_users=config.K,
        num_tx_antennas=config.Nt,
        n=config.n,
        feedback=ExperimentValidator.feedback_model(config.feedback_params),
    )
    estimate = estimate_dof(
        spec,
        snr_grid_db=config.snr,
        trials=config.trials,
        seed=config.seed,
        max_workers=config.workers,
    )

    if config.format == "csv":
        text = render_csv(
            ["scheme", "K", "snr_db", "mean_rate", "trials", "seed"],
            [
                (estimate.scheme, estimate.num_users, format_number(snr), format_number(rate), estimate.trials, estimate.seed)
                for snr, rate in zip(estimate.snr_grid_db, estimate.mean_sum_rate)
            ],
            timestamp=config.timestamp,
        )
    else:
        text = render_json(estimate.model_dump(by_alias=True), timestamp=config.timestamp)

    write_output(text, config.out, stdout)
    return 0


def run_verify(config: ExperimentConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    results = run_suites(config.suite)
    write_output(format_table(results), config.out, stdout)

    failed = [r for r in results if not r.passed]
    if failed:
        logger.error(f"{len(failed)} of {len(results)} checks failed")
        return 1
    logger.info(f"all {len(results)} checks passed")
    return 0


COMMANDS = {
    "region": run_region,
    "simulate": run_simulate,
    "verify": run_verify,
}
