"""
Self-check suites run by `verify`
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

import numpy as np

from src.baselines import partition_slots, timeshare_frame
from src.channel import FadingSpec, complex_normal, sample_channel, stream_rng
from src.exceptions import RankDeficientError
from src.regions import (
    coherence_time,
    curve_values_at,
    eval_curve,
    finite_n_dof,
    region_curve,
)
from src.settings import APP_SETTINGS
from src.stia import (
    Scheme,
    alignment_residual,
    build_frame,
    combining_plans,
    decode,
    effective_channel,
    estimate_effective_channel_pilot,
    pilot_observations,
    reference_rows,
    transmit,
)

SEEDS_PER_K = 100
STIA_USERS = (3, 4, 5)


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _channel(K: int, slots: int, seed: int, num_tx_antennas=None):
    spec = FadingSpec(num_users=K, num_tx_antennas=num_tx_antennas, seed=seed)
    return sample_channel(spec, slots)


def check_alignment() -> List[CheckResult]:
    results = []
    for scheme in (Scheme.POINT_B, Scheme.POINT_C):
        for K in STIA_USERS:
            worst = 0.0
            for seed in range(SEEDS_PER_K):
                H = _channel(K, 2 * K, seed)
                frame = build_frame(scheme, H, 1.0)
                for (k, n), V in frame.precoders.items():
                    worst = max(worst, alignment_residual(H, k, n, frame.ref_slots[k], V))
            results.append(CheckResult(
                "alignment", f"{scheme.value} K={K}",
                worst <= APP_SETTINGS.ALIGNMENT_TOL, f"max residual {worst:.2e}",
            ))
    return results


def check_decode() -> List[CheckResult]:
    results = []
    for scheme in (Scheme.POINT_B, Scheme.POINT_C):
        for K in STIA_USERS:
            worst = 0.0
            for seed in range(SEEDS_PER_K):
                H = _channel(K, 2 * K, seed)
                frame = build_frame(scheme, H, 1e4)
                symbols = complex_normal(stream_rng(seed, (99,)), (K, K - 1))
                y = transmit(H, frame, symbols)
                plans = combining_plans(frame.scheme, K, frame.beta)
                for k in range(K):
                    estimate = decode(y[k], plans[k], effective_channel(H, frame, k))
                    error = np.linalg.norm(estimate - symbols[k]) / np.linalg.norm(symbols[k])
                    worst = max(worst, float(error))
            results.append(CheckResult(
                "decode", f"{scheme.value} K={K}",
                worst <= APP_SETTINGS.DECODE_TOL, f"max relative error {worst:.2e}",
            ))
    return results


def _braces(slots) -> str:
    return "{" + ", ".join(map(str, slots)) + "}"


def check_partition() -> List[CheckResult]:
    results = []
    example = partition_slots(3, 3)
    expected = (((1, 5, 9), (4, 8, 12), (7, 11, 15)), (2, 3, 6, 14), (10, 13))
    sets = ", ".join(f"I_{i}={_braces(s)}" for i, s in enumerate(example.stia_sets, start=1))
    results.append(CheckResult(
        "partition", "K=3 n=3 sets",
        (example.stia_sets, example.zf_set, example.tdma_set) == expected,
        f"{sets}, I_ZF={_braces(example.zf_set)}, I_TDMA={_braces(example.tdma_set)}",
    ))

    for K in (3, 4, 5):
        for n in (1, 2, 5):
            errors = partition_slots(K, n).validate()
            results.append(CheckResult("partition", f"K={K} n={n} invariants", not errors, "; ".join(errors)))

    for K in (3, 4):
        for n in (1, 3, 10):
            partition = partition_slots(K, n)
            H = sample_channel(FadingSpec.block(K, K, seed=n), partition.total_slots)
            ratio = timeshare_frame(K, n, H, 1e4).symbols_per_slot
            results.append(CheckResult(
                "partition", f"K={K} n={n} accounting",
                ratio == finite_n_dof(K, n), f"{ratio} symbols/slot",
            ))
    return results


def check_regions() -> List[CheckResult]:
    results = []

    def record(name: str, passed: bool, detail: str = ""):
        results.append(CheckResult("regions", name, passed, detail))

    thm1 = region_curve("thm1", 3)
    cor1 = region_curve("cor1")
    expected = [
        (thm1, 0, 1), (thm1, Fraction(1, 4), Fraction(3, 2)), (thm1, Fraction(2, 3), 2), (thm1, 1, 2),
        (cor1, 0, 2), (cor1, Fraction(1, 3), 2), (cor1, 1, Fraction(3, 2)), (cor1, 2, Fraction(3, 2)),
        (region_curve("lemma1_outer"), Fraction(1, 3), 2),
    ]
    for curve, x, value in expected:
        got = eval_curve(curve, x)
        record(f"{curve.kind.value}({x})", got == value, f"{got}")

    third = Fraction(1, 3)
    gap_tdma = eval_curve(cor1, third) - eval_curve(region_curve("zf_tdma_gamma"), third)
    gap_mat = eval_curve(cor1, third) - eval_curve(region_curve("zf_mat_gamma"), third)
    record("cor1 gains at 1/3", (gap_tdma, gap_mat) == (Fraction(1, 3), Fraction(1, 6)), f"{gap_tdma}, {gap_mat}")

    for K in range(3, 9):
        for kind in ("thm1", "thm2"):
            curve = region_curve(kind, K)
            agree = all(len(set(curve_values_at(curve, b))) == 1 for b in curve.breakpoints)
            values = [eval_curve(curve, Fraction(i, 100)) for i in range(0, 201 if kind == "thm2" else 101)]
            steps = [b - a for a, b in zip(values, values[1:])]
            monotone = all(s >= 0 for s in steps) if kind == "thm1" else all(s <= 0 for s in steps)
            record(f"{kind} K={K}", agree and monotone, "continuous and monotone" if agree and monotone else "")
    return results


def check_ls() -> List[CheckResult]:
    results = []
    worst = 0.0
    for K in STIA_USERS:
        for seed in range(SEEDS_PER_K):
            H = _channel(K, K, seed)
            exact = build_frame(Scheme.POINT_C, H, 1.0)
            ls = build_frame(Scheme.LS, H, 1.0)
            for key, V in exact.precoders.items():
                worst = max(worst, float(np.linalg.norm(ls.precoders[key] - V) / np.linalg.norm(V)))
    results.append(CheckResult("ls", "matches exact alignment at N_t = K - 1", worst <= 1e-9, f"{worst:.2e}"))

    K, N_t = 4, 2
    H = _channel(K, K, 0, num_tx_antennas=N_t)
    frame = build_frame(Scheme.LS, H, 1.0)
    rng = stream_rng(0, (7,))
    orthogonal, minimal = 0.0, True
    for (k, n), V in frame.precoders.items():
        current = np.delete(H.at(n), k, axis=0)
        reference = np.delete(H.at(1), k, axis=0)
        residual = reference - current @ V
        orthogonal = max(orthogonal, float(np.linalg.norm(current.conj().T @ residual)))
        base = np.linalg.norm(residual)
        for _ in range(100):
            perturbed = V + 1e-3 * complex_normal(rng, V.shape)
            minimal &= bool(np.linalg.norm(reference - current @ perturbed) >= base)
    results.append(CheckResult("ls", "residual orthogonal (K=4, N_t=2)", orthogonal <= 1e-8, f"{orthogonal:.2e}"))
    results.append(CheckResult("ls", "local minimum (K=4, N_t=2)", minimal))
    return results


def check_pilot() -> List[CheckResult]:
    K = 3
    H = _channel(K, K, 0)
    frame = build_frame(Scheme.POINT_C, H, 1.0)
    pilots = np.eye(K - 1, dtype=complex)
    worst = 0.0
    for k in range(K):
        for n in frame.phase2_slots:
            y = pilot_observations(H, frame, k, n, pilots)
            estimate = estimate_effective_channel_pilot(pilots, reference_rows(H, frame, k), y)
            truth = H.row(n, k) @ frame.V(k, n)
            worst = max(worst, float(np.linalg.norm(estimate - truth)))

    try:
        estimate_effective_channel_pilot(pilots[:1], reference_rows(H, frame, 0), np.zeros(1))
        rejected = False
    except RankDeficientError:
        rejected = True

    return [
        CheckResult("pilot", "noiseless recovery B_t=2", worst <= 1e-8, f"{worst:.2e}"),
        CheckResult("pilot", "B_t=1 rejected", rejected),
    ]


def check_coherence() -> List[CheckResult]:
    seconds = coherence_time(2.1e9, 3 / 3.6)
    return [CheckResult(
        "coherence", "2.1 GHz at 3 km/h",
        abs(seconds - 0.0214) <= 0.01 * 0.0214, f"{seconds * 1e3:.2f} ms",
    )]


SUITES: Dict[str, Callable[[], List[CheckResult]]] = {
    "alignment": check_alignment,
    "decode": check_decode,
    "partition": check_partition,
    "regions": check_regions,
    "ls": check_ls,
    "pilot": check_pilot,
    "coherence": check_coherence,
}


def run_suites(suite: str = "all") -> List[CheckResult]:
    names = list(SUITES) if suite == "all" else [suite]
    return [result for name in names for result in SUITES[name]()]


def format_table(results: List[CheckResult]) -> str:
    width = max(len(f"{r.suite}/{r.name}") for r in results)
    lines = [f"{'check':<{width}}  result  detail"]
    for r in results:
        lines.append(f"{r.suite + '/' + r.name:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  {r.detail}")
    return "\n".join(lines) + "\n"
