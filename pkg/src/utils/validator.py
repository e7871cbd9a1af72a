"""
Experiment Validation Utilities
"""
from typing import Any, Dict, List, Optional, Sequence

from src.feedback import FeedbackModel1, FeedbackModel2

SNR_RANGE_DB = (30.0, 100.0)
MIN_GRID_POINTS = 3
MIN_TRIALS = 100


class ExperimentValidator:
    """Check an experiment before any trial runs; every check returns a list of problems"""

    @staticmethod
    def validate_grid(snr_db: Sequence[float]) -> List[str]:
        errors = []
        lo, hi = SNR_RANGE_DB
        if len(snr_db) < MIN_GRID_POINTS:
            errors.append(f"SNR grid needs at least {MIN_GRID_POINTS} points, got {len(snr_db)}")
        if any(not lo <= s <= hi for s in snr_db):
            errors.append(f"SNR grid must lie within [{lo:g}, {hi:g}] dB")
        if any(b <= a for a, b in zip(snr_db, snr_db[1:])):
            errors.append("SNR grid must be strictly increasing")
        return errors

    @staticmethod
    def validate_trials(trials: int, cap: Optional[int] = None) -> List[str]:
        errors = []
        if trials < MIN_TRIALS:
            errors.append(f"trials must be >= {MIN_TRIALS}, got {trials}")
        if cap is not None and trials > cap:
            errors.append(f"trials must be <= {cap}, got {trials}")
        return errors

    @staticmethod
    def validate_feedback(params: Dict[str, Optional[int]]) -> List[str]:
        """Either (T_n, T_f) or (T_fb, T_c), never a mix"""
        model1 = [params.get("Tn"), params.get("Tf")]
        model2 = [params.get("Tfb"), params.get("Tc")]
        given1 = [v is not None for v in model1]
        given2 = [v is not None for v in model2]

        if any(given1) and any(given2):
            return ["give either --Tn/--Tf or --Tfb/--Tc, not both"]
        if any(given1) and not all(given1):
            return ["--Tn and --Tf must be given together"]
        if any(given2) and not all(given2):
            return ["--Tfb and --Tc must be given together"]
        return []

    @staticmethod
    def feedback_model(params: Dict[str, Optional[int]]):
        """Feedback model described by the parameters, None when absent"""
        if params.get("Tn") is not None:
            return FeedbackModel1(T_n=params["Tn"], T_f=params["Tf"])
        if params.get("Tfb") is not None:
            return FeedbackModel2(T_fb=params["Tfb"], T_c=params["Tc"])
        return None

    @staticmethod
    def validate_experiment(config: Dict[str, Any], trials_cap: Optional[int] = None) -> Dict[str, List[str]]:
        """
        Validate a simulate request

        Returns:
            Section name mapped to its problems; empty when valid
        """
        errors = {}
        if config.get("K") is None or config["K"] < 3:
            errors["K"] = [f"K must be >= 3, got {config.get('K')}"]

        grid = ExperimentValidator.validate_grid(list(config.get("snr_db") or []))
        if grid:
            errors["snr_db"] = grid

        trials = ExperimentValidator.validate_trials(int(config.get("trials") or 0), trials_cap)
        if trials:
            errors["trials"] = trials

        feedback = ExperimentValidator.validate_feedback(config)
        if feedback:
            errors["feedback"] = feedback

        return errors
