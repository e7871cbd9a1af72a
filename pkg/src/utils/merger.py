"""
Result Merger Utility
"""
import math
from typing import Dict, Iterable, List, Sequence


class ResultMerger:
    """Order-independent aggregation of Monte-Carlo trial outcomes"""

    @staticmethod
    def mean(values: Iterable[float]) -> float:
        """
        Mean through math.fsum, which rounds the exact sum once, so any
        permutation or batching of the same samples gives the same result

        Args:
            values: Samples to average

        Returns:
            Arithmetic mean, NaN for no samples
        """
        values = list(values)
        if not values:
            return math.nan
        return math.fsum(values) / len(values)

    @staticmethod
    def merge_batches(batches: Sequence[Dict[int, List[float]]]) -> Dict[int, List[float]]:
        """
        Merge per-SNR sample lists from several workers

        Args:
            batches: Each maps an SNR index to the samples one worker produced

        Example:
            merge_batches([{0: [1.0]}, {0: [2.0], 1: [3.0]}]) == {0: [1.0, 2.0], 1: [3.0]}
        """
        merged: Dict[int, List[float]] = {}
        for batch in batches:
            for index, samples in batch.items():
                merged.setdefault(index, []).extend(samples)
        return dict(sorted(merged.items()))

    @staticmethod
    def mean_per_point(samples: Dict[int, List[float]]) -> List[float]:
        return [ResultMerger.mean(samples[index]) for index in sorted(samples)]
