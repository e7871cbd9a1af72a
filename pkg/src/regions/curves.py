"""
Piecewise-linear sum-DoF curves in exact rational arithmetic
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from src.exceptions import RegionError

Rational = Union[Fraction, int]

SPEED_OF_LIGHT = 299_792_458


class CurveKind(str, Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    COR1 = "cor1"
    ZF_TDMA_OMEGA = "zf_tdma_omega"
    ZF_TDMA_GAMMA = "zf_tdma_gamma"
    ZF_MAT_GAMMA = "zf_mat_gamma"
    LEMMA1_OUTER = "lemma1_outer"
    CUTSET = "cutset"
    FINITE_N = "finite_n"


# short names accepted on the command line
CURVE_ALIASES: Dict[str, CurveKind] = {
    "zf_tdma_w": CurveKind.ZF_TDMA_OMEGA,
    "zf_tdma_g": CurveKind.ZF_TDMA_GAMMA,
    "zf_mat_g": CurveKind.ZF_MAT_GAMMA,
    "outer": CurveKind.LEMMA1_OUTER,
}

_NEEDS_K = {CurveKind.THM1, CurveKind.THM2, CurveKind.ZF_TDMA_OMEGA, CurveKind.CUTSET, CurveKind.FINITE_N}
_OMEGA = {CurveKind.THM1, CurveKind.ZF_TDMA_OMEGA}


@dataclass(frozen=True)
class Segment:
    """d(x) = slope * x + intercept on [x_lo, x_hi]; x_hi None means unbounded"""
    x_lo: Fraction
    x_hi: Optional[Fraction]
    slope: Fraction
    intercept: Fraction

    def contains(self, x: Fraction) -> bool:
        return self.x_lo <= x and (self.x_hi is None or x <= self.x_hi)

    def value(self, x: Rational) -> Fraction:
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class RegionCurve:
    kind: CurveKind
    segments: Tuple[Segment, ...]
    variable: str
    num_users: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self):
        if not self.segments:
            raise RegionError(f"{self.kind.value} has no segments")
        for left, right in zip(self.segments, self.segments[1:]):
            if left.x_hi is None or left.x_hi != right.x_lo:
                raise RegionError(f"{self.kind.value}: segments are not contiguous at {left.x_hi}")
            if left.value(left.x_hi) != right.value(right.x_lo):
                raise RegionError(f"{self.kind.value}: discontinuous at {left.x_hi}")

    @property
    def breakpoints(self) -> List[Fraction]:
        points = [self.segments[0].x_lo]
        points.extend(s.x_hi for s in self.segments if s.x_hi is not None)
        return points

    @property
    def domain(self) -> Tuple[Fraction, Optional[Fraction]]:
        return self.segments[0].x_lo, self.segments[-1].x_hi


def a_coef(K: int) -> Fraction:
    return Fraction(K * (K - 1) * (K - 2), (K - 1) * (K - 2) + K)


def b_coef(K: int) -> Fraction:
    return Fraction(K * (K - 1), (K - 1) * (K - 2) + K)


def c_coef(K: int) -> Fraction:
    """(K - 1) / H_{K-1}"""
    harmonic = sum(Fraction(1, i) for i in range(1, K))
    return Fraction(K - 1) / harmonic


def finite_n_dof(K: int, n: int) -> Fraction:
    """Symbols per slot of the composite schedule over n + K - 1 blocks"""
    if K < 3 or n < 1:
        raise RegionError(f"need K >= 3 and n >= 1, got K={K}, n={n}")
    return Fraction((K - 1) * K * n + (K - 1) ** 3 + (K - 1), K * n + K * (K - 1))


def coherence_time(carrier_hz: float, speed_m_per_s: float) -> float:
    """Coherence time c / (8 f v) in seconds"""
    if carrier_hz <= 0 or speed_m_per_s <= 0:
        raise RegionError("carrier frequency and speed must be positive")
    return SPEED_OF_LIGHT / (8.0 * carrier_hz * speed_m_per_s)


def _seg(x_lo, x_hi, slope, intercept) -> Segment:
    return Segment(
        x_lo=Fraction(x_lo),
        x_hi=None if x_hi is None else Fraction(x_hi),
        slope=Fraction(slope),
        intercept=Fraction(intercept),
    )


def _delay_shape(K: int, corner: Fraction) -> List[Segment]:
    """Flat at ``corner`` up to 1/K, linear down to c(K) at gamma = 1, flat after"""
    c = c_coef(K)
    slope = (c - corner) / (1 - Fraction(1, K))
    intercept = corner - slope / K
    return [
        _seg(0, Fraction(1, K), 0, corner),
        _seg(Fraction(1, K), 1, slope, intercept),
        _seg(1, None, 0, c),
    ]


def _resolve_kind(kind: Union[str, CurveKind]) -> CurveKind:
    if isinstance(kind, CurveKind):
        return kind
    if kind in CURVE_ALIASES:
        return CURVE_ALIASES[kind]
    try:
        return CurveKind(kind)
    except ValueError:
        raise RegionError(f"unknown curve kind {kind!r}")


def region_curve(
    kind: Union[str, CurveKind],
    num_users: Optional[int] = None,
    n: Optional[int] = None,
) -> RegionCurve:
    kind = _resolve_kind(kind)
    K = num_users
    if kind in _NEEDS_K and (K is None or K < 3):
        raise RegionError(f"{kind.value} needs K >= 3, got {K}")
    if kind is CurveKind.FINITE_N and (n is None or n < 1):
        raise RegionError(f"finite_n needs n >= 1, got {n}")

    if kind is CurveKind.THM1:
        point_b = Fraction(K - 2, 2 * K - 2)
        point_c = Fraction(K - 1, K)
        segments = [
            _seg(0, point_b, K - 1, 1),
            _seg(point_b, point_c, a_coef(K), b_coef(K)),
            _seg(point_c, 1, 0, K - 1),
        ]
    elif kind is CurveKind.THM2:
        segments = _delay_shape(K, Fraction(K - 1))
    elif kind is CurveKind.FINITE_N:
        segments = _delay_shape(K, finite_n_dof(K, n))
    elif kind is CurveKind.COR1:
        segments = [
            _seg(0, Fraction(1, 3), 0, 2),
            _seg(Fraction(1, 3), 1, Fraction(-3, 4), Fraction(9, 4)),
            _seg(1, None, 0, Fraction(3, 2)),
        ]
    elif kind is CurveKind.LEMMA1_OUTER:
        segments = [
            _seg(0, 1, Fraction(-3, 4), Fraction(9, 4)),
            _seg(1, None, 0, Fraction(3, 2)),
        ]
    elif kind is CurveKind.ZF_TDMA_GAMMA:
        segments = [_seg(0, 1, -1, 2), _seg(1, None, 0, 1)]
    elif kind is CurveKind.ZF_MAT_GAMMA:
        segments = [_seg(0, 1, Fraction(-1, 2), 2), _seg(1, None, 0, Fraction(3, 2))]
    elif kind is CurveKind.ZF_TDMA_OMEGA:
        segments = [_seg(0, 1, K - 2, 1)]
    else:
        segments = [_seg(0, None, 0, K - 1)]

    return RegionCurve(
        kind=kind,
        segments=tuple(segments),
        variable="omega" if kind in _OMEGA else "gamma",
        num_users=K if kind in _NEEDS_K else None,
        n=n if kind is CurveKind.FINITE_N else None,
    )


def curve_values_at(curve: RegionCurve, x: Rational) -> List[Fraction]:
    """Value of every segment whose closed interval holds x"""
    x = Fraction(x)
    values = [segment.value(x) for segment in curve.segments if segment.contains(x)]
    if not values:
        lo, hi = curve.domain
        raise RegionError(f"{x} outside the domain [{lo}, {'inf' if hi is None else hi}] of {curve.kind.value}")
    return values


def eval_curve(curve: RegionCurve, x: Rational) -> Fraction:
    return curve_values_at(curve, x)[0]


def sample_curve(
    curve: RegionCurve,
    step: Rational,
    x_max: Optional[Rational] = None,
) -> List[Tuple[Fraction, Fraction]]:
    """
    (x, d) pairs on a regular grid merged with the exact breakpoints

    Open-ended curves are sampled up to ``x_max`` (default 2).
    """
    step = Fraction(step)
    if step <= 0:
        raise RegionError(f"grid step must be positive, got {step}")
    lo, hi = curve.domain
    if hi is None:
        hi = Fraction(2) if x_max is None else Fraction(x_max)
    elif x_max is not None:
        hi = min(hi, Fraction(x_max))
    if hi < lo:
        raise RegionError(f"sampling range [{lo}, {hi}] is empty")

    points = set()
    x = lo
    while x <= hi:
        points.add(x)
        x += step
    points.update(b for b in curve.breakpoints if lo <= b <= hi)
    points.add(hi)

    return [(x, eval_curve(curve, x)) for x in sorted(points)]


def _fraction_pair(value: Optional[Fraction]):
    if value is None:
        return None
    return [value.numerator, value.denominator]


def curve_to_dict(curve: RegionCurve) -> Dict:
    """Exact segments as numerator/denominator pairs"""
    return {
        "kind": curve.kind.value,
        "variable": curve.variable,
        "K": curve.num_users,
        "n": curve.n,
        "segments": [
            {
                "x_lo": _fraction_pair(s.x_lo),
                "x_hi": _fraction_pair(s.x_hi),
                "slope": _fraction_pair(s.slope),
                "intercept": _fraction_pair(s.intercept),
            }
            for s in curve.segments
        ],
        "breakpoints": [_fraction_pair(b) for b in curve.breakpoints],
    }
