"""Scalar constants entering the reverse spectral inequalities.

Three families: the Specht ratio, the generalized Kantorovich constant, and
the exponential difference factor that reverses the mean comparison for
ordered pairs. Each evaluator picks an explicit branch (direct formula,
series around a removable point, or analytic limit) and can report which
one fired.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadRangeError, EmptySequenceError, NonPositiveError

BRANCH_DIRECT = "direct"
BRANCH_SERIES = "series"
BRANCH_LIMIT = "limit"

SPECHT_SERIES_WINDOW = 1e-6
KANTOROVICH_LIMIT_WINDOW = 1e-8


@dataclass(frozen=True)
class ConstantEval:
    """One constant evaluation with the branch that produced it."""

    name: str
    arguments: tuple[float, ...]
    value: float
    branch: str

    def __post_init__(self):
        if not self.value > 0.0:
            raise NonPositiveError(f"{self.name}{self.arguments} evaluated to {self.value}")
        if self.branch not in (BRANCH_DIRECT, BRANCH_SERIES, BRANCH_LIMIT):
            raise BadRangeError(f"unknown branch {self.branch!r}")


def _specht_eval(t: float) -> tuple[float, str]:
    if not t > 0.0:
        raise NonPositiveError(f"Specht ratio needs t > 0, got {t}")
    if abs(t - 1.0) < SPECHT_SERIES_WINDOW:
        # S(e^u) = 1 + u^2/8 + O(u^4); the quartic term is < 1e-26 here
        u = math.log(t)
        return 1.0 + u * u / 8.0, BRANCH_SERIES
    u = math.log(t)
    return (t - 1.0) * math.exp(u / (t - 1.0)) / (math.e * u), BRANCH_DIRECT


def specht(t: float) -> float:
    """Specht ratio S(t) = (t-1) t^{1/(t-1)} / (e log t), S(1) = 1.

    Symmetric under t -> 1/t and >= 1 with equality only at t = 1; it is the
    sharp constant in the reverse arithmetic-geometric mean inequality.
    """
    return _specht_eval(float(t))[0]


def specht_p_root(t: float, p: float) -> float:
    """S(t^p)^(1/p); tends to 1 as p -> 0."""
    t, p = float(t), float(p)
    if not t > 0.0:
        raise NonPositiveError(f"Specht ratio needs t > 0, got {t}")
    if not p > 0.0:
        raise NonPositiveError(f"exponent p must be positive, got {p}")
    return specht(t**p) ** (1.0 / p)


def _kantorovich_eval(w: float, alpha: float) -> tuple[float, str]:
    if not w > 0.0:
        raise NonPositiveError(f"Kantorovich constant needs w > 0, got {w}")
    if abs(w - 1.0) < KANTOROVICH_LIMIT_WINDOW:
        # K(w, .) is pinched between 2 w^{1/4}/(w^{1/2}+1) and 1, both
        # 1 + O((w-1)^2), so the limit value is exact to ~1e-17 here
        return 1.0, BRANCH_LIMIT
    near_zero = abs(alpha) < KANTOROVICH_LIMIT_WINDOW
    near_one = abs(alpha - 1.0) < KANTOROVICH_LIMIT_WINDOW
    if near_zero or near_one:
        # first-order expansion at the removable endpoints; K(w, a) is
        # symmetric under a -> 1-a, with slope c(w) = 1 - L + log L at a=0
        ell = math.log(w) / (w - 1.0)
        slope = 1.0 - ell + math.log(ell)
        beta = alpha if near_zero else 1.0 - alpha
        return 1.0 + beta * slope, BRANCH_LIMIT
    u = math.log(w)
    w_minus_1 = math.expm1(u)
    wa_minus_1 = math.expm1(alpha * u)
    wa_minus_w = wa_minus_1 - w_minus_1
    prefactor = wa_minus_w / ((alpha - 1.0) * w_minus_1)
    base = (alpha - 1.0) / alpha * wa_minus_1 / wa_minus_w
    return prefactor * math.pow(base, alpha), BRANCH_DIRECT


def kantorovich(w: float, alpha: float) -> float:
    """Generalized Kantorovich constant K(w, alpha).

    K(w, a) = ((w^a - w)/((a-1)(w-1))) * (((a-1)/a) (w^a - 1)/(w^a - w))^a
    with the removable points w = 1 and a in {0, 1} evaluated by their
    limits. K(w, a) <= 1 for a in [0, 1] and K(w, 2) = (1+w)^2/(4w).
    """
    return _kantorovich_eval(float(w), float(alpha))[0]


def kantorovich_lower_bound(w: float) -> float:
    """2 w^{1/4} / (w^{1/2} + 1), the floor of K(w, .) on alpha in [0, 1]."""
    w = float(w)
    if not w > 0.0:
        raise NonPositiveError(f"lower bound needs w > 0, got {w}")
    return 2.0 * w**0.25 / (math.sqrt(w) + 1.0)


def kantorovich_limit_root(w: float, alpha: float, p_sequence) -> list[float]:
    """K(w^p, alpha)^(-1/p) along a decreasing positive sequence of p.

    The values tend to 1 as p -> 0, which is what collapses the reverse
    bound's constant in the small-exponent limit.
    """
    w, alpha = float(w), float(alpha)
    ps = [float(p) for p in p_sequence]
    if not ps:
        raise EmptySequenceError("p_sequence must be nonempty")
    if any(not p > 0.0 for p in ps):
        raise NonPositiveError(f"p_sequence must be positive, got {ps}")
    if any(b >= a for a, b in zip(ps, ps[1:])):
        raise BadRangeError(f"p_sequence must be strictly decreasing, got {ps}")
    return [kantorovich(w**p, alpha) ** (-1.0 / p) for p in ps]


def fm_factor(h: float, alpha: float, scale: float) -> float:
    """exp(scale * alpha (1-alpha) (1 - 1/h)^2), the exponential remainder.

    The scale argument absorbs the exponent bookkeeping of the different
    statements (r for the low-power form, 1/p for the rooted forms).
    """
    h, alpha, scale = float(h), float(alpha), float(scale)
    if h < 1.0:
        raise BadRangeError(f"fm_factor needs h >= 1, got {h}")
    if not 0.0 <= alpha <= 1.0:
        raise BadRangeError(f"fm_factor needs alpha in [0, 1], got {alpha}")
    if not scale > 0.0:
        raise BadRangeError(f"fm_factor needs scale > 0, got {scale}")
    return math.exp(scale * alpha * (1.0 - alpha) * (1.0 - 1.0 / h) ** 2)


def scalar_specht_amgm_check(values) -> tuple[float, float, float]:
    """Reverse AM-GM on positive scalars: mean <= S(max/min) * geomean.

    Returns (arithmetic mean, bound, margin = bound - mean).
    """
    xs = [float(x) for x in values]
    if not xs:
        raise EmptySequenceError("need at least one value")
    if any(not x > 0.0 for x in xs):
        raise NonPositiveError(f"values must be positive, got {xs}")
    ratio = max(xs) / min(xs)
    mean = sum(xs) / len(xs)
    geomean = math.exp(sum(math.log(x) for x in xs) / len(xs))
    bound = specht(ratio) * geomean
    return mean, bound, bound - mean


_EVALUATORS = {
    "specht": (_specht_eval, 1),
    "specht-p-root": (None, 2),
    "kantorovich": (_kantorovich_eval, 2),
    "kantorovich-lower-bound": (None, 1),
    "fm": (None, 3),
}


def evaluate_constant(name: str, arguments) -> ConstantEval:
    """Evaluate a named constant and report the branch taken."""
    args = tuple(float(a) for a in arguments)
    if name not in _EVALUATORS:
        raise BadRangeError(f"unknown constant {name!r}; choose from {sorted(_EVALUATORS)}")
    _, arity = _EVALUATORS[name]
    if len(args) != arity:
        raise BadRangeError(f"{name} takes {arity} argument(s), got {len(args)}")
    if name == "specht":
        value, branch = _specht_eval(args[0])
    elif name == "kantorovich":
        value, branch = _kantorovich_eval(args[0], args[1])
    elif name == "specht-p-root":
        value = specht_p_root(args[0], args[1])
        _, branch = _specht_eval(args[0] ** args[1])
    elif name == "kantorovich-lower-bound":
        value, branch = kantorovich_lower_bound(args[0]), BRANCH_DIRECT
    else:
        value, branch = fm_factor(*args), BRANCH_DIRECT
    return ConstantEval(name=name, arguments=args, value=value, branch=branch)
