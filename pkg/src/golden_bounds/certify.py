"""Certifiers for the reverse (and forward) geometric-mean inequalities.

Each certifier evaluates one inequality exactly as stated — Loewner form via
the spectrum of RHS − LHS, eigenvalue form via sorted spectra, norm form via
the Ky Fan / Schatten families, trace form directly — and returns an
InequalityReport with per-entry margins.  Hypotheses are re-verified before
any conclusion is evaluated (HypothesisViolated on failure) so a drifting
sampler cannot silently feed a certifier inputs outside its domain.

The registry at the bottom maps stable inequality ids to seeded instance
recipes; run_instances drives soundness sweeps over them.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
import time
from dataclasses import dataclass

import numpy as np

from .constants import fm_factor, kantorovich, specht
from .errors import (
    BadRangeError,
    DimMismatchError,
    GoldenBoundsError,
    HypothesisViolatedError,
)
from .linalg import (
    HermitianMatrix,
    PositiveDefiniteMatrix,
    congruence,
    eigenvalues_desc,
    exp_h,
    power,
    trace,
)
from .means import geometric_mean, mean_power
from .orders import log_majorizes, loewner_leq
from .sampling import (
    MODE_COMMUTING,
    MODE_GENERAL,
    TAG_PARAMS,
    SamplerConfig,
    bounded_hermitian_pair,
    olson_exponential_pair,
    olson_sandwich_pair,
    ordered_chain_pair,
    ordered_exponential_chain_pair,
    philox_generator,
    random_isometry,
    random_pd,
    random_pd_pair,
    sandwich_pair,
)

SEMANTICS_LOEWNER = "loewner"
SEMANTICS_EIGENVALUE = "eigenvalue"
SEMANTICS_NORM = "norm"
SEMANTICS_TRACE = "trace"

DEFAULT_TOLERANCE = 1e-9

#: Relative slack allowed when re-verifying a hypothesis that holds exactly
#: by construction; violations beyond this indicate a sampler or caller bug.
HYPOTHESIS_RTOL = 1e-8

_TINY = 1e-300


@dataclass(frozen=True)
class InequalityReport:
    """Margins of one inequality instance.

    ``margins`` are raw rhs − lhs per entry; ``relative_margins`` divide by
    the larger side's magnitude (or, for Loewner semantics, by the larger
    spectral norm of the two sides), and ``holds`` means every relative
    margin stays above −tolerance.
    """

    inequality_id: str
    parameters: dict
    lhs_values: tuple[float, ...]
    rhs_values: tuple[float, ...]
    margins: tuple[float, ...]
    relative_margins: tuple[float, ...]
    holds: bool
    tolerance: float
    semantics: str
    labels: tuple[str, ...]
    n: int
    mode: str
    input_digest: str

    def __post_init__(self):
        sizes = {
            len(self.lhs_values),
            len(self.rhs_values),
            len(self.margins),
            len(self.relative_margins),
            len(self.labels),
        }
        if len(sizes) != 1:
            raise DimMismatchError("report value/margin/label lengths disagree")

    @property
    def worst_relative_margin(self) -> float:
        return min(self.relative_margins)

    def to_dict(self) -> dict:
        return {
            "inequality_id": self.inequality_id,
            "parameters": dict(self.parameters),
            "lhs_values": list(self.lhs_values),
            "rhs_values": list(self.rhs_values),
            "margins": list(self.margins),
            "relative_margins": list(self.relative_margins),
            "holds": self.holds,
            "tolerance": self.tolerance,
            "semantics": self.semantics,
            "labels": list(self.labels),
            "n": self.n,
            "mode": self.mode,
            "input_digest": self.input_digest,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def csv_rows(self, instance: int | None = None) -> list[list]:
        """One row per entry; see CSV_HEADER for the column layout."""
        rows = []
        params = json.dumps(self.parameters, sort_keys=True)
        for label, lhs, rhs, margin, rel in zip(
            self.labels, self.lhs_values, self.rhs_values, self.margins, self.relative_margins
        ):
            rows.append(
                [
                    self.inequality_id,
                    "" if instance is None else instance,
                    self.n,
                    self.mode,
                    self.semantics,
                    label,
                    lhs,
                    rhs,
                    margin,
                    rel,
                    self.holds,
                    self.tolerance,
                    self.input_digest,
                    params,
                ]
            )
        return rows


CSV_HEADER = [
    "inequality_id",
    "instance",
    "n",
    "mode",
    "semantics",
    "entry",
    "lhs",
    "rhs",
    "margin",
    "relative_margin",
    "holds",
    "tolerance",
    "input_digest",
    "parameters",
]


def _digest(params: dict, *matrices: HermitianMatrix) -> str:
    hasher = hashlib.sha256()
    for m in matrices:
        hasher.update(np.ascontiguousarray(m.matrix).tobytes())
    hasher.update(repr(sorted(params.items())).encode())
    return hasher.hexdigest()[:16]


def _finish_report(
    inequality_id: str,
    params: dict,
    lhs,
    rhs,
    relative_margins,
    semantics: str,
    labels,
    tolerance: float,
    n: int,
    digest: str,
) -> InequalityReport:
    lhs = tuple(float(x) for x in lhs)
    rhs = tuple(float(x) for x in rhs)
    rel = tuple(float(x) for x in relative_margins)
    margins = tuple(r - l for l, r in zip(lhs, rhs))
    return InequalityReport(
        inequality_id=inequality_id,
        parameters={k: float(v) for k, v in params.items()},
        lhs_values=lhs,
        rhs_values=rhs,
        margins=margins,
        relative_margins=rel,
        holds=bool(min(rel) >= -tolerance),
        tolerance=float(tolerance),
        semantics=semantics,
        labels=tuple(labels),
        n=n,
        mode="n/a",
        input_digest=digest,
    )


def _eigen_report(inequality_id, params, lhs_values, rhs_values, tolerance, n, digest):
    rel = [
        (r - l) / max(abs(l), abs(r), _TINY) for l, r in zip(lhs_values, rhs_values)
    ]
    labels = [f"k={k + 1}" for k in range(len(lhs_values))]
    return _finish_report(
        inequality_id, params, lhs_values, rhs_values, rel,
        SEMANTICS_EIGENVALUE, labels, tolerance, n, digest,
    )


def _loewner_report(inequality_id, params, lhs_mat, rhs_mat, tolerance, n, digest):
    """Report on LHS <= RHS via the ascending spectrum of RHS - LHS.

    Margins are the difference eigenvalues; relative margins divide by the
    larger spectral norm of the two sides, so 'holds' is scale-invariant.
    """
    diff = rhs_mat - lhs_mat
    diff_eigs = diff.eigenvalues[::-1]
    scale = max(
        float(np.max(np.abs(lhs_mat.eigenvalues))),
        float(np.max(np.abs(rhs_mat.eigenvalues))),
        _TINY,
    )
    rel = [e / scale for e in diff_eigs]
    labels = [f"diff-eig-{k + 1}" for k in range(len(diff_eigs))]
    return _finish_report(
        inequality_id, params, np.zeros(len(diff_eigs)), diff_eigs, rel,
        SEMANTICS_LOEWNER, labels, tolerance, n, digest,
    )


def _norm_family(matrix: PositiveDefiniteMatrix) -> tuple[list[str], np.ndarray]:
    """Ky Fan 1..n plus Schatten {1, 2, inf} values of a positive matrix."""
    eigs = eigenvalues_desc(matrix)
    ky_fan = np.cumsum(eigs)
    labels = [f"ky-fan-{k + 1}" for k in range(len(eigs))]
    labels += ["schatten-1", "schatten-2", "schatten-inf"]
    values = np.concatenate(
        [ky_fan, [ky_fan[-1], float(np.sqrt(np.sum(eigs**2))), eigs[0]]]
    )
    return labels, values


def _norm_report(
    inequality_id, params, lhs_mat, rhs_mat, factor, norm_id, tolerance, n, digest
):
    labels, lhs_values = _norm_family(lhs_mat)
    _, rhs_base = _norm_family(rhs_mat)
    rhs_values = factor * rhs_base
    if norm_id is not None:
        if norm_id not in labels:
            raise BadRangeError(f"unknown norm id {norm_id!r}; choose from {labels}")
        keep = labels.index(norm_id)
        labels = [labels[keep]]
        lhs_values = lhs_values[keep : keep + 1]
        rhs_values = rhs_values[keep : keep + 1]
    rel = [
        (r - l) / max(abs(l), abs(r), _TINY) for l, r in zip(lhs_values, rhs_values)
    ]
    return _finish_report(
        inequality_id, params, lhs_values, rhs_values, rel,
        SEMANTICS_NORM, labels, tolerance, n, digest,
    )


# ---------------------------------------------------------------------------
# Hypothesis re-verification (fail fast on stale or wrong certificates)
# ---------------------------------------------------------------------------


def _loewner_scale(a: HermitianMatrix, b: HermitianMatrix) -> float:
    return max(
        float(np.max(np.abs(a.eigenvalues))), float(np.max(np.abs(b.eigenvalues))), 1.0
    )


def _demand_loewner(lhs: HermitianMatrix, rhs: HermitianMatrix, what: str) -> None:
    cert = loewner_leq(lhs, rhs, tolerance=HYPOTHESIS_RTOL * _loewner_scale(lhs, rhs))
    if not cert.holds:
        raise HypothesisViolatedError(
            f"hypothesis {what} fails: min eigenvalue of difference = {cert.worst_margin:.3e}"
        )


def _lean_exponents(*exponents: float) -> tuple[float, ...]:
    """{1} plus any needed exponents above 1 — where the Olson hypothesis is consumed."""
    keep = {1.0}
    keep.update(float(e) for e in exponents if float(e) > 1.0)
    return tuple(sorted(keep))


def _require_sandwich(a, b, s, t) -> None:
    _demand_loewner(a * s, b, f"{s:g}*A <= B")
    _demand_loewner(b, a * t, f"B <= {t:g}*A")


def _require_olson_sandwich(a, b, s, t, exponents=()) -> None:
    for nu in _lean_exponents(*exponents):
        a_nu, b_nu = power(a, nu), power(b, nu)
        _demand_loewner(a_nu * s**nu, b_nu, f"{s:g}^{nu:g}*A^{nu:g} <= B^{nu:g}")
        _demand_loewner(b_nu, a_nu * t**nu, f"B^{nu:g} <= {t:g}^{nu:g}*A^{nu:g}")


def _require_spectrum_bounds(x: HermitianMatrix, lo: float, hi: float, name: str) -> None:
    slack = HYPOTHESIS_RTOL * max(abs(lo), abs(hi), 1.0)
    eigs = x.eigenvalues
    if eigs[-1] < lo - slack or eigs[0] > hi + slack:
        raise HypothesisViolatedError(
            f"spectrum of {name} = [{eigs[-1]:.6g}, {eigs[0]:.6g}] "
            f"escapes the bounds [{lo:g}, {hi:g}]"
        )


def _require_chain(a, b, m, M, olson_exponents=()) -> None:
    if M > 1.0 + HYPOTHESIS_RTOL:
        raise HypothesisViolatedError(f"chain needs M <= 1, got M = {M}")
    if not 0.0 < m <= M:
        raise HypothesisViolatedError(f"chain needs 0 < m <= M, got m={m}, M={M}")
    _require_spectrum_bounds(a, m, M, "A")
    _require_spectrum_bounds(b, m, M, "B")
    for nu in _lean_exponents(*olson_exponents):
        if nu == 1.0:
            _demand_loewner(a, b, "A <= B")
        else:
            _demand_loewner(power(a, nu), power(b, nu), f"A^{nu:g} <= B^{nu:g}")


def _require_exponential_olson(h, k, s, t, exponents=()) -> None:
    if s > t:
        raise HypothesisViolatedError(f"need s <= t, got s={s}, t={t}")
    for nu in _lean_exponents(*exponents):
        low = exp_h(h * nu) * math.exp(s * nu)
        mid = exp_h(k * nu)
        high = exp_h(h * nu) * math.exp(t * nu)
        _demand_loewner(low, mid, f"e^({s:g}{nu:g}) e^({nu:g}H) <= e^({nu:g}K)")
        _demand_loewner(mid, high, f"e^({nu:g}K) <= e^({t:g}{nu:g}) e^({nu:g}H)")


def _require_exponential_chain(h, k, m, M, exponents=()) -> None:
    if M > 0.0 + HYPOTHESIS_RTOL:
        raise HypothesisViolatedError(f"exponential chain needs M <= 0, got M = {M}")
    if m > M:
        raise HypothesisViolatedError(f"need m <= M, got m={m}, M={M}")
    slack = HYPOTHESIS_RTOL * max(abs(m), abs(M), 1.0)
    if h.eigenvalues[-1] < m - slack:
        raise HypothesisViolatedError(
            f"spectrum of H dips below m: {h.eigenvalues[-1]:.6g} < {m:g}"
        )
    if k.eigenvalues[0] > M + slack:
        raise HypothesisViolatedError(
            f"spectrum of K exceeds M: {k.eigenvalues[0]:.6g} > {M:g}"
        )
    for nu in _lean_exponents(*exponents):
        _demand_loewner(exp_h(h * nu), exp_h(k * nu), f"e^({nu:g}H) <= e^({nu:g}K)")


def _require_isometry(u: np.ndarray, n: int) -> None:
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[1] != n or not 1 <= u.shape[0] <= n:
        raise DimMismatchError(f"isometry shape {u.shape} incompatible with dim {n}")
    gram = u @ u.conj().T
    if float(np.max(np.abs(gram - np.eye(u.shape[0])))) > 1e-10:
        raise HypothesisViolatedError("transform rows are not orthonormal (U U* != I)")


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise BadRangeError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def _check_low_power(r: float) -> float:
    r = float(r)
    if not 0.0 < r <= 1.0:
        raise BadRangeError(f"exponent must lie in (0, 1], got {r}")
    return r


def _check_high_power(r: float) -> float:
    r = float(r)
    if not r >= 1.0:
        raise BadRangeError(f"exponent must be >= 1, got {r}")
    return r


def _check_qp(q: float, p: float) -> tuple[float, float]:
    q, p = float(q), float(p)
    if not 0.0 < q <= p:
        raise BadRangeError(f"need 0 < q <= p, got q={q}, p={p}")
    return q, p


def _check_positive(value: float, name: str) -> float:
    value = float(value)
    if not value > 0.0:
        raise BadRangeError(f"{name} must be positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# Specht-ratio certifiers (sandwich and power-monotone-sandwich hypotheses)
# ---------------------------------------------------------------------------


def certify_specht_power_low(
    a: PositiveDefiniteMatrix,
    b: PositiveDefiniteMatrix,
    s: float,
    t: float,
    alpha: float,
    r: float,
    tolerance: float = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """A^r #_a B^r <= M^r (A #_a B)^r for 0 < r <= 1, M = max{S(s), S(t)},
    under the sandwich s*A <= B <= t*A (Loewner comparison)."""
    alpha, r = _check_alpha(alpha), _check_low_power(r)
    if not 0.0 < s <= t:
        raise BadRangeError(f"need 0 < s <= t, got s={s}, t={t}")
    _require_sandwich(a, b, s, t)
    factor = max(specht(s), specht(t))
    params = {"alpha": alpha, "r": r, "s": s, "t": t, "factor": factor}
    lhs = geometric_mean(power(a, r), power(b, r), alpha)
    rhs = power(geometric_mean(a, b, alpha), r) * factor**r
    return _loewner_report(
        "specht-power-low", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


def certify_specht_eigen_power(
    a: PositiveDefiniteMatrix,
    b: PositiveDefiniteMatrix,
    s: float,
    t: float,
    alpha: float,
    r: float,
    tolerance: float = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """lambda_k(A #_a B)^r <= max{S(s^r), S(t^r)} lambda_k(A^r #_a B^r) for
    r >= 1, under the power-monotone sandwich s*A <=ols B <=ols t*A."""
    alpha, r = _check_alpha(alpha), _check_high_power(r)
    if not 0.0 < s <= t:
        raise BadRangeError(f"need 0 < s <= t, got s={s}, t={t}")
    _require_olson_sandwich(a, b, s, t, (r,))
    factor = max(specht(s**r), specht(t**r))
    params = {"alpha": alpha, "r": r, "s": s, "t": t, "factor": factor}
    lhs = eigenvalues_desc(geometric_mean(a, b, alpha)) ** r
    rhs = factor * eigenvalues_desc(geometric_mean(power(a, r), power(b, r), alpha))
    return _eigen_report(
        "specht-eigen-power", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


def certify_specht_pq(
    a: PositiveDefiniteMatrix,
    b: PositiveDefiniteMatrix,
    s: float,
    t: float,
    alpha: float,
    q: float,
    p: float,
    tolerance: float = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """lambda_k(A^q #_a B^q)^{1/q} <= (max{S(s^p), S(t^p)})^{1/p}
    lambda_k(A^p #_a B^p)^{1/p} for 0 < q <= p (power-monotone sandwich)."""
    alpha = _check_alpha(alpha)
    q, p = _check_qp(q, p)
    if not 0.0 < s <= t:
        raise BadRangeError(f"need 0 < s <= t, got s={s}, t={t}")
    _require_olson_sandwich(a, b, s, t, (q, p))
    factor_root = max(specht(s**p), specht(t**p)) ** (1.0 / p)
    params = {"alpha": alpha, "q": q, "p": p, "s": s, "t": t, "factor": factor_root}
    lhs = eigenvalues_desc(geometric_mean(power(a, q), power(b, q), alpha)) ** (1.0 / q)
    rhs = factor_root * eigenvalues_desc(
        geometric_mean(power(a, p), power(b, p), alpha)
    ) ** (1.0 / p)
    return _eigen_report(
        "specht-pq", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


# ---------------------------------------------------------------------------
# Bounded-spectrum specializations (m*I <= A, B <= M*I, h = M/m)
# ---------------------------------------------------------------------------


def certify_bounded_power_low(
    a, b, m, M, alpha, r, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """A^r #_a B^r <= S(h)^r (A #_a B)^r for 0 < r <= 1 and h = M/m, given
    spectra of A and B inside [m, M]."""
    alpha, r = _check_alpha(alpha), _check_low_power(r)
    m = _check_positive(m, "m")
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    _require_spectrum_bounds(a, m, M, "A")
    _require_spectrum_bounds(b, m, M, "B")
    h = M / m
    factor = specht(h)
    params = {"alpha": alpha, "r": r, "m": m, "M": M, "h": h, "factor": factor}
    lhs = geometric_mean(power(a, r), power(b, r), alpha)
    rhs = power(geometric_mean(a, b, alpha), r) * factor**r
    return _loewner_report(
        "bounded-power-low", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


def certify_bounded_eigen_power(
    a, b, m, M, alpha, r, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(A #_a B)^r <= S(h^r) lambda_k(A^r #_a B^r) for r >= 1."""
    alpha, r = _check_alpha(alpha), _check_high_power(r)
    m = _check_positive(m, "m")
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    _require_spectrum_bounds(a, m, M, "A")
    _require_spectrum_bounds(b, m, M, "B")
    h = M / m
    factor = specht(h**r)
    params = {"alpha": alpha, "r": r, "m": m, "M": M, "h": h, "factor": factor}
    lhs = eigenvalues_desc(geometric_mean(a, b, alpha)) ** r
    rhs = factor * eigenvalues_desc(geometric_mean(power(a, r), power(b, r), alpha))
    return _eigen_report(
        "bounded-eigen-power", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


def certify_bounded_pq(
    a, b, m, M, alpha, q, p, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(A^q #_a B^q)^{1/q} <= S(h^p)^{1/p} lambda_k(A^p #_a B^p)^{1/p}."""
    alpha = _check_alpha(alpha)
    q, p = _check_qp(q, p)
    m = _check_positive(m, "m")
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    _require_spectrum_bounds(a, m, M, "A")
    _require_spectrum_bounds(b, m, M, "B")
    h = M / m
    factor_root = specht(h**p) ** (1.0 / p)
    params = {"alpha": alpha, "q": q, "p": p, "m": m, "M": M, "h": h, "factor": factor_root}
    lhs = eigenvalues_desc(geometric_mean(power(a, q), power(b, q), alpha)) ** (1.0 / q)
    rhs = factor_root * eigenvalues_desc(
        geometric_mean(power(a, p), power(b, p), alpha)
    ) ** (1.0 / p)
    return _eigen_report(
        "bounded-pq", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


# ---------------------------------------------------------------------------
# Reverse Golden-Thompson type bounds with the Specht ratio
# ---------------------------------------------------------------------------


def _specht_exp_root(s: float, t: float, p: float) -> float:
    return max(specht(math.exp(s * p)), specht(math.exp(t * p))) ** (1.0 / p)


def certify_gt_specht(
    h: HermitianMatrix,
    k: HermitianMatrix,
    s: float,
    t: float,
    alpha: float,
    p: float,
    tolerance: float = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """lambda_k(e^{(1-a)H + aK}) <= (max{S(e^{sp}), S(e^{tp})})^{1/p}
    lambda_k(e^{pH} #_a e^{pK})^{1/p}, given e^s e^H <=ols e^K <=ols e^t e^H."""
    alpha = _check_alpha(alpha)
    p = _check_positive(p, "p")
    _require_exponential_olson(h, k, s, t, (p,))
    factor_root = _specht_exp_root(s, t, p)
    params = {"alpha": alpha, "p": p, "s": s, "t": t, "factor": factor_root}
    lhs = eigenvalues_desc(exp_h(h * (1.0 - alpha) + k * alpha))
    rhs = factor_root * eigenvalues_desc(mean_power(h, k, alpha, p))
    return _eigen_report(
        "gt-specht", params, lhs, rhs, tolerance, h.dim, _digest(params, h, k)
    )


def certify_gt_specht_norm(
    h, k, s, t, alpha, p, norm_id: str | None = None, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """Norm form of the Specht reverse bound over the Ky Fan and Schatten
    families: ||e^{(1-a)H + aK}|| <= factor^{1/p} ||(e^{pH} #_a e^{pK})^{1/p}||."""
    alpha = _check_alpha(alpha)
    p = _check_positive(p, "p")
    _require_exponential_olson(h, k, s, t, (p,))
    factor_root = _specht_exp_root(s, t, p)
    params = {"alpha": alpha, "p": p, "s": s, "t": t, "factor": factor_root}
    lhs_mat = exp_h(h * (1.0 - alpha) + k * alpha)
    rhs_mat = mean_power(h, k, alpha, p)
    return _norm_report(
        "gt-specht-norm", params, lhs_mat, rhs_mat, factor_root, norm_id,
        tolerance, h.dim, _digest(params, h, k),
    )


def certify_gt_specht_norm_squared(
    h, k, s, t, norm_id: str | None = None, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """||e^{H+K}|| <= max{S(e^{2s}), S(e^{2t})} ||e^{2H} # e^{2K}||: the
    squared alpha = 1/2, p = 2 reading of the Specht norm bound."""
    _require_exponential_olson(h, k, s, t, (2.0,))
    factor = max(specht(math.exp(2.0 * s)), specht(math.exp(2.0 * t)))
    params = {"alpha": 0.5, "p": 2.0, "s": s, "t": t, "factor": factor}
    lhs_mat = exp_h(h + k)
    rhs_mat = geometric_mean(exp_h(h * 2.0), exp_h(k * 2.0), 0.5)
    return _norm_report(
        "gt-specht-norm-squared", params, lhs_mat, rhs_mat, factor, norm_id,
        tolerance, h.dim, _digest(params, h, k),
    )


def certify_gt_bounded_specht(
    h, k, m, M, alpha, p, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(e^{(1-a)H + aK}) <= S(e^{(M-m)p})^{1/p}
    lambda_k(e^{pH} #_a e^{pK})^{1/p} for Hermitian spectra inside [m, M].

    The norm form over the Ky Fan family follows entrywise from these
    eigenvalue margins (weak-majorization propagation)."""
    alpha = _check_alpha(alpha)
    p = _check_positive(p, "p")
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    _require_spectrum_bounds(h, m, M, "H")
    _require_spectrum_bounds(k, m, M, "K")
    factor_root = specht(math.exp((M - m) * p)) ** (1.0 / p)
    params = {"alpha": alpha, "p": p, "m": m, "M": M, "factor": factor_root}
    lhs = eigenvalues_desc(exp_h(h * (1.0 - alpha) + k * alpha))
    rhs = factor_root * eigenvalues_desc(mean_power(h, k, alpha, p))
    return _eigen_report(
        "gt-bounded-specht", params, lhs, rhs, tolerance, h.dim, _digest(params, h, k)
    )


# ---------------------------------------------------------------------------
# Kantorovich-constant certifiers
# ---------------------------------------------------------------------------


def certify_kantorovich_matrix(
    a: PositiveDefiniteMatrix,
    m: float,
    M: float,
    u: np.ndarray,
    tolerance: float = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """U A^{-1} U* <= ((m+M)^2 / 4mM) (U A U*)^{-1} for the spectrum of A in [m, M]
    and any row-orthonormal U (Loewner comparison on the compressed space)."""
    m = _check_positive(m, "m")
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    _require_spectrum_bounds(a, m, M, "A")
    _require_isometry(u, a.dim)
    factor = (m + M) ** 2 / (4.0 * m * M)
    params = {"m": m, "M": M, "h": M / m, "rows": float(np.shape(u)[0]), "factor": factor}
    lhs = PositiveDefiniteMatrix(congruence(u, power(a, -1.0)).matrix)
    compressed = PositiveDefiniteMatrix(congruence(u, a).matrix)
    rhs = power(compressed, -1.0) * factor
    return _loewner_report(
        "kantorovich-matrix", params, lhs, rhs, tolerance, a.dim, _digest(params, a)
    )


def certify_gt_kantorovich(
    h, k, s, t, alpha, p, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(e^{(1-a)H + aK}) <= K(e^{p(t-s)}, a)^{-1/p}
    lambda_k(e^{pH} #_a e^{pK})^{1/p}, given e^s e^H <=ols e^K <=ols e^t e^H."""
    alpha = _check_alpha(alpha)
    p = _check_positive(p, "p")
    _require_exponential_olson(h, k, s, t, (p,))
    factor_root = kantorovich(math.exp(p * (t - s)), alpha) ** (-1.0 / p)
    params = {"alpha": alpha, "p": p, "s": s, "t": t, "factor": factor_root}
    lhs = eigenvalues_desc(exp_h(h * (1.0 - alpha) + k * alpha))
    rhs = factor_root * eigenvalues_desc(mean_power(h, k, alpha, p))
    return _eigen_report(
        "gt-kantorovich", params, lhs, rhs, tolerance, h.dim, _digest(params, h, k)
    )


def certify_gt_kantorovich_bounded(
    h, k, m, M, alpha, p, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(e^{(1-a)H + aK}) <= K(e^{2p(M-m)}, a)^{-1/p}
    lambda_k(e^{pH} #_a e^{pK})^{1/p} for Hermitian spectra inside [m, M]."""
    alpha = _check_alpha(alpha)
    p = _check_positive(p, "p")
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    _require_spectrum_bounds(h, m, M, "H")
    _require_spectrum_bounds(k, m, M, "K")
    factor_root = kantorovich(math.exp(2.0 * p * (M - m)), alpha) ** (-1.0 / p)
    params = {"alpha": alpha, "p": p, "m": m, "M": M, "factor": factor_root}
    lhs = eigenvalues_desc(exp_h(h * (1.0 - alpha) + k * alpha))
    rhs = factor_root * eigenvalues_desc(mean_power(h, k, alpha, p))
    return _eigen_report(
        "gt-kantorovich-bounded", params, lhs, rhs, tolerance, h.dim, _digest(params, h, k)
    )


def certify_gt_kantorovich_squared(
    h, k, m, M, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(e^{H+K}) <= ((e^{2M} + e^{2m}) / (2 e^M e^m))
    lambda_k(e^{2H} # e^{2K}): the squared alpha = 1/2, p = 2 reading.

    Before evaluating, the closed form is cross-checked against the
    reciprocal Kantorovich constant K(e^{4(M-m)}, 1/2)^{-1}; a mismatch
    signals an internal constant bug, not a data problem."""
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    _require_spectrum_bounds(h, m, M, "H")
    _require_spectrum_bounds(k, m, M, "K")
    factor = (math.exp(2.0 * M) + math.exp(2.0 * m)) / (2.0 * math.exp(M + m))
    via_constant = 1.0 / kantorovich(math.exp(4.0 * (M - m)), 0.5)
    if abs(via_constant - factor) > 1e-9 * factor:
        raise GoldenBoundsError(
            f"squared-display constant mismatch: closed form {factor!r} vs "
            f"reciprocal Kantorovich {via_constant!r}"
        )
    params = {"alpha": 0.5, "p": 2.0, "m": m, "M": M, "factor": factor}
    lhs = eigenvalues_desc(exp_h(h + k))
    rhs = factor * eigenvalues_desc(geometric_mean(exp_h(h * 2.0), exp_h(k * 2.0), 0.5))
    return _eigen_report(
        "gt-kantorovich-squared", params, lhs, rhs, tolerance, h.dim, _digest(params, h, k)
    )


# ---------------------------------------------------------------------------
# Exponential-factor certifiers (ordered chain 0 < mI <= A <= B <= MI <= I)
# ---------------------------------------------------------------------------


def certify_fm_power_low(
    a, b, m, M, alpha, r, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """A^r #_a B^r <= exp(r a(1-a)(1 - 1/h)^2) (A #_a B)^r for 0 < r <= 1
    under the ordered chain m*I <= A <= B <= M*I <= I, h = M/m."""
    alpha, r = _check_alpha(alpha), _check_low_power(r)
    _require_chain(a, b, m, M)
    h_ratio = M / m
    factor = fm_factor(h_ratio, alpha, r)
    params = {"alpha": alpha, "r": r, "m": m, "M": M, "h": h_ratio, "factor": factor}
    lhs = geometric_mean(power(a, r), power(b, r), alpha)
    rhs = power(geometric_mean(a, b, alpha), r) * factor
    return _loewner_report(
        "fm-power-low", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


def certify_fm_eigen_power(
    a, b, m, M, alpha, r, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(A #_a B)^r <= exp(a(1-a)(1 - 1/h^r)^2) lambda_k(A^r #_a B^r)
    for r >= 1 under the power-monotone ordered chain."""
    alpha, r = _check_alpha(alpha), _check_high_power(r)
    _require_chain(a, b, m, M, (r,))
    h_ratio = M / m
    factor = fm_factor(h_ratio**r, alpha, 1.0)
    params = {"alpha": alpha, "r": r, "m": m, "M": M, "h": h_ratio, "factor": factor}
    lhs = eigenvalues_desc(geometric_mean(a, b, alpha)) ** r
    rhs = factor * eigenvalues_desc(geometric_mean(power(a, r), power(b, r), alpha))
    return _eigen_report(
        "fm-eigen-power", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


def certify_fm_pq(
    a, b, m, M, alpha, q, p, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(A^q #_a B^q)^{1/q} <= exp((1/p) a(1-a)(1 - 1/h^p)^2)
    lambda_k(A^p #_a B^p)^{1/p} for 0 < q <= p (power-monotone chain)."""
    alpha = _check_alpha(alpha)
    q, p = _check_qp(q, p)
    _require_chain(a, b, m, M, (q, p))
    h_ratio = M / m
    factor_root = fm_factor(h_ratio**p, alpha, 1.0 / p)
    params = {
        "alpha": alpha, "q": q, "p": p, "m": m, "M": M, "h": h_ratio, "factor": factor_root,
    }
    lhs = eigenvalues_desc(geometric_mean(power(a, q), power(b, q), alpha)) ** (1.0 / q)
    rhs = factor_root * eigenvalues_desc(
        geometric_mean(power(a, p), power(b, p), alpha)
    ) ** (1.0 / p)
    return _eigen_report(
        "fm-pq", params, lhs, rhs, tolerance, a.dim, _digest(params, a, b)
    )


def certify_gt_fm(
    h, k, m, M, alpha, p, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """lambda_k(e^{(1-a)H + aK}) <= exp((1/p) a(1-a)(1 - e^{-p(M-m)})^2)
    lambda_k(e^{pH} #_a e^{pK})^{1/p}, given the exponential ordered chain
    e^m I <=ols e^H <=ols e^K <=ols e^M I <=ols I (forces M <= 0).

    The matching norm bound over the Ky Fan family follows from these
    eigenvalue margins by weak-majorization propagation."""
    alpha = _check_alpha(alpha)
    p = _check_positive(p, "p")
    _require_exponential_chain(h, k, m, M, (p,))
    factor_root = fm_factor(math.exp(p * (M - m)), alpha, 1.0 / p)
    params = {"alpha": alpha, "p": p, "m": m, "M": M, "factor": factor_root}
    lhs = eigenvalues_desc(exp_h(h * (1.0 - alpha) + k * alpha))
    rhs = factor_root * eigenvalues_desc(mean_power(h, k, alpha, p))
    return _eigen_report(
        "gt-fm", params, lhs, rhs, tolerance, h.dim, _digest(params, h, k)
    )


# ---------------------------------------------------------------------------
# Forward baselines (the classical directions the reverses complement)
# ---------------------------------------------------------------------------


def certify_forward_ando_hiai(
    a, b, alpha, r, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """A^r #_a B^r prec-log (A #_a B)^r for r >= 1 and any positive pair.

    The report values are cumulative log-products of the descending spectra
    (the log-majorization partial sums), plus the forced k = n equality
    entry whose margin is negative whenever the total products differ."""
    alpha, r = _check_alpha(alpha), _check_high_power(r)
    lhs_mat = geometric_mean(power(a, r), power(b, r), alpha)
    rhs_mat = power(geometric_mean(a, b, alpha), r)
    lhs_eigs = eigenvalues_desc(lhs_mat)
    rhs_eigs = eigenvalues_desc(rhs_mat)
    cert = log_majorizes(lhs_eigs, rhs_eigs, tolerance)
    cum_lhs = np.cumsum(np.log(lhs_eigs))
    cum_rhs = np.cumsum(np.log(rhs_eigs))
    lhs_values = np.concatenate([cum_lhs, [cum_lhs[-1]]])
    rhs_values = np.concatenate([cum_rhs, [cum_rhs[-1]]])
    params = {"alpha": alpha, "r": r}
    return _finish_report(
        "forward-ando-hiai", params, lhs_values, rhs_values, cert.margins,
        SEMANTICS_EIGENVALUE, cert.labels, tolerance, a.dim, _digest(params, a, b),
    )


def certify_forward_gt_trace(
    h, k, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """Tr e^{H+K} <= Tr e^H e^K for Hermitian H, K."""
    lhs = float(trace(exp_h(h + k)).real)
    rhs = float(np.trace(exp_h(h).matrix @ exp_h(k).matrix).real)
    rel = [(rhs - lhs) / max(abs(lhs), abs(rhs), _TINY)]
    params: dict = {}
    return _finish_report(
        "forward-gt-trace", params, [lhs], [rhs], rel, SEMANTICS_TRACE,
        ("trace",), tolerance, h.dim, _digest(params, h, k),
    )


def certify_forward_mean_norm(
    h, k, alpha, p, norm_id: str | None = None, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """||(e^{pH} #_a e^{pK})^{1/p}|| <= ||e^{(1-a)H + aK}|| over the Ky Fan
    and Schatten families (the forward direction the reverse bounds cap)."""
    alpha = _check_alpha(alpha)
    p = _check_positive(p, "p")
    params = {"alpha": alpha, "p": p}
    lhs_mat = mean_power(h, k, alpha, p)
    rhs_mat = exp_h(h * (1.0 - alpha) + k * alpha)
    return _norm_report(
        "forward-mean-norm", params, lhs_mat, rhs_mat, 1.0, norm_id,
        tolerance, h.dim, _digest(params, h, k),
    )


# ---------------------------------------------------------------------------
# Constant-comparison experiments
# ---------------------------------------------------------------------------


def compare_constants_remark(alpha: float, p: float, h: float) -> tuple[float, float, float]:
    """Kantorovich-route factor minus exponential-route factor at (alpha, p, h).

    Returns (K(h^{2p}, alpha)^{-1/p}, exp((1/p) alpha(1-alpha)(1-1/h^p)^2),
    difference).  The sign varies with h — neither reverse bound dominates."""
    alpha = _check_alpha(alpha)
    p = _check_positive(p, "p")
    if not h >= 1.0:
        raise BadRangeError(f"h must be >= 1, got {h}")
    kant_side = kantorovich(h ** (2.0 * p), alpha) ** (-1.0 / p)
    fm_side = fm_factor(h**p, alpha, 1.0 / p)
    return kant_side, fm_side, kant_side - fm_side


def compare_specht_vs_fm(alpha: float, r: float, h: float) -> tuple[float, float, float]:
    """Specht-route factor minus exponential-route factor for the low-power
    comparison: (S(h)^r, exp(r alpha(1-alpha)(1-1/h)^2), difference)."""
    alpha, r = _check_alpha(alpha), _check_low_power(r)
    if not h >= 1.0:
        raise BadRangeError(f"h must be >= 1, got {h}")
    specht_side = specht(h) ** r
    fm_side = fm_factor(h, alpha, r)
    return specht_side, fm_side, specht_side - fm_side


DEFAULT_SIGN_SCAN_ALPHAS = (0.1, 0.25, 0.5, 0.75, 0.9)
DEFAULT_SIGN_SCAN_POWERS = (0.1, 0.3, 0.5, 0.8, 1.0)
DEFAULT_SIGN_SCAN_RATIOS = (1.1, 1.5, 2.0, 4.0, 8.0, 16.0)


def specht_fm_sign_scan(
    alphas=DEFAULT_SIGN_SCAN_ALPHAS,
    powers=DEFAULT_SIGN_SCAN_POWERS,
    ratios=DEFAULT_SIGN_SCAN_RATIOS,
) -> dict:
    """Scan (alpha, r, h) for both signs of the Specht-vs-exponential gap.

    Returns {'positive': (alpha, r, h, diff) | None, 'negative': ...}; both
    present witnesses that neither constant dominates the other."""
    positive = negative = None
    for alpha in alphas:
        for r in powers:
            for h in ratios:
                _, _, diff = compare_specht_vs_fm(alpha, r, h)
                if diff > 0.0 and (positive is None or diff > positive[3]):
                    positive = (alpha, r, h, diff)
                if diff < 0.0 and (negative is None or diff < negative[3]):
                    negative = (alpha, r, h, diff)
    return {"positive": positive, "negative": negative}


def compare_seo_constants(
    alpha: float, p: float, m: float, M: float
) -> tuple[float, float, float]:
    """Sharper single constant vs the two-factor product bound, 0 < p <= 1.

    Returns (K(e^{2p(M-m)}, alpha)^{-1/p},
             K(e^{M-m}, p)^{-alpha/p} * K(e^{2p(M-m)}, alpha)^{-1/p},
             ratio), where ratio <= 1 certifies that the single constant is
    never worse than the product."""
    alpha = _check_alpha(alpha)
    p = float(p)
    if not 0.0 < p <= 1.0:
        raise BadRangeError(f"need 0 < p <= 1, got {p}")
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    new_constant = kantorovich(math.exp(2.0 * p * (M - m)), alpha) ** (-1.0 / p)
    extra = kantorovich(math.exp(M - m), p) ** (-alpha / p)
    product = extra * new_constant
    return new_constant, product, new_constant / product


@dataclass(frozen=True)
class ConvergenceRow:
    """One (p, k) cell of a convergence table: factor-adjusted RHS vs LHS."""

    p: float
    k: int
    lhs: float
    rhs: float
    gap: float


def convergence_study(
    h: HermitianMatrix,
    k: HermitianMatrix,
    s: float,
    t: float,
    alpha: float,
    p_sequence,
    factor_kind: str = "specht",
) -> list[ConvergenceRow]:
    """Track the reverse bound's RHS collapsing onto the LHS as p decreases.

    For each p in the strictly decreasing positive sequence, the rows hold
    lambda_k of the mean-power side scaled by the chosen factor ("specht" ->
    (max{S(e^{sp}), S(e^{tp})})^{1/p}, "kantorovich" -> K(e^{p(t-s)},
    alpha)^{-1/p}) against the fixed lambda_k(e^{(1-alpha)H + alpha K}), with
    gap = (rhs - lhs)/lhs."""
    alpha = _check_alpha(alpha)
    if s > t:
        raise BadRangeError(f"need s <= t, got s={s}, t={t}")
    ps = [float(p) for p in p_sequence]
    if not ps:
        raise BadRangeError("p_sequence must be nonempty")
    if any(not p > 0.0 for p in ps):
        raise BadRangeError(f"p_sequence must be positive, got {ps}")
    if any(later >= earlier for earlier, later in zip(ps, ps[1:])):
        raise BadRangeError(f"p_sequence must be strictly decreasing, got {ps}")
    if factor_kind == "specht":
        factor_root = lambda p: _specht_exp_root(s, t, p)  # noqa: E731
    elif factor_kind == "kantorovich":
        factor_root = lambda p: kantorovich(math.exp(p * (t - s)), alpha) ** (-1.0 / p)  # noqa: E731
    else:
        raise BadRangeError(
            f"factor_kind must be 'specht' or 'kantorovich', got {factor_kind!r}"
        )
    lhs = eigenvalues_desc(exp_h(h * (1.0 - alpha) + k * alpha))
    rows = []
    for p in ps:
        rhs = factor_root(p) * eigenvalues_desc(mean_power(h, k, alpha, p))
        for idx in range(h.dim):
            rows.append(
                ConvergenceRow(
                    p=p,
                    k=idx + 1,
                    lhs=float(lhs[idx]),
                    rhs=float(rhs[idx]),
                    gap=float((rhs[idx] - lhs[idx]) / lhs[idx]),
                )
            )
    return rows


# ---------------------------------------------------------------------------
# Seeded instance recipes and the soundness-sweep driver
# ---------------------------------------------------------------------------

N_CYCLE = (2, 3, 4, 5, 6)


def _ov(overrides: dict, name: str, value: float) -> float:
    return float(overrides.get(name, value))


def _draw_alpha(rng, overrides) -> float:
    if "alpha" in overrides:
        return float(overrides["alpha"])
    if rng.uniform() < 0.4:
        return float(rng.choice(np.array([0.0, 0.25, 0.5, 0.75, 1.0])))
    return float(rng.uniform())


def _draw_low_power(rng, overrides) -> float:
    if "r" in overrides:
        return float(overrides["r"])
    return 1.0 if rng.uniform() < 0.1 else float(rng.uniform(0.05, 1.0))


def _draw_high_power(rng, overrides) -> float:
    if "r" in overrides:
        return float(overrides["r"])
    return 1.0 if rng.uniform() < 0.1 else float(1.0 + rng.uniform(0.0, 2.0))


def _draw_qp(rng, overrides) -> tuple[float, float]:
    q = _ov(overrides, "q", rng.uniform(0.2, 1.2))
    p = _ov(overrides, "p", q * (1.0 + rng.uniform(0.0, 1.5)))
    return q, p


def _draw_gt_power(rng, overrides) -> float:
    return _ov(overrides, "p", rng.uniform(0.3, 2.5))


def _pd_range(rng, overrides) -> tuple[float, float]:
    lo = _ov(overrides, "m", rng.uniform(0.3, 1.0))
    hi = _ov(overrides, "M", lo * rng.uniform(1.2, 5.0))
    return lo, hi


def _hermitian_range(rng, overrides) -> tuple[float, float]:
    m = _ov(overrides, "m", rng.uniform(-1.5, 0.3))
    M = _ov(overrides, "M", m + rng.uniform(0.3, 2.0))
    return m, M


def _chain_range(rng, overrides) -> tuple[float, float]:
    hi = _ov(overrides, "M", rng.uniform(0.35, 1.0))
    lo = _ov(overrides, "m", hi * rng.uniform(0.15, 0.8))
    return lo, hi


def _sandwich_scalars(rng, overrides) -> tuple[float, float]:
    s = _ov(overrides, "s", rng.uniform(0.4, 1.0))
    t = _ov(overrides, "t", s * (1.0 + rng.uniform(0.0, 3.0)))
    return s, t


def _recipe_specht_power_low(index, seed, n, mode, rng, ov, tolerance):
    lo, hi = _pd_range(rng, {})
    cfg = SamplerConfig(n, seed, lo, hi, mode)
    s, t = _sandwich_scalars(rng, ov)
    sample = sandwich_pair(cfg, s, t, index, attach_certificates=False)
    return certify_specht_power_low(
        sample.a, sample.b, s, t, _draw_alpha(rng, ov), _draw_low_power(rng, ov), tolerance
    )


def _recipe_specht_eigen_power(index, seed, n, mode, rng, ov, tolerance):
    lo, hi = _pd_range(rng, ov)
    cfg = SamplerConfig(n, seed, lo, hi, mode)
    sample = olson_sandwich_pair(cfg, index)
    return certify_specht_eigen_power(
        sample.a, sample.b, sample.s, sample.t,
        _draw_alpha(rng, ov), _draw_high_power(rng, ov), tolerance,
    )


def _recipe_specht_pq(index, seed, n, mode, rng, ov, tolerance):
    lo, hi = _pd_range(rng, ov)
    cfg = SamplerConfig(n, seed, lo, hi, mode)
    sample = olson_sandwich_pair(cfg, index)
    q, p = _draw_qp(rng, ov)
    return certify_specht_pq(
        sample.a, sample.b, sample.s, sample.t, _draw_alpha(rng, ov), q, p, tolerance
    )


def _recipe_bounded(certifier, kind):
    def recipe(index, seed, n, mode, rng, ov, tolerance):
        lo, hi = _pd_range(rng, ov)
        cfg = SamplerConfig(n, seed, lo, hi, mode)
        a, b = random_pd_pair(cfg, index)
        alpha = _draw_alpha(rng, ov)
        if kind == "low":
            return certifier(a, b, lo, hi, alpha, _draw_low_power(rng, ov), tolerance)
        if kind == "high":
            return certifier(a, b, lo, hi, alpha, _draw_high_power(rng, ov), tolerance)
        q, p = _draw_qp(rng, ov)
        return certifier(a, b, lo, hi, alpha, q, p, tolerance)

    return recipe


def _recipe_gt_specht(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    pair = olson_exponential_pair(cfg, m, M, index, attach_certificates=False)
    return certify_gt_specht(
        pair.h, pair.k, pair.s, pair.t, _draw_alpha(rng, ov), _draw_gt_power(rng, ov), tolerance
    )


def _recipe_gt_specht_norm(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    pair = olson_exponential_pair(cfg, m, M, index, attach_certificates=False)
    return certify_gt_specht_norm(
        pair.h, pair.k, pair.s, pair.t, _draw_alpha(rng, ov), _draw_gt_power(rng, ov),
        None, tolerance,
    )


def _recipe_gt_specht_norm_squared(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    pair = olson_exponential_pair(cfg, m, M, index, attach_certificates=False)
    return certify_gt_specht_norm_squared(pair.h, pair.k, pair.s, pair.t, None, tolerance)


def _recipe_gt_bounded_specht(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    h, k = bounded_hermitian_pair(cfg, index)
    return certify_gt_bounded_specht(
        h, k, m, M, _draw_alpha(rng, ov), _draw_gt_power(rng, ov), tolerance
    )


def _recipe_kantorovich_matrix(index, seed, n, mode, rng, ov, tolerance):
    lo, hi = _pd_range(rng, ov)
    cfg = SamplerConfig(n, seed, lo, hi, mode)
    a = random_pd(cfg, index)
    rows = int(rng.integers(1, n + 1))
    u = random_isometry(cfg, rows, index)
    return certify_kantorovich_matrix(a, lo, hi, u, tolerance)


def _recipe_gt_kantorovich(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    pair = olson_exponential_pair(cfg, m, M, index, attach_certificates=False)
    return certify_gt_kantorovich(
        pair.h, pair.k, pair.s, pair.t, _draw_alpha(rng, ov), _draw_gt_power(rng, ov), tolerance
    )


def _recipe_gt_kantorovich_bounded(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    h, k = bounded_hermitian_pair(cfg, index)
    return certify_gt_kantorovich_bounded(
        h, k, m, M, _draw_alpha(rng, ov), _draw_gt_power(rng, ov), tolerance
    )


def _recipe_gt_kantorovich_squared(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    h, k = bounded_hermitian_pair(cfg, index)
    return certify_gt_kantorovich_squared(h, k, m, M, tolerance)


def _recipe_fm_power_low(index, seed, n, mode, rng, ov, tolerance):
    lo, hi = _chain_range(rng, ov)
    cfg = SamplerConfig(n, seed, lo, hi, mode)
    chain = ordered_chain_pair(cfg, index, olson=False)
    return certify_fm_power_low(
        chain.a, chain.b, chain.m, chain.M,
        _draw_alpha(rng, ov), _draw_low_power(rng, ov), tolerance,
    )


def _recipe_fm_eigen_power(index, seed, n, mode, rng, ov, tolerance):
    lo, hi = _chain_range(rng, ov)
    cfg = SamplerConfig(n, seed, lo, hi, mode)
    r = _draw_high_power(rng, ov)
    chain = ordered_chain_pair(cfg, index, olson=True, grid=(1.0, max(r, 1.0)))
    return certify_fm_eigen_power(
        chain.a, chain.b, chain.m, chain.M, _draw_alpha(rng, ov), r, tolerance
    )


def _recipe_fm_pq(index, seed, n, mode, rng, ov, tolerance):
    lo, hi = _chain_range(rng, ov)
    cfg = SamplerConfig(n, seed, lo, hi, mode)
    q, p = _draw_qp(rng, ov)
    grid = tuple(sorted({1.0} | {e for e in (q, p) if e > 1.0}))
    chain = ordered_chain_pair(cfg, index, olson=True, grid=grid)
    return certify_fm_pq(
        chain.a, chain.b, chain.m, chain.M, _draw_alpha(rng, ov), q, p, tolerance
    )


def _recipe_gt_fm(index, seed, n, mode, rng, ov, tolerance):
    M = _ov(ov, "M", -rng.uniform(0.0, 0.8))
    m = _ov(ov, "m", M - rng.uniform(0.3, 2.0))
    p = _draw_gt_power(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    grid = tuple(sorted({1.0} | ({p} if p > 1.0 else set())))
    pair = ordered_exponential_chain_pair(cfg, index, grid=grid)
    return certify_gt_fm(
        pair.h, pair.k, pair.m, pair.M, _draw_alpha(rng, ov), p, tolerance
    )


def _recipe_forward_ando_hiai(index, seed, n, mode, rng, ov, tolerance):
    lo, hi = _pd_range(rng, ov)
    cfg = SamplerConfig(n, seed, lo, hi, mode)
    a, b = random_pd_pair(cfg, index)
    return certify_forward_ando_hiai(
        a, b, _draw_alpha(rng, ov), _draw_high_power(rng, ov), tolerance
    )


def _recipe_forward_gt_trace(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    h, k = bounded_hermitian_pair(cfg, index)
    return certify_forward_gt_trace(h, k, tolerance)


def _recipe_forward_mean_norm(index, seed, n, mode, rng, ov, tolerance):
    m, M = _hermitian_range(rng, ov)
    cfg = SamplerConfig(n, seed, m, M, mode)
    h, k = bounded_hermitian_pair(cfg, index)
    return certify_forward_mean_norm(
        h, k, _draw_alpha(rng, ov), _draw_gt_power(rng, ov), None, tolerance
    )


RECIPES = {
    "specht-power-low": _recipe_specht_power_low,
    "specht-eigen-power": _recipe_specht_eigen_power,
    "specht-pq": _recipe_specht_pq,
    "bounded-power-low": _recipe_bounded(certify_bounded_power_low, "low"),
    "bounded-eigen-power": _recipe_bounded(certify_bounded_eigen_power, "high"),
    "bounded-pq": _recipe_bounded(certify_bounded_pq, "pq"),
    "gt-specht": _recipe_gt_specht,
    "gt-specht-norm": _recipe_gt_specht_norm,
    "gt-specht-norm-squared": _recipe_gt_specht_norm_squared,
    "gt-bounded-specht": _recipe_gt_bounded_specht,
    "kantorovich-matrix": _recipe_kantorovich_matrix,
    "gt-kantorovich": _recipe_gt_kantorovich,
    "gt-kantorovich-bounded": _recipe_gt_kantorovich_bounded,
    "gt-kantorovich-squared": _recipe_gt_kantorovich_squared,
    "fm-power-low": _recipe_fm_power_low,
    "fm-eigen-power": _recipe_fm_eigen_power,
    "fm-pq": _recipe_fm_pq,
    "gt-fm": _recipe_gt_fm,
    "forward-ando-hiai": _recipe_forward_ando_hiai,
    "forward-gt-trace": _recipe_forward_gt_trace,
    "forward-mean-norm": _recipe_forward_mean_norm,
}

INEQUALITY_IDS = tuple(sorted(RECIPES))


@dataclass(frozen=True)
class SweepResult:
    """Outcome of a seeded soundness sweep over one inequality."""

    inequality_id: str
    seed: int
    count: int
    reports: tuple[InequalityReport, ...]
    violation_indices: tuple[int, ...]
    elapsed_seconds: float

    @property
    def all_hold(self) -> bool:
        return not self.violation_indices

    def summary(self) -> str:
        status = "ok" if self.all_hold else f"{len(self.violation_indices)} VIOLATIONS"
        return (
            f"{self.inequality_id}: {self.count} instances, seed {self.seed}, "
            f"{status}, {self.elapsed_seconds:.2f}s"
        )


def run_instances(
    inequality_id: str,
    count: int = 200,
    seed: int = 0,
    n: int | None = None,
    mode: str | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    param_overrides: dict | None = None,
) -> SweepResult:
    """Certify ``count`` seeded instances of one inequality.

    Instance i draws its free parameters from the Philox stream (seed, i,
    params tag); the dimension cycles through 2..6 unless pinned by ``n``,
    and the sampler alternates general/commuting pairs unless ``mode`` pins
    one.  Reports come back in instance order, bit-reproducible per seed.
    """
    if inequality_id not in RECIPES:
        raise BadRangeError(
            f"unknown inequality id {inequality_id!r}; known ids: {', '.join(INEQUALITY_IDS)}"
        )
    if count < 1:
        raise BadRangeError(f"count must be >= 1, got {count}")
    if mode is not None and mode not in (MODE_GENERAL, MODE_COMMUTING):
        raise BadRangeError(f"mode must be 'general' or 'commuting', got {mode!r}")
    recipe = RECIPES[inequality_id]
    overrides = dict(param_overrides or {})
    reports = []
    started = time.perf_counter()
    for index in range(count):
        use_n = int(n) if n is not None else N_CYCLE[index % len(N_CYCLE)]
        use_mode = mode if mode is not None else (MODE_COMMUTING, MODE_GENERAL)[index % 2]
        rng = philox_generator(seed, index, TAG_PARAMS)
        report = recipe(
            index=index, seed=seed, n=use_n, mode=use_mode, rng=rng,
            ov=overrides, tolerance=tolerance,
        )
        reports.append(dataclasses.replace(report, mode=use_mode))
    elapsed = time.perf_counter() - started
    violations = tuple(i for i, rep in enumerate(reports) if not rep.holds)
    return SweepResult(
        inequality_id=inequality_id,
        seed=seed,
        count=count,
        reports=tuple(reports),
        violation_indices=violations,
        elapsed_seconds=elapsed,
    )
