"""Seeded, counter-based generation of matrices satisfying order hypotheses.

Every draw is addressed by (seed, draw index, stream tag) through a Philox
counter-based generator, so outputs are bit-exact reproducible, independent of
draw order, and safely partitionable across workers.  Pair samplers construct
their hypothesis (sandwich, Olson sandwich, bounded spectrum, ordered chain)
rather than rejection-sampling it, and can attach the matching order
certificate as evidence.

Stream tags: a draw's primary eigenvalues (1), its eigenbasis (2), the
secondary operand's eigenvalues (3) and basis (4), and free parameters (5).
In commuting mode both operands of a pair share the tag-2 basis, so they
commute to rounding error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import BadRangeError, DimMismatchError, NoConvergenceError
from .linalg import (
    HermitianMatrix,
    PositiveDefiniteMatrix,
    _from_eigen,
    congruence,
    exp_h,
    log_pd,
    matrix_to_json,
)
from .orders import (
    DEFAULT_OLSON_GRID,
    OrderCertificate,
    loewner_leq,
    olson_leq,
    sandwich_bounds,
)

TAG_EIGENVALUES = 1
TAG_BASIS = 2
TAG_SECONDARY = 3
TAG_SECONDARY_BASIS = 4
TAG_PARAMS = 5

MODE_GENERAL = "general"
MODE_COMMUTING = "commuting"

_SEED_LIMIT = 2**64

#: Shrinking congruence-perturbation sizes tried when a perturbed ordered
#: chain must re-certify its Olson relation; the final 0.0 falls back to the
#: exact commuting construction so generation always succeeds.
_EPSILON_LADDER = (0.12, 0.05, 0.02, 0.005, 0.0)


@dataclass(frozen=True)
class SamplerConfig:
    """Addressing and shape of one sampling stream.

    ``spectral_range`` = [lo, hi] bounds the spectra of primary draws:
    positive for positive definite targets, any reals for Hermitian targets.
    ``mode`` selects whether pair samplers share an eigenbasis (commuting) or
    draw independent bases (general).
    """

    dim: int
    seed: int
    lo: float
    hi: float
    mode: str = MODE_GENERAL

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise BadRangeError(f"dim must be a positive integer, got {self.dim}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < _SEED_LIMIT:
            raise BadRangeError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise BadRangeError(f"spectral range must be finite, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise BadRangeError(f"spectral range is empty: [{self.lo}, {self.hi}]")
        if self.mode not in (MODE_GENERAL, MODE_COMMUTING):
            raise BadRangeError(f"mode must be 'general' or 'commuting', got {self.mode!r}")

    @property
    def spectral_range(self) -> tuple[float, float]:
        return (self.lo, self.hi)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "seed": self.seed,
            "spectral_range": [self.lo, self.hi],
            "mode": self.mode,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "SamplerConfig":
        lo, hi = payload["spectral_range"]
        return cls(
            dim=int(payload["dim"]),
            seed=int(payload["seed"]),
            lo=float(lo),
            hi=float(hi),
            mode=payload.get("mode", MODE_GENERAL),
        )


def philox_generator(seed: int, index: int, tag: int) -> np.random.Generator:
    """Counter-based generator for stream (seed, index, tag).

    The 256-bit Philox counter is laid out as index * 2^128 + tag * 2^64, so
    distinct (index, tag) pairs can never collide and draws are independent
    of the order in which streams are opened.
    """
    if not 0 <= seed < _SEED_LIMIT:
        raise BadRangeError(f"seed must be a 64-bit unsigned integer, got {seed}")
    if index < 0 or tag < 0:
        raise BadRangeError(f"index and tag must be nonnegative, got ({index}, {tag})")
    counter = (int(index) << 128) + (int(tag) << 64)
    return np.random.Generator(np.random.Philox(key=seed, counter=counter))


def haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed n x n unitary via QR of a complex Gaussian matrix.

    The R-diagonal phases are divided out, which makes the QR factorization
    unique and the resulting distribution exactly Haar.
    """
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    phases = d / np.abs(d)
    return q * phases.conj()


def random_isometry(cfg: SamplerConfig, rows: int, index: int = 0) -> np.ndarray:
    """rows x dim matrix U with U U* = I (rows of a Haar unitary)."""
    if not 1 <= rows <= cfg.dim:
        raise DimMismatchError(f"rows must lie in [1, {cfg.dim}], got {rows}")
    rng = philox_generator(cfg.seed, index, TAG_SECONDARY_BASIS)
    return haar_unitary(rng, cfg.dim)[:rows, :].copy()


def _pair_tags(cfg: SamplerConfig, slot: int) -> tuple[int, int]:
    if slot not in (0, 1):
        raise BadRangeError(f"slot must be 0 or 1, got {slot}")
    values_tag = TAG_EIGENVALUES if slot == 0 else TAG_SECONDARY
    if slot == 0 or cfg.mode == MODE_COMMUTING:
        return values_tag, TAG_BASIS
    return values_tag, TAG_SECONDARY_BASIS


def _draw_spectrum(cfg: SamplerConfig, index: int, values_tag: int) -> np.ndarray:
    rng = philox_generator(cfg.seed, index, values_tag)
    return rng.uniform(cfg.lo, cfg.hi, size=cfg.dim)


def _draw_basis(cfg: SamplerConfig, index: int, basis_tag: int) -> np.ndarray:
    rng = philox_generator(cfg.seed, index, basis_tag)
    return haar_unitary(rng, cfg.dim)


def random_pd(cfg: SamplerConfig, index: int = 0, slot: int = 0) -> PositiveDefiniteMatrix:
    """V diag(u) V* with u uniform in [lo, hi] > 0 and V Haar unitary.

    ``slot`` addresses the two operands of a pair; in commuting mode both
    slots share the eigenbasis stream, so pair draws commute.
    """
    if cfg.lo <= 0.0:
        raise BadRangeError(
            f"positive definite draws need a positive range, got [{cfg.lo}, {cfg.hi}]"
        )
    values_tag, basis_tag = _pair_tags(cfg, slot)
    vals = _draw_spectrum(cfg, index, values_tag)
    basis = _draw_basis(cfg, index, basis_tag)
    out = _from_eigen(vals, basis, positive=True)
    assert isinstance(out, PositiveDefiniteMatrix)
    return out


def random_bounded_hermitian(
    cfg: SamplerConfig, index: int = 0, slot: int = 0
) -> HermitianMatrix:
    """Hermitian draw with spectrum inside [lo, hi] (any real bounds)."""
    values_tag, basis_tag = _pair_tags(cfg, slot)
    vals = _draw_spectrum(cfg, index, values_tag)
    basis = _draw_basis(cfg, index, basis_tag)
    return _from_eigen(vals, basis, positive=False)


def bounded_hermitian_pair(
    cfg: SamplerConfig, index: int = 0
) -> tuple[HermitianMatrix, HermitianMatrix]:
    """Two Hermitian draws with spectra in [lo, hi]; commuting mode shares the basis."""
    return (
        random_bounded_hermitian(cfg, index, slot=0),
        random_bounded_hermitian(cfg, index, slot=1),
    )


def random_pd_pair(
    cfg: SamplerConfig, index: int = 0
) -> tuple[PositiveDefiniteMatrix, PositiveDefiniteMatrix]:
    """Two positive definite draws with spectra in [lo, hi] > 0."""
    return random_pd(cfg, index, slot=0), random_pd(cfg, index, slot=1)


@dataclass(frozen=True)
class SandwichSample:
    """Pair with s*A <= B <= t*A, built as B = A^{1/2} C A^{1/2}, spectrum of C in [s, t]."""

    a: PositiveDefiniteMatrix
    b: PositiveDefiniteMatrix
    s: float
    t: float
    certificates: tuple[OrderCertificate, ...] = ()

    def to_dict(self) -> dict:
        return {
            "a": matrix_to_json(self.a),
            "b": matrix_to_json(self.b),
            "s": self.s,
            "t": self.t,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def sandwich_pair(
    cfg: SamplerConfig,
    s: float,
    t: float,
    index: int = 0,
    attach_certificates: bool = True,
) -> SandwichSample:
    """Sample (A, B) with s*A <= B <= t*A for given 0 < s <= t.

    The coupling matrix C with spectrum in [s, t] is congruence-wrapped as
    B = A^{1/2} C A^{1/2}, so the sandwich holds exactly by construction.
    In commuting mode C shares A's eigenbasis and B is built spectrally.
    """
    s, t = float(s), float(t)
    if not 0.0 < s <= t:
        raise BadRangeError(f"need 0 < s <= t, got s={s}, t={t}")
    a = random_pd(cfg, index, slot=0)
    coupling_cfg = replace(cfg, lo=s, hi=t)
    coupling_vals = _draw_spectrum(coupling_cfg, index, TAG_SECONDARY)
    if cfg.mode == MODE_COMMUTING:
        basis = a.decomposition.eigenvectors
        b_vals = a.decomposition.eigenvalues * coupling_vals
        b = _from_eigen(b_vals, basis, positive=True)
    else:
        basis = _draw_basis(cfg, index, TAG_SECONDARY_BASIS)
        c = _from_eigen(coupling_vals, basis, positive=True)
        sqrt_a = a.decomposition.map_eigenvalues(np.sqrt(a.decomposition.eigenvalues))
        b = PositiveDefiniteMatrix(congruence(sqrt_a, c).matrix)
    certificates: tuple[OrderCertificate, ...] = ()
    if attach_certificates:
        lo_obs, hi_obs = sandwich_bounds(a, b)
        scale = max(abs(s), abs(t))
        certificates = (
            loewner_leq(a * s, b),
            loewner_leq(b, a * t),
        )
        if lo_obs < s - 1e-9 * scale or hi_obs > t + 1e-9 * scale:
            raise NoConvergenceError(
                f"sandwich construction out of range: observed [{lo_obs}, {hi_obs}] "
                f"vs requested [{s}, {t}]"
            )
    return SandwichSample(a=a, b=b, s=s, t=t, certificates=certificates)


@dataclass(frozen=True)
class OlsonSandwichSample:
    """Pair with s*A <=ols B <=ols t*A (power-monotone sandwich)."""

    a: PositiveDefiniteMatrix
    b: PositiveDefiniteMatrix
    s: float
    t: float
    certificates: tuple[OrderCertificate, ...] = ()

    def to_dict(self) -> dict:
        return {
            "a": matrix_to_json(self.a),
            "b": matrix_to_json(self.b),
            "s": self.s,
            "t": self.t,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def olson_sandwich_pair(
    cfg: SamplerConfig,
    index: int = 0,
    attach_certificates: bool = False,
    grid=None,
) -> OlsonSandwichSample:
    """Sample (A, B, s, t) with s*A <=ols B <=ols t*A.

    General mode uses the bounded-spectrum route: spectra of A and B inside
    [lo, hi] force (lo/hi)^v A^v <= B^v <= (hi/lo)^v A^v for every v >= 1, so
    the returned scalars are s = lo/hi, t = hi/lo.  Commuting mode instead
    draws per-eigenvalue factors in [s, t] on a shared basis, which certifies
    the relation exactly.
    """
    if cfg.lo <= 0.0:
        raise BadRangeError(
            f"Olson sandwich needs a positive spectral range, got [{cfg.lo}, {cfg.hi}]"
        )
    s = cfg.lo / cfg.hi
    t = cfg.hi / cfg.lo
    a = random_pd(cfg, index, slot=0)
    if cfg.mode == MODE_COMMUTING:
        factor_cfg = replace(cfg, lo=s, hi=t)
        factors = _draw_spectrum(factor_cfg, index, TAG_SECONDARY)
        b = _from_eigen(a.decomposition.eigenvalues * factors, a.decomposition.eigenvectors, positive=True)
    else:
        b = random_pd(cfg, index, slot=1)
    certificates: tuple[OrderCertificate, ...] = ()
    if attach_certificates:
        certificates = (
            olson_leq(a * s, b, grid=grid),
            olson_leq(b, a * t, grid=grid),
        )
    return OlsonSandwichSample(a=a, b=b, s=s, t=t, certificates=certificates)


@dataclass(frozen=True)
class ExponentialOlsonSample:
    """Hermitian pair with e^s e^H <=ols e^K <=ols e^t e^H."""

    h: HermitianMatrix
    k: HermitianMatrix
    s: float
    t: float
    certificates: tuple[OrderCertificate, ...] = ()

    def to_dict(self) -> dict:
        return {
            "h": matrix_to_json(self.h),
            "k": matrix_to_json(self.k),
            "s": self.s,
            "t": self.t,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def olson_exponential_pair(
    cfg: SamplerConfig,
    m: float,
    M: float,
    index: int = 0,
    attach_certificates: bool = True,
    grid=None,
    force_equal: bool = False,
) -> ExponentialOlsonSample:
    """Sample Hermitian (H, K) with e^{m-M} e^H <=ols e^K <=ols e^{M-m} e^H.

    Both spectra are drawn inside [m, M]; the bound e^{vm} <= e^{vH}, e^{vK}
    <= e^{vM} for every v >= 1 then yields the Olson sandwich with s = m - M
    and t = M - m, for any (even non-commuting) draw.  ``force_equal`` sets
    K = H, the degenerate case where both relations are immediate.
    """
    m, M = float(m), float(M)
    if not m <= M:
        raise BadRangeError(f"need m <= M, got m={m}, M={M}")
    bounds_cfg = replace(cfg, lo=m, hi=M)
    h = random_bounded_hermitian(bounds_cfg, index, slot=0)
    k = h if force_equal else random_bounded_hermitian(bounds_cfg, index, slot=1)
    s, t = m - M, M - m
    certificates: tuple[OrderCertificate, ...] = ()
    if attach_certificates:
        lhs = exp_h(h) * math.exp(s)
        mid = exp_h(k)
        rhs = exp_h(h) * math.exp(t)
        certificates = (olson_leq(lhs, mid, grid=grid), olson_leq(mid, rhs, grid=grid))
    return ExponentialOlsonSample(h=h, k=k, s=s, t=t, certificates=certificates)


@dataclass(frozen=True)
class ChainSample:
    """Positive definite pair with m*I <= A <= B <= M*I <= I (h = M/m)."""

    a: PositiveDefiniteMatrix
    b: PositiveDefiniteMatrix
    m: float
    M: float
    certificates: tuple[OrderCertificate, ...] = ()

    @property
    def h(self) -> float:
        return self.M / self.m

    def to_dict(self) -> dict:
        return {
            "a": matrix_to_json(self.a),
            "b": matrix_to_json(self.b),
            "m": self.m,
            "M": self.M,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def _commuting_chain_values(
    cfg: SamplerConfig, index: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    x = _draw_spectrum(cfg, index, TAG_EIGENVALUES)
    y = _draw_spectrum(cfg, index, TAG_SECONDARY)
    return np.minimum(x, y), np.maximum(x, y), _draw_basis(cfg, index, TAG_BASIS)


def ordered_chain_pair(
    cfg: SamplerConfig,
    index: int = 0,
    olson: bool = False,
    grid=None,
    attach_certificates: bool = False,
) -> ChainSample:
    """Sample (A, B) with 0 < m*I <= A <= B <= M*I <= I.

    Commuting mode pairs sorted eigenvalue draws on a shared basis, which
    makes the whole chain — including its power-monotone (Olson) middle —
    exact.  General mode congruence-perturbs a commuting pair by T = I + eX:
    the Loewner chain survives congruence exactly, and when ``olson`` is set
    the A <=ols B middle is re-certified on ``grid`` (default grid when None),
    shrinking e until the certificate passes; e = 0 restores the commuting
    construction, so generation always terminates.
    """
    if not 0.0 < cfg.lo <= cfg.hi <= 1.0:
        raise BadRangeError(
            f"ordered chain needs 0 < lo <= hi <= 1, got [{cfg.lo}, {cfg.hi}]"
        )
    a_vals, b_vals, basis = _commuting_chain_values(cfg, index)
    if cfg.mode == MODE_COMMUTING:
        a = _from_eigen(a_vals, basis, positive=True)
        b = _from_eigen(b_vals, basis, positive=True)
        m, M = cfg.lo, cfg.hi
        certificates: tuple[OrderCertificate, ...] = ()
        if attach_certificates or olson:
            cert = olson_leq(a, b, grid=grid) if olson else loewner_leq(a, b)
            certificates = (cert,)
        return ChainSample(a=a, b=b, m=m, M=M, certificates=certificates)

    a0 = _from_eigen(a_vals, basis, positive=True)
    b0 = _from_eigen(b_vals, basis, positive=True)
    perturb_rng = philox_generator(cfg.seed, index, TAG_SECONDARY_BASIS)
    raw = perturb_rng.normal(size=(cfg.dim, cfg.dim)) + 1j * perturb_rng.normal(
        size=(cfg.dim, cfg.dim)
    )
    direction = raw / max(float(np.linalg.norm(raw, 2)), 1e-300)
    for epsilon in _EPSILON_LADDER:
        if epsilon == 0.0:
            a_new, b_new = a0, b0
            m_new, M_new = cfg.lo, cfg.hi
        else:
            transform = np.eye(cfg.dim, dtype=np.complex128) + epsilon * direction
            a1 = PositiveDefiniteMatrix(congruence(transform, a0).matrix)
            b1 = PositiveDefiniteMatrix(congruence(transform, b0).matrix)
            scale = cfg.hi / float(b1.eigenvalues[0])
            a_new = a1 * scale
            b_new = b1 * scale
            m_new = float(a_new.eigenvalues[-1])
            M_new = cfg.hi
        if olson:
            cert = olson_leq(a_new, b_new, grid=grid)
            if not cert.holds:
                continue
            certs = (cert,)
        elif attach_certificates:
            certs = (loewner_leq(a_new, b_new),)
        else:
            certs = ()
        return ChainSample(a=a_new, b=b_new, m=m_new, M=M_new, certificates=certs)
    raise NoConvergenceError("ordered chain perturbation failed at every step size")


@dataclass(frozen=True)
class ExponentialChainSample:
    """Hermitian pair with e^m I <=ols e^H <=ols e^K <=ols e^M I <=ols I (M <= 0)."""

    h: HermitianMatrix
    k: HermitianMatrix
    m: float
    M: float
    certificates: tuple[OrderCertificate, ...] = ()

    def to_dict(self) -> dict:
        return {
            "h": matrix_to_json(self.h),
            "k": matrix_to_json(self.k),
            "m": self.m,
            "M": self.M,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def ordered_exponential_chain_pair(
    cfg: SamplerConfig,
    index: int = 0,
    grid=None,
    attach_certificates: bool = False,
) -> ExponentialChainSample:
    """Sample Hermitian (H, K) with e^m I <=ols e^H <=ols e^K <=ols e^M I <=ols I.

    ``cfg.spectral_range`` holds the exponent bounds [m, M] with M <= 0.  The
    pair is built as logarithms of an ordered positive chain with spectra in
    [e^m, e^M]; the scalar ends of the chain reduce to plain Loewner bounds,
    and the e^H <=ols e^K middle carries the chain sampler's certificate.
    """
    if cfg.hi > 0.0:
        raise BadRangeError(
            f"exponential chain needs exponent bounds with M <= 0, got [{cfg.lo}, {cfg.hi}]"
        )
    pd_cfg = replace(cfg, lo=math.exp(cfg.lo), hi=math.exp(cfg.hi))
    chain = ordered_chain_pair(
        pd_cfg, index, olson=True, grid=grid, attach_certificates=attach_certificates
    )
    return ExponentialChainSample(
        h=log_pd(chain.a),
        k=log_pd(chain.b),
        m=math.log(chain.m),
        M=math.log(chain.M),
        certificates=chain.certificates,
    )
