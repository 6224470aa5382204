"""Finite-dimensional spectral machinery for Hermitian matrices.

Projection-valued measures over Borel-set descriptors, measurable calculus,
vector-pair spectral measures, resolvents (direct and Neumann series), the
Gelfand radius sequence, Hausdorff distance of spectra, the Cayley transform,
unitary evolution, uncertainty records, and commuting diagonalization.

Sign conventions worth stating once:

* `resolvent(A, z)` returns (A - zI)^-1, so a diagonal entry is 1/(lambda - z);
* `neumann_resolvent` sums the Laurent series sum_n A^n / z^(n+1), which
  converges (for |z| > spectral radius) to (zI - A)^-1, i.e. MINUS the above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .linalg_core import (
    SpectralResolution,
    cluster_tol_default,
    hermitian_eig,
    inner_product,
    matrix_to_json,
    operator_norm,
    require_hermitian,
    require_matrix,
)

__all__ = [
    "BorelSet",
    "ProjectionValuedMeasure",
    "SpectralMeasurePair",
    "pvm",
    "measurable_calculus",
    "spectral_measure",
    "resolvent",
    "neumann_resolvent",
    "NeumannResult",
    "spectral_radius_gelfand",
    "hausdorff_distance_spectra",
    "cayley",
    "cayley_map",
    "evolve",
    "uncertainty",
    "UncertaintyRecord",
    "commuting_diagonalization",
    "CompatibilityResult",
    "resolution_to_json",
    "spectral_measure_to_json",
]


def _endpoint_tol(lam: float) -> float:
    return 1e-12 * (1.0 + abs(lam))


@dataclass(frozen=True)
class BorelSet:
    """Finite union of intervals and singletons on the real line.

    Intervals are (lo, hi, lo_closed, hi_closed) with lo <= hi, infinite
    endpoints allowed.  Membership of a value within 1e-12*(1+|x|) of an
    endpoint is decided by the endpoint's closedness.
    """

    intervals: tuple = ()
    points: tuple = ()

    @staticmethod
    def interval(lo: float, hi: float, closed: str = "both") -> "BorelSet":
        if closed not in ("both", "left", "right", "neither"):
            raise ValueError(f"closed must be both/left/right/neither, got {closed!r}")
        if not lo <= hi:
            raise ValueError("interval needs lo <= hi")
        lc = closed in ("both", "left")
        hc = closed in ("both", "right")
        return BorelSet(intervals=((float(lo), float(hi), lc, hc),))

    @staticmethod
    def point(x: float) -> "BorelSet":
        return BorelSet(points=(float(x),))

    @staticmethod
    def real_line() -> "BorelSet":
        return BorelSet.interval(-np.inf, np.inf, closed="neither")

    @staticmethod
    def empty() -> "BorelSet":
        return BorelSet()

    def union(self, other: "BorelSet") -> "BorelSet":
        return BorelSet(self.intervals + other.intervals, self.points + other.points)

    def __or__(self, other: "BorelSet") -> "BorelSet":
        return self.union(other)

    def contains(self, lam: float) -> bool:
        tol = _endpoint_tol(lam)
        for p in self.points:
            if abs(lam - p) <= tol:
                return True
        for lo, hi, lc, hc in self.intervals:
            if np.isfinite(lo) and abs(lam - lo) <= tol:
                if lc:
                    return True
                continue
            if np.isfinite(hi) and abs(lam - hi) <= tol:
                if hc:
                    return True
                continue
            if lo < lam < hi:
                return True
        return False


def pvm(res: SpectralResolution, e: BorelSet) -> np.ndarray:
    """Projection sum_{lambda_i in E} P_i; zero matrix for an empty hit set."""
    n = res.dim
    out = np.zeros((n, n), dtype=complex)
    for lam, p in zip(res.eigenvalues, res.projections):
        if e.contains(float(lam)):
            out += p
    return out


@dataclass(frozen=True)
class ProjectionValuedMeasure:
    resolution: SpectralResolution

    def __call__(self, e: BorelSet) -> np.ndarray:
        return pvm(self.resolution, e)


def measurable_calculus(res: SpectralResolution, m: Callable) -> np.ndarray:
    """m(A) = sum_i m(lambda_i) P_i.

    The evaluator must produce a finite complex value at every eigenvalue;
    anything else (exception, inf, nan) raises ValueError naming the point.
    """
    n = res.dim
    out = np.zeros((n, n), dtype=complex)
    for lam, p in zip(res.eigenvalues, res.projections):
        try:
            val = complex(m(float(lam)))
        except Exception as exc:
            raise ValueError(f"evaluator undefined at eigenvalue {lam}: {exc}") from exc
        if not (np.isfinite(val.real) and np.isfinite(val.imag)):
            raise ValueError(f"evaluator not finite at eigenvalue {lam}: {val}")
        out += val * p
    return out


@dataclass(frozen=True)
class SpectralMeasurePair:
    """Atoms (lambda_i, <x, P_i y>) of the vector-pair spectral measure.

    Masses are stored unnormalized, so they sum to <x, y> exactly; any
    comparison against a convention that divides by pi must re-apply the
    factor itself.
    """

    eigenvalues: np.ndarray
    masses: np.ndarray = field(repr=False)

    def total_mass(self) -> complex:
        return complex(np.sum(self.masses))

    def integrate(self, m: Callable) -> complex:
        """sum_i m(lambda_i) * mass_i, i.e. <x, m(A) y>."""
        vals = np.array([complex(m(float(lam))) for lam in self.eigenvalues])
        return complex(np.sum(vals * self.masses))


def spectral_measure(res: SpectralResolution, x: np.ndarray, y: np.ndarray) -> SpectralMeasurePair:
    """Vector-pair spectral measure with mass_i = <x, P_i y>."""
    xv = np.asarray(x, dtype=complex).ravel()
    yv = np.asarray(y, dtype=complex).ravel()
    if xv.size != res.dim or yv.size != res.dim:
        raise ValueError("vector dimension does not match the resolution")
    masses = np.array([inner_product(xv, p @ yv) for p in res.projections])
    return SpectralMeasurePair(res.eigenvalues.copy(), masses)


def resolvent(a: np.ndarray, z: complex) -> np.ndarray:
    """R(z) = (A - zI)^-1 for Hermitian A and z off the spectrum.

    Diagonalized form: eigenvalue lambda contributes 1/(lambda - z).  Raises
    ValueError when z is within 1e-12*(1+||A||-scale) of an eigenvalue.
    """
    m = require_hermitian(a)
    w = np.linalg.eigvalsh(m)
    dist = float(np.min(np.abs(w - z)))
    tau_sing = 1e-12 * (1.0 + float(np.max(np.abs(w), initial=0.0)))
    if dist <= tau_sing:
        raise ValueError(f"z={z} is within {tau_sing:.3e} of the spectrum (near-singular)")
    n = m.shape[0]
    return np.linalg.solve(m - z * np.eye(n), np.eye(n, dtype=complex))


@dataclass(frozen=True)
class NeumannResult:
    """Partial-sum record for the Laurent resolvent series."""

    matrix: np.ndarray = field(repr=False)
    converged: bool
    terms: int
    tail: float


def neumann_resolvent(a: np.ndarray, z: complex, kmax: int = 256, tau: float = 1e-12) -> NeumannResult:
    """Partial sums of sum_{n>=0} A^n / z^(n+1), converging to (zI - A)^-1.

    Convergence is declared when a term's operator norm drops below tau; if
    kmax terms never get there the result carries converged=False (a flag,
    not an exception).  Note the sign: the limit is the inverse of (zI - A),
    which is minus `resolvent(a, z)`.
    """
    m = require_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    n = m.shape[0]
    if z == 0:
        return NeumannResult(np.full((n, n), np.nan, dtype=complex), False, 0, np.inf)
    term = np.eye(n, dtype=complex) / z
    acc = term.copy()
    tail = operator_norm(term)
    k = 1
    while k <= kmax:
        term = m @ term / z
        tail = operator_norm(term)
        if not np.isfinite(tail) or tail > 1e120:
            return NeumannResult(acc, False, k, float(tail))
        acc += term
        if tail < tau:
            return NeumannResult(acc, True, k, float(tail))
        k += 1
    return NeumannResult(acc, False, kmax, float(tail))


def spectral_radius_gelfand(a: np.ndarray, kmax: int = 20) -> np.ndarray:
    """The sequence ||A^(2^k)||^(1/2^k) for k = 0..kmax.

    Powers are renormalized at every squaring (log accumulation) so the
    sequence is overflow/underflow safe; a nilpotent matrix yields exact
    zeros once the power vanishes.
    """
    m = require_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    seq = np.zeros(kmax + 1)
    nrm = operator_norm(m)
    if nrm == 0.0:
        return seq
    c = m / nrm
    t = float(np.log(nrm))  # log ||A^(2^k)|| maintained exactly in t
    seq[0] = nrm
    for k in range(1, kmax + 1):
        c = c @ c
        cn = operator_norm(c)
        if cn == 0.0:
            return seq  # nilpotent: remaining entries stay 0
        c = c / cn
        t = 2.0 * t + float(np.log(cn))
        seq[k] = float(np.exp(t / 2.0 ** k))
    return seq


def hausdorff_distance_spectra(a: np.ndarray, b: np.ndarray) -> float:
    """Exact Hausdorff distance between the eigenvalue sets of two Hermitian matrices."""
    wa = np.linalg.eigvalsh(require_hermitian(a))
    wb = np.linalg.eigvalsh(require_hermitian(b))
    d = np.abs(wa[:, None] - wb[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def cayley_map(x) -> complex:
    """Scalar Cayley map (x - i) / (x + i), real line onto the unit circle minus 1."""
    return (x - 1j) / (x + 1j)


def cayley(a: np.ndarray) -> np.ndarray:
    """U = (A - iI)(A + iI)^-1, unitary for Hermitian A, eigenvalues (lambda-i)/(lambda+i)."""
    m = require_hermitian(a)
    n = m.shape[0]
    eye = np.eye(n, dtype=complex)
    x = np.linalg.solve(m + 1j * eye, eye)
    return (m - 1j * eye) @ x


def evolve(a: np.ndarray, t: float) -> np.ndarray:
    """e^{itA} = sum_i e^{i lambda_i t} P_i, computed through the eigensystem."""
    m = require_hermitian(a)
    w, v = np.linalg.eigh(m)
    return (v * np.exp(1j * w * t)) @ v.conj().T


@dataclass(frozen=True)
class UncertaintyRecord:
    """lhs = (1/4)|<[A,B]>|^2, rhs = Var(A) Var(B), robertson_lhs adds the anticommutator term."""

    lhs: float
    rhs: float
    robertson_lhs: float
    mean_a: float
    mean_b: float
    var_a: float
    var_b: float


def uncertainty(a: np.ndarray, b: np.ndarray, h: np.ndarray) -> UncertaintyRecord:
    """Uncertainty data for two observables in the state h (means subtracted internally).

    Both (1/4)|<h,[A,B]h>|^2 <= Var Var and the sharper version with the
    centered anticommutator term added on the left hold for every valid input;
    the record reports the three numbers so callers can assert either form.
    """
    ma = require_hermitian(a)
    mb = require_hermitian(b)
    hv = np.asarray(h, dtype=complex).ravel()
    nrm = float(np.linalg.norm(hv))
    if abs(nrm - 1.0) > 1e-10:
        raise ValueError(f"state must be a unit vector, got norm {nrm}")
    mean_a = inner_product(hv, ma @ hv).real
    mean_b = inner_product(hv, mb @ hv).real
    n = hv.size
    a0 = ma - mean_a * np.eye(n)
    b0 = mb - mean_b * np.eye(n)
    a0h = a0 @ hv
    b0h = b0 @ hv
    var_a = float(np.vdot(a0h, a0h).real)
    var_b = float(np.vdot(b0h, b0h).real)
    cross = complex(np.vdot(a0h, b0h))  # <A0 h, B0 h>
    # commutator mean is 2i Im(cross); anticommutator mean is 2 Re(cross)
    lhs = abs(cross.imag) ** 2
    robertson_lhs = lhs + abs(cross.real) ** 2
    return UncertaintyRecord(lhs, var_a * var_b, robertson_lhs, mean_a, mean_b, var_a, var_b)


@dataclass(frozen=True)
class CompatibilityResult:
    """Joint diagonalization outcome; incompatibility is a value, not an error."""

    compatible: bool
    commutator_norm: float
    basis: np.ndarray | None = field(default=None, repr=False)
    diag_a: np.ndarray | None = None
    diag_b: np.ndarray | None = None


def commuting_diagonalization(
    a: np.ndarray,
    b: np.ndarray,
    tau_comm: float | None = None,
) -> CompatibilityResult:
    """Common eigenbasis of a commuting Hermitian pair, or the commutator norm.

    If ||AB - BA|| <= tau_comm (default 1e-10 (1+||A||)(1+||B||)) each
    eigenspace of A is refined by diagonalizing B compressed to it, giving a
    unitary basis diagonalizing both.  Otherwise the result just reports the
    commutator norm as the incompatibility witness.
    """
    ma = require_hermitian(a)
    mb = require_hermitian(b)
    if ma.shape != mb.shape:
        raise ValueError("matrices must have the same shape")
    if tau_comm is None:
        tau_comm = 1e-10 * (1.0 + operator_norm(ma)) * (1.0 + operator_norm(mb))
    comm = operator_norm(ma @ mb - mb @ ma)
    if comm > tau_comm:
        return CompatibilityResult(False, comm)
    w, v = np.linalg.eigh(ma)
    tol = cluster_tol_default(ma)
    groups: list[list[int]] = [[0]]
    for i in range(1, len(w)):
        if w[i] - w[i - 1] <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    cols = []
    da: list[float] = []
    db: list[float] = []
    for g in groups:
        s = v[:, g]
        block = s.conj().T @ mb @ s
        block = (block + block.conj().T) / 2.0
        wb, vb = np.linalg.eigh(block)
        cols.append(s @ vb)
        da.extend([float(np.mean(w[g]))] * len(g))
        db.extend(float(x) for x in wb)
    basis = np.hstack(cols)
    return CompatibilityResult(True, comm, basis, np.array(da), np.array(db))


def resolution_to_json(res: SpectralResolution) -> dict:
    return {
        "eigenvalues": [float(x) for x in res.eigenvalues],
        "multiplicities": [int(x) for x in res.multiplicities],
        "projections": [matrix_to_json(p) for p in res.projections],
    }


def spectral_measure_to_json(pair: SpectralMeasurePair) -> dict:
    return {
        "atoms": [
            {"x": float(lam), "re": float(m.real), "im": float(m.imag)}
            for lam, m in zip(pair.eigenvalues, pair.masses)
        ]
    }
