"""Reproducing-kernel machinery on the unit disc.

Builtin kernels (Hardy, harmonic Hardy, Dirichlet) with Gram assembly and
span arithmetic, a truncated-model multiplier adjoint check, and the
Dirichlet seminorm computed two independent ways (coefficients vs 2-D
quadrature of |f'|^2) together with Mobius composition for its conformal
invariance.

Kernel convention: evaluate(x, y) is the kernel function centered at y
evaluated at x, so gram[i, j] = evaluate(x_i, x_j) and PSD means
sum conj(a_i) a_j gram[i, j] >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

__all__ = [
    "Kernel",
    "kernel_by_name",
    "kernel_from_gram",
    "KERNEL_NAMES",
    "hardy_kernel",
    "harmonic_hardy_kernel",
    "dirichlet_kernel",
    "gram",
    "SpanElement",
    "reproduce",
    "multiplier_adjoint_check",
    "MultiplierReport",
    "dirichlet_seminorm",
    "dirichlet_seminorm_quad",
    "disc_quadrature",
    "poly_eval",
    "poly_derivative",
    "compose_power",
    "MobiusMap",
    "compose_mobius",
    "ComposedFunction",
]

MAX_POLY_DEGREE = 32
_SERIES_SWITCH = 1e-2


def _require_disc_point(z: complex, name: str = "z") -> complex:
    z = complex(z)
    if abs(z) >= 1.0:
        raise ValueError(f"{name} = {z} lies outside the open unit disc")
    return z


def hardy_kernel(z: complex, w: complex) -> complex:
    """Hardy-space kernel 1 / (1 - conj(w) z); equals 1 whenever z or w is 0."""
    z = _require_disc_point(z, "z")
    w = _require_disc_point(w, "w")
    return 1.0 / (1.0 - np.conj(w) * z)


def harmonic_hardy_kernel(z: complex, w: complex) -> float:
    """Harmonic-extension kernel (1 - |z|^2 |w|^2) / |1 - conj(w) z|^2 (real)."""
    z = _require_disc_point(z, "z")
    w = _require_disc_point(w, "w")
    return float((1.0 - abs(z) ** 2 * abs(w) ** 2) / abs(1.0 - np.conj(w) * z) ** 2)


def dirichlet_kernel(z: complex, w: complex) -> complex:
    """Dirichlet-space kernel sum_n (conj(w) z)^n / (n+1) = -log(1-s)/s at s = conj(w) z.

    The closed form degenerates at s = 0; below |s| < 1e-2 the power series is
    used instead, making the value at 0 the series limit 1.
    """
    z = _require_disc_point(z, "z")
    w = _require_disc_point(w, "w")
    s = np.conj(w) * z
    if abs(s) < _SERIES_SWITCH:
        acc = 0j
        term = 1.0 + 0j
        for n in range(12):
            acc += term / (n + 1)
            term *= s
        return complex(acc)
    return complex(-np.log(1.0 - s) / s)


@dataclass(frozen=True)
class Kernel:
    """Named kernel with a domain tag: 'disc', 'interval', or 'finite'."""

    name: str
    domain: str
    evaluate: Callable = field(repr=False)
    domain_data: tuple = ()

    def check_point(self, x) -> None:
        if self.domain == "disc":
            if abs(complex(x)) >= 1.0:
                raise ValueError(f"point {x} outside the open unit disc")
        elif self.domain == "interval":
            lo, hi = self.domain_data
            xv = complex(x)
            if abs(xv.imag) > 0 or not lo <= xv.real <= hi:
                raise ValueError(f"point {x} outside [{lo}, {hi}]")
        elif self.domain == "finite":
            if not any(abs(complex(x) - complex(p)) <= 1e-12 for p in self.domain_data):
                raise ValueError(f"point {x} not in the kernel's finite ground set")
        else:
            raise ValueError(f"unknown domain tag {self.domain!r}")


_BUILTINS = {
    "hardy": lambda: Kernel("hardy", "disc", hardy_kernel),
    "harmonic-hardy": lambda: Kernel("harmonic-hardy", "disc", harmonic_hardy_kernel),
    "dirichlet": lambda: Kernel("dirichlet", "disc", dirichlet_kernel),
}

KERNEL_NAMES = tuple(sorted(_BUILTINS))


def kernel_by_name(name: str) -> Kernel:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise ValueError(f"unknown kernel {name!r}; known: {', '.join(KERNEL_NAMES)}")


def kernel_from_gram(points: Sequence[complex], matrix: np.ndarray) -> Kernel:
    """Kernel on a finite ground set, backed by a user-supplied Gram matrix."""
    pts = tuple(complex(p) for p in points)
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (len(pts), len(pts)):
        raise ValueError("gram matrix shape does not match the point count")

    def ev(x, y):
        def find(t):
            for i, p in enumerate(pts):
                if abs(complex(t) - p) <= 1e-12:
                    return i
            raise ValueError(f"point {t} not in the kernel's finite ground set")

        return complex(m[find(x), find(y)])

    return Kernel("user-gram", "finite", ev, pts)


def gram(k: Kernel, points: Sequence[complex]) -> np.ndarray:
    """Gram matrix G[i, j] = k(x_i, x_j) after checking every point's domain."""
    pts = [complex(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    for p in pts:
        k.check_point(p)
    n = len(pts)
    g = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            g[i, j] = complex(k.evaluate(pts[i], pts[j]))
    return g


@dataclass(frozen=True)
class SpanElement:
    """f = sum_i a_i k_{x_i} in the space of the kernel."""

    kernel: Kernel
    points: tuple
    coefficients: np.ndarray

    def __post_init__(self):
        pts = tuple(complex(p) for p in self.points)
        c = np.asarray(self.coefficients, dtype=complex).ravel()
        if len(pts) != c.size:
            raise ValueError("points and coefficients must have equal length")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "coefficients", c)

    def norm_squared(self) -> float:
        g = gram(self.kernel, self.points)
        val = complex(np.vdot(self.coefficients, g @ self.coefficients))
        if val.real < -1e-10 * (1.0 + float(np.max(np.abs(g)))):
            raise ValueError(f"Gram form produced a negative square norm {val.real:.3e}")
        return max(val.real, 0.0)

    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared()))


def reproduce(f: SpanElement, x) -> complex:
    """Evaluate a span element at a point, f(x) = sum_i a_i k(x, x_i)."""
    f.kernel.check_point(x)
    acc = 0j
    for a, p in zip(f.coefficients, f.points):
        acc += a * complex(f.kernel.evaluate(x, p))
    return complex(acc)


def _symbol_coefficients(b: Callable, n_trunc: int) -> np.ndarray:
    """Recover polynomial coefficients of b by DFT on the unit circle (exact for degree <= n_trunc)."""
    m = n_trunc + 1
    t = 2.0 * np.pi * np.arange(m) / m
    samples = np.array([complex(b(np.exp(1j * tt))) for tt in t])
    coeffs = np.array(
        [np.mean(samples * np.exp(-1j * k * t)) for k in range(m)]
    )
    return coeffs


@dataclass(frozen=True)
class MultiplierReport:
    """Residuals of the truncated adjoint identity M_b* k_x = conj(b(x)) k_x."""

    truncation: int
    points: tuple
    residuals: np.ndarray
    max_residual: float
    multiplier_norm: float
    max_abs_symbol: float


def multiplier_adjoint_check(
    b,
    k: Kernel,
    points: Sequence[complex],
    n_trunc: int = 64,
) -> MultiplierReport:
    """Check the multiplier adjoint identity in the degree-N monomial model.

    Builds the Toeplitz multiplication matrix of the polynomial symbol b on
    the monomial basis {1, z, ..., z^N} of the Hardy space, applies its
    adjoint to the truncated kernel vectors k_x = (conj(x)^n)_n, and reports
    the worst l2 residual against conj(b(x)) k_x.  The truncation tail is
    geometric, so the residual decays like |x|^N.

    The symbol b is either its coefficient sequence (exact model: the
    residual is purely the truncation tail) or an evaluator, in which case
    the coefficients are recovered by a DFT on the unit circle, which adds
    roundoff at the 1e-16 scale.  Either way it must be a polynomial of
    degree <= N/2; only the Hardy kernel's model is implemented.
    """
    if k.name != "hardy":
        raise ValueError("the monomial multiplier model is built on the Hardy kernel")
    if n_trunc < 2:
        raise ValueError("truncation must be >= 2")
    if callable(b):
        coeffs = _symbol_coefficients(b, n_trunc)
        top = float(np.max(np.abs(coeffs)))
        high = coeffs[n_trunc // 2 + 1 :]
        if top > 0 and float(np.max(np.abs(high), initial=0.0)) > 1e-9 * top:
            raise ValueError("symbol is not a polynomial of degree <= N/2")
    else:
        coeffs = np.asarray(b, dtype=complex).ravel()
        if coeffs.size - 1 > n_trunc // 2:
            raise ValueError("symbol is not a polynomial of degree <= N/2")
    dim = n_trunc + 1
    mb = np.zeros((dim, dim), dtype=complex)
    for i in range(dim):
        for j in range(0, i + 1):
            if i - j < coeffs.size:
                mb[i, j] = coeffs[i - j]
    pts = tuple(complex(p) for p in points)
    residuals = np.empty(len(pts))
    max_abs_b = 0.0
    cb = [complex(c).conjugate() for c in coeffs]
    for idx, x in enumerate(pts):
        if abs(x) >= 1.0:
            raise ValueError(f"probe point {x} outside the open unit disc")
        # scalar arithmetic throughout: conj(b(x)) * kv[n] then runs through the
        # exact same multiply sequence as kv[n + m], so shift terms cancel bitwise
        # and the reported residual is purely the truncation tail
        cx = complex(x).conjugate()
        kv = [1.0 + 0j]
        for _ in range(dim - 1):
            kv.append(kv[-1] * cx)
        bx = complex(b(x)) if callable(b) else complex(poly_eval(coeffs, x))
        max_abs_b = max(max_abs_b, abs(bx))
        cbx = bx.conjugate()
        acc = 0.0
        for n in range(dim):
            lhs = 0j
            for m, cm in enumerate(cb):
                if n + m < dim:
                    lhs += cm * kv[n + m]
            acc += abs(lhs - cbx * kv[n]) ** 2
        residuals[idx] = float(np.sqrt(acc))
    return MultiplierReport(
        n_trunc,
        pts,
        residuals,
        float(np.max(residuals, initial=0.0)),
        float(np.linalg.norm(mb, 2)),
        max_abs_b,
    )


def poly_eval(coeffs: Sequence[complex], z):
    """Evaluate sum_n a_n z^n (Horner), broadcasting over z."""
    zv = np.asarray(z, dtype=complex)
    acc = np.zeros_like(zv)
    for a in reversed(list(coeffs)):
        acc = acc * zv + complex(a)
    return acc if acc.shape else complex(acc)


def poly_derivative(coeffs: Sequence[complex]) -> np.ndarray:
    c = np.asarray(coeffs, dtype=complex).ravel()
    if c.size <= 1:
        return np.zeros(1, dtype=complex)
    return c[1:] * np.arange(1, c.size)


def dirichlet_seminorm(coeffs: Sequence[complex]) -> float:
    """[f] = sum_n n |a_n|^2 for a polynomial of degree <= 32."""
    c = np.asarray(coeffs, dtype=complex).ravel()
    if c.size - 1 > MAX_POLY_DEGREE:
        raise ValueError(f"polynomial degree {c.size - 1} exceeds {MAX_POLY_DEGREE}")
    n = np.arange(c.size)
    return float(np.sum(n * np.abs(c) ** 2))


def disc_quadrature(n_radial: int = 64, n_angular: int = 256):
    """Tensor polar rule for integrals over the unit disc.

    Returns (points, weights) with sum_k w_k f(z_k) ~ integral_D f dA:
    Gauss-Legendre in radius (weighted by r) times a uniform angular grid.
    """
    r0, wr = leggauss(n_radial)
    r = (r0 + 1.0) / 2.0
    wr = wr / 2.0
    t = 2.0 * np.pi * np.arange(n_angular) / n_angular
    dt = 2.0 * np.pi / n_angular
    z = (r[:, None] * np.exp(1j * t)[None, :]).ravel()
    w = (wr * r)[:, None] * np.full((1, n_angular), dt)
    return z, w.ravel()


def dirichlet_seminorm_quad(derivative, n_radial: int = 64, n_angular: int = 256) -> float:
    """[f] = (1/pi) integral_D |f'(z)|^2 dA by the tensor polar rule."""
    z, w = disc_quadrature(n_radial, n_angular)
    vals = np.asarray(derivative(z), dtype=complex)
    return float(np.sum(w * np.abs(vals) ** 2) / np.pi)


def compose_power(coeffs: Sequence[complex], n: int) -> np.ndarray:
    """Coefficients of f(z^n): a_k moves to index n*k."""
    if n < 1:
        raise ValueError("power must be >= 1")
    c = np.asarray(coeffs, dtype=complex).ravel()
    out = np.zeros(n * (c.size - 1) + 1, dtype=complex)
    out[:: n] = c
    return out


@dataclass(frozen=True)
class MobiusMap:
    """Disc automorphism phi(z) = v (a - z) / (1 - conj(a) z), |a| < 1, |v| = 1."""

    a: complex
    v: complex

    def __post_init__(self):
        a = complex(self.a)
        v = complex(self.v)
        if abs(a) >= 1.0:
            raise ValueError(f"|a| must be < 1, got {abs(a)}")
        if abs(abs(v) - 1.0) > 1e-12:
            raise ValueError(f"|v| must be 1, got {abs(v)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "v", v)

    def value(self, z):
        zv = np.asarray(z, dtype=complex)
        return self.v * (self.a - zv) / (1.0 - np.conj(self.a) * zv)

    def derivative(self, z):
        zv = np.asarray(z, dtype=complex)
        return self.v * (abs(self.a) ** 2 - 1.0) / (1.0 - np.conj(self.a) * zv) ** 2


@dataclass(frozen=True)
class ComposedFunction:
    """f o phi for polynomial f, exposing value and chain-rule derivative evaluators."""

    coeffs: np.ndarray
    mobius: MobiusMap

    def value(self, z):
        return poly_eval(self.coeffs, self.mobius.value(z))

    def derivative(self, z):
        dcoeffs = poly_derivative(self.coeffs)
        return poly_eval(dcoeffs, self.mobius.value(z)) * self.mobius.derivative(z)


def compose_mobius(coeffs: Sequence[complex], a: complex, v: complex) -> ComposedFunction:
    """f o phi with phi(z) = v (a - z)/(1 - conj(a) z); seminorm via quadrature."""
    c = np.asarray(coeffs, dtype=complex).ravel()
    if c.size - 1 > MAX_POLY_DEGREE:
        raise ValueError(f"polynomial degree {c.size - 1} exceeds {MAX_POLY_DEGREE}")
    return ComposedFunction(c, MobiusMap(a, v))
