"""Windowed two-sided complex sequences, the concrete model of l2(Z).

A :class:`CoeffSeq` holds coefficients ``c_n`` for ``n`` in
``-radius .. radius``; indices outside the window are implicitly zero, so
every sequence is finitely supported and all norms are finite.  The
coefficient buffer is frozen after construction and every operation here is
a pure function, so sequences are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "CoeffSeq",
    "delta",
    "zero",
    "add",
    "scale",
    "inner",
    "l1_norm",
    "l2_norm",
    "with_radius",
    "truncated",
    "max_abs_diff",
    "allclose",
]


@dataclass(frozen=True, eq=False)
class CoeffSeq:
    """Finitely supported two-sided sequence of complex coefficients.

    ``coeffs[i]`` stores ``c_n`` for ``n = i - radius``.  Entries must be
    finite.  Sequences carry no exact equality; compare with
    :func:`max_abs_diff` or :func:`allclose` under an explicit tolerance.
    """

    radius: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.radius, (int, np.integer)) or self.radius < 0:
            raise ValueError(f"radius must be a non-negative integer, got {self.radius!r}")
        arr = np.asarray(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1:
            raise ValueError(f"coefficients must be one-dimensional, got shape {arr.shape}")
        if arr.shape[0] != 2 * self.radius + 1:
            raise ValueError(
                f"radius {self.radius} needs {2 * self.radius + 1} coefficients, "
                f"got {arr.shape[0]}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite (no NaN/Inf)")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "radius", int(self.radius))
        object.__setattr__(self, "coeffs", arr)

    def at(self, n: int) -> complex:
        """Coefficient ``c_n``, zero outside the window."""
        if -self.radius <= n <= self.radius:
            return complex(self.coeffs[n + self.radius])
        return 0j

    def indices(self) -> range:
        """Window indices ``-radius .. radius`` in ascending order."""
        return range(-self.radius, self.radius + 1)


def delta(k: int) -> CoeffSeq:
    """Unit sequence with ``c_k = 1``: ``delta(0)`` is the convolution identity."""
    radius = abs(int(k))
    coeffs = np.zeros(2 * radius + 1, dtype=np.complex128)
    coeffs[k + radius] = 1.0
    return CoeffSeq(radius, coeffs)


def zero(radius: int = 0) -> CoeffSeq:
    """All-zero sequence on the given window."""
    return CoeffSeq(radius, np.zeros(2 * radius + 1, dtype=np.complex128))


def with_radius(a: CoeffSeq, radius: int) -> CoeffSeq:
    """Re-window ``a`` into a larger symmetric window; values are unchanged."""
    if radius < a.radius:
        raise ValueError(
            f"cannot embed radius {a.radius} into smaller radius {radius}; "
            "use truncated() to shrink a window"
        )
    if radius == a.radius:
        return a
    out = np.zeros(2 * radius + 1, dtype=np.complex128)
    out[radius - a.radius : radius + a.radius + 1] = a.coeffs
    return CoeffSeq(radius, out)


def truncated(a: CoeffSeq, cap: int) -> tuple[CoeffSeq, float]:
    """Clamp ``a`` to the window ``-cap .. cap``.

    Returns the clamped sequence together with the l2 norm of the dropped
    coefficient block (0.0 when nothing is dropped).
    """
    if cap < 0:
        raise ValueError(f"cap must be non-negative, got {cap}")
    if a.radius <= cap:
        return a, 0.0
    lo = a.radius - cap
    hi = a.radius + cap + 1
    dropped = np.concatenate([a.coeffs[:lo], a.coeffs[hi:]])
    return CoeffSeq(cap, a.coeffs[lo:hi]), float(np.linalg.norm(dropped))


def add(a: CoeffSeq, b: CoeffSeq) -> CoeffSeq:
    """Pointwise sum; coefficients align by index, result radius is the max."""
    radius = max(a.radius, b.radius)
    out = np.zeros(2 * radius + 1, dtype=np.complex128)
    out[radius - a.radius : radius + a.radius + 1] += a.coeffs
    out[radius - b.radius : radius + b.radius + 1] += b.coeffs
    return CoeffSeq(radius, out)


def scale(a: CoeffSeq, s: complex) -> CoeffSeq:
    """Scalar multiple of ``a``."""
    return CoeffSeq(a.radius, a.coeffs * s)


def inner(a: CoeffSeq, b: CoeffSeq) -> complex:
    """Hermitian inner product ``sum_n a_n * conj(b_n)`` over the overlap."""
    m = min(a.radius, b.radius)
    sa = a.coeffs[a.radius - m : a.radius + m + 1]
    sb = b.coeffs[b.radius - m : b.radius + m + 1]
    # vdot conjugates its first argument
    return complex(np.vdot(sb, sa))


def l2_norm(a: CoeffSeq) -> float:
    """Euclidean norm ``sqrt(inner(a, a))``."""
    return float(np.linalg.norm(a.coeffs))


def l1_norm(a: CoeffSeq) -> float:
    """Sum of coefficient magnitudes; dominates the sup of the Fourier function."""
    return float(np.sum(np.abs(a.coeffs)))


def max_abs_diff(a: CoeffSeq, b: CoeffSeq) -> float:
    """Largest coefficientwise absolute difference, aligned by index."""
    radius = max(a.radius, b.radius)
    return float(
        np.max(np.abs(with_radius(a, radius).coeffs - with_radius(b, radius).coeffs))
    )


def allclose(a: CoeffSeq, b: CoeffSeq, tol: float) -> bool:
    """Tolerance-based equality; the only supported notion of equality."""
    return max_abs_diff(a, b) <= tol
