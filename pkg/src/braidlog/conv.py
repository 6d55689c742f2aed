"""Convolution, the group-ring product on windowed sequences.

``convolve_direct`` evaluates the defining sums quadratically and serves as
the reference; ``convolve_fast`` multiplies FFTs after zero padding past the
full support, so cyclic wrap-around never aliases.  ``power`` iterates
``convolve_fast`` and clamps the result window to a caller-supplied cap
after every product, accounting the l2 mass it discards.
"""

from __future__ import annotations

import numpy as np

from .seq import CoeffSeq, delta, truncated

__all__ = ["convolve_direct", "convolve_fast", "power", "power_with_loss"]


def convolve_direct(a: CoeffSeq, b: CoeffSeq) -> CoeffSeq:
    """Quadratic convolution ``c_n = sum_k a_k b_{n-k}`` with full support."""
    return CoeffSeq(a.radius + b.radius, np.convolve(a.coeffs, b.coeffs))


def convolve_fast(a: CoeffSeq, b: CoeffSeq) -> CoeffSeq:
    """FFT convolution; same contract as :func:`convolve_direct`."""
    radius = a.radius + b.radius
    n_full = 2 * radius + 1
    size = 1 << (n_full - 1).bit_length()
    fa = np.fft.fft(a.coeffs, size)
    fb = np.fft.fft(b.coeffs, size)
    return CoeffSeq(radius, np.fft.ifft(fa * fb)[:n_full])


def _check_power_args(a: CoeffSeq, m: int, cap: int) -> None:
    if m < 0:
        raise ValueError(f"power exponent must be non-negative, got {m}")
    if cap < 1:
        raise ValueError(f"cap must be a positive integer, got {cap}")
    if cap < a.radius:
        raise ValueError(f"cap {cap} is smaller than the input radius {a.radius}")


def power_with_loss(a: CoeffSeq, m: int, cap: int) -> tuple[CoeffSeq, float]:
    """m-fold convolution power plus the total l2 mass dropped by clamping.

    The window is clamped to ``-cap .. cap`` after every product, and the
    reported loss is the sum over steps of the l2 norm of each dropped
    block.  Iterated (not binary) multiplication keeps that per-step error
    model linear in ``m``.
    """
    _check_power_args(a, m, cap)
    if m == 0:
        return delta(0), 0.0
    acc = a
    lost = 0.0
    for _ in range(m - 1):
        acc, step = truncated(convolve_fast(acc, a), cap)
        lost += step
    return acc, lost


def power(a: CoeffSeq, m: int, cap: int) -> CoeffSeq:
    """m-fold convolution power; ``power(a, 0, cap)`` is ``delta(0)``."""
    return power_with_loss(a, m, cap)[0]
