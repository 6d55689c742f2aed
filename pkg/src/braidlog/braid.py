"""The generator's logarithm and its exponential-series verification.

The two-strand pure braid group is infinite cyclic; its generator ``q`` and
inverse ``p`` are modeled as the unit sequences ``delta(1)`` and ``delta(-1)``
in l2(Z).  This module builds the candidate logarithm

    tau(N):  c_n = (-1)**(n+1) / n   for 1 <= n <= N,   c_{-n} = -c_n,  c_0 = 0

(the coefficient expansion of log(1+q) - log(1+p), obtained from the identity
q = (1+q)/(1+p)), exponentiates it by truncated convolution series, and
measures how the result converges to ``delta(1)``.  It also evaluates the
degree-``i`` invariants of ``q**k`` (the scalar ``k**i / i!``) and rebuilds
``q**k`` from them, degree by degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .conv import convolve_direct, convolve_fast, power
from .seq import CoeffSeq, add, delta, scale, truncated

__all__ = [
    "BraidPower",
    "VassilievValue",
    "ConvergenceRow",
    "ConvergenceReport",
    "DEFAULT_PROBES",
    "tau",
    "log_candidate",
    "log_candidate_rational",
    "exp_seq",
    "exp_seq_with_loss",
    "exp_tail_bound",
    "auto_terms",
    "verify_exp_tau",
    "trend_violations",
    "vassiliev_Z",
    "psi",
    "check_psi_multiplicative",
    "reconstruct",
]

DEFAULT_PROBES: tuple[int, ...] = tuple(range(-8, 9))


@dataclass(frozen=True)
class BraidPower:
    """The element ``q**k`` of the infinite cyclic 2-strand pure braid group."""

    k: int

    def __mul__(self, other: "BraidPower") -> "BraidPower":
        return BraidPower(self.k + other.k)

    def inverse(self) -> "BraidPower":
        return BraidPower(-self.k)


@dataclass(frozen=True)
class VassilievValue:
    """Degree-``i`` invariant stored as the scalar ``c`` with value ``c * t**i``."""

    degree: int
    coeff: float

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"degree must be non-negative, got {self.degree}")


@dataclass(frozen=True)
class ConvergenceRow:
    """One (window, terms) measurement of the exponential-series experiment."""

    N: int
    M: int
    err_c1: float
    err_off: float
    l2_err: float
    discarded_mass: float

    def __post_init__(self) -> None:
        for name in ("err_c1", "err_off", "l2_err", "discarded_mass"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise ValueError(f"{name} must be finite and non-negative, got {v}")


@dataclass(frozen=True)
class ConvergenceReport:
    """Rows of a truncation study, sorted by (N, M)."""

    rows: tuple[ConvergenceRow, ...]

    def __post_init__(self) -> None:
        keys = [(r.N, r.M) for r in self.rows]
        if keys != sorted(keys):
            raise ValueError("rows must be sorted by (N, M)")


def tau(N: int) -> CoeffSeq:
    """Candidate logarithm of the generator, truncated to window radius ``N``.

    Coefficients are ``(-1)**(n+1) / n`` on the positive side and their exact
    negations on the negative side, so antisymmetry holds bit for bit.
    """
    if N < 1:
        raise ValueError(f"window radius must be >= 1, got {N}")
    n = np.arange(1, N + 1, dtype=np.float64)
    pos = np.where(np.arange(1, N + 1) % 2 == 1, 1.0, -1.0) / n
    coeffs = np.zeros(2 * N + 1, dtype=np.complex128)
    coeffs[N + 1 :] = pos
    coeffs[:N] = -pos[::-1]
    return CoeffSeq(N, coeffs)


def log_candidate_rational(N: int) -> dict[int, Fraction]:
    """Exact-rational coefficients of ``log(1+q) - log(1+p)`` through order ``N``.

    Index ``n`` maps to the coefficient of ``q**n``; ``p**n`` contributes at
    index ``-n``.
    """
    if N < 1:
        raise ValueError(f"window radius must be >= 1, got {N}")
    coeffs: dict[int, Fraction] = {0: Fraction(0)}
    for n in range(1, N + 1):
        sign = 1 if n % 2 == 1 else -1
        coeffs[n] = Fraction(sign, n)
        coeffs[-n] = Fraction(-sign, n)
    return coeffs

def log_candidate(N: int) -> CoeffSeq:
    """Float conversion of :func:`log_candidate_rational` as a sequence."""
    exact = log_candidate_rational(N)
    coeffs = np.zeros(2 * N + 1, dtype=np.complex128)
    for n, value in exact.items():
        coeffs[n + N] = float(value)
    return CoeffSeq(N, coeffs)


def _exp_partials(a: CoeffSeq, cap: int) -> Iterator[tuple[int, CoeffSeq, float]]:
    """Yield ``(m, sum_{i<=m} power(a, i, cap)/i!, discarded mass so far)``.

    Runs forever; callers break once they have the partial sums they need.
    The running product is clamped exactly as :func:`braidlog.conv.power`
    clamps, so each term matches ``power(a, m, cap)`` bit for bit.  Each
    step's dropped l2 mass is weighted by the series coefficient ``1/m!`` at
    which it enters the sum, so the reported figure is the mass the clamps
    removed from the partial sum, not from the raw powers (whose norms grow
    geometrically before the factorial division and would drown the
    diagnostic).
    """
    term = delta(0)
    partial = scale(term, 1 / math.factorial(0))
    lost = 0.0
    m = 0
    while True:
        yield m, partial, lost
        m += 1
        if m == 1:
            term = a
        else:
            term, step = truncated(convolve_fast(term, a), cap)
            lost += step * (1 / math.factorial(m))
        partial = add(partial, scale(term, 1 / math.factorial(m)))


def exp_seq_with_loss(a: CoeffSeq, M: int, cap: int) -> tuple[CoeffSeq, float]:
    """Partial exponential series plus the total clamping loss."""
    if M < 0:
        raise ValueError(f"term count must be non-negative, got {M}")
    if cap < 1 or cap < a.radius:
        raise ValueError(f"cap {cap} must be positive and >= the input radius {a.radius}")
    for m, partial, lost in _exp_partials(a, cap):
        if m == M:
            return partial, lost
    raise AssertionError("unreachable")


def exp_seq(a: CoeffSeq, M: int, cap: int) -> CoeffSeq:
    """Exponential partial sum ``sum_{m=0}^{M} power(a, m, cap) / m!``."""
    return exp_seq_with_loss(a, M, cap)[0]


def exp_tail_bound(a: CoeffSeq, M: int) -> float:
    """A-priori l1 bound on the dropped series tail: ``e**x * x**(M+1)/(M+1)!``.

    Here ``x`` is the l1 norm of ``a``; the bound dominates the l2 error of
    stopping the series after ``M`` terms (clamping losses not included).
    """
    x = float(np.sum(np.abs(a.coeffs)))
    if x == 0.0:
        return 0.0
    try:
        return math.exp(x + (M + 1) * math.log(x) - math.lgamma(M + 2))
    except OverflowError:
        return math.inf


def _harmonic(N: int) -> float:
    return float(np.sum(1.0 / np.arange(1, N + 1)))


def auto_terms(l1: float) -> int:
    """Default series length for an input of l1 norm ``l1``.

    ``ceil(e * l1) + 10`` puts the factorial tail bound well past its knee,
    so the series-truncation error is negligible next to window truncation.
    """
    return math.ceil(math.e * l1) + 10


def _convergence_row(
    N: int, M: int, approx: CoeffSeq, lost: float, probes: Sequence[int]
) -> ConvergenceRow:
    err_c1 = abs(approx.at(1) - 1.0)
    off = [abs(approx.at(n)) for n in probes if n != 1]
    err_off = max(off) if off else 0.0
    l2_err = math.sqrt(
        sum(abs(approx.at(n) - (1.0 if n == 1 else 0.0)) ** 2 for n in probes)
    )
    return ConvergenceRow(N, M, err_c1, err_off, l2_err, lost)


def verify_exp_tau(
    windows: Iterable[int],
    terms: Iterable[int] | None = None,
    probes: Sequence[int] | None = None,
    cap_factor: float = 2.0,
) -> ConvergenceReport:
    """Measure how ``exp_seq(tau(N), M, cap)`` approaches ``delta(1)``.

    One row per (window, terms) pair; ``terms=None`` picks the auto series
    length per window.  ``cap = ceil(cap_factor * N)``.  Errors are measured
    on the probe indices only: full-window l2 error is dominated by the
    slowly decaying tails of the individual series terms, while the claim
    under test is coefficientwise.  The report records failures; it never
    raises on large errors.
    """
    probes = tuple(DEFAULT_PROBES if probes is None else probes)
    if not probes:
        raise ValueError("probe set must be nonempty")
    windows = sorted(set(int(N) for N in windows))
    if not windows:
        raise ValueError("windows must be nonempty")
    if cap_factor <= 0:
        raise ValueError(f"cap_factor must be positive, got {cap_factor}")
    term_list = None if terms is None else sorted(set(int(M) for M in terms))
    if term_list is not None and not term_list:
        raise ValueError("terms must be nonempty")
    if term_list is not None and term_list[0] < 0:
        raise ValueError("terms must be non-negative")

    rows = []
    for N in windows:
        if N < 1:
            raise ValueError(f"window radius must be >= 1, got {N}")
        cap = math.ceil(cap_factor * N)
        if cap < N:
            raise ValueError(f"cap_factor {cap_factor} gives cap {cap} < window {N}")
        bad = [n for n in probes if abs(n) > cap]
        if bad:
            raise ValueError(f"probes {bad} fall outside the cap window [-{cap}, {cap}]")
        Ms = term_list if term_list is not None else [auto_terms(2.0 * _harmonic(N))]
        wanted = set(Ms)
        t = tau(N)
        for m, partial, lost in _exp_partials(t, cap):
            if m in wanted:
                rows.append(_convergence_row(N, m, partial, lost, probes))
            if m >= Ms[-1]:
                break
    return ConvergenceReport(tuple(rows))


def trend_violations(
    report: ConvergenceReport,
    rel_slack: float = 1e-9,
    abs_slack: float = 1e-14,
) -> list[str]:
    """Check the monotone-convergence contract of a report.

    Within each window, once two consecutive term counts both exceed the l1
    norm of the window's sequence (the knee of the factorial decay), the
    error columns must not grow beyond a rounding slack.  Across windows the
    last row of each window must have strictly decreasing err_c1, err_off
    and l2_err, provided every such row is past its knee.  Returns
    human-readable violation descriptions, empty when the report is clean.
    """
    fields = ("err_c1", "err_off", "l2_err")
    by_window: dict[int, list[ConvergenceRow]] = {}
    for row in report.rows:
        by_window.setdefault(row.N, []).append(row)

    violations = []
    for N, group in sorted(by_window.items()):
        knee = 2.0 * _harmonic(N)
        for prev, cur in zip(group, group[1:]):
            if prev.M <= knee or cur.M <= knee:
                continue
            for field in fields:
                p, c = getattr(prev, field), getattr(cur, field)
                if c > p + rel_slack * p + abs_slack:
                    violations.append(
                        f"{field} grew in M at N={N}: "
                        f"M={prev.M} -> {cur.M} gave {p:.6e} -> {c:.6e}"
                    )

    finals = [group[-1] for _, group in sorted(by_window.items())]
    if len(finals) >= 2 and all(r.M > 2.0 * _harmonic(r.N) for r in finals):
        for prev, cur in zip(finals, finals[1:]):
            for field in fields:
                p, c = getattr(prev, field), getattr(cur, field)
                if not c < p:
                    violations.append(
                        f"{field} failed to decrease in N: "
                        f"(N={prev.N}, M={prev.M}) -> (N={cur.N}, M={cur.M}) "
                        f"gave {p:.6e} -> {c:.6e}"
                    )
    return violations


def vassiliev_Z(b: BraidPower, i: int) -> VassilievValue:
    """Degree-``i`` invariant of ``q**k``: the scalar ``k**i / i!``.

    Degree by degree the invariant series of the generator is ``t**i / i!``
    (the volume of the unit ``i``-simplex), and the series is multiplicative,
    which gives ``(k t)**i / i!`` for the ``k``-th power.
    """
    if i < 0:
        raise ValueError(f"degree must be non-negative, got {i}")
    return VassilievValue(i, b.k**i / math.factorial(i))


def psi(i: int, v: VassilievValue, N: int, cap: int) -> CoeffSeq:
    """Linear lift of a degree-``i`` invariant value into sequence space.

    Maps ``c * t**i`` to ``c * tau(N)**i``; the degree must match ``i``.
    """
    if v.degree != i:
        raise ValueError(f"degree mismatch: psi_{i} applied to a degree-{v.degree} value")
    return scale(power(tau(N), i, cap), v.coeff)


def check_psi_multiplicative(
    i: int,
    j: int,
    N: int,
    cap: int,
    probes: Sequence[int] | None = None,
) -> float:
    """Probe-window l2 gap between ``psi_{i+j}(t**(i+j))`` and ``psi_i * psi_j``.

    Both sides are clamped powers of the same sequence, so the gap is zero up
    to clamping loss.  The cross product uses the direct convolution so the
    ``i = 0`` identity factor stays exact.
    """
    probes = tuple(DEFAULT_PROBES if probes is None else probes)
    lhs = power(tau(N), i + j, cap)
    rhs = convolve_direct(power(tau(N), i, cap), power(tau(N), j, cap))
    return math.sqrt(sum(abs(lhs.at(n) - rhs.at(n)) ** 2 for n in probes))


def reconstruct(b: BraidPower, M: int, N: int, cap: int) -> CoeffSeq:
    """Rebuild ``q**k`` from its invariants: ``sum_{i<=M} psi_i(Z_i(q**k))``.

    Evaluates ``sum k**i * tau(N)**i / i!`` with one running clamped product,
    which reproduces the literal psi-sum term for term; the target is
    ``delta(k)``.
    """
    if M < 0:
        raise ValueError(f"term count must be non-negative, got {M}")
    if cap < N:
        raise ValueError(f"cap {cap} is smaller than the window radius {N}")
    t = tau(N)
    k = b.k
    term = delta(0)
    out = scale(term, k**0 / math.factorial(0))
    for i in range(1, M + 1):
        term = t if i == 1 else truncated(convolve_fast(term, t), cap)[0]
        out = add(out, scale(term, k**i / math.factorial(i)))
    return out
