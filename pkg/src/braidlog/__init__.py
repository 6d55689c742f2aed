"""Numerical laboratory for the two-strand pure braid group inside l2(Z).

The group is infinite cyclic, so its elements embed as unit sequences; the
package constructs the generator's logarithm as an explicit coefficient
sequence, exponentiates it by truncated convolution series, checks the
result against closed-form and quadrature Fourier oracles, and rebuilds
generator powers from their degree-graded invariants.
"""

from .braid import (
    DEFAULT_PROBES,
    BraidPower,
    ConvergenceReport,
    ConvergenceRow,
    VassilievValue,
    auto_terms,
    check_psi_multiplicative,
    exp_seq,
    exp_seq_with_loss,
    exp_tail_bound,
    log_candidate,
    log_candidate_rational,
    psi,
    reconstruct,
    tau,
    trend_violations,
    vassiliev_Z,
    verify_exp_tau,
)
from .conv import convolve_direct, convolve_fast, power, power_with_loss
from .fourier import (
    QuadratureConvergenceError,
    QuadratureMethod,
    QuadratureSpec,
    cn_exp_sawtooth_quad,
    cn_sawtooth,
    cn_theta_power_closed,
    cn_theta_power_quad,
    parseval_pair,
)
from .seq import (
    CoeffSeq,
    add,
    allclose,
    delta,
    inner,
    l1_norm,
    l2_norm,
    max_abs_diff,
    scale,
    truncated,
    with_radius,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "BraidPower",
    "CoeffSeq",
    "ConvergenceReport",
    "ConvergenceRow",
    "DEFAULT_PROBES",
    "QuadratureConvergenceError",
    "QuadratureMethod",
    "QuadratureSpec",
    "VassilievValue",
    "add",
    "allclose",
    "auto_terms",
    "check_psi_multiplicative",
    "cn_exp_sawtooth_quad",
    "cn_sawtooth",
    "cn_theta_power_closed",
    "cn_theta_power_quad",
    "convolve_direct",
    "convolve_fast",
    "delta",
    "exp_seq",
    "exp_seq_with_loss",
    "exp_tail_bound",
    "inner",
    "l1_norm",
    "l2_norm",
    "log_candidate",
    "log_candidate_rational",
    "max_abs_diff",
    "parseval_pair",
    "power",
    "power_with_loss",
    "psi",
    "reconstruct",
    "scale",
    "tau",
    "trend_violations",
    "truncated",
    "vassiliev_Z",
    "verify_exp_tau",
    "with_radius",
    "zero",
]
