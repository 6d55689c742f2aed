import numpy as np
from hypothesis import strategies as st

import braidlog as bl


def coeff_seqs(max_radius: int = 8, max_magnitude: float = 1.0):
    """Random finitely supported sequences with coefficients in the unit disc."""

    def build(radius):
        return st.lists(
            st.complex_numbers(
                max_magnitude=max_magnitude, allow_nan=False, allow_infinity=False
            ),
            min_size=2 * radius + 1,
            max_size=2 * radius + 1,
        ).map(lambda vals: bl.CoeffSeq(radius, np.array(vals, dtype=np.complex128)))

    return st.integers(0, max_radius).flatmap(build)


def random_seq(rng: np.random.Generator, radius: int) -> bl.CoeffSeq:
    """Uniform coefficients in the closed unit disc, reproducible from rng."""
    size = 2 * radius + 1
    mag = np.sqrt(rng.uniform(0.0, 1.0, size))
    phase = rng.uniform(0.0, 2.0 * np.pi, size)
    return bl.CoeffSeq(radius, mag * np.exp(1j * phase))
