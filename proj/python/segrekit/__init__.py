"""Python facade over the exact C++ kernels.

The heavy lifting (exact rational polynomial algebra, Segre varieties,
restriction-degree machinery, coefficient bounds, the monodromy tracker)
lives in the `_core` extension; this package re-exports it and adds small
conveniences.
"""

from segrekit._core import (  # noqa: F401
    __version__,
    c_m_constant,
    degree_bound,
    levi_scalar,
    reflection,
    restricted_degree,
    rho,
    run,
    segre_phi_coeffs,
    sqrt_w_demo,
    verify_embedding_identity,
)

#: parameters with rational square roots, keeping every check exact
CANONICAL_PARAMS = {"eps0": "1/100", "c": "9/4", "eps": "1/4"}


def canonical_config(seed: int = 42, samples: int = 10000) -> dict:
    """Config dict accepted by ``run`` (serialize with ``json.dumps``)."""
    return dict(CANONICAL_PARAMS, seed=seed, samples=samples)
