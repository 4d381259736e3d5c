"""
Analytic return probabilities from a source of degree N whose dynamics stays on a two-dimensional
subspace. Every formula is the return curve of a 2x2 block [[a, sqrt(N)], [sqrt(N), k]]:
    p(t) = 1 - 2N / w^2 * (1 - cos(w t)),   w = sqrt((a - k)^2 + 4N)
All functions accept scalar or array `t`.
"""
import numpy as np


def _require_degree(N):
    if N < 1:
        raise ValueError(f"source degree must be >= 1, got {N}")


def two_level_return(detuning, N, t):
    """Return probability of the block whose diagonal entries differ by `detuning`."""
    _require_degree(N)
    w2 = detuning ** 2 + 4 * N
    return 1 - 2 * N / w2 * (1 - np.cos(np.sqrt(w2) * np.asarray(t, dtype=float)))


def closed_form_cone_adjacency(m, N, t):
    """Apex of a cone over an m-regular graph on N vertices, zero phases."""
    if m < 0:
        raise ValueError(f"base degree must be >= 0, got {m}")
    return two_level_return(m, N, t)


def closed_form_swift(N, t):
    _require_degree(N)
    return np.cos(np.sqrt(N) * np.asarray(t, dtype=float)) ** 2


def closed_form_laplacian_cone(N, t):
    """
    Apex of any classical-Laplacian cone of apex degree N. The block is [[N, -sqrt(N)], [-sqrt(N), 1]]
    whatever the base graph, so the curve only depends on N. Its minimum is ((N-1)/(N+1))^2.
    """
    return two_level_return(N - 1, N, t)


def closed_form_laplacian_reduced(k, N, t):
    """Laplacian block [[N, .], [., k]]; k = N gives the swift curve."""
    return two_level_return(k - N, N, t)
