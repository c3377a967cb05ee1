"""Eigenvectors of the finite Fourier transform from periodized
Gaussian-weighted continuous q-Hermite polynomials."""

try:
    from ._qdft import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover
    from _qdft import *  # noqa: F401,F403  (in-tree build layout)

__version__ = "0.1.0"
