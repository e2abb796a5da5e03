"""Two-qubit polarization state tomography toolkit.

Reconstructs photon-pair density matrices from 16 coincidence
measurements (linear inversion plus maximum-likelihood refinement),
computes entanglement measures with Monte-Carlo uncertainties, analyzes
CHSH data, and simulates the forward experiment.
"""

import importlib

try:
    _core = importlib.import_module("._core", __name__)
except ImportError:  # development layout: extension sits on PYTHONPATH
    _core = importlib.import_module("_core")

_names = [n for n in dir(_core) if not n.startswith("_")]
globals().update({n: getattr(_core, n) for n in _names})

__all__ = sorted(_names)
__version__ = "0.1.0"
