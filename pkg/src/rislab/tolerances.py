"""Default numerical tolerances, collected in one place.

Every default below can be overridden per call; the environment variable
``RISLAB_TOL_SCALE`` multiplies all of them at once (intended for CI runs on
noisy hardware), read lazily so tests can monkeypatch it.
"""

from __future__ import annotations

import os

HERMITIAN = 1e-12          # max |A - A^dag| entry for declared-Hermitian input
TRACE_ONE = 1e-12          # |tr(rho) - 1| for density matrices
PSD_FLOOR = -1e-12         # smallest admissible eigenvalue of a state
KRAUS_MATCH = 1e-10        # matrix rep vs Kraus application agreement
TRACE_PRESERVING = 1e-10   # dual applied to identity vs identity
CHOI_POSITIVITY = -1e-10   # smallest admissible Choi eigenvalue of a CPTP map
EIG_CLUSTER = 1e-9         # eigenvalue clustering width for spectral projectors
LOG_FLOOR = 1e-14          # eigenvalues below this refuse log / negative powers
ENTROPY_CLAMP = 1e-15      # state eigenvalue clamp before taking logs
FAITHFUL = 1e-12           # minimum eigenvalue for a state to count as faithful
POWER_ITER = 1e-12         # power iteration convergence tolerance
FIXED_POINT = 1e-11        # invariant state residual
PRIMITIVITY_GAP = 1e-9     # spectral gap below which a map is treated as non-primitive
KRAUS_RANK = 1e-9          # relative rank tolerance for the Kraus span criterion
CHOI_KRAUS_DROP = 1e-11    # Choi eigenvalues below this are dropped on extraction
NE_RESIDUAL = 1e-9         # non-entanglement pass threshold
TRI_RESIDUAL = 1e-12       # basis-conjugation time-reversal pass threshold

POWER_MAX_ITER = 100_000


def scale() -> float:
    return float(os.environ.get("RISLAB_TOL_SCALE", "1.0"))


def scaled(value: float) -> float:
    """Apply the global tolerance scale to a default tolerance."""
    return value * scale()
