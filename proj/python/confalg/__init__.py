"""Exact verification of conformal-algebra operator identities."""

import json

from ._confalg import (
    UsageError,
    __version__,
    bracket,
    commutator,
    jacobi_residual,
    list_checks,
    matrix_coefficients,
    normal_form,
    ordering_constants,
    two_photon,
    verify,
)


def run(selection=("all",), particles=2, seed=0, jobs=1):
    """Runs checks and returns the JSON report as a dict (no timestamp)."""
    if isinstance(selection, str):
        selection = [selection]
    return json.loads(verify(list(selection), particles, seed, jobs, "json", False))


__all__ = [
    "UsageError",
    "__version__",
    "bracket",
    "commutator",
    "jacobi_residual",
    "list_checks",
    "matrix_coefficients",
    "normal_form",
    "ordering_constants",
    "run",
    "two_photon",
    "verify",
]
