"""Spherical functions on affine buildings."""

import json

from ._core import (
    ConfigError,
    Context,
    n_lambda,
    norm_at_one,
    orthogonality_residual,
    run_cli,
    spherical,
    structure_constants,
)


def run(*args):
    """Run a CLI command and return the decoded JSON report and exit code."""
    code, out, err = run_cli([str(a) for a in args])
    if code == 2:
        raise ConfigError(err.strip())
    return json.loads(out), code


__all__ = [
    "ConfigError",
    "Context",
    "n_lambda",
    "norm_at_one",
    "orthogonality_residual",
    "run",
    "run_cli",
    "spherical",
    "structure_constants",
]
