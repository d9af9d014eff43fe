"""Bell-test optics on the sp(8, R) algebra of four boson modes.

Specs are plain dicts with the same keys as the CLI's JSON config files.
"""

import json
import math

from ._bellsu11 import NonConvergenceError, generator, generator_names, linspace, ou_mandel_fidelity
from . import _bellsu11 as _core

__all__ = [
    "NonConvergenceError",
    "catalog",
    "chsh",
    "convergence",
    "default_spec",
    "generator",
    "generator_names",
    "linspace",
    "ou_mandel_fidelity",
    "run",
    "scan",
    "verify_algebra",
]


def _spec(spec):
    return json.dumps(spec if spec is not None else {"name": "ideal"})


def default_spec(name="ideal"):
    return json.loads(_core.default_spec_json(name))


def catalog():
    return json.loads(_core.catalog_json())


def verify_algebra():
    return json.loads(_core.verify_algebra_json())


def run(spec=None):
    return json.loads(_core.run_json(_spec(spec)))


def chsh(spec=None, maximizer=None):
    # like the CLI: without angles in the spec, use the maximizing settings
    if maximizer is None:
        keys = ("angles", "theta_a", "theta_a_prime", "theta_b", "theta_b_prime")
        maximizer = spec is None or not any(k in spec for k in keys)
    return json.loads(_core.chsh_json(_spec(spec), maximizer))


def scan(spec=None, axis="delta", grid=None, threads=0):
    if grid is None:
        grid = linspace(0.0, math.pi, 65) if axis == "delta" else linspace(0.05, 0.5, 10)
    return json.loads(_core.scan_json(_spec(spec), axis, list(grid), threads))


def convergence(spec=None, cutoffs=(6, 8, 10, 12)):
    return json.loads(_core.convergence_json(_spec(spec), list(cutoffs)))
