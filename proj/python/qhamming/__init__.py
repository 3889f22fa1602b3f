# Copyright the qhamming developers.
# SPDX-License-Identifier: Apache-2.0
"""Certified seminorms and transport distances on finite tensor products.

Thin wrapper over the compiled `_core` module: report-shaped results come
back as dicts (parsed from the deterministic JSON the C++ layer emits),
matrices as numpy arrays.
"""

import json as _json

from ._core import (
    ConvergenceError,
    ValidationError,
    decomposition_value,
    hamming_lipschitz,
    kantorovich_value,
    telescope,
    version,
)
from . import _core as _c

__all__ = [
    "ConvergenceError",
    "ValidationError",
    "decomposition_value",
    "dist_to_tilde",
    "hamming_lipschitz",
    "kantorovich_value",
    "seminorm",
    "telescope",
    "verify",
    "version",
    "w1",
    "witness",
]

__version__ = version()


def seminorm(a, site_dims, tol=1e-6):
    """Certified site seminorms of an observable; returns a report dict."""
    return _json.loads(_c.seminorm_json(a, list(site_dims), tol))


def dist_to_tilde(a, site, site_dims, tol=1e-6):
    """Two-sided certificate for the distance from `a` to the operators
    acting as the identity on `site`."""
    return _json.loads(_c.dist_to_tilde_json(a, site, list(site_dims), tol))


def w1(rho, sigma, site_dims, tol=1e-4):
    """Certified transport distance between two density matrices."""
    return _json.loads(_c.w1_json(rho, sigma, list(site_dims), tol))


def witness(site_dims, tol=1e-6):
    """Diameter witness for a product of sites; returns a report dict."""
    return _json.loads(_c.witness_json(list(site_dims), tol))


def verify(seed=20260815, tol=1e-6, suite="all", sizes=()):
    """Run the property battery and return its report dict."""
    return _json.loads(_c.verify_json(seed, tol, suite, list(sizes)))
