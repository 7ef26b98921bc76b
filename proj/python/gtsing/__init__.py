"""Exact arithmetic for 1-singular Gelfand-Tsetlin modules.

Points, ring elements and distribution vectors use the same JSON shapes as
the ``gtsing`` command-line tool, decoded into plain dicts and lists.
"""

import json

from . import _core
from ._core import DivisionByZero, DomainError, Error, PoleError, max_order

__all__ = [
    "DivisionByZero",
    "DomainError",
    "Error",
    "PoleError",
    "act",
    "canonical_point",
    "classify",
    "generic_point",
    "max_order",
    "normalize",
    "phi",
    "phi_text",
    "verify",
]


def _point(point):
    return None if point is None else json.dumps(point)


def normalize(expr, n=0):
    """Canonical text form of a rational function in the x[k][i]."""
    return _core.normalize(expr, n)


def canonical_point(n=3, k=2, i=1, j=2):
    return json.loads(_core.canonical_point(n, k, i, j))


def generic_point(n=3):
    return json.loads(_core.generic_point(n))


def classify(point):
    """{"class": "Generic" | "OneSingular" | "Other", "witness": {...}?}"""
    return json.loads(_core.classify(json.dumps(point)))


def phi(n, r, s):
    """Image of E_rs as a list of {"shift", "coeff"} terms."""
    return json.loads(_core.phi(n, r, s))


def phi_text(n, r, s):
    return _core.phi_text(n, r, s)


def act(r, s, basis, n=3, point=None, singular=None):
    """E_rs applied to a basis vector given as "KIND:SHIFTSPEC".

    Without ``point`` the canonical point for ``singular`` (default (2,1,2))
    is used; with a point and no ``singular`` the classifier's witness is.
    """
    return json.loads(_core.act(r, s, basis, n, _point(point), None if singular is None else tuple(singular)))


def verify(suite, n=3, point=None, singular=None, convention=None):
    """Runs a verification suite and returns its report."""
    return json.loads(
        _core.verify(suite, n, _point(point), None if singular is None else tuple(singular), convention)
    )
