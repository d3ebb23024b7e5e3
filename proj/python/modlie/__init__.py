"""Modular Lie algebra computations backed by the C++ core.

Scenario helpers return the decoded JSON report; every report has a boolean
``pass`` field and a list of named checks.
"""

import json

from . import _core
from ._core import (
    LieAlgebra,
    ModlieError,
    chevalley,
    family,
    from_dump,
    kernel,
    lucas_binom,
    rank,
    rref,
)

__all__ = [
    "LieAlgebra",
    "ModlieError",
    "census",
    "chevalley",
    "family",
    "filtration",
    "from_dump",
    "kernel",
    "lucas_binom",
    "rank",
    "rref",
    "verify_cartan",
    "verify_e8_w",
    "verify_g2_w",
]


def census(type, p, d=0):
    return json.loads(_core.census(type, p, d))


def verify_e8_w(seed=0xC0FFEE):
    return json.loads(_core.verify_e8_w(seed))


def verify_g2_w(seed=0xC0FFEE):
    return json.loads(_core.verify_g2_w(seed))


def verify_cartan(seed=0xC0FFEE):
    return json.loads(_core.verify_cartan(seed))


def filtration(ambient, sub, seed=0xC0FFEE):
    return json.loads(_core.filtration(ambient, sub, seed))
