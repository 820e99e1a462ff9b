"""Rigid interval representations of periodic type-A quivers.

Structured values (representations, orbit sets, type-alpha reps) are plain
dicts in the same JSON shapes the command-line tool reads and writes.
"""

import json

from . import _cquiver
from ._cquiver import FiberAnomaly, ParseError

__all__ = [
    "FiberAnomaly",
    "ParseError",
    "check_alpha",
    "count_alpha",
    "enumerate_alpha",
    "enumerate_maximal_rigid",
    "equivariant_count_formula",
    "fold_to_cyclic",
    "hom_ext_dims",
    "interval_ext",
    "is_compatible",
    "star",
    "tau",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def interval_ext(i, j):
    """Ext^1 between lattice intervals given as (lo, hi); None marks an infinite end."""
    return _cquiver.interval_ext(i[0], i[1], j[0], j[1])


def hom_ext_dims(m, n):
    """(dim Hom, dim Ext^1) between two representations."""
    return _cquiver.hom_ext_dims(_dump(m), _dump(n))


def is_compatible(a, b):
    return _cquiver.is_compatible(_dump(a), _dump(b))


def enumerate_maximal_rigid(period, jobs=1):
    return [json.loads(s) for s in _cquiver.enumerate_maximal_rigid(period, jobs)]


def equivariant_count_formula(period):
    return int(_cquiver.equivariant_count_formula(period))


def star(orbit_set):
    return json.loads(_cquiver.star(_dump(orbit_set)))


def fold_to_cyclic(orbit_set, p=2):
    return json.loads(_cquiver.fold_to_cyclic(_dump(orbit_set), p))


def enumerate_alpha(n, jobs=1):
    return [json.loads(s) for s in _cquiver.enumerate_alpha(n, jobs)]


def count_alpha(n, mode="formula", jobs=1):
    return int(_cquiver.count_alpha(n, mode, jobs))


def check_alpha(rep):
    """Dict with keys valid, violation, gap and rigid."""
    return _cquiver.check_alpha(_dump(rep))


def tau(rep):
    return json.loads(_cquiver.tau(_dump(rep)))
