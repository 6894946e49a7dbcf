"""Finite involution geometries, K-loops and Frobenius extensions."""

import json as _json

from . import _core
from ._core import FiniteGroup, MockhypError, catalog, default_corpus, run_cli

__all__ = [
    "FiniteGroup",
    "MockhypError",
    "catalog",
    "default_corpus",
    "extend_frobenius",
    "kloop_table",
    "lemma_battery",
    "lines",
    "permutation_characteristic",
    "run_cli",
    "splitting_suite",
    "verify_kloop",
    "verify_mhrs",
]

lines = _core.lines
kloop_table = _core.kloop_table
permutation_characteristic = _core.permutation_characteristic


def _report(text):
    return _json.loads(text)


def verify_mhrs(group, q):
    return _report(_core.verify_mhrs(group, q))


def lemma_battery(group, q):
    return _report(_core.lemma_battery(group, q))


def splitting_suite(group, q):
    return _report(_core.splitting_suite(group, q))


def verify_kloop(table):
    return _report(_core.verify_kloop(table))


def extend_frobenius(p, d):
    out = dict(_core.extend_frobenius(p, d))
    out["report"] = _report(out["report"])
    return out
