"""Exact bilevel pricing: solver, hardness compilers and verification sweeps.

Documents are accepted as JSON text or as already-decoded dicts; results come
back as dicts. Exact numbers stay strings of the form "n/d"; use ``fraction``
to turn them into :class:`fractions.Fraction`.
"""

import json
from fractions import Fraction

from . import _pricelab
from ._pricelab import (
    DEFAULT_CAP,
    ArgumentError,
    CertificationError,
    NoFollowerSolutionError,
    ParseError,
    ResourceError,
)

__all__ = [
    "DEFAULT_CAP",
    "ArgumentError",
    "CertificationError",
    "NoFollowerSolutionError",
    "ParseError",
    "ResourceError",
    "check_reduction",
    "compile_theorem2",
    "fraction",
    "lift",
    "parse_dimacs",
    "qdnf",
    "qdnf_oracle",
    "reduce",
    "solve",
    "verify_sweep",
    "weight_lift",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def fraction(value):
    return Fraction(value)


def qdnf(n, terms):
    """Build a qdnf document; literals 1..n are a_i, n+1..2n are b_i, negative for negation."""
    return {"schema_version": "1", "kind": "qdnf", "payload": {"n": n, "terms": terms}, "provenance": []}


def qdnf_oracle(doc):
    return _pricelab.qdnf_oracle(_text(doc))


def compile_theorem2(doc):
    return json.loads(_pricelab.compile_theorem2(_text(doc)))


def solve(doc, domain=None, threshold=None, cap=DEFAULT_CAP):
    if threshold is not None:
        threshold = str(threshold)
    return json.loads(_pricelab.solve(_text(doc), domain, threshold, cap))


def reduce(pipeline, doc, cap=DEFAULT_CAP):
    return json.loads(_pricelab.reduce(pipeline, _text(doc), cap))


def lift(mode, doc, cap=DEFAULT_CAP):
    return json.loads(_pricelab.lift(mode, _text(doc), cap))


def weight_lift(doc):
    return json.loads(_pricelab.weight_lift(_text(doc)))


def check_reduction(doc, cap=DEFAULT_CAP):
    return json.loads(_pricelab.check_reduction(_text(doc), cap))


def parse_dimacs(text):
    return json.loads(_pricelab.parse_dimacs(text))


def verify_sweep(n=1, max_terms=2, exhaustive=True, count=0, seed=1, jobs=1, check_domains=False):
    return json.loads(_pricelab.verify_sweep(n, max_terms, exhaustive, count, seed, jobs, check_domains))
