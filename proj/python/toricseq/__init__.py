"""Exceptional sequences of line bundles on smooth projective toric surfaces.

Surfaces are given by their self-intersection numbers. Systems and sequences
are dicts in the same JSON shapes the command-line tool reads, with 1-based
ray labels.
"""

import json

from . import _toricseq
from ._toricseq import Error

__all__ = [
    "Error",
    "surface_info",
    "cohomology",
    "oracle_cohomology",
    "check_system",
    "is_exceptional",
    "constructibility_witness",
    "certify_full",
    "sequence_of_system",
    "orbit_report",
    "reproduce_paper",
]


def _dump(document):
    return document if isinstance(document, str) else json.dumps(document)


def surface_info(selfints):
    return json.loads(_toricseq.surface_info(list(selfints)))


def cohomology(selfints, coeffs):
    """(h0, h1, h2) of O(sum c_i D_i)."""
    return _toricseq.cohomology(list(selfints), list(coeffs))


def oracle_cohomology(selfints, coeffs):
    """Same dimensions by brute-force lattice point counting."""
    return _toricseq.oracle_cohomology(list(selfints), list(coeffs))


def check_system(document):
    return json.loads(_toricseq.check_system(_dump(document)))


def is_exceptional(document):
    return _toricseq.is_exceptional(_dump(document))


def constructibility_witness(document):
    """Witness dict, or None when the system is not constructible."""
    return json.loads(_toricseq.constructibility_witness(_dump(document)))


def certify_full(document, max_depth=3):
    return json.loads(_toricseq.certify_full(_dump(document), max_depth))


def sequence_of_system(document):
    return json.loads(_toricseq.sequence_of_system(_dump(document)))


def orbit_report(selfints, threads=0):
    return json.loads(_toricseq.orbit_report(list(selfints), threads))


def reproduce_paper(threads=0):
    return json.loads(_toricseq.reproduce_paper(threads))
