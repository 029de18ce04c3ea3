"""Python front end for the evalg C++ library.

Every value is exchanged in the same JSON encoding the command line tool
uses: big integers and rationals are decimal strings, ring elements are
{"ring", "value"} objects and containers carry their ring name.
"""

import json

from . import _core
from ._core import EvalgError

__all__ = [
    "EvalgError",
    "binomial_dual_coordinates",
    "build_certificate",
    "build_e",
    "classify_pair",
    "ds_witness",
    "error_code",
    "ev_star",
    "fpq_family",
    "gaussian_family",
    "hopf_density_certificate",
    "hopf_diagonal",
    "injectivity_witness",
    "is_numerical_sampled",
    "is_numerical_zz",
    "membership",
    "parse_element",
    "run_cli",
    "series_compose",
    "series_reverse",
    "verify_certificate",
    "verify_hopf_certificate",
    "verify_key_formula",
]


def _enc(value):
    return value if isinstance(value, str) else json.dumps(value)


def _strs(values):
    return [str(v) for v in values]


def _elems(values):
    """JSON list of elements; Python ints become decimal strings."""
    return json.dumps([str(v) if isinstance(v, int) else v for v in values])


def error_code(exc):
    """Machine-readable code of an EvalgError, e.g. "CoefficientOutsideL"."""
    return exc.args[0]


def run_cli(*args):
    """Runs the CLI in-process and returns (exit_code, stdout, stderr)."""
    return _core.run_cli(_strs(args))


def parse_element(text, ring):
    return json.loads(_core.parse_element(str(text), ring))


def is_numerical_zz(poly):
    """poly: {"coeffs": [...]} over Q, or a plain list of coefficients."""
    if isinstance(poly, list):
        poly = {"coeffs": _strs(poly)}
    return json.loads(_core.is_numerical_zz(_enc(poly)))


def is_numerical_sampled(poly, pair, samples=()):
    return json.loads(_core.is_numerical_sampled(_enc(poly), pair, _elems(samples)))


def binomial_dual_coordinates(k, d):
    return [int(c) for c in _core.binomial_dual_coordinates(int(k), int(d))]


def fpq_family(p, n):
    return json.loads(_core.fpq_family(p, n))


def gaussian_family(n):
    return json.loads(_core.gaussian_family(n))


def build_e(omega, l, pair="Z/Q"):
    return json.loads(_core.build_e(_elems(omega), l, pair))


def membership(f, pair="Z/Z"):
    return json.loads(_core.membership(_enc(f), pair))


def verify_key_formula(omega, l, trunc, pair="Z/Z"):
    return json.loads(_core.verify_key_formula(_elems(omega), l, trunc, pair))


def ev_star(g, n, pair="Z/Q"):
    return json.loads(_core.ev_star(_enc(g), n, pair))


def injectivity_witness(g, pair="Z/Q"):
    return _core.injectivity_witness(_enc(g), pair)


def ds_witness(pair, n, budget=100):
    return json.loads(_core.ds_witness(pair, n, budget))


def build_certificate(pair, points, trunc):
    return json.loads(_core.build_certificate(pair, _elems(points), trunc))


def verify_certificate(cert):
    return json.loads(_core.verify_certificate(_enc(cert)))


def classify_pair(pair):
    return json.loads(_core.classify_pair(pair))


def series_compose(f, g):
    return json.loads(_core.series_compose(_enc(f), _enc(g)))


def series_reverse(f):
    return json.loads(_core.series_reverse(_enc(f)))


def hopf_diagonal(algebra, k, legs=None, p=0):
    return json.loads(_core.hopf_diagonal(algebra, p, k, k if legs is None else legs))


def hopf_density_certificate(algebra, pair, weight, p=0):
    return json.loads(_core.hopf_density_certificate(algebra, p, pair, weight))


def verify_hopf_certificate(cert):
    return json.loads(_core.verify_hopf_certificate(_enc(cert)))
