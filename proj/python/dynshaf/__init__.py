"""Exact tools for good reduction of point sets and morphisms on projective
space over Q: S-unit equation solving, candidate point enumeration,
good-reduction certificates, frame normalization, Macaulay resultants,
morphism interpolation and orbit classification.

The heavy lifting happens in the C++ extension ``dynshaf._core``; this
package provides a thin dict-based wrapper around its JSON interface.
"""

import json as _json

from dynshaf import _core

__version__ = _core.version()


def _parse(payload):
    return _json.loads(payload)


def valuation(q, p):
    """v_p(q) for a nonzero rational given as string/int and a prime p."""
    return _core.valuation(str(q), str(p))


def is_s_unit(q, s):
    return _core.is_s_unit(str(q), _json.dumps(list(s)))


def factor_integer(n):
    """Prime factorization of |n| as a list of [prime, exponent] pairs."""
    return _parse(_core.factor_integer(str(n)))


def reduce_mod_p(q, p):
    return _parse(_core.reduce_mod_p(str(q), str(p)))


def normalize_point(point, s=()):
    return _parse(_core.normalize_point(_json.dumps(point), _json.dumps(list(s))))


def reduce_point(point, p):
    return _parse(_core.reduce_point(_json.dumps(point), str(p)))


def bad_primes_pointset(pointset, s=()):
    return _parse(_core.bad_primes_pointset(_json.dumps(pointset), _json.dumps(list(s))))


def in_general_position(pointset):
    return _core.in_general_position(_json.dumps(pointset))


def frame_map(points):
    return _parse(_core.frame_map(_json.dumps(points)))


def is_in_pl_os(matrix, s=()):
    return _core.is_in_pl_os(_json.dumps(matrix), _json.dumps(list(s)))


def orbit_equivalent(x1, x2, s=()):
    return _parse(_core.orbit_equivalent(_json.dumps(x1), _json.dumps(x2), _json.dumps(list(s))))


def solve_unit_equation(s, bound):
    return _parse(_core.solve_unit_equation(_json.dumps(list(s)), bound))


def exceptional_units(s, bound):
    return _parse(_core.exceptional_units(_json.dumps(list(s)), bound))


def candidate_points(dimension, s, bound, filtered=False):
    return _parse(_core.candidate_points(dimension, _json.dumps(list(s)), bound, filtered))


def macaulay_resultant(morphism):
    return _core.macaulay_resultant(_json.dumps(morphism))


def good_reduction_primes(morphism, s=()):
    return _parse(_core.good_reduction_primes(_json.dumps(morphism), _json.dumps(list(s))))


def evaluate(morphism, point):
    return _parse(_core.evaluate(_json.dumps(morphism), _json.dumps(point)))


def interpolate(pairs, dimension, degree):
    return _parse(_core.interpolate(_json.dumps(pairs), dimension, degree))


def equalizer_forms(f, g):
    return _parse(_core.equalizer_forms(_json.dumps(f), _json.dumps(g)))


def check_membership(triple, s=()):
    return _parse(_core.check_membership(_json.dumps(triple), _json.dumps(list(s))))


def conjugate_triple(triple, matrix):
    return _parse(_core.conjugate_triple(_json.dumps(triple), _json.dumps(matrix)))


def classify_orbits(triples, s=()):
    return _parse(_core.classify_orbits(_json.dumps(triples), _json.dumps(list(s))))


def build_fc(c):
    return _parse(_core.build_fc(c))


def pythagorean_points(count):
    return _parse(_core.pythagorean_points(count))


def census(dimension, degree, orbit_size, s, height, bound):
    return _parse(_core.census(dimension, degree, orbit_size, _json.dumps(list(s)), height, bound))
