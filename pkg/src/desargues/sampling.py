"""Seeded random elements, points and lines.

Every sampler takes an explicit ``random.Random`` so runs are reproducible
from the seed alone.  Quaternion components are small rationals
``num/den`` with ``|num| <= bound`` and ``1 <= den <= bound``.
"""

from __future__ import annotations

import random

from gmpy2 import mpq

from .field_core import Quaternion

DEFAULT_BOUND = 8


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random, bound: int) -> mpq:
    return mpq(rng.randint(-bound, bound), rng.randint(1, bound))


def random_element(ring, rng: random.Random, bound: int = DEFAULT_BOUND):
    if ring.is_finite:
        return rng.randrange(ring.q)
    return Quaternion._raw(*(random_rational(rng, bound) for _ in range(4)))


def random_nonzero(ring, rng: random.Random, bound: int = DEFAULT_BOUND):
    while True:
        e = random_element(ring, rng, bound)
        if not ring.is_zero(e):
            return e


def random_point(plane, rng: random.Random, bound: int = DEFAULT_BOUND):
    r = plane.ring
    return plane.point(random_element(r, rng, bound), random_element(r, rng, bound))


def random_direction(plane, rng: random.Random, bound: int = DEFAULT_BOUND):
    r = plane.ring
    while True:
        dx, dy = random_element(r, rng, bound), random_element(r, rng, bound)
        if not (r.is_zero(dx) and r.is_zero(dy)):
            return dx, dy


def random_line(plane, rng: random.Random, bound: int = DEFAULT_BOUND):
    P = random_point(plane, rng, bound)
    return plane.line_through(P, plane.translate(P, random_direction(plane, rng, bound)))


def random_point_on(plane, line, rng: random.Random, bound: int = DEFAULT_BOUND):
    """Uniform on finite lines; ``base + lam * direction`` otherwise."""
    r = plane.ring
    base = plane.base_point(line)
    lam = random_element(r, rng, bound)
    return plane.translate(base, plane.direction(line), lam)
