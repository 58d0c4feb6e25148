"""The coordinate affine plane AG(2, D) over a division ring D.

Lines are stored as normalized triples ``(a, b, c)`` standing for the point
set ``{(x, y) : x*a + y*b = c}``, coefficients multiplying on the right.
Consequently a line through P with direction d is ``{P + lam*d}`` with the
scalar on the left.  Normalization right-multiplies by ``a^-1`` (or ``b^-1``
when ``a = 0``) so that the leading coefficient is 1; equal point sets give
equal triples.

Besides the primitives, this module holds the checkers for the three
affine-plane axioms, the parallel form of Desargues' axiom and the affine
Pappus statement.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from functools import cached_property
from typing import Any, NamedTuple, Optional, Union

import numpy as np

from . import kernels
from .field_core import RingContext, UnsupportedError
from .report import Report
from .sampling import (
    DEFAULT_BOUND,
    make_rng,
    random_direction,
    random_element,
    random_line,
    random_point,
    random_point_on,
)


# samplers give up after this many rejected draws per requested sample
MAX_REJECT_FACTOR = 50


class DegenerateInputError(ValueError):
    """A constructive operation got inputs its construction cannot use."""


class HypothesisViolation(ValueError):
    """A configuration fails one of the hypotheses of the theorem it is fed to."""

    def __init__(self, clause: str):
        super().__init__(f"hypothesis violated: {clause}")
        self.clause = clause


class AffinePoint(NamedTuple):
    x: Any
    y: Any


class AffineLine(NamedTuple):
    a: Any
    b: Any
    c: Any


class Meet(enum.Enum):
    PARALLEL = "parallel"
    COINCIDENT = "coincident"


Intersection = Union[AffinePoint, Meet]


class Plane:
    """AG(2, D) for a ring context from :mod:`desargues.field_core`."""

    def __init__(self, ring: RingContext):
        self.ring = ring
        self.is_finite = ring.is_finite
        r = ring
        self.origin = AffinePoint(r.zero, r.zero)
        self.x_axis = AffineLine(r.zero, r.one, r.zero)
        self.y_axis = AffineLine(r.one, r.zero, r.zero)

    def __repr__(self) -> str:
        return f"Plane({self.ring!r})"

    # -- construction helpers ---------------------------------------------
    def point(self, x, y) -> AffinePoint:
        return AffinePoint(x, y)

    def make_line(self, a, b, c) -> AffineLine:
        """Normalize an arbitrary equation ``x*a + y*b = c``."""
        r = self.ring
        if not r.is_zero(a):
            s = r.inv(a)
            return AffineLine(r.one, r.mul(b, s), r.mul(c, s))
        if r.is_zero(b):
            raise DegenerateInputError("line equation with a = b = 0")
        s = r.inv(b)
        return AffineLine(r.zero, r.one, r.mul(c, s))

    def translate(self, P: AffinePoint, d, lam=None) -> AffinePoint:
        """``P + lam*d`` (``lam`` defaults to one)."""
        r = self.ring
        dx, dy = d
        if lam is not None:
            dx, dy = r.mul(lam, dx), r.mul(lam, dy)
        return AffinePoint(r.add(P.x, dx), r.add(P.y, dy))

    def direction(self, line: AffineLine) -> tuple:
        r = self.ring
        if r.is_zero(line.a):
            return (r.one, r.zero)
        return (r.neg(line.b), r.one)

    def base_point(self, line: AffineLine) -> AffinePoint:
        r = self.ring
        if r.is_zero(line.a):
            return AffinePoint(r.zero, line.c)
        return AffinePoint(line.c, r.zero)

    # -- primitives ---------------------------------------------------------
    def contains(self, line: AffineLine, P: AffinePoint) -> bool:
        r = self.ring
        return r.add(r.mul(P.x, line.a), r.mul(P.y, line.b)) == line.c

    def line_through(self, P: AffinePoint, Q: AffinePoint) -> AffineLine:
        if P == Q:
            raise DegenerateInputError(f"line_through needs distinct points, got {P} twice")
        r = self.ring
        dx = r.sub(Q.x, P.x)
        if r.is_zero(dx):
            return AffineLine(r.one, r.zero, P.x)
        m = r.mul(r.inv(dx), r.sub(Q.y, P.y))
        if r.is_zero(m):
            return AffineLine(r.zero, r.one, P.y)
        mi = r.inv(m)
        return AffineLine(r.one, r.neg(mi), r.sub(P.x, r.mul(P.y, mi)))

    def parallel_through(self, P: AffinePoint, line: AffineLine) -> AffineLine:
        r = self.ring
        return AffineLine(line.a, line.b, r.add(r.mul(P.x, line.a), r.mul(P.y, line.b)))

    def is_parallel(self, l1: AffineLine, l2: AffineLine) -> bool:
        """Equal or disjoint."""
        return l1.a == l2.a and l1.b == l2.b

    def intersect(self, l1: AffineLine, l2: AffineLine) -> Intersection:
        if self.is_parallel(l1, l2):
            return Meet.COINCIDENT if l1.c == l2.c else Meet.PARALLEL
        r = self.ring
        if r.is_zero(l1.a):
            l1, l2 = l2, l1
        if r.is_zero(l2.a):
            y = l2.c
        else:
            y = r.mul(r.sub(l1.c, l2.c), r.inv(r.sub(l1.b, l2.b)))
        return AffinePoint(r.sub(l1.c, r.mul(y, l1.b)), y)

    def collinear(self, P: AffinePoint, Q: AffinePoint, R: AffinePoint) -> bool:
        if P == Q or P == R or Q == R:
            return True
        return self.contains(self.line_through(P, Q), R)

    # -- text ----------------------------------------------------------------
    def format_point(self, P: AffinePoint) -> str:
        fmt = self.ring.format
        return f"({fmt(P.x)}; {fmt(P.y)})"

    def format_line(self, line: AffineLine) -> str:
        fmt = self.ring.format
        return f"[{fmt(line.a)}; {fmt(line.b)}; {fmt(line.c)}]"

    def parse_point(self, text: str) -> AffinePoint:
        """``x,y`` with each coordinate in the ring's element syntax.

        GF(p^k) coordinates are ``k`` comma-separated coefficients each, so a
        point is ``2k`` integers; quaternion coordinates are ``a b c d``.
        """
        r = self.ring
        text = text.strip().strip("()")
        if r.is_finite:
            parts = [s for s in text.replace(";", ",").split(",")]
            if len(parts) != 2 * r.k:
                raise ValueError(f"point needs {2 * r.k} coefficients, got {text!r}")
            return AffinePoint(r.parse(",".join(parts[: r.k])), r.parse(",".join(parts[r.k :])))
        parts = text.replace(";", ",").split(",")
        if len(parts) != 2:
            raise ValueError(f"quaternion point needs 'x,y', got {text!r}")
        return AffinePoint(r.parse(parts[0]), r.parse(parts[1]))

    # -- finite enumeration -------------------------------------------------
    def _require_finite(self, what: str) -> None:
        if not self.is_finite:
            raise UnsupportedError(f"{what} needs a finite plane")

    def enumerate_points(self) -> list[AffinePoint]:
        self._require_finite("enumerate_points")
        q = self.ring.q
        return [AffinePoint(x, y) for x in range(q) for y in range(q)]

    def enumerate_lines(self) -> list[AffineLine]:
        self._require_finite("enumerate_lines")
        return [AffineLine(*map(int, row)) for row in kernels.canonical_lines(self.ring.q)]

    def points_on(self, line: AffineLine) -> list[AffinePoint]:
        self._require_finite("points_on")
        return [self.point_from_id(int(i)) for i in self.tables.pts_on_line[self.line_id(line)]]

    def point_id(self, P: AffinePoint) -> int:
        return P.x * self.ring.q + P.y

    def point_from_id(self, i: int) -> AffinePoint:
        return AffinePoint(*divmod(int(i), self.ring.q))

    def line_id(self, line: AffineLine) -> int:
        q = self.ring.q
        if line.a == 0:
            return line.c
        return q + line.b * q + line.c

    @cached_property
    def tables(self) -> kernels.PlaneTables:
        self._require_finite("plane tables")
        r = self.ring
        return kernels.build_plane_tables(r.add_table, r.neg_table, r.mul_table, r.inv_table, r.q)

    def first_point_off(self, line: AffineLine) -> AffinePoint:
        """First point off ``line`` in canonical order (finite), else a fixed offset."""
        if self.is_finite:
            col = self.tables.incidence[:, self.line_id(line)]
            return self.point_from_id(int(np.argmin(col)))
        r = self.ring
        P = self.base_point(line)
        cand = AffinePoint(P.x, r.add(P.y, r.one))
        if self.contains(line, cand):
            cand = AffinePoint(r.add(P.x, r.one), P.y)
        return cand


def make_plane(ring: RingContext) -> Plane:
    return Plane(ring)


# ---------------------------------------------------------------------------
# affine axioms
# ---------------------------------------------------------------------------

def check_affine_axioms(
    plane: Plane,
    mode: str = "exhaustive",
    seed: Optional[int] = None,
    samples: int = 10_000,
    bound: int = DEFAULT_BOUND,
) -> Report:
    """Check unique joining line, Playfair and a non-collinear triple."""
    if mode == "exhaustive":
        return _axioms_exhaustive(plane)
    if mode == "sampled":
        return _axioms_sampled(plane, _need_seed(seed), samples, bound)
    raise ValueError(f"unknown mode {mode!r}")


def _need_seed(seed):
    if seed is None:
        raise ValueError("sampled mode requires a seed")
    return seed


def _third_axiom(plane: Plane, report: Report) -> None:
    r = plane.ring
    P, Q = plane.origin, AffinePoint(r.one, r.zero)
    R = plane.first_point_off(plane.line_through(P, Q))
    ok = not plane.collinear(P, Q, R)
    report.add("axioms", "3-noncollinear-triple", ok,
               " ".join(plane.format_point(X) for X in (P, Q, R)))


def _axioms_exhaustive(plane: Plane) -> Report:
    plane._require_finite("exhaustive axiom check")
    T = plane.tables
    M = T.incidence
    pair, playfair = kernels.axiom_counts(M)
    pts = plane.enumerate_points()
    lines = plane.enumerate_lines()
    n = len(pts)
    report = Report()

    # axiom 1: count of lines through each pair, and line_through agrees
    witness = ""
    off = pair + np.eye(n, dtype=pair.dtype) * (1 - np.diag(pair))
    bad = np.argwhere(off != 1)
    if len(bad):
        i, j = bad[0]
        witness = f"{plane.format_point(pts[i])} {plane.format_point(pts[j])} lines={pair[i, j]}"
    else:
        for i in range(n):
            for j in range(i + 1, n):
                lid = plane.line_id(plane.line_through(pts[i], pts[j]))
                if not (M[i, lid] and M[j, lid]):
                    witness = f"line_through{plane.format_point(pts[i])},{plane.format_point(pts[j])}"
                    break
            if witness:
                break
    report.add("axioms", "1-unique-line", not witness, witness)

    # axiom 2: exactly one line through P missing l, and parallel_through is it
    witness = ""
    bad = np.argwhere(~M & (playfair != 1))
    if len(bad):
        i, li = bad[0]
        witness = f"{plane.format_point(pts[i])} {plane.format_line(lines[li])} count={playfair[i, li]}"
    else:
        for i, P in enumerate(pts):
            for li, line in enumerate(lines):
                par = plane.parallel_through(P, line)
                pid = plane.line_id(par) if _is_canonical(plane, par) else -1
                if pid < 0 or not M[i, pid]:
                    ok = False
                elif M[i, li]:
                    ok = pid == li
                else:
                    ok = not (M[:, pid] & M[:, li]).any()
                if not ok:
                    witness = (f"parallel_through{plane.format_point(P)},{plane.format_line(line)}"
                               f" -> {plane.format_line(par)}")
                    break
            if witness:
                break
    report.add("axioms", "2-playfair", not witness, witness)
    _third_axiom(plane, report)
    return report


def _is_canonical(plane: Plane, line) -> bool:
    q = plane.ring.q
    ok_range = all(isinstance(v, (int, np.integer)) and 0 <= v < q for v in line)
    return ok_range and ((line.a == 0 and line.b == 1) or line.a == 1)


def _axioms_sampled(plane: Plane, seed: int, samples: int, bound: int) -> Report:
    rng = make_rng(seed)
    report = Report()
    w1 = w2 = ""
    for _ in range(samples):
        P = random_point(plane, rng, bound)
        Q = random_point(plane, rng, bound)
        if P == Q:
            continue
        L = plane.line_through(P, Q)
        R = random_point_on(plane, L, rng, bound)
        ok = plane.contains(L, P) and plane.contains(L, Q) and plane.contains(L, R)
        if ok and R not in (P, Q):
            ok = plane.line_through(P, R) == L and plane.line_through(R, Q) == L
        if not ok:
            w1 = f"{plane.format_point(P)} {plane.format_point(Q)}"
            break
    report.add("axioms", "1-unique-line", not w1, w1)

    for _ in range(samples):
        P = random_point(plane, rng, bound)
        line = random_line(plane, rng, bound)
        par = plane.parallel_through(P, line)
        if plane.contains(line, P):
            ok = par == line
        else:
            ok = plane.contains(par, P) and plane.intersect(par, line) is Meet.PARALLEL
            d = random_direction(plane, rng, bound)
            other = plane.line_through(P, plane.translate(P, d))
            if ok and not plane.is_parallel(other, line):
                X = plane.intersect(other, line)
                ok = isinstance(X, AffinePoint) and plane.contains(other, X) and plane.contains(line, X)
        if not ok:
            w2 = f"{plane.format_point(P)} {plane.format_line(line)}"
            break
    report.add("axioms", "2-playfair", not w2, w2)
    _third_axiom(plane, report)
    return report


# ---------------------------------------------------------------------------
# Desargues
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DesarguesConfig:
    """Three distinct parallel carriers and two triangles ABC, A'B'C' on them."""

    lk: AffineLine
    ll: AffineLine
    lm: AffineLine
    A: AffinePoint
    B: AffinePoint
    C: AffinePoint
    A2: AffinePoint
    B2: AffinePoint
    C2: AffinePoint

    def describe(self, plane: Plane) -> str:
        names = {"A2": "A'", "B2": "B'", "C2": "C'"}
        parts = []
        for f in fields(self):
            v = getattr(self, f.name)
            text = plane.format_line(v) if isinstance(v, AffineLine) else plane.format_point(v)
            parts.append(f"{names.get(f.name, f.name)}={text}")
        return " ".join(parts)


def validate_desargues(plane: Plane, cfg: DesarguesConfig) -> None:
    """Raise :class:`HypothesisViolation` naming the first failed clause."""
    p = plane
    lk, ll, lm = cfg.lk, cfg.ll, cfg.lm
    if lk == ll or ll == lm or lk == lm:
        raise HypothesisViolation("lk, ll, lm pairwise distinct")
    if not (p.is_parallel(lk, ll) and p.is_parallel(ll, lm)):
        raise HypothesisViolation("lk ∥ ll ∥ lm")
    if not (p.contains(lk, cfg.A) and p.contains(lk, cfg.A2)):
        raise HypothesisViolation("A, A' on lk")
    if not (p.contains(ll, cfg.B) and p.contains(ll, cfg.B2)):
        raise HypothesisViolation("B, B' on ll")
    if not (p.contains(lm, cfg.C) and p.contains(lm, cfg.C2)):
        raise HypothesisViolation("C, C' on lm")
    if cfg.A == cfg.C or cfg.A2 == cfg.C2:
        raise HypothesisViolation("A != C and A' != C'")
    AB, A2B2 = p.line_through(cfg.A, cfg.B), p.line_through(cfg.A2, cfg.B2)
    BC, B2C2 = p.line_through(cfg.B, cfg.C), p.line_through(cfg.B2, cfg.C2)
    if AB == ll or BC == ll:
        raise HypothesisViolation("AB != ll and BC != ll")
    if not p.is_parallel(AB, A2B2):
        raise HypothesisViolation("AB ∥ A'B'")
    if not p.is_parallel(BC, B2C2):
        raise HypothesisViolation("BC ∥ B'C'")
    if p.line_through(cfg.A, cfg.C) == p.line_through(cfg.A2, cfg.C2):
        raise HypothesisViolation("AC != A'C'")


def desargues_holds(plane: Plane, cfg: DesarguesConfig) -> bool:
    return plane.is_parallel(plane.line_through(cfg.A, cfg.C), plane.line_through(cfg.A2, cfg.C2))


def sample_desargues_config(plane: Plane, rng, bound: int = DEFAULT_BOUND) -> Optional[DesarguesConfig]:
    """One random valid configuration, or None if this draw was degenerate."""
    p = plane
    d = random_direction(p, rng, bound)
    bases = [random_point(p, rng, bound) for _ in range(3)]
    lk, ll, lm = (p.line_through(P, p.translate(P, d)) for P in bases)
    if lk == ll or ll == lm or lk == lm:
        return None
    A, A2 = (p.translate(bases[0], d, random_element(p.ring, rng, bound)) for _ in range(2))
    B = p.translate(bases[1], d, random_element(p.ring, rng, bound))
    C = p.translate(bases[2], d, random_element(p.ring, rng, bound))
    if A == A2:
        return None
    B2 = p.intersect(p.parallel_through(A2, p.line_through(A, B)), ll)
    if not isinstance(B2, AffinePoint):
        return None
    C2 = p.intersect(p.parallel_through(B2, p.line_through(B, C)), lm)
    if not isinstance(C2, AffinePoint):
        return None
    cfg = DesarguesConfig(lk, ll, lm, A, B, C, A2, B2, C2)
    try:
        validate_desargues(p, cfg)
    except HypothesisViolation:
        return None
    return cfg


def check_desargues(
    plane: Plane,
    config: Optional[DesarguesConfig] = None,
    mode: str = "sampled",
    seed: Optional[int] = None,
    samples: int = 10_000,
    bound: int = DEFAULT_BOUND,
) -> Report:
    """Check the parallel Desargues statement on one configuration, a sample, or all."""
    report = Report()
    if config is not None:
        validate_desargues(plane, config)
        ok = desargues_holds(plane, config)
        report.add("desargues", "config", ok, "" if ok else config.describe(plane))
        return report
    if mode == "exhaustive":
        plane._require_finite("exhaustive Desargues check")
        T = plane.tables
        checked, bad, wits = kernels.desargues_scan(T.q, T.pts_on_line, T.classes, T.slope, T.meet)
        total, nbad = int(checked.sum()), int(bad.sum())
        witness = f"checked={total}"
        if nbad:
            ids = wits[int(np.argmax(bad > 0))]
            A, B, C, A2, B2, C2 = (plane.point_from_id(i) for i in ids)
            cfg = DesarguesConfig(plane.line_through(A, A2), plane.line_through(B, B2),
                                  plane.line_through(C, C2), A, B, C, A2, B2, C2)
            witness += f" violations={nbad} " + cfg.describe(plane)
        report.add("desargues", "exhaustive", nbad == 0, witness)
        return report
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = make_rng(_need_seed(seed))
    done = rejected = nbad = 0
    first = ""
    while done < samples and rejected <= MAX_REJECT_FACTOR * samples:
        cfg = sample_desargues_config(plane, rng, bound)
        if cfg is None:
            rejected += 1
            continue
        done += 1
        if not desargues_holds(plane, cfg):
            nbad += 1
            first = first or cfg.describe(plane)
    witness = f"checked={done} rejected={rejected}"
    if nbad:
        witness += f" violations={nbad} {first}"
    report.add("desargues", "sampled", nbad == 0, witness)
    return report


# ---------------------------------------------------------------------------
# Pappus: P1, P3, P5 on l1; P2, P4, P6 on l2 != l1; all six distinct and off
# l1 ∩ l2.  If P1P2 ∥ P4P5 and P2P3 ∥ P5P6 then P3P4 ∥ P6P1.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PappusConfig:
    l1: AffineLine
    l2: AffineLine
    P1: AffinePoint
    P2: AffinePoint
    P3: AffinePoint
    P4: AffinePoint
    P5: AffinePoint
    P6: AffinePoint

    def points(self) -> tuple[AffinePoint, ...]:
        return (self.P1, self.P2, self.P3, self.P4, self.P5, self.P6)

    def describe(self, plane: Plane) -> str:
        parts = [f"l1={plane.format_line(self.l1)}", f"l2={plane.format_line(self.l2)}"]
        parts += [f"P{i}={plane.format_point(P)}" for i, P in enumerate(self.points(), 1)]
        return " ".join(parts)


def validate_pappus(plane: Plane, cfg: PappusConfig) -> None:
    p = plane
    if cfg.l1 == cfg.l2:
        raise HypothesisViolation("l1 != l2")
    if not all(p.contains(cfg.l1, P) for P in (cfg.P1, cfg.P3, cfg.P5)):
        raise HypothesisViolation("P1, P3, P5 on l1")
    if not all(p.contains(cfg.l2, P) for P in (cfg.P2, cfg.P4, cfg.P6)):
        raise HypothesisViolation("P2, P4, P6 on l2")
    if len(set(cfg.points())) != 6:
        raise HypothesisViolation("six distinct points")
    X = p.intersect(cfg.l1, cfg.l2)
    if isinstance(X, AffinePoint) and X in cfg.points():
        raise HypothesisViolation("points off l1 ∩ l2")
    if not p.is_parallel(p.line_through(cfg.P1, cfg.P2), p.line_through(cfg.P4, cfg.P5)):
        raise HypothesisViolation("P1P2 ∥ P4P5")
    if not p.is_parallel(p.line_through(cfg.P2, cfg.P3), p.line_through(cfg.P5, cfg.P6)):
        raise HypothesisViolation("P2P3 ∥ P5P6")


def pappus_holds(plane: Plane, cfg: PappusConfig) -> bool:
    return plane.is_parallel(plane.line_through(cfg.P3, cfg.P4), plane.line_through(cfg.P6, cfg.P1))


def sample_pappus_config(plane: Plane, rng, bound: int = DEFAULT_BOUND) -> Optional[PappusConfig]:
    """Draw l1, l2 and P1, P3, P5, P2 at random; P4 and P6 are forced.

    Half the draws put both carriers through a common point, the rest use
    independent base points (usually still intersecting, parallel on small
    planes).
    """
    p, r = plane, plane.ring
    X = random_point(p, rng, bound)
    Y = X if rng.random() < 0.5 else random_point(p, rng, bound)
    d1, d2 = random_direction(p, rng, bound), random_direction(p, rng, bound)
    l1 = p.line_through(X, p.translate(X, d1))
    l2 = p.line_through(Y, p.translate(Y, d2))
    if l1 == l2:
        return None
    P1, P3, P5 = (p.translate(X, d1, random_element(r, rng, bound)) for _ in range(3))
    P2 = p.translate(Y, d2, random_element(r, rng, bound))
    if P1 == P2 or P2 == P3:
        return None
    P4 = p.intersect(p.parallel_through(P5, p.line_through(P1, P2)), l2)
    P6 = p.intersect(p.parallel_through(P5, p.line_through(P2, P3)), l2)
    if not (isinstance(P4, AffinePoint) and isinstance(P6, AffinePoint)):
        return None
    cfg = PappusConfig(l1, l2, P1, P2, P3, P4, P5, P6)
    try:
        validate_pappus(p, cfg)
    except HypothesisViolation:
        return None
    return cfg


def find_pappus_violation(
    plane: Plane, seed: int, samples: int, bound: int = DEFAULT_BOUND
) -> tuple[Optional[PappusConfig], int]:
    """Search up to ``samples`` draws; return the first violating config and draws used."""
    rng = make_rng(seed)
    for n in range(1, samples + 1):
        cfg = sample_pappus_config(plane, rng, bound)
        if cfg is not None and not pappus_holds(plane, cfg):
            return cfg, n
    return None, samples


def check_pappus(
    plane: Plane,
    mode: str = "exhaustive",
    seed: Optional[int] = None,
    samples: int = 10_000,
    bound: int = DEFAULT_BOUND,
) -> Report:
    """Report whether any Pappus configuration fails; a failure carries the witness."""
    report = Report()
    if mode == "exhaustive":
        plane._require_finite("exhaustive Pappus check")
        T = plane.tables
        checked, bad, wits = kernels.pappus_scan(T.q, T.pts_on_line, T.inter, T.slope, T.meet)
        total, nbad = int(checked.sum()), int(bad.sum())
        witness = f"checked={total}"
        if nbad:
            idx = int(np.argmax(bad > 0))
            l1, l2 = divmod(idx, T.lines.shape[0])
            lines = plane.enumerate_lines()
            pts = [plane.point_from_id(i) for i in wits[idx]]
            witness += f" violations={nbad} " + PappusConfig(lines[l1], lines[l2], *pts).describe(plane)
        report.add("pappus", "exhaustive", nbad == 0, witness)
        return report
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = make_rng(_need_seed(seed))
    done = rejected = nbad = 0
    first = ""
    while done < samples and rejected <= MAX_REJECT_FACTOR * samples:
        cfg = sample_pappus_config(plane, rng, bound)
        if cfg is None:
            rejected += 1
            continue
        done += 1
        if not pappus_holds(plane, cfg):
            nbad += 1
            first = first or cfg.describe(plane)
    witness = f"checked={done} rejected={rejected}"
    if nbad:
        witness += f" violations={nbad} {first}"
    report.add("pappus", "sampled", nbad == 0, witness)
    return report
