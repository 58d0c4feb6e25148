"""The skew field K = (l, +, *) carried by the points of a line.

Given a line ``l`` with a zero point O and a one point I, the sum and the
product of two points of ``l`` are built from parallels and intersections
only, with an auxiliary point B off ``l``:

addition ``A + C``
    D = (parallel to l through B) ∩ (parallel to OB through A);
    A + C = (parallel to CB through D) ∩ l.

multiplication ``A * C``
    D = (parallel to IB through A) ∩ OB;
    A * C = (parallel to BC through D) ∩ l.

The result does not depend on B; ``aux_policy="all_and_compare"`` runs the
construction for many B and insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .field_core import DomainError, UnsupportedError
from .incidence import AffineLine, AffinePoint, Plane
from .report import Report, csv_text
from .sampling import DEFAULT_BOUND, make_rng, random_element

AUX_POLICIES = ("deterministic_first", "explicit", "all_and_compare")
# B candidates tried on infinite planes under all_and_compare
AUX_SAMPLES = 100
AUX_SEED = 20240101


class ConstructionError(AssertionError):
    """A construction that must close on valid input did not.  Always a bug."""


@dataclass(frozen=True, eq=False)
class LineAlgebra:
    plane: Plane
    line: AffineLine
    O: AffinePoint
    I: AffinePoint
    aux_policy: str = "deterministic_first"
    aux: Optional[AffinePoint] = None

    def __post_init__(self):
        p = self.plane
        if self.aux_policy not in AUX_POLICIES:
            raise ValueError(f"unknown aux policy {self.aux_policy!r}")
        if self.O == self.I:
            raise DomainError("zero and one must be distinct points")
        if not (p.contains(self.line, self.O) and p.contains(self.line, self.I)):
            raise DomainError("zero and one must lie on the line")
        if self.aux_policy == "explicit":
            if self.aux is None or p.contains(self.line, self.aux):
                raise DomainError("explicit auxiliary point must be given and lie off the line")
        object.__setattr__(self, "_aux_points", self._pick_aux())

    def _pick_aux(self) -> tuple[AffinePoint, ...]:
        p = self.plane
        if self.aux_policy == "explicit":
            return (self.aux,)
        if self.aux_policy == "deterministic_first":
            return (p.first_point_off(self.line),)
        if p.is_finite:
            return tuple(P for P in p.enumerate_points() if not p.contains(self.line, P))
        rng = make_rng(AUX_SEED)
        out = [p.first_point_off(self.line)]
        while len(out) < AUX_SAMPLES:
            B = p.point(random_element(p.ring, rng), random_element(p.ring, rng))
            if not p.contains(self.line, B):
                out.append(B)
        return tuple(out)

    @property
    def aux_points(self) -> tuple[AffinePoint, ...]:
        return self._aux_points

    @property
    def B(self) -> AffinePoint:
        """The auxiliary point used when a single one is needed."""
        return self._aux_points[0]

    def with_aux(self, policy: str, aux: Optional[AffinePoint] = None) -> "LineAlgebra":
        return LineAlgebra(self.plane, self.line, self.O, self.I, policy, aux)

    def point_at(self, t) -> AffinePoint:
        """``O + t*(I - O)``: the point of ``l`` with coordinate ``t`` in this frame."""
        r = self.plane.ring
        u = (r.sub(self.I.x, self.O.x), r.sub(self.I.y, self.O.y))
        return self.plane.translate(self.O, u, t)

    def points(self) -> list[AffinePoint]:
        return self.plane.points_on(self.line)

    def format(self, A: AffinePoint) -> str:
        return self.plane.format_point(A)


def make_line_algebra(
    plane: Plane,
    line: Optional[AffineLine] = None,
    O: Optional[AffinePoint] = None,
    I: Optional[AffinePoint] = None,
    aux_policy: str = "deterministic_first",
    aux: Optional[AffinePoint] = None,
) -> LineAlgebra:
    """Defaults to the frame y = 0, O = (0, 0), I = (1, 0)."""
    r = plane.ring
    line = plane.x_axis if line is None else line
    O = plane.origin if O is None else O
    I = plane.point(r.one, r.zero) if I is None else I
    return LineAlgebra(plane, line, O, I, aux_policy, aux)


def _meet(plane: Plane, l1: AffineLine, l2: AffineLine, step: str) -> AffinePoint:
    X = plane.intersect(l1, l2)
    if not isinstance(X, AffinePoint):
        raise ConstructionError(f"{step}: expected a point, got {X}")
    return X


def _check_on_line(K: LineAlgebra, *pts: AffinePoint) -> None:
    for P in pts:
        if not K.plane.contains(K.line, P):
            raise DomainError(f"{K.format(P)} is not on the line")


def _agree(K: LineAlgebra, results: list[AffinePoint], what: str) -> AffinePoint:
    first = results[0]
    for B, E in zip(K.aux_points, results):
        if E != first:
            raise ConstructionError(
                f"{what} depends on the auxiliary point: B={K.format(K.B)} gives {K.format(first)},"
                f" B={K.format(B)} gives {K.format(E)}"
            )
    return first


def add_with(K: LineAlgebra, A: AffinePoint, C: AffinePoint, B: AffinePoint) -> AffinePoint:
    p = K.plane
    D = _meet(p, p.parallel_through(B, K.line), p.parallel_through(A, p.line_through(K.O, B)), "add step 2")
    return _meet(p, p.parallel_through(D, p.line_through(C, B)), K.line, "add step 3")


def mul_with(K: LineAlgebra, A: AffinePoint, C: AffinePoint, B: AffinePoint) -> AffinePoint:
    p = K.plane
    D = _meet(p, p.parallel_through(A, p.line_through(K.I, B)), p.line_through(K.O, B), "mul step 2")
    return _meet(p, p.parallel_through(D, p.line_through(B, C)), K.line, "mul step 3")


def add_points(K: LineAlgebra, A: AffinePoint, C: AffinePoint) -> AffinePoint:
    _check_on_line(K, A, C)
    return _agree(K, [add_with(K, A, C, B) for B in K.aux_points], "sum")


def mul_points(K: LineAlgebra, A: AffinePoint, C: AffinePoint) -> AffinePoint:
    _check_on_line(K, A, C)
    return _agree(K, [mul_with(K, A, C, B) for B in K.aux_points], "product")


def neg_point(K: LineAlgebra, A: AffinePoint) -> AffinePoint:
    """Run the addition backwards: -A is where the parallel to DO through B meets l."""
    _check_on_line(K, A)
    p = K.plane
    out = []
    for B in K.aux_points:
        D = _meet(p, p.parallel_through(B, K.line), p.parallel_through(A, p.line_through(K.O, B)), "neg step 2")
        out.append(_meet(p, p.parallel_through(B, p.line_through(D, K.O)), K.line, "neg step 3"))
    X = _agree(K, out, "negative")
    if p.is_finite:
        found = [Y for Y in K.points() if add_with(K, A, Y, K.B) == K.O]
        if found != [X]:
            raise ConstructionError(f"negative of {K.format(A)}: geometric {K.format(X)}, search {found}")
    return X


def inv_point(K: LineAlgebra, A: AffinePoint) -> AffinePoint:
    """Run the multiplication backwards: A^-1 is where the parallel to DI through B meets l."""
    _check_on_line(K, A)
    if A == K.O:
        raise DomainError("the zero point has no inverse")
    p = K.plane
    out = []
    for B in K.aux_points:
        D = _meet(p, p.parallel_through(A, p.line_through(K.I, B)), p.line_through(K.O, B), "inv step 2")
        out.append(_meet(p, p.parallel_through(B, p.line_through(D, K.I)), K.line, "inv step 3"))
    X = _agree(K, out, "inverse")
    if p.is_finite:
        found = [Y for Y in K.points()
                 if mul_with(K, A, Y, K.B) == K.I and mul_with(K, Y, A, K.B) == K.I]
        if found != [X]:
            raise ConstructionError(f"inverse of {K.format(A)}: geometric {K.format(X)}, search {found}")
    return X


# ---------------------------------------------------------------------------
# Cayley tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CayleyTable:
    """``table[i, j]`` is the index of ``points[i] op points[j]`` in ``points``."""

    op: str
    points: tuple[AffinePoint, ...]
    labels: tuple[str, ...]
    table: np.ndarray

    def to_csv(self) -> str:
        rows = [[self.op, *self.labels]]
        for i, lab in enumerate(self.labels):
            rows.append([lab, *(self.labels[j] for j in self.table[i])])
        return csv_text(rows)


def _labels(K: LineAlgebra, pts) -> tuple[str, ...]:
    fmt = K.plane.ring.format
    # vertical lines vary in y, all others in x
    if K.plane.ring.is_zero(K.line.b):
        return tuple(fmt(P.y) for P in pts)
    return tuple(fmt(P.x) for P in pts)


def cayley_table(K: LineAlgebra, op: str) -> CayleyTable:
    if not K.plane.is_finite:
        raise UnsupportedError("Cayley tables need a finite plane")
    fn = {"add": add_points, "mul": mul_points}[op]
    pts = tuple(K.points())
    index = {P: i for i, P in enumerate(pts)}
    n = len(pts)
    T = np.empty((n, n), dtype=np.int64)
    for i, A in enumerate(pts):
        for j, C in enumerate(pts):
            T[i, j] = index[fn(K, A, C)]
    return CayleyTable(op, pts, _labels(K, pts), T)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _first_bad(mask: np.ndarray):
    idx = np.argwhere(mask)
    return None if len(idx) == 0 else tuple(int(v) for v in idx[0])


def check_ring_tables(add: np.ndarray, mul: np.ndarray, zero: int, one: int,
                      labels=None, suite: str = "skewfield") -> Report:
    """Skew-field axioms on two index tables; failures name the offending elements."""
    n = add.shape[0]
    lab = labels or [str(i) for i in range(n)]
    rep = Report()
    a = np.arange(n)
    A, Bx, C = np.meshgrid(a, a, a, indexing="ij")

    def record(case, mask, fmt):
        bad = _first_bad(mask)
        rep.add(suite, case, bad is None, "" if bad is None else fmt(*bad))

    in_range = ((add >= 0) & (add < n)).all() and ((mul >= 0) & (mul < n)).all()
    rep.add(suite, "closure", bool(in_range), "" if in_range else "table entry out of range")
    if not in_range:
        return rep

    record("add-assoc", add[add[A, Bx], C] != add[A, add[Bx, C]],
           lambda i, j, k: f"({lab[i]}+{lab[j]})+{lab[k]} != {lab[i]}+({lab[j]}+{lab[k]})")
    record("add-comm", add != add.T, lambda i, j: f"{lab[i]}+{lab[j]} != {lab[j]}+{lab[i]}")
    record("add-identity", (add[:, zero] != a) | (add[zero, :] != a), lambda i: f"{lab[i]}+0 != {lab[i]}")
    record("add-inverse", ~(add == zero).any(axis=1), lambda i: f"{lab[i]} has no negative")

    nz = a[a != zero]
    closed = np.isin(mul[np.ix_(nz, nz)], nz, invert=True)
    record("mul-closure-nonzero", closed, lambda i, j: f"{lab[nz[i]]}*{lab[nz[j]]} = 0")
    record("mul-assoc", mul[mul[A, Bx], C] != mul[A, mul[Bx, C]],
           lambda i, j, k: f"({lab[i]}*{lab[j]})*{lab[k]} != {lab[i]}*({lab[j]}*{lab[k]})")
    record("mul-identity", (mul[:, one] != a) | (mul[one, :] != a), lambda i: f"{lab[i]}*1 != {lab[i]}")
    sub = mul[np.ix_(nz, nz)]
    has_inv = ((sub == one) & (sub.T == one)).any(axis=1)
    record("mul-inverse", ~has_inv, lambda i: f"{lab[nz[i]]} has no two-sided inverse")
    record("zero-absorbs", (mul[:, zero] != zero) | (mul[zero, :] != zero), lambda i: f"{lab[i]}*0 != 0")
    record("left-distrib", mul[A, add[Bx, C]] != add[mul[A, Bx], mul[A, C]],
           lambda i, j, k: f"{lab[i]}*({lab[j]}+{lab[k]}) != {lab[i]}*{lab[j]}+{lab[i]}*{lab[k]}")
    record("right-distrib", mul[add[A, Bx], C] != add[mul[A, C], mul[Bx, C]],
           lambda i, j, k: f"({lab[i]}+{lab[j]})*{lab[k]} != {lab[i]}*{lab[k]}+{lab[j]}*{lab[k]}")

    bad = _first_bad(mul != mul.T)
    rep.info(suite, "mul-commutative",
             "commutative" if bad is None else f"non-commutative: {lab[bad[0]]}*{lab[bad[1]]}")
    return rep


def verify_skewfield(K: LineAlgebra, mode: str = "exhaustive", seed: Optional[int] = None,
                     samples: int = 500, bound: int = DEFAULT_BOUND) -> Report:
    """Check additive group, multiplicative group on l minus O, both distributive laws.

    Commutativity of ``*`` is reported as ``info``.
    """
    if mode == "exhaustive":
        if not K.plane.is_finite:
            raise UnsupportedError("exhaustive skew-field check needs a finite plane")
        add_t, mul_t = cayley_table(K, "add"), cayley_table(K, "mul")
        index = {P: i for i, P in enumerate(add_t.points)}
        return check_ring_tables(add_t.table, mul_t.table, index[K.O], index[K.I], add_t.labels)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    if seed is None:
        raise ValueError("sampled mode requires a seed")
    return _verify_sampled(K, seed, samples, bound)


def _verify_sampled(K: LineAlgebra, seed: int, samples: int, bound: int) -> Report:
    rng = make_rng(seed)
    r = K.plane.ring
    f = K.format
    add, mul, O, I = add_points, mul_points, K.O, K.I
    fails: dict[str, str] = {}
    noncomm = ""

    def note(case, ok, text):
        if not ok and case not in fails:
            fails[case] = text

    for _ in range(samples):
        A, Bp, C = (K.point_at(random_element(r, rng, bound)) for _ in range(3))
        s = f"A={f(A)} B={f(Bp)} C={f(C)}"
        AB = add(K, A, Bp)
        note("add-assoc", add(K, AB, C) == add(K, A, add(K, Bp, C)), s)
        note("add-comm", AB == add(K, Bp, A), s)
        note("add-identity", add(K, A, O) == A and add(K, O, A) == A, s)
        note("add-inverse", add(K, A, neg_point(K, A)) == O, s)
        AmB = mul(K, A, Bp)
        note("mul-assoc", mul(K, AmB, C) == mul(K, A, mul(K, Bp, C)), s)
        note("mul-identity", mul(K, A, I) == A and mul(K, I, A) == A, s)
        note("zero-absorbs", mul(K, A, O) == O and mul(K, O, A) == O, s)
        if A != O:
            Ai = inv_point(K, A)
            note("mul-inverse", mul(K, A, Ai) == I and mul(K, Ai, A) == I, s)
            note("mul-closure-nonzero", Bp == O or AmB != O, s)
        note("left-distrib", mul(K, A, add(K, Bp, C)) == add(K, AmB, mul(K, A, C)), s)
        note("right-distrib", mul(K, add(K, A, Bp), C) == add(K, mul(K, A, C), mul(K, Bp, C)), s)
        if not noncomm and AmB != mul(K, Bp, A):
            noncomm = f"non-commutative: A={f(A)} B={f(Bp)}"

    rep = Report()
    for case in ("add-assoc", "add-comm", "add-identity", "add-inverse", "mul-closure-nonzero",
                 "mul-assoc", "mul-identity", "mul-inverse", "zero-absorbs",
                 "left-distrib", "right-distrib"):
        rep.add("skewfield", case, case not in fails, fails.get(case, ""))
    rep.info("skewfield", "mul-commutative", noncomm or f"commutative on {samples} samples")
    return rep


def find_noncommuting_pair(K: LineAlgebra, seed: int, samples: int, bound: int = DEFAULT_BOUND):
    """First pair (A, C) on the line with A*C != C*A, trying basis units before random draws."""
    r = K.plane.ring
    cands = []
    if not r.is_finite:
        units = [r.i, r.j, r.k]
        cands = [(K.point_at(u), K.point_at(v)) for u in units for v in units if u != v]
    rng = make_rng(seed)
    tried = 0
    for A, C in cands:
        if tried >= samples:
            return None, tried
        tried += 1
        if mul_points(K, A, C) != mul_points(K, C, A):
            return (A, C), tried
    while tried < samples:
        tried += 1
        A = K.point_at(random_element(r, rng, bound))
        C = K.point_at(random_element(r, rng, bound))
        if mul_points(K, A, C) != mul_points(K, C, A):
            return (A, C), tried
    return None, tried
