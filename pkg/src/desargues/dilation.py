"""Dilations as generator data, applied by trace constructions.

A homothety is fixed by its centre V and one reference pair P -> P' on a
line through V; a translation by one pair P -> P'.  Images are traced with
parallels only:

* homothety: delta(Q) = VQ ∩ (parallel to PQ through P');
* translation: delta(Q) = (parallel to PP' through Q) ∩ (parallel to PQ through P').

For Q on the reference line the trace first maps an auxiliary point R off
that line and then traces Q through R.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .field_core import UnsupportedError
from .incidence import AffineLine, AffinePoint, DegenerateInputError, Plane
from .line_algebra import (
    ConstructionError,
    LineAlgebra,
    add_points,
    mul_points,
)
from .report import Report
from .sampling import DEFAULT_BOUND, make_rng, random_element, random_point

HOMOTHETY, TRANSLATION, IDENTITY = "homothety", "translation", "identity"


@dataclass(frozen=True, eq=False)
class DilationMap:
    kind: str
    plane: Plane
    P: Optional[AffinePoint] = None
    P2: Optional[AffinePoint] = None
    V: Optional[AffinePoint] = None

    def __post_init__(self):
        p = self.plane
        if self.kind == IDENTITY:
            return
        if self.kind == HOMOTHETY:
            if self.V is None or self.P is None or self.P2 is None:
                raise DegenerateInputError("homothety needs V, P and P'")
            if self.P == self.V or self.P2 == self.V:
                raise DegenerateInputError("homothety reference points must differ from the centre")
            if self.P == self.P2:
                raise DegenerateInputError("P' = P is the identity; build it with identity()")
            if not p.collinear(self.V, self.P, self.P2):
                raise DegenerateInputError("V, P, P' must be collinear")
            ref = p.line_through(self.V, self.P)
        elif self.kind == TRANSLATION:
            if self.P is None or self.P2 is None:
                raise DegenerateInputError("translation needs P and P'")
            if self.P == self.P2:
                raise DegenerateInputError("P' = P is the identity; build it with identity()")
            ref = p.line_through(self.P, self.P2)
        else:
            raise ValueError(f"unknown dilation kind {self.kind!r}")
        object.__setattr__(self, "_ref", ref)
        object.__setattr__(self, "_R", p.first_point_off(ref))
        object.__setattr__(self, "_R2", self._trace(self._R, self.P, self.P2))

    def _trace(self, Q: AffinePoint, P: AffinePoint, P2: AffinePoint) -> AffinePoint:
        """Image of Q (off line P, P2's reference line) given the known pair P -> P2."""
        p = self.plane
        to_image = p.parallel_through(P2, p.line_through(P, Q))
        if self.kind == HOMOTHETY:
            carrier = p.line_through(self.V, Q)
        else:
            carrier = p.parallel_through(Q, p.line_through(self.P, self.P2))
        X = p.intersect(carrier, to_image)
        if not isinstance(X, AffinePoint):
            raise ConstructionError(f"trace of {p.format_point(Q)} did not close: {X}")
        return X

    def __call__(self, Q: AffinePoint) -> AffinePoint:
        return apply_point(self, Q)

    def describe(self) -> str:
        f = self.plane.format_point
        if self.kind == IDENTITY:
            return "identity"
        if self.kind == HOMOTHETY:
            return f"homothety V={f(self.V)} P={f(self.P)} P'={f(self.P2)}"
        return f"translation P={f(self.P)} P'={f(self.P2)}"


def identity(plane: Plane) -> DilationMap:
    return DilationMap(IDENTITY, plane)


def homothety(plane: Plane, V: AffinePoint, P: AffinePoint, P2: AffinePoint) -> DilationMap:
    return DilationMap(HOMOTHETY, plane, P, P2, V)


def translation(plane: Plane, P: AffinePoint, P2: AffinePoint) -> DilationMap:
    return DilationMap(TRANSLATION, plane, P, P2)


def apply_point(delta: DilationMap, Q: AffinePoint) -> AffinePoint:
    if delta.kind == IDENTITY:
        return Q
    if delta.kind == HOMOTHETY and Q == delta.V:
        return Q
    if Q == delta.P:
        return delta.P2
    p = delta.plane
    if not p.contains(delta._ref, Q):
        return delta._trace(Q, delta.P, delta.P2)
    return delta._trace(Q, delta._R, delta._R2)


def apply_line(delta: DilationMap, line: AffineLine) -> AffineLine:
    p = delta.plane
    A = p.base_point(line)
    C = p.translate(A, p.direction(line))
    return p.line_through(apply_point(delta, A), apply_point(delta, C))


@dataclass(frozen=True, eq=False)
class Restriction:
    """delta restricted to ``source``; ``table`` is filled on finite planes."""

    delta: DilationMap
    source: AffineLine
    target: AffineLine
    table: Optional[dict]
    lands_in_target: Optional[bool]
    bijective: Optional[bool]

    def __call__(self, Q: AffinePoint) -> AffinePoint:
        if self.table is not None:
            return self.table[Q]
        return apply_point(self.delta, Q)


def restrict(delta: DilationMap, line: AffineLine) -> Restriction:
    p = delta.plane
    target = apply_line(delta, line)
    if not p.is_finite:
        return Restriction(delta, line, target, None, None, None)
    table = {Q: apply_point(delta, Q) for Q in p.points_on(line)}
    lands = all(p.contains(target, X) for X in table.values())
    # q distinct images on a q-point line: injective, hence onto by counting
    bij = lands and len(set(table.values())) == len(table) == len(p.points_on(target))
    return Restriction(delta, line, target, table, lands, bij)


def coordinate_image(delta: DilationMap, Q: AffinePoint) -> AffinePoint:
    """Closed-form image, used only as a test oracle.

    Homothety: V + r*(Q - V) with r fixed by P' - V = r*(P - V) (scalar on
    the left).  Translation: Q + (P' - P).
    """
    p, r = delta.plane, delta.plane.ring
    if delta.kind == IDENTITY:
        return Q
    if delta.kind == TRANSLATION:
        return AffinePoint(r.add(Q.x, r.sub(delta.P2.x, delta.P.x)), r.add(Q.y, r.sub(delta.P2.y, delta.P.y)))
    V = delta.V
    dx, dy = r.sub(delta.P.x, V.x), r.sub(delta.P.y, V.y)
    if r.is_zero(dx):
        ratio = r.mul(r.sub(delta.P2.y, V.y), r.inv(dy))
    else:
        ratio = r.mul(r.sub(delta.P2.x, V.x), r.inv(dx))
    return p.translate(V, (r.sub(Q.x, V.x), r.sub(Q.y, V.y)), ratio)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _signature(delta: DilationMap, pts) -> tuple:
    return tuple(apply_point(delta, Q) for Q in pts)


def homothety_triples(plane: Plane) -> Iterator[tuple[AffinePoint, AffinePoint, AffinePoint]]:
    """Every (V, P, P') with P != V, P' on VP, P' not in {V, P}."""
    pts = plane.enumerate_points()
    for V in pts:
        for P in pts:
            if P == V:
                continue
            for P2 in plane.points_on(plane.line_through(V, P)):
                if P2 != V and P2 != P:
                    yield V, P, P2


def enumerate_dilations(plane: Plane) -> list[DilationMap]:
    """All dilations of a finite plane, each exactly once.

    Order: identity, translations, homotheties.  Generators are deduplicated
    by their action on every point.
    """
    if not plane.is_finite:
        raise UnsupportedError("dilations can only be enumerated on a finite plane")
    pts = plane.enumerate_points()
    ident = identity(plane)
    seen = {_signature(ident, pts)}
    out = [ident]

    def take(delta):
        sig = _signature(delta, pts)
        if sig not in seen:
            seen.add(sig)
            out.append(delta)

    for P in pts:
        for P2 in pts:
            if P != P2:
                take(translation(plane, P, P2))
    for V, P, P2 in homothety_triples(plane):
        take(homothety(plane, V, P, P2))
    return out


# ---------------------------------------------------------------------------
# isomorphism check
# ---------------------------------------------------------------------------

def image_algebra(delta: DilationMap, K1: LineAlgebra, aux_policy: str = "explicit") -> LineAlgebra:
    """K2 on delta(l1) framed at (delta(O), delta(I)).

    ``explicit`` transports the auxiliary point: B'' = delta(B).
    """
    line2 = apply_line(delta, K1.line)
    O2, I2 = apply_point(delta, K1.O), apply_point(delta, K1.I)
    if aux_policy == "explicit":
        return LineAlgebra(delta.plane, line2, O2, I2, "explicit", apply_point(delta, K1.B))
    return LineAlgebra(delta.plane, line2, O2, I2, aux_policy)


def check_isomorphism(delta: DilationMap, K1: LineAlgebra, mode: str = "exhaustive",
                      seed: Optional[int] = None, samples: int = 200,
                      bound: int = DEFAULT_BOUND, suite: str = "dilation-iso") -> Report:
    """delta(A + C) = delta(A) + delta(C) and delta(A * C) = delta(A) * delta(C) on l1.

    Both equations are checked in K2 with the transported auxiliary point and
    again with K2's own deterministic one.  On finite planes the restriction
    is also checked to be a bijection l1 -> l2.
    """
    p = delta.plane
    name = delta.describe()
    rep = Report()
    K2s = [image_algebra(delta, K1, "explicit"), image_algebra(delta, K1, "deterministic_first")]

    if mode == "exhaustive":
        if not p.is_finite:
            raise UnsupportedError("exhaustive isomorphism check needs a finite plane")
        res = restrict(delta, K1.line)
        rep.add(suite, f"{name}/bijective", bool(res.bijective),
                "" if res.bijective else f"image of {p.format_line(K1.line)} not a bijection onto {p.format_line(res.target)}")
        img = res.table
        pts = K1.points()
        pairs = [(A, C) for A in pts for C in pts]
    elif mode == "sampled":
        if seed is None:
            raise ValueError("sampled mode requires a seed")
        rng = make_rng(seed)
        pairs = [(K1.point_at(random_element(p.ring, rng, bound)), K1.point_at(random_element(p.ring, rng, bound)))
                 for _ in range(samples)]
        img = {}
        target = K2s[0].line
        for A, C in pairs:
            for X in (A, C):
                if X not in img:
                    img[X] = apply_point(delta, X)
        lands = all(p.contains(target, X) for X in img.values())
        inj = len(set(img.values())) == len(img)
        rep.add(suite, f"{name}/bijective", lands and inj,
                "" if lands and inj else "sampled images leave the target line or collide")
    else:
        raise ValueError(f"unknown mode {mode!r}")

    def image(X):
        if X not in img:
            img[X] = apply_point(delta, X)
        return img[X]

    for op, fn in (("add", add_points), ("mul", mul_points)):
        witness = ""
        for A, C in pairs:
            lhs = image(fn(K1, A, C))
            for K2 in K2s:
                rhs = fn(K2, image(A), image(C))
                if lhs != rhs:
                    witness = (f"A={p.format_point(A)} C={p.format_point(C)} "
                               f"lhs={p.format_point(lhs)} rhs={p.format_point(rhs)} B''={p.format_point(K2.B)}")
                    break
            if witness:
                break
        rep.add(suite, f"{name}/{op}", not witness, witness)
    return rep


def random_dilation(plane: Plane, rng, bound: int = DEFAULT_BOUND) -> DilationMap:
    """A random homothety or translation (never the identity)."""
    r = plane.ring
    while True:
        P = random_point(plane, rng, bound)
        P2 = random_point(plane, rng, bound)
        if P == P2:
            continue
        if rng.random() < 0.5:
            return translation(plane, P, P2)
        V = random_point(plane, rng, bound)
        if V == P:
            continue
        lam = random_element(r, rng, bound)
        Pimg = plane.translate(V, (r.sub(P.x, V.x), r.sub(P.y, V.y)), lam)
        if Pimg in (V, P):
            continue
        return homothety(plane, V, P, Pimg)
