import itertools

import pytest

from desargues.field_core import DomainError, UnsupportedError
from desargues.incidence import AffineLine, AffinePoint
from desargues.line_algebra import (
    ConstructionError,
    add_points,
    add_with,
    cayley_table,
    check_ring_tables,
    find_noncommuting_pair,
    inv_point,
    make_line_algebra,
    mul_points,
    neg_point,
    verify_skewfield,
)

from conftest import FIELDS, gf, plane

P_ = AffinePoint


def test_sum_gf3():
    K = make_line_algebra(plane(3))
    assert add_points(K, P_(1, 0), P_(2, 0)) == P_(0, 0)
    # same answer for every valid auxiliary point
    assert {add_with(K, P_(1, 0), P_(2, 0), B) for B in K.with_aux("all_and_compare").aux_points} == {P_(0, 0)}


def test_product_gf5():
    K = make_line_algebra(plane(5))
    assert mul_points(K, P_(2, 0), P_(3, 0)) == P_(1, 0)


def test_neg_inv_gf7():
    K = make_line_algebra(plane(7))
    assert neg_point(K, P_(3, 0)) == P_(4, 0)
    assert inv_point(K, P_(3, 0)) == P_(5, 0)
    assert neg_point(K, K.O) == K.O
    assert inv_point(K, K.I) == K.I
    with pytest.raises(DomainError):
        inv_point(K, K.O)


def test_quaternion_line(qplane, H):
    K = make_line_algebra(qplane)
    i, j, k = (P_(u, H.zero) for u in (H.i, H.j, H.k))
    assert add_points(K, i, j) == P_(H.add(H.i, H.j), H.zero)
    assert mul_points(K, i, j) == k
    assert mul_points(K, j, i) == P_(H.neg(H.k), H.zero)


def test_quaternion_aux_independence(qplane, H):
    K = make_line_algebra(qplane, aux_policy="all_and_compare")
    assert len(K.aux_points) == 100
    A, C = K.point_at(H.parse("1/2 1 -2 3")), K.point_at(H.parse("0 -1/3 5 1"))
    S, M = add_points(K, A, C), mul_points(K, A, C)
    a, c = A.x, C.x
    assert S == P_(H.add(a, c), H.zero)
    assert M == P_(H.mul(a, c), H.zero)


def test_off_line_rejected():
    K = make_line_algebra(plane(5))
    with pytest.raises(DomainError):
        add_points(K, P_(1, 1), P_(2, 0))
    with pytest.raises(DomainError):
        make_line_algebra(plane(5), O=P_(1, 0), I=P_(1, 0))


@pytest.mark.parametrize("q", sorted(FIELDS))
def test_edge_cases_close(q):
    K = make_line_algebra(plane(q))
    for A in K.points():
        assert add_points(K, A, K.O) == A == add_points(K, K.O, A)
        assert mul_points(K, A, K.I) == A == mul_points(K, K.I, A)
        assert mul_points(K, A, K.O) == K.O == mul_points(K, K.O, A)
        add_points(K, A, A)
        mul_points(K, A, A)


def test_cayley_gf2_is_xor():
    K = make_line_algebra(plane(2))
    add_t, mul_t = cayley_table(K, "add"), cayley_table(K, "mul")
    assert add_t.labels == ("0", "1")
    assert add_t.table.tolist() == [[0, 1], [1, 0]]
    assert mul_t.table.tolist() == [[0, 0], [0, 1]]


def test_cayley_gf3_csv():
    K = make_line_algebra(plane(3))
    assert cayley_table(K, "mul").to_csv().splitlines() == ["mul,0,1,2", "0,0,0,0", "1,0,1,2", "2,0,2,1"]


@pytest.mark.parametrize("q", [4, 9])
def test_cayley_zero_row_constant(q):
    K = make_line_algebra(plane(q))
    T = cayley_table(K, "mul")
    z = T.points.index(K.O)
    assert set(T.table[z]) == {z} and set(T.table[:, z]) == {z}


def test_cayley_unsupported(qplane):
    with pytest.raises(UnsupportedError):
        cayley_table(make_line_algebra(qplane), "add")


@pytest.mark.parametrize("q", [3, 4, 5, 8, 9])
def test_frame_covariance(q):
    pl = plane(q)
    F = pl.ring
    line = pl.line_through(P_(1, 2 % q), P_(2 % q, 0))
    pts = pl.points_on(line)
    K = make_line_algebra(pl, line, pts[1], pts[-1])
    rep = verify_skewfield(K, "exhaustive")
    assert rep.passed
    # t -> O + t(I - O) is a field isomorphism GF(q) -> K
    E = F.elements()
    for s, t in itertools.product(E, repeat=2):
        assert add_points(K, K.point_at(s), K.point_at(t)) == K.point_at(F.add(s, t))
        assert mul_points(K, K.point_at(s), K.point_at(t)) == K.point_at(F.mul(s, t))


def test_frame_covariance_vertical():
    pl = plane(5)
    K = make_line_algebra(pl, AffineLine(1, 0, 3), P_(3, 4), P_(3, 1))
    assert verify_skewfield(K, "exhaustive").passed
    assert cayley_table(K, "add").labels == ("0", "1", "2", "3", "4")


def test_quaternion_other_frame(qplane, H):
    O, I = P_(H.parse("1 0 1/2 0"), H.parse("0 2 0 0")), P_(H.parse("0 1 0 -1"), H.one)
    K = make_line_algebra(qplane, qplane.line_through(O, I), O, I)
    rep = verify_skewfield(K, "sampled", seed=4, samples=60, bound=4)
    assert rep.passed
    assert rep.find("mul-commutative").witness.startswith("non-commutative")


def test_verify_sampled_quaternion(qplane):
    rep = verify_skewfield(make_line_algebra(qplane), "sampled", seed=1, samples=500)
    assert rep.passed
    assert rep.find("mul-commutative").status == "info"
    assert "non-commutative" in rep.find("mul-commutative").witness


def test_noncommuting_pair(qplane):
    pair, tried = find_noncommuting_pair(make_line_algebra(qplane), seed=0, samples=10)
    assert pair is not None and tried == 1
    assert find_noncommuting_pair(make_line_algebra(plane(5)), seed=0, samples=50) == (None, 50)


def _field_tables(q):
    F = gf(q)
    return F.add_table.copy(), F.mul_table.copy()


@pytest.mark.parametrize("q", [4, 7])
def test_check_ring_tables_clean(q):
    add, mul = _field_tables(q)
    rep = check_ring_tables(add, mul, 0, 1)
    assert rep.passed


@pytest.mark.parametrize("op,cell", [("add", (2, 3)), ("mul", (2, 3)), ("mul", (1, 4))])
def test_mutated_table_detected(op, cell):
    add, mul = _field_tables(7)
    T = add if op == "add" else mul
    T[cell] = (T[cell] + 1) % 7
    rep = check_ring_tables(add, mul, 0, 1)
    assert not rep.passed
    bad = rep.first_failure()
    assert bad.witness


def test_mutated_parallel_detected_by_construction():
    pl = plane(5)
    K = make_line_algebra(pl, aux_policy="all_and_compare")
    real = pl.parallel_through
    target = (P_(1, 0), pl.line_through(K.O, K.aux_points[3]))

    def broken(P, line):
        out = real(P, line)
        if (P, line) == target:
            return AffineLine(out.a, out.b, (out.c + 1) % 5)
        return out

    pl.parallel_through = broken
    try:
        with pytest.raises(ConstructionError):
            add_points(K, P_(1, 0), P_(2, 0))
    finally:
        del pl.parallel_through
