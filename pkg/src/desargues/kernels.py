"""Exhaustive scans over finite coordinate planes AG(2, GF(q)).

Everything here works on integer tables prepared by
:func:`build_plane_tables`:

* point id ``x*q + y`` (x, y field codes);
* line id ``c`` for ``y = c`` and ``q + b*q + c`` for ``x + y*b = c``;
* ``slope[P, Q]`` -- direction class of the line PQ: ``q`` for vertical,
  else ``dx^-1 * dy``; ``-1`` on the diagonal;
* ``meet[P, l, s]`` -- the point where the line through P with direction
  class ``s`` hits line ``l`` (``-1`` if P is on l or the lines are parallel);
* ``inter[l1, l2]`` -- common point id or ``-1``.

Each scan has a numba kernel and a numpy twin with identical output; the
module-level names bind to the numba version unless ``DESARGUES_DISABLE_NUMBA``
is set (see :mod:`desargues._accel`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._accel import USE_NUMBA, njit, prange


@dataclass(frozen=True)
class PlaneTables:
    q: int
    lines: np.ndarray  # (L, 3) normalized (a, b, c)
    incidence: np.ndarray  # (n, L) bool
    pts_on_line: np.ndarray  # (L, q)
    line_slope: np.ndarray  # (L,)
    slope: np.ndarray  # (n, n)
    meet: np.ndarray  # (n, L, q+1)
    inter: np.ndarray  # (L, L)
    classes: np.ndarray  # (q+1, q) line ids per direction class


def canonical_lines(q: int) -> np.ndarray:
    out = [(0, 1, c) for c in range(q)]
    out += [(1, b, c) for b in range(q) for c in range(q)]
    return np.array(out, dtype=np.int64)


# ---------------------------------------------------------------------------
# incidence matrix
# ---------------------------------------------------------------------------

@njit
def _incidence_numba(add, mul, lines, q):
    n = q * q
    L = lines.shape[0]
    M = np.zeros((n, L), dtype=np.bool_)
    for x in range(q):
        for y in range(q):
            pid = x * q + y
            for li in range(L):
                a, b, c = lines[li, 0], lines[li, 1], lines[li, 2]
                M[pid, li] = add[mul[x, a], mul[y, b]] == c
    return M


def _incidence_numpy(add, mul, lines, q):
    xs, ys = np.divmod(np.arange(q * q), q)
    a, b, c = lines[:, 0], lines[:, 1], lines[:, 2]
    lhs = add[mul[xs[:, None], a[None, :]], mul[ys[:, None], b[None, :]]]
    return lhs == c[None, :]


# ---------------------------------------------------------------------------
# axiom counts
# ---------------------------------------------------------------------------

@njit
def _axiom_counts_numba(M):
    n, L = M.shape
    pair = np.zeros((n, n), dtype=np.int64)
    for li in range(L):
        for P in range(n):
            if M[P, li]:
                for Q in range(n):
                    if M[Q, li]:
                        pair[P, Q] += 1
    meets = np.zeros((L, L), dtype=np.int64)
    for P in range(n):
        for l1 in range(L):
            if M[P, l1]:
                for l2 in range(L):
                    if M[P, l2]:
                        meets[l1, l2] += 1
    # number of lines through P missing l
    playfair = np.zeros((n, L), dtype=np.int64)
    for P in range(n):
        for l2 in range(L):
            if M[P, l2]:
                for l1 in range(L):
                    if meets[l1, l2] == 0:
                        playfair[P, l1] += 1
    return pair, playfair


def _axiom_counts_numpy(M):
    Mi = M.astype(np.int64)
    pair = Mi @ Mi.T
    meets = Mi.T @ Mi
    playfair = Mi @ (meets == 0).astype(np.int64)
    return pair, playfair


# ---------------------------------------------------------------------------
# Pappus: P1, P3, P5 on l1 and P2, P4, P6 on l2, all off l1 ∩ l2.
# P4, P6 are forced by P4P5 ∥ P1P2 and P5P6 ∥ P2P3; test P3P4 ∥ P6P1.
# ---------------------------------------------------------------------------

@njit
def _pappus_pair(l1, l2, q, pts_on_line, inter, slope, meet, wit):
    X = inter[l1, l2]
    U = np.empty(q, dtype=np.int64)
    W = np.empty(q, dtype=np.int64)
    nu = 0
    nw = 0
    for t in range(q):
        u = pts_on_line[l1, t]
        if u != X:
            U[nu] = u
            nu += 1
        w = pts_on_line[l2, t]
        if w != X:
            W[nw] = w
            nw += 1
    checked = 0
    bad = 0
    for i1 in range(nu):
        P1 = U[i1]
        for i3 in range(nu):
            if i3 == i1:
                continue
            P3 = U[i3]
            for i5 in range(nu):
                if i5 == i1 or i5 == i3:
                    continue
                P5 = U[i5]
                for i2 in range(nw):
                    P2 = W[i2]
                    P4 = meet[P5, l2, slope[P1, P2]]
                    P6 = meet[P5, l2, slope[P2, P3]]
                    if P4 < 0 or P6 < 0 or P4 == P2 or P6 == P2 or P4 == P6:
                        continue
                    checked += 1
                    if slope[P3, P4] != slope[P6, P1]:
                        if bad == 0:
                            wit[0] = P1
                            wit[1] = P2
                            wit[2] = P3
                            wit[3] = P4
                            wit[4] = P5
                            wit[5] = P6
                        bad += 1
    return checked, bad


@njit(parallel=True)
def _pappus_scan_numba(q, pts_on_line, inter, slope, meet):
    L = pts_on_line.shape[0]
    checked = np.zeros(L * L, dtype=np.int64)
    bad = np.zeros(L * L, dtype=np.int64)
    wits = np.full((L * L, 6), -1, dtype=np.int64)
    for idx in prange(L * L):
        l1 = idx // L
        l2 = idx % L
        if l1 == l2:
            continue
        c, b = _pappus_pair(l1, l2, q, pts_on_line, inter, slope, meet, wits[idx])
        checked[idx] = c
        bad[idx] = b
    return checked, bad, wits


def _pappus_scan_numpy(q, pts_on_line, inter, slope, meet):
    L = pts_on_line.shape[0]
    checked = np.zeros(L * L, dtype=np.int64)
    bad = np.zeros(L * L, dtype=np.int64)
    wits = np.full((L * L, 6), -1, dtype=np.int64)
    for l1 in range(L):
        for l2 in range(L):
            if l1 == l2:
                continue
            X = inter[l1, l2]
            U = pts_on_line[l1][pts_on_line[l1] != X]
            W = pts_on_line[l2][pts_on_line[l2] != X]
            i1, i3, i5, i2 = np.meshgrid(
                np.arange(len(U)), np.arange(len(U)), np.arange(len(U)), np.arange(len(W)), indexing="ij"
            )
            keep = (i1 != i3) & (i1 != i5) & (i3 != i5)
            P1, P3, P5, P2 = U[i1[keep]], U[i3[keep]], U[i5[keep]], W[i2[keep]]
            P4 = meet[P5, l2, slope[P1, P2]]
            P6 = meet[P5, l2, slope[P2, P3]]
            ok = (P4 >= 0) & (P6 >= 0) & (P4 != P2) & (P6 != P2) & (P4 != P6)
            P1, P2, P3, P4, P5, P6 = P1[ok], P2[ok], P3[ok], P4[ok], P5[ok], P6[ok]
            viol = slope[P3, P4] != slope[P6, P1]
            idx = l1 * L + l2
            checked[idx] = len(P1)
            bad[idx] = int(viol.sum())
            if bad[idx]:
                j = int(np.argmax(viol))
                wits[idx] = (P1[j], P2[j], P3[j], P4[j], P5[j], P6[j])
    return checked, bad, wits


# ---------------------------------------------------------------------------
# Desargues (parallel form): A, A' on lk; B, B' on ll; C, C' on lm with
# lk ∥ ll ∥ lm distinct.  B' and C' forced by A'B' ∥ AB and B'C' ∥ BC;
# test AC ∥ A'C'.
# ---------------------------------------------------------------------------

@njit
def _desargues_triple(k, l, m, q, pts_on_line, slope, meet, wit):
    checked = 0
    bad = 0
    for ia in range(q):
        A = pts_on_line[k, ia]
        for iap in range(q):
            if iap == ia:
                continue
            Ap = pts_on_line[k, iap]
            for ib in range(q):
                B = pts_on_line[l, ib]
                Bp = meet[Ap, l, slope[A, B]]
                if Bp < 0:
                    continue
                for ic in range(q):
                    C = pts_on_line[m, ic]
                    Cp = meet[Bp, m, slope[B, C]]
                    if Cp < 0:
                        continue
                    checked += 1
                    if slope[A, C] != slope[Ap, Cp]:
                        if bad == 0:
                            wit[0] = A
                            wit[1] = B
                            wit[2] = C
                            wit[3] = Ap
                            wit[4] = Bp
                            wit[5] = Cp
                        bad += 1
    return checked, bad


@njit(parallel=True)
def _desargues_scan_numba(q, pts_on_line, classes, slope, meet):
    ncls = classes.shape[0]
    per = q * q * q
    T = ncls * per
    checked = np.zeros(T, dtype=np.int64)
    bad = np.zeros(T, dtype=np.int64)
    wits = np.full((T, 6), -1, dtype=np.int64)
    for idx in prange(T):
        s = idx // per
        r = idx % per
        ik = r // (q * q)
        il = (r // q) % q
        im = r % q
        if ik == il or ik == im or il == im:
            continue
        c, b = _desargues_triple(classes[s, ik], classes[s, il], classes[s, im], q, pts_on_line, slope, meet, wits[idx])
        checked[idx] = c
        bad[idx] = b
    return checked, bad, wits


def _desargues_scan_numpy(q, pts_on_line, classes, slope, meet):
    ncls = classes.shape[0]
    per = q * q * q
    T = ncls * per
    checked = np.zeros(T, dtype=np.int64)
    bad = np.zeros(T, dtype=np.int64)
    wits = np.full((T, 6), -1, dtype=np.int64)
    ia, iap, ib, ic = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    keep = ia != iap
    ia, iap, ib, ic = ia[keep], iap[keep], ib[keep], ic[keep]
    for idx in range(T):
        s, r = divmod(idx, per)
        ik, il, im = r // (q * q), (r // q) % q, r % q
        if ik == il or ik == im or il == im:
            continue
        k, l, m = classes[s, ik], classes[s, il], classes[s, im]
        A, Ap = pts_on_line[k, ia], pts_on_line[k, iap]
        B, C = pts_on_line[l, ib], pts_on_line[m, ic]
        Bp = meet[Ap, l, slope[A, B]]
        ok = Bp >= 0
        Cp = np.where(ok, meet[np.where(ok, Bp, 0), m, slope[B, C]], -1)
        ok &= Cp >= 0
        A, B, C, Ap, Bp, Cp = A[ok], B[ok], C[ok], Ap[ok], Bp[ok], Cp[ok]
        viol = slope[A, C] != slope[Ap, Cp]
        checked[idx] = len(A)
        bad[idx] = int(viol.sum())
        if bad[idx]:
            j = int(np.argmax(viol))
            wits[idx] = (A[j], B[j], C[j], Ap[j], Bp[j], Cp[j])
    return checked, bad, wits


# ---------------------------------------------------------------------------
# table construction
# ---------------------------------------------------------------------------

def build_plane_tables(add, neg, mul, inv, q: int, use_numba: bool = USE_NUMBA) -> PlaneTables:
    """Precompute incidence, slopes and meets for AG(2, GF(q)) from field tables."""
    add, neg, mul, inv = (np.asarray(t, dtype=np.int64) for t in (add, neg, mul, inv))
    lines = canonical_lines(q)
    L, n = len(lines), q * q
    M = (_incidence_numba if use_numba else _incidence_numpy)(add, mul, lines, q)

    pts_on_line = np.empty((L, q), dtype=np.int64)
    for li in range(L):
        pts = np.flatnonzero(M[:, li])
        assert len(pts) == q, "line without exactly q points"
        pts_on_line[li] = pts

    # direction class of (1, b, c) is -b^-1 when b != 0, vertical when b == 0
    line_slope = np.zeros(L, dtype=np.int64)
    b = lines[q:, 1]
    line_slope[q:] = np.where(b == 0, q, inv[np.where(b == 0, 1, neg[b])])

    xs, ys = np.divmod(np.arange(n), q)
    dx = add[xs[None, :], neg[xs[:, None]]]
    dy = add[ys[None, :], neg[ys[:, None]]]
    slope = np.where(dx == 0, q, mul[inv[np.where(dx == 0, 1, dx)], dy])
    np.fill_diagonal(slope, -1)

    meet = np.full((n, L, q + 1), -1, dtype=np.int64)
    for li in range(L):
        on = M[:, li]
        for W in pts_on_line[li]:
            P = np.flatnonzero(~on)
            meet[P, li, slope[P, W]] = W

    inter = np.full((L, L), -1, dtype=np.int64)
    Mi = M.astype(np.int64)
    common = Mi.T @ Mi
    for l1, l2 in zip(*np.nonzero(common == 1)):
        inter[l1, l2] = np.flatnonzero(M[:, l1] & M[:, l2])[0]

    classes = np.empty((q + 1, q), dtype=np.int64)
    for s in range(q + 1):
        classes[s] = np.flatnonzero(line_slope == s)
    return PlaneTables(q, lines, M, pts_on_line, line_slope, slope, meet, inter, classes)


incidence_matrix = _incidence_numba if USE_NUMBA else _incidence_numpy
axiom_counts = _axiom_counts_numba if USE_NUMBA else _axiom_counts_numpy
pappus_scan = _pappus_scan_numba if USE_NUMBA else _pappus_scan_numpy
desargues_scan = _desargues_scan_numba if USE_NUMBA else _desargues_scan_numpy

IMPLEMENTATIONS = {
    "numba": {
        "incidence": _incidence_numba,
        "axioms": _axiom_counts_numba,
        "pappus": _pappus_scan_numba,
        "desargues": _desargues_scan_numba,
    },
    "numpy": {
        "incidence": _incidence_numpy,
        "axioms": _axiom_counts_numpy,
        "pappus": _pappus_scan_numpy,
        "desargues": _desargues_scan_numpy,
    },
}
