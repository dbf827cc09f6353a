"""Diagonal reduction ``P*A*Q = D`` with a divisibility chain on ``D``.

Over ``Z`` this is the classical elimination with a minimal-absolute-value
pivot.  Over ``Z/p^k`` the pivot is an entry of least p-valuation, scaled
to ``p^v``; it divides everything left, so one elimination pass per
pivot suffices.  Composite moduli are reduced per prime-power component
and recombined by CRT, each diagonal entry normalized to ``gcd(d, m)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import ExactRing, IntegerRing, ResidueRing

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DiagCertificate:
    P: Matrix
    D: Matrix
    Q: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))

    def to_json(self) -> dict:
        return {"P": [list(r) for r in self.P], "D": [list(r) for r in self.D], "Q": [list(r) for r in self.Q]}


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b, mod: int | None = None) -> list[list[int]]:
    cols = list(zip(*b))
    out = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
    if mod:
        out = [[x % mod for x in row] for row in out]
    return out


def check_shape(a) -> tuple[int, int]:
    if not a or not a[0]:
        raise ValueError("matrix must be non-empty")
    width = len(a[0])
    if any(len(row) != width for row in a):
        raise ValueError("matrix rows have different lengths")
    return len(a), width


def _freeze(a) -> Matrix:
    return tuple(tuple(row) for row in a)


# -- row / column moves, mirrored into the transforms ------------------------------


def _swap_rows(m, p, i, j):
    m[i], m[j] = m[j], m[i]
    p[i], p[j] = p[j], p[i]


def _swap_cols(m, q, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]
    for row in q:
        row[i], row[j] = row[j], row[i]


def _add_row(m, p, dst, src, k, mod=None):
    """row dst += k * row src"""
    for mat in (m, p):
        mat[dst] = [x + k * y for x, y in zip(mat[dst], mat[src])]
        if mod:
            mat[dst] = [x % mod for x in mat[dst]]


def _add_col(m, q, dst, src, k, mod=None):
    for mat in (m, q):
        for row in mat:
            row[dst] += k * row[src]
            if mod:
                row[dst] %= mod


def _scale_row(m, p, i, k, mod):
    for mat in (m, p):
        mat[i] = [x * k % mod for x in mat[i]]


# -- Z -------------------------------------------------------------------------------


def _smith_integer(a) -> DiagCertificate:
    n, w = check_shape(a)
    m = [list(map(int, row)) for row in a]
    p, q = identity(n), identity(w)
    for t in range(min(n, w)):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, w):
                    if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _finish_integer(m, p, q)
            _swap_rows(m, p, t, best[0])
            _swap_cols(m, q, t, best[1])
            piv = m[t][t]
            clean = True
            for i in range(t + 1, n):
                if m[i][t]:
                    _add_row(m, p, i, t, -(m[i][t] // piv))
                    clean = clean and m[i][t] == 0
            for j in range(t + 1, w):
                if m[t][j]:
                    _add_col(m, q, j, t, -(m[t][j] // piv))
                    clean = clean and m[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, w) if m[i][j] % piv),
                None,
            )
            if bad is None:
                break
            # pull the offending row up; the next column pass shrinks the pivot
            _add_row(m, p, t, bad, 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            p[t] = [-x for x in p[t]]
    return _finish_integer(m, p, q)


def _finish_integer(m, p, q) -> DiagCertificate:
    return DiagCertificate(_freeze(p), _freeze(m), _freeze(q))


# -- Z/p^k ---------------------------------------------------------------------------


def _pval(x: int, p: int, k: int) -> int:
    if x == 0:
        return k
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _smith_prime_power(a, p: int, k: int):
    """Returns ``(P, M, Q, vals)`` over ``Z/p^k`` with ``M`` diagonal, pivots
    ``p^v`` and ``vals`` their valuations (k for zero)."""
    mod = p**k
    n, w = check_shape(a)
    m = [[x % mod for x in row] for row in a]
    pm, qm = identity(n), identity(w)
    vals = []
    for t in range(min(n, w)):
        best, best_v = None, k
        for i in range(t, n):
            for j in range(t, w):
                v = _pval(m[i][j], p, k)
                if v < best_v:
                    best, best_v = (i, j), v
        if best is None:
            vals.extend([k] * (min(n, w) - t))
            break
        _swap_rows(m, pm, t, best[0])
        _swap_cols(m, qm, t, best[1])
        unit = m[t][t] // p**best_v
        _scale_row(m, pm, t, pow(unit, -1, mod), mod)
        piv = p**best_v
        for i in range(t + 1, n):
            if m[i][t]:
                _add_row(m, pm, i, t, -(m[i][t] // piv), mod)
        for j in range(t + 1, w):
            if m[t][j]:
                _add_col(m, qm, j, t, -(m[t][j] // piv), mod)
        vals.append(best_v)
    return pm, m, qm, vals


def _smith_residue(ring: ResidueRing, a) -> DiagCertificate:
    n, w = check_shape(a)
    parts = []
    for p, k, _ in ring.components:
        parts.append(_smith_prime_power(a, p, k))
    r = min(n, w)
    # scale row t of each component so the recombined pivot is gcd(d_t, m)
    for t in range(r):
        for i, (p_i, _, q_i) in enumerate(ring.components):
            c = 1
            for j, (p_j, _, _) in enumerate(ring.components):
                if j != i:
                    c *= p_j ** parts[j][3][t]
            c %= q_i
            if c != 1:
                pm, m, _, _ = parts[i]
                _scale_row(m, pm, t, c, q_i)
    crt = ring.crt

    def combine(idx, rows, cols):
        return tuple(
            tuple(crt([part[idx][i][j] for part in parts]) for j in range(cols)) for i in range(rows)
        )

    P, Q = combine(0, n, n), combine(2, w, w)
    D = [[0] * w for _ in range(n)]
    for t in range(r):
        D[t][t] = crt([part[1][t][t] for part in parts])
    return DiagCertificate(P, _freeze(D), Q)


def smith_form(ring: ExactRing, a) -> DiagCertificate:
    """Diagonalize ``a`` over ``ring``; see the module docstring."""
    if isinstance(ring, IntegerRing):
        return _smith_integer(a)
    return _smith_residue(ring, a)
