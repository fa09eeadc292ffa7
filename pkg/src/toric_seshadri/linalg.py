"""Small exact linear algebra over Q and Z.

Matrices are lists of rows; entries are ``int`` or ``Fraction``.  The
sizes in this package are tiny (at most a dozen columns), so plain Gaussian
elimination on ``Fraction`` is fast enough and keeps everything exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple


def to_fraction(x) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def fvec(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in v)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else max(abs(a), abs(b))


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [to_fraction(x) for x in v]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def integer_row(v: Sequence) -> tuple[int, ...]:
    """Clear denominators of a rational row (positive scaling only)."""
    return primitive(v)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[to_fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Integer basis (primitive vectors) of {x : rows·x = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """One rational solution of ``a x = b`` or None when inconsistent."""
    ncols = len(a[0])
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def in_span(v: Sequence, rows: Sequence[Sequence]) -> bool:
    if not rows:
        return all(to_fraction(x) == 0 for x in v)
    return rank(list(rows) + [list(v)]) == rank(rows)


def det(rows: Sequence[Sequence]) -> Fraction:
    m = [[to_fraction(x) for x in r] for r in rows]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def transpose(rows: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*rows)]


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(r, v) for r in rows)


def lattice_complement_basis(u: Sequence[int]) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """For primitive ``u`` return (basis of the lattice u^perp, m0 with <m0,u> = 1).

    The basis together with ``m0`` is a basis of Z^n.  Built by an extended
    Euclid column reduction that turns ``u`` into e_1 with a unimodular matrix.
    """
    n = len(u)
    # columns of `cols` stay a Z-basis; invariant: row vector u·cols = w
    cols = [[int(i == j) for j in range(n)] for i in range(n)]  # identity, column-major list
    w = list(u)

    def colop(i, j, k):
        # column i += k * column j
        for r in range(n):
            cols[r][i] += k * cols[r][j]
        w[i] += k * w[j]

    while sum(1 for x in w if x != 0) > 1:
        nz = [i for i in range(n) if w[i] != 0]
        i = min(nz, key=lambda t: abs(w[t]))
        for j in nz:
            if j != i:
                colop(j, i, -(w[j] // w[i]))
    i = next(k for k in range(n) if w[k] != 0)
    if abs(w[i]) != 1:
        raise ValueError(f"vector {tuple(u)} is not primitive")
    m0 = tuple(cols[r][i] * w[i] for r in range(n))
    basis = [tuple(cols[r][j] for r in range(n)) for j in range(n) if j != i]
    return basis, m0
