"""Inner loop of the moment engine.

The fixed-point recurrence P <- sum_i (mu_i (P + I))^2 runs here on plain
Python lists.  Series are length-(M+1) coefficient lists over one of three
coefficient rings, picked per input:

* ``int``            when every coefficient is a plain integer (the common
                     case; the engine rescales rational inputs to land here),
* ``GaussInt``       for Gaussian-integer coefficients,
* ``Scalar``         for anything else.

The mu_i matrices stay extremely sparse (a handful of nonzero rows, entries
of z-degree <= 1), so products with them are cheap and P keeps the same
nonzero-row support, stored as a row dict.  The expensive part, squaring
A = mu_i (P + I), only touches A's nonzero rows.  None of this changes the
result: it is classical matrix multiplication with zero blocks skipped.
"""

from __future__ import annotations

from operator import mul as _mul
from typing import Dict, List, Sequence, Tuple

from .scalar import Scalar

# sparse matrix: per variable, row index -> list of (col, coeff tuple)
SparseMats = Sequence[Dict[int, List[Tuple[int, tuple]]]]


class GaussInt:
    """A Gaussian integer a + b*i with exact int parts."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b

    def __add__(self, other):
        if isinstance(other, GaussInt):
            return GaussInt(self.a + other.a, self.b + other.b)
        return GaussInt(self.a + other, self.b)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, GaussInt):
            return GaussInt(
                self.a * other.a - self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        return GaussInt(self.a * other, self.b * other)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        if isinstance(other, GaussInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __repr__(self):
        return f"GaussInt({self.a}, {self.b})"


def classify(coeffs) -> str:
    """Pick the cheapest coefficient ring holding all given Scalars."""
    kind = "int"
    for c in coeffs:
        if c.re.denominator != 1 or c.im.denominator != 1:
            return "scalar"
        if c.im:
            kind = "gauss"
    return kind


def scalar_to_ring(c: Scalar, kind: str):
    if kind == "int":
        return c.re.numerator
    if kind == "gauss":
        return GaussInt(c.re.numerator, c.im.numerator)
    return c


def ring_to_scalar(v, kind: str) -> Scalar:
    if kind == "int":
        return Scalar(v)
    if kind == "gauss":
        return Scalar(v.a, v.b)
    return v


def _dot(a, b):
    return sum(map(_mul, a, b))


def _eff_len(series) -> int:
    for k in range(len(series) - 1, -1, -1):
        if series[k]:
            return k + 1
    return 0


def _mul_acc(dst, f, lf, g, n):
    """dst += f*g truncated to length n; lf = effective length of f."""
    if not lf:
        return
    lg = _eff_len(g)
    if not lg:
        return
    top = lf + lg - 1
    if top > n:
        top = n
    for k in range(top):
        lo = k - lg + 1
        if lo < 0:
            lo = 0
        hi = k if k < lf else lf - 1
        stop = k - hi - 1
        seg = g[k - lo :: -1] if stop < 0 else g[k - lo : stop : -1]
        v = _dot(f[lo : hi + 1], seg)
        if v:
            dst[k] = dst[k] + v


def iterate(
    mats: SparseMats, dim: int, n_coeffs: int, steps: int, zero
) -> list:
    """Run the recurrence ``steps`` times from P = 0; return entry (1, N).

    ``mats`` holds the reduced representation matrices with rows of
    (column, z-coefficient-tuple) pairs; ``n_coeffs`` is M + 1.
    """
    rows_p: Dict[int, List[list]] = {}
    zrow = [zero] * n_coeffs
    for _ in range(steps):
        new_rows: Dict[int, List[list]] = {}
        for mu in mats:
            # A = mu * (P + I), restricted to mu's nonzero rows
            a_rows: Dict[int, list] = {}
            for j, entries in mu.items():
                row = [None] * dim
                for t, zp in entries:
                    # identity contribution: zp lands in column t
                    cell = row[t]
                    if cell is None:
                        cell = row[t] = zrow[:]
                    for e, c in enumerate(zp):
                        if c and e < n_coeffs:
                            cell[e] = cell[e] + c
                    pt = rows_p.get(t)
                    if pt is None:
                        continue
                    for l in range(dim):
                        src = pt[l]
                        if src is None:
                            continue
                        cell = row[l]
                        for e, c in enumerate(zp):
                            if not c:
                                continue
                            if cell is None:
                                cell = row[l] = zrow[:]
                            for k in range(n_coeffs - e):
                                sk = src[k]
                                if sk:
                                    cell[k + e] = cell[k + e] + c * sk
                a_rows[j] = row
            # accumulate A*A into the next P
            for j, arow in a_rows.items():
                out = new_rows.get(j)
                if out is None:
                    out = new_rows[j] = [None] * dim
                for t, trow in a_rows.items():
                    f = arow[t]
                    if f is None:
                        continue
                    lf = _eff_len(f)
                    if not lf:
                        continue
                    for l in range(dim):
                        g = trow[l]
                        if g is None:
                            continue
                        dst = out[l]
                        if dst is None:
                            dst = out[l] = zrow[:]
                        _mul_acc(dst, f, lf, g, n_coeffs)
        rows_p = new_rows
    top = rows_p.get(0)
    if top is None or top[dim - 1] is None:
        return zrow[:]
    return top[dim - 1]
