"""Fraction-free exact linear algebra over prime-order cyclotomic rings.

Matrices are lists of rows; each entry is a raw coefficient list as used by
:mod:`mubsupport.cyclotomic` (ints preferred, Fractions accepted).  Bareiss
elimination keeps every intermediate value equal to a minor of the input, so
with integer input all arithmetic stays in Z[w] and the divisions performed
along the way are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .cyclotomic import (
    Cyclotomic,
    _raw_inverse_pair,
    _raw_is_zero,
    _raw_mul,
    _raw_neg,
    _raw_one,
    _raw_scale,
    _raw_sub,
    _raw_zero,
)
from .errors import TheoremViolationError
from .mub import StateVector, field_order, inner_product

RawElement = list
RawMatrix = list[list[RawElement]]


def _exact_div_scalar(vec: RawElement, n) -> RawElement:
    """Divide every coefficient by the scalar n; exact by construction."""
    if isinstance(n, int) and all(isinstance(c, int) for c in vec):
        out = []
        for c in vec:
            q, r = divmod(c, n)
            if r:
                raise ArithmeticError("non-exact division in fraction-free elimination")
            out.append(q)
        return out
    return [Fraction(c) / n for c in vec]


def _divide(order: int, vec: RawElement, divisor: RawElement, helper) -> RawElement:
    """Exact division vec / divisor given helper = (conjugate product, norm)."""
    tilde, norm = helper
    return _exact_div_scalar(_raw_mul(order, vec, tilde), norm)


def eliminate(order: int, matrix: RawMatrix) -> tuple[RawMatrix, list[tuple[int, int]], int]:
    """Fraction-free forward elimination (Bareiss).

    Returns (echelon matrix, pivot (row, col) list, row-swap sign).  The input
    is not modified.
    """
    m = [[list(e) for e in row] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[tuple[int, int]] = []
    sign = 1
    prev: RawElement | None = None
    prev_helper = None
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pr = next((i for i in range(r, rows) if not _raw_is_zero(m[i][c])), None)
        if pr is None:
            continue
        if pr != r:
            m[pr], m[r] = m[r], m[pr]
            sign = -sign
        pivot = m[r][c]
        for i in range(r + 1, rows):
            head = m[i][c]
            if _raw_is_zero(head):
                if prev is not None:
                    # Bareiss still rescales untouched rows below the pivot.
                    for cc in range(c + 1, cols):
                        m[i][cc] = _divide(
                            order, _raw_mul(order, pivot, m[i][cc]), prev, prev_helper
                        )
                continue
            for cc in range(c + 1, cols):
                num = _raw_sub(
                    _raw_mul(order, pivot, m[i][cc]),
                    _raw_mul(order, head, m[r][cc]),
                )
                m[i][cc] = num if prev is None else _divide(order, num, prev, prev_helper)
            m[i][c] = _raw_zero(order)
        pivots.append((r, c))
        prev = pivot
        prev_helper = _raw_inverse_pair(order, pivot)
        r += 1
    return m, pivots, sign


def determinant(order: int, matrix: RawMatrix) -> RawElement:
    """Exact determinant of a square raw matrix (Bareiss: the last pivot)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return _raw_one(order)
    echelon, pivots, sign = eliminate(order, matrix)
    if len(pivots) < n:
        return _raw_zero(order)
    last_r, last_c = pivots[-1]
    det = echelon[last_r][last_c]
    return det if sign == 1 else _raw_neg(det)


def rank(order: int, matrix: RawMatrix) -> int:
    _, pivots, _ = eliminate(order, matrix)
    return len(pivots)


def _strip_content(vec_entries: list[RawElement]) -> list[RawElement]:
    """Divide a solution vector through by the gcd of all integer coefficients."""
    coeffs = [c for entry in vec_entries for c in entry]
    if not all(isinstance(c, int) for c in coeffs):
        return vec_entries
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g > 1:
        return [[c // g for c in entry] for entry in vec_entries]
    return vec_entries


def kernel_basis(order: int, matrix: RawMatrix) -> list[list[RawElement]]:
    """Basis of the right kernel, one projective integer vector per free column."""
    echelon, pivots, _ = eliminate(order, matrix)
    cols = len(matrix[0]) if matrix else 0
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(cols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        x: dict[int, RawElement] = {f: _raw_one(order)}
        for (pr, pc) in reversed(pivots):
            if pc > f:
                continue
            s = _raw_zero(order)
            for c in range(pc + 1, cols):
                xc = x.get(c)
                if xc is not None and not _raw_is_zero(xc):
                    s = [a + b for a, b in zip(s, _raw_mul(order, echelon[pr][c], xc))]
            if _raw_is_zero(s):
                x[pc] = _raw_zero(order)
                continue
            tilde, norm = _raw_inverse_pair(order, echelon[pr][pc])
            scaled = _raw_neg(_raw_mul(order, s, tilde))
            for c in list(x):
                x[c] = _raw_scale(x[c], norm)
            x[pc] = scaled
        vec = [x.get(c, _raw_zero(order)) for c in range(cols)]
        basis.append(_strip_content(vec))
    return basis


def rows_from_states(states: Sequence[StateVector]) -> tuple[int, RawMatrix]:
    """Constraint rows for "state is orthogonal to each |phi>": conjugated entries.

    Rows are rescaled to integer coefficients (denominators cleared per row,
    which leaves the kernel unchanged).
    """
    order = field_order(states[0].dim)
    matrix: RawMatrix = []
    for s in states:
        row = [list(e.conjugate().coeffs) for e in s.entries]
        lcm = 1
        for entry in row:
            for c in entry:
                lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        matrix.append(
            [[int(c * lcm) for c in entry] for entry in row]
        )
    return order, matrix


def kernel_ray(states: Sequence[StateVector], label: str | None = None) -> StateVector:
    """The unique (up to scale) nonzero state orthogonal to d-1 given states.

    The basis vectors handed in are guaranteed linearly independent when they
    come from two bases of a standard MU set; a different kernel dimension is
    reported as a structural violation.  Every returned ray is re-checked
    against all constraints by exact inner products.
    """
    dim = states[0].dim
    if len(states) != dim - 1:
        raise ValueError(f"need exactly {dim - 1} constraint states, got {len(states)}")
    order, matrix = rows_from_states(states)
    basis = kernel_basis(order, matrix)
    if len(basis) != 1:
        raise TheoremViolationError(
            "two-basis constraint rows are linearly dependent",
            witness={"dim": dim, "kernel_dim": len(basis)},
        )
    ray = StateVector(dim, [Cyclotomic(order, e) for e in basis[0]], label=label)
    for s in states:
        if not inner_product(s, ray).is_zero:
            raise TheoremViolationError(
                "kernel ray fails a constraint on back-substitution",
                witness={"dim": dim, "constraint": s.label},
            )
    return ray
