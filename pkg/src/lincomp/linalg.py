"""Exact dense linear algebra over F_q (int matrices) and F_{q^n} (Felem).

Matrices are plain lists of lists.  Everything is Gaussian elimination
at desk scale; no pivoting subtleties arise because arithmetic is exact.
"""

from __future__ import annotations

from .errors import RankDeficient
from .ff import ExtField, Felem


# ---------------------------------------------------------------------------
# integer matrices mod a prime q
# ---------------------------------------------------------------------------


def mod_identity(n: int, q: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mod_mat_mul(a, b, q: int):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] = (oi[j] + c * bk[j]) % q
    return out

def mod_mat_vec(a, v, q: int):
    return [sum(x * y for x, y in zip(row, v)) % q for row in a]


def mod_rank(mat, q: int) -> int:
    if not mat or not mat[0]:
        return 0
    m = [row[:] for row in mat]
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][col] % q), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col] % q, q - 2, q)
        m[rank] = [x * inv % q for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][col] % q:
                c = m[r][col] % q
                m[r] = [(x - c * y) % q for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def mod_mat_inv(mat, q: int):
    """Inverse of a square matrix mod q; raises RankDeficient if singular."""
    n = len(mat)
    m = [[mat[i][j] % q for j in range(n)] + [1 if i == j else 0 for j in range(n)]
         for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise RankDeficient("matrix is singular mod %d" % q)
        m[col], m[pivot] = m[pivot], m[col]
        inv = pow(m[col][col], q - 2, q)
        m[col] = [x * inv % q for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [(x - c * y) % q for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def mod_is_invertible(mat, q: int) -> bool:
    return len(mat) > 0 and mod_rank(mat, q) == len(mat)


# ---------------------------------------------------------------------------
# Felem matrices over an ExtField
# ---------------------------------------------------------------------------


def fmat_zero(rows: int, cols: int, field: ExtField):
    z = field.zero()
    return [[z for _ in range(cols)] for _ in range(rows)]


def fmat_identity(n: int, field: ExtField):
    z, o = field.zero(), field.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def fmat_mul(a, b, field: ExtField):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = fmat_zero(rows, cols, field)
    for i in range(rows):
        for k in range(inner):
            c = a[i][k]
            if c:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    if bk[j]:
                        oi[j] = oi[j] + c * bk[j]
    return out


def fmat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def fmat_transpose(a):
    return [list(col) for col in zip(*a)]


def fvec_mat(v, a, field: ExtField):
    """Row vector times matrix."""
    cols = len(a[0]) if a else 0
    out = [field.zero()] * cols
    for k, c in enumerate(v):
        if c:
            ak = a[k]
            out = [o + c * x if x else o for o, x in zip(out, ak)]
    return out


def fmat_inv(mat, field: ExtField):
    n = len(mat)
    m = [list(mat[i]) + list(fmat_identity(n, field)[i]) for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise RankDeficient("Felem matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inv()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [x - c * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def fmat_is_invertible(mat, field: ExtField) -> bool:
    try:
        fmat_inv(mat, field)
        return True
    except RankDeficient:
        return False


def embed_mod_matrix(mat, field: ExtField):
    """Lift an integer matrix mod q into the field via the canonical inclusion."""
    return [[field.elem(x) for x in row] for row in mat]
