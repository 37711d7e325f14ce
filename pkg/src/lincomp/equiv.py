"""Equivalence of target matrices under invertible row operations and
source permutations, canonical (I P) forms, and classification into the
all-units (constructively solvable) versus zero-containing classes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    AllOnesColumnVector,
    NotBinary,
    NotInClass,
    RankDeficient,
)
from .code import TargetMatrix
from .linalg import mod_is_invertible, mod_mat_inv, mod_mat_mul


@dataclass(frozen=True)
class Equivalence:
    """Witness of T = Q (I P) Pi.

    `perm[j]` is the column of T that column j of Q(I P) lands on, so the
    permutation matrix Pi has entry 1 at (j, perm[j]).
    """

    q: int
    Q: tuple          # l x l invertible, row tuples
    perm: tuple       # length s
    P: tuple          # l x (s-l), row tuples (possibly zero-width)

    @property
    def l(self):
        return len(self.Q)

    @property
    def s(self):
        return len(self.perm)

    def identity_p_matrix(self):
        """The l x s matrix (I P)."""
        l, s = self.l, self.s
        rows = []
        for i in range(l):
            rows.append([1 if i == j else 0 for j in range(l)] + list(self.P[i]))
        return rows

    def reconstruct(self):
        """Q (I P) Pi as row lists; must equal the matrix it witnesses."""
        prod = mod_mat_mul([list(r) for r in self.Q], self.identity_p_matrix(), self.q)
        out = [[0] * self.s for _ in range(self.l)]
        for j, dest in enumerate(self.perm):
            for i in range(self.l):
                out[i][dest] = prod[i][j]
        return out


class Classification(enum.Enum):
    IDENTITY_LIKE = "identity-like"
    SUM_LIKE = "sum-like"
    ALL_UNITS = "all-units"
    HAS_ZERO = "has-zero"


def _equivalence_for_subset(target: TargetMatrix, subset):
    """Equivalence with the given column subset as the identity block, or
    None if that submatrix is singular."""
    q, l, s = target.q, target.l, target.s
    sub = [[target.rows[i][j] for j in subset] for i in range(l)]
    if not mod_is_invertible(sub, q):
        return None
    qinv = mod_mat_inv(sub, q)
    rest = [j for j in range(s) if j not in subset]
    rest_cols = [[target.rows[i][j] for j in rest] for i in range(l)]
    p = mod_mat_mul(qinv, rest_cols, q) if rest else [[] for _ in range(l)]
    perm = tuple(list(subset) + rest)
    return Equivalence(q=q, Q=tuple(tuple(r) for r in sub), perm=perm,
                       P=tuple(tuple(r) for r in p))


def canonicalize(target: TargetMatrix) -> Equivalence:
    """Lexicographically first invertible column subset as identity block."""
    for subset in combinations(range(target.s), target.l):
        eq = _equivalence_for_subset(target, subset)
        if eq is not None:
            return eq
    raise RankDeficient("no invertible column subset; matrix not full row rank")


def _p_all_units(eq: Equivalence) -> bool:
    return all(all(x != 0 for x in row) for row in eq.P)


def _p_has_zero(eq: Equivalence) -> bool:
    return any(any(x == 0 for x in row) for row in eq.P)


def classify(target: TargetMatrix):
    """Returns (Classification, witness Equivalence)."""
    if target.l == target.s:
        return Classification.IDENTITY_LIKE, canonicalize(target)
    if target.l == 1:
        return Classification.SUM_LIKE, canonicalize(target)
    first_valid = None
    for subset in combinations(range(target.s), target.l):
        eq = _equivalence_for_subset(target, subset)
        if eq is None:
            continue
        if first_valid is None:
            first_valid = eq
        if _p_all_units(eq):
            return Classification.ALL_UNITS, eq
    # every equivalent (I P) form has a zero somewhere in P
    assert first_valid is not None and _p_has_zero(first_valid)
    return Classification.HAS_ZERO, first_valid


def binary_zero_transform(target: TargetMatrix) -> Equivalence:
    """Over F_2, produce an (I P) witness whose P contains a zero.

    Fails with AllOnesColumnVector exactly when s-l = 1 and the canonical
    P is the all-ones column (the target is equivalent to (I 1)).
    """
    if target.q != 2:
        raise NotBinary("transform defined over F_2 only")
    l, s = target.l, target.s
    if not (1 < l < s):
        raise NotInClass("requires 1 < l < s")
    eq = canonicalize(target)
    if _p_has_zero(eq):
        return eq
    if s - l == 1:
        raise AllOnesColumnVector("P is the all-ones column; no zero obtainable")
    # Q2: identity with last column replaced by all-ones; swap columns l, l+1
    q2 = [[1 if (i == j and j < l - 1) or j == l - 1 else 0 for j in range(l)]
          for i in range(l)]
    ip = eq.identity_p_matrix()
    prod = mod_mat_mul(q2, ip, 2)           # (Q2  Q2*Pbar)
    cols = list(zip(*prod))
    cols[l - 1], cols[l] = cols[l], cols[l - 1]
    new_ip = [list(r) for r in zip(*cols)]
    for i in range(l):
        assert all(new_ip[i][j] == (1 if i == j else 0) for j in range(l))
    new_p = tuple(tuple(row[l:]) for row in new_ip)
    # T = Q (I Pbar) Pi = (Q Q2^{-1}) (I P) (Pi2 Pi) with Pi2 the column swap
    q2_inv = mod_mat_inv(q2, 2)
    new_q = mod_mat_mul([list(r) for r in eq.Q], q2_inv, 2)
    swap = list(range(s))
    swap[l - 1], swap[l] = swap[l], swap[l - 1]
    new_perm = tuple(eq.perm[swap[j]] for j in range(s))
    out = Equivalence(q=2, Q=tuple(tuple(r) for r in new_q), perm=new_perm,
                      P=new_p)
    assert _p_has_zero(out)
    return out


def factor_iu(target: TargetMatrix):
    """Factor T = Q (I u') with Q the first s-1 columns and u' all units.

    Only defined for l = s-1 targets in the all-units class.
    """
    l, s, q = target.l, target.s, target.q
    if l != s - 1:
        raise NotInClass("requires l = s-1")
    cls, _ = classify(target)
    if cls != Classification.ALL_UNITS:
        raise NotInClass("target is not equivalent to (I u) with u all units")
    qmat = [[target.rows[i][j] for j in range(s - 1)] for i in range(l)]
    # deleting any one column of an all-units (I u) target leaves an
    # invertible matrix, so this block is full rank
    qinv = mod_mat_inv(qmat, q)
    last = [target.rows[i][s - 1] for i in range(l)]
    u = [sum(qinv[i][k] * last[k] for k in range(l)) % q for i in range(l)]
    assert all(x != 0 for x in u)
    return [tuple(r) for r in qmat], tuple(u)
