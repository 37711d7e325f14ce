"""Concrete linear network codes, transfer matrices, and the solution check.

A code is the three sparse coefficient families of the encoding and
decoding functions; missing coefficients mean zero.  The transfer row of
source tau is M_tau = A_tau (I - F)^{-1} B^t, with the inverse taken as
the finite geometric series of the nilpotent F.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .errors import (
    ArityMismatch,
    DimensionMismatch,
    FieldMismatch,
    InconsistentCode,
)
from .ff import ExtField, Felem, field_descriptor, field_from_descriptor
from .linalg import fmat_zero, fvec_mat, mod_rank
from .netmodel import Network


@dataclass(frozen=True)
class TargetMatrix:
    """The l x s matrix over F_q defining the demanded linear function."""

    q: int
    rows: tuple  # tuple of row tuples

    def __post_init__(self):
        rows = tuple(tuple(x % self.q for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        l, s = self.l, self.s
        if not (1 <= l <= s):
            raise DimensionMismatch(f"need 1 <= l <= s, got l={l}, s={s}")
        if any(len(r) != s for r in rows):
            raise DimensionMismatch("ragged target matrix")
        if mod_rank([list(r) for r in rows], self.q) != l:
            raise DimensionMismatch("target matrix is not full row rank")
        for j in range(s):
            if all(rows[i][j] == 0 for i in range(l)):
                raise DimensionMismatch(f"target matrix has zero column {j}")

    @property
    def l(self) -> int:
        return len(self.rows)

    @property
    def s(self) -> int:
        return len(self.rows[0])

    def column(self, j: int):
        return [self.rows[i][j] for i in range(self.l)]

    def as_lists(self):
        return [list(r) for r in self.rows]

    def to_dict(self):
        return {"field": {"q": self.q}, "rows": self.as_lists()}


def parse_target(text: str) -> TargetMatrix:
    data = json.loads(text)
    return TargetMatrix(q=int(data["field"]["q"]),
                        rows=tuple(tuple(r) for r in data["rows"]))


@dataclass
class LinearCode:
    """Coefficient families x_A, x_F, x_B as sparse maps; absent keys are zero."""

    field: ExtField
    a_coeffs: dict = dc_field(default_factory=dict)  # (tau, edge) -> Felem
    f_coeffs: dict = dc_field(default_factory=dict)  # (e_in, e_out) -> Felem
    b_coeffs: dict = dc_field(default_factory=dict)  # (edge, row) -> Felem

    def num_output_rows(self) -> int:
        return 1 + max((j for (_, j) in self.b_coeffs), default=-1)

    def to_dict(self) -> dict:
        return {
            "field": field_descriptor(self.field),
            "a": [[t, e, v.to_list()] for (t, e), v in sorted(self.a_coeffs.items())],
            "f": [[ei, eo, v.to_list()] for (ei, eo), v in sorted(self.f_coeffs.items())],
            "b": [[e, j, v.to_list()] for (e, j), v in sorted(self.b_coeffs.items())],
        }

    def serialize(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def parse_code(text: str) -> LinearCode:
    data = json.loads(text)
    fld = field_from_descriptor(data["field"])
    code = LinearCode(field=fld)
    for t, e, v in data.get("a", []):
        code.a_coeffs[(int(t), int(e))] = fld.elem(v)
    for ei, eo, v in data.get("f", []):
        code.f_coeffs[(int(ei), int(eo))] = fld.elem(v)
    for e, j, v in data.get("b", []):
        code.b_coeffs[(int(e), int(j))] = fld.elem(v)
    return code


def assemble_matrices(net: Network, code: LinearCode, l: int | None = None):
    """Return (A_1..A_s rows, F, B) as Felem matrices in canonical edge order."""
    fld = code.field
    ne = len(net.edges)
    if l is None:
        l = max(code.num_output_rows(), 1)

    a_rows = [[fld.zero()] * ne for _ in range(net.s)]
    for (tau, e), v in code.a_coeffs.items():
        if not (0 <= tau < net.s) or not (0 <= e < ne):
            raise InconsistentCode(f"a-coefficient ({tau}, {e}) out of range")
        if net.tail(e) != net.sources[tau]:
            raise InconsistentCode(
                f"a-coefficient ({tau}, {e}): edge is not an out-edge of the source")
        a_rows[tau][e] = v

    fmat = fmat_zero(ne, ne, fld)
    for (ei, eo), v in code.f_coeffs.items():
        if not (0 <= ei < ne) or not (0 <= eo < ne):
            raise InconsistentCode(f"f-coefficient ({ei}, {eo}) out of range")
        if net.head(ei) != net.tail(eo):
            raise InconsistentCode(f"f-coefficient ({ei}, {eo}) on non-adjacent edges")
        fmat[ei][eo] = v

    bmat = fmat_zero(l, ne, fld)
    rho_in = set(net.in_edges(net.receiver))
    for (e, j), v in code.b_coeffs.items():
        if not (0 <= e < ne) or j < 0:
            raise InconsistentCode(f"b-coefficient ({e}, {j}) out of range")
        if e not in rho_in:
            raise InconsistentCode(f"b-coefficient ({e}, {j}): not a receiver in-edge")
        bmat[j][e] = v

    return a_rows, fmat, bmat


def transfer_matrix(net: Network, code: LinearCode, l: int | None = None):
    """Rows M_tau of the s x l end-to-end transfer map, exact over F_{q^n}."""
    fld = code.field
    ne = len(net.edges)
    a_rows, fmat, bmat = assemble_matrices(net, code, l=l)
    rows = []
    for a in a_rows:
        # a * (I + F + ... + F^{ne-1}) accumulated as repeated vector-matrix products
        acc = list(a)
        cur = a
        for _ in range(ne - 1):
            cur = fvec_mat(cur, fmat, fld)
            if not any(cur):
                break
            acc = [x + y for x, y in zip(acc, cur)]
        m_tau = [sum((acc[e] * brow[e] for e in range(ne) if acc[e] and brow[e]),
                     fld.zero())
                 for brow in bmat]
        rows.append(m_tau)
    return rows


def simulate(net: Network, code: LinearCode, messages, l: int | None = None):
    """Evaluate the code on concrete messages; returns the decoded l-vector."""
    fld = code.field
    if len(messages) != net.s:
        raise ArityMismatch(f"expected {net.s} messages, got {len(messages)}")
    for m in messages:
        if not isinstance(m, Felem) or m.field != fld:
            raise FieldMismatch("messages must be elements of the code's field")
    if l is None:
        l = max(code.num_output_rows(), 1)

    z = []
    for e, (t, _) in enumerate(net.edges):
        val = fld.zero()
        tau = net.source_index(t)
        if tau is not None:
            c = code.a_coeffs.get((tau, e))
            if c:
                val = val + c * messages[tau]
        for ein in net.in_edges(t):
            c = code.f_coeffs.get((ein, e))
            if c and z[ein]:
                val = val + c * z[ein]
        z.append(val)

    out = []
    for j in range(l):
        acc = fld.zero()
        for e in net.in_edges(net.receiver):
            c = code.b_coeffs.get((e, j))
            if c and z[e]:
                acc = acc + c * z[e]
        out.append(acc)
    return out


def is_solution(net: Network, code: LinearCode, target: TargetMatrix) -> bool:
    """True iff M_tau equals the tau-th target column for every source."""
    fld = code.field
    if target.q != fld.q:
        raise FieldMismatch("target matrix and code use different base fields")
    if target.s != net.s:
        raise DimensionMismatch("target column count differs from source count")
    rows = transfer_matrix(net, code, l=target.l)
    for tau in range(net.s):
        want = [fld.elem(x) for x in target.column(tau)]
        if rows[tau] != want:
            return False
    return True
