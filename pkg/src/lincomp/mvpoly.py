"""Multivariate polynomials over F_q, Buchberger's algorithm, and the
algebraic solvability test.

The ideal of a (network, target) pair is generated by the entries of
(T_tau)^t - M_tau with the code coefficients treated as indeterminates;
the pair is unsolvable over every extension exactly when the reduced
Groebner basis collapses to {1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import Aborted, DimensionMismatch, UnknownIndeterminate
from .code import TargetMatrix
from .netmodel import Network


# ---------------------------------------------------------------------------
# indeterminates
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Indeterminate:
    kind: str   # 'A', 'F' or 'B'
    i: int      # source index / in-edge / edge
    j: int      # edge / out-edge / output row

    def __str__(self):
        return f"x[{self.kind},{self.i},{self.j}]"


def indeterminates_for(net: Network, l: int):
    """Deterministic variable order: A (by source, then edge), F (by edge
    pair), then B (by edge, then row)."""
    out = []
    for tau, src in enumerate(net.sources):
        for e in net.out_edges(src):
            out.append(Indeterminate("A", tau, e))
    ne = len(net.edges)
    for ei in range(ne):
        for eo in range(ne):
            if net.head(ei) == net.tail(eo):
                out.append(Indeterminate("F", ei, eo))
    for e in net.in_edges(net.receiver):
        for j in range(l):
            out.append(Indeterminate("B", e, j))
    return out


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class MvPoly:
    """Sparse polynomial: exponent tuple -> nonzero coefficient in F_q."""

    __slots__ = ("q", "nvars", "terms")

    def __init__(self, q: int, nvars: int, terms: dict | None = None):
        self.q = q
        self.nvars = nvars
        self.terms = terms or {}

    @classmethod
    def const(cls, q, nvars, c):
        c %= q
        t = {(0,) * nvars: c} if c else {}
        return cls(q, nvars, t)

    @classmethod
    def var(cls, q, nvars, idx, c=1):
        c %= q
        if not c:
            return cls(q, nvars, {})
        mono = tuple(1 if k == idx else 0 for k in range(nvars))
        return cls(q, nvars, {mono: c})

    def copy(self):
        return MvPoly(self.q, self.nvars, dict(self.terms))

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return len(self.terms) == 0 or (
            len(self.terms) == 1 and not any(next(iter(self.terms)))
        )

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, 0)

    def __add__(self, other):
        out = dict(self.terms)
        q = self.q
        for m, c in other.terms.items():
            nc = (out.get(m, 0) + c) % q
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return MvPoly(q, self.nvars, out)

    def __neg__(self):
        q = self.q
        return MvPoly(q, self.nvars, {m: (-c) % q for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        q = self.q
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                nc = (out.get(m, 0) + c1 * c2) % q
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return MvPoly(q, self.nvars, out)

    def scale(self, c: int):
        c %= self.q
        if not c:
            return MvPoly(self.q, self.nvars, {})
        return MvPoly(self.q, self.nvars,
                      {m: (co * c) % self.q for m, co in self.terms.items()})

    def mul_term(self, mono, c: int):
        c %= self.q
        if not c:
            return MvPoly(self.q, self.nvars, {})
        return MvPoly(self.q, self.nvars,
                      {tuple(a + b for a, b in zip(m, mono)): (co * c) % self.q
                       for m, co in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, MvPoly) and self.q == other.q
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.q, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MvPoly({self.terms})"


# monomial orders ------------------------------------------------------------


def key_grevlex(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def key_lex(mono):
    return mono


ORDER_KEYS = {"grevlex": key_grevlex, "lex": key_lex}


def leading_term(poly: MvPoly, key):
    mono = max(poly.terms, key=key)
    return mono, poly.terms[mono]


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def poly_str(poly: MvPoly, indets) -> str:
    """Canonical text form with terms in descending grevlex order."""
    if poly.is_zero():
        return "0"
    parts = []
    for mono in sorted(poly.terms, key=key_grevlex, reverse=True):
        c = poly.terms[mono]
        factors = [str(c)]
        for idx, e in enumerate(mono):
            if e:
                factors.append(f"{indets[idx]}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)


# division algorithm ---------------------------------------------------------


def divide(f: MvPoly, divisors, order="grevlex"):
    """Multivariate division: f = sum(q_i * divisors_i) + r.

    No term of r is divisible by any divisor's leading monomial.
    """
    key = ORDER_KEYS[order]
    q = f.q
    lts = [leading_term(g, key) for g in divisors]
    quots = [MvPoly(q, f.nvars, {}) for _ in divisors]
    rem = MvPoly(q, f.nvars, {})
    p = f.copy()
    while not p.is_zero():
        mono, c = leading_term(p, key)
        for i, (gm, gc) in enumerate(lts):
            if mono_divides(gm, mono):
                t = mono_div(mono, gm)
                coef = c * pow(gc, q - 2, q) % q
                quots[i] = quots[i] + MvPoly(q, f.nvars, {t: coef})
                p = p - divisors[i].mul_term(t, coef)
                break
        else:
            rem = rem + MvPoly(q, f.nvars, {mono: c})
            p.terms.pop(mono)
    return quots, rem


def _reduce_fully(p, basis, lts, key, tracked=None):
    """Remainder of p modulo basis; optionally updates a cofactor vector."""
    q = p.q
    rem = MvPoly(q, p.nvars, {})
    p = p.copy()
    steps = 0
    while not p.is_zero():
        mono, c = leading_term(p, key)
        hit = False
        for i, (gm, gc) in enumerate(lts):
            if mono_divides(gm, mono):
                t = mono_div(mono, gm)
                coef = c * pow(gc, q - 2, q) % q
                p = p - basis[i].mul_term(t, coef)
                if tracked is not None:
                    gcof = tracked["basis_cofs"][i]
                    tracked["cof"] = [
                        a - b.mul_term(t, coef)
                        for a, b in zip(tracked["cof"], gcof)
                    ]
                hit = True
                break
        if not hit:
            rem = rem + MvPoly(q, p.nvars, {mono: c})
            p.terms.pop(mono)
        steps += 1
        if steps > 10**6:
            raise Aborted("runaway reduction")
    return rem + p  # p is zero here; rem is the remainder


def buchberger(gens, order="grevlex", max_reductions=10**6, with_certificates=False):
    """Unique reduced Groebner basis via Buchberger with the coprime
    leading-monomial criterion.

    With `with_certificates`, also returns for each basis element its
    cofactor combination over the original generators.
    """
    key = ORDER_KEYS[order]
    gens = list(gens)
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return ([], []) if with_certificates else []
    q = nonzero[0].q
    nvars = nonzero[0].nvars
    one = MvPoly.const(q, nvars, 1)

    def unit_cof(i):
        return [MvPoly.const(q, nvars, 1 if k == i else 0) for k in range(len(gens))]

    # fast path: a nonzero constant generator makes the ideal trivial
    for i, g in enumerate(gens):
        if not g.is_zero() and g.is_constant():
            cof = [p.scale(pow(g.constant_value(), q - 2, q)) for p in unit_cof(i)]
            basis = [one]
            return (basis, [cof]) if with_certificates else basis

    G, cofs = [], []
    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        _, lc = leading_term(g, key)
        inv = pow(lc, q - 2, q)
        G.append(g.scale(inv))
        cofs.append([p.scale(inv) for p in unit_cof(i)])
    lts = [leading_term(g, key) for g in G]

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    reductions = 0
    while pairs:
        i, j = min(pairs, key=lambda p: (key(mono_lcm(lts[p[0]][0], lts[p[1]][0])), p))
        pairs.discard((i, j))
        mi, mj = lts[i][0], lts[j][0]
        lcm = mono_lcm(mi, mj)
        if all(a + b == c for a, b, c in zip(mi, mj, lcm)):
            continue  # coprime leading monomials: S-poly reduces to zero
        ti, tj = mono_div(lcm, mi), mono_div(lcm, mj)
        s = G[i].mul_term(ti, 1) - G[j].mul_term(tj, 1)
        scof = [a.mul_term(ti, 1) - b.mul_term(tj, 1)
                for a, b in zip(cofs[i], cofs[j])]
        tracked = {"basis_cofs": cofs, "cof": scof}
        r = _reduce_fully(s, G, lts, key, tracked=tracked)
        reductions += 1
        if reductions > max_reductions:
            raise Aborted(f"pair-reduction cap {max_reductions} exceeded")
        if r.is_zero():
            continue
        if r.is_constant():
            inv = pow(r.constant_value(), q - 2, q)
            cof = [p.scale(inv) for p in tracked["cof"]]
            return ([one], [cof]) if with_certificates else [one]
        _, lc = leading_term(r, key)
        inv = pow(lc, q - 2, q)
        G.append(r.scale(inv))
        cofs.append([p.scale(inv) for p in tracked["cof"]])
        lts.append(leading_term(G[-1], key))
        new = len(G) - 1
        pairs.update((k, new) for k in range(new))

    # minimalize: drop elements whose leading monomial another one divides
    keep = []
    for i in range(len(G)):
        mi = lts[i][0]
        if any(mono_divides(lts[j][0], mi) for j in keep):
            continue
        keep = [j for j in keep if not mono_divides(mi, lts[j][0])]
        keep.append(i)
    minimal = [G[i] for i in keep]
    minimal_cofs = [cofs[i] for i in keep]

    # inter-reduce each element against the others
    reduced, reduced_cofs = [], []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        other_cofs = minimal_cofs[:i] + minimal_cofs[i + 1:]
        other_lts = [leading_term(h, key) for h in others]
        tracked = {"basis_cofs": other_cofs, "cof": list(minimal_cofs[i])}
        r = _reduce_fully(g, others, other_lts, key, tracked=tracked)
        _, lc = leading_term(r, key)
        inv = pow(lc, q - 2, q)
        reduced.append(r.scale(inv))
        reduced_cofs.append([p.scale(inv) for p in tracked["cof"]])

    order_key = lambda idx: key(leading_term(reduced[idx], key)[0])
    perm = sorted(range(len(reduced)), key=order_key)
    basis = [reduced[i] for i in perm]
    certs = [reduced_cofs[i] for i in perm]
    return (basis, certs) if with_certificates else basis


# ---------------------------------------------------------------------------
# the ideal of a (network, target) pair
# ---------------------------------------------------------------------------


@dataclass
class IdealJ:
    q: int
    indeterminates: tuple
    generators: list


def symbolic_transfer(net: Network, target: TargetMatrix) -> IdealJ:
    """Entries of (T_tau)^t - M_tau with all code coefficients symbolic."""
    if target.s != net.s:
        raise DimensionMismatch("target columns must match network sources")
    q = target.q
    l = target.l
    indets = indeterminates_for(net, l)
    index = {v: k for k, v in enumerate(indets)}
    nvars = len(indets)
    ne = len(net.edges)
    zero = MvPoly.const(q, nvars, 0)

    a_rows = []
    for tau, src in enumerate(net.sources):
        row = [zero] * ne
        for e in net.out_edges(src):
            row[e] = MvPoly.var(q, nvars, index[Indeterminate("A", tau, e)])
        a_rows.append(row)
    f_entries = [
        (v.i, v.j, MvPoly.var(q, nvars, index[v]))
        for v in indets if v.kind == "F"
    ]
    b_rows = [[zero] * ne for _ in range(l)]
    for v in indets:
        if v.kind == "B":
            b_rows[v.j][v.i] = MvPoly.var(q, nvars, index[v])

    generators = []
    for tau in range(net.s):
        # A_tau * (I + F + ... + F^{ne-1}), exploiting F's sparsity
        acc = list(a_rows[tau])
        cur = a_rows[tau]
        for _ in range(ne - 1):
            nxt = [zero] * ne
            for (i, j, var) in f_entries:
                if not cur[i].is_zero():
                    nxt[j] = nxt[j] + cur[i] * var
            if all(p.is_zero() for p in nxt):
                break
            acc = [x + y for x, y in zip(acc, nxt)]
            cur = nxt
        for j in range(l):
            m = zero
            for e in range(ne):
                if not acc[e].is_zero() and not b_rows[j][e].is_zero():
                    m = m + acc[e] * b_rows[j][e]
            generators.append(MvPoly.const(q, nvars, target.rows[j][tau]) - m)
    return IdealJ(q=q, indeterminates=tuple(indets), generators=generators)


def pin(ideal: IdealJ, assignments: dict) -> IdealJ:
    """Substitute constants for some indeterminates and renumber the rest."""
    for v in assignments:
        if v not in ideal.indeterminates:
            raise UnknownIndeterminate(str(v))
    if not assignments:
        return IdealJ(ideal.q, ideal.indeterminates, list(ideal.generators))
    q = ideal.q
    kept = [v for v in ideal.indeterminates if v not in assignments]
    old_pos = {v: k for k, v in enumerate(ideal.indeterminates)}
    kept_pos = [old_pos[v] for v in kept]
    pinned = {old_pos[v]: val % q for v, val in assignments.items()}
    nvars = len(kept)

    new_gens = []
    for g in ideal.generators:
        out = {}
        for mono, c in g.terms.items():
            coef = c
            for pos, val in pinned.items():
                e = mono[pos]
                if e:
                    coef = coef * pow(val, e, q) % q
                    if not coef:
                        break
            if not coef:
                continue
            nm = tuple(mono[p] for p in kept_pos)
            nc = (out.get(nm, 0) + coef) % q
            if nc:
                out[nm] = nc
            else:
                out.pop(nm, None)
        new_gens.append(MvPoly(q, nvars, out))
    return IdealJ(q=q, indeterminates=tuple(kept), generators=new_gens)


def evaluate_generators(ideal: IdealJ, values: dict):
    """Evaluate every generator at a full assignment (Indeterminate -> int)."""
    q = ideal.q
    pos = {v: k for k, v in enumerate(ideal.indeterminates)}
    vec = [0] * len(ideal.indeterminates)
    for v, val in values.items():
        if v not in pos:
            raise UnknownIndeterminate(str(v))
        vec[pos[v]] = val % q
    results = []
    for g in ideal.generators:
        total = 0
        for mono, c in g.terms.items():
            term = c
            for idx, e in enumerate(mono):
                if e:
                    term = term * pow(vec[idx], e, q) % q
                    if not term:
                        break
            total = (total + term) % q
        results.append(total)
    return results


class Verdict(enum.Enum):
    SOLVABLE = "solvable"
    UNSOLVABLE = "unsolvable"


def solvable(net: Network, target: TargetMatrix, order="grevlex"):
    """Existence of a solution over some extension of F_q."""
    ideal = symbolic_transfer(net, target)
    basis = buchberger(ideal.generators, order=order)
    is_trivial = len(basis) == 1 and basis[0].is_constant() and \
        basis[0].constant_value() != 0
    return (Verdict.UNSOLVABLE if is_trivial else Verdict.SOLVABLE), basis
