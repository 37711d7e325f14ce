"""Generators for hard instances: the 3-source network with the
[[1,0,1],[0,1,0]] target, and its generalization to any target whose
(I P) form has a zero in P.

Every bundle is machine-verified on construction: min-cut ratio exactly
1 and an unsolvable verdict from the algebraic test.  A bundle that
fails either check aborts instead of being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cuts as cutsmod
from . import equiv as equivmod
from . import mvpoly
from .errors import ClassMismatch, ConstructionMismatch
from .code import TargetMatrix
from .netmodel import Network, build_network


T1_ROWS = ((1, 0, 1), (0, 1, 0))


@dataclass
class CounterexampleBundle:
    network: Network
    target: TargetMatrix
    tau: int            # 0-based column of the zero-containing column
    K: tuple            # 0-based rows with a nonzero entry in column tau
    j1: int             # distinguished element of K
    p: int              # 0-based row with the zero in column tau
    Kbar: tuple         # remaining 0-based source indices
    kappa: tuple        # kappa[i] = original source index of internal index i
    t_hat: tuple        # the (I P) matrix rows used for the construction

    def construction_dict(self):
        return {
            "tau": self.tau,
            "K": list(self.K),
            "j1": self.j1,
            "p": self.p,
            "Kbar": list(self.Kbar),
            "kappa": list(self.kappa),
        }


def _self_check(net: Network, target: TargetMatrix):
    report = cutsmod.mincut_ratio(net, target)
    if report.value != 1:
        raise ConstructionMismatch(f"min-cut ratio is {report.value}, expected 1")
    verdict, _ = mvpoly.solvable(net, target)
    if verdict != mvpoly.Verdict.UNSOLVABLE:
        raise ConstructionMismatch("instance is solvable; construction is wrong")
    return report


def build_n1(q: int) -> CounterexampleBundle:
    """The 3-source, 4-edge instance with target [[1,0,1],[0,1,0]] over F_q."""
    net = build_network(
        q,
        nodes=["s1", "s2", "s3", "rho"],
        sources=["s1", "s2", "s3"],
        receiver="rho",
        edges=[("s2", "s1"), ("s2", "s3"), ("s1", "rho"), ("s3", "rho")],
    )
    target = TargetMatrix(q=q, rows=T1_ROWS)
    bundle = CounterexampleBundle(
        network=net, target=target, tau=2, K=(0,), j1=0, p=1, Kbar=(),
        kappa=(0, 1, 2), t_hat=T1_ROWS)
    _self_check(net, target)
    return bundle


def build_np(target: TargetMatrix,
             witness: equivmod.Equivalence | None = None) -> CounterexampleBundle:
    """Min-cut-1 unsolvable network for any target whose (I P) form has a
    zero in P."""
    l, s = target.l, target.s
    if l in (1, s):
        raise ClassMismatch("construction requires 1 < l < s")
    if witness is None:
        # first (I P) witness whose P has a zero; not every such target
        # classifies has-zero, since the classes can overlap when s-l > 1
        from itertools import combinations
        for subset in combinations(range(s), l):
            eq = equivmod._equivalence_for_subset(target, subset)
            if eq is not None and any(x == 0 for row in eq.P for x in row):
                witness = eq
                break
        if witness is None:
            raise ClassMismatch("no (I P) witness with a zero in P exists")
    if not any(x == 0 for row in witness.P for x in row):
        raise ClassMismatch("witness P contains no zero")

    t_hat = witness.identity_p_matrix()
    tau = next(c for c in range(l, s)
               if any(t_hat[i][c] == 0 for i in range(l)))
    K = tuple(i for i in range(l) if t_hat[i][tau] != 0)
    assert K, "no zero column in a valid target"
    j1 = K[0]
    p = next(i for i in range(l) if i not in K)
    Kbar = tuple(j for j in range(s) if j not in K and j not in (tau, p))

    kappa = witness.perm  # internal index i plays original source kappa[i]
    name = lambda i: f"s{kappa[i] + 1}"
    nodes = [f"s{i + 1}" for i in range(s)] + ["v", "rho"]
    edges = [(name(p), name(j1)), (name(p), "v"), (name(tau), "v")]
    edges += [(name(tau), name(j)) for j in K if j != j1]
    edges += [(name(j), "rho") for j in K]
    edges.append(("v", "rho"))
    edges += [(name(j), "rho") for j in Kbar]

    net = build_network(target.q, nodes=nodes,
                        sources=[f"s{i + 1}" for i in range(s)],
                        receiver="rho", edges=edges)
    bundle = CounterexampleBundle(
        network=net, target=target, tau=tau, K=K, j1=j1, p=p, Kbar=Kbar,
        kappa=tuple(kappa), t_hat=tuple(tuple(r) for r in t_hat))
    _self_check(net, target)
    return bundle


def induced_gadget_target(bundle: CounterexampleBundle):
    """The 2x3 submatrix on rows {j1, p} and columns {j1, p, tau} of the
    (I P) form; matches the hard 3-source target up to the unit at (1,3)."""
    t, j1, p, tau = bundle.t_hat, bundle.j1, bundle.p, bundle.tau
    return TargetMatrix(q=bundle.target.q, rows=(
        (t[j1][j1], t[j1][p], t[j1][tau]),
        (t[p][j1], t[p][p], t[p][tau]),
    ))
