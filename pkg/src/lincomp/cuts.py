"""Cuts, separated source sets, and the min-cut ratio min over cuts of
|C| / rank(T_{K_C}).

The exact method contracts each nonempty source subset into a
super-source, runs unit-capacity max-flow, and reads the minimum edge
cut off the residual graph; a 2^|E| brute-force oracle is kept alongside
for verification.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatch
from .code import TargetMatrix
from .linalg import mod_rank
from .netmodel import Network


@dataclass(frozen=True)
class CutReport:
    value: Fraction
    witness_edges: tuple   # sorted EdgeIds
    separated: tuple       # sorted 0-based source indices


def separated_sources(net: Network, cut) -> set:
    """K_C: indices of sources disconnected from the receiver once C is deleted."""
    cut = set(cut)
    reach = {net.receiver}
    changed = True
    while changed:
        changed = False
        for e, (t, h) in enumerate(net.edges):
            if e not in cut and h in reach and t not in reach:
                reach.add(t)
                changed = True
    return {i for i, src in enumerate(net.sources) if src not in reach}


def _rank_of_columns(target: TargetMatrix, indices) -> int:
    cols = sorted(indices)
    sub = [[target.rows[i][j] for j in cols] for i in range(target.l)]
    return mod_rank(sub, target.q)


def _max_flow_min_cut(net: Network, source_subset):
    """Unit-capacity Edmonds-Karp from a super-source over `source_subset`.

    Returns the set of original edges crossing the residual cut.
    """
    ne = len(net.edges)
    big = ne + 1
    # arcs: one per network edge (unit capacity) plus super-source arcs
    arcs = []        # (u, v, cap)
    adj = {}
    def add_arc(u, v, cap):
        i = len(arcs)
        arcs.append([u, v, cap])
        arcs.append([v, u, 0])
        adj.setdefault(u, []).append(i)
        adj.setdefault(v, []).append(i + 1)
    for t, h in net.edges:
        add_arc(t, h, 1)
    super_src = object()
    for i in source_subset:
        add_arc(super_src, net.sources[i], big)

    sink = net.receiver
    while True:
        # BFS for a shortest augmenting path
        prev = {super_src: None}
        dq = deque([super_src])
        while dq and sink not in prev:
            u = dq.popleft()
            for ai in adj.get(u, ()):
                _, v, cap = arcs[ai]
                if cap > 0 and v not in prev:
                    prev[v] = ai
                    dq.append(v)
        if sink not in prev:
            break
        # augment by 1 (all real arcs are unit capacity)
        v = sink
        while prev[v] is not None:
            ai = prev[v]
            arcs[ai][2] -= 1
            arcs[ai ^ 1][2] += 1
            v = arcs[ai][0]

    reach = {super_src}
    dq = deque([super_src])
    while dq:
        u = dq.popleft()
        for ai in adj.get(u, ()):
            _, v, cap = arcs[ai]
            if cap > 0 and v not in reach:
                reach.add(v)
                dq.append(v)
    cut = set()
    for e, (t, h) in enumerate(net.edges):
        if t in reach and h not in reach:
            cut.add(e)
    return cut


def _report(net: Network, target: TargetMatrix, cut) -> CutReport | None:
    sep = separated_sources(net, cut)
    if not sep:
        return None
    value = Fraction(len(cut), _rank_of_columns(target, sep))
    return CutReport(value=value, witness_edges=tuple(sorted(cut)),
                     separated=tuple(sorted(sep)))


def _better(a: CutReport, b: CutReport) -> bool:
    """Strict preference: smaller value, then more sources separated, then
    lexicographically least witness."""
    ka = (a.value, -len(a.separated), a.witness_edges)
    kb = (b.value, -len(b.separated), b.witness_edges)
    return ka < kb


def mincut_ratio(net: Network, target: TargetMatrix) -> CutReport:
    if target.s != net.s:
        raise DimensionMismatch("target columns must match network sources")
    best = None
    indices = range(net.s)
    for size in range(net.s, 0, -1):
        for subset in combinations(indices, size):
            cut = _max_flow_min_cut(net, subset)
            report = _report(net, target, cut)
            if report is None:
                continue
            if best is None or _better(report, best):
                best = report
    assert best is not None, "every valid network has a cut"
    return best


def mincut_ratio_bruteforce(net: Network, target: TargetMatrix) -> CutReport:
    """Enumerate all 2^|E| edge subsets; exact oracle for small networks."""
    if target.s != net.s:
        raise DimensionMismatch("target columns must match network sources")
    ne = len(net.edges)
    best = None
    for mask in range(1, 1 << ne):
        cut = {e for e in range(ne) if mask >> e & 1}
        report = _report(net, target, cut)
        if report is None:
            continue
        if best is None or _better(report, best):
            best = report
    assert best is not None
    return best


def check_necessary(net: Network, target: TargetMatrix) -> bool:
    """Necessary condition for solvability: min-cut ratio at least 1."""
    return mincut_ratio(net, target).value >= 1
