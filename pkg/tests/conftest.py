import itertools
import random

import pytest

from lincomp.code import TargetMatrix
from lincomp.linalg import mod_is_invertible, mod_mat_mul
from lincomp.netmodel import Network, build_network


N1_FILE = """
{"field": {"q": 2},
 "nodes": ["s1", "s2", "s3", "rho"],
 "sources": ["s1", "s2", "s3"],
 "receiver": "rho",
 "edges": [["s2", "s1"], ["s2", "s3"], ["s1", "rho"], ["s3", "rho"]]}
"""


@pytest.fixture
def n1_network():
    return build_network(
        2,
        nodes=["s1", "s2", "s3", "rho"],
        sources=["s1", "s2", "s3"],
        receiver="rho",
        edges=[("s2", "s1"), ("s2", "s3"), ("s1", "rho"), ("s3", "rho")],
    )


@pytest.fixture
def t1():
    return TargetMatrix(q=2, rows=((1, 0, 1), (0, 1, 0)))


def star_network(s, q=2):
    sources = [f"s{i + 1}" for i in range(s)]
    return build_network(q, sources + ["rho"], sources, "rho",
                         [(src, "rho") for src in sources])


def random_network(rng: random.Random, s: int, max_edges: int = 12,
                   q: int = 2, max_relays: int = 2) -> Network:
    """Seeded random DAG with declared sources and one receiver.

    Node order doubles as a topological order; edges only go forward.
    """
    from lincomp.errors import LincompError

    for _ in range(100):
        relays = rng.randint(0, max_relays)
        names = [f"s{i + 1}" for i in range(s)] + \
                [f"v{i + 1}" for i in range(relays)] + ["rho"]
        n = len(names)
        edges = []
        # every non-receiver node gets at least one out-edge
        for i in range(n - 1):
            j = rng.randrange(i + 1, n)
            edges.append((names[i], names[j]))
        # relays need in-edges
        for i in range(s, n - 1):
            if not any(h == names[i] for _, h in edges):
                j = rng.randrange(0, i)
                edges.append((names[j], names[i]))
        while len(edges) < max_edges and rng.random() < 0.7:
            i = rng.randrange(0, n - 1)
            j = rng.randrange(i + 1, n)
            edges.append((names[i], names[j]))
        if len(edges) > max_edges:
            continue
        try:
            return build_network(q, names, names[:s], "rho", edges)
        except LincompError:
            continue
    raise RuntimeError("could not draw a valid random network")


def random_invertible(rng: random.Random, l: int, q: int):
    while True:
        m = [[rng.randrange(q) for _ in range(l)] for _ in range(l)]
        if mod_is_invertible(m, q):
            return m


def random_all_units_target(rng: random.Random, s: int, q: int) -> TargetMatrix:
    """Random T = Q (I u) Pi with u all units; classifies all-units."""
    l = s - 1
    qmat = random_invertible(rng, l, q)
    u = [rng.randrange(1, q) for _ in range(l)]
    iu = [[1 if i == j else 0 for j in range(l)] + [u[i]] for i in range(l)]
    prod = mod_mat_mul(qmat, iu, q)
    perm = list(range(s))
    rng.shuffle(perm)
    rows = [[0] * s for _ in range(l)]
    for j in range(s):
        for i in range(l):
            rows[i][perm[j]] = prod[i][j]
    return TargetMatrix(q=q, rows=tuple(tuple(r) for r in rows))


def all_binary_targets(l, s):
    """Every full-rank, no-zero-column matrix in F_2^{l x s}."""
    cols = [c for c in itertools.product((0, 1), repeat=l) if any(c)]
    for combo in itertools.product(cols, repeat=s):
        rows = tuple(tuple(combo[j][i] for j in range(s)) for i in range(l))
        try:
            yield TargetMatrix(q=2, rows=rows)
        except Exception:
            continue
