"""Named small graphs and randomized (delta, girth)-constrained generation.

Every randomized output is re-verified before it is returned: connectivity,
minimum degree, and girth are measured again with the independent graph
primitives, and a failed search comes back as a :class:`GenerationFailure`
value with its attempt statistics instead of a silently wrong graph.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bfs_distances, girth, is_connected


# ---------------------------------------------------------------------------
# named constructions

def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with part ids 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    """Kneser construction: 2-subsets of a 5-set, adjacent iff disjoint."""
    subsets = list(combinations(range(5), 2))
    idx = {s: i for i, s in enumerate(subsets)}
    pairs = [(idx[s], idx[t]) for s, t in combinations(subsets, 2)
             if not set(s) & set(t)]
    return Graph.from_edges(10, pairs)


def heawood_graph() -> Graph:
    """Point-line incidence graph of the order-2 projective plane."""
    return projective_plane_incidence(2)


def hoffman_singleton_graph() -> Graph:
    """Robertson's pentagon-pentagram construction.

    Pentagon P_h vertex j is id 5*h + j; pentagram Q_i vertex j is
    id 25 + 5*i + j.  P_h(j) ~ P_h(j +- 1), Q_i(j) ~ Q_i(j +- 2), and
    P_h(j) ~ Q_i(h*i + j mod 5).  7-regular on 50 vertices with girth 5.
    """
    pairs = []
    for h in range(5):
        for j in range(5):
            pairs.append((5 * h + j, 5 * h + (j + 1) % 5))
    for i in range(5):
        for j in range(5):
            pairs.append((25 + 5 * i + j, 25 + 5 * i + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                pairs.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edges(50, pairs)


# ---------------------------------------------------------------------------
# small finite fields and projective-plane incidence graphs

# x^k rewritten in lower powers: GF(4) x^2=x+1, GF(8) x^3=x+1, GF(9) x^2=2
_REDUCTION = {4: (1, 1), 8: (1, 1, 0), 9: (2, 0)}


def _field_tables(q: int) -> tuple[list[list[int]], list[list[int]]]:
    """Addition and multiplication tables for GF(q), elements coded 0..q-1.

    Prime q uses integers mod q; prime powers use polynomials over GF(p)
    coded base-p, reduced by a fixed irreducible polynomial.
    """
    for p in (2, 3, 5, 7):
        if q % p == 0:
            break
    else:
        if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
            raise ValueError(f"q={q} is not a prime power with a known field table")
        p = q
    if q == p:
        add = [[(a + b) % q for b in range(q)] for a in range(q)]
        mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        return add, mul
    if q not in _REDUCTION:
        raise ValueError(f"no field table for q={q}")
    k = 0
    qq = q
    while qq > 1:
        qq //= p
        k += 1

    def digits(x):
        out = []
        for _ in range(k):
            out.append(x % p)
            x //= p
        return out

    def undigits(ds):
        x = 0
        for d in reversed(ds):
            x = x * p + d
        return x

    red = _REDUCTION[q]  # coefficients of x^k in terms of lower powers
    add = [[undigits([(x + y) % p for x, y in zip(digits(a), digits(b))])
            for b in range(q)] for a in range(q)]

    def poly_mul(a, b):
        da, db = digits(a), digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for deg in range(2 * k - 2, k - 1, -1):
            coef = prod[deg]
            if coef:
                prod[deg] = 0
                for j, r in enumerate(red):
                    prod[deg - k + j] = (prod[deg - k + j] + coef * r) % p
        return undigits(prod[:k])

    mul = [[poly_mul(a, b) for b in range(q)] for a in range(q)]
    return add, mul


def projective_plane_incidence(q: int) -> Graph:
    """Bipartite point-line incidence graph of the order-q projective plane.

    Points are ids 0..q^2+q, lines q^2+q+1..2(q^2+q+1)-1; a point lies on a
    line iff the dot product of their coordinate triples vanishes in GF(q).
    The result is (q+1)-regular with girth 6 on 2(q^2+q+1) vertices.
    """
    add, mul = _field_tables(q)
    pts: list[tuple[int, int, int]] = []
    for y in range(q):
        for z in range(q):
            pts.append((1, y, z))
    for z in range(q):
        pts.append((0, 1, z))
    pts.append((0, 0, 1))
    count = q * q + q + 1
    assert len(pts) == count
    pairs = []
    for i, (x, y, z) in enumerate(pts):
        for j, (a, b, c) in enumerate(pts):
            s = add[add[mul[a][x]][mul[b][y]]][mul[c][z]]
            if s == 0:
                pairs.append((i, count + j))
    return Graph.from_edges(2 * count, pairs)


_NAMED = {
    "path": lambda a=None, b=None: path_graph(a),
    "cycle": lambda a=None, b=None: cycle_graph(a),
    "complete": lambda a=None, b=None: complete_graph(a),
    "complete_bipartite": lambda a=None, b=None: complete_bipartite(a, b),
    "petersen": lambda a=None, b=None: petersen_graph(),
    "heawood": lambda a=None, b=None: heawood_graph(),
    "hoffman_singleton": lambda a=None, b=None: hoffman_singleton_graph(),
}


def named(name: str, a: int | None = None, b: int | None = None) -> Graph:
    """Dispatch on a graph family name; sizes go in ``a`` (and ``b``)."""
    key = name.lower()
    if key not in _NAMED:
        raise ValueError(f"unknown named graph {name!r}; choose from {sorted(_NAMED)}")
    return _NAMED[key](a, b)


# ---------------------------------------------------------------------------
# randomized generation with degree and girth constraints

@dataclass(frozen=True)
class GeneratorConfig:
    """Target order, minimum degree, girth floor, and search budgets.

    ``max_edge_attempts_per_restart`` defaults to ``50 * n``.  The same seed
    always yields the same graph (or the same failure).  Note that an order
    at least the minimum for (delta, g) is necessary but nowhere near
    sufficient; infeasible or tight configurations simply exhaust their
    budgets and come back as failures.
    """

    n: int
    delta: int
    g: int
    seed: int
    max_restarts: int = 50
    max_edge_attempts_per_restart: int | None = None

    def attempts_budget(self) -> int:
        if self.max_edge_attempts_per_restart is not None:
            return self.max_edge_attempts_per_restart
        return 50 * self.n


@dataclass(frozen=True)
class GenerationFailure:
    """All restarts exhausted; carries the attempt statistics."""

    config: GeneratorConfig
    restarts: int
    attempts: int
    reason: str


def _ball(adj, u, radius) -> set[int]:
    """Vertices within ``radius`` hops of ``u`` in the adjacency-set graph."""
    seen = {u}
    frontier = [u]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if not nxt:
            break
        frontier = nxt
    return seen


def random_min_degree_girth(cfg: GeneratorConfig) -> Graph | GenerationFailure:
    """Connected graph with min degree >= delta and girth >= g, or a failure.

    Incremental girth-guarded edge addition: repeatedly pick a random vertex
    still short of ``delta``, collect its eligible partners (also short of
    ``delta``, non-adjacent, and at distance at least ``g - 1`` so no short
    cycle closes), and add one at random.  Stagnation triggers a restart with
    a fresh seed-derived stream.  Once degrees are satisfied the components
    are bridged (bridges lie on no cycle, so the girth floor survives); the
    output is then re-verified from scratch.
    """
    if cfg.delta < 2 or cfg.g < 3 or cfg.n < cfg.delta + 1:
        raise ValueError("need delta >= 2, g >= 3, n >= delta + 1")
    n, delta, floor = cfg.n, cfg.delta, cfg.g - 1
    budget = cfg.attempts_budget()
    total_attempts = 0

    for restart in range(cfg.max_restarts):
        rng = random.Random(f"{cfg.seed}:{restart}")
        adj: list[set[int]] = [set() for _ in range(n)]
        attempts = 0
        stalls = 0
        wedged = False
        while True:
            deficient = [v for v in range(n) if len(adj[v]) < delta]
            if not deficient:
                break
            if attempts >= budget or stalls > 25:
                wedged = True
                break
            attempts += 1
            # keep the degree distribution flat: fill the neediest vertices first
            lowest = min(len(adj[v]) for v in deficient)
            u = rng.choice([v for v in deficient if len(adj[v]) == lowest])
            near = _ball(adj, u, floor - 1)  # adding an edge into this set closes a short cycle
            eligible = [v for v in deficient if v not in near]
            if not eligible:
                # endgame relaxation: a partner that already met its quota
                # only gains degree, and the distance guard still holds
                eligible = [v for v in range(n) if v not in near]
            if not eligible:
                stalls += 1
                continue
            stalls = 0
            v = rng.choice(eligible)
            adj[u].add(v)
            adj[v].add(u)
        total_attempts += attempts
        if wedged:
            continue

        # bridge components; new edges cannot create cycles
        comp = [-1] * n
        for s in range(n):
            if comp[s] != -1:
                continue
            comp[s] = s
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if comp[y] == -1:
                        comp[y] = s
                        stack.append(y)
        roots = sorted(set(comp))
        for r in roots[1:]:
            adj[roots[0]].add(r)
            adj[r].add(roots[0])

        g_out = Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
        measured = girth(g_out)
        if (is_connected(g_out) and g_out.min_degree() >= delta
                and (measured is None or measured >= cfg.g)):
            return g_out
        # a constraint failed re-verification; treat like a stall and restart

    return GenerationFailure(config=cfg, restarts=cfg.max_restarts,
                             attempts=total_attempts,
                             reason="edge-addition search stagnated in every restart")


def emit_edge_list(g: Graph, cfg: GeneratorConfig | None = None) -> str:
    """Standard edge-list text; generated graphs carry a provenance comment."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    if cfg is not None:
        lines.append(f"# seed={cfg.seed} delta={cfg.delta} g={cfg.g}")
    return "\n".join(lines) + "\n"
