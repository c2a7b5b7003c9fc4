"""Labeled undirected simple graphs and structured family configurations.

Graphs are immutable once built: vertex indices 0..n-1 with a symmetric,
irreflexive adjacency relation. The two structured families handled by
the rest of the library are described by FamilyConfig records: sparse
connected graphs having exactly one (G1) or exactly two (G2) vertices of
degree at least three, every other vertex of degree one or two.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj):
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self):
        return [len(s) for s in self.adj]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- constructors ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return Graph(n, [set() for _ in range(n)])


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star(k: int) -> Graph:
    """Star on k vertices: one center adjacent to k-1 leaves."""
    if k < 1:
        raise ValueError("a star needs at least one vertex")
    return Graph.from_edges(k, [(0, i) for i in range(1, k)])


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return Graph.from_edges(k, combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges())
        n += g.n
    return Graph.from_edges(n, edges)


def join(g: Graph, h: Graph) -> Graph:
    base = disjoint_union(g, h)
    extra = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(base.n, base.edges() + extra)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product: (u1,u2) ~ (v1,v2) iff equal in one slot, adjacent in the other."""
    n = g.n * h.n

    def idx(i, j):
        return i * h.n + j

    edges = []
    for i in range(g.n):
        for ja, jb in h.edges():
            edges.append((idx(i, ja), idx(i, jb)))
    for j in range(h.n):
        for ia, ib in g.edges():
            edges.append((idx(ia, j), idx(ib, j)))
    return Graph.from_edges(n, edges)


def firefly(r: int, s: int, t: int) -> Graph:
    """Hub with r triangles, s pendant edges, t pendant 2-paths attached.

    2r + s + 2t + 1 vertices, hub degree 2r + s + t.
    """
    if r < 0 or s < 0 or t < 0:
        raise ValueError("parameters must be nonnegative")
    if r + s + t == 0:
        raise ValueError("at least one attachment is required")
    edges = []
    nxt = 1
    for _ in range(r):
        a, b = nxt, nxt + 1
        edges += [(0, a), (0, b), (a, b)]
        nxt += 2
    for _ in range(s):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(t):
        a, b = nxt, nxt + 1
        edges += [(0, a), (a, b)]
        nxt += 2
    return Graph.from_edges(nxt, edges)


# -- basic predicates and invariants ---------------------------------------


def degree_sequence(g: Graph):
    return tuple(sorted(g.degrees(), reverse=True))


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def _components(g: Graph, removed=frozenset()):
    seen = set(removed)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def connected_components(g: Graph):
    return _components(g)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(_components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    color = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def remove_edges(g: Graph, edges) -> Graph:
    keep = set(map(_norm_edge, g.edges()))
    for e in edges:
        e = _norm_edge(e)
        if e not in keep:
            raise ValueError(f"edge {e} not present")
        keep.discard(e)
    return Graph.from_edges(g.n, keep)


def _norm_edge(e):
    u, v = e
    return (u, v) if u < v else (v, u)


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects the graph.

    Exhaustive cut search at small orders, max-flow (vertex-disjoint path
    counting) beyond. Disconnected input returns 0; complete graphs n-1.
    """
    n = g.n
    if n <= 1 or not is_connected(g):
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    if n <= 20:
        for k in range(1, n - 1):
            for cut in combinations(range(n), k):
                if len(_components(g, frozenset(cut))) > 1:
                    return k
        return n - 1
    return _connectivity_flow(g)


def _connectivity_flow(g: Graph) -> int:
    best = g.n - 1
    anchor = min(range(g.n), key=g.degree)
    targets = [v for v in range(g.n) if v != anchor and v not in g.adj[anchor]]
    pairs = [(anchor, t) for t in targets]
    pairs += [(a, b) for a in g.adj[anchor] for b in range(g.n) if b != a and b not in g.adj[a]]
    for s, t in pairs:
        best = min(best, _max_vertex_disjoint_paths(g, s, t, best))
    return best


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int, cap: int) -> int:
    """Count internally vertex-disjoint s-t paths, stopping early at cap.

    Unit-capacity max flow on the node-split digraph: v splits into
    v_in = 2v and v_out = 2v+1 joined by a capacity-1 arc.
    """
    from collections import deque

    out = [[] for _ in range(2 * g.n)]
    arcs = set()
    for v in range(g.n):
        out[2 * v].append(2 * v + 1)
        arcs.add((2 * v, 2 * v + 1))
        for w in g.adj[v]:
            out[2 * v + 1].append(2 * w)
            arcs.add((2 * v + 1, 2 * w))
    src, snk = 2 * s + 1, 2 * t
    flow = set()
    in_flow = [set() for _ in range(2 * g.n)]
    total = 0
    while total < cap:
        prev = {src: None}
        queue = deque([src])
        reached = False
        while queue and not reached:
            x = queue.popleft()
            for y in out[x]:
                if (x, y) not in flow and y not in prev:
                    prev[y] = x
                    if y == snk:
                        reached = True
                        break
                    queue.append(y)
            if reached:
                break
            for a in in_flow[x]:
                if a not in prev:
                    prev[a] = x
                    queue.append(a)
        if not reached:
            break
        y = snk
        while prev[y] is not None:
            x = prev[y]
            if (x, y) in arcs and (x, y) not in flow:
                flow.add((x, y))
                in_flow[y].add(x)
            else:
                flow.discard((y, x))
                in_flow[x].discard(y)
            y = x
        total += 1
    return total


# -- family configurations --------------------------------------------------


@dataclass(frozen=True)
class FamilyConfig:
    """Structural description of a G1 or G2 family member.

    G1: a single hub carrying pendant paths (lengths >= 1) and cycles
    (lengths >= 3); only the u-side fields are used. G2: two hubs u, v,
    optionally adjacent, joined by internal paths (orders >= 3, counting
    both hubs), each hub carrying its own pendant paths and cycles.
    """

    family: str
    hub_edge: bool = False
    paths: tuple = ()
    pendants_u: tuple = ()
    cycles_u: tuple = ()
    pendants_v: tuple = ()
    cycles_v: tuple = ()

    def normalized(self) -> "FamilyConfig":
        pu, cu = tuple(sorted(self.pendants_u)), tuple(sorted(self.cycles_u))
        pv, cv = tuple(sorted(self.pendants_v)), tuple(sorted(self.cycles_v))
        if self.family == "G2" and (pv, cv) < (pu, cu):
            pu, cu, pv, cv = pv, cv, pu, cu
        return replace(
            self,
            paths=tuple(sorted(self.paths)),
            pendants_u=pu,
            cycles_u=cu,
            pendants_v=pv,
            cycles_v=cv,
        )

    def validate(self) -> None:
        if self.family not in ("G1", "G2"):
            raise ValueError(f"unknown family {self.family!r}")
        if any(p < 1 for p in self.pendants_u + self.pendants_v):
            raise ValueError("pendant path lengths must be >= 1")
        if any(c < 3 for c in self.cycles_u + self.cycles_v):
            raise ValueError("cycle lengths must be >= 3")
        if self.family == "G1":
            if self.hub_edge or self.paths or self.pendants_v or self.cycles_v:
                raise ValueError("G1 configs use only the hub-side fields")
            if self.hub_degree_u() < 3:
                raise ValueError("hub degree must be >= 3")
        else:
            if any(p < 3 for p in self.paths):
                raise ValueError("internal path orders must be >= 3")
            if not self.hub_edge and not self.paths:
                raise ValueError("disconnected: need the hub edge or an internal path")
            if self.hub_degree_u() < 3 or self.hub_degree_v() < 3:
                raise ValueError("both hub degrees must be >= 3")

    def hub_degree_u(self) -> int:
        base = len(self.pendants_u) + 2 * len(self.cycles_u)
        if self.family == "G1":
            return base
        return base + len(self.paths) + (1 if self.hub_edge else 0)

    def hub_degree_v(self) -> int:
        return (
            len(self.pendants_v)
            + 2 * len(self.cycles_v)
            + len(self.paths)
            + (1 if self.hub_edge else 0)
        )

    def vertex_count(self) -> int:
        extra = sum(self.pendants_u) + sum(self.pendants_v)
        extra += sum(c - 1 for c in self.cycles_u + self.cycles_v)
        if self.family == "G1":
            return 1 + extra
        return 2 + sum(p - 2 for p in self.paths) + extra

    def key(self):
        return (
            self.family,
            self.hub_edge,
            self.paths,
            self.pendants_u,
            self.cycles_u,
            self.pendants_v,
            self.cycles_v,
        )


def realize(cfg: FamilyConfig) -> Graph:
    """Build the labeled graph of a config under the canonical labeling.

    Hubs come first (u=0, and v=1 for G2); then internal path vertices in
    declaration order (orders ascending, each path traversed u to v); then
    pendant chains and cycle chains of u, then of v.
    """
    cfg = cfg.normalized()
    cfg.validate()
    edges = []
    if cfg.family == "G1":
        hub_u, nxt = 0, 1
        hub_v = None
    else:
        hub_u, hub_v, nxt = 0, 1, 2
        if cfg.hub_edge:
            edges.append((hub_u, hub_v))
        for order in cfg.paths:
            k = order - 2
            chain = list(range(nxt, nxt + k))
            edges.append((hub_u, chain[0]))
            edges.extend(zip(chain, chain[1:]))
            edges.append((chain[-1], hub_v))
            nxt += k
    for hub, pendants, cycles in (
        (hub_u, cfg.pendants_u, cfg.cycles_u),
        (hub_v, cfg.pendants_v, cfg.cycles_v),
    ):
        if hub is None:
            continue
        for length in pendants:
            chain = list(range(nxt, nxt + length))
            edges.append((hub, chain[0]))
            edges.extend(zip(chain, chain[1:]))
            nxt += length
        for length in cycles:
            k = length - 1
            chain = list(range(nxt, nxt + k))
            edges.append((hub, chain[0]))
            edges.extend(zip(chain, chain[1:]))
            edges.append((chain[-1], hub))
            nxt += k
    g = Graph.from_edges(nxt, edges)
    high = [v for v in range(g.n) if g.degree(v) >= 3]
    want = 1 if cfg.family == "G1" else 2
    if len(high) != want or any(g.degree(v) > 2 for v in range(g.n) if v not in high):
        raise ValueError("realized graph violates the family degree profile")
    return g


def graph_to_config(g: Graph):
    """Recover the FamilyConfig of a family member, or None.

    Removing the hub(s) from a family graph leaves bare paths; each piece
    is classified by which hubs its endpoints attach to.
    """
    if g.n < 2 or not is_connected(g):
        return None
    high = [v for v in range(g.n) if g.degree(v) >= 3]
    if not high or len(high) > 2 or any(
        g.degree(v) not in (1, 2) for v in range(g.n) if v not in high
    ):
        return None
    hubs = set(high)
    hub_u = high[0]
    hub_v = high[1] if len(high) == 2 else None
    paths, pend, cyc = [], {hub_u: [], hub_v: []}, {hub_u: [], hub_v: []}
    for comp in _components(g, frozenset(hubs)):
        piece = _classify_piece(g, comp, hubs)
        if piece is None:
            return None
        kind, data = piece
        if kind == "path":
            paths.append(data)
        elif kind == "pendant":
            hub, length = data
            pend[hub].append(length)
        else:
            hub, length = data
            cyc[hub].append(length)
    if len(high) == 1:
        cfg = FamilyConfig(
            family="G1", pendants_u=tuple(pend[hub_u]), cycles_u=tuple(cyc[hub_u])
        )
    else:
        cfg = FamilyConfig(
            family="G2",
            hub_edge=g.has_edge(hub_u, hub_v),
            paths=tuple(paths),
            pendants_u=tuple(pend[hub_u]),
            cycles_u=tuple(cyc[hub_u]),
            pendants_v=tuple(pend[hub_v]),
            cycles_v=tuple(cyc[hub_v]),
        )
    cfg = cfg.normalized()
    try:
        cfg.validate()
    except ValueError:
        return None
    return cfg


def _classify_piece(g: Graph, comp, hubs):
    """Classify one component of G minus the hubs; None when malformed."""
    inside = set(comp)
    ends = []
    for v in comp:
        inner = [w for w in g.adj[v] if w in inside]
        if len(inner) > 2:
            return None
        if len(inner) <= 1:
            ends.append(v)
    if len(comp) == 1:
        order = [comp[0]]
    elif len(ends) != 2:
        return None  # the piece contains a cycle, impossible here
    else:
        order = [ends[0]]
        prev = None
        while len(order) < len(comp):
            nxts = [w for w in g.adj[order[-1]] if w in inside and w != prev]
            if len(nxts) != 1:
                return None
            prev = order[-1]
            order.append(nxts[0])
    first_hubs = g.adj[order[0]] & frozenset(hubs)
    last_hubs = g.adj[order[-1]] & frozenset(hubs)
    if len(comp) == 1:
        if len(first_hubs) == 2:
            return "path", 3
        if len(first_hubs) == 1:
            return "pendant", (next(iter(first_hubs)), 1)
        return None
    if len(first_hubs) > 1 or len(last_hubs) > 1:
        return None
    a = next(iter(first_hubs)) if first_hubs else None
    b = next(iter(last_hubs)) if last_hubs else None
    if a is not None and b is not None:
        if a == b:
            return "cycle", (a, len(comp) + 1)
        return "path", len(comp) + 2
    if a is not None:
        return "pendant", (a, len(comp))
    if b is not None:
        return "pendant", (b, len(comp))
    return None


def family_membership(g: Graph) -> str:
    """One of 'G1', 'G2', 'G2_nonbipartite', 'neither'."""
    cfg = graph_to_config(g)
    if cfg is None:
        return "neither"
    if cfg.family == "G1":
        return "G1"
    return "G2" if is_bipartite(g) else "G2_nonbipartite"


# -- graph6 codec -----------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Encode in the standard printable-ASCII graph6 format (no header)."""
    n = g.n
    if n > 258047:
        raise ValueError("graph too large for the supported graph6 sizes")
    if n <= 62:
        head = chr(63 + n)
    else:
        head = chr(126) + "".join(
            chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0)
        )
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return head + "".join(chars)


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    if not text:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in text]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("invalid graph6 character")
    if data[0] == 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 size")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError("graph6 body length does not match the vertex count")
    bits = []
    for d in body:
        bits.extend((d >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# -- adjacency-list text format (debugging aid) ------------------------------


def to_adjacency_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_adjacency_text(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty adjacency text")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph.from_edges(n, edges)
