"""Simple undirected graphs on dense 0-based vertex ids with bit-mask adjacency.

Vertex subsets are plain Python ints used as bit sets (bit v set means vertex v
is in the set), so they compose with &, |, ~ and int.bit_count(). Standard
families, neighborhood/boundary/ball queries, and an isomorphism-free
enumerator for small connected graphs live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParameterError

# Enumeration by isomorphism class is exponential; this cap keeps it honest.
ENUM_MAX_VERTICES = 8


def bit_indices(mask: int) -> list[int]:
    """Indices of the set bits of a vertex-set mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph; adj[v] is the open-neighborhood bit mask of v."""

    __slots__ = ("n", "adj", "name")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), name: str | None = None):
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for {n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)
        self.name = name

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def display_name(self) -> str:
        return self.name if self.name else f"G{self.n}v{self.m}e"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                low = row & -row
                out.append((u, low.bit_length() - 1))
                row ^= low
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.display_name}: n={self.n}, m={self.m})"


@dataclass(frozen=True)
class FamilySpec:
    """Parameterized graph family request: family name plus integer params."""

    family: str
    params: tuple[int, ...]


def path(k: int) -> Graph:
    if k < 1:
        raise ParameterError("path order must be at least 1")
    return Graph(k, [(i, i + 1) for i in range(k - 1)], name=f"P{k}")


def cycle(k: int) -> Graph:
    if k < 3:
        raise ParameterError("cycle order must be at least 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)], name=f"C{k}")


def complete(k: int) -> Graph:
    if k < 1:
        raise ParameterError("complete graph order must be at least 1")
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)], name=f"K{k}")


def star(k: int) -> Graph:
    """Star on k vertices: center 0 joined to leaves 1..k-1."""
    if k < 1:
        raise ParameterError("star order must be at least 1")
    return Graph(k, [(0, i) for i in range(1, k)], name=f"S{k}")


def caterpillar(spine: int, legs: Iterable[int]) -> Graph:
    """Path of `spine` vertices with legs[i] pendant leaves on spine vertex i.

    Vertex layout: spine 0..spine-1 first, then leaves grouped by spine vertex.
    """
    legs = list(legs)
    if spine < 1:
        raise ParameterError("caterpillar spine must have at least 1 vertex")
    if len(legs) != spine:
        raise ParameterError(f"caterpillar expects {spine} leg counts, got {len(legs)}")
    if any(x < 0 for x in legs):
        raise ParameterError("leg counts must be nonnegative")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, cnt in enumerate(legs):
        for _ in range(cnt):
            edges.append((i, nxt))
            nxt += 1
    name = f"cat({spine};{','.join(map(str, legs))})"
    return Graph(nxt, edges, name=name)


def make_graph(spec: FamilySpec) -> Graph:
    """Build a graph from a family spec; `custom` takes (n, u1, v1, u2, v2, ...)."""
    fam, params = spec.family, tuple(spec.params)
    if fam == "path":
        _expect_params(fam, params, 1)
        return path(params[0])
    if fam == "cycle":
        _expect_params(fam, params, 1)
        return cycle(params[0])
    if fam == "complete":
        _expect_params(fam, params, 1)
        return complete(params[0])
    if fam == "star":
        _expect_params(fam, params, 1)
        return star(params[0])
    if fam == "caterpillar":
        if len(params) < 1:
            raise ParameterError("caterpillar needs a spine length")
        return caterpillar(params[0], params[1:])
    if fam == "custom":
        if len(params) < 1 or len(params) % 2 == 0:
            raise ParameterError("custom needs an order followed by edge pairs")
        n = params[0]
        pairs = list(zip(params[1::2], params[2::2]))
        return Graph(n, pairs, name=f"custom{n}")
    raise ParameterError(f"unknown family '{fam}'")


def _expect_params(fam, params, count):
    if len(params) != count:
        raise ParameterError(f"family '{fam}' expects {count} parameter(s), got {len(params)}")


# === neighborhood-style queries ===


def neighborhood(G: Graph, v: int, mode: str = "closed") -> int:
    """Open or closed neighborhood of v as a bit mask."""
    if not 0 <= v < G.n:
        raise ParameterError(f"vertex {v} out of range")
    if mode == "closed":
        return G.adj[v] | 1 << v
    if mode == "open":
        return G.adj[v]
    raise ParameterError(f"unknown mode '{mode}'")


def boundary(G: Graph, S: int) -> int:
    """Vertices outside S with at least one neighbor inside S."""
    if S & ~G.full_mask:
        raise ParameterError("vertex set out of range")
    nb = 0
    m = S
    while m:
        low = m & -m
        nb |= G.adj[low.bit_length() - 1]
        m ^= low
    return nb & ~S


def ball(G: Graph, v: int, r: int) -> int:
    """All vertices within distance r of v."""
    if not 0 <= v < G.n:
        raise ParameterError(f"vertex {v} out of range")
    if r < 0:
        raise ParameterError("radius must be nonnegative")
    seen = 1 << v
    frontier = seen
    for _ in range(r):
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= G.adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
    return seen


def connected_components(G: Graph) -> list[int]:
    """Vertex-set masks of the connected components, ordered by least vertex."""
    out = []
    remaining = G.full_mask
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= G.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


def has_isolated_vertex(G: Graph) -> bool:
    return any(row == 0 for row in G.adj)


def independence_number(G: Graph) -> int:
    """Exact maximum independent set size, by branching on a densest vertex."""
    adj = G.adj
    best = 0

    def rec(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        pick, deg = -1, -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (adj[v] & cand).bit_count()
            if d > deg:
                deg, pick = d, v
        if deg == 0:
            best = max(best, size + cand.bit_count())
            return
        bit = 1 << pick
        rec(cand & ~(adj[pick] | bit), size + 1)
        rec(cand & ~bit, size)

    rec(G.full_mask, 0)
    return best


def is_simplicial(G: Graph, v: int) -> bool:
    """True when N(v) induces a clique (leaves and isolated vertices count)."""
    if not 0 <= v < G.n:
        raise ParameterError(f"vertex {v} out of range")
    nb = G.adj[v]
    m = nb
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        if nb & ~G.adj[u] & ~low:
            return False
    return True


def is_caterpillar(G: Graph) -> bool:
    """Trees in which no vertex has more than two non-leaf neighbors."""
    if G.n < 1 or not is_connected(G) or G.m != G.n - 1:
        return False
    nonleaf = mask_of(v for v in range(G.n) if G.degree(v) > 1)
    return all((G.adj[v] & nonleaf).bit_count() <= 2 for v in range(G.n))


def substitute_clique(G: Graph, v: int, size: int) -> Graph:
    """Replace v by a clique of `size` mutually adjacent true twins of v.

    Original ids are preserved, v becomes one clique member, and the other
    size-1 vertices are appended after the old range. size=1 returns a copy.
    """
    if not 0 <= v < G.n:
        raise ParameterError(f"vertex {v} out of range")
    if size < 1:
        raise ParameterError("clique size must be at least 1")
    edges = G.edges()
    clones = list(range(G.n, G.n + size - 1))
    nb = bit_indices(G.adj[v])
    for c in clones:
        edges.extend((c, u) for u in nb)
        edges.append((c, v))
    edges.extend((a, b) for i, a in enumerate(clones) for b in clones[i + 1:])
    return Graph(G.n + size - 1, edges, name=G.name)


def delete_vertex(G: Graph, v: int) -> Graph:
    """Remove v; vertices above v shift down by one."""
    if not 0 <= v < G.n:
        raise ParameterError(f"vertex {v} out of range")
    def remap(u):
        return u if u < v else u - 1
    edges = [(remap(a), remap(b)) for a, b in G.edges() if a != v and b != v]
    return Graph(G.n - 1, edges)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G and H side by side; H's ids are shifted up by G.n."""
    edges = G.edges() + [(u + G.n, v + G.n) for u, v in H.edges()]
    return Graph(G.n + H.n, edges, name=f"{G.display_name}+{H.display_name}")


# === canonical codes and isomorphism-free enumeration ===
#
# The canonical code of a graph is the minimum upper-triangle adjacency
# encoding over a restricted set of relabelings: vertices are first colored by
# iterated neighbor-color refinement, and only color-respecting labelings are
# explored, individualizing one vertex of the first non-singleton class at a
# time. Refinement colors are isomorphism-invariant, so the minimum agrees
# with the minimum over all permutations.


def _pair_bit(n: int, i: int, j: int) -> int:
    # position of pair (i, j), i < j, in lexicographic order
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            nb = []
            m = adj[v]
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def canonical_code(G: Graph) -> int:
    """Isomorphism-invariant integer code; equal codes mean isomorphic graphs."""
    n, adj = G.n, G.adj
    if n <= 1:
        return 0
    edges = G.edges()
    best: int | None = None

    def rec(colors: list[int]):
        nonlocal best
        colors = _refine(n, adj, colors)
        if len(set(colors)) == n:
            code = 0
            for u, v in edges:
                a, b = colors[u], colors[v]
                if a > b:
                    a, b = b, a
                code |= 1 << _pair_bit(n, a, b)
            if best is None or code < best:
                best = code
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                child = list(colors)
                child[v] = -1
                rec(child)

    rec([0] * n)
    assert best is not None
    return best


def graph_from_code(n: int, code: int, name: str | None = None) -> Graph:
    """Inverse of the code packing used by canonical_code."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if code >> _pair_bit(n, i, j) & 1:
                edges.append((i, j))
    return Graph(n, edges, name=name)


_ENUM_CACHE: dict[int, list[int]] = {1: [0]}


def _connected_codes(n: int) -> list[int]:
    # Grow one vertex at a time: every connected graph arises from a connected
    # graph one vertex smaller by attaching the new vertex to a nonempty set.
    if n in _ENUM_CACHE:
        return _ENUM_CACHE[n]
    prev = _connected_codes(n - 1)
    seen = set()
    for code in prev:
        base = graph_from_code(n - 1, code)
        base_edges = base.edges()
        for attach in range(1, 1 << (n - 1)):
            edges = base_edges + [(u, n - 1) for u in bit_indices(attach)]
            seen.add(canonical_code(Graph(n, edges)))
    out = sorted(seen)
    _ENUM_CACHE[n] = out
    return out


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    if n < 1:
        raise ParameterError("order must be at least 1")
    if n > ENUM_MAX_VERTICES:
        raise ParameterError(f"enumeration capped at {ENUM_MAX_VERTICES} vertices")
    for i, code in enumerate(_connected_codes(n)):
        yield graph_from_code(n, code, name=f"g{n}_{i}")
