"""The four standard graph products on a common row-major vertex encoding.

A product vertex (g, h) gets id g * H.n + h. Given factor edges g1g2 and h1h2:

  cartesian      (g1,h1)~(g2,h2)  iff  g1g2 edge and h1=h2, or g1=g2 and h1h2 edge
  direct         iff  g1g2 edge and h1h2 edge
  strong         union of cartesian and direct adjacency
  lexicographic  iff  g1g2 edge, or g1=g2 and h1h2 edge
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graphs import Graph

KINDS = ("cartesian", "strong", "direct", "lexicographic")

_ALIASES = {"lex": "lexicographic", "box": "cartesian", "cart": "cartesian"}


def normalize_kind(kind: str) -> str:
    kind = _ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ParameterError(f"unknown product kind '{kind}'")
    return kind


@dataclass(frozen=True)
class ProductDescriptor:
    """A built product graph plus the indexing maps back to its factors."""

    kind: str
    G: Graph
    H: Graph
    graph: Graph

    @property
    def nG(self) -> int:
        return self.G.n

    @property
    def nH(self) -> int:
        return self.H.n

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.nG and 0 <= h < self.nH):
            raise ParameterError(f"factor coordinates ({g},{h}) out of range")
        return g * self.nH + h

    def coords(self, idx: int) -> tuple[int, int]:
        if not 0 <= idx < self.graph.n:
            raise ParameterError(f"product vertex {idx} out of range")
        return divmod(idx, self.nH)

    def layer(self, axis: str, index: int) -> int:
        """Mask of a G-layer (fixed h = index) or an H-layer (fixed g = index)."""
        if axis == "G":
            if not 0 <= index < self.nH:
                raise ParameterError(f"H-coordinate {index} out of range")
            return sum(1 << (g * self.nH + index) for g in range(self.nG))
        if axis == "H":
            if not 0 <= index < self.nG:
                raise ParameterError(f"G-coordinate {index} out of range")
            return ((1 << self.nH) - 1) << (index * self.nH)
        raise ParameterError(f"unknown layer axis '{axis}'")

    def project(self, S: int, onto: str) -> int:
        """Project a product vertex set onto one factor's vertex set."""
        if onto not in ("G", "H"):
            raise ParameterError(f"unknown projection target '{onto}'")
        if S & ~self.graph.full_mask:
            raise ParameterError("vertex set out of range")
        out = 0
        m = S
        while m:
            low = m & -m
            g, h = divmod(low.bit_length() - 1, self.nH)
            out |= 1 << (g if onto == "G" else h)
            m ^= low
        return out


def product(kind: str, G: Graph, H: Graph) -> ProductDescriptor:
    """Build the requested product of G and H."""
    kind = normalize_kind(kind)
    nG, nH = G.n, H.n
    if nG < 1 or nH < 1:
        raise ParameterError("product factors must be nonempty")
    ge = G.edges()
    he = H.edges()
    edges: list[tuple[int, int]] = []

    def idx(g, h):
        return g * nH + h

    if kind in ("cartesian", "strong"):
        for g in range(nG):
            edges.extend((idx(g, h1), idx(g, h2)) for h1, h2 in he)
        for g1, g2 in ge:
            edges.extend((idx(g1, h), idx(g2, h)) for h in range(nH))
    if kind in ("direct", "strong"):
        for g1, g2 in ge:
            for h1, h2 in he:
                edges.append((idx(g1, h1), idx(g2, h2)))
                edges.append((idx(g1, h2), idx(g2, h1)))
    if kind == "lexicographic":
        for g in range(nG):
            edges.extend((idx(g, h1), idx(g, h2)) for h1, h2 in he)
        for g1, g2 in ge:
            edges.extend((idx(g1, h1), idx(g2, h2)) for h1 in range(nH) for h2 in range(nH))

    name = f"{kind}({G.display_name},{H.display_name})"
    return ProductDescriptor(kind, G, H, Graph(nG * nH, edges, name=name))
