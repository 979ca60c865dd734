"""Edge-weighted multigraphs and their plain-text edge-list format."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional


class Edge(NamedTuple):
    u: int
    v: int
    weight: int
    cost: int = 0
    tag: Optional[int] = None


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedMultigraph:
    """Nodes are ``0 .. node_count-1``; parallel edges are allowed, loops are not."""

    node_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.node_count < 0:
            raise GraphError("negative node count")
        for i, e in enumerate(edges):
            if not (0 <= e.u < self.node_count and 0 <= e.v < self.node_count):
                raise GraphError(f"edge {i} ({e.u}, {e.v}) has an endpoint out of range")
            if e.u == e.v:
                raise GraphError(f"edge {i} is a self-loop on node {e.u}")
            if e.weight < 0 or e.cost < 0:
                raise GraphError(f"edge {i} has a negative weight or cost")

    @property
    def m(self) -> int:
        return len(self.edges)

    def pair_edges(self) -> dict[tuple[int, int], list[Edge]]:
        """Edges bucketed by unordered endpoint pair (smaller node first)."""
        out: dict[tuple[int, int], list[Edge]] = {}
        for e in self.edges:
            key = (e.u, e.v) if e.u < e.v else (e.v, e.u)
            out.setdefault(key, []).append(e)
        return out

    def max_multiplicity(self) -> int:
        return max((len(es) for es in self.pair_edges().values()), default=0)

    def to_edge_list(self, with_tags: bool = False) -> str:
        lines = [f"{self.node_count} {self.m}"]
        for e in self.edges:
            row = f"{e.u} {e.v} {e.weight} {e.cost}"
            if with_tags:
                row += f" {'-' if e.tag is None else e.tag}"
            lines.append(row)
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> WeightedMultigraph:
    """Read ``N m`` then m lines ``u v w [cost [tag]]`` (0-based nodes, ``#`` comments)."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty edge list")
    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphError(f"line {lineno}: header must be 'N m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError(f"line {lineno}: header must hold two integers") from None
    if len(rows) - 1 != m:
        raise GraphError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, fields in rows[1:]:
        if not 3 <= len(fields) <= 5:
            raise GraphError(f"line {lineno}: expected 'u v w [cost [tag]]'")
        try:
            nums = [int(x) for x in fields[:4]]
            tag = None if len(fields) < 5 or fields[4] == "-" else int(fields[4])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer field") from None
        edges.append(Edge(nums[0], nums[1], nums[2], nums[3] if len(nums) > 3 else 0, tag))
    try:
        return WeightedMultigraph(n, tuple(edges))
    except GraphError as exc:
        raise GraphError(f"{exc}") from None


def perfect_matching_pairs(n: int) -> Iterable[list[tuple[int, int]]]:
    """All perfect matchings of K_n, each as a list of (i, j) with i < j."""
    def rec(free: list[int]):
        if not free:
            yield []
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            rest = free[1:idx] + free[idx + 1:]
            for tail in rec(rest):
                yield [(a, b)] + tail
    if n % 2:
        return iter(())
    return rec(list(range(n)))
