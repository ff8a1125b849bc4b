"""Static network geometry: node positions, radio range, adjacency.

Coordinates are plain floats in field units.  Range checks compare
squared distances so that a pair sitting exactly at the radio range is
classified the same way on every platform (no sqrt rounding).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


Position = tuple[float, float]
NodeId = int


def dist(a: Position, b: Position) -> float:
    """Euclidean distance between two positions."""
    return math.hypot(a[0] - b[0], a[1] - b[1])


def _sq_dist(a: Position, b: Position) -> float:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


@dataclass
class Topology:
    """Immutable-by-convention map of node positions plus the base station.

    nodes: id -> (x, y), ids positive ints, exactly one of them the base.
    radio_range: symmetric reach; a pair at exactly this distance is in range.
    field_size: (width, height); all positions must lie inside.
    """

    nodes: dict[NodeId, Position]
    base_id: NodeId
    radio_range: float
    field_size: tuple[float, float]
    _adj: dict[NodeId, tuple[NodeId, ...]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.base_id not in self.nodes:
            raise ValueError(f"base id {self.base_id} not among nodes")
        if self.radio_range <= 0:
            raise ValueError("radio_range must be positive")
        w, h = self.field_size
        for nid, (x, y) in self.nodes.items():
            if not isinstance(nid, int) or nid < 1:
                raise ValueError(f"node id must be a positive int, got {nid!r}")
            if not (0 <= x <= w and 0 <= y <= h):
                raise ValueError(f"node {nid} at ({x}, {y}) lies outside the {w}x{h} field")
        self._adj = self._build_adjacency()

    def _build_adjacency(self) -> dict[NodeId, tuple[NodeId, ...]]:
        rr = self.radio_range * self.radio_range
        ids = sorted(self.nodes)
        out = {}
        for i in ids:
            out[i] = tuple(
                j for j in ids if j != i and _sq_dist(self.nodes[i], self.nodes[j]) <= rr
            )
        return out

    def neighbors(self, node_id: NodeId) -> tuple[NodeId, ...]:
        """Ids within radio range of node_id (boundary inclusive), ascending."""
        return self._adj[node_id]

    def distance(self, a: NodeId, b: NodeId) -> float:
        return dist(self.nodes[a], self.nodes[b])

    def sensor_ids(self) -> list[NodeId]:
        """All node ids except the base, ascending."""
        return [i for i in sorted(self.nodes) if i != self.base_id]

    def is_connected(self) -> bool:
        """BFS reachability over the in-range graph."""
        ids = list(self.nodes)
        seen = {ids[0]}
        frontier = [ids[0]]
        while frontier:
            nxt = []
            for u in frontier:
                for v in self._adj[u]:
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return len(seen) == len(ids)


def split_sections(text: str) -> dict[str, list[str]]:
    """Break INI-style text into {section: [payload lines]}.

    Lines starting with '#' or ';' are comments.  Raises ValueError on
    content outside any section or an unterminated section header.
    """
    sections: dict[str, list[str]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ValueError(f"line {lineno}: malformed section header {line!r}")
            current = line[1:-1].strip().lower()
            sections.setdefault(current, [])
            continue
        if current is None:
            raise ValueError(f"line {lineno}: content before any [section]: {line!r}")
        sections[current].append(line)
    return sections


def parse_kv(lines: list[str], section: str) -> dict[str, str]:
    out = {}
    for line in lines:
        if "=" not in line:
            raise ValueError(f"[{section}] expects key = value lines, got {line!r}")
        k, _, v = line.partition("=")
        out[k.strip().lower()] = v.strip()
    return out


def load_layout(source: str) -> Topology:
    """Build a Topology from [field] and [nodes] sections of scenario text.

    [field] carries width, height and radio_range.  Each [nodes] line is
    ``id x y`` with an optional trailing ``base`` marker on exactly one
    line.  Duplicate ids, zero or multiple bases, and positions outside
    the field are rejected.
    """
    sections = split_sections(source)
    if "field" not in sections or "nodes" not in sections:
        raise ValueError("layout text needs [field] and [nodes] sections")
    fv = parse_kv(sections["field"], "field")
    try:
        width = float(fv["width"])
        height = float(fv["height"])
        radio_range = float(fv.get("radio_range", "110"))
    except KeyError as e:
        raise ValueError(f"[field] missing {e.args[0]}") from None

    nodes: dict[NodeId, Position] = {}
    base_ids = []
    for line in sections["nodes"]:
        parts = line.split()
        if len(parts) not in (3, 4):
            raise ValueError(f"[nodes] line needs 'id x y [base]', got {line!r}")
        try:
            nid = int(parts[0])
            x = float(parts[1])
            y = float(parts[2])
        except ValueError:
            raise ValueError(f"[nodes] line has non-numeric fields: {line!r}") from None
        if nid in nodes:
            raise ValueError(f"duplicate node id {nid}")
        if len(parts) == 4:
            if parts[3].lower() != "base":
                raise ValueError(f"[nodes] trailing token must be 'base', got {parts[3]!r}")
            base_ids.append(nid)
        nodes[nid] = (x, y)
    if len(base_ids) != 1:
        raise ValueError(f"expected exactly one base node, found {len(base_ids)}")
    return Topology(
        nodes=nodes,
        base_id=base_ids[0],
        radio_range=radio_range,
        field_size=(width, height),
    )
