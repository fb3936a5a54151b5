"""Loop-free multigraph with integer-multiplicity edge bundles.

Vertices are dense 0-based ids.  Parallel edges between two vertices are
stored once, as an unordered bundle with a multiplicity count; adjacency
queries ("support" queries) ignore multiplicities.  Graphs are built by
mutation, then frozen; everything else in this package treats a frozen
graph as immutable.

The module also owns the MGF text format (parse/serialize) and a DOT
export that repeats each bundle once per multiplicity unit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

HUB_NAMES = ("x", "y", "z")


@dataclass(frozen=True)
class Hub:
    """Distinguished high-degree vertex, named x, y or z."""

    name: str

    def __post_init__(self) -> None:
        if self.name not in HUB_NAMES:
            raise ValueError(f"hub name must be one of {HUB_NAMES}, got {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Pair:
    """Vertex indexed by an unordered pair (i, j) with 1 <= i < j."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not (1 <= self.i < self.j):
            raise ValueError(f"pair label needs 1 <= i < j, got ({self.i}, {self.j})")

    def __str__(self) -> str:
        return f"u({self.i},{self.j})"


@dataclass(frozen=True)
class Copy:
    """k-th copy vertex attached to block i (k >= 1, i >= 1)."""

    k: int
    i: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.i < 1:
            raise ValueError(f"copy label needs k >= 1 and i >= 1, got ({self.k}, {self.i})")

    def __str__(self) -> str:
        return f"v{self.k}^({self.i})"


@dataclass(frozen=True)
class Plain:
    """Default label: the vertex id itself."""

    index: int

    def __str__(self) -> str:
        return str(self.index)


VertexLabel = Union[Hub, Pair, Copy, Plain]


class MGFParseError(ValueError):
    """MGF text rejected; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class BiregularClassification:
    """Bipartition with uniform per-side degrees a (side_a) and b (side_b)."""

    a: int
    b: int
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


class Multigraph:
    """Undirected loop-free multigraph on vertices 0..n-1."""

    __slots__ = ("_n", "_adj", "_labels", "_label_to_id", "_frozen")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        self._n = n
        # neighbor -> bundle multiplicity, kept symmetric
        self._adj: list[dict[int, int]] = [dict() for _ in range(n)]
        self._labels: dict[int, VertexLabel] = {}
        self._label_to_id: dict[VertexLabel, int] = {}
        self._frozen = False

    # -- construction ------------------------------------------------

    def add_edges(self, u: int, v: int, multiplicity: int = 1) -> "Multigraph":
        """Add `multiplicity` parallel edges between u and v.

        Loops (u == v) are rejected; repeated calls accumulate onto the
        same bundle.
        """
        self._check_mutable()
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"loop edge {u}-{v} not allowed")
        if multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {multiplicity}")
        self._adj[u][v] = self._adj[u].get(v, 0) + multiplicity
        self._adj[v][u] = self._adj[v].get(u, 0) + multiplicity
        return self

    def set_label(self, v: int, label: VertexLabel) -> "Multigraph":
        """Attach a label to v.  Labels are injective within a graph."""
        self._check_mutable()
        self._check_vertex(v)
        if isinstance(label, Plain):
            if label.index != v:
                raise ValueError(f"plain label {label.index} does not match vertex {v}")
            return self  # implicit default, nothing to store
        other = self._label_to_id.get(label)
        if other is not None and other != v:
            raise ValueError(f"label {label} already used by vertex {other}")
        old = self._labels.get(v)
        if old is not None:
            del self._label_to_id[old]
        self._labels[v] = label
        self._label_to_id[label] = v
        return self

    def freeze(self) -> "Multigraph":
        self._frozen = True
        return self

    def _check_mutable(self) -> None:
        if self._frozen:
            raise ValueError("graph is frozen")

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not (0 <= v < self._n):
            raise ValueError(f"vertex id {v} out of range [0, {self._n})")

    # -- basic queries -----------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def frozen(self) -> bool:
        return self._frozen

    def degree(self, v: int) -> int:
        """Weighted degree: every parallel edge counts."""
        self._check_vertex(v)
        return sum(self._adj[v].values())

    def max_degree(self) -> int:
        if self._n == 0:
            raise ValueError("empty graph has no degrees")
        return max(self.degree(v) for v in range(self._n))

    def min_degree(self) -> int:
        if self._n == 0:
            raise ValueError("empty graph has no degrees")
        return min(self.degree(v) for v in range(self._n))

    def support_neighbors(self, v: int) -> set[int]:
        """Distinct neighbors of v, multiplicities ignored."""
        self._check_vertex(v)
        return set(self._adj[v])

    def support_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def common_neighbors(self, u: int, v: int) -> set[int]:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("common_neighbors needs two distinct vertices")
        return set(self._adj[u]) & set(self._adj[v])

    def bundle_multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        return self._adj[u].get(v, 0)

    def bundles(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, multiplicity) with u < v, ascending."""
        for u in range(self._n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield u, v, self._adj[u][v]

    def support_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.bundles()]

    def support_edge_count(self) -> int:
        return sum(1 for _ in self.bundles())

    def weighted_edge_count(self) -> int:
        return sum(m for _, _, m in self.bundles())

    # -- labels --------------------------------------------------------

    def label(self, v: int) -> VertexLabel:
        self._check_vertex(v)
        return self._labels.get(v, Plain(v))

    def vertex_with_label(self, label: VertexLabel) -> int:
        """Resolve a label to its vertex id; KeyError if absent."""
        if isinstance(label, Plain):
            if 0 <= label.index < self._n and label.index not in self._labels:
                return label.index
            raise KeyError(label)
        try:
            return self._label_to_id[label]
        except KeyError:
            raise KeyError(label) from None

    def labeled_vertices(self) -> list[tuple[int, VertexLabel]]:
        """Explicitly labeled vertices only, ascending by id."""
        return sorted(self._labels.items())

    # -- structure -----------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components of the support graph, each sorted, ordered
        by smallest member."""
        seen = [False] * self._n
        out: list[list[int]] = []
        for start in range(self._n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque((start,))
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def support_graph(self) -> "Multigraph":
        """Copy with every bundle multiplicity collapsed to 1."""
        g = Multigraph(self._n)
        for u, v, _ in self.bundles():
            g.add_edges(u, v, 1)
        for v, lab in self._labels.items():
            g.set_label(v, lab)
        return g.freeze()

    def classify_biregular_bipartite(self) -> Optional[BiregularClassification]:
        """Classify as (a, b)-biregular bipartite if possible.

        Returns the degree pair (a >= b; ties broken so vertex 0's side
        comes first) and the bipartition, or None for graphs that are not
        bipartite, have no edges, or admit no orientation of component
        2-colorings with uniform per-side degrees.
        """
        n = self._n
        if n == 0 or self.support_edge_count() == 0:
            return None
        color = [-1] * n
        comp_classes: list[tuple[list[int], list[int]]] = []
        for start in range(n):
            if color[start] != -1:
                continue
            color[start] = 0
            cls: tuple[list[int], list[int]] = ([start], [])
            queue = deque((start,))
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if color[w] == -1:
                        color[w] = color[u] ^ 1
                        cls[color[w]].append(w)
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None  # odd cycle
            comp_classes.append(cls)

        degs = {self.degree(v) for v in range(n)}
        if len(degs) > 2:
            return None
        if len(degs) == 1:
            a = b = degs.pop()
            side_a = sorted(v for c0, _ in comp_classes for v in c0)
            side_b = sorted(v for _, c1 in comp_classes for v in c1)
            return BiregularClassification(a, b, tuple(side_a), tuple(side_b))

        a, b = sorted(degs, reverse=True)
        side_a: list[int] = []
        side_b: list[int] = []
        for c0, c1 in comp_classes:
            if not c1:  # isolated vertex, degree 0
                (side_a if a == 0 else side_b).extend(c0)
                continue
            d0 = {self.degree(v) for v in c0}
            d1 = {self.degree(v) for v in c1}
            if len(d0) != 1 or len(d1) != 1:
                return None
            d0v, d1v = d0.pop(), d1.pop()
            if {d0v, d1v} != {a, b}:
                return None  # forces d0v != d1v since a != b
            if d0v == a:
                side_a.extend(c0)
                side_b.extend(c1)
            else:
                side_a.extend(c1)
                side_b.extend(c0)
        return BiregularClassification(a, b, tuple(sorted(side_a)), tuple(sorted(side_b)))

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self._n == other._n
            and self._adj == other._adj
            and self._labels == other._labels
        )

    def __repr__(self) -> str:
        return (
            f"Multigraph(n={self._n}, bundles={self.support_edge_count()}, "
            f"edges={self.weighted_edge_count()})"
        )


# -- MGF text format -------------------------------------------------------


def _format_label_line(v: int, label: VertexLabel) -> str:
    if isinstance(label, Hub):
        return f"# label {v} hub {label.name}"
    if isinstance(label, Pair):
        return f"# label {v} pair {label.i} {label.j}"
    if isinstance(label, Copy):
        return f"# label {v} copy {label.k} {label.i}"
    raise ValueError(f"label {label!r} has no MGF form")


def serialize_mgf(g: Multigraph) -> str:
    """Canonical MGF text: header, label lines by id, bundle lines ascending."""
    lines = [f"mgf {g.n}"]
    for v, label in g.labeled_vertices():
        lines.append(_format_label_line(v, label))
    for u, v, m in g.bundles():
        lines.append(f"{u} {v} {m}")
    return "\n".join(lines) + "\n"


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MGFParseError(line_no, f"{what} must be an integer, got {token!r}") from None


def _parse_label_tokens(tokens: list[str], line_no: int) -> tuple[int, VertexLabel]:
    # tokens: ["label", <id>, <kind>, ...]
    if len(tokens) < 3:
        raise MGFParseError(line_no, "label line too short")
    vid = _parse_int(tokens[1], line_no, "label vertex id")
    kind = tokens[2]
    try:
        if kind == "hub":
            if len(tokens) != 4:
                raise MGFParseError(line_no, "hub label needs exactly one name")
            return vid, Hub(tokens[3])
        if kind == "pair":
            if len(tokens) != 5:
                raise MGFParseError(line_no, "pair label needs two indices")
            return vid, Pair(_parse_int(tokens[3], line_no, "pair index"),
                             _parse_int(tokens[4], line_no, "pair index"))
        if kind == "copy":
            if len(tokens) != 5:
                raise MGFParseError(line_no, "copy label needs two indices")
            return vid, Copy(_parse_int(tokens[3], line_no, "copy index"),
                             _parse_int(tokens[4], line_no, "copy index"))
    except ValueError as exc:
        if isinstance(exc, MGFParseError):
            raise
        raise MGFParseError(line_no, str(exc)) from None
    raise MGFParseError(line_no, f"unknown label kind {kind!r}")


def parse_mgf(text: str) -> Multigraph:
    """Parse MGF text into a frozen Multigraph.

    Grammar: line 1 is `mgf <n>`; optional `# label <id> ...` lines follow;
    then one `<u> <v> <multiplicity>` line per bundle with u < v and each
    unordered pair appearing at most once.  Blank lines are ignored.
    Errors carry the offending line number.
    """
    g: Optional[Multigraph] = None
    seen_bundle = False
    seen_pairs: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if g is None:
            if tokens[0] != "mgf" or len(tokens) != 2:
                raise MGFParseError(line_no, "expected header `mgf <n>`")
            n = _parse_int(tokens[1], line_no, "vertex count")
            if n < 0:
                raise MGFParseError(line_no, f"vertex count must be >= 0, got {n}")
            g = Multigraph(n)
            continue
        if tokens[0] == "#":
            if len(tokens) < 2 or tokens[1] != "label":
                raise MGFParseError(line_no, "unrecognized directive; only `# label ...` allowed")
            if seen_bundle:
                raise MGFParseError(line_no, "label line after bundle data")
            vid, label = _parse_label_tokens(tokens[1:], line_no)
            try:
                g.set_label(vid, label)
            except ValueError as exc:
                raise MGFParseError(line_no, str(exc)) from None
            continue
        if len(tokens) != 3:
            raise MGFParseError(line_no, "expected bundle line `<u> <v> <multiplicity>`")
        u = _parse_int(tokens[0], line_no, "vertex id")
        v = _parse_int(tokens[1], line_no, "vertex id")
        m = _parse_int(tokens[2], line_no, "multiplicity")
        if u >= v:
            if u == v:
                raise MGFParseError(line_no, f"loop edge {u}-{v} not allowed")
            raise MGFParseError(line_no, f"bundle must satisfy u < v, got {u} {v}")
        if (u, v) in seen_pairs:
            raise MGFParseError(line_no, f"duplicate bundle {u}-{v}")
        seen_pairs.add((u, v))
        try:
            g.add_edges(u, v, m)
        except ValueError as exc:
            raise MGFParseError(line_no, str(exc)) from None
        seen_bundle = True
    if g is None:
        raise MGFParseError(1, "empty input, expected header `mgf <n>`")
    return g.freeze()


def export_dot(g: Multigraph, highlight: Iterable[int] = ()) -> str:
    """DOT text with one edge repeated per multiplicity unit.

    Vertices in `highlight` are drawn filled; callers typically pass the
    exposed set of a maximum matching.
    """
    marked = set(highlight)
    for v in marked:
        g._check_vertex(v)
    lines = ["graph multigraph {"]
    for v in range(g.n):
        attrs = [f'label="{g.label(v)}"']
        if v in marked:
            attrs.append("style=filled")
            attrs.append("fillcolor=gray")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v, m in g.bundles():
        lines.extend(f"  {u} -- {v};" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"
