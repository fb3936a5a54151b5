"""Maximum matchings on multigraphs.

Every algorithm here runs on the support graph: multiplicities never
change which vertex sets are matchable, so parallel edges are dropped on
entry.  The module provides

* `maximum_matching` - deterministic blossom-style augmentation,
* `visit_maximum_matchings` / `enumerate_maximum_matchings` - exhaustive
  enumeration of all maximum matchings by branch-and-prune,
* `brute_force_matching_number` / `brute_force_all_maximum_matchings` -
  an independent backtracking oracle (no blossom code path),
* `gallai_edmonds` - the D/A/C decomposition via the deletion oracle,
* `tutte_berge_witness` - a deficiency-attaining vertex set, verified
  against the matching number before it is returned,
* `hall_violator` - a witness set for unsaturated bipartite sides.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .multigraph import Multigraph

BRUTE_FORCE_EDGE_LIMIT = 32


class Matching:
    """A set of vertex-disjoint support edges, stored as (u, v) with u < v."""

    __slots__ = ("_edges", "_partner")

    def __init__(self, edges: Iterable[tuple[int, int]]):
        partner: dict[int, int] = {}
        normalized = []
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"matching edge {u}-{v} is a loop")
            if u > v:
                u, v = v, u
            if u in partner or v in partner:
                raise ValueError(f"matching edges are not vertex-disjoint at {u}-{v}")
            partner[u] = v
            partner[v] = u
            normalized.append((u, v))
        self._edges = frozenset(normalized)
        self._partner = partner

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._edges))

    def size(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def saturates(self, v: int) -> bool:
        return v in self._partner

    def partner(self, v: int) -> Optional[int]:
        return self._partner.get(v)

    def validate_in(self, g: Multigraph) -> None:
        """Reject matchings that use vertices or bundles g does not have."""
        for u, v in self._edges:
            if not (0 <= u < g.n and 0 <= v < g.n):
                raise ValueError(f"matching edge {u}-{v} out of range for n={g.n}")
            if g.bundle_multiplicity(u, v) == 0:
                raise ValueError(f"matching edge {u}-{v} is not an edge of the graph")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self._edges == other._edges

    def __hash__(self) -> int:
        return hash(self._edges)

    def __repr__(self) -> str:
        inner = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"Matching({inner})"


def _support_adj(g: Multigraph) -> list[tuple[int, ...]]:
    return [tuple(sorted(g.support_neighbors(v))) for v in range(g.n)]


# -- blossom augmentation ---------------------------------------------------
#
# Array-based augmenting search with cycle contraction, deterministic:
# roots are tried in ascending id order and adjacency lists are sorted.
# An `alive` mask lets callers delete vertices without rebuilding, and a
# pre-seeded `match` array lets the enumerator reuse parent matchings.


def _augment_from(adj: list[tuple[int, ...]], alive: list[bool],
                  match: list[int], root: int) -> bool:
    n = len(adj)
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque((root,))
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if not alive[to]:
                continue
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                # odd cycle: contract the blossom at the stems' junction
                cur = _lca(match, p, base, v, to)
                in_blossom = [False] * n
                _mark_path(match, p, base, in_blossom, v, cur, to)
                _mark_path(match, p, base, in_blossom, to, cur, v)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    u = to
                    while u != -1:
                        pv = p[u]
                        ppv = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = ppv
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _lca(match: list[int], p: list[int], base: list[int], a: int, b: int) -> int:
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = p[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = p[match[b]]


def _mark_path(match: list[int], p: list[int], base: list[int],
               in_blossom: list[bool], v: int, stop: int, child: int) -> None:
    while base[v] != stop:
        in_blossom[base[v]] = True
        in_blossom[base[match[v]]] = True
        p[v] = child
        child = match[v]
        v = p[match[v]]


def _solve_matching(adj: list[tuple[int, ...]], alive: Optional[list[bool]] = None,
                    match: Optional[list[int]] = None) -> list[int]:
    """Maximum matching over the alive vertices; returns the partner array.

    A supplied `match` array is augmented in place (callers own the copy).
    """
    n = len(adj)
    if alive is None:
        alive = [True] * n
    if match is None:
        match = [-1] * n
        for v in range(n):  # greedy warm start
            if alive[v] and match[v] == -1:
                for w in adj[v]:
                    if alive[w] and match[w] == -1:
                        match[v] = w
                        match[w] = v
                        break
    for root in range(n):
        if alive[root] and match[root] == -1:
            _augment_from(adj, alive, match, root)
    return match


def _match_size(match: list[int]) -> int:
    return sum(1 for v in match if v != -1) // 2


def maximum_matching(g: Multigraph) -> Matching:
    """One maximum matching, deterministic for a fixed graph."""
    match = _solve_matching(_support_adj(g))
    return Matching((v, match[v]) for v in range(g.n) if v < match[v])


def matching_number(g: Multigraph) -> int:
    return _match_size(_solve_matching(_support_adj(g)))


def deficiency(g: Multigraph) -> int:
    """Number of vertices left exposed by any maximum matching."""
    return g.n - 2 * matching_number(g)


def exposed_vertices(g: Multigraph, m: Matching) -> set[int]:
    """Vertices of g not saturated by m; m must be a matching in g."""
    m.validate_in(g)
    return {v for v in range(g.n) if not m.saturates(v)}


# -- exhaustive enumeration -------------------------------------------------


@dataclass(frozen=True)
class EnumerationStats:
    """Outcome of a maximum-matching traversal.

    `exhaustive` is true iff every maximum matching was visited: the
    traversal neither hit the cap nor was stopped by the visitor.
    """

    count: int
    exhaustive: bool


@dataclass(frozen=True)
class MatchingEnumeration:
    matchings: tuple[Matching, ...]
    exhaustive: bool

    def count(self) -> int:
        return len(self.matchings)


def visit_maximum_matchings(g: Multigraph, visit: Callable[[Matching], Optional[bool]],
                            cap: Optional[int] = None) -> EnumerationStats:
    """Call `visit` on every maximum matching of g, in a fixed order.

    Branches on the smallest live vertex: first the branch that leaves it
    exposed, then one branch per live neighbor, ascending.  A branch is
    explored only when the residual matching number still allows a maximum
    matching, which both prunes and dedupes (branches are disjoint).
    `visit` may return False to stop early; `cap` bounds the number of
    matchings delivered.
    """
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    n = g.n
    adj = _support_adj(g)
    base = _solve_matching(adj)
    target = _match_size(base)
    alive = [True] * n
    chosen: list[tuple[int, int]] = []
    state = {"count": 0, "stopped": False}

    def residual_with(killed: tuple[int, ...], hint: list[int], want: int) -> Optional[list[int]]:
        # Matching of the residual graph minus `killed` reaching size `want`,
        # seeded from the parent matching; None when `want` is unreachable.
        m2 = hint.copy()
        size = target - len(chosen)
        for x in killed:
            px = m2[x]
            if px != -1:
                m2[px] = -1
                m2[x] = -1
                size -= 1
            alive[x] = False
        if size < want:
            for root in range(n):
                if size >= want:
                    break
                if alive[root] and m2[root] == -1 and _augment_from(adj, alive, m2, root):
                    size += 1
        for x in killed:
            alive[x] = True
        return m2 if size >= want else None

    def walk(hint: list[int], remaining: int) -> bool:
        if remaining == 0:
            if cap is not None and state["count"] >= cap:
                state["stopped"] = True
                return False
            state["count"] += 1
            return visit(Matching(chosen)) is not False
        v = -1
        for u in range(n):
            if alive[u] and any(alive[w] for w in adj[u]):
                v = u
                break
        # remaining > 0 guarantees a live edge, hence v >= 0
        m2 = residual_with((v,), hint, remaining)
        if m2 is not None:
            alive[v] = False
            ok = walk(m2, remaining)
            alive[v] = True
            if not ok:
                return False
        for w in adj[v]:
            if not alive[w]:
                continue
            m2 = residual_with((v, w), hint, remaining - 1)
            if m2 is not None:
                alive[v] = alive[w] = False
                chosen.append((v, w) if v < w else (w, v))
                ok = walk(m2, remaining - 1)
                chosen.pop()
                alive[v] = alive[w] = True
                if not ok:
                    return False
        return True

    finished = walk(base, target)
    return EnumerationStats(count=state["count"], exhaustive=finished and not state["stopped"])


def enumerate_maximum_matchings(g: Multigraph, cap: Optional[int] = None) -> MatchingEnumeration:
    """Materialize all maximum matchings of g (up to `cap`)."""
    found: list[Matching] = []
    stats = visit_maximum_matchings(g, lambda m: found.append(m) or True, cap=cap)
    return MatchingEnumeration(matchings=tuple(found), exhaustive=stats.exhaustive)


# -- brute-force oracle -----------------------------------------------------
#
# Exhaustive backtracking over all matchings, sharing nothing with the
# blossom path above.  Guarded: refuses graphs with more than
# BRUTE_FORCE_EDGE_LIMIT support edges.


def _check_brute_force_guard(g: Multigraph) -> None:
    m = g.support_edge_count()
    if m > BRUTE_FORCE_EDGE_LIMIT:
        raise ValueError(
            f"brute force limited to {BRUTE_FORCE_EDGE_LIMIT} support edges, got {m}")


def _for_each_matching(adj: list[tuple[int, ...]], n: int,
                       emit: Callable[[list[tuple[int, int]]], None]) -> None:
    # Visits every matching exactly once: the smallest undecided vertex is
    # either left exposed for good or matched to a larger free neighbor.
    covered = [False] * n
    current: list[tuple[int, int]] = []

    def rec(v: int) -> None:
        while v < n and covered[v]:
            v += 1
        if v == n:
            emit(current)
            return
        rec(v + 1)  # v stays exposed
        covered[v] = True
        for w in adj[v]:
            if w > v and not covered[w]:
                covered[w] = True
                current.append((v, w))
                rec(v + 1)
                current.pop()
                covered[w] = False
        covered[v] = False

    rec(0)


def brute_force_matching_number(g: Multigraph) -> int:
    """Exact matching number by exhaustive search (independent oracle)."""
    _check_brute_force_guard(g)
    best = 0

    def emit(current: list[tuple[int, int]]) -> None:
        nonlocal best
        if len(current) > best:
            best = len(current)

    _for_each_matching(_support_adj(g), g.n, emit)
    return best


def brute_force_all_maximum_matchings(g: Multigraph) -> set[Matching]:
    """All maximum matchings by exhaustive search (independent oracle)."""
    _check_brute_force_guard(g)
    best = 0
    found: set[frozenset[tuple[int, int]]] = set()

    def emit(current: list[tuple[int, int]]) -> None:
        nonlocal best, found
        if len(current) > best:
            best = len(current)
            found = set()
        if len(current) == best:
            found.add(frozenset(current))

    _for_each_matching(_support_adj(g), g.n, emit)
    return {Matching(edges) for edges in found}


# -- structure theory -------------------------------------------------------


@dataclass(frozen=True)
class GallaiEdmonds:
    """Canonical decomposition: d = vertices some maximum matching misses,
    a = their outside neighbors, c = the rest."""

    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]


def gallai_edmonds(g: Multigraph) -> GallaiEdmonds:
    """Decomposition via the deletion oracle: v is in D iff deleting v
    leaves the matching number unchanged."""
    n = g.n
    adj = _support_adj(g)
    nu = _match_size(_solve_matching(adj))
    d: set[int] = set()
    alive = [True] * n
    for v in range(n):
        alive[v] = False
        if _match_size(_solve_matching(adj, alive)) == nu:
            d.add(v)
        alive[v] = True
    a = {w for v in d for w in adj[v]} - d
    c = set(range(n)) - d - a
    return GallaiEdmonds(d=frozenset(d), a=frozenset(a), c=frozenset(c))


@dataclass(frozen=True)
class TutteBergeWitness:
    """Vertex set s with odd_count = (odd components of g - s), attaining
    deficiency(g) = odd_count - |s|."""

    s: frozenset[int]
    odd_count: int


def tutte_berge_witness(g: Multigraph) -> TutteBergeWitness:
    """Deficiency-attaining set (the A side of Gallai-Edmonds).

    The identity odd_count - |s| = deficiency is checked before returning;
    failure raises, since it would mean the matching code is wrong.
    """
    ge = gallai_edmonds(g)
    s = ge.a
    seen = [False] * g.n
    for v in s:
        seen[v] = True
    odd = 0
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        size = 1
        queue = deque((start,))
        while queue:
            u = queue.popleft()
            for w in g.support_neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    size += 1
                    queue.append(w)
        if size % 2 == 1:
            odd += 1
    if odd - len(s) != deficiency(g):
        raise RuntimeError(
            f"Tutte-Berge identity violated: odd={odd} |s|={len(s)} "
            f"deficiency={deficiency(g)}; matching implementation is buggy")
    return TutteBergeWitness(s=s, odd_count=odd)


def hall_violator(g: Multigraph, side: Iterable[int]) -> Optional[frozenset[int]]:
    """A set W within `side` with fewer neighbors than members, if any.

    `side` must be one part of a bipartition of g (every support edge must
    cross).  Returns None exactly when every maximum matching saturates
    the side.
    """
    side_set = set(side)
    for v in side_set:
        g._check_vertex(v)
    for u, v in g.support_edges():
        if (u in side_set) == (v in side_set):
            raise ValueError(f"edge {u}-{v} does not cross the given side; "
                             "graph is not bipartite with this part")
    m = maximum_matching(g)
    exposed_side = [v for v in sorted(side_set) if not m.saturates(v)]
    if not exposed_side:
        return None
    # Alternating reachability from the exposed side vertices: free edges
    # out of the side, matched edges back into it.
    reach = set(exposed_side)
    queue = deque(exposed_side)
    while queue:
        u = queue.popleft()
        if u in side_set:
            for w in g.support_neighbors(u):
                if w != m.partner(u) and w not in reach:
                    reach.add(w)
                    queue.append(w)
        else:
            p = m.partner(u)
            if p is not None and p not in reach:
                reach.add(p)
                queue.append(p)
    return frozenset(reach & side_set)
