"""Core representation of r-uniform multi-hypergraphs.

Vertices are dense integers 0..n-1 so that isolated vertices are
representable (the vertex count n is a parameter of the Turan function,
not derivable from the edge set).  Multiplicity is represented by
repeated edge instances, never by a counter, so that Berge witnesses can
reference distinct instances of an identical vertex set.

Canonical forms are exact: two hypergraphs receive the same byte string
iff they are isomorphic as multi-hypergraphs.  The canonicalizer is a
partition-refinement / individualization search intended for desk scale
(n <= 12 by default).
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

CANONICAL_N_LIMIT = 12

# Guard against pathological symmetry blow-ups in the canonical search.
_CANONICAL_LEAF_BUDGET = 5_000_000


class HypergraphError(ValueError):
    """Raised on malformed hypergraph input."""


class Hypergraph:
    """An immutable n-vertex r-uniform multi-hypergraph.

    ``edges`` is a tuple of edge instances, each a sorted tuple of r
    distinct vertex ids, kept in lexicographic order.  Repeated tuples
    encode multiplicity.  Instance ids are positions in ``edges``.
    """

    __slots__ = ("n", "r", "edges", "_canon")

    def __init__(self, n: int, r: int, edges: tuple[tuple[int, ...], ...]):
        self.n = n
        self.r = r
        self.edges = edges
        self._canon: tuple[bytes, tuple[int, ...]] | None = None

    # -- construction -------------------------------------------------

    @staticmethod
    def build(n: int, r: int, edge_lists: Iterable[Iterable[int]]) -> "Hypergraph":
        """Validate and canonically order the instance list.

        Duplicate lists are preserved as multiplicity.  Raises
        HypergraphError on wrong edge size, out-of-range vertex ids, or
        r < 2.
        """
        if r < 2:
            raise HypergraphError(f"uniformity r must be >= 2, got {r}")
        if n < 0:
            raise HypergraphError(f"vertex count must be >= 0, got {n}")
        insts = []
        for i, raw in enumerate(edge_lists):
            edge = tuple(sorted(raw))
            if len(edge) != r or len(set(edge)) != r:
                raise HypergraphError(
                    f"edge {i} must have exactly {r} distinct vertices, got {list(raw)!r}"
                )
            if edge[0] < 0 or edge[-1] >= n:
                raise HypergraphError(
                    f"edge {i} has vertex id out of range 0..{n - 1}: {list(raw)!r}"
                )
            insts.append(edge)
        insts.sort()
        return Hypergraph(n, r, tuple(insts))

    def with_edge(self, edge: tuple[int, ...]) -> "Hypergraph":
        """Return a new hypergraph with one more instance (edge must be sorted)."""
        merged = tuple(sorted(self.edges + (edge,)))
        return Hypergraph(self.n, self.r, merged)

    # -- elementary queries -------------------------------------------

    def num_edges(self) -> int:
        """Instance count, i.e. edge count with multiplicity."""
        return len(self.edges)

    def multiplicity(self, edge: Iterable[int]) -> int:
        key = tuple(sorted(edge))
        return sum(1 for e in self.edges if e == key)

    def max_multiplicity(self) -> int:
        best = 0
        run = 0
        prev = None
        for e in self.edges:
            run = run + 1 if e == prev else 1
            prev = e
            best = max(best, run)
        return best

    def vertex_instances(self) -> list[list[int]]:
        """For each vertex, the list of incident instance ids."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc

    def support(self) -> list[int]:
        seen = [False] * self.n
        for e in self.edges:
            for v in e:
                seen[v] = True
        return [v for v in range(self.n) if seen[v]]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.r == other.r
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, edges={list(map(list, self.edges))})"

    # -- serialization -------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.n} {self.r}"]
        lines.extend(" ".join(map(str, e)) for e in self.edges)
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def build(n: int, r: int, edge_lists: Iterable[Iterable[int]]) -> Hypergraph:
    """Module-level alias for Hypergraph.build."""
    return Hypergraph.build(n, r, edge_lists)


# ----------------------------------------------------------------------
# Parsing (text format: first line "n r", one instance per line, '#'
# comments; repeated lines encode multiplicity)
# ----------------------------------------------------------------------

def from_text(text: str) -> Hypergraph:
    header: tuple[int, int] | None = None
    edges: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise HypergraphError(f"line {lineno}: malformed line {raw!r}")
        if header is None:
            if len(values) != 2:
                raise HypergraphError(f"line {lineno}: expected header 'n r'")
            header = (values[0], values[1])
            continue
        n, r = header
        if len(values) != r:
            raise HypergraphError(
                f"line {lineno}: wrong edge size, expected {r} vertex ids"
            )
        if any(v < 0 or v >= n for v in values):
            raise HypergraphError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        edges.append(values)
    if header is None:
        raise HypergraphError("empty input: missing 'n r' header")
    return Hypergraph.build(header[0], header[1], edges)


def from_json_obj(obj: dict) -> Hypergraph:
    try:
        return Hypergraph.build(int(obj["n"]), int(obj["r"]), obj["edges"])
    except (KeyError, TypeError) as exc:
        raise HypergraphError(f"malformed hypergraph JSON object: {exc}")


def from_json(text: str) -> Hypergraph:
    return from_json_obj(json.loads(text))


# ----------------------------------------------------------------------
# Connectivity and neighborhoods
# ----------------------------------------------------------------------

def is_connected(h: Hypergraph) -> bool:
    """True iff every vertex is covered and the incidence structure is connected.

    The degenerate single-vertex hypergraph with zero edges counts as
    connected; any isolated vertex with n >= 2 makes the hypergraph
    disconnected.
    """
    if h.n <= 1:
        return True
    inc = h.vertex_instances()
    if any(not lst for lst in inc):
        return False
    seen_v = [False] * h.n
    seen_e = [False] * len(h.edges)
    stack = [0]
    seen_v[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for i in inc[v]:
            if seen_e[i]:
                continue
            seen_e[i] = True
            for u in h.edges[i]:
                if not seen_v[u]:
                    seen_v[u] = True
                    count += 1
                    stack.append(u)
    return count == h.n


def hyperedge_neighborhood(h: Hypergraph, s: Iterable[int]) -> list[int]:
    """Instance ids of all edges meeting the vertex set ``s``."""
    sset = set(s)
    return [i for i, e in enumerate(h.edges) if sset.intersection(e)]


def induced_subhypergraph(
    h: Hypergraph, w: Iterable[int]
) -> tuple[Hypergraph, dict[int, int]]:
    """Sub-hypergraph on vertex set ``w``, keeping only fully contained instances.

    Vertices are relabeled 0..|w|-1 order-preservingly; the mapping
    old -> new is returned alongside.  Multiplicities are preserved.
    """
    keep = sorted(set(w))
    if keep and (keep[0] < 0 or keep[-1] >= h.n):
        raise HypergraphError("induced vertex set out of range")
    relabel = {v: i for i, v in enumerate(keep)}
    wset = set(keep)
    edges = [
        tuple(sorted(relabel[v] for v in e))
        for e in h.edges
        if wset.issuperset(e)
    ]
    return Hypergraph.build(len(keep), h.r, edges), relabel


def connected_components(h: Hypergraph) -> list[list[int]]:
    """Vertex sets of the connected components (isolated vertices are singletons)."""
    inc = h.vertex_instances()
    seen = [False] * h.n
    comps = []
    for start in range(h.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            v = stack.pop()
            for i in inc[v]:
                for u in h.edges[i]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
        comps.append(sorted(comp))
    return comps


# ----------------------------------------------------------------------
# Exact canonical form (multi-hypergraph isomorphism)
# ----------------------------------------------------------------------

class CanonicalSizeError(HypergraphError):
    """Raised when a hypergraph exceeds the exact-canonicalization limit."""


def _refine(edges: tuple[tuple[int, ...], ...], colors: dict[int, int]) -> dict[int, int]:
    """Iterated color refinement over the vertex-edge incidence structure."""
    inc: dict[int, list[int]] = {v: [] for v in colors}
    for i, e in enumerate(edges):
        for v in e:
            inc[v].append(i)
    while True:
        edge_sig = [tuple(sorted(colors[v] for v in e)) for e in edges]
        sigs = {
            v: (colors[v], tuple(sorted(edge_sig[i] for i in inc[v])))
            for v in colors
        }
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
        new_colors = {v: ranking[sigs[v]] for v in colors}
        if len(set(new_colors.values())) == len(set(colors.values())):
            return new_colors
        colors = new_colors


def _color_classes(colors: dict[int, int]) -> list[list[int]]:
    by_color: dict[int, list[int]] = {}
    for v, c in colors.items():
        by_color.setdefault(c, []).append(v)
    return [sorted(by_color[c]) for c in sorted(by_color)]


def _interchangeable(cls: list[int], edges: tuple[tuple[int, ...], ...]) -> bool:
    """A class whose vertices are all-or-none in every edge can be ordered freely."""
    cset = set(cls)
    for e in edges:
        hits = cset.intersection(e)
        if hits and len(hits) != len(cset):
            return False
    return True


def canonical_form(
    h: Hypergraph, *, n_limit: int = CANONICAL_N_LIMIT
) -> tuple[bytes, tuple[int, ...]]:
    """Canonical byte string plus a relabeling (old -> new) achieving it.

    Two hypergraphs get identical strings iff they are isomorphic as
    multi-hypergraphs.  Deterministic.  Raises CanonicalSizeError above
    the configured exact limit.
    """
    if h._canon is not None and n_limit >= h.n:
        return h._canon
    if h.n > n_limit:
        raise CanonicalSizeError(
            f"exact canonicalization limited to n <= {n_limit}, got n = {h.n}"
        )

    support = h.support()
    isolated = [v for v in range(h.n) if v not in set(support)]
    edges = h.edges

    if not support:
        pi = tuple(range(h.n))
        code = _encode(h.n, h.r, ())
        h._canon = (code, pi)
        return h._canon

    best: list[tuple[tuple[tuple[int, ...], ...], dict[int, int]] | None] = [None]
    leaves = [0]

    def descend(colors: dict[int, int]) -> None:
        colors = _refine(edges, colors)
        classes = _color_classes(colors)
        target = None
        for cls in classes:
            if len(cls) > 1:
                if _interchangeable(cls, edges):
                    continue
                target = cls
                break
        if target is None:
            leaves[0] += 1
            if leaves[0] > _CANONICAL_LEAF_BUDGET:
                raise CanonicalSizeError("canonical search budget exceeded")
            # Flatten: classes ordered by color, input order inside
            # interchangeable classes.
            label = {}
            pos = 0
            for cls in classes:
                for v in cls:
                    label[v] = pos
                    pos += 1
            relabeled = tuple(
                sorted(tuple(sorted(label[v] for v in e)) for e in edges)
            )
            if best[0] is None or relabeled < best[0][0]:
                best[0] = (relabeled, label)
            return
        # Individualize each candidate of the first genuinely split class.
        for v in target:
            child = dict(colors)
            for u in child:
                child[u] = child[u] * 2 + 1
            child[v] -= 1
            descend(child)

    descend({v: 0 for v in support})
    assert best[0] is not None
    relabeled_edges, label = best[0]

    pi_list = [0] * h.n
    for v, p in label.items():
        pi_list[v] = p
    for offset, v in enumerate(isolated):
        pi_list[v] = len(support) + offset
    pi = tuple(pi_list)
    code = _encode(h.n, h.r, relabeled_edges)
    h._canon = (code, pi)
    return h._canon


def _encode(n: int, r: int, relabeled_edges: tuple[tuple[int, ...], ...]) -> bytes:
    parts = [f"{n} {r}"]
    parts.extend(",".join(map(str, e)) for e in relabeled_edges)
    return ";".join(parts).encode("ascii")


def canonical_key(h: Hypergraph, *, n_limit: int = CANONICAL_N_LIMIT) -> bytes:
    return canonical_form(h, n_limit=n_limit)[0]


def from_canonical_string(s: str | bytes) -> Hypergraph:
    """Decode the canonical encoding back into a hypergraph."""
    if isinstance(s, bytes):
        s = s.decode("ascii")
    parts = s.split(";")
    n_str, r_str = parts[0].split()
    edges = [[int(v) for v in p.split(",")] for p in parts[1:] if p]
    return Hypergraph.build(int(n_str), int(r_str), edges)


def relabel(h: Hypergraph, pi: dict[int, int] | tuple[int, ...]) -> Hypergraph:
    """Apply a vertex permutation (old -> new) to all instances."""
    if isinstance(pi, dict):
        mapping = pi
    else:
        mapping = {v: pi[v] for v in range(h.n)}
    edges = [tuple(sorted(mapping[v] for v in e)) for e in h.edges]
    return Hypergraph.build(h.n, h.r, edges)


def canonical_relabeled(h: Hypergraph, *, n_limit: int = CANONICAL_N_LIMIT) -> Hypergraph:
    """The canonically labeled representative of h's isomorphism class."""
    _, pi = canonical_form(h, n_limit=n_limit)
    return relabel(h, pi)


def are_isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    if a.n != b.n or a.r != b.r or len(a.edges) != len(b.edges):
        return False
    return canonical_key(a) == canonical_key(b)


# ----------------------------------------------------------------------
# Iteration helpers
# ----------------------------------------------------------------------

def all_vertex_subsets(n: int, min_size: int = 0) -> Iterator[tuple[int, ...]]:
    """All subsets of 0..n-1 with at least ``min_size`` elements (n <= ~20)."""
    for mask in range(1 << n):
        if mask.bit_count() >= min_size:
            yield tuple(v for v in range(n) if mask >> v & 1)
