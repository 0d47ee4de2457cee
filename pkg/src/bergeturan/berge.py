"""Exact Berge path and Berge cycle detection.

A Berge path of length k is k+1 distinct vertices v_1..v_{k+1} together
with k distinct edge instances e_1..e_k such that {v_i, v_{i+1}} is
contained in e_i for every i.  A Berge cycle of length k is k distinct
vertices and k distinct instances with the containments read cyclically.

Detection walks vertex sequences depth-first while instance assignment
is delegated to an incremental bipartite matching between consecutive
vertex pairs ("slots") and the instances containing them.  Extending the
sequence is allowed only when the matching can be augmented, i.e. only
when Hall's condition still holds for the slots chosen so far.  This
never branches over interchangeable instances, which keeps sunflower and
high-multiplicity inputs fast, and it is exact: a full-length sequence
with a complete matching is precisely a Berge witness.

All functions are pure; results are deterministic and independent of
traversal order (witness identity is not part of the contract).
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph


@dataclass(frozen=True)
class BergeWitness:
    kind: str  # "path" | "cycle"
    vertices: tuple[int, ...]
    edge_instances: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "edge_instances": list(self.edge_instances),
        }


def verify_witness(h: Hypergraph, w: BergeWitness) -> bool:
    """Check a witness against all defining invariants.

    Raises ValueError on instance ids outside 0..len(edges)-1; any other
    defect simply yields False.
    """
    for i in w.edge_instances:
        if i < 0 or i >= len(h.edges):
            raise ValueError(f"edge instance id {i} out of range")
    k = len(w.edge_instances)
    if len(set(w.edge_instances)) != k:
        return False
    if len(set(w.vertices)) != len(w.vertices):
        return False
    if any(v < 0 or v >= h.n for v in w.vertices):
        return False
    if w.kind == "path":
        if k < 1 or len(w.vertices) != k + 1:
            return False
        pairs = [(w.vertices[i], w.vertices[i + 1]) for i in range(k)]
    elif w.kind == "cycle":
        if k < 2 or len(w.vertices) != k:
            return False
        pairs = [(w.vertices[i], w.vertices[(i + 1) % k]) for i in range(k)]
    else:
        return False
    for (u, v), inst in zip(pairs, w.edge_instances):
        e = h.edges[inst]
        if u not in e or v not in e:
            return False
    return True


# ----------------------------------------------------------------------
# Incremental slot-instance matching
# ----------------------------------------------------------------------

class _PairMatcher:
    """Maintains a matching from pair slots to distinct edge instances."""

    __slots__ = ("pair_insts", "slots", "match", "owner")

    def __init__(self, h: Hypergraph):
        pair_insts: dict[tuple[int, int], list[int]] = {}
        for i, e in enumerate(h.edges):
            for a in range(len(e)):
                for b in range(a + 1, len(e)):
                    pair_insts.setdefault((e[a], e[b]), []).append(i)
        self.pair_insts = pair_insts
        self.slots: list[tuple[int, int]] = []
        self.match: list[int] = []  # slot -> instance
        self.owner: dict[int, int] = {}  # instance -> slot

    def candidates(self, u: int, v: int) -> list[int]:
        key = (u, v) if u < v else (v, u)
        return self.pair_insts.get(key, [])

    def push(self, u: int, v: int) -> bool:
        """Add slot for pair {u, v}; augment; undo and refuse if impossible."""
        slot = len(self.slots)
        self.slots.append((u, v))
        self.match.append(-1)
        if self._augment(slot, set()):
            return True
        self.slots.pop()
        self.match.pop()
        return False

    def pop(self) -> None:
        inst = self.match.pop()
        self.slots.pop()
        if inst >= 0:
            del self.owner[inst]

    def _augment(self, slot: int, visited: set[int]) -> bool:
        u, v = self.slots[slot]
        for inst in self.candidates(u, v):
            if inst in visited:
                continue
            visited.add(inst)
            holder = self.owner.get(inst)
            if holder is None or self._augment(holder, visited):
                self.owner[inst] = slot
                self.match[slot] = inst
                return True
        return False

    def assignment(self) -> tuple[int, ...]:
        return tuple(self.match)


def _adjacency(h: Hypergraph) -> list[list[int]]:
    """adj[v] = sorted vertices sharing at least one instance with v."""
    adj: list[set[int]] = [set() for _ in range(h.n)]
    for e in h.edges:
        for a in e:
            for b in e:
                if a != b:
                    adj[a].add(b)
    return [sorted(s) for s in adj]


# ----------------------------------------------------------------------
# Paths
# ----------------------------------------------------------------------

def contains_berge_path(
    h: Hypergraph, k: int, want_witness: bool = False
) -> bool | tuple[bool, BergeWitness | None]:
    """Exact decision for a Berge path of length k (k >= 1)."""
    if k < 1:
        raise ValueError(f"path length must be >= 1, got {k}")
    witness = _find_path(h, k)
    if want_witness:
        return (witness is not None), witness
    return witness is not None


def _find_path(h: Hypergraph, k: int) -> BergeWitness | None:
    if k > len(h.edges) or k + 1 > h.n:
        return None
    adj = _adjacency(h)
    matcher = _PairMatcher(h)
    seq: list[int] = []
    in_seq = [False] * h.n
    found: list[BergeWitness | None] = [None]

    def extend() -> bool:
        if len(seq) == k + 1:
            found[0] = BergeWitness("path", tuple(seq), matcher.assignment())
            return True
        last = seq[-1]
        for nxt in adj[last]:
            if in_seq[nxt]:
                continue
            if not matcher.push(last, nxt):
                continue
            seq.append(nxt)
            in_seq[nxt] = True
            if extend():
                return True
            in_seq[nxt] = False
            seq.pop()
            matcher.pop()
        return False

    for start in range(h.n):
        if not adj[start]:
            continue
        seq = [start]
        in_seq[start] = True
        if extend():
            return found[0]
        in_seq[start] = False
    return None


def longest_berge_path(h: Hypergraph) -> tuple[int, BergeWitness | None]:
    """Length of a longest Berge path together with one witness.

    The empty hypergraph yields (0, None).  The witness is the first one
    found in ascending vertex order at the maximal length.
    """
    if not h.edges:
        return 0, None
    cap = min(len(h.edges), h.n - 1)
    adj = _adjacency(h)
    matcher = _PairMatcher(h)
    best_len = [0]
    best_seq: list[tuple[tuple[int, ...], tuple[int, ...]] | None] = [None]
    seq: list[int] = []
    in_seq = [False] * h.n

    def extend() -> bool:
        depth = len(seq) - 1
        if depth > best_len[0]:
            best_len[0] = depth
            best_seq[0] = (tuple(seq), matcher.assignment())
            if depth == cap:
                return True
        last = seq[-1]
        for nxt in adj[last]:
            if in_seq[nxt]:
                continue
            if not matcher.push(last, nxt):
                continue
            seq.append(nxt)
            in_seq[nxt] = True
            stop = extend()
            in_seq[nxt] = False
            seq.pop()
            matcher.pop()
            if stop:
                return True
        return False

    for start in range(h.n):
        if not adj[start]:
            continue
        seq = [start]
        in_seq[start] = True
        stop = extend()
        in_seq[start] = False
        if stop:
            break
    if best_seq[0] is None:
        return 0, None
    vertices, insts = best_seq[0]
    return best_len[0], BergeWitness("path", vertices, insts)


# ----------------------------------------------------------------------
# Cycles
# ----------------------------------------------------------------------

def contains_berge_cycle(
    h: Hypergraph, k: int, mode: str = "exact", want_witness: bool = False
) -> bool | tuple[bool, BergeWitness | None]:
    """Exact decision for Berge cycles.

    mode "exact": a cycle of length exactly k; mode "at_least": any
    length >= k.  Requires k >= 2.
    """
    if k < 2:
        raise ValueError(f"cycle length must be >= 2, got {k}")
    if mode not in ("exact", "at_least"):
        raise ValueError(f"unknown cycle mode {mode!r}")
    witness = _find_cycle(h, k, mode)
    if want_witness:
        return (witness is not None), witness
    return witness is not None


def _find_cycle(h: Hypergraph, k: int, mode: str) -> BergeWitness | None:
    cap = min(len(h.edges), h.n)
    if k > cap:
        return None
    adj = _adjacency(h)
    matcher = _PairMatcher(h)
    found: list[BergeWitness | None] = [None]
    seq: list[int] = []
    in_seq = [False] * h.n

    def close() -> bool:
        # Rotation symmetry is killed by anchoring seq[0] as the minimum.
        if not matcher.push(seq[-1], seq[0]):
            return False
        found[0] = BergeWitness("cycle", tuple(seq), matcher.assignment())
        return True

    def extend() -> bool:
        length = len(seq)
        ready = length == k if mode == "exact" else length >= k
        if ready and close():
            return True
        if mode == "exact" and length == k:
            return False
        if length == cap:
            return False
        last = seq[-1]
        for nxt in adj[last]:
            if in_seq[nxt] or nxt <= seq[0]:
                continue
            if not matcher.push(last, nxt):
                continue
            seq.append(nxt)
            in_seq[nxt] = True
            if extend():
                return True
            in_seq[nxt] = False
            seq.pop()
            matcher.pop()
        return False

    for anchor in range(h.n):
        if not adj[anchor]:
            continue
        seq = [anchor]
        in_seq[anchor] = True
        if extend():
            return found[0]
        in_seq[anchor] = False
    return None
