"""Simple undirected graphs with bit-packed adjacency rows.

Vertices are dense integers ``0..n-1``; ``adj[v]`` is a Python int whose
set bits are the neighbours of ``v``.  Neighbourhood intersections,
degreesds and subset questions are then single integer operations, which
is what the exact solvers in this package lean on.

Interchange formats:

* graph6, short form only (``n <= 62``), bit-exact;
* plain edge list: an ``"n m"`` header line, then one ``"u v"`` line per
  edge, 0-indexed;
* DIMACS ``.col``: ``"p edge n m"`` then ``"e u v"`` lines, 1-indexed.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

ISO_SIZE_CAP = 64
GRAPH6_MAX_N = 62
_GRAPH6_HEADER = ">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Instances come from the module constructors (``from_edges``,
    ``complement``, ...), which enforce symmetry and loop-freeness.
    Treat graphs as read-only afterwards; every query here is safe to
    call from any number of threads.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as ordered pairs ``(u, v)`` with ``u < v``."""
        for u in range(self.n):
            for v in bits((self.adj[u] >> (u + 1)) << (u + 1)):
                yield u, v

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValueError(f"vertex {v!r} is not an integer")
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range 0..{n - 1}")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse.

    Rejects self-loops and out-of-range endpoints, naming the offending
    pair.
    """
    if n < 0:
        raise ValueError(f"vertex count must be >= 0, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed")
        for x in (u, v):
            if not 0 <= x < n:
                raise ValueError(f"edge ({u}, {v}) has endpoint out of range 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place ``h`` next to ``g``, relabelling h's vertices by ``+g.n``."""
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, adj)


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph on ``members``, relabelled in ascending order."""
    keep = sorted(set(members))
    for v in keep:
        _check_vertex(v, g.n)
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for i, v in enumerate(keep):
        row = 0
        for u in keep:
            if g.adj[v] >> u & 1:
                row |= 1 << index[u]
        adj[i] = row
    return Graph(len(keep), adj)


def is_stable_set(g: Graph, members: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``members``."""
    chosen = set(members)
    for v in chosen:
        _check_vertex(v, g.n)
    mask = 0
    for v in chosen:
        mask |= 1 << v
    return all(not (g.adj[v] & mask) for v in chosen)


# -- isomorphism ------------------------------------------------------


def _joint_refinement(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    """Degree-based colour refinement over both graphs in one label space."""
    cg = [g.degree(v) for v in range(g.n)]
    ch = [h.degree(v) for v in range(h.n)]
    classes = len(set(cg) | set(ch))
    for _ in range(max(g.n, h.n)):
        sg = [(cg[v], tuple(sorted(cg[u] for u in g.neighbors(v)))) for v in range(g.n)]
        sh = [(ch[v], tuple(sorted(ch[u] for u in h.neighbors(v)))) for v in range(h.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sg) | set(sh)))}
        cg = [ranks[s] for s in sg]
        ch = [ranks[s] for s in sh]
        if len(ranks) == classes:
            break
        classes = len(ranks)
    return cg, ch


def is_isomorphic_small(g: Graph, h: Graph) -> list[int] | None:
    """Vertex bijection g -> h preserving adjacency, or None.

    Backtracking with degree-sequence and refined neighbourhood-class
    pruning; capped at 64 vertices (raises beyond the cap rather than
    guessing).
    """
    if g.n > ISO_SIZE_CAP or h.n > ISO_SIZE_CAP:
        raise ValueError(f"isomorphism search capped at {ISO_SIZE_CAP} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    n = g.n
    if n == 0:
        return []
    cg, ch = _joint_refinement(g, h)
    if sorted(cg) != sorted(ch):
        return None
    cand = []
    for v in range(n):
        m = 0
        for w in range(n):
            if ch[w] == cg[v]:
                m |= 1 << w
        cand.append(m)

    gadj, hadj = g.adj, h.adj
    phi = [-1] * n
    mapped_mask = 0
    used = 0

    def choose() -> int:
        best, best_c = -1, -1
        for v in range(n):
            if phi[v] >= 0:
                continue
            c = (gadj[v] & mapped_mask).bit_count()
            if c > best_c:
                best, best_c = v, c
        return best

    def extend(depth: int) -> bool:
        nonlocal mapped_mask, used
        if depth == n:
            return True
        v = choose()
        m = cand[v] & ~used
        for u in bits(gadj[v] & mapped_mask):
            m &= hadj[phi[u]]
        for u in bits(~gadj[v] & mapped_mask & ~(1 << v)):
            m &= ~hadj[phi[u]]
        for w in bits(m):
            phi[v] = w
            mapped_mask |= 1 << v
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
            mapped_mask &= ~(1 << v)
            phi[v] = -1
        return False

    return list(phi) if extend(0) else None


# -- graph6 -----------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the first offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


def encode_graph6(g: Graph) -> str:
    """Short-form graph6: size byte, then upper-triangle bits in column order."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(s: str) -> Graph:
    """Inverse of ``encode_graph6``.

    Tolerates a leading ``>>graph6<<`` header and nothing else: stray
    whitespace, bad lengths and nonzero padding bits are all rejected
    with the byte offset of the problem.
    """
    base = 0
    if s.startswith(_GRAPH6_HEADER):
        base = len(_GRAPH6_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for pos, ch in enumerate(s):
        o = ord(ch)
        if o < 63 or o > 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 alphabet", base + pos)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", base)
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} body bytes for n={n}, got {len(body)}",
            base + 1 + min(need, len(body)),
        )
    adj = [0] * n
    bit_idx = 0
    i, j = 0, 1
    for pos, ch in enumerate(body):
        val = ord(ch) - 63
        for t in range(5, -1, -1):
            bit = val >> t & 1
            if bit_idx < total:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bit", base + 1 + pos)
            bit_idx += 1
    return Graph(n, adj)


# -- edge-list and DIMACS text ----------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"edge-list header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(rows) - 1} lines")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, edges)


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("c"):
            continue
        parts = ln.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError("multiple 'p' lines in DIMACS input")
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"bad problem line {ln!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ValueError(f"bad edge line {ln!r}")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ValueError(f"unrecognized DIMACS line {ln!r}")
    if n is None:
        raise ValueError("DIMACS input has no 'p edge' line")
    return from_edges(n, edges)


def parse_graph_text(text: str) -> Graph:
    """Sniff the format (DIMACS / edge list / graph6) and parse."""
    rows = [ln for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty graph input")
    if any(ln.strip().split()[0] in ("p", "e") for ln in rows):
        return parse_dimacs(text)
    head = rows[0].strip().split()
    if len(head) == 2 and all(p.lstrip("-").isdigit() for p in head):
        return parse_edge_list(text)
    if len(rows) == 1 and len(head) == 1:
        return decode_graph6(head[0])
    raise ValueError("could not recognize graph format (graph6, edge list, or DIMACS)")


# -- canned small graphs ----------------------------------------------


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycles need at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
