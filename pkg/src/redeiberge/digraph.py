"""Labeled loop-free digraphs on the vertex set {1, ..., n}.

A digraph is stored as a tuple of out-neighbourhood bitmasks, one per
vertex: bit j of ``rows[i]`` is set exactly when (i+1, j+1) is an edge.
Vertices are always canonically numbered 1..n; restriction and
contraction relabel their result order-preservingly so that every
Digraph stays in this normal form and can be used as a dictionary key.

All values are immutable after construction and every operation is a
pure function returning a new Digraph.
"""

from __future__ import annotations

import random
from itertools import permutations
from typing import Iterable, Iterator

#: Hard cap on the vertex count.  Everything downstream (listing
#: enumeration, subset dynamic programs) is exponential in n, so larger
#: digraphs would be unusable anyway; the cap keeps bitmask widths sane.
MAX_VERTICES = 16

#: Generator kinds accepted by :func:`generate`.
GENERATOR_KINDS = (
    "empty",
    "complete",
    "path",
    "cycle",
    "standard_descent",
    "random",
    "random_tournament",
)


class DigraphFormatError(ValueError):
    """Raised when a digraph text file is malformed."""


class CapExceededError(ValueError):
    """Raised when an input is larger than the configured vertex cap."""


class Digraph:
    """A finite loop-free digraph on vertices 1..n.

    >>> X = Digraph(3, [(1, 2), (1, 3)])
    >>> sorted(X.edges)
    [(1, 2), (1, 3)]
    >>> X.has_edge(2, 1)
    False
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise CapExceededError(
                f"n={n} exceeds the supported maximum of {MAX_VERTICES} vertices"
            )
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop ({u}, {v}) is not allowed")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            rows[u - 1] |= 1 << (v - 1)
        self.n = n
        self._rows = tuple(rows)

    @classmethod
    def _from_rows(cls, n: int, rows: tuple[int, ...]) -> "Digraph":
        """Internal fast path: build from prevalidated adjacency rows."""
        self = object.__new__(cls)
        self.n = n
        self._rows = rows
        return self

    # -- basic queries -------------------------------------------------

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """The edge set as ordered pairs of 1-based vertex ids."""
        out = []
        for i, row in enumerate(self._rows):
            while row:
                low = row & -row
                out.append((i + 1, low.bit_length()))
                row ^= low
        return frozenset(out)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows)

    def has_edge(self, u: int, v: int) -> bool:
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        return bool(self._rows[u - 1] >> (v - 1) & 1)

    def out_neighbours(self, u: int) -> frozenset[int]:
        row = self._rows[u - 1]
        return frozenset(v + 1 for v in range(self.n) if row >> v & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {self.sorted_edges()})"

    # -- structural operations -----------------------------------------

    def complement(self) -> "Digraph":
        """The digraph with exactly the missing ordered pairs (no loops).

        >>> Digraph(2, [(1, 2)]).complement() == Digraph(2, [(2, 1)])
        True
        """
        n = self.n
        full = (1 << n) - 1
        rows = tuple((full & ~row & ~(1 << i)) for i, row in enumerate(self._rows))
        return Digraph._from_rows(n, rows)

    def opposite(self) -> "Digraph":
        """The digraph with every edge reversed."""
        n = self.n
        rows = [0] * n
        for i, row in enumerate(self._rows):
            while row:
                low = row & -row
                rows[low.bit_length() - 1] |= 1 << i
                row ^= low
        return Digraph._from_rows(n, tuple(rows))

    def restrict(self, subset: Iterable[int]) -> "Digraph":
        """The induced digraph on ``subset``, relabeled to 1..|subset|.

        The relabeling is the order-preserving bijection from the sorted
        subset (see :func:`relabeling`).
        """
        members = sorted(set(subset))
        for v in members:
            if not (1 <= v <= self.n):
                raise ValueError(f"vertex {v} outside 1..{self.n}")
        k = len(members)
        rows = [0] * k
        for new_i, old in enumerate(members):
            row = self._rows[old - 1]
            for new_j, old2 in enumerate(members):
                if row >> (old2 - 1) & 1:
                    rows[new_i] |= 1 << new_j
        return Digraph._from_rows(k, tuple(rows))

    def product(self, other: "Digraph") -> "Digraph":
        """Concatenation product: both digraphs side by side plus every
        edge from a left vertex to a right vertex.

        Left vertices keep their labels; right vertices shift up by
        ``self.n``.  The result has |E| + |E'| + n*n' edges.
        """
        n1, n2 = self.n, other.n
        if n1 + n2 > MAX_VERTICES:
            raise CapExceededError(
                f"product on {n1 + n2} vertices exceeds the maximum of {MAX_VERTICES}"
            )
        cross = ((1 << n2) - 1) << n1
        rows = [row | cross for row in self._rows]
        rows.extend(row << n1 for row in other._rows)
        return Digraph._from_rows(n1 + n2, tuple(rows))

    def __mul__(self, other: "Digraph") -> "Digraph":
        return self.product(other)

    def delete_edge(self, edge: tuple[int, int]) -> "Digraph":
        """Remove one directed edge.  The reverse edge is untouched."""
        u, v = edge
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) is not in the digraph")
        rows = list(self._rows)
        rows[u - 1] &= ~(1 << (v - 1))
        return Digraph._from_rows(self.n, tuple(rows))

    def contract_edge(self, edge: tuple[int, int]) -> "Digraph":
        """Contract the directed edge (u, v) into a single vertex.

        The merged vertex inherits the in-edges of u (w -> u becomes an
        edge into it) and the out-edges of v (v -> w becomes an edge out
        of it); edges not touching u or v are kept.  Note the asymmetry:
        contracting (u, v) and (v, u) generally give different digraphs.

        The merged vertex takes the label min(u, v) and the remaining
        vertices are compacted order-preservingly to 1..n-1.
        """
        u, v = edge
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) is not in the digraph")
        keep = [w for w in range(1, self.n + 1) if w not in (u, v)]
        merged = min(u, v)
        new_order = sorted(keep + [merged])
        index = {w: i for i, w in enumerate(new_order)}
        m = index[merged]
        k = self.n - 1
        rows = [0] * k
        for w1 in keep:
            for w2 in keep:
                if w1 != w2 and self.has_edge(w1, w2):
                    rows[index[w1]] |= 1 << index[w2]
        for w in keep:
            if self.has_edge(w, u):
                rows[index[w]] |= 1 << m
            if self.has_edge(v, w):
                rows[m] |= 1 << index[w]
        return Digraph._from_rows(k, tuple(rows))

    def underlying_graph(self) -> frozenset[tuple[int, int]]:
        """The set of unordered pairs {u, v} spanned by at least one edge,
        returned as (min, max) tuples."""
        pairs = set()
        for u, v in self.edges:
            pairs.add((u, v) if u < v else (v, u))
        return frozenset(pairs)

    def is_tournament(self) -> bool:
        """True when exactly one orientation of every vertex pair is present."""
        for u in range(1, self.n + 1):
            for v in range(u + 1, self.n + 1):
                if self.has_edge(u, v) == self.has_edge(v, u):
                    return False
        return True


def relabeling(subset: Iterable[int]) -> dict[int, int]:
    """The order-preserving map old-label -> new-label used by restrict."""
    return {old: i + 1 for i, old in enumerate(sorted(set(subset)))}


def canonical_form(digraph: Digraph) -> Digraph:
    """The relabeling of ``digraph`` with lexicographically minimal
    adjacency bitmask, used as the representative of its isomorphism
    class.

    The adjacency bitmask assigns bit i*n + j to the edge (i+1, j+1);
    the minimum is taken over all n! vertex relabelings, so this is
    usable for small digraphs only (the Hopf-algebra layer guards it
    with a cap).
    """
    n = digraph.n
    if n <= 1:
        return digraph
    edges0 = [(u - 1, v - 1) for u, v in digraph.edges]
    best = None
    from itertools import permutations

    for perm in permutations(range(n)):
        mask = 0
        for u, v in edges0:
            mask |= 1 << (perm[u] * n + perm[v])
        if best is None or mask < best:
            best = mask
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if best >> (i * n + j) & 1:
                rows[i] |= 1 << j
    return Digraph._from_rows(n, tuple(rows))


def _vertex_pairs(n: int) -> list[tuple[int, int]]:
    """All ordered pairs (u, v), u != v, in row-major order.  This fixed
    order defines the bit layout of :func:`all_digraphs` and the edge
    sampling order of the random generators."""
    return [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every labeled digraph on n vertices, all 2^(n(n-1)) of them, in a
    fixed deterministic order."""
    pairs = _vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            rows[u - 1] |= 1 << (v - 1)
            m ^= low
        yield Digraph._from_rows(n, tuple(rows))


def generate(kind: str, n: int, *, p: float = 0.5, seed: int | None = None) -> Digraph:
    """Build a standard or random digraph.

    Kinds: ``empty``, ``complete``, ``path`` (1 -> 2 -> ... -> n),
    ``cycle`` (the path plus n -> 1), ``standard_descent`` (edges (i, j)
    for all j < i, so descent sets coincide with ordinary permutation
    descents), ``random`` (each ordered pair kept with probability
    ``p``), ``random_tournament`` (one uniform orientation per pair).

    Random kinds require ``seed`` and are reproducible: the PRNG is the
    Mersenne Twister (``random.Random(seed)``) and pairs are drawn in
    row-major order, so a (kind, n, p, seed) triple pins the digraph
    bit-for-bit across machines.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if kind == "empty":
        return Digraph(n)
    if kind == "complete":
        return Digraph(n, _vertex_pairs(n))
    if kind == "path":
        return Digraph(n, [(i, i + 1) for i in range(1, n)])
    if kind == "cycle":
        edges = [(i, i + 1) for i in range(1, n)]
        if n >= 2:
            edges.append((n, 1))
        return Digraph(n, edges)
    if kind == "standard_descent":
        return Digraph(n, [(i, j) for i in range(1, n + 1) for j in range(1, i)])
    if kind in ("random", "random_tournament"):
        if seed is None:
            raise ValueError(f"generator kind {kind!r} requires a seed")
        rng = random.Random(seed)
        if kind == "random":
            edges = [pair for pair in _vertex_pairs(n) if rng.random() < p]
        else:
            edges = []
            for u in range(1, n + 1):
                for v in range(u + 1, n + 1):
                    edges.append((u, v) if rng.random() < 0.5 else (v, u))
        return Digraph(n, edges)
    raise ValueError(f"unknown generator kind {kind!r}")


# -- text format ---------------------------------------------------------
#
# Line 1: the integer n.  Each subsequent non-empty line that does not
# start with '#' declares one edge as "u v" (1-based, whitespace
# separated).  Duplicate edges and loops are errors.


def parse_digraph(text: str) -> Digraph:
    """Parse the digraph text format.  Errors carry the offending line number."""
    n = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise DigraphFormatError(
                    f"line {lineno}: expected the vertex count, got {line!r}"
                ) from None
            if n < 0:
                raise DigraphFormatError(f"line {lineno}: vertex count must be nonnegative")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DigraphFormatError(
                f"line {lineno}: expected 'u v', got {line!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DigraphFormatError(
                f"line {lineno}: edge endpoints must be integers, got {line!r}"
            ) from None
        if u == v:
            raise DigraphFormatError(f"line {lineno}: loop ({u}, {v}) not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise DigraphFormatError(
                f"line {lineno}: edge ({u}, {v}) outside vertex range 1..{n}"
            )
        if (u, v) in seen:
            raise DigraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise DigraphFormatError("empty input: missing vertex count line")
    return Digraph(n, edges)


def format_digraph(digraph: Digraph) -> str:
    """Render in the text format; parse_digraph(format_digraph(X)) == X."""
    lines = [str(digraph.n)]
    lines.extend(f"{u} {v}" for u, v in digraph.sorted_edges())
    return "\n".join(lines) + "\n"
