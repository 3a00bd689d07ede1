"""Deletion-distance graphs: construction, degree statistics, independent
sets, and explicit clique / chordless-cycle witnesses.

Vertices of the full graph for parameters (s, n) are all length-n binary
words; two words are adjacent when their deletion distance is at most 2s,
equivalently when they share a common length-(n-s) subsequence.  A layer
restricts the vertex set to a single Hamming weight.

Edges are generated by expanding, for every length-(n-s) word z, the
clique formed by the supersequences of z; this is equivalent to the
pairwise-distance definition and much cheaper.  The equivalence itself is
exercised by the test suite.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

from .bitstring import (
    BitString,
    MAX_LENGTH,
    _insert_values,
    insert_all,
    weight,
)
from .counting import weighted_insertion_count

MAX_FULL_N = 16
MAX_LAYER_N = 22
DEFAULT_NODE_BUDGET = 10**8


class CapacityError(ValueError):
    """Raised when a request exceeds the resource guardrails."""


class BudgetExceededError(RuntimeError):
    """Search node budget exhausted; ``best`` holds the incumbent set."""

    def __init__(self, message: str, best: Set[BitString]):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class GraphParams:
    s: int
    n: int
    layer: Optional[int] = None


class ConfusabilityGraph:
    """Explicit vertex list plus per-vertex neighbor bitmasks.

    Immutable after construction.  Vertices are sorted ascending by their
    value as binary numerals; all deterministic tie-breaks derive from
    this ordering.
    """

    def __init__(self, params: GraphParams, vertices: Tuple[BitString, ...],
                 adjacency: Tuple[int, ...]):
        self.params = params
        self.vertices = vertices
        self.adjacency = adjacency
        self._index: Dict[BitString, int] = {v: i for i, v in enumerate(vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def index_of(self, x: BitString) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"{x} is not a vertex of this graph") from None

    def degree(self, x: BitString) -> int:
        return self.adjacency[self.index_of(x)].bit_count()

    def neighbors(self, x: BitString) -> Set[BitString]:
        mask = self.adjacency[self.index_of(x)]
        return {self.vertices[i] for i in _iter_bits(mask)}

    def has_edge(self, x: BitString, y: BitString) -> bool:
        return bool(self.adjacency[self.index_of(x)] >> self.index_of(y) & 1)

    def edges(self) -> Iterator[Tuple[BitString, BitString]]:
        for i, mask in enumerate(self.adjacency):
            for j in _iter_bits(mask):
                if j > i:
                    yield self.vertices[i], self.vertices[j]


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(s: int, n: int, layer: Optional[int] = None) -> ConfusabilityGraph:
    """Build the deletion-distance graph for (s, n), optionally one weight layer."""
    if not 0 <= s <= n:
        raise ValueError(f"require 0 <= s <= n, got s={s}, n={n}")
    if layer is None:
        if n > MAX_FULL_N:
            raise CapacityError(f"full graph limited to n <= {MAX_FULL_N}, got n={n}")
        vert_values = list(range(1 << n))
        index = {v: v for v in vert_values}
    else:
        if not 0 <= layer <= n:
            raise ValueError(f"layer weight {layer} out of range 0..{n}")
        if n > MAX_LAYER_N:
            raise CapacityError(f"layer graph limited to n <= {MAX_LAYER_N}, got n={n}")
        vert_values = sorted(
            sum(1 << (n - 1 - i) for i in pos)
            for pos in itertools.combinations(range(n), layer)
        )
        index = {v: i for i, v in enumerate(vert_values)}

    adj = [0] * len(vert_values)
    m = n - s
    for zv in range(1 << m):
        if layer is not None:
            zw = zv.bit_count()
            if not layer - s <= zw <= layer:
                continue
        members = _insert_values(zv, m, s)
        if layer is not None:
            idxs = [index[v] for v in members if v.bit_count() == layer]
        else:
            idxs = list(members)
        if len(idxs) < 2:
            continue
        mask = 0
        for i in idxs:
            mask |= 1 << i
        for i in idxs:
            adj[i] |= mask
    for i in range(len(adj)):
        adj[i] &= ~(1 << i)

    vertices = tuple(BitString.from_value(v, n) for v in vert_values)
    return ConfusabilityGraph(GraphParams(s, n, layer), vertices, tuple(adj))


def degree_stats(g: ConfusabilityGraph) -> Tuple[int, Fraction, int]:
    """(max degree, exact average degree, edge count)."""
    degrees = [mask.bit_count() for mask in g.adjacency]
    if not degrees:
        return 0, Fraction(0), 0
    edge_count = sum(degrees) // 2
    return max(degrees), Fraction(2 * edge_count, len(degrees)), edge_count


def layer_avg_degree_bound(s: int, n: int, k: int) -> Fraction:
    """Exact rational upper bound on the average degree of one weight layer."""
    if not 0 <= s <= n:
        raise ValueError(f"require 0 <= s <= n, got s={s}, n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"require 0 <= k <= n, got k={k}, n={n}")
    total = 0
    for r in range(s + 1):
        if not 0 <= k - r <= n - s:
            continue
        count = weighted_insertion_count(s, r, n, k)
        total += math.comb(n - s, k - r) * (count * (count - 1) // 2)
    return Fraction(2 * total, math.comb(n, k))


def verify_independent(g: ConfusabilityGraph, vs: Iterable[BitString]) -> bool:
    """True iff no edge of g joins two members of vs."""
    idxs = [g.index_of(v) for v in vs]
    mask = 0
    for i in idxs:
        mask |= 1 << i
    return all(g.adjacency[i] & mask == 0 for i in idxs)


def verify_coloring(g: ConfusabilityGraph, coloring: Mapping[BitString, int]) -> bool:
    """True iff the coloring is total on g's vertices and proper."""
    try:
        colors = [coloring[v] for v in g.vertices]
    except KeyError as missing:
        raise ValueError(f"coloring is missing vertex {missing.args[0]}") from None
    for i, mask in enumerate(g.adjacency):
        ci = colors[i]
        for j in _iter_bits(mask):
            if j > i and colors[j] == ci:
                return False
    return True


def greedy_mis(g: ConfusabilityGraph) -> Set[BitString]:
    """Maximal independent set via the minimum-degree greedy heuristic.

    Ties in minimum degree go to the lexicographically smallest vertex.
    The result meets the Turan guarantee |V| / (avg degree + 1).
    """
    adj = g.adjacency
    alive = (1 << len(adj)) - 1
    chosen: List[int] = []
    while alive:
        best_i = -1
        best_d = -1
        for i in _iter_bits(alive):
            d = (adj[i] & alive).bit_count()
            if best_i < 0 or d < best_d:
                best_i, best_d = i, d
        chosen.append(best_i)
        alive &= ~(adj[best_i] | (1 << best_i))
    return {g.vertices[i] for i in chosen}


def exact_mis(g: ConfusabilityGraph,
              node_budget: int = DEFAULT_NODE_BUDGET) -> Set[BitString]:
    """Maximum independent set by branch and bound.

    The search is delegated to the HiGHS branch-and-bound engine through
    scipy (one binary variable per vertex, one constraint per edge, zero
    optimality gap), which subsumes the greedy-lower-bound / cover-upper-
    bound scheme while staying deterministic.  If the search tree exceeds
    ``node_budget`` nodes, :class:`BudgetExceededError` is raised carrying
    the best set found so far (the greedy set if the engine has none).
    """
    import numpy as np
    from scipy import sparse
    from scipy.optimize import Bounds, LinearConstraint, milp

    adj = g.adjacency
    nverts = len(adj)
    if nverts == 0:
        return set()

    rows: List[int] = []
    cols: List[int] = []
    nedges = 0
    for i in range(nverts):
        for j in _iter_bits(adj[i]):
            if j > i:
                rows.extend((nedges, nedges))
                cols.extend((i, j))
                nedges += 1
    if nedges == 0:
        return set(g.vertices)

    matrix = sparse.csc_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(nedges, nverts)
    )
    result = milp(
        c=-np.ones(nverts),
        constraints=LinearConstraint(matrix, -np.inf, 1),
        integrality=np.ones(nverts),
        bounds=Bounds(0, 1),
        options={"node_limit": node_budget, "mip_rel_gap": 0.0},
    )
    if result.x is not None:
        found = {g.vertices[i] for i in range(nverts) if result.x[i] > 0.5}
    else:
        found = set()
    if result.status != 0:
        incumbent = found if len(found) else greedy_mis(g)
        raise BudgetExceededError(
            f"node budget {node_budget} exhausted; incumbent has {len(incumbent)} vertices",
            incumbent,
        )
    return found


@dataclass(frozen=True)
class CliqueWitness:
    """An explicit pairwise-adjacent vertex set with its construction data."""

    kind: str  # "substring" | "layer-substring" | "segment"
    vertices: Tuple[BitString, ...]
    params: Mapping[str, object] = field(default_factory=dict)
    center: Optional[BitString] = None


def substring_clique(z: BitString, s: int,
                     layer: Optional[int] = None) -> CliqueWitness:
    """The clique of all supersequences of z (optionally restricted to a layer)."""
    n = len(z) + s
    if n > MAX_LENGTH:
        raise ValueError(f"length {n} exceeds maximum {MAX_LENGTH}")
    members = insert_all(z, s)
    if layer is None:
        return CliqueWitness(
            kind="substring",
            vertices=tuple(sorted(members)),
            params={"z": z, "s": s},
        )
    r = layer - weight(z)
    if not 0 <= r <= s:
        raise ValueError(
            f"layer weight {layer} unreachable from a weight-{weight(z)} base with {s} insertions"
        )
    members = {y for y in members if weight(y) == layer}
    return CliqueWitness(
        kind="layer-substring",
        vertices=tuple(sorted(members)),
        params={"z": z, "s": s, "layer": layer},
    )


def _string_from_runs(runs: Iterable[int]) -> BitString:
    bits: List[int] = []
    b = 0
    for rl in runs:
        bits.extend([b] * rl)
        b ^= 1
    return BitString(bits)


def segment_clique(l: int, k: int, b: int, c: int) -> CliqueWitness:
    """Clique built from run-length segments around an alternating center.

    The center word has k segments of l unit runs each, separated by runs
    of length 3.  Members replace b segments by the length-(l+1) variants
    (one doubled run) and c segments by the length-(l-1) variants, so each
    member is within deletion distance b+c of the center and the members
    form a clique for b+c deletions.
    """
    if l < 4:
        raise ValueError(f"segment length l must be at least 4, got {l}")
    if b < 0 or c < 0:
        raise ValueError("segment counts b and c must be nonnegative")
    if k < 1 or b + c > k:
        raise ValueError(f"require 1 <= k and b + c <= k, got k={k}, b={b}, c={c}")
    m = k * (l + 3) - 3
    if max(m, m + b - c) > MAX_LENGTH:
        raise CapacityError(f"string length {max(m, m + b - c)} exceeds {MAX_LENGTH}")

    seg_a = (1,) * l
    segs_b = [tuple(2 if j == i else 1 for j in range(l)) for i in range(l)]
    segs_c = [tuple(2 if j == i else 1 for j in range(l - 2)) for i in range(l - 2)]
    sep = (3,)

    def assemble(segments: List[Tuple[int, ...]]) -> BitString:
        runs: List[int] = []
        for idx, seg in enumerate(segments):
            if idx:
                runs.extend(sep)
            runs.extend(seg)
        return _string_from_runs(runs)

    center = assemble([seg_a] * k)
    members: List[BitString] = []
    for pos_b in itertools.combinations(range(k), b):
        remaining = [i for i in range(k) if i not in pos_b]
        for pos_c in itertools.combinations(remaining, c):
            slots_b = list(pos_b)
            slots_c = list(pos_c)
            for choice_b in itertools.product(range(l), repeat=b):
                for choice_c in itertools.product(range(l - 2), repeat=c):
                    segments = [seg_a] * k
                    for slot, ch in zip(slots_b, choice_b):
                        segments[slot] = segs_b[ch]
                    for slot, ch in zip(slots_c, choice_c):
                        segments[slot] = segs_c[ch]
                    members.append(assemble(segments))
    return CliqueWitness(
        kind="segment",
        vertices=tuple(sorted(members)),
        params={"l": l, "k": k, "b": b, "c": c},
        center=center,
    )


def verify_clique(g: ConfusabilityGraph, vs: Iterable[BitString]) -> bool:
    """True iff vs is a set of pairwise-adjacent vertices of g."""
    idxs = [g.index_of(v) for v in vs]
    if len(set(idxs)) != len(idxs):
        return False
    mask = 0
    for i in idxs:
        mask |= 1 << i
    return all(g.adjacency[i] & mask == mask & ~(1 << i) for i in idxs)


def induced_cycle(s: int, cycle_len: int) -> List[BitString]:
    """A chordless cycle of the given length for s deletions.

    Vertices have length (cycle_len - 2) * s + 1; consecutive pairs are
    adjacent and no other pair is.
    """
    if s < 1:
        raise ValueError(f"s must be at least 1, got {s}")
    if cycle_len < 3:
        raise ValueError(f"cycle length must be at least 3, got {cycle_len}")
    n = (cycle_len - 2) * s + 1
    if n > MAX_LENGTH:
        raise CapacityError(f"string length {n} exceeds {MAX_LENGTH}")
    xs = [
        BitString("0" * (s * i) + "1" * (s + 1) + "0" * (s * (cycle_len - 3 - i)))
        for i in range(cycle_len - 2)
    ]
    tail_one = BitString("0" * ((cycle_len - 2) * s) + "1")
    head_one = BitString("1" + "0" * ((cycle_len - 2) * s))
    return xs + [tail_one, head_one]


def imperfectness_witness(s: int, n: int) -> List[BitString]:
    """Five length-n words inducing a chordless 5-cycle for s deletions."""
    if s < 1:
        raise ValueError(f"s must be at least 1, got {s}")
    if n < 3 * s + 1:
        raise ValueError(f"require n >= 3s + 1 = {3 * s + 1}, got n={n}")
    if n > MAX_LENGTH:
        raise CapacityError(f"string length {n} exceeds {MAX_LENGTH}")
    pad = BitString("0" * (n - (3 * s + 1)))
    return [pad + v for v in induced_cycle(s, 5)]
