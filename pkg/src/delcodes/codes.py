"""Code constructions, verification, colorings, and finite-n bound calculators.

The single-deletion constructions are explicit: the classic weight-sum
residue codes, their per-layer refinement with a reduced modulus, and the
union-over-weights construction that stitches per-layer independent sets
into a code for any number of deletions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Set, Tuple

from .bitstring import BitString, deletion_distance, weight
from .counting import insertion_count
from .graph import (
    CliqueWitness,
    build_graph,
    exact_mis,
    greedy_mis,
    layer_avg_degree_bound,
    substring_clique,
    segment_clique,
)

LayerSolver = Callable[[int, int, int], Iterable[BitString]]


@dataclass(frozen=True)
class Code:
    """A set of equal-length codewords claiming pairwise deletion distance > 2s."""

    n: int
    s: int
    words: Tuple[BitString, ...]
    provenance: str


def make_code(n: int, s: int, words: Iterable[BitString], provenance: str) -> Code:
    uniq = sorted(set(words))
    for w in uniq:
        if len(w) != n:
            raise ValueError(f"codeword {w} does not have length {n}")
    return Code(n=n, s=s, words=tuple(uniq), provenance=provenance)


@dataclass
class Coloring:
    """A total color assignment for one deletion graph (or one weight layer)."""

    s: int
    n: int
    layer: Optional[int]
    assignment: Dict[BitString, int]
    num_colors: int


def _all_words(n: int) -> Iterable[BitString]:
    for v in range(1 << n):
        yield BitString.from_value(v, n)


def _layer_words(n: int, k: int) -> Iterable[BitString]:
    for pos in itertools.combinations(range(n), k):
        yield BitString.from_value(sum(1 << (n - 1 - i) for i in pos), n)


def vt_weight(x: BitString) -> int:
    """Position-weighted sum of the one symbols, mod n+1."""
    return sum((i + 1) * b for i, b in enumerate(x)) % (len(x) + 1)


def modified_vt_weight(x: BitString) -> int:
    """Position-weighted sum mod (max(k, n-k) + 1), a proper layer coloring."""
    n = len(x)
    k = weight(x)
    return sum((i + 1) * b for i, b in enumerate(x)) % (max(k, n - k) + 1)


def vt_code(n: int, residue: int) -> Code:
    """All length-n words whose weighted sum is the given residue mod n+1."""
    if not 0 <= residue <= n:
        raise ValueError(f"residue {residue} out of range 0..{n}")
    words = [x for x in _all_words(n) if vt_weight(x) == residue]
    return make_code(n, 1, words, "vt")


def layer_code(n: int, k: int) -> Code:
    """Largest color class of the reduced-modulus coloring of one weight layer.

    Ties between equally large classes go to the smallest color index.
    """
    if not 0 <= k <= n:
        raise ValueError(f"require 0 <= k <= n, got k={k}, n={n}")
    classes: Dict[int, List[BitString]] = {}
    for x in _layer_words(n, k):
        classes.setdefault(modified_vt_weight(x), []).append(x)
    best_color = min(classes, key=lambda col: (-len(classes[col]), col))
    return make_code(n, 1, classes[best_color], "layer")


def layer_color_solver(s: int, n: int, k: int) -> Set[BitString]:
    """Per-layer solver backed by the reduced-modulus coloring (s = 1 only)."""
    if s != 1:
        raise ValueError("the coloring-based layer solver handles s = 1 only")
    return set(layer_code(n, k).words)


def greedy_layer_solver(s: int, n: int, k: int) -> Set[BitString]:
    """Per-layer solver using the minimum-degree greedy heuristic."""
    return greedy_mis(build_graph(s, n, k))


def make_exact_layer_solver(node_budget: int = 10**8) -> LayerSolver:
    """Per-layer solver running the exact branch-and-bound search."""

    def solver(s: int, n: int, k: int) -> Set[BitString]:
        return exact_mis(build_graph(s, n, k), node_budget)

    return solver


def weight_partition_code(n: int, s: int, residue_a: int,
                          layer_solver: LayerSolver) -> Code:
    """Union of per-layer independent sets over weights congruent to a residue.

    Valid for s deletions because adjacent words differ in weight by at
    most s, so layers s+1 apart cannot interact.
    """
    if not 0 <= residue_a <= s:
        raise ValueError(f"residue {residue_a} out of range 0..{s}")
    words: Set[BitString] = set()
    for k in range(n + 1):
        if k % (s + 1) == residue_a:
            words.update(layer_solver(s, n, k))
    return make_code(n, s, words, "weight-partition")


def _k_star(n: int, a: int) -> int:
    # Integer closest to n/2 with the opposite parity from a; on a tie the
    # smaller candidate wins (the bound value is the same either way).
    candidates = sorted(range(n + 1), key=lambda k: (abs(2 * k - n), k))
    for k in candidates:
        if k % 2 != a % 2:
            return k
    raise ValueError(f"no admissible weight for n={n}, a={a}")


def weight_partition_size_bound(n: int, a: int) -> Fraction:
    """Single-deletion floor (2^n - C(n, k*)) / (n + 1) on the union code size."""
    if a not in (0, 1):
        raise ValueError(f"parity residue must be 0 or 1, got {a}")
    return Fraction(2**n - math.comb(n, _k_star(n, a)), n + 1)


def verify_code(c: Code) -> bool:
    """True iff every pair of codewords has deletion distance greater than 2s.

    Pairwise distance computation, pruned by the weight gap: words whose
    weights differ by more than s are already at distance above 2s.
    """
    by_weight: Dict[int, List[BitString]] = {}
    for w in c.words:
        by_weight.setdefault(weight(w), []).append(w)
    weights = sorted(by_weight)
    for k in weights:
        bucket = by_weight[k]
        others: List[BitString] = []
        for k2 in range(k + 1, k + c.s + 1):
            others.extend(by_weight.get(k2, ()))
        for i, x in enumerate(bucket):
            for y in bucket[i + 1:]:
                if deletion_distance(x, y) <= 2 * c.s:
                    return False
            for y in others:
                if deletion_distance(x, y) <= 2 * c.s:
                    return False
    return True


LayerColoringProvider = Callable[[int, int, int], Tuple[Dict[BitString, int], int]]


def _modified_vt_layer_coloring(s: int, n: int, k: int) -> Tuple[Dict[BitString, int], int]:
    assignment = {x: modified_vt_weight(x) for x in _layer_words(n, k)}
    return assignment, max(k, n - k) + 1


def two_stage_coloring(n: int, s: int,
                       layer_colorings: Optional[LayerColoringProvider] = None) -> Coloring:
    """Proper coloring of the full graph assembled from per-layer colorings.

    The color of a word is (weight mod s+1, layer color), flattened to a
    single index.  For s = 1 the reduced-modulus layer colorings are used
    by default; for general s a provider must be supplied.
    """
    if layer_colorings is None:
        if s != 1:
            raise ValueError("no layer coloring available for s != 1; supply a provider")
        layer_colorings = _modified_vt_layer_coloring
    per_layer = [layer_colorings(s, n, k) for k in range(n + 1)]
    width = max(nc for _, nc in per_layer)
    assignment: Dict[BitString, int] = {}
    for k, (colors, _) in enumerate(per_layer):
        base = (k % (s + 1)) * width
        for x, col in colors.items():
            assignment[x] = base + col
    return Coloring(s=s, n=n, layer=None, assignment=assignment,
                    num_colors=(s + 1) * width)


def levenshtein_lower_bound(n: int, s: int) -> Fraction:
    """Finite-n floor 2^(n+s) / (I(I-1) + 2^s) on the best code size."""
    if not 0 <= s <= n:
        raise ValueError(f"require 0 <= s <= n, got s={s}, n={n}")
    ins = insertion_count(s, n)
    return Fraction(2 ** (n + s), ins * (ins - 1) + 2**s)


def constant_weight_guarantee(n: int, s: int) -> Fraction:
    """Finite-n floor on the best weight-partition code size over residues."""
    if not 0 <= s <= n:
        raise ValueError(f"require 0 <= s <= n, got s={s}, n={n}")
    total = Fraction(0)
    for k in range(n + 1):
        total += Fraction(math.comb(n, k)) / (layer_avg_degree_bound(s, n, k) + 1)
    return total / (s + 1)


def constant_weight_guarantee_asymptotic(n: int, s: int) -> Fraction:
    """Reporting-only asymptotic form 2^(n+3s) / ((s+1) C(2s,s) C(n,s)^2)."""
    if not 0 <= s <= n:
        raise ValueError(f"require 0 <= s <= n, got s={s}, n={n}")
    return Fraction(2 ** (n + 3 * s),
                    (s + 1) * math.comb(2 * s, s) * math.comb(n, s) ** 2)


def penalty_ratio(s: int) -> Fraction:
    """Factor (s+1) C(2s,s) / 4^s separating the two finite-n guarantees."""
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    return Fraction((s + 1) * math.comb(2 * s, s), 4**s)


def chromatic_certificate(n: int, k: Optional[int] = None
                          ) -> Tuple[Coloring, CliqueWitness, int]:
    """Matching proper coloring and clique certifying the chromatic number.

    Single deletion only: n+1 colors for the full graph, max(k, n-k)+1 for
    a weight layer.
    """
    if k is None:
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        coloring = Coloring(
            s=1, n=n, layer=None,
            assignment={x: vt_weight(x) for x in _all_words(n)},
            num_colors=n + 1,
        )
        clique = substring_clique(BitString("0" * (n - 1)), 1)
        return coloring, clique, n + 1
    if k in (0, n):
        raise ValueError(f"layer k={k} of n={n} is a single vertex; no certificate needed")
    if not 0 < k < n:
        raise ValueError(f"require 1 <= k <= n-1, got k={k}, n={n}")
    chi = max(k, n - k) + 1
    coloring = Coloring(
        s=1, n=n, layer=k,
        assignment={x: modified_vt_weight(x) for x in _layer_words(n, k)},
        num_colors=chi,
    )
    if k >= n - k:
        base = BitString("0" * (n - 1 - k) + "1" * k)  # insert a zero: k+1 words
    else:
        base = BitString("0" * (n - k) + "1" * (k - 1))  # insert a one: n-k+1 words
    clique = substring_clique(base, 1, layer=k)
    return coloring, clique, chi


def chromatic_lower_bound(s: int, n: int) -> int:
    """Largest clique size available from the explicit constructions.

    Considers the supersequence clique of size I(s, n) and every feasible
    segment clique whose members have length n with b + c = s.
    """
    if s < 1:
        raise ValueError(f"s must be at least 1, got {s}")
    if s > n:
        return 2**n  # complete graph
    best = insertion_count(s, n)
    for b in range(s + 1):
        c = s - b
        total = n + 3 - b + c  # k (l + 3)
        for k in range(max(1, s), total // 7 + 1):
            if total % k:
                continue
            l = total // k - 3
            if l < 4:
                continue
            size = (math.comb(k, b) * math.comb(k - b, c)) * l**b * (l - 2) ** c
            best = max(best, size)
    return best


def best_segment_clique(s: int, n: int) -> Optional[CliqueWitness]:
    """The largest feasible segment clique with members of length n, if any."""
    best: Optional[Tuple[int, int, int, int, int]] = None
    for b in range(s + 1):
        c = s - b
        total = n + 3 - b + c
        for k in range(max(1, s), total // 7 + 1):
            if total % k:
                continue
            l = total // k - 3
            if l < 4:
                continue
            size = (math.comb(k, b) * math.comb(k - b, c)) * l**b * (l - 2) ** c
            if best is None or size > best[0]:
                best = (size, l, k, b, c)
    if best is None:
        return None
    _, l, k, b, c = best
    return segment_clique(l, k, b, c)


# -- code file persistence --

FILE_MAGIC = "# delcode v1"


def write_code_file(code: Code, path: str) -> None:
    """Write a code in the canonical textual format (sorted, LF endings)."""
    with open(path, "w", newline="\n") as fh:
        fh.write(FILE_MAGIC + "\n")
        fh.write(f"# n={code.n} s={code.s} kind={code.provenance}\n")
        for w in code.words:
            fh.write(str(w) + "\n")


def read_code_file(path: str) -> Code:
    """Read a code file, validating the header and codeword lines."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != FILE_MAGIC:
        raise ValueError(f"{path}: missing '{FILE_MAGIC}' header")
    if len(lines) < 2 or not lines[1].startswith("# "):
        raise ValueError(f"{path}: missing parameter header line")
    fields = dict(part.split("=", 1) for part in lines[1][2:].split())
    try:
        n = int(fields["n"])
        s = int(fields["s"])
        kind = fields["kind"]
    except (KeyError, ValueError) as exc:
        raise ValueError(f"{path}: malformed parameter header") from exc
    words = []
    for lineno, line in enumerate(lines[2:], start=3):
        if len(line) != n or set(line) - {"0", "1"}:
            raise ValueError(f"{path}:{lineno}: invalid codeword line {line!r}")
        words.append(BitString(line))
    return make_code(n, s, words, kind)
