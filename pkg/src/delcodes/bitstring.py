"""Fixed-length binary strings and subsequence/supersequence operations.

A :class:`BitString` is an immutable binary word of at most 63 symbols,
packed into a single machine word.  Index 0 is the leftmost symbol of the
textual rendering.  All operations in this module are pure functions, so
values are safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Set, Union

MAX_LENGTH = 63

BitsLike = Union[str, Iterable[int], "BitString"]


class BitString:
    """Immutable fixed-length binary word.

    Equality is by (length, symbol sequence): ``"0" != "00"``.  Ordering is
    by length first, then by the value of the word read as a binary numeral.
    """

    __slots__ = ("_n", "_v")

    def __init__(self, bits: BitsLike = ""):
        if isinstance(bits, BitString):
            self._n = bits._n
            self._v = bits._v
            return
        if isinstance(bits, str):
            n = len(bits)
            if n > MAX_LENGTH:
                raise ValueError(f"length {n} exceeds maximum {MAX_LENGTH}")
            v = 0
            for ch in bits:
                if ch == "0":
                    v <<= 1
                elif ch == "1":
                    v = (v << 1) | 1
                else:
                    raise ValueError(f"invalid symbol {ch!r} in bit string")
            self._n = n
            self._v = v
            return
        sym = list(bits)
        if len(sym) > MAX_LENGTH:
            raise ValueError(f"length {len(sym)} exceeds maximum {MAX_LENGTH}")
        v = 0
        for b in sym:
            if b not in (0, 1):
                raise ValueError(f"invalid symbol {b!r} in bit sequence")
            v = (v << 1) | b
        self._n = len(sym)
        self._v = v

    @classmethod
    def from_value(cls, value: int, length: int) -> "BitString":
        """Build from a packed integer whose bit length-1-i holds symbol i."""
        if not 0 <= length <= MAX_LENGTH:
            raise ValueError(f"length {length} out of range 0..{MAX_LENGTH}")
        if not 0 <= value < (1 << length):
            raise ValueError(f"value {value} does not fit in {length} bits")
        out = cls.__new__(cls)
        out._n = length
        out._v = value
        return out

    @property
    def value(self) -> int:
        """The word read as a binary numeral (index 0 most significant)."""
        return self._v

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> int:
        if not -self._n <= i < self._n:
            raise IndexError("bit index out of range")
        if i < 0:
            i += self._n
        return (self._v >> (self._n - 1 - i)) & 1

    def __iter__(self) -> Iterator[int]:
        v, n = self._v, self._n
        for i in range(n):
            yield (v >> (n - 1 - i)) & 1

    def __add__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        n = self._n + other._n
        if n > MAX_LENGTH:
            raise ValueError(f"length {n} exceeds maximum {MAX_LENGTH}")
        return BitString.from_value((self._v << other._n) | other._v, n)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitString)
            and self._n == other._n
            and self._v == other._v
        )

    def __lt__(self, other: "BitString") -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return (self._n, self._v) < (other._n, other._v)

    def __le__(self, other: "BitString") -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return (self._n, self._v) <= (other._n, other._v)

    def __gt__(self, other: "BitString") -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return (other._n, other._v) < (self._n, self._v)

    def __ge__(self, other: "BitString") -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return (other._n, other._v) <= (self._n, self._v)

    def __hash__(self) -> int:
        return hash((self._n, self._v))

    def __str__(self) -> str:
        return format(self._v, "b").zfill(self._n) if self._n else ""

    def __repr__(self) -> str:
        return f"BitString({str(self)!r})"


def weight(x: BitString) -> int:
    """Number of 1 symbols (Hamming weight)."""
    return x.value.bit_count()


# -- packed-integer helpers (index 0 maps to the most significant bit) --


def _delete_value(v: int, n: int, i: int) -> int:
    """Remove symbol i from an n-symbol word packed in v."""
    high = v >> (n - i)
    low = v & ((1 << (n - 1 - i)) - 1)
    return (high << (n - 1 - i)) | low


def _insert_value(v: int, n: int, i: int, bit: int) -> int:
    """Insert bit before position i (i == n appends) in an n-symbol word."""
    high = v >> (n - i)
    low = v & ((1 << (n - i)) - 1)
    return (high << (n - i + 1)) | (bit << (n - i)) | low


def _delete_values(v: int, n: int, s: int) -> Set[int]:
    """All distinct results of s deletions, as packed values of length n-s."""
    level = {v}
    for step in range(s):
        m = n - step
        level = {_delete_value(w, m, i) for w in level for i in range(m)}
    return level


def _insert_values(v: int, n: int, s: int) -> Set[int]:
    """All distinct results of s insertions, as packed values of length n+s."""
    level = {v}
    for step in range(s):
        m = n + step
        nxt = set()
        for w in level:
            for i in range(m + 1):
                nxt.add(_insert_value(w, m, i, 0))
                nxt.add(_insert_value(w, m, i, 1))
        level = nxt
    return level


def delete_all(x: BitString, s: int) -> Set[BitString]:
    """The set of distinct subsequences of x with s symbols removed."""
    n = len(x)
    if not 0 <= s <= n:
        raise ValueError(f"deletion count {s} out of range 0..{n}")
    return {BitString.from_value(v, n - s) for v in _delete_values(x.value, n, s)}


def insert_all(x: BitString, s: int) -> Set[BitString]:
    """The set of distinct supersequences of x with s symbols inserted."""
    if s < 0:
        raise ValueError(f"insertion count {s} must be nonnegative")
    n = len(x)
    if n + s > MAX_LENGTH:
        raise ValueError(f"length {n + s} exceeds maximum {MAX_LENGTH}")
    return {BitString.from_value(v, n + s) for v in _insert_values(x.value, n, s)}


def insert_all_weighted(x: BitString, s: int, r: int) -> Set[BitString]:
    """Supersequences of x produced by inserting r ones and s-r zeros."""
    if not 0 <= r <= s:
        raise ValueError(f"one-insertion count {r} out of range 0..{s}")
    target = weight(x) + r
    return {y for y in insert_all(x, s) if weight(y) == target}


def lcs_length(x: BitString, y: BitString) -> int:
    """Length of a longest common subsequence, by the standard DP recurrence."""
    return _lcs_values(x.value, len(x), y.value, len(y))


def _lcs_values(xv: int, xn: int, yv: int, yn: int) -> int:
    if xn == 0 or yn == 0:
        return 0
    xb = [(xv >> (xn - 1 - i)) & 1 for i in range(xn)]
    yb = [(yv >> (yn - 1 - j)) & 1 for j in range(yn)]
    prev = [0] * (yn + 1)
    for xi in xb:
        curr = [0]
        append = curr.append
        best = 0
        row = prev
        for j, yj in enumerate(yb):
            if xi == yj:
                cand = row[j] + 1
            else:
                cand = row[j + 1]
            if cand > best:
                best = cand
            append(best)
        prev = curr
    return prev[yn]


def deletion_distance(x: BitString, y: BitString) -> int:
    """Deletion distance |x| + |y| - 2*lcs(x, y); a metric on binary words."""
    return len(x) + len(y) - 2 * lcs_length(x, y)


def common_substrings(x: BitString, y: BitString, s: int) -> Set[BitString]:
    """Common length-(n-s) subsequences of two equal-length words."""
    if len(x) != len(y):
        raise ValueError("common_substrings requires equal-length inputs")
    return delete_all(x, s) & delete_all(y, s)


def confusable_set(x: BitString, s: int) -> Set[BitString]:
    """Equal-length words sharing a length-(n-s) subsequence with x."""
    n = len(x)
    if not 0 <= s <= n:
        raise ValueError(f"deletion count {s} out of range 0..{n}")
    out = set()
    for zv in _delete_values(x.value, n, s):
        out.update(_insert_values(zv, n - s, s))
    out.discard(x.value)
    return {BitString.from_value(v, n) for v in out}
