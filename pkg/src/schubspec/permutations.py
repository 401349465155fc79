"""Permutations in one-line notation, structured layered constructors, and
reduced-word enumeration.

Values in a one-line word are 1-based (a permutation of ``{1..n}``); positions
are 0-based inside this module.  ``Permutation.word`` stores ``(w(1), ..., w(n))``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import DuplicateEntryError, GuardExceededError, InvalidRemainderError, OutOfRangeError

Composition = tuple[int, ...]
ReducedWord = tuple[int, ...]

REDUCED_WORD_GUARD = 16


class Permutation:
    """A permutation of ``{1..n}`` in one-line notation.

    >>> w = Permutation((1, 2, 5, 6, 3, 4))
    >>> w.length()
    4
    >>> w.inverse().word
    (1, 2, 5, 6, 3, 4)
    """

    __slots__ = ("word", "n")

    def __init__(self, word: Sequence[int]):
        word = tuple(word)
        if not word:
            raise OutOfRangeError("one-line word must be nonempty")
        n = len(word)
        seen = [False] * (n + 1)
        for v in word:
            if not isinstance(v, int) or v < 1 or v > n:
                raise OutOfRangeError(f"entry {v!r} outside 1..{n}")
            if seen[v]:
                raise DuplicateEntryError(f"entry {v} repeated")
            seen[v] = True
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __call__(self, i: int) -> int:
        """Image of the 1-based position ``i``."""
        return self.word[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Permutation({self.word})"

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The order-reversing permutation (n, n-1, ..., 1)."""
        return cls(range(n, 0, -1))

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """Parse comma-separated one-line notation, e.g. ``"1,2,5,6,3,4"``."""
        try:
            word = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise OutOfRangeError(f"cannot parse permutation {text!r}") from exc
        return cls(word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, v in enumerate(self.word):
            inv[v - 1] = pos + 1
        return Permutation(inv)

    def length(self) -> int:
        """Number of inversions.

        >>> Permutation.longest(4).length()
        6
        """
        word = self.word
        return sum(
            1
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if word[i] > word[j]
        )

    def descents(self) -> list[int]:
        """1-based positions i with w(i) > w(i+1)."""
        return [i + 1 for i in range(self.n - 1) if self.word[i] > self.word[i + 1]]

    def swap_values(self, i: int) -> "Permutation":
        """Left multiplication by the adjacent transposition s_i (swaps values i, i+1)."""
        word = list(self.word)
        a = word.index(i)
        b = word.index(i + 1)
        word[a], word[b] = word[b], word[a]
        return Permutation(word)

    def rothe_diagram(self) -> set[tuple[int, int]]:
        """Cells (i, j), 1-based, with w(i) > j and w^-1(j) > i.

        Under the pipe convention used here (the column-j pipe runs straight
        up to row w^-1(j), then right), these are exactly the cells no pipe
        covers; row i holds code(w)_i of them and there are length(w) total.
        """
        inv = self.inverse().word
        return {
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.word[i - 1] > j and inv[j - 1] > i
        }

    def layer_blocks(self) -> Composition | None:
        """The block sizes if this is a layered permutation, else None.

        >>> layered((1, 3)).layer_blocks()
        (1, 3)
        >>> Permutation((2, 3, 1)).layer_blocks() is None
        True
        """
        blocks = []
        start = 0
        while start < self.n:
            size = self.word[start] - start
            if size < 1:
                return None
            expected = tuple(range(start + size, start, -1))
            if self.word[start : start + size] != expected:
                return None
            blocks.append(size)
            start += size
        return tuple(blocks)

    def multi_layer_blocks(self, k: int) -> Composition | None:
        """Layer sizes if this permutation is k-multi-layered, else None.

        Every layer size must be a positive multiple of k, except the last,
        which is a positive multiple of k plus the remainder of n mod k.  A
        permutation with n < k is k-multi-layered only as the bare remainder
        block (the identity).
        """
        r = self.n % k
        if self.n < k:
            return (self.n,) if self.word == tuple(range(1, self.n + 1)) else None
        reachable: dict[int, tuple[int, ...]] = {0: ()}
        for start in range(self.n):
            if start not in reachable:
                continue
            for end in range(start + 1, self.n + 1):
                size = end - start
                if end == self.n:
                    if size % k != r or size < k + r:
                        continue
                elif size % k != 0:
                    continue
                block = tuple(v - start for v in self.word[start:end])
                if block == _block_word(k, size) and end not in reachable:
                    reachable[end] = reachable[start] + (size,)
        return reachable.get(self.n)


def _block_word(k: int, size: int) -> tuple[int, ...]:
    """One-line word of the single k-multi layer on {1..size}.

    Blocks of k consecutive values in ascending runs, the runs themselves
    descending, with the remaining size mod k smallest values last.
    """
    out = []
    top = size
    while top >= k:
        out.extend(range(top - k + 1, top + 1))
        top -= k
    out.extend(range(1, top + 1))
    return tuple(out)


def direct_sum(u: Permutation, v: Permutation) -> Permutation:
    """(u_1, ..., u_m, v_1 + m, ..., v_n + m).

    >>> direct_sum(Permutation((2, 1)), Permutation((2, 1))).word
    (2, 1, 4, 3)
    """
    m = u.n
    return Permutation(u.word + tuple(x + m for x in v.word))


def one_fixed_then(m: int, v: Permutation) -> Permutation:
    """1^m x v: m fixed points followed by v shifted up by m."""
    return direct_sum(Permutation.identity(m), v) if m else v


def _validated_parts(parts: Sequence[int]) -> Composition:
    parts = tuple(parts)
    if not parts or any(not isinstance(b, int) or b < 1 for b in parts):
        raise InvalidRemainderError(f"parts must be positive integers, got {parts!r}")
    return parts


def layered(parts: Sequence[int]) -> Permutation:
    """The layered permutation with the given block sizes, each block reversed.

    >>> layered((1, 3)).word
    (1, 4, 3, 2)
    """
    parts = _validated_parts(parts)
    word: list[int] = []
    for b in parts:
        top = len(word) + b
        word.extend(range(top, len(word), -1))
    return Permutation(word)


def multi_layered(k: int, parts: Sequence[int]) -> Permutation:
    """The k-multi-layered permutation with the given layer sizes.

    All layers must have size a positive multiple of k except the last, whose
    size mod k is the remainder of n mod k.  For k = 1 this is ``layered``;
    for k = 2 it is ``doubly_layered``.
    """
    if k < 1:
        raise InvalidRemainderError(f"k must be >= 1, got {k}")
    parts = _validated_parts(parts)
    for i, size in enumerate(parts):
        rem = size % k
        if i < len(parts) - 1 and rem:
            raise InvalidRemainderError(
                f"layer {i + 1} has size {size}, not a multiple of {k}"
            )
    word: list[int] = []
    for size in parts:
        shift = len(word)
        word.extend(shift + v for v in _block_word(k, size))
    return Permutation(word)


def doubly_layered(parts: Sequence[int]) -> Permutation:
    """Layers built from the step-2 reversal pattern (n-1, n, n-3, n-2, ...).

    >>> doubly_layered((2, 4)).word
    (1, 2, 5, 6, 3, 4)
    """
    return multi_layered(2, parts)


def reduced_words(
    w: Permutation, guard: int = REDUCED_WORD_GUARD
) -> Iterator[ReducedWord]:
    """Yield every reduced word of w exactly once, in lexicographic order.

    A word (a_1, ..., a_l) satisfies s_{a_1} ... s_{a_l} = w with l = length(w).
    Enumeration strips a first letter i (valid when i appears after i+1 in w)
    and recurses on s_i w, taking letters in ascending order.
    """
    if w.length() > guard:
        raise GuardExceededError(
            f"length {w.length()} exceeds reduced-word guard {guard}"
        )

    def walk(v: Permutation, prefix: list[int]) -> Iterator[ReducedWord]:
        pos = {value: i for i, value in enumerate(v.word)}
        letters = [i for i in range(1, v.n) if pos[i] > pos[i + 1]]
        if not letters:
            yield tuple(prefix)
            return
        for i in letters:
            prefix.append(i)
            yield from walk(v.swap_values(i), prefix)
            prefix.pop()

    return walk(w, [])


def comajor(word: Sequence[int]) -> int:
    """Sum of the 1-based positions i where a_i < a_{i+1}.

    >>> comajor((1, 2, 1))
    1
    >>> comajor((2, 1, 2))
    2
    """
    return sum(i + 1 for i in range(len(word) - 1) if word[i] < word[i + 1])


if __name__ == "__main__":
    import doctest

    doctest.testmod()
