"""Staircase lattice graphs, source-to-sink path-weight matrices, and the
determinant values behind the layered building blocks.

A shape is a partition drawn as a Young diagram, one vertex per box, edges up
and rightwards.  Vertical edges weigh 1; the horizontal edges on row i weigh
omega^(i-1), with omega = 1 for the plain staircase, -1 for the double one,
and a k-th root of unity for the k-fold one.  Sources sit at the bottom of
the leftmost columns, sinks at the right end of the top rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from operator import add
from typing import Sequence

from .determinant import det_fraction_free
from .errors import InvalidRemainderError, NotCoprimeError
from .rings import CyclotomicInteger, exact_sqrt

Cell = tuple[int, int]  # (row, column), 1-based, row 1 on top


@dataclass(frozen=True)
class StaircaseShape:
    """Row lengths of a staircase-like partition plus its construction tag."""

    rows: tuple[int, ...]
    kind: str  # "plain" | "double" | "multi"
    block: int  # k: the width of the repeated row blocks
    terminals: int  # number of sources (and sinks), k * m

    def __post_init__(self):
        if any(a < b for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {self.rows}")

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def column_height(self, j: int) -> int:
        return sum(1 for length in self.rows if length >= j)

    def cells(self) -> list[Cell]:
        return [
            (i, j)
            for i, length in enumerate(self.rows, start=1)
            for j in range(1, length + 1)
        ]

    def serialize(self) -> list[int]:
        return list(self.rows)


def plain_shape(m: int, p: int) -> StaircaseShape:
    """(m+p, ..., m+p, m+p-1, ..., m): the generalized staircase."""
    _require_positive(m=m, p=p)
    n = m + p
    return StaircaseShape(
        tuple([n] * m + list(range(n - 1, m - 1, -1))), "plain", 1, m
    )


def double_shape(m: int, p: int, r: int) -> StaircaseShape:
    """The generalized double staircase on n = 2m + 2p + r rows: 2m full rows,
    then pairs stepping down by two, closing with a single row of length 2m
    when n is odd."""
    return multi_shape(2, m, p, r)


def multi_shape(k: int, m: int, p: int, r: int) -> StaircaseShape:
    """The k-fold staircase on n = km + kp + r rows: km full rows, then
    blocks of k rows with lengths stepping down by k to km + r, closing with
    r rows of length km.

    For k = 1 and 2 this reproduces the plain and double staircases.
    """
    _require_positive(k=k, m=m, p=p)
    if not 0 <= r < k:
        raise InvalidRemainderError(f"remainder {r} outside 0..{k - 1}")
    n = k * m + k * p + r
    rows = [n] * (k * m)
    for length in range(n - k, k * m + r - 1, -k):
        rows.extend([length] * k)
    rows.extend([k * m] * r)
    kind = {1: "plain", 2: "double"}.get(k, "multi")
    return StaircaseShape(tuple(rows), kind, k, k * m)


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


class WeightedLatticeGraph:
    """A staircase shape with its per-row horizontal edge weights."""

    __slots__ = ("shape", "k", "j", "row_weights", "zero", "one")

    def __init__(self, shape: StaircaseShape, k: int = 1, j: int = 1):
        if math.gcd(j, k) != 1:
            raise NotCoprimeError(f"j={j} not coprime to k={k}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "j", j)
        if k == 1:
            weights: tuple = tuple(1 for _ in shape.rows)
            zero, one = 0, 1
        elif k == 2:
            weights = tuple((-1) ** i for i in range(shape.row_count))
            zero, one = 0, 1
        else:
            weights = tuple(
                CyclotomicInteger.root_power(k, i * j)
                for i in range(shape.row_count)
            )
            zero = CyclotomicInteger.from_int(k, 0)
            one = CyclotomicInteger.from_int(k, 1)
        object.__setattr__(self, "row_weights", weights)
        object.__setattr__(self, "zero", zero)
        object.__setattr__(self, "one", one)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedLatticeGraph is immutable")

    def sources(self) -> list[Cell]:
        """Bottom box of each of the first k*m columns."""
        return [
            (self.shape.column_height(i), i)
            for i in range(1, self.shape.terminals + 1)
        ]

    def sinks(self) -> list[Cell]:
        """Rightmost box of each of the first k*m rows."""
        return [(t, self.shape.rows[t - 1]) for t in range(1, self.shape.terminals + 1)]

    def path_weight_table(self, sink_index: int) -> list[list]:
        """Backward dynamic program from sink T_t: table[i][j] (0-based) is
        the weighted sum over paths from (i+1, j+1) to the sink; rows above
        the sink cannot reach it and are identically zero."""
        t, end = self.sinks()[sink_index - 1]
        rows = self.shape.rows
        table: list[list] = [[self.zero] * rows[i] for i in range(len(rows))]
        omega = self.row_weights[t - 1]
        seed_row = [self.zero] * rows[t - 1]
        value = self.one
        for j in range(end, 0, -1):
            seed_row[j - 1] = value
            value = omega * value
        table[t - 1] = seed_row
        for i in range(t + 1, len(rows) + 1):
            upper = table[i - 2][: rows[i - 1]]
            omega = self.row_weights[i - 1]
            if omega == 1:
                scanned = list(accumulate(reversed(upper), add))
            else:
                scanned = list(
                    accumulate(reversed(upper), lambda acc, u: u + omega * acc)
                )
            scanned.reverse()
            table[i - 1] = scanned
        return table

    def path_weights_from(self, sink_index: int) -> dict[Cell, object]:
        """wt(v, T_t) for every vertex v, as a mapping."""
        table = self.path_weight_table(sink_index)
        return {
            (i + 1, j + 1): table[i][j]
            for i in range(len(table))
            for j in range(len(table[i]))
        }

    def matrix(self) -> list[list]:
        """M[i][t] = weighted path sum from source S_(i+1) to sink T_(t+1)."""
        sources = self.sources()
        size = self.shape.terminals
        columns = []
        for t in range(1, size + 1):
            table = self.path_weight_table(t)
            columns.append([table[si - 1][sj - 1] for (si, sj) in sources])
        return [[columns[t][s] for t in range(size)] for s in range(size)]

    def path_weight(self, cells: Sequence[Cell]):
        """Weight of an explicit monotone path given by its visited cells."""
        total = self.one
        for (i1, j1), (i2, j2) in zip(cells, cells[1:]):
            if (i2, j2) == (i1 - 1, j1):
                continue
            if (i2, j2) == (i1, j1 + 1):
                total = total * self.row_weights[i1 - 1]
            else:
                raise ValueError(f"illegal step {(i1, j1)} -> {(i2, j2)}")
        return total

    def enumerate_paths(self, start: Cell, goal: Cell) -> list[tuple[Cell, ...]]:
        """Every monotone path between two cells; exponential, test use only."""
        rows = self.shape.rows
        out: list[tuple[Cell, ...]] = []

        def walk(cell: Cell, trail: list[Cell]) -> None:
            if cell == goal:
                out.append(tuple(trail))
                return
            i, j = cell
            if i - 1 >= goal[0] and j <= rows[i - 2]:
                trail.append((i - 1, j))
                walk((i - 1, j), trail)
                trail.pop()
            if j + 1 <= rows[i - 1] and j + 1 <= goal[1]:
                trail.append((i, j + 1))
                walk((i, j + 1), trail)
                trail.pop()

        walk(start, [start])
        return out

    def zero_points(self, sink_index: int) -> set[Cell]:
        """Vertices weakly below the sink row whose path-weight sum to the
        sink vanishes."""
        t = sink_index
        table = self.path_weight_table(t)
        return {
            (i + 1, j + 1)
            for i in range(t - 1, len(table))
            for j in range(len(table[i]))
            if table[i][j] == self.zero
        }

    def to_dot(self) -> str:
        lines = ["digraph staircase {"]
        rows = self.shape.rows
        for i, length in enumerate(rows, start=1):
            for j in range(1, length + 1):
                if i > 1:
                    lines.append(f'  "{i},{j}" -> "{i - 1},{j}" [label="1"];')
                if j < length:
                    lines.append(
                        f'  "{i},{j}" -> "{i},{j + 1}" [label="{self.row_weights[i - 1]}"];'
                    )
        lines.append("}")
        return "\n".join(lines)


def build_plain(m: int, p: int) -> WeightedLatticeGraph:
    return WeightedLatticeGraph(plain_shape(m, p), 1)


def build_double(m: int, p: int, r: int) -> WeightedLatticeGraph:
    return WeightedLatticeGraph(double_shape(m, p, r), 2)


def build_multi(k: int, m: int, p: int, r: int, j: int = 1) -> WeightedLatticeGraph:
    return WeightedLatticeGraph(multi_shape(k, m, p, r), k, j)


@lru_cache(maxsize=None)
def layer_factor(m: int, p: int) -> int:
    """The principal specialization of 1^m x w_0(p): the determinant of the
    plain-staircase path matrix.  Extended by 1 at m = 0, where the reversed
    block alone has a single pipe dream."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if m == 0:
        return 1
    return det_fraction_free(build_plain(m, p).matrix())


@lru_cache(maxsize=None)
def double_layer_factor(m: int, p: int, r: int) -> int:
    """|S at q=-1| of 1^(2m) x (step-2 reversal of size 2p + r): the absolute
    determinant over the double staircase."""
    if r not in (0, 1):
        raise InvalidRemainderError(f"remainder {r} outside 0..1")
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if m == 0:
        return 1
    return abs(det_fraction_free(build_double(m, p, r).matrix()))


@lru_cache(maxsize=None)
def multi_layer_factor(k: int, m: int, p: int, r: int, j: int = 1) -> int:
    """|S at q=zeta_k^j| of 1^(km) x (step-k reversal of size kp + r), via the
    exact cyclotomic determinant; the squared modulus must come out a perfect
    square rational integer or the shape and weights are wrong."""
    if not 0 <= r < k:
        raise InvalidRemainderError(f"remainder {r} outside 0..{k - 1}")
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if m == 0:
        return 1
    det = det_fraction_free(build_multi(k, m, p, r, j).matrix())
    if isinstance(det, int):
        return abs(det)
    squared = (det * det.conjugate()).rational_part()
    return exact_sqrt(squared)


def delta(n: int) -> int:
    """Global sign matching grid weights to path weights: -1 when n is
    3 mod 4, +1 otherwise."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return -1 if n % 4 == 3 else 1
