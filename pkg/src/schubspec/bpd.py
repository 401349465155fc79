"""Bumpless pipe dreams: grid representation, droop-move enumeration, and
the principal specialization S_w(1, q, q^2, ...) as a weighted tile count.

A grid cell holds one of six tiles.  Pipes enter at the bottom of the grid,
one per column, and leave through the east edge, one per row; the grid
belongs to w when the pipe exiting at row i entered at column w(i), and every
pair of pipes crosses at most once.  With that orientation the empty tiles of
the canonical grid form the Rothe diagram of w and the weighted tile count
reproduces the Schubert polynomial for every w, involution or not.  Rows are
numbered from the top starting at 1 in public interfaces and 0 internally.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GuardExceededError, NotPerfectSquareError
from .permutations import Permutation
from .rings import CyclotomicInteger, IntPolynomial, eval_at_root, exact_sqrt

EMPTY = "."
HORIZONTAL = "─"
VERTICAL = "│"
CROSS = "┼"
ELBOW_SE = "╭"  # pipe enters from the south, leaves east
ELBOW_WN = "╯"  # pipe enters from the west, leaves north
TILES = EMPTY + HORIZONTAL + VERTICAL + CROSS + ELBOW_SE + ELBOW_WN

ENUMERATION_GUARD = 9
BRUTEFORCE_GUARD = 6

# (tile, entry side) -> exit side
_STEP = {
    (HORIZONTAL, "W"): "E",
    (VERTICAL, "S"): "N",
    (CROSS, "W"): "E",
    (CROSS, "S"): "N",
    (ELBOW_SE, "S"): "E",
    (ELBOW_WN, "W"): "N",
}


class InvalidGridError(ValueError):
    """The tile filling is not a bumpless pipe dream."""


class BpdGrid:
    """An n x n tile grid routing each pipe i from column i to row w(i)."""

    __slots__ = ("n", "rows", "permutation", "_vert", "_horiz", "_se", "_wn")

    def __init__(self, rows: Sequence[str]):
        rows = tuple(rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise InvalidGridError("grid must be square and nonempty")
        if any(ch not in TILES for row in rows for ch in row):
            raise InvalidGridError("unknown tile character")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        self._trace()

    def __setattr__(self, name, value):
        raise AttributeError("BpdGrid is immutable")

    def _trace(self) -> None:
        """Follow every pipe, recording segment owners and validating the
        one-crossing rule and full tile usage.

        Two pipes sharing a segment would merge and exit at the same row,
        which the bijection check catches, so segment usage only needs
        counting, not per-segment bookkeeping.
        """
        n = self.n
        rows = self.rows
        vert = [[-1] * n for _ in range(n)]
        horiz = [[-1] * n for _ in range(n)]
        se = [[-1] * n for _ in range(n)]
        wn = [[-1] * n for _ in range(n)]
        traced = 0
        exits = [0] * n
        for pipe in range(n):
            i, j = n - 1, pipe
            from_south = True
            while True:
                tile = rows[i][j]
                traced += 1
                if from_south:
                    if tile == VERTICAL or tile == CROSS:
                        vert[i][j] = pipe
                        i -= 1
                        if i < 0:
                            raise InvalidGridError(f"pipe {pipe + 1} escapes north")
                    elif tile == ELBOW_SE:
                        se[i][j] = pipe
                        from_south = False
                        j += 1
                    else:
                        raise InvalidGridError(
                            f"pipe {pipe + 1} enters {tile!r} from S at ({i + 1},{j + 1})"
                        )
                else:
                    if tile == HORIZONTAL or tile == CROSS:
                        horiz[i][j] = pipe
                        j += 1
                    elif tile == ELBOW_WN:
                        wn[i][j] = pipe
                        from_south = True
                        i -= 1
                        if i < 0:
                            raise InvalidGridError(f"pipe {pipe + 1} escapes north")
                    else:
                        raise InvalidGridError(
                            f"pipe {pipe + 1} enters {tile!r} from W at ({i + 1},{j + 1})"
                        )
                if j == n:
                    exits[pipe] = i + 1
                    break
        expected = sum(
            2 if ch == CROSS else 0 if ch == EMPTY else 1 for row in rows for ch in row
        )
        if traced != expected:
            raise InvalidGridError("orphan segments not on any pipe")
        crossings: set[int] = set()
        for i in range(n):
            row = rows[i]
            for j in range(n):
                if row[j] == CROSS:
                    a, b = vert[i][j], horiz[i][j]
                    pair = (a * n + b) if a < b else (b * n + a)
                    if pair in crossings:
                        raise InvalidGridError("a pair of pipes crosses twice")
                    crossings.add(pair)
        # exits[c] is the row where the column-c pipe leaves, i.e. w^-1(c+1)
        object.__setattr__(self, "permutation", Permutation(exits).inverse())
        object.__setattr__(self, "_vert", vert)
        object.__setattr__(self, "_horiz", horiz)
        object.__setattr__(self, "_se", se)
        object.__setattr__(self, "_wn", wn)

    def __eq__(self, other) -> bool:
        return isinstance(other, BpdGrid) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"BpdGrid({self.permutation})"

    def render(self) -> str:
        return "\n".join(self.rows)

    def serialize(self) -> str:
        """Row-major tile string; the canonical deduplication key."""
        return "".join(self.rows)

    def empties(self) -> list[tuple[int, int]]:
        """1-based (row, column) positions of the empty tiles."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(self.n)
            if self.rows[i][j] == EMPTY
        ]

    def weight_exponents(self) -> tuple[int, ...]:
        """Entry i-1 counts the empty tiles in row i; the x_i exponent."""
        return tuple(row.count(EMPTY) for row in self.rows)


def rothe_bpd(w: Permutation) -> BpdGrid:
    """The canonical grid: every pipe goes straight up, turns once, and goes
    straight right, the column-j pipe turning at row w^-1(j).  Its empty
    tiles are exactly the Rothe diagram {(i, j) : w(i) > j and w^-1(j) > i},
    so the weight is the dominant monomial of the Schubert polynomial."""
    n = w.n
    inv = w.inverse().word
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            turn = inv[j - 1]
            if i == turn:
                row.append(ELBOW_SE)
            elif i > turn:
                row.append(CROSS if w.word[i - 1] < j else VERTICAL)
            else:
                row.append(HORIZONTAL if w.word[i - 1] < j else EMPTY)
        rows.append("".join(row))
    return BpdGrid(rows)


def _column_corners(grid: BpdGrid, pipe: int, i1: int, j1: int) -> list[int]:
    """Rows below (i1, j1) from which the pipe exits north with every cell
    between carrying its vertical strand."""
    rows, n = grid.rows, grid.n
    out = []
    i = i1 + 1
    while i < n:
        if grid._vert[i][j1] == pipe:
            out.append(i)
            i += 1
        elif rows[i][j1] == ELBOW_WN and grid._wn[i][j1] == pipe:
            out.append(i)
            break
        else:
            break
    return out


def _row_corners(grid: BpdGrid, pipe: int, i1: int, j1: int) -> list[int]:
    """Columns right of (i1, j1) into which the pipe enters from the west
    with every cell between carrying its horizontal strand."""
    rows, n = grid.rows, grid.n
    out = []
    j = j1 + 1
    while j < n:
        if grid._horiz[i1][j] == pipe:
            out.append(j)
            j += 1
        elif rows[i1][j] == ELBOW_WN and grid._wn[i1][j] == pipe:
            out.append(j)
            break
        else:
            break
    return out


_DROOP_SW = {VERTICAL: ELBOW_SE, ELBOW_WN: HORIZONTAL}
_DROOP_NE = {HORIZONTAL: ELBOW_SE, ELBOW_WN: VERTICAL}
_DROOP_EAST = {EMPTY: VERTICAL, HORIZONTAL: CROSS}
_DROOP_SOUTH = {EMPTY: HORIZONTAL, VERTICAL: CROSS}


def _droop_rectangles(grid: BpdGrid) -> list[tuple[int, int, int, int]]:
    """Rectangles (i1, j1, i2, j2) whose rewrite yields a tile-consistent
    grid: NW corner an elbow of some pipe, SE corner empty, the pipe owning
    the full west and north edges, and the south and east edges able to
    absorb its rerouted strands."""
    rows = grid.rows
    out = []
    for i1 in range(grid.n):
        for j1 in range(grid.n):
            pipe = grid._se[i1][j1]
            if pipe < 0:
                continue
            for i2 in _column_corners(grid, pipe, i1, j1):
                if rows[i2][j1] not in _DROOP_SW:
                    continue
                for j2 in _row_corners(grid, pipe, i1, j1):
                    if rows[i1][j2] not in _DROOP_NE or rows[i2][j2] != EMPTY:
                        continue
                    if all(rows[i][j2] in _DROOP_EAST for i in range(i1 + 1, i2)) and all(
                        rows[i2][j] in _DROOP_SOUTH for j in range(j1 + 1, j2)
                    ):
                        out.append((i1, j1, i2, j2))
    return out


def _droop_rows(
    grid: BpdGrid, i1: int, j1: int, i2: int, j2: int
) -> tuple[str, ...]:
    """Rows of the rewritten grid for a legality-checked rectangle."""
    rows = list(grid.rows)
    top = list(rows[i1])
    top[j1] = EMPTY
    for j in range(j1 + 1, j2):
        top[j] = EMPTY if top[j] == HORIZONTAL else VERTICAL
    top[j2] = _DROOP_NE[top[j2]]
    rows[i1] = "".join(top)
    for i in range(i1 + 1, i2):
        mid = list(rows[i])
        mid[j1] = EMPTY if mid[j1] == VERTICAL else HORIZONTAL
        mid[j2] = _DROOP_EAST[mid[j2]]
        rows[i] = "".join(mid)
    low = list(rows[i2])
    low[j1] = _DROOP_SW[low[j1]]
    for j in range(j1 + 1, j2):
        low[j] = _DROOP_SOUTH[low[j]]
    low[j2] = ELBOW_WN
    rows[i2] = "".join(low)
    return tuple(rows)


def droop_moves(grid: BpdGrid) -> list[BpdGrid]:
    """All grids reachable by one droop: a pipe's south-east elbow slides to
    an empty tile strictly south-east of it, the pipe rerouting along the
    south and east edges of the rectangle.  Candidates that violate the
    one-crossing rule are discarded."""
    out = []
    for rect in _droop_rectangles(grid):
        try:
            out.append(BpdGrid(_droop_rows(grid, *rect)))
        except InvalidGridError:
            continue
    return out


def undroop_moves(grid: BpdGrid) -> list[BpdGrid]:
    """Inverse droops: every grid whose droop set contains this grid."""
    out = []
    n = grid.n
    for i2 in range(n):
        for j2 in range(n):
            pipe = grid._wn[i2][j2]
            if pipe < 0:
                continue
            i1s = []
            i = i2 - 1
            while i >= 0:
                if grid._vert[i][j2] == pipe:
                    i1s.append(i)
                    i -= 1
                elif grid._se[i][j2] == pipe:
                    i1s.append(i)
                    break
                else:
                    break
            j1s = []
            j = j2 - 1
            while j >= 0:
                if grid._horiz[i2][j] == pipe:
                    j1s.append(j)
                    j -= 1
                elif grid._se[i2][j] == pipe:
                    j1s.append(j)
                    break
                else:
                    break
            for i1 in i1s:
                for j1 in j1s:
                    if grid.rows[i1][j1] == EMPTY:
                        lifted = _apply_undroop(grid, i1, j1, i2, j2)
                        if lifted is not None:
                            out.append(lifted)
    return out


def _apply_undroop(grid: BpdGrid, i1: int, j1: int, i2: int, j2: int) -> BpdGrid | None:
    rows = [list(r) for r in grid.rows]
    sw = rows[i2][j1]
    if sw == ELBOW_SE:
        rows[i2][j1] = VERTICAL
    elif sw == HORIZONTAL:
        rows[i2][j1] = ELBOW_WN
    else:
        return None
    ne = rows[i1][j2]
    if ne == ELBOW_SE:
        rows[i1][j2] = HORIZONTAL
    elif ne == VERTICAL:
        rows[i1][j2] = ELBOW_WN
    else:
        return None
    rows[i2][j2] = EMPTY
    rows[i1][j1] = ELBOW_SE
    for i in range(i1 + 1, i2):
        rows[i][j2] = EMPTY if rows[i][j2] == VERTICAL else HORIZONTAL
        tile = rows[i][j1]
        if tile == EMPTY:
            rows[i][j1] = VERTICAL
        elif tile == HORIZONTAL:
            rows[i][j1] = CROSS
        else:
            return None
    for j in range(j1 + 1, j2):
        rows[i2][j] = EMPTY if rows[i2][j] == HORIZONTAL else VERTICAL
        tile = rows[i1][j]
        if tile == EMPTY:
            rows[i1][j] = HORIZONTAL
        elif tile == VERTICAL:
            rows[i1][j] = CROSS
        else:
            return None
    try:
        return BpdGrid(tuple("".join(r) for r in rows))
    except InvalidGridError:
        return None


def enumerate_bpds(w: Permutation, guard: int = ENUMERATION_GUARD) -> set[BpdGrid]:
    """The full droop closure of the Rothe grid of w.

    Rewritten row tuples are deduplicated before validation so each distinct
    grid is traced exactly once.
    """
    if w.n > guard:
        raise GuardExceededError(f"n={w.n} exceeds enumeration guard {guard}")
    start = rothe_bpd(w)
    seen_rows = {start.rows}
    out = {start}
    queue = deque([start])
    while queue:
        grid = queue.popleft()
        for rect in _droop_rectangles(grid):
            rows = _droop_rows(grid, *rect)
            if rows in seen_rows:
                continue
            seen_rows.add(rows)
            try:
                moved = BpdGrid(rows)
            except InvalidGridError:
                continue
            out.add(moved)
            queue.append(moved)
    return out


def enumerate_bpds_bruteforce(
    w: Permutation, guard: int = BRUTEFORCE_GUARD
) -> set[BpdGrid]:
    """Exhaustive tile assignment with edge-consistency and routing pruning.

    Fills cells bottom row up, branching only where the south and west edges
    leave a choice, and prunes a branch as soon as a completed pipe exits at
    the wrong row.  Independent of the droop machinery; a test oracle.
    """
    if w.n > guard:
        raise GuardExceededError(f"n={w.n} exceeds brute-force guard {guard}")
    n = w.n
    inv = w.inverse().word
    found: set[BpdGrid] = set()
    grid_rows: list[str] = [""] * n

    def trace_partial(top_row: int) -> bool:
        for pipe in range(n):
            i, j, entry = n - 1, pipe, "S"
            while True:
                move = _STEP.get((grid_rows[i][j], entry))
                if move is None:
                    return False
                if move == "E":
                    j += 1
                    entry = "W"
                    if j == n:
                        if inv[pipe] != i + 1:
                            return False
                        break
                else:
                    i -= 1
                    entry = "S"
                    if i < top_row:
                        break
        return True

    def fill(
        i: int, j: int, tiles: list[str], norths: list[int], west: int,
        south_edges: tuple[int, ...],
    ) -> None:
        south = south_edges[j]
        if south and west:
            choices: Iterable[tuple[str, int, int]] = ((CROSS, 1, 1),)
        elif south:
            choices = ((VERTICAL, 1, 0), (ELBOW_SE, 0, 1))
        elif west:
            choices = ((HORIZONTAL, 0, 1), (ELBOW_WN, 1, 0))
        else:
            choices = ((EMPTY, 0, 0),)
        for tile, north, east in choices:
            if i == 0 and north:
                continue
            if j == n - 1 and east != 1:
                continue
            tiles.append(tile)
            norths.append(north)
            if j + 1 < n:
                fill(i, j + 1, tiles, norths, east, south_edges)
            else:
                grid_rows[i] = "".join(tiles)
                if trace_partial(i):
                    if i > 0:
                        fill(i - 1, 0, [], [], 0, tuple(norths))
                    else:
                        try:
                            found.add(BpdGrid(tuple(grid_rows)))
                        except InvalidGridError:
                            pass
            tiles.pop()
            norths.pop()

    fill(n - 1, 0, [], [], 0, tuple([1] * n))
    return found


def q_specialization(w: Permutation, guard: int = ENUMERATION_GUARD) -> IntPolynomial:
    """S_w(1, q, q^2, ...) as an exact polynomial: each grid contributes
    q to the power sum_i (i - 1) * (empty tiles in row i)."""
    coeffs: dict[int, int] = {}
    for grid in enumerate_bpds(w, guard):
        e = sum(i * c for i, c in enumerate(grid.weight_exponents()))
        coeffs[e] = coeffs.get(e, 0) + 1
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPolynomial(out)


def principal_specialization(w: Permutation, guard: int = ENUMERATION_GUARD) -> int:
    """S_w(1, 1, ...): the number of bumpless pipe dreams of w."""
    return len(enumerate_bpds(w, guard))


@dataclass(frozen=True)
class RootValue:
    """S_w(1, q, q^2, ...) evaluated at the root of unity zeta_k^j.

    ``squared`` is the exact squared modulus: an int when rational, otherwise
    the cyclotomic element itself.  ``modulus`` is the exact integer absolute
    value when the squared modulus is a perfect square, else None.
    """

    k: int
    j: int
    element: CyclotomicInteger
    squared: "int | CyclotomicInteger"
    modulus: int | None
    float_modulus: float


def root_value(element: CyclotomicInteger, k: int, j: int) -> RootValue:
    product = element * element.conjugate()
    squared: int | CyclotomicInteger
    modulus: int | None
    if product.is_rational():
        squared = product.rational_part()
        try:
            modulus = exact_sqrt(squared)
        except NotPerfectSquareError:
            modulus = None
    else:
        squared = product
        modulus = None
    return RootValue(k, j, element, squared, modulus, abs(element.embed()))


def root_specialization(
    w: Permutation, k: int, j: int = 1, guard: int = ENUMERATION_GUARD
) -> RootValue:
    """|S_w(1, q, q^2, ...)| at q = zeta_k^j, exactly."""
    p = q_specialization(w, guard)
    return root_value(eval_at_root(p, k, j), k, j)
