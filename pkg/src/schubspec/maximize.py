"""Maximizing the principal specializations over layered families, brute
force over the full symmetric group at small sizes, and empirical growth
constants.

All maxima over layered families run one dynamic program over compositions
in base units (layer sizes divided by the block width k), with the remainder
of n mod k attached to the final layer.  The multiplicative factors come from
the lattice-path determinant engine and are cached there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itpermutations

import mpmath

from .bpd import ENUMERATION_GUARD, enumerate_bpds, q_specialization
from .errors import (
    AmbiguousTieError,
    DegenerateCompositionError,
    EngineMismatchError,
    GuardExceededError,
)
from .lgv import double_layer_factor, layer_factor, multi_layer_factor
from .permutations import Composition, Permutation
from .rings import CyclotomicInteger, eval_at_root

EXACT_GUARD = 80
LOG_GUARD = 2000
SYMMETRIC_GUARD = 7
SYMMETRIC_ROOT_GUARD = 6

_TIE_EPS = mpmath.mpf("1e-30")


@dataclass(frozen=True)
class MaxRecord:
    """Maximum of the specialization over a layered family.

    ``argmax`` stores actual layer sizes left to right (already multiplied by
    the block width, remainder included).  ``value`` is the exact integer in
    exact mode and None in log mode; ``log2_value`` is always filled.
    """

    n: int
    k: int
    mode: str
    value: int | None
    log2_value: float
    argmax: Composition


def log2_int(value: int) -> float:
    """log2 of a positive integer of any size, accurate to ~1e-15 relative."""
    if value <= 0:
        raise ValueError(f"need a positive integer, got {value}")
    bits = value.bit_length()
    if bits <= 53:
        return math.log2(value)
    shift = bits - 53
    return math.log2(value >> shift) + shift


def _factor(k: int, prefix: int, block: int, rem: int) -> int:
    if k == 1:
        return layer_factor(prefix, block)
    if k == 2:
        return double_layer_factor(prefix, block, rem)
    return multi_layer_factor(k, prefix, block, rem)


@lru_cache(maxsize=None)
def _best(prefix: int, remaining: int, k: int, rem: int) -> tuple[int, Composition]:
    """Exact DP over base-unit compositions of ``remaining`` after ``prefix``
    units are already placed.  Ties break to the lexicographically smallest
    composition because blocks are scanned in increasing size."""
    if remaining == 0:
        return 1, ()
    best_value = -1
    best_comp: Composition = ()
    for block in range(1, remaining + 1):
        factor = _factor(k, prefix, block, rem if block == remaining else 0)
        sub_value, sub_comp = _best(prefix + block, remaining - block, k, rem)
        value = factor * sub_value
        if value > best_value:
            best_value = value
            best_comp = (block,) + sub_comp
    return best_value, best_comp


def _sizes(base: Composition, k: int, rem: int) -> Composition:
    if not base:
        return (rem,) if rem else ()
    sizes = tuple(b * k for b in base[:-1]) + (base[-1] * k + rem,)
    return sizes


def max_layered(n: int) -> MaxRecord:
    """v(n): the largest number of bumpless pipe dreams over layered
    permutations, with one lexicographically-smallest maximizing composition."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    value, comp = _best(0, n, 1, 0)
    return MaxRecord(n, 1, "exact", value, log2_int(value), comp)


def doubly_layered_closed_form(n: int) -> int:
    """v(floor(n/2)) * v(ceil(n/2)): the square/near-square product formula."""
    return max_layered(n // 2).value * max_layered((n + 1) // 2).value


def max_doubly_layered(n: int) -> MaxRecord:
    """The doubly layered maximum at q = -1 by the factor DP.

    For even n the DP must equal v(n/2)^2 exactly (maximizing a square) and a
    mismatch raises.  For odd n the product v(k) v(k+1) is only an upper
    bound: it is attained iff some composition maximizes both v(k) and, with
    its last part incremented, v(k+1).  That chain breaks first at n = 13,
    where the true maximum is 49896 = 84 * 594 against the bound 55440.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    rem = n % 2
    value, comp = _best(0, n // 2, 2, rem)
    closed = doubly_layered_closed_form(n)
    if rem == 0 and value != closed:
        raise EngineMismatchError(
            f"doubly layered DP {value} != closed form {closed} at n={n}"
        )
    if value > closed:
        raise EngineMismatchError(
            f"doubly layered DP {value} exceeds the upper bound {closed} at n={n}"
        )
    return MaxRecord(n, 2, "exact", value, log2_int(value), _sizes(comp, 2, rem))


def layered_value(base: Composition) -> int:
    """The number of bumpless pipe dreams of the layered permutation with the
    given block sizes, as the product of staircase determinants."""
    value = 1
    prefix = 0
    for block in base:
        value *= layer_factor(prefix, block)
        prefix += block
    return value


def max_multi_layered(n: int, k: int) -> MaxRecord:
    """The k-multi-layered maximum of |S at zeta_k|, cross-checked against
    the plain-layered product formula evaluated at the DP argmax."""
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n}, k={k}")
    rem = n % k
    value, comp = _best(0, n // k, k, rem)
    if comp:
        bumped = comp[:-1] + (comp[-1] + 1,)
        closed = layered_value(comp) ** (k - rem) * layered_value(bumped) ** rem
        if value != closed:
            raise EngineMismatchError(
                f"multi-layered DP {value} != layered closed form {closed} "
                f"at n={n}, k={k}, composition {comp}"
            )
    return MaxRecord(n, k, "exact", value, log2_int(value), _sizes(comp, k, rem))


@dataclass(frozen=True)
class SymmetricGroupMax:
    """Exhaustive maximum of the q = 1 specialization over S_n."""

    n: int
    value: int
    argmaxes: tuple[Permutation, ...]
    all_layered: bool


def max_over_symmetric_group(n: int, guard: int = SYMMETRIC_GUARD) -> SymmetricGroupMax:
    """u(n) by brute force, reporting every maximizer."""
    if n > guard:
        raise GuardExceededError(f"n={n} exceeds symmetric-group guard {guard}")
    best = -1
    argmaxes: list[Permutation] = []
    for word in _itpermutations(range(1, n + 1)):
        w = Permutation(word)
        count = len(enumerate_bpds(w, max(n, ENUMERATION_GUARD)))
        if count > best:
            best = count
            argmaxes = [w]
        elif count == best:
            argmaxes.append(w)
    return SymmetricGroupMax(
        n, best, tuple(argmaxes), all(w.layer_blocks() is not None for w in argmaxes)
    )


@dataclass(frozen=True)
class SymmetricGroupRootMax:
    """Exhaustive maximum of |S at zeta_k| over S_n, compared through exact
    squared moduli whenever they are rational integers."""

    n: int
    k: int
    squared: "int | CyclotomicInteger"
    modulus: int | None
    argmaxes: tuple[Permutation, ...]
    all_multi_layered: bool


@lru_cache(maxsize=4096)
def _cached_q_spec(word: tuple[int, ...]):
    return q_specialization(Permutation(word))


def _squared_key(z: CyclotomicInteger) -> tuple:
    product = z * z.conjugate()
    if product.is_rational():
        return ("exact", product.rational_part())
    return ("float", product)


def _compare_squared(a: tuple, b: tuple) -> int:
    """-1, 0, 1 ordering on squared moduli; AmbiguousTieError when a float
    comparison between distinct elements lands inside the tie window."""
    if a[0] == "exact" and b[0] == "exact":
        return (a[1] > b[1]) - (a[1] < b[1])
    va = mpmath.mpf(a[1]) if a[0] == "exact" else _embed_real(a[1])
    vb = mpmath.mpf(b[1]) if b[0] == "exact" else _embed_real(b[1])
    if abs(va - vb) <= _TIE_EPS * max(1, abs(va), abs(vb)):
        if a == b:
            return 0
        raise AmbiguousTieError(f"squared moduli too close to order: {a} vs {b}")
    return 1 if va > vb else -1


def _embed_real(z: CyclotomicInteger):
    with mpmath.workdps(60):
        zeta = mpmath.exp(2j * mpmath.pi / z.k)
        acc = mpmath.mpc(0)
        for c in reversed(z.coeffs):
            acc = acc * zeta + c
        return mpmath.re(acc)


def max_root_over_symmetric_group(
    n: int, k: int, j: int = 1, guard: int = SYMMETRIC_ROOT_GUARD
) -> SymmetricGroupRootMax:
    """u_k(n) by brute force.  Asserts the per-permutation bound that the
    root specialization never exceeds the q = 1 value."""
    if n > guard:
        raise GuardExceededError(f"n={n} exceeds root brute-force guard {guard}")
    best_key: tuple | None = None
    argmaxes: list[Permutation] = []
    for word in _itpermutations(range(1, n + 1)):
        w = Permutation(word)
        poly = _cached_q_spec(word)
        z = eval_at_root(poly, k, j)
        key = _squared_key(z)
        upsilon = poly(1)
        if key[0] == "exact" and key[1] > upsilon * upsilon:
            raise EngineMismatchError(
                f"|S_w(zeta)|^2 = {key[1]} exceeds upsilon^2 for w={w}"
            )
        if best_key is None:
            best_key, argmaxes = key, [w]
            continue
        order = _compare_squared(key, best_key)
        if order > 0:
            best_key, argmaxes = key, [w]
        elif order == 0:
            argmaxes.append(w)
    assert best_key is not None
    squared = best_key[1]
    modulus = None
    if best_key[0] == "exact":
        root = math.isqrt(squared)
        modulus = root if root * root == squared else None
    return SymmetricGroupRootMax(
        n,
        k,
        squared,
        modulus,
        tuple(argmaxes),
        all(w.multi_layer_blocks(k) is not None for w in argmaxes),
    )


@lru_cache(maxsize=None)
def _log2_factor(prefix: int, block: int) -> float:
    return log2_int(layer_factor(prefix, block))


@lru_cache(maxsize=None)
def _best_log(prefix: int, remaining: int) -> tuple[float, Composition]:
    """Float companion of the exact layered DP; factors are exact integers
    rounded once through log2, so each carries at most ~1e-15 relative
    rounding."""
    if remaining == 0:
        return 0.0, ()
    best_value = -math.inf
    best_comp: Composition = ()
    for block in range(1, remaining + 1):
        value = _log2_factor(prefix, block) + _best_log(prefix + block, remaining - block)[0]
        if value > best_value:
            best_value = value
            best_comp = (block,) + _best_log(prefix + block, remaining - block)[1]
    return best_value, best_comp


def max_layered_log(n: int) -> MaxRecord:
    """v(n) in log2 space; same argmax rule as the exact DP up to float ties."""
    value, comp = _best_log(0, n)
    return MaxRecord(n, 1, "log", None, value, comp)


def growth_exponent_estimate(n: int, mode: str = "exact") -> float:
    """log2 v(n) / n^2, the finite-n estimate of the layered growth constant."""
    if mode == "exact":
        if n > EXACT_GUARD:
            raise GuardExceededError(f"n={n} exceeds exact-mode guard {EXACT_GUARD}")
        return max_layered(n).log2_value / (n * n)
    if mode == "log":
        if n > LOG_GUARD:
            raise GuardExceededError(f"n={n} exceeds log-mode guard {LOG_GUARD}")
        return max_layered_log(n).log2_value / (n * n)
    raise ValueError(f"mode must be 'exact' or 'log', got {mode!r}")


def layer_decay_estimate(n: int, layers: int = 5) -> float:
    """Fitted geometric ratio between consecutive maximizing layer sizes.

    The maximizing composition is read from its largest (rightmost) layer
    inward, and a least-squares line through log2 of the first few sizes
    gives the decay ratio.
    """
    comp = max_layered(n).argmax
    if len(comp) < 3:
        raise DegenerateCompositionError(
            f"maximizer of n={n} has only {len(comp)} layers"
        )
    ordered = tuple(reversed(comp))
    use = ordered[: max(3, min(layers, len(ordered)))]
    xs = range(len(use))
    ys = [math.log2(b) for b in use]
    mean_x = sum(xs) / len(use)
    mean_y = sum(ys) / len(use)
    slope = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys)) / sum(
        (x - mean_x) ** 2 for x in xs
    )
    return 2.0**slope
