"""Independent engine for S_w(1, q, q^2, ...) summing over reduced words.

Each word a = (a_1, ..., a_l) contributes q^comajor(a) (1-q^a_1)...(1-q^a_l),
and the total divides exactly by (1-q)(1-q^2)...(1-q^l).  Individual terms
have poles at roots of unity, so the engine assembles the full numerator
polynomial over the common denominator and divides once, exactly.
"""

from __future__ import annotations

import math

from .errors import GuardExceededError, NonIntegralResultError
from .permutations import Permutation
from .rings import IntPolynomial, geometric_factor

WORD_LENGTH_GUARD = 12


def q_specialization_from_words(
    w: Permutation, guard: int = WORD_LENGTH_GUARD
) -> IntPolynomial:
    """S_w(1, q, q^2, ...) via the reduced-word sum.

    The depth-first enumeration strips first letters in ascending order,
    sharing the partial numerator product along common prefixes; the comajor
    statistic accumulates with each appended letter.
    """
    length = w.length()
    if length > guard:
        raise GuardExceededError(f"length {length} exceeds word guard {guard}")
    accumulator: list[int] = []

    def add_shifted(product: list[int], shift: int) -> None:
        top = shift + len(product)
        if top > len(accumulator):
            accumulator.extend([0] * (top - len(accumulator)))
        for e, c in enumerate(product):
            if c:
                accumulator[shift + e] += c

    def walk(v: Permutation, product: list[int], comaj: int, pos: int, last: int) -> None:
        pos_of = {value: i for i, value in enumerate(v.word)}
        letters = [i for i in range(1, v.n) if pos_of[i] > pos_of[i + 1]]
        if not letters:
            add_shifted(product, comaj)
            return
        for i in letters:
            # multiply the running product by (1 - q^i)
            grown = product + [0] * i
            for e, c in enumerate(product):
                if c:
                    grown[e + i] -= c
            bump = pos if pos and last < i else 0
            walk(v.swap_values(i), grown, comaj + bump, pos + 1, i)

    walk(w, [1], 0, 0, 0)
    numerator = IntPolynomial(accumulator)
    denominator = IntPolynomial((1,))
    for i in range(1, length + 1):
        denominator = denominator * geometric_factor(i)
    return numerator.exact_div(denominator)


def principal_from_words(w: Permutation, guard: int = WORD_LENGTH_GUARD) -> int:
    """S_w(1, 1, ...) via the q -> 1 limit of the word sum: the sum of the
    letter products over all reduced words, divided by length factorial."""
    length = w.length()
    if length > guard:
        raise GuardExceededError(f"length {length} exceeds word guard {guard}")
    total = 0

    def walk(v: Permutation, product: int) -> None:
        nonlocal total
        pos_of = {value: i for i, value in enumerate(v.word)}
        letters = [i for i in range(1, v.n) if pos_of[i] > pos_of[i + 1]]
        if not letters:
            total += product
            return
        for i in letters:
            walk(v.swap_values(i), product * i)

    walk(w, 1)
    divisor = math.factorial(length)
    if total % divisor:
        raise NonIntegralResultError(
            f"word sum {total} not divisible by {length}! = {divisor}"
        )
    return total // divisor
