import doctest
import itertools

import pytest

import schubspec.permutations
from schubspec.errors import (
    DuplicateEntryError,
    GuardExceededError,
    InvalidRemainderError,
    OutOfRangeError,
)
from schubspec.permutations import (
    Permutation,
    comajor,
    direct_sum,
    doubly_layered,
    layered,
    multi_layered,
    one_fixed_then,
    reduced_words,
)


def test_doctests():
    failures, _ = doctest.testmod(schubspec.permutations)
    assert failures == 0


class TestConstruction:
    def test_identity_of_s1(self):
        assert Permutation((1,)).word == (1,)

    def test_fig3_permutation_length(self):
        w = Permutation((1, 2, 5, 6, 3, 4))
        # independent oracle: count inversions pairwise
        word = w.word
        inversions = sum(
            1 for i in range(6) for j in range(i + 1, 6) if word[i] > word[j]
        )
        assert inversions == 4
        assert w.length() == 4

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEntryError):
            Permutation((1, 1, 2))

    def test_out_of_range_rejected(self):
        with pytest.raises(OutOfRangeError):
            Permutation((1, 5, 2))
        with pytest.raises(OutOfRangeError):
            Permutation((0, 1))

    def test_string_round_trip(self):
        w = Permutation.from_string("1,2,5,6,3,4")
        assert str(w) == "1,2,5,6,3,4"


class TestLayeredFamilies:
    def test_single_fixed_point_then_reversal(self):
        for n in range(2, 8):
            assert layered((1, n - 1)).word == (1, n) + tuple(range(n - 1, 1, -1))

    def test_full_reversal(self):
        assert layered((4,)) == Permutation.longest(4)

    def test_all_singletons(self):
        assert layered((1, 1, 1)) == Permutation.identity(3)

    def test_doubly_layered_even(self):
        assert doubly_layered((2, 4)).word == (1, 2, 5, 6, 3, 4)

    def test_doubly_layered_single_minimal(self):
        assert doubly_layered((2,)).word == (1, 2)

    def test_doubly_layered_odd_golden(self):
        # expanded by hand from the step-2 block pattern with the remainder
        # value closing the final layer
        assert doubly_layered((2, 5)).word == (1, 2, 6, 7, 4, 5, 3)

    def test_multi_layered_specializes(self):
        for parts in [(1, 3), (2, 2), (1, 1, 2), (4,)]:
            assert multi_layered(1, parts) == layered(parts)
        for parts in [(2, 4), (2, 5), (4, 2), (6,), (2, 2, 3)]:
            assert multi_layered(2, parts) == doubly_layered(parts)

    def test_multi_layered_k3_goldens(self):
        # hand expansions of the k-block pattern
        assert multi_layered(3, (3, 3)) == Permutation.identity(6)
        assert multi_layered(3, (3, 6)).word == (1, 2, 3, 7, 8, 9, 4, 5, 6)
        assert multi_layered(3, (3, 7)).word == (1, 2, 3, 8, 9, 10, 5, 6, 7, 4)

    def test_invalid_remainder(self):
        with pytest.raises(InvalidRemainderError):
            multi_layered(2, (3, 4))  # non-final odd layer
        with pytest.raises(InvalidRemainderError):
            multi_layered(3, (4, 3))

    def test_layer_blocks_round_trip(self):
        for parts in [(1,), (3,), (1, 2), (2, 1, 3)]:
            assert layered(parts).layer_blocks() == parts
        assert Permutation((2, 3, 1)).layer_blocks() is None

    def test_multi_layer_blocks_round_trip(self):
        for k, parts in [(2, (2, 4)), (2, (2, 5)), (3, (3, 6)), (3, (3, 7))]:
            assert multi_layered(k, parts).multi_layer_blocks(k) == parts
        # (2,3,1) is the one-layer pattern itself; (3,1,2) fits no pattern
        assert Permutation((2, 3, 1)).multi_layer_blocks(2) == (3,)
        assert Permutation((3, 1, 2)).multi_layer_blocks(2) is None
        assert Permutation((3, 1, 2)).layer_blocks() is None


class TestDirectSum:
    def test_trivial(self):
        assert direct_sum(Permutation((1,)), Permutation((1,))).word == (1, 2)

    def test_two_reversals(self):
        assert direct_sum(Permutation((2, 1)), Permutation((2, 1))).word == (2, 1, 4, 3)

    def test_one_fixed_then(self):
        assert one_fixed_then(2, Permutation((2, 1))).word == (1, 2, 4, 3)

    def test_associative(self):
        u, v, x = Permutation((2, 1)), Permutation((1, 3, 2)), Permutation((3, 1, 2))
        assert direct_sum(direct_sum(u, v), x) == direct_sum(u, direct_sum(v, x))

    def test_layered_is_fold_of_reversals(self):
        parts = (2, 1, 3)
        folded = Permutation.longest(2)
        for b in parts[1:]:
            folded = direct_sum(folded, Permutation.longest(b))
        assert folded == layered(parts)


class TestReducedWords:
    def test_identity_single_empty_word(self):
        assert list(reduced_words(Permutation.identity(3))) == [()]

    def test_longest_element_s3(self):
        # brute force oracle over all length-3 words in letters {1, 2}
        target = Permutation((3, 2, 1))
        brute = set()
        for word in itertools.product((1, 2), repeat=3):
            v = Permutation.identity(3)
            for letter in reversed(word):
                v = v.swap_values(letter)
            if v == target:
                brute.add(word)
        assert set(reduced_words(target)) == brute == {(1, 2, 1), (2, 1, 2)}

    def test_single_transposition(self):
        assert list(reduced_words(Permutation((2, 1, 3)))) == [(1,)]

    def test_lexicographic_order(self):
        words = list(reduced_words(Permutation.longest(4)))
        assert words == sorted(words)
        assert len(words) == len(set(words)) == 16

    def test_every_word_multiplies_back(self):
        for target_word in itertools.permutations(range(1, 5)):
            w = Permutation(target_word)
            for word in reduced_words(w):
                assert len(word) == w.length()
                v = Permutation.identity(4)
                for letter in reversed(word):
                    v = v.swap_values(letter)
                assert v == w

    def test_count_invariant_under_stripping_side(self):
        # strip first letters (the generator) vs strip last letters: the
        # reduced word count must not depend on the enumeration direction
        def swap_positions(w: Permutation, i: int) -> Permutation:
            word = list(w.word)
            word[i - 1], word[i] = word[i], word[i - 1]
            return Permutation(word)

        def count_from_right(w: Permutation) -> int:
            if w.length() == 0:
                return 1
            return sum(count_from_right(swap_positions(w, i)) for i in w.descents())

        for target in itertools.permutations(range(1, 5)):
            w = Permutation(target)
            assert count_from_right(w) == len(list(reduced_words(w)))

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            list(reduced_words(Permutation.longest(7), guard=16))


class TestComajor:
    @pytest.mark.parametrize(
        "word,expected", [((1, 2, 1), 1), ((2, 1, 2), 2), ((), 0), ((3, 1, 2, 4), 5)]
    )
    def test_values(self, word, expected):
        assert comajor(word) == expected


class TestRotheDiagram:
    def test_identity_empty(self):
        assert Permutation.identity(4).rothe_diagram() == set()

    def test_transposition(self):
        assert Permutation((2, 1)).rothe_diagram() == {(1, 1)}

    def test_fig3_count(self):
        assert len(Permutation((1, 2, 5, 6, 3, 4)).rothe_diagram()) == 4

    def test_size_equals_length(self):
        for word in itertools.permutations(range(1, 6)):
            w = Permutation(word)
            assert len(w.rothe_diagram()) == w.length()

    def test_row_counts_are_the_code(self):
        for word in itertools.permutations(range(1, 6)):
            w = Permutation(word)
            code = [
                sum(1 for j in range(i + 1, 5) if word[j] < word[i]) for i in range(5)
            ]
            diagram = w.rothe_diagram()
            rows = [sum(1 for (a, _) in diagram if a == i + 1) for i in range(5)]
            assert rows == code


def test_layered_length_formula():
    # each layer of size b contributes b(b-1)/2 inversions
    for parts in [(1,), (2, 3), (1, 4, 2), (3, 3, 1)]:
        w = layered(parts)
        assert w.length() == sum(b * (b - 1) // 2 for b in parts)
