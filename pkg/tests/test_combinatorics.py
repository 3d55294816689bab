from collections import Counter

import pytest
from hypothesis import given, strategies as st

from narayana.combinatorics import (
    DEFAULT_MAX_CELLS,
    BallotPath,
    BudgetExceededError,
    LatticeWord,
    Partition,
    StandardTableau,
    enumerate_ballot_paths,
    enumerate_lattice_words,
    enumerate_partitions,
    enumerate_syt,
    is_lattice_word,
    syt_count_hook,
)

SAMPLE_WORD = "121113223233"


@st.composite
def partitions(draw, max_cells=10):
    total = draw(st.integers(min_value=1, max_value=max_cells))
    bins = draw(st.integers(min_value=1, max_value=total))
    counts = Counter(
        draw(st.lists(st.integers(0, bins - 1), min_size=total, max_size=total))
    )
    return Partition(tuple(sorted(counts.values(), reverse=True)))


class TestPartition:
    def test_validation(self):
        Partition((3, 2, 2, 1))
        Partition(())
        with pytest.raises(ValueError):
            Partition((2, 3))
        with pytest.raises(ValueError):
            Partition((2, 0))
        with pytest.raises(ValueError):
            Partition((-1,))

    def test_cells_and_rows(self):
        shape = Partition((4, 2, 1))
        assert shape.cells == 7
        assert shape.rows == 3
        assert str(shape) == "4,2,1"

    def test_rectangle(self):
        assert Partition.rectangle(4, 3).parts == (4, 4, 4)
        assert Partition.rectangle(0, 3).parts == ()
        assert Partition.rectangle(3, 0).parts == ()
        with pytest.raises(ValueError):
            Partition.rectangle(-1, 2)

    def test_from_string(self):
        assert Partition.from_string("3,2,1").parts == (3, 2, 1)
        with pytest.raises(ValueError):
            Partition.from_string("3,x")

    def test_conjugate(self):
        assert Partition((4, 2, 1)).conjugate().parts == (3, 2, 1, 1)
        assert Partition(()).conjugate().parts == ()

    @given(partitions())
    def test_conjugate_is_an_involution(self, shape):
        assert shape.conjugate().conjugate() == shape

    def test_is_rectangular(self):
        assert Partition((3, 3)).is_rectangular()
        assert not Partition((3, 2)).is_rectangular()


class TestIsLatticeWord:
    def test_twelve_cell_word(self):
        assert is_lattice_word([int(c) for c in SAMPLE_WORD], 4, 3)

    def test_smallest_violation(self):
        assert not is_lattice_word([2, 1], 1, 2)

    def test_direct_prefix_scan(self):
        assert is_lattice_word([1, 1, 2, 2, 1, 2], 3, 2)

    def test_wrong_counts(self):
        assert not is_lattice_word([1, 1, 2], 2, 2)

    def test_symbol_out_of_alphabet(self):
        with pytest.raises(ValueError, match="position 3"):
            is_lattice_word([1, 2, 5], 1, 2)
        with pytest.raises(ValueError, match="position 1"):
            is_lattice_word([0, 1], 1, 1)


class TestLatticeWord:
    def test_statistics(self):
        word = LatticeWord.from_string(SAMPLE_WORD, 4, 3)
        assert word.ascent_count() == 4
        assert word.descent_count() == 3

    def test_constant_word(self):
        word = LatticeWord((1,) * 6, 6, 1)
        assert word.ascent_count() == 0
        assert word.descent_count() == 0

    def test_increasing_word(self):
        word = LatticeWord(tuple(range(1, 6)), 1, 5)
        assert word.ascent_count() == 4
        assert word.descent_count() == 0

    def test_sorted_word_has_no_descent(self):
        word = LatticeWord((1, 1, 2, 2, 3, 3), 2, 3)
        assert word.descent_count() == 0

    def test_invalid_word_rejected(self):
        with pytest.raises(ValueError):
            LatticeWord((2, 1), 1, 2)
        with pytest.raises(ValueError):
            LatticeWord((1, 1), 1, 2)

    def test_from_string_comma_form(self):
        assert LatticeWord.from_string("1,2,1,2", 2, 2).symbols == (1, 2, 1, 2)

    def test_str(self):
        assert str(LatticeWord((1, 2, 1, 2), 2, 2)) == "1212"


class TestBallotPath:
    def test_region_enforced(self):
        BallotPath((2, 1), 1, 2)
        with pytest.raises(ValueError, match="prefix of length 1"):
            BallotPath((1, 2), 1, 2)

    def test_counts_enforced(self):
        with pytest.raises(ValueError):
            BallotPath((2, 2), 1, 2)

    def test_statistics_swap_against_word(self):
        path = BallotPath((3, 2, 3, 3, 3, 1, 2, 2, 1, 2, 1, 1), 4, 3)
        assert path.ascent_count() == 3
        assert path.descent_count() == 4

    def test_single_coordinate(self):
        path = BallotPath((1, 1, 1), 3, 1)
        assert path.ascent_count() == 0
        assert path.descent_count() == 0


class TestStandardTableau:
    def test_twelve_cell_tableau_descents(self):
        tableau = StandardTableau(((1, 3, 4, 5), (2, 7, 8, 10), (6, 9, 11, 12)))
        assert tableau.descent_set() == frozenset({1, 5, 8, 10})
        assert tableau.descent_count() == 4

    def test_single_row_and_column(self):
        assert StandardTableau(((1, 2, 3, 4),)).descent_set() == frozenset()
        column = StandardTableau(((1,), (2,), (3,)))
        assert column.descent_set() == frozenset({1, 2})

    def test_row_of(self):
        tableau = StandardTableau(((1, 2), (3, 4)))
        assert tableau.row_of(3) == 2
        with pytest.raises(ValueError):
            tableau.row_of(9)

    def test_shape_and_str(self):
        tableau = StandardTableau(((1, 2), (3, 4)))
        assert tableau.shape == Partition((2, 2))
        assert str(tableau) == "1,2;3,4"

    def test_validation(self):
        with pytest.raises(ValueError, match="row 1"):
            StandardTableau(((2, 1), (3, 4)))
        with pytest.raises(ValueError, match="column 1"):
            StandardTableau(((2, 3), (1, 4)))
        with pytest.raises(ValueError, match="entries"):
            StandardTableau(((1, 2), (3, 5)))
        with pytest.raises(ValueError, match="weakly decreasing"):
            StandardTableau(((1,), (2, 3)))


class TestEnumeration:
    def test_unique_word_for_n_one(self):
        assert [str(w) for w in enumerate_lattice_words(1, 3)] == ["123"]
        assert [str(w) for w in enumerate_lattice_words(1, 4)] == ["1234"]

    def test_two_by_two(self):
        assert [str(w) for w in enumerate_lattice_words(2, 2)] == ["1122", "1212"]

    def test_catalan_counts(self):
        assert len(list(enumerate_lattice_words(3, 2))) == 5
        assert len(list(enumerate_lattice_words(4, 2))) == 14

    def test_degenerate_weights(self):
        assert [w.symbols for w in enumerate_lattice_words(0, 4)] == [()]
        assert [w.symbols for w in enumerate_lattice_words(4, 0)] == [()]

    def test_lexicographic_order_and_validity(self):
        words = [w.symbols for w in enumerate_lattice_words(3, 2)]
        assert words == sorted(words)
        assert all(is_lattice_word(w, 3, 2) for w in words)

    def test_budget(self):
        with pytest.raises(BudgetExceededError, match=str(DEFAULT_MAX_CELLS)):
            next(enumerate_lattice_words(23, 1))
        assert len(list(enumerate_lattice_words(23, 1, max_cells=23))) == 1

    def test_paths_match_words(self):
        paths = [p.steps for p in enumerate_ballot_paths(2, 2)]
        assert paths == [(2, 2, 1, 1), (2, 1, 2, 1)]


class TestSytEnumeration:
    def test_forced_fillings(self):
        assert [str(t) for t in enumerate_syt(Partition((1, 1, 1)))] == ["1;2;3"]
        assert len(list(enumerate_syt(Partition((2, 2))))) == 2

    def test_counts_match_words(self):
        assert len(list(enumerate_syt(Partition((3, 3))))) == 5
        assert len(list(enumerate_syt(Partition((3, 3))))) == len(
            list(enumerate_lattice_words(3, 2))
        )

    def test_order_is_lexicographic_by_row_readout(self):
        readouts = []
        for tableau in enumerate_syt(Partition((3, 2))):
            row_word = [0] * tableau.size
            for index, row in enumerate(tableau.rows, start=1):
                for entry in row:
                    row_word[entry - 1] = index
            readouts.append(tuple(row_word))
        assert readouts == sorted(readouts)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            next(enumerate_syt(Partition((12, 12))))

    @pytest.mark.parametrize(
        "parts",
        [(4,), (2, 2), (3, 2, 1), (4, 4, 4), (2, 2, 2, 1), (5, 3, 1)],
    )
    def test_hook_count_matches_enumeration(self, parts):
        shape = Partition(parts)
        assert syt_count_hook(shape) == len(list(enumerate_syt(shape)))


class TestHookCounts:
    def test_known_values(self):
        assert syt_count_hook(Partition((7,))) == 1
        assert syt_count_hook(Partition((2, 2))) == 2
        assert syt_count_hook(Partition((4, 4, 4))) == 462
        assert syt_count_hook(Partition((4, 2, 1))) == 35
        assert syt_count_hook(Partition(())) == 1


class TestEnumeratePartitions:
    def test_counts(self):
        expected = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15}
        for total, count in expected.items():
            assert len(list(enumerate_partitions(total))) == count

    def test_descending_lexicographic_order(self):
        parts = [shape.parts for shape in enumerate_partitions(4)]
        assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


WEIGHTS = [(n, m) for n in range(1, 5) for m in range(1, 5) if n * m <= 10]


@st.composite
def lattice_words(draw):
    n, m = draw(st.sampled_from(WEIGHTS))
    pool = list(enumerate_lattice_words(n, m))
    return draw(st.sampled_from(pool))


@given(lattice_words())
def test_adjacent_pairs_partition_into_ascents_descents_plateaus(word):
    plateaus = sum(1 for a, b in zip(word.symbols, word.symbols[1:]) if a == b)
    assert word.ascent_count() + word.descent_count() + plateaus == word.n * word.m - 1
    assert word.ascent_count() + word.descent_count() <= word.n * word.m - 1


@given(st.sampled_from(WEIGHTS))
def test_enumeration_count_matches_hook_oracle(weight):
    n, m = weight
    words = list(enumerate_lattice_words(n, m))
    assert len(words) == syt_count_hook(Partition.rectangle(n, m))
    assert len(set(words)) == len(words)
