import itertools
import random

import numpy as np
import pytest

from braidrack import (
    BraidWord,
    DimensionMismatch,
    IndexOutOfRange,
    SizeCapExceeded,
    apply_braid,
    apply_letter,
    closure_colorings,
    compose,
    counting_matrix,
    dihedral_quandle,
    free_reduce,
    identity,
    index_tuple,
    inverse,
    matrix_multiply,
    parse_braid,
    trace,
    tuple_index,
)
from braidrack.braids import BRAID, COMMUTE, apply_relation, random_word, relation_sites
from braidrack.coloring import format_coo, format_dense, format_perm, identity_matrix, legend

from conftest import small_racks

# printed rack counting matrix of s1^-1 s1^-1 over R3
EXAMPLE_B1 = np.array([
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
])


def slow_matrix(rack, word):
    """Dense matrix built tuple by tuple through the scalar crossing rules."""
    m, n = rack.order, word.strands
    d = np.zeros((m**n, m**n), dtype=int)
    for top in itertools.product(range(m), repeat=n):
        d[tuple_index(top, m), tuple_index(apply_braid(rack, top, word), m)] = 1
    return d


def random_pairs(seed, count, max_size=3**6):
    rng = random.Random(seed)
    racks = small_racks(5)
    out = []
    while len(out) < count:
        rack = rng.choice(racks)
        n = rng.randint(1, 6)
        if rack.order**n > max_size:
            continue
        out.append((rack, random_word(rng, n, rng.randint(0, 12))))
    return out


class TestCrossings:
    def test_negative(self, R3):
        assert apply_letter(R3, (0, 1), -1) == (1, 2)

    def test_positive(self, R3):
        # (a, b) -> (b |>^-1 a, a); in R3 |>^-1 = |>
        assert apply_letter(R3, (0, 1), 1) == (2, 0)

    def test_cancel(self):
        for rack in small_racks(4):
            for a, b in itertools.product(range(rack.order), repeat=2):
                assert apply_letter(rack, apply_letter(rack, (a, b), 1), -1) == (a, b)
                assert apply_letter(rack, apply_letter(rack, (a, b), -1), 1) == (a, b)

    def test_other_positions_untouched(self, R3):
        assert apply_letter(R3, (2, 0, 1, 1), -2) == (2, 1, 2, 1)

    def test_out_of_range(self, R3):
        with pytest.raises(IndexOutOfRange):
            apply_letter(R3, (0, 1), 2)

    def test_symbolic_pattern(self):
        # s1^-1 s1^-1 sends (x, y) to (x |> y, y |> (x |> y))
        for rack in small_racks(4):
            for x, y in itertools.product(range(rack.order), repeat=2):
                xy = rack.op(x, y)
                assert apply_braid(rack, (x, y), BraidWord(2, (-1, -1))) == (xy, rack.op(y, xy))

    def test_apply_braid(self, R3):
        assert apply_braid(R3, (0, 1), BraidWord(2, (-1, -1))) == (2, 0)
        assert apply_braid(R3, (0, 1), BraidWord(2, (-1, -1, -1))) == (0, 1)
        assert apply_braid(R3, (2, 1, 0), identity(3)) == (2, 1, 0)

    def test_apply_braid_length(self, R3):
        with pytest.raises(DimensionMismatch):
            apply_braid(R3, (0, 1), identity(3))


class TestIndexing:
    def test_values(self):
        assert tuple_index((0, 1), 3) == 1
        assert tuple_index((2, 0), 3) == 6

    def test_bijection(self):
        for i in range(9):
            assert tuple_index(index_tuple(i, 3, 2), 3) == i
        assert [index_tuple(i, 3, 2) for i in range(9)] == list(itertools.product(range(3), repeat=2))

    def test_range(self):
        with pytest.raises(ValueError):
            index_tuple(9, 3, 2)
        with pytest.raises(ValueError):
            tuple_index((3, 0), 3)


class TestCountingMatrix:
    def test_example_b1(self, R3):
        mat = counting_matrix(R3, BraidWord(2, (-1, -1)))
        assert np.array_equal(mat.to_dense(), EXAMPLE_B1)
        assert mat.perm.tolist() == [0, 6, 3, 7, 4, 1, 5, 2, 8]

    def test_example_b2_and_trefoil(self, R3):
        for letters in ((-1, -1, -1), (1, 1, 1)):
            assert counting_matrix(R3, BraidWord(2, letters)) == identity_matrix(3, 2)

    def test_matches_slow_route(self):
        for rack, word in random_pairs(3, 60, max_size=3**4):
            assert np.array_equal(counting_matrix(rack, word).to_dense(), slow_matrix(rack, word))

    def test_chunked_and_workers_bit_identical(self, monkeypatch):
        from braidrack import coloring

        rack = dihedral_quandle(5)
        word = random_word(random.Random(5), 6, 20)
        ref = counting_matrix(rack, word)
        monkeypatch.setattr(coloring, "CHUNK", 97)
        assert counting_matrix(rack, word, workers=4) == ref
        assert closure_colorings(rack, word, workers=3) == trace(ref)

    def test_cap(self, R3):
        with pytest.raises(SizeCapExceeded):
            counting_matrix(R3, identity(13))
        assert counting_matrix(R3, identity(4), cap=81).size == 81
        with pytest.raises(SizeCapExceeded):
            counting_matrix(R3, identity(4), cap=80)

    def test_multiply(self, R3):
        a = counting_matrix(R3, BraidWord(2, (-1, -1)))
        b = counting_matrix(R3, BraidWord(2, (-1,)))
        assert matrix_multiply(a, b) == identity_matrix(3, 2)
        assert np.array_equal((a @ b).to_dense(), a.to_dense() @ b.to_dense())

    def test_multiply_dimension(self, R3):
        with pytest.raises(DimensionMismatch):
            matrix_multiply(identity_matrix(3, 2), identity_matrix(3, 3))

    @pytest.mark.parametrize("n,letters,expected", [
        (2, (1, 1, 1), 9),
        (2, (1, 1, 1, 1, 1), 3),
        (3, (2, -1, 2, -1), 3),
    ])
    def test_trace(self, R3, n, letters, expected):
        assert trace(counting_matrix(R3, BraidWord(n, letters))) == expected


class TestProperties:
    def test_permutation(self):
        for rack, word in random_pairs(1, 200):
            assert counting_matrix(rack, word).is_permutation()

    def test_multiplicative_against_dense_product(self):
        rng = random.Random(2)
        for rack, a in random_pairs(2, 60, max_size=3**4):
            b = random_word(rng, a.strands, rng.randint(0, 8))
            lhs = counting_matrix(rack, compose(a, b))
            dense = counting_matrix(rack, a).to_dense() @ counting_matrix(rack, b).to_dense()
            assert np.array_equal(lhs.to_dense(), dense)

    def test_inverse_word(self):
        for rack, w in random_pairs(4, 50):
            assert counting_matrix(rack, w) @ counting_matrix(rack, inverse(w)) == identity_matrix(rack.order, w.strands)

    def test_move_invariance(self):
        for rack, w in random_pairs(6, 100):
            ref = counting_matrix(rack, w)
            assert counting_matrix(rack, free_reduce(w)) == ref
            for kind in (COMMUTE, BRAID):
                for pos in relation_sites(w, kind):
                    assert counting_matrix(rack, apply_relation(w, pos, kind)) == ref

    def test_trace_conjugation(self):
        rng = random.Random(8)
        for rack, a in random_pairs(8, 80):
            b = random_word(rng, a.strands, rng.randint(0, 8))
            assert trace(counting_matrix(rack, a * b)) == trace(counting_matrix(rack, b * a))

    def test_closure_equals_trace(self):
        for rack, w in random_pairs(9, 100):
            assert closure_colorings(rack, w) == trace(counting_matrix(rack, w))

    def test_every_top_extends_uniquely(self):
        # counting all colorings of the open diagram gives m^n
        for rack, w in random_pairs(10, 50, max_size=3**4):
            bottoms = [apply_braid(rack, t, w) for t in itertools.product(range(rack.order), repeat=w.strands)]
            assert len(bottoms) == rack.order**w.strands
            assert len(set(bottoms)) == len(bottoms)

    def test_quandle_stabilization(self):
        rng = random.Random(12)
        quandles = [r for r in small_racks(5) if r.is_quandle]
        done = 0
        while done < 60:
            q = rng.choice(quandles)
            n = rng.randint(1, 4)
            if q.order ** (n + 1) > 3**6:
                continue
            w = random_word(rng, n, rng.randint(0, 10))
            stab = BraidWord(n + 1, w.letters + (rng.choice((n, -n)),))
            assert closure_colorings(q, w) == closure_colorings(q, stab)
            done += 1

    def test_stabilization_fails_for_non_quandle(self):
        from braidrack import ts_rack

        rack = ts_rack(5, 2, 0)  # x |> y = 2x, no fixed kinks
        assert closure_colorings(rack, identity(1)) == 5
        assert closure_colorings(rack, BraidWord(2, (1,))) == 1


class TestExport:
    def test_perm(self, R3):
        assert format_perm(counting_matrix(R3, BraidWord(2, (-1, -1)))) == "0 6 3 7 4 1 5 2 8"

    def test_dense(self, R3):
        text = format_dense(counting_matrix(R3, BraidWord(2, (-1, -1))))
        assert np.array_equal(np.array([row.split() for row in text.splitlines()], dtype=int), EXAMPLE_B1)

    def test_coo(self, R3):
        lines = format_coo(counting_matrix(R3, BraidWord(2, (-1, -1)))).splitlines()
        assert lines[:3] == ["0 0", "1 6", "2 3"]
        assert len(lines) == 9

    def test_legend(self):
        assert legend(3, 2).splitlines()[6] == "# 6 = (2,0)"


def test_example_words_parse_identically(R3):
    assert counting_matrix(R3, parse_braid("s1' s1'", 2)) == counting_matrix(R3, parse_braid("-1 -1", 2))
