import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyceq.equalizer import (
    BlockGroupGeometry,
    Cycle,
    LengthMismatchError,
    ParikhMismatchError,
    Permutation,
    block_group_position,
    build_cycle_words,
    cycle_decompose,
    distinct_letter_lift,
    equalize,
    is_cyclically_equalizable,
    normalize,
    phi,
)
from cyceq.insertion import verify_certificate
from cyceq.words import Word, cyclic_equivalence_offset, cyclic_shift, parikh, read_with_step

import naive
import worked_examples as P


class TestLift:
    def test_worked_example(self):
        ul, vl, lift = distinct_letter_lift("acbcac", "cbaacc")
        assert list(ul) == ["a#1", "c#1", "b", "c#2", "a#2", "c#3"]
        assert list(vl) == ["c#1", "b", "a#1", "a#2", "c#2", "c#3"]
        assert lift.lower(ul) == Word("acbcac")
        assert lift.lower(vl) == Word("cbaacc")

    def test_distinct_unchanged(self):
        ul, vl, lift = distinct_letter_lift("0123", "3120")
        assert (ul, vl) == (Word("0123"), Word("3120"))
        assert lift.forward == {} and lift.backward == {}

    def test_repeat(self):
        ul, vl, _ = distinct_letter_lift("aa", "aa")
        assert list(ul) == list(vl) == ["a#1", "a#2"]

    def test_fresh_letters_avoid_alphabet(self):
        ul, _, lift = distinct_letter_lift(["a", "a", "a#1"], ["a#1", "a", "a"])
        assert len(set(ul)) == 3
        assert not set(lift.backward) & {"a", "a#1"}

    def test_mismatch(self):
        with pytest.raises(ParikhMismatchError) as exc:
            distinct_letter_lift("aab", "abb")
        assert exc.value.letter == "a"


class TestNormalize:
    def test_example1(self):
        assert normalize("01234", "30421").images == (3, 0, 4, 2, 1)

    def test_example2(self):
        assert normalize("01234", "34021").images == (3, 4, 0, 2, 1)

    def test_identity(self):
        assert normalize("xyz", "xyz") == Permutation.identity(3)

    def test_relabels(self):
        # v[i] == u[pi(i)]
        pi = normalize("cab", "abc")
        assert [Word("cab")[pi(i)] for i in range(3)] == list("abc")

    @pytest.mark.parametrize("u, v", [("aab", "aba"), ("abc", "abd"), ("ab", "abc")])
    def test_errors(self, u, v):
        with pytest.raises(ValueError):
            normalize(u, v)


class TestCycles:
    def test_single(self):
        assert cycle_decompose(Permutation((3, 0, 4, 2, 1))) == [Cycle((0, 3, 2, 4, 1))]

    def test_two(self):
        assert cycle_decompose(Permutation((3, 4, 0, 2, 1))) == [Cycle((0, 3, 2)), Cycle((1, 4))]
        assert str(Permutation((3, 4, 0, 2, 1))) == "(0 3 2)(1 4)"

    def test_identity(self):
        assert cycle_decompose(Permutation.identity(3)) == [Cycle((0,)), Cycle((1,)), Cycle((2,))]

    def test_bad_permutation(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    @given(st.permutations(list(range(12))))
    def test_partition_and_orbits(self, images):
        pi = Permutation(tuple(images))
        cycles = cycle_decompose(pi)
        assert sorted(x for c in cycles for x in c.elements) == list(range(12))
        assert [c.anchor for c in cycles] == sorted(c.anchor for c in cycles)
        for c in cycles:
            assert c.anchor == min(c.elements)
            for k, x in enumerate(c.elements):
                assert pi(x) == c.elements[(k + 1) % len(c)]


class TestGeometry:
    def test_phi_sequence(self):
        g = BlockGroupGeometry(5)
        assert [phi(g, i) for i in range(25)] == P.EX1_PHI
        assert phi(g, 7) == 17
        assert phi(g, 24) == 19
        assert phi(BlockGroupGeometry(9), 0) == 0

    def test_phi_range(self):
        with pytest.raises(ValueError):
            phi(BlockGroupGeometry(5), 25)

    def test_worked_positions(self):
        g = BlockGroupGeometry(5)
        assert block_group_position(g, 3, 1) == 17
        assert block_group_position(g, 4, 3) == 21
        assert [block_group_position(g, t, k) for t, k in [(0, 0), (2, 2), (1, 4)]] == [0, 10, 7]
        assert [block_group_position(g, t, k) for t, k in [(1, 0), (4, 1)]] == [6, 23]

    @pytest.mark.parametrize("n", [1, 2, 7, 13])
    def test_diagonal(self, n):
        g = BlockGroupGeometry(n)
        assert [block_group_position(g, t, t) for t in range(n)] == [t * n for t in range(n)]

    def test_range(self):
        with pytest.raises(ValueError):
            block_group_position(BlockGroupGeometry(5), 5, 0)

    @pytest.mark.parametrize("n", [1, 2, 3, 6, 11])
    def test_block_and_group(self, n):
        g = BlockGroupGeometry(n)
        order = list(g.reading_order)
        groups = [set(order[k * n : (k + 1) * n]) for k in range(n)]
        for t in range(n):
            block = set(range(t * n, (t + 1) * n))
            for k in range(n):
                (only,) = block & groups[k]
                assert block_group_position(g, t, k) == only


class TestCycleWords:
    def test_example1(self):
        g = BlockGroupGeometry(5)
        pair = build_cycle_words(g, Cycle((0, 3, 2, 4, 1)))
        assert pair.u_s == Word(P.EX1_U)
        assert pair.v_s == Word(P.EX1_V)
        assert sorted(pair.distinguished) == P.EX1_DISTINGUISHED
        assert read_with_step(pair.u_s, 6) == Word(P.EX1_A)
        assert read_with_step(pair.v_s, 6) == Word(P.EX1_B)

    def test_example2(self):
        g = BlockGroupGeometry(5)
        pi = Permutation((3, 4, 0, 2, 1))
        first, second = (build_cycle_words(g, c, pi) for c in pi.cycles)
        assert str(first.u_s)[:5] == "00002"
        assert (first.u_s, first.v_s) == (Word(P.EX2_U1), Word(P.EX2_V1))
        assert (second.u_s, second.v_s) == (Word(P.EX2_U2), Word(P.EX2_V2))
        assert list(first.distinguished) == P.EX2_DIST1
        assert list(second.distinguished) == P.EX2_DIST2
        assert read_with_step(first.u_s, 6) == Word(P.EX2_A1)
        assert read_with_step(first.v_s, 6) == Word(P.EX2_B1)
        assert read_with_step(second.u_s, 6) == Word(P.EX2_A2)
        assert read_with_step(second.v_s, 6) == Word(P.EX2_B2)

    def test_trivial(self):
        pair = build_cycle_words(BlockGroupGeometry(1), Cycle((0,)))
        assert pair.u_s == pair.v_s == Word("0")
        assert pair.distinguished == (0,)

    def test_foreign_cycle(self):
        with pytest.raises(ValueError):
            build_cycle_words(BlockGroupGeometry(3), Cycle((0, 1)), Permutation.identity(3))

    @settings(max_examples=60)
    @given(st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(n)))))
    def test_cycle_invariants(self, images):
        pi = Permutation(tuple(images))
        n = len(pi)
        g = BlockGroupGeometry(n)
        for cycle in pi.cycles:
            pair = build_cycle_words(g, cycle, pi)
            orbit = cycle.elements
            dist = set(pair.distinguished)
            for k, pos in enumerate(pair.distinguished):
                assert pos == block_group_position(g, orbit[k], k)
                assert pair.u_s[pos] == str(orbit[k])
                assert pair.v_s[pos] == str(orbit[(k + 1) % len(orbit)])
            assert len({p // n for p in dist}) == len(orbit)
            for pos in range(n * n):
                if pos not in dist:
                    assert pair.u_s[pos] == pair.v_s[pos]
            a, b = read_with_step(pair.u_s, n + 1), read_with_step(pair.v_s, n + 1)
            assert b == cyclic_shift(a, 1)


class TestEqualize:
    def test_example1(self):
        cert = equalize("01234", "30421")
        assert str(cert.u_expanded) == P.EX1_U
        assert str(cert.v_expanded) == P.EX1_V
        assert cert.offset.value == 6
        assert cert.expanded_length == 25
        assert list(cert.distinguished) == P.EX1_DISTINGUISHED
        assert verify_certificate(cert)

    def test_example2(self):
        cert = equalize("01234", "34021")
        assert str(cert.u_expanded) == P.EX2_U
        assert str(cert.v_expanded) == P.EX2_V
        assert cert.offset.value == 12
        assert 12 in naive.all_offsets(P.EX2_U, P.EX2_V)
        assert verify_certificate(cert)

    def test_single_letter(self):
        cert = equalize("0", "0")
        assert str(cert.u_expanded) == str(cert.v_expanded) == "0"
        assert cert.offset.value == 0
        assert cert.insertion.inserted_total == 0

    def test_empty(self):
        cert = equalize("", "")
        assert cert.expanded_length == 0
        assert cert.insertion.segments == (Word(),)
        assert verify_certificate(cert)

    def test_repeated_letters(self):
        cert = equalize("acbcac", "cbaacc")
        assert verify_certificate(cert)
        assert set(cert.u_expanded) <= set("abc")

    def test_identity_is_cubic(self):
        cert = equalize("abc", "abc")
        assert cert.expanded_length == 27
        assert verify_certificate(cert)

    def test_errors(self):
        with pytest.raises(LengthMismatchError):
            equalize("01", "012")
        with pytest.raises(ParikhMismatchError) as exc:
            equalize("01", "11")
        assert exc.value.letter == "0"

    def test_decision(self):
        assert is_cyclically_equalizable("12344", "42431")
        assert not is_cyclically_equalizable("01", "11")
        assert not is_cyclically_equalizable("01", "0")
        assert is_cyclically_equalizable("", "")

    @settings(max_examples=80)
    @given(st.lists(st.sampled_from("abcdef"), max_size=10), st.randoms(use_true_random=False))
    def test_sound(self, letters, rnd):
        v = letters[:]
        rnd.shuffle(v)
        cert = equalize(letters, v)
        assert verify_certificate(cert)
        n = len(letters)
        if n:
            m = cert.construction.m
            assert cert.expanded_length == m * n * n
            assert cert.offset.value == m * (n + 1) % (m * n * n)
            if m == 1:
                assert cert.v_expanded == cyclic_shift(cert.u_expanded, n + 1)

    @given(st.lists(st.sampled_from("abc"), max_size=6), st.lists(st.sampled_from("abc"), max_size=6))
    def test_necessity(self, u, v):
        if len(u) == len(v) and parikh(u) == parikh(v):
            assert verify_certificate(equalize(u, v))
        else:
            with pytest.raises((ParikhMismatchError, LengthMismatchError)):
                equalize(u, v)


def test_offset_is_a_real_rotation():
    rng = random.Random(5)
    for _ in range(30):
        u = [rng.choice("xyz") for _ in range(rng.randint(1, 7))]
        v = u[:]
        rng.shuffle(v)
        cert = equalize(u, v)
        assert cyclic_equivalence_offset(cert.u_expanded, cert.v_expanded) is not None
        assert cert.offset.value in naive.all_offsets(cert.u_expanded, cert.v_expanded)
