import pytest

import golden
from skipseq import (
    ValidationError,
    build_supersequence,
    gen_t1,
    gen_t2,
    gen_ts,
    generate,
    validate,
)
from skipseq.construct import (
    TAG_FINAL,
    TAG_INITIAL,
    TAG_SKIP,
    construct_for_m,
    phi,
    phi_reverse,
    skip_letters,
)
from skipseq.verify import quasi_palindrome, verify_supersequence_exhaustive

ALL_VALID = (
    [(1, n) for n in range(4, 12)]
    + [(2, n) for n in range(9, 37, 3)]
    + [(3, n) for n in range(13, 60, 5)]
    + [(4, n) for n in range(17, 60, 7)]
    + [(5, 21), (5, 30), (6, 25), (6, 36), (7, 29), (8, 33)]
)


class TestValidate:
    def test_paper_parameters_accepted(self):
        assert validate(3, 18).ok
        assert validate(4, 24).ok
        assert validate(2, 12).ok

    def test_congruence_rejection_reports_neighbors(self):
        result = validate(3, 17)
        assert not result.ok
        assert result.nearest_below == 13
        assert result.nearest_above == 18

    def test_t2_n6_erratum(self):
        result = validate(2, 6)
        assert not result.ok
        assert "erratum" in result.reason

    def test_minimum_sizes(self):
        assert not validate(1, 3).ok
        assert not validate(3, 12).ok
        assert not validate(5, 20).ok


class TestGolden:
    def test_t1_6(self):
        assert list(gen_t1(6).sequences) == golden.T1_6

    def test_t2_12(self):
        assert list(gen_t2(12).sequences) == golden.T2_12

    def test_t3_18(self):
        assert list(gen_ts(3, 18).sequences) == golden.T3_18

    def test_t4_24(self):
        glist = gen_ts(4, 24)
        assert list(glist.sequences) == golden.T4_24
        assert glist.total_elements == 548


class TestSkipLetters:
    def test_values(self):
        assert skip_letters(3, 18) == (17, 18)
        assert phi(4, 24) == (22, 23, 24)
        assert phi_reverse(4, 24) == (24, 23, 22)
        assert len(skip_letters(5, 24)) == 4


@pytest.mark.parametrize("s,n", ALL_VALID)
class TestListInvariants:
    def test_shape(self, s, n):
        glist = generate(s, n)
        assert len(glist.sequences) == n
        assert glist.seq(1) == tuple(range(1, n + 1))
        for seq in glist.sequences:
            assert len(set(seq)) == len(seq)
            assert all(1 <= a <= n for a in seq)

    def test_length_profile(self, s, n):
        glist = generate(s, n)
        skips = set(glist.skip_indices())
        for k in range(1, n + 1):
            length = len(glist.seq(k))
            if k in (1, n):
                assert length == n
            elif k in skips:
                assert length == n - s
            else:
                assert length == n - 1

    def test_omission_profile(self, s, n):
        glist = generate(s, n)
        skips = set(glist.skip_indices())
        alphabet = set(range(1, n + 1))
        for k in range(2, n + 1):
            missing = alphabet - set(glist.seq(k))
            last_prev = glist.seq(k - 1)[-1]
            if k == n:
                assert missing == set()
            elif k in skips:
                expected = set(skip_letters(s, n)) | {last_prev}
                assert missing == expected
            else:
                assert missing == {last_prev}

    def test_forward_recurrence_conformance(self, s, n):
        glist = generate(s, n)
        for k in range(1, n + 1):
            if glist.tag(k) == "forward":
                prev2, prev = glist.seq(k - 2), glist.seq(k - 1)
                assert glist.seq(k) == (prev2[-1],) + prev[:-1]

    def test_case_tag_blocks(self, s, n):
        glist = generate(s, n)
        if s == 1:
            head, tail = 2, 1
        elif s == 2:
            head, tail = 3, 3
        else:
            head = tail = s + 1
        assert all(t == TAG_INITIAL for t in glist.case_tags[:head])
        assert all(t == TAG_FINAL for t in glist.case_tags[-tail:])
        if s >= 2:
            cyc = 2 * s - 1
            assert all(k % cyc == 2 % cyc for k in glist.skip_indices())

    def test_quasi_palindrome(self, s, n):
        report = quasi_palindrome(generate(s, n).sequences)
        assert report.found
        assert report.involution


class TestSupersequence:
    def test_interposition_shape(self):
        glist = gen_t1(6)
        sseq = build_supersequence(glist)
        assert sseq.m == 7
        assert sseq.word.count(7) == 7
        assert sseq.length == glist.total_elements + 7
        # x sigma_1 x sigma_2 x ... x sigma_n x
        chunks = []
        cur = []
        assert sseq.word[0] == 7
        for a in sseq.word[1:]:
            if a == 7:
                chunks.append(tuple(cur))
                cur = []
            else:
                cur.append(a)
        assert chunks == list(glist.sequences)

    def test_t4_24_length(self):
        assert build_supersequence(gen_ts(4, 24)).length == 573

    def test_t1_4_length(self):
        assert build_supersequence(gen_t1(4)).length == 19


class TestConstructForM:
    def test_exact_25(self):
        assert construct_for_m(25, "exact").length == 573

    def test_t1_fallback(self):
        assert construct_for_m(7, "t1_fallback").length == 39
        assert construct_for_m(5, "t1_fallback").length == 19

    def test_exact_unavailable(self):
        with pytest.raises(ValidationError, match="no exact construction"):
            construct_for_m(5, "exact")

    def test_best_valid_falls_back(self):
        assert construct_for_m(5, "best_valid").length == 19
        assert construct_for_m(10, "best_valid").length == 83

    def test_restrict_produces_verified_word(self):
        for m in (5, 6, 7, 8):
            sseq = construct_for_m(m, "restrict")
            assert set(sseq.word) == set(range(1, m + 1))
            assert verify_supersequence_exhaustive(sseq.word, m).passed

    def test_restriction_preserves_property(self):
        # deleting any single letter of a verified supersequence keeps the
        # property over the remaining letters (after renumbering), m <= 8
        for m in (5, 6, 7, 8):
            word = build_supersequence(gen_t1(m - 1)).word
            for drop in range(1, m + 1):
                relabel = {a: a - (a > drop) for a in range(1, m + 1)}
                reduced = tuple(relabel[a] for a in word if a != drop)
                assert verify_supersequence_exhaustive(reduced, m - 1).passed
