import json

import pytest

from smoothwords import (Alphabet, EPSILON, Word, certify_concat, dsigma_table,
                         empirical_middle_set, middle_witness, mirror,
                         power_decomposition, word_to_text)
from smoothwords.errors import CertificationError
from smoothwords.search import SmoothEnumerator, fast_derivative, is_smooth_fast


def words(texts):
    return {Word(t) for t in texts}


class TestTables:
    def test_table_12(self):
        expected = words(["", "1", "2", "12", "21", "11", "22", "112", "211",
                          "121", "122", "221", "212", "1121", "1211", "1212",
                          "2121", "2112", "1221", "1122", "2211", "11211"])
        assert dsigma_table(Alphabet(1, 2)).words == expected
        assert len(expected) == 22

    def test_table_13(self):
        expected = words(["", "1", "3", "13", "31", "11", "33", "113", "311",
                          "131", "313", "111", "3111", "1113", "1311", "1131"])
        assert dsigma_table(Alphabet(1, 3)).words == expected

    def test_table_14(self):
        expected = words(["", "1", "4", "14", "41", "11", "44", "111", "411",
                          "114", "141", "414", "1111", "4111", "1114"])
        assert dsigma_table(Alphabet(1, 4)).words == expected

    def test_table_1b(self):
        expected = words(["", "1", "7", "17", "71", "11", "77", "117", "711",
                          "111", "1111"])
        assert dsigma_table(Alphabet(1, 7)).words == expected

    def test_table_2b(self):
        expected = words(["", "2", "5", "25", "52", "22", "55", "222"])
        assert dsigma_table(Alphabet(2, 5)).words == expected

    def test_table_ab(self):
        expected = {Word(t) for t in [(), (3,), (7,), (3, 3), (7, 7), (3, 7), (7, 3)]}
        assert dsigma_table(Alphabet(3, 7)).words == expected

    def test_tables_mirror_closed(self):
        for ab in [Alphabet(1, 2), Alphabet(1, 3), Alphabet(1, 4), Alphabet(1, 9),
                   Alphabet(2, 3), Alphabet(2, 8), Alphabet(3, 4), Alphabet(4, 11)]:
            table = dsigma_table(ab).words
            assert {mirror(w) for w in table} == table

    def test_json(self):
        doc = dsigma_table(Alphabet(2, 5)).to_json()
        assert doc["alphabet"] == [2, 5]
        assert "222" in doc["words"]
        json.dumps(doc)


class TestMiddleWitness:
    def test_examples(self, ab12):
        assert middle_witness(Word("2"), EPSILON, Word("2"), ab12) == Word("2")
        assert middle_witness(Word("12"), EPSILON, Word("12"), ab12) == Word("11")
        assert middle_witness(EPSILON, EPSILON, EPSILON, ab12) == EPSILON

    def test_requires_smooth_product(self, ab12):
        with pytest.raises(ValueError):
            middle_witness(Word("11"), Word("1"), EPSILON, ab12)


class TestCertify:
    def test_zero_violations_small(self):
        for ab, L in [(Alphabet(1, 2), 6), (Alphabet(3, 4), 5), (Alphabet(1, 5), 5)]:
            cert = certify_concat(ab, L)
            assert cert.ok, cert.violations[:3]
            assert set(cert.middle_set) <= set(dsigma_table(ab).words)
            assert cert.tested_triples > 0

    def test_table_13_is_incomplete(self, ab13):
        # The stored {1,3} table misses the middles 133 and 331: the smooth
        # product 13·1113·33 forces D = 133 with empty flanks.  The certifier
        # must report that instead of smoothing it over.
        cert = certify_concat(ab13, 6)
        reasons = {v.reason for v in cert.violations}
        assert reasons == {"middle-not-in-table"}
        extras = set(cert.middle_set) - set(dsigma_table(ab13).words)
        assert extras == words(["133", "331"])
        xs = {word_to_text(v.x) for v in cert.violations}
        assert xs == {"1113", "3111"}

    def test_minimal_violating_triple(self, ab13):
        w = middle_witness(Word("13"), Word("1113"), Word("33"), ab13)
        assert w == Word("133")
        assert w not in dsigma_table(ab13).words

    def test_violations_sorted_deterministically(self, ab13):
        cert1 = certify_concat(ab13, 6)
        cert2 = certify_concat(ab13, 6)
        assert cert1 == cert2

    def test_parallel_matches_sequential(self):
        ab = Alphabet(1, 2)
        seq = certify_concat(ab, 6, jobs=1)
        par = certify_concat(ab, 6, jobs=2)
        assert seq == par

    def test_explore_mode_reports_without_asserting(self, ab12):
        cert = certify_concat(ab12, 4, explore=3)
        assert cert.x_source == "smooth-x<=3"
        assert cert.ok  # no table check in explore mode
        assert Word("11") in set(cert.middle_set)

    def test_json(self, ab12):
        doc = certify_concat(ab12, 4).to_json()
        assert doc["alphabet"] == [1, 2]
        assert doc["violations"] == []
        json.dumps(doc)


class TestEmpiricalMiddleSet:
    def test_subset_of_table_for_12(self, ab12):
        ems = empirical_middle_set(ab12, 8)
        assert EPSILON in ems
        assert ems <= set(dsigma_table(ab12).words)

    def test_exactly_table_plus_gap_for_13(self, ab13):
        # Independent fixpoint oracle: rebuilds the whole stored table plus
        # the two middles the stored table lacks, then closes.
        ems = empirical_middle_set(ab13, 12)
        assert ems == set(dsigma_table(ab13).words) | words(["133", "331"])

    def test_contains_epsilon_at_tiny_bound(self, ab12):
        assert EPSILON in empirical_middle_set(ab12, 1)


class TestTripleSplitting:
    def test_three_part_decomposition(self):
        # D(u1 u2 u3) = D(u1) w1 D(u2) w2 D(u3) with both middles in the table.
        for ab, max_len in [(Alphabet(1, 2), 6), (Alphabet(1, 3), 6), (Alphabet(2, 4), 5)]:
            enum = SmoothEnumerator()
            pool = [tuple(w) for w in enum.flat(ab, max_len)]
            table = {tuple(w) for w in dsigma_table(ab).words}
            b = ab.b
            derivs = {w: fast_derivative(w, b) for w in pool}
            tested = 0
            for u1 in pool:
                for u2 in pool:
                    u12 = u1 + u2
                    if not is_smooth_fast(u12, ab):
                        continue
                    for u3 in pool:
                        full = u12 + u3
                        if not is_smooth_fast(full, ab):
                            continue
                        tested += 1
                        assert self._splits(derivs[u1], derivs[u2], derivs[u3],
                                            fast_derivative(full, b), table), \
                            (ab, u1, u2, u3)
            assert tested > 1000

    @staticmethod
    def _splits(d1, d2, d3, df, table):
        slack = len(df) - len(d1) - len(d2) - len(d3)
        if slack < 0 or df[:len(d1)] != d1 or (d3 and df[-len(d3):] != d3):
            return False
        for l1 in range(slack + 1):
            w1 = df[len(d1):len(d1) + l1]
            if w1 not in table:
                continue
            pos = len(d1) + l1
            if df[pos:pos + len(d2)] != d2:
                continue
            w2 = df[pos + len(d2):len(df) - len(d3)]
            if w2 in table:
                return True
        return False


class TestPowerDecomposition:
    def test_square_of_12(self, ab12):
        pd = power_decomposition(Word("12"), 2, ab12)
        assert pd.levels == ((1, Word("11")),)

    def test_square_of_21_mirror(self, ab12):
        pd = power_decomposition(Word("21"), 2, ab12)
        assert pd.levels == ((1, Word("11")),)

    def test_biquadrate_all_levels(self, ab13):
        pd = power_decomposition(Word("3111313111"), 4, ab13)
        assert [j for j, _ in pd.levels] == [1, 2]
        table = dsigma_table(ab13).words
        assert all(w in table for _, w in pd.levels)

    def test_multirun_cube_over_23(self):
        ab = Alphabet(2, 3)
        pd = power_decomposition(Word("2233322233"), 3, ab)
        assert pd.levels == ((1, Word("22")),)

    def test_precondition_two_runs(self, ab12):
        with pytest.raises(ValueError):
            power_decomposition(Word("2"), 2, ab12)

    def test_precondition_smooth_power(self, ab12):
        with pytest.raises(ValueError):
            power_decomposition(Word("12"), 3, ab12)  # cube-free alphabet

    def test_json(self, ab12):
        doc = power_decomposition(Word("12"), 2, ab12).to_json()
        assert doc == {"alphabet": [1, 2], "base": "12", "exponent": 2,
                       "levels": [{"j": 1, "witness": "11"}]}
