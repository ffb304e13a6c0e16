import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.errors import InvariantViolationError, ResourceLimitError, UnsupportedError
from app.models import OMEGA, AbelianGroup, EndoMatrix, SummandCount
from app.utils.finite_group_util import finite_model
from app.utils.group_util import abelian_groups_up_to, cyclic, direct_sum, format_group, parse_group
from app.utils.summand_util import (complement_of, count_finite_idempotents, count_idempotents_by_complements,
                                    count_idempotents_by_sweep, count_summands, enumerate_summands,
                                    image_of_endomorphism, oracle_count_summands, oracle_summand_classes,
                                    summand_classes)

from .helpers import fg_groups


class TestCountSummands:

    @pytest.mark.parametrize('literal, expected', [
        ('Z_2^2 + Z_3 + Z^2', 18),
        ('Z_9 + Z_64', 4),
        ('0', 1),
        ('Q', 2),
        ('Z_4', 2),
        ('Z^3', 4),
    ])
    def test_examples(self, literal, expected):
        assert count_summands(parse_group(literal)).value == expected

    def test_built_groups(self, z2_squared, mixed_moore_group):
        assert z2_squared == parse_group('Z_2^2')
        assert mixed_moore_group == parse_group('Z_2^2 + Z_3 + Z^2')
        assert count_summands(z2_squared).value == 3
        assert count_summands(mixed_moore_group).value == 18
        assert len(enumerate_summands(mixed_moore_group)) == 18

    def test_omega(self):
        assert count_summands(parse_group('Z^inf')).value is OMEGA

    @settings(max_examples=50)
    @given(st.integers(1, 3), st.integers(0, 2), st.integers(1, 3), st.integers(0, 2))
    def test_multiplicative_on_coprime_orders(self, twos, fours, threes, fives):
        a = parse_group(f'Z_2^{twos} + Z_4^{fours}')
        b = parse_group(f'Z_3^{threes} + Z_5^{fives}')
        assert count_summands(direct_sum(a, b)).value == count_summands(a).value * count_summands(b).value

    def test_count_must_be_positive(self):
        with pytest.raises(ValueError):
            SummandCount(0)


class TestEnumerateSummands:

    def test_examples(self):
        assert enumerate_summands(cyclic(4)) == [AbelianGroup.trivial(), cyclic(4)]
        assert [format_group(s) for s in enumerate_summands(parse_group('Z_2^2'))] == ['0', 'Z_2', 'Z_2^2']

    def test_lexicographic_in_torsion_then_free_rank(self):
        # (t, s) runs (0, 0), (0, 1), (1, 0), (1, 1)
        assert [format_group(s) for s in enumerate_summands(parse_group('Z + Z_3'))] == \
            ['0', 'Z', 'Z_3', 'Z_3 + Z']

    def test_unsupported_inputs(self):
        with pytest.raises(UnsupportedError):
            enumerate_summands(AbelianGroup.rationals())
        with pytest.raises(UnsupportedError):
            enumerate_summands(parse_group('Z^inf'))
        assert summand_classes(AbelianGroup.rationals()) == [AbelianGroup.trivial(), AbelianGroup.rationals()]

    @settings(max_examples=100)
    @given(fg_groups())
    def test_each_summand_has_a_complement(self, g):
        summands = enumerate_summands(g)
        assert len(summands) == count_summands(g).value
        assert len(set(summands)) == len(summands)
        for s in summands:
            assert direct_sum(s, complement_of(g, s)) == g


class TestEndoMatrix:

    def test_reduces_entries(self):
        m = EndoMatrix.of((2, 4), [[3, 0], [0, 6]])
        assert m.entries == ((1, 0), (0, 2))

    def test_rejects_non_homomorphisms(self):
        # Z_2 -> Z_4 must land in 2·Z_4
        with pytest.raises(InvariantViolationError):
            EndoMatrix.of((2, 4), [[1, 0], [1, 1]])
        with pytest.raises(InvariantViolationError):
            EndoMatrix.of((2, 4), [[1, 0]])

    def test_composition(self):
        m = EndoMatrix.of((6,), [[3]])
        assert m.compose(m) == m
        assert m.is_idempotent()
        assert not EndoMatrix.of((6,), [[2]]).is_idempotent()
        assert EndoMatrix.of((6,), [[4]]).is_idempotent()


class TestImages:

    def test_identity_and_zero(self):
        g = cyclic(6)
        orders = g.elementary_divisors()
        assert image_of_endomorphism(g, EndoMatrix.identity(orders)) == g
        assert image_of_endomorphism(g, EndoMatrix.zero(orders)).is_trivial

    def test_doubling_the_order_four_component(self):
        # Z_4 + Z_2 is indexed (Z_2, Z_4); (y, x) -> (y, 2x)
        g = parse_group('Z_4 + Z_2')
        m = EndoMatrix.of(g.elementary_divisors(), [[1, 0], [0, 2]])
        assert image_of_endomorphism(g, m) == parse_group('Z_2^2')
        fg = finite_model(g)
        assert fg.classify(fg.image_mask(m)) == parse_group('Z_2^2')

    def test_classifiers_agree_on_every_endomorphism(self):
        for literal in ['Z_2^2', 'Z_4 + Z_2', 'Z_6', 'Z_3 + Z_9']:
            g = parse_group(literal)
            fg = finite_model(g)
            for m in fg.all_endomorphisms():
                assert image_of_endomorphism(g, m) == fg.classify(fg.image_mask(m))

    def test_mismatched_orders(self):
        with pytest.raises(InvariantViolationError):
            image_of_endomorphism(cyclic(6), EndoMatrix.identity((4,)))

    def test_malformed_entries(self):
        g = parse_group('Z_4 + Z_2')
        bad = EndoMatrix((2, 4), ((1, 0), (1, 1)))
        with pytest.raises(InvariantViolationError):
            image_of_endomorphism(g, bad)


class TestOracle:

    @pytest.mark.parametrize('literal, expected', [('Z_4', 2), ('Z_2^2', 3), ('Z_6', 4), ('0', 1)])
    def test_examples(self, literal, expected):
        assert oracle_count_summands(parse_group(literal)) == expected

    def test_classes_match_enumeration(self):
        g = parse_group('Z_2 + Z_4 + Z_3')
        assert set(oracle_summand_classes(g)) == set(enumerate_summands(g))

    def test_strategies_agree(self):
        for g in abelian_groups_up_to(24):
            fg = finite_model(g)
            sweep = oracle_summand_classes(g, sweep_limit=10 ** 9)
            search = oracle_summand_classes(g, sweep_limit=0)
            assert sweep == search
            assert count_idempotents_by_sweep(fg) == count_idempotents_by_complements(fg)

    def test_equivalence_up_to_order_64(self):
        checked = 0
        for g in abelian_groups_up_to(64):
            assert oracle_count_summands(g) == count_summands(g).value, format_group(g)
            checked += 1
        assert checked == 117

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            oracle_count_summands(parse_group('Z_2^7'))
        assert oracle_count_summands(parse_group('Z_2 + Z_64'), cap=128) == 4

    def test_infinite_groups(self):
        with pytest.raises(UnsupportedError):
            oracle_count_summands(parse_group('Z'))

    def test_raw_idempotent_counts(self):
        assert count_finite_idempotents(parse_group('Z_2^2'))[0] == 8
        assert count_finite_idempotents(parse_group('Z_4')) == (2, 'matrix-sweep')
        assert count_finite_idempotents(parse_group('Z_2^6'))[1] == 'complement-search'
