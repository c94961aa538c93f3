import pytest

from seqcong import (
    DomainError,
    GenSpec,
    HorizonError,
    NNotation,
    Partition,
    SequenceRule,
    SpecError,
    conjugate,
    enumerate_partitions,
    eta,
    is_in_SBA,
    is_in_Sjk,
    is_in_Sk,
    is_seq_congruent,
    n_decode,
    n_encode,
    pi_AB,
    pi_map,
    pi_prime_AB,
    psi_k,
    psi_map,
    sigma_AB,
    sigma_k,
    sigma_map,
    sigma_prime_AB,
    tau,
    to_c_notation,
)
from seqcong.counting import _iter_c_vectors

from conftest import all_partitions_upto, seqcong_with_largest_upto

STD = GenSpec.standard()


def _spec(a_text, b_text):
    return GenSpec.parse(a_text, b_text)


def _vectors_with_weight(weights, total):
    return list(_iter_c_vectors(list(weights), total))


class TestSequenceRule:
    def test_parse_forms(self):
        assert SequenceRule.parse("nat").term(5, 64) == 5
        assert SequenceRule.parse("pow:3").term(2, 64) == 8
        assert SequenceRule.parse("arith:4").term(3, 64) == 12
        assert SequenceRule.parse("2,5,9").term(2, 64) == 5

    def test_parse_garbage(self):
        with pytest.raises(SpecError):
            SequenceRule.parse("fibonacci")

    def test_index_of(self):
        assert SequenceRule.parse("pow:2").index_of(9, 64) == 3
        assert SequenceRule.parse("pow:2").index_of(8, 64) is None
        assert SequenceRule.parse("arith:3").index_of(12, 64) == 4
        assert SequenceRule.parse("2,5,9").index_of(9, 64) == 3
        assert SequenceRule.parse("2,5,9").index_of(4, 64) is None

    def test_horizon_fails_loudly(self):
        rule = SequenceRule.naturals()
        with pytest.raises(HorizonError):
            rule.term(65, 64)
        with pytest.raises(HorizonError):
            rule.index_of(100, 64)
        with pytest.raises(HorizonError):
            SequenceRule.parse("1,2").term(3, 64)

    def test_b_must_increase(self):
        with pytest.raises(SpecError):
            GenSpec(SequenceRule.naturals(), SequenceRule.parse("3,3"))
        with pytest.raises(SpecError):
            GenSpec(SequenceRule.naturals(), SequenceRule.powers(0))

    def test_distinct_flags(self):
        assert SequenceRule.parse("nat").has_distinct_terms()
        assert SequenceRule.powers(0).has_distinct_terms() is False
        assert SequenceRule.parse("2,5,2").has_distinct_terms() is False


class TestMembership:
    def test_standard_spec_matches_core_predicate(self):
        for p in all_partitions_upto(20):
            assert is_in_SBA(p, STD) == is_seq_congruent(p)

    def test_rectangle_example(self):
        spec = _spec("2", "3")
        assert is_in_SBA(Partition([2, 2, 2]), spec)
        assert not is_in_SBA(Partition([2, 2]), spec)

    def test_empty_member_everywhere(self):
        assert is_in_SBA(Partition(), _spec("2,5", "1,3"))

    def test_membership_matches_encode_success(self):
        specs = [STD, _spec("2", "3"), _spec("pow:2", "nat"), _spec("2,5", "1,3"), _spec("arith:2", "nat")]
        for spec in specs:
            for p in all_partitions_upto(10):
                claimed = is_in_SBA(p, spec)
                try:
                    n_encode(p, spec)
                    encoded = True
                except DomainError:
                    encoded = False
                assert claimed == encoded, (p, spec)


class TestCodec:
    def test_reduces_to_c_notation_on_standard_spec(self):
        for p in seqcong_with_largest_upto(12):
            assert n_encode(p, STD).coeffs == to_c_notation(p).coeffs
            assert n_decode(NNotation(STD, to_c_notation(p).coeffs)) == p

    def test_rectangle(self):
        spec = _spec("2", "3")
        assert n_decode(NNotation(spec, [1])) == Partition([2, 2, 2])
        assert n_encode(Partition([2, 2, 2]), spec).coeffs == (1,)

    def test_empty(self):
        assert n_decode(NNotation(STD, [])) == Partition()
        assert n_encode(Partition(), STD).coeffs == ()

    def test_roundtrip_over_sample_specs(self):
        for a_text, b_text, depth in [
            ("nat", "nat", 3), ("pow:2", "nat", 3), ("2,5", "1,3", 2), ("arith:3", "pow:2", 3),
        ]:
            spec = _spec(a_text, b_text)
            weights = [spec.a_term(i) * spec.b_term(i) for i in range(1, depth + 1)]
            for coeffs in _vectors_with_weight(weights, 18):
                n = NNotation(spec, coeffs)
                assert n_encode(n_decode(n), spec).coeffs == n.coeffs

    def test_decode_fields(self):
        spec = _spec("2,5", "1,3")
        n = NNotation(spec, [1, 1])
        p = n_decode(n)
        assert p == Partition([7, 5, 5])
        assert n.largest == p.largest == 7
        assert n.size == p.size == 17
        assert n.length == len(p) == 3


class TestSigmaPiAB:
    def test_sigma_AB_specializes(self):
        for p in seqcong_with_largest_upto(12):
            assert sigma_AB(n_encode(p, STD)) == sigma_map(p)

    def test_sigma_AB_example(self):
        spec = _spec("2,5", "1,3")
        n = NNotation(spec, [1, 1])
        assert sigma_AB(n) == Partition([5, 2])
        assert sigma_AB(n).size == n.largest == 7

    def test_sigma_AB_reorders_decreasing_widths(self):
        spec = _spec("5,2", "1,3")
        assert sigma_AB(NNotation(spec, [1, 1])) == Partition([5, 2])

    def test_sigma_AB_requires_distinct(self):
        spec = _spec("2,2", "1,3")
        with pytest.raises(SpecError):
            sigma_AB(NNotation(spec, [1, 1]))

    def test_empty_coefficients_give_empty_partition(self):
        spec = _spec("2,5", "1,3")
        assert sigma_AB(NNotation(spec, [])) == Partition()
        assert sigma_k(NNotation(GenSpec.power_widths(2), [])) == Partition()
        assert psi_k(NNotation(GenSpec.power_widths(2), [])) == Partition()

    def test_pi_AB_specializes_to_difference_vector(self):
        for p in all_partitions_upto(10):
            assert pi_AB(p, STD).coeffs == to_c_notation(pi_map(p)).coeffs

    def test_pi_AB_example(self):
        spec = _spec("1,2", "2,3")
        n = pi_AB(Partition([2, 1]), spec)
        assert n.coeffs == (1, 1)
        decoded = n_decode(n)
        assert decoded == Partition([3, 3, 2])
        assert decoded.largest == 3 == Partition([2, 1]).size

    def test_pi_AB_empty(self):
        assert pi_AB(Partition(), STD).coeffs == ()

    def test_pi_AB_rejects_columns_outside_A(self):
        spec = _spec("2,5", "nat")
        with pytest.raises(DomainError):
            pi_AB(Partition([2, 1]), spec)  # has a height-1 column drop

    def test_pi_AB_largest_part_is_size(self):
        # domain: conjugates of partitions with parts in A
        spec = _spec("1,3", "2,5")
        for q in all_partitions_upto(9):
            if any(x not in (1, 3) for x in q.parts):
                continue
            p = conjugate(q)
            n = pi_AB(p, spec)
            assert n_decode(n).largest == p.size


class TestPrimedMaps:
    def test_specialize_to_core_maps(self):
        for p in all_partitions_upto(12):
            assert pi_prime_AB(p, STD) == pi_map(p)
        for p in seqcong_with_largest_upto(12):
            assert sigma_prime_AB(p, STD) == sigma_map(p)

    def test_composition_is_conjugation(self):
        specs = [STD, _spec("arith:2", "nat"), _spec("2,5,9", "1,3,4"), _spec("pow:2", "pow:2")]
        for spec in specs:
            for p in all_partitions_upto(10):
                if len(p) > 3 and spec.a.tag == "explicit":
                    continue
                assert sigma_prime_AB(pi_prime_AB(p, spec), spec) == conjugate(p)

    def test_arithmetic_scaling(self):
        # widths (a, 2a, 3a, ...): size n maps to largest part a*n and back
        for a in (1, 2, 3):
            spec = _spec(f"arith:{a}", "nat")
            for n in range(13):
                for p in enumerate_partitions(n):
                    image = pi_prime_AB(p, spec)
                    assert image.largest == a * n
                    assert sigma_prime_AB(image, spec).size == n

    def test_stretch_example(self):
        spec = _spec("arith:2", "nat")
        out = pi_prime_AB(Partition([2, 1]), spec)
        assert out.largest == 6


class TestPowerFamilies:
    def test_Sk_examples(self):
        assert is_in_Sk(Partition([21, 16, 14, 8]), 1)
        assert is_in_Sk(Partition([9, 8]), 2)
        assert not is_in_Sk(Partition([9, 7]), 2)

    def test_Sk_matches_seqcong_at_1(self):
        for p in all_partitions_upto(16):
            assert is_in_Sk(p, 1) == is_seq_congruent(p)

    def test_Sk_matches_SBA_power_widths(self):
        for k in (2, 3):
            spec = GenSpec.power_widths(k)
            for p in all_partitions_upto(16):
                assert is_in_Sk(p, k) == is_in_SBA(p, spec)

    def test_Sjk_examples(self):
        assert is_in_Sjk(Partition([3, 2]), 1, 1)
        assert not is_in_Sjk(Partition([3, 1]), 1, 1)
        assert is_in_Sjk(Partition([6, 4, 2]), 2, 0)  # j=2, k=0: every difference is 2

    def test_Sjk_members_map_to_uniform_vectors(self):
        for j, k in [(1, 1), (2, 1), (1, 2)]:
            spec = GenSpec.power_widths(k)
            for p in all_partitions_upto(30):
                if is_in_Sjk(p, j, k) and not p.is_empty():
                    assert set(n_encode(p, spec).coeffs) == {j}

    def test_sigma1_psi1_specialize(self):
        for p in seqcong_with_largest_upto(12):
            n = n_encode(p, STD)
            assert sigma_k(n) == sigma_map(p)
            assert psi_k(n) == psi_map(p)

    def test_k2_rectangle_example(self):
        spec = GenSpec.power_widths(2)
        n = NNotation(spec, [0, 1])
        assert n_decode(n) == Partition([4, 4])
        assert sigma_k(n) == Partition([4])
        assert psi_k(n) == Partition([8])

    def test_spec_mismatch_rejected(self):
        with pytest.raises(SpecError):
            sigma_k(NNotation(_spec("2,5", "nat"), [1]))


class TestEtaTau:
    def test_eta_smallest_cases(self):
        spec2 = GenSpec.power_widths(2)
        out = eta(NNotation(spec2, [1]), 2, 1)
        assert out.coeffs == (1,) and n_decode(out) == Partition([1])
        out = eta(NNotation(spec2, [0, 1]), 2, 1)
        assert n_decode(out) == Partition([2, 2]) and n_decode(out).size == 4

    def test_eta_maps_largest_to_size(self):
        for k in (1, 2, 3):
            spec = GenSpec.power_widths(k)
            weights = [i**k for i in (1, 2, 3)]
            for coeffs in _vectors_with_weight(weights, 20):
                n = NNotation(spec, coeffs)
                for p in range(1, k + 1):
                    out = eta(n, k, p)
                    assert out.coeffs == n.coeffs
                    assert n_decode(out).size == n.largest

    def test_tau_preserves_size_and_identity(self):
        for k in (2, 3):
            for p in range(1, k + 1):
                spec = GenSpec(SequenceRule.powers(k - p), SequenceRule.powers(p))
                weights = [spec.a_term(i) * spec.b_term(i) for i in (1, 2, 3)]
                for coeffs in _vectors_with_weight(weights, 20):
                    n = NNotation(spec, coeffs)
                    for q in range(1, k + 1):
                        out = tau(n, k, p, q)
                        assert out.coeffs == n.coeffs
                        assert out.size == n.size
                        if q == p:
                            assert out == n

    def test_eta_parameter_range(self):
        n = NNotation(GenSpec.power_widths(2), [1])
        with pytest.raises(DomainError):
            eta(n, 2, 3)
        with pytest.raises(DomainError):
            eta(n, 2, 0)

    def test_eta_counts_by_brute_force(self):
        # structural domain count (vectors) == brute-force codomain count
        for k in (2, 3):
            for p in range(1, k + 1):
                target = GenSpec(SequenceRule.powers(k - p), SequenceRule.powers(p))
                for n in range(1, 26):
                    weights = [i**k for i in range(1, n + 1) if i**k <= n]
                    domain = len(_vectors_with_weight(weights, n))
                    codomain = sum(
                        1 for q in enumerate_partitions(n) if is_in_SBA(q, target)
                    )
                    assert domain == codomain, (k, p, n)

    def test_retag_composition_identity(self):
        # flattening after the height-1 reshape equals the direct width map
        for k in (1, 2):
            spec = GenSpec.power_widths(k + 1)
            for coeffs in _vectors_with_weight([i ** (k + 1) for i in (1, 2, 3)], 20):
                n = NNotation(spec, coeffs)
                reshaped = eta(n, k + 1, 1)
                assert psi_k(reshaped) == sigma_k(n)
                assert reshaped.spec == GenSpec.power_widths(k)

    def test_composition_count_equality(self):
        for k in (1, 2):
            for n in range(21):
                weights = [i ** (k + 1) for i in range(1, n + 1) if i ** (k + 1) <= n]
                lg_count = len(_vectors_with_weight(weights, n))
                size_count = sum(
                    1 for q in enumerate_partitions(n) if is_in_SBA(q, GenSpec.power_widths(k))
                )
                assert lg_count == size_count, (k, n)
