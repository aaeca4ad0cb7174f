import json
import warnings

import pytest

from hookcounts.injections import (
    MAP_IDS,
    ResidualClassError,
    case_of,
    classify_a,
    classify_o,
    classify_r,
    classify_s,
    d1_members,
    d2_members,
    delta3,
    epsilon,
    epsilon_case,
    eta,
    gamma,
    in_b,
    in_d1,
    o5_weight_bound,
    o5_weight_cap,
    o_members,
    o_subset_memberships,
    phi1,
    phi1_inv,
    phi2,
    phi2_case,
    phi3,
    phi4,
    phi_total,
    psi2,
    psi3,
    psi4,
    r_members,
    r_subset_memberships,
    tau,
    tau_case,
    verify_injection,
    verify_injection_range,
)
from hookcounts.partitions import Partition

P = Partition.parse


class TestClassifyO:
    def test_small_part_of_residue_shape_wins(self):
        # 17 = 2*2*4 + 1, so this input sits in the first subset
        assert classify_o(P("17,15,13,10,7,5,3,2,1^3"), 4).index == 1

    def test_large_parts_of_residue_shape_still_win(self):
        # 137 and 33 are both 1 mod 8: the first-subset condition applies
        # even though the top part clears the large-part threshold.
        assert classify_o(P("137,33,29,11,5,3,1^3"), 4).index == 1
        assert classify_o(P("17,13,11,9,3^25,1^3"), 4).index == 1

    def test_genuine_class_two(self):
        assert classify_o(P("157,34,29,11,5,3,1^3"), 4).index == 2

    def test_heavy_multiplicity_class(self):
        assert classify_o(P("3^25,1^3"), 4).index == 3

    def test_many_ones_class(self):
        assert classify_o(P("13,7,6,2^2,1^55"), 4).index == 4

    def test_residual_class(self):
        assert classify_o(P("1^5"), 2).index == 5

    def test_non_members(self):
        assert classify_o(P("4,1"), 2) is None  # not 2-regular
        assert classify_o(P("3,1^2"), 2) is None  # even number of ones

    def test_memberships_partition_the_family(self):
        for t in (2, 3):
            for n in range(26):
                for lam in o_members(n, t):
                    assert len(o_subset_memberships(lam, t)) == 1


class TestClassifyR:
    def test_odd_ones_subset(self):
        assert classify_r(P("15,13,10,9,8,5,3,2,1^3"), 4).index == 1

    def test_fourth_subset(self):
        assert classify_r(P("33,13,9^2,7,6,2^2,1^4"), 4).index == 4

    def test_third_subset(self):
        assert classify_r(P("25^2,9^2,1^10"), 4).index == 3

    def test_member_outside_listed_subsets(self):
        # 17 = 2*2*4+1 disqualifies every even-ones subset at t=4
        label = classify_r(P("25^2,17,13,11,9^3,1^10"), 4)
        assert label is not None and label.index is None

    def test_non_members(self):
        assert classify_r(P("8,5,1"), 4) is None  # no part 9
        assert classify_r(P("12,9,1"), 4) is None  # 12 = 3t

    def test_base_allows_double_t_part(self):
        assert classify_r(P("9,8^2,1"), 4) is not None

    def test_subsets_pairwise_disjoint(self):
        for t in (2, 3):
            for n in range(26):
                for mu in r_members(n, t):
                    assert len(r_subset_memberships(mu, t)) <= 1


class TestPhi1:
    def test_worked_example(self):
        # weight-consistent form of the reference pair (the recorded input
        # carries a stray part 7 that breaks weight preservation)
        lam = P("17,15,13,10,5,3,2,1^3")
        mu = phi1(lam, 4)
        assert mu == P("15,13,10,9,8,5,3,2,1^3")
        assert phi1_inv(mu, 4) == lam

    def test_recorded_input_keeps_its_extra_part(self):
        mu = phi1(P("17,15,13,10,7,5,3,2,1^3"), 4)
        assert mu == P("15,13,10,9,8,7,5,3,2,1^3")

    def test_minimal_k_is_fixed_point(self):
        assert phi1(P("5,1"), 2) == P("5,1")

    def test_round_trip_exhaustive(self):
        for t in (2, 3):
            for n in range(31):
                for lam in o_members(n, t):
                    if classify_o(lam, t).index != 1:
                        continue
                    mu = phi1(lam, t)
                    assert mu.weight == n
                    assert phi1_inv(mu, t) == lam

    def test_inverse_is_only_valid_on_the_image(self):
        # (5,5,4,1) sits in the target family but outside the image: the
        # claimed inverse sends it to (9,5,1), which the map fixes instead.
        stray = P("5^2,4,1")
        assert classify_r(stray, 2).index == 1
        back = phi1_inv(stray, 2)
        assert back == P("9,5,1")
        assert phi1(back, 2) != stray

    def test_validation(self):
        with pytest.raises(ValueError):
            phi1(P("3,1^2"), 2)  # even ones count


class TestPhi2:
    def test_worked_example_nonzero_case(self):
        lam = P("157,34,29,11,5,3,1^3")
        assert phi2_case(lam, 4) == 1
        mu = phi2(lam, 4)
        assert mu == P("34,29,17^6,11,9^6,5,3,1^4")
        assert psi2(mu, 4) == lam

    def test_worked_example_zero_case_formula(self):
        # the recorded input is actually first-subset material (137 is 1 mod
        # 8), so only the raw formula reproduces the recorded pair
        lam = P("137,33,29,11,5,3,1^3")
        assert phi2_case(lam, 4) == 2
        mu = phi2(lam, 4, validate=False)
        assert mu == P("33,29,17^7,11,9,8,5,3,1^4")
        assert psi2(mu, 4, validate=False) == lam

    def test_round_trip_exhaustive_t2(self):
        found = 0
        for n in range(36, 53):
            for lam in o_members(n, 2):
                if classify_o(lam, 2).index != 2:
                    continue
                found += 1
                mu = phi2(lam, 2)
                assert mu.weight == n and classify_r(mu, 2).index == 2
                assert psi2(mu, 2) == lam
        assert found > 0

    def test_validation(self):
        with pytest.raises(ValueError):
            phi2(P("5,1"), 2)


class TestPhi3:
    def test_worked_example_formula(self):
        lam = P("17,13,11,9,3^25,1^3")
        mu = phi3(lam, 4, validate=False)
        assert mu == P("25^2,17,13,11,9^3,1^10")
        assert psi3(mu, 4, validate=False) == lam

    def test_formula_on_small_even_run(self):
        assert phi3(P("2^13,1"), 2, validate=False) == P("13,5^2,1^4")

    def test_genuine_member_round_trip(self):
        lam = P("3^25,1^3")
        assert classify_o(lam, 4).index == 3
        mu = phi3(lam, 4)
        assert classify_r(mu, 4).index == 3
        assert psi3(mu, 4) == lam

    def test_round_trip_exhaustive_t2(self):
        found = 0
        for n in range(39, 50):
            for lam in o_members(n, 2):
                if classify_o(lam, 2).index != 3:
                    continue
                found += 1
                mu = phi3(lam, 2)
                assert psi3(mu, 2) == lam
        assert found > 0


class TestPhi4:
    def test_worked_example(self):
        lam = P("13,7,6,2^2,1^55")
        mu = phi4(lam, 4)
        assert mu == P("33,13,9^2,7,6,2^2,1^4")
        assert psi4(mu, 4) == lam

    def test_all_ones_column(self):
        assert phi4(P("1^27"), 2) == P("17,5^2")

    def test_round_trip_exhaustive_t2(self):
        found = 0
        for n in range(27, 45):
            for lam in o_members(n, 2):
                if classify_o(lam, 2).index != 4:
                    continue
                found += 1
                mu = phi4(lam, 2)
                assert psi4(mu, 2) == lam
        assert found > 0


class TestPhiTotal:
    def test_dispatches_by_class(self):
        assert phi_total(P("17,15,13,10,5,3,2,1^3"), 4) == P("15,13,10,9,8,5,3,2,1^3")
        assert phi_total(P("13,7,6,2^2,1^55"), 4) == P("33,13,9^2,7,6,2^2,1^4")

    def test_residual_class_is_a_distinct_error(self):
        with pytest.raises(ResidualClassError):
            phi_total(P("1^5"), 2)

    def test_non_member_is_plain_error(self):
        with pytest.raises(ValueError) as err:
            phi_total(P("3,1^2"), 2)
        assert not isinstance(err.value, ResidualClassError)


class TestWeightBound:
    def test_reference_values(self):
        assert o5_weight_bound(2) == 2989
        assert o5_weight_bound(3) == 30691

    def test_dominates_exact_cap(self):
        for t in range(2, 51):
            assert o5_weight_bound(t) >= o5_weight_cap(t)

    def test_exact_cap_small_value(self):
        # t=2: eight usable part values {3,7,...,31} at multiplicity 12
        # plus at most 25 ones
        assert o5_weight_cap(2) == 12 * 136 + 25

    def test_residual_members_respect_cap(self):
        for n in range(61):
            for lam in o_members(n, 2):
                if classify_o(lam, 2).index == 5:
                    assert lam.weight <= o5_weight_cap(2) <= o5_weight_bound(2)

    def test_rejects_bad_t(self):
        with pytest.raises(ValueError):
            o5_weight_bound(1)


class TestGamma:
    def test_third_case_trades_ones_for_a_two(self):
        assert gamma(P("1^6"), 4) == P("2,1^4")

    def test_first_two_cases_are_identity(self):
        lam = P("1^14")  # ones count 14: 2 mod 6 and -2 mod 8, first subset
        assert classify_a(lam, 4).index == 1
        assert gamma(lam, 4) is lam

    def test_warns_below_t4(self):
        with pytest.warns(RuntimeWarning):
            gamma(P("1^2"), 2, validate=False)

    def test_delta3_round_trip(self):
        lam = P("1^6")
        mu = gamma(lam, 4)
        assert classify_s(mu, 4).index == 3
        assert delta3(mu, 4) == lam

    def test_delta3_validation(self):
        with pytest.raises(ValueError):
            delta3(P("1^4"), 4)  # no part 2


class TestEpsilon:
    def test_growth_case(self):
        assert epsilon(P("3,1^6")) == P("5,1^4")

    def test_all_ones_case(self):
        assert epsilon(P("1^18")) == P("7^2,1^4")

    def test_rejects_small_weight(self):
        with pytest.raises(ValueError):
            epsilon(P("1^6"))

    def test_rejects_non_member(self):
        with pytest.raises(ValueError):
            epsilon(P("3,1^4"))

    def test_case_images_are_separated_by_top_parts(self):
        for n in range(7, 41):
            for lam in d2_members(n):
                mu = epsilon(lam, validate=False)
                assert in_d1(mu)
                tops = mu.parts()[:2] + [0, 0]
                if epsilon_case(lam) == 1:
                    assert tops[0] > tops[1]
                else:
                    assert tops[0] == tops[1]

    def test_injective_by_scan(self):
        for n in range(7, 61):
            seen = {}
            for lam in d2_members(n):
                mu = epsilon(lam, validate=False)
                assert mu not in seen
                seen[mu] = lam


class TestTauEta:
    def test_case1(self):
        assert tau(P("2,1^3"), 3) == P("1^5")

    def test_case3(self):
        assert tau(P("5,1^3"), 3) == P("4,2,1^2")

    def test_case4(self):
        assert tau(P("1^9"), 3) == P("5,2,1^2")
        assert tau(P("1^9"), 5) == P("3,2^2,1^2")

    def test_case2(self):
        assert tau(P("4,1^3"), 3) == P("5,1^2")

    def test_special_double_two(self):
        # at t=4 with top part 3 the rewrite stacks a second 2
        lam = P("3^2,1^3")
        assert tau_case(lam, 4) == 3
        mu = tau(lam, 4)
        assert mu.frequency(2) == 2
        assert eta(mu, 4) == lam

    def test_needs_t_at_least_3(self):
        with pytest.raises(ValueError):
            tau(P("1^9"), 2)
        with pytest.raises(ValueError):
            eta(P("1^5"), 2)

    def test_smallest_all_ones_column_has_no_image(self):
        with pytest.raises(ValueError):
            tau(P("1^3"), 3)

    def test_round_trip_exhaustive(self):
        from hookcounts.injections import c_members

        for t in (3, 4, 5):
            for n in range(4, 31):
                for lam in c_members(n, t):
                    mu = tau(lam, t)
                    assert mu.weight == n and in_b(mu, t)
                    assert eta(mu, t) == lam

    def test_case_images_pairwise_disjoint(self):
        from hookcounts.injections import c_members

        for t in (3, 4, 5):
            for n in range(4, 31):
                by_image = {}
                for lam in c_members(n, t):
                    mu = tau(lam, t)
                    case = tau_case(lam, t)
                    assert by_image.setdefault(mu, case) == case


class TestCaseOf:
    def test_tags(self):
        assert case_of("epsilon", P("3,1^6")).case_tag == 1
        assert case_of("tau", P("2,1^3"), 3).case_tag == 1
        assert case_of("phi", P("1^5"), 2).case_tag == 5
        assert case_of("gamma", P("1^6"), 4).case_tag == 3
        with pytest.raises(ValueError):
            case_of("phi1", P("5,1"), 2)


class TestDriver:
    def test_phi1_cell_with_nonempty_domain(self):
        report = verify_injection("phi1", 4, 65)
        assert report.passed and report.domain_size > 0

    def test_weight_consistent_example_is_in_the_domain(self):
        lam = P("17,15,13,10,5,3,2,1^3")  # weight 68
        report = verify_injection("phi1", 4, 68)
        assert report.passed
        assert any(str(lam) == str(m) for m in o_members(68, 4) if classify_o(m, 4).index == 1)

    def test_tau_cell(self):
        report = verify_injection("tau", 3, 9)
        assert report.passed and report.domain_size > 0

    def test_phi_total_cell(self):
        report = verify_injection("phi", 2, 45)
        assert report.passed and report.domain_size == report.image_size > 0

    def test_gamma_warns_once_below_t4(self):
        with pytest.warns(RuntimeWarning):
            report = verify_injection("gamma", 2, 12)
        assert report.domain_size >= 0

    def test_report_serialization_shape(self):
        report = verify_injection("epsilon", 2, 18)
        payload = report.to_dict()
        assert set(payload) == {
            "map", "t", "n", "domain_size", "image_size", "passed", "violations",
        }
        json.dumps(payload)

    def test_range_helper_starts_at_map_minimum(self):
        reports = verify_injection_range("epsilon", 2, 9)
        assert [r.n for r in reports] == [7, 8, 9]

    def test_rejects_unknown_map_and_bad_cells(self):
        with pytest.raises(ValueError):
            verify_injection("sigma", 2, 10)
        with pytest.raises(ValueError):
            verify_injection("epsilon", 3, 10)
        with pytest.raises(ValueError):
            verify_injection("epsilon", 2, 5)
        with pytest.raises(ValueError):
            verify_injection("tau", 2, 10)

    def test_all_map_ids_run(self):
        import warnings as w

        for map_id in MAP_IDS:
            t = {"tau": 3, "gamma": 4}.get(map_id, 2)
            n = {"epsilon": 12, "tau": 9}.get(map_id, 10)
            with w.catch_warnings():
                w.simplefilter("ignore")
                report = verify_injection(map_id, t, n)
            assert report.passed
