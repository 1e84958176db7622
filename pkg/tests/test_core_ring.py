import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greenring.core_ring import (
    GroupSpec,
    RingElement,
    add,
    basis_element,
    chi,
    chi_power,
    dim,
    induce,
    mul,
    mul_chi_V,
    one,
    reduction_parameters,
    tensor,
    zero,
)

G53 = GroupSpec(5, 3)
G33 = GroupSpec(3, 3)
G23 = GroupSpec(2, 3)


def V(group, *pairs):
    return RingElement(group, dict(pairs))


class TestGroupSpec:
    def test_q_is_derived(self):
        assert GroupSpec(3, 4).q == 81

    @pytest.mark.parametrize("p", [0, 1, 4, 6, 9, 100])
    def test_rejects_composite(self, p):
        with pytest.raises(ValueError):
            GroupSpec(p, 2)

    def test_rejects_bad_alpha(self):
        with pytest.raises(ValueError):
            GroupSpec(5, 0)


class TestRingElement:
    def test_zero_coefficients_pruned(self):
        assert V(G53, (3, 0), (4, 2)).coeffs == {4: 2}

    def test_index_zero_is_the_zero_module(self):
        assert V(G53, (0, 7)).is_zero()
        assert V(G53, (-3, 2), (1, 1)) == one(G53)

    def test_overflowing_index_rejected(self):
        with pytest.raises(ValueError):
            V(G53, (126, 1))

    def test_additive_inverse(self):
        assert (V(G53, (2, 1)) + V(G53, (2, -1))).is_zero()

    def test_add_doubles(self):
        assert V(G53, (3, 1)) + V(G53, (3, 1)) == V(G53, (3, 2))

    def test_add_disjoint(self):
        lhs = V(G53, (12, 1), (8, -1)) + V(G53, (2, 1))
        assert lhs == V(G53, (12, 1), (8, -1), (2, 1))

    def test_mismatched_groups_rejected(self):
        with pytest.raises(ValueError):
            add(one(G53), one(G33))
        with pytest.raises(ValueError):
            mul(one(G53), one(G33))

    def test_str_rendering(self):
        assert str(V(G53, (12, 1), (8, -1), (2, 1))) == "V12 - V8 + V2"
        assert str(V(G23, (2, 2))) == "2V2"
        assert str(zero(G53)) == "0"
        assert str(V(G53, (5, -2))) == "-2V5"

    def test_json_roundtrip(self):
        element = V(G53, (12, 1), (8, -1), (2, 1))
        assert RingElement.from_json(element.to_json()) == element

    def test_json_keys_sorted_numerically(self):
        element = V(G53, (100, 1), (2, 1), (30, -1))
        assert list(element.to_json_dict()["coeffs"]) == ["2", "30", "100"]


class TestDim:
    def test_paper_example(self):
        assert dim(V(G53, (12, 1), (8, -1), (2, 1))) == 6

    def test_zero(self):
        assert dim(zero(G53)) == 0

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_chi_has_dimension_two(self, k):
        assert dim(chi(G53, k)) == 2


class TestChi:
    def test_p5_level1(self):
        assert chi(G53, 1) == V(G53, (6, 1), (4, -1))

    def test_level0_is_v2(self):
        for group in (G53, G33, G23):
            assert chi(group, 0) == basis_element(group, 2)

    def test_p3_level2(self):
        assert chi(G33, 2) == V(G33, (10, 1), (8, -1))

    def test_level_out_of_range(self):
        with pytest.raises(ValueError):
            chi(G53, 3)


class TestMulChiV:
    def test_middle_case(self):
        assert mul_chi_V(G53, 0, 2) == V(G53, (3, 1), (1, 1))

    def test_digit_rule_at_multiple(self):
        # j = 1 digit rule: the V_0 term vanishes
        assert mul_chi_V(G53, 1, 5) == V(G53, (10, 1))

    def test_s_equals_one(self):
        assert mul_chi_V(G53, 0, 1) == basis_element(G53, 2)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            mul_chi_V(G53, 0, 6)

    @pytest.mark.parametrize("p,alpha", [(2, 3), (3, 2), (5, 2)])
    def test_agrees_with_tensor_difference_everywhere(self, p, alpha):
        group = GroupSpec(p, alpha)
        for k in range(alpha):
            pk = p**k
            for s in range(1, p ** (k + 1) + 1):
                expected = tensor(group, pk + 1, s)
                if pk - 1 >= 1:
                    expected = expected - tensor(group, pk - 1, s)
                assert mul_chi_V(group, k, s) == expected, (p, alpha, k, s)


class TestTensor:
    def test_unit(self):
        for s in (1, 7, 125):
            assert tensor(G53, 1, s) == basis_element(G53, s)

    def test_paper_product(self):
        assert tensor(G53, 2, 11) == V(G53, (12, 1), (10, 1))

    def test_oracle_frozen_p3(self):
        # Jordan type of J_2 (x) J_2 over F_3 (oracle: blocks 3, 1)
        assert tensor(G33, 2, 2) == V(G33, (3, 1), (1, 1))

    def test_oracle_frozen_p2(self):
        # Jordan type of J_2 (x) J_2 over F_2 (oracle: blocks 2, 2)
        assert tensor(G23, 2, 2) == V(G23, (2, 2))

    def test_oracle_frozen_p5_midrange(self):
        # oracle: J_4 (x) J_4 over F_5 -> 3 blocks of 5 and one of 1
        assert tensor(G53, 4, 4) == V(G53, (5, 3), (1, 1))
        assert tensor(G53, 3, 4) == V(G53, (5, 2), (2, 1))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            tensor(G53, 0, 4)
        with pytest.raises(ValueError):
            tensor(G53, 2, 126)

    @pytest.mark.parametrize("p,alpha", [(2, 3), (3, 3), (5, 2), (7, 1)])
    def test_symmetry_positivity_dimension(self, p, alpha):
        group = GroupSpec(p, alpha)
        q = group.q
        for r in range(1, q + 1):
            for s in range(r, q + 1):
                product = tensor(group, r, s)
                assert product == tensor(group, s, r)
                assert all(c > 0 for c in product.coeffs.values())
                assert product.dim() == r * s


class TestMul:
    def test_unit_element(self):
        x = V(G53, (12, 1), (8, -1), (2, 1))
        assert mul(one(G53), x) == x

    def test_chi1_squared(self):
        # worked product: chi_1^2 = V_11 - V_9 + 2 V_1 over p = 5
        # (consistent with U_12 = (chi_1^2 - 1) chi_0 = V12 - V8 + V2)
        assert mul(chi(G53, 1), chi(G53, 1)) == V(G53, (11, 1), (9, -1), (1, 2))

    @pytest.mark.parametrize("p,alpha,i,j", [(3, 3, 0, 1), (3, 3, 1, 2), (5, 3, 0, 2)])
    def test_chi_product_identity(self, p, alpha, i, j):
        # chi_i chi_j = V_{p^j+p^i+1} - V_{p^j-p^i-1} - V_{p^j+p^i-1} + V_{p^j-p^i+1}
        # (colliding middle terms cancel, e.g. p = 3, i = 0, j = 1)
        group = GroupSpec(p, alpha)
        pi, pj = p**i, p**j
        expected = (
            V(group, (pj + pi + 1, 1))
            + V(group, (pj - pi - 1, -1))
            + V(group, (pj + pi - 1, -1))
            + V(group, (pj - pi + 1, 1))
        )
        assert mul(chi(group, i), chi(group, j)) == expected

    @given(
        r=st.integers(1, 27),
        s=st.integers(1, 27),
        t=st.integers(1, 27),
    )
    @settings(max_examples=40, deadline=None)
    def test_associative_on_basis(self, r, s, t):
        a, b, c = (basis_element(G33, i) for i in (r, s, t))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))


_small_elements = st.dictionaries(
    st.integers(1, 27), st.integers(-3, 3), max_size=4
).map(lambda d: RingElement(G33, d))


class TestDimHomomorphism:
    @given(a=_small_elements, b=_small_elements)
    @settings(max_examples=60, deadline=None)
    def test_multiplicative_and_additive(self, a, b):
        assert dim(mul(a, b)) == dim(a) * dim(b)
        assert dim(a + b) == dim(a) + dim(b)


class TestChiPower:
    def test_power_one_is_chi(self):
        for i in range(3):
            assert chi_power(G53, i, 1) == chi(G53, i)

    def test_p5_square(self):
        assert chi_power(G53, 1, 2) == V(G53, (11, 1), (9, -1), (1, 2))

    def test_p3_square_matches_tensor(self):
        assert chi_power(G33, 0, 2) == tensor(G33, 2, 2)

    @pytest.mark.parametrize("p,alpha", [(3, 2), (5, 2), (7, 2)])
    def test_closed_form_equals_iterated_mul(self, p, alpha):
        group = GroupSpec(p, alpha)
        for i in range(alpha):
            acc = one(group)
            for s in range(1, p):
                acc = mul(acc, chi(group, i))
                assert chi_power(group, i, s) == acc, (p, i, s)

    def test_exponent_out_of_range(self):
        with pytest.raises(ValueError):
            chi_power(G53, 0, 5)


class TestInduce:
    def test_regular_module_from_trivial_subgroup(self):
        assert induce(G53, 0, 1) == basis_element(G53, 125)

    def test_p3_example(self):
        assert induce(GroupSpec(3, 2), 1, 2) == basis_element(GroupSpec(3, 2), 6)

    def test_p5_example(self):
        assert induce(G53, 2, 7) == basis_element(G53, 35)

    def test_image_is_exactly_multiples_of_p(self):
        group = GroupSpec(3, 3)
        image = {
            induce(group, beta, r).top_index()
            for beta in range(group.alpha)
            for r in range(1, group.p**beta + 1)
        }
        assert image == set(range(3, 28, 3))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induce(G53, 3, 1)
        with pytest.raises(ValueError):
            induce(G53, 1, 6)


class TestReductionParameters:
    @pytest.mark.parametrize(
        "p,r,s",
        [(5, 2, 11), (5, 7, 11), (5, 11, 21), (3, 4, 7), (2, 3, 7), (5, 9, 9)],
    )
    def test_case_split(self, p, r, s):
        params = reduction_parameters(p, r, s)
        pb = p**params.beta
        assert r == params.r0 * pb + params.r1 and 0 <= params.r1 < pb
        assert s == params.s0 * pb + params.s1 and 0 <= params.s1 < pb
        if params.r0 + params.s0 < p:
            assert params.c1 == 0
            assert params.d1 == params.r0
            assert params.d2 == params.r0
        else:
            assert params.c1 == r + s - pb * p
            assert params.d1 == p - params.s0 - 1
            assert params.d2 == p - params.s0

    def test_rejects_p_power(self):
        with pytest.raises(ValueError):
            reduction_parameters(5, 3, 25)
