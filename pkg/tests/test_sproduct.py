from itertools import islice, product

import pytest

from ordalg import (
    CapacityError,
    IncomparableError,
    IndexScheme,
    InputError,
    PreconditionError,
    boolean_semiring,
    check_transfer_distributivity,
    componentwise_leq,
    direct_product,
    find_nonassoc_witness,
    lex_compare,
    maxplus_chain,
    right_dist_only,
    s_mu,
)

BOOL = boolean_semiring()
MP3 = maxplus_chain(3)


def bool_scheme(phi_mul=1, window=range(0, 5)):
    return IndexScheme(BOOL, window, psi={"add": 0, "mul": 0}, phi={"add": 0, "mul": phi_mul})


class TestSMu:
    def test_zero_times_zero(self):
        sch = bool_scheme()
        z = sch.zero_element()
        assert s_mu("mul", z, z, sch).is_zero()
        assert s_mu("add", z, z, sch).is_zero()

    def test_identity_shifts_degenerate_to_componentwise(self):
        sch = IndexScheme(MP3, range(0, 3))
        y = sch.element({0: "1", 1: "2"})
        z = sch.element({0: "2", 2: "1"})
        s = s_mu("add", y, z, sch)
        for j in range(3):
            assert s.get(j, "0") == MP3.addv(y.get(j, "0"), z.get(j, "0"))
        p = s_mu("mul", y, z, sch)
        for j in range(3):
            assert p.get(j, "0") == MP3.mulv(y.get(j, "0"), z.get(j, "0"))

    def test_shifted_product_formula(self):
        sch = bool_scheme()
        y = sch.element({0: "1"})
        z = sch.element({1: "1"})
        assert s_mu("mul", y, z, sch) == sch.element({0: "1"})
        # support that never meets the shifted support vanishes
        z2 = sch.element({3: "1"})
        assert s_mu("mul", y, z2, sch).is_zero()

    def test_window_escape_names_index(self):
        sch = IndexScheme(BOOL, range(0, 3), psi={"add": 0, "mul": 1}, phi={"add": 0, "mul": 0})
        y = sch.element({0: "1"})
        z = sch.element({0: "1"})
        with pytest.raises(CapacityError) as err:
            s_mu("mul", y, z, sch)
        assert "psi(0) = -1" in str(err.value)

    def test_unknown_op_rejected(self):
        sch = bool_scheme()
        with pytest.raises(InputError):
            s_mu("div", sch.zero_element(), sch.zero_element(), sch)


class TestScheme:
    def test_shift_validation(self):
        with pytest.raises(InputError):
            IndexScheme(BOOL, range(0, 3), psi={"add": -1, "mul": 0}, phi={"add": 0, "mul": 0})
        # non-injective psi table rejected
        with pytest.raises(InputError):
            IndexScheme(
                BOOL,
                range(0, 3),
                psi={"add": 0, "mul": {0: 0, 1: 0, 2: 1}},
                phi={"add": 0, "mul": 0},
            )
        # phi below the identity rejected
        with pytest.raises(InputError):
            IndexScheme(
                BOOL,
                range(0, 3),
                psi={"add": 0, "mul": 0},
                phi={"add": 0, "mul": {0: 0, 1: 0, 2: 2}},
            )

    def test_explicit_monotone_phi_table_accepted(self):
        sch = IndexScheme(
            BOOL,
            range(0, 3),
            psi={"add": 0, "mul": 0},
            phi={"add": 0, "mul": {0: 1, 1: 3, 2: 4}},
        )
        assert sch.phi_at("mul", 1) == 3
        assert sch.phi_moves("mul")

    def test_embedding_must_be_strictly_monotone_hom(self):
        with pytest.raises(InputError):
            IndexScheme(BOOL, range(0, 3), embed={"0": "0", "1": "0"})

    def test_element_validation(self):
        sch = bool_scheme()
        with pytest.raises(InputError):
            sch.element({9: "1"})
        with pytest.raises(InputError):
            sch.element({0: "7"})


class TestTheta:
    def test_theta_zero_is_zero(self):
        sch = IndexScheme(BOOL, range(0, 4))
        assert sch.theta("0").is_zero()

    def test_theta_constant(self):
        sch = IndexScheme(BOOL, range(0, 4))
        assert sch.theta("1") == sch.element({0: "1", 1: "1", 2: "1", 3: "1"})

    def test_theta_is_a_homomorphism_for_identity_shifts(self):
        sch = IndexScheme(BOOL, range(0, 4))
        for x in BOOL.elements:
            for z in BOOL.elements:
                assert s_mu("mul", sch.theta(x), sch.theta(z), sch) == sch.theta(BOOL.mulv(x, z))
                assert s_mu("add", sch.theta(x), sch.theta(z), sch) == sch.theta(BOOL.addv(x, z))


class TestLexCompare:
    def chain_scheme(self):
        return IndexScheme(MP3, range(0, 3))

    def test_equal(self):
        sch = self.chain_scheme()
        y = sch.element({1: "2"})
        assert lex_compare(y, y, sch) == "eq"

    def test_least_differing_index_wins(self):
        sch = self.chain_scheme()
        y = sch.element({0: "1"})
        z = sch.element({1: "2"})
        assert lex_compare(y, z, sch) == "gt"  # index 0: 1 > 0
        assert lex_compare(z, y, sch) == "lt"

    def test_incomparable_components_rejected(self):
        K = direct_product(boolean_semiring("b1"), boolean_semiring("b2"))
        sch = IndexScheme(K, range(0, 2))
        y = sch.element({0: "1,0"})
        z = sch.element({0: "0,1"})
        with pytest.raises(IncomparableError):
            lex_compare(y, z, sch)

    def test_strict_linear_order_on_grid(self):
        sch = self.chain_scheme()
        grid = list(sch.all_elements())
        assert len(grid) == 27
        for y in grid:
            for z in grid:
                c1, c2 = lex_compare(y, z, sch), lex_compare(z, y, sch)
                assert (c1 == "eq") == (y == z)
                assert {c1, c2} in ({"eq"}, {"lt", "gt"})
        # transitivity of the strict part
        lt = {(y, z) for y in grid for z in grid if lex_compare(y, z, sch) == "lt"}
        for y, z in lt:
            for w in grid:
                if (z, w) in lt:
                    assert (y, w) in lt


class TestNonassociativity:
    def test_witness_found_over_boolean(self):
        result = find_nonassoc_witness("mul", bool_scheme(), budget=1000)
        assert result.found
        a, b, c, left, right = result.witness
        sch = bool_scheme()
        assert s_mu("mul", s_mu("mul", a, b, sch), c, sch) == left
        assert s_mu("mul", a, s_mu("mul", b, c, sch), sch) == right
        assert left != right
        zero = BOOL.zero
        assert left.get(result.diff_index, zero) != right.get(result.diff_index, zero)

    def test_identity_phi_is_a_precondition_error(self):
        sch = IndexScheme(BOOL, range(0, 4))
        with pytest.raises(PreconditionError):
            find_nonassoc_witness("mul", sch)

    def test_all_zero_never_witnesses(self):
        sch = bool_scheme()
        z = sch.zero_element()
        left = s_mu("mul", s_mu("mul", z, z, sch), z, sch)
        right = s_mu("mul", z, s_mu("mul", z, z, sch), sch)
        assert left == right


class TestTransfer:
    @pytest.mark.parametrize("component,side", [(BOOL, "left"), (BOOL, "right"), (MP3, "left"), (MP3, "right"), (right_dist_only(), "right")])
    def test_distributivity_transfers(self, component, side):
        sch = IndexScheme(component, range(0, 5), psi={"add": 0, "mul": 0}, phi={"add": 0, "mul": 1})
        pool = list(islice(sch.all_elements(range(0, 2)), 16))
        triples = list(product(pool, repeat=3))[:600]
        assert check_transfer_distributivity(sch, side, triples).holds

    def test_add_shift_must_be_identity(self):
        sch = IndexScheme(BOOL, range(0, 5), psi={"add": 0, "mul": 0}, phi={"add": 1, "mul": 1})
        with pytest.raises(PreconditionError):
            check_transfer_distributivity(sch, "left", [])


class TestDirectedness:
    def test_componentwise_order_directed_and_compatible(self):
        sch = IndexScheme(MP3, range(0, 2))
        grid = list(sch.all_elements())
        top = sch.element({0: "2", 1: "2"})
        for y in grid:
            assert componentwise_leq(y, top, sch)
        # operation compatibility on comparable quadruples
        for a, c in product(grid, repeat=2):
            if not componentwise_leq(a, c, sch):
                continue
            for b, d in product(grid[:5], repeat=2):
                if not componentwise_leq(b, d, sch):
                    continue
                for op in ("add", "mul"):
                    assert componentwise_leq(s_mu(op, a, b, sch), s_mu(op, c, d, sch), sch)
