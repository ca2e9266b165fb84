from itertools import combinations, product

import pytest

from ordalg import (
    Dirac,
    FunctionSpace,
    Functional,
    Homomorphism,
    InfOver,
    InputError,
    PreconditionError,
    SupOver,
    TableFunctional,
    boolean_semiring,
    check_homogeneous,
    check_idempotent,
    check_weak_properties,
    enumerate_functionals,
    enumerate_idempotent,
    extend_inf,
    extend_over_space,
    extensionally_equal,
    is_support,
    maxplus_chain,
    monad_check,
    pushforward,
    signature,
    support_of,
    supported_on,
    weighted_combo,
)
from ordalg.functionals import is_submodule, submodule_closure, vanishes_agreement

BOOL = boolean_semiring()
MP3 = maxplus_chain(3)
MP4 = maxplus_chain(4)


def bool_space(points=("x1", "x2")):
    return FunctionSpace(points, BOOL)


def mp3_space(points=("x1", "x2", "x3")):
    return FunctionSpace(points, MP3)


class PartialFunctional(Functional):
    """Test helper: a functional given on a subset of the space."""

    def __init__(self, space, mapping):
        self.space = space
        self.mapping = dict(mapping)

    def value(self, f):
        return self.mapping[f]


class TestEval:
    def test_dirac_evaluates(self):
        sp = mp3_space()
        f = sp.function({"x1": "1", "x2": "2", "x3": "0"})
        assert Dirac(sp, "x2").value(f) == "2"

    def test_sup_over_subset(self):
        sp = mp3_space()
        f = sp.function({"x1": "2", "x2": "1", "x3": "0"})
        assert SupOver(sp, frozenset({"x1", "x3"})).value(f) == "2"

    def test_sup_over_constants_normalizes(self):
        sp = mp3_space()
        nu = SupOver(sp, frozenset(sp.points))
        for c in MP3.elements:
            assert nu.value(sp.constant(c)) == c

    def test_empty_subset_rejected(self):
        with pytest.raises(InputError):
            SupOver(mp3_space(), frozenset())


class TestIdempotentAxioms:
    def test_dirac_passes_everything(self):
        for sp in (bool_space(), mp3_space(("x1", "x2"))):
            for x in sp.points:
                assert check_idempotent(Dirac(sp, x)).all_hold

    def test_sup_functional_passes_all_but_meet(self):
        sp = mp3_space()
        for size in (1, 2, 3):
            for subset in combinations(sp.points, size):
                rep = check_idempotent(SupOver(sp, frozenset(subset)))
                for law in ("normalized", "left-shift", "right-shift", "join"):
                    assert rep[law].holds, (subset, law)
                if size == 1:
                    assert rep["meet"].holds

    def test_meet_defect_witness_is_genuine(self):
        # the pointwise min of two crossing functions drops below the min
        # of the sup values; the checker must catch exactly that
        sp = mp3_space()
        nu = SupOver(sp, frozenset({"x1", "x2"}))
        rep = check_idempotent(nu)
        assert not rep["meet"].holds
        f, g, lhs, rhs = rep["meet"].witness
        assert nu.value(sp.wedge(f, g)) == lhs and lhs != rhs

    def test_constant_zero_fails_normalization(self):
        sp = bool_space()
        lam = TableFunctional(sp, tuple("0" for _ in sp.functions()))
        rep = check_idempotent(lam)
        assert not rep["normalized"].holds
        c, got = rep["normalized"].witness
        assert c == "1" and got == "0"


class TestWeakProperties:
    def test_sup_functional_weakly_additive_and_order_preserving(self):
        sp = mp3_space()
        rep = check_weak_properties(SupOver(sp, frozenset({"x1", "x3"})))
        assert rep["weakly-additive"].holds
        assert rep["order-preserving"].holds
        assert rep["normalized"].holds
        assert rep["non-expanding"].holds

    def test_dirac_non_expanding(self):
        sp = mp3_space(("x1", "x2"))
        assert check_weak_properties(Dirac(sp, "x1"))["non-expanding"].holds

    def test_squaring_breaks_weak_additivity(self):
        # f(x)*f(x) on the 4-chain: order preserving, but adding a
        # constant before squaring overshoots
        sp = FunctionSpace(("x1", "x2"), MP4)
        table = tuple(MP4.mulv(f("x1"), f("x1")) for f in sp.functions())
        lam = TableFunctional(sp, table)
        rep = check_weak_properties(lam)
        assert rep["order-preserving"].holds
        assert not rep["weakly-additive"].holds

    def test_implication_consistency_over_full_enumeration(self):
        sp = bool_space()
        for nu in enumerate_functionals(sp):
            rep = check_weak_properties(nu)
            assert rep["weak-implies-nonexpanding"].holds


class TestHomogeneity:
    def test_dirac_homogeneous(self):
        sp = mp3_space(("x1", "x2"))
        rep = check_homogeneous(Dirac(sp, "x2"))
        assert rep["left-homogeneous"].holds and rep["right-homogeneous"].holds

    def test_sup_functional_homogeneous_on_chain(self):
        sp = mp3_space(("x1", "x2"))
        rep = check_homogeneous(SupOver(sp, frozenset(sp.points)))
        assert rep["left-homogeneous"].holds and rep["right-homogeneous"].holds


class TestWeightedCombo:
    def test_unit_coefficient_is_identity(self):
        sp = bool_space()
        nu = SupOver(sp, frozenset(sp.points))
        combo = weighted_combo("left", ["1"], [nu])
        assert extensionally_equal(combo, nu)

    def test_boolean_dirac_combo_is_idempotent(self):
        sp = bool_space()
        combo = weighted_combo("left", ["1", "1"], [Dirac(sp, "x1"), Dirac(sp, "x2")])
        rep = check_idempotent(combo)
        for law in ("normalized", "left-shift", "right-shift", "join"):
            assert rep[law].holds

    def test_zero_coefficient_rejected(self):
        sp = bool_space()
        with pytest.raises(PreconditionError):
            weighted_combo("left", ["0", "1"], [Dirac(sp, "x1"), Dirac(sp, "x2")])

    def test_sum_must_be_one(self):
        sp = FunctionSpace(("x1", "x2"), MP3)
        with pytest.raises(PreconditionError):
            weighted_combo("left", ["2"], [Dirac(sp, "x1")])

    def test_distributive_coefficients_needed(self):
        rd = __import__("ordalg").right_dist_only()
        sp = FunctionSpace(("x1",), rd)
        with pytest.raises(PreconditionError):
            weighted_combo("left", ["1"], [Dirac(sp, "x1")])

    def test_homogeneous_parts_give_homogeneous_combo(self):
        sp = bool_space()
        combo = weighted_combo("right", ["1", "1"], [Dirac(sp, "x1"), Dirac(sp, "x2")])
        rep = check_homogeneous(combo)
        assert rep["left-homogeneous"].holds and rep["right-homogeneous"].holds


class TestExtension:
    def constants_basis(self, sp):
        return tuple(sp.constant(c) for c in sp.K.elements)

    def test_agreement_on_the_submodule(self):
        sp = FunctionSpace(("x1", "x2"), MP3)
        basis = self.constants_basis(sp)
        base = PartialFunctional(sp, {sp.constant(c): c for c in MP3.elements})
        g = sp.function({"x1": "1", "x2": "2"})
        for variant in ("inf", "sup", "outer"):
            ext = extend_inf(base, basis, g, variant)
            for c in MP3.elements:
                assert ext.value(sp.constant(c)) == c

    def test_worked_chain_example(self):
        # constants only, normalized base, g = [1,2] on the chain {0,1,2}:
        # minorant-inf gives 0, minorant-sup gives 1
        sp = FunctionSpace(("x1", "x2"), MP3)
        basis = self.constants_basis(sp)
        base = PartialFunctional(sp, {sp.constant(c): c for c in MP3.elements})
        g = sp.function({"x1": "1", "x2": "2"})
        assert extend_inf(base, basis, g, "inf").value(g) == "0"
        assert extend_inf(base, basis, g, "sup").value(g) == "1"
        assert extend_inf(base, basis, g, "outer").value(g) == "2"

    def test_basis_must_be_a_submodule(self):
        sp = FunctionSpace(("x1", "x2"), MP3)
        base = Dirac(sp, "x1")
        with pytest.raises(PreconditionError):
            extend_inf(base, (sp.constant("0"),), sp.constant("1"), "sup")

    def test_iterated_extension_keeps_shift_axioms(self):
        sp = FunctionSpace(("x1", "x2"), MP3)
        basis = self.constants_basis(sp)
        base = PartialFunctional(sp, {sp.constant(c): c for c in MP3.elements})
        for variant in ("sup", "outer"):
            total = extend_over_space(base, basis, variant)
            rep = check_idempotent(total)
            assert rep["left-shift"].holds and rep["right-shift"].holds, variant
            assert rep["normalized"].holds

    def test_submodule_closure_is_a_submodule(self):
        sp = FunctionSpace(("x1", "x2"), MP3)
        seed = self.constants_basis(sp) + (sp.function({"x1": "0", "x2": "2"}),)
        closed = submodule_closure(sp, seed)
        assert is_submodule(sp, closed)


class TestPushforward:
    def identity_hom(self, K):
        return Homomorphism(K, K, {e: e for e in K.elements})

    def test_identity_pushforward_is_identity(self):
        sp = bool_space()
        u = self.identity_hom(BOOL)
        for nu in enumerate_idempotent(sp, ("normalized", "left-shift", "right-shift", "join")):
            pushed = pushforward({"x1": "x1", "x2": "x2"}, u, nu, sp.points)
            assert signature(pushed) == signature(nu)

    def test_constant_map_reads_the_point(self):
        sp = bool_space()
        u = self.identity_hom(BOOL)
        nu = SupOver(sp, frozenset(sp.points))
        pushed = pushforward({"x1": "y", "x2": "y"}, u, nu, ("y",))
        target = pushed.space
        for g in target.functions():
            assert pushed.value(g) == g("y")

    def test_composition_functor_law(self):
        spx = bool_space()
        u = self.identity_hom(BOOL)
        points = spx.points
        maps = [dict(zip(points, images)) for images in product(points, repeat=2)]
        family = enumerate_idempotent(spx, ("normalized", "left-shift", "right-shift", "join"))
        for f in maps:
            for s in maps:
                fs = {x: f[s[x]] for x in points}
                for nu in family:
                    once = pushforward(fs, u, nu, points)
                    stepwise = pushforward(f, u, pushforward(s, u, nu, points), points)
                    assert signature(once) == signature(stepwise)

    def test_missing_preimage_is_input_error(self):
        sp = bool_space()
        embed = Homomorphism(BOOL, MP3, {"0": "0", "1": "1"})
        pushed = pushforward({"x1": "x1", "x2": "x2"}, embed, Dirac(sp, "x1"), sp.points)
        target = pushed.space
        good = target.function({"x1": "1", "x2": "0"})
        assert pushed.value(good) == "1"
        with pytest.raises(InputError):
            pushed.value(target.function({"x1": "2", "x2": "0"}))

    def test_pushforward_preserves_passing_axioms(self):
        sp = bool_space()
        u = self.identity_hom(BOOL)
        fmap = {"x1": "x2", "x2": "x2"}
        for nu in [Dirac(sp, "x1"), SupOver(sp, frozenset(sp.points))]:
            before = check_idempotent(nu)
            pushed = pushforward(fmap, u, nu, sp.points)
            after = check_idempotent(pushed)
            for law, verdict in before.verdicts.items():
                if verdict.holds:
                    assert after[law].holds, law

    def test_monomorphic_on_injective_maps(self):
        spx = bool_space()
        spy = FunctionSpace(("x1", "x2", "x3"), BOOL)
        u = self.identity_hom(BOOL)
        inject = {"x1": "x1", "x2": "x2"}
        family = enumerate_idempotent(spx, ("normalized", "left-shift", "right-shift", "join"))
        for n1 in family:
            for n2 in family:
                if signature(n1) == signature(n2):
                    continue
                p1 = pushforward(inject, u, n1, spy.points)
                p2 = pushforward(inject, u, n2, spy.points)
                assert signature(p1) != signature(p2)

    def test_epimorphic_outer_extension_on_surjections(self):
        # pull an idempotent functional back through a surjection, then
        # extend outer to the whole space: the join-side axioms survive
        spx = FunctionSpace(("x1", "x2", "x3"), BOOL)
        spy = bool_space(("y1", "y2"))
        fmap = {"x1": "y1", "x2": "y2", "x3": "y2"}
        for nu in enumerate_idempotent(spy, ("normalized", "left-shift", "right-shift", "join")):
            pulled = {}
            for g in spy.functions():
                composed = spx.function({x: g(fmap[x]) for x in spx.points})
                pulled[composed] = nu.value(g)
            basis = tuple(f for f in spx.functions() if f in pulled)
            assert is_submodule(spx, basis)
            base = PartialFunctional(spx, pulled)
            total = extend_over_space(base, basis, "outer")
            rep = check_idempotent(total)
            for law in ("normalized", "left-shift", "right-shift", "join"):
                assert rep[law].holds, (signature(nu), law)
            # and it genuinely extends the pulled-back functional
            for composed, value in pulled.items():
                assert total.value(composed) == value


class TestSupports:
    def test_dirac_support(self):
        sp = mp3_space()
        rep = support_of(Dirac(sp, "x2"))
        assert rep.support == frozenset({"x2"})
        assert rep.exhaustive and not rep.degenerate

    def test_sup_over_support_with_minimality(self):
        sp = mp3_space()
        E = frozenset({"x1", "x3"})
        nu = SupOver(sp, E)
        rep = support_of(nu)
        assert rep.support == E
        assert is_support(nu, E)
        assert not is_support(nu, frozenset({"x1"}))

    def test_zero_functional_supported_everywhere(self):
        sp = bool_space()
        zero = TableFunctional(sp, tuple("0" for _ in sp.functions()))
        rep = support_of(zero)
        assert rep.support == frozenset()
        assert frozenset() in rep.supported_sets

    def test_degenerate_support_flagged(self):
        sp = bool_space()
        one = TableFunctional(sp, tuple("1" for _ in sp.functions()))
        rep = support_of(one)
        assert rep.degenerate

    def test_agreement_equivalence_on_join_family(self):
        # supported-on and restriction-agreement coincide on the
        # normalized join-compatible family
        for pts in (("x1", "x2"), ("x1", "x2", "x3")):
            sp = bool_space(pts)
            family = enumerate_idempotent(
                sp, ("normalized", "left-shift", "right-shift", "join")
            )
            assert family
            for nu in family:
                for size in range(len(sp.points) + 1):
                    for subset in combinations(sp.points, size):
                        assert supported_on(nu, subset) == vanishes_agreement(nu, subset)

    def test_intersection_of_supports_on_join_family(self):
        for pts in (("x1", "x2"), ("x1", "x2", "x3")):
            sp = bool_space(pts)
            for nu in enumerate_idempotent(
                sp, ("normalized", "left-shift", "right-shift", "join")
            ):
                sets = [
                    frozenset(s)
                    for size in range(len(sp.points) + 1)
                    for s in combinations(sp.points, size)
                    if supported_on(nu, s)
                ]
                for E in sets:
                    for F in sets:
                        assert supported_on(nu, E & F)

    def test_meet_like_functional_breaks_both_support_properties(self):
        # the pointwise-and functional is weakly additive and order
        # preserving yet is supported on each singleton without being
        # supported on their empty intersection, and its value is not
        # determined by the restriction to a singleton; the properties
        # above genuinely need the join rule
        sp = bool_space()
        land = TableFunctional(sp, tuple(BOOL.mulv(f("x1"), f("x2")) for f in sp.functions()))
        weak = check_weak_properties(land)
        assert weak["weakly-additive"].holds and weak["order-preserving"].holds
        assert supported_on(land, {"x1"}) and supported_on(land, {"x2"})
        assert not supported_on(land, frozenset())
        assert not vanishes_agreement(land, {"x1"})


class TestSupportImageLaw:
    def test_pushforward_support_is_image_of_support(self):
        sp = bool_space()
        u = Homomorphism(BOOL, BOOL, {"0": "0", "1": "1"})
        points = sp.points
        family = [Dirac(sp, x) for x in points]
        family += [SupOver(sp, frozenset(s)) for size in (1, 2) for s in combinations(points, size)]
        for images in product(points, repeat=2):
            fmap = dict(zip(points, images))
            for nu in family:
                pushed = pushforward(fmap, u, nu, points)
                lhs = support_of(pushed).support
                rhs = frozenset(fmap[x] for x in support_of(nu).support)
                assert lhs == rhs


class TestMonad:
    def test_monad_laws_on_boolean_square(self):
        rep = monad_check(bool_space())
        assert rep.all_hold

    def test_monad_laws_on_chain(self):
        rep = monad_check(FunctionSpace(("x1", "x2"), MP3))
        assert rep.all_hold

    def test_family_without_diracs_is_inconclusive(self):
        sp = bool_space()
        rep = monad_check(sp, family=[SupOver(sp, frozenset(sp.points))])
        assert not rep["family-hosts-units"].holds


class TestExactTransport:
    def test_function_level_exactness_transports(self):
        from ordalg import check_exact_chain, trivial_structure

        triv = trivial_structure()
        inj = Homomorphism(triv, BOOL, {"0": "0"})
        ident = Homomorphism(BOOL, BOOL, {"0": "0", "1": "1"})
        assert check_exact_chain([inj, ident]).holds
        points = ("x1", "x2")
        sp1 = FunctionSpace(points, triv)
        sp2 = FunctionSpace(points, BOOL)
        lifted_image = {
            sp2.function({x: inj(f(x)) for x in points}) for f in sp1.functions()
        }
        lifted_kernel = {
            f for f in sp2.functions() if all(ident(f(x)) == BOOL.zero for x in points)
        }
        assert lifted_image == lifted_kernel == {sp2.zero()}
