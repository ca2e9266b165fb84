"""Groupoid actions with cocycles, the induced representation on function
spaces, convolution of functionals, and the quasiring/ideal checks for
the resulting families.

The composition convention follows the representation identity: applying
g and then h equals applying their product, i.e. v_h(v_g(x)) = v_{gh}(x),
which together with the cocycle rule makes T_g T_h = T_{gh}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import IncomparableError, InputError, PreconditionError
from .funcspace import FunctionSpace, KFunction
from .functionals import Dirac, Functional, TableFunctional, signature, support_of
from .report import AxiomReport, Verdict
from .structures import FinStruct

KINDS = ("add", "join", "meet")
REGIMES = ("unit-cocycle", "homogeneous")


@dataclass(frozen=True, eq=False)
class Groupoid:
    """One total binary operation with a two-sided unit; no other laws."""

    name: str
    elements: tuple
    table: dict
    unit: str

    def __post_init__(self):
        eset = set(self.elements)
        if self.unit not in eset:
            raise InputError(f"{self.name}: unit {self.unit!r} not an element")
        for a in self.elements:
            for b in self.elements:
                if (a, b) not in self.table:
                    raise InputError(f"{self.name}: table missing ({a},{b})")
                if self.table[(a, b)] not in eset:
                    raise InputError(f"{self.name}: value {self.table[(a, b)]!r} outside carrier")
        for a in self.elements:
            if self.table[(self.unit, a)] != a or self.table[(a, self.unit)] != a:
                raise InputError(f"{self.name}: unit is not neutral at {a!r}")

    def mulv(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def is_associative(self) -> Verdict:
        for a, b, c in product(self.elements, repeat=3):
            if self.mulv(self.mulv(a, b), c) != self.mulv(a, self.mulv(b, c)):
                return Verdict.failed("assoc", (a, b, c))
        return Verdict.passed("assoc")


@dataclass(eq=False)
class ActionSystem:
    """A groupoid action on a finite set with a cocycle into an
    associative part of the coefficient structure."""

    G: Groupoid
    K: FinStruct
    points: tuple
    v: dict
    L: frozenset
    rho: dict
    regime: str = "unit-cocycle"
    space: FunctionSpace = field(init=False)

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise InputError(f"unknown regime {self.regime!r}")
        pset = set(self.points)
        for g in self.G.elements:
            if g not in self.v:
                raise InputError(f"action missing map for {g!r}")
            for x in self.points:
                if x not in self.v[g]:
                    raise InputError(f"action map for {g!r} missing point {x!r}")
                if self.v[g][x] not in pset:
                    raise InputError(f"action image {self.v[g][x]!r} outside the point set")
                if (g, x) not in self.rho:
                    raise InputError(f"cocycle missing value at ({g},{x})")
        if not self.L <= set(self.K.elements):
            raise InputError("L is not a subset of the coefficient carrier")
        self.space = FunctionSpace(self.points, self.K)

    def act(self, g: str, x: str) -> str:
        return self.v[g][x]


def check_action(sys: ActionSystem) -> Verdict:
    """All representation and cocycle identities, exhaustively."""
    G, K = sys.G, sys.K
    law = "action"
    for x in sys.points:
        if sys.act(G.unit, x) != x:
            return Verdict.failed(law, ("unit-action", x))
    for g in G.elements:
        for h in G.elements:
            gh = G.mulv(g, h)
            for x in sys.points:
                if sys.act(h, sys.act(g, x)) != sys.act(gh, x):
                    return Verdict.failed(law, ("composition", g, h, x))
    if not {K.zero, K.one} <= sys.L:
        return Verdict.failed(law, ("L-units", sys.L))
    for a in sys.L:
        for b in sys.L:
            if K.mulv(a, b) not in sys.L:
                return Verdict.failed(law, ("L-closed", a, b))
            for c in K.elements:
                if K.mulv(a, K.mulv(b, c)) != K.mulv(K.mulv(a, b), c):
                    return Verdict.failed(law, ("L-assoc", a, b, c))
    for (g, x), value in sorted(sys.rho.items()):
        if value == K.zero or value not in sys.L:
            raise InputError(f"cocycle value at ({g},{x}) must lie in L minus zero")
    for x in sys.points:
        if sys.rho[(G.unit, x)] != K.one:
            return Verdict.failed(law, ("cocycle-unit", x))
    for g in G.elements:
        for h in G.elements:
            for x in sys.points:
                lhs = K.mulv(sys.rho[(g, x)], sys.rho[(h, sys.act(g, x))])
                if lhs != sys.rho[(G.mulv(g, h), x)]:
                    return Verdict.failed(law, ("cocycle", g, h, x))
    return Verdict.passed(law)


def apply_T(sys: ActionSystem, g: str, f: KFunction) -> KFunction:
    """x maps to rho(g,x) * f(v_g(x))."""
    K = sys.K
    return sys.space.function(
        {x: K.mulv(sys.rho[(g, x)], f(sys.act(g, x))) for x in sys.points}
    )


@dataclass(frozen=True, eq=False)
class Convolution(Functional):
    space: FunctionSpace
    outer: Functional
    inner: Functional
    sys: ActionSystem

    def value(self, f: KFunction) -> str:
        h = self.space.function(
            {g: self.inner.value(apply_T(self.sys, g, f)) for g in self.sys.G.elements}
        )
        return self.outer.value(h)

    def __str__(self) -> str:
        return f"({self.outer}) * ({self.inner})"


def convolve(nu: Functional, lam: Functional, sys: ActionSystem) -> Convolution:
    if tuple(sys.points) != tuple(sys.G.elements):
        raise PreconditionError("convolution requires the action on X = G itself")
    for part in (nu, lam):
        if part.space.points != sys.space.points:
            raise InputError("functional does not live on C(G,K)")
    return Convolution(sys.space, nu, lam, sys)


def dirac_unit(sys: ActionSystem) -> Dirac:
    return Dirac(sys.space, sys.G.unit)


# ---------------------------------------------------------------------------
# functional kinds and invariance


def check_kind(nu: Functional, kind: str, budget: int | None = None) -> Verdict:
    """add: plain additivity (needs commutative associative addition in K);
    join/meet: compatibility with guarded pointwise max/min."""
    space = nu.space
    K = space.K
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}")
    if kind == "add":
        if not {"comm-add", "assoc-add"} <= K.flags:
            raise PreconditionError("kind add needs commutative associative addition in K")
        for f, g in product(space.functions(), repeat=2):
            lhs = nu.value(space.add(f, g))
            rhs = K.addv(nu.value(f), nu.value(g))
            if lhs != rhs:
                return Verdict.failed("kind-add", (f, g, lhs, rhs))
        return Verdict.passed("kind-add")
    order = K.order
    law = f"kind-{kind}"
    for f, g in product(space.functions(), repeat=2):
        if space.comparable_pointwise(f, g) is not None:
            continue
        a, b = nu.value(f), nu.value(g)
        if not order.comparable(a, b):
            return Verdict.failed(law, (f, g, a, b), note="values incomparable")
        if kind == "join":
            lhs = nu.value(space.vee(f, g))
            rhs = b if order.leq(a, b) else a
        else:
            lhs = nu.value(space.wedge(f, g))
            rhs = a if order.leq(a, b) else b
        if lhs != rhs:
            return Verdict.failed(law, (f, g, lhs, rhs))
    return Verdict.passed(law)


def check_invariant(nu: Functional, sys: ActionSystem, budget: int | None = None) -> Verdict:
    """Invariance under the whole representation: the functional cannot
    tell a function from any of its translates."""
    for g in sys.G.elements:
        for f in sys.space.functions():
            if nu.value(apply_T(sys, g, f)) != nu.value(f):
                return Verdict.failed("invariant", (g, f, nu.value(apply_T(sys, g, f)), nu.value(f)))
    return Verdict.passed("invariant")


def plus_kind(kind: str, nu: Functional, lam: Functional) -> TableFunctional:
    """The kind's addition of two functionals, value by value."""
    space = nu.space
    order = space.K.order
    values = []
    for f in space.functions():
        a, b = nu.value(f), lam.value(f)
        if kind == "add":
            values.append(space.K.addv(a, b))
        else:
            if not order.comparable(a, b):
                raise IncomparableError(f"values {a!r}, {b!r} incomparable", a, b)
            if kind == "join":
                values.append(b if order.leq(a, b) else a)
            else:
                values.append(a if order.leq(a, b) else b)
    return TableFunctional(space, tuple(values))


# ---------------------------------------------------------------------------
# saturation, quasiring and ideal checks


@dataclass(eq=False)
class ConvAlgebra:
    kind: str
    sys: ActionSystem
    members: tuple
    saturated: bool
    rounds: int
    budget: int


def all_kind_functionals(sys: ActionSystem, kind: str) -> list[TableFunctional]:
    """Every functional on C(G,K) passing the kind check (the seed family)."""
    from .functionals import enumerate_functionals

    return [nu for nu in enumerate_functionals(sys.space) if check_kind(nu, kind)]


def saturate(seed, sys: ActionSystem, kind: str, budget: int = 4096) -> ConvAlgebra:
    """Close the seed family under the kind addition and convolution, up
    to extensional identity, until stable or out of budget."""
    members: dict[tuple, TableFunctional] = {}
    for nu in seed:
        tab = TableFunctional(sys.space, signature(nu))
        members[tab.table] = tab
    rounds = 0
    saturated = False
    while len(members) <= budget:
        rounds += 1
        current = list(members.values())
        fresh = {}
        for nu in current:
            for lam in current:
                for made in (plus_kind(kind, nu, lam), convolve(nu, lam, sys)):
                    sig = signature(made)
                    if sig not in members and sig not in fresh:
                        fresh[sig] = TableFunctional(sys.space, sig)
        if not fresh:
            saturated = True
            break
        members.update(fresh)
    return ConvAlgebra(kind, sys, tuple(members.values()), saturated, rounds, budget)


def check_quasiring(alg: ConvAlgebra, budget: int | None = None) -> AxiomReport:
    """Closure of both operations, the two distributive laws between the
    kind addition and convolution, and neutrality of the unit evaluation."""
    report = AxiomReport()
    sys = alg.sys
    kind = alg.kind
    members = alg.members
    sigs = {m.table for m in members}

    closure_add = Verdict.passed("closure-add")
    closure_conv = Verdict.passed("closure-conv")
    for nu, lam in product(members, repeat=2):
        if closure_add.holds and signature(plus_kind(kind, nu, lam)) not in sigs:
            closure_add = Verdict.failed("closure-add", (str(nu), str(lam)))
        if closure_conv.holds and signature(convolve(nu, lam, sys)) not in sigs:
            closure_conv = Verdict.failed("closure-conv", (str(nu), str(lam)))
        if not closure_add.holds and not closure_conv.holds:
            break
    if not alg.saturated:
        closure_add = Verdict.failed("closure-add", None, note="saturation budget exhausted")
    report.add(closure_add)
    report.add(closure_conv)

    ldist = Verdict.passed("conv-right-dist")
    rdist = Verdict.passed("conv-left-dist")
    for n1, n2, lam in product(members, repeat=3):
        if ldist.holds:
            lhs = signature(convolve(plus_kind(kind, n1, n2), lam, sys))
            rhs = signature(plus_kind(kind, convolve(n1, lam, sys), convolve(n2, lam, sys)))
            if lhs != rhs:
                ldist = Verdict.failed("conv-right-dist", (str(n1), str(n2), str(lam)))
        if rdist.holds:
            lhs = signature(convolve(lam, plus_kind(kind, n1, n2), sys))
            rhs = signature(plus_kind(kind, convolve(lam, n1, sys), convolve(lam, n2, sys)))
            if lhs != rhs:
                rdist = Verdict.failed("conv-left-dist", (str(n1), str(n2), str(lam)))
        if not ldist.holds and not rdist.holds:
            break
    report.add(ldist)
    report.add(rdist)

    unit = Verdict.passed("unit-neutral")
    delta = dirac_unit(sys)
    for nu in members:
        left = signature(convolve(nu, delta, sys))
        right = signature(convolve(delta, nu, sys))
        if left != signature(nu) or right != signature(nu):
            unit = Verdict.failed("unit-neutral", (str(nu),))
            break
    report.add(unit)
    return report


def _validate_regime(sys: ActionSystem, kind: str, homogeneous: bool) -> None:
    if sys.regime == "unit-cocycle":
        if any(v != sys.K.one for v in sys.rho.values()):
            raise PreconditionError("unit-cocycle regime declared but the cocycle is not constant one")
    elif sys.regime == "homogeneous":
        if not homogeneous:
            raise PreconditionError("homogeneous regime applies to homogeneous kinds only")
        if not {"comm-mul", "assoc-mul"} <= sys.K.flags:
            raise PreconditionError(
                "homogeneous regime needs commutative associative multiplication in K"
            )


def invariant_subfamily(alg: ConvAlgebra) -> list[TableFunctional]:
    return [nu for nu in alg.members if check_invariant(nu, alg.sys)]


def check_ideal(H, alg: ConvAlgebra, budget: int | None = None, homogeneous: bool = False) -> AxiomReport:
    """The three ideal inclusions for the invariant sub-family, where
    membership means passing the invariance and kind checks."""
    _validate_regime(alg.sys, alg.kind, homogeneous)
    report = AxiomReport()
    sys = alg.sys
    kind = alg.kind
    H = list(H)
    for lam in H:
        if not check_invariant(lam, sys):
            raise PreconditionError("H contains a non-invariant functional")

    def member_of_H(nu: Functional) -> bool:
        return bool(check_invariant(nu, sys)) and bool(check_kind(nu, kind))

    add_cl = Verdict.passed("ideal-add")
    for l1, l2 in product(H, repeat=2):
        if not member_of_H(plus_kind(kind, l1, l2)):
            add_cl = Verdict.failed("ideal-add", (str(l1), str(l2)))
            break
    report.add(add_cl)

    left = Verdict.passed("ideal-left")
    right = Verdict.passed("ideal-right")
    for nu in alg.members:
        for lam in H:
            if left.holds and not member_of_H(convolve(nu, lam, sys)):
                left = Verdict.failed("ideal-left", (str(nu), str(lam)))
            if right.holds and not member_of_H(convolve(lam, nu, sys)):
                right = Verdict.failed("ideal-right", (str(lam), str(nu)))
            if not left.holds and not right.holds:
                break
        if not left.holds and not right.holds:
            break
    report.add(left)
    report.add(right)
    return report


# ---------------------------------------------------------------------------
# support bounds for invariant functionals


@dataclass(frozen=True)
class SupportBounds:
    t_fixed: frozenset
    p_fixed: frozenset
    p_fixed_proper: frozenset
    support: frozenset
    support_degenerate: bool
    contained_in_t: bool
    contained_in_p: bool
    contained_in_p_proper: bool
    g_invariant: bool | None
    note: str = ""


def support_bounds(nu: Functional, sys: ActionSystem) -> SupportBounds:
    """Fixed points of the pull-back and push-forward set maps of the
    action, with containment checks for the functional's support.

    The unions over the full groupoid include the unit and therefore
    stabilize at the whole set; the proper variant unions over non-unit
    elements only, which is the bound with actual content for collapsing
    actions.  Degenerate supports (no supported subset at all) make the
    containment checks vacuous and are flagged.
    """
    if not check_invariant(nu, sys):
        raise PreconditionError("support bounds require an invariant functional")
    space = sys.space
    K = sys.K

    def t_map(A: frozenset) -> frozenset:
        out = set()
        for g in sys.G.elements:
            chi = space.indicator(A)
            moved = apply_T(sys, g, chi)
            out |= space.support(moved)
        return frozenset(out)

    def p_map(A: frozenset, proper: bool) -> frozenset:
        gs = [g for g in sys.G.elements if not (proper and g == sys.G.unit)]
        if not gs:
            return frozenset(A)
        return frozenset(sys.act(g, x) for g in gs for x in A)

    def fixed(step) -> frozenset:
        A = frozenset(space.points)
        while True:
            B = step(A)
            if B == A:
                return A
            A = B

    t_fixed = fixed(t_map)
    p_fixed = fixed(lambda A: p_map(A, proper=False))
    p_proper = fixed(lambda A: p_map(A, proper=True))

    rep = support_of(nu)
    if rep.degenerate:
        return SupportBounds(
            t_fixed, p_fixed, p_proper, rep.support, True, True, True, True, None, rep.note
        )
    supp = rep.support
    g_inv = None
    if not K.has_zero_divisors():
        moved = frozenset(sys.act(g, x) for g in sys.G.elements for x in supp)
        g_inv = moved == supp
    return SupportBounds(
        t_fixed,
        p_fixed,
        p_proper,
        supp,
        False,
        supp <= t_fixed,
        supp <= p_fixed,
        supp <= p_proper,
        g_inv,
    )
