"""Finite semirings, quasirings and groupoids given by operation tables.

A FinStruct owns two total operation tables over an ordered carrier,
validates the neutral/absorption laws at construction and re-verifies
every declared law flag, so a constructed structure is trustworthy.
Law checkers are exhaustive and return the first violating tuple.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import CapacityError, InputError
from .order import OrderedCarrier, OrderRelation
from .report import Verdict

Table = dict  # (str, str) -> str

LAWS = (
    "assoc-add",
    "assoc-mul",
    "comm-add",
    "comm-mul",
    "left-dist",
    "right-dist",
    "neutral",
    "absorb",
    "quasi-solvable",
)

IDEAL_CAP = 16


@dataclass(frozen=True, eq=False)
class FinStruct:
    """A finite double-operation structure (semiring / quasiring / worse).

    `flags` declare which optional laws the structure claims; each one is
    re-checked at construction.  Identity semantics: two FinStructs are
    the same structure only if they are the same object.
    """

    name: str
    carrier: OrderedCarrier
    add: Table
    mul: Table
    zero: str
    one: str
    flags: frozenset = frozenset()

    def __post_init__(self):
        elems = self.elements
        eset = set(elems)
        for label, table in (("add", self.add), ("mul", self.mul)):
            for a in elems:
                for b in elems:
                    if (a, b) not in table:
                        raise InputError(f"{self.name}: {label} table missing ({a},{b})")
                    if table[(a, b)] not in eset:
                        raise InputError(
                            f"{self.name}: {label}({a},{b}) = {table[(a, b)]!r} outside carrier"
                        )
        if self.zero != self.carrier.zero:
            raise InputError(f"{self.name}: zero {self.zero!r} differs from order minimum")
        if self.one not in eset:
            raise InputError(f"{self.name}: one {self.one!r} not in carrier")
        v = check_law(self, "neutral")
        if not v:
            raise InputError(f"{self.name}: neutral law fails at {v.witness}")
        v = check_law(self, "absorb")
        if not v:
            raise InputError(f"{self.name}: absorption fails at {v.witness}")
        for flag in self.flags:
            if flag not in LAWS:
                raise InputError(f"{self.name}: unknown law flag {flag!r}")
            v = check_law(self, flag)
            if not v:
                raise InputError(f"{self.name}: declared flag {flag} fails at {v.witness}")

    @property
    def elements(self) -> tuple[str, ...]:
        return self.carrier.order.carrier

    @property
    def order(self) -> OrderRelation:
        return self.carrier.order

    def addv(self, a: str, b: str) -> str:
        return self.add[(a, b)]

    def mulv(self, a: str, b: str) -> str:
        return self.mul[(a, b)]

    def leq(self, a: str, b: str) -> bool:
        return self.order.leq(a, b)

    def is_nontrivial(self) -> bool:
        """Contains an element that is neutral for no operation."""
        return any(x not in (self.zero, self.one) for x in self.elements)

    def has_zero_divisors(self) -> bool:
        return any(
            self.mulv(a, b) == self.zero
            for a in self.elements
            for b in self.elements
            if a != self.zero and b != self.zero
        )


def check_law(s: FinStruct, law: str) -> Verdict:
    """Exhaustive check of one law over all element pairs/triples."""
    E = s.elements
    if law == "assoc-add" or law == "assoc-mul":
        op = s.add if law == "assoc-add" else s.mul
        for a, b, c in product(E, repeat=3):
            if op[(op[(a, b)], c)] != op[(a, op[(b, c)])]:
                return Verdict.failed(law, (a, b, c, op[(op[(a, b)], c)], op[(a, op[(b, c)])]))
        return Verdict.passed(law)
    if law == "comm-add" or law == "comm-mul":
        op = s.add if law == "comm-add" else s.mul
        for a, b in product(E, repeat=2):
            if op[(a, b)] != op[(b, a)]:
                return Verdict.failed(law, (a, b, op[(a, b)], op[(b, a)]))
        return Verdict.passed(law)
    if law == "left-dist":
        for a, b, c in product(E, repeat=3):
            lhs = s.mulv(a, s.addv(b, c))
            rhs = s.addv(s.mulv(a, b), s.mulv(a, c))
            if lhs != rhs:
                return Verdict.failed(law, (a, b, c, lhs, rhs))
        return Verdict.passed(law)
    if law == "right-dist":
        for a, b, c in product(E, repeat=3):
            lhs = s.mulv(s.addv(b, c), a)
            rhs = s.addv(s.mulv(b, a), s.mulv(c, a))
            if lhs != rhs:
                return Verdict.failed(law, (a, b, c, lhs, rhs))
        return Verdict.passed(law)
    if law == "neutral":
        for a in E:
            if s.addv(a, s.zero) != a or s.addv(s.zero, a) != a:
                return Verdict.failed(law, ("add-neutral", a))
        if len(E) > 1:
            for a in E:
                if a == s.zero:
                    continue
                if s.mulv(a, s.one) != a or s.mulv(s.one, a) != a:
                    return Verdict.failed(law, ("mul-neutral", a))
        return Verdict.passed(law)
    if law == "absorb":
        for a in E:
            if s.mulv(a, s.zero) != s.zero or s.mulv(s.zero, a) != s.zero:
                return Verdict.failed(law, ("absorb", a))
        return Verdict.passed(law)
    if law == "quasi-solvable":
        # ax = b and xa = b solvable on the carrier minus zero: the row and
        # column maps of the mul table must be surjective there.
        nz = [x for x in E if x != s.zero]
        for a in nz:
            row = {s.mulv(a, x) for x in nz}
            col = {s.mulv(x, a) for x in nz}
            for b in nz:
                if b not in row:
                    return Verdict.failed(law, ("row", a, b))
                if b not in col:
                    return Verdict.failed(law, ("col", a, b))
        return Verdict.passed(law)
    raise InputError(f"unknown law {law!r}")


def enumerate_ideals(s: FinStruct) -> list[frozenset]:
    """All two-sided ideals: add-closed subsets containing zero with
    AK and KA inside A.  Exponential scan, guarded by carrier size."""
    E = s.elements
    if len(E) > IDEAL_CAP:
        raise CapacityError(f"ideal enumeration needs carrier <= {IDEAL_CAP}, got {len(E)}")
    rest = [x for x in E if x != s.zero]
    found = []
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            A = frozenset((s.zero,) + extra)
            if all(s.addv(a, b) in A for a in A for b in A) and all(
                s.mulv(a, k) in A and s.mulv(k, a) in A for a in A for k in E
            ):
                found.append(A)
    return found


def is_simple(s: FinStruct) -> bool:
    if len(s.elements) == 1:
        return False
    return len(enumerate_ideals(s)) == 2


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: FinStruct
    target: FinStruct
    mapping: dict

    def __post_init__(self):
        for a in self.source.elements:
            if a not in self.mapping:
                raise InputError(f"homomorphism map missing element {a!r}")
            if self.mapping[a] not in set(self.target.elements):
                raise InputError(f"image {self.mapping[a]!r} not in target carrier")

    def __call__(self, a: str) -> str:
        return self.mapping[a]


def check_homomorphism(h: Homomorphism) -> Verdict:
    """Order-preserving algebraic homomorphism check.

    Unit preservation is waived when the source is the trivial one-point
    structure, whose single element is both zero and one.
    """
    s, t, m = h.source, h.target, h.mapping
    law = "homomorphism"
    if m[s.zero] != t.zero:
        return Verdict.failed(law, ("zero", s.zero, m[s.zero]))
    if len(s.elements) > 1 and m[s.one] != t.one:
        return Verdict.failed(law, ("one", s.one, m[s.one]))
    for a in s.elements:
        for b in s.elements:
            if m[s.addv(a, b)] != t.addv(m[a], m[b]):
                return Verdict.failed(law, ("add", a, b))
            if m[s.mulv(a, b)] != t.mulv(m[a], m[b]):
                return Verdict.failed(law, ("mul", a, b))
            if s.leq(a, b) and not t.leq(m[a], m[b]):
                return Verdict.failed(law, ("order", a, b))
    return Verdict.passed(law)


def kernel(h: Homomorphism) -> frozenset:
    return frozenset(a for a in h.source.elements if h(a) == h.target.zero)


def image(h: Homomorphism) -> frozenset:
    return frozenset(h(a) for a in h.source.elements)


def check_exact_chain(chain) -> Verdict:
    """Exactness of a composable chain: image equals kernel at every
    interior junction.  A single homomorphism is vacuously exact."""
    chain = list(chain)
    if not chain:
        raise InputError("empty chain")
    for i in range(len(chain) - 1):
        if chain[i].target is not chain[i + 1].source:
            raise InputError(f"chain not composable at position {i}")
    for i in range(len(chain) - 1):
        im = image(chain[i])
        ker = kernel(chain[i + 1])
        if im != ker:
            return Verdict.failed("exact-chain", (i, im, ker))
    return Verdict.passed("exact-chain")


# ---------------------------------------------------------------------------
# stock structures


def _struct(name, elems, addf, mulf, zero, one, flags) -> FinStruct:
    add = {(a, b): addf(a, b) for a in elems for b in elems}
    mul = {(a, b): mulf(a, b) for a in elems for b in elems}
    carrier = OrderedCarrier(OrderRelation.chain(elems), elems[0])
    return FinStruct(name, carrier, add, mul, zero, one, frozenset(flags))


def boolean_semiring(name: str = "bool") -> FinStruct:
    """{0,1} with add = or, mul = and."""
    elems = ("0", "1")
    return _struct(
        name,
        elems,
        lambda a, b: "1" if "1" in (a, b) else "0",
        lambda a, b: "1" if a == b == "1" else "0",
        "0",
        "1",
        ("assoc-add", "assoc-mul", "comm-add", "comm-mul", "left-dist", "right-dist"),
    )


def maxplus_chain(n: int, name: str | None = None) -> FinStruct:
    """Saturating max-plus chain with an absorbing bottom.

    Element "0" is the bottom (add-neutral and mul-absorbing); element
    "k" for k >= 1 stands for the tropical value k-1, so "1" is the
    multiplicative unit and i*j saturates at the top of the chain.
    """
    if n < 2:
        raise InputError("maxplus chain needs at least 2 elements")
    elems = tuple(str(i) for i in range(n))

    def addf(a, b):
        return str(max(int(a), int(b)))

    def mulf(a, b):
        i, j = int(a), int(b)
        if i == 0 or j == 0:
            return "0"
        return str(min(i + j - 1, n - 1))

    return _struct(
        name or f"maxplus{n}",
        elems,
        addf,
        mulf,
        "0",
        "1",
        ("assoc-add", "assoc-mul", "comm-add", "comm-mul", "left-dist", "right-dist"),
    )


def trivial_structure(name: str = "trivial") -> FinStruct:
    """The one-point structure {0}; zero and one coincide."""
    elems = ("0",)
    return _struct(name, elems, lambda a, b: "0", lambda a, b: "0", "0", "0", ())


def right_dist_only(name: str = "rdist") -> FinStruct:
    """A four-element structure that is right- but not left-distributive.

    add is max on the chain 0 < 1 < 2 < 3; mul has 0 absorbing, 1 neutral,
    and projects onto the second factor on the top part (a*b = b for
    a,b >= 2).  Every column of the mul table is monotone, so (b+c)a =
    ba+ca holds, while row 3 is not (3*2 = 2 < 3 = 3*1), which breaks
    a(b+c) = ab+ac at a=3, b=1, c=2.  This is the only such table with
    this chain, unit and addition.
    """
    elems = ("0", "1", "2", "3")
    mul = {}
    for a in elems:
        for b in elems:
            if a == "0" or b == "0":
                mul[(a, b)] = "0"
            elif a == "1":
                mul[(a, b)] = b
            elif b == "1":
                mul[(a, b)] = a
            else:
                mul[(a, b)] = b
    add = {(a, b): str(max(int(a), int(b))) for a in elems for b in elems}
    carrier = OrderedCarrier(OrderRelation.chain(elems), "0")
    return FinStruct(
        name, carrier, add, mul, "0", "1", frozenset(("assoc-add", "comm-add", "right-dist"))
    )


def direct_product(s1: FinStruct, s2: FinStruct, name: str | None = None) -> FinStruct:
    """Componentwise product structure; element ids are "a,b" pairs."""

    def pid(a, b):
        return f"{a},{b}"

    elems = tuple(pid(a, b) for a in s1.elements for b in s2.elements)
    split = {pid(a, b): (a, b) for a in s1.elements for b in s2.elements}
    pairs = set()
    for x in elems:
        for y in elems:
            (a1, b1), (a2, b2) = split[x], split[y]
            if s1.leq(a1, a2) and s2.leq(b1, b2):
                pairs.add((x, y))
    order = OrderRelation(elems, frozenset(pairs))
    zero = pid(s1.zero, s2.zero)
    add = {}
    mul = {}
    for x in elems:
        for y in elems:
            (a1, b1), (a2, b2) = split[x], split[y]
            add[(x, y)] = pid(s1.addv(a1, a2), s2.addv(b1, b2))
            mul[(x, y)] = pid(s1.mulv(a1, a2), s2.mulv(b1, b2))
    flags = frozenset((s1.flags & s2.flags) - {"quasi-solvable"})
    return FinStruct(
        name or f"{s1.name}x{s2.name}",
        OrderedCarrier(order, zero),
        add,
        mul,
        zero,
        pid(s1.one, s2.one),
        flags,
    )
