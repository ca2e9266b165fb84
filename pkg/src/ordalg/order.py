"""Order-theoretic foundations: materialized order relations, axiom
checkers with witnesses, and finite sup/inf.

Relations are stored as explicit pair sets rather than comparison
callbacks so that every axiom check is an exhaustive scan and every
failure comes with a concrete witness tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .report import Verdict

Mode = str  # "directed" | "linear" | "well"


@dataclass(frozen=True)
class OrderRelation:
    """A binary relation `leq` over a finite carrier of identifiers."""

    carrier: tuple[str, ...]
    pairs: frozenset[tuple[str, str]]

    def __post_init__(self):
        seen = set(self.carrier)
        if len(seen) != len(self.carrier):
            raise InputError("carrier contains duplicate identifiers")
        for x, y in self.pairs:
            if x not in seen or y not in seen:
                raise InputError(f"relation mentions unknown identifier in pair ({x},{y})")

    @classmethod
    def chain(cls, elements) -> "OrderRelation":
        """Total order in the listed element order."""
        elements = tuple(elements)
        pairs = frozenset(
            (elements[i], elements[j])
            for i in range(len(elements))
            for j in range(i, len(elements))
        )
        return cls(elements, pairs)

    @classmethod
    def antichain(cls, elements) -> "OrderRelation":
        """Only the reflexive pairs."""
        elements = tuple(elements)
        return cls(elements, frozenset((x, x) for x in elements))

    @classmethod
    def from_covers(cls, elements, covers) -> "OrderRelation":
        """Reflexive-transitive closure of the given covering pairs."""
        elements = tuple(elements)
        leq = {(x, x) for x in elements}
        leq.update(covers)
        changed = True
        while changed:
            changed = False
            for x, y in list(leq):
                for y2, z in list(leq):
                    if y2 == y and (x, z) not in leq:
                        leq.add((x, z))
                        changed = True
        return cls(elements, frozenset(leq))

    @classmethod
    def from_predicate(cls, elements, pred) -> "OrderRelation":
        """Materialize `pred(x, y)` over all carrier pairs."""
        elements = tuple(elements)
        pairs = frozenset((x, y) for x in elements for y in elements if pred(x, y))
        return cls(elements, pairs)

    def leq(self, x: str, y: str) -> bool:
        return (x, y) in self.pairs

    def lt(self, x: str, y: str) -> bool:
        return x != y and (x, y) in self.pairs

    def comparable(self, x: str, y: str) -> bool:
        return (x, y) in self.pairs or (y, x) in self.pairs

    def upper_bounds(self, subset) -> list[str]:
        return [z for z in self.carrier if all(self.leq(x, z) for x in subset)]

    def lower_bounds(self, subset) -> list[str]:
        return [z for z in self.carrier if all(self.leq(z, x) for x in subset)]

    def restrict(self, subset) -> "OrderRelation":
        keep = tuple(x for x in self.carrier if x in set(subset))
        pairs = frozenset(p for p in self.pairs if p[0] in set(keep) and p[1] in set(keep))
        return OrderRelation(keep, pairs)


@dataclass(frozen=True)
class OrderedCarrier:
    """An order together with its distinguished minimal element (zero)."""

    order: OrderRelation
    zero: str

    def __post_init__(self):
        if self.zero not in self.order.carrier:
            raise InputError(f"zero element {self.zero!r} not in carrier")
        for x in self.order.carrier:
            if not self.order.leq(self.zero, x):
                raise InputError(f"zero element {self.zero!r} is not minimal: not leq {x!r}")


def check_order_axioms(order: OrderRelation, mode: Mode) -> Verdict:
    """Exhaustively verify the ordering axioms for the requested mode.

    directed: transitivity, reflexivity, and upper bounds for all pairs.
    linear:   directed axioms plus the strict-order axioms on `<`
              (which force antisymmetry).
    well:     linear plus a least element for every non-empty subset.

    Returns the first violated axiom with a minimal witness.
    """
    if mode not in ("directed", "linear", "well"):
        raise InputError(f"unknown order mode {mode!r}")
    if not order.carrier:
        raise InputError("carrier must be non-empty")
    law = f"order-{mode}"
    for x in order.carrier:  # D2
        if not order.leq(x, x):
            return Verdict.failed(law, ("D2", x))
    for x, y in order.pairs:  # D1
        for z in order.carrier:
            if order.leq(y, z) and not order.leq(x, z):
                return Verdict.failed(law, ("D1", x, y, z))
    if mode == "directed":
        for x in order.carrier:  # D3
            for y in order.carrier:
                if not order.upper_bounds((x, y)):
                    return Verdict.failed(law, ("D3", x, y))
        return Verdict.passed(law)
    # strict-order axioms; LO1 follows from D1 plus LO2 but is scanned anyway
    for x in order.carrier:
        for y in order.carrier:
            if order.lt(x, y) and order.lt(y, x):
                return Verdict.failed(law, ("LO2", x, y))
            if x != y and not order.comparable(x, y):
                return Verdict.failed(law, ("LO3", x, y))
    for x in order.carrier:
        for y in order.carrier:
            if not order.lt(x, y):
                continue
            for z in order.carrier:
                if order.lt(y, z) and not order.lt(x, z):
                    return Verdict.failed(law, ("LO1", x, y, z))
    if mode == "linear":
        return Verdict.passed(law)
    return _check_well(order, law)


def _check_well(order: OrderRelation, law: str) -> Verdict:
    # Finite carrier: scan subsets directly while that is cheap; a finite
    # linear antisymmetric order always passes, so larger carriers rely on
    # the equivalence with the linear checks already done.
    n = len(order.carrier)
    if n > 16:
        return Verdict.passed(law, note="WO via linearity (carrier > 16)")
    for size in range(1, n + 1):
        for subset in combinations(order.carrier, size):
            if not any(all(order.leq(m, x) for x in subset) for m in subset):
                return Verdict.failed(law, ("WO", subset))
    return Verdict.passed(law)


def maximal_chains(order: OrderRelation) -> list[tuple[str, ...]]:
    """All maximal chains (maximal pairwise-comparable subsets)."""
    chains: list[tuple[str, ...]] = []
    carrier = order.carrier

    def extend(chain: list[str], candidates: list[str]) -> None:
        extendable = [c for c in candidates if all(order.comparable(c, x) for x in chain)]
        if not extendable:
            if all(
                not all(order.comparable(e, x) for x in chain)
                for e in carrier
                if e not in chain
            ):
                chains.append(tuple(chain))
            return
        for i, c in enumerate(extendable):
            extend(chain + [c], extendable[i + 1 :])

    extend([], list(carrier))
    # deduplicate: extension order can reach the same maximal set twice
    uniq = sorted({tuple(sorted(ch)) for ch in chains})
    return [tuple(x for x in carrier if x in set(ch)) for ch in uniq]


def check_op_monotone(op: dict, order: OrderRelation, domain=None) -> Verdict:
    """Order-compatibility of a binary operation.

    Verifies op(a,b) <= op(c,d) for all quadruples with a <= c and b <= d
    drawn from a common maximal chain, which is exactly how ordered
    algebraic objects qualify the requirement.  `domain` restricts the
    quantified elements (the table must be total on domain pairs); values
    may lie anywhere in the carrier.
    """
    domain = tuple(domain) if domain is not None else order.carrier
    dset = set(domain)
    for a in domain:
        for b in domain:
            if (a, b) not in op:
                raise InputError(f"operation table missing pair ({a},{b})")
            if op[(a, b)] not in set(order.carrier):
                raise InputError(f"operation value {op[(a, b)]!r} outside carrier")
    for chain in maximal_chains(order):
        zs = [x for x in chain if x in dset]
        for a in zs:
            for c in zs:
                if not order.leq(a, c):
                    continue
                for b in zs:
                    for d in zs:
                        if not order.leq(b, d):
                            continue
                        if not order.leq(op[(a, b)], op[(c, d)]):
                            return Verdict.failed(
                                "op-monotone", (a, b, c, d, op[(a, b)], op[(c, d)])
                            )
    return Verdict.passed("op-monotone")


def sup_over(subset, order: OrderRelation) -> str | None:
    """Least upper bound inside the carrier, or None when there is none."""
    subset = list(subset)
    if not subset:
        raise InputError("sup of an empty subset")
    if not set(subset) <= set(order.carrier):
        raise InputError("subset not contained in carrier")
    ubs = order.upper_bounds(subset)
    least = [z for z in ubs if all(order.leq(z, w) for w in ubs)]
    return least[0] if least else None


def inf_over(subset, order: OrderRelation) -> str | None:
    """Greatest lower bound inside the carrier, or None."""
    subset = list(subset)
    if not subset:
        raise InputError("inf of an empty subset")
    if not set(subset) <= set(order.carrier):
        raise InputError("subset not contained in carrier")
    lbs = order.lower_bounds(subset)
    greatest = [z for z in lbs if all(order.leq(w, z) for w in lbs)]
    return greatest[0] if greatest else None
