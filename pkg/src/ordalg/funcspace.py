"""The space of K-valued maps on a finite point set.

A FunctionSpace fixes the point set, the coefficient structure K and an
optional monotone variant ("+" for non-decreasing, "-" for
non-increasing, which requires a linear point order).  Construction
verifies that suprema of all possible function images exist in K, so
sup-style functionals are total on the space.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import IncomparableError, InputError
from .order import OrderedCarrier, OrderRelation, inf_over, sup_over
from .structures import FinStruct


@dataclass(frozen=True)
class KFunction:
    """A total map from the point tuple to K element ids, stored aligned
    with the domain so functions hash and compare by value."""

    domain: tuple[str, ...]
    values: tuple[str, ...]

    def __post_init__(self):
        if len(self.domain) != len(self.values):
            raise InputError("function values must align with the domain")

    def __call__(self, x: str) -> str:
        try:
            return self.values[self.domain.index(x)]
        except ValueError:
            raise InputError(f"point {x!r} not in domain") from None

    def __str__(self) -> str:
        inner = ", ".join(f"{x}: {v}" for x, v in zip(self.domain, self.values))
        return "{" + inner + "}"


class FunctionSpace:
    def __init__(
        self,
        points,
        K: FinStruct,
        point_order: OrderRelation | None = None,
        variant: str | None = None,
        name: str = "",
    ):
        self.points = tuple(points)
        self.K = K
        self.point_order = point_order
        self.variant = variant
        self.name = name or f"C({','.join(self.points)};{K.name})"
        if not self.points:
            raise InputError("point set must be non-empty")
        if variant not in (None, "+", "-"):
            raise InputError(f"unknown variant {variant!r}")
        if variant is not None:
            if point_order is None:
                raise InputError("monotone variants need a linear point order")
            from .order import check_order_axioms

            if not check_order_axioms(point_order, "linear"):
                raise InputError("monotone variants need a linear point order")
        self._funcs: tuple[KFunction, ...] | None = None
        self._check_sup_condition()

    # -- construction-time guarantee that sups of images exist --------------

    def _check_sup_condition(self):
        order = self.K.order
        if self.variant is not None:
            # monotone images are chains; finite chains always have sups
            return
        size = min(len(self.points), len(self.K.elements))
        for k in range(1, size + 1):
            for subset in combinations(self.K.elements, k):
                if sup_over(subset, order) is None:
                    raise InputError(
                        f"K has no sup for image set {set(subset)}; the space is not admissible"
                    )

    # -- membership and enumeration -----------------------------------------

    def function(self, values) -> KFunction:
        if isinstance(values, dict):
            missing = [x for x in self.points if x not in values]
            if missing:
                raise InputError(f"function missing points {missing}")
            vals = tuple(values[x] for x in self.points)
        else:
            vals = tuple(values)
            if len(vals) != len(self.points):
                raise InputError("function values must align with the domain")
        eset = set(self.K.elements)
        for v in vals:
            if v not in eset:
                raise InputError(f"value {v!r} not in K")
        f = KFunction(self.points, vals)
        if self.variant is not None and not self.is_monotone(f, self.variant):
            raise InputError(f"function {f} is not monotone {self.variant}")
        return f

    def constant(self, c: str) -> KFunction:
        return self.function({x: c for x in self.points})

    def zero(self) -> KFunction:
        return self.constant(self.K.zero)

    def is_monotone(self, f: KFunction, variant: str) -> bool:
        if self.point_order is None:
            raise InputError("no point order declared")
        for x in self.points:
            for y in self.points:
                if self.point_order.leq(x, y):
                    a, b = f(x), f(y)
                    ok = self.K.leq(a, b) if variant == "+" else self.K.leq(b, a)
                    if not ok:
                        return False
        return True

    def functions(self) -> tuple[KFunction, ...]:
        """All member functions, in a fixed enumeration order."""
        if self._funcs is None:
            out = []
            for vals in product(self.K.elements, repeat=len(self.points)):
                f = KFunction(self.points, vals)
                if self.variant is None or self.is_monotone(f, self.variant):
                    out.append(f)
            self._funcs = tuple(out)
        return self._funcs

    def contains(self, f: KFunction) -> bool:
        if f.domain != self.points:
            return False
        if any(v not in set(self.K.elements) for v in f.values):
            return False
        return self.variant is None or self.is_monotone(f, self.variant)

    def _require(self, *fs: KFunction):
        for f in fs:
            if f.domain != self.points:
                raise InputError("domain mismatch")

    # -- pointwise algebra ----------------------------------------------------

    def pointwise(self, op: str, f: KFunction, g: KFunction) -> KFunction:
        self._require(f, g)
        table = self.K.add if op == "add" else self.K.mul
        return KFunction(self.points, tuple(table[(a, b)] for a, b in zip(f.values, g.values)))

    def add(self, f: KFunction, g: KFunction) -> KFunction:
        return self.pointwise("add", f, g)

    def mul(self, f: KFunction, g: KFunction) -> KFunction:
        return self.pointwise("mul", f, g)

    def odot(self, c: str, f: KFunction, side: str = "left") -> KFunction:
        """Add the constant c on the named side of every value."""
        self._require(f)
        if side == "left":
            return self.add(self.constant(c), f)
        if side == "right":
            return self.add(f, self.constant(c))
        raise InputError(f"unknown side {side!r}")

    def scale(self, b: str, f: KFunction, side: str = "left") -> KFunction:
        """Multiply by the constant b on the named side (homogeneity tests)."""
        if side == "left":
            return self.mul(self.constant(b), f)
        return self.mul(f, self.constant(b))

    def comparable_pointwise(self, f: KFunction, g: KFunction) -> str | None:
        """None when every point has comparable values, else the first
        incomparable point."""
        self._require(f, g)
        for x, a, b in zip(self.points, f.values, g.values):
            if not self.K.order.comparable(a, b):
                return x
        return None

    def vee(self, f: KFunction, g: KFunction) -> KFunction:
        """Pointwise max; refuses when some point has incomparable values."""
        bad = self.comparable_pointwise(f, g)
        if bad is not None:
            raise IncomparableError(f"values incomparable at point {bad!r}", bad)
        vals = tuple(
            b if self.K.leq(a, b) else a for a, b in zip(f.values, g.values)
        )
        return KFunction(self.points, vals)

    def wedge(self, f: KFunction, g: KFunction) -> KFunction:
        """Pointwise min under the same comparability guard."""
        bad = self.comparable_pointwise(f, g)
        if bad is not None:
            raise IncomparableError(f"values incomparable at point {bad!r}", bad)
        vals = tuple(
            a if self.K.leq(a, b) else b for a, b in zip(f.values, g.values)
        )
        return KFunction(self.points, vals)

    def leq(self, f: KFunction, g: KFunction) -> bool:
        self._require(f, g)
        return all(self.K.leq(a, b) for a, b in zip(f.values, g.values))

    def sup_value(self, f: KFunction, subset=None) -> str | None:
        pts = self.points if subset is None else tuple(subset)
        return sup_over({f(x) for x in pts}, self.K.order)

    def inf_value(self, f: KFunction, subset=None) -> str | None:
        pts = self.points if subset is None else tuple(subset)
        return inf_over({f(x) for x in pts}, self.K.order)

    # -- supports ---------------------------------------------------------------

    def support(self, f: KFunction) -> frozenset:
        self._require(f)
        return frozenset(x for x, v in zip(self.points, f.values) if v != self.K.zero)

    def in_support_ideal(self, f: KFunction, E) -> bool:
        E = frozenset(E)
        if not E <= set(self.points):
            raise InputError("E is not a subset of the point set")
        return self.support(f) <= E

    def extend_by_zero(self, f: KFunction) -> KFunction:
        """Embed a function on a sub-point-set into this space with zeros."""
        sub = set(f.domain)
        if not sub <= set(self.points):
            raise InputError("sub-domain is not contained in the point set")
        vals = tuple(f(x) if x in sub else self.K.zero for x in self.points)
        return KFunction(self.points, vals)

    def indicator(self, E) -> KFunction:
        E = set(E)
        vals = tuple(self.K.one if x in E else self.K.zero for x in self.points)
        return KFunction(self.points, vals)

    # -- the induced finite structure ------------------------------------------

    def as_finstruct(self, name: str | None = None) -> FinStruct:
        """The whole space as a table structure, for running law checkers.

        Only usable when the member set is closed under pointwise add and
        mul, which holds for the full space and for monotone variants.
        """
        members = list(self.functions())
        ids = {f: f"f{str(f.values).replace(' ', '')}" for f in members}
        pairs = set()
        for f in members:
            for g in members:
                if self.leq(f, g):
                    pairs.add((ids[f], ids[g]))
        zero = ids[self.zero()]
        elems = tuple(ids[f] for f in members)
        order = OrderRelation(elems, frozenset(pairs))
        add = {}
        mul = {}
        for f in members:
            for g in members:
                s = self.add(f, g)
                p = self.mul(f, g)
                if s not in ids or p not in ids:
                    raise InputError("space is not closed under pointwise operations")
                add[(ids[f], ids[g])] = ids[s]
                mul[(ids[f], ids[g])] = ids[p]
        flags = frozenset(self.K.flags - {"quasi-solvable"})
        return FinStruct(
            name or self.name,
            OrderedCarrier(order, zero),
            add,
            mul,
            zero,
            ids[self.constant(self.K.one)],
            flags,
        )
