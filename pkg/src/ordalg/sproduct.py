"""The shifted product construction over an integer index line.

Elements are finite-support tuples over copies of one component
structure; the binary operations re-index through a pair of shift maps
per operation and push the right operand through iterated embeddings,
which is what makes the product non-associative as soon as the phi shift
actually moves indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice, product

from .errors import CapacityError, IncomparableError, InputError, PreconditionError
from .structures import FinStruct, Homomorphism, check_homomorphism
from .report import Verdict

OPS = ("add", "mul")


@dataclass(frozen=True)
class SuppElement:
    """Finite-support element: stored entries are nonzero, absent means 0."""

    items: tuple[tuple[int, str], ...]

    def get(self, j: int, zero: str) -> str:
        for k, v in self.items:
            if k == j:
                return v
        return zero

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.items)

    def is_zero(self) -> bool:
        return not self.items

    def __str__(self) -> str:
        if not self.items:
            return "{}"
        return "{" + ", ".join(f"{k}: {v}" for k, v in self.items) + "}"


@dataclass(frozen=True, eq=False)
class IndexScheme:
    """Shift maps, embeddings and the active index window.

    Shifts are given per operation either as non-negative integers
    (psi(j) = j - s, phi(j) = j + r) or as explicit monotone tables over
    the window.  The embedding `embed` is a single one-step map applied
    (j - k) times for t^j_k; identity when None.
    """

    component: FinStruct
    window: range
    psi: dict = field(default_factory=lambda: {"add": 0, "mul": 0})
    phi: dict = field(default_factory=lambda: {"add": 0, "mul": 0})
    embed: dict | None = None

    def __post_init__(self):
        if len(self.window) == 0:
            raise InputError("empty index window")
        for op in OPS:
            if op not in self.psi or op not in self.phi:
                raise InputError(f"missing shift maps for operation {op!r}")
            self._validate_map(self.psi[op], op, down=True)
            self._validate_map(self.phi[op], op, down=False)
        if self.embed is not None:
            hom = Homomorphism(self.component, self.component, dict(self.embed))
            v = check_homomorphism(hom)
            if not v:
                raise InputError(f"embedding is not a homomorphism: {v.witness}")
            if len(set(self.embed.values())) != len(self.embed):
                raise InputError("embedding must be injective")
            order = self.component.order
            for a in self.component.elements:
                for b in self.component.elements:
                    if order.lt(a, b) and not order.lt(self.embed[a], self.embed[b]):
                        raise InputError(f"embedding not strictly monotone at ({a},{b})")

    def _validate_map(self, m, op, down: bool):
        if isinstance(m, int):
            if m < 0:
                raise InputError(f"{op} shift must be non-negative")
            return
        if not isinstance(m, dict):
            raise InputError("shift map must be an int shift or an explicit table")
        for j in self.window:
            if j not in m:
                raise InputError(f"{op} shift table missing index {j}")
        vals = [m[j] for j in self.window]
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise InputError(f"{op} shift table must be strictly monotone")
        if down:
            if any(m[j] > j for j in self.window):
                raise InputError(f"psi[{op}] must satisfy psi(j) <= j")
        else:
            if any(m[j] < j for j in self.window):
                raise InputError(f"phi[{op}] must satisfy j <= phi(j)")

    def psi_at(self, op: str, j: int) -> int:
        m = self.psi[op]
        return j - m if isinstance(m, int) else m[j]

    def phi_at(self, op: str, j: int) -> int:
        m = self.phi[op]
        return j + m if isinstance(m, int) else m[j]

    def phi_moves(self, op: str) -> bool:
        m = self.phi[op]
        if isinstance(m, int):
            return m > 0
        return any(m[j] > j for j in self.window)

    def embed_down(self, j: int, k: int, a: str) -> str:
        """t^j_k(a): push a from level j down to level k <= j."""
        if k > j:
            raise InputError("embeddings only go downward in index")
        if self.embed is None:
            return a
        for _ in range(j - k):
            a = self.embed[a]
        return a

    # -- element constructors ------------------------------------------------

    def element(self, mapping: dict) -> SuppElement:
        zero = self.component.zero
        elems = set(self.component.elements)
        items = []
        for j, v in sorted(mapping.items()):
            if j not in self.window:
                raise InputError(f"index {j} outside the active window")
            if v not in elems:
                raise InputError(f"unknown component element {v!r}")
            if v != zero:
                items.append((j, v))
        return SuppElement(tuple(items))

    def zero_element(self) -> SuppElement:
        return SuppElement(())

    def theta(self, x: str, horizon=None) -> SuppElement:
        """The diagonal embedding, truncated to a finite horizon."""
        horizon = self.window if horizon is None else horizon
        return self.element({j: x for j in horizon})

    def all_elements(self, indices=None):
        """Deterministic enumeration of every element supported on the
        given indices (default: the whole window)."""
        indices = tuple(self.window if indices is None else indices)
        for values in product(self.component.elements, repeat=len(indices)):
            yield self.element(dict(zip(indices, values)))


def s_mu(op: str, y: SuppElement, z: SuppElement, scheme: IndexScheme) -> SuppElement:
    """One product operation: the value at psi(j) combines y at j with the
    embedded z value read at phi(j).  Zero results are dropped, so the
    output is canonical."""
    if op not in OPS:
        raise InputError(f"unknown operation {op!r}")
    K = scheme.component
    zero = K.zero
    table = K.add if op == "add" else K.mul
    touched = set(y.support)
    for j in scheme.window:
        if z.get(scheme.phi_at(op, j), zero) != zero:
            touched.add(j)
    out = {}
    for j in sorted(touched):
        if j not in scheme.window:
            raise CapacityError(f"support index {j} outside the active window")
        target = scheme.psi_at(op, j)
        if target not in scheme.window:
            raise CapacityError(f"shifted index psi({j}) = {target} escapes the window")
        pj = scheme.phi_at(op, j)
        zv = z.get(pj, zero)
        value = table[(y.get(j, zero), scheme.embed_down(pj, j, zv))]
        if value != zero:
            out[target] = value
    return scheme.element(out)


def componentwise_leq(y: SuppElement, z: SuppElement, scheme: IndexScheme) -> bool:
    zero = scheme.component.zero
    order = scheme.component.order
    for j in sorted(set(y.support) | set(z.support)):
        if not order.leq(y.get(j, zero), z.get(j, zero)):
            return False
    return True


def lex_compare(y: SuppElement, z: SuppElement, scheme: IndexScheme) -> str:
    """Lexicographic comparison by the least differing index."""
    zero = scheme.component.zero
    order = scheme.component.order
    for j in sorted(set(y.support) | set(z.support)):
        a, b = y.get(j, zero), z.get(j, zero)
        if a == b:
            continue
        if order.lt(a, b):
            return "lt"
        if order.lt(b, a):
            return "gt"
        raise IncomparableError(f"component values {a!r}, {b!r} incomparable at index {j}", j, a, b)
    return "eq"


@dataclass(frozen=True)
class SearchResult:
    witness: tuple | None
    tested: int
    diff_index: int | None = None

    @property
    def found(self) -> bool:
        return self.witness is not None


def find_nonassoc_witness(op: str, scheme: IndexScheme, sample=None, budget: int = 1000) -> SearchResult:
    """Search for (a,b,c) where the two association orders differ.

    Requires the phi shift of the operation to actually move indices (the
    construction degenerates to the plain product otherwise) and at least
    two component elements, so that a difference can show up at all.
    """
    if not scheme.phi_moves(op):
        raise PreconditionError("phi must satisfy j < phi(j) for the non-associativity search")
    if len(scheme.component.elements) < 2:
        raise PreconditionError("components must have at least two elements")
    if sample is None:
        sub = scheme.window[: max(1, len(scheme.window) - 2 * _max_shift(scheme, op))]
        sample = list(islice(scheme.all_elements(sub), 64))
    else:
        sample = list(sample)
    tested = 0
    for a, b, c in product(sample, repeat=3):
        if tested >= budget:
            break
        tested += 1
        try:
            left = s_mu(op, s_mu(op, a, b, scheme), c, scheme)
            right = s_mu(op, a, s_mu(op, b, c, scheme), scheme)
        except CapacityError:
            continue
        if left != right:
            diff = _first_diff(left, right, scheme)
            return SearchResult((a, b, c, left, right), tested, diff)
    return SearchResult(None, tested)


def _max_shift(scheme: IndexScheme, op: str) -> int:
    m = scheme.phi[op]
    if isinstance(m, int):
        return m
    return max(m[j] - j for j in scheme.window)


def _first_diff(y: SuppElement, z: SuppElement, scheme: IndexScheme) -> int:
    zero = scheme.component.zero
    for j in sorted(set(y.support) | set(z.support)):
        if y.get(j, zero) != z.get(j, zero):
            return j
    raise InputError("elements do not differ")


def check_transfer_distributivity(scheme: IndexScheme, side: str, triples) -> Verdict:
    """Distributivity transfer: with identity shifts on add, each side
    that holds in the component holds for the product operations."""
    if any(scheme.psi_at("add", j) != j or scheme.phi_at("add", j) != j for j in scheme.window):
        raise PreconditionError("transfer requires identity shifts for add")
    law = f"transfer-{side}-dist"
    for a, b, c in triples:
        if side == "right":
            lhs = s_mu("mul", s_mu("add", b, c, scheme), a, scheme)
            rhs = s_mu("add", s_mu("mul", b, a, scheme), s_mu("mul", c, a, scheme), scheme)
        elif side == "left":
            lhs = s_mu("mul", a, s_mu("add", b, c, scheme), scheme)
            rhs = s_mu("add", s_mu("mul", a, b, scheme), s_mu("mul", a, c, scheme), scheme)
        else:
            raise InputError(f"unknown side {side!r}")
        if lhs != rhs:
            return Verdict.failed(law, (a, b, c, lhs, rhs))
    return Verdict.passed(law)
