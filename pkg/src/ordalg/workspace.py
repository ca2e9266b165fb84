"""The self-contained workspace document format.

A document is a sequence of sections, each opened by a `[kind name]`
header and followed by `key = value` lines; `#` starts a comment.  The
parser validates everything it builds (tables are total, flags re-verify,
cross-references resolve) and reports failures with line numbers.

Section kinds: structure, space, function, functional, action, scheme,
suite.  See docs/demo.workspace for a complete example.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .convolution import ActionSystem, Groupoid, check_action
from .errors import InputError
from .funcspace import FunctionSpace, KFunction
from .functionals import Dirac, Functional, InfOver, SupOver, weighted_combo
from .order import OrderedCarrier, OrderRelation
from .sproduct import IndexScheme
from .structures import (
    FinStruct,
    boolean_semiring,
    maxplus_chain,
    right_dist_only,
    trivial_structure,
)


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        at = f"line {line}: " if line is not None else ""
        super().__init__(f"{at}{message}")
        self.line = line


@dataclass
class Section:
    kind: str
    name: str
    line: int
    entries: list  # (key, value, line)

    def get(self, key: str, default=None) -> str | None:
        for k, v, _ in self.entries:
            if k == key:
                return v
        return default

    def require(self, key: str) -> str:
        v = self.get(key)
        if v is None:
            raise ParseError(f"section [{self.kind} {self.name}] is missing key {key!r}", self.line)
        return v

    def line_of(self, key: str) -> int:
        for k, _, ln in self.entries:
            if k == key:
                return ln
        return self.line

    def rows(self, prefix: str) -> list:
        out = []
        for k, v, ln in self.entries:
            if k.startswith(prefix + "."):
                out.append((k[len(prefix) + 1 :], v, ln))
        return out


@dataclass
class Workspace:
    structures: dict = field(default_factory=dict)
    spaces: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    functionals: dict = field(default_factory=dict)
    actions: dict = field(default_factory=dict)
    schemes: dict = field(default_factory=dict)
    suite_defaults: dict = field(default_factory=dict)
    space_of_functional: dict = field(default_factory=dict)
    space_of_function: dict = field(default_factory=dict)
    kinds: dict = field(default_factory=dict)


def split_sections(text: str) -> list[Section]:
    sections: list[Section] = []
    current: Section | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError("unterminated section header", lineno)
            head = line[1:-1].split()
            if len(head) != 2:
                raise ParseError("section header must be [kind name]", lineno)
            current = Section(head[0], head[1], lineno, [])
            sections.append(current)
            continue
        if current is None:
            raise ParseError("content before any section header", lineno)
        if "=" not in line:
            raise ParseError("expected `key = value`", lineno)
        key, value = line.split("=", 1)
        current.entries.append((key.strip(), value.strip(), lineno))
    return sections


def parse(text: str) -> Workspace:
    ws = Workspace()
    sections = split_sections(text)
    order = {"structure": 0, "space": 1, "scheme": 2, "function": 3, "functional": 4, "action": 5, "suite": 6}
    for sec in sorted(sections, key=lambda s: (order.get(s.kind, 99),)):
        try:
            _build(ws, sec)
        except ParseError:
            raise
        except InputError as exc:
            raise ParseError(f"[{sec.kind} {sec.name}]: {exc}", sec.line) from exc
    return ws


def _build(ws: Workspace, sec: Section) -> None:
    if sec.kind == "structure":
        ws.structures[sec.name] = _build_structure(sec)
    elif sec.kind == "space":
        ws.spaces[sec.name] = _build_space(ws, sec)
    elif sec.kind == "function":
        space_name = sec.require("space")
        space = _lookup(ws.spaces, space_name, sec, "space")
        ws.functions[sec.name] = _build_function(space, sec)
        ws.space_of_function[sec.name] = space_name
    elif sec.kind == "functional":
        space_name = sec.require("space")
        space = _lookup(ws.spaces, space_name, sec, "space")
        ws.functionals[sec.name] = _build_functional(ws, space, sec)
        ws.space_of_functional[sec.name] = space_name
    elif sec.kind == "action":
        ws.actions[sec.name] = _build_action(ws, sec)
        ws.kinds[sec.name] = sec.get("kind", "join")
    elif sec.kind == "scheme":
        ws.schemes[sec.name] = _build_scheme(ws, sec)
    elif sec.kind == "suite":
        runs = sec.get("run", "").split()
        ws.suite_defaults = {
            "run": runs or ["all"],
            "budget": int(sec.get("budget", "20000")),
            "seed": int(sec.get("seed", "0")),
        }
    else:
        raise ParseError(f"unknown section kind {sec.kind!r}", sec.line)


def _lookup(table: dict, name: str, sec: Section, what: str):
    if name not in table:
        raise ParseError(f"[{sec.kind} {sec.name}] references unknown {what} {name!r}", sec.line)
    return table[name]


_BUILTINS = {
    "boolean": lambda arg, name: boolean_semiring(name),
    "max-plus-chain": lambda arg, name: maxplus_chain(int(arg), name),
    "right-dist": lambda arg, name: right_dist_only(name),
    "trivial": lambda arg, name: trivial_structure(name),
}


def _build_structure(sec: Section) -> FinStruct:
    builtin = sec.get("builtin")
    if builtin is not None:
        parts = builtin.split()
        kind, arg = parts[0], (parts[1] if len(parts) > 1 else "")
        if kind not in _BUILTINS:
            raise ParseError(f"unknown builtin structure {kind!r}", sec.line_of("builtin"))
        return _BUILTINS[kind](arg, sec.name)
    elements = tuple(sec.require("elements").split())
    order_spec = sec.require("order")
    if order_spec == "chain":
        order = OrderRelation.chain(elements)
    else:
        covers = []
        for token in order_spec.split():
            if "<=" not in token:
                raise ParseError(f"order pair {token!r} must look like a<=b", sec.line_of("order"))
            a, b = token.split("<=", 1)
            covers.append((a, b))
        order = OrderRelation.from_covers(elements, covers)
    zero = sec.require("zero")
    one = sec.require("one")
    tables = {}
    for label in ("add", "mul"):
        table = {}
        for row_key, value, ln in sec.rows(label):
            if not row_key.startswith("row."):
                continue
            a = row_key[4:]
            values = value.split()
            if len(values) != len(elements):
                raise ParseError(
                    f"{label} row for {a!r} has {len(values)} entries, expected {len(elements)}", ln
                )
            for b, res in zip(elements, values):
                table[(a, b)] = res
        tables[label] = table
    flags = frozenset(sec.get("flags", "").split())
    carrier = OrderedCarrier(order, zero)
    return FinStruct(sec.name, carrier, tables["add"], tables["mul"], zero, one, flags)


def _build_space(ws: Workspace, sec: Section) -> FunctionSpace:
    K = _lookup(ws.structures, sec.require("structure"), sec, "structure")
    points = tuple(sec.require("points").split())
    variant = sec.get("variant")
    point_order = None
    if sec.get("point-order") == "chain" or variant is not None:
        point_order = OrderRelation.chain(points)
    return FunctionSpace(points, K, point_order, variant, name=sec.name)


def _build_function(space: FunctionSpace, sec: Section) -> KFunction:
    values = {}
    for token in sec.require("values").split():
        if ":" not in token:
            raise ParseError(f"function value {token!r} must look like point:value", sec.line_of("values"))
        x, v = token.split(":", 1)
        values[x] = v
    return space.function(values)


def _build_functional(ws: Workspace, space: FunctionSpace, sec: Section) -> Functional:
    kind = sec.require("kind")
    if kind == "dirac":
        return Dirac(space, sec.require("point"))
    if kind == "sup_over":
        return SupOver(space, frozenset(sec.require("set").split()))
    if kind == "inf_over":
        return InfOver(space, frozenset(sec.require("set").split()))
    if kind == "combo":
        side = sec.require("side")
        coeffs = sec.require("coeffs").split()
        parts = [
            _lookup(ws.functionals, name, sec, "functional") for name in sec.require("parts").split()
        ]
        return weighted_combo(side, coeffs, parts)
    raise ParseError(f"unknown functional kind {kind!r}", sec.line_of("kind"))


def _build_action(ws: Workspace, sec: Section) -> ActionSystem:
    K = _lookup(ws.structures, sec.require("structure"), sec, "structure")
    gelems = tuple(sec.require("groupoid-elements").split())
    table = {}
    for g, value, ln in sec.rows("groupoid"):
        if not g.startswith("row."):
            continue
        a = g[4:]
        values = value.split()
        if len(values) != len(gelems):
            raise ParseError(f"groupoid row {a!r} has wrong arity", ln)
        for b, res in zip(gelems, values):
            table[(a, b)] = res
    G = Groupoid(sec.name + ".G", gelems, table, sec.require("unit"))
    points = tuple(sec.require("points").split())
    v = {}
    rho = {}
    for key, value, ln in sec.entries:
        if key.startswith("act."):
            g = key[4:]
            images = value.split()
            if len(images) != len(points):
                raise ParseError(f"action row for {g!r} has wrong arity", ln)
            v[g] = dict(zip(points, images))
        if key.startswith("rho."):
            g = key[4:]
            values = value.split()
            if len(values) != len(points):
                raise ParseError(f"cocycle row for {g!r} has wrong arity", ln)
            for x, val in zip(points, values):
                rho[(g, x)] = val
    L = frozenset(sec.require("L").split())
    regime = sec.get("regime", "unit-cocycle")
    sys = ActionSystem(G, K, points, v, L, rho, regime)
    verdict = check_action(sys)
    if not verdict:
        raise ParseError(
            f"[action {sec.name}] fails the action laws at {verdict.witness}", sec.line
        )
    return sys


def _build_scheme(ws: Workspace, sec: Section) -> IndexScheme:
    K = _lookup(ws.structures, sec.require("structure"), sec, "structure")
    lo, hi = sec.require("window").split()
    psi = {}
    phi = {}
    for op in ("add", "mul"):
        psi[op] = int(sec.get(f"{op}.psi", "0"))
        phi[op] = int(sec.get(f"{op}.phi", "0"))
    embed = None
    if sec.get("embed") is not None:
        embed = {}
        for token in sec.require("embed").split():
            a, b = token.split(":", 1)
            embed[a] = b
    return IndexScheme(K, range(int(lo), int(hi)), psi, phi, embed)
