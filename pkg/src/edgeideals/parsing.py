"""Input parsing: edge-list hypergraphs and ideal expressions.

Two formats, auto-detected by the first non-blank character: a leading ``(``
means an ideal expression, anything else is an edge list.  Inline strings may
use ``/`` in place of newlines.  Variable tokens of the shape ``x<k>`` map to
1-based indices; any other identifiers are numbered in order of first
appearance and the resulting naming map rides along with the parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .hypergraphs import Hypergraph
from .monomials import Monomial, MonomialIdeal

FORMAT_IDEAL = "ideal-expr"
FORMAT_EDGES = "edge-list"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INDEXED_RE = re.compile(r"^x([1-9][0-9]*)$")


@dataclass
class ParsedInput:
    """A parsed ideal or hypergraph plus the variable naming map."""

    format: str
    ideal: MonomialIdeal | None
    hypergraph: Hypergraph | None
    names: tuple[str, ...]


class _Names:
    """Accumulates variable tokens and resolves them to indices at the end."""

    def __init__(self) -> None:
        self.order: list[str] = []
        self._seen: set[str] = set()

    def add(self, token: str) -> None:
        if token not in self._seen:
            self._seen.add(token)
            self.order.append(token)

    def resolve(self) -> tuple[dict[str, int], tuple[str, ...]]:
        if self.order and all(_INDEXED_RE.match(t) for t in self.order):
            dim = max(int(_INDEXED_RE.match(t).group(1)) for t in self.order)
            names = tuple(f"x{i + 1}" for i in range(dim))
            return {t: int(t[1:]) - 1 for t in self.order}, names
        return {t: i for i, t in enumerate(self.order)}, tuple(self.order)


def detect_format(text: str) -> str:
    stripped = text.lstrip()
    return FORMAT_IDEAL if stripped.startswith("(") else FORMAT_EDGES


def _logical_lines(text: str) -> list[tuple[int, str]]:
    # '/' separates edges in inline strings; keep 1-based line numbers
    out = []
    for lineno, raw in enumerate(text.replace("/", "\n").split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_edge_list(text: str) -> ParsedInput:
    """One edge per line (or per ``/``), whitespace-separated vertex tokens."""
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("no edges", 1, 1)
    names = _Names()
    raw_edges: list[tuple[int, list[str]]] = []
    for lineno, line in lines:
        tokens = line.split()
        for tok in tokens:
            if not _NAME_RE.fullmatch(tok):
                col = line.index(tok) + 1
                raise ParseError(f"bad vertex token {tok!r}", lineno, col)
            names.add(tok)
        if len(set(tokens)) != len(tokens):
            dup = next(t for t in tokens if tokens.count(t) > 1)
            raise ParseError(f"duplicate vertex {dup!r} in edge", lineno, line.index(dup) + 1)
        raw_edges.append((lineno, tokens))
    index, ordered = names.resolve()
    dim = len(ordered)
    h = Hypergraph.of(dim, ([index[t] for t in toks] for _, toks in raw_edges))
    return ParsedInput(FORMAT_EDGES, None, h, ordered)


class _ExprScanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _line_col(self) -> tuple[int, int]:
        consumed = self.text[: self.pos]
        line = consumed.count("\n") + 1
        col = self.pos - (consumed.rfind("\n") + 1) + 1
        return line, col

    def error(self, message: str) -> ParseError:
        line, col = self._line_col()
        return ParseError(message, line, col)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def take_name(self) -> str:
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            raise self.error("expected a variable name")
        self.pos = m.end()
        return m.group()

    def take_int(self) -> int:
        m = re.compile(r"[0-9]+").match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())


def parse_ideal_expr(text: str) -> ParsedInput:
    """Grammar: '(' product (',' product)* ')' with product = factor ('*' factor)*.

    A factor is ``name`` or ``name^int``; the bare products ``1`` and ``0``
    denote the unit and zero ideal.
    """
    sc = _ExprScanner(text)
    sc.expect("(")
    names = _Names()
    products: list[list[tuple[str, int]] | str] = []
    while True:
        sc.skip_ws()
        if sc.peek() in ("0", "1"):
            products.append(sc.peek())
            sc.pos += 1
        else:
            factors: list[tuple[str, int]] = []
            while True:
                sc.skip_ws()
                name = sc.take_name()
                names.add(name)
                exp = 1
                if sc.peek() == "^":
                    sc.pos += 1
                    exp = sc.take_int()
                    if exp < 1:
                        raise sc.error("exponent must be positive")
                factors.append((name, exp))
                sc.skip_ws()
                if sc.peek() == "*":
                    sc.pos += 1
                    continue
                break
            products.append(factors)
        sc.skip_ws()
        if sc.peek() == ",":
            sc.pos += 1
            continue
        break
    sc.expect(")")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise sc.error("trailing input after ideal")

    index, ordered = names.resolve()
    ring_dim = max(len(ordered), 1)
    var_names = ordered or ("x1",)
    if any(p == "0" for p in products):
        if len(products) > 1:
            raise ParseError("the zero ideal cannot carry other generators", 1, 2)
        return ParsedInput(FORMAT_IDEAL, MonomialIdeal.zero(ring_dim), None, var_names)
    gens = []
    for p in products:
        exps = [0] * ring_dim
        if p != "1":
            for name, exp in p:
                exps[index[name]] += exp
        gens.append(Monomial(tuple(exps)))
    ideal = MonomialIdeal.from_gens(ring_dim, gens)
    return ParsedInput(FORMAT_IDEAL, ideal, None, var_names)


def parse_input(text: str, fmt: str | None = None) -> ParsedInput:
    fmt = fmt or detect_format(text)
    if fmt == FORMAT_IDEAL:
        return parse_ideal_expr(text)
    if fmt == FORMAT_EDGES:
        return parse_edge_list(text)
    raise ParseError(f"unknown input format {fmt!r}", 1, 1)


def parse_monomial(text: str, names: tuple[str, ...]) -> Monomial:
    """A single product in an existing naming context (for colon arguments)."""
    sc = _ExprScanner(text)
    sc.skip_ws()
    if sc.peek() == "1":
        sc.pos += 1
        sc.skip_ws()
        if sc.pos != len(sc.text):
            raise sc.error("trailing input after monomial")
        return Monomial.unit(len(names))
    index = {n: i for i, n in enumerate(names)}
    exps = [0] * len(names)
    while True:
        sc.skip_ws()
        name = sc.take_name()
        if name not in index:
            raise sc.error(f"unknown variable {name!r}")
        exp = 1
        if sc.peek() == "^":
            sc.pos += 1
            exp = sc.take_int()
        exps[index[name]] += exp
        sc.skip_ws()
        if sc.peek() == "*":
            sc.pos += 1
            continue
        break
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise sc.error("trailing input after monomial")
    return Monomial(tuple(exps))
