"""Graph construction expressions such as ``K1 + C5 + C5 + C5`` or ``K4 + 4*C5``.

Grammar (whitespace is insignificant, letters are case-insensitive)::

    expr := term ('+' term)*
    term := INT '*' atom | atom
    atom := 'K' INT | 'C' INT | 'P' INT | '(' expr ')'

``+`` is the join: disjoint union plus all edges between the operands.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph, complete, cycle, path


class ExprError(ValueError):
    """Base class for malformed graph expressions."""


class ParseError(ExprError):
    def __init__(self, offset: int, expected: list[str], text: str = ""):
        self.offset = offset
        self.expected = expected
        found = repr(text[offset]) if offset < len(text) else "end of input"
        super().__init__(f"at offset {offset}: expected {' or '.join(expected)}, found {found}")


class ArityError(ExprError):
    pass


@dataclass(frozen=True)
class Complete:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ArityError(f"K{self.n}: complete graph needs at least 1 vertex")


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ArityError(f"C{self.n}: cycle needs at least 3 vertices")


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ArityError(f"P{self.n}: path needs at least 1 vertex")


@dataclass(frozen=True)
class Join:
    left: GraphExpr
    right: GraphExpr


@dataclass(frozen=True)
class Repeat:
    count: int
    operand: GraphExpr

    def __post_init__(self):
        if self.count < 1:
            raise ArityError(f"repeat count must be positive, got {self.count}")


GraphExpr = Union[Complete, Cycle, Path, Join, Repeat]
Atom = Union[Complete, Cycle, Path]

_ATOMS = {"K": Complete, "C": Cycle, "P": Path}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, *expected: str):
        self.skip()
        raise ParseError(self.pos, list(expected), self.text)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("integer")
        return int(self.text[start:self.pos])

    def expr(self) -> GraphExpr:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = Join(node, self.term())
        return node

    def term(self) -> GraphExpr:
        if self.peek().isdigit():
            count = self.integer()
            if self.peek() != "*":
                self.fail("'*'")
            self.pos += 1
            return Repeat(count, self.atom())
        return self.atom()

    def atom(self) -> GraphExpr:
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.fail("')'", "'+'")
            self.pos += 1
            return node
        kind = _ATOMS.get(c.upper())
        if kind is None:
            self.fail("'K'", "'C'", "'P'", "'('", "integer")
        self.pos += 1
        if not self.peek().isdigit():
            self.fail("integer")
        return kind(self.integer())


def parse(text: str) -> GraphExpr:
    """Parse an expression string into its AST.

    Raises :class:`ParseError` (with the character offset and the expected
    tokens) on a syntax error and :class:`ArityError` on e.g. ``C2``.
    """
    if not text.strip():
        raise ParseError(0, ["expression"], text)
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        p.fail("'+'", "end of input")
    return node


def to_string(node: GraphExpr) -> str:
    """Canonical printer; ``parse(to_string(e)) == e`` for every AST."""
    if isinstance(node, Complete):
        return f"K{node.n}"
    if isinstance(node, Cycle):
        return f"C{node.n}"
    if isinstance(node, Path):
        return f"P{node.n}"
    if isinstance(node, Join):
        right = to_string(node.right)
        if isinstance(node.right, Join):
            right = f"({right})"
        return f"{to_string(node.left)} + {right}"
    if isinstance(node, Repeat):
        inner = to_string(node.operand)
        if not isinstance(node.operand, (Complete, Cycle, Path)):
            inner = f"({inner})"
        return f"{node.count}*{inner}"
    raise TypeError(f"not a graph expression: {node!r}")


def parts(node: GraphExpr) -> list[Atom]:
    """Flatten joins and repeats into the ordered list of atomic parts."""
    if isinstance(node, (Complete, Cycle, Path)):
        return [node]
    if isinstance(node, Join):
        return parts(node.left) + parts(node.right)
    if isinstance(node, Repeat):
        return parts(node.operand) * node.count
    raise TypeError(f"not a graph expression: {node!r}")


def _atom_graph(atom: Atom) -> Graph:
    if isinstance(atom, Complete):
        return complete(atom.n)
    if isinstance(atom, Cycle):
        return cycle(atom.n)
    return path(atom.n)


def build(node: GraphExpr | str) -> Graph:
    """Elaborate an expression into a concrete graph.

    Vertices are numbered part by part, left to right. Inside a cycle part
    consecutive vertices are adjacent and the first and last close the
    cycle. Every vertex is tagged with the index of its part.
    """
    if isinstance(node, str):
        node = parse(node)
    atoms = parts(node)
    edges: list[tuple[int, int]] = []
    tags: list[int] = []
    offset = 0
    for tag, atom in enumerate(atoms):
        g = _atom_graph(atom)
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        edges.extend((u, v + offset) for u in range(offset) for v in range(g.n))
        tags.extend([tag] * g.n)
        offset += g.n
    return Graph(offset, edges, part_tags=tags, name=to_string(node))
