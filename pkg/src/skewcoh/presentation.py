"""Text presentations of algebras.

File format (one directive per line; ``#`` at the start of a line or after
whitespace starts a comment)::

    name: A
    field: 3
    order: weighted-lex
    generators: a(0,1) b(1,0)
    precedence: b > a
    relation: b*a - a*b - (1/2)*a^2
    relation: a^3

``generators`` lists names with optional weight vectors; ``order`` is
``weighted-lex`` or ``deglex``; ``precedence`` runs from highest to lowest.
Relation expressions use ``+ - * / ^`` and parentheses; ``/`` divides by a
scalar, so ``(1/2)`` is the inverse of 2 in F_p.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .ffmat import PrimeField
from .freealg import FreeElement, MonomialOrder

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ParseError(ValueError):
    pass


@dataclass
class Presentation:
    """Generators, order, field modulus and relations of an algebra."""

    name: str
    p: int
    order: MonomialOrder
    relations: list[FreeElement]
    notes: dict = field(default_factory=dict)

    @property
    def names(self) -> tuple[str, ...]:
        return self.order.names

    def to_text(self) -> str:
        lines = [f"name: {self.name}", f"field: {self.p}", f"order: {self.order.kind}"]
        gens = []
        for n, w in zip(self.order.names, self.order.weights):
            gens.append(n if self.order.kind == "deglex" else f"{n}({','.join(map(str, w))})")
        lines.append("generators: " + " ".join(gens))
        lines.append("precedence: " + " > ".join(self.order.describe()["precedence"]))
        for k, v in self.notes.items():
            lines.append(f"# {k}: {v}")
        for f in self.relations:
            lines.append("relation: " + f.format(self.names, self.order))
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        Path(path).write_text(self.to_text())


def parse_element(text: str, names: Sequence[str], p: int) -> FreeElement:
    """Parse an infix expression into a free-algebra element over F_p."""
    toks = []
    for num, ident, op in _TOKEN.findall(text):
        if num:
            toks.append(("num", int(num)))
        elif ident:
            if ident not in names:
                raise ParseError(f"unknown generator {ident!r}")
            toks.append(("gen", names.index(ident)))
        elif op.strip():
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}")
            toks.append(("op", op))
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(expected=None):
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("unexpected end of expression")
        tok = toks[pos]
        if expected is not None and tok != ("op", expected):
            raise ParseError(f"expected {expected!r}, found {tok[1]!r}")
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() in (("op", "+"), ("op", "-")):
            sign = -1 if take()[1] == "-" else 1
        acc = sign * term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                acc = acc * rhs
            else:
                if set(rhs.terms) - {()} or not rhs.terms:
                    raise ParseError("can only divide by a nonzero scalar")
                acc = pow(rhs.terms[()], -1, p) * acc
        return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, n = take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            return base ** n
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return FreeElement.scalar(p, val)
        if kind == "gen":
            return FreeElement.word(p, (val,))
        if val == "(":
            e = expr()
            take(")")
            return e
        if val == "-":
            return -atom()
        raise ParseError(f"unexpected token {val!r}")

    if not toks:
        raise ParseError("empty expression")
    out = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input at token {toks[pos][1]!r}")
    return out


_COMMENT = re.compile(r"(^|\s)#.*")
_GEN = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\(([-\d,\s]*)\))?")


def parse_presentation(text: str) -> Presentation:
    name, p, kind, gens, prec, rels = "unnamed", None, "weighted-lex", None, None, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _COMMENT.sub("", raw).strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected 'key: value'")
        key, val = (s.strip() for s in line.split(":", 1))
        if key == "name":
            name = val
        elif key == "field":
            p = PrimeField(int(val)).p
        elif key == "order":
            kind = val
        elif key == "generators":
            gens = []
            for m in _GEN.finditer(val):
                w = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else (1,)
                gens.append((m.group(1), w))
        elif key == "precedence":
            prec = [s.strip() for s in val.split(">")]
        elif key == "relation":
            rels.append(val)
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    if p is None or gens is None:
        raise ParseError("presentation needs 'field' and 'generators'")
    names = [g for g, _ in gens]
    order = MonomialOrder(names, dict(gens), prec, kind=kind)
    relations = [parse_element(r, names, p) for r in rels]
    return Presentation(name, p, order, relations)


def read_presentation(path) -> Presentation:
    return parse_presentation(Path(path).read_text())
