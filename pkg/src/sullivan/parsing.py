"""Model file grammar: parsing and rendering.

Line-oriented, UTF-8, hand-writable:

    model "five-sphere-bundle"
    even x1 : 6
    even x2 : 8
    odd y1 : 29 = x1^5 + x1*x2^3
    odd y2 : 31    # no '=' means d = 0

Expressions use ``+ - * ^`` with integer or rational coefficients and
parentheses; ``#`` starts a comment.  Parsing validates the model, so a
successfully parsed file is always a well-formed minimal model; validation
failures are reported with the line of the offending generator.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Element, make_generators
from .errors import (
    InvalidModel,
    InvalidInput,
    ModelSyntaxError,
    UnknownGenerator,
    ValidationError,
)
from .model import SullivanModel

_MODEL_LINE = re.compile(r'^model\s+"([^"]*)"\s*$')
_GEN_LINE = re.compile(
    r"^(even|odd)\s+([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\d+)\s*(?:=\s*(\S.*))?$")

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[+\-*^()]))")


class _Tokens:
    def __init__(self, text: str, line: int):
        self.line = line
        self.items: list[tuple[str, str]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                rest = text[pos:].strip()
                if not rest:
                    break
                raise ModelSyntaxError(f"unexpected character {rest[0]!r}", line)
            pos = m.end()
            for kind in ("number", "ident", "op"):
                v = m.group(kind)
                if v is not None:
                    self.items.append((kind, v))
                    break
        self.i = 0

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else (None, None)

    def pop(self):
        t = self.peek()
        self.i += 1
        return t


class _ExprParser:
    """Recursive descent over + - * ^ ( ) with rational coefficients."""

    def __init__(self, text: str, env: dict[str, Element], line: int):
        self.t = _Tokens(text, line)
        self.env = env
        self.line = line

    def parse(self) -> Element:
        e = self.expr()
        kind, v = self.t.peek()
        if kind is not None:
            raise ModelSyntaxError(f"unexpected {v!r} after expression", self.line)
        return e

    def expr(self) -> Element:
        negate = False
        kind, v = self.t.peek()
        if (kind, v) == ("op", "-"):
            self.t.pop()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, v = self.t.peek()
            if (kind, v) == ("op", "+"):
                self.t.pop()
                acc = acc + self.term()
            elif (kind, v) == ("op", "-"):
                self.t.pop()
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Element:
        acc = self.power()
        while self.t.peek() == ("op", "*"):
            self.t.pop()
            acc = acc * self.power()
        return acc

    def power(self) -> Element:
        base = self.atom()
        if self.t.peek() == ("op", "^"):
            self.t.pop()
            kind, v = self.t.pop()
            if kind != "number" or "/" in v:
                raise ModelSyntaxError("exponent must be a positive integer", self.line)
            return base ** int(v)
        return base

    def atom(self) -> Element:
        kind, v = self.t.pop()
        if kind == "number":
            return Element.scalar(Fraction(v))
        if kind == "ident":
            e = self.env.get(v)
            if e is None:
                raise UnknownGenerator(f"line {self.line}: unknown generator {v!r}")
            return e
        if (kind, v) == ("op", "("):
            e = self.expr()
            if self.t.pop() != ("op", ")"):
                raise ModelSyntaxError("missing closing parenthesis", self.line)
            return e
        raise ModelSyntaxError(
            "expected a number, generator, or parenthesized expression", self.line)


def parse_model(text: str) -> SullivanModel:
    """Parse and validate a model file; raises with line numbers on failure."""
    name = None
    decls: list[tuple[int, str, str, int, str | None]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _MODEL_LINE.match(line)
        if m:
            if name is not None:
                raise ModelSyntaxError("duplicate model line", lineno)
            if decls:
                raise ModelSyntaxError(
                    "model line must precede generator declarations", lineno)
            name = m.group(1)
            continue
        m = _GEN_LINE.match(line)
        if m is None:
            raise ModelSyntaxError(f"cannot parse {line!r}", lineno)
        parity, gname, deg, expr = m.group(1), m.group(2), int(m.group(3)), m.group(4)
        if parity == "even" and deg % 2:
            raise ModelSyntaxError(
                f"generator {gname!r} declared even but has odd degree {deg}", lineno)
        if parity == "odd" and deg % 2 == 0:
            raise ModelSyntaxError(
                f"generator {gname!r} declared odd but has even degree {deg}", lineno)
        if parity == "even" and expr is not None:
            raise ModelSyntaxError(
                "even generators cannot carry a differential here", lineno)
        decls.append((lineno, parity, gname, deg, expr))
    if name is None:
        raise ModelSyntaxError('missing model "<name>" line', 1)
    if not decls:
        raise ModelSyntaxError("no generator declarations", 1)

    lines_of = {gname: lineno for lineno, _, gname, _, _ in decls}
    try:
        gens = make_generators([(gname, deg) for _, _, gname, deg, _ in decls])
    except (InvalidModel, InvalidInput) as ex:
        raise ModelSyntaxError(str(ex), decls[0][0]) from ex
    env = {g.name: Element.from_generator(g) for g in gens}
    diffs: dict[str, Element] = {}
    for lineno, parity, gname, deg, expr in decls:
        if expr is None:
            continue
        img = _ExprParser(expr, env, lineno).parse()
        if img:
            diffs[gname] = img
    model = SullivanModel(gens, diffs, name=name)
    try:
        model.validate()
    except ValidationError as ex:
        lineno = lines_of.get(getattr(ex, "generator", None))
        raise type(ex)(ex.generator, f"line {lineno}: {ex}") from ex
    return model


def render_model(model: SullivanModel) -> str:
    """Canonical file form; parse(render(parse(t))) equals parse(t)."""
    out = [f'model "{model.name}"']
    for g in model.generators:
        kw = "even" if g.is_even else "odd"
        img = model.differential.get(g)
        if img:
            out.append(f"{kw} {g.name} : {g.degree} = {img.render()}")
        else:
            out.append(f"{kw} {g.name} : {g.degree}")
    return "\n".join(out) + "\n"


def load_model(path: str) -> SullivanModel:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            text = fh.read()
        except UnicodeDecodeError as ex:
            raise ModelSyntaxError(f"not a UTF-8 text file: {ex}") from ex
    return parse_model(text)
