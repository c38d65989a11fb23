"""Ring description files.

    # comment
    ring cusp
    vars x:2 y:3
    rels y^2 - x^3

Corpus files may add metadata lines::

    krull 1
    source cusp, contractible
    expect hartshorne 1 0 0 window=0..18 p_max=8
    expect amitsur 1 0 window=0..12 N_max=4 M=2
    period t s s*dt
    same-as cusp

Polynomials use integer and rational (``a/b``) literals, variables,
``+ - * ^`` and parentheses; ``-`` is unary or binary.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .polynomial import Polynomial, Presentation, render_polynomial

ROUTES = ("amitsur", "amitsur-uncompleted", "hartshorne", "naive")

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text, line, col0):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("num", int(m.group(1)), col0 + start))
        elif m.group(2):
            toks.append(("var", m.group(2), col0 + start))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", line, col0 + start)
            toks.append((ch, ch, col0 + start))
        pos = m.end()
    toks.append(("end", None, col0 + len(text.rstrip())))
    return toks


class _PolyParser:
    def __init__(self, text, symbols, line=None, col0=1):
        self.symbols = {s: i for i, s in enumerate(symbols)}
        self.n = len(symbols)
        self.line = line
        self.toks = _tokenize(text, line, col0)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", self.line, tok[2])
        self.i += 1
        return tok

    def error(self, msg):
        raise ParseError(msg, self.line, self.peek()[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer")
            self.take()
            base = base ** tok[1]
        return base

    def atom(self):
        kind, val, col = self.peek()
        if kind == "num":
            self.take()
            c = Fraction(val)
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")[1]
                if den == 0:
                    raise ParseError("division by zero", self.line, col)
                c = Fraction(val, den)
            return Polynomial.constant(self.n, c)
        if kind == "var":
            self.take()
            if val not in self.symbols:
                raise ParseError(f"unknown variable {val!r}", self.line, col)
            return Polynomial.variable(self.n, self.symbols[val])
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        if kind == "/":
            self.error("'/' is only allowed inside rational literals such as 3/4")
        self.error("expected a number, a variable or '('" if kind != "end" else "unexpected end of input")


def parse_polynomial(text, symbols, line=None, col0=1):
    return _PolyParser(text, tuple(symbols), line, col0).parse()


@dataclass
class Expectation:
    route: str
    totals: tuple
    params: dict = field(default_factory=dict)


@dataclass
class RingFile:
    presentation: Presentation
    krull: int = None
    source: str = ""
    expectations: list = field(default_factory=list)
    periods: list = field(default_factory=list)
    same_as: list = field(default_factory=list)
    path: str = None

    @property
    def name(self):
        return self.presentation.name


def _split_top(text):
    """Split on commas at parenthesis depth zero, keeping column offsets."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:i], start))
            start = i + 1
    parts.append((text[start:], start))
    return parts


def _param_value(key, raw, line, col):
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", raw)
    if m:
        return (int(m.group(1)), int(m.group(2)))
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"bad value {raw!r} for {key}", line, col) from None


def parse_ring_file(text, path=None):
    name = None
    variables = None
    rel_src = []
    meta = {"krull": None, "source": [], "expect": [], "period": [], "same-as": []}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        key, _, rest = body.strip().partition(" ")
        rest_col = indent + len(key) + 2
        rest = rest.strip() if rest else ""
        if key == "ring":
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.-]*", rest):
                raise ParseError(f"bad ring name {rest!r}", lineno, rest_col)
            name = rest
        elif key == "vars":
            if variables is not None:
                raise ParseError("duplicate vars line", lineno, 1)
            variables = []
            for m in re.finditer(r"[^\s,]+", rest):
                vm = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*):(-?\d+)", m.group(0))
                if not vm:
                    raise ParseError(f"bad variable declaration {m.group(0)!r}; expected symbol:weight",
                                     lineno, rest_col + m.start())
                variables.append((vm.group(1), int(vm.group(2))))
        elif key == "rels":
            for part, off in _split_top(body[indent + len(key):]):
                if part.strip():
                    rel_src.append((part, lineno, indent + len(key) + off + 1))
        elif key == "krull":
            if not rest.isdigit():
                raise ParseError("krull needs a non-negative integer", lineno, rest_col)
            meta["krull"] = int(rest)
        elif key == "source":
            meta["source"].append(rest)
        elif key == "expect":
            words = rest.split()
            if not words or words[0] not in ROUTES:
                raise ParseError(f"expect needs a route among {', '.join(ROUTES)}", lineno, rest_col)
            nums, params = [], {}
            for w in words[1:]:
                if "=" in w:
                    k, _, v = w.partition("=")
                    params[k] = _param_value(k, v, lineno, rest_col)
                elif w.isdigit():
                    nums.append(int(w))
                else:
                    raise ParseError(f"bad expectation token {w!r}", lineno, rest_col)
            meta["expect"].append(Expectation(words[0], tuple(nums), params))
        elif key == "period":
            words = rest.split()
            if len(words) != 3:
                raise ParseError("period needs: unit inverse form", lineno, rest_col)
            meta["period"].append(tuple(words))
        elif key == "same-as":
            meta["same-as"].append(rest)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, indent + 1)
    if name is None:
        raise ParseError("missing 'ring <name>' line")
    if variables is None:
        raise ParseError("missing 'vars' line")
    symbols = [s for s, _ in variables]
    rels = [parse_polynomial(src, symbols, ln, col) for src, ln, col in rel_src]
    pres = Presentation(name, tuple(variables), tuple(rels))
    return RingFile(pres, meta["krull"], " ".join(meta["source"]), meta["expect"], meta["period"],
                    meta["same-as"], path)


def parse_ring(text):
    return parse_ring_file(text).presentation


def render_ring(p):
    lines = [f"ring {p.name}", "vars " + " ".join(f"{s}:{w}" for s, w in p.variables)]
    if p.relations:
        lines.append("rels " + ", ".join(render_polynomial(g, p.symbols) for g in p.relations))
    return "\n".join(lines) + "\n"


def load_ring(path):
    with open(path) as fh:
        return parse_ring_file(fh.read(), str(path))
