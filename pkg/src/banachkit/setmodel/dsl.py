"""Recursive-descent parser and canonical printer for the set DSL.

    spec     := "periodic(" int ";" intlist ")" | "ap(" int ";" int ")"
              | "bohr(" reallist ";" real [";" int] ")" | "random(" real ";" int ")"
              | "explicit(" intlist ")" | "union(" spec "," spec ")"
              | "intersect(" spec "," spec ")" | "shift(" spec ";" int ")"
              | "diff(" spec "," spec ")"
    intlist  := int {"," int}        reallist := real {"," real}

Reals are decimal literals or ``p/q`` and are parsed to exact fractions.
Whitespace between tokens is ignored.
"""

from __future__ import annotations

from fractions import Fraction
import re

from ..bohrset import BohrSpec, as_fraction
from ..errors import ParseError, SpecError
from .ast import AP, Bohr, DiffSet, Explicit, Intersect, Periodic, Random, Shift, Union_

_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+(?:\.\d+|/\d+)?)|(?P<word>[a-z]+)|(?P<sym>[();,]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []  # (kind, value, position)
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def int_(self) -> int:
        _, text, pos = self.take("num")
        if "." in text or "/" in text:
            raise ParseError(f"expected integer, found {text!r}", pos)
        return int(text)

    def real(self) -> Fraction:
        _, text, pos = self.take("num")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}", pos) from None

    def list_of(self, item):
        out = [item()]
        while self.peek()[:2] == ("sym", ","):
            self.i += 1
            out.append(item())
        return out

    def spec(self):
        _, name, pos = self.take("word")
        handler = getattr(self, "_" + name, None)
        if handler is None:
            raise ParseError(f"unknown constructor {name!r}", pos)
        self.take("sym", "(")
        try:
            node = handler()
        except ParseError:
            raise
        except SpecError as exc:
            raise ParseError(str(exc), pos) from None
        self.take("sym", ")")
        return node

    def _periodic(self):
        p = self.int_()
        self.take("sym", ";")
        return Periodic(p, frozenset(self.list_of(self.int_)))

    def _ap(self):
        start = self.int_()
        self.take("sym", ";")
        return AP(start, self.int_())

    def _bohr(self):
        freqs = self.list_of(self.real)
        self.take("sym", ";")
        eps = self.real()
        shift = 0
        if self.peek()[:2] == ("sym", ";"):
            self.i += 1
            shift = self.int_()
        return Bohr(BohrSpec(tuple(freqs), eps, shift))

    def _random(self):
        density = self.real()
        self.take("sym", ";")
        return Random(density, self.int_())

    def _explicit(self):
        return Explicit(frozenset(self.list_of(self.int_)))

    def _pair(self, cls):
        left = self.spec()
        self.take("sym", ",")
        return cls(left, self.spec())

    def _union(self):
        return self._pair(Union_)

    def _intersect(self):
        return self._pair(Intersect)

    def _diff(self):
        return self._pair(DiffSet)

    def _shift(self):
        inner = self.spec()
        self.take("sym", ";")
        return Shift(inner, self.int_())


def parse(text: str):
    """Parse a DSL expression into a SetSpec AST."""
    p = _Parser(text)
    node = p.spec()
    tok = p.peek()
    if tok[0] != "eof":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return node


def _real(x) -> str:
    f = as_fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _ints(values) -> str:
    return ",".join(str(v) for v in sorted(values))


def format_spec(spec) -> str:
    """Canonical text for ``spec``; ``parse(format_spec(s)) == s``."""
    if isinstance(spec, Periodic):
        return f"periodic({spec.period};{_ints(spec.residues)})"
    if isinstance(spec, AP):
        return f"ap({spec.start};{spec.step})"
    if isinstance(spec, Bohr):
        b = spec.spec
        text = ",".join(_real(a) for a in b.freqs) + ";" + _real(b.eps)
        if b.shift:
            text += f";{b.shift}"
        return f"bohr({text})"
    if isinstance(spec, Random):
        return f"random({_real(spec.density)};{spec.seed})"
    if isinstance(spec, Explicit):
        return f"explicit({_ints(spec.values)})"
    if isinstance(spec, Union_):
        return f"union({format_spec(spec.left)}, {format_spec(spec.right)})"
    if isinstance(spec, Intersect):
        return f"intersect({format_spec(spec.left)}, {format_spec(spec.right)})"
    if isinstance(spec, DiffSet):
        return f"diff({format_spec(spec.left)}, {format_spec(spec.right)})"
    if isinstance(spec, Shift):
        return f"shift({format_spec(spec.inner)};{spec.n})"
    raise TypeError(f"not a set spec: {spec!r}")
