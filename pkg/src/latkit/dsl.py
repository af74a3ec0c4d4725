"""A small language for lattice expressions such as ``U^3 + E8(-1)^2 + A2(-1)``.

    expr  := term ("+" term)*
    term  := atom ("^" uint)?
    atom  := name | name "(" rational ")" | "[" int ("," int)* "]"
           | "I(" uint "," uint ")" | "gram[" rows "]"

``K3n`` takes its parameter in parentheses (``K3n(2)``); a further
parenthesised rational rescales it.  Whitespace is ignored.
"""

from dataclasses import dataclass
from fractions import Fraction

from .core import CATALOG_NAMES, catalog, diagonal, direct_sum, make_lattice, odd_unimodular, power, rescale
from .errors import ParseError, UnknownName

_BASE_NAMES = tuple(n for n in CATALOG_NAMES if "(" not in n)


@dataclass(frozen=True)
class Atom:
    name: str
    param: int = None


@dataclass(frozen=True)
class Diag:
    entries: tuple


@dataclass(frozen=True)
class Gram:
    rows: tuple


@dataclass(frozen=True)
class OddUnimodular:
    p: int
    q: int


@dataclass(frozen=True)
class Rescale:
    expr: object
    factor: Fraction


@dataclass(frozen=True)
class Power:
    expr: object
    n: int


@dataclass(frozen=True)
class Sum:
    terms: tuple


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message, *expected):
        self.skip()
        raise ParseError(message, self.pos, expected)

    def expect(self, ch):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}", repr(ch))
        self.pos += 1

    def accept(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def uint(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("missing number", "unsigned integer")
        return int(self.text[start:self.pos])

    def int_(self):
        if self.peek() == "-":
            self.pos += 1
            if not self.peek().isdigit():
                self.fail("missing number", "unsigned integer")
            return -self.uint()
        if not self.peek().isdigit():
            self.fail("missing number", "integer")
        return self.uint()

    def rational(self):
        num = self.int_()
        if self.accept("/"):
            start = self.pos
            den = self.uint()
            if den == 0:
                raise ParseError("zero denominator", start, ("positive integer",))
            return Fraction(num, den)
        return Fraction(num)

    def name(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return start, self.text[start:self.pos]

    def int_list(self):
        self.expect("[")
        items = [self.int_()]
        while self.accept(","):
            items.append(self.int_())
        self.expect("]")
        return tuple(items)

    def atom(self):
        ch = self.peek()
        if ch == "[":
            return Diag(self.int_list())
        if not (ch.isalpha()):
            self.fail("expected a lattice", "name", "'['")
        start, word = self.name()
        if word == "gram":
            self.expect("[")
            rows = [self.int_list()]
            while self.accept(","):
                rows.append(self.int_list())
            self.expect("]")
            return Gram(tuple(rows))
        if word == "I":
            self.expect("(")
            p = self.uint()
            self.expect(",")
            q = self.uint()
            self.expect(")")
            return OddUnimodular(p, q)
        if word not in _BASE_NAMES:
            raise UnknownName(f"unknown lattice name {word!r} at offset {start}; "
                              f"known names: {', '.join(_BASE_NAMES)}")
        node = Atom(word)
        if word == "K3n":
            self.expect("(")
            node = Atom(word, self.uint())
            self.expect(")")
        if self.accept("("):
            node = Rescale(node, self.rational())
            self.expect(")")
        return node

    def term(self):
        node = self.atom()
        if self.accept("^"):
            n = self.uint()
            if n == 0:
                raise ParseError("exponent must be positive", self.pos - 1, ("positive integer",))
            node = Power(node, n)
        return node

    def expr(self):
        terms = [self.term()]
        while self.accept("+"):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def parse(self):
        node = self.expr()
        if self.peek():
            self.fail("unexpected input", "'+'", "'^'", "end of input")
        return node


def parse_lattice_expr(text):
    """Parse ``text`` into an AST; raises ParseError with an offset."""
    return _Parser(text).parse()


def evaluate(node):
    """Turn an AST into a Lattice."""
    if isinstance(node, Atom):
        if node.param is not None:
            return catalog(node.name, node.param)
        if node.name == "K3n":
            raise UnknownName("K3n needs a parameter")
        return catalog(node.name)
    if isinstance(node, Diag):
        return diagonal(*node.entries)
    if isinstance(node, Gram):
        return make_lattice(node.rows)
    if isinstance(node, OddUnimodular):
        return odd_unimodular(node.p, node.q)
    if isinstance(node, Rescale):
        return rescale(evaluate(node.expr), node.factor)
    if isinstance(node, Power):
        return power(evaluate(node.expr), node.n)
    if isinstance(node, Sum):
        return direct_sum(*(evaluate(t) for t in node.terms))
    raise TypeError(f"not a lattice expression: {node!r}")


def lattice_from_text(text):
    """Parse and evaluate; unnamed results are named by their canonical text."""
    node = parse_lattice_expr(text)
    lattice = evaluate(node)
    return lattice.renamed(lattice.name or pretty(node))


def _ints(xs):
    return ",".join(str(x) for x in xs)


def pretty(node):
    """Canonical text for an AST; parsing it gives the same AST back."""
    if isinstance(node, Atom):
        return node.name if node.param is None else f"{node.name}({node.param})"
    if isinstance(node, Diag):
        return f"[{_ints(node.entries)}]"
    if isinstance(node, Gram):
        return "gram[" + ",".join(f"[{_ints(r)}]" for r in node.rows) + "]"
    if isinstance(node, OddUnimodular):
        return f"I({node.p},{node.q})"
    if isinstance(node, Rescale):
        return f"{pretty(node.expr)}({node.factor})"
    if isinstance(node, Power):
        return f"{pretty(node.expr)}^{node.n}"
    if isinstance(node, Sum):
        return " + ".join(pretty(t) for t in node.terms)
    raise TypeError(f"not a lattice expression: {node!r}")
