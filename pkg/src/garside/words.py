"""
Text form of group elements.

Words are whitespace separated atom tokens with optional integer exponents::

    s1 s2^-1 s1^3          braid:<n>, atoms s1 .. s{n-1}
    x^2 y^-1               cyclic:<N>
    (x^-1, y) (D, s1)^2    product(<spec>,<spec>), one component word per slot
    D^-2                   Δ in any structure

A ``.`` is accepted as a separator, which lets the normal form printed by
`format_element` (``D^1 . s2``) be read back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Element, GarsideError, GarsideStructure, normalize, power
from .structures import BraidStructure, CyclicAmalgamStructure, ProductStructure


class WordParseError(GarsideError, ValueError):
    def __init__(self, message: str, token: str | None = None, position: int | None = None):
        super().__init__(message)
        self.token = token
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # "name", "exp", "(", ")", ",", "."
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:([(),.])|([A-Za-z][A-Za-z0-9]*)|(\^[+-]?\d+))")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip():
                start = pos + len(rest) - len(rest.lstrip())
                bad = rest.split()[0]
                raise WordParseError(f"unexpected token {bad!r} at position {start}", bad, start)
            return tokens
        if m.group(1):
            tokens.append(_Token(m.group(1), m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(_Token("name", m.group(2), m.start(2)))
        else:
            tokens.append(_Token("exp", m.group(3), m.start(3)))
        pos = m.end()


def atom_table(structure: GarsideStructure) -> dict[str, object]:
    """Atom names accepted for a non-product structure."""
    if isinstance(structure, BraidStructure):
        return {f"s{i + 1}": a for i, a in enumerate(structure.atoms)}
    if isinstance(structure, CyclicAmalgamStructure):
        return {"x": ("x", 1), "y": ("y", 1)}
    return {}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, tok: _Token | None, expected: str) -> WordParseError:
        if tok is None:
            return WordParseError(f"unexpected end of word, expected {expected}", None, len(self.text))
        return WordParseError(
            f"unexpected token {tok.text!r} at position {tok.pos}, expected {expected}", tok.text, tok.pos
        )

    def exponent(self) -> int:
        tok = self.peek()
        if tok is not None and tok.kind == "exp":
            self.take()
            return int(tok.text[1:])
        return 1

    def word(self, structure: GarsideStructure, stops: tuple[str, ...] = ()) -> Element:
        result = structure.one()
        while True:
            tok = self.peek()
            if tok is None or tok.kind in stops:
                return result
            if tok.kind == ".":
                self.take()
                continue
            item = self.item(structure)
            result = result * power(item, self.exponent())

    def item(self, structure: GarsideStructure) -> Element:
        tok = self.peek()
        if tok.kind == "name" and tok.text == "D":
            self.take()
            return structure.delta_power(1)
        if isinstance(structure, ProductStructure):
            if tok.kind != "(":
                raise self.error(tok, "'(' or 'D'")
            self.take()
            left = self.word(structure.left, stops=(",", ")"))
            tok = self.peek()
            if tok is None or tok.kind != ",":
                raise self.error(tok, "','")
            self.take()
            right = self.word(structure.right, stops=(",", ")"))
            tok = self.peek()
            if tok is None or tok.kind != ")":
                raise self.error(tok, "')'")
            self.take()
            return pair(structure, left, right)
        atoms = atom_table(structure)
        if tok.kind != "name" or tok.text not in atoms:
            raise self.error(tok, f"an atom of {structure.spec} ({', '.join(atoms)} or D)")
        self.take()
        return structure.element(atoms[tok.text])


def parse_word(structure: GarsideStructure, text: str) -> Element:
    """Parse `text` as an element of `structure`."""
    parser = _Parser(text)
    g = parser.word(structure)
    if parser.peek() is not None:
        raise parser.error(parser.peek(), "end of word")
    return g


def pair(structure: ProductStructure, left: Element, right: Element) -> Element:
    """The element (left, right) of a product structure."""
    if left.structure != structure.left or right.structure != structure.right:
        raise GarsideError("component structures do not match the product")
    # pad the component with the larger inf with Δ factors
    r = min(left.r, right.r)
    lf = [structure.left.delta] * (left.r - r) + list(left.factors)
    rf = [structure.right.delta] * (right.r - r) + list(right.factors)
    k = max(len(lf), len(rf))
    lf += [structure.left.identity] * (k - len(lf))
    rf += [structure.right.identity] * (k - len(rf))
    return normalize(structure, r, list(zip(lf, rf)))


def components(g: Element) -> tuple[Element, Element]:
    """Split an element of a product structure into its two components."""
    st = g.structure
    if not isinstance(st, ProductStructure):
        raise GarsideError(f"{st.spec} is not a product structure")
    left = normalize(st.left, g.r, [f[0] for f in g.factors])
    right = normalize(st.right, g.r, [f[1] for f in g.factors])
    return left, right


def format_element(g: Element) -> str:
    """Normal form as text, e.g. ``D^1 . s2``; parseable by `parse_word`."""
    st = g.structure
    return " . ".join([f"D^{g.r}"] + [st.simple_word(s) for s in g.factors])
