"""Term language for sequential propositional logic.

Terms mix Hoare's ternary conditional with the left-sequential connectives
(negation, and, or, iff, xor, nand, nor), the constants T/F/U, atoms
(lowercase identifiers) and schema variables (uppercase identifiers).
All values are immutable; operations here are pure functions.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import AtomCaseError, ParseError

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
VAR_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")


class Term:
    """Base class; concrete nodes are the dataclasses below."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Const(Term):
    value: str  # "T", "F" or "U"

    def __post_init__(self):
        if self.value not in ("T", "F", "U"):
            raise ValueError(f"bad constant {self.value!r}")


TT = Const("T")
FF = Const("F")
UU = Const("U")


@dataclass(frozen=True, slots=True)
class Atom(Term):
    name: str

    def __post_init__(self):
        if not ATOM_RE.match(self.name):
            raise ValueError(f"bad atom name {self.name!r}")


@dataclass(frozen=True, slots=True)
class Var(Term):
    """Schema variable; distinguished from atoms by its leading capital."""

    name: str

    def __post_init__(self):
        if not VAR_RE.match(self.name) or self.name in ("T", "F", "U"):
            raise ValueError(f"bad variable name {self.name!r}")


@dataclass(frozen=True, slots=True)
class Cond(Term):
    """Ternary conditional: Cond(x, y, z) means "if y then x else z"."""

    then: Term
    cond: Term
    orelse: Term


@dataclass(frozen=True, slots=True)
class Not(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class And(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Or(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Iff(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Xor(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Nand(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Nor(Term):
    left: Term
    right: Term


BINARY_TYPES = (And, Or, Iff, Xor, Nand, Nor)


def is_closed(term: Term) -> bool:
    """True iff the term contains no schema variables."""
    todo = [term]
    while todo:
        t = todo.pop()
        if isinstance(t, Var):
            return False
        if isinstance(t, Cond):
            todo += (t.then, t.cond, t.orelse)
        elif isinstance(t, Not):
            todo.append(t.arg)
        elif isinstance(t, BINARY_TYPES):
            todo += (t.left, t.right)
    return True


def atoms_of(term: Term) -> list[str]:
    """Atom names in first-inspection order (condition before branches)."""
    seen: dict[str, None] = {}

    def walk(t: Term) -> None:
        if isinstance(t, Atom):
            seen.setdefault(t.name, None)
        elif isinstance(t, Cond):
            walk(t.cond)
            walk(t.then)
            walk(t.orelse)
        elif isinstance(t, Not):
            walk(t.arg)
        elif isinstance(t, BINARY_TYPES):
            walk(t.left)
            walk(t.right)

    walk(term)
    return list(seen)


def vars_of(term: Term) -> list[str]:
    """Variable names in left-to-right first-occurrence order."""
    seen: dict[str, None] = {}

    def walk(t: Term) -> None:
        if isinstance(t, Var):
            seen.setdefault(t.name, None)
        elif isinstance(t, Cond):
            walk(t.cond)
            walk(t.then)
            walk(t.orelse)
        elif isinstance(t, Not):
            walk(t.arg)
        elif isinstance(t, BINARY_TYPES):
            walk(t.left)
            walk(t.right)

    walk(term)
    return list(seen)


def term_depth(term: Term) -> int:
    """Nesting depth, leaves at depth 0.  Iterative; safe on deep input."""
    depth = 0
    todo: list[tuple[Term, int]] = [(term, 0)]
    while todo:
        t, d = todo.pop()
        if d > depth:
            depth = d
        if isinstance(t, Cond):
            todo += ((t.then, d + 1), (t.cond, d + 1), (t.orelse, d + 1))
        elif isinstance(t, Not):
            todo.append((t.arg, d + 1))
        elif isinstance(t, BINARY_TYPES):
            todo += ((t.left, d + 1), (t.right, d + 1))
    return depth


_DUAL_PAIRS: dict[type, type] = {And: Or, Or: And, Iff: Xor, Xor: Iff, Nand: Nor, Nor: Nand}


def dual(term: Term) -> Term:
    """The duality involution.

    Swaps T and F, fixes U, atoms and variables, reverses the conditional's
    outer arguments, and swaps and/or, iff/xor, nand/nor.
    """
    match term:
        case Const("T"):
            return FF
        case Const("F"):
            return TT
        case Const("U") | Atom() | Var():
            return term
        case Cond(then, cond, orelse):
            return Cond(dual(orelse), dual(cond), dual(then))
        case Not(arg):
            return Not(dual(arg))
        case _:
            swapped = _DUAL_PAIRS[type(term)]
            return swapped(dual(term.left), dual(term.right))


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

# Multi-character operators first so the scanner takes the longest match.
_OPERATORS = [
    ("<->", "IFF"),
    ("<|", "LTRI"),
    ("|>", "RTRI"),
    ("||", "OR"),
    ("&&", "AND"),
    ("~&", "NAND"),
    ("~|", "NOR"),
    ("^^", "XOR"),
    ("(", "LPAREN"),
    (")", "RPAREN"),
    ("!", "NOT"),
    # Unicode aliases.
    ("∧ᵒ", "AND"),
    ("∨ᵒ", "OR"),
    ("↔ᵒ", "IFF"),
    ("⊕ᵒ", "XOR"),
    ("∧", "AND"),
    ("∨", "OR"),
    ("↔", "IFF"),
    ("⊕", "XOR"),
    ("¬", "NOT"),
    ("⊼", "NAND"),
    ("⊽", "NOR"),
    ("◁", "LTRI"),
    ("▷", "RTRI"),
]

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        for op, kind in _OPERATORS:
            if text.startswith(op, i):
                tokens.append(_Token(kind, op, line, col))
                i += len(op)
                col += len(op)
                break
        else:
            m = _IDENT_RE.match(text, i)
            if m:
                word = m.group()
                if word in ("T", "F", "U"):
                    kind = "CONST"
                elif ATOM_RE.match(word):
                    kind = "ATOM"
                elif VAR_RE.match(word):
                    kind = "VAR"
                else:
                    raise AtomCaseError(
                        f"identifier {word!r} is neither an atom nor a variable",
                        line, col,
                        frozenset({"atom [a-z][a-z0-9_]*", "variable [A-Z][A-Za-z0-9_]*"}),
                    )
                tokens.append(_Token(kind, word, line, col))
                i += len(word)
                col += len(word)
            else:
                raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    """Recursive descent over the grammar:

    term   := cond
    cond   := iff ( "<|" iff "|>" iff )?       one level, non-associative
    iff    := xor  ( "<->" xor )*              left-associative
    xor    := or   ( "^^"  or  )*
    or     := and  ( "||"  and )*
    and    := nand ( "&&"  nand)*
    nand   := unary ( ("~&" | "~|") unary )*
    unary  := "!" unary | primary
    primary:= "T" | "F" | "U" | atom | variable | "(" term ")"
    """

    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        t = self.tok
        self.pos += 1
        return t

    def expect(self, kind: str, what: str) -> _Token:
        if self.tok.kind != kind:
            self.fail(frozenset({what}))
        return self.advance()

    def fail(self, expected: frozenset[str]):
        t = self.tok
        shown = t.text if t.kind != "EOF" else "end of input"
        raise ParseError(f"unexpected {shown!r}", t.line, t.column, expected)

    def parse(self) -> Term:
        t = self.cond()
        if self.tok.kind != "EOF":
            self.fail(frozenset({"end of input", "operator"}))
        return t

    def cond(self) -> Term:
        first = self.iff()
        if self.tok.kind == "LTRI":
            self.advance()
            middle = self.iff()
            self.expect("RTRI", "'|>'")
            last = self.iff()
            return Cond(first, middle, last)
        return first

    def _chain(self, sub, kinds: dict[str, type]) -> Term:
        t = sub()
        while self.tok.kind in kinds:
            op = kinds[self.advance().kind]
            t = op(t, sub())
        return t

    def iff(self) -> Term:
        return self._chain(self.xor, {"IFF": Iff})

    def xor(self) -> Term:
        return self._chain(self.or_, {"XOR": Xor})

    def or_(self) -> Term:
        return self._chain(self.and_, {"OR": Or})

    def and_(self) -> Term:
        return self._chain(self.nand, {"AND": And})

    def nand(self) -> Term:
        return self._chain(self.unary, {"NAND": Nand, "NOR": Nor})

    def unary(self) -> Term:
        if self.tok.kind == "NOT":
            self.advance()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Term:
        t = self.tok
        if t.kind == "CONST":
            self.advance()
            return Const(t.text)
        if t.kind == "ATOM":
            self.advance()
            return Atom(t.text)
        if t.kind == "VAR":
            self.advance()
            return Var(t.text)
        if t.kind == "LPAREN":
            self.advance()
            inner = self.cond()
            self.expect("RPAREN", "')'")
            return inner
        self.fail(frozenset({"'T'", "'F'", "'U'", "atom", "variable", "'('", "'!'"}))
        raise AssertionError("unreachable")


def parse(text: str) -> Term:
    """Parse the expression grammar; raises ParseError on malformed input."""
    return _Parser(_tokenize(text)).parse()


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

# Binding strengths, loosest to tightest.  Cond children print at the iff
# level so any nested conditional is parenthesized.
_PREC_COND = 10
_PREC_IFF = 20
_PREC_XOR = 30
_PREC_OR = 40
_PREC_AND = 50
_PREC_NAND = 60
_PREC_NOT = 70
_PREC_LEAF = 100

_BIN_PREC = {Iff: _PREC_IFF, Xor: _PREC_XOR, Or: _PREC_OR, And: _PREC_AND,
             Nand: _PREC_NAND, Nor: _PREC_NAND}

_ASCII_OPS = {Iff: "<->", Xor: "^^", Or: "||", And: "&&", Nand: "~&", Nor: "~|"}
_UNICODE_OPS = {Iff: "↔ᵒ", Xor: "⊕ᵒ", Or: "∨ᵒ", And: "∧ᵒ", Nand: "⊼", Nor: "⊽"}


def print_term(term: Term, style: str = "ascii", primes: bool = False) -> str:
    """Render a term.

    style "ascii" re-parses to a structurally equal term; "unicode" uses the
    mathematical symbols; "json" produces the nested-object encoding.  With
    primes=True, Nand(t, T) is abbreviated as t' (display only, not parsed).
    """
    if style == "json":
        return json.dumps(_to_json(term), separators=(", ", ": "))
    if style == "ascii":
        ops, neg, ltri, rtri, prime = _ASCII_OPS, "!", "<|", "|>", "'"
    elif style == "unicode":
        ops, neg, ltri, rtri, prime = _UNICODE_OPS, "¬", "◁", "▷", "′"
    else:
        raise ValueError(f"unknown print style {style!r}")

    def go(t: Term, min_prec: int) -> str:
        match t:
            case Const(v):
                return v
            case Atom(name) | Var(name):
                return name
            case Nand(x, Const("T")) if primes:
                return go(x, _PREC_NOT) + prime
            case Not(x):
                s = neg + go(x, _PREC_NOT)
                p = _PREC_NOT
            case Cond(then, cond, orelse):
                s = (f"{go(then, _PREC_IFF)} {ltri} {go(cond, _PREC_IFF)}"
                     f" {rtri} {go(orelse, _PREC_IFF)}")
                p = _PREC_COND
            case _:
                p = _BIN_PREC[type(t)]
                s = f"{go(t.left, p)} {ops[type(t)]} {go(t.right, p + 1)}"
        return f"({s})" if p < min_prec else s

    return go(term, 0)


def _to_json(t: Term):
    match t:
        case Const(v):
            return {"const": v}
        case Atom(name):
            return {"atom": name}
        case Var(name):
            return {"var": name}
        case Cond(then, cond, orelse):
            return {"cond": {"then": _to_json(then), "if": _to_json(cond),
                             "else": _to_json(orelse)}}
        case Not(arg):
            return {"not": _to_json(arg)}
        case _:
            key = type(t).__name__.lower()
            return {key: {"left": _to_json(t.left), "right": _to_json(t.right)}}
