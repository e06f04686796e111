"""Rewrites between the conditional core and the NAND signature.

Each derived connective has exactly one defining conditional equation, so
to_core is a bottom-up application of those equations:

    !x       ->  F <| x |> T
    x && y   ->  y <| x |> F
    x || y   ->  T <| x |> y
    x <-> y  ->  y <| x |> (F <| y |> T)
    x ^^ y   ->  (F <| y |> T) <| x |> y
    x ~& y   ->  (F <| y |> T) <| x |> T
    x ~| y   ->  F <| x |> (F <| y |> T)
"""

from __future__ import annotations

from .errors import UnsupportedConnective
from .syntax import (
    FF, TT, And, Atom, Cond, Const, Iff, Nand, Nor, Not, Or, Term, Var, Xor,
)


def to_core(term: Term) -> Term:
    """Eliminate all derived connectives; the result uses only constants,
    atoms, variables and the conditional."""
    match term:
        case Const() | Atom() | Var():
            return term
        case Cond(then, cond, orelse):
            return Cond(to_core(then), to_core(cond), to_core(orelse))
        case Not(x):
            return Cond(FF, to_core(x), TT)
        case And(x, y):
            return Cond(to_core(y), to_core(x), FF)
        case Or(x, y):
            return Cond(TT, to_core(x), to_core(y))
        case Iff(x, y):
            yc = to_core(y)
            return Cond(yc, to_core(x), Cond(FF, yc, TT))
        case Xor(x, y):
            yc = to_core(y)
            return Cond(Cond(FF, yc, TT), to_core(x), yc)
        case Nand(x, y):
            return Cond(Cond(FF, to_core(y), TT), to_core(x), TT)
        case Nor(x, y):
            return Cond(FF, to_core(x), Cond(FF, to_core(y), TT))
        case _:
            raise UnsupportedConnective(f"cannot lower {term!r}")


def encode_nand(term: Term) -> Term:
    """Express a {not, and, or} term using only the sequential NAND:

    !x      ->  x ~& T
    x && y  ->  (x ~& y) ~& T
    x || y  ->  (x ~& T) ~& (y ~& T)
    """
    match term:
        case Const() | Atom() | Var():
            return term
        case Nand(x, y):
            return Nand(encode_nand(x), encode_nand(y))
        case Not(x):
            return Nand(encode_nand(x), TT)
        case And(x, y):
            return Nand(Nand(encode_nand(x), encode_nand(y)), TT)
        case Or(x, y):
            return Nand(Nand(encode_nand(x), TT), Nand(encode_nand(y), TT))
        case _:
            raise UnsupportedConnective(
                f"{type(term).__name__} has no direct NAND encoding; "
                "lower via to_core and normalize instead")


def decode_nand(term: Term) -> Term:
    """Inverse reading of the NAND signature: x ~& y -> !(x && y)."""
    match term:
        case Const() | Atom() | Var():
            return term
        case Nand(x, y):
            return Not(And(decode_nand(x), decode_nand(y)))
        case _:
            raise UnsupportedConnective(
                f"{type(term).__name__} is outside the NAND signature")
