"""Shared random generators for terms and decision trees."""

from __future__ import annotations

import random

from sclc.normalform import LEAF_F, LEAF_T, LEAF_U, BasicForm, Node
from sclc.syntax import (
    FF, TT, UU, And, Atom, Cond, Iff, Nand, Nor, Not, Or, Term, Xor,
)

FULL_BINARY = (And, Or, Iff, Xor, Nand, Nor)
SCL_BINARY = (And, Or)


def random_term(rng: random.Random, atoms=("a", "b", "c"), max_depth: int = 5,
                connectives: str = "full", undef: bool = False) -> Term:
    """Random closed term.

    connectives: "full" (everything incl. the conditional), "scl"
    ({not, and, or}), or "nand" ({nand} only).
    """
    leaves: list[Term] = [Atom(a) for a in atoms] + [TT, FF]
    if undef:
        leaves.append(UU)
    if max_depth <= 0 or rng.random() < 0.25:
        return rng.choice(leaves)
    d = max_depth - 1
    if connectives == "nand":
        return Nand(random_term(rng, atoms, d, connectives, undef),
                    random_term(rng, atoms, d, connectives, undef))
    if connectives == "scl":
        if rng.random() < 0.3:
            return Not(random_term(rng, atoms, d, connectives, undef))
        op = rng.choice(SCL_BINARY)
        return op(random_term(rng, atoms, d, connectives, undef),
                  random_term(rng, atoms, d, connectives, undef))
    roll = rng.random()
    if roll < 0.2:
        return Not(random_term(rng, atoms, d, connectives, undef))
    if roll < 0.35:
        return Cond(random_term(rng, atoms, d, connectives, undef),
                    random_term(rng, atoms, d, connectives, undef),
                    random_term(rng, atoms, d, connectives, undef))
    op = rng.choice(FULL_BINARY)
    return op(random_term(rng, atoms, d, connectives, undef),
              random_term(rng, atoms, d, connectives, undef))


def random_basic_form(rng: random.Random, atoms=("a", "b", "c", "d"),
                      max_depth: int = 6, undef: bool = False) -> BasicForm:
    leaves = [LEAF_T, LEAF_F] + ([LEAF_U] if undef else [])
    if max_depth <= 0 or rng.random() < 0.3:
        return rng.choice(leaves)
    return Node(rng.choice(atoms),
                random_basic_form(rng, atoms, max_depth - 1, undef),
                random_basic_form(rng, atoms, max_depth - 1, undef))


def all_valuations(names: list[str]) -> list[dict[str, bool]]:
    out = []
    for bits in range(1 << len(names)):
        out.append({n: bool(bits >> i & 1) for i, n in enumerate(names)})
    return out
