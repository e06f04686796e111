"""Basic forms and mem-basic forms.

A basic form is a binary decision tree: leaves T/F (and U in the
three-valued setting), internal nodes labelled by atoms, where the left
child is the true-branch.  bf() normalizes any closed term to a basic form
(free congruence); mbf() additionally strips repeated atoms from every
root-to-leaf path (memorising congruence).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import product

from .errors import DepthLimitError, InvariantError, OpenTermError
from .syntax import Atom, Cond, Const, Term, is_closed, term_depth
from .translate import to_core

DEFAULT_DEPTH_LIMIT = 10_000


@dataclass(frozen=True, slots=True)
class Leaf:
    value: str  # "T", "F" or "U"

    def __post_init__(self):
        if self.value not in ("T", "F", "U"):
            raise ValueError(f"bad leaf {self.value!r}")


LEAF_T = Leaf("T")
LEAF_F = Leaf("F")
LEAF_U = Leaf("U")


@dataclass(frozen=True, slots=True)
class Node:
    """on_true <| atom |> on_false."""

    atom: str
    on_true: "BasicForm"
    on_false: "BasicForm"


BasicForm = Leaf | Node


@dataclass(frozen=True, slots=True)
class MemBasicForm:
    """A basic form whose paths never repeat an atom; checked on wrap."""

    tree: BasicForm

    def __post_init__(self):
        if not is_mem_basic(self.tree):
            raise InvariantError("tree violates the mem-basic path invariant")


def subst_tf(p: BasicForm, q: BasicForm, r: BasicForm) -> BasicForm:
    """Replace every T leaf of p by q and every F leaf by r.

    U leaves are fixed points: once evaluation is undefined the pending
    branches are discarded, which is what makes x <| U |> y collapse to U.
    """
    if isinstance(p, Leaf):
        if p.value == "T":
            return q
        if p.value == "F":
            return r
        return p
    return Node(p.atom, subst_tf(p.on_true, q, r), subst_tf(p.on_false, q, r))


def _bf_core(t: Term) -> BasicForm:
    # t contains only constants, atoms and Cond (to_core output).
    if isinstance(t, Cond):
        return subst_tf(_bf_core(t.cond), _bf_core(t.then), _bf_core(t.orelse))
    if isinstance(t, Atom):
        return Node(t.name, LEAF_T, LEAF_F)
    return Leaf(t.value)


def _guard(term: Term, depth_limit: int) -> None:
    if term_depth(term) > depth_limit:
        raise DepthLimitError(f"term depth exceeds limit {depth_limit}")
    # The recursion below is bounded by the depth of the trees built, which
    # can exceed the input depth (though not the input size); give it room.
    if sys.getrecursionlimit() < depth_limit + 2_000:
        sys.setrecursionlimit(depth_limit + 2_000)


def bf(term: Term, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> BasicForm:
    """Normalize a closed term to its basic form (free congruence)."""
    if not is_closed(term):
        raise OpenTermError("bf requires a closed term")
    _guard(term, depth_limit)
    try:
        return _bf_core(to_core(term))
    except RecursionError:
        raise DepthLimitError("basic form grew past the recursion guard") from None


def reduce(p: BasicForm, atom: str, assume: bool) -> BasicForm:
    """Remove every occurrence of an atom whose value is taken as known.

    assume=True keeps true-branches (left-a-reduction), assume=False keeps
    false-branches (right-a-reduction); other nodes are rebuilt as is.
    """
    if isinstance(p, Leaf):
        return p
    if p.atom == atom:
        return reduce(p.on_true if assume else p.on_false, atom, assume)
    return Node(p.atom, reduce(p.on_true, atom, assume),
                reduce(p.on_false, atom, assume))


def mf(p: BasicForm) -> BasicForm:
    """Strip repeated atoms below each node, making the tree mem-basic."""
    if isinstance(p, Leaf):
        return p
    return Node(p.atom, mf(reduce(p.on_true, p.atom, True)),
                mf(reduce(p.on_false, p.atom, False)))


def mbf(term: Term, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> MemBasicForm:
    """Normalize a closed term under memorising congruence."""
    tree = bf(term, depth_limit)
    try:
        return MemBasicForm(mf(tree))
    except RecursionError:
        raise DepthLimitError("mem-basic form grew past the recursion guard") from None


def is_mem_basic(p: BasicForm) -> bool:
    """True iff no root-to-leaf path inspects the same atom twice."""

    def walk(t: BasicForm, path: set[str]) -> bool:
        if isinstance(t, Leaf):
            return True
        if t.atom in path:
            return False
        path.add(t.atom)
        ok = walk(t.on_true, path) and walk(t.on_false, path)
        path.remove(t.atom)
        return ok

    return walk(p, set())


def render(p: BasicForm) -> Term:
    """The injection back into the term language."""
    if isinstance(p, Leaf):
        return Const(p.value)
    return Cond(render(p.on_true), Atom(p.atom), render(p.on_false))


def to_json(p: BasicForm):
    """JSON form: {"leaf": "T"} or {"atom": a, "t": ..., "f": ...}."""
    if isinstance(p, Leaf):
        return {"leaf": p.value}
    return {"atom": p.atom, "t": to_json(p.on_true), "f": to_json(p.on_false)}


def enumerate_mem_basic(atoms: tuple[str, ...],
                        three_valued: bool = False) -> list[BasicForm]:
    """All mem-basic forms over the given alphabet, in a fixed order.

    Counts follow c(0) = |leaves| and c(k) = |leaves| + k * c(k-1)^2, so
    2 atoms give 74 two-valued forms and 291 three-valued ones.
    """
    leaves: list[BasicForm] = [LEAF_T, LEAF_F] + ([LEAF_U] if three_valued else [])

    def forms(alphabet: tuple[str, ...]) -> list[BasicForm]:
        out = list(leaves)
        for i, a in enumerate(alphabet):
            rest = alphabet[:i] + alphabet[i + 1:]
            sub = forms(rest)
            out += [Node(a, l, r) for l, r in product(sub, sub)]
        return out

    return forms(tuple(atoms))
