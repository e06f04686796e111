"""Normal forms in the sequential NAND signature.

An NNode(a, P, Q) stands for (a ~& P) ~& (a' ~& Q) with a occurring in
neither P nor Q, where a' abbreviates a ~& T.  nand_nf normalizes any
closed NAND term to such a form by structural induction; to_munbf and
from_munbf transcribe between these forms and mem-basic forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, OpenTermError, UnsupportedConnective
from .normalform import BasicForm, Leaf, LEAF_T, LEAF_F, LEAF_U, MemBasicForm, Node
from .syntax import Atom, Const, Nand, Term, TT, Var


@dataclass(frozen=True, slots=True)
class NNode:
    atom: str
    on_true: "Munbf"
    on_false: "Munbf"


Munbf = Leaf | NNode


def is_munbf(p: Munbf) -> bool:
    """True iff each node's atom is absent from both of its subtrees."""
    if isinstance(p, Leaf):
        return True
    return (p.atom not in _atoms(p.on_true) and p.atom not in _atoms(p.on_false)
            and is_munbf(p.on_true) and is_munbf(p.on_false))


def _atoms(p: Munbf) -> set[str]:
    if isinstance(p, Leaf):
        return set()
    return {p.atom} | _atoms(p.on_true) | _atoms(p.on_false)


def assume(p: Munbf, atom: str, value: bool) -> Munbf:
    """Remove an atom's nodes given its evaluation result.

    value=True keeps the true-subtree of matching nodes, value=False the
    false-subtree; leaves are fixed.  The result no longer contains atom.
    """
    if isinstance(p, Leaf):
        return p
    if p.atom == atom:
        return p.on_true if value else p.on_false
    return NNode(p.atom, assume(p.on_true, atom, value),
                 assume(p.on_false, atom, value))


def complement_leaves(p: Munbf) -> Munbf:
    """Swap T and F leaves, fixing U: the tree-level meaning of priming."""
    if isinstance(p, Leaf):
        if p.value == "T":
            return LEAF_F
        if p.value == "F":
            return LEAF_T
        return p
    return NNode(p.atom, complement_leaves(p.on_true), complement_leaves(p.on_false))


def _combine(p: Munbf, q: Munbf) -> Munbf:
    """Normal form of (p ~& q) for normalized arguments.

    T ~& q complements q's leaves; F ~& q is T; U ~& q is U.  For a node,
    push q into both branches and drop the re-introduced root atom, whose
    value is known on each side.
    """
    if isinstance(p, Leaf):
        if p.value == "T":
            return complement_leaves(q)
        if p.value == "F":
            return LEAF_T
        return LEAF_U
    return NNode(p.atom,
                 assume(_combine(p.on_true, q), p.atom, True),
                 assume(_combine(p.on_false, q), p.atom, False))


def nand_nf(term: Term) -> Munbf:
    """Normalize a closed term over {T, F, U, atoms, ~&}."""
    match term:
        case Const(v):
            return Leaf(v)
        case Atom(name):
            return NNode(name, LEAF_T, LEAF_F)
        case Var():
            raise OpenTermError("nand_nf requires a closed term")
        case Nand(x, y):
            return _combine(nand_nf(x), nand_nf(y))
        case _:
            raise UnsupportedConnective(
                f"{type(term).__name__} is outside the NAND signature")


def to_munbf(p: MemBasicForm | BasicForm) -> Munbf:
    """The bijection f: mem-basic forms to NAND normal forms."""
    tree = p.tree if isinstance(p, MemBasicForm) else p
    if isinstance(tree, Leaf):
        return tree
    return NNode(tree.atom, to_munbf(tree.on_true), to_munbf(tree.on_false))


def from_munbf(q: Munbf) -> MemBasicForm:
    """The inverse bijection g; g(f(p)) == p and f(g(q)) == q."""

    def go(t: Munbf) -> BasicForm:
        if isinstance(t, Leaf):
            return t
        return Node(t.atom, go(t.on_true), go(t.on_false))

    return MemBasicForm(go(q))


def render_nand(q: Munbf) -> Term:
    """Literal expansion into the term language:
    NNode(a, P, Q) -> (a ~& P) ~& ((a ~& T) ~& Q)."""
    if isinstance(q, Leaf):
        return Const(q.value)
    a = Atom(q.atom)
    return Nand(Nand(a, render_nand(q.on_true)),
                Nand(Nand(a, TT), render_nand(q.on_false)))


def check_munbf(p: Munbf) -> Munbf:
    """Identity that raises InvariantError on an invalid form."""
    if not is_munbf(p):
        raise InvariantError("tree violates the NAND normal form invariant")
    return p


def to_json(p: Munbf):
    """JSON form: {"leaf": "T"} or {"nnode": a, "t": ..., "f": ...}."""
    if isinstance(p, Leaf):
        return {"leaf": p.value}
    return {"nnode": p.atom, "t": to_json(p.on_true), "f": to_json(p.on_false)}
