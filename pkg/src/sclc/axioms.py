"""Axiom tables and semantic validity checking.

A Schema is an equation between open terms.  check_schema instantiates it
with closed terms and compares normal forms: the fresh-atoms strategy
substitutes distinct new atoms for the variables (a refutation here is
unconditionally sound); the exhaustive strategy additionally sweeps every
tuple of mem-basic forms over a small shared alphabet, as independent
evidence that does not presuppose substitution-invariance.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass
from math import gcd

from .congruence import FREE, MEM, MEM3, Mode, normal_form
from .errors import MissingBindingError, OpenTermError, SignatureError
from .normalform import BasicForm, Leaf, Node, enumerate_mem_basic, render
from .syntax import (
    BINARY_TYPES, Atom, Cond, Const, Not, Term, Var, atoms_of, is_closed,
    parse, vars_of,
)
from .translate import to_core

DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class Schema:
    name: str
    lhs: Term
    rhs: Term
    mode: Mode | None = None  # set only where a table mixes modes

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(set(vars_of(self.lhs)) | set(vars_of(self.rhs))))

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(sorted(set(atoms_of(self.lhs)) | set(atoms_of(self.rhs))))

    @property
    def uses_undef(self) -> bool:
        return _mentions_undef(self.lhs) or _mentions_undef(self.rhs)


def _mentions_undef(t: Term) -> bool:
    match t:
        case Const(v):
            return v == "U"
        case Cond(a, b, c):
            return _mentions_undef(a) or _mentions_undef(b) or _mentions_undef(c)
        case Not(a):
            return _mentions_undef(a)
        case _ if isinstance(t, BINARY_TYPES):
            return _mentions_undef(t.left) or _mentions_undef(t.right)
        case _:
            return False


@dataclass(frozen=True)
class SchemaTable:
    name: str
    mode: Mode
    schemas: tuple[Schema, ...]
    expect_refuted: bool = False

    def mode_for(self, schema: Schema) -> Mode:
        return schema.mode if schema.mode is not None else self.mode


class Verdict(enum.Enum):
    PASSED_FRESH_ATOMS = "passed (fresh-atoms)"
    PASSED_EXHAUSTIVE = "passed (exhaustive)"
    REFUTED_FRESH_ATOMS = "refuted (fresh-atoms)"
    REFUTED_EXHAUSTIVE = "refuted (exhaustive)"


@dataclass(frozen=True)
class CheckResult:
    verdict: Verdict
    count: int = 1
    k: int | None = None
    budget_exceeded: bool = False
    witness: Mapping[str, Term] | None = None
    lhs_nf: BasicForm | None = None
    rhs_nf: BasicForm | None = None

    @property
    def refuted(self) -> bool:
        return self.verdict in (Verdict.REFUTED_FRESH_ATOMS,
                                Verdict.REFUTED_EXHAUSTIVE)


def instantiate(schema: Schema, sub: Mapping[str, Term]) -> tuple[Term, Term]:
    """Simultaneous substitution of closed terms into both sides."""
    for name, image in sub.items():
        if not is_closed(image):
            raise OpenTermError(f"substitution image for {name} is open")

    def walk(t: Term) -> Term:
        match t:
            case Var(name):
                if name not in sub:
                    raise MissingBindingError(f"no binding for variable {name}")
                return sub[name]
            case Cond(a, b, c):
                return Cond(walk(a), walk(b), walk(c))
            case Not(a):
                return Not(walk(a))
            case _ if isinstance(t, BINARY_TYPES):
                return type(t)(walk(t.left), walk(t.right))
            case _:
                return t

    return walk(schema.lhs), walk(schema.rhs)


def _fresh_names(schema: Schema, count: int) -> list[str]:
    taken = set(schema.atoms)
    out = []
    i = 1
    while len(out) < count:
        name = f"v{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def check_schema(schema: Schema, mode: Mode, strategy: str = "fresh_atoms",
                 k: int = 2, budget: int = DEFAULT_BUDGET) -> CheckResult:
    """Check semantic validity of a schema under the given mode.

    strategy "fresh_atoms" substitutes pairwise-distinct new atoms, assigned
    in variable name order; "exhaustive" additionally substitutes every
    tuple of mem-basic forms over k shared fresh atoms.  The tuple sweep is
    truncated at `budget` instantiations; a truncated pass is still reported
    as exhaustive but carries budget_exceeded=True.
    """
    if schema.uses_undef and not mode.three_valued:
        raise SignatureError(
            f"schema {schema.name} uses U but the mode is two-valued")
    if strategy not in ("fresh_atoms", "exhaustive"):
        raise ValueError(f"unknown strategy {strategy!r}")

    variables = schema.variables
    sub = {v: Atom(a) for v, a in zip(variables, _fresh_names(schema, len(variables)))}
    lhs_t, rhs_t = instantiate(schema, sub)
    lhs_nf = normal_form(lhs_t, mode)
    rhs_nf = normal_form(rhs_t, mode)
    if lhs_nf != rhs_nf:
        return CheckResult(Verdict.REFUTED_FRESH_ATOMS, witness=sub,
                           lhs_nf=lhs_nf, rhs_nf=rhs_nf)
    if strategy == "fresh_atoms":
        return CheckResult(Verdict.PASSED_FRESH_ATOMS)
    return _exhaustive(schema, mode, k, budget)


# ---------------------------------------------------------------------------
# Exhaustive sweep
# ---------------------------------------------------------------------------

class _Forest:
    """Hash-consed decision trees with memoized normalization steps.

    Trees are integer ids; leaves get ids 0..2.  All operations cache on
    ids, so repeated instantiations of a schema share nearly all work and,
    under memorising congruence, every value stays inside the finite
    universe of mem-basic forms over the sweep alphabet.
    """

    # Free-mode sweeps can produce millions of distinct instantiations;
    # beyond this many memo entries, results are recomputed instead of
    # stored (the per-subtree caches underneath keep that cheap).
    CACHE_MAX = 3_000_000

    def __init__(self):
        self._ids: dict[tuple, int] = {}
        self._rev: list[tuple] = []
        self.T = self._put(("leaf", "T"))
        self.F = self._put(("leaf", "F"))
        self.U = self._put(("leaf", "U"))
        self._subst: dict[tuple[int, int, int], int] = {}
        self._mf: dict[int, int] = {}
        self._reduce: dict[tuple[int, str, bool], int] = {}
        self._combine_mem: dict[tuple[int, int, int], int] = {}

    def _put(self, key: tuple) -> int:
        i = self._ids.get(key)
        if i is None:
            i = len(self._rev)
            self._ids[key] = i
            self._rev.append(key)
        return i

    def node(self, atom: str, on_true: int, on_false: int) -> int:
        return self._put((atom, on_true, on_false))

    def from_tree(self, tree: BasicForm) -> int:
        if isinstance(tree, Leaf):
            return {"T": self.T, "F": self.F, "U": self.U}[tree.value]
        return self.node(tree.atom, self.from_tree(tree.on_true),
                         self.from_tree(tree.on_false))

    def to_tree(self, i: int) -> BasicForm:
        key = self._rev[i]
        if key[0] == "leaf":
            return Leaf(key[1])
        return Node(key[0], self.to_tree(key[1]), self.to_tree(key[2]))

    def subst(self, p: int, q: int, r: int) -> int:
        if p == self.T:
            return q
        if p == self.F:
            return r
        if p == self.U:
            return p
        key = (p, q, r)
        out = self._subst.get(key)
        if out is None:
            atom, pt, pf = self._rev[p]
            out = self.node(atom, self.subst(pt, q, r), self.subst(pf, q, r))
            if len(self._subst) < self.CACHE_MAX:
                self._subst[key] = out
        return out

    def reduce(self, p: int, atom: str, assume: bool) -> int:
        key = self._rev[p]
        if key[0] == "leaf":
            return p
        ck = (p, atom, assume)
        out = self._reduce.get(ck)
        if out is None:
            if key[0] == atom:
                out = self.reduce(key[1] if assume else key[2], atom, assume)
            else:
                out = self.node(key[0], self.reduce(key[1], atom, assume),
                                self.reduce(key[2], atom, assume))
            self._reduce[ck] = out
        return out

    def mf(self, p: int) -> int:
        key = self._rev[p]
        if key[0] == "leaf":
            return p
        out = self._mf.get(p)
        if out is None:
            atom = key[0]
            out = self.node(atom, self.mf(self.reduce(key[1], atom, True)),
                            self.mf(self.reduce(key[2], atom, False)))
            self._mf[p] = out
        return out

    def combine_free(self, c: int, t: int, e: int) -> int:
        """Basic form of (t <| c |> e), all arguments normalized."""
        v = self.subst(c, t, e)
        if len(self._subst) < self.CACHE_MAX:
            self._subst[(c, t, e)] = v
        return v

    def combine_mem(self, c: int, t: int, e: int) -> int:
        """Mem-basic form of (t <| c |> e), all arguments normalized."""
        v = self.mf(self.subst(c, t, e))
        if len(self._combine_mem) < self.CACHE_MAX:
            self._combine_mem[(c, t, e)] = v
        return v


_FOREST = _Forest()

# Fixed multipliers for the per-variable domain permutations of a truncated
# sweep; chosen coprime to the domain size at use.
_STRIDES = (1, 29, 41, 53, 67, 79, 97, 113)


def _permutation(j: int, size: int) -> list[int]:
    a = _STRIDES[j % len(_STRIDES)]
    while gcd(a, size) != 1:
        a += 1
    b = (7 * j + 3) % size
    return [(a * i + b) % size for i in range(size)]


def _compile(term: Term, var_order: list[str], forest: _Forest,
             nodes: list[tuple], index: dict[Term, int]) -> int:
    """Flatten a core term into a shared postfix node list."""
    if term in index:
        return index[term]
    match term:
        case Const(v):
            op = ("const", {"T": forest.T, "F": forest.F, "U": forest.U}[v])
        case Atom(name):
            op = ("const", forest.node(name, forest.T, forest.F))
        case Var(name):
            op = ("var", var_order.index(name))
        case Cond(then, cond, orelse):
            op = ("cond", _compile(cond, var_order, forest, nodes, index),
                  _compile(then, var_order, forest, nodes, index),
                  _compile(orelse, var_order, forest, nodes, index))
        case _:
            raise AssertionError("non-core term reached the sweep compiler")
    idx = len(nodes)
    nodes.append(op)
    index[term] = idx
    return idx


def _exhaustive(schema: Schema, mode: Mode, k: int, budget: int) -> CheckResult:
    forest = _FOREST
    variables = list(schema.variables)
    nvars = len(variables)
    alphabet = tuple(_fresh_names(schema, k))
    domain = [forest.from_tree(t)
              for t in enumerate_mem_basic(alphabet, mode.three_valued)]
    mem = mode.congruence == "mem"
    cache = forest._combine_mem if mem else forest._subst
    slow = forest.combine_mem if mem else forest.combine_free

    nodes: list[tuple] = []
    index: dict[Term, int] = {}
    top_l = _compile(to_core(schema.lhs), variables, forest, nodes, index)
    top_r = _compile(to_core(schema.rhs), variables, forest, nodes, index)

    # Split nodes by the innermost variable each one mentions: a node is
    # recomputed exactly when that loop level advances.  The node list is
    # already in dependency order, which the stable split preserves.
    var_level: list[int] = []
    var_sets: list[list[int]] = [[] for _ in range(nvars)]
    conds: list[list[tuple[int, int, int, int]]] = [[] for _ in range(nvars)]
    slots = [0] * len(nodes)
    for i, op in enumerate(nodes):
        if op[0] == "const":
            var_level.append(-1)
            slots[i] = op[1]
        elif op[0] == "var":
            var_level.append(op[1])
            var_sets[op[1]].append(i)
        else:
            lvl = max(var_level[c] for c in op[1:])
            var_level.append(lvl)
            if lvl < 0:
                slots[i] = slow(slots[op[1]], slots[op[2]], slots[op[3]])
            else:
                conds[lvl].append((i, op[1], op[2], op[3]))

    size = len(domain)
    perms = [_permutation(j, size) for j in range(nvars)]
    space = size ** nvars
    limit = min(space, budget)
    checked = 0
    bad_env: list[int] | None = None
    env = [0] * nvars
    cache_get = cache.get

    def run_level(j: int) -> bool:
        """Loop one variable; returns True to stop (refuted or budget hit)."""
        nonlocal checked, bad_env
        var_slots = var_sets[j]
        level_conds = conds[j]
        last = j == nvars - 1
        for digit in perms[j]:
            env[j] = digit
            value = domain[digit]
            for i in var_slots:
                slots[i] = value
            for i, a, b, c in level_conds:
                key = (slots[a], slots[b], slots[c])
                v = cache_get(key)
                slots[i] = v if v is not None else slow(*key)
            if last:
                checked += 1
                if slots[top_l] != slots[top_r]:
                    bad_env = env.copy()
                    return True
                if checked >= limit:
                    return True
            elif run_level(j + 1):
                return True
        return False

    if nvars == 0:
        checked = 1
        if slots[top_l] != slots[top_r]:
            bad_env = []
    else:
        run_level(0)

    if bad_env is not None:
        sub = {v: render(forest.to_tree(domain[d]))
               for v, d in zip(variables, bad_env)}
        lhs_t, rhs_t = instantiate(schema, sub)
        return CheckResult(Verdict.REFUTED_EXHAUSTIVE, count=checked, k=k,
                           witness=sub,
                           lhs_nf=normal_form(lhs_t, mode),
                           rhs_nf=normal_form(rhs_t, mode))
    return CheckResult(Verdict.PASSED_EXHAUSTIVE, count=checked, k=k,
                       budget_exceeded=space > budget)


# ---------------------------------------------------------------------------
# Builtin tables
# ---------------------------------------------------------------------------

def _s(name: str, lhs: str, rhs: str, mode: Mode | None = None) -> Schema:
    return Schema(name, parse(lhs), parse(rhs), mode)


def _table(name: str, mode: Mode, schemas: list[Schema],
           expect_refuted: bool = False) -> SchemaTable:
    return SchemaTable(name, mode, tuple(schemas), expect_refuted)


def builtin_tables() -> tuple[SchemaTable, ...]:
    """Every axiom table and derived identity, with its intended mode."""
    return (
        _table("CP", FREE, [
            _s("CP1", "X <| T |> Y", "X"),
            _s("CP2", "X <| F |> Y", "Y"),
            _s("CP3", "T <| X |> F", "X"),
            _s("CP4", "X <| (Y <| Z |> P) |> Q",
               "(X <| Y |> Q) <| Z |> (X <| P |> Q)"),
            _s("CondPrime", "!(X <| Y |> !X)", "X <| !Y |> !X"),
        ]),
        _table("CPmem", MEM, [
            _s("CPmem", "X <| Y |> (Z <| P |> (Q <| Y |> R))",
               "X <| Y |> (Z <| P |> R)"),
            _s("mem1", "(X <| Y |> (Z <| P |> Q)) <| P |> R",
               "(X <| Y |> Z) <| P |> R"),
            _s("con1", "(X <| Y |> Z) <| Y |> P", "X <| Y |> P"),
            _s("con2", "X <| Y |> (Z <| Y |> P)", "X <| Y |> P"),
        ]),
        _table("EqFSCL", FREE, [
            _s("Neg", "F", "!T"),
            _s("Or", "X || Y", "!(!X && !Y)"),
            _s("Tand", "T && X", "X"),
            _s("F3", "!!X", "X"),
            _s("F5", "X && T", "X"),
            _s("F6", "F && X", "F"),
            _s("F7", "(X && Y) && Z", "X && (Y && Z)"),
            _s("F8", "!X && F", "X && F"),
            _s("F9", "(X && F) || Y", "(X || T) && Y"),
            _s("F10", "(X && Y) || (Z && F)",
               "(X || (Z && F)) && (Y || (Z && F))"),
        ]),
        _table("EqMSCL", MEM, [
            _s("Neg", "F", "!T"),
            _s("Or", "X || Y", "!(!X && !Y)"),
            _s("Tand", "T && X", "X"),
            _s("Abs", "X && (X || Y)", "X"),
            _s("Mem", "(X || Y) && Z", "(!X && (Y && Z)) || (X && Z)"),
        ]),
        _table("EqMSCL-consequences", MEM, [
            _s("F3", "!!X", "X"),
            _s("F5", "X && T", "X"),
            _s("F6", "F && X", "F"),
            _s("F7", "(X && Y) && Z", "X && (Y && Z)"),
            _s("F8", "!X && F", "X && F"),
            _s("F9", "(X && F) || Y", "(X || T) && Y"),
            _s("F10", "(X && Y) || (Z && F)",
               "(X || (Z && F)) && (Y || (Z && F))"),
            _s("C1", "X && (Y && X)", "X && Y"),
            _s("C2", "X && (Y && !X)", "X && (Y && F)"),
            _s("M1", "(X && Y) || (!X && Z)", "(!X || Y) && (X || Z)"),
            _s("M2", "(X && Y) || (!X && Z)", "(!X && Z) || (X && Y)"),
            _s("M3", "((X && Y) || (!X && Z)) && P",
               "(X && (Y && P)) || (!X && (Z && P))"),
            _s("Dis", "X && (Y || Z)", "(X && Y) || (X && Z)"),
            _s("CondByAndOr", "(X && Y) || (!X && Z)", "Y <| X |> Z"),
            _s("CondAlt", "(X && Y) || (!X && Z)", "(X || Z) && (!X || Y)"),
            _s("M3dual", "((X && Y) || (!X && Z)) || P",
               "(X && (Y || P)) || (!X && (Z || P))"),
        ]),
        _table("EqMSCL-lI", MEM, [
            _s("Or", "X || Y", "!(!X && !Y)"),
            _s("Abs", "X && (X || Y)", "X"),
            _s("Assoc", "(X && Y) && Z", "X && (Y && Z)"),
            _s("Tx", "T <-> X", "X"),
            _s("xF", "X <-> F", "!X"),
            _s("AndIff", "(X && Y) <-> Z", "(X && (Y <-> Z)) || (!X && !Z)"),
        ]),
        _table("EqMSCL-lI-consequences", MEM, [
            _s("IffByCond", "X <-> Y", "Y <| X |> (F <| Y |> T)"),
            _s("IffByAndOr", "X <-> Y", "(X && Y) || (!X && !Y)"),
            _s("TIffSym", "T <-> X", "X <-> T"),
            _s("FIffSym", "F <-> X", "X <-> F"),
            _s("NotIff", "!(X <-> Y)", "X <-> !Y"),
            _s("NotNotIff", "!X <-> !Y", "X <-> Y"),
            _s("OrTIff", "(X || T) <-> Y", "(X || T) && Y"),
            _s("IffAssoc", "(X <-> Y) <-> Z", "X <-> (Y <-> Z)"),
            _s("IffAndF", "(X <-> Y) && (Z && F)",
               "(X || (!Y && (Z && F))) && (Y && (Z && F))"),
            _s("XorByCond", "X ^^ Y", "(F <| Y |> T) <| X |> Y"),
            _s("XorDef", "X ^^ Y", "X <-> !Y"),
            _s("XorNot", "!(X ^^ Y)", "X <-> Y"),
            _s("XorByAndOr", "X ^^ Y", "(X && !Y) || (!X && Y)"),
            _s("XorF", "F ^^ X", "X"),
            _s("XorT", "X ^^ T", "!X"),
            _s("OrXor", "(X || Y) ^^ Z", "(X || (Y ^^ Z)) && (!X || !Z)"),
        ]),
        _table("EqMSCL-lN", MEM, [
            _s("N1", "F", "T ~& T"),
            _s("N2", "(T ~& X) ~& (X ~& Y)", "X"),
            _s("N3", "(X ~& (Y ~& T)) ~& Z",
               "((X ~& ((Y ~& Z) ~& T)) ~& ((X ~& T) ~& Z)) ~& T"),
        ]),
        _table("EqMSCL-lN-consequences", MEM, [
            _s("NandByNotAnd", "X ~& Y", "!(X && Y)"),
            _s("NandByCond", "X ~& Y", "(F <| Y |> T) <| X |> T"),
            _s("NotByNand", "!X", "X ~& T"),
            _s("AndByNand", "X && Y", "(X ~& Y) ~& T"),
            _s("OrByNand", "X || Y", "(X ~& T) ~& (Y ~& T)"),
            _s("DoublePrime", "(X ~& T) ~& T", "X"),
            _s("TNandSym", "T ~& X", "X ~& T"),
            _s("NandAbs", "X ~& ((X ~& T) ~& Y)", "X ~& T"),
            _s("b1", "((X ~& Y) ~& ((X ~& T) ~& Z)) ~& P",
               "(X ~& (Y ~& P)) ~& ((X ~& T) ~& (Z ~& P))"),
            _s("b2", "F ~& X", "T"),
            _s("b3", "(X ~& T) ~& ((X ~& T) ~& F)", "X"),
            _s("b4", "X ~& ((X ~& Y) ~& ((X ~& T) ~& Z))", "X ~& Y"),
            _s("b5", "X ~& ((Y ~& Z) ~& ((Y ~& T) ~& P))",
               "X ~& ((Y ~& (X ~& (Z ~& T))) ~& ((Y ~& T) ~& (X ~& (P ~& T))))"),
            _s("CondChar1", "Y <| X |> Z", "(X ~& Y) ~& ((X ~& T) ~& Z)"),
            _s("CondChar2", "Y <| X |> Z", "((X ~& T) ~& Z) ~& (X ~& Y)"),
            _s("CondChar3", "Y <| X |> Z",
               "(((X ~& T) ~& (Z ~& T)) ~& (X ~& (Y ~& T))) ~& T"),
            _s("CondChar4", "Y <| X |> Z",
               "((X ~& (Y ~& T)) ~& ((X ~& T) ~& (Z ~& T))) ~& T"),
            _s("NandSym", "(X ~& Y) ~& ((X ~& T) ~& Z)",
               "((X ~& T) ~& Z) ~& (X ~& Y)"),
            _s("NandFlip", "(X ~& Y) ~& ((X ~& T) ~& Z)",
               "(((X ~& T) ~& (Z ~& T)) ~& (X ~& (Y ~& T))) ~& T"),
            _s("NorByNand", "X ~| Y", "((X ~& T) ~& (Y ~& T)) ~& T"),
            _s("NorByCond", "X ~| Y", "F <| X |> (F <| Y |> T)"),
        ]),
        _table("U", MEM3, [
            _s("CP-U", "X <| U |> Y", "U"),
            _s("Und", "!U", "U"),
            _s("NU", "U ~& X", "U"),
        ]),
        _table("U-consequences", MEM3, [
            _s("UAnd", "U && X", "U"),
            _s("UOr", "U || X", "U"),
            _s("UIff", "U <-> X", "U"),
            _s("FAndU", "F && U", "F"),
            _s("FNandU", "F ~& U", "T"),
        ]),
        _table("negative", MEM, [
            _s("AndComm", "X && Y", "Y && X"),
            _s("OrT", "X || T", "T"),
            _s("C1free", "X && (Y && X)", "X && Y", mode=FREE),
        ], expect_refuted=True),
    )


def table_by_name(name: str) -> SchemaTable:
    for table in builtin_tables():
        if table.name == name:
            return table
    raise KeyError(f"no builtin table named {name!r}")


def check_table(table: SchemaTable, strategy: str = "fresh_atoms", k: int = 2,
                budget: int = DEFAULT_BUDGET,
                three_valued: bool | None = None) -> list[tuple[Schema, CheckResult]]:
    """Run check_schema over a whole table.

    three_valued=True upgrades the table's mode, admitting U leaves in the
    exhaustive domain; it is never downgraded below what the table needs.
    """
    out = []
    for schema in table.schemas:
        mode = table.mode_for(schema)
        if three_valued:
            mode = Mode(mode.congruence, three_valued=True)
        out.append((schema, check_schema(schema, mode, strategy, k, budget)))
    return out
