import random

import pytest

from conftest import all_valuations, random_term
from sclc.congruence import MEM3, equiv, trace_eval
from sclc.errors import InvariantError, OpenTermError, UnsupportedConnective
from sclc.nandform import (
    NNode, assume, check_munbf, complement_leaves, from_munbf, is_munbf,
    nand_nf, render_nand, to_munbf, to_json,
)
from sclc.normalform import (
    LEAF_F, LEAF_T, LEAF_U, Node, enumerate_mem_basic, mbf, mf, reduce,
)
from sclc.syntax import Atom, And, Nand, TT, UU, Var, atoms_of, parse
from sclc.translate import decode_nand, to_core

a, b = "a", "b"


class TestAssume:
    def test_undef_leaf(self):
        assert assume(LEAF_U, a, True) == LEAF_U

    def test_matching_node_true(self):
        p1, p2 = NNode(b, LEAF_T, LEAF_F), LEAF_F
        assert assume(NNode(a, p1, p2), a, True) == p1

    def test_recursive_then_match(self):
        tree = NNode(a, NNode(b, LEAF_T, LEAF_F), LEAF_U)
        assert assume(tree, b, False) == NNode(a, LEAF_F, LEAF_U)

    def test_result_drops_atom(self):
        forms = enumerate_mem_basic(("v1", "v2"), three_valued=True)
        for f in forms[:100]:
            q = to_munbf(f)
            for atom in ("v1", "v2"):
                for value in (True, False):
                    out = assume(q, atom, value)
                    assert is_munbf(out)
                    assert atom not in atoms_of(render_nand(out))


class TestNandNf:
    def test_false_left(self):
        assert nand_nf(Nand(parse("F"), Atom("a"))) == LEAF_T

    def test_undef_left(self):
        assert nand_nf(Nand(UU, Atom("a"))) == LEAF_U

    def test_negated_atom(self):
        assert nand_nf(Nand(Atom("a"), TT)) == NNode(a, LEAF_F, LEAF_T)

    def test_negated_atom_against_oracle(self):
        got = nand_nf(Nand(Atom("a"), TT))
        for v in all_valuations(["a"]):
            assert trace_eval(render_nand(got), v) == \
                trace_eval(Nand(Atom("a"), TT), v)

    def test_atom(self):
        assert nand_nf(Atom("a")) == NNode(a, LEAF_T, LEAF_F)

    def test_unsupported(self):
        with pytest.raises(UnsupportedConnective):
            nand_nf(And(Atom("a"), Atom("b")))

    def test_open(self):
        with pytest.raises(OpenTermError):
            nand_nf(Nand(Var("X"), TT))

    def test_output_valid(self):
        rng = random.Random(21)
        for _ in range(200):
            t = random_term(rng, max_depth=5, connectives="nand", undef=True)
            assert is_munbf(nand_nf(t))


class TestBijection:
    def test_leaves(self):
        assert to_munbf(LEAF_T) == LEAF_T
        assert from_munbf(LEAF_U).tree == LEAF_U

    def test_single_node(self):
        assert to_munbf(Node(a, LEAF_T, LEAF_F)) == NNode(a, LEAF_T, LEAF_F)
        assert from_munbf(NNode(a, LEAF_T, LEAF_F)).tree == Node(a, LEAF_T, LEAF_F)

    def test_recursive(self):
        assert to_munbf(Node(a, Node(b, LEAF_F, LEAF_F), LEAF_F)) == \
            NNode(a, NNode(b, LEAF_F, LEAF_F), LEAF_F)
        assert from_munbf(NNode(b, LEAF_F, NNode(a, LEAF_T, LEAF_U))).tree == \
            Node(b, LEAF_F, Node(a, LEAF_T, LEAF_U))

    def test_identity_both_ways_on_all_291(self):
        forms = enumerate_mem_basic(("v1", "v2"), three_valued=True)
        assert len(forms) == 291
        for f in forms:
            q = to_munbf(f)
            assert is_munbf(q)
            assert from_munbf(q).tree == f
            assert to_munbf(from_munbf(q)) == q


class TestRouteCommutation:
    def test_exact_equality(self):
        rng = random.Random(22)
        for _ in range(300):
            t = random_term(rng, max_depth=5, connectives="nand", undef=True)
            via_cond = to_munbf(mbf(to_core(decode_nand(t))))
            assert nand_nf(t) == via_cond

    def test_assume_is_image_of_reduce(self):
        forms = enumerate_mem_basic(("v1", "v2"), three_valued=True)
        for f in forms:
            q = to_munbf(f)
            for atom in ("v1", "v2"):
                assert to_munbf(mf(reduce(f, atom, True))) == assume(q, atom, True)
                assert to_munbf(mf(reduce(f, atom, False))) == assume(q, atom, False)


class TestSemanticIdentities:
    def test_left_absorption_after_assume(self):
        # a ~& P is equivalent to a ~& (P with a assumed true); dually for
        # the primed atom and assumed false.
        forms = enumerate_mem_basic(("v1", "v2"), three_valued=True)
        v1 = Atom("v1")
        for f in forms[::7]:
            q = to_munbf(f)
            assert equiv(Nand(v1, render_nand(q)),
                         Nand(v1, render_nand(assume(q, "v1", True))), MEM3)
            assert equiv(Nand(Nand(v1, TT), render_nand(q)),
                         Nand(Nand(v1, TT), render_nand(assume(q, "v1", False))),
                         MEM3)


class TestHelpers:
    def test_complement_leaves(self):
        tree = NNode(a, LEAF_T, NNode(b, LEAF_U, LEAF_F))
        assert complement_leaves(tree) == NNode(a, LEAF_F, NNode(b, LEAF_U, LEAF_T))
        assert complement_leaves(complement_leaves(tree)) == tree

    def test_is_munbf_rejects_repeat(self):
        assert not is_munbf(NNode(a, NNode(a, LEAF_T, LEAF_F), LEAF_F))

    def test_check_munbf(self):
        with pytest.raises(InvariantError):
            check_munbf(NNode(a, NNode(a, LEAF_T, LEAF_F), LEAF_F))

    def test_json(self):
        assert to_json(NNode(a, LEAF_T, LEAF_U)) == {
            "nnode": "a", "t": {"leaf": "T"}, "f": {"leaf": "U"}}

    def test_render_shape(self):
        got = render_nand(NNode(a, LEAF_T, LEAF_F))
        assert got == Nand(Nand(Atom("a"), parse("T")),
                           Nand(Nand(Atom("a"), TT), parse("F")))
