"""Interface automata: refinement, composition with pruning, and the
equivalence with interface hypercontracts."""

from __future__ import annotations

import random

import pytest

from conftest import lang_of
from hyperc.automata import compose, compose_detailed, language, make, refines, to_contract
from hyperc.contracts import Incompatible, from_s
from hyperc.contracts import compose as contract_compose
from hyperc.contracts import refines as contract_refines
from hyperc.errors import SignatureMismatch, ValidationError
from hyperc.lang import Alphabet, IoSignature, is_subset
from hyperc.oracle import BoundedCheckConfig, random_ia

AB1 = Alphabet(("a",))
IO_OUT_A = IoSignature(AB1, frozenset())
IO_IN_A = IoSignature(AB1, frozenset({"a"}))


@pytest.fixture
def io_i(ab):
    return IoSignature(ab, frozenset({"i"}))


@pytest.fixture
def iloop(io_i):
    return make(io_i, ["p"], "p", {("p", "i"): "p"})


@pytest.fixture
def ioloop(io_i):
    return make(io_i, ["q"], "q", {("q", "i"): "q", ("q", "o"): "q"})


class TestConstruction:
    def test_rejects_nondeterminism(self, io_i):
        with pytest.raises(ValidationError, match="nondeterministic"):
            make(io_i, ["p", "q"], "p", [("p", "i", "p"), ("p", "i", "q")])

    def test_unreachable_states_trimmed(self, io_i):
        a = make(io_i, ["p", "stray"], "p", {})
        assert a.state_names == ("p",)

    def test_unknown_initial(self, io_i):
        with pytest.raises(ValidationError, match="unknown initial"):
            make(io_i, ["p"], "zz", {})


class TestLanguage:
    def test_single_state_no_transitions(self, ab, io_i):
        assert language(make(io_i, ["p"], "p", {})) == lang_of(ab, "")

    def test_one_step(self, ab, io_i):
        a = make(io_i, ["p0", "p1"], "p0", {("p0", "i"): "p1"})
        assert language(a) == lang_of(ab, "", "i")

    def test_self_loop(self, ab, io_i, iloop, istar):
        assert language(iloop) == istar

    def test_prefix_closed_always(self, ab, io_i):
        cfg = BoundedCheckConfig(random_seed=41, num_cases=60, max_states=5)
        rng = random.Random(cfg.random_seed)
        from hyperc.lang import is_prefix_closed

        for _ in range(cfg.num_cases):
            assert is_prefix_closed(language(random_ia(rng, io_i, cfg.max_states)))


class TestRefines:
    def test_reflexive(self, iloop):
        assert refines(iloop, iloop)

    def test_iloop_vs_ioloop(self, iloop, ioloop):
        assert refines(iloop, ioloop)
        assert not refines(ioloop, iloop)

    def test_signature_mismatch(self, ab, iloop):
        other = make(IoSignature(ab, frozenset({"o"})), ["p"], "p", {})
        with pytest.raises(SignatureMismatch):
            refines(iloop, other)

    def test_transitive_spot(self, ab, io_i):
        cfg = BoundedCheckConfig(random_seed=43, num_cases=80, max_states=4)
        rng = random.Random(cfg.random_seed)
        hits = 0
        for _ in range(cfg.num_cases):
            a1 = random_ia(rng, io_i, cfg.max_states)
            a2 = random_ia(rng, io_i, cfg.max_states)
            a3 = random_ia(rng, io_i, cfg.max_states)
            if refines(a1, a2) and refines(a2, a3):
                hits += 1
                assert refines(a1, a3)
        assert hits >= 3


class TestCompose:
    def test_benign_handshake(self):
        a1 = make(IO_OUT_A, ["p0", "p1"], "p0", {("p0", "a"): "p1"})
        a2 = make(IO_IN_A, ["q0"], "q0", {("q0", "a"): "q0"})
        result, pruned = compose_detailed(a1, a2)
        assert not isinstance(result, Incompatible)
        assert language(result) == lang_of(AB1, "", "a")
        assert result.state_names == ("(p0,q0)", "(p1,q0)")
        assert pruned == ()

    def test_unaccepted_output_is_incompatible(self):
        a1 = make(IO_OUT_A, ["p0", "p1"], "p0", {("p0", "a"): "p1"})
        a2 = make(IO_IN_A, ["q0"], "q0", {})
        result, pruned = compose_detailed(a1, a2)
        assert isinstance(result, Incompatible)
        assert pruned == ("(p0,q0)",)

    def test_universal_receiver_preserves_contract(self):
        a1 = make(IO_OUT_A, ["p0", "p1"], "p0", {("p0", "a"): "p1"})
        receiver = make(IO_IN_A, ["u"], "u", {("u", "a"): "u"})
        composite = compose(a1, receiver)
        assert to_contract(composite) == from_s(language(a1), IoSignature(AB1, frozenset()))

    def test_signature_precondition(self, ab):
        io1 = IoSignature(ab, frozenset({"i"}))
        a1 = make(io1, ["p"], "p", {})
        a2 = make(io1, ["q"], "q", {})
        with pytest.raises(SignatureMismatch, match="shared outputs"):
            compose(a1, a2)

    def test_backward_pruning_cascades(self, ab):
        # r0 -o!-> r1 -o!-> r2 where the partner only accepts the first o:
        # the failure at (r1,s1) invalidates (r0,s0) through the output edge.
        sender = make(
            IoSignature(ab, frozenset({"i"})), ["r0", "r1", "r2"], "r0",
            {("r0", "o"): "r1", ("r1", "o"): "r2"},
        )
        listener = make(
            IoSignature(ab, frozenset({"o"})), ["s0", "s1"], "s0", {("s0", "o"): "s1"}
        )
        result, pruned = compose_detailed(sender, listener)
        assert isinstance(result, Incompatible)
        assert pruned == ("(r0,s0)", "(r1,s1)")


class TestContractEquivalence:
    def test_refinement_biconditional(self, ab):
        cfg = BoundedCheckConfig(random_seed=47, num_cases=80, max_states=4)
        rng = random.Random(cfg.random_seed)
        io = IoSignature(ab, frozenset({"i"}))
        for _ in range(cfg.num_cases):
            a1 = random_ia(rng, io, cfg.max_states)
            a2 = random_ia(rng, io, cfg.max_states)
            assert refines(a1, a2) == contract_refines(to_contract(a1), to_contract(a2))

    def test_composition_commutes_with_semantics(self, ab):
        cfg = BoundedCheckConfig(random_seed=48, num_cases=80, max_states=4)
        rng = random.Random(cfg.random_seed)
        io1 = IoSignature(ab, frozenset({"i"}))
        io2 = IoSignature(ab, frozenset({"o"}))
        agree = 0
        for _ in range(cfg.num_cases):
            a1 = random_ia(rng, io1, cfg.max_states)
            a2 = random_ia(rng, io2, cfg.max_states)
            via_ia = compose(a1, a2)
            via_contract = contract_compose(to_contract(a1), to_contract(a2))
            assert isinstance(via_ia, Incompatible) == isinstance(via_contract, Incompatible)
            if not isinstance(via_ia, Incompatible):
                agree += 1
                assert to_contract(via_ia) == via_contract
        assert agree >= 10

    def test_refinement_gives_language_inclusions(self, ab):
        cfg = BoundedCheckConfig(random_seed=49, num_cases=60, max_states=4)
        rng = random.Random(cfg.random_seed)
        io = IoSignature(ab, frozenset({"i"}))
        for _ in range(cfg.num_cases):
            a1 = random_ia(rng, io, cfg.max_states)
            a2 = random_ia(rng, io, cfg.max_states)
            if refines(a1, a2):
                c1, c2 = to_contract(a1), to_contract(a2)
                assert is_subset(c1.m, c2.m) and is_subset(c2.e, c1.e)
