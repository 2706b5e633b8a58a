"""JSON document formats for every value kind, with canonical emission.

Emitted documents are fully canonical: automata are minimized and
BFS-renumbered, keys are sorted, and list orders are fixed, so identical
inputs always serialize to identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .automata import InterfaceAutomaton
from .behavioral import (
    AgContract,
    BehavioralHypercontract,
    Component,
    ConicCompset,
    Universe,
)
from .contracts import InterfaceHypercontract
from .errors import DocumentError, HypercError
from .lang import Alphabet, IoSignature, RegularLanguage
from .receptive import ReceptiveLanguage


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def doc_hash(doc: dict) -> str:
    return hashlib.sha256(dumps(doc).encode("utf-8")).hexdigest()


def _require(doc: dict, key: str, kind: type, what: str):
    if key not in doc:
        raise DocumentError(f"{what} document lacks {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise DocumentError(f"{what} {key!r} must be a {kind.__name__}")
    return value


def _string_list(doc: dict, key: str, what: str) -> list[str]:
    value = _require(doc, key, list, what)
    if not all(isinstance(x, str) for x in value):
        raise DocumentError(f"{what} {key!r} must list strings")
    return value


# -- languages -----------------------------------------------------------------


def parse_alphabet(doc: dict, what: str = "language") -> Alphabet:
    try:
        return Alphabet(tuple(_string_list(doc, "alphabet", what)))
    except HypercError as err:
        raise DocumentError(str(err)) from None


def parse_language(doc: dict, auto_trap: bool = True) -> RegularLanguage:
    alphabet = parse_alphabet(doc)
    states = _string_list(doc, "states", "language")
    if not states or len(set(states)) != len(states):
        raise DocumentError("states must be a nonempty list of distinct names")
    pos = {s: k for k, s in enumerate(states)}
    initial = _require(doc, "initial", str, "language")
    if initial not in pos:
        raise DocumentError(f"unknown initial state {initial!r}")
    accepting = _string_list(doc, "accepting", "language")
    for s in accepting:
        if s not in pos:
            raise DocumentError(f"unknown accepting state {s!r}")
    rows: list[list[int | None]] = [[None] * len(alphabet) for _ in states]
    for entry in _require(doc, "transitions", list, "language"):
        if not (isinstance(entry, list) and len(entry) == 3 and all(isinstance(x, str) for x in entry)):
            raise DocumentError(f"transition {entry!r} must be the triple [state, symbol, state]")
        src, sym, dst = entry
        if src not in pos or dst not in pos:
            raise DocumentError(f"unknown state in transition {entry!r}")
        if sym not in alphabet:
            raise DocumentError(f"unknown symbol {sym!r}")
        k = alphabet.index(sym)
        if rows[pos[src]][k] is not None:
            raise DocumentError(f"nondeterministic transitions from {src!r} on {sym!r}")
        rows[pos[src]][k] = pos[dst]
    n = len(states)
    partial = any(t is None for row in rows for t in row)
    if partial and not auto_trap:
        raise DocumentError("partial transition function (auto-trap disabled)")
    sink = n
    delta = tuple(
        tuple(sink if t is None else t for t in row) for row in rows
    )
    if partial:
        delta = delta + ((sink,) * len(alphabet),)
    return RegularLanguage(alphabet, pos[initial], frozenset(pos[s] for s in accepting), delta)


def language_doc(lang: RegularLanguage) -> dict:
    c = lang.canonical()
    names = [f"s{k}" for k in range(c.n_states)]
    return {
        "alphabet": list(c.alphabet.symbols),
        "states": names,
        "initial": names[0],
        "accepting": [names[q] for q in sorted(c.accepting)],
        "transitions": [
            [names[q], sym, names[c.delta[q][k]]]
            for q in range(c.n_states)
            for k, sym in enumerate(c.alphabet.symbols)
        ],
    }


def _inputs_of(doc: dict, alphabet: Alphabet, what: str) -> frozenset[str]:
    inputs = _string_list(doc, "inputs", what)
    for s in inputs:
        if s not in alphabet:
            raise DocumentError(f"unknown input symbol {s!r}")
    return frozenset(inputs)


def parse_receptive(doc: dict, auto_trap: bool = True) -> ReceptiveLanguage:
    lang = parse_language(doc, auto_trap)
    io = IoSignature(lang.alphabet, _inputs_of(doc, lang.alphabet, "receptive language"))
    return ReceptiveLanguage(lang, io)


def _sorted_symbols(io: IoSignature, symbols: frozenset[str]) -> list[str]:
    return [s for s in io.alphabet.symbols if s in symbols]


def receptive_doc(r: ReceptiveLanguage) -> dict:
    doc = language_doc(r.lang)
    doc["inputs"] = _sorted_symbols(r.io, r.io.inputs)
    return doc


# -- interface hypercontracts ------------------------------------------------------


def parse_contract(doc: dict, auto_trap: bool = True) -> InterfaceHypercontract:
    s_doc = _require(doc, "S", dict, "contract")
    s = parse_language(s_doc, auto_trap)
    io = IoSignature(s.alphabet, _inputs_of(doc, s.alphabet, "contract"))
    return InterfaceHypercontract(s, io)


def contract_doc(c: InterfaceHypercontract, derived: bool = True) -> dict:
    doc = {
        "S": language_doc(c.s),
        "inputs": _sorted_symbols(c.io, c.io.inputs),
    }
    if derived:
        doc["E"] = language_doc(c.e)
        doc["M"] = language_doc(c.m)
    return doc


# -- interface automata --------------------------------------------------------------


def parse_ia(doc: dict) -> InterfaceAutomaton:
    alphabet = parse_alphabet(doc, "interface automaton")
    io = IoSignature(alphabet, _inputs_of(doc, alphabet, "interface automaton"))
    states = _string_list(doc, "states", "interface automaton")
    if not states or len(set(states)) != len(states):
        raise DocumentError("states must be a nonempty list of distinct names")
    initial = _require(doc, "initial", str, "interface automaton")
    if initial not in states:
        raise DocumentError(f"unknown initial state {initial!r}")
    transitions: dict[tuple[str, str], str] = {}
    for entry in _require(doc, "transitions", list, "interface automaton"):
        if not (isinstance(entry, list) and len(entry) == 3 and all(isinstance(x, str) for x in entry)):
            raise DocumentError(f"transition {entry!r} must be the triple [state, symbol, state]")
        src, sym, dst = entry
        if src not in states or dst not in states:
            raise DocumentError(f"unknown state in transition {entry!r}")
        if sym not in alphabet:
            raise DocumentError(f"unknown symbol {sym!r}")
        if (src, sym) in transitions:
            raise DocumentError(f"nondeterministic transitions from {src!r} on {sym!r}")
        transitions[(src, sym)] = dst
    from . import automata

    try:
        return automata.make(io, states, initial, transitions)
    except HypercError as err:
        raise DocumentError(str(err)) from None


def ia_doc(a: InterfaceAutomaton) -> dict:
    alphabet = a.io.alphabet
    return {
        "alphabet": list(alphabet.symbols),
        "inputs": [s for s in alphabet.symbols if s in a.io.inputs],
        "states": list(a.state_names),
        "initial": a.state_names[a.initial],
        "transitions": [
            [a.state_names[q], sym, a.state_names[a.trans[q][k]]]
            for q in range(a.n_states)
            for k, sym in enumerate(alphabet.symbols)
            if a.trans[q][k] is not None
        ],
    }


# -- behavioral bundles -----------------------------------------------------------------


@dataclass
class BehavioralDocument:
    """Named definitions shared by the behavioral subcommands."""

    universe: Universe
    components: dict[str, Component] = field(default_factory=dict)
    compsets: dict[str, ConicCompset] = field(default_factory=dict)
    contracts: dict[str, BehavioralHypercontract] = field(default_factory=dict)
    ag: dict[str, AgContract] = field(default_factory=dict)


def _component_from(doc: BehavioralDocument, ref, what: str) -> Component:
    if isinstance(ref, str):
        if ref not in doc.components:
            raise DocumentError(f"{what} references unknown component {ref!r}")
        return doc.components[ref]
    if isinstance(ref, list) and all(isinstance(x, str) for x in ref):
        try:
            return Component.from_behaviors(doc.universe, ref)
        except ValueError as err:
            raise DocumentError(f"{what}: {err}") from None
    raise DocumentError(f"{what} must be a component name or a list of behaviors")


def _compset_from(doc: BehavioralDocument, ref, what: str) -> ConicCompset:
    if isinstance(ref, str):
        if ref not in doc.compsets:
            raise DocumentError(f"{what} references unknown compset {ref!r}")
        return doc.compsets[ref]
    if isinstance(ref, list):
        return ConicCompset.from_components(
            doc.universe, [_component_from(doc, entry, what) for entry in ref]
        )
    raise DocumentError(f"{what} must be a compset name or a list of components")


def parse_behavioral(raw: dict) -> BehavioralDocument:
    try:
        universe = Universe(tuple(_string_list(raw, "universe", "behavioral")))
    except HypercError as err:
        raise DocumentError(str(err)) from None
    doc = BehavioralDocument(universe)
    for name, behaviors in raw.get("components", {}).items():
        doc.components[name] = _component_from(doc, behaviors, f"component {name!r}")
    for name, entries in raw.get("compsets", {}).items():
        if not isinstance(entries, list):
            raise DocumentError(f"compset {name!r} must list component names")
        doc.compsets[name] = ConicCompset.from_components(
            doc.universe,
            [_component_from(doc, entry, f"compset {name!r}") for entry in entries],
        )
    for name, pair in raw.get("contracts", {}).items():
        if not isinstance(pair, dict):
            raise DocumentError(f"contract {name!r} must map 'env' and 'impl'")
        env = _compset_from(doc, pair.get("env"), f"contract {name!r} env")
        impl = _compset_from(doc, pair.get("impl"), f"contract {name!r} impl")
        doc.contracts[name] = BehavioralHypercontract(env, impl)
    for name, pair in raw.get("ag", {}).items():
        if not isinstance(pair, dict):
            raise DocumentError(f"ag contract {name!r} must map 'A' and 'G'")
        doc.ag[name] = AgContract(
            _component_from(doc, pair.get("A"), f"ag contract {name!r} A"),
            _component_from(doc, pair.get("G"), f"ag contract {name!r} G"),
        )
    return doc


def component_names(c: Component) -> list[str]:
    return list(c.behaviors())


def compset_doc(h: ConicCompset) -> list[list[str]]:
    return [list(h.universe.names_of(m)) for m in h.maximals]


def behavioral_contract_doc(c: BehavioralHypercontract) -> dict:
    return {
        "universe": list(c.universe.behaviors),
        "env": compset_doc(c.env),
        "impl": compset_doc(c.impl),
    }


def ag_contract_doc(ag: AgContract) -> dict:
    return {
        "universe": list(ag.universe.behaviors),
        "A": component_names(ag.assumptions),
        "G": component_names(ag.guarantees),
    }
