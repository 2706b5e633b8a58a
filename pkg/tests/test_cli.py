"""CLI behavior: exit codes, canonical output, provenance echo, coverage of
the command table."""

from __future__ import annotations

import json
from pathlib import Path

import hyperc.behavioral
import hyperc.contracts
import hyperc.lang
import hyperc.oracle
import hyperc.receptive
from hyperc.cli import OPERATIONS, build_parser, main

DATA = Path(__file__).parent / "data"


def fx(name: str) -> str:
    return str(DATA / name)


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPredicates:
    def test_lang_refines_true(self, capsys):
        code, out, _ = run(capsys, "lang", "refines", fx("istar.json"), fx("sigma.json"))
        assert (code, out) == (0, "true\n")

    def test_lang_refines_false(self, capsys):
        code, out, _ = run(capsys, "lang", "refines", fx("sigma.json"), fx("istar.json"))
        assert (code, out) == (1, "false\n")

    def test_ia_refines(self, capsys):
        code, out, _ = run(capsys, "ia", "refines", fx("ia_iloop.json"), fx("ia_ioloop.json"))
        assert (code, out) == (0, "true\n")

    def test_iface_refines_json_format(self, capsys):
        code, out, _ = run(
            capsys, "iface", "refines", fx("c_istar.json"), fx("c_top.json"), "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["result"] is True
        assert doc["operation"]["name"] == "iface refines"
        assert len(doc["operation"]["inputs"]) == 2
        assert all(len(entry["sha256"]) == 64 for entry in doc["operation"]["inputs"])

    def test_beh_refines_compsets(self, capsys):
        code, out, _ = run(capsys, "beh", "refines", fx("beh.json"), "hlo", "htop")
        assert (code, out) == (0, "true\n")


class TestDocuments:
    def test_union_of_partial_equals_istar(self, capsys):
        code, out, _ = run(capsys, "lang", "union", fx("istar_partial.json"), fx("istar.json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["accepting"] == ["s0"] and len(doc["states"]) == 2

    def test_no_auto_trap_rejects_partial(self, capsys):
        code, _, err = run(
            capsys, "lang", "canon", fx("istar_partial.json"), "--no-auto-trap"
        )
        assert code == 2 and "partial" in err

    def test_receptive_union_keeps_inputs(self, capsys):
        code, out, _ = run(capsys, "lang", "union", fx("rec_istar.json"), fx("rec_sigma.json"))
        assert code == 0 and json.loads(out)["inputs"] == ["i"]

    def test_missext(self, capsys):
        code, out, _ = run(
            capsys, "lang", "missext", fx("istar.json"), fx("istar.json"), "--gamma", "o"
        )
        assert code == 0
        code2, out2, _ = run(capsys, "lang", "canon", fx("contains_o.json"))
        assert out == out2

    def test_unc(self, capsys):
        code, out, _ = run(
            capsys, "lang", "unc", fx("l_union.json"), fx("sigma.json"),
            "--gamma", "i", "--delta", "i",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["accepting"] != []

    def test_exponential_modes_agree(self, capsys):
        _, closed, _ = run(capsys, "lang", "exponential", fx("rec_istar.json"), fx("rec_sigma.json"))
        _, definitional, _ = run(
            capsys, "lang", "exponential", fx("rec_istar.json"), fx("rec_sigma.json"),
            "--definitional",
        )
        closed_doc = json.loads(closed)
        closed_doc.pop("inputs")
        assert closed_doc == json.loads(definitional)

    def test_quotient(self, capsys):
        code, out, _ = run(capsys, "lang", "quotient", fx("rec_l.json"), fx("rec_sigma_in_o.json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["inputs"] == ["i"]
        _, istar_out, _ = run(capsys, "lang", "canon", fx("istar.json"))
        doc.pop("inputs")
        assert doc == json.loads(istar_out)

    def test_enumerate_text(self, capsys):
        code, out, _ = run(capsys, "lang", "enumerate", fx("contains_o.json"), "--max-len", "2")
        assert code == 0 and out == "o\nio\noi\noo\n"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, out, _ = run(
            capsys, "lang", "canon", fx("istar.json"), "-o", str(target)
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["initial"] == "s0"


class TestContractsAndAutomata:
    def test_from_s_emits_derived(self, capsys):
        code, out, _ = run(capsys, "iface", "from-s", fx("c_istar.json"))
        doc = json.loads(out)
        assert set(doc) == {"S", "inputs", "E", "M"}

    def test_compose_compatible(self, capsys):
        code, out, _ = run(capsys, "iface", "compose", fx("c_eps_a_out.json"), fx("c_eps_a_in.json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["compatible"] is True and doc["inputs"] == []

    def test_compose_incompatible_text_and_json(self, capsys):
        code, out, _ = run(
            capsys, "iface", "compose", fx("c_eps_a_out.json"), fx("c_eps_only_in.json")
        )
        assert (code, out) == (0, "incompatible\n")
        code, out, _ = run(
            capsys, "iface", "compose", fx("c_eps_a_out.json"), fx("c_eps_only_in.json"),
            "--format", "json",
        )
        assert code == 0 and json.loads(out)["result"] == {"compatible": False}

    def test_quotient_via_identity(self, capsys):
        _, out, _ = run(capsys, "iface", "quotient", fx("c_istar.json"), fx("c_ident.json"))
        doc = json.loads(out)
        _, direct, _ = run(capsys, "iface", "from-s", fx("c_istar.json"))
        assert doc.pop("compatible") is True
        assert doc == json.loads(direct)

    def test_mirror(self, capsys):
        _, out, _ = run(capsys, "iface", "mirror", fx("c_istar.json"))
        assert json.loads(out)["inputs"] == ["o"]

    def test_validate_witness_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(
            json.dumps({"S": json.loads(Path(fx("contains_o.json")).read_text()), "inputs": ["i"]})
        )
        code, _, err = run(capsys, "iface", "validate", str(bad))
        assert code == 2 and "not prefix-closed" in err

    def test_validate_membership_flags(self, capsys):
        code, out, _ = run(
            capsys, "iface", "validate", fx("c_istar.json"), "--implementation", fx("istar.json")
        )
        assert (code, out) == (0, "true\n")
        code, out, _ = run(
            capsys, "iface", "validate", fx("c_istar.json"), "--implementation", fx("sigma.json")
        )
        assert (code, out) == (1, "false\n")

    def test_ia_compose_reports_pruned(self, capsys):
        code, out, _ = run(capsys, "ia", "compose", fx("ia_aout.json"), fx("ia_ain.json"))
        doc = json.loads(out)
        assert doc["compatible"] is True and doc["pruned_states"] == []
        assert doc["states"] == ["(p0,q0)", "(p1,q0)"]

    def test_ia_compose_incompatible(self, capsys):
        code, out, _ = run(
            capsys, "ia", "compose", fx("ia_aout.json"), fx("ia_ain_empty.json"),
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["compatible"] is False
        assert doc["result"]["pruned_states"] == ["(p0,q0)"]

    def test_ia_language_and_contract(self, capsys):
        _, out, _ = run(capsys, "ia", "language", fx("ia_iloop.json"))
        _, istar_out, _ = run(capsys, "lang", "canon", fx("istar.json"))
        assert out == istar_out
        _, out, _ = run(capsys, "ia", "to-contract", fx("ia_iloop.json"))
        _, from_s_out, _ = run(capsys, "iface", "from-s", fx("c_istar.json"))
        assert out == from_s_out


class TestBehavioral:
    def test_ag_compose_matches_contract_compose(self, capsys):
        _, via_contract, _ = run(capsys, "beh", "compose", fx("beh.json"), "agc1", "agc2")
        doc = json.loads(via_contract)
        assert doc["env"] == [["0", "1", "2"]] and doc["impl"] == [["0", "3"]]
        _, via_ag, _ = run(capsys, "beh", "ag-compose", fx("beh.json"), "agc1", "agc2")
        ag_doc = json.loads(via_ag)
        assert ag_doc["A"] == ["0", "1", "2"] and ag_doc["G"] == ["0", "3"]

    def test_general_flag_agrees(self, capsys):
        _, conic_out, _ = run(capsys, "beh", "compose", fx("beh.json"), "cmix", "ctop")
        _, general_out, _ = run(
            capsys, "beh", "compose", fx("beh.json"), "cmix", "ctop", "--general"
        )
        assert conic_out == general_out

    def test_quotient_of_components(self, capsys):
        _, out, _ = run(capsys, "beh", "quotient", fx("beh.json"), "g1", "a1")
        assert json.loads(out)["behaviors"] == ["0", "2", "3"]

    def test_compset_ops_and_normalize(self, capsys):
        _, out, _ = run(capsys, "beh", "normalize", fx("beh.json"), "redundant")
        assert json.loads(out)["maximals"] == [["0", "1"]]
        _, meet_out, _ = run(capsys, "beh", "meet", fx("beh.json"), "h12", "htop")
        assert json.loads(meet_out)["maximals"] == [["0", "1"], ["0", "2"]]

    def test_saturated_and_convexity(self, capsys):
        code, out, _ = run(capsys, "beh", "saturated", fx("beh.json"), "agc1")
        assert (code, out) == (0, "true\n")
        _, out, _ = run(capsys, "beh", "convexity", fx("beh.json"), "h12")
        doc = json.loads(out)
        assert doc["coconvex"] is True

    def test_merges(self, capsys):
        _, strong, _ = run(capsys, "beh", "merge-strong", fx("beh.json"), "agc1", "agc2")
        assert json.loads(strong) == {"A": ["0"], "G": ["0"], "universe": ["0", "1", "2", "3"]}
        _, weak, _ = run(capsys, "beh", "merge-weak", fx("beh.json"), "agc1", "agc2")
        doc = json.loads(weak)
        assert doc["env"] == [["0", "1"], ["0", "2"]]

    def test_ag_contract_bridge(self, capsys):
        _, out, _ = run(capsys, "beh", "ag-contract", fx("beh.json"), "agc1")
        doc = json.loads(out)
        assert doc["env"] == [["0", "1"]] and doc["impl"] == [["0", "2", "3"]]

    def test_unknown_name(self, capsys):
        code, _, err = run(capsys, "beh", "meet", fx("beh.json"), "nope", "htop")
        assert code == 2 and "unknown name" in err


class TestOracleCommand:
    def test_single_kind(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "missext", "--seed", "7", "--cases", "5", "--max-len", "4"
        )
        assert (code, out) == (0, "PASS missext cases=5\n")

    def test_all_json(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "all", "--seed", "7", "--cases", "3", "--max-len", "3",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        kinds = [r["kind"] for r in doc["result"]["reports"]]
        assert kinds == list(hyperc.oracle.ORACLE_KINDS)


class TestErrors:
    def test_document_error_exit_2(self, capsys):
        code, _, err = run(capsys, "lang", "canon", fx("bad_nondet.json"))
        assert code == 2 and "nondeterministic" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "lang", "canon", "no-such-file.json")
        assert code == 2 and "cannot read" in err

    def test_precondition_violation(self, capsys):
        code, _, err = run(capsys, "iface", "compose", fx("c_istar.json"), fx("c_top.json"))
        assert code == 2 and "shared outputs" in err


class TestCommandTable:
    def test_every_operation_under_exactly_one_subcommand(self):
        inventory = [op for ops in OPERATIONS.values() for op in ops]
        assert len(inventory) == len(set(inventory))
        documented = {
            "lang": (
                "union intersect difference complement concat_symbol_class "
                "concat_sigma_star prefix_closure canonicalize enumerate_words "
                "is_subset is_prefix_closed is_receptive"
            ),
            "receptive": (
                "meet join miss_ext unc exponential exponential_definitional "
                "compose quotient embed"
            ),
            "contracts": (
                "from_s is_environment is_implementation refines compose mirror quotient"
            ),
            "automata": "refines compose language to_contract",
            "behavioral": (
                "component_quotient general_compose general_quotient general_meet "
                "general_join normalize_conic conic_leq conic_compose conic_meet "
                "conic_join conic_quotient contract_compose contract_quotient "
                "contract_meet contract_join contract_refines ag_to_contract "
                "ag_compose ag_merge_strong ag_merge_weak is_saturated convexity "
                "strong_merge_general"
            ),
            "oracle": (
                "check_missext_definition check_unc_definition sweep_exponential "
                "sweep_receptive_quotient sweep_interface_compose sweep_ia_equivalence "
                "sweep_conic_quotient sweep_conic_ops"
            ),
        }
        expected = {
            f"{module}.{name}" for module, names in documented.items() for name in names.split()
        }
        assert set(inventory) == expected
        # and each table target really exists in its module
        modules = {
            "lang": hyperc.lang,
            "receptive": hyperc.receptive,
            "contracts": hyperc.contracts,
            "automata": hyperc.automata,
            "behavioral": hyperc.behavioral,
            "oracle": hyperc.oracle,
        }
        for entry in inventory:
            module, name = entry.split(".")
            assert hasattr(modules[module], name), entry

    def test_table_matches_registered_subcommands(self):
        parser = build_parser()
        groups = parser._subparsers._group_actions[0].choices  # noqa: SLF001
        registered = set()
        for group_name, group_parser in groups.items():
            verbs = group_parser._subparsers._group_actions[0].choices  # noqa: SLF001
            registered.update(f"{group_name} {verb}" for verb in verbs)
        assert set(OPERATIONS) <= registered
        assert registered - set(OPERATIONS) == {"oracle all"}
