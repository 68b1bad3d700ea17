import json

import pytest

from twistlat.algfile import bundled_path, parse_document, load
from twistlat.cli import main
from twistlat.kleene import (
    dn_residuum_triviality_check,
    focal_subset,
    is_sublattice,
)
from twistlat.residuated import check_residuated, dnl_negation
from twistlat.core_order import Involution


def path(name):
    return str(bundled_path(name))


class TestPa:
    def test_n5_sublattice_failure(self, capsys):
        assert main(["pa", path("n5"), "--focal", "a", "--what", "sublattice"]) == 1
        out = capsys.readouterr().out
        assert "sublattice: fail" in out
        assert "= (1,b) ∉ P_a" in out

    def test_cli_verdict_mirrors_library_report(self, capsys, n5):
        main(["pa", path("n5"), "--focal", "a", "--what", "sublattice"])
        out = capsys.readouterr().out
        rep = is_sublattice(focal_subset(n5, n5.index("a")))
        assert rep.detail in out

    def test_l6_focal_d_closure_failure(self, capsys):
        assert main(["pa", path("l6"), "--focal", "d", "--what", "closure-bc"]) == 1
        out = capsys.readouterr().out
        assert "closure ⊙: fail" in out
        assert "= (a,c) ∉ P_d" in out

    def test_l6_focal_a_closure_passes(self, capsys):
        assert main(["pa", path("l6"), "--focal", "a", "--what", "closure-bc"]) == 0

    def test_kleene_on_chain4(self, capsys):
        assert main(["pa", path("chain4"), "--focal", "a", "--what", "kleene"]) == 0
        assert "kleene: pass" in capsys.readouterr().out

    def test_kleene_not_applicable_on_n5(self, capsys):
        assert main(["pa", path("n5"), "--focal", "a", "--what", "kleene"]) == 2

    def test_th1_flags_printed(self, capsys):
        assert main(["pa", path("chain4"), "--focal", "a", "--what", "th1"]) == 0
        out = capsys.readouterr().out
        assert "set_characterization: yes" in out

    def test_th4_on_chain4(self, capsys):
        assert main(["pa", path("chain4"), "--focal", "a", "--what", "th4"]) == 0
        out = capsys.readouterr().out
        assert "product_collapse: yes" in out
        assert "residua_meet: yes" in out

    def test_th3_verdicts(self):
        assert main(["pa", path("chain4"), "--focal", "a", "--what", "th3"]) == 0
        assert main(["pa", path("n5"), "--focal", "a", "--what", "th3"]) == 1

    def test_cor2_on_l6_atom(self, capsys):
        assert main(["pa", path("l6"), "--focal", "a", "--what", "cor2"]) == 0

    def test_cor2_needs_an_atom(self, capsys):
        assert main(["pa", path("l6"), "--focal", "d", "--what", "cor2"]) == 2
        assert "not an atom" in capsys.readouterr().err

    def test_lem1_on_l6_focal_d_fails(self):
        assert main(["pa", path("l6"), "--focal", "d", "--what", "lem1"]) == 1

    def test_implem_on_l6_atom(self):
        assert main(["pa", path("l6"), "--focal", "a", "--what", "implem"]) == 0

    def test_closure_dn_informational(self, capsys):
        assert main(["pa", path("l6"), "--focal", "a", "--what", "closure-dn"]) == 1
        out = capsys.readouterr().out
        assert "idempotent: no" in out

    def test_triviality_confirms_the_theorem(self, capsys):
        assert main(["pa", path("l6"), "--focal", "a", "--what", "triviality"]) == 0
        out = capsys.readouterr().out
        assert "(1,a) ⇒ (0,a) = (0,0)" in out
        assert main(["pa", path("trivial"), "--focal", "0", "--what", "triviality"]) == 0

    def test_triviality_needs_an_involution(self, capsys):
        assert main(["pa", path("chain4"), "--focal", "a", "--what", "triviality"]) == 2
        assert "no antitone involution" in capsys.readouterr().err

    def test_unknown_focal_is_usage_error(self, capsys):
        assert main(["pa", path("n5"), "--focal", "zz", "--what", "sublattice"]) == 2

    def test_residuated_check_on_lattice_file_is_usage_error(self, capsys):
        assert main(["pa", path("n5"), "--focal", "a", "--what", "th4"]) == 2


class TestCheck:
    def test_default_battery_on_residuated_file(self, capsys):
        assert main(["check", path("l6")]) == 0
        out = capsys.readouterr().out
        assert "def1: pass" in out
        assert "distributive: pass" in out

    def test_default_battery_on_lattice_file(self, capsys):
        assert main(["check", path("n5")]) == 1
        out = capsys.readouterr().out
        assert "distributive: fail" in out
        assert "def1" not in out

    def test_dnl(self, capsys):
        assert main(["check", path("chain4"), "--what", "dnl"]) == 1
        assert main(["check", path("l6"), "--what", "dnl"]) == 0

    def test_prop1(self, capsys):
        assert main(["check", path("chain4"), "--what", "prop1"]) == 0

    def test_mv(self, capsys):
        assert main(["check", path("l6"), "--what", "mv"]) == 0
        assert main(["check", path("chain4"), "--what", "mv"]) == 1

    def test_def1_needs_mul(self, capsys):
        assert main(["check", path("n5"), "--what", "def1"]) == 2


class TestTwist:
    def test_bc_chain4_report(self, capsys):
        assert main(["twist", path("chain4"), "--flavor", "bc"]) == 0
        out = capsys.readouterr().out
        assert "commutative residuated: pass" in out
        assert "integral: fail (unit (1,1) ≠ top (1,0))" in out
        assert "swap interdefinability: pass" in out

    def test_dn_l6_report(self, capsys):
        assert main(["twist", path("l6"), "--flavor", "dn"]) == 0
        out = capsys.readouterr().out
        assert "integral: pass" in out
        assert "dnl: pass" in out

    def test_dn_without_dnl_is_gated(self, capsys):
        assert main(["twist", path("chain4"), "--flavor", "dn"]) == 2
        assert "double negation" in capsys.readouterr().err

    def test_out_file_reloads(self, tmp_path, capsys, chain4_r):
        out_file = tmp_path / "twist.alg"
        assert main(["twist", path("chain4"), "--flavor", "bc", "--out", str(out_file)]) == 0
        reloaded = load(parse_document(out_file.read_text(encoding="utf-8")))
        assert check_residuated(reloaded).passed
        assert reloaded.size == 16


class TestRender:
    def test_lattice_dot(self, capsys):
        assert main(["render", path("chain4"), "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph hasse {")
        assert '"0" -> "a";' in out

    def test_pa_dot(self, capsys):
        assert main(["render", path("chain4"), "--pa", "a", "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert out.count(" -> ") == 14
        assert '"(a,a)"' in out

    def test_pa_on_non_sublattice_is_usage_error(self, capsys):
        assert main(["render", path("n5"), "--pa", "a", "--format", "dot"]) == 2


class TestSearch:
    def test_verify_exit_zero(self, capsys):
        assert main(["search", "--max-size", "4", "--target", "th3"]) == 0
        out = capsys.readouterr().out
        assert "outcome: verified" in out

    def test_falsify_reports_counterexample(self, capsys):
        code = main([
            "search", "--max-size", "4", "--target", "cor2", "--without", "atom",
        ])
        assert code == 0
        out = capsys.readouterr().out
        assert "outcome: counterexample" in out

    def test_falsify_exhaustion(self, capsys):
        code = main([
            "search", "--max-size", "4", "--target", "th4",
            "--without", "comparable_with_all",
        ])
        assert code == 0
        assert "outcome: exhausted" in capsys.readouterr().out

    def test_bad_target_is_usage_error(self, capsys):
        assert main(["search", "--max-size", "4", "--target", "zzz"]) == 2

    def test_bad_size_is_usage_error(self, capsys):
        assert main(["search", "--max-size", "9", "--target", "th3"]) == 2

    def test_bad_flag_is_usage_error(self, capsys):
        assert main([
            "search", "--max-size", "4", "--target", "th3", "--without", "nope",
        ]) == 2


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_file(self, capsys):
        assert main(["check", "/nonexistent/file.alg"]) == 2

    def test_syntax_error_maps_to_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.alg"
        bad.write_text("{ not json", encoding="utf-8")
        assert main(["check", str(bad)]) == 2
