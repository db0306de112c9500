import io
import json

import pytest

from uvbraid.cli import run


def run_json(capsys, argv, expect=0):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == expect, out
    payload = json.loads(out)
    assert list(payload)[0] == "schema"
    assert payload["schema"] == 1
    return payload


def test_unknown_command_exits_64(capsys):
    assert run(["frobnicate"]) == 64
    assert "unknown command" in capsys.readouterr().err


def test_unknown_mode_exits_64(capsys):
    assert run(["quot", "sideways"]) == 64
    assert run(["hom"]) == 64
    capsys.readouterr()


def test_no_arguments_prints_help(capsys):
    assert run([]) == 64
    assert "usage" in capsys.readouterr().out.lower()


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()


def test_bad_word_exits_2(capsys):
    assert run(["nf", "--n", "3", "--c", "1", "--word", "r9"]) == 2
    assert "error" in capsys.readouterr().err


def test_bad_params_exit_2(capsys):
    assert run(["vcd", "--n", "0", "--c", "1"]) == 2
    capsys.readouterr()


def test_missing_flag_exits_2(capsys):
    assert run(["nf", "--n", "3"]) == 2
    capsys.readouterr()


def test_nf(capsys):
    payload = run_json(capsys, ["nf", "--n", "3", "--c", "1", "--word", "r1 s2.1"])
    assert payload["delta_nf"] == ["d1.3.1"]
    assert payload["perm"] == [2, 1, 3]
    assert payload["cycles"] == "(1 2)"


def test_eq(capsys):
    payload = run_json(
        capsys, ["eq", "--n", "3", "--c", "1", "r1 s2.1 r1", "r2 s1.1 r2"]
    )
    assert payload["equal"] is True
    assert payload["left"] == payload["right"]
    payload = run_json(capsys, ["eq", "--n", "3", "--c", "1", "r1 s1.1", "s1.1 r1"])
    assert payload["equal"] is False


def test_trivial(capsys):
    payload = run_json(
        capsys,
        ["trivial", "--n", "4", "--c", "1", "--word", "r1 r2 s1.1 r2 r1 S2.1"],
    )
    assert payload["trivial"] is True
    assert payload["delta_nf"] == []
    assert payload["cycles"] == "()"


def test_pure_and_perm(capsys):
    payload = run_json(capsys, ["pure", "--n", "3", "--c", "1", "--word", "s1.1"])
    assert payload["pure"] is False
    assert payload["strand_perm"] == [2, 1, 3]
    payload = run_json(capsys, ["perm", "--n", "3", "--c", "1", "--word", "r1 s2.1"])
    assert payload["strand_cycles"] == "(1 2 3)"
    assert payload["virtual_perm"] == [2, 1, 3]


def test_graph_stats(capsys):
    payload = run_json(capsys, ["graph", "stats", "--n", "4", "--c", "1"])
    assert payload["vertices"] == 12
    # 3 ways to split the 4 strands into two pairs, each giving a
    # 4-edge complete join between the ordered versions
    assert payload["edges"] == 12
    assert payload["min_degree"] == 2
    assert payload["max_degree"] == 2


def test_graph_dot(capsys):
    assert run(["graph", "dot", "--n", "4", "--c", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph commutation {")
    assert '"d1.2.1" -- "d3.4.1";' in out


def test_vcd_example(capsys):
    payload = run_json(capsys, ["vcd", "--n", "6", "--c", "1"])
    assert payload["clique_number"] == 3
    assert payload["vcd"] == 3


def test_howson_example(capsys):
    payload = run_json(capsys, ["howson", "--n", "4", "--c", "1"])
    assert payload["howson"] is False
    assert len(payload["p3_witness"]) == 3
    payload = run_json(capsys, ["howson", "--n", "3", "--c", "2"])
    assert payload["howson"] is True
    assert payload["p3_witness"] is None


def test_lerf_witness(capsys):
    payload = run_json(capsys, ["lerf-witness", "--n", "5", "--c", "1"])
    assert payload["lerf"] is False
    assert len(payload["f2xf2_witness"]) == 4
    payload = run_json(capsys, ["lerf-witness", "--n", "2", "--c", "3"])
    assert payload["lerf"] is True


def test_center_witness(capsys):
    payload = run_json(capsys, ["center-witness", "--n", "4", "--c", "2"])
    assert payload["dominating_vertices"] == []
    assert payload["commute"] is False


def test_hom_phi(capsys):
    payload = run_json(
        capsys,
        ["hom", "phi", "--n", "3", "--c", "2", "--eps", "1,0,1", "--word", "s1.1 r2"],
    )
    assert payload["bits"] == [1, 0, 1]
    assert payload["admissible"] is True
    assert payload["hom"]["m"] == 3
    assert payload["image_cycles"] == "(1 2 3)"


def test_hom_phi_rejects_bad_bits(capsys):
    assert run(["hom", "phi", "--n", "3", "--c", "2", "--eps", "1,1"]) == 2
    assert run(["hom", "phi", "--n", "3", "--c", "1", "--eps", "1,x"]) == 2
    capsys.readouterr()


def test_hom_check_file(tmp_path, capsys):
    hom_path = tmp_path / "hom.json"
    phi = run_json(capsys, ["hom", "phi", "--n", "3", "--c", "1", "--eps", "1,1"])
    hom_path.write_text(json.dumps(phi["hom"]))
    payload = run_json(
        capsys, ["hom", "check", "--n", "3", "--c", "1", "--file", str(hom_path)]
    )
    assert payload["homomorphism"] is True
    assert payload["failed_relation"] is None
    assert payload["abelian_image"] is False


def test_hom_check_stdin(capsys, monkeypatch):
    phi = run_json(capsys, ["hom", "phi", "--n", "3", "--c", "1", "--eps", "1,0"])
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(phi["hom"])))
    payload = run_json(capsys, ["hom", "check", "--n", "3", "--c", "1"])
    assert payload["homomorphism"] is False
    assert payload["failed_relation"].startswith("slide(")
    assert payload["abelian_image"] is None


def test_hom_check_bad_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run(["hom", "check", "--n", "3", "--c", "1", "--file", str(bad)]) == 2
    capsys.readouterr()


def test_hom_enumerate(capsys):
    payload = run_json(capsys, ["hom", "enumerate", "--n", "3", "--c", "1", "--m", "2"])
    assert payload["count"] == 4
    assert len(payload["homs"]) == 4


def test_ab_and_chi(capsys):
    payload = run_json(
        capsys, ["ab", "--n", "4", "--c", "2", "--word", "s1.2 S2.2 s3.2 r1"]
    )
    assert payload["sigma_exponents"] == [0, 1]
    assert payload["rho_parity"] == 1
    payload = run_json(
        capsys, ["chi", "--n", "4", "--c", "2", "--t", "2", "--word", "s1.2 r1 r2"]
    )
    assert payload["parity"] == 1
    assert run(["chi", "--n", "4", "--c", "2", "--t", "3", "--word", "r1"]) == 2
    capsys.readouterr()


def test_quot_eval_and_order(capsys):
    payload = run_json(
        capsys, ["quot", "eval", "--n", "3", "--c", "1", "--d", "2", "--word", "s1.1 s1.1 r2"]
    )
    assert payload["vec"] == [0]
    assert payload["cycles"] == "(2 3)"
    payload = run_json(capsys, ["quot", "order", "--n", "5", "--c", "2", "--d", "2"])
    assert payload["order"] == 480
    assert payload["n_factorial"] == 120
    assert payload["method"] == "closure"


def test_oracle_eq(capsys):
    payload = run_json(
        capsys,
        ["oracle", "eq", "--n", "3", "--c", "1", "r1 s2.1 r1", "r2 s1.1 r2"],
    )
    assert payload["verdict"] == "proven_equal"
    assert payload["path"]
    payload = run_json(
        capsys,
        [
            "oracle", "eq", "--n", "3", "--c", "1",
            "--depth", "2", "--width", "50", "r1", "",
        ],
    )
    assert payload["verdict"] == "unknown"
    assert payload["path"] is None


def test_output_is_byte_identical(capsys):
    args = ["nf", "--n", "4", "--c", "2", "--word", "r1 s2.2 r3 S1.1"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    assert capsys.readouterr().out == first


def test_verify_paper_runs_clean(capsys):
    code = run(["verify-paper"])
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert code == 0
    assert payload["ok"] is True
    claims = [r["claim"] for r in payload["results"]]
    assert len(claims) == 15
    assert len(set(claims)) == 15
    assert all(r["ok"] for r in payload["results"])
