import json

from geocycle.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lattice_classify_k3(capsys):
    code, out, _ = run_cli(capsys, "lattice", "--kind", "k3", "--classify")
    assert code == 0
    payload = json.loads(out)
    assert payload["signature"] == [3, 19]
    assert payload["parity"] == "even"
    assert payload["unimodular"] is True


def test_lattice_gram_output(capsys):
    code, out, _ = run_cli(capsys, "lattice", "--kind", "hyperbolic")
    assert code == 0
    assert json.loads(out)["gram"] == [[0, 1], [1, 0]]


def test_lattice_unknown_kind_exits_2(capsys):
    code, _, err = run_cli(capsys, "lattice", "--kind", "leech")
    assert code == 2


def test_signs_example(capsys):
    code, out, _ = run_cli(capsys, "signs", "--p", "3", "--q", "3", "--v", "1/3,2/3,2/3")
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix"] == [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]
    assert payload["det"] == 1
    assert payload["claim_holds"] is True


def test_signs_pads_vector_to_q(capsys):
    code, out, _ = run_cli(capsys, "signs", "--p", "2", "--q", "4", "--v", "3/5,4/5")
    assert code == 0
    assert json.loads(out)["det"] == -1


def test_signs_inadmissible_exits_2(capsys):
    code, _, err = run_cli(capsys, "signs", "--p", "2", "--q", "2", "--v", "1,0")
    assert code == 2
    assert "error" in err


def test_arrange_csv(capsys):
    code, out, _ = run_cli(
        capsys, "--csv", "arrange", "--p", "2", "--q", "3", "--n", "5", "--auto-params"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 6
    grid = [line.split(",") for line in lines]
    for i in range(6):
        assert grid[i][i] == "P"
        for j in range(i + 1, 6):
            assert grid[i][j] == "E"


def test_arrange_json_and_determinism(capsys):
    args = ("arrange", "--p", "2", "--q", "3", "--n", "3", "--auto-params")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical stdout for identical argv
    payload = json.loads(out1)
    assert payload["m"] == 3
    assert payload["t"] == "1/10"
    assert payload["lower_triangular"] is True


def test_arrange_explicit_params(capsys):
    code, out, _ = run_cli(
        capsys, "arrange", "--p", "2", "--q", "2", "--n", "2",
        "--m", "3", "--t", "1/10",
    )
    assert code == 0
    assert json.loads(out)["lower_triangular"] is True


def test_arrange_missing_params_exits_2(capsys):
    code, _, err = run_cli(capsys, "arrange", "--p", "2", "--q", "3", "--n", "2")
    assert code == 2


def test_arrange_emit_plot_data(tmp_path, capsys):
    path = tmp_path / "plot.csv"
    code, _, _ = run_cli(
        capsys, "arrange", "--p", "2", "--q", "3", "--n", "4", "--auto-params",
        "--emit-plot-data", str(path),
    )
    assert code == 0
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "k,tangent,lower,upper"
    assert len(lines) == 5
    assert lines[1].startswith("1,-20/99,")


def test_arrange_respects_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("GEOCYCLE_THREADS", "3")
    code, out, _ = run_cli(
        capsys, "arrange", "--p", "2", "--q", "3", "--n", "2", "--auto-params"
    )
    assert code == 0
    assert json.loads(out)["lower_triangular"] is True


def test_roots_hyperbolic(capsys):
    code, out, err = run_cli(capsys, "roots", "--lattice", "hyperbolic", "--bound", "1")
    assert code == 0
    assert json.loads(out) == [[-1, 1], [1, -1]]
    assert "count=2" in err


def test_roots_k3_block(capsys):
    code, out, err = run_cli(
        capsys, "roots", "--lattice", "k3", "--bound", "6", "--block", "e8:1"
    )
    assert code == 0
    roots = json.loads(out)
    assert len(roots) == 240
    assert all(len(r) == 22 for r in roots)
    # support confined to the first negated-E8 block
    assert all(all(x == 0 for x in r[:6] + r[14:]) for r in roots)
    assert "count=240" in err


def test_roots_block_requires_k3(capsys):
    code, _, err = run_cli(
        capsys, "roots", "--lattice", "hyperbolic", "--bound", "1", "--block", "e8:1"
    )
    assert code == 2


def test_spinor_boost(capsys):
    code, out, _ = run_cli(
        capsys, "spinor", "--lattice", "bpq", "--p", "1", "--q", "1",
        "--matrix", '[["5/4","3/4"],["3/4","5/4"]]',
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == 2
    assert payload["real_sign"] == 1


def test_spinor_rejects_non_isometry(capsys):
    code, _, err = run_cli(
        capsys, "spinor", "--lattice", "bpq", "--p", "1", "--q", "1",
        "--matrix", "[[2,0],[0,1]]",
    )
    assert code == 2


def test_congruence_example(capsys):
    matrix = "[[-1,0,0,0],[0,-1,0,0],[0,0,1,0],[0,0,0,1]]"
    code, out, _ = run_cli(
        capsys, "congruence", "--lattice", "bpq", "--p", "2", "--q", "2",
        "--matrix", matrix, "--modulus", "2",
    )
    assert code == 0 and json.loads(out)["member"] is True
    code, out, _ = run_cli(
        capsys, "congruence", "--lattice", "bpq", "--p", "2", "--q", "2",
        "--matrix", matrix, "--modulus", "4",
    )
    assert code == 0 and json.loads(out)["member"] is False


def test_congruence_non_integral_exits_2(capsys):
    code, _, _ = run_cli(
        capsys, "congruence", "--lattice", "bpq", "--p", "1", "--q", "1",
        "--matrix", '[["5/4","3/4"],["3/4","5/4"]]', "--modulus", "4",
    )
    assert code == 2


def test_verify_all(capsys):
    code, out, err = run_cli(capsys, "verify-all")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_ok"] is True
    assert len(payload["checks"]) == 8
    for line in err.strip().split("\n"):
        if ":" in line and "elapsed" not in line:
            assert "PASS" in line


def test_timings_go_to_stderr_not_stdout(capsys):
    _, out, err = run_cli(capsys, "lattice", "--kind", "hyperbolic")
    assert "elapsed_ms" in err
    assert "elapsed_ms" not in out
