import json

import pytest

from amecodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_field_table(capsys):
    code, out, _ = run(capsys, "field-table", "--q", "4")
    assert code == 0
    assert out.splitlines()[1:] == ["tuple  polynomial  level", "00     0           0",
                                    "10     1           1", "01     x           2", "11     x+1         3"]


def test_verify_ame_by_parameters(capsys):
    assert run(capsys, "verify-ame", "--n", "6", "--q", "5")[0] == 0


def test_make_ame_closed_form(capsys):
    code, out, _ = run(capsys, "make-ame", "--n", "6", "--q", "5")
    assert out.strip() == "Σ_{i,j,l=0}^{4} |i,j,l,i+j+l,i+2j+3l,i+3j+4l⟩"


def test_state_round_trip_and_failure_witness(capsys, tmp_path):
    code, out, _ = run(capsys, "make-ame", "--n", "4", "--q", "3", "--json")
    path = tmp_path / "s.json"
    path.write_text(out)
    assert run(capsys, "verify-ame", "--in", str(path))[0] == 0
    data = json.loads(out)
    data["terms"] = data["terms"][1:]
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify-ame", "--in", str(path))
    assert code == 1 and "witness" in err


def test_code_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "build-code", "--n", "6", "--q", "5", "--m", "I.I.X.Z.I.Z", "--json")
    assert code == 0
    path = tmp_path / "code.json"
    path.write_text(out)
    assert run(capsys, "verify-code", "--in", str(path))[0] == 0
    code, _, err = run(capsys, "verify-code", "--in", str(path), "--d", "3")
    assert code == 1 and "witness" in err


def test_mds_and_field_round_trips(capsys, tmp_path):
    for argv, back in ((["mds", "--n", "6", "--q", "4"], "mds"), (["field-table", "--q", "9"], "field-table"),
                       (["singleton-array", "--q", "8"], "singleton-array")):
        code, out, _ = run(capsys, *argv, "--json")
        path = tmp_path / f"{back}.json"
        path.write_text(out)
        assert run(capsys, back, "--in", str(path))[0] == 0


def test_min_weight_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "min-weight", "--n", "4", "--q", "3", "--m", "I.I.X.Z", "--json")
    assert json.loads(out)["weight"] == 2
    path = tmp_path / "mw.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "min-weight", "--in", str(path), "--json")
    assert json.loads(out2) == json.loads(out)


def test_exit_codes(capsys):
    assert run(capsys, "mds", "--n", "8", "--q", "5")[0] == 2
    assert run(capsys, "verify-ame", "--n", "8", "--q", "7", "--budget", "10")[0] == 3
    assert run(capsys, "min-weight", "--n", "4", "--q", "3", "--m", "I.X")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["mds"])
    assert exc.value.code == 2


def test_catalog_singleton_arrays(capsys):
    from pathlib import Path
    code, out, _ = run(capsys, "catalog", "--singleton-arrays")
    assert code == 0
    assert out == (Path(__file__).parent / "golden" / "singleton_arrays.txt").read_text()


def test_determinism_and_out_dir(capsys, tmp_path, monkeypatch):
    argv = ["basis-check", "--n", "6", "--q", "5", "--seed", "4", "--samples", "50"]
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)
    monkeypatch.setenv("AMECODES_OUTPUT_DIR", str(tmp_path))
    assert run(capsys, "search-m", "--n", "5", "--q", "5", "--target-w", "3", "--out", "hits.txt")[0] == 0
    assert (tmp_path / "hits.txt").read_text().startswith("X")


def test_table1_threads_do_not_change_output(capsys, tmp_path):
    one = run(capsys, "catalog", "--table1", "--json")
    two = run(capsys, "catalog", "--table1", "--json", "--threads", "3")
    assert one == two and one[0] == 0
    rows = json.loads(one[1])
    assert [(r["n"], r["q"]) for r in rows][-1] == (8, 7)
    path = tmp_path / "t1.json"
    path.write_text(one[1])
    assert run(capsys, "verify-code", "--in", str(path))[0] == 0
