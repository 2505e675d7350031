import json

import pytest

from catmat.cli import main


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_decide_exists(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "1 2\n3 7\n")
    assert main(["decide", path]) == 0
    assert capsys.readouterr().out.strip() == "EXISTS"


def test_decide_absent_explains(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "1 2\n3 6\n")
    assert main(["decide", "--explain", path]) == 1
    out = capsys.readouterr().out
    assert out.startswith("ABSENT")
    assert "required>=7" in out and "actual=6" in out
    assert "u-diagonal" in out


def test_decide_json(tmp_path, capsys):
    path = write(tmp_path, "m.txt", '{"n": 2, "entries": [[1,2],[3,6]]}')
    assert main(["decide", "--json", path]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["decision"] == "absent"
    assert payload["reason"]["kind"] == "UDiagonalFail"
    assert payload["reason"]["required"] == 7


def test_decide_via_submatrices(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "1 2\n3 6\n")
    assert main(["decide", "--via-submatrices", path]) == 1
    assert "submatrix [0, 1]" in capsys.readouterr().out


def test_decide_parse_error(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "1 x\n3 7\n")
    assert main(["decide", path]) == 2
    assert "error" in capsys.readouterr().err


def test_decide_missing_file(capsys):
    assert main(["decide", "/nonexistent/matrix.txt"]) == 2


def test_batch(tmp_path, capsys):
    write(tmp_path, "a.txt", "1 2\n3 7\n")
    write(tmp_path, "b.txt", "1 2\n3 6\n")
    assert main(["decide", "--batch", str(tmp_path)]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("a.txt: EXISTS")
    assert out[1].startswith("b.txt: ABSENT")

    write(tmp_path, "c.txt", "not a matrix")
    assert main(["decide", "--batch", str(tmp_path)]) == 2
    assert "c.txt: ERROR" in capsys.readouterr().out

    all_good = tmp_path / "good"
    all_good.mkdir()
    write(all_good, "a.txt", "1\n")
    assert main(["decide", "--batch", str(all_good)]) == 0


def test_report(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "1\n")
    assert main(["report", path]) == 0
    out = capsys.readouterr().out
    assert "reflexivity" in out and "PASS" in out


def test_witness_verify_round_trip(tmp_path, capsys):
    matrix = write(tmp_path, "m.txt", "1 2\n3 7\n")
    cert = str(tmp_path / "cert.json")
    assert main(["witness", matrix, "--out", cert]) == 0
    capsys.readouterr()
    assert main(["verify", cert, matrix]) == 0
    out = capsys.readouterr().out
    assert out.startswith("VERIFIED")
    assert "13 morphisms" in out


def test_witness_stdout_is_certificate(tmp_path, capsys):
    matrix = write(tmp_path, "m.txt", "1\n")
    assert main(["witness", matrix]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["matrix"] == {"n": 1, "entries": [[1]]}
    assert len(data["homs"]["0,0"]) == 1


def test_witness_absent(tmp_path, capsys):
    matrix = write(tmp_path, "m.txt", "0\n")
    assert main(["witness", matrix]) == 1
    assert "ABSENT" in capsys.readouterr().err


def test_verify_against_wrong_matrix(tmp_path, capsys):
    matrix = write(tmp_path, "m.txt", "1 2\n3 7\n")
    other = write(tmp_path, "other.txt", "1 2\n3 8\n")
    cert = str(tmp_path / "cert.json")
    main(["witness", matrix, "--out", cert])
    capsys.readouterr()
    assert main(["verify", cert, other]) == 1
    out = capsys.readouterr().out
    assert out.startswith("FAILED")
    assert "cardinality" in out


def test_verify_truncated_certificate(tmp_path, capsys):
    cert = write(tmp_path, "cert.json", '{"matrix": {"n": 1, "entries"')
    matrix = write(tmp_path, "m.txt", "1\n")
    assert main(["verify", cert, matrix]) == 2
    cert = write(tmp_path, "cert2.json", '{"matrix": {"n": 1, "entries": [[1]]}}')
    assert main(["verify", cert, matrix]) == 2


def test_verify_defaults_to_embedded_matrix(tmp_path, capsys):
    matrix = write(tmp_path, "m.txt", "2 2\n2 2\n")
    cert = str(tmp_path / "cert.json")
    main(["witness", matrix, "--out", cert])
    capsys.readouterr()
    assert main(["verify", cert]) == 0


def test_oracle_command(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "1 1\n1 2\n")
    assert main(["oracle", path]) == 0
    assert capsys.readouterr().out.startswith("EXISTS")

    path = write(tmp_path, "no.txt", "1 2\n1 1\n")
    assert main(["oracle", path]) == 1

    path = write(tmp_path, "hard.txt", "1 2\n3 6\n")
    assert main(["oracle", "--budget", "50", path]) == 3
    assert capsys.readouterr().out.startswith("ABSENT")  # the no.txt output


def test_oracle_json(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "2\n")
    assert main(["oracle", "--json", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"decision": "yes", "assignments": payload["assignments"]}


def test_stdin_matrix(tmp_path, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1 1\n0 1\n"))
    assert main(["decide", "-"]) == 0
    assert capsys.readouterr().out.strip() == "EXISTS"
