"""Command-line interface and the JSON code-file format."""

import io
import json

import pytest

from crcforge.cli import run
from crcforge.codefile import CodeFileError, dumps_code, read_code, write_code
from crcforge.constructions import build_a, build_c
from crcforge.hamming import Code, Space


# ---------------------------------------------------------------- code files

def test_dumps_and_read_round_trip():
    code = build_c(6, 5)
    text = dumps_code(code, {"note": "x"})
    back, meta = read_code(io.StringIO(text))
    assert back == code
    assert meta == {"note": "x"}
    assert text.endswith("\n")
    obj = json.loads(text)
    assert obj["format"] == "crc-code.v1"
    assert obj["n"] == 3 and obj["q"] == 6
    assert len(obj["codewords"]) == 90


def test_dumps_is_canonical():
    sp = Space(2, 3)
    a = Code.from_vertices(sp, [(2, 1), (0, 0), (1, 2)])
    b = Code.from_vertices(sp, [(0, 0), (1, 2), (2, 1)])
    assert dumps_code(a) == dumps_code(b)  # codewords serialize in lex order
    assert dumps_code(a, {"z": 1, "a": 2}) == dumps_code(a, {"a": 2, "z": 1})


def test_write_read_file(tmp_path):
    path = tmp_path / "code.json"
    code = build_a(4, 2)
    write_code(code, str(path), {"k": 1})
    back, meta = read_code(str(path))
    assert back == code and meta == {"k": 1}


def test_read_code_rejects_malformed():
    good = dumps_code(build_a(4, 2))
    cases = [
        "not json at all",
        json.dumps([1, 2, 3]),
        good.replace("crc-code.v1", "other-tag"),
        good.replace('"n": 3', '"n": "3"'),
        good.replace('"q": 4', '"q": 1'),
        good.replace("[0, 0, 0]", "[0, 0, 9]", 1),
        good.replace("[0, 0, 0]", "[0, 0]", 1),
    ]
    for text in cases:
        with pytest.raises(CodeFileError):
            read_code(io.StringIO(text))
    dup = good.replace("[0, 1, 1]", "[0, 0, 0]", 1)  # [0,0,0] appears twice now
    with pytest.raises(CodeFileError):
        read_code(io.StringIO(dup))
    with pytest.raises(CodeFileError):
        read_code("/nonexistent/path.json")


# ---------------------------------------------------------------- construct

def test_construct_to_stdout(capsys):
    assert run(["construct", "b", "--q", "6", "--variant", "1"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["meta"]["construction"] == {"kind": "b", "q": 6, "variant": 1}
    assert obj["meta"]["certificate"]["gamma"] == 3
    assert obj["meta"]["certificate"]["eigenvalue_index"] == 2


def test_construct_flagship_file(tmp_path, capsys):
    out = tmp_path / "c65.json"
    assert run(["construct", "c", "--q", "6", "--t", "5", "-o", str(out)]) == 0
    assert "90 codewords" in capsys.readouterr().out
    code, meta = read_code(str(out))
    assert code.size == 90
    assert meta["certificate"]["gamma"] == 5
    assert meta["certificate"]["beta"] == 7
    assert meta["certificate"]["eigenvalues"] == [15, 3]


def test_construct_d_and_index_kinds(tmp_path):
    out = tmp_path / "d.json"
    assert run(["construct", "d", "--q", "8", "--witness", "2,4,6,2,3,2",
                "-o", str(out)]) == 0
    _, meta = read_code(str(out))
    assert meta["certificate"]["gamma"] == 7
    assert run(["construct", "index1", "--q", "5", "--m", "2",
                "-o", str(tmp_path / "i1.json")]) == 0
    assert run(["construct", "index3", "--q", "5", "--m", "2",
                "-o", str(tmp_path / "i3.json")]) == 0


def test_construct_errors(capsys):
    assert run(["construct", "a", "--q", "5"]) == 2  # missing --gamma
    assert run(["construct", "a", "--q", "5", "--gamma", "3"]) == 2  # odd gamma
    assert run(["construct", "d", "--q", "8", "--witness", "1,2,3"]) == 2
    assert run(["construct", "d", "--q", "8", "--witness", "a,b,c,d,e,f"]) == 2
    assert run(["construct", "d", "--q", "8", "--witness", "1,1,1,1,1,1"]) == 2
    capsys.readouterr()


# ---------------------------------------------------------------- verify

def test_verify_certificate_and_expectations(tmp_path, capsys):
    out = tmp_path / "c.json"
    run(["construct", "c", "--q", "6", "--t", "5", "-o", str(out)])
    capsys.readouterr()
    assert run(["verify", str(out)]) == 0
    text = capsys.readouterr().out
    assert "gamma=5 beta=7" in text
    assert "eigenvalue index 2" in text
    assert run(["verify", str(out), "--expect-gamma", "5", "--expect-beta", "7",
                "--expect-index", "2"]) == 0
    capsys.readouterr()
    assert run(["verify", str(out), "--expect-gamma", "4"]) == 1
    assert "expected gamma=4, got 5" in capsys.readouterr().out


def test_verify_rejects_non_crc(tmp_path, capsys):
    sp = Space(3, 3)
    bad = Code.from_vertices(sp, [(0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 0, 1)])
    path = tmp_path / "bad.json"
    write_code(bad, str(path))
    assert run(["verify", str(path)]) == 1
    assert "not completely regular" in capsys.readouterr().out


def test_verify_malformed_file(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{]")
    assert run(["verify", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


# ------------------------------------------------- reduce / extend / complement

def test_reduce_extend_round_trip_bytes(tmp_path, capsys):
    original = tmp_path / "a.json"
    run(["construct", "a", "--q", "5", "--gamma", "4", "-o", str(original)])
    reduced = tmp_path / "red.json"
    assert run(["reduce", str(original), "-o", str(reduced)]) == 0
    code, meta = read_code(str(reduced))
    assert code.space == Space(2, 5)
    assert meta["reduced_from"] == {"n": 3, "essential_positions": [2, 3]}

    extended = tmp_path / "ext.json"
    assert run(["extend", str(reduced), "--at", "1", "-o", str(extended)]) == 0
    # re-extending at position 1 reproduces the constructed code exactly
    assert read_code(str(extended))[0] == read_code(str(original))[0]
    capsys.readouterr()


def test_complement_involution(tmp_path, capsys):
    f0 = tmp_path / "b.json"
    run(["construct", "b", "--q", "4", "--variant", "2", "-o", str(f0)])
    f1 = tmp_path / "comp.json"
    f2 = tmp_path / "comp2.json"
    assert run(["complement", str(f0), "-o", str(f1)]) == 0
    assert run(["complement", str(f1), "-o", str(f2)]) == 0
    c0, _ = read_code(str(f0))
    c1, _ = read_code(str(f1))
    assert c0.size + c1.size == 4 ** 3
    # the double complement file carries the same codewords
    assert read_code(str(f2))[0] == c0
    capsys.readouterr()


# ---------------------------------------------------------------- params

def test_params_feasible_exit_codes(capsys):
    assert run(["params", "feasible", "--q", "16", "--gamma", "7"]) == 0
    text = capsys.readouterr().out
    assert "feasible" in text and "witness: r=4 s=8 t=12 a=2 b=3 c=2" in text
    assert run(["params", "feasible", "--q", "8", "--gamma", "1"]) == 1
    capsys.readouterr()
    assert run(["params", "feasible", "--n", "4", "--q", "8", "--gamma", "7"]) == 0
    assert run(["params", "feasible", "--n", "4", "--q", "8", "--gamma", "7",
                "--index", "3"]) == 2  # only index 2 classified beyond n=3
    assert run(["params", "feasible", "--q", "6", "--gamma", "5",
                "--index", "1"]) == 2  # normalization violation
    capsys.readouterr()


def test_params_solve_c1(capsys):
    assert run(["params", "solve-c1", "--q", "8", "--gamma", "7"]) == 0
    text = capsys.readouterr().out
    assert "3 witness(es) for q=8, gamma=7" in text
    assert "r=2 s=4 t=6 a=2 b=3 c=2 gamma=7" in text
    assert run(["params", "solve-c1", "--q", "8", "--gamma", "1"]) == 1
    assert "0 witness(es)" in capsys.readouterr().out


def test_params_lambda(capsys):
    assert run(["params", "lambda", "--n", "3", "--q", "6"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert lines[2] == "lambda_2(H(3,6)) = 3  multiplicity 75"
    assert run(["params", "lambda", "--n", "3", "--q", "6", "--i", "9"]) == 2


# ---------------------------------------------------------------- analyze

def test_analyze_full_report(tmp_path, capsys):
    path = tmp_path / "d.json"
    run(["construct", "d", "--q", "8", "--witness", "2,4,6,2,3,2", "-o", str(path)])
    capsys.readouterr()
    assert run(["analyze", str(path), "--derivatives", "--cliques"]) == 0
    text = capsys.readouterr().out
    assert "gamma=7 beta=9" in text
    assert "unclassified=0" in text
    assert "strong clique property: yes" in text
    assert "block witness: r=2 s=4 t=6 a=2 b=3 c=2" in text


def test_analyze_is_deterministic(tmp_path, capsys):
    path = tmp_path / "c.json"
    run(["construct", "c", "--q", "6", "--t", "5", "-o", str(path)])
    capsys.readouterr()
    run(["analyze", str(path), "--derivatives", "--cliques"])
    first = capsys.readouterr().out
    run(["analyze", str(path), "--derivatives", "--cliques"])
    assert capsys.readouterr().out == first


def test_analyze_non_crc_and_profiles(tmp_path, capsys):
    sp = Space(3, 2)
    path = tmp_path / "pair.json"
    write_code(Code.from_vertices(sp, [(0, 0, 0), (1, 1, 1)]), str(path))
    assert run(["analyze", str(path), "--cliques"]) == 0
    text = capsys.readouterr().out
    assert "completely regular" in text
    assert "hyperface counts: all 1" in text
    assert "not-clique-partition" in text


# ---------------------------------------------------------------- search

def test_search_cli_summary(capsys):
    assert run(["search", "--n", "3", "--q", "2", "--workers", "1"]) == 0
    text = capsys.readouterr().out
    assert "22 code(s)" in text
    assert "gamma=1 beta=3 index=2" in text


def test_search_cli_emit(tmp_path, capsys):
    outdir = tmp_path / "found"
    assert run(["search", "--n", "2", "--q", "2", "--emit", str(outdir),
                "--workers", "1"]) == 0
    text = capsys.readouterr().out
    assert "6 code(s)" in text
    files = sorted(p.name for p in outdir.iterdir())
    assert files == [f"code_{k:04d}.json" for k in range(6)] + ["index.json"]
    with open(outdir / "index.json", encoding="utf-8") as fp:
        idx = json.load(fp)
    assert idx["space"] == {"n": 2, "q": 2}
    assert len(idx["codes"]) == 6
    for entry in idx["codes"]:
        code, meta = read_code(str(outdir / entry["file"]))
        assert code.size == entry["size"]
        assert meta["certificate"]["gamma"] == entry["gamma"]


def test_search_cli_count_only_emits_nothing(tmp_path, capsys):
    outdir = tmp_path / "none"
    assert run(["search", "--n", "2", "--q", "2", "--emit", str(outdir),
                "--count-only", "--workers", "1"]) == 0
    capsys.readouterr()
    assert not outdir.exists()


def test_search_cli_validation(capsys):
    assert run(["search", "--n", "3", "--q", "5"]) == 2
    capsys.readouterr()


# ---------------------------------------------------------------- table, misc

def test_table_output(capsys):
    assert run(["table", "--q-max", "8"]) == 0
    lines = capsys.readouterr().out.splitlines()
    qlines = [ln for ln in lines if ln.startswith("q=")]
    assert len(qlines) == 7  # q = 2..8
    # q=8, gamma=3 is the first entry realized through the three-block system
    assert "3*" in qlines[-1]
    assert not any("*" in ln for ln in qlines[:-1])
    assert lines[-1].startswith("(*")


def test_usage_errors():
    assert run([]) == 2
    assert run(["no-such-command"]) == 2
    assert run(["--help"]) == 0
    assert run(["construct", "--help"]) == 0
