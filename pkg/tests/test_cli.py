import csv
import io
import json
import random
import subprocess
import sys

import pytest

from ggc import cli
from ggc.code import WordMatrix
from ggc.formats import (
    SpecError,
    dump_code_spec,
    dump_word_matrix,
    dump_words,
    load_word_matrices,
    load_words,
    parse_code_spec,
)
from ggc.ileave import InterleavedCode
from ggc.params import paper_table1
from ggc.simulate import CSV_FIELDS, SimConfig, burst_error, simulate, trial_rng
from helpers import random_code


@pytest.fixture(scope="module")
def small_code():
    return random_code(random.Random(4), 4, 24, 4, degrees=(1, 2), goppa="separable")


@pytest.fixture
def spec_file(tmp_path, small_code):
    p = tmp_path / "code.spec"
    p.write_text("# a small test code\n" + dump_code_spec(small_code))
    return p


def run(*argv):
    return cli.main([str(a) for a in argv])


# -- formats --

def test_spec_round_trip(small_code):
    spec = parse_code_spec(dump_code_spec(small_code))
    code = spec.build()
    assert code.H == small_code.H and code.k == small_code.k


def test_spec_errors_name_the_line():
    text = "m 2\nG 1,1,0,1\nf 0,1\n# comment\nf 0,1\n"
    with pytest.raises(SpecError, match="line 5") as exc:
        parse_code_spec(text).build()
    assert "duplicates" in str(exc.value)
    with pytest.raises(SpecError, match="line 2"):
        parse_code_spec("m 2\nfoo 1\n")
    with pytest.raises(SpecError, match="missing G"):
        parse_code_spec("m 2\nf 0,1\n")


def test_word_files():
    words = [0, 0x1234 & ((1 << 13) - 1), (1 << 13) - 1]
    assert load_words(dump_words(words, 13), 13) == words
    blocks = [WordMatrix(10, (1, 2, 3)), WordMatrix(10, (1 << 9, 0, 5))]
    text = "".join(dump_word_matrix(b) for b in blocks)
    assert list(load_word_matrices(text)) == blocks
    with pytest.raises(ValueError):
        list(load_word_matrices("3 10\n0100\n"))


# -- construct --

def test_construct_outputs(tmp_path, spec_file, small_code, capsys):
    out = tmp_path / "out"
    assert run("construct", "--spec", spec_file, "--out", out) == 0
    names = {p.name for p in out.iterdir()}
    assert {"code.spec", "H.txt", "Htilde.txt", "Hbin.txt", "generator.txt", "summary.json"} <= names
    info = json.loads((out / "summary.json").read_text())
    assert info["n"] == small_code.n and info["k"] == small_code.k
    assert info["t_sep"] == small_code.r // small_code.l
    assert info["t_max"]["1"] == info["t_sep"]


def test_construct_is_deterministic(tmp_path, spec_file):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("construct", "--spec", spec_file, "--out", a) == 0
    assert run("construct", "--spec", spec_file, "--out", b) == 0
    for p in a.iterdir():
        assert p.read_bytes() == (b / p.name).read_bytes()


def test_construct_inline_profile(tmp_path):
    argv = ["construct", "--m", "4", "--profile", "1:10,2:10", "--r", "3", "--code-seed", "1"]
    assert run(*argv, "--out", tmp_path / "a") == 0
    assert run(*argv, "--out", tmp_path / "b") == 0
    assert (tmp_path / "a" / "H.txt").read_text() == (tmp_path / "b" / "H.txt").read_text()


def test_construct_bad_spec(tmp_path, capsys):
    p = tmp_path / "bad.spec"
    p.write_text("m 2\nG 1,1,0,1\nf 0,1\nf 0,1\n")
    assert run("construct", "--spec", p, "--out", tmp_path / "o") == 1
    err = capsys.readouterr().err
    assert "line 4" in err and "duplicates" in err


# -- encode / decode --

def test_encode_decode_round_trip(tmp_path, spec_file, small_code):
    cw = tmp_path / "cw.txt"
    assert run("encode", "--spec", spec_file, "--count", 5, "--seed", 3, "--out", cw) == 0
    words = load_words(cw.read_text(), small_code.n)
    assert all(small_code.is_codeword(c) for c in words)
    rng = random.Random(0)
    noisy = [c ^ sum(1 << i for i in rng.sample(range(small_code.n), 2)) for c in words]
    rx = tmp_path / "rx.txt"
    rx.write_text(dump_words(noisy, small_code.n))
    dec = tmp_path / "dec.txt"
    assert run("decode", "--spec", spec_file, "--in", rx, "--out", dec) == 0
    assert load_words(dec.read_text(), small_code.n) == words


def test_interleaved_decode(tmp_path, spec_file, small_code):
    rng = random.Random(1)
    ic = InterleavedCode(small_code, 3)
    sent, blocks = [], []
    for _ in range(3):
        C = WordMatrix(small_code.n, tuple(small_code.encode(rng.getrandbits(small_code.k)) for _ in range(3)))
        sent.append(C)
        blocks.append(C + burst_error(rng, small_code.n, 3, 2))
    rx = tmp_path / "rx.txt"
    rx.write_text("".join(dump_word_matrix(b) for b in blocks))
    dec = tmp_path / "dec.txt"
    assert run("decode", "--spec", spec_file, "--in", rx, "--w", 3, "--out", dec) == 0
    got = list(load_word_matrices(dec.read_text()))
    assert got == sent and all(ic.is_codeword(C) for C in got)


# -- simulate --

def test_simulate_zero_errors(small_code):
    res = simulate(small_code, SimConfig(w=2, t=0, trials=20, seed=1))
    assert res.successes == 20 and res.success_rate == 1.0


def test_simulate_csv_reproducible(tmp_path, spec_file):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert run("simulate", "--spec", spec_file, "--w", "1,2", "--t", "1,3", "--trials", 15, "--seed", 9, "--out", p) == 0
    assert paths[0].read_text() == paths[1].read_text()
    rows = list(csv.DictReader(io.StringIO(paths[0].read_text())))
    assert tuple(rows[0].keys()) == CSV_FIELDS
    assert len(rows) == 4
    for row in rows:
        assert int(row["successes"]) + int(row["failures"]) + int(row["miscorrections"]) == 15


def test_simulate_parallel_matches_serial(small_code):
    cfg = SimConfig(w=2, t=3, trials=12, seed=5)
    a = simulate(small_code, cfg, jobs=1)
    b = simulate(small_code, cfg, jobs=2)
    assert (a.successes, a.failures, a.miscorrections) == (b.successes, b.failures, b.miscorrections)


def test_trial_streams_are_independent():
    assert trial_rng(1, 0).random() != trial_rng(1, 1).random()
    assert trial_rng(1, 7).random() == trial_rng(1, 7).random()
    E = burst_error(random.Random(0), 30, 4, 6)
    assert len(E.support()) == 6


# -- params / oracle --

def test_params_table(capsys, tmp_path):
    out = tmp_path / "p.csv"
    assert run("params", "--paper-table1", "--out", out) == 0
    text = capsys.readouterr().out
    assert "DISCREPANCY" in text and "1047319" in text
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == len(paper_table1()) == 9
    assert run("params", "--row", "3488,12,1,64") == 0
    assert "261120" in capsys.readouterr().out


def test_params_needs_rows():
    assert run("params") == 1


def test_oracle_subcommand(tmp_path, capsys):
    code = random_code(random.Random(40), 3, 12, 2, degrees=(1, 2), goppa="separable")
    p = tmp_path / "c.spec"
    p.write_text(dump_code_spec(code))
    assert run("oracle", "--spec", p, "--kind", "min-distance") == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True
    assert run("oracle", "--spec", p, "--kind", "decode") == 0
    assert json.loads(capsys.readouterr().out)["counterexamples"] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ggc", "params", "--row", "3488,7,2,129"], capture_output=True, text=True)
    assert proc.returncode == 0 and "291782" in proc.stdout
