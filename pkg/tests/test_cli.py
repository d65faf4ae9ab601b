from __future__ import annotations

from pathlib import Path

from convexcodes.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_analyze_boxes6(capsys):
    status, out, err = run(capsys, "analyze", str(CORPUS / "boxes6.code"))
    assert status == 0 and not err
    assert "code: 6 neurons, 12 codewords" in out
    assert "maximal codewords: {1,2,3} {1,2,4} {1,3,5} {2,3,6}" in out
    assert "max-intersection complete: false (witness: {1,3,5} & {2,3,6} = {3} not in code)" in out
    assert "locally good: true" in out
    assert "face {3}: non-mandatory" in out
    assert "face {4}: non-mandatory" in out
    assert "reduced betti numbers of the code complex:" not in out


def test_analyze_homology_flag(capsys):
    status, out, _ = run(capsys, "analyze", str(CORPUS / "cn_2.code"), "--homology")
    assert status == 0
    assert "reduced betti numbers of the code complex: 0 1 0 0" in out


def test_analyze_neither8(capsys):
    status, out, _ = run(capsys, "analyze", str(CORPUS / "neither8.code"))
    assert status == 0
    assert "locally good: true" in out
    assert "checked face {1}: contractible" in out
    assert "checked face {3}: contractible" in out
    assert "checked face {7}: contractible" in out


def test_analyze_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.code"
    bad.write_text("")
    status, out, err = run(capsys, "analyze", str(bad))
    assert status == 1 and "error:" in err


def test_code_of_sunflower(capsys):
    status, out, _ = run(capsys, "code-of", str(CORPUS / "sunflower3.arr"))
    assert status == 0
    assert out == "neurons: 3\n-\n1\n1 2 3\n2\n3\n"


def test_code_of_rejects_open_equality(tmp_path, capsys):
    bad = tmp_path / "bad.arr"
    bad.write_text("dimension: 1\ntopology: open\nset 1\n1 = 0\n")
    status, _, err = run(capsys, "code-of", str(bad))
    assert status == 1
    assert "equality row not allowed under open topology" in err


def test_verify_ok_and_mismatch(capsys):
    status, out, _ = run(
        capsys, "verify", str(CORPUS / "fan6.arr"), str(CORPUS / "fan6.code")
    )
    assert status == 0 and "ok" in out

    status, out, _ = run(
        capsys, "verify", str(CORPUS / "fan6.arr"), str(CORPUS / "boxes6.code")
    )
    assert status == 2
    assert "mismatch" in out
    assert "only in arrangement code:" in out and "only in given code:" in out


def test_verify_parse_error(tmp_path, capsys):
    missing = tmp_path / "nope.arr"
    status, _, err = run(capsys, "verify", str(missing), str(CORPUS / "fan6.code"))
    assert status == 1 and "error:" in err


def test_gen_family_files(tmp_path, capsys):
    status, out, _ = run(capsys, "gen", "an", "--n", "3", "--out", str(tmp_path))
    assert status == 0
    text = (tmp_path / "an_3.code").read_text()
    assert text.startswith("neurons: 7\n")
    assert len([l for l in text.splitlines()[1:] if l]) == 9

    status, _, _ = run(
        capsys, "gen", "cn", "--n", "2", "--realization", "rn", "--out", str(tmp_path)
    )
    assert status == 0
    assert (tmp_path / "cn_rn_2.arr").read_bytes() == (CORPUS / "cn_rn_2.arr").read_bytes()


def test_gen_corpus_entry(tmp_path, capsys):
    status, _, _ = run(capsys, "gen", "boxes6", "--out", str(tmp_path))
    assert status == 0
    for name in ("boxes6.code", "boxes6_open.arr", "boxes6_closed.arr"):
        assert (tmp_path / name).read_bytes() == (CORPUS / name).read_bytes()


def test_gen_errors(tmp_path, capsys):
    status, _, err = run(capsys, "gen", "an", "--n", "1", "--out", str(tmp_path))
    assert status == 1 and "error:" in err
    status, _, err = run(capsys, "gen", "nonesuch", "--out", str(tmp_path))
    assert status == 1
    status, _, err = run(capsys, "gen", "an", "--out", str(tmp_path))
    assert status == 1  # missing --n
    status, _, err = run(
        capsys, "gen", "an", "--n", "3", "--realization", "rn", "--out", str(tmp_path)
    )
    assert status == 1  # wrong realization kind for the family


def test_link_command(capsys):
    status, out, _ = run(capsys, "link", str(CORPUS / "boxes6.code"), "--face", "3")
    assert status == 0
    assert "link facets: {1,2} {1,5} {2,6}" in out
    assert "contractible" in out

    status, out, _ = run(capsys, "link", str(CORPUS / "boxes6.code"), "--face", "4")
    assert status == 0
    assert "link facets: {1,2}" in out

    status, _, err = run(capsys, "link", str(CORPUS / "boxes6.code"), "--face", "6 5")
    assert status == 1 and "not in the code's simplicial complex" in err


def test_usage_errors_exit_1(capsys):
    status, _, err = run(capsys, "frobnicate")
    assert status == 1 and "error:" in err


def test_byte_determinism(capsys, tmp_path):
    status1, out1, _ = run(capsys, "analyze", str(CORPUS / "fan8.code"), "--homology")
    status2, out2, _ = run(capsys, "analyze", str(CORPUS / "fan8.code"), "--homology")
    assert status1 == status2 == 0 and out1 == out2

    run(capsys, "gen", "fan6", "--out", str(tmp_path / "a"))
    run(capsys, "gen", "fan6", "--out", str(tmp_path / "b"))
    assert (tmp_path / "a" / "fan6.arr").read_bytes() == (tmp_path / "b" / "fan6.arr").read_bytes()
