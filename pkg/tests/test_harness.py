import pytest

from sslab.errors import ConfigError
from sslab.harness.cli import main, parse_config
from sslab.harness.config import make_config, parse_ints, parse_range, read_config_file


def test_parse_helpers():
    assert parse_range("2..12") == (2, 12)
    assert parse_range("7") == (7, 7)
    assert parse_ints("1,2,5") == (1, 2, 5)
    with pytest.raises(ConfigError):
        parse_range("5..2")


def test_precedence(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("# comment\nseed = 9\np = 29\nells = 3,5\n")
    assert read_config_file(f)["seed"] == 9
    cfg, _ = parse_config(["torsion", "--config", str(f), "--p", "11", "--ells", "3"])
    assert (cfg.seed, cfg.p, cfg.ells) == (9, 11, (3,))
    assert make_config("torsion").seed == 0
    with pytest.raises(ConfigError):
        make_config("torsion", {"bogus": "1"})


def _run(argv, tmp_path, capsys):
    code = main(argv + ["--out", str(tmp_path)])
    return code, capsys.readouterr()


def test_torsion_run_writes_schema_and_meta(tmp_path, capsys):
    code, cap = _run(["torsion", "--p", "29", "--ells", "3,5", "--seed", "4"], tmp_path, capsys)
    assert code == 0
    lines = (tmp_path / "torsion.csv").read_text().splitlines()
    assert lines[0] == "# schema=sslab/1 table=torsion seed=4"
    assert lines[1].startswith("p,variant,")
    assert lines[2] == "29,basic,3;5,242,14,"
    meta = (tmp_path / "meta.txt").read_text()
    assert "seed = 4" in meta or "seed=4" in meta
    # identical rerun gives identical tables
    first = (tmp_path / "torsion.csv").read_text()
    assert _run(["torsion", "--p", "29", "--ells", "3,5", "--seed", "4"], tmp_path, capsys)[0] == 0
    assert (tmp_path / "torsion.csv").read_text() == first


@pytest.mark.parametrize(
    "argv,code,name",
    [
        (["torsion", "--p", "29", "--ells", "7"], 2, "BadEll"),
        (["qwalk", "--p", "1019", "--ell", "2"], 2, "SymmetryUnavailable"),
        (["conjgcd", "--p", "83", "--extended"], 2, "MissingLevel"),
        (["torsion", "--bogus", "1"], 2, "ConfigError"),
        (["hasse-iter", "--p", "12"], 2, None),
    ],
)
def test_exit_codes(argv, code, name, tmp_path, capsys):
    got, cap = _run(argv, tmp_path, capsys)
    assert got == code
    err = cap.err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith("error config")
    if name:
        assert f" {name}:" in err[0]


def test_io_error(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    got = main(["torsion", "--p", "29", "--ells", "3", "--out", str(blocker / "sub")])
    assert got == 4
    assert capsys.readouterr().err.startswith("error io")


def test_threads_preserve_order(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["hasse-iter", "--p-range", "100..200", "--p-mod", "4:3", "--out", str(a)]) == 0
    assert main(["hasse-iter", "--p-range", "100..200", "--p-mod", "4:3", "--threads", "2", "--out", str(b)]) == 0
    assert (a / "hasse_iter.csv").read_text() == (b / "hasse_iter.csv").read_text()
