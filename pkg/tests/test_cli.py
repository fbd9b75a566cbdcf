import json
import subprocess
import sys

import pytest

from progen import cache, cli
from progen.groups import named_group


def run(tmp_path, *args, out="out"):
    d = tmp_path / out
    code = cli.main([*args, "--out", str(d)])
    return code, d


def test_genprob_exact(tmp_path):
    code, d = run(tmp_path, "genprob", "--param", "group=S3", "--param", "k=2")
    assert code == 0
    assert json.loads((d / "genprob.json").read_text())["value"] == "1/2"


def test_genprob_from_config_file(tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"group": "A5", "k": 2, "seed": 1}))
    code, d = run(tmp_path, "genprob", "--config", str(cfg))
    assert code == 0
    assert json.loads((d / "genprob.json").read_text())["value"] == "19/30"


def test_census_job(tmp_path):
    code, d = run(tmp_path, "census", "--param", "group=A5", "--param", "p=4")
    assert code == 0
    assert sorted(c["dim"] for c in json.loads((d / "census.json").read_text())) == [1, 2, 2, 4]


@pytest.mark.parametrize(
    "args",
    [
        ("genprob", "--param", "group=S3", "--param", "k=2", "--param", "bogus=1"),
        ("genprob", "--param", "group=S3"),
        ("genprob", "--param", "group=NOPE", "--param", "k=2"),
        ("genprob", "--param", "group=S3", "--param", "k=2", "--param", "method=mc"),
        ("genprob", "--param", "group=S3", "--param", "k=2", "--cap-override", "nope=3"),
        ("verify", "--param", "suite=nope"),
        ("tower", "--param", 'spec={"levels": []}', "--param", "p=2"),
    ],
)
def test_config_errors_write_nothing(tmp_path, args):
    code, d = run(tmp_path, *args)
    assert code == cli.EXIT_CONFIG
    assert not d.exists()


def test_bad_config_file(tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text("{not json")
    code, d = run(tmp_path, "census", "--config", str(cfg))
    assert code == cli.EXIT_CONFIG and not d.exists()


def test_cap_exceeded(tmp_path):
    code, d = run(tmp_path, "lattice", "--param", "group=S4", "--cap-override", "lattice=10")
    assert code == cli.EXIT_CAP
    assert not (d / "lattice.json").exists()


def test_mc_requires_seed_and_is_deterministic(tmp_path):
    args = ("genprob", "--param", "group=A5", "--param", "k=2", "--param", "method=mc", "--param", "trials=2000", "--seed", "11")
    c1, d1 = run(tmp_path, *args, out="a")
    c2, d2 = run(tmp_path, *args, out="b")
    assert c1 == c2 == 0
    assert (d1 / "genprob.json").read_bytes() == (d2 / "genprob.json").read_bytes()


def test_outputs_byte_identical(tmp_path):
    spec = json.dumps({"levels": [[{"factor": "A5", "mult": 1}], [{"factor": "A5", "mult": 2}]]})
    for out in ("a", "b"):
        code, _ = run(tmp_path, "tower", "--param", f"spec={spec}", "--param", "p=2", out=out)
        assert code == 0
    for name in ("tower.csv", "tower.json", "tower.plot.dat"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    rows = (tmp_path / "a" / "tower.csv").read_text().splitlines()
    assert rows[0] == "level,prime,order,total,h1_sum,h1_nonzero"


def test_module_and_normal_modes(tmp_path):
    code, d = run(tmp_path, "genprob", "--param", "mode=module", "--param", "group=S3", "--param", "p=2", "--param", "module=regular", "--param", "k=1")
    assert code == 0
    assert json.loads((d / "genprob.json").read_text())["value"] == "3/16"
    code, d = run(tmp_path, "genprob", "--param", "mode=normal", "--param", "group=S3", "--param", "normal=derived", "--param", "k=1", out="n")
    assert code == 0
    assert json.loads((d / "genprob.json").read_text())["value"] == "2/3"


def test_cohom_and_growth_jobs(tmp_path):
    code, d = run(tmp_path, "cohom", "--param", "group=S3", "--param", "p=2", "--param", "decomposition=true")
    assert code == 0
    data = json.loads((d / "cohom.json").read_text())
    assert data
    code, d = run(tmp_path, "growth", "--param", "group=S3", "--param", "p=2", out="g")
    assert code == 0
    assert (d / "growth.csv").read_text().splitlines()[0] == "prime,degree,order_k,sum,nonzero_count,total_classes"


def test_resolution_and_frattini_jobs(tmp_path):
    code, d = run(tmp_path, "resolution", "--param", "group=C2", "--param", "p=2")
    assert code == 0 and (d / "resolution.json").exists()
    code, d = run(tmp_path, "frattini", "--param", "group=C4", out="f")
    assert code == 0 and (d / "frattini.json").exists()


def test_verify_job(tmp_path):
    code, d = run(tmp_path, "verify", "--param", "suite=mobius")
    assert code == 0
    assert json.loads((d / "verify.json").read_text())["passed"]


def test_census_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV, str(tmp_path / "cache"))
    G = named_group("S4")
    a = cache.cached_census(G, 3)
    files = list((tmp_path / "cache").glob("*.json"))
    assert len(files) == 1
    b = cache.cached_census(G, 3)
    assert [c.label for c in a] == [c.label for c in b]
    assert all((x.module.mats[0] == y.module.mats[0]).all() for x, y in zip(a, b))
    assert cache.census_key(G, 3, 0) != cache.census_key(G, 3, 1)


def test_console_script_help():
    out = subprocess.run([sys.executable, "-m", "progen.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "genprob" in out.stdout
