"""End-to-end command line runs against temp configs and a temp cache."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from cotorsion_workbench import cli
from cotorsion_workbench.cli import load_config, load_config_dict


def _base_config() -> dict:
    return cli._bundled_config("example_a.json")


@pytest.fixture()
def env(tmp_path, monkeypatch):
    monkeypatch.setenv("WORKBENCH_CACHE_DIR", str(tmp_path / "cache"))
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(_base_config()))
    return tmp_path, cfg


def _write(tmp_path, mutate) -> Path:
    raw = _base_config()
    mutate(raw)
    p = tmp_path / "mutated.json"
    p.write_text(json.dumps(raw))
    return p


def test_load_config_bundled(env):
    _, cfg = env
    wc = load_config(cfg)
    assert wc.characteristic == 2 and wc.n == 2
    assert len(wc.row_catalog) == 3 and len(wc.triple_catalog) == 6
    assert sorted(wc.classes) == ["C", "D", "E", "F"]
    assert sorted(wc.classes["C"].names()) == ["M(1,0)", "M(1,1)"]


def test_load_config_rejects_nonprime(env):
    tmp_path, _ = env
    bad = _write(tmp_path, lambda r: r.update(characteristic=4))
    with pytest.raises(ValueError, match="prime"):
        load_config(bad)


def test_load_config_rejects_unknown_generator(env):
    tmp_path, _ = env

    def mutate(r):
        r["classes"]["C"] = {"over": "row", "generators": ["M(7,7)"]}

    with pytest.raises(ValueError, match="M\\(7,7\\)"):
        load_config(_write(tmp_path, mutate))


def test_load_config_rejects_cycle(env):
    tmp_path, _ = env

    def mutate(r):
        r["row_quiver"]["arrows"].append(["back", "2", "1"])

    with pytest.raises(ValueError, match="cycle"):
        load_config(_write(tmp_path, mutate))


def test_load_config_resolves_aliases(env):
    tmp_path, _ = env

    def mutate(r):
        r["classes"]["C"] = {"over": "row", "generators": ["P1", "S1"]}

    wc = load_config(_write(tmp_path, mutate))
    assert sorted(wc.classes["C"].names()) == ["M(1,0)", "M(1,1)"]


def test_catalog_command_counts(env, capsys):
    _, cfg = env
    assert cli.main(["catalog", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    assert "row: 3" in out and "column: 1" in out and "triple: 6" in out


def test_catalog_zero_bimodule_and_zero_cap(env, capsys):
    tmp_path, _ = env

    def no_u(r):
        r["bimodule"] = {"spaces": {}, "left_action": {}, "right_action": {}}

    assert cli.main(["catalog", "--config", str(_write(tmp_path, no_u))]) == 0
    assert "triple: 4" in capsys.readouterr().out

    def no_dims(r):
        r["budgets"]["dim_cap"] = 0
        r["classes"] = {}

    p = tmp_path / "cap0.json"
    raw = _base_config()
    no_dims(raw)
    p.write_text(json.dumps(raw))
    assert cli.main(["catalog", "--config", str(p)]) == 0
    assert "triple: 0" in capsys.readouterr().out


def test_check_pair_exit_codes(env):
    _, cfg = env
    assert cli.main(["check-pair", "--config", str(cfg), "--first", "C", "--second", "D", "--side", "right"]) == 0
    # the injectives cannot left-approximate P2, a decided failure
    assert cli.main(["check-pair", "--config", str(cfg), "--first", "C", "--second", "D", "--side", "left"]) == 1
    # zero enumeration room leaves the searches undecided, never passing
    assert cli.main(["check-pair", "--config", str(cfg), "--first", "C", "--second", "D", "--side", "right", "--budget-ext", "0"]) == 2


def test_check_pair_report_contents(env, tmp_path):
    _, cfg = env
    out = tmp_path / "report.json"
    code = cli.main([
        "check-pair", "--config", str(cfg), "--first", "C", "--second", "D",
        "--side", "right", "--json", str(out),
    ])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["schema_version"] == 1
    assert rep["status"] == "pass" and rep["exit_code"] == 0
    assert rep["config_hash"].startswith("sha256:")
    pair = rep["results"]["pair"]
    assert pair["axiom_b"]["ok"] is True
    assert pair["hereditary"]["top_vanishes"] is True
    assert set(pair["approximations"]) == {"M(0,1)", "M(1,0)", "M(1,1)"}


def test_verify_transfer_both_sides(env):
    tmp_path, cfg = env
    assert cli.main(["verify", "--config", str(cfg), "--theorem", "transfer", "--side", "right"]) == 0
    b = tmp_path / "b.json"
    b.write_text(json.dumps(cli._bundled_config("example_b.json")))
    assert cli.main(["verify", "--config", str(b), "--theorem", "transfer", "--side", "left"]) == 0


def test_verify_other_pipelines(env):
    _, cfg = env
    assert cli.main(["verify", "--config", str(cfg), "--theorem", "ext-formulas"]) == 0
    assert cli.main(["verify", "--config", str(cfg), "--theorem", "perp"]) == 0
    assert cli.main(["verify", "--config", str(cfg), "--theorem", "vee-wedge"]) == 0
    assert cli.main(["verify", "--config", str(cfg), "--theorem", "converse", "--side", "right"]) == 0


def test_red_alert_exit_code(env, monkeypatch):
    _, cfg = env

    class Stub:
        status = "red_alert"

    monkeypatch.setattr(cli, "verify_transfer_theorem", lambda *a, **k: Stub())
    monkeypatch.setattr(cli, "_transfer_dict", lambda rep: {"status": rep.status})
    code = cli.main(["verify", "--config", str(cfg), "--theorem", "transfer", "--side", "right"])
    assert code == 3


def test_perp_and_construct_commands(env, tmp_path):
    _, cfg = env
    out = tmp_path / "perp.json"
    assert cli.main(["perp", "--config", str(cfg), "--class", "C", "--side", "right", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["results"]["perp"] == ["M(1,0)", "M(1,1)"]
    assert rep["results"]["perp_aliased"] == ["S1", "P1"]

    out2 = tmp_path / "construct.json"
    assert cli.main(["construct", "--config", str(cfg), "--first", "C", "--second", "E", "--json", str(out2)]) == 0
    rep2 = json.loads(out2.read_text())
    assert rep2["results"]["monic"] == ["T(0,0|1)", "T(1,0|0)", "T(1,1|1)"]
    assert rep2["results"]["aliased"]["monic"] == ["(0,K)", "(S1,0)", "(P1,K)"]


def test_reports_are_byte_identical(env, tmp_path):
    _, cfg = env
    a, b = tmp_path / "r1.json", tmp_path / "r2.json"
    argv = ["verify", "--config", str(cfg), "--theorem", "transfer", "--side", "right"]
    assert cli.main(argv + ["--json", str(a)]) == 0
    assert cli.main(argv + ["--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    # a different seed is a different config, visible in the hash
    h0 = load_config(cfg).config_hash
    h1 = load_config(cfg, {"seed": 1}).config_hash
    assert h0 != h1


def test_reproduce_example(env, capsys):
    assert cli.main(["reproduce-example"]) == 0
    out = capsys.readouterr().out
    assert "6/6 class listings match, 2/2 verdicts match" in out


def test_reproduce_example_other_characteristic(env, capsys):
    assert cli.main(["reproduce-example", "--characteristic", "3"]) == 0
    assert "6/6 class listings match" in capsys.readouterr().out


def test_cache_rebuild_after_corruption(env, monkeypatch):
    tmp_path, cfg = env
    monkeypatch.setattr(cli, "_MEMO", {})
    assert cli.main(["catalog", "--config", str(cfg)]) == 0
    cache_dir = tmp_path / "cache"
    files = [p for p in cache_dir.iterdir() if p.suffix == ".json"]
    assert files
    for p in files:
        p.write_text("not json at all")
    monkeypatch.setattr(cli, "_MEMO", {})
    assert cli.main(["reproduce-example"]) == 0
    # the corrupt entry was replaced by a fresh valid one
    rebuilt = json.loads(files[0].read_text())
    assert rebuilt["content_hash"] == files[0].stem


def test_cache_roundtrip_preserves_catalog(env, monkeypatch):
    tmp_path, cfg = env
    monkeypatch.setattr(cli, "_MEMO", {})
    first = load_config(cfg)
    monkeypatch.setattr(cli, "_MEMO", {})
    second = load_config(cfg)
    assert first.triple_catalog.names == second.triple_catalog.names
    assert [e.total_dim for e in first.triple_catalog.entries] == [
        e.total_dim for e in second.triple_catalog.entries
    ]


def test_main_reports_config_errors(env, capsys):
    tmp_path, _ = env
    bad = _write(tmp_path, lambda r: r.update(characteristic=9))
    assert cli.main(["catalog", "--config", str(bad)]) == 1
    assert "prime" in capsys.readouterr().err
    missing = tmp_path / "nope.json"
    assert cli.main(["catalog", "--config", str(missing)]) == 1


def test_unknown_class_name_is_reported(env, capsys):
    _, cfg = env
    assert cli.main(["check-pair", "--config", str(cfg), "--first", "X", "--second", "D", "--side", "right"]) == 1
    assert "no class named" in capsys.readouterr().err


def test_n_override_changes_run(env, tmp_path):
    _, cfg = env
    out = tmp_path / "n1.json"
    assert cli.main([
        "check-pair", "--config", str(cfg), "--first", "C", "--second", "D",
        "--side", "right", "--n", "1", "--json", str(out),
    ]) == 0
    rep = json.loads(out.read_text())
    assert rep["results"]["pair"]["n"] == 1
    assert rep["arguments"]["n"] == 1
