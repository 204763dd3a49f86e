import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import origami_kz as ok

ROOT = pathlib.Path(__file__).resolve().parents[2]
INPUTS = ROOT / "data" / "inputs"
SCHEMAS = ROOT / "schemas"
CLI = os.environ.get("ORIGAMI_KZ_BIN")


def load_input(name):
    return json.loads((INPUTS / name).read_text())


def validate(doc, schema):
    jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))


def test_inputs_match_schema():
    for name in ["O.json", "torus.json", "L3.json", "eierlegende_wollmilchsau.json"]:
        validate(load_input(name), "origami_input")
    validate(load_input("identity_generators.json"), "generators_input")


def test_analyze_flagship():
    r = ok.analyze(load_input("O.json"))
    validate(r, "analyze")
    assert r["genus"] == 4
    assert r["stratum"] == [2, 2, 2]
    assert r["veech_full"] and r["orbit_size"] == 1
    assert r["horizontal_rows"] == [6, 6, 2, 2]
    assert [d["homological_dimension"] for d in r["directions"]] == [2, 2, 2]


def test_analyze_small_surfaces():
    t = ok.analyze(load_input("torus.json"))
    assert t["genus"] == 1 and t["veech_full"]
    l3 = ok.analyze(load_input("L3.json"))
    assert l3["genus"] == 2 and not l3["veech_full"]


def test_monodromy_flagship():
    r = ok.monodromy(load_input("O.json"))
    validate(r, "monodromy")
    assert r["fixture_match"] == {"charpoly_T": True, "charpoly_S": True}
    assert r["restricted"]["rank_T6_minus_I"] == 1
    assert r["restricted"]["symplectic_residual_T"] == 0


def test_monodromy_errors():
    with pytest.raises(ok.OrigamiError) as info:
        ok.monodromy(load_input("L3.json"))
    assert info.value.code == "NotInVeechGroup" and info.value.exit_code == 4
    with pytest.raises(ok.OrigamiError) as info:
        ok.analyze(ok.origami("(1,2)", "()", n=3))
    assert info.value.exit_code == 3


def test_automorphisms_rejected():
    with pytest.raises(ok.OrigamiError) as info:
        ok.monodromy(load_input("eierlegende_wollmilchsau.json"))
    assert info.value.exit_code == 4
    assert ok.analyze(load_input("eierlegende_wollmilchsau.json"))["automorphisms"] == 8


def test_certify_flagship():
    r, code = ok.certify(load_input("O.json"))
    validate(r, "certify")
    assert code == 0
    pinch = r["density"]["certificate"]["pinching_report"]
    assert pinch["charpoly"] == [1, -3, -91, -262, -91, -3, 1]
    assert pinch["galois_order"] == 48
    mod2 = r["congruence_mod2"]
    assert int(mod2["image_order"]) * int(mod2["index"]) == int(mod2["ambient_order"]) == 1451520


def test_lyapunov_small_run_is_reproducible():
    a = ok.lyapunov(load_input("O.json"), iterations=2000, trials=4, seed=7)
    b = ok.lyapunov(load_input("O.json"), iterations=2000, trials=4, seed=7)
    validate(a, "lyapunov")
    assert a == b
    ex = a["estimate"]["exponents"]
    assert ex[0] > ex[1] > ex[2] > 0


def test_census_small():
    r = ok.census(6)
    validate(r, "census")
    assert r["census"]["count"] == 1 and r["census"]["hits"][0]["squares"] == 1


def test_char_poly():
    assert ok.char_poly([[1, 0], [0, 1]]) == [1, -2, 1]
    assert ok.reference_fixtures()["f_A"] == [1, -3, -91, -262, -91, -3, 1]


@pytest.mark.skipif(not CLI, reason="ORIGAMI_KZ_BIN not set")
def test_cli_cache_and_exit_codes(tmp_path):
    def run(*args):
        return subprocess.run([CLI, "--cache-dir", str(tmp_path / "cache"), *args], capture_output=True, text=True)

    first = run("monodromy", str(INPUTS / "O.json"))
    second = run("monodromy", str(INPUTS / "O.json"))
    assert first.returncode == 0 and first.stdout == second.stdout
    assert len(list((tmp_path / "cache").glob("*.json"))) == 1
    validate(json.loads(first.stdout), "monodromy")

    lyap = [run("lyapunov", str(INPUTS / "O.json"), "--iters", "1000", "--trials", "2", "--seed", "3") for _ in range(2)]
    assert lyap[0].stdout == lyap[1].stdout

    assert run("census", "--max-squares", "10").returncode == 6
    assert run("monodromy", str(INPUTS / "L3.json")).returncode == 4
    bad = tmp_path / "bad.json"
    bad.write_text('{"h": "(1,2", "v": "()"}')
    assert run("analyze", str(bad)).returncode == 2
    ident = run("certify", str(INPUTS / "identity_generators.json"))
    assert ident.returncode == 5
    doc = json.loads(ident.stdout)
    validate(doc, "certify")
    assert doc["density"]["verdict"] is False
