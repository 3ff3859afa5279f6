"""The command-line interface: outputs, determinism, and exit codes."""

import json

import pytest

from cohomotopy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cohomology_torus_h1(capsys, fixture_dir):
    code, out, err = run(capsys, "cohomology", str(fixture_dir / "torus.facets"),
                         "--degree", "1")
    assert code == 0
    assert "H^1(X; Z) = Z^2" in out


def test_cohomology_rp2_h2(capsys, fixture_dir):
    code, out, _ = run(capsys, "cohomology", str(fixture_dir / "rp2.facets"),
                       "--degree", "2", "--coefficients", "Z")
    assert code == 0
    assert "H^2(X; Z) = Z/2" in out


def test_cohomology_sphere_h1_trivial(capsys, fixture_dir):
    code, out, _ = run(capsys, "cohomology",
                       str(fixture_dir / "tetra_boundary.facets"),
                       "--degree", "1")
    assert code == 0
    assert "H^1(X; Z) = 0" in out


def test_cohomology_mod_coefficients(capsys, fixture_dir):
    code, out, _ = run(capsys, "cohomology", str(fixture_dir / "rp2.facets"),
                       "--degree", "1", "--coefficients", "Z/2")
    assert code == 0
    assert "H^1(X; Z/2) = Z/2" in out


def test_sphere_maps_enriques(capsys, fixture_dir):
    code, out, _ = run(capsys, "sphere-maps",
                       str(fixture_dir / "enriques.json"), "--n", "3")
    assert code == 0
    assert "[X,S^3] = Z/4" in out
    assert "does not split" in out


def test_sphere_maps_s3(capsys, fixture_dir):
    code, out, _ = run(capsys, "sphere-maps",
                       str(fixture_dir / "simplex4_boundary.facets"),
                       "--n", "3")
    assert code == 0
    assert "[X,S^3] = Z" in out


def test_sphere_maps_split_layout(capsys, fixture_dir):
    code, out, _ = run(capsys, "sphere-maps", str(fixture_dir / "t4.json"),
                       "--n", "3")
    assert code == 0
    assert "extension splits" in out
    assert "coker(Sq2bar)" in out


def test_pi2_single_beta(capsys, fixture_dir):
    code, out, _ = run(capsys, "pi2", str(fixture_dir / "s2xs1.json"),
                       "--beta", "2")
    assert code == 0
    assert "realizable" in out
    assert "fiber over beta = Z/4" in out


def test_pi2_unrealizable(capsys, fixture_dir):
    code, out, _ = run(capsys, "pi2", str(fixture_dir / "s2xt2.json"),
                       "--beta", "1,1")
    assert code == 0
    assert "not realizable" in out


def test_pi2_beta_zero_gives_sphere_group(capsys, fixture_dir):
    code, out, _ = run(capsys, "pi2", str(fixture_dir / "s2xt2.json"),
                       "--beta", "0,0")
    assert code == 0
    assert "fiber over beta = Z^2 ⊕ Z/2" in out


def test_pi2_enumerate_table(capsys, fixture_dir):
    code, out, _ = run(capsys, "pi2", str(fixture_dir / "rp2.facets"),
                       "--enumerate", "1")
    assert code == 0
    assert "total homotopy classes" in out
    assert out.count("beta =") == 2


def test_pi2_beta_length_checked(capsys, fixture_dir):
    code, _, err = run(capsys, "pi2", str(fixture_dir / "s2xt2.json"),
                       "--beta", "1")
    assert code == 2
    assert "coordinates" in err


def test_pi2_needs_exactly_one_mode(capsys, fixture_dir):
    code, _, err = run(capsys, "pi2", str(fixture_dir / "s2xs1.json"))
    assert code == 2


def test_classify_type_fixtures(capsys, fixture_dir):
    for name, want in (("cp2", 1), ("t4", 2), ("s2xs2", 2), ("enriques", 3)):
        code, out, _ = run(capsys, "classify-type",
                           str(fixture_dir / f"{name}.json"))
        assert code == 0
        assert f"type {want}" in out


def test_classify_type_dimension_guard(capsys, fixture_dir):
    code, _, err = run(capsys, "classify-type", str(fixture_dir / "rp2.facets"))
    assert code == 2


def test_torsor_demo(capsys):
    code, out, _ = run(capsys, "torsor-demo")
    assert code == 0
    assert "True" in out


def test_missing_file_exit_3(capsys):
    code, _, err = run(capsys, "cohomology", "/nonexistent/path.facets",
                       "--degree", "1")
    assert code == 3


def test_parse_error_exit_3(capsys, tmp_path):
    bad = tmp_path / "bad.facets"
    bad.write_text("0 zebra\n")
    code, _, err = run(capsys, "cohomology", str(bad), "--degree", "0")
    assert code == 3
    assert "line 1" in err


def test_validation_error_exit_4(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dimension": 2, "groups": {
        "H1,Z": {"free_rank": 0, "torsion": [4, 2], "generators": ["a", "b"]}}}))
    code, _, err = run(capsys, "cohomology", str(bad), "--degree", "1")
    assert code == 4
    assert "torsion-divisibility" in err


def test_json_output_parses(capsys, fixture_dir):
    code, out, _ = run(capsys, "sphere-maps", str(fixture_dir / "enriques.json"),
                       "--n", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["group"]["torsion"] == [4]
    code, out, _ = run(capsys, "pi2", str(fixture_dir / "s2xs1.json"),
                       "--beta", "3", "--json")
    doc = json.loads(out)
    assert doc["fiber"]["torsion"] == [6]
    code, out, _ = run(capsys, "classify-type", str(fixture_dir / "cp2.json"),
                       "--json")
    assert json.loads(out) == {"type": 1}


def test_output_deterministic(capsys, fixture_dir):
    runs = []
    for _ in range(2):
        code, out, _ = run(capsys, "pi2", str(fixture_dir / "s2xt2.json"),
                           "--enumerate", "2")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_facet_content_autodetect(capsys, tmp_path):
    # a facet file with an unusual extension still parses (content sniff)
    p = tmp_path / "complex.txt"
    p.write_text("0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "cohomology", str(p), "--degree", "1")
    assert code == 0
    assert "H^1(X; Z) = Z" in out
