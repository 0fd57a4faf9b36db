import csv
import json

from planarinv.cli import main


def run(args):
    return main(args)


def test_analyze_even_shear(tmp_path, capsys):
    out = tmp_path / "a2.json"
    assert run(["analyze", "gallery:A2:1", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["map_source"] == "gallery:A2:1"
    assert report["involution"]["passed"] is True
    assert "Theorem A(c)" in report["theorem_verdict"]
    assert report["injectivity"]["status"] == "NoCollisionFound"
    assert report["spectrum_shift_deviation"] == 0.0
    assert report["foliation_kind"] == "radial"
    assert report["orientation"]["kind"] == "preserving"


def test_analyze_identity_expression(tmp_path):
    out = tmp_path / "id.json"
    assert run(["analyze", "(x, y)", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert "Theorem A(a)" in report["theorem_verdict"]
    assert report["foliation_kind"] is None


def test_analyze_rotation_blend_pairs_failed_hypothesis_with_collision(tmp_path):
    out = tmp_path / "c.json"
    assert run(["analyze", "gallery:C", "--window", "0,6,0,6", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    # the failed hypothesis and the demonstrated non-injectivity co-occur
    assert "no hypothesis verified" in report["theorem_verdict"]
    assert report["injectivity"]["status"] == "Collision"
    assert report["injectivity"]["witness_pair"] is not None


def test_analyze_non_involution_reports_and_exits_zero(tmp_path):
    out = tmp_path / "shift.json"
    assert run(["analyze", "(x + 1, y)", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["involution"]["passed"] is False
    assert "not an involution" in report["theorem_verdict"]


def test_analyze_rejects_bad_flags(capsys):
    assert run(["analyze", "--map", "(x - , y)"]) == 1
    assert "analyze:" in capsys.readouterr().err
    assert run(["analyze", "gallery:nope"]) == 1
    assert run(["analyze", "--map", "(x, y)", "--window", "1,2,3"]) == 1


def test_analyze_accepts_negative_window_bounds(tmp_path):
    out = tmp_path / "neg.json"
    assert run(["analyze", "(x + 2*y^3, -y)", "--window", "-3,3,-3,3",
                "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["window"]["x_min"] == -3.0
    assert "Theorem B" in report["theorem_verdict"]


def test_analyze_gallery_flag_equivalent(tmp_path):
    out1 = tmp_path / "one.json"
    out2 = tmp_path / "two.json"
    assert run(["analyze", "gallery:A1:1", "--out", str(out1)]) == 0
    assert run(["analyze", "--gallery", "A1:1", "--out", str(out2)]) == 0
    r1 = json.loads(out1.read_text())
    r2 = json.loads(out2.read_text())
    r1.pop("timings_ms")
    r2.pop("timings_ms")
    assert r1 == r2


def test_reports_are_deterministic_apart_from_timings(tmp_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"run{i}.json"
        assert run(["analyze", "gallery:B", "--out", str(out)]) == 0
        outs.append(json.loads(out.read_text()))
    for r in outs:
        r.pop("timings_ms")
    assert json.dumps(outs[0]) == json.dumps(outs[1])


def test_foliate_writes_csv_and_svg(tmp_path):
    svg = tmp_path / "a1.svg"
    out_csv = tmp_path / "a1.csv"
    assert run(["foliate", "gallery:A1:1", "--svg", str(svg), "--csv", str(out_csv)]) == 0
    text = svg.read_text()
    assert text.startswith("<?xml")
    assert text.count("<polyline") >= 20
    assert "viewBox=\"-5 -5 10 10\"" in text

    with open(out_csv, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["leaf_id", "leaf_parameter", "point_index", "x", "y", "residual"]
    assert len({r[0] for r in rows[1:]}) == 21
    assert all(float(r[5]) <= 1e-6 for r in rows[1:])


def test_foliate_radial_leaf_count(tmp_path, capsys):
    svg = tmp_path / "a2.svg"
    assert run(["foliate", "gallery:A2:1", "--svg", str(svg)]) == 0
    assert "radial" in capsys.readouterr().out
    assert svg.read_text().count("<polyline") == 24


def test_foliate_uncertified_needs_force(tmp_path, capsys):
    svg = tmp_path / "c.svg"
    assert run(["foliate", "gallery:C", "--svg", str(svg)]) == 1
    assert "--force" in capsys.readouterr().err
    assert run(["foliate", "gallery:C", "--svg", str(svg), "--force"]) == 0
    assert "UNCERTIFIED" in capsys.readouterr().out
    assert svg.exists()


def test_foliate_requires_an_output(capsys):
    assert run(["foliate", "gallery:A1:1"]) == 2


def test_gallery_list(capsys):
    assert run(["gallery", "list"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    assert len(lines) == 9
    assert any(line.startswith("A1") for line in lines)


def test_gallery_show(capsys):
    assert run(["gallery", "show", "A3"]) == 0
    out = capsys.readouterr().out
    assert "(-y - ((x+y)/2)^3" in out
    assert "Theorem B" in out


def test_gallery_show_unknown(capsys):
    assert run(["gallery", "show", "D"]) == 1
    assert "unknown gallery entry" in capsys.readouterr().err
