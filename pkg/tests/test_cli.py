import csv
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from harmw import specfile
from harmw.cli import main
from harmw.config import Defaults, from_env
from harmw.errors import SpecFileError

SMALL = ["--grid-radial", "16", "--grid-angular", "120"]


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def identity_spec(tmp_path):
    return write(tmp_path, "id.json", {"family": {"name": "identity"}})


@pytest.fixture
def koebe_spec(tmp_path):
    return write(tmp_path, "k.json", {"family": {"name": "harmonic_koebe", "order": 64}})


class TestSpecFile:
    def test_coefficient_form(self):
        spec = specfile.loads('{"alpha": 1, "h": [[0,0],[1,0],[0.25,0.5]], "g": [[0,0],[0,0],[0.1,0]]}')
        f = spec.build()
        assert f.h[2] == 0.25 + 0.5j and f.g[2] == 0.1 and spec.default_alpha == 1.0

    @pytest.mark.parametrize(
        "text",
        [
            '{"family": {"name": "sharp_single", "alpha": 1.0, "n": 2}}',
            '{"family": {"name": "random_member", "alpha": 0.5, "order": 12, "seed": 4, "slack": 0.1}}',
            '{"h": [[0,0],[1,0],[0.1,-0.2]], "g": [[0,0],[0,0],[0,0.05]]}',
        ],
    )
    def test_round_trip(self, text):
        spec = specfile.loads(text)
        assert specfile.loads(specfile.dumps(spec)) == spec
        assert specfile.dumps(specfile.loads(specfile.dumps(spec))) == specfile.dumps(spec)

    @given(st.lists(st.tuples(st.floats(-1, 1), st.floats(-1, 1)), min_size=1, max_size=10), st.floats(0, 5))
    @settings(max_examples=50)
    def test_round_trip_lossless(self, tail, alpha):
        h = [[0.0, 0.0], [1.0, 0.0]] + [list(t) for t in tail]
        g = [[0.0, 0.0], [0.0, 0.0]] + [list(t) for t in tail]
        spec = specfile.parse_spec({"alpha": alpha, "h": h, "g": g})
        again = specfile.loads(specfile.dumps(spec))
        assert again == spec

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ('{"h": [[0,0],[1,0]]', "line 1"),
            ('{\n  "h": [[0,0],[1,0]],\n  "g": [[0,0]],,\n}', "line 3"),
            ('[1, 2]', "top level"),
            ('{"h": [[0,0],[1,0]]}', "'g'"),
            ('{"h": [[0,0],[1,0]], "g": [[0,0],[0,0]], "beta": 1}', "beta"),
            ('{"h": [[0,0],[1]], "g": [[0,0]]}', "entry 1"),
            ('{"h": [[0,0],[2,0]], "g": [[0,0]]}', "a_1"),
            ('{"h": [[0,0],[1,0]], "g": [[0,0]], "alpha": "one"}', "alpha"),
            ('{"family": {"name": "sharp_sum", "alpha": 1}}', "order"),
            ('{"family": {"name": "identity"}, "alpha": 1}', "next to"),
        ],
    )
    def test_malformed(self, text, fragment):
        with pytest.raises(SpecFileError) as info:
            specfile.loads(text)
        assert fragment in str(info.value)


class TestCheck:
    def test_identity(self, capsys, identity_spec):
        code, out, _ = run(capsys, "check", identity_spec, *SMALL)
        assert code == 0
        report = json.loads(out)
        statuses = {c["name"]: c["status"] for c in report["checks"]}
        assert set(statuses.values()) <= {"certified", "supported"}
        assert report["grid"]["radial_count"] == 16
        assert "wall_time_s" in report

    def test_refuted_witness(self, capsys, tmp_path):
        spec = write(tmp_path, "f.json", {"alpha": 1, "h": [[0, 0], [1, 0]], "g": [[0, 0], [0, 0], [0.5, 0]]})
        code, out, _ = run(capsys, "check", spec)
        assert code == 2
        wh0 = [c for c in json.loads(out)["checks"] if c["name"] == "wh0_margin"][0]
        assert wh0["status"] == "refuted"
        assert wh0["numbers"]["min_value"] == pytest.approx(1 - 2 * 0.999, abs=1e-12)
        assert abs(complex(*wh0["numbers"]["argmin"])) == pytest.approx(0.999)

    def test_sharp_single(self, capsys, tmp_path):
        spec = write(tmp_path, "s.json", {"family": {"name": "sharp_single", "alpha": 1.0, "n": 2}})
        code, out, _ = run(capsys, "check", spec)
        assert code == 0
        wh0 = [c for c in json.loads(out)["checks"] if c["name"] == "wh0_margin"][0]
        assert wh0["status"] == "supported"
        assert wh0["numbers"]["min_value"] == pytest.approx(1 - 0.999, abs=1e-12)

    def test_koebe_refuted(self, capsys, koebe_spec):
        code, out, _ = run(capsys, "check", koebe_spec, "--alpha", "1")
        assert code == 2
        statuses = {c["name"]: c["status"] for c in json.loads(out)["checks"]}
        assert statuses["coefficient_bounds"] == "refuted" and statuses["wh0_margin"] == "refuted"

    def test_out_file(self, capsys, identity_spec, tmp_path):
        target = tmp_path / "r.json"
        code, out, _ = run(capsys, "check", identity_spec, *SMALL, "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["alpha"] == 1.0

    def test_seed_override(self, capsys, tmp_path):
        spec = write(tmp_path, "r.json", {"family": {"name": "random_member", "alpha": 1.0, "order": 8, "seed": 1, "slack": 0.1}})
        run(capsys, "check", spec, *SMALL)
        code, out, _ = run(capsys, "check", spec, *SMALL, "--seed", "9", "--order", "12")
        assert code == 0
        assert json.loads(out)["spec"]["family"]["seed"] == 9
        assert json.loads(out)["spec"]["family"]["order"] == 12


class TestErrors:
    def test_malformed_spec(self, capsys, tmp_path):
        spec = write(tmp_path, "bad.json", '{\n "h": [[0,0],[1,0]],\n "g": oops\n}')
        code, _, err = run(capsys, "check", spec)
        assert code == 1 and "line 3" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "check", str(tmp_path / "nope.json"))
        assert code == 1 and "error" in err

    def test_bad_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["check"])
        assert info.value.code == 1

    def test_bad_grid(self, capsys, identity_spec):
        code, _, err = run(capsys, "check", identity_spec, "--rmax", "1.5")
        assert code == 1 and "r_max" in err

    def test_env_override(self, capsys, identity_spec, monkeypatch):
        monkeypatch.setenv("HARMW_GRID_RADIAL", "8")
        monkeypatch.setenv("HARMW_ALPHA", "2.5")
        code, out, _ = run(capsys, "check", identity_spec, "--grid-angular", "60")
        report = json.loads(out)
        assert report["grid"]["radial_count"] == 8 and report["alpha"] == 2.5
        code, out, _ = run(capsys, "check", identity_spec, "--grid-angular", "60", "--alpha", "0.5")
        assert json.loads(out)["alpha"] == 0.5

    def test_bad_env(self, capsys, identity_spec, monkeypatch):
        monkeypatch.setenv("HARMW_RMAX", "lots")
        code, _, err = run(capsys, "check", identity_spec)
        assert code == 1 and "HARMW_RMAX" in err

    def test_from_env(self):
        d = from_env({"HARMW_TOL": "1e-6", "HARMW_ORDER": "32", "UNRELATED": "x"})
        assert d == Defaults(tol=1e-6, order=32)


class TestOtherCommands:
    def test_bounds(self, capsys, koebe_spec, identity_spec):
        code, out, _ = run(capsys, "bounds", koebe_spec, "--alpha", "1")
        assert code == 2 and not json.loads(out)["bounds"]["passed"]
        code, out, _ = run(capsys, "bounds", identity_spec)
        assert code == 0

    def test_growth(self, capsys, tmp_path):
        spec = write(tmp_path, "s.json", {"family": {"name": "sharp_sum", "alpha": 1.0, "order": 64}})
        code, out, _ = run(capsys, "growth", spec, "--rmax", "0.9", *SMALL)
        assert code == 0 and json.loads(out)["status"] == "supported"

    def test_growth_hypothesis(self, capsys, identity_spec):
        code, _, err = run(capsys, "growth", identity_spec, "--alpha", "2", *SMALL)
        assert code == 1 and "alpha" in err
        code, out, _ = run(capsys, "growth", identity_spec, "--alpha", "2", "--allow-out-of-hypothesis", *SMALL)
        assert code == 0 and json.loads(out)["status"] == "unproven-regime"

    def test_convolve(self, capsys, tmp_path):
        s = write(tmp_path, "s.json", {"family": {"name": "sharp_single", "alpha": 1.0, "n": 2}})
        out_path = tmp_path / "c.json"
        code, out, _ = run(capsys, "convolve", s, s, *SMALL, "--out", str(out_path))
        assert code == 0
        f = specfile.load(out_path).build()
        assert f.g[2] == pytest.approx(1 / 16)

    def test_tilde(self, capsys, tmp_path):
        f = write(tmp_path, "f.json", {"family": {"name": "random_member", "alpha": 1.0, "order": 10, "seed": 2, "slack": 0.1}})
        delta = write(tmp_path, "d.json", {"h": [[0, 0], [1, 0]], "g": [[0, 0]]})
        code, out, _ = run(capsys, "convolve", f, delta, "--tilde", *SMALL)
        res = specfile.parse_spec(json.loads(out)["result"]).build()
        assert code == 0 and res.order == 1

    def test_sections(self, capsys, tmp_path):
        s = write(tmp_path, "s.json", {"family": {"name": "sharp_sum", "alpha": 1.0, "order": 64}})
        code, out, _ = run(capsys, "sections", s, "--p", "2", "--q", "2", "--tol", "1e-6", *SMALL)
        row = json.loads(out)["sections"][0]
        assert code == 0
        assert row["case"] == "p_eq_q_ge_2" and row["guaranteed_radius"] == 0.5
        assert row["effective_radius"] == pytest.approx(0.5, abs=1e-5)

    def test_sections_needs_both(self, capsys, identity_spec):
        code, _, err = run(capsys, "sections", identity_spec, "--p", "2")
        assert code == 1

    def test_radius(self, capsys):
        code, out, _ = run(capsys, "radius", "--p", "6", "--q", "2")
        d = json.loads(out)
        assert code == 0
        assert d["quintic_radius"]["value"] == pytest.approx(0.433797, abs=1e-6)
        assert d["golden_radius"] == pytest.approx(0.381966011, abs=1e-9)
        assert d["case"]["case"] == "p_ge_4_q2"

    def test_emit_boundary(self, capsys, identity_spec, tmp_path):
        target = tmp_path / "b.csv"
        code, _, _ = run(capsys, "emit-boundary", identity_spec, "--radius", "0.5", "--samples", "100", "--out", str(target))
        assert code == 0
        rows = list(csv.DictReader(target.open()))
        assert len(rows) == 100
        w = np.array([complex(float(r["re"]), float(r["im"])) for r in rows])
        assert np.allclose(np.abs(w), 0.5, atol=1e-15)
        assert float(rows[25]["theta"]) == pytest.approx(np.pi / 2)

    def test_emit_boundary_koebe(self, capsys, koebe_spec, tmp_path):
        target = tmp_path / "k.csv"
        assert run(capsys, "emit-boundary", koebe_spec, "--radius", "0.9", "--samples", "360", "--out", str(target))[0] == 0
        assert len(target.read_text().splitlines()) == 361

    @pytest.mark.parametrize("r", ["0", "1", "1.2"])
    def test_emit_boundary_radius(self, capsys, identity_spec, tmp_path, r):
        code, _, err = run(capsys, "emit-boundary", identity_spec, "--radius", r, "--out", str(tmp_path / "x.csv"))
        assert code == 1 and "radius" in err


class TestCheckReport:
    def statuses(self, f, alpha):
        from harmw import DiskGrid, EpsilonSample
        from harmw.reports import check_report

        report, code = check_report(f, alpha, DiskGrid(0.999, 16, 120), EpsilonSample(24), timed=False)
        assert "wall_time_s" not in report
        return {c["name"]: c["status"] for c in report["checks"]}, code

    def test_certified_member(self):
        from harmw import random_member

        st_, code = self.statuses(random_member(1.0, 20, 0, 0.1), 1.0)
        assert code == 0 and st_["sufficient_condition"] == "certified" and st_["wh0_margin"] == "certified"

    def test_inconclusive_sum(self):
        from harmw import sharp_single

        # coefficient sum exactly 1, grid margin 1 - r_max
        st_, code = self.statuses(sharp_single(1.0, 2), 1.0)
        assert st_["sufficient_condition"] == "inconclusive" and st_["wh0_margin"] == "supported"

    def test_starlike_unproven_below_one(self):
        from harmw import random_member

        st_, _ = self.statuses(random_member(0.5, 20, 1, 0.1), 0.5)
        assert st_["starlike"] == "unproven-regime"

    def test_degenerate_point_refutes(self):
        from harmw import AnalyticSeries, make_harmonic

        f = make_harmonic(AnalyticSeries.from_list([0, 1, 1 / 0.999]), AnalyticSeries.from_list([0]))
        st_, code = self.statuses(f, 1.0)
        assert st_["starlike"] == "refuted" and code == 2
