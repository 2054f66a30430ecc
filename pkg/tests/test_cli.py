"""Certificate suite runner: encoding, report schema, determinism, pinned
verdicts, and the command-line entry point."""

import enum
import json
import pathlib
from fractions import Fraction

import pytest

from certkit import certify_cli as cli

DATA = pathlib.Path(__file__).parent / "data"


FLAGGED_IDS = frozenset({
    "c3-omega-v5-twist",
    "coefficient-vector-v5",
    "conic-case-split-regression",
    "l014-base-ray-note",
    "l023-labeling-inconsistency",
    "projection-identity-claim",
    "projection-member-s2-tu",
    "quotient-hilbert-claim",
    "twisted-c3-v5",
})

SUITE_SIZES = {
    "schubert": 16,
    "toric": 22,
    "veronese": 25,
    "hodge": 18,
    "numerology": 13,
}


# ---------------------------------------------------------------------------
# value encoding
# ---------------------------------------------------------------------------


class _Color(enum.Enum):
    RED = "Red"


def test_encode_value_scalars():
    assert cli.encode_value(True) is True
    assert cli.encode_value(False) is False
    assert cli.encode_value(5) == "5"
    assert cli.encode_value(-3) == "-3"
    assert cli.encode_value(Fraction(7, 2)) == "7/2"
    assert cli.encode_value(Fraction(4, 2)) == "2"
    assert cli.encode_value("x") == "x"
    assert cli.encode_value(None) is None
    assert cli.encode_value(_Color.RED) == "Red"


def test_encode_value_containers():
    assert cli.encode_value((1, 2)) == ["1", "2"]
    assert cli.encode_value([Fraction(1, 3)]) == ["1/3"]
    assert cli.encode_value({2: 1, 1: 2}) == {"1": "2", "2": "1"}
    assert cli.encode_value({3, 1, 2}) == ["1", "2", "3"]
    assert list(cli.encode_value({"b": 0, "a": 1})) == ["a", "b"]


def test_encode_value_bool_not_collapsed_to_int():
    # bool is an int subclass; the encoder must branch on bool first
    assert cli.encode_value([True, 1]) == [True, "1"]


def test_encode_value_rejects_unknown_types():
    with pytest.raises(TypeError, match="value not encodable"):
        cli.encode_value(object())


def test_make_certificate_verdicts():
    ok = cli.make_certificate("a", "d", "trivial", 1, 1)
    assert ok.verdict == "pass"
    bad = cli.make_certificate("a", "d", "derived", 1, 2)
    assert bad.verdict == "fail"
    flagged = cli.make_certificate("a", "d", "published", 1, 2,
                                   flag_on_mismatch=True)
    assert flagged.verdict == "flagged"
    # the flag only fires on a mismatch
    agree = cli.make_certificate("a", "d", "published", 1, 1,
                                 flag_on_mismatch=True)
    assert agree.verdict == "pass"


def test_make_certificate_rejects_unknown_tag():
    with pytest.raises(ValueError, match="unknown provenance tag"):
        cli.make_certificate("a", "d", "guessed", 1, 1)


# ---------------------------------------------------------------------------
# suite runs and report schema
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def all_report():
    return cli.run_suite("all")


def test_run_all_counts(all_report):
    counts = all_report.counts()
    assert counts == {"pass": 85, "fail": 0, "flagged": 9}
    assert len(all_report.certificates) == 94


def test_run_all_flagged_ids_frozen(all_report):
    flagged = {c.id for c in all_report.certificates if c.verdict == "flagged"}
    assert flagged == FLAGGED_IDS


def test_suite_sizes():
    for name, size in SUITE_SIZES.items():
        assert len(cli.run_suite(name).certificates) == size
    assert sum(SUITE_SIZES.values()) == 94


def test_certificates_sorted_and_unique(all_report):
    ids = [c.id for c in all_report.certificates]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))


def test_run_suite_rejects_unknown_name():
    with pytest.raises(ValueError, match="unknown suite"):
        cli.run_suite("spectral")


def test_run_suite_rejects_duplicate_ids(monkeypatch):
    def twice(config):
        c = cli.make_certificate("dup-id", "d", "trivial", 1, 1)
        return [c, c]
    monkeypatch.setitem(cli._SUITE_BUILDERS, "numerology", twice)
    with pytest.raises(ValueError, match="duplicate certificate id"):
        cli.run_suite("numerology")


def test_pinned_published_discrepancy(all_report):
    by_id = {c.id: c for c in all_report.certificates}
    twist = by_id["c3-omega-v5-twist"]
    assert twist.provenance == "published"
    assert twist.verdict == "flagged"
    assert cli.encode_value(twist.expected) == "620"
    assert cli.encode_value(twist.computed) == "20"


def test_pinned_diagonal_certificates(all_report):
    by_id = {c.id: c for c in all_report.certificates}
    smooth = by_id["l014-delta1-smooth"]
    assert smooth.verdict == "pass"
    assert smooth.expected is False and smooth.computed is False

    labeling = by_id["l023-labeling-inconsistency"]
    assert labeling.verdict == "flagged"
    assert set(labeling.expected) == set(labeling.computed)
    assert labeling.expected != labeling.computed


def test_report_schema_valid(all_report):
    data = cli.report_to_dict(all_report)
    assert data["suite"] == "all"
    assert data["seed"] == "0"
    assert data["summary"] == {
        "total": "94", "pass": "85", "flagged": "9", "fail": "0",
    }
    for cert in data["certificates"]:
        assert set(cert) == {"id", "description", "expected", "computed",
                             "verdict"}
        assert set(cert["expected"]) == {"provenance", "value"}


def test_validate_rejects_untagged_expectation():
    data = {
        "certificates": [{"id": "x", "expected": "5", "verdict": "pass"}],
        "summary": {"total": "1", "pass": "1", "flagged": "0", "fail": "0"},
    }
    with pytest.raises(ValueError, match="untagged expectation"):
        cli.validate_report_data(data)


def test_validate_rejects_unknown_tag():
    data = {
        "certificates": [{
            "id": "x",
            "expected": {"provenance": "hearsay", "value": "5"},
            "verdict": "pass",
        }],
        "summary": {"total": "1", "pass": "1", "flagged": "0", "fail": "0"},
    }
    with pytest.raises(ValueError, match="unknown provenance tag"):
        cli.validate_report_data(data)


def test_validate_rejects_unknown_verdict():
    data = {
        "certificates": [{
            "id": "x",
            "expected": {"provenance": "trivial", "value": "5"},
            "verdict": "maybe",
        }],
        "summary": {"total": "1", "pass": "1", "flagged": "0", "fail": "0"},
    }
    with pytest.raises(ValueError, match="unknown verdict"):
        cli.validate_report_data(data)


def test_validate_rejects_inconsistent_summary():
    data = {
        "certificates": [{
            "id": "x",
            "expected": {"provenance": "trivial", "value": "5"},
            "verdict": "pass",
        }],
        "summary": {"total": "2", "pass": "2", "flagged": "0", "fail": "0"},
    }
    with pytest.raises(ValueError, match="summary counts inconsistent"):
        cli.validate_report_data(data)


# ---------------------------------------------------------------------------
# determinism
# ---------------------------------------------------------------------------


def test_render_json_byte_identical():
    first = cli.render_json(cli.run_suite("all"))
    second = cli.render_json(cli.run_suite("all"))
    assert first == second
    assert first.endswith("\n")
    json.loads(first)


def test_per_suite_determinism():
    for name in SUITE_SIZES:
        assert cli.render_json(cli.run_suite(name)) == \
            cli.render_json(cli.run_suite(name))


def test_seed_echoed_but_not_in_config_block(all_report):
    data = cli.report_to_dict(all_report)
    assert "seed" not in data["config"]
    assert data["config"]["trials"] == "500"
    assert data["config"]["excluded_genus"] == ["11"]


def test_render_text_layout(all_report):
    text = cli.render_text(cli.run_suite("numerology"))
    lines = text.splitlines()
    assert lines[0] == "suite: numerology"
    assert lines[1] == "seed: 0"
    assert lines[2].startswith("config: ")
    assert lines[3].startswith("summary: total=13 pass=")
    assert any(line.startswith("[PASS   ] ") for line in lines)
    assert any("expected (derived): " in line for line in lines)


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------


def test_main_run_all_exits_zero(capsys):
    assert cli.main(["run", "all"]) == 0
    out = capsys.readouterr().out
    assert "summary: total=94 pass=85 flagged=9 fail=0" in out


def test_main_run_json_format(capsys):
    assert cli.main(["run", "numerology", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["suite"] == "numerology"
    assert data["summary"]["fail"] == "0"


def test_main_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert cli.main(["run", "numerology", "--format", "json",
                     "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["summary"]["total"] == "13"


def test_main_rejects_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        cli.main(["run", "mystery"])
    assert exc.value.code == 2


def test_main_rejects_bad_knobs():
    with pytest.raises(SystemExit) as exc:
        cli.main(["run", "all", "--trials", "-1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["run", "all", "--degree-bound", "1"])
    assert exc.value.code == 2


def test_main_seed_changes_echo(capsys):
    assert cli.main(["run", "numerology", "--seed", "7"]) == 0
    assert "seed: 7" in capsys.readouterr().out


def test_fan_check_bundle_file(capsys):
    assert cli.main(["fan", "check", str(DATA / "bundle_fan_s14.json")]) == 0
    out = capsys.readouterr().out
    assert "dimension: 3" in out
    assert "rays: 6" in out
    assert "maximal cones: 8" in out
    assert "simplicial: yes" in out
    assert "smooth: yes" in out
    assert "complete: yes" in out
    assert "fibration covector: (1, 0, 0)" in out


def test_fan_check_plane_has_no_fibration(capsys):
    assert cli.main(["fan", "check", str(DATA / "p2.json")]) == 0
    out = capsys.readouterr().out
    assert "fibration covector: none" in out
    assert "complete: yes" in out


def test_fan_check_bad_ray(capsys):
    assert cli.main(["fan", "check", str(DATA / "bad_ray.json")]) == 2
    err = capsys.readouterr().err
    assert "error: ray not primitive: [2, 0, 0]" in err


def test_fan_check_missing_file(capsys):
    assert cli.main(["fan", "check", str(DATA / "no_such_fan.json")]) == 2
    assert "error:" in capsys.readouterr().err
