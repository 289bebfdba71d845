import json

import pytest

from q2audit import audit
from q2audit.cli import big_int, bounds_table, int_list, main
from q2audit.errors import DomainError
from q2audit.records import AuditRecord, Report, read_jsonl, render, to_csv, to_jsonl


def small_cfg(**kw):
    base = dict(p_min=5, p_max=60, h_set=(1, 2, 3, 4), r_set=(1, 2))
    base.update(kw)
    return audit.SweepConfig(**base)


def test_record_margins():
    up = AuditRecord.upper("x", 3, 5)
    assert up.margin == 2 and up.passed
    lo = AuditRecord.lower("x", 3, 5, tolerance=1)
    assert lo.margin == -2 and not lo.passed
    assert AuditRecord.lower("x", 3, 3.5, tolerance=1).passed


def test_report_exit_codes():
    ok = Report("r", [AuditRecord.upper("a", 1, 2)])
    assert ok.exit_code == 0
    info = Report("r", [AuditRecord("a", passed=False, informational=True)])
    assert info.exit_code == 0 and len(info.informational_failures) == 1
    bad = Report("r", [AuditRecord.upper("a", 3, 2)])
    assert bad.exit_code == 1 and bad.summary()["violations"] == 1


def test_jsonl_roundtrip():
    recs = audit.run_sweep_hudson(small_cfg(p_max=200)).records
    assert read_jsonl(to_jsonl(recs)) == recs


def test_csv_header_and_rows():
    recs = audit.run_table1().records
    lines = to_csv(recs).splitlines()
    assert lines[0].split(",")[:3] == ["check", "p", "c"]
    assert len(lines) == len(recs) + 1
    with pytest.raises(ValueError):
        render(recs, "xml")


def test_sweeps_deterministic_and_parallel_equal():
    a = to_jsonl(audit.run_sweep_lemma1c(small_cfg()).records)
    b = to_jsonl(audit.run_sweep_lemma1c(small_cfg()).records)
    c = to_jsonl(audit.run_sweep_lemma1c(small_cfg(jobs=2)).records)
    assert a == b == c


def test_proposition_parallel_equal():
    cfg = dict(p_max=3000, scope="quadratic", h_set=tuple(range(1, 13)))
    a = audit.run_sweep_proposition(small_cfg(**cfg))
    b = audit.run_sweep_proposition(small_cfg(jobs=2, **cfg))
    assert to_jsonl(a.records) == to_jsonl(b.records)
    assert a.ok


def test_timing_off_means_null_elapsed():
    assert all(r.elapsed is None for r in audit.run_sweep_hudson(small_cfg()).records)
    assert all(r.elapsed is not None for r in audit.run_sweep_hudson(small_cfg(timing=True)).records)


def test_config_validation():
    with pytest.raises(DomainError):
        audit.SweepConfig(scope="cubic")
    with pytest.raises(DomainError):
        audit.SweepConfig(p_min=10, p_max=5)
    with pytest.raises(DomainError):
        audit.SweepConfig(jobs=0)


@pytest.mark.parametrize("runner", ["run_sweep_lemma1c", "run_sweep_hudson", "run_sweep_proposition"])
def test_run_case_reproduces(runner):
    cfg = small_cfg(p_max=1500, scope="quadratic", h_set=tuple(range(1, 13))) if runner == "run_sweep_proposition" else small_cfg()
    recs = getattr(audit, runner)(cfg).records
    seen = set()
    for rec in recs:
        if rec.check in seen or rec.check in ("instance_count", "hypothesis_tally"):
            continue
        seen.add(rec.check)
        again = audit.run_case(rec)
        assert again.check == rec.check
        assert again.margin == pytest.approx(rec.margin, rel=1e-12, abs=1e-12)
    assert seen


def test_run_case_analytic_and_spot():
    recs = audit.constants_records() + audit.spotcheck_records(10**7 + 19, 10**7)
    recs.append(audit.sr1_case(10.5, 3))
    recs.append(audit.convexity_case(11, 1, 1))
    for rec in recs:
        again = audit.run_case(rec)
        assert again.margin == rec.margin
    with pytest.raises(DomainError):
        audit.run_case(AuditRecord("no_such_check"))


def test_sample_primes_seeded():
    a = audit.sample_primes(5, 10**7, 10**9, seed=3)
    assert a == audit.sample_primes(5, 10**7, 10**9, seed=3)
    assert a != audit.sample_primes(5, 10**7, 10**9, seed=4)
    assert all(10**7 <= p <= 10**9 for p in a)


def test_cli_parsers():
    assert int_list("1-3,8") == (1, 2, 3, 8)
    assert big_int("1e7") == big_int("10**7") == 10**7


def test_cli_table1(capsys):
    assert main(["table1"]) == 0
    out = capsys.readouterr().out
    assert "C=11.0421" in out and "C=6.1374" in out


def test_cli_sweep_out_file(tmp_path, capsys):
    path = tmp_path / "h.jsonl"
    assert main(["sweep", "hudson", "--p-max", "300", "--out", str(path)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["violations"] == 0
    recs = read_jsonl(path.read_text())
    assert len(recs) == summary["records"]
    assert main(["case", "--from", str(path), "--line", "3"]) == 0


def test_cli_tolerance_can_force_failure(capsys):
    # a negative tolerance demands margin >= |tol|, which the table rows cannot meet
    assert main(["table1", "--tolerance", "-1", "--out", "-"]) == 1


def test_cli_usage_errors(capsys):
    assert main(["char", "--p", "15"]) == 2
    assert main(["sweep", "hudson", "--p-min", "100", "--p-max", "50"]) == 2
    with pytest.raises(SystemExit) as ei:
        main(["sweep", "nosuch"])
    assert ei.value.code == 2


def test_cli_char(capsys):
    assert main(["char", "--p", "71"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["q"] == [7, 11] and out["S"] == 6 and out["n0"] == {"7": 11}
    assert out["hudson"]["margin"] == 32
    assert main(["char", "--p", "999999937"]) == 0
    assert json.loads(capsys.readouterr().out)["q"] == [5, 7]


def test_bounds_table():
    t = bounds_table(10**7)
    assert t["C_p0"] == "11.0421"
    assert t["norton_q1"].startswith("4260.01")
    assert "n/a" in bounds_table(1009)["theorem2_H"]
