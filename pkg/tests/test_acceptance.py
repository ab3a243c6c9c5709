"""Acceptance gate: every criterion at full size and its stated tolerance.

Each test records one PASS/FAIL line, printed in the terminal summary under
"acceptance criteria".  Running this file as a script prints the same lines.
"""

import os
import subprocess
import sys
import time

import pytest

from sgline import suites
from sgline.constructions import apply_plan_b, sample_plan_b
from sgline.recovery import recover_plan


def _summary(*results):
    return ", ".join(f"{r.name} {r.passed}/{r.passed + r.failed}" for r in results)


def _check(record, number, name, *results, extra_ok=True, extra=""):
    ok = extra_ok and all(r.ok for r in results)
    detail = _summary(*results) + (f"; {extra}" if extra else "")
    record(number, name, ok, detail)
    for r in results:
        assert r.failed == 0, r.report()
        assert r.passed > 0
    assert extra_ok, extra


@pytest.fixture(scope="module")
def battery():
    """Full-size results of every suite, keyed by name, plus the report text."""
    results = {}
    for spec in suites.default_suites():
        results[spec.name] = spec.run()
    return results


def test_criterion_1_characterization(acceptance_record):
    start = time.perf_counter()
    res = suites.characterization_suite(5000, 8, 14)
    elapsed = time.perf_counter() - start
    _check(
        acceptance_record, 1, "fast decision = line-graph oracle", res,
        extra_ok=elapsed <= 120 and res.passed == 5000, extra=f"{elapsed:.1f}s of 120s",
    )


def test_criterion_2_local_property(battery, acceptance_record):
    exhaustive = battery["local-property-exhaustive"]
    random_part = battery["local-property-multigraph"]
    _check(
        acceptance_record, 2, "circle-quantified property = local property", exhaustive, random_part,
        extra_ok=exhaustive.passed == 59809 and random_part.passed == 5000,
        extra="all simple graphs on <= 5 vertices with every signing",
    )


def test_criterion_3_balance(battery, acceptance_record):
    res = battery["balance"]
    _check(acceptance_record, 3, "switching = cut balance (+ circles on <= 10 edges)", res, extra_ok=res.passed == 5000)


def test_criterion_4_suppression(battery, acceptance_record):
    res = battery["suppression"]
    _check(acceptance_record, 4, "suppression keeps balance and cycle rank", res, extra_ok=res.passed == 5000)


def test_criterion_5_soundness(battery, acceptance_record):
    res = battery["construction-soundness"]
    _check(acceptance_record, 5, "constructions A, B, C pass the local property", res, extra_ok=res.passed == 3000)


def test_criterion_6_round_trip(battery, acceptance_record):
    res = battery["round-trip"]
    plans_ok = sum(recover_plan(apply_plan_b(p)) == p for p in map(sample_plan_b, range(1000)))
    _check(
        acceptance_record, 6, "recovery round trips", res,
        extra_ok=res.passed + res.skipped == 6000 and plans_ok == 1000,
        extra=f"{res.passed - 1000} stream graphs, {plans_ok}/1000 plans",
    )


def test_criterion_7_construction_d(battery, acceptance_record):
    res = battery["construction-d"]
    _check(acceptance_record, 7, "construction D is balanced, local, oracle-consistent", res, extra_ok=res.passed == 1000)


def test_criterion_8_two_connected(battery, acceptance_record):
    res = battery["two-connected"]
    _check(acceptance_record, 8, "degree-two test = full decision on 2-connected graphs", res, extra_ok=res.passed == 2000)


def test_criterion_9_determinism(battery, acceptance_record):
    report = suites.combined_report(list(battery.values()))
    env = dict(os.environ, PYTHONHASHSEED="12345")
    proc = subprocess.run(
        [sys.executable, "-m", "sgline.cli", "equiv-suite"], capture_output=True, text=True, env=env
    )
    same = proc.stdout == report
    acceptance_record(
        9, "byte-identical reports across runs", same and proc.returncode == 0,
        f"{len(report)} bytes, fresh process with another hash seed",
    )
    assert proc.returncode == 0, proc.stdout[-2000:]
    assert same


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
