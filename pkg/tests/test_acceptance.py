"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every comparison is exact integer equality; the only tolerances are the
stated wall-clock budgets, asserted after the work completes.
"""

import json
import time

from branchtab import cli, selftest


def _criterion(number, title, budget_seconds, body):
    started = time.monotonic()
    try:
        instances = body()
    except BaseException:
        print(f"FAIL criterion {number}: {title}")
        raise
    elapsed = time.monotonic() - started
    print(f"PASS criterion {number}: {title} "
          f"({instances} instances, {elapsed:.2f}s)")
    assert elapsed < budget_seconds, (
        f"criterion {number} took {elapsed:.1f}s, budget {budget_seconds}s")


def test_criterion_1_lr_golden_value():
    def body():
        instances, failure = selftest.check_lr_golden()
        assert failure is None, failure
        return instances

    _criterion(1, "LR coefficient 3 with words 1111222/1211212/1211221",
               1.0, body)


def test_criterion_2_worked_examples():
    def body():
        instances, failure = selftest.check_worked_examples()
        assert failure is None, failure
        # the CLI listing reproduces the displayed pair as well
        code = cli.main(["branch", "--group", "GL4", "--lambda", "2,1,-2,-2",
                         "--weight", "2,-1,-2,0", "--list"])
        assert code == 0
        return instances

    _criterion(2, "worked examples 5 (O5), 1 (GL4), 3 (Sp6) with listings",
               1.0, body)


def test_criterion_3_theorem_equivalence():
    def body():
        instances, failure = selftest.check_route_equivalence(
            max_size=6, o_max=5, gl_max=4, sp_max=3)
        assert failure is None, failure
        return instances

    _criterion(3, "iterate = tableau count = chain count at desk scale",
               300.0, body)


def test_criterion_4_stable_minimal_consistency():
    def body():
        instances, failure = selftest.check_stable_minimal(
            max_size=6, o_max=5, gl_max=4, sp_max=3)
        assert failure is None, failure
        return instances

    _criterion(4, "all-ones blocks: stable sum equals tableau count",
               120.0, body)


def test_criterion_5_transitivity():
    def body():
        instances, failure = selftest.check_transitivity()
        assert failure is None, failure
        assert instances >= 50, f"only {instances} in-range instances"
        return instances

    _criterion(5, "two-block stable + factor counts reproduce tableau count",
               300.0, body)


def test_criterion_6_corollary_closure():
    def body():
        instances, failure = selftest.check_corollary_closure(
            max_row=8, max_rank=6)
        assert failure is None, failure
        return instances

    _criterion(6, "one-row and one-column closed forms match enumeration",
               120.0, body)


def test_criterion_7_associated_symmetry():
    def body():
        instances, failure = selftest.check_assoc_symmetry(
            max_size=6, max_rank=5)
        assert failure is None, failure
        return instances

    _criterion(7, "determinant-twist symmetry of the one-step rule",
               60.0, body)


def test_criterion_8_oracle_equivalence():
    def body():
        total = 0
        for check, kwargs in (
            (selftest.check_lr_oracle, {"max_total": 8}),
            (selftest.check_howe, {"max_dim": 4, "max_degree": 4}),
            (selftest.check_dimension_identity,
             {"max_size": 6, "o_max": 5, "gl_max": 4, "sp_max": 3}),
        ):
            instances, failure = check(**kwargs)
            assert failure is None, failure
            total += instances
        return total

    _criterion(8, "monomial LR oracle, graded dimensions, Weyl identity",
               600.0, body)
