import pytest

from polygroup import verify
from polygroup.verify import SUITES, random_polytope, run_suite, run_trial

FAST_3D = ["cancellation", "face-additivity", "shadow", "cutting", "shadow-partition", "stretching", "gluing"]


@pytest.mark.parametrize("suite", sorted(SUITES))
@pytest.mark.parametrize("n", [1, 2])
def test_suites_pass(suite, n):
    r = run_suite(suite, 4, seed=11, n=n, bound=4)
    assert r.ok, r.counterexample


@pytest.mark.parametrize("suite", FAST_3D)
def test_suites_pass_3d(suite):
    r = run_suite(suite, 2, seed=5, n=3, bound=3)
    assert r.ok, r.counterexample


def test_trials_are_deterministic():
    assert run_trial("euler", 3, 17, 2, 5) == run_trial("euler", 3, 17, 2, 5)
    a = run_suite("shadow", 6, seed=2)
    b = run_suite("shadow", 6, seed=2)
    assert a.to_json() | {"wall_time": 0} == b.to_json() | {"wall_time": 0}


def test_parallel_matches_serial():
    a = run_suite("cutting", 4, seed=9)
    b = run_suite("cutting", 4, seed=9, parallel=True)
    assert a.to_json() | {"wall_time": 0} == b.to_json() | {"wall_time": 0}


def test_random_polytopes_stay_in_the_box():
    rng = verify.trial_rng("x", 0, 0)
    for _ in range(20):
        P = random_polytope(rng, 3, 2)
        assert all(abs(c) <= 2 for v in P.vertices for c in v)
        assert P.is_integral


def test_counterexample_replays(monkeypatch):
    def picky(rng, n, B, inst):
        P = inst.add("P", random_polytope(rng, n, B))
        return len(P.vertices) < 4

    monkeypatch.setitem(SUITES, "picky", picky)
    r = run_suite("picky", 30, seed=4)
    assert not r.ok
    ce = r.counterexample
    assert f"--index {ce['index']}" in ce["replay"]
    again = run_suite("picky", 1, seed=4, first_index=ce["index"])
    assert again.counterexample["polytopes"] == ce["polytopes"]


def test_errors_become_counterexamples(monkeypatch):
    def broken(rng, n, B, inst):
        raise AssertionError("boom")

    monkeypatch.setitem(SUITES, "broken", broken)
    r = run_suite("broken", 2, seed=0)
    assert r.passed == 0 and "boom" in r.counterexample["error"]
