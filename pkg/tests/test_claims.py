import json
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from twistkit.claims import claim_ids, oracles, run_claim, to_plain, verify_paper

ROOT = Path(__file__).resolve().parent.parent


def test_all_claims_pass():
    results = verify_paper()
    failed = [r for r in results if not r.passed]
    assert not failed, failed
    assert len(results) == len(set(claim_ids()))


def test_provenance_tags():
    results = verify_paper()
    assert {r.provenance for r in results} <= {"paper", "derived", "trivial"}
    assert all(r.anchor for r in results)
    for r in results:
        j = r.to_json()
        assert set(j["expected"]) == {"value", "provenance", "anchor"}


def test_named_claims():
    r = run_claim("fplum-det")
    assert (r.expected, r.computed, r.status) == ("-3", "-3", "pass")
    assert run_claim("eword-identity").computed == [["1", "0"], ["0", "1"]]
    assert run_claim("reducetorsion-trace").passed


def test_deterministic_json():
    a = json.dumps([r.to_json() for r in verify_paper()])
    b = json.dumps([r.to_json() for r in verify_paper()])
    assert a == b


def test_executor_keeps_order():
    with ThreadPoolExecutor(4) as ex:
        par = verify_paper(ex)
    assert [r.to_json() for r in par] == [r.to_json() for r in verify_paper()]


def test_failed_compute_is_data():
    from twistkit.claims import _result
    r = _result("x", "boom", "trivial", "none", 1, lambda: 1 // 0)
    assert r.status == "fail" and r.computed.startswith("error: ZeroDivisionError")


def test_to_plain_big_ints():
    assert to_plain({"k": [2 ** 70, True, None]}) == {"k": [str(2 ** 70), True, None]}


def test_oracle_file_is_fresh():
    """The checked-in oracle file matches a fresh sympy run."""
    proc = subprocess.run([sys.executable, str(ROOT / "scripts" / "make_oracles.py"), "--check"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert oracles()["Plum-inertia"] == [1, 0, 7]
