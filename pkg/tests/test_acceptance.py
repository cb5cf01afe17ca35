"""Acceptance criteria, one test each, timed against their runtime budgets.

Each test prints a single ``PASS``/``FAIL`` line (visible even without -s).
"""

import itertools
import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from a1bundles.bundle_p1 import SplitBundle, det, ext1_dim, format_bundle, h0, h1
from a1bundles.chow import (
    ProjBundleRing,
    enumerate_graded_isos,
    find_graded_iso,
    is_graded_iso,
    verify_theorem_count,
    weak_equivalent_p1,
)
from a1bundles.cli import run
from a1bundles.concordance import concordant, generate_certificate, verify_certificate
from a1bundles.laurent import LaurentMatrix
from a1bundles.parsing import parse_bundle
from a1bundles.transition_p1 import ExtClass, family, section_dimension, splitting_type

from generators import perturbed_diagonal
from oracles import cech_line_bundle, sympy_relation_in_ideal

B = SplitBundle


@contextmanager
def criterion(capsys, number: int, title: str, budget: float):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        status = "PASS" if elapsed < budget else "FAIL"
        detail = f"{elapsed:.2f}s / {budget:.0f}s"
    except Exception as exc:
        detail = f"{type(exc).__name__}: {exc}"[:200]
        raise
    finally:
        with capsys.disabled():
            print(f"\n[criterion {number}] {status}: {title} ({detail})")
    assert status == "PASS", f"criterion {number} over budget: {detail}"


def test_1_concordance_classification(capsys):
    with criterion(capsys, 1, "concordance classification, rank <= 4, degrees in [-3, 3]", 60):
        bundles = [B(c) for r in range(1, 5) for c in itertools.combinations_with_replacement(range(-3, 4), r)]
        for e, f in itertools.product(bundles, repeat=2):
            assert concordant(e, f) == ((e.rank, det(e)) == (f.rank, det(f)))
        for e in bundles:
            v = verify_certificate(generate_certificate(e))
            assert v, f"{e}: {v}"


def test_2_extension_family_fibers(capsys):
    with criterion(capsys, 2, "extension family fibers", 1):
        c = ExtClass(B([-1]), B([1]), [1])
        assert splitting_type(family(c, 0)) == B([-1, 1])
        for lam in (1, -1, 2, Fraction(1, 2)):
            assert splitting_type(family(c, lam)) == B([0, 0])


def test_3_splitting_robustness(capsys):
    with criterion(capsys, 3, "200 randomized U*D*V trials", 60):
        rng = random.Random(20240601)
        for _ in range(200):
            n = rng.randint(2, 4)
            degs = [rng.randint(-3, 3) for _ in range(n)]
            M = perturbed_diagonal(rng, degs)
            st = splitting_type(M)
            assert st == B(degs)
            assert sum(st.degrees) == M.det_exponent()


def test_4_weak_equivalence_table(capsys):
    with criterion(capsys, 4, "weak-equivalence table n in {1,2,3}, a,b in [-6, 6]", 30):
        for n in (1, 2, 3):
            for a, b in itertools.product(range(-6, 7), repeat=2):
                ans = weak_equivalent_p1(n, a, b)
                assert ans == ((a - b) % (n + 1) == 0)
                if ans:
                    R1, R2 = ProjBundleRing(n, a), ProjBundleRing(n, b)
                    w = find_graded_iso(R1, R2)
                    assert w is not None and is_graded_iso(w, R1, R2)
                    assert sympy_relation_in_ideal(w.matrix, n, a, n, b)
                    assert sympy_relation_in_ideal(w.inverse().matrix, n, b, n, a)


def test_5_counterexample_verifier(capsys):
    with criterion(capsys, 5, "counterexample verifier checks (i)-(iii)", 30):
        twist, chern, rigidity = verify_theorem_count(bound=3)
        assert twist["pass"] and twist["witnesses"][0]["trivializing_twists_found"] == []
        assert chern["pass"] and chern["witnesses"] == [{"c1": 0, "c2": 0}]
        isos = enumerate_graded_isos(ProjBundleRing(2, 0), ProjBundleRing(2, 0), 3)
        assert rigidity["pass"] and len(isos) == 4
        assert all(w.is_sign_diagonal() for w in isos)


def test_6_cohomology_oracles(capsys):
    with criterion(capsys, 6, "cohomology against Cech oracle, Riemann-Roch, section spaces", 30):
        cech = {d: cech_line_bundle(d) for d in range(-12, 13)}
        for d in range(-6, 7):
            assert (h0(B([d])), h1(B([d]))) == cech[d]
        for q, s in itertools.product(range(-6, 7), repeat=2):
            assert ext1_dim(B([q]), B([s])) == cech[s - q][1]
        rng = random.Random(6)
        for _ in range(500):
            e = B([rng.randint(-10, 10) for _ in range(rng.randint(1, 6))])
            assert h0(e) - h1(e) == det(e) + e.rank
        for r in (1, 2, 3):
            for degs in itertools.combinations_with_replacement(range(-3, 4), r):
                D = LaurentMatrix.diagonal(degs)
                for m in range(-5, 6):
                    assert section_dimension(D, m) == sum(max(0, d + m + 1) for d in degs)


def test_7_cli_contract(capsys, tmp_path):
    with criterion(capsys, 7, "CLI round trip and exit codes", 10):
        rng = random.Random(7)
        for _ in range(300):
            e = B([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
            assert parse_bundle(format_bundle(e)) == e
            code, out = run(["canon", format_bundle(e)])
            assert code == 0 and parse_bundle(out.strip()).rank == e.rank

        table = [
            (["canon", "O(-1)+O+O(1)"], 0, "O+O+O"),
            (["canon", "O(2)+O(3)"], 0, "O+O(5)"),
            (["concordant", "O(2)+O(-2)", "O+O"], 0, "true"),
            (["concordant", "O(1)+O", "O+O"], 1, "false"),
            (["concordant", "O(1)", "O(1)+O"], 1, "false"),
            (["ext-dim", "O(1)", "O(-1)"], 0, "1"),
            (["ext-dim", "O", "O"], 0, "0"),
            (["ext-dim", "O(3)", "O(-1)"], 0, "3"),
            (["build-ext", "--sub", "O(-1)", "--quotient", "O(1)", "--class", "1"], 0, "t^-1, 1; 0, t"),
            (["split-type", "t^2, 0; 0, t^-3"], 0, "O(-3)+O(2)"),
            (["split-type", "t^-1, 1; 0, t"], 0, "O+O"),
            (["split-type", "t^-1, 0; 1, t"], 0, "O(-1)+O(1)"),
            (["weak-equiv", "--n", "1", "--a", "0", "--b", "2"], 0, "true"),
            (["weak-equiv", "--n", "2", "--a", "1", "--b", "2"], 1, "false"),
            (["weak-equiv", "--pic", "Z/4", "--n", "1", "--a", "1", "--b", "0"], 1, "false"),
            (["chow-iso", "PB(n=2, a=1)", "PB(n=2, a=2)"], 0, None),
            (["chow-iso", "PB(n=2, a=0)", "PB(n=2, a=1)"], 1, None),
            (["enum-isos", "PB(n=2, a=0)", "PB(n=2, a=0)"], 0, None),
            (["verify-thm-count"], 0, None),
            (["canon", "O("], 2, None),
            (["split-type", "1, 1; 1, 1"], 2, None),
            (["bogus"], 2, None),
        ]
        for argv, code, first_line in table:
            got, out = run(argv)
            assert got == code, (argv, got, out)
            if first_line is not None:
                assert out.splitlines()[0] == first_line, (argv, out)

        _, out = run(["certify", "--json", "O(-1)+O+O(1)"])
        path = tmp_path / "cert.json"
        path.write_text(out)
        assert run(["verify-cert", str(path)])[0] == 0
        doc = json.loads(out)["result"]
        doc["moves"][0]["to"] = [0, 0, 0]
        path.write_text(json.dumps(doc))
        assert run(["verify-cert", str(path)])[0] == 1

        _, out = run(["verify-thm-count", "--json"])
        assert set(json.loads(out)) == {"verb", "result", "witness"}


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
