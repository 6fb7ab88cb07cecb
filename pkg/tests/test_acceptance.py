"""Acceptance criteria, one test per criterion.

Each test prints a ``[PASS]``/``[FAIL]`` line; the lines are repeated in the
terminal summary.  Run standalone with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from importlib import resources
from math import comb

import numpy as np
import pytest

from wellcovered.circulant import (ConnectionSet, build_circulant, complement_power,
                                   enumerate_connection_sets)
from wellcovered.classify import (classify, cubic_census, family_one_paired, family_remove_one,
                                  one_paired_specs)
from wellcovered.cli import collect
from wellcovered.decomp import (find_shelling, is_vertex_decomposable, parse_certificate,
                                shelling_violation, verify_shelling)
from wellcovered.homology import boundary_matrix, is_buchsbaum, is_cohen_macaulay, reduced_betti
from wellcovered.simplex import (SimplicialComplex, components, f_vector, h_vector,
                                 independence_complex, is_pure, join, link, maximal_only)
from wellcovered.table import compare, load_golden

RESULTS: list[str] = []
CRITERIA = {}


def criterion(key: str, title: str):
    def register(fn):
        CRITERIA[key] = (title, fn)
        return fn
    return register


def ind(n, *S):
    return independence_complex(build_circulant(ConnectionSet(n, S)))


@criterion("1", "table --n-max 12 matches the golden file, under 5 minutes")
def table_n12():
    t = time.perf_counter()
    report = compare(collect(3, 12), load_golden(n_max=12))
    dt = time.perf_counter() - t
    return report.differences == 0 and dt < 300, \
        f"{report.compared} rows, {report.differences} differences, {dt:.1f}s"


@criterion("2", "full table n <= 16 matches, including C_16(1,4,8) as S, under 2 hours")
def table_n16():
    t = time.perf_counter()
    records = collect(3, 16)
    report = compare(records, load_golden())
    dt = time.perf_counter() - t
    c16 = next(r for r in records if r.spec == ConnectionSet(16, (1, 4, 8)))
    ok = report.differences == 0 and c16.label == "S" and dt < 7200
    merges = "; ".join(str(m) for m in report.merges)
    return ok, f"{report.compared} rows, {report.differences} differences, {dt:.1f}s; {merges}"


@criterion("3a", "the transcribed 80-facet order for C_16(1,4,8) passes verify_shelling")
def printed_certificate():
    c = ind(16, 1, 4, 8)
    text = (resources.files("wellcovered") / "data" / "c16_1_4_8_shelling.txt").read_text()
    order = parse_certificate(text, 4)
    bad = shelling_violation(c, order)
    return bad is None, "valid shelling" if bad is None else f"first violating pair (i, j) = {bad}"


@criterion("3b", "find_shelling certifies C_16(1,4,8); is_vertex_decomposable is false")
def found_certificate():
    c = ind(16, 1, 4, 8)
    cert = find_shelling(c)
    vd = bool(is_vertex_decomposable(c))
    ok = cert is not None and verify_shelling(c, cert) and not vd
    return ok, f"certificate of {len(cert.order) if cert else 0} facets, VD = {vd}"


@criterion("4", "C_4(1) B, C_8(2) N, C_10(1,4) N with link-of-0 h = (1,2,-1,0)")
def minimal_examples():
    labels = [classify(build_circulant(ConnectionSet(n, S))).label
              for n, S in ((4, (1,)), (8, (2,)), (10, (1, 4)))]
    h = h_vector(f_vector(link(ind(10, 1, 4), 1)))
    return labels == ["B", "N", "N"] and h == (1, 2, -1, 0), f"labels {labels}, link h {h}"


@criterion("5", "f and h of Ind(C_n(d+1..n/2)) equal the closed forms, d <= 4, 3d < n <= 20")
def closed_forms():
    bad, checked = [], 0
    for d in range(1, 5):
        for n in range(3 * d + 1, 21):
            c = independence_complex(build_circulant(complement_power(n, d)))
            f = f_vector(c)
            want_f = (1, n) + tuple(comb(d, k) * n for k in range(1, d + 1))
            want_h = (1, n - (d + 1)) + tuple((-1) ** k * comb(d + 1, k) for k in range(2, d + 2))
            checked += 1
            if f != want_f or h_vector(f) != want_h:
                bad.append((n, d))
    return not bad, f"{checked} (n, d) pairs, mismatches {bad}"


@criterion("6", "classify agrees with the remove-one and one-paired predictions, n <= 16")
def family_predictions():
    bad, checked = [], 0
    for n in range(3, 17):
        for i in range(1, n // 2 + 1):
            p = family_remove_one(n, i)
            miss = p.mismatches(classify(build_circulant(p.spec)))
            checked += 1
            if miss:
                bad.append((str(p.spec), miss))
    for spec in one_paired_specs(16):
        p = family_one_paired(spec)
        miss = p.mismatches(classify(build_circulant(p.spec)))
        checked += 1
        if miss:
            bad.append((str(spec), miss))
    return not bad, f"{checked} graphs, mismatches {bad}"


@criterion("7", "VD => shellable => CM => Buchsbaum on n <= 12; CM over QQ equals CM over GF(2)")
def hierarchy():
    violations, field_split, checked = [], [], 0
    for n in range(3, 13):
        for s in enumerate_connection_sets(n):
            c = independence_complex(build_circulant(s))
            if not is_pure(c):
                continue
            checked += 1
            vd = bool(is_vertex_decomposable(c))
            sh = find_shelling(c) is not None
            cm_q, cm_2 = is_cohen_macaulay(c, 0), is_cohen_macaulay(c, 2)
            bb = is_buchsbaum(c)
            if (vd and not sh) or (sh and not cm_q) or (cm_q and not bb):
                violations.append(str(s))
            if cm_q != cm_2:
                field_split.append(str(s))
    return not violations and not field_split, \
        f"{checked} complexes, violations {violations}, field disagreements {field_split}"


@criterion("8", "VD => 1-well-covered on n <= 14; C_n(1..d) 1wc iff n <= 3d+2 and n != 2d+2, n <= 16")
def one_well_covered():
    bad71, bad72, checked = [], [], 0
    for n in range(3, 15):
        for s in enumerate_connection_sets(n):
            r = classify(build_circulant(s))
            checked += r.well_covered
            if r.label == "V" and not r.one_well_covered:
                bad71.append(str(s))
    powers = 0
    for n in range(3, 17):
        for d in range(1, n // 2 + 1):
            r = classify(build_circulant(ConnectionSet(n, tuple(range(1, d + 1)))))
            if r.well_covered:
                powers += 1
                if r.one_well_covered != (n <= 3 * d + 2 and n != 2 * d + 2):
                    bad72.append((n, d))
    return not bad71 and not bad72, \
        f"{checked} well-covered graphs, VD-not-1wc {bad71}; {powers} cycle powers, iff failures {bad72}"


@criterion("9", "cubic census to n = 16 is exactly the five listed graphs with their labels")
def cubic():
    got = {(str(r.spec), r.label) for r in cubic_census(16)}
    want = {("4:1,2", "V"), ("6:2,3", "V"), ("6:1,3", "B"), ("8:1,4", "B"), ("10:2,5", "B")}
    return got == want, f"found {sorted(got)}"


def _random_pure(rng: random.Random) -> SimplicialComplex:
    ground = rng.randint(2, 6)
    size = rng.randint(1, min(3, ground))
    pool = [m for m in range(1, 1 << ground) if m.bit_count() == size]
    return SimplicialComplex(ground, maximal_only(rng.sample(pool, rng.randint(1, min(6, len(pool))))))


@criterion("10", "Euler-Poincare, components, boundary squares to zero, join CM iff both CM on 100 pairs")
def homology_sanity():
    problems, complexes = [], 0
    for n in range(3, 17):
        for s in enumerate_connection_sets(n):
            c = independence_complex(build_circulant(s))
            complexes += 1
            betti = reduced_betti(c).betti
            euler = sum((-1) ** i * x for i, x in enumerate(f_vector(c)))
            if sum((-1) ** i * b for i, b in enumerate(betti)) != euler:
                problems.append(f"euler {s}")
            if betti[1] + 1 != len(components(c)):
                problems.append(f"components {s}")
            for i in range(0, c.dim):
                lo, hi = boundary_matrix(c, i), boundary_matrix(c, i + 1)
                if np.any(lo.astype(float) @ hi.astype(float)):
                    problems.append(f"boundary {s} at {i}")
    rng = random.Random(20240601)
    for _ in range(100):
        a, b = _random_pure(rng), _random_pure(rng)
        if is_cohen_macaulay(join(a, b)) != (is_cohen_macaulay(a) and is_cohen_macaulay(b)):
            problems.append(f"join {a} * {b}")
    return not problems, f"{complexes} census complexes, 100 join pairs, problems {problems}"


def evaluate(key: str) -> tuple[bool, str]:
    title, fn = CRITERIA[key]
    ok, detail = fn()
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {title} -- {detail}"
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("key", list(CRITERIA))
def test_criterion(key):
    ok, line = evaluate(key)
    assert ok, line


if __name__ == "__main__":
    outcomes = [evaluate(k)[0] for k in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
