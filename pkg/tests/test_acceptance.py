"""End-to-end acceptance checks, one summary line per criterion.

Each test prints a single [PRIMARY k] PASS/FAIL line (visible with -s or
in captured output) and asserts the same condition.
"""

import itertools
import json
import pathlib
import random
import sys
import time

import numpy as np

from qshadow import blocks, cli, errors, fixtures as fx, quivers as qv
from qshadow import reconstruction as rc, search, shadows as sh, wild

_ENUM = {}
_CLS = {}


def enum(n, mode, threads=1):
    key = (n, mode)
    if key not in _ENUM:
        _ENUM[key] = search.enumerate_shadows(n, mode=mode, threads=threads)
    return _ENUM[key]


def cls(n, mode="tsp4"):
    key = (n, mode)
    if key not in _CLS:
        _CLS[key] = rc.classify(n, mode=mode)
    return _CLS[key]


def report(k, description, ok):
    line = "[PRIMARY %d] %s - %s" % (k, "PASS" if ok else "FAIL", description)
    print(line)
    # also bypass pytest capture so the summary lines show up in plain runs
    print(line, file=sys.__stdout__)
    assert ok, description


def canonical_set(found):
    return {sh.canonical_shadow(a).rows for a in found}


def test_criterion_1_shadow_counts():
    checks = []
    for n, mode, want, bound in (
        (3, "basic_tame", 5, 1.0),
        (3, "essential", 4, 1.0),
        (4, "basic_tame", 12, 10.0),
        (4, "essential", 7, 10.0),
        (5, "essential", 26, 300.0),
    ):
        start = time.perf_counter()
        found = search.enumerate_shadows(n, mode=mode)
        elapsed = time.perf_counter() - start
        _ENUM[(n, mode)] = found
        checks.append(len(found) == want and elapsed < bound)
    report(1, "shadow counts 5/4, 12/7, 26 within time bounds", all(checks))


def test_criterion_2_shadow_sets():
    ok = (
        canonical_set(enum(3, "basic_tame")) == fx.basic_reference(3)
        and canonical_set(enum(4, "basic_tame")) == fx.basic_reference(4)
        and canonical_set(enum(3, "essential")) == fx.essential_reference(3)
        and canonical_set(enum(4, "essential")) == fx.essential_reference(4)
        and canonical_set(enum(5, "essential")) == fx.essential_reference(5)
    )
    report(2, "enumerated shadow sets equal the transcribed references", ok)


def test_criterion_3_classification(capsys):
    start = time.perf_counter()
    reports = {n: rc.verify_against_reference(n, mode="tsp4") for n in (3, 4, 5)}
    exit_code = cli.main(["classify", "--n", "4", "--mode", "tsp4", "--verify"])
    elapsed = time.perf_counter() - start
    counts_ok = (
        len({rc._family_key(q) for q in rc.classify(3).quivers}) == 4
        and len(rc.classify(4).quivers) == 6
        and len(rc.classify(5).quivers) == 19
    )
    for n in (3, 4, 5):
        _CLS[(n, "tsp4")] = rc.classify(n)
    ok = (
        all(r.passed for r in reports.values())
        and exit_code == 0
        and counts_ok
        and elapsed < 120.0
    )
    capsys.readouterr()
    report(3, "classification matches the 4-family/6/19 reference lists", ok)


def test_criterion_4_surviving_shadows():
    result = cls(5)
    survivors = {
        sh.canonical_shadow(sh.make_shadow([list(r) for r in rows])).rows
        for rows, quivers in result.survivors_by_shadow
        if quivers
    }
    ok = survivors == fx.surviving_reference(5)
    report(4, "exactly the ten reference shadows admit survivors at rank 5", ok)


def _all_symmetric_c(bound=4):
    cells = [(i, j) for i in range(3) for j in range(i, 3)]
    mats = []
    for values in itertools.product(range(bound + 1), repeat=len(cells)):
        c = np.zeros((3, 3), dtype=np.int64)
        for (i, j), v in zip(cells, values):
            c[i][j] = v
            c[j][i] = v
        if (c.sum(axis=0) > 0).all():
            mats.append(c)
    return np.stack(mats)


def test_criterion_5_ps3_oracle():
    cs = _all_symmetric_c()
    ok = True
    for vals in itertools.product(range(-2, 3), repeat=3):
        x, y, z = vals
        rows = [[0, x, y], [-x, 0, z], [-y, -z, 0]]
        a = sh.make_shadow(rows)
        products = np.einsum("ik,mkj->mij", np.array(rows, dtype=np.int64), cs)
        brute = bool((products == 0).all(axis=(1, 2)).any())
        witness = sh.ps3_feasible(a)
        ok = ok and (witness is not None) == brute
        if witness is not None:
            ok = ok and witness.check(a)
    report(5, "exact feasibility agrees with brute force on all 125 matrices", ok)


def test_criterion_6_property_suites():
    # (a) enumerated odd-rank shadows are singular
    sing = all(sh.det_is_zero(a) for a in enum(3, "basic_tame")) and all(
        sh.det_is_zero(a) for a in enum(5, "essential")
    )
    # (b) canonical forms idempotent and constant on relabelling orbits
    rng = random.Random(20260825)
    orbit = True
    for _ in range(200):
        q = rng.choice(fx.GOLDEN_4 + fx.GOLDEN_5)
        perm = list(range(q.n))
        rng.shuffle(perm)
        shuffled = qv.relabel(q, perm)
        canon = qv.canonical_form(q)[0]
        orbit = orbit and qv.canonical_form(shuffled)[0].mult == canon.mult
        orbit = orbit and qv.canonical_form(canon)[0].mult == canon.mult
        a = sh.shadow_of(q)
        ac = sh.canonical_shadow(a)
        orbit = orbit and sh.canonical_shadow(ac) == ac
    # (c) the rewrite is an involution on every catalog occurrence
    involution = True
    for q in list(cls(4).quivers) + list(cls(5).quivers):
        for v in range(1, q.n + 1):
            try:
                once = blocks.mutate_block(q, v)
            except errors.QShadowError:
                continue
            back = False
            for w in range(1, once.n + 1):
                try:
                    again = blocks.mutate_block(once, w)
                except errors.QShadowError:
                    continue
                if qv.is_isomorphic_or_opposite(again, q):
                    back = True
                    break
            involution = involution and back
    # (d) the two reference rewrites
    rewrites = qv.is_isomorphic_or_opposite(
        blocks.mutate_block(fx.Q17_FIXTURE, 3), fx.Q13_FIXTURE
    ) and sh.canonical_shadow(
        sh.shadow_of(blocks.mutate_block(fx.Q13_FIXTURE, 2))
    ) == sh.canonical_shadow(fx.SHADOWS_5[26])
    # (e) the wildness certificate separates the wild shadow family from
    # every reference quiver
    wild_base = sh.quiver_of_shadow(fx.SHADOWS_5[18])
    wildness = wild.find_wild_unfolding(wild_base, max_nodes=8) is not None
    for q in fx.GOLDEN_3 + fx.GOLDEN_4 + fx.GOLDEN_5:
        wildness = wildness and wild.find_wild_unfolding(q, max_nodes=9) is None
    ok = sing and orbit and involution and rewrites and wildness
    report(6, "determinant, canonical-form, rewrite and wildness properties", ok)


def test_criterion_7_block_recognition():
    ok = all(blocks.verify_main_theorem(n, mode="tsp4").all_passed for n in (3, 4, 5))
    report(7, "every classified quiver decomposes into catalog blocks", ok)


def test_criterion_8_determinism():
    ok = True
    for threads in (2, 8):
        found = search.enumerate_shadows(4, "essential", threads=threads)
        base = search.result_payload(4, "essential", enum(4, "essential"))
        ok = ok and json.dumps(search.result_payload(4, "essential", found)) == json.dumps(base)
    single = rc.result_payload(cls(4))
    for threads in (2, 8):
        result = rc.classify(4, threads=threads)
        ok = ok and json.dumps(rc.result_payload(result)) == json.dumps(single)
    report(8, "worker counts 1/2/8 give byte-identical results", ok)


def test_criterion_9_stretch_rank_6():
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "results"
    out_dir.mkdir(exist_ok=True)
    found = search.enumerate_shadows(6, "basic_tame", threads=8)
    path = out_dir / "shadows_n6_basic_tame.json"
    search.write_result(path, 6, "basic_tame", found)
    # no reference count exists; termination and persistence are the check
    ok = len(found) > 0 and path.exists()
    print("rank-6 basic enumeration: %d shadows persisted to %s" % (len(found), path))
    report(9, "rank-6 enumeration terminates and is persisted", ok)
