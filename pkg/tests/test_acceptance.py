"""Acceptance criteria, one test each.

Every test records a single ``PASS``/``FAIL`` line with its timing; the lines
are printed as they happen (visible with ``-s``) and again in the terminal
summary. Run ``python tests/test_acceptance.py`` to see only these lines.
"""

from __future__ import annotations

import time

import pytest

from mutations import mutants
from oracles import (
    centralizer_size,
    coherent_family_count,
    cyclic_table,
    equivariant_zero_cells,
    identity_maps,
    inversion_maps,
)
from properties import SUITES, run_suites
from support import ACTION_NAMES, GROUP_NAMES, SAMPLED_ACTIONS, action, group, identity_grade_differences
from twocat.centers import (
    action_on_ZPhi,
    build_ZG,
    check_center_theorem,
    check_epsilon,
    check_g_crossed_axioms,
    trivial_component_center,
    validate_mon_g_action,
)
from twocat.core2 import delooping, validate_2category
from twocat.equivariant import enumerate_equivariant
from twocat.gaction import validate_action
from twocat.pseudo import identity_pseudofunctor, relative_center
from twocat.strictify import check_H_biequivalence, embedding_H, enumerate_BG, strict_action_on_BG

RESULTS: list[str] = []


def record(number, title, problems, started):
    elapsed = time.perf_counter() - started
    verdict = "PASS" if not problems else "FAIL"
    line = f"criterion {number} {title}: {verdict} ({elapsed:.2f} s)"
    if problems:
        line += " - " + "; ".join(problems[:5])
    RESULTS.append(line)
    print(line)
    assert not problems, line


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def test_criterion_1_kernel_soundness():
    started = time.perf_counter()
    problems = []
    for name in GROUP_NAMES:
        B = delooping(group(name))
        report, dt = timed(validate_2category, B)
        if not report.ok or dt >= 1:
            problems.append(f"{name}: {report} in {dt:.2f}s")
        cases = mutants(B)
        if len(cases) != 10:
            problems.append(f"{name}: {len(cases)} mutations")
        for m in cases:
            report, dt = timed(validate_2category, m.cat)
            found = {(v.axiom, tuple(v.cells)) for v in report.violations}
            if (m.axiom, m.witness) not in found or dt >= 1:
                problems.append(f"{name} {m.label}: {report} in {dt:.2f}s")
    record(1, "kernel soundness on six deloopings with 10 mutations each", problems, started)


def test_criterion_2_center_counts():
    started = time.perf_counter()
    problems = []
    for name in GROUP_NAMES:
        G = group(name)
        Z, dt = timed(relative_center, identity_pseudofunctor(delooping(G)))
        expected = centralizer_size([list(row) for row in G.mult])
        if Z.cat.n_objects != expected or dt >= 1:
            problems.append(f"{name}: {Z.cat.n_objects} objects, oracle {expected}, {dt:.2f}s")
    record(2, "center sizes equal the centralizer oracle", problems, started)


def test_criterion_3_equivariant_counts():
    started = time.perf_counter()
    problems = []
    cases = [("trivial_c2", 2, identity_maps(2, 2), 2), ("inv_act", 4, inversion_maps(4), 4)]
    for name, cells, phi, count in cases:
        _, act = action(name)
        catalog, dt = timed(enumerate_equivariant, act)
        oracle = equivariant_zero_cells(cyclic_table(2), 0, cyclic_table(cells), 0, phi)
        found = sorted(P.U for P in catalog.zero)
        if len(found) != count or found != sorted(oracle) or dt >= 1:
            problems.append(f"{name}: {len(found)} cells, oracle {len(oracle)}, expected {count}, {dt:.2f}s")
    record(3, "equivariant 0-cell counts match the constraint oracle", problems, started)


def test_criterion_4_strictification():
    started = time.perf_counter()
    problems = []
    oracle_cases = {"trivial_c2": (2, 2, identity_maps(2, 2)), "trivial_c3": (3, 2, identity_maps(3, 2)),
                    "inv_act": (2, 4, inversion_maps(4))}
    for name in ACTION_NAMES:
        t = time.perf_counter()
        _, act = action(name)
        bg = enumerate_BG(act)
        L = strict_action_on_BG(bg)
        G = L.group
        exact = all(tuple(L.F[g].map1[x] for x in L.F[h].map1) == L.F[G.m(g, h)].map1
                    and tuple(L.F[g].map2[a] for a in L.F[h].map2) == L.F[G.m(g, h)].map2
                    for g in G for h in G)
        checks = {
            "B[G] valid": validate_2category(bg.cat).ok,
            "L table-exact": exact,
            "L strict": L.strict and validate_action(L).ok,
            "H biequivalence": check_H_biequivalence(bg, embedding_H(bg)).ok,
        }
        if name in oracle_cases:
            n, cells, phi = oracle_cases[name]
            checks["count"] = bg.cat.n0 == coherent_family_count(cyclic_table(n), 0, cyclic_table(cells), 0, phi)
        dt = time.perf_counter() - t
        bad = [k for k, ok in checks.items() if not ok]
        if bad or dt >= 30:
            problems.append(f"{name}: {bad} in {dt:.2f}s")
    record(4, "strictification is strict and biequivalent", problems, started)


def test_criterion_5_crossed_axioms():
    started = time.perf_counter()
    problems = []
    for name in ACTION_NAMES:
        t = time.perf_counter()
        B, act = action(name)
        if not act.strict:
            bg = enumerate_BG(act)
            B, act = bg.cat, strict_action_on_BG(bg)
        Z = build_ZG(B, act)
        report = check_g_crossed_axioms(Z)
        diffs = identity_grade_differences(Z, trivial_component_center(B))
        dt = time.perf_counter() - t
        if not report.ok or diffs or dt >= 10:
            problems.append(f"{name}: {report} {diffs[:3]} in {dt:.2f}s")
        if name == "inv_act" and (Z.component(1) or len(Z.component(0)) != 4):
            problems.append("inv_act: odd grade is not empty")
    record(5, "crossed center axioms, empty odd grade, identity grade is the braided center", problems, started)


def test_criterion_6_epsilon_and_nu():
    started = time.perf_counter()
    problems = []
    checked = 0
    for name in ACTION_NAMES:
        t = time.perf_counter()
        B, act = action(name)
        if not act.strict:
            bg = enumerate_BG(act)
            B, act = bg.cat, strict_action_on_BG(bg)
        catalog = enumerate_equivariant(act)
        for P in catalog.zero:
            checked += 1
            report = check_epsilon(act, P)
            if not report.ok:
                problems.append(f"{name} {P.U}: {report}")
        report = validate_mon_g_action(action_on_ZPhi(B, act, catalog=catalog))
        if not report.ok:
            problems.append(f"{name}: {report}")
        dt = time.perf_counter() - t
        if dt >= 10:
            problems.append(f"{name}: {dt:.2f}s")
    record(6, f"epsilon and nu identities on {checked} equivariant 0-cells", problems, started)


def test_criterion_7_center_theorem():
    started = time.perf_counter()
    problems = []
    for name in ("trivial_c2", "inv_act"):
        B, act = action(name)
        report, dt = timed(check_center_theorem, B, act)
        if not report.ok or dt >= 60:
            problems.append(f"{name}: {report} in {dt:.2f}s")
    record(7, "comparison functor is a monoidal isomorphism", problems, started)


def test_criterion_8_property_suites():
    started = time.perf_counter()
    problems = []
    drawn = 0
    for name in SAMPLED_ACTIONS:
        results = run_suites(name)
        for suite in SUITES:
            count, failures = results[suite]
            drawn += count
            if failures:
                problems.append(f"{name} {suite}: {len(failures)} failures")
    for suite in SUITES:
        if not any(run_suites(name)[suite][0] == 1000 for name in SAMPLED_ACTIONS):
            problems.append(f"{suite}: never sampled")
    record(8, f"sampled closure and pentagon suites ({drawn} samples)", problems, started)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
