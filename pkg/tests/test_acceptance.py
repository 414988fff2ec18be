"""Acceptance gate: one criterion per test, one pass/fail line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the report lines.
Every check asserts, so the suite fails loudly without -s as well.
"""

import math
import sys
import time
from collections import Counter
from fractions import Fraction
from itertools import permutations as iter_perms

from tandemwalks import (
    FaceStep,
    Permutation,
    SE,
    VPoly,
    b_sequence,
    cyclotomic_root_scan,
    e_sequence,
    enumerate_walks,
    growth_fit,
    is_plane,
    is_poset,
    kmsw_backward,
    kmsw_forward,
    non_dfinite_check,
    omega_counts,
    phi_map,
    poset_to_v_walk,
    psi_map,
    series_relation_check,
    solve_constants,
    t_from_walks,
    t_sequence,
    t_walk_to_transversal,
    transversal_to_t_walk,
    v_walk_to_poset,
    zeta_numerator,
)


def _report(num: int, ok: bool, detail: str, t0: float):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail} [{time.time() - t0:.1f}s]"
    print(line, file=sys.stderr)
    assert ok, line


def _plain_walks(max_length, bound=2):
    for L in range(max_length + 1):
        for a in range(bound + 1):
            for b in range(bound + 1):
                yield from enumerate_walks("plain", L, start=(0, a), end=(b, 0))


def _t_walks(max_length):
    for L in range(1, max_length + 1):
        for a in range(L + 1):
            for b in range(L + 1):
                yield from enumerate_walks("T", L, start=(0, a), end=(b, 0))


def test_criterion_1_frozen_sequences():
    t0 = time.time()
    ok = e_sequence(11) == [1, 1, 1, 2, 5, 12, 32, 93, 279, 872, 2830]
    ok = ok and t_sequence(9, 0) == [1, 2, 6, 24, 116, 642, 3938, 26194, 186042]
    ok = ok and t_sequence(9, 1) == [1, 2, 6, 25, 128, 758, 5014, 36194, 280433]
    sym = t_sequence(7, None)
    ok = ok and sym[3] == VPoly((24, 1))
    ok = ok and sym[4] == VPoly((116, 12))
    ok = ok and sym[5] == VPoly((642, 114, 2))
    ok = ok and sym[6] == VPoly((3938, 1028, 48))
    ok = ok and (time.time() - t0) < 5.0
    _report(1, ok, "e, t(0), t(1), symbolic t_4..t_7", t0)


def test_criterion_2_b_three_ways():
    t0 = time.time()
    b = b_sequence(12)
    ok = True
    for n in range(1, 9):
        brute = sum(
            1 for p in iter_perms(range(1, n + 1)) if is_plane(Permutation(p))
        )
        ok = ok and brute == b[n - 1]
    totals = [sum(d.values()) for d in omega_counts(12)]
    ok = ok and totals == b
    ok = ok and (time.time() - t0) < 60.0
    _report(2, ok, "b_n matches the pattern filter (n<=8) and the label recurrence (n<=12)", t0)


def test_criterion_3_bijections_round_trip():
    t0 = time.time()
    ok = True
    n_walks = 0
    for w in _plain_walks(6):
        n_walks += 1
        b = kmsw_backward(w)
        ok = ok and kmsw_forward(b) == w
        ok = ok and kmsw_backward(kmsw_forward(b)) == b
    n_perms = 0
    for n in range(1, 8):
        for vals in iter_perms(range(1, n + 1)):
            p = Permutation(vals)
            if not is_plane(p):
                continue
            n_perms += 1
            ok = ok and psi_map(phi_map(p)) == p
    n_posets = 0
    for L in range(6):
        for a in range(L + 1):
            for bb in range(L + 1):
                for w in enumerate_walks("E", L, start=(0, a), end=(bb, 0)):
                    P = kmsw_backward(w)
                    if P.map.n_vertices == 2:
                        continue
                    n_posets += 1
                    vw = poset_to_v_walk(P)
                    ok = ok and v_walk_to_poset(vw) == P
    for L in range(4):
        for a in range(3):
            for bb in range(3):
                for vw in enumerate_walks("V", L, start=(0, a), end=(bb, 0)):
                    ok = ok and poset_to_v_walk(v_walk_to_poset(vw)) == vw
    n_t = 0
    for w in _t_walks(4):
        n_t += 1
        x = t_walk_to_transversal(w)
        ok = ok and transversal_to_t_walk(x) == w
    ok = ok and (time.time() - t0) < 600.0
    _report(
        3,
        ok,
        f"{n_walks} walks, {n_perms} permutations, {n_posets} posets, {n_t} T-walks round-trip",
        t0,
    )


def test_criterion_4_transport():
    t0 = time.time()
    ok = True
    for w in _plain_walks(5):
        b = kmsw_backward(w)
        n_se = sum(1 for s in w.steps if s is SE)
        ok = ok and n_se == b.map.n_vertices - 2
        walk_types = Counter((s.i, s.j) for s in w.steps if isinstance(s, FaceStep))
        face_types = Counter(tuple(b.face_type(h)) for h in b.inner_face_halves())
        ok = ok and walk_types == face_types
    for w in _t_walks(4):
        x = t_walk_to_transversal(w)
        nw = sum(
            sum(1 for letter in s.attached if letter == "NW")
            for s in w.steps
            if isinstance(s, FaceStep)
        )
        ok = ok and x.quad_count() == nw
        n_se = sum(1 for s in w.steps if s is SE)
        ok = ok and len(x.inner_vertices()) == n_se
    _report(4, ok, "SE/vertex, face-type, and quadrangle statistics move across", t0)


def test_criterion_5_constants_closed_forms():
    t0 = time.time()
    tol = 1e-10
    s5 = math.sqrt(5)
    c = solve_constants("posets-vertices")
    ok = abs(c.z0 - (3 - s5) / 2) < tol
    ok = ok and abs(c.gamma - (11 + 5 * s5) / 2) < tol
    ok = ok and abs(c.xi - (1 + s5) / 4) < tol
    ok = ok and abs(c.alpha - 6.0) < tol
    c = solve_constants("posets-edges")
    z = c.z0
    ok = ok and abs(z**4 + z**3 - 3 * z**2 + 3 * z - 1) < tol
    ok = ok and abs(c.gamma - (5 * z**3 + 7 * z**2 - 13 * z + 9)) < tol
    ok = ok and abs(c.xi - (1 - z / 2)) < tol
    c = solve_constants("transversal", 0)
    ok = ok and abs(c.z0 - 1 / 3) < tol
    ok = ok and abs(c.gamma - 13.5) < tol
    ok = ok and abs(c.xi - 7 / 8) < tol
    c = solve_constants("transversal", 1)
    s13 = math.sqrt(13)
    ok = ok and abs(c.gamma - (47 + 13 * s13) / 6) < tol
    ok = ok and abs(c.xi - (29 + s13) / 36) < tol
    ok = ok and (time.time() - t0) < 1.0
    _report(5, ok, "saddle constants match their closed forms to 1e-10", t0)


def test_criterion_6_cyclotomic_obstruction():
    t0 = time.time()
    t0_check = non_dfinite_check("transversal", 0)
    t1_check = non_dfinite_check("transversal", 1)
    ok = t0_check["xi_polynomial"] == [-7, 8]
    ok = ok and t1_check["xi_polynomial"] == [23, -58, 36]
    ok = ok and t0_check["has_cyclotomic_factor"] is False
    ok = ok and t1_check["has_cyclotomic_factor"] is False
    ok = ok and t0_check["certified_non_dfinite"] is True
    ok = ok and t1_check["certified_non_dfinite"] is True
    control = cyclotomic_root_scan(zeta_numerator([-1, 2]))
    ok = ok and control["has_cyclotomic_factor"] is True
    ok = ok and (time.time() - t0) < 1.0
    _report(6, ok, "8s-7 and 36s^2-58s+23 are factor-free, 2s-1 is not", t0)


def test_criterion_7_growth_fits():
    t0 = time.time()
    g, _ = growth_fit(t_sequence(300, 0))
    ok = abs(g - 13.5) / 13.5 < 0.02
    g, _ = growth_fit(e_sequence(300))
    gamma_e = solve_constants("posets-edges").gamma
    ok = ok and abs(g - gamma_e) / gamma_e < 0.02
    _, a = growth_fit(b_sequence(300))
    ok = ok and abs(a - 6.0) < 0.3
    ok = ok and (time.time() - t0) < 300.0
    _report(7, ok, "300-term growth estimates land on gamma and alpha", t0)


def test_criterion_8_internal_identities():
    t0 = time.time()
    ok = series_relation_check(12)["ok"] is True
    for n in range(1, 9):
        ok = ok and t_from_walks(n, 0) == t_sequence(n, 0)[-1]
        ok = ok and t_from_walks(n, 1) == t_sequence(n, 1)[-1]
    # is_poset runs its reachability and face-type routes on every call
    for w in _plain_walks(4):
        is_poset(kmsw_backward(w))
    _report(8, ok, "series identities and the dual poset routes agree", t0)
