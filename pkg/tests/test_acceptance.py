"""Acceptance criteria, one test per criterion.

Each criterion records a single ``PASS``/``FAIL`` line; the lines are
printed in the terminal summary of a pytest run and by running this file
directly (``python3 tests/test_acceptance.py``).
"""
import itertools
import math
import os
import sys
import time

import numpy as np
from scipy.linalg import expm
from scipy.stats import unitary_group

sys.path.insert(0, os.path.dirname(__file__))

from kakcells.catalog import PLAIN_GATES, PRIMED_GATES, gate_matrix, reference_coords  # noqa: E402
from kakcells.cells import (  # noqa: E402
    canonicalize_P,
    canonicalize_T,
    in_cell,
    locally_equivalent,
    phase_partner_T,
    projective_locally_equivalent,
)
from kakcells.exceptions import DegenerateRecovery, NotLocal  # noqa: E402
from kakcells.kak import kak_decompose, reconstruct  # noqa: E402
from kakcells.lattice import LatticeKind, in_lattice  # noqa: E402
from kakcells.su4 import commutation_report, factor_local, killing_form, pauli_tensor, su4_basis  # noqa: E402
from kakcells.weyl import generate_group, signed_permutations, verify_root_system  # noqa: E402

PI = math.pi
RESULTS = {}

TOL_TABLE = 1e-9
TOL_ROUND_TRIP = 1e-8
TOL_PARTNER = 1e-9
TOL_KILLING = 1e-10
TOL_BRACKET = 1e-12
TOL_ROOTS = 1e-12
SEPARATION = 1e-7

SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
ISWAP = np.array([[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=complex)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def record(n, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} ({detail})"
    RESULTS[n] = line
    print(line)
    return ok


def haar(rng, n):
    return unitary_group.rvs(4, size=n, random_state=rng)


def su2(rng):
    u = unitary_group.rvs(2, random_state=rng)
    return u / np.sqrt(np.linalg.det(u))


def local(rng):
    return np.kron(su2(rng), su2(rng))


# 1 -------------------------------------------------------------------------
def criterion_1():
    t0 = time.perf_counter()
    worst = 0.0
    cases = [(g, "P") for g in PLAIN_GATES] + [(g, "T") for g in PRIMED_GATES]
    for name, cell in cases:
        got = kak_decompose(gate_matrix(name), cell).coords
        worst = max(worst, float(np.max(np.abs(got - reference_coords(name, cell)))))
    dt = time.perf_counter() - t0
    ok = worst <= TOL_TABLE and dt < 1.0
    return record(1, "gate tables", ok, f"{len(cases)} entries, max dev {worst:.1e}, {dt:.2f}s")


# 2 -------------------------------------------------------------------------
def criterion_2():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    cells = ("T", "P", None)
    worst = 0.0
    failures = 0
    for i, u in enumerate(haar(rng, 10_000)):
        try:
            d = kak_decompose(u, cells[i % 3])
        except DegenerateRecovery:
            failures += 1
            continue
        worst = max(worst, np.linalg.norm(reconstruct(d) - u))
    # degenerate-spectrum stress suite
    stress = 0
    for g in (SWAP, ISWAP, CNOT, np.eye(4, dtype=complex)):
        suite = [g]
        for _ in range(100):
            h = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            h = (h + h.conj().T) / 2
            h /= np.linalg.norm(h)
            eps = 10.0 ** rng.uniform(-15, -6)
            suite.append(g @ expm(1j * eps * h))
        for u in suite:
            for cell in ("T", "P"):
                stress += 1
                try:
                    d = kak_decompose(u, cell)
                except DegenerateRecovery:
                    failures += 1
                    continue
                worst = max(worst, np.linalg.norm(reconstruct(d) - u))
    dt = time.perf_counter() - t0
    ok = worst <= TOL_ROUND_TRIP and failures == 0 and dt < 30.0
    return record(
        2,
        "round trip",
        ok,
        f"10000 Haar + {stress} stress, max err {worst:.1e}, {failures} DegenerateRecovery, {dt:.1f}s",
    )


# 3 -------------------------------------------------------------------------
def criterion_3():
    rng = np.random.default_rng(3)
    errors = 0
    for u in haar(rng, 200):
        if not locally_equivalent(u, local(rng) @ u @ local(rng)):
            errors += 1
    for u in haar(rng, 200):
        ell = (1, 1j, -1, -1j)[rng.integers(4)]
        if not projective_locally_equivalent(u, ell * local(rng) @ u @ local(rng)):
            errors += 1
    min_gap = np.inf
    for u, v in zip(haar(rng, 200), haar(rng, 200)):
        if locally_equivalent(u, v) or projective_locally_equivalent(u, v):
            errors += 1
        a = kak_decompose(u, "P").coords
        b = kak_decompose(v, "P").coords
        min_gap = min(min_gap, float(np.max(np.abs(a - b))))
    ok = errors == 0 and min_gap > SEPARATION
    return record(3, "equivalence oracles", ok, f"600 pairs, {errors} errors, min Haar P-gap {min_gap:.1e}")


# 4 -------------------------------------------------------------------------
_XX, _YY, _ZZ = (pauli_tensor(a, a) for a in "XYZ")


def _is_local(m):
    try:
        factor_local(m, tol=1e-9)
    except NotLocal:
        return False
    return True


def criterion_4():
    t0 = time.perf_counter()
    mismatches = 0
    for n in itertools.product(range(-4, 5), repeat=3):
        c = PI / 2 * np.array(n, dtype=float)
        e = expm(1j * (c[0] * _XX + c[1] * _YY + c[2] * _ZZ))
        unit = np.linalg.norm(e - np.eye(4)) <= 1e-9
        k = _is_local(e) and min(abs(factor_local(e, tol=1e-9)[2] - s) for s in (1, -1)) < 1e-9
        p = any(_is_local(e / eta) for eta in (1, 1j, -1, -1j))
        mismatches += (in_lattice(LatticeKind.UNIT, c) != unit)
        mismatches += (in_lattice(LatticeKind.K, c) != k)
        mismatches += (in_lattice(LatticeKind.P, c) != p)
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and dt < 10.0
    return record(4, "lattice oracles", ok, f"729 points x 3 lattices, {mismatches} mismatches, {dt:.1f}s")


# 5 -------------------------------------------------------------------------
def criterion_5():
    group = generate_group()
    report = verify_root_system()
    ok = (
        len(group) == 24
        and group == signed_permutations()
        and report["n_roots"] == 12
        and report["matches_root_list"]
        and report["max_residual"] <= TOL_ROOTS
    )
    return record(5, "Weyl group and roots", ok, f"|W| = {len(group)}, root residual {report['max_residual']:.1e}")


# 6 -------------------------------------------------------------------------
def _weyl_mats():
    out = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            if signs[0] * signs[1] * signs[2] == 1:
                m = np.zeros((3, 3), dtype=np.int64)
                for i in range(3):
                    m[i, perm[i]] = signs[i]
                out.append(m)
    return np.array(out)


def _cell_grid(cell):
    """Integer points (units of pi/32) of the closed T-cell or of the P-cell."""
    pts = []
    for a, b, c in itertools.product(range(17), range(17), range(-16, 17)):
        if cell == "T" and a >= b >= abs(c) and a + b <= 16:
            pts.append((a, b, c))
        if cell == "P" and a >= b >= c >= 0 and a + b <= 16 and a < 16 and not (c == 0 and a > 8):
            pts.append((a, b, c))
    return pts


def _uniqueness(cell, canon):
    """Count, for every starting point, the canonical outputs in its brute-force orbit.

    Work is in integer units of pi/32, so a lattice period pi/2 is 16 units.
    Starting points are the grid box plus every grid point of the cell
    itself, which must all be fixed points. Orbits use all 24 Weyl elements
    and translations up to +-2 periods per axis, enough to connect any two
    points of the box and the cell.
    """
    box = list(itertools.product(range(16), repeat=3))
    cell_pts = _cell_grid(cell)
    grid = np.array(sorted(set(box) | set(cell_pts)), dtype=np.int64)
    outputs = set()
    for n in grid:
        c = canon(PI / 32 * n).coords
        k = np.rint(c / (PI / 32))
        if np.max(np.abs(k * PI / 32 - c)) > 1e-9 or not in_cell(c, cell):
            return None
        if not np.array_equal(canon(c).coords, c):
            return None
        outputs.add(tuple(int(x) for x in k))
    if not set(cell_pts) <= outputs:
        return None
    outs = np.array(sorted(outputs), dtype=np.int64)
    mats = _weyl_mats()
    counts = np.empty(len(grid), dtype=np.int64)
    for start in range(0, len(grid), 256):
        chunk = grid[start:start + 256]
        images = np.einsum("gij,nj->ngi", mats, chunk)  # (n, 24, 3)
        diff = outs[None, None, :, :] - images[:, :, None, :]  # (n, 24, m, 3)
        steps, rem = np.divmod(diff, 16)
        member = np.all(rem == 0, axis=-1) & np.all(np.abs(steps) <= 2, axis=-1)
        if cell == "T":
            member &= steps.sum(axis=-1) % 2 == 0
        counts[start:start + 256] = member.any(axis=1).sum(axis=1)
    return counts, len(outs)


def criterion_6():
    t0 = time.perf_counter()
    details = []
    ok = True
    for cell, canon in (("P", canonicalize_P), ("T", canonicalize_T)):
        res = _uniqueness(cell, canon)
        if res is None:
            ok = False
            details.append(f"{cell}: output off-grid, out of cell, not a fixed point or cell point missed")
            continue
        counts, n_out = res
        good = bool(np.all(counts == 1))
        ok &= good
        details.append(f"{cell}: {n_out} classes, orbit hits in [{counts.min()}, {counts.max()}]")
    dt = time.perf_counter() - t0
    ok = ok and dt < 120.0
    return record(6, "uniqueness on the pi/32 grid", ok, "; ".join(details) + f", {dt:.1f}s")


# 7 -------------------------------------------------------------------------
def criterion_7():
    rng = np.random.default_rng(7)
    worst_t = worst_p = 0.0
    for u in haar(rng, 1000):
        t = kak_decompose(u, "T").coords
        ti = kak_decompose(1j * u, "T").coords
        worst_t = max(worst_t, float(np.max(np.abs(ti - phase_partner_T(t)))))
        p = kak_decompose(u, "P").coords
        pi_ = kak_decompose(1j * u, "P").coords
        worst_p = max(worst_p, float(np.max(np.abs(pi_ - p))))
    ok = worst_t <= TOL_PARTNER and worst_p <= TOL_PARTNER
    return record(7, "phase partner", ok, f"1000 samples, T dev {worst_t:.1e}, P dev {worst_p:.1e}")


# 8 -------------------------------------------------------------------------
def criterion_8():
    basis = su4_basis()
    gram = np.array([[killing_form(x, y) for y in basis] for x in basis])
    dev = float(np.max(np.abs(gram + 32 * np.eye(15))))
    bracket = commutation_report()["max_residual"]
    ok = dev <= TOL_KILLING and bracket <= TOL_BRACKET
    return record(8, "Killing form and brackets", ok, f"Killing dev {dev:.1e}, bracket residual {bracket:.1e}")


def test_criterion_1_gate_tables():
    assert criterion_1()


def test_criterion_2_round_trip():
    assert criterion_2()


def test_criterion_3_equivalence_oracles():
    assert criterion_3()


def test_criterion_4_lattice_oracles():
    assert criterion_4()


def test_criterion_5_weyl_group():
    assert criterion_5()


def test_criterion_6_uniqueness():
    assert criterion_6()


def test_criterion_7_phase_partner():
    assert criterion_7()


def test_criterion_8_killing_and_brackets():
    assert criterion_8()


def main():
    checks = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]
    results = [check() for check in checks]
    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
