import math

import numpy as np
import pytest
from scipy.linalg import expm

from kakcells.cells import CellKind, in_cell, phase_partner_T
from kakcells.exceptions import DegenerateRecovery, NotUnitary
from kakcells.kak import KakDecomposition, kak_decompose, reconstruct, reconstruction_error

from conftest import haar_unitary, random_local

PI = math.pi
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
ISWAP = np.array([[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=complex)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
QFT = np.array([[1j ** (j * k) for k in range(4)] for j in range(4)]) / 2


def check(u, d, tol=1e-8):
    assert np.linalg.norm(reconstruct(d) - u) <= tol
    for f in (d.k1_a, d.k1_b, d.k2_a, d.k2_b):
        assert np.linalg.norm(f.conj().T @ f - np.eye(2)) <= 1e-10
        assert abs(np.linalg.det(f) - 1) <= 1e-10
    assert d.ell in (1, 1j)
    assert abs(d.ell ** 4 - 1) < 1e-15
    if d.cell is not None:
        assert in_cell(d.coords, d.cell)


@pytest.mark.parametrize(
    "u,cell,expected",
    [
        (SWAP, "P", [PI / 4] * 3),
        (1j * SWAP, "T", [PI / 4, PI / 4, -PI / 4]),
        (CNOT, "P", [PI / 4, 0, 0]),
        (QFT, "P", [PI / 4, PI / 4, PI / 8]),
        (np.eye(4), "T", [0, 0, 0]),
    ],
)
def test_examples(u, cell, expected):
    d = kak_decompose(u, cell)
    assert np.allclose(d.coords, expected, atol=1e-9)
    check(u, d)


def test_identity_factors():
    d = kak_decompose(np.eye(4), "T")
    assert d.ell == 1
    for f in (d.k1_a, d.k1_b, d.k2_a, d.k2_b):
        assert min(np.linalg.norm(f - s * np.eye(2)) for s in (1, -1)) < 1e-12


def test_reconstruct_trivial():
    e = np.eye(2, dtype=complex)
    d = KakDecomposition(1, 1, e, e, e, e, np.zeros(3))
    assert np.allclose(reconstruct(d), np.eye(4), atol=1e-15)


@pytest.mark.parametrize("cell", ["T", "P", None])
def test_round_trip(cell, rng):
    for _ in range(300):
        u = haar_unitary(rng)
        d = kak_decompose(u, cell)
        check(u, d)
        assert reconstruction_error(u, d) <= 1e-8


def test_local_invariance(rng):
    for _ in range(200):
        u = haar_unitary(rng)
        v = random_local(rng) @ u @ random_local(rng)
        assert np.allclose(kak_decompose(u, "T").coords, kak_decompose(v, "T").coords, atol=1e-9)


def test_phase_covariance(rng):
    for _ in range(200):
        u = haar_unitary(rng)
        a = kak_decompose(u, "P").coords
        assert np.allclose(kak_decompose(1j * u, "P").coords, a, atol=1e-9)
        t = kak_decompose(u, "T").coords
        assert np.allclose(kak_decompose(1j * u, "T").coords, phase_partner_T(t), atol=1e-9)


def test_coords_against_expm_oracle(rng):
    # the canonical part rebuilt through scipy's expm
    xx = np.kron([[0, 1], [1, 0]], [[0, 1], [1, 0]])
    yy = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])
    zz = np.diag([1, -1, -1, 1])
    for _ in range(50):
        u = haar_unitary(rng)
        d = kak_decompose(u, "T")
        a = expm(1j * (d.coords[0] * xx + d.coords[1] * yy + d.coords[2] * zz))
        assert np.linalg.norm(d.input_phase * d.ell * d.k1 @ a @ d.k2 - u) <= 1e-8


@pytest.mark.parametrize("g", [np.eye(4), SWAP, ISWAP, CNOT])
def test_degenerate_perturbations(g, rng):
    for eps in (1e-6, 1e-9, 1e-12, 1e-15):
        for _ in range(25):
            h = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            h = (h + h.conj().T) / 2
            h /= np.linalg.norm(h)
            u = g @ expm(1j * eps * h)
            for cell in ("T", "P"):
                check(u, kak_decompose(u, cell))


def test_repeated_calls_identical(rng):
    u = haar_unitary(rng)
    a = kak_decompose(u, "P")
    b = kak_decompose(u.copy(), "P")
    for f in ("k1_a", "k1_b", "k2_a", "k2_b", "coords"):
        assert np.array_equal(getattr(a, f), getattr(b, f))


def test_not_unitary():
    with pytest.raises(NotUnitary):
        kak_decompose(np.ones((4, 4)))
    with pytest.raises(NotUnitary):
        kak_decompose(np.eye(2))


def test_degenerate_recovery_is_arithmetic_error():
    assert issubclass(DegenerateRecovery, ArithmeticError)


def test_env_tolerance(monkeypatch):
    u = np.eye(4) * (1 + 1e-7)
    with pytest.raises(NotUnitary):
        kak_decompose(u)
    monkeypatch.setenv("KAK_TOL", "1e-5")
    d = kak_decompose(u)
    assert np.allclose(d.coords, 0, atol=1e-9)
    assert np.linalg.norm(reconstruct(d) - u) <= 1e-6
    monkeypatch.setenv("KAK_TOL", "nope")
    with pytest.raises(ValueError):
        kak_decompose(np.eye(4))


def test_cell_kind_accepted():
    d = kak_decompose(SWAP, CellKind.P)
    assert d.cell is CellKind.P
