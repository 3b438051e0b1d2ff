import numpy as np
import pytest

from heisencalc import aut, heis, schrodinger as sch
from heisencalc.heis import HeisElement


def sp_transvection(genus, kind, index=1):
    """Symplectic part of a standard twist, with no delta component."""
    t = aut.twist_aut(genus, kind, index)
    return aut.HeisAutomorphism(genus, (0,) * (2 * genus), t.S)


def test_central_element_is_scalar():
    for N in (2, 3, 5):
        U = sch.schrodinger_matrix(N, 1, heis.u(1))
        assert np.abs(U - np.exp(1j * np.pi / N) * np.eye(N)).max() < 1e-12


def test_b_generator_is_diagonal():
    N = 5
    U = sch.schrodinger_matrix(N, 1, heis.gen_b(1, 1))
    expect = np.diag([np.exp(2j * np.pi * s / N) for s in range(N)])
    assert np.abs(U - expect).max() < 1e-12


def test_a_generator_is_shift():
    N = 4
    U = sch.schrodinger_matrix(N, 1, heis.gen_a(1, 1))
    psi = np.zeros(N)
    psi[2] = 1.0
    # (U psi)(s) = psi(s + 1): the spike moves from 2 to 1
    out = U @ psi
    assert abs(out[1] - 1.0) < 1e-12
    assert np.abs(np.delete(out, 1)).max() < 1e-12


def test_rejects_small_N():
    with pytest.raises(ValueError):
        sch.schrodinger_matrix(1, 1, heis.u(1))


def test_rep_property_all_N():
    for N in range(2, 9):
        for g in (1, 2):
            report = sch.verify_schrodinger_rep(N, g)
            bad = [name for name, ok in report if not ok]
            assert not bad, f"N={N}, g={g}: {bad}"


def test_rep_property_random_pairs():
    rng = np.random.default_rng(31)
    for _ in range(200):
        N = int(rng.integers(2, 7))
        g = int(rng.integers(1, 3))
        x = HeisElement(g, int(rng.integers(-6, 7)),
                        tuple(int(rng.integers(-5, 6)) for _ in range(2 * g)))
        y = HeisElement(g, int(rng.integers(-6, 7)),
                        tuple(int(rng.integers(-5, 6)) for _ in range(2 * g)))
        lhs = sch.schrodinger_matrix(N, g, x) @ sch.schrodinger_matrix(N, g, y)
        rhs = sch.schrodinger_matrix(N, g, x * y)
        assert np.abs(lhs - rhs).max() < 1e-9


def test_depends_on_word_form_reduction():
    rng = np.random.default_rng(32)
    for _ in range(100):
        N = int(rng.integers(2, 7))
        k = int(rng.integers(-9, 10))
        l = int(rng.integers(-6, 7))
        m = int(rng.integers(-6, 7))
        h = HeisElement(1, k, (l, m))
        kappa, _ = h.word_exponents()
        lr, mr = l % N, m % N
        reduced = HeisElement(1, kappa % (2 * N) + lr * mr, (lr, mr))
        assert np.abs(sch.schrodinger_matrix(N, 1, h)
                      - sch.schrodinger_matrix(N, 1, reduced)).max() < 1e-9


def test_weil_identity():
    U = sch.weil_intertwiner(3, 1, aut.identity_aut(1))
    assert np.abs(U - np.eye(3)).max() < 1e-10


def test_weil_rejects_delta():
    with pytest.raises(ValueError):
        sch.weil_intertwiner(3, 1, aut.twist_aut(1, "a"))


def test_weil_transvections():
    for N in (3, 4, 5):
        for kind in ("a", "b"):
            phi = sp_transvection(1, kind)
            U = sch.weil_intertwiner(N, 1, phi)
            assert sch.weil_residual(N, 1, phi, U) < 1e-10
            assert np.abs(U @ U.conj().T - np.eye(N)).max() < 1e-10
            flat = U.reshape(-1)
            pivot = flat[np.abs(flat) > 1e-8][0]
            assert abs(pivot.imag) < 1e-10 and pivot.real > 0


def test_weil_genus2():
    phi = sp_transvection(2, "a", 1)
    U = sch.weil_intertwiner(3, 2, phi)
    assert sch.weil_residual(3, 2, phi, U) < 1e-10


def test_cocycle():
    phi_a = sp_transvection(1, "a")
    phi_b = sp_transvection(1, "b")
    for N in (3, 4, 5):
        lam = sch.weil_cocycle(N, 1, phi_a, phi_b)
        assert abs(abs(lam) - 1) < 1e-10
    assert abs(sch.weil_cocycle(4, 1, phi_a, aut.identity_aut(1)) - 1) < 1e-10
    lam = sch.weil_cocycle(5, 1, phi_a, phi_a.inverse())
    assert abs(abs(lam) - 1) < 1e-10


def test_matrix_json():
    U = sch.schrodinger_matrix(2, 1, heis.u(1))
    data = sch.matrix_to_json(U)
    assert len(data) == 2 and len(data[0]) == 2
    assert abs(data[0][0][0] - np.cos(np.pi / 2)) < 1e-12
