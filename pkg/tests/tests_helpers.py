"""Shared random generators for the test suite."""

from heisencalc import aut, repmatrix as rm
from heisencalc.heis import HeisElement
from heisencalc.ring import HeisPolynomial


def random_twist_aut(rng, genus):
    """Random composite of standard twists and an inner automorphism."""
    phi = aut.identity_aut(genus)
    for _ in range(rng.randint(0, 4)):
        t = aut.twist_aut(genus, rng.choice("ab"), rng.randint(1, genus))
        phi = phi.compose(t if rng.random() < 0.5 else t.inverse())
    h = HeisElement(genus, 0,
                    tuple(rng.randint(-2, 2) for _ in range(2 * genus)))
    return phi.compose(aut.inner_of(h))


def random_monomial_matrix(rng, genus, size):
    rows = []
    for _ in range(size):
        row = []
        for _ in range(size):
            e = HeisElement(genus, rng.randint(-3, 3),
                            tuple(rng.randint(-2, 2) for _ in range(2 * genus)))
            row.append(HeisPolynomial.monomial(e, rng.choice((-1, 1))))
        rows.append(tuple(row))
    return rm.RepMatrix(genus, tuple(rows), aut.identity_aut(genus))
