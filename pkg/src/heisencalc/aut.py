"""Orientation-preserving automorphisms of the discrete Heisenberg group.

Every automorphism fixing the central generator u is a pair (delta, S) with
delta a linear form on H_1 and S a symplectic matrix, acting by

    (k, x) -> (k + delta(x), S x).

The module also computes the crossed homomorphism delta from an action on the
fundamental group (the d_i counting formula), inner automorphisms and their
witnesses, and ships the standard twist actions on pi_1 as built-in tables.
"""

from dataclasses import dataclass

from . import heis
from .heis import HeisElement


def _symplectic_J(genus):
    n = 2 * genus
    J = [[0] * n for _ in range(n)]
    for i in range(genus):
        J[2 * i][2 * i + 1] = 1
        J[2 * i + 1][2 * i] = -1
    return J


def _mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)]
            for i in range(n)]


def _mat_transpose(A):
    return [list(row) for row in zip(*A)]


def is_symplectic(S, genus):
    J = _symplectic_J(genus)
    return _mat_mul(_mat_mul(_mat_transpose(S), J), S) == J


@dataclass(frozen=True)
class HeisAutomorphism:
    genus: int
    delta: tuple  # values of delta on a1, b1, ..., ag, bg
    S: tuple      # 2g x 2g integer matrix, rows as tuples

    def __post_init__(self):
        n = 2 * self.genus
        if len(self.delta) != n or len(self.S) != n or any(len(r) != n for r in self.S):
            raise ValueError("dimension mismatch in automorphism data")
        if not is_symplectic([list(r) for r in self.S], self.genus):
            raise ValueError("S is not symplectic")

    def apply(self, x):
        if x.genus != self.genus:
            raise ValueError("genus mismatch")
        k = x.k + sum(d * c for d, c in zip(self.delta, x.coords))
        coords = tuple(sum(self.S[i][j] * x.coords[j] for j in range(len(x.coords)))
                       for i in range(len(x.coords)))
        return HeisElement(self.genus, k, coords)

    def compose(self, f):
        """Return self composed after f (apply f first)."""
        if self.genus != f.genus:
            raise ValueError("genus mismatch")
        n = 2 * self.genus
        S = tuple(tuple(sum(self.S[i][k] * f.S[k][j] for k in range(n))
                        for j in range(n)) for i in range(n))
        delta = tuple(f.delta[j] + sum(self.delta[k] * f.S[k][j] for k in range(n))
                      for j in range(n))
        return HeisAutomorphism(self.genus, delta, S)

    def inverse(self):
        n = 2 * self.genus
        Sinv = _symplectic_inverse(self.S, self.genus)
        delta = tuple(-sum(self.delta[k] * Sinv[k][j] for k in range(n))
                      for j in range(n))
        return HeisAutomorphism(self.genus, delta, tuple(tuple(r) for r in Sinv))

    def is_identity(self):
        return self == identity_aut(self.genus)

    def to_json(self):
        return {"delta": list(self.delta), "S": [list(r) for r in self.S]}

    @classmethod
    def from_json(cls, data):
        S = tuple(tuple(r) for r in data["S"])
        return cls(len(S) // 2, tuple(data["delta"]), S)


def _symplectic_inverse(S, genus):
    # S^-1 = J^-1 S^T J for symplectic S (J^-1 = -J)
    J = _symplectic_J(genus)
    Jinv = [[-x for x in row] for row in J]
    return _mat_mul(_mat_mul(Jinv, _mat_transpose([list(r) for r in S])), J)


def identity_aut(genus):
    n = 2 * genus
    S = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return HeisAutomorphism(genus, (0,) * n, S)


def inner_of(h):
    """The inner automorphism x -> h x h^-1, given by delta(y) = 2 omega(hbar, y)."""
    g = h.genus
    n = 2 * g
    delta = [0] * n
    for j in range(n):
        basis = [0] * n
        basis[j] = 1
        delta[j] = 2 * heis.omega(h.coords, tuple(basis))
    return HeisAutomorphism(g, tuple(delta), identity_aut(g).S)


def inner_witness(phi):
    """Return h with inner_of(h) = phi, or None if phi is not inner.

    An automorphism is inner iff S is the identity and every delta value is
    even; the coordinates of h are then solved from delta via the duality
    delta(y) = 2 omega(hbar, y).
    """
    g = phi.genus
    if phi.S != identity_aut(g).S:
        return None
    if any(d % 2 for d in phi.delta):
        return None
    coords = [0] * (2 * g)
    for i in range(g):
        coords[2 * i] = phi.delta[2 * i + 1] // 2       # a_i coefficient
        coords[2 * i + 1] = -phi.delta[2 * i] // 2      # b_i coefficient
    h = HeisElement(g, 0, tuple(coords))
    if inner_of(h) != phi:
        return None
    return h


# ---------------------------------------------------------------------------
# Free-group words on the letters a1, b1, ..., ag, bg and the crossed
# homomorphism computed from an action on them.
# ---------------------------------------------------------------------------

def _free_reduce(word):
    out = []
    for name, exp in word:
        if exp == 0:
            continue
        if out and out[-1][0] == name:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((name, merged))
        else:
            out.append((name, exp))
    return out


def _split_letters(word):
    letters = []
    for name, exp in word:
        step = 1 if exp > 0 else -1
        letters.extend((name, step) for _ in range(abs(exp)))
    return letters


def morita_d(i, word):
    """The handle-i self-linking count of a free-group word.

    The word is projected to the free group on (a_i, b_i) by deleting all other
    letters, reduced, then greedily decomposed left to right into blocks
    a_i^nu b_i^mu with nu, mu in {-1, 0, 1}; the result is
    sum_{j,k} iota_{jk} nu_j mu_k with iota_{jk} = +1 for j <= k, -1 otherwise.
    """
    target_a, target_b = f"a{i}", f"b{i}"
    for name, _ in word:
        if not (name[0] in "ab" and name[1:].isdigit()):
            raise ValueError(f"bad letter {name!r} in free-group word")
    projected = [(name, exp) for name, exp in word if name in (target_a, target_b)]
    letters = _split_letters(_free_reduce(projected))
    nus, mus = [], []
    pos = 0
    while pos < len(letters):
        if letters[pos][0] == target_a:
            nus.append(letters[pos][1])
            pos += 1
            if pos < len(letters) and letters[pos][0] == target_b:
                mus.append(letters[pos][1])
                pos += 1
            else:
                mus.append(0)
        else:
            nus.append(0)
            mus.append(letters[pos][1])
            pos += 1
    total = 0
    for j in range(len(nus)):
        for k in range(len(mus)):
            iota = 1 if j <= k else -1
            total += iota * nus[j] * mus[k]
    return total


def _word_homology(genus, word):
    coords = [0] * (2 * genus)
    for name, exp in word:
        idx = int(name[1:])
        if not 1 <= idx <= genus:
            raise ValueError(f"letter {name!r} out of range for genus {genus}")
        offset = 2 * (idx - 1) + (0 if name[0] == "a" else 1)
        coords[offset] += exp
    return coords


def morita_crossed_hom(genus, tables):
    """Automorphism induced by an action on the free generators of pi_1.

    tables maps each generator name 'a1', 'b1', ... to its image word (a list
    of (name, exponent) pairs).  The symplectic part is the homology matrix of
    the action; the delta part is computed with the counting formula:
    delta(c) = sum_i d_i(image of c) - d_i(c).
    """
    names = []
    for i in range(1, genus + 1):
        names.extend([f"a{i}", f"b{i}"])
    n = 2 * genus
    S_cols = []
    for name in names:
        S_cols.append(_word_homology(genus, tables[name]))
    S = tuple(tuple(S_cols[j][i] for j in range(n)) for i in range(n))
    if not is_symplectic([list(r) for r in S], genus):
        raise ValueError("action is not symplectic on homology")
    delta = []
    for name in names:
        image = tables[name]
        base = [(name, 1)]
        value = sum(morita_d(i, image) - morita_d(i, base)
                    for i in range(1, genus + 1))
        delta.append(value)
    return HeisAutomorphism(genus, tuple(delta), S)


# ---------------------------------------------------------------------------
# Built-in twist data.  The action of the twist along a_i fixes a_i and sends
# b_i to a_i^-1 b_i; the twist along b_i fixes b_i and sends a_i to a_i b_i.
# The handedness and the resulting delta values are pinned by the requirement
# that the induced matrices satisfy the braid relation (see the repmatrix
# tests), and cross-checked against morita_crossed_hom.
# ---------------------------------------------------------------------------

def twist_pi1_table(genus, kind, index=1):
    """pi_1 action of the twist along a_index ('a') or b_index ('b')."""
    if kind not in ("a", "b") or not 1 <= index <= genus:
        raise ValueError("bad twist specification")
    table = {}
    for i in range(1, genus + 1):
        table[f"a{i}"] = [(f"a{i}", 1)]
        table[f"b{i}"] = [(f"b{i}", 1)]
    if kind == "a":
        table[f"b{index}"] = [(f"a{index}", -1), (f"b{index}", 1)]
    else:
        table[f"a{index}"] = [(f"a{index}", 1), (f"b{index}", 1)]
    return table


def twist_aut(genus, kind, index=1):
    """The Heisenberg automorphism induced by a standard twist.

    Along a_i: delta takes value -1 on b_i, the symplectic part sends
    b_i -> b_i - a_i.  Along b_i: delta takes value +1 on a_i, the symplectic
    part sends a_i -> a_i + b_i.
    """
    if kind not in ("a", "b") or not 1 <= index <= genus:
        raise ValueError("bad twist specification")
    n = 2 * genus
    delta = [0] * n
    S = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    ia, ib = 2 * (index - 1), 2 * (index - 1) + 1
    if kind == "a":
        delta[ib] = -1
        S[ia][ib] = -1   # image of b_i picks up -a_i
    else:
        delta[ia] = 1
        S[ib][ia] = 1    # image of a_i picks up +b_i
    return HeisAutomorphism(genus, tuple(delta), tuple(tuple(r) for r in S))


def bounding_pair_table(genus=2):
    """pi_1 action of a standard genus-one bounding pair (needs genus >= 2).

    a_1 is conjugated by the commutator [a_2, b_2]; a_2 and b_2 are conjugated
    by [a_2, b_2] a_1 b_1 a_1^-1; everything else is fixed.
    """
    if genus < 2:
        raise ValueError("bounding pair needs genus >= 2")
    comm = [("a2", 1), ("b2", 1), ("a2", -1), ("b2", -1)]
    comm_inv = [("b2", 1), ("a2", 1), ("b2", -1), ("a2", -1)]
    wrap = comm + [("a1", 1), ("b1", 1), ("a1", -1)]
    wrap_inv = [("a1", 1), ("b1", -1), ("a1", -1)] + comm_inv
    table = {}
    for i in range(1, genus + 1):
        table[f"a{i}"] = [(f"a{i}", 1)]
        table[f"b{i}"] = [(f"b{i}", 1)]
    table["a1"] = comm + [("a1", 1)]
    table["a2"] = wrap + [("a2", 1)] + wrap_inv
    table["b2"] = wrap + [("b2", 1)] + wrap_inv
    return table
