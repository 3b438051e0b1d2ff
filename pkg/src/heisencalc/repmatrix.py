"""Matrices of twisted module maps over the Heisenberg group ring.

A RepMatrix acts on column coordinate vectors of a free right module.  It
carries a sourceTwist automorphism tau recording that the map is linear only
after the module action on the source is precomposed with tau.  Shifting by
tau multiplies nothing; it applies tau^-1 entrywise.  Two maps compose by

    Mat(g o f) = Mat(g) . g_H(Mat(f)),

where g_H is the automorphism induced by g (the inverse of the sourceTwist
stored on Mat(g)).

The module ships the explicit twist matrices for the genus-1 two-point
module (basis w(a), w(b), v(a,b)), the boundary twist computed as a 4-fold
shifted product, and the higher genus separating twist in block form.
"""

from dataclasses import dataclass
import importlib.resources
import json
import math

from . import aut, heis, ring
from .aut import HeisAutomorphism
from .heis import HeisElement
from .ring import HeisPolynomial


@dataclass(frozen=True)
class RepMatrix:
    genus: int
    entries: tuple  # rows of tuples of HeisPolynomial
    source_twist: HeisAutomorphism

    def __post_init__(self):
        if self.source_twist.genus != self.genus:
            raise ValueError("twist genus mismatch")
        cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for p in row:
                if p.genus != self.genus:
                    raise ValueError("entry genus mismatch")

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    def entry(self, i, j):
        return self.entries[i][j]

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "twist": self.source_twist.to_json(),
            "entries": [[p.to_json() for p in row] for row in self.entries],
        }

    def __str__(self):
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]"
                         for row in self.entries)


def matrix_from_strings(genus, rows, source_twist=None):
    """Build a RepMatrix from a list of lists of expression strings."""
    if source_twist is None:
        source_twist = aut.identity_aut(genus)
    entries = tuple(tuple(ring.parse_poly(genus, s) for s in row) for row in rows)
    return RepMatrix(genus, entries, source_twist)


def identity_matrix(genus, size, source_twist=None):
    if source_twist is None:
        source_twist = aut.identity_aut(genus)
    one, zero = HeisPolynomial.one(genus), HeisPolynomial.zero(genus)
    entries = tuple(tuple(one if i == j else zero for j in range(size))
                    for i in range(size))
    return RepMatrix(genus, entries, source_twist)


def mat_mul(A, B):
    """Plain matrix product of the underlying entry arrays."""
    if A.cols != B.rows:
        raise ValueError("dimension mismatch")
    if A.genus != B.genus:
        raise ValueError("genus mismatch")
    zero = HeisPolynomial.zero(A.genus)
    entries = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = zero
            for k in range(A.cols):
                acc = acc + A.entries[i][k] * B.entries[k][j]
            row.append(acc)
        entries.append(tuple(row))
    return tuple(entries)


def apply_aut_entrywise(tau, M):
    """New RepMatrix with tau applied to every entry; twist left unchanged."""
    entries = tuple(tuple(ring.aut_apply_poly(tau, p) for p in row)
                    for row in M.entries)
    return RepMatrix(M.genus, entries, M.source_twist)


def shift_matrix(M, tau):
    """Precompose the source action with tau: applies tau^-1 entrywise."""
    shifted = apply_aut_entrywise(tau.inverse(), M)
    return RepMatrix(M.genus, shifted.entries, M.source_twist.compose(tau))


def compose_twisted(Fg, Ff, g_H=None):
    """Matrix of the composite g o f.

    g_H is the automorphism induced by g; by default it is recovered from
    the sourceTwist stored on Fg (the twist is the inverse of the induced
    automorphism).
    """
    if g_H is None:
        g_H = Fg.source_twist.inverse()
    twisted = apply_aut_entrywise(g_H, Ff)
    entries = mat_mul(Fg, twisted)
    return RepMatrix(Fg.genus, entries, Ff.source_twist.compose(Fg.source_twist))


def matrix_inverse_entries(M):
    """Two-sided inverse of the plain entry matrix over the group ring.

    Gaussian elimination looking for single-term pivots with coefficient
    +-1 (units of the group ring); raises if none is available at some
    step.  Sufficient for the twist matrices shipped here.
    """
    n = M.rows
    if n != M.cols:
        raise ValueError("only square matrices are invertible")
    g = M.genus
    work = [list(row) for row in M.entries]
    result = [[HeisPolynomial.one(g) if i == j else HeisPolynomial.zero(g)
               for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = None
        for row in range(col, n):
            p = work[row][col]
            if len(p.terms) == 1:
                (elem, coeff), = p.terms.items()
                if coeff in (1, -1):
                    pivot = (row, coeff, elem)
                    break
        if pivot is None:
            raise ValueError(f"no unit pivot in column {col}")
        prow, coeff, elem = pivot
        work[col], work[prow] = work[prow], work[col]
        result[col], result[prow] = result[prow], result[col]
        inv = HeisPolynomial.monomial(elem.inverse(), coeff)
        work[col] = [inv * p for p in work[col]]
        result[col] = [inv * p for p in result[col]]
        for row in range(n):
            if row == col or work[row][col].is_zero():
                continue
            factor = work[row][col]
            work[row] = [a - factor * b for a, b in zip(work[row], work[col])]
            result[row] = [a - factor * b for a, b in zip(result[row], result[col])]
    return tuple(tuple(row) for row in result)


def rep_matrix_inverse(M):
    """RepMatrix of the inverse mapping class.

    If M represents f with induced automorphism f_H (the inverse of its
    sourceTwist), the inverse map has matrix f_H^-1(Mat(f)^-1) and
    sourceTwist f_H, so that compose_twisted(M, rep_matrix_inverse(M)) is
    the identity with identity twist.
    """
    plain = RepMatrix(M.genus, matrix_inverse_entries(M), aut.identity_aut(M.genus))
    twisted = apply_aut_entrywise(M.source_twist, plain)
    return RepMatrix(M.genus, twisted.entries, M.source_twist.inverse())


def specialize_matrix(M, target, order=0):
    """Entrywise specialization; returns a list of lists."""
    if target == "moriyama":
        fn = ring.specialize_moriyama
    elif target == "abelian":
        fn = ring.specialize_abelianize
    elif target == "torsion":
        fn = lambda p: ring.specialize_torsion(p, order)
    else:
        raise ValueError(f"unknown specialization {target!r}")
    return [[fn(p) for p in row] for row in M.entries]


def is_specialized_identity(rows):
    for i, row in enumerate(rows):
        for j, p in enumerate(row):
            if i == j and not p.is_one():
                return False
            if i != j and not p.is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# Basis bookkeeping.
# ---------------------------------------------------------------------------

def basis_enumerate(g, n):
    """Ordered multi-indices (weak compositions of n into 2g parts).

    For n = 2 the order is the block order used by the explicit matrices:
    w(a1), w(b1), v(a1, b1), then v(a1, e) for e over a2, b2, ..., bg, then
    v(b1, e) likewise, then the remaining indices not involving the first
    handle, in lexicographic order.  Other n get plain lexicographic order.
    """
    if g < 1 or n < 2:
        raise ValueError("need g >= 1 and n >= 2")
    dim = 2 * g

    def unit(i, c=1):
        v = [0] * dim
        v[i] = c
        return tuple(v)

    if n == 2:
        out = [unit(0, 2), unit(1, 2)]
        pair = list(unit(0))
        pair[1] = 1
        out.append(tuple(pair))
        for first in (0, 1):
            for e in range(2, dim):
                v = [0] * dim
                v[first] = 1
                v[e] = 1
                out.append(tuple(v))
        rest = []
        for e in range(2, dim):
            rest.append(unit(e, 2))
        for d in range(2, dim):
            for e in range(d + 1, dim):
                v = [0] * dim
                v[d] = 1
                v[e] = 1
                rest.append(tuple(v))
        out.extend(sorted(rest, reverse=True))
        assert len(out) == math.comb(dim + n - 1, n)
        return out

    out = []

    def recurse(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for c in range(remaining, -1, -1):
            recurse(prefix + [c], remaining - c, slots - 1)

    recurse([], n, dim)
    return out


# ---------------------------------------------------------------------------
# Built-in matrices.
# ---------------------------------------------------------------------------

def _load_fixture():
    text = (importlib.resources.files("heisencalc")
            .joinpath("fixtures/twist_matrices.json").read_text())
    return json.loads(text)


_FIXTURE_CACHE = {}


def fixture_matrix(name, genus=1):
    """Transcribed reference matrix by name, as a plain (untwisted) RepMatrix."""
    key = (name, genus)
    if key not in _FIXTURE_CACHE:
        data = _load_fixture()
        _FIXTURE_CACHE[key] = matrix_from_strings(genus, data[name])
    return _FIXTURE_CACHE[key]


def fixture_blocks(genus=1):
    data = _load_fixture()
    return {k: ring.parse_poly(genus, v)
            for k, v in data["separating_blocks"].items()}


def matrix_Ta():
    """Twist along the a curve, genus 1, two points."""
    fm = fixture_matrix("m_a")
    return RepMatrix(1, fm.entries, aut.twist_aut(1, "a").inverse())


def matrix_Tb():
    """Twist along the b curve, genus 1, two points."""
    fm = fixture_matrix("m_b")
    return RepMatrix(1, fm.entries, aut.twist_aut(1, "b").inverse())


def matrix_TaTbTa():
    """The braid-relation composite, computed both ways and checked equal."""
    Ma, Mb = matrix_Ta(), matrix_Tb()
    left = compose_twisted(compose_twisted(Ma, Mb), Ma)
    right = compose_twisted(compose_twisted(Mb, Ma), Mb)
    if left != right:
        raise ArithmeticError("braid-relation composites disagree")
    return left


def matrix_boundary_twist():
    """Boundary twist: four copies of the aba matrix shifted along powers
    of the induced order-4 automorphism, multiplied together.  The result
    carries the identity twist (the boundary twist acts trivially on the
    group), which is asserted.
    """
    A = matrix_TaTbTa()
    g_H = A.source_twist.inverse()
    result = A
    for _ in range(3):
        result = compose_twisted(result, A)
    if not result.source_twist.is_identity():
        raise ArithmeticError("boundary twist acquired a nontrivial twist")
    return result


def embed_poly(p, genus):
    """Embed a genus-1 polynomial into the first handle at higher genus."""
    if p.genus == genus:
        return p
    if p.genus != 1:
        raise ValueError("can only embed genus-1 polynomials")
    pad = (0,) * (2 * genus - 2)
    terms = [(HeisElement(genus, e.k, e.coords + pad), c)
             for e, c in p.terms.items()]
    return HeisPolynomial(genus, terms)


def matrix_separating_twist(g):
    """Block matrix of the twist along a separating curve around the first
    handle, at genus g >= 2 with two points.

    Blocks follow basis_enumerate(g, 2): the leading 3x3 block is the
    boundary twist matrix of the handle, the two middle blocks of size
    2g - 2 mix by the scalars p, q, r, s, and the rest is the identity.
    """
    if g < 2:
        raise ValueError("separating twist needs genus >= 2")
    size = math.comb(2 * g + 1, 2)
    mid = 2 * g - 2
    lam = matrix_boundary_twist()
    blocks = fixture_blocks(genus=g)
    p, q, r, s = blocks["p"], blocks["q"], blocks["r"], blocks["s"]
    zero, one = HeisPolynomial.zero(g), HeisPolynomial.one(g)
    entries = [[zero] * size for _ in range(size)]
    for i in range(3):
        for j in range(3):
            entries[i][j] = embed_poly(lam.entries[i][j], g)
    for t in range(mid):
        i2, i3 = 3 + t, 3 + mid + t
        entries[i2][i2] = p
        entries[i2][i3] = r
        entries[i3][i2] = q
        entries[i3][i3] = s
    for i in range(3 + 2 * mid, size):
        entries[i][i] = one
    return RepMatrix(g, tuple(tuple(row) for row in entries),
                     aut.identity_aut(g))


# ---------------------------------------------------------------------------
# Untwisting and rescaling.
# ---------------------------------------------------------------------------

def untwist(M, h):
    """Remove an inner sourceTwist by right-multiplying entries by h.

    Requires sourceTwist(M) = inner_of(h)^-1.  The results compose as an
    honest (untwisted) representation: untwist(M1 o M2) equals
    untwist(M1) . untwist(M2) with h values multiplied.
    """
    if M.source_twist != aut.inner_of(h).inverse():
        raise ValueError("sourceTwist is not the inverse inner automorphism of h")
    entries = tuple(tuple(p * h for p in row) for row in M.entries)
    return RepMatrix(M.genus, entries, aut.identity_aut(M.genus))


def scalar_mul(M, h):
    """Entrywise right multiplication by a group element."""
    entries = tuple(tuple(p * h for p in row) for row in M.entries)
    return RepMatrix(M.genus, entries, M.source_twist)


def rescale(family, q, mu, k, central):
    """Divide a central character out of a family of generator matrices.

    family maps generator names to RepMatrix; q maps names to integers with
    q[central] = k != 0; mu is a central group element with
    family[central] = mu^k . Id.  Each matrix is multiplied by mu^-q(name),
    after which the central generator maps to the identity.
    """
    if k == 0:
        raise ValueError("central exponent k must be nonzero")
    genus = family[central].genus
    if q[central] != k:
        raise ValueError("q(central) must equal k")
    expected = scalar_mul(identity_matrix(genus, family[central].rows), mu ** k)
    if family[central].entries != expected.entries:
        raise ValueError("central generator is not mu^k times the identity")
    return {name: scalar_mul(M, mu ** (-q[name])) for name, M in family.items()}


# ---------------------------------------------------------------------------
# LaTeX export.
# ---------------------------------------------------------------------------

def _latex_word(elem):
    kappa, coords = elem.word_exponents()
    parts = []
    if kappa:
        parts.append("u" if kappa == 1 else f"u^{{{kappa}}}")
    genus = elem.genus
    for i in range(genus):
        for off, letter in ((0, "a"), (1, "b")):
            e = coords[2 * i + off]
            if e:
                name = letter if genus == 1 else f"{letter}_{{{i + 1}}}"
                parts.append(name if e == 1 else f"{name}^{{{e}}}")
    return " ".join(parts) if parts else "1"


def poly_latex(p):
    if not p.terms:
        return "0"
    chunks = []
    for elem, coeff in p.sorted_terms():
        word = _latex_word(elem)
        if word == "1":
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = word
        else:
            body = f"{abs(coeff)} {word}"
        chunks.append(("-" if coeff < 0 else "+", body))
    text = (chunks[0][0] if chunks[0][0] == "-" else "") + chunks[0][1]
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text


def matrix_latex(M):
    rows = [" & ".join(poly_latex(p) for p in row) for row in M.entries]
    return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"
