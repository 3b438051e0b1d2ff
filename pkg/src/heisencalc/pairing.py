"""Evaluation of the intersection pairing from combinatorial data.

Each transverse intersection contributes a signed group-ring monomial: the
product of two arc-level signs, a permutation sign, and the image under phi
of the loop traced through the tethers and cycles.  The module only sums
these contributions; producing the intersection records from curve diagrams
is out of scope.

Two sign modes are available.  The default "paper-formula" mode sums
sgn_p1 . sgn_p2 . sgn_loop . phi(loop); the "oriented" mode includes the
extra global -1 coming from the orientation conventions on configuration
spaces, so it computes the negative of the first.
"""

from dataclasses import dataclass

from . import braid
from .braid import BraidWord
from .ring import HeisPolynomial


@dataclass(frozen=True)
class IntersectionRecord:
    sgn_p1: int
    sgn_p2: int
    sgn_loop: int
    loop: BraidWord

    def __post_init__(self):
        for s in (self.sgn_p1, self.sgn_p2, self.sgn_loop):
            if s not in (1, -1):
                raise ValueError("signs must be +1 or -1")
        if self.loop.strands != 2:
            raise ValueError("loops live in the two-point configuration space")

    @classmethod
    def from_json(cls, genus, data):
        return cls(data["s1"], data["s2"], data["sl"],
                   BraidWord.parse(genus, 2, data["loop"]))

    def to_json(self):
        return {"s1": self.sgn_p1, "s2": self.sgn_p2, "sl": self.sgn_loop,
                "loop": str(self.loop) if self.loop.letters else ""}


def configuration_sign(sgn_p1, sgn_p2, sgn_loop):
    """Full intersection sign in the oriented convention (global -1 included)."""
    for s in (sgn_p1, sgn_p2, sgn_loop):
        if s not in (1, -1):
            raise ValueError("signs must be +1 or -1")
    return -sgn_p1 * sgn_p2 * sgn_loop


def evaluate_pairing(records, genus=1, mode="paper-formula"):
    """Sum the signed phi-images of a list of IntersectionRecord."""
    if mode not in ("paper-formula", "oriented"):
        raise ValueError(f"unknown sign mode {mode!r}")
    total = HeisPolynomial.zero(genus)
    for rec in records:
        if rec.loop.genus != genus:
            raise ValueError("record genus mismatch")
        if mode == "paper-formula":
            sign = rec.sgn_p1 * rec.sgn_p2 * rec.sgn_loop
        else:
            sign = configuration_sign(rec.sgn_p1, rec.sgn_p2, rec.sgn_loop)
        total = total + HeisPolynomial.monomial(braid.phi(rec.loop), sign)
    return total


def _rec(genus, s1, s2, sl, text):
    return IntersectionRecord(s1, s2, sl, BraidWord.parse(genus, 2, text))


def worked_records(name, genus=1):
    """Record sets for the three worked pairing values.

    'ta-wb-wa': the single intersection point pairing the twisted w(b)
    class with the dual w(a) class.  'ta-wb-vab': the two points against
    the dual v(a, b) class.  's-entry': the five points giving the s
    scalar of the separating twist.
    """
    if name == "ta-wb-wa":
        return [_rec(genus, -1, -1, 1, "a1^-1 b1 s1^-1 a1^-1 b1 s1")]
    if name == "ta-wb-vab":
        return [_rec(genus, -1, 1, -1, "s1^-1 a1^-1 b1"),
                _rec(genus, 1, -1, 1, "a1^-1 b1")]
    if name == "s-entry":
        return [
            _rec(genus, 1, 1, 1, ""),
            _rec(genus, -1, 1, 1,
                 "s1^-1 b1^-1 a1 b1 a1^-1 b1 a1 b1^-1 a1^-1 b1 s1"),
            _rec(genus, 1, 1, 1, "s1^-1 a1 b1^-1 a1^-1 b1 s1"),
            _rec(genus, 1, 1, 1, "s1^-1 a1^-1 b1 a1 b1^-1 a1^-1 b1 s1"),
            _rec(genus, -1, 1, 1, "s1^-1 b1^-1 a1^-1 b1 s1"),
        ]
    raise ValueError(f"unknown fixture {name!r}")


def dual_basis_records(genus=1):
    """Record sets whose pairing matrix against the dual basis is the
    identity.  The diagonal sets each hold the single positive point with
    trivial loop; the off-diagonal pairs meet in cancelling or empty
    configurations, so their record lists are empty.
    """
    size = 3
    grid = []
    for i in range(size):
        row = []
        for j in range(size):
            row.append([_rec(genus, 1, 1, 1, "")] if i == j else [])
        grid.append(row)
    return grid
