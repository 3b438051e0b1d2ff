"""Surface braid group words and the quotient map to the Heisenberg group.

Words are sequences of generators s1..s(n-1) (half twists) and a1..ag, b1..bg
(handle generators); they are never rewritten, only their images are
normalized.  The quotient map phi sends every s_i to the central generator u
and a_j, b_j to the corresponding Heisenberg lifts.  verify_bellingeri checks
that phi respects every instance of the defining relations of the group.
"""

from dataclasses import dataclass
import re

from . import heis


@dataclass(frozen=True)
class BraidWord:
    genus: int
    strands: int
    letters: tuple  # sequence of (generator name, exponent)

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("need at least 2 strands")
        for name, _ in self.letters:
            self._check_name(name)

    def _check_name(self, name):
        m = re.fullmatch(r"([sab])(\d+)", name)
        if not m:
            raise ValueError(f"unknown braid generator {name!r}")
        kind, idx = m.group(1), int(m.group(2))
        if kind == "s" and not 1 <= idx <= self.strands - 1:
            raise ValueError(f"{name!r} out of range for {self.strands} strands")
        if kind in "ab" and not 1 <= idx <= self.genus:
            raise ValueError(f"{name!r} out of range for genus {self.genus}")

    def __mul__(self, other):
        if (self.genus, self.strands) != (other.genus, other.strands):
            raise ValueError("braid parameter mismatch")
        return BraidWord(self.genus, self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.genus, self.strands,
                         tuple((name, -exp) for name, exp in reversed(self.letters)))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(name if exp == 1 else f"{name}^{exp}"
                        for name, exp in self.letters)

    @classmethod
    def parse(cls, genus, strands, text):
        """Parse compact text such as 's1 a1^-1 b1 s1^-1'."""
        letters = []
        for chunk in text.split():
            m = re.fullmatch(r"([sab]\d+)(?:\^(-?\d+))?", chunk)
            if not m:
                raise ValueError(f"bad braid letter {chunk!r}")
            letters.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        return cls(genus, strands, tuple(letters))


def phi(w):
    """Image of a braid word in the Heisenberg group."""
    result = heis.identity(w.genus)
    for name, exp in w.letters:
        if name[0] == "s":
            img = heis.u(w.genus, exp)
        else:
            img = heis.generator(w.genus, name, exp)
        result = result * img
    return result


def _w(genus, strands, *letters):
    return BraidWord(genus, strands, tuple(letters))


def bellingeri_relations(genus, strands):
    """All instances of the defining relations at the given parameters.

    Yields (label, left word, right word).  The relation families are the
    braid relations among the s_i, the commutation relations between handle
    generators and the s_i, and the mixed relations tying the two kinds
    together.
    """
    g, n = genus, strands
    out = []
    # (BR1) distant half twists commute
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"BR1[{i},{j}]",
                        _w(g, n, (f"s{i}", 1), (f"s{j}", 1)),
                        _w(g, n, (f"s{j}", 1), (f"s{i}", 1))))
    # (BR2) adjacent half twists braid
    for i in range(1, n - 1):
        j = i + 1
        out.append((f"BR2[{i},{j}]",
                    _w(g, n, (f"s{i}", 1), (f"s{j}", 1), (f"s{i}", 1)),
                    _w(g, n, (f"s{j}", 1), (f"s{i}", 1), (f"s{j}", 1))))
    # (CR1) handle generators commute with s_i, i > 1
    for r in range(1, g + 1):
        for i in range(2, n):
            for x in (f"a{r}", f"b{r}"):
                out.append((f"CR1[{x},s{i}]",
                            _w(g, n, (x, 1), (f"s{i}", 1)),
                            _w(g, n, (f"s{i}", 1), (x, 1))))
    # (CR2) x commutes with s1 x s1
    for r in range(1, g + 1):
        for x in (f"a{r}", f"b{r}"):
            out.append((f"CR2[{x}]",
                        _w(g, n, (x, 1), ("s1", 1), (x, 1), ("s1", 1)),
                        _w(g, n, ("s1", 1), (x, 1), ("s1", 1), (x, 1))))
    # (CR3) x_r commutes with s1^-1 y_s s1 for r < s
    for r in range(1, g + 1):
        for s in range(r + 1, g + 1):
            for x in (f"a{r}", f"b{r}"):
                for y in (f"a{s}", f"b{s}"):
                    conj = (("s1", -1), (y, 1), ("s1", 1))
                    out.append((f"CR3[{x},{y}]",
                                _w(g, n, (x, 1), *conj),
                                _w(g, n, *conj, (x, 1))))
    # (SCR) s1 b_r s1 a_r s1 = a_r s1 b_r
    for r in range(1, g + 1):
        out.append((f"SCR[{r}]",
                    _w(g, n, ("s1", 1), (f"b{r}", 1), ("s1", 1), (f"a{r}", 1), ("s1", 1)),
                    _w(g, n, (f"a{r}", 1), ("s1", 1), (f"b{r}", 1))))
    return out


def verify_bellingeri(genus, strands):
    """Check phi(lhs) = phi(rhs) for every relation instance.

    Returns a list of (label, bool).
    """
    return [(label, phi(lhs) == phi(rhs))
            for label, lhs, rhs in bellingeri_relations(genus, strands)]
