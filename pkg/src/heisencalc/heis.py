"""Exact arithmetic in the discrete Heisenberg group of a genus-g surface.

The group is Z x H_1, where H_1 is free abelian of rank 2g with symplectic
basis a_1, b_1, ..., a_g, b_g, and the product is twisted by the intersection
form omega:

    (k, x) (l, y) = (k + l + omega(x, y), x + y),

with omega(a_i, b_j) the Kronecker delta.  Elements are stored in pair form
(k, coords) with coords = (l_1, m_1, ..., l_g, m_g).  The word normal form
u^kappa a_1^{l_1} b_1^{m_1} ... a_g^{l_g} b_g^{m_g} is a derived view, with
kappa = k - sum_i l_i m_i.
"""

from dataclasses import dataclass
import re


def omega(coords_x, coords_y):
    """Symplectic form on coordinate vectors (l1, m1, ..., lg, mg)."""
    if len(coords_x) != len(coords_y):
        raise ValueError("genus mismatch in symplectic form")
    total = 0
    for i in range(0, len(coords_x), 2):
        total += coords_x[i] * coords_y[i + 1] - coords_x[i + 1] * coords_y[i]
    return total


@dataclass(frozen=True)
class HeisElement:
    genus: int
    k: int
    coords: tuple

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be >= 1")
        if len(self.coords) != 2 * self.genus:
            raise ValueError(
                f"expected {2 * self.genus} coordinates, got {len(self.coords)}")

    def _check(self, other):
        if self.genus != other.genus:
            raise ValueError("genus mismatch")

    def __mul__(self, other):
        self._check(other)
        k = self.k + other.k + omega(self.coords, other.coords)
        coords = tuple(a + b for a, b in zip(self.coords, other.coords))
        return HeisElement(self.genus, k, coords)

    def inverse(self):
        return HeisElement(self.genus, -self.k, tuple(-c for c in self.coords))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = identity(self.genus)
        for _ in range(n):
            result = result * self
        return result

    def conjugate(self, x):
        """Return self * x * self^-1.

        For h = (l, xbar) and x = (k, ybar) this is (k + 2 omega(xbar, ybar), ybar).
        """
        self._check(x)
        return HeisElement(self.genus, x.k + 2 * omega(self.coords, x.coords),
                           x.coords)

    def is_identity(self):
        return self.k == 0 and all(c == 0 for c in self.coords)

    def word_exponents(self):
        """Return (kappa, coords) for the word normal form u^kappa prod a_i^l b_i^m."""
        kappa = self.k - sum(self.coords[2 * i] * self.coords[2 * i + 1]
                             for i in range(self.genus))
        return kappa, self.coords

    def word_str(self):
        kappa, coords = self.word_exponents()
        parts = []
        if kappa != 0:
            parts.append("u" if kappa == 1 else f"u^{kappa}")
        for i in range(self.genus):
            l, m = coords[2 * i], coords[2 * i + 1]
            if l != 0:
                parts.append(f"a{i + 1}" if l == 1 else f"a{i + 1}^{l}")
            if m != 0:
                parts.append(f"b{i + 1}" if m == 1 else f"b{i + 1}^{m}")
        return " ".join(parts) if parts else "1"

    def pair_str(self):
        return f"({self.k}; {','.join(str(c) for c in self.coords)})"

    def __str__(self):
        return self.word_str()

    def sort_key(self):
        return (self.k,) + self.coords


def identity(genus):
    return HeisElement(genus, 0, (0,) * (2 * genus))


def u(genus, power=1):
    return HeisElement(genus, power, (0,) * (2 * genus))


def gen_a(genus, i, power=1):
    """The lift of a_i, with 1 <= i <= genus."""
    if not 1 <= i <= genus:
        raise ValueError(f"index {i} out of range for genus {genus}")
    coords = [0] * (2 * genus)
    coords[2 * (i - 1)] = power
    return HeisElement(genus, 0, tuple(coords))


def gen_b(genus, i, power=1):
    if not 1 <= i <= genus:
        raise ValueError(f"index {i} out of range for genus {genus}")
    coords = [0] * (2 * genus)
    coords[2 * (i - 1) + 1] = power
    return HeisElement(genus, 0, tuple(coords))


def generator(genus, name, power=1):
    """Generator by name: 'u', 'a<i>' or 'b<i>'.  'a'/'b' mean index 1."""
    if name == "u":
        return u(genus, power)
    m = re.fullmatch(r"([ab])(\d*)", name)
    if not m:
        raise ValueError(f"unknown generator {name!r}")
    idx = int(m.group(2)) if m.group(2) else 1
    make = gen_a if m.group(1) == "a" else gen_b
    return make(genus, idx, power)


def from_word(genus, word):
    """Multiply out a word given as a sequence of (generator name, exponent)."""
    result = identity(genus)
    for name, exp in word:
        result = result * generator(genus, name, exp)
    return result


_TOKEN = re.compile(r"([uab]\d*)(?:\^(-?\d+))?")


def parse_element(genus, text):
    """Parse either word form 'u^2 a1^-2 b1^2' or pair form '(k; l1,m1,...)'."""
    text = text.strip()
    if text.startswith("("):
        m = re.fullmatch(r"\(\s*(-?\d+)\s*;\s*([-\d,\s]*)\)", text)
        if not m:
            raise ValueError(f"bad pair form: {text!r}")
        coords = tuple(int(c) for c in m.group(2).split(",")) if m.group(2).strip() else ()
        return HeisElement(genus, int(m.group(1)), coords)
    if text == "1" or text == "":
        return identity(genus)
    word = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"bad element syntax near {text[pos:m.start()]!r}")
        word.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"bad element syntax near {text[pos:]!r}")
    return from_word(genus, word)


def verify_presentation(genus):
    """Check the defining relations of the group for the given genus.

    Relations: u is central, a_i b_i = u^2 b_i a_i, and a_i b_j = b_j a_i
    for i != j.  Returns a list of (relation description, bool).
    """
    report = []
    gens = [("u", u(genus))]
    for i in range(1, genus + 1):
        gens.append((f"a{i}", gen_a(genus, i)))
        gens.append((f"b{i}", gen_b(genus, i)))
    uu = u(genus)
    for name, x in gens:
        report.append((f"u {name} = {name} u", uu * x == x * uu))
    u2 = u(genus, 2)
    for i in range(1, genus + 1):
        for j in range(1, genus + 1):
            ai, bj = gen_a(genus, i), gen_b(genus, j)
            if i == j:
                report.append((f"a{i} b{j} = u^2 b{j} a{i}",
                               ai * bj == u2 * bj * ai))
            else:
                report.append((f"a{i} b{j} = b{j} a{i}", ai * bj == bj * ai))
    return report
