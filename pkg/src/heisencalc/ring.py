"""Sparse exact arithmetic in the integral group ring of the Heisenberg group.

A polynomial is a finite map from group elements to nonzero integer
coefficients.  Multiplication distributes the group product over terms; all
coefficients and exponents are arbitrary-precision.  The module also provides
the three specialization homomorphisms (to Z[u]/(u^2-1), to the commutative
Laurent ring, and to the central N-torsion quotient) and the entrywise action
of Heisenberg automorphisms.
"""

from dataclasses import dataclass

from . import heis
from .heis import HeisElement


class HeisPolynomial:
    """Element of the group ring, held as {HeisElement: nonzero int}."""

    __slots__ = ("genus", "terms")

    def __init__(self, genus, terms=None):
        self.genus = genus
        self.terms = {}
        if terms:
            for elem, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if elem.genus != genus:
                    raise ValueError("genus mismatch")
                if coeff:
                    new = self.terms.get(elem, 0) + coeff
                    if new:
                        self.terms[elem] = new
                    else:
                        del self.terms[elem]

    @classmethod
    def zero(cls, genus):
        return cls(genus)

    @classmethod
    def one(cls, genus):
        return cls.monomial(heis.identity(genus))

    @classmethod
    def monomial(cls, elem, coeff=1):
        return cls(elem.genus, {elem: coeff})

    def _check(self, other):
        if not isinstance(other, HeisPolynomial):
            raise TypeError("expected a HeisPolynomial")
        if self.genus != other.genus:
            raise ValueError("genus mismatch")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for elem, coeff in other.terms.items():
            new = terms.get(elem, 0) + coeff
            if new:
                terms[elem] = new
            else:
                del terms[elem]
        out = HeisPolynomial(self.genus)
        out.terms = terms
        return out

    def __neg__(self):
        out = HeisPolynomial(self.genus)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = HeisPolynomial(self.genus)
            if other:
                out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        if isinstance(other, HeisElement):
            other = HeisPolynomial.monomial(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 * e2
                new = terms.get(e, 0) + c1 * c2
                if new:
                    terms[e] = new
                elif e in terms:
                    del terms[e]
        out = HeisPolynomial(self.genus)
        out.terms = terms
        return out

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, HeisElement):
            return HeisPolynomial.monomial(other) * self
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, HeisPolynomial)
                and self.genus == other.genus and self.terms == other.terms)

    def __hash__(self):
        return hash((self.genus, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        """Terms in the canonical order: lexicographic on (k, coords)."""
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for elem, coeff in self.sorted_terms():
            word = elem.word_str()
            if word == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = word
            else:
                body = f"{abs(coeff)} {word}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"HeisPolynomial({self})"

    def to_json(self):
        return [{"k": e.k, "coords": list(e.coords), "c": c}
                for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, genus, data):
        terms = [(HeisElement(genus, t["k"], tuple(t["coords"])), t["c"])
                 for t in data]
        return cls(genus, terms)


# ---------------------------------------------------------------------------
# Expression parsing.  Grammar (whitespace-insensitive):
#   expr    := ['-'] product (('+'|'-') product)*
#   product := factor+                      (juxtaposition is multiplication)
#   factor  := integer | symbol ['^' int] | '(' expr ')' ['^' int]
#   symbol  := 'u' | 'a' | 'b' | 'a<i>' | 'b<i>'
# ---------------------------------------------------------------------------

import re

_EXPR_TOKEN = re.compile(r"\s*(?:(\d+)|([uab]\d*)|(\^-?\d+)|([+\-()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad expression near {text[pos:]!r}")
            break
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("sym", m.group(2)))
        elif m.group(3):
            tokens.append(("pow", int(m.group(3)[1:])))
        else:
            tokens.append((m.group(4), None))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, genus, tokens):
        self.genus = genus
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse_expr(self):
        sign = 1
        if self.peek()[0] == "-":
            self.next()
            sign = -1
        elif self.peek()[0] == "+":
            self.next()
        result = self.parse_product() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            term = self.parse_product()
            result = result + (term if op == "+" else -term)
        return result

    def parse_product(self):
        result = self.parse_factor()
        while self.peek()[0] in ("int", "sym", "("):
            result = result * self.parse_factor()
        return result

    def parse_factor(self):
        kind, value = self.next()
        if kind == "int":
            return HeisPolynomial.monomial(heis.identity(self.genus), value)
        if kind == "sym":
            power = 1
            if self.peek()[0] == "pow":
                power = self.next()[1]
            return HeisPolynomial.monomial(heis.generator(self.genus, value, power))
        if kind == "(":
            inner = self.parse_expr()
            if self.next()[0] != ")":
                raise ValueError("unbalanced parentheses")
            if self.peek()[0] == "pow":
                power = self.next()[1]
                if power < 0:
                    raise ValueError("negative powers only allowed on group generators")
                result = HeisPolynomial.one(self.genus)
                for _ in range(power):
                    result = result * inner
                return result
            return inner
        raise ValueError(f"unexpected token {kind!r}")


def parse_poly(genus, text):
    """Parse a polynomial expression such as '(u^-1 - 1) a^-1 b + u^2'."""
    parser = _Parser(genus, _tokenize(text))
    result = parser.parse_expr()
    if parser.pos != len(parser.tokens):
        raise ValueError("trailing tokens in expression")
    return result


# ---------------------------------------------------------------------------
# Specializations.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecializedPolynomial:
    """Image of a group-ring element in one of the quotient rings.

    target 'moriyama': Z[u]/(u^2-1); terms keyed by u-exponent in {0, 1}.
    target 'abelian':  commutative Laurent ring; terms keyed by coords.
    target 'torsionN': group ring of the central quotient by u^N; terms keyed
    by (k mod N, coords).
    """
    target: str
    genus: int
    order: int  # N for torsion, else 0
    terms: tuple  # sorted tuple of (key, coeff)

    @classmethod
    def _build(cls, target, genus, order, raw):
        terms = {}
        for key, coeff in raw:
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            elif key in terms:
                del terms[key]
        return cls(target, genus, order, tuple(sorted(terms.items())))

    def _check(self, other):
        if (self.target, self.genus, self.order) != (other.target, other.genus, other.order):
            raise ValueError("specialization target mismatch")

    def __add__(self, other):
        self._check(other)
        return SpecializedPolynomial._build(
            self.target, self.genus, self.order,
            list(self.terms) + list(other.terms))

    def __mul__(self, other):
        self._check(other)
        raw = []
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                raw.append((self._mul_keys(k1, k2), c1 * c2))
        return SpecializedPolynomial._build(self.target, self.genus, self.order, raw)

    def _mul_keys(self, k1, k2):
        if self.target == "moriyama":
            return (k1 + k2) % 2
        if self.target == "abelian":
            return tuple(a + b for a, b in zip(k1, k2))
        # torsion: multiply in the quotient group, reducing k mod N
        kk = (k1[0] + k2[0] + heis.omega(k1[1], k2[1])) % self.order
        coords = tuple(a + b for a, b in zip(k1[1], k2[1]))
        return (kk, coords)

    def is_one(self):
        if self.target == "moriyama":
            return self.terms == ((0, 1),)
        if self.target == "abelian":
            return self.terms == (((0,) * (2 * self.genus), 1),)
        return self.terms == (((0, (0,) * (2 * self.genus)), 1),)

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.terms:
            if self.target == "moriyama":
                body = "1" if key == 0 else "u"
            elif self.target == "abelian":
                body = _laurent_str(key)
            else:
                body = ("1" if key[0] == 0 else f"u^{key[0]}")
                tail = _laurent_str(key[1])
                body = tail if key[0] == 0 else (body if tail == "1" else f"{body} {tail}")
            if body == "1":
                body = str(abs(coeff))
            elif abs(coeff) != 1:
                body = f"{abs(coeff)} {body}"
            parts.append(("-" if coeff < 0 else "+", body))
        text = (parts[0][0] if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _laurent_str(coords):
    parts = []
    for i in range(0, len(coords), 2):
        l, m = coords[i], coords[i + 1]
        idx = i // 2 + 1
        if l:
            parts.append(f"a{idx}" if l == 1 else f"a{idx}^{l}")
        if m:
            parts.append(f"b{idx}" if m == 1 else f"b{idx}^{m}")
    return " ".join(parts) if parts else "1"


def specialize_moriyama(p):
    """Ring homomorphism killing all a_i, b_i and imposing u^2 = 1.

    Each group element goes to u^kappa where kappa is the central exponent of
    its word normal form (the pair-form k corrected by sum l_i m_i).
    """
    raw = []
    for elem, coeff in p.terms.items():
        kappa, _ = elem.word_exponents()
        raw.append((kappa % 2, coeff))
    return SpecializedPolynomial._build("moriyama", p.genus, 0, raw)


def specialize_abelianize(p):
    """Ring homomorphism u -> 1 onto the commutative Laurent ring."""
    raw = [(elem.coords, coeff) for elem, coeff in p.terms.items()]
    return SpecializedPolynomial._build("abelian", p.genus, 0, raw)


def specialize_torsion(p, N):
    """Quotient by the central subgroup generated by u^N (reduce k mod N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    raw = [((elem.k % N, elem.coords), coeff) for elem, coeff in p.terms.items()]
    return SpecializedPolynomial._build("torsionN", p.genus, N, raw)


def aut_apply_poly(tau, p):
    """Apply an automorphism to every group element of a polynomial."""
    out = HeisPolynomial(p.genus)
    terms = {}
    for elem, coeff in p.terms.items():
        image = tau.apply(elem)
        terms[image] = terms.get(image, 0) + coeff
    out.terms = {e: c for e, c in terms.items() if c}
    return out
