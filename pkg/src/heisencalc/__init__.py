"""Exact computations with the discrete Heisenberg group of a surface.

Subpackages cover the group itself (heis), its integral group ring (ring),
its automorphisms and crossed homomorphisms (aut), surface braid words and
the quotient map to the group (braid), twisted representation matrices
(repmatrix), the intersection pairing (pairing), and finite Schrodinger
representations with Weil intertwiners (schrodinger).
"""

__version__ = "0.1.0"

from .heis import HeisElement
from .ring import HeisPolynomial
from .aut import HeisAutomorphism
from .braid import BraidWord
