"""Worked examples used throughout the docs and tests."""

from .fixedpoint import Window
from .substitution import Morphism, Substitution
from .wordcore import Alphabet

ABC = Alphabet("ABC")
AB = Alphabet("AB")

#: Primitive, eigenvalues 2 +- sqrt(10) and -1; its fixed point has no
#: non-trivial BDL representation although one eigenvalue has modulus 1.
PSI_UNIT = Substitution(ABC, {"A": "BBBCCC", "B": "BACCB", "C": "ABBBC"})

#: The only direction that could work for PSI_UNIT.
PSI_UNIT_NORMAL = (3, -1, 0)

#: Eigenvalues ~5.0593, -2.6549, 0.5956; has a BDL representation.
PSI_SMALL = Substitution(ABC, {"A": "AABBBCCCC", "B": "AAB", "C": "AA"})

#: Erases C; the image of PSI_SMALL's fixed point loses the BDL property.
PHI_ERASE_C = Morphism(ABC, AB, {"A": "A", "B": "B", "C": ""})

THUE_MORSE = Substitution(Alphabet("ab"), {"a": "ab", "b": "ba"})
FIBONACCI = Substitution(Alphabet("ab"), {"a": "ab", "b": "a"})

#: ...CBCBCB|CBACC..., the small illustration of a geometric representation.
SAMPLE_WINDOW = Window(ABC, "CBCBCB", "CBACC")
