"""Published polynomials the calculator reproduces."""

from libs.motivic.polyring import parse_polynomial

# P(M(5,2)), the input to the forgetful-map decomposition
M52_TEXT = (
    "1 + 2p + 6p^2 + 13p^3 + 26p^4 + 45p^5 + 68p^6 + 87p^7 + 100p^8 + 107p^9"
    " + 111p^10 + 112p^11 + 113p^12 + 113p^13 + 113p^14 + 112p^15 + 111p^16"
    " + 107p^17 + 100p^18 + 87p^19 + 68p^20 + 45p^21 + 26p^22 + 13p^23 + 6p^24"
    " + 2p^25 + p^26"
)

# P(M(5,2)_3), the Brill-Noether locus with three sections
M52_3_TEXT = (
    "1 + 3p + 8p^2 + 14p^3 + 19p^4 + 21p^5 + 22p^6 + 22p^7 + 22p^8 + 22p^9"
    " + 22p^10 + 22p^11 + 22p^12 + 22p^13 + 22p^14 + 22p^15 + 22p^16 + 22p^17"
    " + 21p^18 + 19p^19 + 14p^20 + 8p^21 + 3p^22 + p^23"
)

# P(M^+(5,2)), the pair space just above the first wall
MPLUS52_TEXT = (
    "1 + 3p + 9p^2 + 22p^3 + 47p^4 + 85p^5 + 132p^6 + 176p^7 + 209p^8 + 229p^9"
    " + 240p^10 + 245p^11 + 247p^12 + 248p^13 + 248p^14 + 247p^15 + 245p^16"
    " + 240p^17 + 229p^18 + 209p^19 + 176p^20 + 132p^21 + 85p^22 + 47p^23"
    " + 22p^24 + 9p^25 + 3p^26 + p^27"
)

# P(M^infinity(5,2))
MINF52_TEXT = (
    "1 + 3p + 9p^2 + 22p^3 + 50p^4 + 99p^5 + 173p^6 + 256p^7 + 330p^8 + 379p^9"
    " + 407p^10 + 420p^11 + 426p^12 + 428p^13 + 429p^14 + 428p^15 + 423p^16"
    " + 410p^17 + 382p^18 + 333p^19 + 259p^20 + 176p^21 + 101p^22 + 51p^23"
    " + 22p^24 + 9p^25 + 3p^26 + p^27"
)

# P(C_3^+) - P(C_3^-), the change across the non-simple wall alpha = 3
C3_TEXT = (
    "p^4 + 4p^5 + 13p^6 + 27p^7 + 44p^8 + 57p^9 + 66p^10 + 70p^11 + 72p^12"
    " + 72p^13 + 72p^14 + 72p^15 + 70p^16 + 66p^17 + 57p^18 + 44p^19 + 27p^20"
    " + 13p^21 + 4p^22 + p^23"
)

HILB2_TEXT = "1 + 2p + 3p^2 + 2p^3 + p^4"
HILB3_TEXT = "1 + 2p + 5p^2 + 6p^3 + 5p^4 + 2p^5 + p^6"

M52 = parse_polynomial(M52_TEXT)
M52_3 = parse_polynomial(M52_3_TEXT)
MPLUS52 = parse_polynomial(MPLUS52_TEXT)
MINF52 = parse_polynomial(MINF52_TEXT)
C3_WALL = parse_polynomial(C3_TEXT)
HILB2 = parse_polynomial(HILB2_TEXT)
HILB3 = parse_polynomial(HILB3_TEXT)

HILB_EULER = (1, 3, 9, 22)
MINF52_EULER = 6030
WALL_EULERS = (150, 378, 702, 852, 162)

# Local P^2 Pandharipande-Thomas count; reported beside the 6030 check, never asserted.
LOCAL_PT_EULER = 6060
