"""Reference values, kept as polynomial text.

Polynomial texts use one letter per variable and implicit multiplication.
In the partition-function texts ``a, b, g, d`` stand for alpha, beta,
gamma, delta.
"""

from fractions import Fraction
import re

from .polyring import MultiPoly

__all__ = ["read_poly", "Z1_TEXT", "Z2_TEXT", "Z2_Q0_TEXT", "MU1_TEXT", "MU2_NUM_TEXT",
           "NTW_SIGMA", "NTW_TEXT", "GENFUN_TEXTS", "FIB2_TEXTS", "mu1", "mu2"]

_GREEK = {"a": "alpha", "b": "beta", "g": "gamma", "d": "delta", "q": "q", "u": "u", "y": "y"}


def _pythonize(text):
    s = re.sub(r"\s+", "", text)
    s = re.sub(r"(?<=[A-Za-z0-9)])(?=[A-Za-z(])", "*", s)
    return s.replace("^", "**")


def read_poly(text, names=_GREEK):
    """Evaluate ``text`` with every letter bound through ``names``."""
    env = {}
    for letter, val in names.items():
        env[letter] = MultiPoly.var(val) if isinstance(val, str) else val
    return eval(_pythonize(text), {"__builtins__": {}}, env)  # texts are module constants


Z1_TEXT = "ay + dy + b + g"

Z2_TEXT = """
a^2y^2 + ady^2 + a^2dy^2 + abdy^2 + ad^2y^2 + adgy^2 + adqy^2 + d^2qy^2
+ aby + a^2by + ab^2y + bdy + abdy + agy + abgy + dgy + adgy + bdgy
+ d^2gy + dg^2y + abqy + bdqy + agqy + dgqy
+ b^2 + bg + abg + b^2g + bdg + bg^2 + bgq + g^2q
"""

Z2_Q0_TEXT = """
y^2a^2 + y^2ad + y^2a^2d + y^2abd + y^2ad^2 + y^2adg + yab + ya^2b
+ yab^2 + ybd + yabd + yag + yabg + ydg + yadg + ybdg
+ yd^2g + ydg^2 + b^2 + bg + abg + b^2g + bdg + bg^2
"""

MU1_TEXT = "(-a - b - c - d + abc + abd + acd + bcd)/(2(-1 + abcd))"

MU2_NUM_TEXT = """
1 + a^2 + ab + b^2 + ac + bc - a^2bc - ab^2c +
c^2 - abc^2 + ad + bd - a^2bd - ab^2d + cd -
a^2cd - 4abcd - b^2cd + a^2 b^2cd - ac^2d
- bc^2d + a^2bc^2d + ab^2c^2d + d^2 - abd^2 -
acd^2 - bcd^2 + a^2bcd^2 + ab^2cd^2
+ abc^2d^2 - a^2b^2c^2d^2 - q + abq + acq +
bcq - a^2bcq - ab^2cq - abc^2q +
a^2b^2c^2q + adq + bdq - a^2bdq - ab^2dq +
cdq - a^2cdq - 4abcdq - b^2cdq +
a^2b^2cdq - ac^2dq - bc^2dq + a^2bc^2dq +
ab^2c^2dq - abd^2q + a^2b^2d^2q - acd^2q -
bcd^2q + a^2bcd^2q + ab^2cd^2q +
a^2c^2d^2q + abc^2d^2q + b^2c^2d^2q +
a^2b^2c^2d^2q
"""

MU2_DEN_TEXT = "4(-1 + abcd)(-1 + abcdq)"

NTW_SIGMA = "BWWWBWW"
NTW_TEXT = "q^7 + 7q^6 + 24q^5 + 52q^4 + 76q^3 + 75q^2 + 47q + 15"

# alpha = beta = gamma = 1, delta = q = 0
GENFUN_TEXTS = [
    "1",
    "2 + y",
    "5 + 5y + y^2",
    "13 + 20y + 9y^2 + y^3",
    "34 + 72y + 52y^2 + 14y^3 + y^4",
    "89 + 242y + 245y^2 + 110y^3 + 20y^4 + y^5",
]

# alpha = beta = gamma = delta = 1, q = 0; Z_1 .. Z_5
FIB2_TEXTS = [
    "2(1+y)",
    "6(1+y)^2",
    "2(1+y)(8+15y+8y^2)",
    "2(1+y)^2(21+34y+21y^2)",
    "2(1+y)(55+181y+253y^2+181y^3+55y^4)",
]


def _abcdq(params):
    return {k: Fraction(v) for k, v in zip("abcdq", params.as_tuple())}


def mu1(params):
    return read_poly(MU1_TEXT, _abcdq(params))


def mu2(params):
    env = _abcdq(params)
    return read_poly(MU2_NUM_TEXT, env) / read_poly(MU2_DEN_TEXT, env)
