"""Exact and float scalars used for vector coordinates.

Exact reals are :class:`fractions.Fraction`; exact complex scalars are
:class:`GaussianRational`. Any ``float`` or ``complex`` coordinate puts a
vector in float mode.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Sequence

FLOAT_TOL = 1e-12


class GaussianRational(NamedTuple):
    re: Fraction
    im: Fraction

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __str__(self) -> str:
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


class IrrationalModulus(ValueError):
    pass


def _rational_sqrt(q: Fraction) -> Fraction | None:
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def to_scalar(value, exact: bool = True):
    """Coerce a parsed number (int, str "p/q", float, [re, im] pair)."""
    if isinstance(value, (list, tuple)) and len(value) == 2:
        re, im = (to_scalar(v, exact) for v in value)
        if exact:
            if im == 0:
                return re
            return GaussianRational(Fraction(re), Fraction(im))
        return complex(re, im) if im != 0 else float(re)
    if isinstance(value, bool):
        raise TypeError("boolean is not a scalar")
    if isinstance(value, (int, Fraction, str)):
        q = Fraction(value)
        return q if exact else float(q)
    if isinstance(value, float):
        return Fraction(str(value)) if exact else value
    if isinstance(value, complex):
        if exact:
            return to_scalar([value.real, value.imag], True)
        return value
    if isinstance(value, GaussianRational):
        return value if exact else complex(value)
    raise TypeError(f"unsupported scalar {value!r}")


def as_vector(values: Sequence, exact: bool | None = None) -> tuple:
    """Normalize a coordinate sequence into a tuple of scalars.

    With ``exact=None`` the mode is inferred: any float/complex entry makes
    the whole vector float.
    """
    if exact is None:
        exact = all(isinstance(v, (Rational, GaussianRational, str)) or
                    (isinstance(v, (list, tuple)) and all(isinstance(u, (Rational, str)) for u in v))
                    for v in values)
    return tuple(to_scalar(v, exact) for v in values)


def is_exact_scalar(z) -> bool:
    return isinstance(z, (Rational, GaussianRational))


def is_exact(x: Sequence) -> bool:
    return all(is_exact_scalar(z) for z in x)


def is_real_scalar(z) -> bool:
    if isinstance(z, GaussianRational):
        return z.im == 0
    if isinstance(z, complex):
        return z.imag == 0
    return True


def modulus(z):
    """|z|, exact when possible; raises IrrationalModulus for e.g. 1+i."""
    if isinstance(z, GaussianRational):
        if z.im == 0:
            return abs(z.re)
        if z.re == 0:
            return abs(z.im)
        root = _rational_sqrt(z.re * z.re + z.im * z.im)
        if root is None:
            raise IrrationalModulus(f"|{z}| is irrational")
        return root
    if isinstance(z, Rational):
        return abs(Fraction(z))
    return abs(z)


def moduli(x: Sequence, exact: bool = True) -> tuple:
    """Coordinatewise moduli; exact if every modulus is rational, else floats."""
    if exact and is_exact(x):
        try:
            return tuple(modulus(z) for z in x)
        except IrrationalModulus:
            pass
    return tuple(abs(complex(z)) if isinstance(z, GaussianRational) else float(abs(z)) for z in x)


def to_complex(z) -> complex:
    return complex(z)


def mul(a, b):
    """Product that keeps GaussianRational exact."""
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        if not (is_exact_scalar(a) and is_exact_scalar(b)):
            return complex(a) * complex(b)
        ar, ai = (a.re, a.im) if isinstance(a, GaussianRational) else (Fraction(a), Fraction(0))
        br, bi = (b.re, b.im) if isinstance(b, GaussianRational) else (Fraction(b), Fraction(0))
        return _simplify(GaussianRational(ar * br - ai * bi, ar * bi + ai * br))
    return a * b


def add(a, b):
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        if not (is_exact_scalar(a) and is_exact_scalar(b)):
            return complex(a) + complex(b)
        ar, ai = (a.re, a.im) if isinstance(a, GaussianRational) else (Fraction(a), Fraction(0))
        br, bi = (b.re, b.im) if isinstance(b, GaussianRational) else (Fraction(b), Fraction(0))
        return _simplify(GaussianRational(ar + br, ai + bi))
    return a + b


def _simplify(z: GaussianRational):
    return z.re if z.im == 0 else z


def scalar_json(z) -> str | float | list:
    if isinstance(z, GaussianRational):
        return [str(z.re), str(z.im)]
    if isinstance(z, Rational):
        return str(Fraction(z))
    if isinstance(z, complex):
        return [z.real, z.imag]
    return float(z)


def number_json(z) -> dict:
    """Report field with an explicit exactness flag."""
    exact = is_exact_scalar(z)
    out = {"value": scalar_json(z), "exact": exact}
    if exact and not isinstance(z, GaussianRational):
        out["approx"] = float(z)
    return out


def vector_json(x: Sequence) -> dict:
    return {"coords": [scalar_json(z) for z in x], "exact": is_exact(x)}
