"""Exact linear combinations over an arbitrary hashable basis.

Every symbolic object in this package (word polynomials, circle-tree
polynomials, tensors) is a finite linear combination with integer or
Fraction coefficients.  `LinComb` is a dict from basis element to
coefficient that never stores a zero, so two combinations are equal as
dicts exactly when they are equal as algebraic elements.
"""

from __future__ import annotations

from fractions import Fraction


class LinComb(dict):
    """Map basis element -> nonzero exact coefficient (int or Fraction)."""

    __slots__ = ()

    @classmethod
    def single(cls, key, coeff=1) -> "LinComb":
        out = cls()
        if coeff:
            out[key] = coeff
        return out

    def add_term(self, key, coeff) -> None:
        """In-place `self += coeff * key`, dropping the entry if it cancels."""
        if not coeff:
            return
        new = self.get(key, 0) + coeff
        if new:
            self[key] = new
        else:
            del self[key]

    def add_comb(self, other, scale=1) -> None:
        """In-place `self += scale * other`."""
        if not scale:
            return
        for key, coeff in other.items():
            self.add_term(key, scale * coeff)

    def __add__(self, other: "LinComb") -> "LinComb":
        out = LinComb(self)
        out.add_comb(other)
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        out = LinComb(self)
        out.add_comb(other, -1)
        return out

    def __neg__(self) -> "LinComb":
        return LinComb({k: -v for k, v in self.items()})

    def scaled(self, factor) -> "LinComb":
        if not factor:
            return LinComb()
        return LinComb({k: factor * v for k, v in self.items()})

    def __rmul__(self, factor) -> "LinComb":
        return self.scaled(factor)

    def map_basis(self, fn) -> "LinComb":
        """Apply `fn` to every basis element, combining collisions."""
        out = LinComb()
        for key, coeff in self.items():
            out.add_term(fn(key), coeff)
        return out

    def coeff_mass(self):
        """Sum of absolute values of the coefficients."""
        return sum(abs(v) for v in self.values())


def as_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def format_rational(value) -> str:
    """`-3/2` style; integers print without a denominator."""
    frac = as_fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
