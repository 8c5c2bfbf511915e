"""Dense univariate polynomials with exact rational coefficients.

Coefficients are kept lowest degree first with trailing zeros trimmed,
so equality is plain tuple comparison.  The zero polynomial has an empty
coefficient tuple and degree -1.
"""

from fractions import Fraction

__all__ = ["UniPoly", "T", "ONE"]


def _coerce(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return None


class UniPoly:
    """Immutable polynomial in one formal variable over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, power):
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self == UniPoly.constant(c)

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            c = _coerce(other)
            if c is None:
                return NotImplemented
            other = UniPoly.constant(c)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, UniPoly):
            return self + (-other)
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self + UniPoly.constant(-c)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return UniPoly(out)
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return UniPoly(tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UniPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self):
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def reciprocal(self, length=None):
        """Coefficient reversal: t**length * p(1/t); length defaults to degree."""
        if length is None:
            length = max(self.degree, 0)
        if length < self.degree:
            raise ValueError("reversal length below degree")
        padded = list(self.coeffs) + [Fraction(0)] * (length + 1 - len(self.coeffs))
        return UniPoly(tuple(reversed(padded)))

    def to_strings(self):
        """Serialize as a list of "p/q" strings, lowest degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items):
        return cls(tuple(Fraction(s) for s in items))

    def pretty(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if power == 0:
                body = str(mag)
            else:
                tpow = var if power == 1 else f"{var}^{power}"
                body = tpow if mag == 1 else f"{mag}*{tpow}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


T = UniPoly((0, 1))
ONE = UniPoly((1,))
