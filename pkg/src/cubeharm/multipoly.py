"""Sparse multivariate polynomials over exact rationals.

Terms live in a dict keyed by exponent tuples.  Nothing is stored for a
zero coefficient, and serialization sorts terms in graded lexicographic
order so repeated runs emit identical bytes.
"""

from fractions import Fraction

__all__ = ["MultiPoly", "grlex_key"]


def grlex_key(exps):
    """Graded-lex sort key: total degree first, then the exponent tuple."""
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError("exponent vector length mismatch")
                c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, index):
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {dict(self.canonical_items())!r})"

    def total_degree(self):
        """Largest term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def canonical_items(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            if self.nvars != other.nvars:
                raise ValueError("variable count mismatch")
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return MultiPoly(self.nvars, out)
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def partial(self, index):
        """Partial derivative with respect to variable `index`."""
        out = {}
        for exps, c in self.terms.items():
            e = exps[index]
            if not e:
                continue
            key = exps[:index] + (e - 1,) + exps[index + 1:]
            out[key] = out.get(key, Fraction(0)) + c * e
        return MultiPoly(self.nvars, out)

    def partial_power(self, orders):
        """Apply the mixed derivative with the given order per variable."""
        if len(orders) != self.nvars:
            raise ValueError("order vector length mismatch")
        result = self
        for index, reps in enumerate(orders):
            for _ in range(reps):
                result = result.partial(index)
                if result.is_zero():
                    return result
        return result

    def signed_permute(self, signs=None, perm=None):
        """Substitute x_i -> signs[i] * x_{perm[i]} (identity when omitted)."""
        if signs is None:
            signs = (1,) * self.nvars
        if perm is None:
            perm = tuple(range(self.nvars))
        out = {}
        for exps, c in self.terms.items():
            sign = 1
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                if e:
                    new[perm[i]] += e
                    if signs[i] < 0 and e % 2:
                        sign = -sign
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + sign * c
        return MultiPoly(self.nvars, out)

    def evaluate(self, point):
        """Evaluate at a point; works for Fractions, floats and complexes."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        total = 0
        for exps, c in self.terms.items():
            term = c if isinstance(point[0], Fraction) else complex(c)
            for value, e in zip(point, exps):
                if e:
                    term = term * value ** e
            total = total + term
        return total

    def extended(self, nvars):
        """Embed into a ring with extra trailing variables."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink variable count")
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def to_obj(self):
        """Canonical serialization: [[exponents, "p/q"], ...] in graded-lex order."""
        return [[list(exps), str(c)] for exps, c in self.canonical_items()]

    @classmethod
    def from_obj(cls, nvars, obj):
        return cls(nvars, {tuple(e): Fraction(s) for e, s in obj})

    def pretty(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for exps, c in self.canonical_items():
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
