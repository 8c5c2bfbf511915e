"""Generating polynomials packaging the skeleton coefficients over k.

For fixed degree parameters the leading coefficients c^(k) across all
skeleton dimensions k assemble into one polynomial in t.  The family is
generated by a Bernoulli-number recursion; coefficient reversal and the
substitution t -> (1-t)/t give two companion forms, the latter satisfying
a differential-difference equation that provides yet another production
route.  `identity_report` verifies the defining series identities with
polynomial coefficients, exactly, up to a truncation order.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bernoulli import coth_series, scaled_bernoulli, tanh_series
from .series import POLYNOMIALS, TruncatedSeries, series_log
from .unipoly import ONE, T, UniPoly

__all__ = [
    "generating_poly",
    "lifted_generating_poly",
    "generating_poly_from_provider",
    "coefficient_from_generating_poly",
    "reversed_generating_poly",
    "bernstein_transform",
    "bernstein_from_ode",
    "GeneratingFamily",
    "IdentityCheck",
    "IdentityReport",
    "identity_report",
]

ONE_PLUS_T = ONE + T


@lru_cache(maxsize=None)
def generating_poly(m):
    """Degree-m member of the base family, via the Bernoulli recursion.

    The recursion is
        P_m = b_m (t+1)**(m-1) + 2 t * sum_{i<m} b_{m-i} (t+1)**(m-i-1) P_i
    with P_1 = t/2 + 1/6 and b_i the positive scaled Bernoulli numbers,
    so every coefficient is positive and the degree is exactly m.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if m == 1:
        return UniPoly((Fraction(1, 6), Fraction(1, 2)))
    poly = scaled_bernoulli(m) * ONE_PLUS_T ** (m - 1)
    acc = UniPoly()
    for i in range(1, m):
        acc = acc + scaled_bernoulli(m - i) * ONE_PLUS_T ** (m - i - 1) * generating_poly(i)
    return poly + 2 * T * acc


def lifted_generating_poly(n, m):
    """(t+1)**(n-m) times the base polynomial; defined for n >= m >= 1."""
    if not n >= m >= 1:
        raise ValueError("need n >= m >= 1")
    return ONE_PLUS_T ** (n - m) * generating_poly(m)


def generating_poly_from_provider(n, m, provider):
    """Assemble the degree-n polynomial from leading coefficients.

    `provider(n, m, k)` must return the exact coefficient for skeleton
    dimension k; the term for k carries weight n!/((n-k)! (2m+k)!) at
    power t**(n-k).
    """
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        value = provider(n, m, k)
        coeffs[n - k] = Fraction(factorial(n)) * value / (factorial(n - k) * factorial(2 * m + k))
    return UniPoly(coeffs)


def coefficient_from_generating_poly(poly, n, m, k):
    """Invert the assembly: read the skeleton-k coefficient off t**(n-k)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return poly[n - k] * factorial(n - k) * factorial(2 * m + k) / factorial(n)


def reversed_generating_poly(n, m):
    """Coefficient reversal t**n * P(1/t) of the lifted polynomial."""
    return lifted_generating_poly(n, m).reciprocal(n)


def bernstein_transform(n, m):
    """The substitution t**n * P((1-t)/t): sum_j p_j (1-t)**j t**(n-j).

    The result depends only on m, not on n.
    """
    poly = lifted_generating_poly(n, m)
    one_minus_t = ONE - T
    total = UniPoly()
    for j, c in enumerate(poly.coeffs):
        if c:
            total = total + c * one_minus_t ** j * T ** (n - j)
    return total


def bernstein_from_ode(m, prev):
    """Solve the differential-difference equation for the next member.

    Coefficient matching in 2*F + (t/m)*F' + ((1-t)**2/(m-1))*prev' = 0
    determines every coefficient of F, since 2 + j/m > 0.  The constant
    term must come out as (2**(2m)-1)*b_m; a mismatch means a bug, so it
    is a hard error rather than a report.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if prev.degree != m - 1:
        raise ValueError("previous member must have degree m - 1")
    f = [prev[j] for j in range(max(prev.degree + 1, 0))]

    def fc(j):
        return f[j] if 0 <= j < len(f) else Fraction(0)

    coeffs = []
    for j in range(m + 1):
        rhs = -(Fraction(1, m - 1)) * ((j + 1) * fc(j + 1) - 2 * j * fc(j) + (j - 1) * fc(j - 1))
        coeffs.append(rhs / (2 + Fraction(j, m)))
    result = UniPoly(coeffs)
    expected0 = (2 ** (2 * m) - 1) * scaled_bernoulli(m)
    if result[0] != expected0:
        raise RuntimeError(
            f"differential-difference solution has constant term {result[0]},"
            f" expected {expected0}"
        )
    return result


@dataclass(frozen=True)
class GeneratingFamily:
    """The three companion polynomials for one degree parameter."""

    m: int
    direct: UniPoly      # base polynomial, degree m, positive coefficients
    reflected: UniPoly   # coefficient reversal t**m * direct(1/t)
    bernstein: UniPoly   # t**m * direct((1-t)/t)

    @classmethod
    def for_degree(cls, m):
        return cls(
            m=m,
            direct=generating_poly(m),
            reflected=reversed_generating_poly(m, m),
            bernstein=bernstein_transform(m, m),
        )


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityReport:
    order: int
    checks: tuple

    @property
    def all_ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]


def _poly_series(coeffs, order):
    return TruncatedSeries(coeffs, order, POLYNOMIALS)


def _first_mismatch(a, b):
    for j, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            diff = x - y
            return f"first mismatch at z^{j}: difference {diff.pretty()}"
    return ""


def _lift(series, order):
    return _poly_series([UniPoly.constant(c) for c in series.coeffs[: order + 1]], order)


def _check_cleared_product(order):
    """Denominator-cleared form of the defining series identity.

    With M = order/2, both sides of
        [sum_m (-1)**(m-1) P_m (t+1)**(M-m) z**(2m)] * 2 (t z coth z + 1)
        = (z coth z + t z**2 - 1) * (t+1)**M
    are polynomials in t at every z power; they must agree exactly.
    """
    M = order // 2
    zcoth = _lift(coth_series(order), order)
    lhs_sum = [UniPoly()] * (order + 1)
    for m in range(1, M + 1):
        lhs_sum[2 * m] = (-1) ** (m - 1) * generating_poly(m) * ONE_PLUS_T ** (M - m)
    two_t_zcoth_plus_2 = zcoth.scale(2 * T) + _poly_series(
        [UniPoly.constant(2)], order
    )
    lhs = _poly_series(lhs_sum, order) * two_t_zcoth_plus_2

    rhs_core = zcoth + _poly_series([-ONE, UniPoly(), T], order)
    rhs = rhs_core.scale(ONE_PLUS_T ** M)
    ok = lhs == rhs
    return IdentityCheck("cleared-product", ok, "" if ok else _first_mismatch(lhs, rhs))


def _log_argument(order):
    """(1-t) cosh z + t sinh z / z as a series with polynomial coefficients."""
    coeffs = [UniPoly()] * (order + 1)
    for j in range(order // 2 + 1):
        cosh_c = Fraction(1, factorial(2 * j))
        sinh_c = Fraction(1, factorial(2 * j + 1))
        coeffs[2 * j] = (ONE - T) * cosh_c + T * sinh_c
    return _poly_series(coeffs, order)


def _check_log_series(order):
    """Logarithm of the mixed cosh/sinh series reproduces the Bernstein family."""
    M = order // 2
    logs = series_log(_log_argument(order))
    for m in range(1, M + 1):
        expected = (-1) ** (m - 1) * Fraction(1, m) * bernstein_transform(m, m)
        actual = logs.coefficient(2 * m)
        if actual != expected:
            diff = actual - expected
            return IdentityCheck(
                "log-series", False, f"z^{2 * m} coefficient differs by {diff.pretty()}"
            )
    return IdentityCheck("log-series", True)


def _check_pde(order):
    """The logarithm satisfies z F_z + (t - (1-t)^2 z^2) F_t = (1-t) z^2."""
    logs = series_log(_log_argument(order))
    phi = [logs.coefficient(2 * j) for j in range(order // 2 + 1)]
    one_minus_t_sq = (ONE - T) ** 2
    for j in range(len(phi)):
        residual = 2 * j * phi[j] + T * phi[j].derivative()
        if j >= 1:
            residual = residual - one_minus_t_sq * phi[j - 1].derivative()
        if j == 1:
            residual = residual - (ONE - T)
        if residual:
            return IdentityCheck(
                "transport-pde", False, f"z^{2 * j} residual {residual.pretty()}"
            )
    return IdentityCheck("transport-pde", True)


def _check_reflected_tanh(order):
    """Constant terms of the reflected family match (z/2) tanh z."""
    M = order // 2
    tanh = tanh_series(order)
    for m in range(1, M + 1):
        lhs = (-1) ** (m - 1) * reversed_generating_poly(m, m)[0]
        rhs = tanh.coefficient(2 * m - 1) / 2
        if lhs != rhs:
            return IdentityCheck(
                "reflected-tanh", False, f"z^{2 * m} coefficient {lhs} != {rhs}"
            )
    return IdentityCheck("reflected-tanh", True)


def identity_report(order):
    """Run the four exact series checks at the given even truncation order."""
    if order < 4 or order % 2:
        raise ValueError("order must be an even integer >= 4")
    checks = (
        _check_cleared_product(order),
        _check_log_series(order),
        _check_pde(order),
        _check_reflected_tanh(order),
    )
    return IdentityReport(order, checks)
