"""Leading skeleton-invariant coefficients by every available route.

The coefficient c(n, m, k) multiplies the top elementary symmetric
polynomial of the squared variables in the degree-2m skeleton invariant.
Routes implemented here:

  matrix      signed factorial-ratio sum over staircase matrices
  partition   the same sum collapsed to ordered partitions
  young       generating polynomial assembled over Young diagrams
  generating  generating polynomial from the Bernoulli recursion
  recursion   table filled by the coefficient recursion, seeded by the
              closed forms at extreme skeleton dimensions
  oracle      symbolic expansion in the elementary basis (small n)
  extremal    closed forms alone, where applicable

All routes return identical exact rationals; tests enforce this cell by
cell.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import generating
from .bernoulli import scaled_bernoulli
from .combinat import compositions, quad_matrices_even, young_diagrams
from .invariants import expand_in_elementary_basis
from .unipoly import ONE, T, UniPoly

__all__ = [
    "CoefficientRecord",
    "partition_sign_weight",
    "matrix_weight",
    "young_weight",
    "coeff_by_matrix_sum",
    "coeff_by_partition_sum",
    "young_generating_poly",
    "coeff_by_young_sum",
    "coeff_by_generating",
    "coeff_by_expansion",
    "closed_form",
    "coeff_by_recursion",
    "recursion_table",
    "ROUTES",
    "SYMBOLIC_MAX_N",
    "coefficient_record",
    "route_records",
]

SYMBOLIC_MAX_N = 4  # practical bound for the symbolic oracle


@dataclass(frozen=True)
class CoefficientRecord:
    n: int
    m: int
    k: int
    value: Fraction
    route: str


def _validate(n, m, k):
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")


def partition_sign_weight(n, m, nu):
    """Closed form m * (-1)**(l-1) * (l-1)! * (n-l)! with l positive parts.

    For n >= m this equals the signed root-of-unity permutation sum
    attached to an ordered partition nu of m into n nonnegative parts;
    the coefficient sums only ever evaluate it there.
    """
    if len(nu) != n:
        raise ValueError("partition length must equal n")
    if sum(nu) != m or any(v < 0 for v in nu):
        raise ValueError("expected nonnegative entries summing to m")
    if m < 1:
        raise ValueError("need m >= 1")
    ell = sum(1 for v in nu if v)
    return Fraction(m * (-1) ** (ell - 1) * factorial(ell - 1) * factorial(n - ell))


def matrix_weight(n, k, nu):
    """Weighted count of staircase matrices with column sums nu.

    Closed form (sum(nu)+k)! / (prod_{j<=k}(nu_1+...+nu_j+j) * prod nu_j!).
    """
    if len(nu) != n:
        raise ValueError("column-sum vector length must equal n")
    if any(v < 0 for v in nu):
        raise ValueError("column sums must be nonnegative")
    value = Fraction(factorial(sum(nu) + k))
    for j in range(1, k + 1):
        value /= sum(nu[:j]) + j
    for v in nu:
        value /= factorial(v)
    return value


def young_weight(k, mu):
    """Closed form 1 / (prod s_j! * prod ((2j+1)!)**s_j) over part multiplicities.

    The multiplicities include the zero parts relative to k ambient parts.
    """
    if mu.length > k:
        raise ValueError("diagram has more than k parts")
    value = Fraction(1)
    for part, count in mu.multiplicities(nparts=k).items():
        value /= factorial(count)
        value /= factorial(2 * part + 1) ** count
    return value


def _factorial_ratio(mat):
    ratio = Fraction(1)
    for s in mat.row_sums:
        ratio *= factorial(s)
    for row in mat.entries:
        for e in row:
            if e > 1:
                ratio /= factorial(e)
    return ratio


def coeff_by_matrix_sum(n, m, k):
    """Signed sum over staircase matrices with even column sums."""
    _validate(n, m, k)
    total = Fraction(0)
    for mat in quad_matrices_even(n, k, 2 * m):
        ell = mat.nontrivial_columns
        total += (
            (-1) ** (ell - 1)
            * factorial(ell - 1)
            * factorial(n - ell)
            * _factorial_ratio(mat)
        )
    return Fraction((-1) ** (m - 1) * m) * total / factorial(n)


def coeff_by_partition_sum(n, m, k):
    """The matrix sum collapsed along column-sum fibers to ordered partitions."""
    _validate(n, m, k)
    total = Fraction(0)
    for nu in compositions(m, n):
        ell = sum(1 for v in nu if v)
        vbar = Fraction(1)
        for j in range(1, k + 1):
            vbar /= 2 * sum(nu[:j]) + j
        for v in nu:
            vbar /= factorial(2 * v)
        total += (-1) ** (ell - 1) * factorial(ell - 1) * factorial(n - ell) * vbar
    return Fraction((-1) ** (m - 1) * m * factorial(2 * m + k)) * total / factorial(n)


@lru_cache(maxsize=None)
def young_generating_poly(n, m):
    """Generating polynomial assembled from Young diagrams of weight m.

    Each diagram with part multiplicities r_1..r_m contributes a signed
    multinomial times (t+1)**(n - length) times the product over parts j
    of (((2j+1) t + 1)/(2j+1)!)**r_j; the lift (t+1)**(n-length) is what
    makes the result a polynomial.
    """
    if not n >= m >= 1:
        raise ValueError("need n >= m >= 1")
    one_plus_t = ONE + T
    total = UniPoly()
    for lam in young_diagrams(m, m):
        mult = lam.multiplicities()
        ell = lam.length
        weight = Fraction((-1) ** (ell - 1) * factorial(ell - 1))
        term = one_plus_t ** (n - ell)
        for part, count in mult.items():
            weight /= factorial(count)
            factor = UniPoly((Fraction(1), Fraction(2 * part + 1))) * Fraction(
                1, factorial(2 * part + 1)
            )
            term = term * factor ** count
        total = total + weight * term
    return Fraction((-1) ** (m - 1) * m) * total


def coeff_by_young_sum(n, m, k):
    _validate(n, m, k)
    return generating.coefficient_from_generating_poly(
        young_generating_poly(n, m), n, m, k
    )


def coeff_by_generating(n, m, k):
    """Read the coefficient off the Bernoulli-recursion generating polynomial."""
    _validate(n, m, k)
    return generating.coefficient_from_generating_poly(
        generating.lifted_generating_poly(n, m), n, m, k
    )


def coeff_by_expansion(n, m, k):
    """Definition-level value from the symbolic elementary-basis expansion."""
    _validate(n, m, k)
    if n > SYMBOLIC_MAX_N:
        raise ValueError(f"symbolic expansion limited to n <= {SYMBOLIC_MAX_N}")
    return expand_in_elementary_basis(n, m, k).leading


def closed_form(n, m, k):
    """Closed-form value at the extreme skeleton dimensions, else None.

    Applicable at k in {0, 1, n-3, n-2, n-1, n} within the stated ranges.
    When several forms cover the same k they must agree; disagreement is
    an internal error.
    """
    _validate(n, m, k)
    values = []
    if k == 0:
        values.append(factorial(2 * m) * (2 ** (2 * m) - 1) * scaled_bernoulli(m))
    if k == 1:
        values.append(
            factorial(2 * m + 1)
            * (
                (2 ** (2 * m) - 1) * scaled_bernoulli(m)
                - Fraction(2 * m, n) * (2 ** (2 * (m + 1)) - 1) * scaled_bernoulli(m + 1)
            )
        )
    if k in (n - 1, n) or (k == n - 2 and m >= 2):
        values.append(Fraction(factorial(n + 2 * m), factorial(n)) * scaled_bernoulli(m))
    if k == n - 3 and n >= 3 and m >= 2:
        values.append(
            Fraction(
                factorial(n + 2 * m) * scaled_bernoulli(m)
                - 4 * m * factorial(n + 2 * m - 3) * scaled_bernoulli(m - 1),
                factorial(n),
            )
        )
    if not values:
        return None
    if any(v != values[0] for v in values[1:]):
        raise RuntimeError(f"closed forms disagree at ({n},{m},{k}): {values}")
    return values[0]


def _c63_factor(n, m, k):
    return Fraction((n - k) * (n - k - 1) * m, n * (m - 1))


@lru_cache(maxsize=None)
def _cell(n, m, k):
    """Coefficient from closed forms plus the recursion, descending in k.

    Closed forms cover k <= 1 and k >= n-3; the remaining cells follow by
    rearranging the recursion at (n+1, m+1): the relation for skeleton
    dimension k-1 there expresses this cell through already-known ones.
    The k index strictly decreases, so the descent terminates at the
    closed forms.
    """
    value = closed_form(n, m, k)
    if value is not None:
        return value
    q = k - 1
    big_n, big_m = n + 1, m + 1
    factor = _c63_factor(big_n, big_m, q)
    delta = _cell(big_n, big_m, q) - _cell(big_n, big_m, q - 1)
    return ((2 * big_m + q - 1) * _cell(n, m, q) - delta / factor) / (q + 1)


@lru_cache(maxsize=None)
def recursion_table(n_max, m_max=None):
    """Fill the whole coefficient grid through the recursion.

    Rows with m >= 2 are swept upward in k from the k = 0 closed form,
    consuming the previously filled (n-1, m-1) column; m = 1 rows come
    from the closed forms where those apply and from the k-descent
    otherwise.  Cells covered both by the sweep and by a closed form are
    cross-checked; a mismatch is an internal error.
    """
    if m_max is None:
        m_max = n_max
    if not 1 <= m_max <= n_max:
        raise ValueError("need 1 <= m_max <= n_max")
    table = {}
    for n in range(1, n_max + 1):
        for m in range(1, min(n, m_max) + 1):
            row = {}
            for k in (0, n - 1, n):
                row[k] = closed_form(n, m, k)
            if m == 1:
                for k in range(1, n - 1):
                    row[k] = _cell(n, 1, k)
            else:
                for k in range(1, n - 1):
                    prev = table[(n - 1, m - 1)]
                    row[k] = row[k - 1] + _c63_factor(n, m, k) * (
                        (2 * m + k - 1) * prev[k] - (k + 1) * prev[k + 1]
                    )
                    check = closed_form(n, m, k)
                    if check is not None and check != row[k]:
                        raise RuntimeError(
                            f"recursion sweep disagrees with closed form at ({n},{m},{k})"
                        )
            table[(n, m)] = row
    return {
        (n, m, k): value
        for (n, m), row in table.items()
        for k, value in sorted(row.items())
    }


def coeff_by_recursion(n, m, k):
    _validate(n, m, k)
    return recursion_table(n)[(n, m, k)]


ROUTES = {
    "matrix": coeff_by_matrix_sum,
    "partition": coeff_by_partition_sum,
    "young": coeff_by_young_sum,
    "generating": coeff_by_generating,
    "recursion": coeff_by_recursion,
    "oracle": coeff_by_expansion,
}


def coefficient_record(n, m, k, route):
    """One computed coefficient tagged with its route."""
    if route == "extremal":
        value = closed_form(n, m, k)
        if value is None:
            raise ValueError(f"no closed form applies at ({n},{m},{k})")
    else:
        try:
            func = ROUTES[route]
        except KeyError:
            raise ValueError(f"unknown route {route!r}") from None
        value = func(n, m, k)
    return CoefficientRecord(n, m, k, value, route)


def route_records(n, m, k, include_oracle=None):
    """Records for every applicable route at one grid cell.

    The symbolic oracle is included up to its practical bound by default;
    the closed form joins whenever it applies.
    """
    _validate(n, m, k)
    if include_oracle is None:
        include_oracle = n <= 3
    names = ["matrix", "partition", "young", "generating", "recursion"]
    if include_oracle:
        names.append("oracle")
    records = [coefficient_record(n, m, k, name) for name in names]
    if closed_form(n, m, k) is not None:
        records.append(coefficient_record(n, m, k, "extremal"))
    return records
