"""
Coefficient machinery for the Taylor expansions.

Laguerre values come from the three-term recurrence with binary rescaling,
so arguments like n*T with n in the hundreds never overflow. Bessel
polynomials, Stirling numbers and the M_k^(n) polynomials are summed in
exact integer/rational arithmetic and rounded once at the end.
"""
import math
import threading
from fractions import Fraction

from genlambert.core.exceptions import DomainError
from genlambert.core.logging import get_logger
from genlambert.schemas.polys import LN2, PolyValue

logger = get_logger(__name__)

RESCALE_HI = 2.0 ** 480
RESCALE_LO = 2.0 ** -480
STIRLING_MAX_K = 4096

_stirling_rows: list[tuple[int, ...]] = [(1,)]
_stirling_lock = threading.Lock()


def _normalize(v: float, exp2: int = 0) -> PolyValue:
    """Represent v * 2**exp2 with a mantissa in [1, 2)."""
    if v == 0.0:
        return PolyValue(value=0.0, log_scale=0.0)
    m, e = math.frexp(v)
    return PolyValue(value=2.0 * m, log_scale=(exp2 + e - 1) * LN2)


def fraction_to_poly_value(q: Fraction) -> PolyValue:
    """Round an exact rational once into log-scaled form."""
    if q == 0:
        return PolyValue(value=0.0, log_scale=0.0)
    num, den = abs(q.numerator), q.denominator
    shift = num.bit_length() - den.bit_length()
    if shift >= 0:
        m = num / (den << shift)
    else:
        m = (num << -shift) / den
    if m < 1.0:
        m *= 2.0
        shift -= 1
    if m >= 2.0:
        m /= 2.0
        shift += 1
    return PolyValue(value=-m if q < 0 else m, log_scale=shift * LN2)


def laguerre(n: int, alpha: int, x: float) -> PolyValue:
    """
    Generalized Laguerre polynomial L_n^(alpha)(x).

    Uses (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1},
    rescaling both carried values by a power of two whenever they leave
    [2^-480, 2^480].

    Args:
        n: Degree (n >= 0)
        alpha: Order parameter (alpha >= 0)
        x: Argument

    Returns:
        Log-scaled value
    """
    if n < 0 or alpha < 0:
        raise DomainError(message="Laguerre degree and order must be non-negative",
                          details={"n": n, "alpha": alpha})
    if n == 0:
        return _normalize(1.0)

    prev, cur = 1.0, 1.0 + alpha - x
    exp2 = 0
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
        biggest = max(abs(prev), abs(cur))
        if biggest > RESCALE_HI or 0.0 < biggest < RESCALE_LO:
            _, e = math.frexp(biggest)
            prev = math.ldexp(prev, -e)
            cur = math.ldexp(cur, -e)
            exp2 += e
    return _normalize(cur, exp2)


def laguerre_deriv(n: int, x: float) -> PolyValue:
    """
    Derivative of the Laguerre polynomial L_n at x, via L_n' = -L_{n-1}^(1).

    Raises:
        DomainError: If n < 1
    """
    if n < 1:
        raise DomainError(message="laguerre_deriv needs n >= 1", details={"n": n})
    return -laguerre(n - 1, 1, x)


def bessel_poly(n: int, z: float) -> PolyValue:
    """
    Bessel polynomial B_n(z) = sum_k (n+k)! / (k! (n-k)!) (z/2)^k.

    The sum is formed exactly over the rationals (z is a binary fraction)
    and rounded once, so alternating terms cancel without loss.
    """
    if n < 0:
        raise DomainError(message="Bessel polynomial degree must be non-negative", details={"n": n})
    half_z = Fraction(z) / 2
    total = Fraction(0)
    # Horner from the top coefficient down
    for k in range(n, -1, -1):
        coeff = math.factorial(n + k) // (math.factorial(k) * math.factorial(n - k))
        total = total * half_z + coeff
    return fraction_to_poly_value(total)


def _extend_stirling_rows(k: int) -> None:
    with _stirling_lock:
        while len(_stirling_rows) <= k:
            prev = _stirling_rows[-1]
            size = len(prev)
            row = [0] * (size + 1)
            for i in range(1, size + 1):
                row[i] = i * (prev[i] if i < size else 0) + prev[i - 1]
            _stirling_rows.append(tuple(row))


def stirling2(k: int, i: int) -> int:
    """
    Stirling number of the second kind S(k, i).

    Rows are built with S(k, i) = i S(k-1, i) + S(k-1, i-1) and cached.

    Raises:
        DomainError: If i > k, either index is negative, or k exceeds STIRLING_MAX_K
    """
    if k < 0 or i < 0 or i > k:
        raise DomainError(message="stirling2 needs 0 <= i <= k", details={"k": k, "i": i})
    if k > STIRLING_MAX_K:
        raise DomainError(
            message=f"stirling2 is limited to k <= {STIRLING_MAX_K}",
            details={"k": k}
        )
    if len(_stirling_rows) <= k:
        _extend_stirling_rows(k)
    return _stirling_rows[k][i]


def rising_factorial(n: int, i: int) -> int:
    """Rising factorial n (n+1) ... (n+i-1); 1 when i = 0."""
    if i < 0:
        raise DomainError(message="rising_factorial needs i >= 0", details={"i": i})
    return math.prod(range(n, n + i))


def m_poly_exact(k: int, n: int, y: Fraction) -> Fraction:
    """
    M_k^(n)(y) = sum_{i=1}^{k} n^(rising i) S(k, i) (-y)^i, exactly.

    Raises:
        DomainError: If k < 1 or n < 1
    """
    if k < 1 or n < 1:
        raise DomainError(message="m_poly needs k >= 1 and n >= 1", details={"k": k, "n": n})
    y = Fraction(y)
    # sum over a common denominator q^k, reduced once at the end
    p, q = -y.numerator, y.denominator
    total = 0
    p_power, rising = 1, 1
    for i in range(1, k + 1):
        p_power *= p
        rising *= n + i - 1
        total += rising * stirling2(k, i) * p_power * q ** (k - i)
    return Fraction(total, q ** k)


def m_poly(k: int, n: int, y: float) -> float:
    """
    Float value of M_k^(n)(y), saturating to +-inf outside double range.
    """
    exact = m_poly_exact(k, n, Fraction(y))
    try:
        return float(exact)
    except OverflowError:
        logger.warning(f"M_{k}^({n})({y}) overflows double precision")
        return -math.inf if exact < 0 else math.inf
