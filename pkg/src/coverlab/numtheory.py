"""Executable number-theoretic identities used by the case enumerations.

Everything is exact big-integer arithmetic; the identity checkers evaluate
their own applicability hypotheses instead of assuming them.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def prime_power_decompose(n: int) -> tuple[int, int] | None:
    """(p, e) with n = p^e, p prime, e >= 1; None otherwise."""
    if n < 2:
        return None
    for p in range(2, isqrt(n) + 1):
        if n % p == 0:  # smallest divisor, hence prime
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            return (p, e) if n == 1 else None
    return (n, 1)  # n itself prime


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class PPartDecomposition:
    l: int
    p: int
    p_part: int
    p_prime_part: int


def p_part(l: int, p: int) -> PPartDecomposition:
    """Largest power of p dividing l, plus the cofactor."""
    if l < 1:
        raise ValueError("l must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    part = 1
    while l % p == 0:
        l //= p
        part *= p
    return PPartDecomposition(l=l * part, p=p, p_part=part, p_prime_part=l)


@dataclass(frozen=True)
class LiftingCheck:
    q: int
    e: int
    m: int
    p: int
    applicable: bool
    lhs: int | None = None
    rhs: int | None = None
    equal: bool | None = None


def lifting_identity_check(q: int, e: int, m: int, p: int) -> LiftingCheck:
    """p-part lifting: (q^m - e^m)_p = (m)_p (q - e)_p when applicable.

    Applicable for odd p dividing q - e, or for p = 2 when 4 | q - e or m is
    odd.  Both sides are computed exactly.
    """
    if e not in (1, -1):
        raise ValueError("e must be +1 or -1")
    if q < 2 or m < 1:
        raise ValueError("need q >= 2, m >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 2 == 1:
        applicable = (q - e) % p == 0
    else:
        applicable = (q - e) % 4 == 0 or m % 2 == 1
    if not applicable:
        return LiftingCheck(q, e, m, p, False)
    lhs = p_part(q ** m - e ** m, p).p_part
    rhs = p_part(m, p).p_part * p_part(q - e, p).p_part
    return LiftingCheck(q, e, m, p, True, lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class GcdPowerCheck:
    q: int
    k: int
    m: int
    gcd_value: int
    expected: int
    equal: bool


def gcd_qpow(q: int, k: int, m: int) -> GcdPowerCheck:
    """gcd(q^k - 1, q^m - 1) = q^gcd(k, m) - 1, verified exactly."""
    if q < 2 or k < 1 or m < 1:
        raise ValueError("need q >= 2 and positive exponents")
    val = gcd(q ** k - 1, q ** m - 1)
    want = q ** gcd(k, m) - 1
    return GcdPowerCheck(q, k, m, val, want, val == want)


@dataclass(frozen=True)
class ZsigmondySolution:
    p: int
    m: int
    q: int
    n: int
    case: str  # 'nine', 'fermat', 'mersenne', or 'unclassified'


def prime_sieve(limit: int) -> bytearray:
    """sieve[i] == 1 iff i is prime, for 0 <= i <= limit."""
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return sieve


def zsigmondy_corollary_solve(bound: int) -> list[ZsigmondySolution]:
    """All prime solutions of p^m = q^n + 1 with p^m <= bound, classified.

    The three admissible shapes: (3^2 = 2^3 + 1), Fermat primes
    (q = 2, m = 1, n a power of two), and Mersenne primes (p = 2, n = 1,
    m prime).  Any solution outside them is tagged 'unclassified', which the
    property suite treats as a hard failure.
    """
    if bound < 4:
        raise ValueError("bound must be at least 4")
    sieve = prime_sieve(bound)
    out = []
    for q in range(2, bound):
        if not sieve[q]:
            continue
        n = 1
        while q ** n + 1 <= bound:
            s = q ** n + 1
            pp = prime_power_decompose(s)
            if pp is not None:
                p, m = pp
                if (q, p, n, m) == (2, 3, 3, 2):
                    case = "nine"
                elif q == 2 and m == 1 and _is_power_of_two(n):
                    case = "fermat"
                elif p == 2 and n == 1 and is_prime(m):
                    case = "mersenne"
                else:
                    case = "unclassified"
                out.append(ZsigmondySolution(p, m, q, n, case))
            n += 1
    out.sort(key=lambda s: (s.p ** s.m, s.q))
    return out


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def nagell_ljunggren_search(x_max: int, i_max: int) -> list[tuple[int, int, int]]:
    """All (x, i, y) with (x^i - 1)/(x - 1) = y^2, 2 <= x <= x_max, 3 <= i <= i_max."""
    if x_max < 2 or i_max < 3:
        raise ValueError("need x_max >= 2 and i_max >= 3")
    out = []
    for x in range(2, x_max + 1):
        for i in range(3, i_max + 1):
            s = (x ** i - 1) // (x - 1)
            y = isqrt(s)
            if y * y == s:
                out.append((x, i, y))
    return out


def has_coprime6_divisor(m: int) -> bool:
    """Whether m has a divisor >= 2 coprime to 6 (i.e. a prime factor >= 5)."""
    if m < 2:
        return False
    for p in (2, 3):
        while m % p == 0:
            m //= p
    return m > 1
