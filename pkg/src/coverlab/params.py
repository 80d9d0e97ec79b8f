"""Parameter calculus for antipodal (n, r, mu)-covers of complete graphs.

An (n, r, mu)-cover has four distinct eigenvalues n-1 > theta > -1 > tau,
where theta and tau are the roots of x^2 - (lambda - mu)x - (n - 1) = 0 and
lambda = n - (r-1)mu - 2.  Everything here is exact: eigenvalues are stored
as quadratic surds and multiplicities as exact field elements, so feasibility
(integrality and positivity of multiplicities) is decided without rounding.

The two extremal families enumerated here are the even-fibre family
(n = (t^2-2)(t^2-1)/2, lines meeting the real absolute bound) and the
odd-fibre family (n = (t^2-1)^2, lines meeting the complex absolute bound,
i.e. SIC-POVM-sized systems), together with their known sporadic members.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import QuadExt, rational_json


class ParameterError(ValueError):
    """Raised for parameter triples outside the admissible domain."""


@dataclass(frozen=True)
class CoverParams:
    """The quadruple (n, r, mu, lambda) with its exact spectrum."""

    n: int
    r: int
    mu: int
    lam: int
    theta: QuadExt
    tau: QuadExt
    m_theta: QuadExt
    m_tau: QuadExt

    @property
    def v(self) -> int:
        return self.n * self.r

    @property
    def k(self) -> int:
        """Degree of the cover (one matched neighbour per other fibre)."""
        return self.n - 1

    @property
    def multiplicities_integral(self) -> bool:
        return (self.m_theta.is_integer and self.m_tau.is_integer
                and self.m_theta > 0 and self.m_tau > 0)

    def to_json(self) -> dict:
        return {
            "n": self.n, "r": self.r, "mu": self.mu, "lambda": self.lam,
            "theta": self.theta.to_json(), "tau": self.tau.to_json(),
            "m_theta": rational_json(self.m_theta),
            "m_tau": rational_json(self.m_tau),
            "v": self.v,
        }


@dataclass(frozen=True)
class FamilyBParams:
    """Odd-fibre extremal family member, indexed by t = -tau."""

    t: int
    r: int
    params: CoverParams
    special: bool = False  # the (9, 3, 3) exception, not an instance of the t-formula


def derive_params(n: int, r: int, mu: int) -> CoverParams:
    """Populate the full exact parameter set from the triple (n, r, mu)."""
    if n < 3:
        raise ParameterError(f"n must be at least 3, got {n}")
    if r < 2:
        raise ParameterError(f"r must be at least 2, got {r}")
    if mu < 1:
        raise ParameterError(f"mu must be at least 1, got {mu}")
    lam = n - (r - 1) * mu - 2
    if lam < 0:
        raise ParameterError(f"lambda = n-(r-1)mu-2 = {lam} is negative")

    disc = (lam - mu) ** 2 + 4 * (n - 1)
    if disc <= 0:  # cannot happen for lam >= 0, asserted defensively
        raise ParameterError("eigenvalues are not real and distinct")
    root = QuadExt.sqrt(disc)
    half = Fraction(1, 2)
    theta = (QuadExt(lam - mu) + root) * half
    tau = (QuadExt(lam - mu) - root) * half

    # m_theta = -tau (r-1) n / (theta - tau), m_tau = theta (r-1) n / (theta - tau)
    denom = theta - tau
    m_theta = (-tau) * ((r - 1) * n) / denom
    m_tau = theta * ((r - 1) * n) / denom
    return CoverParams(n, r, mu, lam, theta, tau, m_theta, m_tau)


def family_B(t: int, r: int) -> FamilyBParams:
    """Odd-fibre family member (n, r, mu) = ((t^2-1)^2, r, (t-1)^2(t^2+t-1)/r).

    The pair (t, r) = (2, 3) is the genuine exception with (n, r, mu) =
    (9, 3, 3); it does not satisfy the t-parametrisation (which would give
    mu = 5/3) and is returned tagged as special.
    """
    if t < 2:
        raise ParameterError(f"t must be at least 2, got {t}")
    if r < 2:
        raise ParameterError(f"r must be at least 2, got {r}")
    if (t, r) == (2, 3):
        return FamilyBParams(t=2, r=3, params=derive_params(9, 3, 3), special=True)
    if (t - 1) % r != 0:
        raise ParameterError(f"r = {r} does not divide t-1 = {t - 1}")
    n = (t * t - 1) ** 2
    mu_num = (t - 1) ** 2 * (t * t + t - 1)
    mu = mu_num // r
    p = derive_params(n, r, mu)
    # sanity: the closed forms for this family
    assert p.tau == -t and p.theta == t * (t * t - 2)
    assert p.m_theta == (t * t - 1) * (r - 1)
    assert p.m_tau == (t * t - 2) * (t * t - 1) * (r - 1)
    return FamilyBParams(t=t, r=r, params=p)


def family_A(t, r: int, sign: int = +1) -> CoverParams:
    """Even-fibre family member with n = (t^2-2)(t^2-1)/2.

    For r >= 4 only the branch mu = (t-1)^3 (t+2) / (2r) exists and t must be
    an integer >= 3.  For r = 2 both branches are admitted and t may also be
    sqrt(5) (pass t = QuadExt.sqrt(5)); sign = +1 selects
    mu = (t-1)^3 (t+2)/(2r), sign = -1 the companion (t+1)^3 (t-2)/(2r).
    """
    if sign not in (+1, -1):
        raise ParameterError("sign must be +1 or -1")
    tq = t if isinstance(t, QuadExt) else QuadExt(t)
    if r == 2:
        if not (tq == QuadExt.sqrt(5) or (tq.is_integer and int(tq) >= 2)):
            raise ParameterError("for r = 2, t must be an integer >= 2 or sqrt(5)")
    elif r >= 4:
        if sign != +1:
            raise ParameterError("the sign = -1 branch exists only for r = 2")
        if not (tq.is_integer and int(tq) >= 3):
            raise ParameterError("for r >= 4, t must be an integer >= 3")
    else:
        raise ParameterError(f"r must be 2 or >= 4, got {r}")

    n_exact = (tq * tq - 2) * (tq * tq - 1) / 2
    if sign == +1:
        mu_exact = (tq - 1) ** 3 * (tq + 2) / (2 * r)
    else:
        mu_exact = (tq + 1) ** 3 * (tq - 2) / (2 * r)
    if not n_exact.is_integer:
        raise ParameterError(f"n = {n_exact} is not an integer")
    if not (mu_exact.is_integer and mu_exact > 0):
        raise ParameterError(f"mu = {mu_exact} is not a positive integer")
    return derive_params(int(n_exact), r, int(mu_exact))


def feasible_B(t_max: int) -> list[FamilyBParams]:
    """All odd-fibre family members with t <= t_max, sorted by (t, r).

    Entries are the pairs (t, r) with r | t-1, gcd(6, r) = 1, r >= 2, plus
    the special (9, 3, 3) member listed first (as t = 2).
    """
    if t_max < 2:
        raise ParameterError("t_max must be at least 2")
    out = [family_B(2, 3)]
    for t in range(2, t_max + 1):
        for r in range(2, t):
            if (t - 1) % r == 0 and gcd(6, r) == 1:
                out.append(family_B(t, r))
    out.sort(key=lambda fb: (fb.t, fb.r))
    return out


def _condition_tags_A(t: int, r: int, mu: int) -> list[str] | None:
    """Check conditions (i)-(vi) for the r >= 4 branch; None when violated."""
    tags = []
    if t < 3 or t % 4 == 0:
        return None
    tags.append("t>=3, 4 does not divide t")
    if mu < 2:
        return None
    tags.append("mu>=2")
    if 2 * r <= t * t + 1:
        if (t - 1) % r != 0:
            return None
        tags.append("r | t-1 (2r <= t^2+1)")
    if t % 2 == 1 and mu % 2 == 1:
        return None
    if t % 2 == 1:
        tags.append("mu even (t odd)")
    rr = r
    while rr % 2 == 0:
        rr //= 2
    p = 3
    while p * p <= rr:
        if rr % p == 0:
            if (t - 1) % p != 0:
                return None
            while rr % p == 0:
                rr //= p
        p += 2
    if rr > 1 and (t - 1) % rr != 0:
        return None
    tags.append("odd primes of r divide t-1")
    return tags


@dataclass(frozen=True)
class FamilyAEntry:
    t: object  # int or QuadExt (the icosahedron entry)
    r: int
    params: CoverParams
    branch: str  # 'eq1', 'eq2+', 'eq2-', 'sporadic'
    conditions: tuple[str, ...] = ()


def feasible_A(t_max: int) -> list[FamilyAEntry]:
    """Even-fibre feasibility table up to t_max.

    Contains the sporadic (28, 4, 8); every r = 2 entry (both branches, with
    integral positive mu) for integer t <= t_max plus the t = sqrt(5) member;
    and every r >= 4 entry passing conditions (i)-(vi).
    """
    if t_max < 2:
        raise ParameterError("t_max must be at least 2")
    out = [FamilyAEntry(t=3, r=4, params=derive_params(28, 4, 8),
                        branch="sporadic", conditions=("fixed member",))]

    # r = 2 branch, integer t
    for t in range(2, t_max + 1):
        for sign, tag in ((+1, "eq2+"), (-1, "eq2-")):
            try:
                p = family_A(t, 2, sign)
            except ParameterError:
                continue
            out.append(FamilyAEntry(t=t, r=2, params=p, branch=tag))
    # r = 2, t = sqrt(5): both branches coincide at (6, 2, 2)
    s5 = QuadExt.sqrt(5)
    out.append(FamilyAEntry(t=s5, r=2, params=family_A(s5, 2, +1),
                            branch="eq2+", conditions=("t=sqrt(5)",)))

    # r >= 4 branch under conditions (i)-(vi); mu integral means 2r | poly,
    # so r runs over even divisors of the branch polynomial
    for t in range(3, t_max + 1):
        poly = (t - 1) ** 3 * (t + 2)
        for d in _divisors(poly):
            if d % 2 != 0 or d // 2 < 4:
                continue
            r = d // 2
            mu = poly // d
            tags = _condition_tags_A(t, r, mu)
            if tags is None:
                continue
            try:
                p = family_A(t, r, +1)
            except ParameterError:
                continue
            out.append(FamilyAEntry(t=t, r=r, params=p, branch="eq1",
                                    conditions=tuple(tags)))
    return out


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def hoffman_bounds(fb: FamilyBParams) -> tuple[Fraction, Fraction]:
    """Exact clique and coclique bounds 1+(t^2-2)t and r(t^2-1)^2/(1+(t^2-2)t).

    Returned unfloored; callers decide floor semantics.
    """
    t, r = fb.t, fb.r
    clique = Fraction(1 + (t * t - 2) * t)
    coclique = Fraction(r * (t * t - 1) ** 2, 1 + (t * t - 2) * t)
    return clique, coclique
