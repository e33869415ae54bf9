"""Cycle counts of rule-generated factors, four ways.

The number of cycles of F_k(sigma) can be obtained by direct orbit
enumeration, by a Burnside average over brute-force fixed-point counts,
by the general ideal-quotient formula for affine rules ("theorem 2" in
the README), or by per-rule closed forms ("corollaries").  All methods
must agree; the CLI's `count --method all` asserts that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from .algebra import ModPoly, euler_phi
from .errors import BudgetExceeded, NonIntegerResult
from .ideals import ideal_quotient_size, order_of_x, smallest_cycle_length
from .rules import (AffineRule, DEFAULT_MAX_VERTICES, enumerate_factor,
                    word_permutation)

METHODS = ("enumeration", "burnside_direct", "theorem2", "closed_form")


@dataclass(frozen=True)
class CountReport:
    value: int
    method: str
    rule: str
    b: int
    n: int
    k: int
    witnesses: Optional[dict] = None

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("cycle count must be >= 1")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")


def _divisors(m: int) -> list[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def count_enumeration(rule: AffineRule, k: int,
                      max_vertices: int = DEFAULT_MAX_VERTICES) -> CountReport:
    """Count orbits by enumerating the factor."""
    f = enumerate_factor(rule, k, max_vertices=max_vertices)
    return CountReport(len(f.cycles), "enumeration", rule.spec(), rule.b, rule.n, k)


def count_burnside_direct(rule: AffineRule, k: int,
                          max_vertices: int = DEFAULT_MAX_VERTICES) -> CountReport:
    """Burnside average of brute-force fixed-point counts.

    The average runs over one period M = lcm(k, l, w) of
    i -> [k | i] * |Fix(rule^i)|, with l the rule's smallest word-cycle
    length and w the order of X modulo its polynomial.
    """
    lam = rule.char_poly()
    ell = smallest_cycle_length(lam, rule.c, 1)
    omega = order_of_x(lam)
    m = lcm(k, ell, omega)
    n_words = rule.b ** rule.n
    if n_words > max_vertices:
        raise BudgetExceeded(f"{n_words} words exceeds budget {max_vertices}")
    # fixed points of every power in one sweep; each count matches
    # fix_count_bruteforce(rule, i)
    perm = word_permutation(rule)
    power = list(range(n_words))
    total = n_words  # i = 0
    for i in range(1, m):
        power = [perm[v] for v in power]
        if i % k == 0:
            total += sum(1 for v, w in enumerate(power) if v == w)
    value = Fraction(k * total, m)
    if value.denominator != 1:
        raise NonIntegerResult(f"Burnside average {value} is not an integer")
    return CountReport(int(value), "burnside_direct", rule.spec(), rule.b, rule.n, k,
                       witnesses={"M": m, "ell": ell, "omega": omega})


def count_theorem2(lam: ModPoly, c: int, k: int,
                   omega: int | None = None,
                   rule_spec: str = "") -> CountReport:
    """The general affine-rule count:

        (k * g) / (s * w) * sum over d | w, g | d of phi(w/d) * Q(d)

    with w any multiple of the order of X mod lam, s the least multiple
    of k with c*U_s in (lam, X^s - 1), g = gcd(s, w), and Q(d) the size
    of Z/bZ[X] / (lam, X^d - 1).
    """
    base_order = order_of_x(lam)
    if omega is None:
        omega = base_order
    elif omega % base_order:
        raise ValueError(f"omega={omega} is not a multiple of the order {base_order}")
    s = smallest_cycle_length(lam, c, k)
    g = gcd(s, omega)
    terms = []
    total = Fraction(0)
    for d in _divisors(omega):
        if d % g:
            continue
        phi = euler_phi(omega // d)
        q = ideal_quotient_size(lam, d)
        terms.append((d, phi, q))
        total += phi * q
    value = Fraction(k * g, s * omega) * total
    if value.denominator != 1 or value < 1:
        raise NonIntegerResult(f"ideal-formula count {value} is not a positive integer")
    spec = rule_spec or f"affine:{c};(lambda={lam})"
    return CountReport(int(value), "theorem2", spec, lam.modulus,
                       lam.degree if not lam.is_zero else 0, k,
                       witnesses={"omega": omega, "s": s, "terms": terms})


def count_theorem2_rule(rule: AffineRule, k: int, omega: int | None = None) -> CountReport:
    return count_theorem2(rule.char_poly(), rule.c, k, omega=omega,
                          rule_spec=rule.spec())


def closed_form_pcr(n: int, k: int, b: int) -> CountReport:
    """Rotation-rule count: (g/n) * sum over g | d | n of phi(n/d) * b^d, g = gcd(n, k)."""
    _check_nkb(n, k, b)
    g = gcd(n, k)
    total = sum(euler_phi(n // d) * b ** d for d in _divisors(n) if d % g == 0)
    value = Fraction(g * total, n)
    if value.denominator != 1:
        raise NonIntegerResult(f"closed form gave {value}")
    return CountReport(int(value), "closed_form", "pcr", b, n, k)


def base_divisor(n: int, b: int) -> int:
    """Smallest divisor d of n such that n // d is coprime to b."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for d in _divisors(n):
        if gcd(n // d, b) == 1:
            return d
    return n  # unreachable: d = n always works


def closed_form_icr(n: int, k: int, b: int) -> CountReport:
    """Incremented-rotation count, with s = lcm(k, b * base_divisor(n, b))."""
    _check_nkb(n, k, b)
    s = lcm(k, b * base_divisor(n, b))
    g = gcd(s, n)
    total = sum(euler_phi(n // d) * b ** d for d in _divisors(n) if d % g == 0)
    value = Fraction(k * g * total, s * n)
    if value.denominator != 1:
        raise NonIntegerResult(f"closed form gave {value}")
    return CountReport(int(value), "closed_form", "icr", b, n, k,
                       witnesses={"s": s})


def closed_form_xor(n: int, k: int) -> CountReport:
    """Binary sum-feedback count.

    With w = n + 1 and g = gcd(k, w), the general formula specializes to

        g / (2w) * sum over e | (w/g) of phi(2e) * 2^(w/e)

    since the smallest factor-cycle length is k itself (the rule is
    linear) and the ideal sizes are 2^(d - 1 + [w/d even]).  At k = 1
    this is the familiar k/(2(n+1)) * sum over d | n+1 form.
    """
    _check_nkb(n, k, 2)
    w = n + 1
    g = gcd(k, w)
    total = sum(euler_phi(2 * e) * 2 ** (w // e) for e in _divisors(w // g))
    value = Fraction(g * total, 2 * w)
    if value.denominator != 1:
        raise NonIntegerResult(f"closed form gave {value}")
    return CountReport(int(value), "closed_form", "xor", 2, n, k)


def closed_form_for(rule: AffineRule, k: int) -> CountReport | None:
    """The applicable closed form, or None for custom affine rules."""
    if rule.name == "pcr":
        return closed_form_pcr(rule.n, k, rule.b)
    if rule.name == "icr":
        return closed_form_icr(rule.n, k, rule.b)
    if rule.name == "xor":
        return closed_form_xor(rule.n, k)
    return None


def _check_nkb(n: int, k: int, b: int):
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    if b < 2:
        raise ValueError("b must be >= 2")
