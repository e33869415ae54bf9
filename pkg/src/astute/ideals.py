"""Ideal computations in Z/bZ[X] / (X^d - 1) for arbitrary b >= 2.

The modulus may be composite, so polynomial GCDs are unavailable; sizes
and memberships are decided through integer-lattice Smith normal forms
instead.  The ideal (L, X^d - 1) corresponds to the subgroup of (Z/b)^d
spanned by the d cyclic shifts of L reduced mod X^d - 1.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm

from .algebra import ModPoly, is_unit, poly_rem
from .errors import BudgetExceeded, NotInvertible
from .snf import smith_normal_form


def _cyclic_rows(lam: ModPoly, d: int) -> list[list[int]]:
    """Coefficient vectors of X^i * lam mod (X^d - 1), i = 0..d-1."""
    b = lam.modulus
    base = [0] * d
    for j, c in enumerate(lam.coeffs):
        base[j % d] = (base[j % d] + c) % b
    rows = []
    row = base
    for _ in range(d):
        rows.append(row)
        row = [row[-1]] + row[:-1]
    return rows


def _span_quotient_size(rows: list[list[int]], width: int, b: int) -> int:
    """|(Z/b)^width / span(rows)| via elementary divisors of the row lattice."""
    if not rows:
        return b ** width
    divisors = smith_normal_form(rows)
    divisors += [0] * (width - len(divisors))
    size = 1
    for e in divisors[:width]:
        size *= gcd(e, b) if e else b
    return size


@lru_cache(maxsize=4096)
def ideal_quotient_size(lam: ModPoly, d: int) -> int:
    """|Z/bZ[X] / (lam, X^d - 1)| for b = lam.modulus."""
    if lam.is_zero:
        raise ValueError("lam must be nonzero")
    if d < 1:
        raise ValueError("d must be >= 1")
    return _span_quotient_size(_cyclic_rows(lam, d), d, lam.modulus)


def membership_cUs(lam: ModPoly, c: int, s: int) -> bool:
    """Decide c*(1 + X + ... + X^(s-1)) in (lam, X^s - 1).

    Adjoining the target vector to the generating lattice leaves the
    quotient size unchanged exactly when the target already lies in it.
    """
    b = lam.modulus
    c %= b
    if c == 0:
        return True
    if lam.is_zero:
        raise ValueError("lam must be nonzero")
    rows = _cyclic_rows(lam, s)
    base = _span_quotient_size(rows, s, b)
    target = [c] * s
    return _span_quotient_size(rows + [target], s, b) == base


def _require_affine_valid(lam: ModPoly):
    b = lam.modulus
    if lam.is_zero:
        raise NotInvertible("zero polynomial")
    if not is_unit(lam.constant, b):
        raise NotInvertible(f"constant term {lam.constant} not invertible mod {b}")
    if not is_unit(lam.leading, b):
        raise NotInvertible(f"leading coefficient {lam.leading} not invertible mod {b}")


def order_of_x(lam: ModPoly) -> int:
    """Least w >= 1 with X^w === 1 (mod lam).

    Needs both the constant and leading coefficients of lam invertible;
    the iteration is capped at b^deg(lam), past which a failure would
    mean the premise is broken.
    """
    _require_affine_valid(lam)
    b = lam.modulus
    if lam.degree == 0:
        return 1  # unit ideal: everything is congruent to 1
    one = ModPoly.one(b)
    x = ModPoly.x_power(1, b)
    r = poly_rem(x, lam)
    cap = b ** lam.degree
    w = 1
    while r != one:
        r = poly_rem(r.shift(1), lam)
        w += 1
        if w > cap:
            raise BudgetExceeded("order of X exceeded b^deg bound; internal error")
    return w


def smallest_cycle_length(lam: ModPoly, c: int, k: int) -> int:
    """Least multiple s of k with c*U_s in (lam, X^s - 1).

    The search is capped at lcm(k, b * order_of_x(lam)), which is always
    a member; overrunning it signals a bug.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_affine_valid(lam)
    b = lam.modulus
    if c % b == 0:
        return k
    bound = lcm(k, b * order_of_x(lam))
    s = k
    while s <= bound:
        if membership_cUs(lam, c, s):
            return s
        s += k
    raise BudgetExceeded("no cycle length within lcm(k, b*order) bound; internal error")
