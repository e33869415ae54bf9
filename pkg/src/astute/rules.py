"""Succession rules: bijections on words that shift left and append.

Every rule here is affine: the appended symbol solves
c = sum(lambda_i * a_i) for a_n, which requires lambda_0 and lambda_n
to be units mod b.  The rule acts on G(n, k) by advancing the phase.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import ModPoly, is_unit, mod_inverse
from .errors import BudgetExceeded, NotInvertible
from .graph import Factor, GraphParams, Vertex, factor_from_successor

DEFAULT_MAX_VERTICES = 1 << 22


@dataclass(frozen=True)
class AffineRule:
    """Rule a_0..a_{n-1} -> a_1..a_n with c = sum(lambdas[i] * a_i).

    lambdas has length n + 1; lambdas[0] and lambdas[n] must be units
    mod b (single-valued forward and backward).
    """

    lambdas: tuple[int, ...]
    c: int
    b: int
    name: str = field(default="affine", compare=False)

    def __post_init__(self):
        if self.b < 2:
            raise ValueError("b must be >= 2")
        if len(self.lambdas) < 2:
            raise ValueError("need at least lambda_0 and lambda_n")
        object.__setattr__(self, "lambdas", tuple(l % self.b for l in self.lambdas))
        object.__setattr__(self, "c", self.c % self.b)
        if not is_unit(self.lambdas[0], self.b):
            raise NotInvertible("lambda_0 must be invertible (bijectivity)")
        if not is_unit(self.lambdas[-1], self.b):
            raise NotInvertible("lambda_n must be invertible (single successor)")

    @property
    def n(self) -> int:
        return len(self.lambdas) - 1

    def char_poly(self) -> ModPoly:
        """sum(lambdas[i] * X^(n-i)) over Z/bZ."""
        return ModPoly.from_coeffs(list(reversed(self.lambdas)), self.b)

    def apply(self, word: tuple[int, ...]) -> tuple[int, ...]:
        """Shift left and append the unique symbol satisfying the relation."""
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} != n = {self.n}")
        acc = sum(l * a for l, a in zip(self.lambdas, word))
        a_n = (mod_inverse(self.lambdas[-1], self.b) * (self.c - acc)) % self.b
        return word[1:] + (a_n,)

    def spec(self) -> str:
        """Mini-grammar form understood by parse_rule_spec."""
        if self.name in ("pcr", "icr", "xor"):
            return self.name
        return "affine:%d;%s" % (self.c, ",".join(str(l) for l in self.lambdas))


def pcr(n: int, b: int) -> AffineRule:
    """Pure cycling register: rotation, a_n = a_0."""
    _check_order(n)
    lams = [1] + [0] * (n - 1) + [-1]
    return AffineRule(tuple(lams), 0, b, name="pcr")


def icr(n: int, b: int) -> AffineRule:
    """Incremented cycling register: a_n = a_0 + 1.

    Normalized as lambda_0 = 1, lambda_n = -1, c = -1 so the associated
    polynomial is X^n - 1 like the rotation rule; c is a unit either
    way, which is all the counting formulas depend on.
    """
    _check_order(n)
    lams = [1] + [0] * (n - 1) + [-1]
    return AffineRule(tuple(lams), -1, b, name="icr")


def xor_rule(n: int) -> AffineRule:
    """Binary sum feedback: a_n = a_0 + a_1 + ... + a_{n-1} over Z/2Z."""
    _check_order(n)
    return AffineRule(tuple([1] * (n + 1)), 0, 2, name="xor")


def _check_order(n: int):
    if n < 1:
        raise ValueError("word length n must be >= 1")


def parse_rule_spec(spec: str, n: int, b: int) -> AffineRule:
    """Parse 'pcr' | 'icr' | 'xor' | 'affine:c;l0,l1,...,ln'."""
    spec = spec.strip().lower()
    if spec == "pcr":
        return pcr(n, b)
    if spec == "icr":
        return icr(n, b)
    if spec == "xor":
        if b != 2:
            raise ValueError("xor requires b=2")
        return xor_rule(n)
    if spec.startswith("affine:"):
        body = spec[len("affine:"):]
        try:
            c_part, lam_part = body.split(";", 1)
            c = int(c_part)
            lams = tuple(int(t) for t in lam_part.split(","))
        except ValueError as e:
            raise ValueError(f"bad affine rule spec {spec!r}: {e}") from None
        if len(lams) != n + 1:
            raise ValueError(
                f"affine rule needs {n + 1} coefficients for n={n}, got {len(lams)}")
        return AffineRule(lams, c, b)
    raise ValueError(f"unknown rule spec {spec!r}")


def act(rule: AffineRule, k: int, v: Vertex) -> Vertex:
    """One step of the rule on G(n, k): apply to the word, advance the phase."""
    return Vertex(rule.apply(v.word), (v.phase + 1) % k)


def word_permutation(rule: AffineRule) -> list[int]:
    """The rule as a permutation of packed word values."""
    b, n = rule.b, rule.n
    total = b ** n
    inv = mod_inverse(rule.lambdas[-1], b)
    head = b ** (n - 1)
    perm = [0] * total
    for value in range(total):
        word = value
        acc = 0
        for i in range(n - 1, -1, -1):
            word, a = divmod(word, b)
            acc += rule.lambdas[i] * a
        a_n = (inv * (rule.c - acc)) % b
        perm[value] = (value % head) * b + a_n
    return perm


def successor_array(rule: AffineRule, k: int) -> list[int]:
    """The rule's action on G(n, k) as a permutation of packed vertices."""
    perm = word_permutation(rule)
    succ_of = [0] * (len(perm) * k)
    for value in range(len(perm)):
        for ph in range(k):
            succ_of[value * k + ph] = perm[value] * k + (ph + 1) % k
    return succ_of


def enumerate_factor(rule: AffineRule, k: int,
                     max_vertices: int = DEFAULT_MAX_VERTICES) -> Factor:
    """Partition the vertices of G(n, k) into orbits of the rule's action.

    Cycles come out in ascending order of their minimal packed vertex.
    """
    p = GraphParams(rule.b, rule.n, k)
    total = p.num_vertices
    if total > max_vertices:
        raise BudgetExceeded(f"{total} vertices exceeds budget {max_vertices}")
    return factor_from_successor(successor_array(rule, k), p)


def fix_count_bruteforce(rule: AffineRule, i: int,
                         max_words: int = DEFAULT_MAX_VERTICES) -> int:
    """|{words s : rule^i(s) = s}| by exhaustive iteration."""
    if i < 0:
        raise ValueError("i must be >= 0")
    b, n = rule.b, rule.n
    total = b ** n
    if total > max_words:
        raise BudgetExceeded(f"{total} words exceeds budget {max_words}")
    if i == 0:
        return total
    perm = word_permutation(rule)
    power = list(range(total))
    for _ in range(i):
        power = [perm[v] for v in power]
    return sum(1 for v, w in enumerate(power) if v == w)
