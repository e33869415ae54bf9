"""Independent brute-force oracles used by the tests.

Everything here deliberately avoids the package's computation paths:
ideals are enumerated as additive closures, necklaces counted by
canonical rotations, factor counts taken over raw permutations.
"""

from itertools import permutations

from astute.algebra import ModPoly


def all_words(n: int, b: int):
    if n == 0:
        yield ()
        return
    for head in all_words(n - 1, b):
        for a in range(b):
            yield head + (a,)


def reduce_mod_xd(coeffs, d: int, b: int) -> tuple:
    out = [0] * d
    for j, c in enumerate(coeffs):
        out[j % d] = (out[j % d] + c) % b
    return tuple(out)


def ideal_closure(lam: ModPoly, d: int) -> set:
    """All elements of the ideal (lam, X^d - 1) inside (Z/b)^d, by
    additive closure of the cyclic shifts of lam."""
    b = lam.modulus
    base = reduce_mod_xd(lam.coeffs, d, b)
    gens = []
    row = list(base)
    for _ in range(d):
        gens.append(tuple(row))
        row = [row[-1]] + row[:-1]
    closure = {tuple([0] * d)}
    frontier = list(closure)
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = tuple((x + y) % b for x, y in zip(v, g))
            if w not in closure:
                closure.add(w)
                frontier.append(w)
    return closure


def ideal_quotient_size_oracle(lam: ModPoly, d: int) -> int:
    return lam.modulus ** d // len(ideal_closure(lam, d))


def membership_oracle(lam: ModPoly, c: int, s: int) -> bool:
    target = tuple([c % lam.modulus] * s)
    return target in ideal_closure(lam, s)


def necklace_count(n: int, b: int) -> int:
    """Words that are minimal among their rotations."""
    count = 0
    for w in all_words(n, b):
        if all(w <= w[i:] + w[:i] for i in range(n)):
            count += 1
    return count


def factor_count_by_permutations(p) -> int:
    """Number of vertex permutations compatible with the arc set."""
    from astute.graph import is_arc, iter_vertices

    vertices = list(iter_vertices(p))
    count = 0
    for perm in permutations(range(len(vertices))):
        if all(is_arc(vertices[i], vertices[j], p) for i, j in enumerate(perm)):
            count += 1
    return count


def debruijn_arcs_direct(n: int, b: int) -> set:
    """Arc set of the order-n de Bruijn graph, straight from the definition."""
    arcs = set()
    for s in all_words(n, b):
        for t in all_words(n, b):
            if s[1:] == t[:-1]:
                arcs.add((s, t))
    return arcs


def transform_reference(word) -> complex:
    """DFT by direct exponentials, summed in reverse order."""
    import cmath
    n = len(word)
    return sum(word[i] * cmath.exp(2j * cmath.pi * i / n)
               for i in range(n - 1, -1, -1))


def fixed_affine_rules(b: int, n: int, count: int = 5):
    """The deterministic custom-rule set used across the test lattice."""
    import random
    from astute.algebra import is_unit
    from astute.rules import AffineRule

    rng = random.Random(97 * b + n)
    out = []
    while len(out) < count:
        lams = [rng.randrange(b) for _ in range(n + 1)]
        if not (is_unit(lams[0], b) and is_unit(lams[-1], b)):
            continue
        out.append(AffineRule(tuple(lams), rng.randrange(b), b))
    return out


def lattice_rules():
    """Every rule in the agreement lattice: built-ins plus the fixed
    custom rules per (b, n), plus the binary sum rule up to n = 5."""
    from astute.rules import icr, pcr, xor_rule

    rules = []
    for b in (2, 3):
        for n in range(1, 5):
            rules += [pcr(n, b), icr(n, b)]
            rules += fixed_affine_rules(b, n)
            if b == 2:
                rules.append(xor_rule(n))
    rules.append(xor_rule(5))
    return rules
