"""Independent reference computations used by the tests.

Nothing here imports the package: values are plain Fractions, polynomials
are dicts from exponent tuples to Fractions, and series are Fraction lists.
"""
from fractions import Fraction
from math import comb


def poch(a, q, n):
    acc = Fraction(1)
    for j in range(n):
        acc *= 1 - a * q**j
    return acc


def qbinom(n, k, q):
    return poch(q, q, n) / (poch(q, q, k) * poch(q, q, n - k))


def qbinom_pascal(n, k):
    """Gaussian binomial as a coefficient list in q via the q-Pascal rule."""
    if k < 0 or k > n:
        return [0]
    if k == 0 or k == n:
        return [1]
    a = qbinom_pascal(n - 1, k - 1)
    b = qbinom_pascal(n - 1, k)
    out = [0] * max(len(a), len(b) + k)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return out


def divided_difference_table(nodes, values):
    """Classical Newton table: returns [f[x1], f[x1,x2], ...]."""
    col = list(values)
    out = [col[0]]
    for level in range(1, len(nodes)):
        col = [(col[i + 1] - col[i]) / (nodes[i + level] - nodes[i]) for i in range(len(col) - 1)]
        out.append(col[0])
    return out


def newton_eval(coeffs, nodes, x):
    total, basis = Fraction(0), Fraction(1)
    for k, c in enumerate(coeffs):
        total += c * basis
        basis *= x - nodes[k]
    return total


# -- Fraction power series in q, as lists of length order + 1 --------------------


def s_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def s_inv(a, order):
    out = [Fraction(0)] * (order + 1)
    out[0] = 1 / a[0]
    for n in range(1, order + 1):
        acc = sum((a[k] * out[n - k] for k in range(1, min(n, len(a) - 1) + 1)), Fraction(0))
        out[n] = -acc / a[0]
    return out


def s_poly(coeffs, order):
    """A dict {power: coeff} as a series."""
    out = [Fraction(0)] * (order + 1)
    for k, c in coeffs.items():
        if k < 0:
            raise ValueError("negative power")
        if k <= order:
            out[k] += c
    return out


def s_poch(a_coeff, a_power, n, order):
    """(a q^s; q)_n with a rational, as a series; n may be None for infinity."""
    out = s_poly({0: 1}, order)
    j = 0
    while (n is None and a_power + j <= order) or (n is not None and j < n):
        factor = s_poly({0: 1}, order)
        if a_power + j <= order:
            factor[a_power + j] -= a_coeff
        out = s_mul(out, factor, order)
        j += 1
    return out


def jackson_oracle(order, a, x, beta):
    """Both sides of Jackson's expansion at rational parameters, coefficient lists."""
    abx = a * beta * x
    lhs = s_mul(s_poch(beta, 0, None, order), s_inv(s_poch(abx, 0, None, order), order), order)
    rhs = [Fraction(0)] * (order + 1)
    n = 0
    while n * (n - 1) <= order:
        # (q/(ax); q)_n as a polynomial in q
        num = s_poch(1 / (a * x), 1, n, order)
        num = s_mul(num, s_poch(beta, 0, n, order), order)
        num = s_mul(num, s_poch(beta, 2 * n, 1, order), order)
        num = s_mul(num, s_poly({n * (n - 1): abx**n}, order), order)
        den = s_mul(s_poch(1, 1, n, order), s_poch(abx, 0, n, order), order)
        term = s_mul(num, s_inv(den, order), order)
        rhs = [r + t for r, t in zip(rhs, term)]
        n += 1
    return lhs, rhs


def sylvester_oracle(order, beta):
    total = [Fraction(0)] * (order + 1)
    n = 0
    while n * (3 * n + 1) // 2 <= order:
        num = s_poly({n * (3 * n + 1) // 2: (-beta) ** n, n * (3 * n + 1) // 2 + 2 * n + 1: -((-beta) ** n) * beta}, order)
        den = s_mul(s_poch(1, 1, n, order), s_poch(beta, n + 1, None, order), order)
        total = [t + u for t, u in zip(total, s_mul(num, s_inv(den, order), order))]
        n += 1
    return total


# -- finite identities at rational points -------------------------------------------------


def phi(upper, lower, q, z, terms):
    r, s = len(upper), len(lower)
    total = Fraction(0)
    for n in range(terms + 1):
        num = Fraction(1)
        for a in upper:
            num *= poch(a, q, n)
        den = poch(q, q, n)
        for b in lower:
            den *= poch(b, q, n)
        extra = ((-1) ** n * q ** comb(n, 2)) ** (1 + s - r)
        total += num / den * extra * z**n
    return total


def andrews_at(N, beta, q):
    lhs = poch(-beta * q, q, 2 * N)
    rhs = Fraction(0)
    for n in range(N + 1):
        first = poch(-beta * q, q, n - 1) if n >= 1 else 1 / (1 + beta)
        rhs += first * (1 + beta * q ** (2 * n)) * beta**n * q ** (n * (3 * n - 1) // 2) * qbinom(N, n, q) * poch(-beta * q ** (n + N + 1), q, N - n)
    return lhs, rhs


def gasper_partial_sums(k_max, p, q, a, b):
    sums, total = [], Fraction(0)
    for k in range(k_max + 1):
        total += (1 - a * p**k * q**k) / (1 - a) * poch(a, p, k) * poch(1 / b, q, k) * b**k / (poch(q, q, k) * poch(a * b * p, p, k))
        sums.append(total)
    return sums


def gosper_second(n, a, c, p, q):
    total = Fraction(0)
    for k in range(n + 1):
        m = n - k
        total += (
            (1 - a * p**m * q**m)
            * poch(q ** (m + 1), q, k)
            * poch(a * p ** (m + 1) / c, p, k)
            * c**k
            / (poch(c * q**m, q, k + 1) * poch(a * p**m, p, k + 1))
        )
    return total


def gosper_first_lhs(n, a, c, p, q):
    return sum(
        (1 - a * p**k * q**k) / (1 - a) * poch(a, p, k) * poch(c, q, k) * c**-k / (poch(q, q, k) * poch(a * p / c, p, k))
        for k in range(n + 1)
    )


def gosper_first_rhs(n, a, c, p, q):
    return poch(a * p, p, n) * poch(c * q, q, n) * c**-n / (poch(q, q, n) * poch(a * p / c, p, n))


def elementary_brute(i, letters):
    """e_i by summing products over i-subsets of numeric letters."""
    from itertools import combinations

    total = Fraction(0)
    for combo in combinations(letters, i):
        term = Fraction(1)
        for v in combo:
            term *= v
        total += term
    return total


def complete_brute(i, letters):
    from itertools import combinations_with_replacement

    total = Fraction(0)
    for combo in combinations_with_replacement(letters, i):
        term = Fraction(1)
        for v in combo:
            term *= v
        total += term
    return total
