"""Combinatorial generators and symmetric-function evaluation routes.

Compositions, weak compositions, integer partitions in multiplicity form and
set partitions are all enumerated in a fixed lexicographic order so outputs
(and goldens built on them) are reproducible.

The modified Bell polynomial P_m is the coefficient of z^m in
exp(sum_k x_k z^k / k).  Two independent evaluators are provided, a direct
sum over integer partitions and the convolution recurrence
m*P_m = sum_j x_j P_{m-j}; each is used to check the other.  Feeding
x_j = +-zeta(j*s) into P_n yields the repeated-argument values zeta({s}^n)
and zeta*({s}^n), the package's reference route for both.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from .bernoulli import zeta_even
from .errors import UnsupportedError
from .exactarith import PiValue


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def compositions(n: int, k: int) -> Iterator[tuple]:
    """All C(n-1, k-1) compositions of n into exactly k positive parts.

    Lexicographic order; empty when k > n or k < 1.
    """
    if k < 1 or k > n:
        return
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def weak_compositions(total: int, parts: int) -> Iterator[tuple]:
    """All C(total+parts-1, parts-1) compositions of ``total`` into ``parts`` parts >= 0."""
    if parts < 1:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def partition_multiplicities(n: int) -> Iterator[tuple]:
    """Partitions of n as multiplicity vectors (a_1, .., a_n), sum k*a_k = n."""
    if n == 0:
        yield ()
        return

    def rec(remaining: int, k: int):
        if k > n:
            if remaining == 0:
                yield ()
            return
        for a_k in range(remaining // k + 1):
            for rest in rec(remaining - k * a_k, k + 1):
                yield (a_k,) + rest

    yield from rec(n, 1)


def set_partitions(n: int) -> Iterator[tuple]:
    """All set partitions of {1, .., n} as tuples of increasing blocks.

    Each partition is a tuple of tuples; blocks are ordered by smallest
    element, elements within a block ascending.  Restricted to n <= 10 since
    the count is the n-th Bell number.
    """
    if not 1 <= n <= 10:
        raise UnsupportedError(f"set partitions supported for 1 <= n <= 10, got {n}")

    def rec(element: int, blocks: list):
        if element > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(element)
            yield from rec(element + 1, blocks)
            b.pop()
        blocks.append([element])
        yield from rec(element + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def partition_weight(blocks: Sequence[Sequence]) -> int:
    """The factorial weight c(P) = prod over blocks of (card - 1)!."""
    w = 1
    for b in blocks:
        w *= factorial(len(b) - 1)
    return w


# ---------------------------------------------------------------------------
# Modified Bell polynomials
# ---------------------------------------------------------------------------

def modified_bell(coeffs: Sequence):
    """P_m(x_1, .., x_m) summed directly over integer partitions of m.

    Works over any commutative ring whose elements support +, * and division
    by integers (Fraction, PiValue with consistent grading, Cyclo).
    P_0 is the empty product, returned as Fraction(1).
    """
    m = len(coeffs)
    if m == 0:
        return Fraction(1)
    total = None
    for mult in partition_multiplicities(m):
        term = Fraction(1)
        denom = 1
        for k, a_k in enumerate(mult, start=1):
            if a_k == 0:
                continue
            denom *= factorial(a_k) * k ** a_k
            term = term * coeffs[k - 1] ** a_k
        term = term / denom
        total = term if total is None else total + term
    return total


def modified_bell_recurrence(coeffs: Sequence):
    """P_m via the convolution recurrence m*P_m = sum_{j<=m} x_j P_{m-j}."""
    m = len(coeffs)
    p: list = [Fraction(1)]
    for r in range(1, m + 1):
        acc = None
        for j in range(1, r + 1):
            term = coeffs[j - 1] * p[r - j]
            acc = term if acc is None else acc + term
        p.append(acc / r)
    return p[m]


# ---------------------------------------------------------------------------
# Repeated-argument zeta values
# ---------------------------------------------------------------------------

def _even_zeta_inputs(m: int, n: int, alternating: bool) -> list:
    xs = []
    for j in range(1, n + 1):
        x = zeta_even(j * m)
        if alternating and j % 2 == 0:
            x = -x
        xs.append(x)
    return xs


def _require_even(m: int) -> None:
    if m < 2 or m % 2 != 0:
        raise UnsupportedError(
            f"exact repeated-argument values need an even argument >= 2, got {m}")


def zeta_repeated(m: int, n: int) -> PiValue:
    """zeta({m}^n) for even m >= 2, via P_n(zeta(m), -zeta(2m), .., (-1)^(n+1) zeta(nm)).

    zeta({m}^0) = 1 by convention.
    """
    _require_even(m)
    if n < 0:
        raise ValueError("repetition count must be nonnegative")
    if n == 0:
        return PiValue.one()
    return modified_bell(_even_zeta_inputs(m, n, alternating=True))


def zeta_star_repeated(m: int, n: int) -> PiValue:
    """zeta*({m}^n) for even m >= 2, via P_n(zeta(m), zeta(2m), .., zeta(nm))."""
    _require_even(m)
    if n < 0:
        raise ValueError("repetition count must be nonnegative")
    if n == 0:
        return PiValue.one()
    return modified_bell(_even_zeta_inputs(m, n, alternating=False))


# ---------------------------------------------------------------------------
# Symmetric sums over permutations (set-partition form)
# ---------------------------------------------------------------------------

def hoffman_rhs(exponents: Sequence[Fraction | int], variant: str) -> list:
    """Set-partition expansion of the permutation-symmetrized MZV/MZSV sum.

    For exponents (i_1, .., i_n), the sum of zeta(i_sigma(1), .., i_sigma(n))
    over all permutations sigma equals a signed sum over set partitions P of
    {1..n} of c(P) * prod_blocks zeta(sum of the block's exponents); the sign
    is (-1)^(n - #blocks) for variant "zeta" and +1 for variant "star".

    Returns the expansion as a list of (integer coefficient, merged exponent
    tuple) pairs with like terms combined, sorted for reproducibility.  The
    terms can be evaluated exactly (all merged exponents even integers) or
    numerically (any real exponents > 1).
    """
    if variant not in ("zeta", "star"):
        raise ValueError(f"variant must be 'zeta' or 'star', got {variant!r}")
    n = len(exponents)
    if not 1 <= n <= 8:
        raise UnsupportedError(f"supported for 1 <= n <= 8 exponents, got {n}")
    exps = [Fraction(e) for e in exponents]
    acc: dict = {}
    for blocks in set_partitions(n):
        coeff = partition_weight(blocks)
        if variant == "zeta" and (n - len(blocks)) % 2 == 1:
            coeff = -coeff
        key = tuple(sorted(sum(exps[i - 1] for i in block) for block in blocks))
        acc[key] = acc.get(key, 0) + coeff
    return sorted((c, key) for key, c in acc.items() if c != 0)


def hoffman_rhs_exact(terms: list) -> PiValue:
    """Evaluate a :func:`hoffman_rhs` expansion exactly (even integer exponents only)."""
    total = None
    for coeff, exps in terms:
        prod = PiValue.one()
        for e in exps:
            if e.denominator != 1 or e % 2 != 0:
                raise UnsupportedError(
                    f"exact evaluation needs even integer exponents, got {e}")
            prod = prod * zeta_even(int(e))
        term = coeff * prod
        total = term if total is None else total + term
    return total if total is not None else PiValue.one()
