"""Top-Chern-degree integration and the graded pairing.

Only the component of bidegree (6g-6, 4g-4) contributes.  On that slice the
integral of a monomial alpha^n beta^m psi_S is pinned down by two rules:

* monodromy invariance: the integral vanishes unless S pairs every index i
  with i+g, and the value of a product of pairs gamma_i = psi_i psi_{i+g}
  depends only on the number of pairs;
* Virasoro proportionality: along the top-bidegree line n = m = g-1-p the
  values I_p = integral(alpha^(g-1-p) beta^(g-1-p) gamma^p) satisfy
  (g-p) I_p = -2(g-1-p) I_{p+1}.

The overall normalization B = I_0 is a free nonzero rational; every
structural output downstream (ranks, kernels, dimension tables) is invariant
under rescaling it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import Element, check_genus, monomial_basis
from .linalg import QMatrix

_ZERO = Fraction(0)


@dataclass(frozen=True)
class IntegralConfig:
    g: int
    B: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        check_genus(self.g)
        object.__setattr__(self, "B", Fraction(self.B))
        if self.B == 0:
            raise ValueError("normalization B must be nonzero")


def top_bidegree(g: int):
    return (6 * g - 6, 4 * g - 4)


@lru_cache(maxsize=None)
def _virasoro_line(g: int):
    """I_0 .. I_{g-1} with I_0 = 1 (the B = 1 normalization)."""
    check_genus(g)
    vals = [Fraction(1)]
    for p in range(g - 1):
        den = 2 * (g - 1 - p)
        assert den != 0
        vals.append(Fraction(-(g - p), den) * vals[-1])
    return tuple(vals)


def _falling(x: int, j: int) -> int:
    out = 1
    for t in range(j):
        out *= x - t
    return out


def _sequence_sign(seq) -> int:
    """Koszul sign of sorting an index sequence ascending (inversion count)."""
    inv = 0
    for x in range(len(seq)):
        for y in range(x + 1, len(seq)):
            if seq[x] > seq[y]:
                inv += 1
    return -1 if inv & 1 else 1


def monomial_integral(g: int, a: int, b: int, mask: int) -> Fraction:
    """B = 1 integral of the monomial alpha^a beta^b psi_mask."""
    s = mask.bit_count()
    if 2 * a + 4 * b + 3 * s != 6 * g - 6 or 2 * (a + b + s) != 4 * g - 4:
        return _ZERO
    lower = mask & ((1 << g) - 1)
    upper = mask >> g
    if lower != upper:
        return _ZERO
    pairs = []
    m = lower
    while m:
        low = m & -m
        pairs.append(low.bit_length() - 1)
        m ^= low
    p = len(pairs)
    # top bidegree forces a = b = g - 1 - p, so I_p is always available
    target = []
    for i in pairs:
        target.extend((i, i + g))
    sign = _sequence_sign(target)
    value = _virasoro_line(g)[p] / (Fraction((-2) ** p) * _falling(g, p))
    return sign * value


def graded_integral(D: Element, cfg: IntegralConfig) -> Fraction:
    """Integral of the top-bidegree component; other components give zero."""
    if D.g != cfg.g:
        raise ValueError("genus mismatch between element and config")
    acc = _ZERO
    for (a, b, mask), c in D.terms.items():
        v = monomial_integral(cfg.g, a, b, mask)
        if v:
            acc += c * v
    return acc * cfg.B


def graded_pairing(D: Element, E: Element, cfg: IntegralConfig) -> Fraction:
    return graded_integral(D * E, cfg)


def _pair_monomials(g: int, m1, m2) -> Fraction:
    """B = 1 pairing of two monomial keys, without building Elements."""
    a1, b1, k1 = m1
    a2, b2, k2 = m2
    if k1 & k2:
        return _ZERO
    from .algebra import koszul_sign

    v = monomial_integral(g, a1 + a2, b1 + b2, k1 | k2)
    if not v:
        return _ZERO
    return koszul_sign(k1, k2) * v


def pairing_matrix(g: int, bd, cfg: IntegralConfig = None) -> QMatrix:
    """Pairing of the bidegree slice against its complementary slice.

    Rows are indexed by monomial_basis(g, bd), columns by the basis of the
    complementary bidegree; outside the cone that basis is legitimately
    empty and the matrix has zero columns.
    """
    if cfg is None:
        cfg = IntegralConfig(g)
    if cfg.g != g:
        raise ValueError("genus mismatch")
    coh, chern = bd
    comp = (6 * g - 6 - coh, 4 * g - 4 - chern)
    rows_basis = monomial_basis(g, bd)
    cols_basis = monomial_basis(g, comp)
    entries = []
    for m1 in rows_basis:
        for m2 in cols_basis:
            entries.append(_pair_monomials(g, m1, m2) * cfg.B)
    return QMatrix(len(rows_basis), len(cols_basis), entries)


def gamma_power_integral_two_routes(g: int, p: int, cfg: IntegralConfig = None):
    """Integral of alpha^(g-1-p) beta^(g-1-p) gamma^p by two routes.

    Route one expands gamma^p monomially in the full algebra and sums the
    pairwise reductions; route two scales the Virasoro value directly.  The
    two must agree exactly for every p <= g - 1.
    """
    if cfg is None:
        cfg = IntegralConfig(g)
    if not 0 <= p <= g - 1:
        raise ValueError("p must satisfy 0 <= p <= g-1")
    from .algebra import gamma_power

    n = g - 1 - p
    elem = Element.monomial(g, n, n, 0) * gamma_power(g, p)
    route_expand = graded_integral(elem, cfg)
    route_recursion = _virasoro_line(g)[p] * cfg.B
    return route_expand, route_recursion
