"""Mumford relations, the graded relation ideal, and its dimension tables.

Three layers live here:

* primitive classes in the exterior algebra on eps_1..eps_2g, computed as
  exact kernels of multiplication by a theta power;
* the Mumford relations (explicit t-coefficient formula), their modified
  recombination with the improved Chern-degree bound, and the graded
  relation generators R_{k,m,l};
* per-bidegree slices of the relation ideals and the resulting refined
  dimension tables, by the ideal route (any d >= 0) and by the pairing
  route (d = 0).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    Element,
    PicClass,
    bidegree_cone,
    check_genus,
    exterior_basis,
    monomial_basis,
    sigma_from_pic,
    theta_power,
)
from .integral import IntegralConfig, pairing_matrix
from .linalg import QMatrix, RowSpan, row_reduce
from .series import InvariantPoly, TSeries, phi_series

_ZERO = Fraction(0)


def _falling(x: int, j: int) -> int:
    out = 1
    for t in range(j):
        out *= x - t
    return out


def _two_power(e: int) -> Fraction:
    return Fraction(2**e) if e >= 0 else Fraction(1, 2**(-e))


# ----------------------------------------------------------------------
# primitive classes


@lru_cache(maxsize=None)
def prim_basis(g: int, l: int):
    """Basis of the degree-l primitive part: kernel of theta^(g-l+1).

    Computed as an exact kernel, never from a closed-form combinatorial
    basis: the pair-free eps monomials undercount the kernel for l >= 2.
    Size is C(2g, l) - C(2g, l-2).
    """
    check_genus(g)
    if not 0 <= l <= g:
        raise ValueError(f"primitive degree must satisfy 0 <= l <= g, got {l}")
    dom = exterior_basis(g, l)
    cod = exterior_basis(g, 2 * g - l + 2)
    cod_index = {m: j for j, m in enumerate(cod)}
    power = theta_power(g, g - l + 1)
    rows = []
    for mask in dom:
        image = PicClass.from_mask(g, mask) * power
        row = [_ZERO] * len(cod)
        for m, c in image.terms.items():
            row[cod_index[m]] = c
        rows.append(row)
    matrix = QMatrix.from_rows(rows, cols=len(cod)).transpose()
    _, kernel = row_reduce(matrix)
    basis = []
    for vec in kernel:
        basis.append(PicClass(g, {mask: v for mask, v in zip(dom, vec) if v}))
    expected = math.comb(2 * g, l) - (math.comb(2 * g, l - 2) if l >= 2 else 0)
    if len(basis) != expected:
        raise RuntimeError(
            f"primitive basis size mismatch at g={g}, l={l}: got {len(basis)}, expected {expected}"
        )
    return tuple(basis)


# ----------------------------------------------------------------------
# Mumford relations


def _sig_degree(sig: PicClass) -> int:
    l = sig.degree()
    if l is None:
        raise ValueError("primitive class argument must be homogeneous and nonzero")
    return l


def mumford_relation(d: int, k: int, m: int, sig: PicClass, g: int) -> Element:
    """The relation attached to (k, theta^m * sig) at destabilizing degree d.

    Equal to (-1)^l 2^(2g-m-k) [t^(k+m-g-l)] (Phi_d(t) * F(t)) sigma_l with
    F(t) = sum_j C(m,j) (g-l-j)_(m-j) (1 - beta t^2)^(m-j) (-2 gamma t^3)^j.
    A negative t-index gives zero.
    """
    check_genus(g)
    if sig.g != g:
        raise ValueError("genus mismatch")
    l = _sig_degree(sig)
    n = k + m - g - l
    if n < 0:
        return Element.zero(g)
    phi = phi_series(d, g, n)
    one_minus_beta_t2 = TSeries.const(g, n, 1)
    if n >= 2:
        one_minus_beta_t2.coeffs[2] = InvariantPoly.monomial(g, 0, 1, 0, -1)
    factor = TSeries.zero(g, n)
    for j in range(m + 1):
        if 3 * j > n:
            break
        base = one_minus_beta_t2 ** (m - j)
        gam_pow = InvariantPoly.monomial(g, 0, 0, j, (-2) ** j) if j else InvariantPoly.one(g)
        shifted = TSeries.zero(g, n)
        for i in range(n + 1 - 3 * j):
            shifted.coeffs[i + 3 * j] = base.coeffs[i] * gam_pow
        weight = math.comb(m, j) * _falling(g - l - j, m - j)
        factor = factor + shifted * Fraction(weight)
    coeff = (phi * factor).coeff(n)
    scalar = _two_power(2 * g - m - k) * (-1) ** l
    return coeff.embed() * sigma_from_pic(sig) * scalar


def modified_mumford_sum(d: int, k: int, m: int, sig: PicClass, g: int) -> Element:
    """Modified relation as the alternating combination of plain relations."""
    l = _sig_degree(sig)
    if l + m > g:
        raise ValueError("need l + m <= g")
    out = Element.zero(g)
    for s in range(m + 1):
        weight = (-1) ** s * math.comb(m, s) * _falling(g - l - s, m - s)
        if weight == 0:
            continue
        out = out + mumford_relation(d, k + m - s, s, sig, g) * Fraction(weight)
    return out


def modified_mumford_closed(d: int, k: int, m: int, sig: PicClass, g: int) -> Element:
    """Modified relation from its closed form

    (-1)^l 2^(2g-m-k) m!/(g-l-m)! *
        sum_{b+c=m, a+b+2c=k-g-l} (g-l-c)! c_{d,a} beta^b/b! (2 gamma)^c/c! sigma_l.
    """
    l = _sig_degree(sig)
    if l + m > g:
        raise ValueError("need l + m <= g")
    n_max = k - g - l
    poly = InvariantPoly.zero(g)
    if n_max >= 0:
        phi = phi_series(d, g, n_max)
        for c in range(m + 1):
            b = m - c
            a = k - g - l - b - 2 * c
            if a < 0:
                continue
            w = Fraction(math.factorial(g - l - c) * 2**c, math.factorial(b) * math.factorial(c))
            poly = poly + (phi.coeff(a) * InvariantPoly.monomial(g, 0, b, c, w))
    scalar = _two_power(2 * g - m - k) * Fraction(math.factorial(m), math.factorial(g - l - m)) * (-1) ** l
    return poly.embed() * sigma_from_pic(sig) * scalar


def modified_mumford(d: int, k: int, m: int, sig: PicClass, g: int) -> Element:
    """Modified Mumford relation; asserts the two defining routes agree."""
    by_sum = modified_mumford_sum(d, k, m, sig, g)
    by_closed = modified_mumford_closed(d, k, m, sig, g)
    if by_sum != by_closed:
        raise RuntimeError(
            f"modified relation routes disagree at d={d}, k={k}, m={m}, g={g}"
        )
    return by_closed


@lru_cache(maxsize=None)
def rel_generator_poly(g: int, k: int, m: int, l: int) -> InvariantPoly:
    """R_{k,m,l} = sum_{b+c=m, a+b+2c=k-g-l} (g-l-c)! alpha^a/a! beta^b/b! (2 gamma)^c/c!.

    An out-of-range index set (negative m, or k < g + l) gives the empty
    sum, i.e. zero.
    """
    check_genus(g)
    if l < 0 or l > g or l + m > g:
        raise ValueError("need 0 <= l and l + m <= g")
    out = InvariantPoly.zero(g)
    if m < 0:
        return out
    for c in range(m + 1):
        b = m - c
        a = k - g - l - b - 2 * c
        if a < 0:
            continue
        w = Fraction(
            math.factorial(g - l - c) * 2**c,
            math.factorial(a) * math.factorial(b) * math.factorial(c),
        )
        out = out + InvariantPoly.monomial(g, a, b, c, w)
    return out


def rel_generator(k: int, m: int, sig: PicClass, g: int) -> Element:
    """R_{k,m,l} * sigma_l; homogeneous of bidegree (2k-2g+2m+l, 2k-2g)."""
    l = _sig_degree(sig)
    return rel_generator_poly(g, k, m, l).embed() * sigma_from_pic(sig)


# ----------------------------------------------------------------------
# ideal slices and dimension tables


def slice_vector(x: Element, basis_index: dict, ncols: int):
    """Coordinates of a homogeneous element over an indexed monomial basis."""
    vec = [_ZERO] * ncols
    for mono, c in x.terms.items():
        vec[basis_index[mono]] = c
    return vec


def ideal_slice_keys(g: int, d: int, bd):
    """Lexicographic (ell, k, m, l, primIndex) keys of the spanning family
    of the degree-d graded relation ideal landing in bidegree bd."""
    coh, chern = bd
    keys = []
    if chern % 2:
        return keys
    for k in range(2 * g + 2 * d, g + chern // 2 + 1):
        ell2 = chern + 2 * g - 2 * k
        if ell2 < 0 or ell2 % 2:
            continue
        ell = ell2 // 2
        rest = coh - 4 * ell - 2 * k + 2 * g  # equals 2m + l
        if rest < 0:
            continue
        for l in range(rest % 2, min(g, rest) + 1, 2):
            m = (rest - l) // 2
            if m < 0 or l + m > g:
                continue
            for idx in range(len(prim_basis(g, l))):
                keys.append((ell, k, m, l, idx))
    keys.sort()
    return keys


def ideal_slice(g: int, d: int, bd, check_independent: bool = True):
    """All beta^ell R_{k,m,l} sigma landing in bidegree bd.

    The returned family is linearly independent (the freeness of the ideal
    as a Q[beta]-module); this is asserted unless disabled.
    """
    check_genus(g)
    if d < 0:
        raise ValueError("d must be >= 0")
    elements = []
    beta = Element.beta(g)
    for ell, k, m, l, idx in ideal_slice_keys(g, d, bd):
        sig = prim_basis(g, l)[idx]
        elements.append(beta**ell * rel_generator(k, m, sig, g))
    if check_independent and elements:
        basis = monomial_basis(g, bd)
        index = {mono: i for i, mono in enumerate(basis)}
        rows = [slice_vector(x, index, len(basis)) for x in elements]
        rk, _ = row_reduce(QMatrix.from_rows(rows, cols=len(basis)))
        if rk != len(elements):
            raise RuntimeError(f"relation family dependent at g={g}, d={d}, bd={bd}")
    return elements


# ----------------------------------------------------------------------
# tables


@dataclass
class OmegaTable:
    """Refined dimension table: dims[(coh, chern)] = dim gr^C_chern H^coh."""

    g: int
    d: int
    max_coh: int
    dims: dict = field(default_factory=dict)

    def dim(self, coh: int, chern: int) -> int:
        return self.dims.get((coh, chern), 0)

    def nonzero(self):
        return sorted((bd, n) for bd, n in self.dims.items() if n)

    def to_coeff_dict(self):
        """Monomial dict {(qExp, tExp): dim} with q tracking Chern degree."""
        return {(chern, coh - chern): n for (coh, chern), n in self.dims.items() if n}

    def poincare_coefficients(self):
        """q = t specialization: cohomological-degree Betti numbers."""
        out = {}
        for (coh, _), n in self.dims.items():
            if n:
                out[coh] = out.get(coh, 0) + n
        return out

    def to_json_dict(self):
        table = [
            {"coh": coh, "chern": chern, "dim": n}
            for (coh, chern), n in sorted(self.dims.items())
            if n
        ]
        return {"genus": self.g, "d": self.d, "maxCoh": self.max_coh, "table": table}

    @classmethod
    def from_json_dict(cls, data):
        dims = {(row["coh"], row["chern"]): row["dim"] for row in data["table"]}
        return cls(data["genus"], data["d"], data["maxCoh"], dims)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        lines = ["coh,chern,dim"]
        for (coh, chern), n in sorted(self.dims.items()):
            if n:
                lines.append(f"{coh},{chern},{n}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (
            isinstance(other, OmegaTable)
            and self.g == other.g
            and self.d == other.d
            and {k: v for k, v in self.dims.items() if v}
            == {k: v for k, v in other.dims.items() if v}
        )


def default_max_coh(g: int, d: int) -> int:
    return 6 * g - 6 + 4 * d


def omega_from_ideal(g: int, d: int, max_coh: int = None) -> OmegaTable:
    """dims[bd] = #monomials - rank of the relation slice, per bidegree."""
    check_genus(g)
    if max_coh is None:
        max_coh = default_max_coh(g, d)
    dims = {}
    for bd in bidegree_cone(g, max_coh):
        total = len(monomial_basis(g, bd))
        if total == 0:
            continue
        cut = len(ideal_slice(g, d, bd))
        if total - cut:
            dims[tuple(bd)] = total - cut
    return OmegaTable(g, d, max_coh, dims)


def omega_from_pairing(g: int, cfg: IntegralConfig = None) -> OmegaTable:
    """d = 0 table from ranks of the graded pairing matrices."""
    check_genus(g)
    if cfg is None:
        cfg = IntegralConfig(g)
    max_coh = 6 * g - 6
    dims = {}
    for bd in bidegree_cone(g, max_coh):
        matrix = pairing_matrix(g, bd, cfg)
        if matrix.rows == 0 or matrix.cols == 0:
            continue
        rk, _ = row_reduce(matrix)
        if rk:
            dims[tuple(bd)] = rk
    return OmegaTable(g, 0, max_coh, dims)


def verify_vanishing_corollary(table: OmegaTable) -> bool:
    """Top-Chern vanishing: no dimension at coh >= 2(g-1) below the line
    chern = coh - 2(g-1)."""
    g = table.g
    for (coh, chern), n in table.dims.items():
        if n and coh >= 2 * (g - 1) and chern < coh - 2 * (g - 1):
            return False
    return True


def pairing_kernel_matches_ideal(g: int, bd, cfg: IntegralConfig = None) -> bool:
    """d = 0 coincidence on one bidegree: the relation slice spans exactly
    the kernel of the pairing matrix (containment plus dimension count)."""
    if cfg is None:
        cfg = IntegralConfig(g)
    basis = monomial_basis(g, bd)
    if not basis:
        return True
    index = {mono: i for i, mono in enumerate(basis)}
    matrix = pairing_matrix(g, bd, cfg)
    rk, _ = row_reduce(matrix)
    elements = ideal_slice(g, 0, bd)
    if len(elements) != len(basis) - rk:
        return False
    for x in elements:
        vec = slice_vector(x, index, len(basis))
        image = matrix.transpose().mul_vector(vec)
        if any(image):
            return False
    return True


def ideal_multiplicative_closure_holds(g: int, d: int, max_coh: int = None) -> bool:
    """Guard on the ideal property: multiplying any slice generator by a
    ring generator stays inside the slice of the target bidegree."""
    check_genus(g)
    if max_coh is None:
        max_coh = default_max_coh(g, d)
    gens = [Element.alpha(g), Element.beta(g)] + [Element.psi(g, i) for i in range(1, 2 * g + 1)]
    shifts = [(2, 2), (4, 2)] + [(3, 2)] * (2 * g)
    for bd in bidegree_cone(g, max_coh):
        elements = ideal_slice(g, d, bd)
        if not elements:
            continue
        coh, chern = bd
        for gen, (dc, dch) in zip(gens, shifts):
            target = (coh + dc, chern + dch)
            if target[0] > max_coh:
                continue
            basis = monomial_basis(g, target)
            index = {mono: i for i, mono in enumerate(basis)}
            span = RowSpan(len(basis))
            for y in ideal_slice(g, d, target, check_independent=False):
                span.add(slice_vector(y, index, len(basis)))
            for x in elements:
                prod = gen * x
                if prod.is_zero():
                    continue
                if not span.contains(slice_vector(prod, index, len(basis))):
                    return False
    return True
