"""The rank-two fixed-determinant descendent algebra.

An :class:`Element` is an exact rational linear combination of
super-commutative monomials ``alpha^a * beta^b * psi_S`` where

* ``alpha`` (cohomological degree 2) and ``beta`` (degree 4) are even and
  central,
* ``psi_1, ..., psi_2g`` (degree 3 each) are odd: ``psi_i psi_j = -psi_j
  psi_i`` and ``psi_i^2 = 0``,
* every generator has Chern degree 2.

Monomials are stored canonically with the psi factors sorted ascending; the
Koszul sign of any rearrangement is absorbed into the coefficient.  psi index
sets are kept as bitmasks over ``2g`` bits, so monomial keys stay
machine-word sized for every supported genus.

The module also provides the exterior algebra on ``eps_1, ..., eps_2g``
modelling the cohomology of the Picard variety (:class:`PicClass`), the theta
class, and the substitution ``eps_I -> psi_I``.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

MAX_GENUS = 8

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Bidegree(NamedTuple):
    coh: int
    chern: int


def check_genus(g: int) -> None:
    if not isinstance(g, int) or not 2 <= g <= MAX_GENUS:
        raise ValueError(f"genus must be an integer in [2, {MAX_GENUS}], got {g!r}")


def koszul_sign(mask1: int, mask2: int) -> int:
    """Sign of moving the sorted psi block ``mask2`` past ``mask1``.

    Counts inversions: pairs (i in mask1, j in mask2) with i > j.
    """
    inv = 0
    m2 = mask2
    while m2:
        low = m2 & -m2
        j = low.bit_length() - 1
        inv += (mask1 >> (j + 1)).bit_count()
        m2 ^= low
    return -1 if inv & 1 else 1


def merge_masks(mask1: int, mask2: int):
    """(sign, union) of two psi index sets, or None when they overlap."""
    if mask1 & mask2:
        return None
    return koszul_sign(mask1, mask2), mask1 | mask2


def mask_of(indices) -> int:
    """Bitmask from 1-based psi/eps indices."""
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int):
    """Sorted 1-based indices of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def monomial_bidegree(mono) -> Bidegree:
    a, b, mask = mono
    s = mask.bit_count()
    return Bidegree(2 * a + 4 * b + 3 * s, 2 * (a + b + s))


class Element:
    """Exact element of the descendent algebra at a fixed genus.

    Treated as immutable: all operations build new elements and never mutate
    ``terms`` in place.
    """

    __slots__ = ("g", "terms")

    def __init__(self, g: int, terms=None):
        check_genus(g)
        self.g = g
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def _raw(cls, g: int, terms: dict) -> "Element":
        el = object.__new__(cls)
        el.g = g
        el.terms = terms
        return el

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, g: int) -> "Element":
        return cls(g)

    @classmethod
    def scalar(cls, g: int, c) -> "Element":
        return cls(g, {(0, 0, 0): Fraction(c)})

    @classmethod
    def one(cls, g: int) -> "Element":
        return cls.scalar(g, 1)

    @classmethod
    def alpha(cls, g: int) -> "Element":
        return cls(g, {(1, 0, 0): _ONE})

    @classmethod
    def beta(cls, g: int) -> "Element":
        return cls(g, {(0, 1, 0): _ONE})

    @classmethod
    def psi(cls, g: int, i: int) -> "Element":
        check_genus(g)
        if not 1 <= i <= 2 * g:
            raise ValueError(f"psi index must be in [1, {2 * g}], got {i}")
        return cls(g, {(0, 0, 1 << (i - 1)): _ONE})

    @classmethod
    def monomial(cls, g: int, a: int, b: int, mask: int, coeff=1) -> "Element":
        return cls(g, {(a, b, mask): Fraction(coeff)})

    # ------------------------------------------------------------------
    # ring structure

    def _check(self, other: "Element") -> None:
        if self.g != other.g:
            raise ValueError(f"genus mismatch: {self.g} vs {other.g}")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        t = dict(self.terms)
        for mono, c in other.terms.items():
            s = t.get(mono, _ZERO) + c
            if s:
                t[mono] = s
            else:
                t.pop(mono, None)
        return Element._raw(self.g, t)

    def __neg__(self):
        return Element._raw(self.g, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        t = {}
        for (a1, b1, m1), c1 in self.terms.items():
            for (a2, b2, m2), c2 in other.terms.items():
                if m1 & m2:
                    continue
                sign = koszul_sign(m1, m2)
                mono = (a1 + a2, b1 + b2, m1 | m2)
                c = c1 * c2
                if sign < 0:
                    c = -c
                s = t.get(mono, _ZERO) + c
                if s:
                    t[mono] = s
                else:
                    del t[mono]
        return Element._raw(self.g, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Element":
        c = Fraction(c)
        if not c:
            return Element.zero(self.g)
        return Element._raw(self.g, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Element.one(self.g)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Element) and self.g == other.g and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # ------------------------------------------------------------------
    # gradings

    def bidegree(self) -> Optional[Bidegree]:
        """Common (cohomological, Chern) bidegree, or None when the element
        is zero or inhomogeneous."""
        degs = {monomial_bidegree(m) for m in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def chern_component(self, chern: int) -> "Element":
        return Element._raw(
            self.g,
            {m: c for m, c in self.terms.items() if monomial_bidegree(m).chern == chern},
        )

    # ------------------------------------------------------------------
    # derivations

    def derive(self, var: str) -> "Element":
        """Partial derivative by generator name.

        ``alpha`` and ``beta`` give ordinary derivations.  ``psi<i>`` is the
        left super-derivation: on a sorted monomial containing psi_i at
        (1-based) position p the result carries the sign (-1)^(p-1); zero
        when psi_i is absent.
        """
        if var == "alpha":
            return d_alpha(self)
        if var == "beta":
            return d_beta(self)
        m = re.fullmatch(r"psi(\d+)", var)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= 2 * self.g:
                raise ValueError(f"psi index out of range for genus {self.g}: {var}")
            return d_psi(self, i)
        raise ValueError(f"unknown generator name: {var!r}")

    # ------------------------------------------------------------------

    def sorted_terms(self):
        """Terms in the canonical deterministic order."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (monomial_bidegree(kv[0]), kv[0]),
        )

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element(g={self.g}, {format_element(self)})"


def d_alpha(x: Element) -> Element:
    t = {}
    for (a, b, m), c in x.terms.items():
        if a:
            t[(a - 1, b, m)] = c * a
    return Element._raw(x.g, t)


def d_beta(x: Element) -> Element:
    t = {}
    for (a, b, m), c in x.terms.items():
        if b:
            t[(a, b - 1, m)] = c * b
    return Element._raw(x.g, t)


def d_psi(x: Element, i: int) -> Element:
    bit = 1 << (i - 1)
    below = bit - 1
    t = {}
    for (a, b, m), c in x.terms.items():
        if m & bit:
            sign = -1 if (m & below).bit_count() & 1 else 1
            t[(a, b, m ^ bit)] = c * sign
    return Element._raw(x.g, t)


def gamma(g: int) -> Element:
    """gamma = -2 * sum_i psi_i psi_{i+g}; even, degree (6, 4)."""
    check_genus(g)
    terms = {}
    for i in range(g):
        terms[(0, 0, (1 << i) | (1 << (i + g)))] = Fraction(-2)
    return Element._raw(g, terms)


@lru_cache(maxsize=None)
def gamma_power(g: int, c: int) -> Element:
    if c < 0:
        raise ValueError("negative gamma power")
    if c == 0:
        return Element.one(g)
    return gamma_power(g, c - 1) * gamma(g)


# ----------------------------------------------------------------------
# bidegree slice enumeration


def monomial_basis(g: int, bd) -> list:
    """All monomials (a, b, mask) with the given bidegree, each once.

    Solves 2a + 4b + 3s = coh and 2(a + b + s) = chern; returns an empty
    list when the bidegree is outside the cone.
    """
    check_genus(g)
    coh, chern = bd
    if coh < 0 or chern < 0 or chern % 2:
        return []
    diff = coh - chern  # equals 2b + s
    if diff < 0:
        return []
    out = []
    for s in range(diff % 2, min(2 * g, diff) + 1, 2):
        b = (diff - s) // 2
        a = chern // 2 - b - s
        if a < 0:
            continue
        for combo in itertools.combinations(range(2 * g), s):
            out.append((a, b, mask_of(i + 1 for i in combo)))
    out.sort()
    return out


def chern_filter_basis(g: int, coh: int, ell: int) -> list:
    """All monomials of cohomological degree ``coh`` and Chern degree <= ell."""
    check_genus(g)
    out = []
    if coh < 0:
        return out
    for s in range(0, min(2 * g, coh // 3) + 1):
        rem = coh - 3 * s
        if rem < 0 or rem % 2:
            continue
        for b in range(rem // 4 + 1):
            a2 = rem - 4 * b
            a = a2 // 2
            if a2 % 2:
                continue
            if 2 * (a + b + s) > ell:
                continue
            for combo in itertools.combinations(range(2 * g), s):
                out.append((a, b, mask_of(i + 1 for i in combo)))
    out.sort()
    return out


def bidegree_cone(g: int, max_coh: int):
    """All bidegrees (coh, chern) with coh <= max_coh satisfying
    chern <= coh <= 2 chern (plus (0, 0)), chern even."""
    for coh in range(max_coh + 1):
        lo = (coh + 1) // 2
        for chern in range(lo + (lo % 2), coh + 1, 2):
            yield Bidegree(coh, chern)


# ----------------------------------------------------------------------
# exterior algebra on eps_1..eps_2g (cohomology of the Picard variety)


class PicClass:
    """Exact element of the exterior algebra on eps_1, ..., eps_2g."""

    __slots__ = ("g", "terms")

    def __init__(self, g: int, terms=None):
        check_genus(g)
        self.g = g
        self.terms = {}
        if terms:
            for mask, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[mask] = c

    @classmethod
    def _raw(cls, g, terms):
        el = object.__new__(cls)
        el.g = g
        el.terms = terms
        return el

    @classmethod
    def zero(cls, g):
        return cls(g)

    @classmethod
    def one(cls, g):
        return cls(g, {0: _ONE})

    @classmethod
    def eps(cls, g, i):
        if not 1 <= i <= 2 * g:
            raise ValueError(f"eps index must be in [1, {2 * g}], got {i}")
        return cls(g, {1 << (i - 1): _ONE})

    @classmethod
    def from_mask(cls, g, mask, coeff=1):
        return cls(g, {mask: Fraction(coeff)})

    def _check(self, other):
        if self.g != other.g:
            raise ValueError("genus mismatch")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, _ZERO) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return PicClass._raw(self.g, t)

    def __neg__(self):
        return PicClass._raw(self.g, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    continue
                c = c1 * c2 * koszul_sign(m1, m2)
                mono = m1 | m2
                s = t.get(mono, _ZERO) + c
                if s:
                    t[mono] = s
                else:
                    del t[mono]
        return PicClass._raw(self.g, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return PicClass.zero(self.g)
        return PicClass._raw(self.g, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int):
        out = PicClass.one(self.g)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, PicClass) and self.g == other.g and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def degree(self) -> Optional[int]:
        """Common eps-degree of all terms, or None for zero/inhomogeneous."""
        degs = {m.bit_count() for m in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def __repr__(self):
        if not self.terms:
            return "PicClass(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            names = "".join(f"e{i}" for i in indices_of(m)) or "1"
            bits.append(f"{c}*{names}")
        return "PicClass(" + " + ".join(bits) + ")"


def theta(g: int) -> PicClass:
    """theta = 2 * sum_i eps_i eps_{i+g}; satisfies theta^(g+1) = 0."""
    check_genus(g)
    terms = {}
    for i in range(g):
        terms[(1 << i) | (1 << (i + g))] = Fraction(2)
    return PicClass._raw(g, terms)


@lru_cache(maxsize=None)
def theta_power(g: int, c: int) -> PicClass:
    if c < 0:
        raise ValueError("negative theta power")
    if c == 0:
        return PicClass.one(g)
    return theta_power(g, c - 1) * theta(g)


def exterior_basis(g: int, degree: int) -> list:
    """Masks of the eps monomials of the given degree, ascending."""
    if degree < 0 or degree > 2 * g:
        return []
    masks = [mask_of(i + 1 for i in combo) for combo in itertools.combinations(range(2 * g), degree)]
    masks.sort()
    return masks


def sigma_from_pic(A: PicClass) -> Element:
    """Replace each eps_I term by psi_I with the same coefficient."""
    return Element._raw(A.g, {(0, 0, m): c for m, c in A.terms.items()})


# ----------------------------------------------------------------------
# text grammar (the CLI surface for elements)
#
#   term   ::= [sign] [rational] factor*
#   factor ::= ("alpha" | "beta" | "gamma" | "psi" index) ["^" exponent]
#
# terms joined by "+"/"-", whitespace-insensitive.


class ElementParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<sign>[+\-−])"
    r"|(?P<num>\d+(?:\s*/\s*\d+)?)"
    r"|(?P<name>alpha|beta|gamma|psi\d+)(?:\s*\^\s*(?P<exp>\d+))?"
    r")"
)


def parse_element(text: str, g: int) -> Element:
    """Parse the element grammar, e.g. ``"1/2 alpha^2 + 1/2 beta"``."""
    check_genus(g)
    pos = 0
    n = len(text)
    result = Element.zero(g)
    sign = 1
    coeff = None
    factors = []
    started = False

    def flush():
        nonlocal result, sign, coeff, factors, started
        if not started:
            return
        if coeff is None and not factors:
            raise ElementParseError("empty term")
        term = Element.scalar(g, (coeff if coeff is not None else _ONE) * sign)
        for name, exp in factors:
            if name == "alpha":
                base = Element.alpha(g)
            elif name == "beta":
                base = Element.beta(g)
            elif name == "gamma":
                base = gamma(g)
            else:
                i = int(name[3:])
                if not 1 <= i <= 2 * g:
                    raise ElementParseError(f"psi index out of range for genus {g}: {name}")
                base = Element.psi(g, i)
            term = term * base**exp
        result = result + term
        sign, coeff, factors, started = 1, None, [], False

    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ElementParseError(f"cannot parse element near {text[pos:pos + 20]!r}")
            break
        pos = m.end()
        if m.group("sign"):
            if started:
                flush()
            elif coeff is not None or factors:  # pragma: no cover - defensive
                raise ElementParseError("misplaced sign")
            if m.group("sign") != "+":
                sign = -sign
            started = True
        elif m.group("num"):
            if coeff is not None or factors:
                raise ElementParseError("rational coefficient must precede the factors")
            try:
                coeff = Fraction(m.group("num").replace(" ", ""))
            except ZeroDivisionError:
                raise ElementParseError("zero denominator in coefficient") from None
            started = True
        else:
            factors.append((m.group("name"), int(m.group("exp") or 1)))
            started = True
    if started:
        flush()
    elif not result.terms and not text.strip():
        raise ElementParseError("empty input")
    return result


def _format_coeff(c: Fraction) -> str:
    return str(c)


def format_element(x: Element) -> str:
    """Deterministic rendering in the element grammar."""
    if not x.terms:
        return "0"
    parts = []
    for (a, b, mask), c in x.sorted_terms():
        factors = []
        if a:
            factors.append("alpha" + (f"^{a}" if a > 1 else ""))
        if b:
            factors.append("beta" + (f"^{b}" if b > 1 else ""))
        for i in indices_of(mask):
            factors.append(f"psi{i}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, _format_coeff(mag))
        body = " ".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
