"""Sparse polynomial arithmetic over GF(2) in paired variables.

The ambient ring is F2[y1, x1, y2, x2, ..., ym, xm] for a runtime width
m.  A monomial is a tuple of 2m natural exponents listed in the fixed
variable sequence y1, x1, y2, x2, ..., ym, xm; position 2*i holds the
exponent of y_{i+1} and position 2*i+1 the exponent of x_{i+1}.  A
polynomial is a frozenset of monomials: over the two-element field every
stored monomial has coefficient 1 and addition is symmetric difference.

Monomials are compared in graded reverse lexicographic order induced by
y1 > x1 > y2 > x2 > ... > ym > xm: higher total degree wins, and among
equal degrees the monomial whose rightmost nonzero exponent difference
is negative is the larger one.

Zero/one tuples of length m double as subsets of the m copies and as
exponent sequences, so ``x_power(a)`` for a subset ``a`` is the square
free monomial x^a.  The helpers in the first half of this module give
the small calculus of such subsets (intersection, difference, least
member, submask enumeration) used throughout the package.  Indices are
0-based internally; only the text formats use 1-based variable names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

Monomial = Tuple[int, ...]
Subset = Tuple[int, ...]

__all__ = [
    "DimensionMismatch",
    "ZeroPolynomialError",
    "Monomial",
    "Subset",
    "Poly",
    "monomial_key",
    "monomial_degree",
    "monomial_text",
    "compare_monomials",
    "cardinality",
    "intersect",
    "setminus",
    "union",
    "is_subset_of",
    "is_disjoint",
    "singleton",
    "min_index",
    "drop_min",
    "submasks",
    "strict_submasks",
    "all_subsets",
    "subset_to_bits",
    "bits_to_subset",
    "int_submasks",
]


class DimensionMismatch(ValueError):
    """Raised when operands carry different variable counts."""


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs at least one term."""


# ---------------------------------------------------------------------------
# subsets of {0, ..., m-1}, stored as 0/1 tuples of length m
# ---------------------------------------------------------------------------

def _check_same_width(a: Subset, b: Subset) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"subset widths differ: {len(a)} vs {len(b)}")


def cardinality(a: Subset) -> int:
    return sum(a)


def intersect(a: Subset, b: Subset) -> Subset:
    _check_same_width(a, b)
    return tuple(u & v for u, v in zip(a, b))


def setminus(a: Subset, b: Subset) -> Subset:
    _check_same_width(a, b)
    return tuple(u & (1 - v) for u, v in zip(a, b))


def union(a: Subset, b: Subset) -> Subset:
    _check_same_width(a, b)
    return tuple(u | v for u, v in zip(a, b))


def is_subset_of(a: Subset, b: Subset) -> bool:
    _check_same_width(a, b)
    return all(u <= v for u, v in zip(a, b))


def is_disjoint(a: Subset, b: Subset) -> bool:
    _check_same_width(a, b)
    return all(u & v == 0 for u, v in zip(a, b))


def singleton(m: int, i: int) -> Subset:
    """The one-element subset {i} (0-based)."""
    if not 0 <= i < m:
        raise ValueError(f"index {i} out of range for width {m}")
    return tuple(1 if k == i else 0 for k in range(m))


def min_index(a: Subset) -> int:
    """Least member of a nonempty subset."""
    for i, bit in enumerate(a):
        if bit:
            return i
    raise ValueError("empty subset has no least member")


def drop_min(a: Subset) -> Subset:
    """The subset with its least member removed."""
    i = min_index(a)
    return a[:i] + (0,) + a[i + 1:]


def _mask(a: Subset) -> int:
    m = 0
    for i, bit in enumerate(a):
        if bit:
            m |= 1 << i
    return m


def _unmask(mask: int, width: int) -> Subset:
    return tuple((mask >> i) & 1 for i in range(width))


def int_submasks(mask: int) -> Iterator[int]:
    """All bitwise submasks of ``mask``, in decreasing numeric order.

    These are exactly the j with an odd binomial(mask, j), which makes
    this the expansion rule for (y + x)^mask over GF(2).
    """
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def submasks(a: Subset) -> Iterator[Subset]:
    """All subsets L with L <= a, including a itself and the empty set."""
    width = len(a)
    for s in int_submasks(_mask(a)):
        yield _unmask(s, width)


def strict_submasks(a: Subset) -> Iterator[Subset]:
    """All subsets L with L <= a and L != a (the empty set included)."""
    amask = _mask(a)
    width = len(a)
    for s in int_submasks(amask):
        if s != amask:
            yield _unmask(s, width)


def all_subsets(m: int, min_size: int = 0) -> tuple[Subset, ...]:
    """Every subset of {0..m-1} with at least ``min_size`` members,
    sorted by (cardinality, bits)."""
    out = [_unmask(s, m) for s in range(1 << m)]
    out = [a for a in out if cardinality(a) >= min_size]
    out.sort(key=lambda a: (cardinality(a), a))
    return tuple(out)


def subset_to_bits(a: Subset) -> str:
    return "".join(str(bit) for bit in a)


def bits_to_subset(text: str) -> Subset:
    if not text or any(c not in "01" for c in text):
        raise ValueError(f"not a 0/1 bitstring: {text!r}")
    return tuple(int(c) for c in text)


# ---------------------------------------------------------------------------
# monomial order
# ---------------------------------------------------------------------------

def monomial_degree(mono: Monomial) -> int:
    return sum(mono)


def monomial_key(mono: Monomial):
    """Sort key realizing the graded reverse lexicographic order.

    Tuples compare by total degree first; ties are broken by the negated
    reversed exponent vector, which makes the rightmost difference
    decisive with the intended sign.
    """
    return (sum(mono), tuple(-e for e in reversed(mono)))


def compare_monomials(a: Monomial, b: Monomial) -> int:
    """Return -1, 0, or 1 as a <, =, > b in the monomial order."""
    if len(a) != len(b):
        raise DimensionMismatch(f"monomial widths differ: {len(a)} vs {len(b)}")
    ka, kb = monomial_key(a), monomial_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

_TERM_FACTOR = re.compile(r"([xy])(\d+)(?:\^(\d+))?\Z")


def _collect(monos: Iterable[Monomial]) -> frozenset:
    seen: dict = {}
    for mono in monos:
        seen[mono] = seen.get(mono, 0) ^ 1
    return frozenset(k for k, v in seen.items() if v)


@dataclass(frozen=True)
class Poly:
    """A polynomial over GF(2); ``terms`` is a frozenset of monomials."""

    m: int
    terms: frozenset

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(m: int) -> "Poly":
        return Poly(m, frozenset())

    @staticmethod
    def one(m: int) -> "Poly":
        return Poly(m, frozenset([(0,) * (2 * m)]))

    @staticmethod
    def monomial(m: int, exps: Monomial) -> "Poly":
        if len(exps) != 2 * m:
            raise DimensionMismatch(f"expected {2 * m} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        return Poly(m, frozenset([tuple(exps)]))

    @staticmethod
    def from_terms(m: int, monos: Iterable[Monomial]) -> "Poly":
        """Build from monomials with mod-2 cancellation of repeats."""
        monos = [tuple(mo) for mo in monos]
        for mo in monos:
            if len(mo) != 2 * m:
                raise DimensionMismatch(f"expected {2 * m} exponents, got {len(mo)}")
        return Poly(m, _collect(monos))

    @staticmethod
    def y_variable(m: int, i: int) -> "Poly":
        exps = [0] * (2 * m)
        exps[2 * i] = 1
        return Poly.monomial(m, tuple(exps))

    @staticmethod
    def x_variable(m: int, i: int) -> "Poly":
        exps = [0] * (2 * m)
        exps[2 * i + 1] = 1
        return Poly.monomial(m, tuple(exps))

    @staticmethod
    def x_power(a: Subset) -> "Poly":
        """The monomial x^a for an exponent sequence a (one per copy)."""
        exps = [0] * (2 * len(a))
        for i, e in enumerate(a):
            exps[2 * i + 1] = e
        return Poly.monomial(len(a), tuple(exps))

    @staticmethod
    def y_power(a: Subset) -> "Poly":
        exps = [0] * (2 * len(a))
        for i, e in enumerate(a):
            exps[2 * i] = e
        return Poly.monomial(len(a), tuple(exps))

    # -- ring operations ----------------------------------------------------

    def _check_m(self, other: "Poly") -> None:
        if self.m != other.m:
            raise DimensionMismatch(f"mixed widths: m={self.m} vs m={other.m}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_m(other)
        return Poly(self.m, self.terms ^ other.terms)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_m(other)
        acc: dict = {}
        for a in self.terms:
            for b in other.terms:
                key = tuple(u + v for u, v in zip(a, b))
                acc[key] = acc.get(key, 0) ^ 1
        return Poly(self.m, frozenset(k for k, v in acc.items() if v))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.one(self.m)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- inspection ---------------------------------------------------------

    def lead_term(self) -> Monomial:
        """Largest monomial in the order; errors on the zero polynomial."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no lead term")
        return max(self.terms, key=monomial_key)

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return max(sum(t) for t in self.terms)

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or None if terms mix degrees."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        degs = {sum(t) for t in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=monomial_key, reverse=True)

    # -- text format --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_term_text(t) for t in self.sorted_terms())

    @staticmethod
    def parse(m: int, text: str) -> "Poly":
        """Inverse of ``str``; accepts terms and factors in any order."""
        body = text.strip()
        if body == "0":
            return Poly.zero(m)
        monos = []
        for chunk in body.split("+"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError(f"empty term in {text!r}")
            monos.append(_parse_term(m, chunk))
        return Poly(m, _collect(monos))


def monomial_text(mono: Monomial) -> str:
    """Render a single monomial the way ``Poly.__str__`` would."""
    return _term_text(mono)


def _term_text(mono: Monomial) -> str:
    m = len(mono) // 2
    parts = []
    for i in range(m):
        e = mono[2 * i + 1]
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    for i in range(m):
        e = mono[2 * i]
        if e == 1:
            parts.append(f"y{i + 1}")
        elif e > 1:
            parts.append(f"y{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def _parse_term(m: int, chunk: str) -> Monomial:
    exps = [0] * (2 * m)
    for factor in chunk.split("*"):
        factor = factor.strip()
        if factor == "1":
            continue
        match = _TERM_FACTOR.match(factor)
        if not match:
            raise ValueError(f"bad factor {factor!r}")
        name, idx, exp = match.group(1), int(match.group(2)), match.group(3)
        if not 1 <= idx <= m:
            raise ValueError(f"variable index {idx} out of range for m={m}")
        e = int(exp) if exp else 1
        pos = 2 * (idx - 1) + (1 if name == "x" else 0)
        exps[pos] += e
    return tuple(exps)
