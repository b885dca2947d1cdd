"""The presentation ring for the invariant generators.

Elements here are polynomials in formal symbols x_i (degree 1), N_i
(degree 2), and Tr(A) for subsets A with at least two members (degree
|A|).  A monomial is a ``QMon`` triple: x exponents, N exponents, and a
multiset of trace subsets stored as a descending-sorted tuple.  The
``evaluate`` map substitutes the concrete invariants for the symbols;
its kernel is the ideal of relations among the generators.

Singleton and empty trace symbols are never stored: ``formal_trace``
rewrites Tr({i}) to x_i and Tr(empty) to 0, so constructors built on it
only ever carry subsets of size two or more.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import invariants
from .poly import (
    DimensionMismatch,
    Poly,
    Subset,
    ZeroPolynomialError,
    bits_to_subset,
    cardinality,
    int_submasks,
    subset_to_bits,
)

__all__ = [
    "QMon",
    "QPoly",
    "make_qmon",
    "formal_trace",
    "evaluate",
    "qmon_degree",
    "qmon_trace_degree",
    "qmon_key",
]


class QMon(NamedTuple):
    xe: tuple  # m exponents for the x symbols
    ne: tuple  # m exponents for the N symbols
    traces: tuple  # descending-sorted subsets, each with >= 2 members


def make_qmon(xe: Iterable[int], ne: Iterable[int], traces: Iterable[Subset]) -> QMon:
    xe, ne = tuple(xe), tuple(ne)
    traces = tuple(sorted((tuple(a) for a in traces), reverse=True))
    if len(xe) != len(ne):
        raise DimensionMismatch("x and N exponent widths differ")
    for a in traces:
        if len(a) != len(xe):
            raise DimensionMismatch("trace subset width differs from exponent width")
        if cardinality(a) < 2:
            raise ValueError(f"trace symbol needs >= 2 members, got {a}")
    return QMon(xe, ne, traces)


def qmon_degree(q: QMon) -> int:
    return sum(q.xe) + 2 * sum(q.ne) + sum(cardinality(a) for a in q.traces)


def qmon_trace_degree(q: QMon) -> int:
    return sum(cardinality(a) for a in q.traces)


def qmon_key(q: QMon):
    """Canonical total order on monomials, used for printing and for
    choosing which term a rewrite touches first."""
    return (qmon_degree(q), qmon_trace_degree(q), q.traces, q.ne, q.xe)


def _collect(terms: Iterable[QMon]) -> frozenset:
    acc: dict = {}
    for t in terms:
        acc[t] = acc.get(t, 0) ^ 1
    return frozenset(k for k, v in acc.items() if v)


@dataclass(frozen=True)
class QPoly:
    """A polynomial in the formal generator symbols, over GF(2)."""

    m: int
    terms: frozenset

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(m: int) -> "QPoly":
        return QPoly(m, frozenset())

    @staticmethod
    def one(m: int) -> "QPoly":
        return QPoly(m, frozenset([QMon((0,) * m, (0,) * m, ())]))

    @staticmethod
    def from_terms(m: int, terms: Iterable[QMon]) -> "QPoly":
        terms = list(terms)
        for t in terms:
            if len(t.xe) != m:
                raise DimensionMismatch(f"expected width {m}, got {len(t.xe)}")
        return QPoly(m, _collect(terms))

    @staticmethod
    def monomial(mon: QMon) -> "QPoly":
        return QPoly(len(mon.xe), frozenset([mon]))

    @staticmethod
    def x_power(exps: Subset) -> "QPoly":
        m = len(exps)
        return QPoly.monomial(make_qmon(exps, (0,) * m, ()))

    @staticmethod
    def n_power(exps: Subset) -> "QPoly":
        m = len(exps)
        return QPoly.monomial(make_qmon((0,) * m, exps, ()))

    @staticmethod
    def trace_symbol(a: Subset) -> "QPoly":
        m = len(a)
        return QPoly.monomial(make_qmon((0,) * m, (0,) * m, (tuple(a),)))

    # -- ring operations ----------------------------------------------------

    def _check_m(self, other: "QPoly") -> None:
        if self.m != other.m:
            raise DimensionMismatch(f"mixed widths: m={self.m} vs m={other.m}")

    def __add__(self, other: "QPoly") -> "QPoly":
        self._check_m(other)
        return QPoly(self.m, self.terms ^ other.terms)

    def __mul__(self, other: "QPoly") -> "QPoly":
        self._check_m(other)
        acc: dict = {}
        for s in self.terms:
            for t in other.terms:
                key = QMon(
                    tuple(u + v for u, v in zip(s.xe, t.xe)),
                    tuple(u + v for u, v in zip(s.ne, t.ne)),
                    tuple(sorted(s.traces + t.traces, reverse=True)),
                )
                acc[key] = acc.get(key, 0) ^ 1
        return QPoly(self.m, frozenset(k for k, v in acc.items() if v))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- grading ------------------------------------------------------------

    def degree(self) -> int | None:
        """Common degree of all terms, or None when degrees mix."""
        if not self.terms:
            raise ZeroPolynomialError("zero element has no degree")
        degs = {qmon_degree(t) for t in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def trace_degree(self) -> int:
        """Largest total trace weight of any term (x and N weigh zero)."""
        if not self.terms:
            raise ZeroPolynomialError("zero element has no trace degree")
        return max(qmon_trace_degree(t) for t in self.terms)

    def is_trace_linear(self) -> bool:
        """True when no term carries more than one trace factor."""
        return all(len(t.traces) <= 1 for t in self.terms)

    def sorted_terms(self) -> list[QMon]:
        return sorted(self.terms, key=qmon_key, reverse=True)

    # -- text format --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_qterm_text(t) for t in self.sorted_terms())

    @staticmethod
    def parse(m: int, text: str) -> "QPoly":
        body = text.strip()
        if body == "0":
            return QPoly.zero(m)
        terms = []
        for chunk in body.split("+"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError(f"empty term in {text!r}")
            terms.append(_parse_qterm(m, chunk))
        return QPoly(m, _collect(terms))


def formal_trace(a: Subset) -> QPoly:
    """Tr(a) with the degenerate cases rewritten away: the empty subset
    gives 0, a singleton {i} gives the symbol x_i."""
    k = cardinality(a)
    m = len(a)
    if k == 0:
        return QPoly.zero(m)
    if k == 1:
        return QPoly.x_power(a)
    return QPoly.trace_symbol(a)


# ---------------------------------------------------------------------------
# evaluation onto the invariant ring
# ---------------------------------------------------------------------------

def _norm_monomial_poly(m: int, xe: tuple, ne: tuple) -> Poly:
    """Expand x^xe * prod N_i^(ne_i) as a concrete polynomial.

    N^k = y^k (y + x)^k, so each factor contributes y^(k+j) x^(k-j) over
    the binary submasks j of k.
    """
    base = [0] * (2 * m)
    for i, e in enumerate(xe):
        base[2 * i + 1] = e
    hot = [i for i in range(m) if ne[i]]
    if not hot:
        return Poly.monomial(m, tuple(base))
    choices = [list(int_submasks(ne[i])) for i in hot]
    monos = []
    for combo in itertools.product(*choices):
        mono = list(base)
        for i, j in zip(hot, combo):
            mono[2 * i] = ne[i] + j
            mono[2 * i + 1] += ne[i] - j
        monos.append(tuple(mono))
    return Poly(m, frozenset(monos))


def evaluate(q: QPoly) -> Poly:
    """Substitute the concrete invariants for the formal symbols."""
    total = Poly.zero(q.m)
    for t in q.terms:
        img = _norm_monomial_poly(q.m, t.xe, t.ne)
        for a in t.traces:
            img = img * invariants.transfer(a)
        total = total + img
    return total


# ---------------------------------------------------------------------------
# text helpers
# ---------------------------------------------------------------------------

_QFACTOR = re.compile(
    r"(?:x(\d+)|N(\d+)|Tr\(([01]+)\))(?:\^(\d+))?\Z"
)


def _qterm_text(t: QMon) -> str:
    parts = []
    for i, e in enumerate(t.xe):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    for i, e in enumerate(t.ne):
        if e == 1:
            parts.append(f"N{i + 1}")
        elif e > 1:
            parts.append(f"N{i + 1}^{e}")
    idx = 0
    while idx < len(t.traces):
        a = t.traces[idx]
        run = 1
        while idx + run < len(t.traces) and t.traces[idx + run] == a:
            run += 1
        name = f"Tr({subset_to_bits(a)})"
        parts.append(name if run == 1 else f"{name}^{run}")
        idx += run
    return "*".join(parts) if parts else "1"


def _parse_qterm(m: int, chunk: str) -> QMon:
    xe = [0] * m
    ne = [0] * m
    traces: list = []
    for factor in chunk.split("*"):
        factor = factor.strip()
        if factor == "1":
            continue
        match = _QFACTOR.match(factor)
        if not match:
            raise ValueError(f"bad factor {factor!r}")
        xi, ni, bits, exp = match.groups()
        e = int(exp) if exp else 1
        if xi is not None:
            idx = int(xi)
            if not 1 <= idx <= m:
                raise ValueError(f"variable index {idx} out of range for m={m}")
            xe[idx - 1] += e
        elif ni is not None:
            idx = int(ni)
            if not 1 <= idx <= m:
                raise ValueError(f"variable index {idx} out of range for m={m}")
            ne[idx - 1] += e
        else:
            a = bits_to_subset(bits)
            if len(a) != m:
                raise ValueError(f"subset width {len(a)} differs from m={m}")
            traces.extend([a] * e)
    return make_qmon(xe, ne, traces)
