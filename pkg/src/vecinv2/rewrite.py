"""Rewriting products of traces and certifying trace-linear relations.

Two procedures live here, and both return replayable logs rather than
bare answers.

``normal_form`` repeatedly eliminates products of trace symbols: while
some term carries at least two trace factors, the largest such term is
picked (by the canonical term order), its two largest trace factors are
handed to ``type_iii_relation``, and the resulting element — which
starts with exactly that product — is added back in, scaled by the rest
of the term.  Because coefficients live in GF(2), the add cancels the
offending product and replaces it with the lower terms of the relation.
The result has at most one trace factor per term.

``linear_reduce`` goes the other way: given a trace-linear element of
the presentation ring that evaluates to zero, it writes the element as
an explicit combination of the cubic-and-up relations.  The engine of
the descent is the *summand lead*: the leading monomial of the image of
a single term x^I N^J Tr(A), which can be read off without expanding
anything,

    lead pi(x^I N^J Tr(A)) = x^I y^(2J) x_a y^(A-a),   a = min A,

because the norms lead with squares and a trace leads with the smallest
x times the remaining y's.  Distinct trace-free terms have distinct
summand leads, and a trace-free lead has every y-exponent even while a
trace lead has an odd one, so the maximal summand lead of a nonzero
element that evaluates to zero is always shared by an even number of
trace-carrying terms (two or more).  Any two of them pin down a subset
C and a monomial multiplier so that multiplier * type_i_relation(C)
cancels both; repeating drives the element to zero and the collected
multipliers form the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import (
    Monomial,
    Subset,
    ZeroPolynomialError,
    cardinality,
    min_index,
    monomial_key,
    monomial_text,
    singleton,
    subset_to_bits,
    union,
)
from .qring import (
    QMon,
    QPoly,
    evaluate,
    formal_trace,
    make_qmon,
    qmon_degree,
    qmon_key,
    qmon_trace_degree,
)
from .relations import (
    Relation,
    VacuousRelationError,
    type_i_relation,
    type_iii_relation,
)

__all__ = [
    "NotTraceLinearError",
    "NotARelationError",
    "ReductionStep",
    "ReductionTrace",
    "normal_form",
    "reduce_product",
    "summand_lead",
    "max_summand_lead",
    "LinearStep",
    "LinearCertificate",
    "linear_reduce",
]


class NotTraceLinearError(ValueError):
    """Raised when an argument has a term with two or more trace factors."""


class NotARelationError(ValueError):
    """Raised when an argument does not evaluate to zero (or the descent
    would need it to)."""


# ---------------------------------------------------------------------------
# eliminating products of traces


@dataclass(frozen=True)
class ReductionStep:
    """One rewrite: ``term`` was the reduced term, ``relation`` the quadratic
    relation applied to its two largest trace factors, ``multiplier`` the
    leftover monomial, and ``measure`` the (degree, trace degree) of the
    term, logged so that a trace can be checked for monotonicity."""

    term: QMon
    relation: Relation
    multiplier: QMon
    measure: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "term": str(QPoly.monomial(self.term)),
            "family": self.relation.family,
            "A": subset_to_bits(self.relation.a),
            "B": subset_to_bits(self.relation.b),
            "multiplier": str(QPoly.monomial(self.multiplier)),
            "degree": self.measure[0],
            "trace_degree": self.measure[1],
        }


@dataclass(frozen=True)
class ReductionTrace:
    """A replayable normal-form computation."""

    start: QPoly
    result: QPoly
    steps: tuple[ReductionStep, ...]

    def replay(self) -> QPoly:
        """Re-run the logged steps from ``start``; equals ``result``."""
        current = self.start
        for step in self.steps:
            current = current + QPoly.monomial(step.multiplier) * step.relation.element
        return current

    def verify(self) -> bool:
        return (
            self.replay() == self.result
            and self.result.is_trace_linear()
            and evaluate(self.start) == evaluate(self.result)
        )

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "m": self.start.m,
            "start": str(self.start),
            "result": str(self.result),
            "steps": [s.to_json() for s in self.steps],
        }


def _trace_factor_sort_key(a: Subset):
    return (cardinality(a), a)


def _split_two_largest(term: QMon) -> tuple[Subset, Subset, tuple]:
    factors = sorted(term.traces, key=_trace_factor_sort_key, reverse=True)
    first, second = factors[0], factors[1]
    rest = list(term.traces)
    rest.remove(first)
    rest.remove(second)
    return first, second, tuple(rest)


def normal_form(q: QPoly) -> ReductionTrace:
    """Rewrite until every term has at most one trace factor.

    Each pass reduces the largest offending term.  The logged
    ``measure`` sequence is non-increasing, and the rewrite of a term
    strictly shrinks the pair (trace degree, m * trace degree - sum of
    squared factor sizes) for each replacement term, which is what makes
    any schedule terminate.
    """
    start = q
    steps: list[ReductionStep] = []
    last_measure: tuple[int, int] | None = None
    while True:
        heavy = [t for t in q.terms if len(t.traces) >= 2]
        if not heavy:
            break
        term = max(heavy, key=qmon_key)
        first, second, rest = _split_two_largest(term)
        relation = type_iii_relation(first, second)
        multiplier = make_qmon(term.xe, term.ne, rest)
        q = q + QPoly.monomial(multiplier) * relation.element
        measure = (qmon_degree(term), qmon_trace_degree(term))
        assert last_measure is None or measure <= last_measure
        last_measure = measure
        steps.append(ReductionStep(term, relation, multiplier, measure))
    return ReductionTrace(start=start, result=q, steps=tuple(steps))


def reduce_product(a: Subset, b: Subset) -> ReductionTrace:
    """Normal form of the product of two formal traces."""
    if cardinality(a) < 2 or cardinality(b) < 2:
        raise VacuousRelationError(
            "reduce_product wants two subsets with at least two members each")
    return normal_form(formal_trace(a) * formal_trace(b))


# ---------------------------------------------------------------------------
# certifying trace-linear relations


def summand_lead(term: QMon) -> Monomial:
    """Leading monomial of the image of a single presentation-ring term,
    computed from the formula rather than by expanding the image."""
    m = len(term.xe)
    exps = [0] * (2 * m)
    for i in range(m):
        exps[2 * i + 1] = term.xe[i]
        exps[2 * i] = 2 * term.ne[i]
    if term.traces:
        a = term.traces[0]
        low = min_index(a)
        exps[2 * low + 1] += 1
        for i in range(m):
            if a[i] and i != low:
                exps[2 * i] += 1
    return tuple(exps)


def max_summand_lead(h: QPoly) -> Monomial:
    """Largest summand lead over the terms of a trace-linear element."""
    if not h.terms:
        raise ZeroPolynomialError("zero element has no summand lead")
    if not h.is_trace_linear():
        raise NotTraceLinearError("summand leads need at most one trace per term")
    return max((summand_lead(t) for t in h.terms), key=monomial_key)


def _lead_achievers(h: QPoly) -> tuple[Monomial, list[QMon]]:
    best: Monomial | None = None
    best_key = None
    achievers: list[QMon] = []
    for term in h.terms:
        mono = summand_lead(term)
        key = monomial_key(mono)
        if best is None or key > best_key:
            best, best_key, achievers = mono, key, [term]
        elif key == best_key:
            achievers.append(term)
    assert best is not None
    return best, achievers


@dataclass(frozen=True)
class LinearStep:
    """One descent step: the cubic-and-up relation on ``subset`` was scaled
    by ``multiplier`` to cancel the two smallest terms achieving the lead
    monomial ``lead`` (``achievers`` counts how many terms achieved it)."""

    subset: Subset
    multiplier: QMon
    lead: Monomial
    achievers: int

    def to_json(self) -> dict:
        return {
            "subset": subset_to_bits(self.subset),
            "multiplier": str(QPoly.monomial(self.multiplier)),
            "lead": monomial_text(self.lead),
            "achievers": self.achievers,
        }


@dataclass(frozen=True)
class LinearCertificate:
    """An expression of ``start`` as a combination of the relations
    ``type_i_relation(C)`` for the subsets C in ``coefficients``."""

    start: QPoly
    coefficients: dict[Subset, QPoly] = field(compare=False)
    steps: tuple[LinearStep, ...] = ()

    def combination(self) -> QPoly:
        total = QPoly.zero(self.start.m)
        for subset, coefficient in self.coefficients.items():
            total = total + coefficient * type_i_relation(subset).element
        return total

    def verify(self) -> bool:
        return self.combination() == self.start

    def sorted_subsets(self) -> list[Subset]:
        return sorted(self.coefficients, key=lambda a: (cardinality(a), a))

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "m": self.start.m,
            "start": str(self.start),
            "coefficients": {
                subset_to_bits(a): str(self.coefficients[a])
                for a in self.sorted_subsets()
            },
            "steps": [s.to_json() for s in self.steps],
        }


def linear_reduce(h: QPoly) -> LinearCertificate:
    """Write a trace-linear element that evaluates to zero as an explicit
    combination of the relations on three-or-more-member subsets.

    Raises ``NotTraceLinearError`` if some term has two trace factors and
    ``NotARelationError`` if the element does not evaluate to zero.
    """
    if not h.is_trace_linear():
        raise NotTraceLinearError("linear_reduce needs at most one trace per term")
    image = evaluate(h)
    if image.terms:
        raise NotARelationError(
            "element does not evaluate to zero; image contains "
            + monomial_text(image.lead_term()))
    m = h.m
    coefficients: dict[Subset, QPoly] = {}
    steps: list[LinearStep] = []
    current = h
    last_rank = None
    while current.terms:
        lead, achievers = _lead_achievers(current)
        with_trace = [t for t in achievers if t.traces]
        # A trace-free term has all even y-exponents in its summand lead
        # and no other term shares that lead, so it can never top a
        # combination that evaluates to zero.
        if len(with_trace) != len(achievers) or len(with_trace) < 2:
            raise NotARelationError(
                "descent stalled at " + monomial_text(lead)
                + f" with {len(achievers)} achieving term(s)")
        with_trace.sort(key=lambda t: (t.traces[0], t.xe))
        first, second = with_trace[0], with_trace[1]
        other = min_index(second.traces[0])
        subset = union(first.traces[0], singleton(m, other))
        xe = list(first.xe)
        assert xe[other] >= 1
        xe[other] -= 1
        multiplier = make_qmon(tuple(xe), first.ne, ())
        relation = type_i_relation(subset)
        scaled = QPoly.monomial(multiplier)
        current = current + scaled * relation.element
        coefficients[subset] = coefficients.get(subset, QPoly.zero(m)) + scaled
        rank = (monomial_key(lead), len(achievers))
        assert last_rank is None or rank < last_rank
        last_rank = rank
        steps.append(LinearStep(subset, multiplier, lead, len(achievers)))
    coefficients = {a: c for a, c in coefficients.items() if c.terms}
    return LinearCertificate(start=h, coefficients=coefficients,
                             steps=tuple(steps))
