"""Shared helpers: seeded random elements of the polynomial and
presentation rings, sized to keep the property tests fast."""

import random

from vecinv2.poly import Poly, all_subsets
from vecinv2.qring import QPoly, make_qmon


def random_monomial(rng: random.Random, m: int, max_degree: int = 6):
    exps = [0] * (2 * m)
    degree = rng.randrange(max_degree + 1)
    for _ in range(degree):
        exps[rng.randrange(2 * m)] += 1
    return tuple(exps)


def random_poly(rng: random.Random, m: int, max_terms: int = 4,
                max_degree: int = 6) -> Poly:
    monos = [random_monomial(rng, m, max_degree)
             for _ in range(rng.randrange(max_terms + 1))]
    return Poly.from_terms(m, monos)


def random_qmon(rng: random.Random, m: int, max_trace_degree: int = 8,
                max_exp: int = 2):
    traces = []
    pool = all_subsets(m, min_size=2)
    budget = max_trace_degree
    while pool and budget >= 2 and rng.random() < 0.6:
        choice = rng.choice(pool)
        if sum(choice) > budget:
            break
        traces.append(choice)
        budget -= sum(choice)
    xe = tuple(rng.randrange(max_exp + 1) for _ in range(m))
    ne = tuple(rng.randrange(max_exp + 1) for _ in range(m))
    return make_qmon(xe, ne, traces)


def random_qpoly(rng: random.Random, m: int, max_terms: int = 4,
                 max_trace_degree: int = 8) -> QPoly:
    terms = [random_qmon(rng, m, max_trace_degree)
             for _ in range(rng.randrange(max_terms + 1))]
    return QPoly.from_terms(m, terms)
