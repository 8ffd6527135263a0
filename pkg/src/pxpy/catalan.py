"""Consecutive perfect powers and the square-minus-prime-power obstruction.

Mihailescu's theorem (Catalan's conjecture) says a^x - b^y = 1 with all of
a, b, x, y > 1 has exactly one solution: 3^2 - 2^3 = 1. The classifier leans
on that fact twice, so this module both evaluates such instances directly
and re-derives the fact by bounded search, keeping the repository from
resting on an unchecked citation.

All searches are serial and emit sorted results, so output is deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .arithmetic import integer_root, is_prime
from .classifier import EquationInstance, SolutionTriple
from .errors import InternalInconsistencyError
from .oracle import SearchBox, SearchReport

__all__ = [
    "CatalanInstance",
    "catalan_holds",
    "lemma2_no_solutions",
    "search_catalan",
    "solve_catalan_constrained",
]


@dataclass(frozen=True, slots=True)
class CatalanInstance:
    """The query: does a^x - b^y = 1 hold?"""

    a: int
    b: int
    x: int
    y: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.x, self.y) < 0:
            raise ValueError("all fields must be non-negative")


def catalan_holds(inst: CatalanInstance) -> bool:
    """True iff a^x - b^y = 1, evaluated exactly."""
    return inst.a**inst.x == inst.b**inst.y + 1


def solve_catalan_constrained(k: int, base: int, max_exponent: int) -> list[int]:
    """All t with 2 <= t <= max_exponent and k^2 - base^t = 1, by direct search.

    By Mihailescu's theorem the answer is [3] exactly when (k, base) = (3, 2)
    and [] otherwise; this searches instead of pattern-matching so it doubles
    as an independent check of the classifier's reductions.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if base < 2:
        raise ValueError("base must be >= 2")
    target = k * k - 1
    hits = []
    power = base * base
    t = 2
    while t <= max_exponent and power <= target:
        if power == target:
            hits.append(t)
        power *= base
        t += 1
    return hits


def search_catalan(a_max: int, b_max: int, x_max: int, y_max: int) -> list[CatalanInstance]:
    """Every (a, b, x, y) with 2 <= a <= a_max, ..., 2 <= y <= y_max and a^x - b^y = 1.

    Precomputes all a^x values into a lookup table, then probes b^y + 1
    against it; sorted by (a, b, x, y).
    """
    powers: dict[int, list[tuple[int, int]]] = {}
    for a in range(2, a_max + 1):
        value = a * a
        for x in range(2, x_max + 1):
            powers.setdefault(value, []).append((a, x))
            value *= a
    found = []
    for b in range(2, b_max + 1):
        value = b * b
        for y in range(2, y_max + 1):
            for a, x in powers.get(value + 1, ()):
                found.append(CatalanInstance(a, b, x, y))
            value *= b
    found.sort(key=lambda inst: (inst.a, inst.b, inst.x, inst.y))
    return found


def lemma2_no_solutions(p: int, x_max: int) -> SearchReport:
    """Exhaustively confirm that p^x + 1 = z^2 has no solution for x <= x_max.

    Requires p prime and p > 3, for which the equation is insolvable: x = 0
    gives z^2 = 2, and x >= 1 would make z^2 - p^x = 1 a second consecutive
    perfect power pair unless x = 1, where (z-1)(z+1) = p contradicts p
    prime. The returned report therefore always carries an empty solution
    list; a hit raises InternalInconsistencyError, flagging a bug.
    """
    if x_max < 0:
        raise ValueError("x_max must be >= 0")
    if p <= 3 or not is_prime(p):
        raise ValueError("p must be a prime greater than 3")
    started = time.perf_counter()
    hits = []
    value = 1  # p^x, starting at x = 0
    for x in range(x_max + 1):
        result = integer_root(value + 1, 2)
        if result.exact:
            hits.append(SolutionTriple(x, 0, result.root))
        value *= p
    if hits:
        raise InternalInconsistencyError(
            f"{p}^x + 1 = z^2 with prime {p} > 3 must have no solutions; "
            f"search produced {[h.as_tuple() for h in hits]}"
        )
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return SearchReport(
        EquationInstance(p, 1), SearchBox(x_max, 0), (), x_max + 1, elapsed_ms
    )
