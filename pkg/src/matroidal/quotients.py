"""Linear-quotient orderings and the numerical invariants they determine.

An ordering u_1..u_s of the generators has linear quotients when each colon
ideal <u_1..u_{j-1}> : u_j is generated by variables.  The colon ideal is
computed exactly: its generators are the quotients u_i / gcd(u_i, u_j),
minimalized; it is variable-generated iff every quotient is divisible by
some degree-one quotient.  q(I) is the largest number of colon variables
over the steps, and is independent of the ordering chosen.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .decomposition import height
from .ideals import InvariantViolation, Monomial, has_full_support, mono_vars
from .matroids import MatroidalIdeal


@dataclass(frozen=True)
class QuotientOrdering:
    """A verified linear-quotient ordering with its per-step colon variables.

    ``colon_steps[j-2]`` is the variable set generating the j-th colon
    ideal; ``q`` is the maximum step size (0 for a principal ideal, the
    empty maximum).
    """

    order: tuple[Monomial, ...]
    colon_steps: tuple[frozenset[int], ...]
    q: int


def colon_step_vars(prefix: list[Monomial], u: Monomial) -> frozenset[int] | None:
    """Variables generating <prefix> : u, or None if not variable-generated."""
    quotients = {p & ~u for p in prefix}
    singles = 0
    for qt in quotients:
        if qt.bit_count() == 1:
            singles |= qt
    if all(qt & singles for qt in quotients):
        return frozenset(mono_vars(singles))
    return None


def _preference(gens: tuple[Monomial, ...], n: int, strategy: str, seed: int) -> list[Monomial]:
    if strategy == "lex":
        # Canonical generator order is descending lexicographic.
        return list(gens)
    if strategy == "revlex":
        return sorted(
            gens, key=lambda g: tuple((g >> (v - 1)) & 1 for v in range(n, 0, -1))
        )
    if strategy == "random":
        rng = random.Random(seed)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        return shuffled
    raise ValueError(f"unknown ordering strategy {strategy!r}")


def find_ordering(
    mi: MatroidalIdeal, strategy: str = "lex", seed: int = 0
) -> QuotientOrdering:
    """Search for a linear-quotient ordering, preferring ``strategy`` order.

    Depth-first: at each step the next generator is the first remaining one
    (in preference order) whose colon ideal is variable-generated, with
    backtracking on dead ends.  Every step is verified by the exact colon
    computation, so the result is correct regardless of the heuristic.
    Matroidal ideals always admit such an ordering; exhausting the search
    is an invariant violation.
    """
    preference = _preference(mi.ideal.gens, mi.ideal.n, strategy, seed)
    if len(preference) == 1:
        return QuotientOrdering((preference[0],), (), 0)
    order: list[Monomial] = []
    steps: list[frozenset[int]] = []

    def dfs(remaining: list[Monomial]) -> bool:
        if not remaining:
            return True
        for u in remaining:
            stepped = False
            if order:
                step = colon_step_vars(order, u)
                if step is None:
                    continue
                steps.append(step)
                stepped = True
            order.append(u)
            if dfs([r for r in remaining if r != u]):
                return True
            order.pop()
            if stepped:
                steps.pop()
        return False

    if not dfs(preference):
        raise InvariantViolation(
            "no linear-quotient ordering found; matroidal ideals always have one"
        )
    return QuotientOrdering(
        tuple(order), tuple(steps), max((len(s) for s in steps), default=0)
    )


def q_index(mi: MatroidalIdeal) -> int:
    """The linear-quotient index q(I); requires full support.

    Computed from an actual ordering and cross-asserted against the closed
    form n - d; a mismatch would be a toolkit bug, never a counterexample.
    """
    ideal = mi.ideal
    if not has_full_support(ideal):
        raise ValueError("q(I) requires support {x1..xn}")
    q = find_ordering(mi).q
    if q != ideal.n - mi.d:
        raise InvariantViolation(
            f"q={q} disagrees with n-d={ideal.n - mi.d}"
        )
    return q


def proj_dim(mi: MatroidalIdeal) -> int:
    """Projective dimension of the ideal (as a module): equals q(I)."""
    return q_index(mi)


def depth(mi: MatroidalIdeal) -> int:
    """depth of R/I via the Auslander-Buchsbaum formula: n - q(I) - 1."""
    return mi.ideal.n - q_index(mi) - 1


def is_cohen_macaulay(mi: MatroidalIdeal) -> bool:
    """R/I is Cohen-Macaulay iff height(I) = q(I) + 1."""
    return height(mi.ideal) == q_index(mi) + 1


def analyze(mi: MatroidalIdeal) -> dict[str, object]:
    """The homological summary surfaced by the CLI."""
    ideal = mi.ideal
    q = q_index(mi)
    h = height(ideal)
    return {
        "n": ideal.n,
        "d": mi.d,
        "q": q,
        "pd": q,
        "depth": ideal.n - q - 1,
        "height": h,
        "cohen_macaulay": h == q + 1,
    }
