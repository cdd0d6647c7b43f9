"""Minimal primes, unmixedness, and the degree-2 multipartite structure.

Minimal primes of a square-free monomial ideal are the minimal transversals
of the generator supports: variable sets meeting every generator, none of
whose proper subsets do.  Enumeration is branch-and-bound on an uncovered
generator, pruning strict supersets of transversals already found.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .ideals import (
    Ideal,
    InvariantViolation,
    has_full_support,
    is_unit_ideal,
    is_zero_ideal,
    minimal_generators,
    mono_degree,
    mono_vars,
    support_mask,
)
from .matroids import MatroidalIdeal, NotMatroidalError, as_matroidal


@dataclass(frozen=True)
class PrimeDecomposition:
    """Minimal variable-set primes with height and unmixedness metadata."""

    primes: tuple[frozenset[int], ...]
    height: int
    unmixed: bool


@dataclass(frozen=True)
class MultipartitePartition:
    """Parts S_1..S_m of the variables of a degree-2 matroidal ideal.

    Cross-part pairs are exactly the generators; the signature lists the
    part sizes in descending order (the multipartite graph shape).
    """

    parts: tuple[frozenset[int], ...]
    signature: tuple[int, ...]


def minimal_primes(ideal: Ideal) -> PrimeDecomposition:
    """All minimal transversals of the generator supports."""
    if is_zero_ideal(ideal):
        raise ValueError("the zero ideal has no minimal variable primes")
    if is_unit_ideal(ideal):
        raise ValueError("the whole ring has no minimal primes")
    gens = ideal.gens
    found: list[int] = []

    def dfs(cover: int) -> None:
        # A strict superset of a known transversal can never become minimal.
        for f in found:
            if f & cover == f:
                return
        uncovered = next((g for g in gens if not g & cover), None)
        if uncovered is None:
            # Minimal iff every chosen variable has a private generator.
            for v in mono_vars(cover):
                rest = cover ^ (1 << (v - 1))
                if not any(not g & rest for g in gens):
                    return
            found.append(cover)
            return
        for v in mono_vars(uncovered):
            dfs(cover | (1 << (v - 1)))

    dfs(0)
    ordered = sorted(found, key=lambda c: (c.bit_count(), mono_vars(c)))
    heights = {c.bit_count() for c in ordered}
    return PrimeDecomposition(
        primes=tuple(frozenset(mono_vars(c)) for c in ordered),
        height=min(heights),
        unmixed=len(heights) == 1,
    )


def height(ideal: Ideal) -> int:
    return minimal_primes(ideal).height


def is_unmixed(ideal: Ideal) -> bool:
    return minimal_primes(ideal).unmixed


def degree2_partition(mi: MatroidalIdeal) -> MultipartitePartition:
    """Partition the variables of a degree-2 matroidal ideal into parts.

    Anchored at the lowest-index unassigned variable: a part is the anchor
    plus all its non-neighbors among the remaining variables, then recurse.
    The defining properties (parts partition the variables, cross pairs
    generate, intra pairs do not, at least two parts) are verified before
    returning; a failure on validated input is an invariant violation.
    """
    ideal = mi.ideal
    n = ideal.n
    if mi.d != 2:
        raise ValueError("degree-2 partition needs a degree-2 ideal")
    if n < 2:
        raise ValueError("need n >= 2")
    if not has_full_support(ideal):
        raise ValueError("support must be all of x1..xn")
    adjacency = {v: 0 for v in range(1, n + 1)}
    for g in ideal.gens:
        a, b = mono_vars(g)
        adjacency[a] |= 1 << (b - 1)
        adjacency[b] |= 1 << (a - 1)
    remaining = (1 << n) - 1
    part_masks: list[int] = []
    while remaining:
        anchor = (remaining & -remaining).bit_length()
        part = remaining & ~adjacency[anchor]
        part_masks.append(part)
        remaining &= ~part
    genset = set(ideal.gens)
    if len(part_masks) < 2:
        raise InvariantViolation("fewer than two parts for a degree-2 ideal")
    for i, p in enumerate(part_masks):
        for j, q in enumerate(part_masks):
            if i == j:
                continue
            for a in mono_vars(p):
                for b in mono_vars(q):
                    if (1 << (a - 1)) | (1 << (b - 1)) not in genset:
                        raise InvariantViolation(
                            f"cross pair x{a}x{b} is not a generator"
                        )
        for a in mono_vars(p):
            for b in mono_vars(p):
                if a < b and (1 << (a - 1)) | (1 << (b - 1)) in genset:
                    raise InvariantViolation(
                        f"intra-part pair x{a}x{b} is a generator"
                    )
    parts = tuple(frozenset(mono_vars(p)) for p in part_masks)
    signature = tuple(sorted((len(p) for p in parts), reverse=True))
    return MultipartitePartition(parts, signature)


def multipartite_signature(mi: MatroidalIdeal) -> tuple[int, ...]:
    """Descending part sizes of the degree-2 partition."""
    return degree2_partition(mi).signature


def contraction(mi: MatroidalIdeal, x: int) -> MatroidalIdeal:
    """The degree-(d-1) matroidal ideal generated by {g/x : x divides g}."""
    ideal = mi.ideal
    bit = 1 << (x - 1)
    if not support_mask(ideal) & bit:
        raise ValueError(f"x{x} is not in the support")
    if mi.d < 2:
        raise ValueError("contraction needs degree at least 2")
    gens = {g ^ bit for g in ideal.gens if g & bit}
    contracted = minimal_generators(gens, ideal.n)
    try:
        result = as_matroidal(contracted)
    except NotMatroidalError as exc:
        raise InvariantViolation(
            f"contraction at x{x} lost the exchange condition: {exc}"
        ) from exc
    return result


def recognize_veronese(ideal: Ideal) -> bool:
    """Whether the ideal is square-free Veronese on all of x1..xn."""
    if is_zero_ideal(ideal) or is_unit_ideal(ideal):
        return False
    degrees = {mono_degree(g) for g in ideal.gens}
    if len(degrees) != 1:
        return False
    d = degrees.pop()
    return has_full_support(ideal) and len(ideal.gens) == comb(ideal.n, d)


def recognize_var_block_product(
    ideal: Ideal,
) -> tuple[frozenset[int], ...] | None:
    """Reconstruct variable blocks whose transversals are exactly G(I).

    Blocks are the connected components of the never-co-occur relation on
    the support; the transversal property is then verified exactly, so a
    reconstruction that does not reproduce the generators returns ``None``.
    """
    if is_zero_ideal(ideal) or is_unit_ideal(ideal):
        return None
    degrees = {mono_degree(g) for g in ideal.gens}
    if len(degrees) != 1:
        return None
    d = degrees.pop()
    co = {}
    for g in ideal.gens:
        for v in mono_vars(g):
            co[v] = co.get(v, 0) | g
    sup = sorted(co)
    unseen = set(sup)
    components: list[frozenset[int]] = []
    while unseen:
        start = min(unseen)
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in list(unseen):
                if u != v and u not in comp and not co[v] & (1 << (u - 1)):
                    comp.add(u)
                    frontier.append(u)
        unseen -= comp
        components.append(frozenset(comp))
    if len(components) != d:
        return None
    masks = [sum(1 << (v - 1) for v in c) for c in components]
    for g in ideal.gens:
        if any((g & m).bit_count() != 1 for m in masks):
            return None
    expected = 1
    for c in components:
        expected *= len(c)
    if len(ideal.gens) != expected:
        return None
    return tuple(sorted(components, key=sorted))


def unmixed_bounds_report(mi: MatroidalIdeal) -> dict[str, object]:
    """Assert h+d-1 <= n <= h*d for an unmixed ideal and report tightness.

    The lower bound is tight exactly for square-free Veronese ideals; the
    upper bound exactly for products of d blocks of h distinct variables.
    Both tightness flags are cross-checked against the recognizers.
    """
    ideal = mi.ideal
    n, d = ideal.n, mi.d
    if n < 2:
        raise ValueError("need n >= 2")
    if not has_full_support(ideal):
        raise ValueError("support must be all of x1..xn")
    decomposition = minimal_primes(ideal)
    if not decomposition.unmixed:
        raise ValueError("ideal is mixed: minimal primes have unequal heights")
    h = decomposition.height
    if not h + d - 1 <= n <= h * d:
        raise InvariantViolation(
            f"unmixed bounds failed: h={h}, d={d}, n={n}"
        )
    lower_tight = n == h + d - 1
    upper_tight = n == h * d
    if lower_tight != recognize_veronese(ideal):
        raise InvariantViolation("lower tightness disagrees with Veronese recognizer")
    blocks = recognize_var_block_product(ideal)
    equal_blocks = (
        blocks is not None
        and len(blocks) == d
        and all(len(b) == h for b in blocks)
    )
    if upper_tight != equal_blocks:
        raise InvariantViolation("upper tightness disagrees with block recognizer")
    return {
        "h": h,
        "d": d,
        "n": n,
        "lower_tight": lower_tight,
        "upper_tight": upper_tight,
    }
