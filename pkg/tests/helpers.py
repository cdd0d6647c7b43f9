"""Shared test constructions."""

from itertools import combinations

from matroidal import Ideal, as_matroidal, minimal_generators, mono


def ideal_of(n: int, *gens) -> Ideal:
    """Ideal from variable tuples, e.g. ideal_of(3, (1, 2), (2, 3))."""
    return minimal_generators({mono(g) for g in gens}, n)


def matroidal_of(n: int, *gens):
    return as_matroidal(ideal_of(n, *gens))


def multipartite_ideal(parts: list[set[int]], n: int | None = None):
    """Degree-2 ideal of the complete multipartite graph with these parts."""
    if n is None:
        n = max(v for p in parts for v in p)
    gens = set()
    for i, p in enumerate(parts):
        for q in parts[i + 1 :]:
            for a in p:
                for b in q:
                    gens.add(mono((a, b)))
    return as_matroidal(minimal_generators(gens, n))


def contiguous_blocks(shape: tuple[int, ...]) -> list[set[int]]:
    """Variable blocks [1..s1], [s1+1..s1+s2], ... for a size shape."""
    blocks = []
    start = 1
    for size in shape:
        blocks.append(set(range(start, start + size)))
        start += size
    return blocks


def partition_shapes(total: int, largest: int | None = None):
    """All descending integer partitions of ``total``."""
    if total == 0:
        yield ()
        return
    largest = largest or total
    for first in range(min(total, largest), 0, -1):
        for rest in partition_shapes(total - first, first):
            yield (first,) + rest


def brute_force_matroidal(n: int, d: int) -> set[tuple[int, ...]]:
    """Independent oracle: filter all subsets of d-subsets by the checker."""
    from matroidal import check_matroidal

    subsets = [mono(c) for c in combinations(range(1, n + 1), d)]
    full = (1 << n) - 1
    out = set()
    for mask in range(1, 1 << len(subsets)):
        gens = [subsets[i] for i in range(len(subsets)) if mask >> i & 1]
        sup = 0
        for g in gens:
            sup |= g
        if sup != full:
            continue
        if check_matroidal(Ideal(n, tuple(gens))):
            out.add(tuple(sorted(gens)))
    return out
