"""Schmitt-Vogel certificates for the arithmetical rank of matroidal ideals.

A layered partition P_0..P_r of the generators is a certificate when P_0
is a singleton and any two distinct elements of a layer have their product
divisible by an element of an earlier layer; the layer sums then generate
the ideal up to radical, so r+1 bounds the arithmetical rank from above.
The projective dimension bounds it from below, and the two meet at
q(I) + 1 = n - d + 1 whenever a certificate of that size exists.

Three constructions are provided (square-free Veronese layering, folded
products of disjointly supported certificates, and the degree-2 matrix
anti-diagonals), plus a complete layered-partition search for everything
else.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .decomposition import (
    degree2_partition,
    recognize_var_block_product,
    recognize_veronese,
)
from .ideals import (
    Ideal,
    InvariantViolation,
    Monomial,
    minimal_generators,
    mono,
    mono_str,
    mono_vars,
    parse_mono,
    star_product,
)
from .matroids import MatroidalIdeal, veronese
from .oracle import Poly, poly_str
from .quotients import q_index


@dataclass(frozen=True)
class SVPartition:
    """Ordered disjoint nonempty layers P_0..P_r covering G(I)."""

    ideal: Ideal
    layers: tuple[frozenset[Monomial], ...]

    @property
    def r(self) -> int:
        return len(self.layers) - 1


@dataclass(frozen=True)
class SVCheck:
    """Certificate check outcome; ``witness`` pins the first failure."""

    ok: bool
    failure: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def verify_sv(partition: SVPartition) -> SVCheck:
    """Check the layering conditions, reporting the first failing pair.

    Conditions: layers are nonempty and disjoint and cover the generators,
    the first layer is a singleton, and for i > 0 any two distinct p, p' in
    P_i have some earlier-layer element dividing p*p'.
    """
    layers = partition.layers
    if not layers:
        return SVCheck(False, "empty_partition")
    seen: set[Monomial] = set()
    for i, layer in enumerate(layers):
        if not layer:
            return SVCheck(False, "empty_layer", i)
        overlap = layer & seen
        if overlap:
            return SVCheck(False, "overlap", (i, min(overlap)))
        seen |= layer
    genset = set(partition.ideal.gens)
    if seen != genset:
        missing = tuple(sorted(genset - seen))
        extra = tuple(sorted(seen - genset))
        return SVCheck(False, "union_mismatch", (missing, extra))
    if len(layers[0]) != 1:
        return SVCheck(False, "layer0_size", len(layers[0]))
    earlier: list[Monomial] = sorted(layers[0])
    for i, layer in enumerate(layers[1:], start=1):
        ordered = sorted(layer, key=mono_vars)
        for a, b in combinations(ordered, 2):
            prod = a | b  # support of the (non-square-free) product
            if not any(w & prod == w for w in earlier):
                return SVCheck(False, "pair", (i, a, b))
        earlier.extend(ordered)
    return SVCheck(True)


@dataclass(frozen=True)
class RadicalCertificate:
    """Polynomials generating the target up to radical, with provenance.

    Every term of every polynomial must lie in the target, so each
    polynomial does; construction validates this term-wise.
    """

    polys: tuple[Poly, ...]
    target: Ideal
    provenance: str  # "sv_partition" | "product_composition" | "manual"

    def __post_init__(self):
        genset = self.target.gens
        for p in self.polys:
            if p.is_zero():
                raise ValueError("certificate contains the zero polynomial")
            if p.n != self.target.n:
                raise ValueError("certificate polynomial in the wrong ring")
            for e in p.terms:
                sup = sum(1 << i for i, exp in enumerate(e) if exp)
                if not any(g & sup == g for g in genset):
                    raise ValueError(
                        "certificate term lies outside the target ideal"
                    )


def sv_sums(partition: SVPartition) -> RadicalCertificate:
    """Layer sums of a verified partition, as a radical certificate."""
    check = verify_sv(partition)
    if not check:
        raise ValueError(
            f"unverified partition ({check.failure}): {check.witness}"
        )
    n = partition.ideal.n
    polys = []
    for layer in partition.layers:
        s = Poly.zero(n)
        for m in sorted(layer, key=mono_vars):
            s = s + Poly.from_monomial(m, n)
        polys.append(s)
    return RadicalCertificate(tuple(polys), partition.ideal, "sv_partition")


def veronese_cert(n: int, d: int) -> SVPartition:
    """Canonical layering of the square-free Veronese ideal.

    Layer i holds the degree-d monomials in x1..x_{d+i} that involve
    x_{d+i}; there are n-d+1 layers and layer sizes C(d+i-1, d-1).
    """
    ideal = veronese(n, d).ideal
    layers = [frozenset({mono(range(1, d + 1))})]
    for i in range(1, n - d + 1):
        top = d + i
        layers.append(
            frozenset(
                mono(c + (top,)) for c in combinations(range(1, top), d - 1)
            )
        )
    partition = SVPartition(ideal, tuple(layers))
    check = verify_sv(partition)
    if not check:
        raise InvariantViolation(f"Veronese layering failed: {check.failure}")
    return partition


def variable_cert(variables, n: int) -> RadicalCertificate:
    """Trivial certificate for an ideal generated by distinct variables."""
    vs = sorted(set(variables))
    if not vs:
        raise ValueError("need at least one variable")
    target = minimal_generators({mono((v,)) for v in vs}, n)
    polys = tuple(Poly.from_monomial(mono((v,)), n) for v in vs)
    return RadicalCertificate(polys, target, "manual")


def product_cert(certs: list[RadicalCertificate]) -> RadicalCertificate:
    """Fold certificates of disjointly supported ideals over anti-diagonals.

    For certificates a_0..a_{u-1} and b_0..b_{v-1} the combined family is
    c_k = sum_{i+j=k} a_i*b_j, of size u+v-1, certifying the star product;
    folding left extends this to any number of factors.
    """
    if not certs:
        raise ValueError("need at least one certificate")
    result = certs[0]
    for other in certs[1:]:
        target = star_product([result.target, other.target])
        u, v = len(result.polys), len(other.polys)
        polys = []
        for k in range(u + v - 1):
            s = Poly.zero(target.n)
            for i in range(u):
                j = k - i
                if 0 <= j < v:
                    s = s + result.polys[i] * other.polys[j]
            polys.append(s)
        result = RadicalCertificate(tuple(polys), target, "product_composition")
    return result


def degree2_cert(mi: MatroidalIdeal) -> SVPartition:
    """Anti-diagonal layering for a degree-2 matroidal ideal.

    Variables are reindexed part-by-part with part sizes descending; the
    generator pairing row variable i (in parts 1..m-1) with the j-th later
    variable lands in layer i+j-2.  This yields exactly n-1 nonempty
    layers for every full-support degree-2 matroidal ideal.
    """
    partition = degree2_partition(mi)
    parts = sorted(partition.parts, key=lambda p: (-len(p), sorted(p)))
    order: list[int] = []
    for part in parts:
        order.extend(sorted(part))
    position = {v: k + 1 for k, v in enumerate(order)}
    sizes = [len(p) for p in parts]
    prefixes = [0]
    for s in sizes:
        prefixes.append(prefixes[-1] + s)
    part_of_position = {}
    for k in range(len(parts)):
        for pos in range(prefixes[k] + 1, prefixes[k + 1] + 1):
            part_of_position[pos] = k
    n = mi.ideal.n
    layer_map: dict[int, set[Monomial]] = {}
    for g in mi.ideal.gens:
        a, b = sorted(mono_vars(g), key=lambda v: position[v])
        i = position[a]
        k = part_of_position[i]
        j = position[b] - prefixes[k + 1]
        if j < 1:
            raise InvariantViolation(
                f"generator {mono_str(g)} is not a cross-part pair"
            )
        layer_map.setdefault(i + j - 2, set()).add(g)
    top = max(layer_map)
    if top > n - 2 or sorted(layer_map) != list(range(top + 1)):
        raise InvariantViolation("degree-2 layering left a gap")
    layers = tuple(frozenset(layer_map[l]) for l in range(top + 1))
    result = SVPartition(mi.ideal, layers)
    check = verify_sv(result)
    if not check:
        raise InvariantViolation(f"degree-2 layering failed: {check.failure}")
    return result


class _Budget(Exception):
    pass


@dataclass(frozen=True)
class SearchResult:
    """Search outcome.

    ``exhausted`` means the entire layered-partition space at this size was
    explored without a certificate; that never lower-bounds the
    arithmetical rank (the layering condition is sufficient, not
    necessary).  Otherwise a missing partition just means the node budget
    ran out.
    """

    partition: SVPartition | None
    exhausted: bool
    nodes: int


def search_cert(
    mi: MatroidalIdeal, target_size: int, budget: int = 50000
) -> SearchResult:
    """Complete search for a certificate with exactly ``target_size`` layers.

    Layers are filled in order, so the divisibility condition for a layer
    is decided exactly against the finalized earlier layers: every pruned
    branch is genuinely dead.  Generators are taken in canonical order and
    subsets enumerated exclusion-first, which reaches small early layers
    (the shape the constructions produce) quickly.
    """
    if target_size < 1:
        raise ValueError("target size must be at least one layer")
    gens = list(mi.ideal.gens)
    if target_size > len(gens):
        return SearchResult(None, True, 0)
    nodes = 0
    limit = budget

    def bump() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _Budget

    def assemble(layer_lists: list[list[Monomial]]) -> SVPartition:
        partition = SVPartition(
            mi.ideal, tuple(frozenset(l) for l in layer_lists)
        )
        check = verify_sv(partition)
        if not check:
            raise InvariantViolation(
                f"search produced an invalid partition: {check.failure}"
            )
        return partition

    def admissible(m: Monomial, layer: list[Monomial], earlier: list[Monomial]) -> bool:
        for h in layer:
            prod = m | h
            if not any(w & prod == w for w in earlier):
                return False
        return True

    def fill(
        layer_lists: list[list[Monomial]],
        earlier: list[Monomial],
        remaining: list[Monomial],
    ) -> SVPartition | None:
        left = target_size - len(layer_lists)
        if left == 0:
            return assemble(layer_lists) if not remaining else None
        if len(remaining) < left:
            return None
        if left == 1:
            bump()
            for a, b in combinations(remaining, 2):
                prod = a | b
                if not any(w & prod == w for w in earlier):
                    return None
            return assemble(layer_lists + [remaining])
        chosen: list[Monomial] = []

        def pick(i: int) -> SVPartition | None:
            bump()
            if i == len(remaining):
                if not chosen:
                    return None
                taken = set(chosen)
                rest = [x for x in remaining if x not in taken]
                return fill(
                    layer_lists + [list(chosen)], earlier + chosen, rest
                )
            found = pick(i + 1)
            if found is not None:
                return found
            m = remaining[i]
            if admissible(m, chosen, earlier):
                chosen.append(m)
                found = pick(i + 1)
                chosen.pop()
                if found is not None:
                    return found
            return None

        return pick(0)

    try:
        for p0 in gens:
            rest = [g for g in gens if g != p0]
            found = fill([[p0]], [p0], rest)
            if found is not None:
                return SearchResult(found, False, nodes)
        return SearchResult(None, True, nodes)
    except _Budget:
        return SearchResult(None, False, nodes)


@dataclass(frozen=True)
class AraBounds:
    """Bracketing of the arithmetical rank.

    ``lower`` is the projective-dimension bound q(I)+1; ``upper`` the best
    verified certificate size, when one was produced; ``exact`` when they
    meet.  ``certificate`` carries the witnessing object.
    """

    lower: int
    upper: int | None
    exact: bool | None
    method: str | None
    certificate: SVPartition | RadicalCertificate | None


def ara_bounds(
    mi: MatroidalIdeal, search: bool = True, search_budget: int = 50000
) -> AraBounds:
    """Lower bound q(I)+1 plus the best available certificate upper bound.

    Constructions are tried by applicability (Veronese layering, block
    product folding, degree-2 anti-diagonals); otherwise an optional
    budgeted search at the lower bound.  Requires full support.
    """
    ideal = mi.ideal
    n, d = ideal.n, mi.d
    lower = q_index(mi) + 1
    upper: int | None = None
    method: str | None = None
    certificate: SVPartition | RadicalCertificate | None = None
    if recognize_veronese(ideal):
        certificate = veronese_cert(n, d)
        upper = len(certificate.layers)
        method = "veronese"
    else:
        blocks = recognize_var_block_product(ideal)
        if blocks is not None:
            certificate = product_cert([variable_cert(b, n) for b in blocks])
            upper = len(certificate.polys)
            method = "product"
        elif d == 2:
            certificate = degree2_cert(mi)
            upper = len(certificate.layers)
            method = "degree2"
        elif search:
            result = search_cert(mi, lower, budget=search_budget)
            if result.partition is not None:
                certificate = result.partition
                upper = len(result.partition.layers)
                method = "search"
    exact = (upper == lower) if upper is not None else None
    return AraBounds(lower, upper, exact, method, certificate)


def certificate_document(
    cert: SVPartition | RadicalCertificate,
    oracle_checked: bool = False,
) -> dict[str, object]:
    """JSON-ready certificate: target, layers, sums, verification flags."""
    if isinstance(cert, SVPartition):
        check = verify_sv(cert)
        sums = sv_sums(cert) if check else None
        target = cert.ideal
        layers = [
            [mono_str(m) for m in sorted(layer, key=mono_vars)]
            for layer in cert.layers
        ]
        sum_strings = [poly_str(p) for p in sums.polys] if sums else []
        verified = bool(check)
    else:
        target = cert.target
        layers = None
        sum_strings = [poly_str(p) for p in cert.polys]
        verified = False  # not a layered partition; oracle is the check
    return {
        "target_ideal": {
            "n": target.n,
            "generators": [mono_str(g) for g in target.gens],
        },
        "layers": layers,
        "sums": sum_strings,
        "verified_sv": verified,
        "oracle_checked": oracle_checked,
    }


def partition_from_document(doc: dict[str, object]) -> SVPartition:
    """Rebuild an SVPartition from the certificate JSON layout."""
    target = doc["target_ideal"]
    n = int(target["n"])  # type: ignore[index]
    gens = {parse_mono(s) for s in target["generators"]}  # type: ignore[index]
    ideal = minimal_generators(gens, n)
    layers = tuple(
        frozenset(parse_mono(s) for s in layer)
        for layer in doc["layers"]  # type: ignore[union-attr]
    )
    return SVPartition(ideal, layers)
