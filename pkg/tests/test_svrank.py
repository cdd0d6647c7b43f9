from math import comb

import pytest

from matroidal import (
    SVPartition,
    ara_bounds,
    certificate_document,
    degree2_cert,
    mono,
    partition_from_document,
    poly_str,
    product_cert,
    search_cert,
    sv_sums,
    var_block_product,
    variable_cert,
    verify_sv,
    veronese,
    veronese_cert,
)

from helpers import contiguous_blocks, ideal_of, matroidal_of, partition_shapes


def test_verify_sv_canonical_veronese42():
    ideal = veronese(4, 2).ideal
    partition = SVPartition(
        ideal,
        (
            frozenset({mono((1, 2))}),
            frozenset({mono((1, 3)), mono((2, 3))}),
            frozenset({mono((1, 4)), mono((2, 4)), mono((3, 4))}),
        ),
    )
    assert verify_sv(partition)


def test_verify_sv_failure_witnesses():
    ideal = ideal_of(3, (1, 2), (2, 3))
    doubled = SVPartition(ideal, (frozenset(ideal.gens),))
    check = verify_sv(doubled)
    assert not check and check.failure == "layer0_size"
    missing = SVPartition(ideal, (frozenset({mono((1, 2))}),))
    check = verify_sv(missing)
    assert not check and check.failure == "union_mismatch"
    # A two-element later layer with no earlier divisor of the pair product.
    disjointish = ideal_of(4, (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    bad_pair = SVPartition(
        disjointish,
        (
            frozenset({mono((1, 2))}),
            frozenset({mono((3, 4)), mono((1, 3))}),
            frozenset({mono((1, 4)), mono((2, 3)), mono((2, 4))}),
        ),
    )
    check = verify_sv(bad_pair)
    assert not check and check.failure == "pair"
    i, a, b = check.witness
    assert i == 1 and {a, b} == {mono((3, 4)), mono((1, 3))}


def test_sv_sums_examples():
    cert = sv_sums(veronese_cert(4, 2))
    assert [poly_str(p) for p in cert.polys] == [
        "x1*x2",
        "x1*x3+x2*x3",
        "x1*x4+x2*x4+x3*x4",
    ]
    assert cert.provenance == "sv_partition"
    principal = SVPartition(ideal_of(3, (1, 2, 3)), (frozenset({mono((1, 2, 3))}),))
    assert [poly_str(p) for p in sv_sums(principal).polys] == ["x1*x2*x3"]
    k22 = degree2_cert(var_block_product([{1, 2}, {3, 4}]))
    assert len(sv_sums(k22).polys) == 3


def test_sv_sums_rejects_unverified():
    ideal = ideal_of(3, (1, 2), (2, 3))
    with pytest.raises(ValueError):
        sv_sums(SVPartition(ideal, (frozenset(ideal.gens),)))


def test_veronese_cert_layer_sizes():
    assert [len(l) for l in veronese_cert(4, 2).layers] == [1, 2, 3]
    assert [len(l) for l in veronese_cert(5, 3).layers] == [1, 3, 6]
    assert [len(l) for l in veronese_cert(4, 4).layers] == [1]
    for n in range(1, 9):
        for d in range(1, n + 1):
            partition = veronese_cert(n, d)
            assert len(partition.layers) == n - d + 1
            assert verify_sv(partition)
            sizes = [len(l) for l in partition.layers]
            assert sizes == [1] + [comb(d + i - 1, d - 1) for i in range(1, n - d + 1)]


def test_product_cert_sizes():
    two_blocks = product_cert(
        [variable_cert({1, 2, 3}, 6), variable_cert({4, 5, 6}, 6)]
    )
    assert len(two_blocks.polys) == 5  # u + v - 1
    assert two_blocks.provenance == "product_composition"
    single = variable_cert({1, 2}, 2)
    assert product_cert([single]) is single
    for total in range(1, 9):
        for shape in partition_shapes(total):
            blocks = contiguous_blocks(shape)
            cert = product_cert([variable_cert(b, total) for b in blocks])
            assert len(cert.polys) == total - len(shape) + 1
            assert cert.target == var_block_product(blocks, total).ideal


def test_degree2_cert_examples():
    k22 = degree2_cert(var_block_product([{1, 2}, {3, 4}]))
    assert [set(l) for l in k22.layers] == [
        {mono((1, 3))},
        {mono((1, 4)), mono((2, 3))},
        {mono((2, 4))},
    ]
    assert len(degree2_cert(veronese(3, 2)).layers) == 2
    k21 = degree2_cert(matroidal_of(3, (1, 3), (2, 3)))
    assert [set(l) for l in k21.layers] == [{mono((1, 3))}, {mono((2, 3))}]


def test_degree2_cert_verifies_across_enumeration(enum_cache):
    for n in range(2, 7):
        for mi in enum_cache(n, 2):
            partition = degree2_cert(mi)
            assert len(partition.layers) == n - 1
            assert verify_sv(partition)


def test_search_cert_examples():
    v = veronese(4, 2)
    result = search_cert(v, 3)
    assert result.partition is not None
    assert verify_sv(result.partition)
    assert len(result.partition.layers) == 3

    nothing = search_cert(v, 2)
    assert nothing.partition is None
    assert nothing.exhausted  # complete exploration, no certificate of size 2

    principal = matroidal_of(3, (1, 2, 3))
    trivial = search_cert(principal, 1)
    assert trivial.partition is not None
    assert len(trivial.partition.layers) == 1


def test_search_cert_budget_is_reported():
    v = veronese(4, 2)
    result = search_cert(v, 3, budget=1)
    assert result.partition is None
    assert not result.exhausted


def test_ara_bounds_examples():
    bounds = ara_bounds(veronese(4, 2))
    assert (bounds.lower, bounds.upper, bounds.exact) == (3, 3, True)
    assert bounds.method == "veronese"
    blocks = ara_bounds(var_block_product([{1, 2}, {3, 4}]))
    assert (blocks.lower, blocks.upper, blocks.exact) == (3, 3, True)
    assert blocks.method == "product"


def test_ara_bounds_search_path(enum_cache):
    # A degree-3 ideal that is neither Veronese nor a block product.
    from matroidal import recognize_var_block_product, recognize_veronese

    for mi in enum_cache(5, 3, True):
        if recognize_veronese(mi.ideal) or recognize_var_block_product(mi.ideal):
            continue
        bounds = ara_bounds(mi)
        assert bounds.lower == 5 - 3 + 1
        assert bounds.method == "search"
        assert bounds.upper == bounds.lower
        break
    else:
        pytest.fail("no search-path ideal found")


def test_ara_lower_never_exceeds_upper(enum_cache):
    for n in range(2, 6):
        for d in range(1, n + 1):
            for mi in enum_cache(n, d):
                bounds = ara_bounds(mi)
                if bounds.upper is not None:
                    assert bounds.lower <= bounds.upper


def test_certificate_document_roundtrip():
    partition = veronese_cert(4, 2)
    doc = certificate_document(partition)
    assert doc["verified_sv"] is True
    assert doc["layers"] == [
        ["x1*x2"],
        ["x1*x3", "x2*x3"],
        ["x1*x4", "x2*x4", "x3*x4"],
    ]
    assert doc["sums"] == ["x1*x2", "x1*x3+x2*x3", "x1*x4+x2*x4+x3*x4"]
    rebuilt = partition_from_document(doc)
    assert rebuilt == partition

    folded = product_cert([variable_cert({1}, 3), variable_cert({2, 3}, 3)])
    doc = certificate_document(folded)
    assert doc["layers"] is None
    assert doc["verified_sv"] is False
    assert len(doc["sums"]) == 2
