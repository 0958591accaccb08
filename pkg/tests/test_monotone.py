from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from gtseq.monotone import (
    alpha,
    alpha_via_operator,
    check_alpha_property,
    doubly_refined_asm,
    doubly_refined_identity_residuals,
    enumerate_extension,
    enumerate_monotone_triangles,
    extension_signed_count,
    extension_three_relaxed,
    linear_system_residuals,
    property_three_residual,
    refined_asm,
    strict_row_patterns,
)
from gtseq.operators import product_formula


def brute_monotone_count(k):
    """Count monotone triangles by plain recursion, no memo, no intervals."""
    if len(k) == 1:
        return 1
    total = 0
    spans = [range(k[q], k[q + 1] + 1) for q in range(len(k) - 1)]
    for row in product(*spans):
        if all(a < b for a, b in zip(row, row[1:])):
            total += brute_monotone_count(row)
    return total


@pytest.mark.parametrize("k", ((1, 2, 3), (0, 2, 5), (1, 3), (-2, 0, 1, 3)))
def test_alpha_matches_brute_force_on_strict_rows(k):
    want = brute_monotone_count(k)
    assert len(enumerate_monotone_triangles(k)) == want
    assert alpha(len(k), k) == want
    assert strict_row_patterns(len(k), k) == want


def test_alpha_staircase_values():
    for n, want in ((1, 1), (2, 2), (3, 7), (4, 42), (5, 429)):
        assert alpha(n, tuple(range(1, n + 1))) == want


def test_alpha_is_not_the_product_formula():
    # sanity that the two counts genuinely differ
    assert alpha(3, (1, 2, 3)) == 7
    assert product_formula((1, 2, 3)) == 8


def test_enumerate_monotone_rejects_weak_rows():
    with pytest.raises(ValueError):
        enumerate_monotone_triangles((1, 1, 2))


def test_strict_row_patterns_allows_weak_bottom():
    # bottom row may repeat; upper rows are still strict
    assert strict_row_patterns(2, (1, 1)) == 1
    assert strict_row_patterns(3, (1, 1, 2)) == alpha(3, (1, 1, 2))


@pytest.mark.parametrize("variant", (1, 2, 3, 4))
@pytest.mark.parametrize("k", ((1, 3), (0, 0), (2, 0), (1, 2, 3), (0, -1, 1)))
def test_extension_streams_sum_to_counts(variant, k):
    objs = list(enumerate_extension(variant, len(k), k))
    assert sum(o.sign for o in objs) == extension_signed_count(variant, len(k), k)
    assert extension_signed_count(variant, len(k), k) == alpha(len(k), k)


def test_extension_one_stream_frozen():
    # bottom (1, 3): tops 2 and 3 plain, top 1 starred to its left parent
    objs = list(enumerate_extension(1, 2, (1, 3)))
    tops = sorted((o.rows[0][0], o.decorations) for o in objs)
    assert tops == [(1, ((1, 1),)), (2, ()), (3, ())]
    assert all(o.sign == 1 for o in objs)


def test_extension_four_single_entry_signs():
    objs = list(enumerate_extension(4, 1, (5,)))
    signs = sorted(o.sign for o in objs)
    assert signs == [-1, 1, 1]
    assert sum(o.sign for o in objs) == 1


def test_extension_json_shapes():
    for variant, key in ((1, "stars"), (2, "leftStars"), (3, "specials"),
                         (4, "arrows")):
        objs = list(enumerate_extension(variant, 2, (1, 3)))
        doc = objs[0].to_json()
        assert doc["variant"] == variant
        assert key in doc["decorations"]
        assert doc["rows"][1] == [1, 3]


@given(st.lists(st.integers(-2, 2), min_size=1, max_size=3))
@settings(max_examples=50)
def test_operator_forms_agree_with_alpha(k):
    k = tuple(k)
    n = len(k)
    want = alpha(n, k)
    assert alpha_via_operator(n, k, "threeTerm") == want
    assert alpha_via_operator(n, k, "deltaDelta") == want


@given(st.lists(st.integers(-2, 2), min_size=2, max_size=3))
@settings(max_examples=40)
def test_relaxed_adjacent_specials_change_nothing(k):
    k = tuple(k)
    assert extension_three_relaxed(len(k), k) == alpha(len(k), k)


def test_refined_counts_frozen():
    assert refined_asm(3).vector == (2, 3, 2)
    assert refined_asm(4).vector == (7, 14, 14, 7)
    assert sum(refined_asm(4).vector) == 42


def test_doubly_refined_frozen():
    counts = doubly_refined_asm(3)
    assert counts.matrix == ((0, 1, 1), (1, 1, 1), (1, 1, 0))
    assert counts.vector == (2, 3, 2)
    four = doubly_refined_asm(4)
    assert four.matrix == ((0, 2, 3, 2), (2, 4, 5, 3), (3, 5, 4, 2),
                           (2, 3, 2, 0))


def test_linear_system_and_identity_hold():
    for n in (1, 2, 3, 4):
        assert all(r == 0 for r in linear_system_residuals(n))
        assert all(r == 0 for _, r in doubly_refined_identity_residuals(n))


def test_cyclic_shift_property_pointwise():
    for k in product(range(-1, 2), repeat=3):
        assert property_three_residual(3, k) == 0


def test_check_alpha_property_report():
    grid = list(product(range(-1, 2), repeat=2))
    report = check_alpha_property("P1", 2, grid)
    assert report["pointsChecked"] == len(grid)
    assert report["violations"] == []
    with pytest.raises(ValueError):
        check_alpha_property("P9", 2, grid)
