from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from gtseq.operators import product_formula
from gtseq.paths import (
    PathFamily,
    count_nonintersecting,
    enumerate_families,
    family_to_svg,
    path_vertices,
    permutation_sign,
    signed_families,
    starting_points,
    tail_swap,
)


def test_starting_points_diagonal():
    assert starting_points(3) == [(0, 0), (-1, 1), (-2, 2)]


def test_classic_frozen_example():
    fams = list(enumerate_families((0, 2), "classic"))
    assert len(fams) == 3
    assert all(f.sign == 1 and f.pi == (1, 2) for f in fams)
    assert signed_families((0, 2), "classic") == 3
    assert count_nonintersecting((0, 2)) == 3


def test_single_path_instances():
    assert count_nonintersecting((4,)) == 1
    assert signed_families((0, 0, 0), "classic") == 1
    assert count_nonintersecting((0, 0, 0)) == 1


def test_classic_rejects_negative():
    with pytest.raises(ValueError):
        signed_families((-1, 2), "classic")
    with pytest.raises(ValueError):
        count_nonintersecting((2, 1))


def test_path_vertices_walk():
    verts = path_vertices(2, ("S", "D", "S"))
    assert verts == [(-1, 1), (-1, 0), (0, -1), (0, -2)]


def test_descent_paths_start_south():
    # ends strictly below force the descent grammar
    for fam in enumerate_families((-3, -3), "general"):
        for i, steps in enumerate(fam.paths, start=1):
            x0, y0 = (-i + 1, i - 1)
            end_y = path_vertices(i, steps)[-1][1]
            if end_y < y0:
                assert steps[0] == "S"
                assert set(steps) <= {"S", "D"}


def test_general_counts_match_product():
    for n in (1, 2):
        for k in product(range(-2, 3), repeat=n):
            assert signed_families(k, "general") == product_formula(k), k
    for k in ((-2, 0, 1), (2, -1, 0), (-1, -1, -1), (0, 2, -2)):
        assert signed_families(k, "general") == product_formula(k), k


@given(st.lists(st.integers(-2, 2), min_size=1, max_size=2))
@settings(max_examples=30)
def test_stream_signs_sum_to_total(k):
    k = tuple(k)
    total = sum(f.sign for f in enumerate_families(k, "general"))
    assert total == signed_families(k, "general")


def test_nonintersecting_families_are_disjoint():
    # re-derive disjointness from the reported step words
    k = (0, 1, 2)
    count = 0
    for fam in enumerate_families(k, "classic"):
        full = [steps + ("E",) for steps in fam.paths]
        seen = set()
        disjoint = True
        for i, steps in enumerate(full, start=1):
            verts = path_vertices(i, steps)
            if any(v in seen for v in verts):
                disjoint = False
                break
            seen.update(verts)
        if disjoint and fam.pi == (1, 2, 3):
            count += 1
    assert count == count_nonintersecting(k) == product_formula(k)


def test_tail_swap_flips_sign_and_involutes():
    fams = list(enumerate_families((1, 1), "classic"))
    assert signed_families((1, 1), "classic") == 1
    crossing = []
    for f in fams:
        va = set(path_vertices(1, f.paths[0]))
        vb = set(path_vertices(2, f.paths[1]))
        if va & vb:
            crossing.append(f)
    assert len(crossing) == 2
    for f in crossing:
        g = tail_swap(f, 1, 2)
        assert g.sign == -f.sign
        assert g.pi == (f.pi[1], f.pi[0])
        back = tail_swap(g, 1, 2)
        assert (back.paths, back.pi, back.sign) == (f.paths, f.pi, f.sign)


def test_tail_swap_requires_intersection():
    fam = PathFamily(2, (1, 2), (("N",), ("N", "E")), 1)
    with pytest.raises(ValueError):
        tail_swap(fam, 1, 2)


def test_permutation_sign_small():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1, 3)) == -1
    assert permutation_sign((3, 1, 2)) == 1


def test_family_json_and_svg():
    fam = list(enumerate_families((0, 2), "classic"))[0]
    doc = fam.to_json()
    assert doc["pi"] == [1, 2]
    assert doc["sign"] == 1
    assert all(isinstance(p, list) for p in doc["paths"])
    svg = family_to_svg(fam)
    assert svg.startswith("<svg")
    assert svg.count("polyline") == 2
