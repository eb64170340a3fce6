"""Tests for the bounded configuration search."""

import pytest

from cisym.configio import dump_config
from cisym.localization import TEMPLATES, ConfigurationError, verify_case
from cisym.search import (
    BudgetExceededError,
    SearchBounds,
    SearchFlags,
    search_case,
)

SMALL = SearchBounds(max_weight=3, max_abs_a=3, max_abs_eval=6)


def test_no_template_admits_nonpositive_rho():
    for template in sorted(TEMPLATES):
        hits = search_case(template, t_range=(1, 6), rho_range=(-6, 0),
                           bounds=SMALL)
        assert hits == [], template


def test_semifree_two_surfaces_hits():
    hits = search_case("two_surfaces", t_range=(1, 10), rho_range=(-10, 10),
                       flags=SearchFlags(semifree=True))
    assert len(hits) == 14
    seen = set()
    for cfg in hits:
        sx, sy = cfg.surfaces()
        assert sy.a == 0
        assert cfg.ambient.rho in (1, 4)
        # the closure identity rho * (a_X - a_Y)^2 = 4
        assert cfg.ambient.rho * (sx.a - sy.a) ** 2 == 4
        assert verify_case(cfg).consistent
        seen.add((cfg.ambient.rho, cfg.ambient.t, sx.a))
    assert seen == (
        {(4, t, ax) for t in range(1, 6) for ax in (1, -1)}
        | {(1, t, ax) for t in (4, 8) for ax in (2, -2)}
    )


def test_projective_space_is_the_only_positive_cp2like_hit():
    hits = search_case("cp2like_plus_point", t_range=(1, 10),
                       rho_range=(0, 10))
    assert len(hits) == 1
    cfg = hits[0]
    assert cfg.ambient.t == 1 and cfg.ambient.rho == 4
    four = cfg.fours()[0]
    assert (four.ev_x2, four.ev_xy, four.ev_y2) == (-1, 1, -1)
    assert four.sign == -1
    point = cfg.points()[0]
    assert point.eps == 1 and point.a == 1


def test_quadric_family_found_at_positive_rho():
    hits = search_case("surface_plus_two_points", t_range=(2, 2),
                       rho_range=(1, 1), bounds=SMALL)
    assert hits, "the quadric fixed-point data must appear"
    target = [cfg for cfg in hits
              if cfg.surfaces()[0].ev_x == -2
              and cfg.surfaces()[0].ev_y1 == 0]
    assert len(target) == 1
    pts = target[0].points()
    assert {p.eps for p in pts} == {1, -1}
    assert sorted(p.a for p in pts) == [-1, 1]


def test_results_sorted_and_deterministic():
    first = search_case("two_surfaces", rho_range=(-10, 10),
                        flags=SearchFlags(semifree=True))
    second = search_case("two_surfaces", rho_range=(-10, 10),
                         flags=SearchFlags(semifree=True))
    keys = [dump_config(cfg) for cfg in first]
    assert keys == sorted(keys)
    assert [dump_config(cfg) for cfg in second] == keys


def test_worker_count_does_not_change_results():
    base = search_case("surface_plus_two_points", t_range=(1, 4),
                       rho_range=(0, 4), bounds=SMALL)
    for workers in (2, 3):
        parallel = search_case("surface_plus_two_points", t_range=(1, 4),
                               rho_range=(0, 4), bounds=SMALL,
                               workers=workers)
        assert [dump_config(c) for c in parallel] == \
            [dump_config(c) for c in base]


def test_budget_exhaustion_raises():
    with pytest.raises(BudgetExceededError):
        search_case("two_surfaces", rho_range=(-10, 10), budget=50)


def test_budget_exhaustion_raises_across_workers():
    with pytest.raises(BudgetExceededError):
        search_case("two_surfaces", rho_range=(-10, 10), budget=50,
                    workers=3)


def test_unknown_template_rejected():
    with pytest.raises(ConfigurationError):
        search_case("everything")


def test_bad_ranges_rejected():
    with pytest.raises(ValueError):
        search_case("two_surfaces", t_range=(5, 1))
    with pytest.raises(ValueError):
        search_case("two_surfaces", workers=0)
    with pytest.raises(ValueError):
        search_case("two_surfaces", budget=0)


def test_bounds_validation():
    with pytest.raises(ValueError):
        SearchBounds(max_weight=0)
    with pytest.raises(ValueError):
        SearchBounds(max_abs_a=-1)


def test_flags_restrict_the_space():
    # Without the effectiveness restriction, weight data with a common
    # divisor enter the enumeration; the verdict stays empty at rho <= 0.
    hits = search_case(
        "two_surfaces", t_range=(1, 4), rho_range=(-4, 0),
        bounds=SearchBounds(2, 2, 4),
        flags=SearchFlags(effectiveness=False),
    )
    assert hits == []


def test_every_hit_passes_the_verifier():
    hits = search_case("surface_plus_two_points", t_range=(1, 6),
                       rho_range=(0, 6), bounds=SMALL)
    assert hits
    for cfg in hits:
        report = verify_case(cfg)
        assert report.consistent
        assert cfg.ambient.euler == sum(c.chi for c in cfg.components)
