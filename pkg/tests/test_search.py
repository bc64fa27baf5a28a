from __future__ import annotations

import json
from fractions import Fraction as F

import pytest

from quartica.cubic import CurveParams
from quartica.exact.poly import UniPoly
from quartica.search import (
    DEGENERATE,
    STEP1,
    STEP2,
    Checkpoint,
    SearchConfig,
    SearchSummary,
    brute_force_oracle,
    r_quadratic,
    run_search,
    scan_cell,
    skip_reason,
)
from quartica.surface import QuarticPoint, quartic_residual

SMALLEST = QuarticPoint.of(59, 158, 133, 134)
SMALL_BOX = SearchConfig((-1, 1), (-1, 2), (1, 6), (1, 5))


def test_r_quadratic_of_worked_example():
    poly = r_quadratic(108, 183, CurveParams(F(-49), F(-25)))
    r = UniPoly.x()
    assert poly.monic() == ((r - F(-2797, 592)) * (r - F(3193, 296))).monic()


def test_r_quadratic_gaussian_cell():
    poly = r_quadratic(1, 1, CurveParams(F(1), F(13)))
    assert poly == UniPoly([35152, 0, 1467648])
    assert poly.monic() == UniPoly([F(169, 7056), 0, 1])


def test_scan_cell_step1_finds_smallest_and_pair():
    out = scan_cell(108, 183, CurveParams(F(-49), F(-25)))
    assert out.branch == STEP1
    keys = {rec.key() for rec in out.records}
    assert (59, 158, 133, 134) in keys
    assert (34813, 134413, 111637, 114613) in keys


def test_scan_cell_step2_worked_example():
    out = scan_cell(1, 1, CurveParams(F(1), F(13)))
    assert out.branch == STEP2
    assert [rec.key() for rec in out.records] == [
        (1827989, 31557968, 2941868, 31557461),
        (277041948785757, 329177166160259, 283678931194359, 324997193816543),
    ]
    prov = out.records[0].provenance
    assert prov["d"] == "-1"
    assert prov["r"] == {"re": "0", "im": "13/84", "d": "-1"}
    assert prov["descended"] == {"m": "-2450514024/4855033", "n": "2851182012/4855033", "r": "-810875183/9710066"}


def test_scan_cell_never_raises_on_degenerate_cells():
    for m in range(-2, 3):
        for n in range(-2, 3):
            if (m, n) == (0, 0):
                continue
            out = scan_cell(m, n, CurveParams(F(3), F(1)))
            assert out.branch in (STEP1, STEP2, DEGENERATE)
            for rec in out.records:
                assert quartic_residual(rec.point) == 0


def test_skip_rules():
    assert skip_reason((1, 1, 2, 2)) and skip_reason((1, 1, 2, -2))
    assert skip_reason((0, 0, 2, 1))
    assert skip_reason((1, 0, 0, 1))
    assert skip_reason((1, 0, 2, 1)) is None


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig((2, 1), (0, 0), (1, 1), (1, 1))
    with pytest.raises(ValueError):
        SearchConfig((0, 1), (0, 1), (1, 2), (1, 2), workers=0)


def test_run_search_emissions_are_verified_unique_and_numbered():
    summary = SearchSummary()
    recs = list(run_search(SMALL_BOX, summary=summary))
    assert recs
    keys = [r.key() for r in recs]
    assert len(keys) == len(set(keys))
    assert [r.ordinal for r in recs] == list(range(1, len(recs) + 1))
    assert all(quartic_residual(r.point) == 0 for r in recs)
    assert summary.cells == 3 * 4 * 6 * 5
    assert summary.emitted == len(recs)
    branches = summary.to_json()["branches"]
    assert summary.skipped + sum(branches.values()) == summary.cells


def test_trivial_solutions_only_with_flag():
    plain = {r.key() for r in run_search(SMALL_BOX)}
    with_trivial = SearchConfig(*(SMALL_BOX.m_range, SMALL_BOX.n_range, SMALL_BOX.s_range, SMALL_BOX.t_range),
                                emit_trivial=True)
    every = {r.key() for r in run_search(with_trivial)}
    assert plain <= every


def test_parallel_matches_serial_on_small_box():
    serial = [r.to_json() for r in run_search(SMALL_BOX)]
    cfg = SearchConfig(SMALL_BOX.m_range, SMALL_BOX.n_range, SMALL_BOX.s_range, SMALL_BOX.t_range, workers=2)
    assert [r.to_json() for r in run_search(cfg)] == serial


def test_checkpoint_resume_matches_uninterrupted_run(tmp_path):
    full = [r.to_json() for r in run_search(SMALL_BOX)]
    ck = Checkpoint(tmp_path / "state.json", every=1)
    first = []
    for i, rec in enumerate(run_search(SMALL_BOX, checkpoint=ck)):
        first.append(rec.to_json())
        if i == 2:
            break
    state = json.loads((tmp_path / "state.json").read_text())
    done_cell = tuple(state["summary"]["last_cell"])
    kept = [r for r in first if r["ordinal"] <= state["summary"]["emitted"]]
    rest = [r.to_json() for r in run_search(SMALL_BOX, checkpoint=ck)]
    assert kept + rest == full
    assert done_cell < tuple(json.loads((tmp_path / "state.json").read_text())["summary"]["last_cell"])


def test_checkpoint_rejects_other_config(tmp_path):
    ck = Checkpoint(tmp_path / "state.json")
    list(run_search(SMALL_BOX, checkpoint=ck))
    other = SearchConfig((0, 1), (0, 1), (1, 2), (1, 2))
    with pytest.raises(ValueError):
        list(run_search(other, checkpoint=ck))


def test_brute_force_oracle_small_bounds():
    assert brute_force_oracle(157) == set()
    assert brute_force_oracle(158) == {SMALLEST}
    with pytest.raises(ValueError):
        brute_force_oracle(0)
