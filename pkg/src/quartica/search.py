"""Cell-by-cell search for rational points on the surface.

Each cell (m, n, s, t) fixes a family member and a pair (m, n); the family
equation is then quadratic in r.  A rational-square discriminant gives
rational cubic points directly (step 1).  Otherwise the two conjugate roots
are combined with Euler's point through a chord, and the chord through the
resulting conjugate pair descends to a rational point (step 2).  Every
rational cubic point is lifted through its fiber.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Optional

from .chord import chord_third, conj_descend
from .cubic import CubicPoint, CurveParams, euler_point, family_residual, fiber_solutions
from .errors import DegenerateError
from .exact.poly import UniPoly
from .exact.quadext import QuadExt
from .exact.rational import format_rational
from .exact.roots import ConjugatePair, NoRoot, solve_quadratic
from .surface import QuarticPoint, canonicalize, is_trivial, quartic_residual

log = logging.getLogger(__name__)

STEP1 = "step1"
STEP2 = "step2"
DEGENERATE = "degenerate"

Cell = tuple[int, int, int, int]


def r_quadratic(m, n, p: CurveParams) -> UniPoly:
    """The family equation at fixed (m, n) as a polynomial in r (degree <= 2)."""
    m, n = Fraction(m), Fraction(n)
    f0, f1, fm = (family_residual(m, n, Fraction(r), p.s, p.t, p.coefficients) for r in (0, 1, -1))
    return UniPoly((f0, (f1 - fm) / 2, (f1 + fm) / 2 - f0))


@dataclass(frozen=True)
class SolutionRecord:
    point: QuarticPoint
    cell: Cell
    branch: str
    provenance: dict
    ordinal: Optional[int] = None

    def key(self) -> tuple[int, int, int, int]:
        return self.point.int_tuple()

    def to_json(self) -> dict:
        return {
            "ordinal": self.ordinal,
            "point": self.point.to_json(),
            "equation": self.point.equation(),
            "cell": dict(zip("mnst", self.cell)),
            "branch": self.branch,
            "provenance": self.provenance,
        }


@dataclass
class CellOutcome:
    cell: Cell
    branch: str
    records: list[SolutionRecord] = field(default_factory=list)
    diagnostic: Optional[str] = None


def _collect(cell: Cell, branch: str, lifts, provenance: dict, emit_trivial: bool, out: dict) -> None:
    for g, q in lifts:
        if not emit_trivial and is_trivial(q):
            continue
        canon = canonicalize(q)
        key = canon.int_tuple()
        if key in out:
            continue
        out[key] = SolutionRecord(canon, cell, branch, {**provenance, "g": format_rational(g)})


def scan_cell(m: int, n: int, p: CurveParams, *, emit_trivial: bool = False) -> CellOutcome:
    """Run the two-step construction on one cell; degeneracies become diagnostics."""
    cell = (int(m), int(n), int(p.s), int(p.t))
    poly = r_quadratic(m, n, p)
    if poly.is_zero():
        return CellOutcome(cell, DEGENERATE, diagnostic="family equation vanishes identically in r")
    roots = solve_quadratic(poly)
    if isinstance(roots, NoRoot):
        return CellOutcome(cell, DEGENERATE, diagnostic="equation in r has no finite root")
    found: dict = {}
    try:
        if isinstance(roots, ConjugatePair):
            branch = STEP2
            e = CubicPoint(m, n, roots.root)
            chord_pt = chord_third(e, euler_point(p), p)
            q = conj_descend(chord_pt, p)
            prov = {"d": format_rational(roots.root.d), "r": roots.root.to_json(), "descended": q.to_json()}
            _collect(cell, branch, fiber_solutions(q, p), prov, emit_trivial, found)
        else:
            branch = STEP1
            for r in roots.roots:
                lifts = fiber_solutions(CubicPoint(m, n, r), p)
                _collect(cell, branch, lifts, {"r": format_rational(r)}, emit_trivial, found)
    except DegenerateError as exc:
        return CellOutcome(cell, DEGENERATE, diagnostic=str(exc))
    return CellOutcome(cell, branch, list(found.values()))


# -- driver ------------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    m_range: tuple[int, int]
    n_range: tuple[int, int]
    s_range: tuple[int, int]
    t_range: tuple[int, int]
    emit_trivial: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        for name in ("m_range", "n_range", "s_range", "t_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty: {lo} > {hi}")
            object.__setattr__(self, name, (int(lo), int(hi)))
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    def fingerprint(self) -> dict:
        """Fields that determine the output; worker count is excluded."""
        d = asdict(self)
        d.pop("workers")
        return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}


def skip_reason(cell: Cell) -> Optional[str]:
    m, n, s, t = cell
    if s == t or s == -t:
        return "s = +-t"
    if s * t == 0:
        return "s*t = 0"
    if m == 0 and n == 0:
        return "m = n = 0"
    return None


def all_cells(cfg: SearchConfig) -> Iterator[Cell]:
    """Every cell of the box in lexicographic (m, n, s, t) order, skip rules not applied."""
    ranges = [range(lo, hi + 1) for lo, hi in (cfg.m_range, cfg.n_range, cfg.s_range, cfg.t_range)]
    return itertools.product(*ranges)


def _scan_task(args: tuple[Cell, bool]) -> CellOutcome:
    (m, n, s, t), emit_trivial = args
    return scan_cell(m, n, CurveParams(s, t), emit_trivial=emit_trivial)


@dataclass
class SearchSummary:
    cells: int = 0
    skipped: int = 0
    branches: dict = field(default_factory=lambda: defaultdict(int))
    emitted: int = 0
    duplicates: int = 0
    last_cell: Optional[Cell] = None

    def to_json(self) -> dict:
        return {
            "cells": self.cells,
            "skipped": self.skipped,
            "branches": {b: self.branches.get(b, 0) for b in (STEP1, STEP2, DEGENERATE)},
            "emitted": self.emitted,
            "duplicates": self.duplicates,
            "last_cell": list(self.last_cell) if self.last_cell else None,
        }


class Checkpoint:
    """Last completed cell plus the dedup set, rewritten atomically."""

    def __init__(self, path: os.PathLike | str, every: int = 50) -> None:
        self.path = Path(path)
        self.every = every

    def load(self, cfg: SearchConfig) -> Optional[dict]:
        if not self.path.exists():
            return None
        state = json.loads(self.path.read_text())
        if state.get("config") != cfg.fingerprint():
            raise ValueError(f"checkpoint {self.path} was written for a different configuration")
        return state

    def save(self, cfg: SearchConfig, summary: SearchSummary, seen: dict) -> None:
        state = {
            "config": cfg.fingerprint(),
            "summary": summary.to_json(),
            "seen": [list(k) for k in seen],
        }
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(state))
        os.replace(tmp, self.path)


def run_search(
    cfg: SearchConfig,
    *,
    checkpoint: Optional[Checkpoint] = None,
    summary: Optional[SearchSummary] = None,
) -> Iterator[SolutionRecord]:
    """Stream new canonical solutions of the box in deterministic order.

    Results are consumed in cell order whatever the worker count, so the
    emitted sequence (ordinals included) is independent of ``cfg.workers``.
    With a checkpoint, an existing state file is resumed from its last cell.
    """
    summary = summary if summary is not None else SearchSummary()
    seen: dict[tuple[int, int, int, int], None] = {}
    resume_after: Optional[Cell] = None
    if checkpoint is not None:
        state = checkpoint.load(cfg)
        if state is not None:
            prev = state["summary"]
            resume_after = tuple(prev["last_cell"]) if prev["last_cell"] else None
            summary.cells = prev["cells"]
            summary.skipped = prev["skipped"]
            summary.branches.update(prev["branches"])
            summary.emitted = prev["emitted"]
            summary.duplicates = prev["duplicates"]
            summary.last_cell = resume_after
            seen = {tuple(k): None for k in state["seen"]}

    def pending() -> Iterator[Cell]:
        for cell in all_cells(cfg):
            if resume_after is not None and cell <= resume_after:
                continue
            yield cell

    def work() -> Iterator[tuple[Cell, Optional[CellOutcome]]]:
        todo = []
        for cell in pending():
            todo.append(cell)
        live = [c for c in todo if skip_reason(c) is None]
        if cfg.workers == 1:
            outcomes = (_scan_task((c, cfg.emit_trivial)) for c in live)
            pool = None
        else:
            pool = ProcessPoolExecutor(max_workers=cfg.workers)
            chunk = max(1, len(live) // (cfg.workers * 8))
            outcomes = pool.map(_scan_task, [(c, cfg.emit_trivial) for c in live], chunksize=chunk)
        try:
            it = iter(outcomes)
            for cell in todo:
                if skip_reason(cell) is not None:
                    yield cell, None
                else:
                    yield cell, next(it)
        finally:
            if pool is not None:
                pool.shutdown(cancel_futures=True)

    since_save = 0
    for cell, outcome in work():
        summary.cells += 1
        if outcome is None:
            summary.skipped += 1
        else:
            summary.branches[outcome.branch] += 1
            if outcome.diagnostic:
                log.debug("cell %s degenerate: %s", cell, outcome.diagnostic)
            for rec in outcome.records:
                key = rec.key()
                if key in seen:
                    summary.duplicates += 1
                    continue
                if quartic_residual(rec.point) != 0:
                    raise AssertionError(f"unverified solution {rec.point} from cell {cell}")
                seen[key] = None
                summary.emitted += 1
                yield SolutionRecord(rec.point, rec.cell, rec.branch, rec.provenance, summary.emitted)
        summary.last_cell = cell
        since_save += 1
        if checkpoint is not None and since_save >= checkpoint.every:
            checkpoint.save(cfg, summary, seen)
            since_save = 0
    if checkpoint is not None:
        checkpoint.save(cfg, summary, seen)


def solution_set(cfg: SearchConfig) -> set[tuple[int, int, int, int]]:
    return {rec.key() for rec in run_search(cfg)}


# -- independent oracle ------------------------------------------------------


def brute_force_oracle(bound: int) -> set[QuarticPoint]:
    """All nontrivial primitive solutions with max |coordinate| <= bound, canonicalized.

    Groups the values x^4 + y^4 over 0 <= x <= y <= bound and pairs up
    distinct representations of the same value.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    fourth = [v**4 for v in range(bound + 1)]
    sums: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for x in range(bound + 1):
        fx = fourth[x]
        for y in range(x, bound + 1):
            sums[fx + fourth[y]].append((x, y))
    found: set[QuarticPoint] = set()
    for reps in sums.values():
        if len(reps) < 2:
            continue
        for (x, y), (z, w) in itertools.combinations(reps, 2):
            q = QuarticPoint(Fraction(x), Fraction(y), Fraction(z), Fraction(w))
            found.add(canonicalize(q))
    return found
