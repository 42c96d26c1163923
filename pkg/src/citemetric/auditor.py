"""Ranking-consistency checks and exhaustive counterexample search.

Three properties are audited, each a statement about a pair of units whose
ranking under an overall-impact indicator should survive a transformation:

* RELATIVE: both units grow proportionally (profile replication by the same
  factor k).
* ABSOLUTE: both units gain the same extra publications (multiset union
  with a common profile Z).
* AGGREGATION: two pairwise rankings at the individual level should carry
  over to the merged group level.

``check_relative``, ``check_absolute`` and ``check_aggregation`` classify a
single tuple of profiles. ``search_counterexamples`` sweeps every tuple from
a bounded profile space and counts reversals (strict ranking flipped) and
collapses (strict ranking became a tie) exactly; it is exhaustive, never
sampled. The scan itself runs on precomputed numpy value tables for speed,
but every value in those tables is produced by the real indicator
implementation on the real transformed profile, and every sampled violation
is replayed through the scalar check before it is reported. A mismatch
raises :class:`WitnessReplayError`.

These properties only make sense for size-dependent indicators; asking
about a size-independent one is an error, not a counterexample. A
per-publication average is allowed to move when the oeuvre changes size.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Mapping, Sequence, Union

import numpy as np

from .indicators import (
    IndicatorId,
    IndicatorValue,
    Number,
    ScoreFunction,
    default_registry,
    evaluate,
    evaluator,
)
from .profiles import CitationProfile, merge, replicate

REPORT_SCHEMA_VERSION = 1

DEFAULT_TUPLE_BUDGET = 1_000_000_000
BUDGET_ENV_VAR = "CITEMETRIC_BUDGET"

#: Fixed partition width for the search; independent of the worker count so
#: that parallel and serial runs agree tuple for tuple.
_CHUNK_WIDTH = 64


class SizeIndependenceError(ValueError):
    """Raised when a consistency check is asked about a size-independent indicator."""


class BudgetExceededError(RuntimeError):
    """Raised before a search whose tuple count exceeds the configured budget."""

    def __init__(self, tuple_count: int, budget: int):
        super().__init__(
            f"search space of {tuple_count} tuples exceeds the budget of {budget}; "
            f"shrink the bounds or raise the budget (flag or {BUDGET_ENV_VAR})"
        )
        self.tuple_count = tuple_count
        self.budget = budget


class WitnessReplayError(RuntimeError):
    """Raised when a sampled violation fails to reproduce under the scalar check."""


class ConsistencyProperty(Enum):
    RELATIVE = "relative"
    ABSOLUTE = "absolute"
    AGGREGATION = "aggregation"


class VerdictKind(Enum):
    PRESERVED = "PRESERVED"
    REVERSED = "REVERSED"
    COLLAPSED = "COLLAPSED"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one consistency check.

    ``before`` and ``after`` hold the indicator values of the two compared
    units around the transformation. For the aggregation check, ``before``
    is the first individual pair (X1, Y1); the precondition guarantees the
    second pair points the same way.
    """

    kind: VerdictKind
    before: tuple[IndicatorValue, IndicatorValue]
    after: tuple[IndicatorValue, IndicatorValue]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "before": [self.before[0].value, self.before[1].value],
            "after": [self.after[0].value, self.after[1].value],
        }


def _classify(bx: Number, by: Number, ax: Number, ay: Number) -> VerdictKind:
    before = (bx > by) - (bx < by)
    if before == 0:
        return VerdictKind.NOT_APPLICABLE
    after = (ax > ay) - (ax < ay)
    if after == before:
        return VerdictKind.PRESERVED
    if after == 0:
        return VerdictKind.COLLAPSED
    return VerdictKind.REVERSED


def _require_size_dependent(indicator: IndicatorId) -> None:
    if not indicator.size_dependent:
        raise SizeIndependenceError(
            f"{indicator.label} is size-independent; the consistency properties "
            "apply to overall-impact indicators only"
        )


def check_relative(
    indicator: IndicatorId, x: CitationProfile, y: CitationProfile, k: int
) -> Verdict:
    """Does the X-vs-Y ranking survive both units replicating k-fold?"""
    _require_size_dependent(indicator)
    if k < 2:
        raise ValueError(f"replication factor must be >= 2, got {k}")
    bx, by = evaluate(indicator, x), evaluate(indicator, y)
    ax, ay = evaluate(indicator, replicate(x, k)), evaluate(indicator, replicate(y, k))
    return Verdict(_classify(bx.value, by.value, ax.value, ay.value), (bx, by), (ax, ay))


def check_absolute(
    indicator: IndicatorId, x: CitationProfile, y: CitationProfile, z: CitationProfile
) -> Verdict:
    """Does the X-vs-Y ranking survive both units gaining the same profile Z?"""
    _require_size_dependent(indicator)
    bx, by = evaluate(indicator, x), evaluate(indicator, y)
    ax, ay = evaluate(indicator, merge(x, z)), evaluate(indicator, merge(y, z))
    return Verdict(_classify(bx.value, by.value, ax.value, ay.value), (bx, by), (ax, ay))


def check_aggregation(
    indicator: IndicatorId,
    x1: CitationProfile,
    x2: CitationProfile,
    y1: CitationProfile,
    y2: CitationProfile,
) -> Verdict:
    """Do two same-direction individual rankings carry over to merged groups?

    Applicable only when X1 vs Y1 and X2 vs Y2 are both strict and point the
    same way; otherwise the verdict is NOT_APPLICABLE.
    """
    _require_size_dependent(indicator)
    b1x, b1y = evaluate(indicator, x1), evaluate(indicator, y1)
    b2x, b2y = evaluate(indicator, x2), evaluate(indicator, y2)
    ax = evaluate(indicator, merge(x1, x2))
    ay = evaluate(indicator, merge(y1, y2))
    d1 = (b1x.value > b1y.value) - (b1x.value < b1y.value)
    d2 = (b2x.value > b2y.value) - (b2x.value < b2y.value)
    if d1 == 0 or d1 != d2:
        return Verdict(VerdictKind.NOT_APPLICABLE, (b1x, b1y), (ax, ay))
    return Verdict(_classify(b1x.value, b1y.value, ax.value, ay.value), (b1x, b1y), (ax, ay))


# ---------------------------------------------------------------------------
# Witnesses and violations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RelativeWitness:
    x: CitationProfile
    y: CitationProfile
    k: int

    def to_json_dict(self) -> dict:
        return {"x": list(self.x.counts), "y": list(self.y.counts), "k": self.k}


@dataclass(frozen=True)
class AbsoluteWitness:
    x: CitationProfile
    y: CitationProfile
    z: CitationProfile

    def to_json_dict(self) -> dict:
        return {"x": list(self.x.counts), "y": list(self.y.counts), "z": list(self.z.counts)}


@dataclass(frozen=True)
class AggregationWitness:
    x1: CitationProfile
    x2: CitationProfile
    y1: CitationProfile
    y2: CitationProfile

    def to_json_dict(self) -> dict:
        return {
            "x1": list(self.x1.counts),
            "x2": list(self.x2.counts),
            "y1": list(self.y1.counts),
            "y2": list(self.y2.counts),
        }


Witness = Union[RelativeWitness, AbsoluteWitness, AggregationWitness]


@dataclass(frozen=True)
class Violation:
    """One concrete tuple on which an indicator breaks a property.

    Violations are self-certifying: replaying the witnesses through the
    matching scalar check reproduces the stored verdict.
    """

    property: ConsistencyProperty
    witnesses: Witness
    verdict: Verdict

    def __post_init__(self) -> None:
        if self.verdict.kind not in (VerdictKind.REVERSED, VerdictKind.COLLAPSED):
            raise ValueError(f"a violation must be REVERSED or COLLAPSED, got {self.verdict.kind}")

    def replay(self, indicator: IndicatorId) -> Verdict:
        w = self.witnesses
        if self.property is ConsistencyProperty.RELATIVE:
            return check_relative(indicator, w.x, w.y, w.k)
        if self.property is ConsistencyProperty.ABSOLUTE:
            return check_absolute(indicator, w.x, w.y, w.z)
        return check_aggregation(indicator, w.x1, w.x2, w.y1, w.y2)

    def to_json_dict(self) -> dict:
        return {
            "property": self.property.value,
            "witnesses": self.witnesses.to_json_dict(),
            "verdict": self.verdict.to_json_dict(),
        }


# ---------------------------------------------------------------------------
# Profile enumeration
# ---------------------------------------------------------------------------


def enumerate_profiles(max_n: int, max_c: int) -> list[CitationProfile]:
    """Every canonical profile with at most ``max_n`` publications and every
    count at most ``max_c``, each exactly once.

    Order is deterministic and documented: ascending by publication count,
    then ascending lexicographically on the non-increasing count tuple.
    """
    if max_n < 0 or max_c < 0:
        raise ValueError("bounds must be non-negative")
    return enumerate_profiles_over(range(max_c + 1), max_n)


def enumerate_profiles_over(values: Iterable[int], max_n: int) -> list[CitationProfile]:
    """Like :func:`enumerate_profiles` but with counts drawn from an explicit
    value set, e.g. multiples of ten. Same ordering guarantee."""
    alphabet = sorted(set(values), reverse=True)
    if alphabet and alphabet[-1] < 0:
        raise ValueError("count values must be non-negative")
    out: list[CitationProfile] = []
    for n in range(max_n + 1):
        # Drawing from a descending alphabet makes each combination a valid
        # non-increasing tuple; sorting fixes the documented emission order.
        level = sorted(combinations_with_replacement(alphabet, n))
        out.extend(CitationProfile._wrap(counts) for counts in level)
    return out


# ---------------------------------------------------------------------------
# Bounds, budget, reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchBounds:
    """Limits of one exhaustive search: profile size, count ceiling, and the
    largest replication factor (used by the RELATIVE property only)."""

    max_pubs: int
    max_cites: int
    max_k: int | None = None

    def to_json_dict(self) -> dict:
        return {"max_pubs": self.max_pubs, "max_cites": self.max_cites, "max_k": self.max_k}


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}") from exc
    return DEFAULT_TUPLE_BUDGET


def _tuple_count(prop: ConsistencyProperty, n_profiles: int, max_k: int | None) -> int:
    if prop is ConsistencyProperty.RELATIVE:
        if max_k is None or max_k < 2:
            raise ValueError("RELATIVE search requires bounds.max_k >= 2")
        return n_profiles * n_profiles * (max_k - 1)
    if prop is ConsistencyProperty.ABSOLUTE:
        return n_profiles**3
    return n_profiles**4


@dataclass(frozen=True)
class AuditReport:
    """Aggregate outcome of one exhaustive search.

    A zero in ``reversed_count`` (or ``collapsed_count``) means no tuple in
    the whole bounded space violates the property that way, because the
    search enumerates every tuple. Samples are the first violations in the
    canonical tuple order, capped.
    """

    indicator: IndicatorId
    property: ConsistencyProperty
    bounds: SearchBounds
    profiles_examined: int
    tuples_examined: int
    reversed_count: int
    collapsed_count: int
    preserved_count: int
    not_applicable_count: int
    reversed_samples: tuple[Violation, ...]
    collapsed_samples: tuple[Violation, ...]
    elapsed_seconds: float
    alphabet: tuple[int, ...] | None = None

    def to_json_dict(self, include_elapsed: bool = True) -> dict:
        doc = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "indicator": self.indicator.label,
            "property": self.property.value,
            "bounds": self.bounds.to_json_dict(),
            "alphabet": list(self.alphabet) if self.alphabet is not None else None,
            "profiles_examined": self.profiles_examined,
            "tuples_examined": self.tuples_examined,
            "counts": {
                "reversed": self.reversed_count,
                "collapsed": self.collapsed_count,
                "preserved": self.preserved_count,
                "not_applicable": self.not_applicable_count,
            },
            "reversed_samples": [v.to_json_dict() for v in self.reversed_samples],
            "collapsed_samples": [v.to_json_dict() for v in self.collapsed_samples],
        }
        if include_elapsed:
            doc["elapsed_seconds"] = self.elapsed_seconds
        return doc


# ---------------------------------------------------------------------------
# Vectorized scan kernels
# ---------------------------------------------------------------------------


@dataclass
class _ChunkResult:
    reversed: int = 0
    collapsed: int = 0
    preserved: int = 0
    not_applicable: int = 0
    reversed_idx: list[tuple[int, ...]] = field(default_factory=list)
    collapsed_idx: list[tuple[int, ...]] = field(default_factory=list)


def _scan_absolute_chunk(
    values: np.ndarray, merged: np.ndarray, xs: range, cap: int
) -> _ChunkResult:
    res = _ChunkResult()
    n = values.shape[0]
    for x in xs:
        before = values[x] - values
        bpos = before > 0
        bneg = before < 0
        n_strict = int(bpos.sum()) + int(bneg.sum())
        res.not_applicable += (n - n_strict) * n
        if n_strict == 0:
            continue
        diff = merged[x][np.newaxis, :] - merged  # diff[y, z] = I(x+z) - I(y+z)
        neg = diff < 0
        pos = diff > 0
        neg_per_y = neg.sum(axis=1)
        pos_per_y = pos.sum(axis=1)
        zero_per_y = n - neg_per_y - pos_per_y
        res.reversed += int(neg_per_y[bpos].sum()) + int(pos_per_y[bneg].sum())
        res.collapsed += int(zero_per_y[bpos].sum()) + int(zero_per_y[bneg].sum())
        res.preserved += int(pos_per_y[bpos].sum()) + int(neg_per_y[bneg].sum())
        if len(res.reversed_idx) < cap:
            mask = (neg & bpos[:, np.newaxis]) | (pos & bneg[:, np.newaxis])
            for y, z in np.argwhere(mask)[: cap - len(res.reversed_idx)]:
                res.reversed_idx.append((x, int(y), int(z)))
        if len(res.collapsed_idx) < cap:
            mask = (bpos | bneg)[:, np.newaxis] & (diff == 0)
            for y, z in np.argwhere(mask)[: cap - len(res.collapsed_idx)]:
                res.collapsed_idx.append((x, int(y), int(z)))
    return res


def _scan_relative_chunk(
    values: np.ndarray, replicated: Sequence[tuple[int, np.ndarray]], xs: range, cap: int
) -> _ChunkResult:
    res = _ChunkResult()
    n = values.shape[0]
    n_k = len(replicated)
    for x in xs:
        before = values[x] - values
        bpos = before > 0
        bneg = before < 0
        n_strict = int(bpos.sum()) + int(bneg.sum())
        res.not_applicable += (n - n_strict) * n_k
        if n_strict == 0:
            continue
        # diff[y, j] = I(k_j * x) - I(k_j * y), columns in ascending k order
        diff = np.stack([rep[x] - rep for (_, rep) in replicated], axis=1)
        neg = diff < 0
        pos = diff > 0
        neg_per_y = neg.sum(axis=1)
        pos_per_y = pos.sum(axis=1)
        zero_per_y = n_k - neg_per_y - pos_per_y
        res.reversed += int(neg_per_y[bpos].sum()) + int(pos_per_y[bneg].sum())
        res.collapsed += int(zero_per_y[bpos].sum()) + int(zero_per_y[bneg].sum())
        res.preserved += int(pos_per_y[bpos].sum()) + int(neg_per_y[bneg].sum())
        if len(res.reversed_idx) < cap:
            mask = (neg & bpos[:, np.newaxis]) | (pos & bneg[:, np.newaxis])
            for y, j in np.argwhere(mask)[: cap - len(res.reversed_idx)]:
                res.reversed_idx.append((x, int(y), replicated[j][0]))
        if len(res.collapsed_idx) < cap:
            mask = (bpos | bneg)[:, np.newaxis] & (diff == 0)
            for y, j in np.argwhere(mask)[: cap - len(res.collapsed_idx)]:
                res.collapsed_idx.append((x, int(y), replicated[j][0]))
    return res


def _scan_aggregation_chunk(
    values: np.ndarray, merged: np.ndarray, pair_sign: np.ndarray, xs: range, cap: int
) -> _ChunkResult:
    res = _ChunkResult()
    n = values.shape[0]
    for x1 in xs:
        d1 = np.sign(values[x1] - values).astype(np.int8)  # per y1
        # applicable[x2, y1, y2]: both pairs strict, same direction
        direction = d1[np.newaxis, :, np.newaxis]
        applicable = (pair_sign[:, np.newaxis, :] == direction) & (direction != 0)
        n_app = int(applicable.sum())
        res.not_applicable += n**3 - n_app
        if n_app == 0:
            continue
        diff = merged[x1][:, np.newaxis, np.newaxis] - merged[np.newaxis, :, :]
        rev = applicable & (((diff < 0) & (direction > 0)) | ((diff > 0) & (direction < 0)))
        col = applicable & (diff == 0)
        n_rev = int(rev.sum())
        n_col = int(col.sum())
        res.reversed += n_rev
        res.collapsed += n_col
        res.preserved += n_app - n_rev - n_col
        if n_rev and len(res.reversed_idx) < cap:
            for x2, y1, y2 in np.argwhere(rev)[: cap - len(res.reversed_idx)]:
                res.reversed_idx.append((x1, int(x2), int(y1), int(y2)))
        if n_col and len(res.collapsed_idx) < cap:
            for x2, y1, y2 in np.argwhere(col)[: cap - len(res.collapsed_idx)]:
                res.collapsed_idx.append((x1, int(x2), int(y1), int(y2)))
    return res


def _value_dtype(sample: Number) -> type:
    return np.int64 if isinstance(sample, int) else np.float64


def _profile_values(fn: Callable[[CitationProfile], Number], profiles: Sequence[CitationProfile]) -> np.ndarray:
    values = [fn(p) for p in profiles]
    dtype = _value_dtype(values[0]) if values else np.int64
    return np.asarray(values, dtype=dtype)


def _merged_values(fn: Callable[[CitationProfile], Number], profiles: Sequence[CitationProfile]) -> np.ndarray:
    # merged[i, j] = I(profiles[i] U profiles[j]); symmetric because multiset
    # union commutes, so only the lower triangle is evaluated.
    n = len(profiles)
    dtype = _value_dtype(fn(merge(profiles[0], profiles[0]))) if n else np.int64
    table = np.zeros((n, n), dtype=dtype)
    for i, p in enumerate(profiles):
        for j in range(i + 1):
            v = fn(merge(p, profiles[j]))
            table[i, j] = v
            table[j, i] = v
    return table


def _x_chunks(n: int) -> list[range]:
    return [range(lo, min(lo + _CHUNK_WIDTH, n)) for lo in range(0, n, _CHUNK_WIDTH)]


def _run_chunks(
    kernel: Callable[[range], _ChunkResult], chunks: Sequence[range], workers: int
) -> list[_ChunkResult]:
    if workers <= 1 or len(chunks) <= 1:
        return [kernel(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(kernel, chunks))


def _merge_chunk_results(parts: Sequence[_ChunkResult], cap: int) -> _ChunkResult:
    total = _ChunkResult()
    for part in parts:  # chunk list is in ascending x order already
        total.reversed += part.reversed
        total.collapsed += part.collapsed
        total.preserved += part.preserved
        total.not_applicable += part.not_applicable
        total.reversed_idx.extend(part.reversed_idx)
        total.collapsed_idx.extend(part.collapsed_idx)
    total.reversed_idx = total.reversed_idx[:cap]
    total.collapsed_idx = total.collapsed_idx[:cap]
    return total


def _certify(
    indicator: IndicatorId,
    prop: ConsistencyProperty,
    profiles: Sequence[CitationProfile],
    idx: tuple[int, ...],
    expected: VerdictKind,
) -> Violation:
    if prop is ConsistencyProperty.RELATIVE:
        x, y, k = idx
        witness: Witness = RelativeWitness(profiles[x], profiles[y], k)
        verdict = check_relative(indicator, profiles[x], profiles[y], k)
    elif prop is ConsistencyProperty.ABSOLUTE:
        x, y, z = idx
        witness = AbsoluteWitness(profiles[x], profiles[y], profiles[z])
        verdict = check_absolute(indicator, profiles[x], profiles[y], profiles[z])
    else:
        x1, x2, y1, y2 = idx
        witness = AggregationWitness(profiles[x1], profiles[x2], profiles[y1], profiles[y2])
        verdict = check_aggregation(
            indicator, profiles[x1], profiles[x2], profiles[y1], profiles[y2]
        )
    if verdict.kind is not expected:
        raise WitnessReplayError(
            f"scan found {expected.value} at {idx} but the scalar check says {verdict.kind.value}"
        )
    return Violation(prop, witness, verdict)


def search_counterexamples(
    indicator: IndicatorId,
    prop: ConsistencyProperty | str,
    bounds: SearchBounds,
    *,
    budget: int | None = None,
    workers: int = 1,
    sample_cap: int = 5,
    alphabet: Sequence[int] | None = None,
) -> AuditReport:
    """Exhaustively test one property of one indicator over a bounded space.

    Every tuple of profiles from the space is checked; the report's counts
    are exact and deterministic for a given (indicator, property, bounds).
    ``alphabet`` restricts counts to an explicit value set instead of the
    full range 0..max_cites (the ceiling still applies). The search refuses
    to start if the tuple count exceeds the budget.
    """
    prop = ConsistencyProperty(prop)
    _require_size_dependent(indicator)
    if alphabet is None:
        profiles = enumerate_profiles(bounds.max_pubs, bounds.max_cites)
        used_alphabet = None
    else:
        values = [v for v in alphabet if v <= bounds.max_cites]
        profiles = enumerate_profiles_over(values, bounds.max_pubs)
        used_alphabet = tuple(sorted(set(values)))
    n = len(profiles)
    tuples = _tuple_count(prop, n, bounds.max_k)
    limit = _resolve_budget(budget)
    if tuples > limit:
        raise BudgetExceededError(tuples, limit)

    started = time.perf_counter()
    fn = evaluator(indicator)
    values_table = _profile_values(fn, profiles)
    chunks = _x_chunks(n)

    if prop is ConsistencyProperty.RELATIVE:
        replicated = [
            (k, _profile_values(fn, [replicate(p, k) for p in profiles]))
            for k in range(2, bounds.max_k + 1)
        ]
        kernel = lambda c: _scan_relative_chunk(values_table, replicated, c, sample_cap)
    elif prop is ConsistencyProperty.ABSOLUTE:
        merged_table = _merged_values(fn, profiles)
        kernel = lambda c: _scan_absolute_chunk(values_table, merged_table, c, sample_cap)
    else:
        merged_table = _merged_values(fn, profiles)
        pair_sign = np.sign(
            values_table[:, np.newaxis] - values_table[np.newaxis, :]
        ).astype(np.int8)
        kernel = lambda c: _scan_aggregation_chunk(
            values_table, merged_table, pair_sign, c, sample_cap
        )

    total = _merge_chunk_results(_run_chunks(kernel, chunks, workers), sample_cap)
    reversed_samples = tuple(
        _certify(indicator, prop, profiles, idx, VerdictKind.REVERSED)
        for idx in total.reversed_idx
    )
    collapsed_samples = tuple(
        _certify(indicator, prop, profiles, idx, VerdictKind.COLLAPSED)
        for idx in total.collapsed_idx
    )
    elapsed = time.perf_counter() - started

    checked = total.reversed + total.collapsed + total.preserved + total.not_applicable
    if checked != tuples:
        raise WitnessReplayError(
            f"scan covered {checked} tuples but the space holds {tuples}"
        )
    return AuditReport(
        indicator=indicator,
        property=prop,
        bounds=bounds,
        profiles_examined=n,
        tuples_examined=tuples,
        reversed_count=total.reversed,
        collapsed_count=total.collapsed,
        preserved_count=total.preserved,
        not_applicable_count=total.not_applicable,
        reversed_samples=reversed_samples,
        collapsed_samples=collapsed_samples,
        elapsed_seconds=elapsed,
        alphabet=used_alphabet,
    )


DEFAULT_VERIFY_BOUNDS: Mapping[ConsistencyProperty, SearchBounds] = {
    ConsistencyProperty.RELATIVE: SearchBounds(4, 6, max_k=3),
    ConsistencyProperty.ABSOLUTE: SearchBounds(4, 6),
    ConsistencyProperty.AGGREGATION: SearchBounds(3, 4),
}


def verify_scoring_rules(
    registry: Sequence[ScoreFunction] | None = None,
    bounds: Mapping[ConsistencyProperty, SearchBounds] | None = None,
    *,
    budget: int | None = None,
    workers: int = 1,
    sample_cap: int = 5,
) -> list[AuditReport]:
    """Run all three property searches for every score function.

    Scoring rules are additive under merge and replication, so no report
    should ever show a reversal; the searches confirm that exhaustively
    rather than taking the algebra on faith. Returns one report per
    (score function, property), in registry then property order.
    """
    if registry is None:
        registry = default_registry()
    search_bounds = dict(DEFAULT_VERIFY_BOUNDS)
    if bounds:
        search_bounds.update(bounds)
    reports = []
    for f in registry:
        indicator = IndicatorId("scoring_rule", score=f)
        for prop in ConsistencyProperty:
            reports.append(
                search_counterexamples(
                    indicator,
                    prop,
                    search_bounds[prop],
                    budget=budget,
                    workers=workers,
                    sample_cap=sample_cap,
                )
            )
    return reports


def has_reversals(reports: Iterable[AuditReport]) -> bool:
    return any(r.reversed_count > 0 for r in reports)
