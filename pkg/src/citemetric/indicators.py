"""Citation indicators over profiles.

Two families live here. Threshold-intersection indicators (the h-index, its
slope generalization, and the g, h(2) and w variants) read a value off the
citation curve. Scoring rules assign each publication a score through a
monotone function of its citation count and sum the scores; publication
count, total citations and the highly-cited-publications count are all
scoring rules. Per-publication averages (mean, median, percent highly
cited) form the size-independent group: they are normalized for oeuvre
size and are invariant under profile replication.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Union

from .profiles import CitationProfile

Number = Union[int, float]

#: Score functions are validated pointwise up to this citation count.
SCORE_CHECK_LIMIT = 512


class EmptyProfileError(ValueError):
    """Raised when a size-independent indicator is asked about an empty profile."""


# ---------------------------------------------------------------------------
# Score functions and the scoring-rule family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScoreFunction:
    """A monotone per-publication score, keyed by name.

    ``fn`` maps a citation count to a non-negative score and must be
    non-decreasing; this is checked pointwise on construction for counts up
    to ``check_limit``. Equality and hashing go by name, so two instances
    wrapping the same registry entry are interchangeable.
    """

    name: str
    fn: Callable[[int], Number] = field(compare=False)
    check_limit: int = field(default=SCORE_CHECK_LIMIT, compare=False, repr=False)

    def __post_init__(self) -> None:
        previous = self.fn(0)
        if previous < 0:
            raise ValueError(f"score function {self.name!r} is negative at 0: {previous!r}")
        for c in range(1, self.check_limit + 1):
            value = self.fn(c)
            if value < previous:
                raise ValueError(
                    f"score function {self.name!r} decreases between {c - 1} and {c}"
                )
            previous = value

    def __call__(self, count: int) -> Number:
        return self.fn(count)


def _unit_score(count: int) -> int:
    return 1


def _identity_score(count: int) -> int:
    return count


def _sqrt_score(count: int) -> float:
    return math.sqrt(count)


def _ln1p_score(count: int) -> float:
    # log(1 + c) rather than log(c) so that uncited publications are defined.
    return math.log1p(count)


def _step_score(count: int, threshold: int) -> int:
    return 1 if count >= threshold else 0


UNIT_SCORE = ScoreFunction("unit", _unit_score)
IDENTITY_SCORE = ScoreFunction("identity", _identity_score)
SQRT_SCORE = ScoreFunction("sqrt", _sqrt_score)
LN1P_SCORE = ScoreFunction("ln1p", _ln1p_score)


def step_function(threshold: int) -> ScoreFunction:
    """Unit step at ``threshold``: 1 for counts >= threshold, else 0."""
    if threshold < 0:
        raise ValueError(f"step threshold must be >= 0, got {threshold}")
    return ScoreFunction(f"step({threshold})", partial(_step_score, threshold=threshold))


_NAMED_SCORES = {
    "unit": UNIT_SCORE,
    "identity": IDENTITY_SCORE,
    "sqrt": SQRT_SCORE,
    "ln1p": LN1P_SCORE,
}

_STEP_NAME = re.compile(r"^step\((\d+)\)$")


def resolve_score_function(name: str) -> ScoreFunction:
    """Look up a registry score function by name, e.g. ``sqrt`` or ``step(10)``."""
    if name in _NAMED_SCORES:
        return _NAMED_SCORES[name]
    m = _STEP_NAME.match(name)
    if m:
        return step_function(int(m.group(1)))
    known = ", ".join(sorted(_NAMED_SCORES) + ["step(T)"])
    raise ValueError(f"unknown score function {name!r}; known: {known}")


def default_registry() -> tuple[ScoreFunction, ...]:
    """The score functions shipped with the package."""
    return (UNIT_SCORE, IDENTITY_SCORE, step_function(3), SQRT_SCORE, LN1P_SCORE)


def scoring_rule(p: CitationProfile, f: ScoreFunction) -> Number:
    """Sum of per-publication scores, f(c1) + f(c2) + ... + f(cn).

    The raw sum is returned; wrapping it in a further increasing function
    cannot change any ranking. Integer-valued score functions yield exact
    integer sums.
    """
    return sum(f.fn(c) for c in p.counts)


# ---------------------------------------------------------------------------
# Threshold-intersection indicators
# ---------------------------------------------------------------------------


def h_index(p: CitationProfile) -> int:
    """Largest h such that at least h publications have at least h citations."""
    h = 0
    for i, c in enumerate(p.counts, start=1):
        if c >= i:
            h = i
        else:
            break
    return h


def generalized_h(p: CitationProfile, a: Fraction | int | str) -> int:
    """Largest h such that at least h publications have at least a*h citations.

    ``a`` is the slope of the intersection line through the citation curve;
    a = 1 recovers the plain h-index. The threshold comparison runs in exact
    rational arithmetic, so fractional slopes like 1/2 never misclassify a
    boundary count. Floats are rejected: pass a Fraction or a string.
    """
    if isinstance(a, float):
        raise TypeError("slope must be exact; pass a Fraction, int, or string like '1/2'")
    slope = Fraction(a)
    if slope <= 0:
        raise ValueError(f"slope must be positive, got {slope}")
    h = 0
    for i, c in enumerate(p.counts, start=1):
        if c >= slope * i:
            h = i
        else:
            break
    return h


def g_index(p: CitationProfile) -> int:
    """Largest g such that the g most-cited publications total at least g**2 citations."""
    g = 0
    running = 0
    for i, c in enumerate(p.counts, start=1):
        running += c
        if running >= i * i:
            g = i
    return g


def h2_index(p: CitationProfile) -> int:
    """Largest h such that at least h publications have at least h**2 citations."""
    h = 0
    for i, c in enumerate(p.counts, start=1):
        if c >= i * i:
            h = i
        else:
            break
    return h


def w_index(p: CitationProfile) -> int:
    """Largest w such that at least w publications have at least 10*w citations."""
    return generalized_h(p, 10)


# ---------------------------------------------------------------------------
# Counting and size-independent indicators
# ---------------------------------------------------------------------------


def highly_cited_count(p: CitationProfile, t: int) -> int:
    """Number of publications with at least ``t`` citations."""
    if t < 0:
        raise ValueError(f"threshold must be >= 0, got {t}")
    return sum(1 for c in p.counts if c >= t)


def total_citations(p: CitationProfile) -> int:
    return sum(p.counts)


def publication_count(p: CitationProfile) -> int:
    return len(p.counts)


def mean_citations(p: CitationProfile) -> float:
    if len(p) == 0:
        raise EmptyProfileError("mean citations is undefined for an empty profile")
    return total_citations(p) / len(p)


def median_citations(p: CitationProfile) -> float:
    """Middle citation count; the mean of the two middle values for even lengths."""
    n = len(p)
    if n == 0:
        raise EmptyProfileError("median citations is undefined for an empty profile")
    mid = n // 2
    if n % 2 == 1:
        return float(p.counts[mid])
    return (p.counts[mid - 1] + p.counts[mid]) / 2


def pct_highly_cited(p: CitationProfile, t: int) -> float:
    """Percentage of publications with at least ``t`` citations."""
    if len(p) == 0:
        raise EmptyProfileError("percent highly cited is undefined for an empty profile")
    return 100.0 * highly_cited_count(p, t) / len(p)


# ---------------------------------------------------------------------------
# Indicator identifiers and dispatch
# ---------------------------------------------------------------------------

#: Indicators that never decrease when a publication is added.
SIZE_DEPENDENT_NAMES = frozenset(
    {
        "h",
        "generalized_h",
        "g",
        "h2",
        "w",
        "total_citations",
        "publication_count",
        "highly_cited",
        "scoring_rule",
    }
)

#: Indicators normalized for oeuvre size (invariant under replication).
SIZE_INDEPENDENT_NAMES = frozenset({"mean_citations", "median_citations", "pct_highly_cited"})

_SLOPE_NAMES = frozenset({"generalized_h"})
_THRESHOLD_NAMES = frozenset({"highly_cited", "pct_highly_cited"})
_SCORE_NAMES = frozenset({"scoring_rule"})


@dataclass(frozen=True)
class IndicatorId:
    """A named indicator together with any parameters it requires.

    Parametric names: ``generalized_h`` takes a positive slope,
    ``highly_cited`` and ``pct_highly_cited`` take a non-negative threshold,
    ``scoring_rule`` takes a :class:`ScoreFunction`. All other names take no
    parameter. Every id is either size-dependent or size-independent; the
    tag is fixed by the name.
    """

    name: str
    slope: Fraction | None = None
    threshold: int | None = None
    score: ScoreFunction | None = None

    def __post_init__(self) -> None:
        if self.name not in SIZE_DEPENDENT_NAMES | SIZE_INDEPENDENT_NAMES:
            raise ValueError(f"unknown indicator name {self.name!r}")
        if self.name in _SLOPE_NAMES:
            if self.slope is None:
                raise ValueError(f"{self.name} requires a slope")
            if isinstance(self.slope, float):
                raise TypeError("slope must be exact; pass a Fraction, int, or string")
            object.__setattr__(self, "slope", Fraction(self.slope))
            if self.slope <= 0:
                raise ValueError(f"slope must be positive, got {self.slope}")
        elif self.slope is not None:
            raise ValueError(f"{self.name} takes no slope")
        if self.name in _THRESHOLD_NAMES:
            if self.threshold is None:
                raise ValueError(f"{self.name} requires a threshold")
            if self.threshold < 0:
                raise ValueError(f"threshold must be >= 0, got {self.threshold}")
        elif self.threshold is not None:
            raise ValueError(f"{self.name} takes no threshold")
        if self.name in _SCORE_NAMES:
            if self.score is None:
                raise ValueError(f"{self.name} requires a score function")
        elif self.score is not None:
            raise ValueError(f"{self.name} takes no score function")

    @property
    def size_dependent(self) -> bool:
        return self.name in SIZE_DEPENDENT_NAMES

    @property
    def label(self) -> str:
        """Canonical text form, parseable by :func:`parse_indicator_id`."""
        if self.slope is not None:
            return f"{self.name}({self.slope})"
        if self.threshold is not None:
            return f"{self.name}({self.threshold})"
        if self.score is not None:
            return f"{self.name}({self.score.name})"
        return self.name


_ID_TEXT = re.compile(r"^([a-z0-9_]+)(?:\((.+)\))?$")


def parse_indicator_id(text: str) -> IndicatorId:
    """Parse an indicator label such as ``h``, ``generalized_h(1/2)``,
    ``highly_cited(10)`` or ``scoring_rule(step(3))``."""
    m = _ID_TEXT.match(text.strip())
    if not m:
        raise ValueError(f"malformed indicator id {text!r}")
    name, param = m.group(1), m.group(2)
    if param is None:
        return IndicatorId(name)
    if name in _SLOPE_NAMES:
        try:
            slope = Fraction(param)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad slope {param!r} in {text!r}") from exc
        return IndicatorId(name, slope=slope)
    if name in _THRESHOLD_NAMES:
        try:
            threshold = int(param)
        except ValueError as exc:
            raise ValueError(f"bad threshold {param!r} in {text!r}") from exc
        return IndicatorId(name, threshold=threshold)
    if name in _SCORE_NAMES:
        return IndicatorId(name, score=resolve_score_function(param))
    raise ValueError(f"indicator {name!r} takes no parameter")


@dataclass(frozen=True)
class IndicatorValue:
    """A computed indicator value. Ordering is defined only within one id."""

    id: IndicatorId
    value: Number

    def _check_comparable(self, other: "IndicatorValue") -> None:
        if not isinstance(other, IndicatorValue):
            raise TypeError(f"cannot compare IndicatorValue with {type(other).__name__}")
        if self.id != other.id:
            raise ValueError(
                f"cannot order values of different indicators: {self.id.label} vs {other.id.label}"
            )

    def __lt__(self, other: "IndicatorValue") -> bool:
        self._check_comparable(other)
        return self.value < other.value

    def __le__(self, other: "IndicatorValue") -> bool:
        self._check_comparable(other)
        return self.value <= other.value

    def __gt__(self, other: "IndicatorValue") -> bool:
        self._check_comparable(other)
        return self.value > other.value

    def __ge__(self, other: "IndicatorValue") -> bool:
        self._check_comparable(other)
        return self.value >= other.value


def evaluator(indicator: IndicatorId) -> Callable[[CitationProfile], Number]:
    """Resolve an id to a plain callable, for hot loops."""
    name = indicator.name
    if name == "h":
        return h_index
    if name == "generalized_h":
        return partial(generalized_h, a=indicator.slope)
    if name == "g":
        return g_index
    if name == "h2":
        return h2_index
    if name == "w":
        return w_index
    if name == "total_citations":
        return total_citations
    if name == "publication_count":
        return publication_count
    if name == "highly_cited":
        return partial(highly_cited_count, t=indicator.threshold)
    if name == "scoring_rule":
        return partial(scoring_rule, f=indicator.score)
    if name == "mean_citations":
        return mean_citations
    if name == "median_citations":
        return median_citations
    if name == "pct_highly_cited":
        return partial(pct_highly_cited, t=indicator.threshold)
    raise ValueError(f"unknown indicator name {name!r}")  # pragma: no cover


def evaluate(indicator: IndicatorId, p: CitationProfile) -> IndicatorValue:
    """Compute one indicator on one profile."""
    return IndicatorValue(indicator, evaluator(indicator)(p))
