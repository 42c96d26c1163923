"""Citation profiles: canonical multisets of per-publication citation counts.

A profile records, for one unit of analysis (a scientist, a research group,
a journal), how often each of its publications has been cited. Nothing else
about a publication is kept. Profiles are immutable and all operations on
them are pure functions, so they can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True)
class CitationProfile:
    """A multiset of non-negative citation counts, one per publication.

    Counts are stored in non-increasing order (the canonical form), so two
    profiles holding the same multiset compare equal. The empty profile is
    valid and describes a unit with no publications.

    Direct construction requires already-canonical input; use
    :func:`canonicalize` for raw data.
    """

    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for i, c in enumerate(self.counts):
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"citation count at index {i} is not an integer: {c!r}")
            if c < 0:
                raise ValueError(f"negative citation count at index {i}: {c}")
        if any(a < b for a, b in zip(self.counts, self.counts[1:])):
            raise ValueError("counts must be non-increasing; build profiles via canonicalize()")

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"CitationProfile({list(self.counts)!r})"

    @classmethod
    def _wrap(cls, counts: tuple[int, ...]) -> "CitationProfile":
        # Trusted fast path for internal callers that guarantee canonical
        # input; skips validation, which matters in the auditor's hot loops.
        p = object.__new__(cls)
        object.__setattr__(p, "counts", counts)
        return p


EMPTY_PROFILE = CitationProfile()


def canonicalize(raw_counts: Iterable[int]) -> CitationProfile:
    """Build a profile from counts in any order.

    Rejects negative or non-integer values, reporting the offending input
    index. Input order is irrelevant to every downstream indicator.
    """
    values = list(raw_counts)
    for i, c in enumerate(values):
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"citation count at index {i} is not an integer: {c!r}")
        if c < 0:
            raise ValueError(f"negative citation count at index {i}: {c}")
    values.sort(reverse=True)
    return CitationProfile._wrap(tuple(values))


def merge(p: CitationProfile, q: CitationProfile) -> CitationProfile:
    """Multiset union of two profiles, re-canonicalized.

    This is how a group's profile is derived from its members: publication
    counts add, total citations add. Jointly authored publications are NOT
    deduplicated; each member contributes its own copy.
    """
    return CitationProfile._wrap(tuple(sorted(p.counts + q.counts, reverse=True)))


def replicate(p: CitationProfile, k: int) -> CitationProfile:
    """Profile with every count of ``p`` appearing ``k`` times as often.

    Models k-fold proportional growth of an oeuvre (k = 2: the unit doubled
    its publications while the citation pattern stayed the same). ``k`` must
    be at least 1; an empty replication is not a meaningful state.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"replication factor must be an integer, got {k!r}")
    if k < 1:
        raise ValueError(f"replication factor must be >= 1, got {k}")
    if k == 1:
        return p
    # Repeating each count in place preserves the non-increasing order.
    return CitationProfile._wrap(tuple(c for c in p.counts for _ in range(k)))


@dataclass(frozen=True)
class ProfileSet:
    """Named profiles plus optional group definitions over them.

    Group profiles are precomputed as the multiset union of the member
    profiles. Unit and group identifiers share one namespace.
    """

    units: Mapping[str, CitationProfile]
    groups: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    group_profiles: Mapping[str, CitationProfile] = field(default_factory=dict)

    def __post_init__(self) -> None:
        overlap = set(self.units) & set(self.groups)
        if overlap:
            raise ValueError(f"identifiers used for both a unit and a group: {sorted(overlap)}")
        for gid, members in self.groups.items():
            for m in members:
                if m not in self.units:
                    raise ValueError(f"group {gid!r} references unknown unit {m!r}")
        if set(self.group_profiles) != set(self.groups):
            raise ValueError("group_profiles must cover exactly the defined groups")

    @classmethod
    def build(
        cls,
        units: Mapping[str, CitationProfile],
        groups: Mapping[str, Iterable[str]] | None = None,
    ) -> "ProfileSet":
        group_map = {gid: tuple(members) for gid, members in (groups or {}).items()}
        profiles = {}
        for gid, members in group_map.items():
            combined = EMPTY_PROFILE
            for m in members:
                if m not in units:
                    raise ValueError(f"group {gid!r} references unknown unit {m!r}")
                combined = merge(combined, units[m])
            profiles[gid] = combined
        return cls(units=dict(units), groups=group_map, group_profiles=profiles)

    def profile(self, identifier: str) -> CitationProfile:
        """Profile of a unit or the merged profile of a group."""
        if identifier in self.units:
            return self.units[identifier]
        if identifier in self.group_profiles:
            return self.group_profiles[identifier]
        raise KeyError(identifier)

    def identifiers(self) -> list[str]:
        return list(self.units) + list(self.groups)
