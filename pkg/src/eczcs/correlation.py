"""Exact aperiodic and periodic correlation functions and set-level sums.

Every function returns a :class:`~eczcs.cyclotomic.CycloInt`, so zero tests
are exact.  For binary and quaternary alphabets the heavy lifting runs
through ``numpy.correlate`` on exact unit values (sums of Gaussian
integers stay integral in double precision); other alphabets fall back to
integer phase-difference tallies.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .cyclotomic import CycloInt
from .sequences import Family, PhaseSequence, SequenceSet, modulate


def _check_pair(s0: PhaseSequence, s1: PhaseSequence) -> None:
    if s0.q != s1.q:
        raise ValueError(f"mixed alphabets Z_{s0.q} and Z_{s1.q}")
    if s0.length != s1.length:
        raise ValueError(f"mixed lengths {s0.length} and {s1.length}")


def _check_shift(length: int, u: int) -> None:
    if not -length < u < length:
        raise ValueError(f"shift {u} outside [-{length - 1}, {length - 1}]")


def accf(s0: PhaseSequence, s1: PhaseSequence, u: int) -> CycloInt:
    """Aperiodic cross-correlation sum_k s0[k+u] * conj(s1[k]), exact."""
    _check_pair(s0, s1)
    _check_shift(s0.length, u)
    q, length = s0.q, s0.length
    a, b = s0.array(), s1.array()
    if u >= 0:
        diff = (a[u:length] - b[: length - u]) % q
    else:
        diff = (a[: length + u] - b[-u:length]) % q
    counts = np.bincount(diff, minlength=q)
    return CycloInt(q, tuple(int(c) for c in counts))


def aacf(s: PhaseSequence, u: int) -> CycloInt:
    """Aperiodic autocorrelation: accf of a sequence with itself."""
    return accf(s, s, u)


def pccf(s0: PhaseSequence, s1: PhaseSequence, u: int) -> CycloInt:
    """Periodic cross-correlation with cyclic indexing, exact."""
    _check_pair(s0, s1)
    _check_shift(s0.length, u)
    q, length = s0.q, s0.length
    a, b = s0.array(), s1.array()
    if u >= 0:
        diff = (np.roll(a, -u) - b) % q
    else:
        diff = (a - np.roll(b, u)) % q
    counts = np.bincount(diff, minlength=q)
    return CycloInt(q, tuple(int(c) for c in counts))


def pccf_via_accf(s0: PhaseSequence, s1: PhaseSequence, u: int) -> CycloInt:
    """Periodic correlation assembled from the two aperiodic halves.

    Evaluates the identity relating periodic and aperiodic correlation:
    the plain aperiodic value at u=0, and the aperiodic value plus the
    conjugated swapped value at the complementary shift otherwise.
    """
    _check_pair(s0, s1)
    _check_shift(s0.length, u)
    length = s0.length
    if u == 0:
        return accf(s0, s1, 0)
    if u > 0:
        return accf(s0, s1, u) + accf(s1, s0, length - u).conjugate()
    return accf(s1, s0, -u).conjugate() + accf(s0, s1, length + u)


_EXACT_COMPLEX_Q = (2, 4)


def _pair_table_counts(s0: PhaseSequence, s1: PhaseSequence) -> np.ndarray:
    """Count vectors of accf(s0, s1, u) for u = -(L-1)..(L-1), shape (2L-1, q)."""
    q, length = s0.q, s0.length
    if q in _EXACT_COMPLEX_Q:
        # index i of the full correlation holds the shift u = i - (L - 1)
        z = np.correlate(modulate(s0), modulate(s1), mode="full")
        counts = np.zeros((2 * length - 1, q), dtype=np.int64)
        counts[:, 0] = np.rint(z.real)
        if q == 4:
            counts[:, 1] = np.rint(z.imag)
        return counts
    a, b = s0.array(), s1.array()
    counts = np.zeros((2 * length - 1, q), dtype=np.int64)
    for u in range(length):
        d = (a[u:length] - b[: length - u]) % q
        counts[u + length - 1] = np.bincount(d, minlength=q)
        if u:
            d = (a[: length - u] - b[u:length]) % q
            counts[length - 1 - u] = np.bincount(d, minlength=q)
    return counts


def _sum_pair_tables(pairs, q: int, length: int) -> list[CycloInt]:
    total = np.zeros((2 * length - 1, q), dtype=np.int64)
    for s0, s1 in pairs:
        total += _pair_table_counts(s0, s1)
    return [CycloInt(q, tuple(int(c) for c in row)) for row in total]


def set_corr_sum(s0: SequenceSet, s1: SequenceSet, u: int) -> CycloInt:
    """Member-wise aperiodic cross-correlation sum of two sequence sets."""
    _check_sets(s0, s1)
    total = CycloInt.zero(s0.q)
    for a, b in zip(s0.members, s1.members):
        total = total + accf(a, b, u)
    return total


def cross_channel_sum(g0: SequenceSet, g1: SequenceSet, u: int) -> CycloInt:
    """Cross-correlation sum pairing member n with member (n+1) mod N.

    Unlike :func:`set_corr_sum` this sum is not symmetric under swapping
    its arguments, and negating the shift is not equivalent to swapping
    either, so callers must evaluate both signs explicitly.
    """
    _check_sets(g0, g1)
    n = g0.size
    total = CycloInt.zero(g0.q)
    for i, a in enumerate(g0.members):
        total = total + accf(a, g1.members[(i + 1) % n], u)
    return total


def set_corr_table(s0: SequenceSet, s1: SequenceSet) -> list[CycloInt]:
    """set_corr_sum over the full aperiodic shift range -(L-1)..(L-1)."""
    _check_sets(s0, s1)
    return _sum_pair_tables(zip(s0.members, s1.members), s0.q, s0.length)


def cross_channel_table(g0: SequenceSet, g1: SequenceSet) -> list[CycloInt]:
    """cross_channel_sum over the full aperiodic shift range."""
    _check_sets(g0, g1)
    n = g0.size
    pairs = [(a, g1.members[(i + 1) % n]) for i, a in enumerate(g0.members)]
    return _sum_pair_tables(pairs, g0.q, g0.length)


def _check_sets(s0: SequenceSet, s1: SequenceSet) -> None:
    if (s0.q, s0.length, s0.size) != (s1.q, s1.length, s1.size):
        raise ValueError("sequence sets must share (N, L, q)")


@dataclass(frozen=True)
class CorrelationProfile:
    """Correlation values tabulated over a contiguous shift range."""

    label: str
    shifts: tuple[int, ...]
    values: tuple[CycloInt, ...]

    def __post_init__(self) -> None:
        if len(self.shifts) != len(self.values):
            raise ValueError("shift range and value list differ in length")
        if not self.shifts:
            raise ValueError("empty shift range")

    def magnitudes(self) -> tuple[float, ...]:
        return tuple(v.magnitude() for v in self.values)

    def mag_sq(self) -> tuple:
        return tuple(v.mag_sq() for v in self.values)

    def zero_mask(self) -> tuple[bool, ...]:
        return tuple(v.is_zero() for v in self.values)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["u", "magnitude", "is_zero"])
        for u, v in zip(self.shifts, self.values):
            writer.writerow([u, f"{v.magnitude():.12g}", int(v.is_zero())])
        return out.getvalue()


def _aperiodic_shifts(length: int) -> tuple[int, ...]:
    return tuple(range(-(length - 1), length))


def profile_accf(s0: PhaseSequence, s1: PhaseSequence, label: str = "accf") -> CorrelationProfile:
    table = _sum_pair_tables([(s0, s1)], s0.q, s0.length)
    return CorrelationProfile(label, _aperiodic_shifts(s0.length), tuple(table))


def profile_pccf(s0: PhaseSequence, s1: PhaseSequence, label: str = "pccf") -> CorrelationProfile:
    shifts = tuple(range(s0.length))
    return CorrelationProfile(label, shifts, tuple(pccf(s0, s1, u) for u in shifts))


def profile_set_corr(fam: Family, m1: int, m2: int) -> CorrelationProfile:
    table = set_corr_table(fam.sets[m1], fam.sets[m2])
    return CorrelationProfile(
        f"rho:{m1},{m2}", _aperiodic_shifts(fam.length), tuple(table)
    )


def profile_cross_channel(fam: Family, m1: int, m2: int) -> CorrelationProfile:
    table = cross_channel_table(fam.sets[m1], fam.sets[m2])
    return CorrelationProfile(
        f"rhohat:{m1},{m2}", _aperiodic_shifts(fam.length), tuple(table)
    )


def nonnegative_half(profile: CorrelationProfile) -> CorrelationProfile:
    """Restrict a full aperiodic profile to shifts u >= 0."""
    keep = [(u, v) for u, v in zip(profile.shifts, profile.values) if u >= 0]
    return CorrelationProfile(profile.label, tuple(u for u, _ in keep), tuple(v for _, v in keep))
