"""Classifiers for complementary sequence-set families and their bounds.

Checks are exact: a verdict lists every violating (pairing, shift) rather
than stopping at the first failure, which makes construction debugging
practical.  Shift windows follow the written set definitions, with one
corner handled explicitly: when the declared zone width equals the
sequence length, the same-set window is intersected with {1..L-1} so the
unavoidable in-phase peak is not reported as a violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .correlation import cross_channel_table, pccf, set_corr_table
from .cyclotomic import CycloInt
from .sequences import Family, SequenceSet, concat


@dataclass(frozen=True)
class Violation:
    check: str
    indices: tuple[int, ...]
    shift: int
    magnitude: float


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [
                {
                    "check": v.check,
                    "indices": list(v.indices),
                    "shift": v.shift,
                    "magnitude": v.magnitude,
                }
                for v in self.violations
            ],
        }


def _front_window(width: int) -> range:
    return range(1, width + 1)


def _tail_window(length: int, width: int) -> range:
    return range(length - width, length)


def check_zcz_set(sset: SequenceSet, width: int) -> Verdict:
    """Periodic zero-correlation-zone test for a single sequence set.

    Autocorrelations must vanish for 1 <= |u| <= width and cross
    correlations for |u| <= width.  Negative shifts follow from conjugate
    symmetry because every ordered pair is checked.
    """
    if width > sset.length:
        raise ValueError("zone width cannot exceed the sequence length")
    length = sset.length
    top = min(width, length - 1)
    violations = []
    for i, si in enumerate(sset.members):
        for j, sj in enumerate(sset.members):
            first = 1 if i == j else 0
            for u in range(first, top + 1):
                val = pccf(si, sj, u)
                if not val.is_zero():
                    kind = "zcz-auto" if i == j else "zcz-cross"
                    violations.append(Violation(kind, (i, j), u, val.magnitude()))
    return Verdict(tuple(violations))


def tang_fan_matsufuji_bound(n_seqs: int, length: int, q: int) -> int:
    """Width bound for an (N, L, Z) zero-correlation-zone sequence set.

    Returns L/N - 1 for q > 2.  The binary value L/(2N) is a conjectured
    bound, so callers report it but never hard-fail a set exceeding it.
    """
    if q == 2:
        return length // (2 * n_seqs)
    return length // n_seqs - 1


def _family_tables(fam: Family, rotated: bool):
    build = cross_channel_table if rotated else set_corr_table
    return {
        (m1, m2): build(fam.sets[m1], fam.sets[m2])
        for m1 in range(fam.num_sets)
        for m2 in range(fam.num_sets)
    }


def _table_at(table, length: int, u: int) -> CycloInt:
    return table[u + length - 1]


def check_zccs(fam: Family, width: int) -> Verdict:
    """Z-complementary code set test at the given zone width.

    Same-set sums must equal N*L at u=0 and vanish for 0 < |u| < width;
    cross-set sums must vanish for |u| < width.
    """
    if width > fam.length:
        raise ValueError("zone width cannot exceed the sequence length")
    length, peak = fam.length, fam.set_size * fam.length
    violations = []
    for (m1, m2), table in _family_tables(fam, rotated=False).items():
        if m1 == m2:
            val = _table_at(table, length, 0)
            if val != CycloInt.integer(fam.q, peak):
                violations.append(Violation("peak", (m1, m2), 0, val.magnitude()))
            shifts = range(1, width)
        else:
            shifts = range(0, width)
        for u in shifts:
            val = _table_at(table, length, u)
            if not val.is_zero():
                kind = "same-set" if m1 == m2 else "cross-set"
                violations.append(Violation(kind, (m1, m2), u, val.magnitude()))
    return Verdict(tuple(violations))


def check_mocs(fam: Family) -> Verdict:
    """Mutually orthogonal complementary set: zone covers every shift."""
    return check_zccs(fam, fam.length)


def check_ccc(fam: Family) -> Verdict:
    """Complete complementary code: a mutually orthogonal set with M = N."""
    verdict = check_mocs(fam)
    if fam.num_sets != fam.set_size:
        extra = Violation(
            "ccc-shape", (fam.num_sets, fam.set_size), 0, float(abs(fam.num_sets - fam.set_size))
        )
        return Verdict(verdict.violations + (extra,))
    return verdict


def _symmetric_zone_violations(fam: Family, width: int) -> list[Violation]:
    """Front- and tail-window zeroness of the plain set correlation sums."""
    length = fam.length
    window = set(_front_window(width)) | set(_tail_window(length, width))
    same = sorted(u for u in window if 1 <= u <= length - 1)
    cross = sorted(u for u in (window | {0}) if 0 <= u <= length - 1)
    violations = []
    for (m1, m2), table in _family_tables(fam, rotated=False).items():
        for u in same if m1 == m2 else cross:
            val = _table_at(table, length, u)
            if not val.is_zero():
                kind = "same-set" if m1 == m2 else "cross-set"
                violations.append(Violation(kind, (m1, m2), u, val.magnitude()))
    return violations


def check_szccs(fam: Family, width: int) -> Verdict:
    """Symmetrical Z-complementary code set: both zone ends, no rotation."""
    if width > fam.length:
        raise ValueError("zone width cannot exceed the sequence length")
    return Verdict(tuple(_symmetric_zone_violations(fam, width)))


def check_eczcs(fam: Family, width: int) -> Verdict:
    """Enhanced cross Z-complementary set test.

    On top of the symmetrical zone condition, the rotated cross-channel
    sums of every ordered set pair (both orders, and each set against
    itself) must vanish on the tail window.  The rotated sum has no
    swap-and-conjugate symmetry, so both shift signs are evaluated.
    """
    if width > fam.length:
        raise ValueError("zone width cannot exceed the sequence length")
    length = fam.length
    violations = _symmetric_zone_violations(fam, width)
    tail = [u for u in _tail_window(length, width) if 0 <= u <= length - 1]
    for (m1, m2), table in _family_tables(fam, rotated=True).items():
        for u_abs in tail:
            for u in {u_abs, -u_abs}:
                val = _table_at(table, length, u)
                if not val.is_zero():
                    violations.append(Violation("cross-channel", (m1, m2), u, val.magnitude()))
    return Verdict(tuple(violations))


def measure_zcz_width(fam: Family) -> int:
    """Largest width at which check_eczcs passes; -1 if none does.

    Window nesting makes the pass predicate monotone in the width, so the
    first passing value of a descending sweep is the maximum.
    """
    for width in range(fam.length, -1, -1):
        if check_eczcs(fam, width).passed:
            return width
    return -1


def eczcs_bound(num_sets: int, set_size: int, length: int, q: int) -> int:
    """Zone-width upper bound N*L/M - 1, or N*L/(2M) for binary families.

    Floor of the exact ratio when the parameters do not divide evenly.
    """
    total = set_size * length
    if q == 2:
        return total // (2 * num_sets)
    return total // num_sets - 1


def is_optimal(fam: Family, width: int) -> bool:
    """Whether the family meets the width bound with exact equality.

    Equality is exact (no floor): a family whose parameters do not divide
    evenly is never optimal.
    """
    if fam.q == 2:
        meets = 2 * width * fam.num_sets == fam.set_size * fam.length
    else:
        meets = (width + 1) * fam.num_sets == fam.set_size * fam.length
    return meets and check_eczcs(fam, width).passed


def flatten_to_zcz(fam: Family) -> SequenceSet:
    """Concatenate each set's members into one sequence of length N*L.

    A family passing check_eczcs at width Z flattens to an (M, N*L, Z)
    zero-correlation-zone sequence set under the periodic test.
    """
    return SequenceSet(tuple(reduce(concat, st.members) for st in fam.sets))
