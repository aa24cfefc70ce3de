"""Simultaneous insertions and equalization certificates.

A simultaneous insertion into words of length ``n`` is a list of ``n + 1``
segments.  Segment ``j`` goes in front of letter ``j``; the last one is
appended.  In the expanded word the original letters sit at the
*distinguished positions*; every other position carries an inserted letter.

:func:`verify_certificate` re-checks a certificate from scratch and never
trusts how it was produced.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .words import CyclicOffset, Word, WordLike, as_word


@dataclass(frozen=True)
class SimultaneousInsertion:
    segments: tuple[Word, ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("an insertion has at least one segment")
        object.__setattr__(self, "segments", tuple(as_word(s) for s in self.segments))

    @classmethod
    def empty(cls, base_length: int) -> SimultaneousInsertion:
        return cls(tuple(Word() for _ in range(base_length + 1)))

    @property
    def base_length(self) -> int:
        return len(self.segments) - 1

    @property
    def inserted_total(self) -> int:
        return sum(len(s) for s in self.segments)

    def positions(self) -> tuple[int, ...]:
        """Distinguished positions this insertion induces in the expanded word."""
        out = []
        at = 0
        for seg in self.segments[:-1]:
            at += len(seg)
            out.append(at)
            at += 1
        return tuple(out)


def apply_insertion(w: WordLike, ins: SimultaneousInsertion) -> Word:
    w = as_word(w)
    if ins.base_length != len(w):
        raise ValueError(
            f"insertion is for words of length {ins.base_length}, got length {len(w)}"
        )
    out: list[str] = list(ins.segments[0])
    for a, seg in zip(w, ins.segments[1:]):
        out.append(a)
        out.extend(seg)
    return Word._trusted(tuple(out))


def check_positions(positions: Sequence[int], expanded_length: int) -> tuple[int, ...]:
    positions = tuple(int(i) for i in positions)
    for k, i in enumerate(positions):
        if not 0 <= i < expanded_length:
            raise ValueError(f"position {i} outside [0, {expanded_length})")
        if k and i <= positions[k - 1]:
            raise ValueError(f"positions not strictly increasing at index {k}")
    return positions


def restrict(w: Word, positions: Sequence[int]) -> Word:
    letters = w.letters
    return Word._trusted(tuple(letters[i] for i in positions))


def insertion_from_positions(
    expanded: WordLike, positions: Sequence[int]
) -> tuple[Word, SimultaneousInsertion]:
    """Split an expanded word into its base word and the inserted gaps."""
    expanded = as_word(expanded)
    letters = expanded.letters
    positions = check_positions(positions, len(expanded))
    bounds = (-1,) + positions + (len(expanded),)
    segments = tuple(
        Word._trusted(letters[bounds[k] + 1 : bounds[k + 1]]) for k in range(len(bounds) - 1)
    )
    return restrict(expanded, positions), SimultaneousInsertion(segments)


@dataclass(frozen=True)
class EqualizationCertificate:
    """Witness that ``u`` and ``v`` are cyclically equalizable.

    ``construction`` is optional provenance (cycle structure, lift table and
    so on); :func:`verify_certificate` ignores it.
    """

    u: Word
    v: Word
    u_expanded: Word
    v_expanded: Word
    distinguished: tuple[int, ...]
    insertion: SimultaneousInsertion
    offset: CyclicOffset
    construction: Any = field(default=None, compare=False, repr=False)

    @classmethod
    def from_expanded(
        cls,
        u: WordLike,
        v: WordLike,
        u_expanded: WordLike,
        v_expanded: WordLike,
        distinguished: Sequence[int],
        offset: int | CyclicOffset,
        construction: Any = None,
    ) -> EqualizationCertificate:
        """Build a certificate, deriving the insertion from ``u_expanded``."""
        u_expanded = as_word(u_expanded)
        _, ins = insertion_from_positions(u_expanded, distinguished)
        if not isinstance(offset, CyclicOffset):
            offset = CyclicOffset.of(offset, len(u_expanded))
        return cls(
            as_word(u),
            as_word(v),
            u_expanded,
            as_word(v_expanded),
            tuple(int(i) for i in distinguished),
            ins,
            offset,
            construction,
        )

    @property
    def expanded_length(self) -> int:
        return len(self.u_expanded)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str = ""
    clause: str = ""
    position: int | None = None

    def __bool__(self) -> bool:
        return self.valid


def _invalid(clause: str, reason: str, position: int | None = None) -> Verdict:
    return Verdict(False, reason, clause, position)


def _first_mismatch(a: Sequence, b: Sequence) -> int | None:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return None


def verify_certificate(cert: EqualizationCertificate) -> Verdict:
    """Check a certificate clause by clause and report the first failure.

    Structure is checked first (lengths, positions, offset modulus), then

    * (a) ``u_expanded`` at the distinguished positions spells ``u``;
    * (b) ``v_expanded`` at the distinguished positions spells ``v``;
    * (c) both expanded words agree at every other position;
    * (d) ``v_expanded == cyclic_shift(u_expanded, offset)``;

    and last that the stored insertion reproduces ``u_expanded``.
    """
    u, v, ue, ve = cert.u, cert.v, cert.u_expanded, cert.v_expanded
    n, big_n = len(u), len(ue)
    if len(v) != n:
        return _invalid("structure", f"base words differ in length ({n} vs {len(v)})")
    if len(ve) != big_n:
        return _invalid("structure", f"expanded words differ in length ({big_n} vs {len(ve)})")
    if cert.offset.modulus != big_n:
        return _invalid(
            "structure",
            f"offset modulus {cert.offset.modulus} does not match expanded length {big_n}",
        )
    if len(cert.distinguished) != n:
        return _invalid(
            "structure", f"{len(cert.distinguished)} distinguished positions for {n} letters"
        )
    try:
        positions = check_positions(cert.distinguished, big_n)
    except ValueError as exc:
        return _invalid("structure", str(exc))

    ue_l, ve_l = ue.letters, ve.letters
    for j, i in enumerate(positions):
        if ue_l[i] != u[j]:
            return _invalid("a", f"u mismatch at distinguished position {i}", i)
    for j, i in enumerate(positions):
        if ve_l[i] != v[j]:
            return _invalid("b", f"v mismatch at distinguished position {i}", i)

    ua = np.array(ue_l, dtype=object)
    va = np.array(ve_l, dtype=object)
    mask = np.ones(big_n, dtype=bool)
    mask[list(positions)] = False
    bad = np.flatnonzero(mask & (ua != va)) if big_n else []
    if len(bad):
        i = int(bad[0])
        return _invalid("c", f"inserted letters disagree at position {i}", i)

    if big_n:
        r = cert.offset.value
        shifted = ue_l[r:] + ue_l[:r]
        if shifted != ve_l:
            i = _first_mismatch(shifted, ve_l)
            return _invalid("d", f"shift mismatch at position {i}", i)

    ins = cert.insertion
    if ins.base_length != n:
        return _invalid("insertion", f"insertion has {len(ins.segments)} segments for {n} letters")
    _, expected = insertion_from_positions(ue, positions)
    for j, (got, want) in enumerate(zip(ins.segments, expected.segments)):
        if got != want:
            return _invalid("insertion", f"insertion segment {j} does not match the expanded words")
    return Verdict(True)


def find_common_insertion(
    u: WordLike, v: WordLike, u_expanded: WordLike, v_expanded: WordLike
) -> tuple[int, ...] | None:
    """Lexicographically smallest distinguished set explaining both expansions.

    Position ``i`` can hold letter ``j`` when both expanded words carry the
    original letters there; it can be skipped when the expanded words agree
    there.  Feasibility is tabulated backwards, O(N * n), and the traceback
    takes each position as early as possible.
    """
    u, v = as_word(u), as_word(v)
    ue, ve = as_word(u_expanded), as_word(v_expanded)
    n, big_n = len(u), len(ue)
    if len(v) != n:
        raise ValueError("base words must have equal length")
    if len(ve) != big_n:
        raise ValueError("expanded words must have equal length")
    if big_n < n:
        raise ValueError("expanded words are shorter than the base words")

    ok = np.zeros((big_n + 1, n + 1), dtype=bool)
    ok[big_n, n] = True
    for i in range(big_n - 1, -1, -1):
        if ue[i] == ve[i]:
            ok[i] |= ok[i + 1]
        for j in range(n):
            if ue[i] == u[j] and ve[i] == v[j] and ok[i + 1, j + 1]:
                ok[i, j] = True
    if not ok[0, 0]:
        return None

    out: list[int] = []
    j = 0
    for i in range(big_n):
        if j < n and ue[i] == u[j] and ve[i] == v[j] and ok[i + 1, j + 1]:
            out.append(i)
            j += 1
    return tuple(out)
