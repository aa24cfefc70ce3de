"""Explicit cyclic equalization of two Abelian-equivalent words.

The pipeline:

1. lift repeated letters to fresh distinct letters (``distinct_letter_lift``);
2. relabel so ``u`` reads ``0 1 ... n-1`` and ``v`` reads ``pi(0) ... pi(n-1)``
   (``normalize``);
3. for every cycle of ``pi`` build a pair of words of length ``n**2`` whose
   readings with step ``n + 1`` differ by a rotation of one
   (``build_cycle_words``);
4. interleave the per-cycle words column by column and map the labels back.

With ``m`` cycles the expanded words have length ``m * n**2`` and
``v' == cyclic_shift(u', m * (n + 1))``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .insertion import EqualizationCertificate, SimultaneousInsertion, insertion_from_positions
from .words import CyclicOffset, Word, WordLike, as_word, parikh


class EqualizationError(ValueError):
    pass


class LengthMismatchError(EqualizationError):
    def __init__(self, n_u: int, n_v: int):
        super().__init__(f"words must have equal length, got {n_u} and {n_v}")
        self.lengths = (n_u, n_v)


class ParikhMismatchError(EqualizationError):
    """The words are not Abelian equivalent, hence not cyclically equalizable."""

    def __init__(self, letter: str, count_u: int, count_v: int):
        super().__init__(
            f"Parikh vectors differ: letter {letter!r} occurs {count_u} times in u "
            f"and {count_v} times in v"
        )
        self.letter = letter
        self.counts = (count_u, count_v)


def check_equalizable(u: WordLike, v: WordLike) -> None:
    """Raise the matching :class:`EqualizationError` unless ``u``, ``v`` are equalizable."""
    u, v = as_word(u), as_word(v)
    if len(u) != len(v):
        raise LengthMismatchError(len(u), len(v))
    pu, pv = parikh(u), parikh(v)
    letter = pu.first_difference(pv)
    if letter is not None:
        raise ParikhMismatchError(letter, pu[letter], pv[letter])


def is_cyclically_equalizable(u: WordLike, v: WordLike) -> bool:
    """Linear-time decision: equal length and equal Parikh vectors."""
    try:
        check_equalizable(u, v)
    except EqualizationError:
        return False
    return True


# -- lifting and normalization ----------------------------------------------


@dataclass(frozen=True)
class LetterLift:
    forward: dict[tuple[str, int], str]
    backward: dict[str, str]

    def lower(self, w: Word) -> Word:
        """Map lifted letters back to the originals."""
        back = self.backward
        return Word._trusted(tuple(back.get(a, a) for a in w))


def _fresh_separator(letters: set[str], repeated: dict[str, int]) -> str:
    sep = "#"
    while any(f"{a}{sep}{j}" in letters for a, k in repeated.items() for j in range(1, k + 1)):
        sep += "#"
    return sep


def distinct_letter_lift(u: WordLike, v: WordLike) -> tuple[Word, Word, LetterLift]:
    """Replace the j-th occurrence of a repeated letter ``x`` by ``x#j`` in both words.

    Occurrences are matched left to right in each word.  Letters that occur
    once are kept as they are.
    """
    u, v = as_word(u), as_word(v)
    check_equalizable(u, v)
    counts = parikh(u)
    repeated = {a: k for a, k in counts.items() if k >= 2}
    sep = _fresh_separator(set(counts), repeated)
    forward = {(a, j): f"{a}{sep}{j}" for a, k in repeated.items() for j in range(1, k + 1)}
    backward = {fresh: a for (a, _), fresh in forward.items()}

    def lift(w: Word) -> Word:
        seen: dict[str, int] = {}
        out = []
        for a in w:
            if a in repeated:
                seen[a] = seen.get(a, 0) + 1
                out.append(forward[a, seen[a]])
            else:
                out.append(a)
        return Word._trusted(tuple(out))

    return lift(u), lift(v), LetterLift(forward, backward)


@dataclass(frozen=True)
class Cycle:
    elements: tuple[int, ...]

    @property
    def anchor(self) -> int:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.elements)) + ")"


@dataclass(frozen=True)
class Permutation:
    """Permutation of ``range(n)`` given by its images ``pi(0), ..., pi(n-1)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{list(images)} is not a permutation of range({len(images)})")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    @cached_property
    def cycles(self) -> tuple[Cycle, ...]:
        return tuple(cycle_decompose(self))

    def __str__(self) -> str:
        return "".join(str(c) for c in self.cycles)


def normalize(u_lifted: WordLike, v_lifted: WordLike) -> Permutation:
    """Permutation ``pi`` with ``v_lifted[i] == u_lifted[pi(i)]``.

    Relabeling the letter at position ``i`` of ``u_lifted`` as ``i`` turns
    the pair into ``0 1 ... n-1`` and ``pi(0) pi(1) ... pi(n-1)``; the
    inverse relabeling is ``u_lifted`` itself.
    """
    u, v = as_word(u_lifted), as_word(v_lifted)
    label = {a: i for i, a in enumerate(u)}
    if len(label) != len(u):
        raise ValueError("letters of u are not pairwise distinct")
    if len(v) != len(u):
        raise ValueError("words must have equal length")
    try:
        images = tuple(label[a] for a in v)
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} of v does not occur in u") from None
    return Permutation(images)


def cycle_decompose(pi: Permutation) -> list[Cycle]:
    """Cycles of ``pi`` by ascending minimum, each listed in orbit order from its minimum."""
    images = pi.images
    seen = [False] * len(images)
    cycles = []
    for x in range(len(images)):
        if seen[x]:
            continue
        orbit = [x]
        seen[x] = True
        y = images[x]
        while y != x:
            orbit.append(y)
            seen[y] = True
            y = images[y]
        cycles.append(Cycle(tuple(orbit)))
    return cycles


# -- blocks and groups ---------------------------------------------------------


@dataclass(frozen=True)
class BlockGroupGeometry:
    """Positions ``0..n**2-1`` split into blocks (runs of ``n``) and groups.

    Group ``g`` is the ``g``-th run of ``n`` positions in the reading order
    with step ``p = n + 1``.
    """

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("geometry needs n >= 1")

    @property
    def p(self) -> int:
        return self.n + 1

    @property
    def modulus(self) -> int:
        return self.n * self.n

    @cached_property
    def reading_order(self) -> np.ndarray:
        """``phi(i)`` for every ``i``."""
        return (np.arange(self.modulus, dtype=np.int64) * self.p) % self.modulus

    def phi(self, i: int) -> int:
        if not 0 <= i < self.modulus:
            raise ValueError(f"reading index {i} outside [0, {self.modulus})")
        return i * self.p % self.modulus

    def reading_index(self, t: int, g: int) -> int:
        """The ``i`` with ``phi(i) == f(t, g)``."""
        n = self.n
        if not (0 <= t < n and 0 <= g < n):
            raise ValueError(f"block/group ({t}, {g}) outside [0, {n})")
        return g * n + (t - g) % n

    def f(self, t: int, g: int) -> int:
        """The unique position in block ``t`` and group ``g``."""
        pos = self.phi(self.reading_index(t, g))
        assert pos // self.n == t
        return pos


def phi(geometry: BlockGroupGeometry, i: int) -> int:
    return geometry.phi(i)


def block_group_position(geometry: BlockGroupGeometry, t: int, g: int) -> int:
    return geometry.f(t, g)


# -- per-cycle construction ------------------------------------------------------


@dataclass(frozen=True)
class CycleWordsPair:
    u_s: Word
    v_s: Word
    distinguished: tuple[int, ...]


def _cycle_arrays(
    geom: BlockGroupGeometry, orbit: Sequence[int]
) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Label arrays of ``u^[s]``, ``v^[s]`` in original order and the distinguished positions.

    Works in reading space: ``a[i] = u_s[phi(i)]`` and ``b[i] = v_s[phi(i)]``.
    The distinguished reading indices are increasing along the orbit, so
    starting from the anchor's index every undistinguished entry copies the
    ``b`` value of the last distinguished entry before it.
    """
    big_n = geom.modulus
    ell = len(orbit)
    ridx = np.array([geom.reading_index(orbit[k], k) for k in range(ell)], dtype=np.int64)
    a_dist = np.asarray(orbit, dtype=np.int64)
    b_dist = np.roll(a_dist, -1)

    q = int(ridx[0])
    rolled = ridx - q  # positions in the order starting at q; rolled[0] == 0
    marker = np.zeros(big_n, dtype=np.int64)
    marker[rolled] = np.arange(ell)
    is_dist = np.zeros(big_n, dtype=bool)
    is_dist[rolled] = True
    last = np.maximum.accumulate(np.where(is_dist, np.arange(big_n), 0))
    b_rolled = b_dist[marker[last]]
    a_rolled = np.empty_like(b_rolled)
    a_rolled[1:] = b_rolled[:-1]
    a_rolled[rolled] = a_dist

    a = np.empty(big_n, dtype=np.int64)
    b = np.empty(big_n, dtype=np.int64)
    order = (np.arange(big_n) + q) % big_n
    a[order] = a_rolled
    b[order] = b_rolled

    u_s = np.empty(big_n, dtype=np.int64)
    v_s = np.empty(big_n, dtype=np.int64)
    phi_all = geom.reading_order
    u_s[phi_all] = a
    v_s[phi_all] = b
    return u_s, v_s, phi_all[ridx].tolist()


def build_cycle_words(
    geometry: BlockGroupGeometry, cycle: Cycle, pi: Permutation | None = None
) -> CycleWordsPair:
    """The words ``u^[s]`` and ``v^[s]`` for one cycle, over the labels ``0..n-1``."""
    if pi is not None and cycle not in pi.cycles:
        raise ValueError(f"{cycle} is not a cycle of {pi}")
    u_s, v_s, dist = _cycle_arrays(geometry, cycle.elements)
    return CycleWordsPair(
        Word._trusted(tuple(map(str, u_s.tolist()))),
        Word._trusted(tuple(map(str, v_s.tolist()))),
        tuple(dist),
    )


# -- the whole pipeline -----------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    """How a certificate was built; enough to redraw the per-cycle tables."""

    n: int
    permutation: Permutation
    lift: LetterLift
    labels: tuple[str, ...] = field(repr=False)

    @property
    def cycles(self) -> tuple[Cycle, ...]:
        return self.permutation.cycles

    @property
    def m(self) -> int:
        return len(self.cycles)

    @property
    def p(self) -> int:
        return self.n + 1


def equalize(u: WordLike, v: WordLike) -> EqualizationCertificate:
    """Certificate that ``u`` and ``v`` are cyclically equalizable.

    Raises :class:`LengthMismatchError` or :class:`ParikhMismatchError`; the
    latter is the negative answer to the decision problem.  The full
    construction always runs, even for words that are already conjugate.
    """
    u, v = as_word(u), as_word(v)
    check_equalizable(u, v)
    n = len(u)
    u_lift, v_lift, lift = distinct_letter_lift(u, v)
    pi = normalize(u_lift, v_lift)
    construction = Construction(n, pi, lift, u_lift.letters)
    if n == 0:
        return EqualizationCertificate(
            u, v, u, v, (), SimultaneousInsertion.empty(0), CyclicOffset(0, 0), construction
        )

    geom = BlockGroupGeometry(n)
    cycles = pi.cycles
    m = len(cycles)
    us, vs, positions = [], [], []
    for s, cycle in enumerate(cycles):
        u_s, v_s, dist = _cycle_arrays(geom, cycle.elements)
        us.append(u_s)
        vs.append(v_s)
        positions.extend(m * f + s for f in dist)
    # label i stands for u[i]
    table = np.array(u.letters, dtype=object)
    u_exp = Word._trusted(tuple(table[np.stack(us).T.ravel()].tolist()))
    v_exp = Word._trusted(tuple(table[np.stack(vs).T.ravel()].tolist()))
    positions.sort()
    _, insertion = insertion_from_positions(u_exp, positions)
    offset = CyclicOffset.of(m * geom.p, m * geom.modulus)
    return EqualizationCertificate(
        u, v, u_exp, v_exp, tuple(positions), insertion, offset, construction
    )
