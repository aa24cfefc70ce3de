"""Words over a token alphabet and the structural operations on them.

A letter is a non-empty text token without whitespace or commas.  A plain
``str`` passed to :class:`Word` is split into characters, any other iterable
is taken as a sequence of tokens::

    >>> Word("acbcac") == Word(["a", "c", "b", "c", "a", "c"])
    True

Shifts follow one convention everywhere: ``cyclic_shift(w, r)[j] == w[(j + r) % n]``.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import Union, overload

import numpy as np
import regex

_BAD_TOKEN = regex.compile(r"[\s,]")


def check_token(token: object) -> str:
    if not isinstance(token, str) or not token:
        raise ValueError(f"letter must be a non-empty string, got {token!r}")
    if _BAD_TOKEN.search(token):
        raise ValueError(f"letter {token!r} contains whitespace or a comma")
    return token


class Word(Sequence[str]):
    """Immutable finite sequence of letters."""

    __slots__ = ("_letters", "_hash")

    def __init__(self, letters: Union[str, Iterable[str]] = ()):
        letters = tuple(letters)
        for token in set(letters):
            check_token(token)
        self._letters: tuple[str, ...] = letters
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, letters: tuple[str, ...]) -> Word:
        # Skips validation; letters must already be valid tokens.
        w = cls.__new__(cls)
        w._letters = letters
        w._hash = None
        return w

    @property
    def letters(self) -> tuple[str, ...]:
        return self._letters

    def __len__(self) -> int:
        return len(self._letters)

    @overload
    def __getitem__(self, i: int) -> str: ...

    @overload
    def __getitem__(self, i: slice) -> Word: ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word._trusted(self._letters[i])
        return self._letters[i]

    def __iter__(self) -> Iterator[str]:
        return iter(self._letters)

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word._trusted(self._letters + other._letters)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word):
            return self._letters == other._letters
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._letters)
        return self._hash

    def __str__(self) -> str:
        if all(len(a) == 1 for a in self._letters):
            return "".join(self._letters)
        return " ".join(self._letters)

    def __repr__(self) -> str:
        if all(len(a) == 1 for a in self._letters):
            return f"Word({''.join(self._letters)!r})"
        return f"Word({list(self._letters)!r})"

    def alphabet(self) -> list[str]:
        """Distinct letters in order of first occurrence."""
        return list(dict.fromkeys(self._letters))


WordLike = Union[Word, str, Iterable[str]]


def as_word(w: WordLike) -> Word:
    return w if isinstance(w, Word) else Word(w)


class Alphabet:
    """Bijection between letter tokens and dense integer ids.

    Ids are assigned in order of first appearance.  ``encode`` and ``decode``
    move whole words between token space and numpy id arrays.
    """

    def __init__(self, tokens: Iterable[str] = ()):
        self._ids: dict[str, int] = {}
        self._tokens: list[str] = []
        for t in tokens:
            self.add(t)

    @classmethod
    def from_words(cls, *words: Word) -> Alphabet:
        alpha = cls()
        for w in words:
            for t in w.alphabet():
                alpha.add(t)
        return alpha

    def add(self, token: str) -> int:
        if token not in self._ids:
            check_token(token)
            self._ids[token] = len(self._tokens)
            self._tokens.append(token)
        return self._ids[token]

    def __len__(self) -> int:
        return len(self._tokens)

    def __contains__(self, token: object) -> bool:
        return token in self._ids

    def __iter__(self) -> Iterator[str]:
        return iter(self._tokens)

    def id(self, token: str) -> int:
        return self._ids[token]

    def token(self, i: int) -> str:
        return self._tokens[i]

    def encode(self, w: Word) -> np.ndarray:
        return np.fromiter((self._ids[a] for a in w), dtype=np.int64, count=len(w))

    def decode(self, ids: Iterable[int]) -> Word:
        tokens = self._tokens
        if isinstance(ids, np.ndarray):
            ids = ids.tolist()
        return Word._trusted(tuple(tokens[i] for i in ids))


class ParikhVector(Mapping[str, int]):
    """Letter counts of a word; letters with count zero are not stored."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Union[Mapping[str, int], Iterable[str]] = ()):
        raw = Counter(counts)
        if any(k < 0 for k in raw.values()):
            raise ValueError("Parikh counts must be non-negative")
        self._counts = {a: k for a, k in sorted(raw.items()) if k > 0}

    def __getitem__(self, letter: str) -> int:
        return self._counts.get(letter, 0)

    def __contains__(self, letter: object) -> bool:
        return letter in self._counts

    def __iter__(self) -> Iterator[str]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ParikhVector):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self == ParikhVector(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __add__(self, other: ParikhVector) -> ParikhVector:
        return ParikhVector(Counter(self._counts) + Counter(other._counts))

    def __repr__(self) -> str:
        return f"ParikhVector({self._counts!r})"

    def __str__(self) -> str:
        return "{" + ", ".join(f"{a}:{k}" for a, k in self._counts.items()) + "}"

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def difference(self, other: ParikhVector) -> dict[str, int]:
        """Nonzero entries of ``self - other`` (may be negative)."""
        letters = sorted(set(self._counts) | set(other._counts))
        return {a: self[a] - other[a] for a in letters if self[a] != other[a]}

    def first_difference(self, other: ParikhVector) -> str | None:
        """Smallest letter whose count differs, or ``None`` when equal."""
        diff = self.difference(other)
        return next(iter(diff), None)


@dataclass(frozen=True)
class CyclicOffset:
    """Rotation amount ``value`` for words of length ``modulus``.

    ``CyclicOffset(0, 0)`` is the only offset for the empty word.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be non-negative")
        if self.modulus == 0:
            if self.value != 0:
                raise ValueError("the empty word only admits offset 0")
        elif not 0 <= self.value < self.modulus:
            raise ValueError(f"offset {self.value} not in [0, {self.modulus})")

    @classmethod
    def of(cls, value: int, modulus: int) -> CyclicOffset:
        """Reduce ``value`` modulo ``modulus``."""
        return cls(value % modulus if modulus else 0, modulus)

    def __int__(self) -> int:
        return self.value


def parikh(w: WordLike) -> ParikhVector:
    return ParikhVector(as_word(w))


def abelian_equivalent(u: WordLike, v: WordLike) -> bool:
    return parikh(u) == parikh(v)


def cyclic_shift(w: WordLike, r: Union[CyclicOffset, int]) -> Word:
    """Rotate left by ``r``: position ``j`` of the result holds ``w[(j + r) % n]``.

    A plain integer is reduced modulo ``len(w)``; a :class:`CyclicOffset`
    must carry ``len(w)`` as its modulus.
    """
    w = as_word(w)
    n = len(w)
    if isinstance(r, CyclicOffset):
        if r.modulus != n:
            raise ValueError("offset modulus must equal word length")
        r = r.value
    if n == 0:
        return w
    r %= n
    return Word._trusted(w.letters[r:] + w.letters[:r])


def cyclic_equivalence_offset(u: WordLike, v: WordLike) -> CyclicOffset | None:
    """Smallest ``r`` with ``v == cyclic_shift(u, r)``, or ``None``.

    Tries every rotation, so this is quadratic in the worst case.
    """
    u, v = as_word(u), as_word(v)
    n = len(u)
    if len(v) != n:
        raise ValueError(f"words must have equal length, got {n} and {len(v)}")
    if n == 0:
        return CyclicOffset(0, 0)
    a, b = u.letters, v.letters
    if Counter(a) != Counter(b):
        return None
    for r in range(n):
        if a[r:] + a[:r] == b:
            return CyclicOffset(r, n)
    return None


def cyclically_equivalent(u: WordLike, v: WordLike) -> bool:
    u, v = as_word(u), as_word(v)
    return len(u) == len(v) and cyclic_equivalence_offset(u, v) is not None


def step_indices(n: int, p: int) -> np.ndarray:
    """Index sequence ``i * p mod n`` for ``i = 0..n-1``."""
    if n < 1:
        raise ValueError("reading with a step needs a non-empty word")
    if math.gcd(p, n) != 1:
        raise ValueError("step size must be coprime with length")
    return (np.arange(n, dtype=np.int64) * (p % n)) % n


def read_with_step(w: WordLike, p: int) -> Word:
    """The word ``w[0] w[p] w[2p] ...`` with indices taken modulo ``len(w)``."""
    w = as_word(w)
    letters = w.letters
    return Word._trusted(tuple(letters[i] for i in step_indices(len(w), p).tolist()))


def interleave(words: Sequence[WordLike]) -> Word:
    """Columnwise interleaving: column ``j`` of every word before column ``j + 1``."""
    if not words:
        raise ValueError("interleave needs at least one word")
    ws = [as_word(w) for w in words]
    n = len(ws[0])
    if any(len(w) != n for w in ws):
        raise ValueError("interleaved words must have equal length")
    return Word._trusted(tuple(a for column in zip(*(w.letters for w in ws)) for a in column))
