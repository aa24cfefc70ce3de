"""Exhaustive search over small insertions.

Used to cross-check the construction on tiny instances and to find the
minimum number of inserted letters, which the construction does not try to
minimise.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .equalizer import EqualizationError, equalize
from .insertion import EqualizationCertificate, verify_certificate
from .words import Word, WordLike, as_word, check_token, cyclic_equivalence_offset, parikh

DEFAULT_NODE_LIMIT = 10**8


class InfeasibleSearchError(ValueError):
    def __init__(self, estimate: int, limit: int):
        super().__init__(f"search would visit about {estimate} nodes, over the limit of {limit}")
        self.estimate = estimate
        self.limit = limit


@dataclass(frozen=True)
class SearchBudget:
    """At most ``max_inserted`` letters, drawn from ``alphabet``.

    ``alphabet=None`` means the letters occurring in the two words.
    """

    max_inserted: int
    alphabet: tuple[str, ...] | None = None
    node_limit: int = DEFAULT_NODE_LIMIT

    def __post_init__(self):
        if self.max_inserted < 0:
            raise ValueError("max_inserted must be non-negative")
        if self.alphabet is not None:
            alpha = tuple(dict.fromkeys(check_token(a) for a in self.alphabet))
            object.__setattr__(self, "alphabet", alpha)

    def resolve(self, u: Word, v: Word) -> SearchBudget:
        if self.alphabet is not None:
            return self
        return replace(self, alphabet=tuple(sorted(set(u) | set(v))))


@dataclass(frozen=True)
class OracleResult:
    found: bool
    certificate: EqualizationCertificate | None
    inserted_count: int | None
    budget: SearchBudget


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as ``parts`` non-negative summands, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def search_size(n: int, budget: SearchBudget) -> int:
    k = len(budget.alphabet or ())
    return sum(math.comb(L + n, n) * k**L for L in range(budget.max_inserted + 1))


def _expand(
    base: tuple[str, ...], gaps: tuple[int, ...], letters: tuple[str, ...]
) -> tuple[str, ...]:
    out: list[str] = []
    at = 0
    for j, width in enumerate(gaps):
        out.extend(letters[at : at + width])
        at += width
        if j < len(base):
            out.append(base[j])
    return tuple(out)


def _search_chunk(
    u: tuple[str, ...],
    v: tuple[str, ...],
    gap_list: Sequence[tuple[int, ...]],
    alphabet: tuple[str, ...],
    total: int,
) -> tuple[tuple[int, ...], tuple[str, ...]] | None:
    """First (gaps, letters) in this chunk making the expansions conjugate."""
    for gaps in gap_list:
        for letters in itertools.product(alphabet, repeat=total):
            ue = _expand(u, gaps, letters)
            ve = _expand(v, gaps, letters)
            if cyclic_equivalence_offset(Word._trusted(ue), Word._trusted(ve)) is not None:
                return gaps, letters
    return None


def _chunks(items: list, count: int) -> list[list]:
    size = max(1, math.ceil(len(items) / count))
    return [items[i : i + size] for i in range(0, len(items), size)]


def brute_force_equalize(
    u: WordLike, v: WordLike, budget: SearchBudget, workers: int = 1
) -> OracleResult:
    """Smallest simultaneous insertion (within ``budget``) making ``u``, ``v`` conjugate.

    Insertion sizes are tried in increasing order; within one size the
    candidates are ordered by gap widths, then by the inserted letters in
    alphabet order.  The first hit is returned, so the answer is the same for
    any number of ``workers``.
    """
    u, v = as_word(u), as_word(v)
    if len(u) != len(v):
        raise ValueError(f"words must have equal length, got {len(u)} and {len(v)}")
    budget = budget.resolve(u, v)
    n = len(u)
    estimate = search_size(n, budget)
    if estimate > budget.node_limit:
        raise InfeasibleSearchError(estimate, budget.node_limit)
    alphabet = budget.alphabet
    max_total = budget.max_inserted if alphabet else 0

    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for total in range(max_total + 1):
            gap_list = list(compositions(total, n + 1))
            if pool is None:
                hit = _search_chunk(u.letters, v.letters, gap_list, alphabet, total)
            else:
                parts = _chunks(gap_list, workers)
                futures = [
                    pool.submit(_search_chunk, u.letters, v.letters, part, alphabet, total)
                    for part in parts
                ]
                hit = next((h for h in (f.result() for f in futures) if h is not None), None)
            if hit is not None:
                return OracleResult(True, _certificate(u, v, *hit), total, budget)
    finally:
        if pool is not None:
            pool.shutdown()
    return OracleResult(False, None, None, budget)


def _certificate(
    u: Word, v: Word, gaps: tuple[int, ...], letters: tuple[str, ...]
) -> EqualizationCertificate:
    ue = Word._trusted(_expand(u.letters, gaps, letters))
    ve = Word._trusted(_expand(v.letters, gaps, letters))
    positions = []
    at = 0
    for width in gaps[:-1]:
        at += width
        positions.append(at)
        at += 1
    offset = cyclic_equivalence_offset(ue, ve)
    return EqualizationCertificate.from_expanded(u, v, ue, ve, positions, offset)


@dataclass
class SweepReport:
    n_max: int
    alphabet: tuple[str, ...]
    equal_pairs: int = 0
    unequal_pairs: int = 0
    counterexamples: list[tuple[Word, Word, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def exhaustive_theorem_sweep(
    n_max: int, alphabet: Sequence[str], budget: SearchBudget
) -> SweepReport:
    """Check the characterization on every ordered pair of words of length 1..n_max.

    Pairs with equal Parikh vectors must be equalized by :func:`equalize`
    with a certificate that verifies; for all other pairs the brute-force
    search must come back empty.  When the budget has no alphabet of its own
    it searches over the full sweep alphabet.
    """
    alphabet = tuple(dict.fromkeys(check_token(a) for a in alphabet))
    if budget.alphabet is None:
        budget = replace(budget, alphabet=alphabet)
    estimate = sum(
        len(alphabet) ** (2 * n) * search_size(n, budget) for n in range(1, n_max + 1)
    )
    if estimate > budget.node_limit:
        raise InfeasibleSearchError(estimate, budget.node_limit)

    report = SweepReport(n_max, alphabet)
    for n in range(1, n_max + 1):
        words = [Word._trusted(w) for w in itertools.product(alphabet, repeat=n)]
        vectors = [parikh(w) for w in words]
        for (u, pu), (v, pv) in itertools.product(zip(words, vectors), repeat=2):
            if pu == pv:
                report.equal_pairs += 1
                try:
                    verdict = verify_certificate(equalize(u, v))
                except EqualizationError as exc:
                    report.counterexamples.append((u, v, f"equalize failed: {exc}"))
                    continue
                if not verdict:
                    report.counterexamples.append((u, v, f"bad certificate: {verdict.reason}"))
            else:
                report.unequal_pairs += 1
                result = brute_force_equalize(u, v, budget)
                if result.found:
                    report.counterexamples.append((u, v, "oracle equalized unequal Parikh vectors"))
    return report
