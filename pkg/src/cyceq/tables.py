"""Plain-text tables of a construction.

Two views per pair of words: the *group view* lists the reading with step
``p`` in runs of ``n`` (one run per group), the *block view* lists the words
in their original order cut into blocks.  Distinguished positions carry a
marker, an asterisk by default.
"""

from __future__ import annotations

from collections.abc import Sequence

from .equalizer import BlockGroupGeometry, Construction, build_cycle_words
from .insertion import EqualizationCertificate
from .words import Word


def _mark(cell: object, marked: bool, marker: str) -> str:
    return f"{cell}{marker}" if marked else str(cell)


def _grid(label_rows: Sequence[tuple[str, Sequence[str]]], block: int, titles: Sequence[str]) -> str:
    labels = [label for label, _ in label_rows]
    rows = [cells for _, cells in label_rows]
    width = max(len(c) for cells in rows for c in cells) if rows and rows[0] else 1
    lw = max(len(x) for x in labels)
    lines = []
    chunks = range(0, len(rows[0]), block)
    header = " " * lw + " |"
    for title, start in zip(titles, chunks):
        span = min(block, len(rows[0]) - start)
        header += " " + title.center(span * (width + 1) - 1) + " |"
    lines.append(header)
    for label, cells in label_rows:
        line = label.ljust(lw) + " |"
        for start in chunks:
            line += " " + " ".join(c.rjust(width) for c in cells[start : start + block]) + " |"
        lines.append(line)
    return "\n".join(lines)


def block_view(
    u: Word,
    v: Word,
    distinguished: Sequence[int],
    block: int,
    marker: str = "*",
    names: tuple[str, str] = ("u'", "v'"),
) -> str:
    """Words in original order, ``block`` positions per block."""
    dist = set(distinguished)
    idx = [_mark(i, i in dist, marker) for i in range(len(u))]
    ur = [_mark(a, i in dist, marker) for i, a in enumerate(u)]
    vr = [_mark(a, i in dist, marker) for i, a in enumerate(v)]
    titles = [f"Block {t}" for t in range(-(-len(u) // block))]
    return _grid([("i", idx), (names[0], ur), (names[1], vr)], block, titles)


def group_view(
    geometry: BlockGroupGeometry,
    u: Word,
    v: Word,
    distinguished: Sequence[int],
    marker: str = "*",
    names: tuple[str, str] = ("a_i", "b_i"),
) -> str:
    """Reading with step ``n + 1`` of words of length ``n**2``, one group per column block."""
    dist = set(distinguished)
    order = geometry.reading_order.tolist()
    phis = [_mark(pos, pos in dist, marker) for pos in order]
    ar = [_mark(u[pos], pos in dist, marker) for pos in order]
    br = [_mark(v[pos], pos in dist, marker) for pos in order]
    titles = [f"Group {g}" for g in range(geometry.n)]
    return _grid([("phi(i)", phis), (names[0], ar), (names[1], br)], geometry.n, titles)


def render_tables(cert: EqualizationCertificate, marker: str = "*") -> str:
    """Group and block views for every cycle, then the interleaved words."""
    info = cert.construction
    n = len(cert.u)
    if cert.expanded_length == 0:
        return "u' and v' are both the empty word; nothing to tabulate."
    if not isinstance(info, Construction) or n == 0:
        return block_view(cert.u_expanded, cert.v_expanded, cert.distinguished,
                          max(1, len(cert.u_expanded)), marker)
    geom = BlockGroupGeometry(n)
    labels = cert.u.letters
    sections = []
    for s, cycle in enumerate(info.cycles, start=1):
        pair = build_cycle_words(geom, cycle)
        us = Word._trusted(tuple(labels[int(a)] for a in pair.u_s))
        vs = Word._trusted(tuple(labels[int(a)] for a in pair.v_s))
        sections.append(f"Cycle {s} of {info.m}: {cycle}  (p = {info.p})")
        sections.append(group_view(geom, us, vs, pair.distinguished, marker,
                                   (f"a[{s}]_i", f"b[{s}]_i")))
        sections.append(block_view(us, vs, pair.distinguished, n, marker,
                                   (f"u[{s}]_i", f"v[{s}]_i")))
    sections.append(
        f"Interleaved words: length {cert.expanded_length}, offset {cert.offset.value}"
    )
    sections.append(block_view(cert.u_expanded, cert.v_expanded, cert.distinguished,
                               info.m * n, marker))
    return "\n\n".join(sections)
