"""JSON form of an equalization certificate.

Words are arrays of letter tokens; all numbers are plain decimal integers.
The document is self-contained: ``load_certificate`` rebuilds a certificate
that :func:`cyceq.insertion.verify_certificate` can check on its own.
The optional ``construction`` block is informational and is not read back.
"""

from __future__ import annotations

import json
from typing import Any

from .equalizer import Construction
from .insertion import EqualizationCertificate, SimultaneousInsertion
from .words import CyclicOffset, Word

SCHEMA_VERSION = "1"


class MalformedDocumentError(ValueError):
    pass


def certificate_to_document(cert: EqualizationCertificate) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "u": list(cert.u),
        "v": list(cert.v),
        "u_expanded": list(cert.u_expanded),
        "v_expanded": list(cert.v_expanded),
        "distinguished": list(cert.distinguished),
        "insertion_segments": [list(s) for s in cert.insertion.segments],
        "offset": cert.offset.value,
        "expanded_length": cert.expanded_length,
    }
    info = cert.construction
    if isinstance(info, Construction):
        doc["construction"] = {
            "n": info.n,
            "m": info.m,
            "p": info.p,
            "permutation": list(info.permutation.images),
            "cycles": [list(c.elements) for c in info.cycles],
            "lift": dict(info.lift.backward),
        }
    return doc


def dumps(cert: EqualizationCertificate) -> str:
    return json.dumps(certificate_to_document(cert), indent=1, ensure_ascii=False) + "\n"


def _word(doc: dict, key: str) -> Word:
    value = doc.get(key)
    if not isinstance(value, list):
        raise MalformedDocumentError(f"field {key!r} must be an array of letters")
    try:
        return Word(value)
    except ValueError as exc:
        raise MalformedDocumentError(f"field {key!r}: {exc}") from None


def _int(doc: dict, key: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise MalformedDocumentError(f"field {key!r} must be an integer")
    return value


def document_to_certificate(doc: Any) -> EqualizationCertificate:
    """Rebuild a certificate.  Inconsistent content is left for the verifier to reject."""
    if not isinstance(doc, dict):
        raise MalformedDocumentError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise MalformedDocumentError(
            f"unsupported schema_version {doc.get('schema_version')!r}, expected {SCHEMA_VERSION!r}"
        )
    u, v = _word(doc, "u"), _word(doc, "v")
    ue, ve = _word(doc, "u_expanded"), _word(doc, "v_expanded")
    dist = doc.get("distinguished")
    if not isinstance(dist, list) or not all(
        isinstance(i, int) and not isinstance(i, bool) for i in dist
    ):
        raise MalformedDocumentError("field 'distinguished' must be an array of integers")
    segments = doc.get("insertion_segments")
    if not isinstance(segments, list) or not segments:
        raise MalformedDocumentError("field 'insertion_segments' must be a non-empty array")
    insertion = SimultaneousInsertion(
        tuple(_word({"segment": s}, "segment") for s in segments)
    )
    expanded_length = _int(doc, "expanded_length")
    if expanded_length != len(ue):
        raise MalformedDocumentError(
            f"expanded_length {expanded_length} disagrees with u_expanded ({len(ue)} letters)"
        )
    offset = _int(doc, "offset")
    if offset < 0 or (expanded_length == 0 and offset != 0):
        raise MalformedDocumentError(f"field 'offset': {offset} is out of range")
    # offsets are rotations, so any non-negative value is read modulo the length
    cyclic = CyclicOffset.of(offset, expanded_length)
    return EqualizationCertificate(u, v, ue, ve, tuple(dist), insertion, cyclic)


def loads(text: str) -> EqualizationCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocumentError(f"not valid JSON: {exc}") from None
    return document_to_certificate(doc)
