"""Binary and JSON containers for invariants, composites, and codebooks.

Invariant container (magic "HIS1"): after the magic come a kind byte
(1 = single invariant, 2 = composite), dim and entry count as u32
little-endian, then one packed key plane and one packed value plane per
entry (one bit per component, +1 <-> 1). Bound states are recomputed on
load, so round trips are bit-exact by construction.

Codebook container (magic "HISC"): a u32 length-prefixed JSON header
(version, dim, hash_seed, labels, texts) followed by the packed entry
vectors in header order. Loading re-encodes every text with the
header's encoder parameters and rejects any vector mismatch.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from his.codebook import Codebook, CodebookEntry
from his.encoder import TrigramHashEncoder
from his.protocol import CompositeInvariant, Invariant, make_composite, make_invariant

MAGIC_INVARIANT = b"HIS1"
MAGIC_CODEBOOK = b"HISC"


class ContainerError(ValueError):
    """Malformed, truncated, or inconsistent serialized container."""


def _pack_plane(vec: np.ndarray) -> bytes:
    return np.packbits(vec > 0).tobytes()


def _unpack_plane(data: bytes, dim: int) -> np.ndarray:
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), count=dim)
    return (bits.astype(np.int8) * 2 - 1)


def _plane_size(dim: int) -> int:
    return (dim + 7) // 8


def invariant_to_bytes(obj: Invariant | CompositeInvariant) -> bytes:
    if isinstance(obj, Invariant):
        kind, pairs = 1, [(obj.key, obj.value)]
    elif isinstance(obj, CompositeInvariant):
        kind, pairs = 2, [(obj.keys[i], obj.values[i]) for i in range(obj.entry_count)]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    dim = pairs[0][0].shape[0]
    out = [MAGIC_INVARIANT, struct.pack("<BII", kind, dim, len(pairs))]
    for key, value in pairs:
        out.append(_pack_plane(key))
        out.append(_pack_plane(value))
    return b"".join(out)


def invariant_from_bytes(data: bytes) -> Invariant | CompositeInvariant:
    if len(data) < 13 or data[:4] != MAGIC_INVARIANT:
        raise ContainerError("not a HIS1 invariant container")
    kind, dim, count = struct.unpack("<BII", data[4:13])
    if kind not in (1, 2) or dim < 1 or count < 1 or (kind == 1 and count != 1):
        raise ContainerError(f"invalid container header (kind={kind}, dim={dim}, count={count})")
    plane = _plane_size(dim)
    expected = 13 + 2 * plane * count
    if len(data) != expected:
        raise ContainerError(f"container length {len(data)} != expected {expected}")
    pairs = []
    off = 13
    for _ in range(count):
        key = _unpack_plane(data[off : off + plane], dim)
        value = _unpack_plane(data[off + plane : off + 2 * plane], dim)
        pairs.append((key, value))
        off += 2 * plane
    if kind == 1:
        return make_invariant(*pairs[0])
    return make_composite(pairs)


def invariant_to_json(obj: Invariant | CompositeInvariant) -> str:
    if isinstance(obj, Invariant):
        kind, pairs = "invariant", [(obj.key, obj.value)]
    elif isinstance(obj, CompositeInvariant):
        kind, pairs = "composite", [(obj.keys[i], obj.values[i]) for i in range(obj.entry_count)]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    doc = {
        "format": "HIS1",
        "kind": kind,
        "dim": int(pairs[0][0].shape[0]),
        "entries": [
            {"key": [int(x) for x in k], "value": [int(x) for x in v]} for k, v in pairs
        ],
    }
    return json.dumps(doc, sort_keys=True)


def invariant_from_json(text: str) -> Invariant | CompositeInvariant:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ContainerError(f"invalid JSON container: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != "HIS1":
        raise ContainerError("not a HIS1 JSON container")
    entries = doc.get("entries") or []
    pairs = [
        (np.asarray(e["key"], dtype=np.int8), np.asarray(e["value"], dtype=np.int8))
        for e in entries
    ]
    if not pairs:
        raise ContainerError("container has no entries")
    if doc.get("kind") == "invariant":
        if len(pairs) != 1:
            raise ContainerError("single invariant container must hold exactly one entry")
        return make_invariant(*pairs[0])
    if doc.get("kind") == "composite":
        return make_composite(pairs)
    raise ContainerError(f"unknown container kind {doc.get('kind')!r}")


def save_invariant(obj: Invariant | CompositeInvariant, path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(invariant_to_json(obj))
    else:
        path.write_bytes(invariant_to_bytes(obj))


def load_invariant(path) -> Invariant | CompositeInvariant:
    path = Path(path)
    if path.suffix == ".json":
        return invariant_from_json(path.read_text())
    return invariant_from_bytes(path.read_bytes())


def save_codebook(cb: Codebook, path) -> None:
    if any(entry.text is None for entry in cb.entries):
        raise ContainerError("cannot serialize a codebook built from raw vectors")
    header = json.dumps(
        {
            "version": 1,
            "dim": cb.dim,
            "hash_seed": cb.hash_seed,
            "labels": [e.label for e in cb.entries],
            "texts": [e.text for e in cb.entries],
        },
        sort_keys=True,
    ).encode("utf-8")
    payload = b"".join(_pack_plane(e.vector) for e in cb.entries)
    Path(path).write_bytes(MAGIC_CODEBOOK + struct.pack("<I", len(header)) + header + payload)


def load_codebook(path) -> Codebook:
    data = Path(path).read_bytes()
    if len(data) < 8 or data[:4] != MAGIC_CODEBOOK:
        raise ContainerError("not a HISC codebook container")
    (hlen,) = struct.unpack("<I", data[4:8])
    try:
        header = json.loads(data[8 : 8 + hlen].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ContainerError(f"invalid codebook header: {exc}") from exc
    dim, hash_seed = header["dim"], header["hash_seed"]
    labels, texts = header["labels"], header["texts"]
    plane = _plane_size(dim)
    expected = 8 + hlen + plane * len(labels)
    if len(data) != expected:
        raise ContainerError(f"codebook length {len(data)} != expected {expected}")
    enc = TrigramHashEncoder(dim=dim, hash_seed=hash_seed)
    entries = []
    off = 8 + hlen
    for label, text in zip(labels, texts):
        stored = _unpack_plane(data[off : off + plane], dim)
        off += plane
        if not np.array_equal(stored, enc.encode(text)):
            raise ContainerError(f"stored vector for {label!r} does not match its re-encoded text")
        entries.append(CodebookEntry(label=label, text=text, vector=stored))
    return Codebook._from_entries(dim=dim, hash_seed=hash_seed, entries=entries)
