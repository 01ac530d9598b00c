"""LEXIS1 binary container: header, then length-prefixed sections.

Little-endian fixed-width integers throughout. The compacted hash
structures serialize the dense cell payloads plus occupancy bit vectors;
rank scaffolding is rebuilt at load. The lexicon section carries words and
scores so tries and the autocompletion index can be rebuilt
deterministically on load.
"""

from __future__ import annotations

import io
import struct
from dataclasses import dataclass

from .errors import ParseError
from .hashdict import (
    PLAIN,
    SIGNED,
    BitRankVector,
    CompactExactDict,
    CompactSubstListDict,
)
from .hashkit import PolyHashParams
from .textcore import Lexicon

MAGIC = b"LEXIS1"
VERSION = 1

SEC_LEXICON = b"LEXW"
SEC_EXACT = b"EXCT"
SEC_SUBST1 = b"SLS1"
SEC_SUBST2 = b"SLS2"

_HEADER = struct.Struct("<6sHqQdHH")  # magic, version, seed, t, alpha, beta, delta


def _w_u32(buf, v):
    buf.write(struct.pack("<I", v))


def _w_u64(buf, v):
    buf.write(struct.pack("<Q", v))


def _r_u32(buf):
    return struct.unpack("<I", buf.read(4))[0]


def _r_u64(buf):
    return struct.unpack("<Q", buf.read(8))[0]


def _w_bytes(buf, b):
    _w_u32(buf, len(b))
    buf.write(b)


def _r_bytes(buf):
    return buf.read(_r_u32(buf))


def _w_bitvec(buf, bv: BitRankVector):
    _w_u32(buf, bv.nbits)
    buf.write(struct.pack("<H", bv.delta))
    _w_u32(buf, len(bv.words))
    for w in bv.words:
        _w_u64(buf, w)


def _r_bitvec(buf) -> BitRankVector:
    nbits = _r_u32(buf)
    delta = struct.unpack("<H", buf.read(2))[0]
    nwords = _r_u32(buf)
    words = [_r_u64(buf) for _ in range(nwords)]
    bv = BitRankVector.__new__(BitRankVector)
    bv.delta = delta
    bv.nbits = nbits
    bv.words = words
    partial = []
    acc = 0
    for wi in range(nwords):
        if wi % delta == 0:
            partial.append(acc)
        acc += words[wi].bit_count()
    bv.partial = partial
    bv.total_ones = acc
    return bv


def _w_ids(buf, ids):
    _w_u32(buf, len(ids))
    buf.write(struct.pack(f"<{len(ids)}I", *ids) if ids else b"")


def _r_ids(buf):
    n = _r_u32(buf)
    return list(struct.unpack(f"<{n}I", buf.read(4 * n))) if n else []


# ---------------------------------------------------------------------------
# sections

def _pack_lexicon(lex: Lexicon) -> bytes:
    buf = io.BytesIO()
    _w_u32(buf, lex.d)
    _w_bytes(buf, "\n".join(lex.words).encode("utf-8"))
    for s in lex.scores:
        _w_u32(buf, s)
    return buf.getvalue()


def _unpack_lexicon(payload: bytes) -> Lexicon:
    buf = io.BytesIO(payload)
    d = _r_u32(buf)
    blob = _r_bytes(buf).decode("utf-8")
    words = blob.split("\n") if blob else []
    if len(words) != d:
        raise ParseError("lexicon section corrupt")
    scores = [_r_u32(buf) for _ in range(d)]
    return Lexicon(words, scores)


def _pack_exact(ced: CompactExactDict) -> bytes:
    buf = io.BytesIO()
    buf.write(struct.pack("<H", len(ced.char_tables)))
    for length in sorted(ced.char_tables):
        bv, dense = ced.char_tables[length]
        buf.write(struct.pack("<H", length))
        _w_u64(buf, ced.sizes[length])
        _w_bitvec(buf, bv)
        _w_bytes(buf, "".join(w for w, _ in dense).encode("utf-8"))
        _w_ids(buf, [wid for _, wid in dense])
    _w_u64(buf, ced.long_size)
    _w_bitvec(buf, ced.long_bv)
    _w_bytes(buf, "\n".join(w for w, _ in ced.long_dense).encode("utf-8"))
    _w_ids(buf, [wid for _, wid in ced.long_dense])
    return buf.getvalue()


def _unpack_exact(payload: bytes, params: PolyHashParams, alpha: float,
                  beta: int, delta: int) -> CompactExactDict:
    buf = io.BytesIO(payload)
    ced = CompactExactDict.__new__(CompactExactDict)
    ced.params = params
    ced.alpha = alpha
    ced.beta = beta
    ced.delta = delta
    ced.char_tables = {}
    ced.sizes = {}
    n_tables = struct.unpack("<H", buf.read(2))[0]
    for _ in range(n_tables):
        length = struct.unpack("<H", buf.read(2))[0]
        size = _r_u64(buf)
        bv = _r_bitvec(buf)
        blob = _r_bytes(buf).decode("utf-8")
        words = [blob[i: i + length] for i in range(0, len(blob), length)]
        ids = _r_ids(buf)
        ced.char_tables[length] = (bv, list(zip(words, ids)))
        ced.sizes[length] = size
    ced.long_size = _r_u64(buf)
    ced.long_bv = _r_bitvec(buf)
    blob = _r_bytes(buf).decode("utf-8")
    long_words = blob.split("\n") if blob else []
    long_ids = _r_ids(buf)
    ced.long_dense = list(zip(long_words, long_ids))
    return ced


def _pack_subst(csld: CompactSubstListDict) -> bytes:
    buf = io.BytesIO()
    buf.write(struct.pack("<B", 1 if csld.variant == SIGNED else 0))
    _w_u64(buf, csld.table_size)
    _w_u32(buf, csld.ncells)
    _w_bytes(buf, "".join(map(chr, csld.alphabet_cps)).encode("utf-8"))
    _w_bitvec(buf, csld.bv)
    _w_bytes(buf, "".join(map(chr, csld.dense)).encode("utf-8"))
    if csld.variant == SIGNED:
        sigs = csld.dense_sigs
        packed = bytearray((len(sigs) + 1) // 2)
        for i, s in enumerate(sigs):
            if i % 2 == 0:
                packed[i // 2] = s << 4
            else:
                packed[i // 2] |= s & 0xF
        _w_bytes(buf, bytes(packed))
    return buf.getvalue()


def _unpack_subst(payload: bytes, params: PolyHashParams, delta: int,
                  ) -> CompactSubstListDict:
    buf = io.BytesIO(payload)
    variant = SIGNED if buf.read(1)[0] else PLAIN
    csld = CompactSubstListDict.__new__(CompactSubstListDict)
    csld.variant = variant
    csld.params = params
    csld.delta = delta
    csld.table_size = _r_u64(buf)
    csld.ncells = _r_u32(buf)
    csld.alphabet_cps = [ord(c) for c in _r_bytes(buf).decode("utf-8")]
    csld.sigma = len(csld.alphabet_cps)
    csld.bv = _r_bitvec(buf)
    csld.dense = [ord(c) for c in _r_bytes(buf).decode("utf-8")]
    if variant == SIGNED:
        packed = _r_bytes(buf)
        sigs = bytearray(len(csld.dense))
        for i in range(len(sigs)):
            sigs[i] = (packed[i // 2] >> 4) if i % 2 == 0 else (packed[i // 2] & 0xF)
        csld.dense_sigs = sigs
    else:
        csld.dense_sigs = None
    return csld


# ---------------------------------------------------------------------------
# container

@dataclass
class SavedIndex:
    lexicon: Lexicon
    params: PolyHashParams
    alpha: float
    beta: int
    delta: int
    exact: CompactExactDict
    subst1: CompactSubstListDict
    subst2: CompactSubstListDict | None


def _header_bytes(params: PolyHashParams, alpha: float, beta: int, delta: int) -> bytes:
    return _HEADER.pack(MAGIC, VERSION, params.seed, params.t, alpha, beta, delta)


def _sections_bytes(sections: list[tuple[bytes, bytes]]) -> bytes:
    buf = io.BytesIO()
    buf.write(struct.pack("<H", len(sections)))
    for tag, payload in sections:
        buf.write(tag)
        _w_u64(buf, len(payload))
        buf.write(payload)
    return buf.getvalue()


def serialize_hash_index(exact: CompactExactDict, subst1: CompactSubstListDict,
                         subst2: CompactSubstListDict | None = None) -> bytes:
    """Self-contained compacted hash index (no lexicon section)."""
    params = exact.params
    sections = [(SEC_EXACT, _pack_exact(exact)), (SEC_SUBST1, _pack_subst(subst1))]
    if subst2 is not None:
        sections.append((SEC_SUBST2, _pack_subst(subst2)))
    return _header_bytes(params, exact.alpha, exact.beta, exact.delta) + \
        _sections_bytes(sections)


def serialize_container(lex: Lexicon, exact: CompactExactDict,
                        subst1: CompactSubstListDict,
                        subst2: CompactSubstListDict | None = None) -> bytes:
    params = exact.params
    sections = [
        (SEC_LEXICON, _pack_lexicon(lex)),
        (SEC_EXACT, _pack_exact(exact)),
        (SEC_SUBST1, _pack_subst(subst1)),
    ]
    if subst2 is not None:
        sections.append((SEC_SUBST2, _pack_subst(subst2)))
    return _header_bytes(params, exact.alpha, exact.beta, exact.delta) + \
        _sections_bytes(sections)


def deserialize_container(data: bytes) -> SavedIndex:
    buf = io.BytesIO(data)
    head = buf.read(_HEADER.size)
    if len(head) < _HEADER.size:
        raise ParseError("truncated index file")
    magic, version, seed, t, alpha, beta, delta = _HEADER.unpack(head)
    if magic != MAGIC:
        raise ParseError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ParseError(f"unsupported version {version}")
    params = PolyHashParams(t=t, seed=seed)
    n_sections = struct.unpack("<H", buf.read(2))[0]
    sections: dict[bytes, bytes] = {}
    for _ in range(n_sections):
        tag = buf.read(4)
        size = _r_u64(buf)
        sections[tag] = buf.read(size)
    if SEC_LEXICON not in sections or SEC_EXACT not in sections \
            or SEC_SUBST1 not in sections:
        raise ParseError("missing required index sections")
    lex = _unpack_lexicon(sections[SEC_LEXICON])
    exact = _unpack_exact(sections[SEC_EXACT], params, alpha, beta, delta)
    subst1 = _unpack_subst(sections[SEC_SUBST1], params, delta)
    subst2 = (
        _unpack_subst(sections[SEC_SUBST2], params, delta)
        if SEC_SUBST2 in sections else None
    )
    return SavedIndex(lex, params, alpha, beta, delta, exact, subst1, subst2)


def save_index(path, lex, exact, subst1, subst2=None) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_container(lex, exact, subst1, subst2))


def load_index(path) -> SavedIndex:
    with open(path, "rb") as fh:
        return deserialize_container(fh.read())
