"""Small helpers: canonical hashing and stable per-string randomness."""

from __future__ import annotations

import dataclasses
import hashlib
import json


def canonical_json(obj) -> str:
    """Deterministic JSON rendering used for config hashing."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        obj = dataclasses.asdict(obj)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def sha256_hex(data) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()


def config_hash(obj) -> str:
    """Short stable digest of a config object (dataclass or plain dict)."""
    return sha256_hex(canonical_json(obj))[:16]


def stable_word_seed(word: str, salt: str = "") -> int:
    """64-bit seed derived from a string; stable across runs and platforms."""
    digest = hashlib.sha256((salt + "\x00" + word).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def fnv1a64(data: bytes) -> int:
    """FNV-1a 64-bit hash (offset 0xcbf29ce484222325, prime 0x100000001b3)."""
    h = 0xCBF29CE484222325
    for byte in data:
        h ^= byte
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h
