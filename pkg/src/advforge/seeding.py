"""Per-example RNG stream derivation: 64-bit FNV-1a over (global seed bytes,
example id, attack name), so results are independent of processing order."""

import random
import struct

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK = 0xFFFFFFFFFFFFFFFF


def fnv1a(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & _MASK
    return h


def derive_seed(global_seed: int, example_id: str, attack: str) -> int:
    payload = (
        struct.pack("<Q", global_seed & _MASK)
        + example_id.encode("utf-8")
        + b"\x1f"
        + attack.encode("utf-8")
    )
    return fnv1a(payload)


def derived_rng(global_seed: int, example_id: str, attack: str) -> random.Random:
    return random.Random(derive_seed(global_seed, example_id, attack))
