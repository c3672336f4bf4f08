"""Bundled data files: generator lists, basis tableaux and witness tableaux.

Set ``PLETH_DATA_DIR`` to read them from another directory.
"""
from __future__ import annotations

import hashlib
import os
from importlib import resources
from pathlib import Path

from .tableau import parse_compact_tableaux

CHECKSUMS = {
    "generators_3x6.json": "2793feb3a193d758aa0d908d13760652067f52bdef1750efa55b3069a5952b36",
    "generators_4x7.json": "8487e71425e512d8375ec3d3f8426d2705df6f8ce6131b24469fa4a4b6893026",
    "tableaux_34_6_2.txt": "0ac13a81142bad4c159e95ce4157be9fbe65dfaf08cf3596c9624b9da8d6e9a4",
    "tableaux_47_7_2.txt": "d6a6e9d0b079ec3ada5365381faf706331a3162cb4b3a8ecb3e14ab9803f0317",
    "chow_witnesses_3x6.txt": "1da781359758e8ac434ecee59c61a8e458750bd817451d989f6bbbe0860f5162",
    "chow_witnesses_4x7.txt": "3bc7464381a85225d1ed037c74c5e1342eb6a03d6058ee8e52b3de2186d3113c",
}


class ChecksumError(ValueError):
    pass


def data_dir() -> Path:
    override = os.environ.get("PLETH_DATA_DIR")
    if override:
        return Path(override)
    return Path(str(resources.files("chowpow") / "data"))


def read_bytes(name: str, verify: bool = True) -> bytes:
    raw = (data_dir() / name).read_bytes()
    if verify and name in CHECKSUMS:
        digest = hashlib.sha256(raw).hexdigest()
        if digest != CHECKSUMS[name]:
            raise ChecksumError(f"{name}: checksum {digest} does not match the expected {CHECKSUMS[name]}")
    return raw


def read_text(name: str, verify: bool = True) -> str:
    return read_bytes(name, verify).decode("utf-8")


def load_tableaux(name: str, d: int | None = None, n: int | None = None) -> list:
    """Parse a bundled compact tableau file, e.g. ``"tableaux_34_6_2.txt"``."""
    return parse_compact_tableaux(read_text(name), d=d, n=n)


def basis_tableaux(shape: str) -> list:
    """The basis tableaux for ``"34,6,2"`` or ``"47,7,2"``."""
    name = {"34,6,2": "tableaux_34_6_2.txt", "47,7,2": "tableaux_47_7_2.txt"}.get(shape)
    if name is None:
        raise KeyError(f"no bundled basis tableaux for shape {shape}")
    return load_tableaux(name)


def witness_tableaux(family: str) -> dict:
    """Map shape -> witness tableau for the generators of a family."""
    ts = load_tableaux(f"chow_witnesses_{family}.txt")
    return {t.shape: t for t in ts}
