"""Fixture colorings shipped as package data, locked by checksum.

The four reference certificates for the 10-vertex core gadget, the three
base colorings of the all-negative triangle, and the mini-gadget extension
schemes were transcribed once and are integrity-checked on every load so a
silent edit cannot skew downstream verification.
"""
from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from importlib import resources

from .certify import Certificate

_SHA256 = {
    "k3_base_83_41.json": "f11588cf8c2fc1a8ced80a1ebc78767247317ed138b02d797a4d7789a9e668d3",
    "mini_extension.json": "3b90ede7140c59d9041f2d36f89a26ab89d065ac082ed7bb29abe20f1d5df462",
    "w_balanced_172_85.json": "fcc9fe5e3dcfdc1368f6ee5dce5dc72b4d8b66104d51dc74d211c278ed64fcf3",
    "w_balanced_83_41_uv13.json": "8bea2bdf6fd33c759879397b6fe984ae5cdc0af980614710b04c7cc9fba6509a",
    "w_balanced_83_41_uv14.json": "c8c7f106affe47f029fddfd304517e77967375f46e7282d0672ae00087d7eb6c",
    "w_forest_52_25.json": "26d4c017aca9d2344c6e2b3ce23e5f76de89f1cafdc48ea208747fa1ffdc3dd4",
}


class FixtureError(RuntimeError):
    """A fixture data file is missing or fails its checksum."""


def _read(name: str) -> str:
    try:
        text = resources.files("fracbal.data").joinpath(name).read_text()
    except FileNotFoundError as exc:
        raise FixtureError(f"missing fixture {name}") from exc
    digest = hashlib.sha256(text.encode()).hexdigest()
    if digest != _SHA256[name]:
        raise FixtureError(f"fixture {name} fails its checksum")
    return text


@lru_cache(maxsize=None)
def w_coloring_172_85() -> Certificate:
    """(172, 85) balanced coloring of the core gadget; u and v share 28 colors."""
    return Certificate.from_json(_read("w_balanced_172_85.json"))


@lru_cache(maxsize=None)
def w_coloring_83_41_uv13() -> Certificate:
    """(83, 41) balanced coloring of the core gadget with overlap(u, v) = 13;
    every other edge has overlap 14."""
    return Certificate.from_json(_read("w_balanced_83_41_uv13.json"))


@lru_cache(maxsize=None)
def w_coloring_83_41_uv14() -> Certificate:
    """(83, 41) balanced coloring of the core gadget with overlap 14 on
    every edge, u-v included."""
    return Certificate.from_json(_read("w_balanced_83_41_uv14.json"))


@lru_cache(maxsize=None)
def w_forest_52_25() -> Certificate:
    """(52, 25) forest coloring of the unsigned core graph; the overlaps on
    u-v, u-z, u-x1 and u-t all equal 10."""
    return Certificate.from_json(_read("w_forest_52_25.json"))


@lru_cache(maxsize=None)
def k3_base_colorings() -> dict[str, Certificate]:
    """Balanced (83, 41)-colorings of the all-negative triangle, keyed by
    the pairwise overlap pattern, e.g. '14-14-14'."""
    obj = json.loads(_read("k3_base_83_41.json"))
    out = {}
    for key, doc in obj["colorings"].items():
        out[key] = Certificate.from_json(json.dumps(doc))
    return out


@lru_cache(maxsize=None)
def mini_extension_schemes() -> tuple[dict, ...]:
    """Extension schemes for the positive-triangle completion, selected by
    the induced profile on the outer triangle."""
    obj = json.loads(_read("mini_extension.json"))
    return tuple(obj["schemes"])
