"""Content-addressed JSON cache for expensive symbolic artifacts.

Entries store a checksum of their payload; anything corrupted, truncated or
version-mismatched is silently recomputed.  Polynomials are serialized
structurally (words plus integer coefficient vectors), so a warm cache is
bit-identical to a cold recomputation.
"""

from __future__ import annotations

import hashlib
import json
import os

from .freealg import NcPoly
from .scalars import Scalar

FORMAT_VERSION = 1


def poly_to_json(a: NcPoly):
    items = []
    for w in sorted(a.terms, key=lambda w: (len(w), w)):
        c = a.terms[w]
        items.append([[list(g) for g in w], list(c.num), list(c.den)])
    return items


def poly_from_json(items) -> NcPoly:
    out = NcPoly()
    for word, num, den in items:
        w = tuple(tuple(g) for g in word)
        out._iadd_term(w, Scalar(tuple(num), tuple(den)))
    return out


def table_to_json(table):
    return [[poly_to_json(x) for x in row] for row in table]


def table_from_json(data):
    return [[poly_from_json(x) for x in row] for row in data]


class ArtifactCache:
    """Directory of JSON files named by the hash of their key."""

    def __init__(self, cache_dir: str):
        self.dir = cache_dir
        os.makedirs(cache_dir, exist_ok=True)

    def _path(self, key: str) -> str:
        digest = hashlib.sha256(key.encode()).hexdigest()[:32]
        return os.path.join(self.dir, digest + ".json")

    @staticmethod
    def _checksum(payload) -> str:
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, key: str):
        """Payload for key, or None if absent/corrupt/stale."""
        try:
            with open(self._path(key)) as fh:
                entry = json.load(fh)
            if entry.get("version") != FORMAT_VERSION or entry.get("key") != key:
                return None
            payload = entry.get("payload")
            if entry.get("checksum") != self._checksum(payload):
                return None
            return payload
        except (OSError, ValueError):
            return None

    def put(self, key: str, payload):
        entry = {
            "version": FORMAT_VERSION,
            "key": key,
            "checksum": self._checksum(payload),
            "payload": payload,
        }
        try:
            with open(self._path(key), "w") as fh:
                json.dump(entry, fh, sort_keys=True)
        except OSError:
            pass

    # convenience wrappers used by the presentation builders

    def poly(self, key: str, compute):
        hit = self.get(key)
        if hit is not None:
            return poly_from_json(hit)
        value = compute()
        self.put(key, poly_to_json(value))
        return value

    def table(self, key: str, compute):
        hit = self.get(key)
        if hit is not None:
            return table_from_json(hit)
        value = compute()
        self.put(key, table_to_json(value))
        return value
