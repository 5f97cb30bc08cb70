"""
On-disk cache of locus enumerations.

Every entry is one JSON file holding the canonical encodings of an
enumeration. Files are written to a temporary name and renamed into place, so
readers only ever see complete entries.
"""
import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import List, Optional

from .conf import get_setting
from .exceptions import InvalidInput
from .graphs import (
    DecoratedGraph,
    RefinedTree,
    enumerate_effective_genus1_graphs,
    enumerate_genus0_trees,
    enumerate_refined_trees,
)

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

ENUMERATIONS = {
    "g0-trees": (enumerate_genus0_trees, DecoratedGraph.decode),
    "g1-effective": (enumerate_effective_genus1_graphs, DecoratedGraph.decode),
    "refined-trees": (enumerate_refined_trees, RefinedTree.decode),
}


def _digest(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


class EnumerationCache:
    def __init__(self, directory=None, schema_version: int = SCHEMA_VERSION):
        self.directory = Path(directory if directory is not None else get_setting("CACHE_DIR"))
        self.schema_version = schema_version

    def path(self, kind: str, n: int, d: int, k: int) -> Path:
        key = {"kind": kind, "n": n, "d": d, "k": k}
        return self.directory / ("%s-n%d-d%d-k%d-%s.json" % (kind, n, d, k, _digest(key)[:16]))

    def load(self, kind: str, n: int, d: int, k: int) -> Optional[List[str]]:
        path = self.path(kind, n, d, k)
        try:
            with open(path) as f:
                payload = json.load(f)
            schema, encodings, checksum = payload["schema"], payload["encodings"], payload["checksum"]
        except FileNotFoundError:
            logger.debug("cache miss %s", path.name)
            return None
        except (ValueError, KeyError, TypeError) as error:
            logger.warning("ignoring corrupt cache file %s: %s", path, error)
            return None

        if schema != self.schema_version:
            logger.info("ignoring cache file %s with schema %r", path.name, schema)
            return None
        if not isinstance(encodings, list) or checksum != _digest(encodings):
            logger.warning("ignoring corrupt cache file %s: checksum mismatch", path)
            return None
        logger.debug("cache hit %s (%d records)", path.name, len(encodings))
        return encodings

    def store(self, kind: str, n: int, d: int, k: int, encodings: List[str]) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path(kind, n, d, k)
        payload = {
            "schema": self.schema_version,
            "key": {"kind": kind, "n": n, "d": d, "k": k},
            "encodings": list(encodings),
            "checksum": _digest(list(encodings)),
        }
        fd, temporary = tempfile.mkstemp(dir=self.directory, prefix=".%s." % path.stem, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as f:
                json.dump(payload, f)
            os.replace(temporary, path)
        except BaseException:
            if os.path.exists(temporary):
                os.unlink(temporary)
            raise
        return path


def cache_roundtrip(kind: str, n: int, d: int, k: int = 0, cache: Optional[EnumerationCache] = None) -> list:
    """The enumeration of ``kind``, read from the cache or computed and stored."""
    if kind not in ENUMERATIONS:
        raise InvalidInput("no cached enumeration of kind %r" % kind)
    enumerate_loci, decode = ENUMERATIONS[kind]
    cache = cache or EnumerationCache()

    encodings = cache.load(kind, n, d, k)
    if encodings is None:
        encodings = [locus.encode() for locus in enumerate_loci(n, d, k)]
        cache.store(kind, n, d, k, encodings)
    return [decode(encoding) for encoding in encodings]
