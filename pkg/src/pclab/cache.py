"""On-disk cache of computed tables.

Files are JSON with big integers as decimal strings::

    {"format_version": 1, "kind": "partition", "config": {...}, "values": [...]}

The file name encodes the kind and parameters. A file with another
``format_version`` or a config that does not match the request is ignored
and recomputed. Tables are never reused across a different ``nmax``.
"""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

import numpy as np

from .mtable import MTable, SEED_ROWS
from .partitions import PartitionTable, TwoColorTable, partition_count, two_color_count

FORMAT_VERSION = 1

log = logging.getLogger(__name__)


def default_cache_dir() -> Path:
    env = os.environ.get("PCLAB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "pclab"


class TableCache:
    def __init__(self, root: str | os.PathLike | None = None, enabled: bool = True):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.enabled = enabled

    # low level ------------------------------------------------------------
    def path(self, kind: str, **params) -> Path:
        tag = "-".join(f"{k}{v}" for k, v in sorted(params.items()))
        return self.root / f"{kind}-{tag}.json"

    def write(self, kind: str, config: dict, values) -> Path:
        path = self.path(kind, **config)
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = {"format_version": FORMAT_VERSION, "kind": kind,
               "config": {k: str(v) for k, v in config.items()},
               "values": [str(int(v)) for v in values]}
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc))
        tmp.replace(path)
        return path

    def read(self, path: Path, kind: str, config: dict | None = None) -> list[int] | None:
        try:
            doc = json.loads(path.read_text())
        except (OSError, ValueError) as exc:
            log.info("ignoring unreadable cache file %s: %s", path, exc)
            return None
        if doc.get("format_version") != FORMAT_VERSION or doc.get("kind") != kind:
            log.info("ignoring stale cache file %s", path)
            return None
        if config is not None and doc.get("config") != {k: str(v) for k, v in config.items()}:
            log.info("ignoring cache file %s with mismatched config", path)
            return None
        return [int(v) for v in doc["values"]]

    # tables -----------------------------------------------------------------
    def partitions(self, nmax: int, modulus: int | None = None) -> PartitionTable:
        if not self.enabled:
            return partition_count(nmax, modulus)
        if modulus is not None:
            config = {"nmax": nmax, "modulus": modulus}
            vals = self.read(self.path("partition", **config), "partition", config)
            if vals is not None and len(vals) == nmax + 1:
                return PartitionTable(np.array(vals, dtype=np.int64), modulus)
            table = partition_count(nmax, modulus)
            self.write("partition", config, table.values)
            return table
        config = {"nmax": nmax, "modulus": "exact"}
        vals = self.read(self.path("partition", **config), "partition", config)
        if vals is not None and len(vals) == nmax + 1:
            return PartitionTable(vals)
        table = partition_count(nmax)
        self.write("partition", config, table.values)
        return table

    def two_color(self, ell: int, nmax: int, modulus: int | None = None) -> TwoColorTable:
        config = {"ell": ell, "nmax": nmax, "modulus": "exact" if modulus is None else modulus}
        if self.enabled:
            vals = self.read(self.path("twocolor", **config), "twocolor", config)
            if vals is not None:
                return TwoColorTable(ell, vals, modulus)
        p = self.partitions(nmax, modulus)
        table = two_color_count(ell, nmax, p, modulus)
        if self.enabled:
            self.write("twocolor", config, table.values)
        return table

    def mtable(self, imax: int, jmax: int) -> MTable:
        config = {"imax": imax, "jmax": jmax}
        if self.enabled:
            vals = self.read(self.path("mtable", **config), "mtable", config)
            if vals is not None and len(vals) == imax * jmax:
                return _mtable_from_flat(vals, imax, jmax)
        table = MTable().ensure(imax, jmax)
        if self.enabled:
            self.write("mtable", config, [table[i, j] for i in range(1, imax + 1)
                                          for j in range(1, jmax + 1)])
        return table


def _mtable_from_flat(vals: list[int], imax: int, jmax: int) -> MTable:
    table = MTable()
    rows = [vals[(i - 1) * jmax: i * jmax] for i in range(1, imax + 1)]
    # seed rows come from the package; cached rows beyond them are trusted as cache
    table._rows = table._rows[: SEED_ROWS + 1] + [list(r) for r in rows[SEED_ROWS:]]
    table._jmax = jmax
    return table
