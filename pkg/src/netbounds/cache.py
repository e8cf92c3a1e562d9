"""Result records and the on-disk JSON cache.

The cache is advisory: unreadable or inconsistent entries are ignored and
recomputed, never trusted.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .conventions import DEFAULT, Convention
from .errors import InvariantViolation

log = logging.getLogger(__name__)

CACHE_ENV = "NETBOUNDS_CACHE_DIR"
DEFAULT_CACHE_DIR = ".netbounds-cache"


@dataclass(frozen=True)
class ResultRecord:
    d: int
    k: int
    bound: int
    sumV: int
    diagramCount: int
    elapsedMilliseconds: int
    toolVersion: str
    conventionFingerprint: str

    def __post_init__(self):
        if self.bound * (2 * self.d - 2) != self.sumV:
            raise InvariantViolation("bound * (2d - 2) must equal sumV")

    @classmethod
    def from_report(cls, report, convention: Convention = DEFAULT) -> ResultRecord:
        return cls(
            d=report.d,
            k=report.k,
            bound=report.bound,
            sumV=report.sum_v,
            diagramCount=report.diagram_count,
            elapsedMilliseconds=round(report.elapsed * 1000),
            toolVersion=report.tool_version,
            conventionFingerprint=convention.fingerprint(),
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE_DIR))


class ResultCache:
    def __init__(self, root: Path | str | None = None, convention: Convention = DEFAULT):
        self.root = Path(root) if root is not None else cache_dir()
        self.convention = convention

    def path(self, d: int, k: int) -> Path:
        name = f"d{d}-k{k}-{self.convention.fingerprint()}-v{__version__}.json"
        return self.root / name

    def load(self, d: int, k: int) -> ResultRecord | None:
        p = self.path(d, k)
        try:
            raw = json.loads(p.read_text())
            rec = ResultRecord(**raw)
        except FileNotFoundError:
            return None
        except (OSError, ValueError, TypeError, InvariantViolation) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", p, exc)
            return None
        key = (rec.d, rec.k, rec.conventionFingerprint, rec.toolVersion)
        if key != (d, k, self.convention.fingerprint(), __version__):
            log.warning("ignoring mismatched cache entry %s", p)
            return None
        return rec

    def store(self, rec: ResultRecord) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        target = self.path(rec.d, rec.k)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(rec.to_json() + "\n")
            os.replace(tmp, target)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
