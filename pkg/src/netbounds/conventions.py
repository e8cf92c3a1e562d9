"""Sign and labelling choices that the computed bounds depend on."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass

START, END = "start", "end"


@dataclass(frozen=True)
class Convention:
    """``initial_orient`` is the orientation of f just counterclockwise of r
    at the start of the trajectory.  ``double_point_parity`` says which end of
    an arc the simple vertices are counted from when a double point falls in
    it: ``"end"`` counts those after the double point, ``"start"`` those before.
    The two agree whenever the arc holds an even number of vertices.
    """

    initial_orient: int = 1
    double_point_parity: str = END

    def __post_init__(self):
        if self.initial_orient not in (1, -1):
            raise ValueError("initial_orient must be +1 or -1")
        if self.double_point_parity not in (START, END):
            raise ValueError(f"double_point_parity must be {START!r} or {END!r}")

    def fingerprint(self) -> str:
        blob = json.dumps(asdict(self), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


DEFAULT = Convention()
