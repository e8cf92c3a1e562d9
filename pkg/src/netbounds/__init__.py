"""Certified lower bounds for real rational functions with prescribed real
critical points satisfying f(r) = f(s), computed from net dynamics."""

__version__ = "0.1.0"

from .diagrams import (  # noqa: E402
    ChordDiagram,
    DiagramError,
    FullTableau,
    catalan_u,
    enumerate_diagrams,
    format_diagram,
    from_tableau,
    parse_diagram,
    shift,
    to_tableau,
)
from .conventions import Convention  # noqa: E402
from .counting import lower_bound, orbits, v_of_net  # noqa: E402

__all__ = [
    "ChordDiagram",
    "Convention",
    "DiagramError",
    "FullTableau",
    "catalan_u",
    "enumerate_diagrams",
    "format_diagram",
    "from_tableau",
    "lower_bound",
    "orbits",
    "parse_diagram",
    "shift",
    "to_tableau",
    "v_of_net",
]
