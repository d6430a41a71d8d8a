"""Ramsey numbers of wheels against stars, cycles, fans and matchings.

Subpackages are plain modules: :mod:`.graph` (graphs, colorings, witness
files), :mod:`.detectors`, :mod:`.matching`, :mod:`.decompositions`,
:mod:`.constructions`, :mod:`.formulas` and :mod:`.search`.
"""

from .graph import FamilySpec, Graph, Kind, TwoColoring, format_witness, parse_witness

__version__ = "0.1.0"

__all__ = ["FamilySpec", "Graph", "Kind", "TwoColoring", "format_witness", "parse_witness", "__version__"]
