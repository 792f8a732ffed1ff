"""
Text formats for hypergraphs, Independent Family instances and circuits.
"""

from .hypergraph import dump_hypergraph, load_hypergraph, parse_hypergraph
from .instances import dump_circuit, dump_if, dump_mcif, parse_circuit, parse_instance

__all__ = [
    "parse_hypergraph",
    "load_hypergraph",
    "dump_hypergraph",
    "dump_mcif",
    "dump_if",
    "parse_instance",
    "dump_circuit",
    "parse_circuit",
]
