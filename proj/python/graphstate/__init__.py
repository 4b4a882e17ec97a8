"""Entangled states on weighted directed tripartite graphs.

Thin Python face of the C++ core: graph documents, closed-form entanglement
distances and correlators, exact statevector simulation, circuit compilation,
and noisy shot sampling.
"""

from ._core import (
    Graph,
    compile_circuit,
    correlator,
    correlator_simulated,
    entanglement_distance,
    entanglement_distance_sampled,
    entanglement_distance_simulated,
    mean_spin,
    sample_counts,
    statevector,
)

__all__ = [
    "Graph",
    "compile_circuit",
    "correlator",
    "correlator_simulated",
    "entanglement_distance",
    "entanglement_distance_sampled",
    "entanglement_distance_simulated",
    "mean_spin",
    "sample_counts",
    "statevector",
]

__version__ = "0.1.0"
