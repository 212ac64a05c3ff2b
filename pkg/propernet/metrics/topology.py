"""
Per-snapshot topological properties.

Path metrics (average path length, diameter) are computed on the largest
connected component; above a size limit they are estimated from a seeded
sample of BFS sources and flagged.
"""

import logging
import random
from dataclasses import dataclass, fields
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..network.graph import DynamicNetwork, Interval, Snapshot

logger = logging.getLogger(__name__)

DEFAULT_EXACT_PATH_LIMIT = 5000
DEFAULT_SAMPLE_SOURCES = 64


@dataclass(frozen=True)
class TopologyRow:
    interval: Interval
    node_count: int
    link_count: int
    density: float
    average_degree: float
    components: int
    transitivity: float
    average_path_length: float
    diameter: int
    path_estimated: bool = False


def to_graph(s: Snapshot) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(sorted(s.nodes))
    graph.add_edges_from(sorted((link.a, link.b) for link in s.links))
    return graph


def _largest_component(graph: nx.Graph) -> nx.Graph:
    # Ties go to the component holding the smallest node id.
    ranked = sorted(nx.connected_components(graph), key=lambda c: (-len(c), min(c)))
    return graph.subgraph(ranked[0])


def _sampled_paths(component: nx.Graph, sources: int, seed: int) -> Tuple[float, int]:
    rng = random.Random(seed)
    chosen = rng.sample(sorted(component.nodes), min(sources, component.number_of_nodes()))
    total, pairs, eccentricity = 0, 0, 0
    for source in chosen:
        lengths = nx.single_source_shortest_path_length(component, source)
        total += sum(lengths.values())
        pairs += len(lengths) - 1
        eccentricity = max(eccentricity, max(lengths.values()))
    return total / pairs, eccentricity


def topology_row(s: Snapshot, exact_limit: int = DEFAULT_EXACT_PATH_LIMIT,
                 sample_sources: int = DEFAULT_SAMPLE_SOURCES, seed: int = 0) -> TopologyRow:
    """Topological properties of one snapshot; all zeros for an empty snapshot."""
    n, m = len(s.nodes), len(s.links)
    if n == 0:
        return TopologyRow(s.interval, 0, 0, 0.0, 0.0, 0, 0.0, 0.0, 0)

    graph = to_graph(s)
    apl, diameter, estimated = 0.0, 0, False
    component = _largest_component(graph)
    size = component.number_of_nodes()
    if size >= 2:
        if size <= exact_limit:
            apl = nx.average_shortest_path_length(component)
            diameter = nx.diameter(component)
        else:
            apl, diameter = _sampled_paths(component, sample_sources, seed)
            estimated = True
            logger.info("path metrics for [%d, %d) estimated from %d sources (component of %d nodes)",
                        s.interval.start, s.interval.end, sample_sources, size)

    return TopologyRow(
        interval=s.interval,
        node_count=n,
        link_count=m,
        density=2.0 * m / (n * (n - 1)) if n >= 2 else 0.0,
        average_degree=2.0 * m / n,
        components=nx.number_connected_components(graph),
        transitivity=nx.transitivity(graph),
        average_path_length=float(apl),
        diameter=int(diameter),
        path_estimated=estimated,
    )


def topology_series(net: DynamicNetwork, exact_limit: int = DEFAULT_EXACT_PATH_LIMIT,
                    sample_sources: int = DEFAULT_SAMPLE_SOURCES, seed: int = 0) -> List[TopologyRow]:
    """One row per snapshot, in order."""
    return [topology_row(s, exact_limit, sample_sources, seed) for s in net]


SUMMARY_FIELDS = [f.name for f in fields(TopologyRow) if f.name not in ("interval", "path_estimated")]


def topology_summary(rows: Sequence[TopologyRow]) -> Dict[str, Optional[float]]:
    """Average of every numeric property across snapshots."""
    if not rows:
        return {name: None for name in SUMMARY_FIELDS}
    summary = {}
    for name in SUMMARY_FIELDS:
        summary[name] = sum(getattr(row, name) for row in rows) / len(rows)
    return summary
