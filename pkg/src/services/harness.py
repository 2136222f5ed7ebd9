"""
Pruning experiments: for every network, fraction and replicate, prune the
original graph and measure its distance to the pruned copy, then aggregate
the replicate cloud into a mean and a population standard deviation.
"""
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.exceptions import ExperimentError, NetpruneError
from src.models.graph import Graph
from src.models.spectrum import MatrixKind, Spectrum
from src.schemas import ExperimentConfig, ExperimentRecord, MetricName, NetworkSource, PruneMode, PruneSpec
from src.services.affinity import (
    edit_distance,
    pairwise_distance_matrix,
    root_euclidean_from_roots,
    similarity_from_distance,
    sqrt_affinity,
)
from src.services.loaders import load_graph
from src.services.perturbation import prune
from src.services.properties import strip_isolates
from src.services.spectral import graph_spectrum, spectrum_distance

logger = logging.getLogger(__name__)

SPECTRAL_METRICS = {
    MetricName.D_A: MatrixKind.ADJACENCY,
    MetricName.D_L: MatrixKind.LAPLACIAN,
    MetricName.D_NL: MatrixKind.NORMALIZED_LAPLACIAN,
}
AFFINITY_METRICS = {MetricName.D_ROOT_ED, MetricName.SIM_DC}


def derive_seed(base: int, network_index: int, fraction_index: int, replicate_index: int) -> int:
    """
    Seed of one replicate.

    The tuple is mixed by numpy's ``SeedSequence`` hash (base seed as entropy,
    indices as spawn key), which is specified bit-for-bit and platform independent.
    """
    sequence = np.random.SeedSequence(
        entropy=base, spawn_key=(network_index, fraction_index, replicate_index)
    )
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def aggregate(samples: Sequence[float]) -> Tuple[float, float]:
    """
    Arithmetic mean and population standard deviation.

    Raises:
        ExperimentError: If there are no samples
    """
    if len(samples) == 0:
        raise ExperimentError("cannot aggregate an empty sample")
    values = np.asarray(samples, dtype=float)
    return float(values.mean()), float(values.std(ddof=0))


@dataclass(frozen=True, eq=False)
class OriginalGraph:
    """An original graph with everything the replicates compare against."""

    graph: Graph
    metrics: Tuple[MetricName, ...]
    spectra: Dict[MatrixKind, Spectrum] = field(default_factory=dict)
    sqrt_affinity: Optional[np.ndarray] = None
    hop_distances: Optional[np.ndarray] = None


def prepare_original(g: Graph, metrics: Sequence[MetricName]) -> OriginalGraph:
    """Compute the original's spectra, affinity roots and hop distances once."""
    metrics = tuple(MetricName(m) for m in metrics)
    spectra = {
        SPECTRAL_METRICS[m]: graph_spectrum(g, SPECTRAL_METRICS[m])
        for m in metrics if m in SPECTRAL_METRICS
    }
    roots = sqrt_affinity(g) if AFFINITY_METRICS.intersection(metrics) else None
    hops = pairwise_distance_matrix(g).entries if MetricName.SPD in metrics else None
    return OriginalGraph(g, metrics, spectra, roots, hops)


def compare(original: OriginalGraph, pruned: Graph) -> Tuple[float, ...]:
    """Every requested metric between the original and one pruned copy, in metric order."""
    values: Dict[MetricName, float] = {}
    for metric in original.metrics:
        if metric in SPECTRAL_METRICS:
            kind = SPECTRAL_METRICS[metric]
            values[metric] = spectrum_distance(original.spectra[kind], graph_spectrum(pruned, kind))
        elif metric in AFFINITY_METRICS:
            if MetricName.D_ROOT_ED not in values:
                values[MetricName.D_ROOT_ED] = root_euclidean_from_roots(
                    original.sqrt_affinity, sqrt_affinity(pruned)
                )
            if metric is MetricName.SIM_DC:
                values[metric] = similarity_from_distance(values[MetricName.D_ROOT_ED])
        elif metric is MetricName.EDIT:
            values[metric] = edit_distance(original.graph, pruned)
        elif metric is MetricName.SPD:
            hops = pairwise_distance_matrix(pruned, original.graph.n).entries
            values[metric] = float(np.linalg.norm(original.hop_distances - hops, ord="fro"))
    return tuple(values[m] for m in original.metrics)


def run_replicate(
    original: OriginalGraph, mode: PruneMode, fraction: float, job: Tuple[int, int]
) -> Tuple[float, ...]:
    """
    Prune the original once and measure it.

    Args:
        original: Prepared original graph
        mode: Pruning scenario
        fraction: Fraction of elements to remove
        job: (replicate index, seed)

    Raises:
        ExperimentError: Wrapping any failure with the replicate's context
    """
    replicate, seed = job
    try:
        result = prune(original.graph, PruneSpec(mode=mode, fraction=fraction, seed=seed))
        return compare(original, result.pruned)
    except NetpruneError as e:
        raise ExperimentError(
            f"network '{original.graph.name}', fraction {fraction}, replicate {replicate}: {e}"
        ) from e


@contextmanager
def replicate_pool(workers: int) -> Iterator[Optional[Executor]]:
    """Process pool for replicate-level parallelism; ``None`` when running serially."""
    if workers <= 1:
        yield None
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield pool


def load_original(cfg: ExperimentConfig, source: NetworkSource) -> Graph:
    """Load a network, drop its weights and its isolated nodes."""
    try:
        g = load_graph(
            source.path, source.format, cfg.delimiter, name=source.name, symmetrize=source.symmetrize
        )
    except NetpruneError as e:
        raise ExperimentError(f"cannot load network '{source.name}': {e}") from e
    return strip_isolates(g.binarized())


def run_network(
    cfg: ExperimentConfig,
    index: int,
    source: NetworkSource,
    pool: Optional[Executor] = None,
) -> List[ExperimentRecord]:
    """
    Run every fraction and replicate of one network.

    Args:
        cfg: Experiment configuration
        index: Position of the network in ``cfg.networks`` (enters the seeds)
        source: The network
        pool: Optional executor; results are collected in replicate order

    Returns:
        List[ExperimentRecord]: One record per (fraction, metric)
    """
    started = time.perf_counter()
    original = prepare_original(load_original(cfg, source), cfg.metrics)
    logger.info(
        f"Network '{source.name}': n={original.graph.n}, m={original.graph.m}, "
        f"mode={cfg.mode.value}, nrep={cfg.nrep}"
    )

    records = []
    for fraction_index, fraction in enumerate(cfg.fractions):
        jobs = [
            (r, derive_seed(cfg.base_seed, index, fraction_index, r)) for r in range(cfg.nrep)
        ]
        task = partial(run_replicate, original, cfg.mode, fraction)
        if pool is None:
            rows = [task(job) for job in jobs]
        else:
            rows = list(pool.map(task, jobs, chunksize=max(1, cfg.nrep // 16)))
        samples = np.asarray(rows, dtype=float)

        for column, metric in enumerate(original.metrics):
            mean, std = aggregate(samples[:, column])
            records.append(
                ExperimentRecord(
                    network=source.name,
                    mode=cfg.mode,
                    fraction=fraction,
                    metric=metric,
                    mean=mean,
                    std=std,
                    nrep=cfg.nrep,
                    base_seed=cfg.base_seed,
                )
            )
        logger.info(f"Network '{source.name}': fraction {fraction} done")

    logger.info(
        f"Network '{source.name}': {len(records)} records in {time.perf_counter() - started:.2f}s"
    )
    return records


def run_experiment(cfg: ExperimentConfig) -> List[ExperimentRecord]:
    """
    Run a full experiment over every configured network.

    Raises:
        ExperimentError: If a network cannot be loaded or a metric fails
    """
    records: List[ExperimentRecord] = []
    with replicate_pool(cfg.workers) as pool:
        for index, source in enumerate(cfg.networks):
            records.extend(run_network(cfg, index, source, pool))
    return records
