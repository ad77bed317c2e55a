"""
Random-graph experiment: how often is dim WCW(G) zero?

Trial k samples G(n, p) with seed + k. With trials=0 and n <= 5 every labeled
graph on n vertices is visited instead, which gives exact counts.
"""

import csv
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, TextIO, Tuple

from app.config import settings
from app.errors import EnumerationCapExceeded, FamilySpecError, LPIterationCapExceeded
from app.models import ExperimentSummary, LevelableCertificate
from app.services.graph.core import Graph
from app.services.graph.generators.specs import RandomGnpSpec
from app.services.level_decide import decide_levelable
from app.services.mis import enumerate_max_independent_sets
from app.services.wcw import wcw_basis

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 5
CSV_COLUMNS = ["trial", "n", "p", "seed", "dim", "levelable"]


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    n: int
    p: Fraction
    seed: Optional[int]
    dim: Optional[int]  # None when a resource cap was hit
    levelable: Optional[bool]


@dataclass(frozen=True)
class ExperimentResult:
    summary: ExperimentSummary
    records: Tuple[TrialRecord, ...]


def _all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[k] for k in range(len(pairs)) if bits >> k & 1])


def _measure(g: Graph, max_sets: Optional[int]) -> Tuple[int, bool]:
    family = enumerate_max_independent_sets(g, max_sets=max_sets)
    dim = wcw_basis(g, family).dim
    if dim == 0:
        return dim, False
    certificate = decide_levelable(g, max_sets=max_sets)
    return dim, isinstance(certificate, LevelableCertificate)


def wcw_dim_zero_fraction(
    n: int,
    p: Fraction,
    trials: int,
    seed: Optional[int] = None,
    max_sets: Optional[int] = None,
) -> ExperimentResult:
    """
    Args:
        n: Vertex count
        p: Edge probability, 0 < p < 1
        trials: Sample count; 0 enumerates all labeled graphs (n <= 5 only)
        seed: Base seed, defaults to settings.experiment_seed

    Returns:
        ExperimentResult with the summary and one record per trial

    Raises:
        FamilySpecError: On invalid n, p or trials
    """
    p = Fraction(p)
    if not 0 < p < 1:
        raise FamilySpecError(f"need 0 < p < 1, got {p}")
    if trials < 0:
        raise FamilySpecError(f"trials must be >= 0, got {trials}")

    if trials == 0:
        if not 0 <= n <= EXHAUSTIVE_MAX_N:
            raise FamilySpecError(
                f"exhaustive mode needs n <= {EXHAUSTIVE_MAX_N}, got {n}; pass trials >= 1"
            )
        seed = None
        graphs = _all_labeled_graphs(n)
    else:
        seed = settings.experiment_seed if seed is None else seed
        graphs = (RandomGnpSpec(n=n, p=p, seed=seed + k).build() for k in range(trials))

    records: List[TrialRecord] = []
    capped: List[int] = []
    for k, g in enumerate(graphs):
        trial_seed = None if seed is None else seed + k
        try:
            dim, levelable = _measure(g, max_sets)
        except (EnumerationCapExceeded, LPIterationCapExceeded) as e:
            logger.warning(f"Trial {k} hit a resource cap: {e}")
            capped.append(k)
            records.append(TrialRecord(k, n, p, trial_seed, None, None))
            continue
        records.append(TrialRecord(k, n, p, trial_seed, dim, levelable))

    measured = [r for r in records if r.dim is not None]
    histogram = Counter(r.dim for r in measured)
    zero = histogram.get(0, 0)
    summary = ExperimentSummary(
        n=n,
        p=p,
        trials=len(records),
        seed=seed,
        fraction=Fraction(zero, len(measured)) if measured else Fraction(0),
        dim_histogram=dict(sorted(histogram.items())),
        positive_dim_count=len(measured) - zero,
        levelable_count=sum(1 for r in measured if r.levelable),
        capped_trials=capped,
    )
    logger.info(
        f"G({n},{p}): {zero}/{len(measured)} samples with dim 0, "
        f"{summary.levelable_count} levelable, {len(capped)} capped"
    )
    return ExperimentResult(summary=summary, records=tuple(records))


def write_csv(records: List[TrialRecord], out: TextIO) -> None:
    """One row per trial; capped trials leave dim and levelable empty"""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([
            r.trial,
            r.n,
            str(r.p),
            "" if r.seed is None else r.seed,
            "" if r.dim is None else r.dim,
            "" if r.levelable is None else str(r.levelable).lower(),
        ])
