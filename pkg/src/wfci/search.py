"""Bounded exhaustive enumeration of Fano weighted complete intersections.

Walks every sorted weight tuple up to a bound, every admissible multidegree
under the amplitude/index constraints, and keeps the normalized descriptors
whose ambient is well-formed, whose intersection is well-formed, and whose
general member is quasi-smooth (codimension 1 or 2; no criterion exists
beyond that).  Intersections with linear cones are excluded by default since
they reduce to smaller spaces.  Output order is deterministic: lexicographic
in weights, then degrees; sharded runs cover disjoint first-two-weight
prefixes and merge to the same record set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Callable, Iterator, Optional, Sequence

from . import cylinder, tables
from .intarith import gcd_many
from .wci import (WciDescriptor, adjunction, qs_ci2_fast, qs_hypersurface_fast,
                  FANO, CALABI_YAU)


@dataclass(frozen=True)
class SearchConfig:
    dim: int
    codim: int
    max_weight: int
    index_filter: Optional[int] = None
    amplitude_filter: Optional[str] = None
    exclude_linear_cones: bool = True
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.codim not in (1, 2):
            raise ValueError("codim must be 1 or 2: no quasi-smoothness "
                             "criterion is available beyond codimension 2")
        if self.max_weight < 1:
            raise ValueError("max_weight must be >= 1")

    @property
    def tuple_length(self) -> int:
        return self.dim + self.codim + 1


@dataclass(frozen=True)
class CandidateRecord:
    descriptor: WciDescriptor
    verdict: cylinder.CylinderVerdict
    table_hit: Optional[tuple[str, int, Optional[int]]]

    def sort_key(self):
        return (self.descriptor.weights, self.descriptor.multidegree)

    def to_json(self) -> dict:
        adj = adjunction(self.descriptor)
        hit = self.table_hit
        return {
            "weights": list(self.descriptor.weights),
            "degrees": list(self.descriptor.multidegree),
            "canonical_coefficient": adj.canonical_coefficient,
            "amplitude": adj.amplitude,
            "fano_index": adj.fano_index,
            "well_formed": True,
            "quasi_smooth": True,
            "cylinder": self.verdict.to_json(),
            "table_match": None if hit is None else
                {"table": hit[0], "row": hit[1], "n": hit[2]},
        }

    def to_csv_row(self) -> list:
        adj = adjunction(self.descriptor)
        hit = self.table_hit
        cert = self.verdict.certificate
        return [
            " ".join(map(str, self.descriptor.weights)),
            " ".join(map(str, self.descriptor.multidegree)),
            adj.canonical_coefficient, adj.amplitude,
            adj.fano_index if adj.fano_index is not None else "",
            self.verdict.status,
            cert.to_json()["kind"] if cert is not None else "",
            hit[0] if hit else "", hit[1] if hit else "",
            (hit[2] if hit[2] is not None else "") if hit else "",
        ]


CSV_HEADER = ["weights", "degrees", "canonical_coefficient", "amplitude",
              "fano_index", "cylinder_status", "certificate_kind",
              "table", "row", "n"]


def _sorted_tuples(length: int, max_weight: int,
                   prefixes: Optional[set[tuple[int, int]]] = None) -> Iterator[tuple[int, ...]]:
    """Non-decreasing weight tuples, optionally restricted to a set of
    (first, second) weight prefixes."""

    def rec(prefix: tuple[int, ...], low: int):
        if len(prefix) == 2 and prefixes is not None and prefix not in prefixes:
            return
        if len(prefix) == length:
            yield prefix
            return
        for a in range(low, max_weight + 1):
            yield from rec(prefix + (a,), a)

    yield from rec((), 1)


def _ambient_well_formed(ws: tuple[int, ...]) -> bool:
    for i in range(len(ws)):
        if gcd_many(ws[:i] + ws[i + 1:]) != 1:
            return False
    return True


def _degree_splits(config: SearchConfig, total: int) -> Iterator[tuple[int, ...]]:
    """Admissible sorted multidegrees for one weight tuple."""
    if config.index_filter is not None:
        sums = [total - config.index_filter]
        if sums[0] < 2 * config.codim:
            return
    elif config.amplitude_filter == FANO:
        sums = list(range(2 * config.codim, total))
    elif config.amplitude_filter == CALABI_YAU:
        sums = [total]
    else:
        sums = list(range(2 * config.codim, total + 1))
    if config.codim == 1:
        for s in sums:
            yield (s,)
    else:
        for s in sums:
            for d1 in range(2, s // 2 + 1):
                yield (d1, s - d1)


def iter_candidates(config: SearchConfig,
                    prefixes: Optional[set[tuple[int, int]]] = None
                    ) -> Iterator[WciDescriptor]:
    """Normalized descriptors passing every combinatorial filter, in
    deterministic lexicographic order."""
    length = config.tuple_length
    for ws in _sorted_tuples(length, config.max_weight, prefixes):
        if not _ambient_well_formed(ws):
            continue
        total = sum(ws)
        weight_set = set(ws)
        pair_gcds = [gcd(a, b) for a, b in combinations(ws, 2)]
        triple_gcds = [gcd_many(t) for t in combinations(ws, 3)]
        masks: dict[tuple[int, ...], int] = {}
        for degs in _degree_splits(config, total):
            if config.exclude_linear_cones and any(d in weight_set for d in degs):
                continue
            if config.codim == 1:
                d = degs[0]
                # well-formedness: every (n-1)-subset gcd divides d
                if any(d % g for g in pair_gcds if g > 1):
                    continue
                if not qs_hypersurface_fast(ws, d, masks):
                    continue
            else:
                d1, d2 = degs
                # mu = 2: every (n-1)-subset gcd divides both degrees
                if any(d1 % g or d2 % g for g in triple_gcds if g > 1):
                    continue
                # mu = 1: every (n-2)-subset gcd divides at least one degree
                if any(d1 % g and d2 % g for g in pair_gcds if g > 1):
                    continue
                if not qs_ci2_fast(ws, d1, d2, masks):
                    continue
            yield WciDescriptor.of(ws, degs)


def run_search(config: SearchConfig,
               sink: Optional[Callable[[CandidateRecord], None]] = None,
               prefixes: Optional[set[tuple[int, int]]] = None) -> list[CandidateRecord]:
    """Materialize candidate records (descriptor + verdict + table match)."""
    records = []
    for desc in iter_candidates(config, prefixes):
        rec = CandidateRecord(desc, cylinder.verdict(desc), tables.match(desc))
        if sink is not None:
            sink(rec)
        records.append(rec)
    return records


def partition(config: SearchConfig, shard_count: int) -> list[set[tuple[int, int]]]:
    """Disjoint covering partition of the (a_0, a_1) prefix space."""
    if shard_count < 1:
        raise ValueError("shard_count must be >= 1")
    all_prefixes = [(a, b)
                    for a in range(1, config.max_weight + 1)
                    for b in range(a, config.max_weight + 1)]
    shards: list[set[tuple[int, int]]] = [set() for _ in range(shard_count)]
    for k, p in enumerate(all_prefixes):
        shards[k % shard_count].add(p)
    return [s for s in shards if s]


def _shard_worker(args) -> list[tuple[tuple, tuple]]:
    config, prefixes = args
    return [(r.descriptor.weights, r.descriptor.multidegree)
            for r in run_search(config, prefixes=prefixes)]


def run_search_parallel(config: SearchConfig, jobs: int) -> list[CandidateRecord]:
    """Sharded search; results merged and re-sorted, identical to a serial run."""
    if jobs <= 1:
        return run_search(config)
    import multiprocessing

    shards = partition(config, jobs)
    with multiprocessing.Pool(processes=jobs) as pool:
        chunks = pool.map(_shard_worker, [(config, s) for s in shards])
    keys = sorted(k for chunk in chunks for k in chunk)
    records = []
    for ws, degs in keys:
        desc = WciDescriptor.of(ws, degs)
        records.append(CandidateRecord(desc, cylinder.verdict(desc),
                                       tables.match(desc)))
    return records


def write_records(records: Sequence[CandidateRecord], path: str,
                  fmt: str = "jsonl") -> None:
    """Deterministic output: byte-identical files for identical runs."""
    if fmt == "jsonl":
        with open(path, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_json(), sort_keys=True,
                                    separators=(",", ":")) + "\n")
    elif fmt == "csv":
        import csv as _csv
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = _csv.writer(fh)
            writer.writerow(CSV_HEADER)
            for rec in records:
                writer.writerow(rec.to_csv_row())
    else:
        raise ValueError(f"unknown format {fmt!r}")
