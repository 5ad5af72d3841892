"""Batch experiment runner: configs in, CSV records and JSON summaries out.

A config names a graph source, an algorithm, parameters, and seeds; the
runner executes every (graph, seed) pair, attaches brute-force optima when
the instance is small enough, checks the algorithm's guarantee, and
aggregates.  CSV output is byte-identical for identical configs.
"""

from __future__ import annotations

import io
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from . import clustering, greedy, oracles
from .cutfun import assignment_to_set, cut_value, dicut_value
from .graph import (Graph, gen_even_cycle, gen_gnp, gen_random_bipartite,
                    load_edge_list)
from .oracles import BRUTE_FORCE_CAP
from .simulator import ExecutionMetrics

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class AlgorithmSpec:
    name: str
    deterministic_guarantee: bool
    mode: str                      # model the algorithm runs in
    directed: bool
    guarantee_label: str           # ratio column, as in the results table


ALGORITHMS: Dict[str, AlgorithmSpec] = {
    "random_cut": AlgorithmSpec("random_cut", False, "CONGEST", False, "1/2"),
    "random_dicut": AlgorithmSpec("random_dicut", False, "CONGEST", True, "1/4"),
    "greedy_maxcut": AlgorithmSpec("greedy_maxcut", True, "CONGEST", False, "1/2"),
    "greedy_maxdicut": AlgorithmSpec("greedy_maxdicut", True, "CONGEST", True, "1/3"),
    "randomized_maxdicut": AlgorithmSpec(
        "randomized_maxdicut", False, "CONGEST", True, "1/2"),
    "bipartite_maxcut": AlgorithmSpec(
        "bipartite_maxcut", False, "CONGEST", False, "1-eps"),
    "decomposition_maxcut": AlgorithmSpec(
        "decomposition_maxcut", False, "LOCAL", False, "1-eps"),
    "decomposition_maxdicut": AlgorithmSpec(
        "decomposition_maxdicut", False, "LOCAL", True, "1-eps"),
    "fast_maxcut": AlgorithmSpec("fast_maxcut", True, "LOCAL", False, "1/2"),
    "fast_maxdicut": AlgorithmSpec("fast_maxdicut", True, "LOCAL", True, "1/3"),
}


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    algorithm: str
    graph: Dict[str, Any]
    seeds: List[int]
    params: Dict[str, Any] = field(default_factory=dict)
    mode: Optional[str] = None
    oracle_cap: int = BRUTE_FORCE_CAP

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "ExperimentConfig":
        if doc.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
            raise ConfigError(f"unsupported schema {doc.get('schema')}")
        algorithm = doc.get("algorithm")
        if algorithm not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {algorithm!r}")
        graph = doc.get("graph")
        if not isinstance(graph, dict) or "kind" not in graph:
            raise ConfigError("graph section must be a mapping with a 'kind'")
        seeds_doc = doc.get("seeds", {"count": 1, "base": 0})
        if isinstance(seeds_doc, list):
            seeds = [int(s) for s in seeds_doc]
        else:
            seeds = list(range(int(seeds_doc.get("base", 0)),
                               int(seeds_doc.get("base", 0))
                               + int(seeds_doc.get("count", 1))))
        if not seeds:
            raise ConfigError("at least one seed is required")
        cfg = cls(algorithm=algorithm, graph=graph, seeds=seeds,
                  params=doc.get("params", {}), mode=doc.get("mode"),
                  oracle_cap=int(doc.get("oracle_cap", BRUTE_FORCE_CAP)))
        cfg.validate()
        return cfg

    def validate(self) -> None:
        spec = ALGORITHMS[self.algorithm]
        if self.mode is not None:
            if self.mode not in ("LOCAL", "CONGEST"):
                raise ConfigError(f"unknown mode {self.mode!r}")
            if spec.mode == "LOCAL" and self.mode == "CONGEST":
                raise ConfigError(
                    f"{self.algorithm} requires the LOCAL model")
        if self.algorithm in ("bipartite_maxcut", "decomposition_maxcut",
                              "decomposition_maxdicut"):
            if "epsilon" not in self.params:
                raise ConfigError(f"{self.algorithm} needs params.epsilon")


def build_graphs(graph_doc: Dict[str, Any]) -> List[Tuple[str, Graph]]:
    """Instantiate the graph source: one graph or a generated family."""
    kind = graph_doc["kind"]
    if kind == "file":
        with open(graph_doc["path"], encoding="utf-8") as fh:
            return [(graph_doc["path"], load_edge_list(fh.read()))]
    count = int(graph_doc.get("count", 1))
    base = int(graph_doc.get("seed", 0))
    out = []
    for i in range(count):
        gseed = base + i
        if kind == "gnp":
            g = gen_gnp(int(graph_doc["n"]), float(graph_doc["p"]), gseed,
                        directed=bool(graph_doc.get("directed", False)))
        elif kind == "bipartite":
            g = gen_random_bipartite(int(graph_doc["n1"]), int(graph_doc["n2"]),
                                     float(graph_doc["p"]), gseed)
        elif kind == "cycle":
            g = gen_even_cycle(int(graph_doc["n"]))
        else:
            raise ConfigError(f"unknown graph kind {kind!r}")
        out.append((f"{kind}-{i}", g))
    return out


def _invoke(algorithm: str, g: Graph, seed: int, params: Dict[str, Any]
            ) -> Tuple[Dict[int, int], ExecutionMetrics, Optional[Any]]:
    eps = float(params.get("epsilon", 0.3))
    cap = int(params.get("exact_cap", BRUTE_FORCE_CAP))
    if algorithm in ("random_cut", "random_dicut"):
        return oracles.random_cut(g, seed), ExecutionMetrics(), None
    if algorithm == "greedy_maxcut":
        a, m = greedy.distributed_greedy_maxcut(g, seed)
        return a, m, None
    if algorithm == "greedy_maxdicut":
        a, m = greedy.distributed_greedy_maxdicut(g, seed)
        return a, m, None
    if algorithm == "randomized_maxdicut":
        a, m = greedy.distributed_randomized_maxdicut(g, seed)
        return a, m, None
    if algorithm == "bipartite_maxcut":
        return clustering.bipartite_maxcut(g, eps, seed)
    if algorithm == "decomposition_maxcut":
        return clustering.decomposition_maxcut(g, eps, seed, exact_cap=cap)
    if algorithm == "decomposition_maxdicut":
        return clustering.decomposition_maxdicut(g, eps, seed, exact_cap=cap)
    if algorithm == "fast_maxcut":
        a, m = greedy.fast_greedy_maxcut(g, seed, exact_cap=cap)
        return a, m, None
    if algorithm == "fast_maxdicut":
        a, m = greedy.fast_greedy_maxdicut(g, seed, exact_cap=cap)
        return a, m, None
    raise ConfigError(f"unknown algorithm {algorithm!r}")


def _check_guarantee(algorithm: str, value: int, opt: Optional[int],
                     g: Graph, report) -> bool:
    """Per-run hard guarantee; True means violated."""
    if algorithm in ("greedy_maxcut", "fast_maxcut"):
        if 2 * value < g.m:
            return True
        return opt is not None and 2 * value < opt
    if algorithm in ("greedy_maxdicut", "fast_maxdicut"):
        return opt is not None and 3 * value < opt
    if algorithm == "bipartite_maxcut" and report is not None:
        return value < g.m - report.exterior_edge_count
    return False


@dataclass
class ExperimentRecord:
    rows: List[Dict[str, Any]]
    summary: Dict[str, Any]

    def to_csv(self) -> str:
        cols = ["algorithm", "graph_id", "n", "m", "seed", "value", "opt",
                "ratio", "rounds", "messages", "max_bits", "violation"]
        buf = io.StringIO()
        buf.write(",".join(cols) + "\n")
        for row in self.rows:
            buf.write(",".join(_fmt(row[c]) for c in cols) + "\n")
        return buf.getvalue()


def _fmt(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def run_experiment(cfg: ExperimentConfig) -> ExperimentRecord:
    spec = ALGORITHMS[cfg.algorithm]
    graphs = build_graphs(cfg.graph)
    rows: List[Dict[str, Any]] = []
    t0 = time.perf_counter()
    for graph_id, g in graphs:
        if g.directed != spec.directed:
            raise ConfigError(
                f"{cfg.algorithm} expects directed={spec.directed}, "
                f"graph {graph_id} has directed={g.directed}")
        opt = None
        if g.n <= cfg.oracle_cap:
            opt = oracles.brute_force(g).opt_value
        for seed in cfg.seeds:
            assignment, metrics, report = _invoke(cfg.algorithm, g, seed,
                                                  cfg.params)
            sset = assignment_to_set(assignment)
            value = dicut_value(g, sset) if g.directed else cut_value(g, sset)
            ratio = None
            if opt:
                ratio = value / opt
            elif opt == 0:
                ratio = 1.0
            violation = _check_guarantee(cfg.algorithm, value, opt, g, report)
            rows.append({
                "algorithm": cfg.algorithm, "graph_id": graph_id,
                "n": g.n, "m": g.m, "seed": seed, "value": value,
                "opt": opt, "ratio": ratio,
                "rounds": metrics.rounds_used,
                "messages": metrics.total_messages,
                "max_bits": metrics.max_message_bits,
                "violation": int(violation),
            })
    wall = time.perf_counter() - t0
    ratios = [r["ratio"] for r in rows if r["ratio"] is not None]
    summary = {
        "algorithm": cfg.algorithm,
        "graph": cfg.graph,
        "runs": len(rows),
        "violations": sum(r["violation"] for r in rows),
        "mean_value": sum(r["value"] for r in rows) / len(rows),
        "mean_ratio": sum(ratios) / len(ratios) if ratios else None,
        "min_ratio": min(ratios) if ratios else None,
        "max_rounds": max(r["rounds"] for r in rows),
        "max_message_bits": max(r["max_bits"] for r in rows),
        "deterministic_guarantee": spec.deterministic_guarantee,
        "mode": spec.mode,
        "guarantee": spec.guarantee_label,
        "wall_time_s": wall,
    }
    return ExperimentRecord(rows=rows, summary=summary)


def summary_table(summaries: List[Dict[str, Any]]) -> str:
    """Plain-text table, one row per (algorithm, graph class)."""
    if not summaries:
        raise ValueError("no records to summarize")
    header = ["algorithm", "graph", "rounds", "deterministic", "model",
              "worst ratio", "guarantee"]
    rows = []
    for s in sorted(summaries,
                    key=lambda s: (s["algorithm"], s["graph"].get("kind", ""))):
        rows.append([
            s["algorithm"],
            s["graph"].get("kind", "?"),
            str(s["max_rounds"]),
            "yes" if s["deterministic_guarantee"] else "no",
            s["mode"],
            f"{s['min_ratio']:.4f}" if s.get("min_ratio") is not None else "-",
            s["guarantee"],
        ])
    widths = [max(len(header[i]), max((len(r[i]) for r in rows), default=0))
              for i in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(lines) + "\n"
