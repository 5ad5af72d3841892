"""Synchronous round simulator for the LOCAL and CONGEST models.

Vertices run lock-step: everything sent in round r is delivered at round
r + 1.  A vertex may read only its own id, n, the maximal degree, its
neighbor lists, its private RNG stream, and the messages it has received;
the context object exposes nothing else.
"""

from __future__ import annotations

import hashlib
import json
import math
import pickle
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from .graph import Graph, max_degree


class CongestViolation(RuntimeError):
    """A message exceeded the CONGEST bit budget."""

    def __init__(self, vertex: int, round_index: int, bits: int, budget: int):
        super().__init__(
            f"vertex {vertex} sent {bits} bits in round {round_index}, budget {budget}")
        self.vertex = vertex
        self.round_index = round_index
        self.bits = bits
        self.budget = budget


class SimulationTimeout(RuntimeError):
    """Not all vertices produced an output within max_rounds."""

    def __init__(self, max_rounds: int, partial_outputs: Dict[int, Any]):
        missing = sum(1 for _ in partial_outputs)
        super().__init__(f"no full output after {max_rounds} rounds "
                         f"({missing} vertices done)")
        self.partial_outputs = partial_outputs


class Blob:
    """Opaque payload for LOCAL-model algorithms.

    Metered as 8 bits per byte of its pickled value; CONGEST runs will
    normally reject it by size.
    """

    __slots__ = ("value",)

    def __init__(self, value: Any):
        self.value = value


@dataclass(frozen=True)
class ModelMode:
    """LOCAL or CONGEST, with the CONGEST per-message bit budget.

    The budget is ``congest_factor * ceil(log2 n)`` unless ``budget_bits``
    overrides it (used by algorithms whose messages carry a fixed-point
    real next to an id).
    """

    kind: str  # "LOCAL" or "CONGEST"
    congest_factor: int = 4
    budget_bits: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("LOCAL", "CONGEST"):
            raise ValueError(f"unknown model kind {self.kind!r}")

    def budget_for(self, n: int) -> Optional[int]:
        if self.kind == "LOCAL":
            return None
        if self.budget_bits is not None:
            return self.budget_bits
        return self.congest_factor * max(1, math.ceil(math.log2(max(2, n))))


LOCAL = ModelMode("LOCAL")
CONGEST = ModelMode("CONGEST")


def message_bits(payload: Any, n: int) -> int:
    """Size of the canonical encoding of a payload.

    Integers are ceil(log2 n)-bit fields, booleans 1 bit, floats 64-bit
    fixed-point fields, tuples the sum of their parts, bytes 8 bits per
    byte, and Blob 8 bits per pickled byte.
    """
    id_bits = max(1, math.ceil(math.log2(max(2, n))))
    if isinstance(payload, bool):
        return 1
    if isinstance(payload, int):
        return id_bits
    if isinstance(payload, float):
        return 64
    if isinstance(payload, (tuple, list)):
        return sum(message_bits(x, n) for x in payload)
    if isinstance(payload, bytes):
        return 8 * len(payload)
    if isinstance(payload, Blob):
        return 8 * len(pickle.dumps(payload.value, protocol=4))
    raise TypeError(f"unregistered payload kind: {type(payload).__name__}")


@dataclass
class ExecutionMetrics:
    rounds_used: int = 0
    total_messages: int = 0
    max_message_bits: int = 0
    per_round_messages: List[int] = field(default_factory=list)

    def merge_sequential(self, other: "ExecutionMetrics") -> "ExecutionMetrics":
        """Metrics of this phase followed by another."""
        return ExecutionMetrics(
            rounds_used=self.rounds_used + other.rounds_used,
            total_messages=self.total_messages + other.total_messages,
            max_message_bits=max(self.max_message_bits, other.max_message_bits),
            per_round_messages=self.per_round_messages + other.per_round_messages,
        )


def vertex_rng(global_seed: int, vid: int) -> random.Random:
    """Private per-vertex RNG stream, stable across runs and platforms."""
    digest = hashlib.sha256(f"{global_seed}:{vid}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


class VertexContext:
    """What a vertex is allowed to see and do during one execution."""

    __slots__ = ("vid", "n", "max_degree", "neighbors", "out_neighbors",
                 "in_neighbors", "directed", "rng", "_outbox", "_output",
                 "_has_output")

    def __init__(self, vid: int, g: Graph, delta: int, rng: random.Random):
        self.vid = vid
        self.n = g.n
        self.max_degree = delta
        self.neighbors = g.neighbors(vid)
        self.out_neighbors = g.out_neighbors(vid)
        self.in_neighbors = g.in_neighbors(vid)
        self.directed = g.directed
        self.rng = rng
        self._outbox: List[Tuple[int, Any]] = []
        self._output: Any = None
        self._has_output = False

    def send(self, neighbor: int, payload: Any) -> None:
        if neighbor not in self.neighbors:
            raise ValueError(f"vertex {self.vid} cannot send to non-neighbor {neighbor}")
        self._outbox.append((neighbor, payload))

    def broadcast(self, payload: Any) -> None:
        for w in self.neighbors:
            self._outbox.append((w, payload))

    def output(self, value: Any) -> None:
        if self._has_output:
            raise RuntimeError(f"vertex {self.vid} already produced an output")
        self._output = value
        self._has_output = True


class VertexProgram:
    """Per-vertex state machine run by the simulator.

    One instance is created per vertex.  ``init`` runs before round 1;
    ``on_round`` runs once per round with the messages delivered this round
    (sent by neighbors in the previous round) as (sender, payload) pairs.
    A vertex stops participating once it calls ``ctx.output``; messages it
    sent in its final round are still delivered.
    """

    def init(self, ctx: VertexContext) -> None:  # pragma: no cover - default
        pass

    def on_round(self, ctx: VertexContext, inbox: List[Tuple[int, Any]]) -> None:
        raise NotImplementedError


def run(g: Graph, program_factory: Callable[[], VertexProgram],
        mode: ModelMode = LOCAL, seed: int = 0,
        max_rounds: Optional[int] = None,
        trace_file=None) -> Tuple[Dict[int, Any], ExecutionMetrics]:
    """Execute a vertex program on every vertex of g.

    Returns (outputs, metrics).  Raises CongestViolation if any message
    exceeds the mode's bit budget, SimulationTimeout if some vertex has no
    output after max_rounds (default 20 * n).
    """
    if max_rounds is None:
        max_rounds = max(1, 20 * g.n)
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")
    delta = max_degree(g)
    budget = mode.budget_for(g.n)

    contexts = [VertexContext(v, g, delta, vertex_rng(seed, v)) for v in range(g.n)]
    programs = [program_factory() for _ in range(g.n)]
    for v in range(g.n):
        programs[v].init(contexts[v])

    inboxes: List[List[Tuple[int, Any]]] = [[] for _ in range(g.n)]
    metrics = ExecutionMetrics()
    outputs: Dict[int, Any] = {}

    for rnd in range(1, max_rounds + 1):
        round_messages = 0
        round_max_bits = 0
        next_inboxes: List[List[Tuple[int, Any]]] = [[] for _ in range(g.n)]
        for v in range(g.n):
            ctx = contexts[v]
            if ctx._has_output:
                continue
            programs[v].on_round(ctx, inboxes[v])
            if ctx._outbox:
                for dest, payload in ctx._outbox:
                    bits = message_bits(payload, g.n)
                    if budget is not None and bits > budget:
                        raise CongestViolation(v, rnd, bits, budget)
                    round_messages += 1
                    if bits > round_max_bits:
                        round_max_bits = bits
                    next_inboxes[dest].append((v, payload))
                ctx._outbox = []
            if ctx._has_output:
                outputs[v] = ctx._output
        inboxes = next_inboxes
        metrics.rounds_used = rnd
        metrics.total_messages += round_messages
        metrics.per_round_messages.append(round_messages)
        if round_max_bits > metrics.max_message_bits:
            metrics.max_message_bits = round_max_bits
        if trace_file is not None:
            trace_file.write(json.dumps(
                {"round": rnd, "messages": round_messages,
                 "max_bits": round_max_bits}) + "\n")
        if len(outputs) == g.n:
            return outputs, metrics

    raise SimulationTimeout(max_rounds, outputs)
