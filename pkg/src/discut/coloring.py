"""Distributed (Delta+1)-coloring by randomized color trials.

Each uncolored vertex proposes a uniformly random color from its free
palette and keeps it if no uncolored neighbor proposed the same color in
the same trial.  A trial costs two communication rounds (propose, resolve);
the process finishes in O(log n) rounds with high probability.  Messages
are (flag, color) integer pairs, well within the CONGEST budget.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .graph import Graph, max_degree
from .simulator import (CONGEST, ExecutionMetrics, ModelMode, VertexContext,
                        VertexProgram, run)

Coloring = Dict[int, int]  # vertex -> color in {1..Delta+1}

_PROPOSE = 0
_FINAL = 1


class ColoringState:
    """Reusable trial-coloring state machine.

    Drives one vertex through the propose/resolve protocol.  ``step``
    consumes this round's coloring messages and queues outgoing ones via
    ctx; it returns the final color once decided, else None.  Host
    programs embed it and keep calling step until it resolves.
    """

    def __init__(self):
        self.color: Optional[int] = None
        self.taken: set = set()   # colors finalized by neighbors
        self.proposal: Optional[int] = None
        self.phase = _PROPOSE
        self.announced = False

    def step(self, ctx: VertexContext, inbox: List[Tuple[int, Tuple[int, int]]]
             ) -> Optional[int]:
        for _, (kind, color) in inbox:
            if kind == _FINAL:
                self.taken.add(color)
        if self.color is not None:
            # Already decided; the final announcement went out last round.
            return self.color
        if self.phase == _PROPOSE:
            palette = [c for c in range(1, ctx.max_degree + 2)
                       if c not in self.taken]
            self.proposal = palette[ctx.rng.randrange(len(palette))]
            ctx.broadcast((_PROPOSE, self.proposal))
            self.phase = _FINAL
            return None
        # Resolve phase: keep the proposal unless an uncolored neighbor
        # proposed the same color this trial (symmetric rule: both retry).
        conflict = any(kind == _PROPOSE and color == self.proposal
                       for _, (kind, color) in inbox)
        if not conflict and self.proposal not in self.taken:
            self.color = self.proposal
            ctx.broadcast((_FINAL, self.color))
            return self.color
        self.phase = _PROPOSE
        return None


class ColoringProgram(VertexProgram):
    """Standalone coloring run: outputs the vertex's color."""

    def __init__(self):
        self.state = ColoringState()
        self.settled_round = None

    def on_round(self, ctx: VertexContext, inbox):
        color = self.state.step(ctx, inbox)
        if color is not None:
            ctx.output(color)


def distributed_coloring(g: Graph, seed: int,
                         mode: ModelMode = CONGEST,
                         max_rounds: Optional[int] = None
                         ) -> Tuple[Coloring, ExecutionMetrics]:
    """Proper (Delta+1)-coloring as a CONGEST vertex program."""
    outputs, metrics = run(g, ColoringProgram, mode=mode, seed=seed,
                           max_rounds=max_rounds)
    return outputs, metrics


def verify_proper(g: Graph, coloring: Coloring) -> bool:
    """True iff no monochromatic edge and every color is in {1..Delta+1}."""
    delta = max_degree(g)
    if set(coloring) != set(range(g.n)):
        return False
    if any(not 1 <= c <= delta + 1 for c in coloring.values()):
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges())
