"""Random walks on state graphs.

Three routes to the long-run visit frequencies of a uniform random juggler:
the closed-form product formula over Stirling numbers, an exact rational
linear solve, and floating power iteration. Each is independent of the
others so they can be checked against one another.
"""

from __future__ import annotations

import json
import math
import random
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate

import networkx as nx
import numpy as np

from .errors import (
    BadParameters,
    BadProbability,
    BadStart,
    BadStateString,
    EmptyTrace,
    NoConvergence,
    NotIrreducible,
)
from .graph import StateGraph
from .toss import TossState, all_states, build_state_graph

RNG_NAME = "MT19937 (Python random.Random, integer seed)"


@dataclass(eq=False)
class TransitionKernel:
    graph: StateGraph
    probabilities: dict

    def __post_init__(self):
        for node in self.graph.nodes:
            probs = self.probabilities.get(node)
            if probs is None:
                raise BadProbability(f"no probabilities for state {node.id!r}")
            labels = self.graph.successors(node)
            for lab, p in probs.items():
                if lab not in labels:
                    raise BadProbability(f"label {lab!r} is not admissible at {node.id!r}")
                if p < 0:
                    raise BadProbability(f"negative probability at {node.id!r}")
            total = sum(probs.values())
            exact = all(isinstance(p, (int, Fraction)) for p in probs.values())
            if (total != 1) if exact else abs(total - 1) > 1e-12:
                raise BadProbability(f"probabilities at {node.id!r} sum to {total}")

    def support_edges(self):
        for u in self.graph.nodes:
            for lab, p in self.probabilities[u].items():
                if p > 0:
                    yield u, lab, self.graph.successors(u)[lab]

    def transition_rows(self) -> dict:
        """``node -> {target: probability}``, merging parallel labels."""
        rows = {u: {} for u in self.graph.nodes}
        for u, lab, v in self.support_edges():
            rows[u][v] = rows[u].get(v, 0) + self.probabilities[u][lab]
        return rows


@dataclass
class StateDistribution:
    weights: dict
    mode: str = "rational"

    def __getitem__(self, node):
        return self.weights[node]

    def total(self):
        return sum(self.weights.values())

    def as_floats(self) -> dict:
        return {k: float(v) for k, v in self.weights.items()}


@dataclass
class WalkTrace:
    seed: int
    start: object
    labels: list = field(default_factory=list)
    nodes: list = field(default_factory=list)
    rng: str = RNG_NAME

    @property
    def steps(self) -> list[tuple]:
        return list(zip(self.labels, self.nodes))

    def __len__(self):
        return len(self.nodes)


def uniform_kernel(graph: StateGraph) -> TransitionKernel:
    probs = {}
    for node in graph.nodes:
        out = graph.successors(node)
        probs[node] = {lab: Fraction(1, len(out)) for lab in out}
    return TransitionKernel(graph, probs)


def closed_classes(kernel: TransitionKernel) -> list[list]:
    g = nx.DiGraph()
    g.add_nodes_from(kernel.graph.nodes)
    g.add_edges_from((u, v) for u, _, v in kernel.support_edges())
    cond = nx.condensation(g)
    members = cond.graph["mapping"]
    classes = {}
    for node, c in members.items():
        classes.setdefault(c, []).append(node)
    closed = [sorted(classes[c]) for c in cond.nodes if cond.out_degree(c) == 0]
    return sorted(closed)


def _require_single_class(kernel):
    closed = closed_classes(kernel)
    if len(closed) != 1:
        raise NotIrreducible(closed)
    return closed[0]


def stationary_exact(kernel: TransitionKernel) -> StateDistribution:
    """Solve ``pi P = pi``, ``sum(pi) = 1`` in exact rationals.

    The balance equations are rank-deficient by one; the last one is swapped
    for the normalization and the system is reduced by Gauss-Jordan
    elimination over ``Fraction``, skipping structural zeros.
    """
    _require_single_class(kernel)
    nodes = kernel.graph.nodes
    n = len(nodes)
    index = {u: i for i, u in enumerate(nodes)}
    rows = kernel.transition_rows()
    # equation j: sum_i pi_i P[i][j] - pi_j = 0 ; stored sparse as {col: coeff}
    eqs = [dict() for _ in range(n)]
    for u, out in rows.items():
        i = index[u]
        for v, p in out.items():
            j = index[v]
            eqs[j][i] = eqs[j].get(i, Fraction(0)) + Fraction(p)
    for j in range(n):
        eqs[j][j] = eqs[j].get(j, Fraction(0)) - 1
    eqs[-1] = {i: Fraction(1) for i in range(n)}
    rhs = [Fraction(0)] * n
    rhs[-1] = Fraction(1)

    for col in range(n):
        pivot = next((r for r in range(col, n) if eqs[r].get(col, 0) != 0), None)
        if pivot is None:
            raise NotIrreducible([list(nodes)])
        eqs[col], eqs[pivot] = eqs[pivot], eqs[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        prow = eqs[col]
        inv = Fraction(1) / prow[col]
        for c in prow:
            prow[c] *= inv
        rhs[col] *= inv
        for r in range(n):
            if r == col:
                continue
            factor = eqs[r].get(col, 0)
            if factor == 0:
                continue
            row = eqs[r]
            for c, v in prow.items():
                nv = row.get(c, 0) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            rhs[r] -= factor * rhs[col]
    return StateDistribution({u: rhs[index[u]] for u in nodes}, "rational")


def _chain_period(nodes, adjacency) -> int:
    start = nodes[0]
    level = {start: 0}
    queue = [start]
    for u in queue:
        for v in adjacency[u]:
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    d = 0
    for u in level:
        for v in adjacency[u]:
            if v in level:
                d = math.gcd(d, level[u] + 1 - level[v])
    return d or 1


def stationary_numeric(kernel: TransitionKernel, tolerance: float = 1e-12,
                       max_iterations: int = 100_000) -> StateDistribution:
    """Power iteration from the uniform vector.

    Periodic chains never converge pointwise, so the convergence test runs on
    the running mean of the last ``period`` iterates.
    """
    if tolerance <= 0:
        raise BadParameters("tolerance must be positive")
    closed = _require_single_class(kernel)
    nodes = kernel.graph.nodes
    n = len(nodes)
    index = {u: i for i, u in enumerate(nodes)}
    P = np.zeros((n, n))
    rows = kernel.transition_rows()
    for u, out in rows.items():
        for v, p in out.items():
            P[index[u], index[v]] += float(p)
    period = _chain_period(closed, rows)

    x = np.full(n, 1.0 / n)
    window = [x]
    prev_avg = None
    for _ in range(max_iterations):
        x = x @ P
        window.append(x)
        if len(window) > period:
            window.pop(0)
        avg = sum(window) / len(window)
        if prev_avg is not None and len(window) == period:
            if np.abs(avg - prev_avg).sum() < tolerance:
                avg = avg / avg.sum()
                return StateDistribution({u: float(avg[index[u]]) for u in nodes}, "float")
        if len(window) == period:
            prev_avg = avg
    raise NoConvergence(max_iterations)


@lru_cache(maxsize=None)
def stirling2(n: int, j: int) -> int:
    """Stirling number of the second kind via ``S(n,j) = j S(n-1,j) + S(n-1,j-1)``."""
    if not 0 <= j <= n:
        raise BadParameters(f"need 0 <= j <= n, got n={n}, j={j}")
    row = [1]  # S(0, 0)
    for i in range(1, n + 1):
        new = [0] * (i + 1)
        for jj in range(1, i + 1):
            new[jj] = (jj * row[jj] if jj < i else 0) + row[jj - 1]
        row = new
    return row[j]


def warrington_product(beats, m: int) -> int:
    """``prod over x in B of |{x, ..., m} minus B|``; note the range includes m."""
    occupied = set(beats)
    prod = 1
    for x in occupied:
        prod *= (m - x + 1) - sum(1 for b in occupied if b >= x)
    return prod


def warrington_frequency(state: TossState, k: int, m: int) -> Fraction:
    if state.k != k or state.capacity != m:
        raise BadParameters(f"state {state} does not belong to (k={k}, m={m})")
    return Fraction(warrington_product(state.occupied, m), stirling2(m + 1, m + 1 - k))


def warrington_distribution(k: int, m: int) -> StateDistribution:
    if not 1 <= k <= m:
        raise BadParameters(f"need 1 <= k <= m, got k={k}, m={m}")
    return StateDistribution(
        {s: warrington_frequency(s, k, m) for s in sorted(all_states(k, m))}, "rational"
    )


def sample_walk(kernel: TransitionKernel, start, steps: int, seed: int) -> WalkTrace:
    """Seeded walk; each step inverts the cumulative distribution over labels in ascending order."""
    if start not in kernel.graph:
        raise BadStart(f"start state {getattr(start, 'id', start)!r} is not in the graph")
    if steps < 0:
        raise BadParameters("steps must be >= 0")
    tables = {}
    for node in kernel.graph.nodes:
        items = sorted((lab, p) for lab, p in kernel.probabilities[node].items() if p > 0)
        labels = [lab for lab, _ in items]
        cum = list(accumulate(float(p) for _, p in items))
        targets = [kernel.graph.successors(node)[lab] for lab in labels]
        tables[node] = (cum[:-1], labels, targets)
    rng = random.Random(seed)
    draw = rng.random
    trace = WalkTrace(seed, start)
    labels_out, nodes_out = trace.labels, trace.nodes
    node = start
    for _ in range(steps):
        cut, labels, targets = tables[node]
        i = bisect_right(cut, draw()) if cut else 0
        labels_out.append(labels[i])
        node = targets[i]
        nodes_out.append(node)
    return trace


def empirical_frequencies(trace: WalkTrace) -> StateDistribution:
    if not trace.nodes:
        raise EmptyTrace("cannot take frequencies of an empty trace")
    counts = Counter(trace.nodes)
    total = len(trace.nodes)
    return StateDistribution({u: Fraction(c, total) for u, c in counts.items()}, "rational")


def total_variation(p: StateDistribution, q: StateDistribution) -> float:
    keys = set(p.weights) | set(q.weights)
    return 0.5 * sum(abs(float(p.weights.get(u, 0)) - float(q.weights.get(u, 0))) for u in keys)


def parse_probability(value) -> Fraction:
    try:
        if isinstance(value, bool):
            raise ValueError
        if isinstance(value, float):
            return Fraction(str(value))
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise BadProbability(f"cannot read probability {value!r}") from None


def kernel_from_mapping(graph: StateGraph, mapping: dict) -> TransitionKernel:
    """Build a kernel from ``{state id: {label: probability}}``.

    States left out fall back to uniform. Labels are integers for toss graphs
    and ``"R"``/``"B"`` for the poi graph; probabilities may be decimal
    strings or ``"p/q"``.
    """
    uniform = uniform_kernel(graph).probabilities
    ids = {node.id: node for node in graph.nodes}
    probs = dict(uniform)
    for key, table in mapping.items():
        if key == "schema_version":
            continue
        if key not in ids:
            raise BadStateString(f"unknown state {key!r}")
        if not isinstance(table, dict):
            raise BadProbability(f"entry for {key!r} must be a label -> probability map")
        node = ids[key]
        row = {}
        for lab, p in table.items():
            if graph.kind == "toss":
                try:
                    lab = int(lab)
                except ValueError:
                    raise BadProbability(f"bad throw label {lab!r} at {key!r}") from None
            row[lab] = parse_probability(p)
        probs[node] = row
    return TransitionKernel(graph, probs)


def load_kernel(path, graph: StateGraph) -> TransitionKernel:
    with open(path) as fh:
        try:
            mapping = json.load(fh)
        except json.JSONDecodeError as exc:
            raise BadProbability(f"kernel file is not valid JSON: {exc}") from None
    if not isinstance(mapping, dict):
        raise BadProbability("kernel file must hold a JSON object")
    return kernel_from_mapping(graph, mapping)


def uniform_toss_kernel(k: int, m: int) -> TransitionKernel:
    return uniform_kernel(build_state_graph(k, m))
