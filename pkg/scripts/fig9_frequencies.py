"""Visit frequencies of uniform random juggling, computed four ways.

    python scripts/fig9_frequencies.py --balls 3 --max-throw 5 --steps 1000000
"""

import argparse
import time

from jugglestate.random_walk import (
    empirical_frequencies,
    sample_walk,
    stationary_exact,
    stationary_numeric,
    total_variation,
    uniform_kernel,
    warrington_distribution,
)
from jugglestate.toss import build_state_graph, ground_state


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--balls", type=int, default=3)
    parser.add_argument("--max-throw", type=int, default=5)
    parser.add_argument("--steps", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=20130727)
    args = parser.parse_args()

    k, m = args.balls, args.max_throw
    graph = build_state_graph(k, m)
    kernel = uniform_kernel(graph)

    t0 = time.perf_counter()
    formula = warrington_distribution(k, m)
    exact = stationary_exact(kernel)
    numeric = stationary_numeric(kernel)
    t1 = time.perf_counter()
    trace = sample_walk(kernel, ground_state(k, m), args.steps, args.seed)
    empirical = empirical_frequencies(trace)
    t2 = time.perf_counter()

    print(f"k={k} m={m}: {len(graph.nodes)} states, {graph.edge_count} transitions")
    print(f"{'state':<14}{'formula':>10}{'1/freq':>9}{'exact==':>9}{'numeric':>14}{'sampled':>11}")
    for s in graph.nodes:
        f = formula[s]
        print(f"{'{' + s.id + '}':<14}{str(f):>10}{float(1 / f):>9.2f}{str(exact[s] == f):>9}"
              f"{numeric[s]:>14.10f}{float(empirical.weights.get(s, 0)):>11.6f}")
    print(f"solves: {t1 - t0:.2f}s; {args.steps} sampled steps (seed {args.seed}): {t2 - t1:.2f}s; "
          f"TV distance {total_variation(empirical, formula):.5f}")


if __name__ == "__main__":
    main()
