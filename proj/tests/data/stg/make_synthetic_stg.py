#!/usr/bin/env python3
"""Writes the synthetic 50-task STG fixtures used by the benchmark tests.

The layout follows the Standard Task Graph Set: a header with the number of
real tasks, then n + 2 task lines (zero-cost entry node 0 and exit node n+1),
then a '#' comment block. Costs are uniform in [1, 10]; every earlier task is
a predecessor with probability `density`.

    python3 make_synthetic_stg.py    # rewrites synth50_a.stg and synth50_b.stg
"""
import random
from pathlib import Path


def make(n, density, seed):
    rng = random.Random(seed)
    preds = {0: []}
    costs = {0: 0}
    has_succ = set()
    for t in range(1, n + 1):
        costs[t] = rng.randint(1, 10)
        chosen = [j for j in range(1, t) if rng.random() < density]
        if not chosen:
            chosen = [0]
        preds[t] = chosen
        has_succ.update(chosen)
    exit_id = n + 1
    costs[exit_id] = 0
    preds[exit_id] = [t for t in range(1, n + 1) if t not in has_succ]
    lines = [f"{n:6d}"]
    for t in range(n + 2):
        row = f"{t:6d}{costs[t]:6d}{len(preds[t]):6d}" + "".join(f"{p:6d}" for p in preds[t])
        lines.append(row)
    lines += [
        "#",
        f"# synthetic STG-layout graph: {n} tasks, density {density}, seed {seed}",
        "# entry node 0 and exit node %d carry zero cost" % exit_id,
    ]
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    here = Path(__file__).parent
    (here / "synth50_a.stg").write_text(make(50, 0.08, 10))
    (here / "synth50_b.stg").write_text(make(50, 0.08, 16))
