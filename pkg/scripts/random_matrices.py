"""Run check_order over random Coxeter matrices and summarise margins and ties."""

import argparse
import random

from bruhatwalk import INF, build_ball, build_system, check_order, uniform_steps

ap = argparse.ArgumentParser()
ap.add_argument("--rank", type=int, default=3)
ap.add_argument("--count", type=int, default=20)
ap.add_argument("--steps", type=int, default=8)
ap.add_argument("--seed", type=int, default=20261015)
args = ap.parse_args()

rng = random.Random(args.seed)
failures = 0
for _ in range(args.count):
    m = [[1] * args.rank for _ in range(args.rank)]
    for i in range(args.rank):
        for j in range(i + 1, args.rank):
            m[i][j] = m[j][i] = rng.choice([2, 3, 4, 5, 6, INF])
    S = build_system(m)
    ball = build_ball(S, args.steps)
    report = check_order(ball, uniform_steps(S), args.steps)
    failures += not report.passed
    off = [str(m[i][j]).replace("inf", "oo") for i in range(args.rank) for j in range(i + 1, args.rank)]
    print(f"m={','.join(off):<16} vertices={len(ball):>6} complete={ball.complete!s:<5} "
          f"passed={report.passed} ties={report.equality_count}")
print(f"{failures} failures")
