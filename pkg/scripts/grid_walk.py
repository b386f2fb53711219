"""Lazy walk on Z^2 as D_inf x D_inf: print P^n on a window of lattice points."""

import argparse

from bruhatwalk import build_ball, named_system, trajectory, uniform_steps


def position(word):
    x = y = 0
    for g in word:
        if g < 2:
            x += 1 if (x % 2 == 0) == (g == 0) else -1
        else:
            y += 1 if (y % 2 == 0) == (g == 2) else -1
    return x, y


ap = argparse.ArgumentParser()
ap.add_argument("--steps", type=int, default=8)
args = ap.parse_args()

G = named_system("GRID")
ball = build_ball(G, args.steps)
d = trajectory(ball, uniform_steps(G), args.steps)[-1]
scale = 5 ** args.steps
grid = {position(v.word): d.counts[i] for i, v in enumerate(ball.vertices)}
print(f"P^{args.steps} x {scale}")
for y in range(3, -4, -1):
    print(" ".join(f"{grid.get((x, y), 0):>8}" for x in range(-3, 4)))
print("(1,3) >= (2,3):", grid[(1, 3)] >= grid[(2, 3)], " (1,3) vs (2,2):", grid[(1, 3)], grid[(2, 2)])
