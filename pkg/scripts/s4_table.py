"""Print the lazy adjacent-transposition walk on S4: extremes and the (1 2), (2 3) vs (1 3) gap."""

import argparse

from bruhatwalk import build_ball, longest_element, named_system, trajectory, uniform_steps

ap = argparse.ArgumentParser()
ap.add_argument("--steps", type=int, default=12)
args = ap.parse_args()

S4 = named_system("A3", engine="permutation")
ball = build_ball(S4, 6)
top = longest_element(ball)
s, t, sts = ball.find("s1"), ball.find("s2"), ball.find("s1 s2 s1")
print(f"{'n':>3} {'P(e)':>14} {'P(w0)':>14} {'P(s)-P(sts)':>14} {'P(t)-P(sts)':>14}  argmin")
for d in trajectory(ball, uniform_steps(S4), args.steps):
    low = [ball.vertices[v].perm for v in d.least_likely()]
    print(f"{d.step:>3} {str(d[0]):>14} {str(d[top]):>14} {str(d[s] - d[sts]):>14} "
          f"{str(d[t] - d[sts]):>14}  {low if len(low) < 3 else f'{len(low)} states'}")
