"""Lower the idle probability below the generators' and find the first order violation."""

import argparse
from fractions import Fraction

from bruhatwalk import StepDistribution, build_ball, check_order, named_system

ap = argparse.ArgumentParser()
ap.add_argument("--system", default="A3")
ap.add_argument("--steps", type=int, default=10)
args = ap.parse_args()

S = named_system(args.system)
ball = build_ball(S, args.steps)
k = S.rank
for num in range(0, 21):
    p_id = Fraction(num, 20 * (k + 1)) * 2
    if p_id > 1:
        break
    p = (1 - p_id) / k
    report = check_order(ball, StepDistribution(p_id, (p,) * k), args.steps)
    first = min((v.first_violation for v in report.violations), default=None)
    print(f"p_id={str(p_id):>6} p_s={str(p):>8} ok={report.steps.theorem2_ok!s:<5} "
          f"passed={report.passed!s:<5} first_violation={first}")
