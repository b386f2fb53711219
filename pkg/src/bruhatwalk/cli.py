"""Command line entry point: ``bruhatwalk <subcommand> --system FILE ...``.

Exit codes: 0 ok, 1 a verification found a violation, 2 usage or config
error, 3 a resource limit was hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .cayley import build_ball, edges_csv, graph_dot, longest_element, vertices_csv
from .config import Limits, RunConfig, load_system
from .core import PERMUTATION, CoxeterError, ResourceLimitError
from .order import covering_edges, covers_csv, hasse_dot
from .verify import check_bijection, check_order
from .walk import distribution_csv, evolve, load_steps, uniform_steps
from .walls import verify_wall, wall_data

log = logging.getLogger("bruhatwalk")

COMMANDS = ("group", "ball", "dist", "check-order", "wall", "bijection", "hasse")


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bruhatwalk",
                                 description="Exact lazy random walks on Coxeter groups.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--system", required=True, metavar="PATH")
    ap.add_argument("--probs", metavar="PATH")
    ap.add_argument("--radius", type=int)
    ap.add_argument("--steps", type=int)
    ap.add_argument("--out", metavar="PATH")
    ap.add_argument("--format", choices=("csv", "json", "dot"))
    ap.add_argument("--word", help='element as generator names, e.g. "s1 s2"')
    ap.add_argument("--gen", help="generator name")
    ap.add_argument("--max-word-length", type=int, default=24)
    ap.add_argument("--max-vertices", type=int, default=10**6)
    ap.add_argument("--max-paths", type=int)
    return ap


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this command")
    if isinstance(value, int) and value < 0:
        raise UsageError(f"{flag} must be non-negative")
    return value


def _ball(system, cfg: RunConfig, radius: int, steps: int | None = None):
    ball = build_ball(system, radius, cfg.limits.max_vertices)
    if steps is not None and not ball.covers_steps(steps):
        raise UsageError(f"--steps {steps} exceeds --radius {radius} on an infinite group")
    return ball


def _edge(system, args):
    w = system.reduce(system.parse_word(args.word or ""))
    g = system.gen_index(_need(args.gen, "--gen"))
    ws = system.right_multiply(w, g)
    if ws.length < w.length:
        raise UsageError(f"{args.gen} is a descent of w; need l(w s) > l(w)")
    return w, g, ws


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    limits = Limits(args.max_word_length, max_vertices=args.max_vertices,
                    max_paths=args.max_paths)
    cfg = RunConfig(args.system, args.probs, args.radius, args.steps, args.out,
                    args.format, limits)
    try:
        return _dispatch(args, cfg)
    except ResourceLimitError as exc:
        print(f"bruhatwalk: resource limit: {exc}", file=sys.stderr)
        return 3
    except (UsageError, CoxeterError, ValueError, KeyError, OSError) as exc:
        print(f"bruhatwalk: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, cfg: RunConfig) -> int:
    system = load_system(cfg.system_path, cfg.limits)
    steps = load_steps(system, cfg.probs_path) if cfg.probs_path else uniform_steps(system)
    cmd = args.command
    log.info("%s on %r", cmd, system)

    if cmd == "group":
        out = {"name": system.label, "rank": system.rank, "generators": list(system.names),
               "matrix": system.matrix_json(), "engine": system.engine}
        if args.word is not None:
            w = system.reduce(system.parse_word(args.word))
            out["element"] = {"word": system.format_word(w), "length": w.length}
            if system.engine == PERMUTATION:
                out["element"]["perm"] = list(w.perm)
        if cfg.radius is not None:
            ball = _ball(system, cfg, _need(cfg.radius, "--radius"))
            top = longest_element(ball)
            out["ball"] = {"radius": ball.radius, "vertices": len(ball),
                           "complete": ball.complete, "shell_sizes": ball.shell_sizes(),
                           "longest": None if top is None
                           else system.format_word(ball.vertices[top])}
        _emit(cfg, _json(out))
        return 0

    if cmd == "ball":
        ball = _ball(system, cfg, _need(cfg.radius, "--radius"))
        fmt = cfg.format or "csv"
        if fmt == "csv":
            _emit(cfg, vertices_csv(ball))
            if cfg.out:
                root = cfg.out[:-4] if cfg.out.endswith(".csv") else cfg.out
                with open(root + ".edges.csv", "w", newline="") as fh:
                    fh.write(edges_csv(ball))
        elif fmt == "dot":
            _emit(cfg, graph_dot(ball))
        else:
            _emit(cfg, _json({
                "radius": ball.radius, "complete": ball.complete,
                "vertices": [{"index": i, "length": w.length, "word": system.format_word(w)}
                             for i, w in enumerate(ball.vertices)],
                "edges": [[u, v, system.names[g]] for u, v, g in ball.edges()],
            }))
        return 0

    if cmd == "dist":
        n = _need(cfg.steps, "--steps")
        ball = _ball(system, cfg, cfg.radius if cfg.radius is not None else n, n)
        _emit(cfg, distribution_csv(evolve(ball, steps, n)))
        return 0

    if cmd == "check-order":
        n = _need(cfg.steps, "--steps")
        ball = _ball(system, cfg, cfg.radius if cfg.radius is not None else n, n)
        report = check_order(ball, steps, n)
        _emit(cfg, _json(report.to_json()))
        return 0 if report.passed else 1

    if cmd == "wall":
        w, g, ws = _edge(system, args)
        radius = cfg.radius if cfg.radius is not None else ws.length
        if radius < ws.length:
            raise UsageError("--radius must reach l(w s)")
        ball = _ball(system, cfg, radius)
        wall = wall_data(ball, w, g)
        out = wall.to_json()
        out["verify"] = verify_wall(wall).to_json()
        _emit(cfg, _json(out))
        return 0 if out["verify"]["passed"] else 1

    if cmd == "bijection":
        n = _need(cfg.steps, "--steps")
        w, g, ws = _edge(system, args)
        radius = cfg.radius if cfg.radius is not None else max(n, ws.length)
        ball = _ball(system, cfg, radius, n)
        if not steps.uniform:
            raise UsageError("bijection counts paths; it needs uniform steps")
        report = check_bijection(ball, wall_data(ball, w, g), n,
                                 max_paths=cfg.limits.max_paths)
        _emit(cfg, _json(report.to_json()))
        return 0 if report.passed else 1

    if cmd == "hasse":
        order = covering_edges(_ball(system, cfg, _need(cfg.radius, "--radius")))
        fmt = cfg.format or "dot"
        if fmt == "json":
            raise UsageError("hasse supports --format dot or csv")
        _emit(cfg, hasse_dot(order) if fmt == "dot" else covers_csv(order))
        return 0

    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> None:
    level = os.environ.get("BRUHATWALK_LOG", "error").upper()
    logging.basicConfig(level=getattr(logging, level, logging.ERROR),
                        format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
