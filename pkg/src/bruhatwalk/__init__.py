"""Exact lazy random walks on Coxeter groups and the weak order."""

from .cayley import BOUNDARY, Ball, build_ball, longest_element, right_descents
from .core import (INF, PERMUTATION, WORD, CoxeterError, CoxeterSystem, Element,
                   ResourceLimitError, build_system, named_system)
from .order import WeakOrder, covering_edges, hasse_dot, leq_weak, leq_weak_reachable
from .verify import (ID, WalkPath, check_bijection, check_order, enumerate_paths,
                     fold_path)
from .walk import (Distribution, StepDistribution, evolve, path_counts, trajectory,
                   uniform_steps)
from .walls import Colour, WallData, colour_vertex, verify_wall, wall_data

__version__ = "0.1.0"
