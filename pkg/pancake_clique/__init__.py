from __future__ import absolute_import

import pancake_clique.classes
from pancake_clique.classes import Circle, Graph, Instance, Pancake2, Point2, Tolerance, UnitDisk
from pancake_clique.cneeo import solve_pi2_geometric, solve_pi2_lemmas, solve_pi2_robust
from pancake_clique.exceptions import *

__version__ = "0.1.0"
