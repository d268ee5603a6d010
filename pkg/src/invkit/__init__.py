"""Root-preserving linear differential operators with polynomial coefficients.

Exact polynomial arithmetic, certified root location, Newton-polygon
asymptotics, invariance decisions for disks, and chaos-game sampling of
minimal invariant sets.
"""

from .cloud import PointCloud, read_csv, write_csv, write_svg
from .diffop import DiffOp, PsiTable, eigenpolynomial, phi_two_point, psi, psi_tilde, spectrum
from .errors import (DegenerateStep, InvkitError, NonConvergence, NonFinite, ParseError,
                     PreconditionError, SamplerError)
from .hutchinson import (ContinuousUniform, Integer, SamplerConfig, TwoPoint, chaos_game,
                         chaos_game_continuous, chaos_game_two_point, degree_for_delta)
from .invariance import (NotFoundBelow, classify_operator, disk_invariance_sampled,
                         fundamental_polygon, large_disk_decision, lower_bound_region)
from .newton import ne_border, positive_cone
from .parsing import parse_bipoly, parse_operator, parse_poly
from .poly import BiPoly, Poly
from .roots import find_roots, roots_in_closed_unit_disk
from .scalar import ExactComplex

__version__ = "0.1.0"
