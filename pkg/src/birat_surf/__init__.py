"""Exact lattice, Cremona and classification computations for algebraic surfaces."""
from .classifier import Classification, Kappa, Subclass, SurfaceInvariants, classify
from .cremona import (HomaloidalNet, QuadraticKind, QuadraticMap, is_homaloidal,
                      quadratic_transform, reduce_to_exceptional)
from .errors import (BiratError, FactorizationError, InconsistentRecord, InsufficientData,
                     NotHomaloidal, SarkisovError)
from .factorization import decompose_quadratic, factor, simplicity
from .fibration import (BdFCase, BranchData, EllipticFibration, FibreMatrix, plurigenus_table,
                        riemann_hurwitz_genus, zariski_check)
from .lattice import DivisorClass, canonical_class, intersect, numerical_record
from .points import PointConfig, PointNode
from .sarkisov import run_sarkisov, sarkisov_degree

__version__ = "0.1.0"
