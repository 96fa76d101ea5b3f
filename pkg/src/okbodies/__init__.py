"""Exact computations on blow-ups of the projective plane: Zariski
decompositions, Newton-Okounkov bodies and functions, Seshadri-type
thresholds, SHGH speciality classification, and exact radical-inequality
certificates."""

from .algnum import AlgNum, SqrtField, rational_sqrt
from .certificate import (DichotomyCertificate, DichotomyReport, ScanResult,
                          check_dichotomy, quadratic_form_report, scan_box,
                          window_contains, window_derivative_report,
                          window_function, window_function_at_lower_bound)
from .curves import NegCurveCatalog, generate_catalog, is_neg_class
from .errors import (CatalogInsufficient, CharacteristicTooSmall,
                     DimensionMismatch, GramNotNegativeDefinite,
                     IrrationalThreshold, MemoryCapExceeded, NonIntegralClass,
                     NotBig, NotNef, NotPseudoEffective, OkbodiesError,
                     WindowViolation)
from .lattice import (DivClass, SurfaceModel, canonical_class, intersect,
                      symmetrize)
from .okounkov import (Body, BodyProfile, Flag, OkounkovSlices, PhiBracket,
                       e_max, okounkov_body, okounkov_function, query_phi)
from .polygon import Polygon
from .seshadri import (RelationReport, ThresholdResult, epsilon_mu_relation,
                       mu, seshadri)
from .shgh import (LinearSystem, SHGHReport, classify, cremona_reduce,
                   oracle_dim, vdim)
from .zariski import (UNBOUNDED, ChamberWalk, ZariskiDecomposition, decompose,
                      is_nef, nef_threshold, pseff_threshold, walk_ray)

__version__ = "0.1.0"
