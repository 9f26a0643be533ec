"""SUSY partners of the harmonic oscillator and the Painleve IV solutions they generate."""

from .errors import (ConvergenceError, DomainError, NumericalError, PoleError,
                     SingularWronskianError, SusyPivError, UnsupportedCaseError)
from .grid import GridFunction, GridSpec
from .hierarchies import (HierarchyClass, classify, closed_form, erf_hierarchy,
                          g1_explicit, phi_aux, rational_hierarchy)
from .numerics import Jet, erf, gamma_ratio, kummer_1f1, log_gamma
from .painleve import (LadderCoefficients, Pain4Params, algebra_check, extremal_from_g,
                       ladder_apply, pain4_params, pain4_residual, pha_from_g)
from .seeds import SeedFamily, SeedParams, check_nodeless, seed_descend, seed_eval, seed_jet
from .susy import (extremal_state, pain4_solution, partner_potential, schrodinger_residual,
                   spectrum, wronskian_jet)

__version__ = "0.1.0"
