"""mzvkit: exact stuffle algebra with an interpolation parameter, stuffle
regularization, evaluation-theorem verification, and a numeric backend for
multiple zeta and multiple t values."""

from .core_checks import CORE_IDENTITIES, check_core_identity
from .harmonic import (AlgElem, circle_act, circle_mul, contraction_expand,
                       harmonic_mul, harmonic_power, s_r, s_star, specialize_r)
from .identities import IDENTITIES, IDENTITY_IDS, check_identity
from .interp import interp_coeff, omega_half, surd_value, theta_half
from .numeric import (Bindings, NumResult, interp_num, mtv_num, mzv_num,
                      value_expr_num, zeta_const)
from .poly import CoeffPoly, parse_poly
from .regularize import (StuffleNormalForm, reconstruct, reg_eval,
                         reg_interp_eval, stuffle_normal_form)
from .report import Report
from .rewrites import (duality_21, rewrite_charlton, rewrite_lemma33,
                       rewrite_murakami, rewrite_zagier)
from .suites import SuiteConfig, run_suite
from .theorems import (COROLLARY_NAMES, THEOREM_NAMES, corollary_rhs,
                       lemma33_cross, thm_lhs, thm_rhs, verify_theorem)
from .values import Atom, ValueExpr, expand_value, fuse, parse_atom
from .words import (IndexSyntaxError, is_admissible, letter, parse_index,
                    word_of_index, z)

__version__ = "0.1.0"
