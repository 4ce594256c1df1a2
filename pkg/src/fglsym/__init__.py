"""Exact computer algebra for formal-group-law symmetric functions."""

from .coeffring import (ADDITIVE, CoeffPoly, MULTIPLICATIVE, Specialization,
                        UNIVERSAL, a_gen, exact_div_int)
from .series import (DivisibilityError, InversionError, ShapeError,
                     SubstitutionError, TruncSeries, VarSet)
from .fgl import FGLContext, eliminate_even_phat, phat_relation_coefficient
from .combinat import (GrassmannianPerm, Partition, Root, StrictPartition,
                       as_partition, as_strict, euler, euler_product,
                       inversion_set, lambda_to_w_A, lambda_to_w_C,
                       partitions_in_box, reduced_word, simple_action,
                       strict_partitions_up_to, w_to_lambda_A, w_to_lambda_C)
from .sympoly import (Expansion, check_classical_q_relation, classical_P,
                      classical_Q, classical_q, complete, elementary,
                      expand_in_classical_Q, expand_in_m, monomial, schur_s)
from .uschur import (P_L, P_L_plus, Q_L, SupersymReport, USchurRequest,
                     check_factorization, check_supersymmetric, eval_at,
                     s_L, s_L_double, vanishing_diagonal_QL,
                     vanishing_diagonal_sL)
from .duals import (CauchyKernel, MembershipError, cauchy_kernel,
                    check_cauchy, check_phat_relation,
                    check_printed_qhat_squares, check_qhat_relation,
                    check_qtilde_relation, coproduct_QL, coproduct_phat,
                    coproduct_qhat, dual_basis, dual_phat, dual_qhat, phat_family, phat_k,
                    product_in_basis, qhat_family, qhat_k, qtilde_family,
                    qtilde_k)
from .localization import (GKMReport, LocalizedFamily, WindowError,
                           default_window, expand_greedy, gkm_check,
                           localize_family, phi, recombine, reflect,
                           roots_for_window, window_A, window_CD)
from .verify import SUITES, VerifyResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "ADDITIVE", "CoeffPoly", "MULTIPLICATIVE", "Specialization", "UNIVERSAL",
    "a_gen", "exact_div_int",
    "DivisibilityError", "InversionError", "ShapeError", "SubstitutionError",
    "TruncSeries", "VarSet",
    "FGLContext", "eliminate_even_phat", "phat_relation_coefficient",
    "GrassmannianPerm", "Partition", "Root", "StrictPartition",
    "as_partition", "as_strict", "euler", "euler_product", "inversion_set",
    "lambda_to_w_A", "lambda_to_w_C", "partitions_in_box", "reduced_word",
    "simple_action", "strict_partitions_up_to", "w_to_lambda_A",
    "w_to_lambda_C",
    "Expansion", "check_classical_q_relation", "classical_P", "classical_Q",
    "classical_q", "complete", "elementary", "expand_in_classical_Q",
    "expand_in_m", "monomial", "schur_s",
    "P_L", "P_L_plus", "Q_L", "SupersymReport", "USchurRequest",
    "check_factorization", "check_supersymmetric", "eval_at", "s_L",
    "s_L_double", "vanishing_diagonal_QL", "vanishing_diagonal_sL",
    "CauchyKernel", "MembershipError", "cauchy_kernel", "check_cauchy",
    "check_phat_relation", "check_printed_qhat_squares",
    "check_qhat_relation", "check_qtilde_relation", "coproduct_QL",
    "coproduct_phat", "coproduct_qhat", "dual_basis", "dual_phat", "dual_qhat", "phat_family",
    "phat_k", "product_in_basis", "qhat_family", "qhat_k", "qtilde_family",
    "qtilde_k",
    "GKMReport", "LocalizedFamily", "WindowError", "default_window",
    "expand_greedy", "gkm_check", "localize_family", "phi", "recombine",
    "reflect", "roots_for_window", "window_A", "window_CD",
    "SUITES", "VerifyResult", "run_suite",
]
