from .common import (
    TABLE_A_PATTERNS,
    TABLE_B_PATTERNS,
    ConstructionReport,
    five_valued_table,
    predict_from_conditions,
)
from .gold import (
    gold,
    gold_double,
    gold_lambda_valid,
    gold_triple,
    gold_valid_lambdas,
    gold_walsh_selfdual,
    lemma2_is_permutation,
    thm3_conditions,
    thm3_construct_and_predict,
    thm4_construct_and_predict,
    thm4_predict,
)
from .kasami import (
    kasami,
    kasami_double,
    kasami_dual,
    kasami_triple,
    kasami_walsh_closed_form,
    semibent_pair_closed_form,
    semibent_pair_count,
    thm1_conditions,
    thm1_construct_and_predict,
    thm1_predict,
    thm2_construct_and_predict,
    thm2_semibent,
)
from .lemma1 import lemma1_combine, lemma1_predicted_spectrum, lemma1_predicted_walsh
from .mm import (
    Permutation,
    frobenius_permutation,
    mm_construct,
    mm_dual_eq26,
    mm_dual_function,
    permutation_from_table,
    power_permutation,
    thm6_conditions,
    thm6_construct,
    thm6_predict,
    thm7_construct,
    thm7_predict,
    thm8_construct,
    thm8_d,
)
from .niho import (
    NihoParams,
    niho_bent,
    niho_dual_eq23,
    niho_dual_function,
    niho_exponents,
    niho_params,
    niho_sum_form,
    niho_triple,
    thm5_construct,
)
