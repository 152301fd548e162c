from ..report import IdentityReport, Variant, evaluate_variants
from .factorial import check_mezo_dual, check_mezo_factorial, cycles
from .lemma import check_oh, check_oh1, oh_term, oh1_term, oh_term_mismatches
from .multisplit import check_multisplit_1, check_multisplit_2
from .registry import (
    ALL_IDENTITIES,
    REGISTRY,
    IdentityEntry,
    get_identity,
    identity_names,
    resolve_identities,
    run_sweep,
)
from .spivey import (
    check_bell_general,
    check_bell_ne,
    check_katriel,
    check_spivey_classical,
    check_spivey_general,
    check_thm_ne,
    check_thm_ne_s0,
    check_thm_sec,
)
from .sweep import SweepSpec
from .type2 import check_mezz, check_t1, check_t1_type2, check_thm46, check_thm46_type2
from ..stirling import check_hsu_shiue
