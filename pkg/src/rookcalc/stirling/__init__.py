from .bell import BellPolynomial, bell_cd, bell_number, bell_poly, bell_type2
from .hsu_shiue import NEGATED_VARIANT, check_hsu_shiue, generalized_falling
from .oracles import (
    cycle_count,
    oracle_bell,
    oracle_cycles,
    oracle_partitions,
    restricted_growth_strings,
)
from .tables import (
    RecurrenceStep,
    StirlingTable,
    TableKind,
    cached_table_count,
    clear_tables,
    get_table,
    mssha,
    remmel_wachs_step,
    replay_remmel_wachs,
    stirling_cd,
    stirling_s,
    stirling_table,
    type2,
)
