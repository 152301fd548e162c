from .board import (
    Board,
    board_from_lengths,
    board_from_word,
    board_jcd,
    board_jn,
    board_jprime,
    board_jump,
    column_totals,
    parse_board_spec,
    word_column_lengths,
)
from .placement import (
    RookPlacement,
    Rule,
    WeightParams,
    cell_preweights_after,
    count_placements,
    enumerate_placements,
    format_placement,
    goldman_haglund_weight,
    placement_weight,
    rook_sum,
)
