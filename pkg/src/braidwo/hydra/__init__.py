from .dynamics import (
    HydraState,
    HydraTrace,
    T,
    append_sigma1,
    critical_position,
    game_step,
    hardy_length,
    hydra_length,
    hydra_length_fast,
    ord3,
    permitted_positions,
    run,
    step,
    u_function,
    u_function_hardy,
)
from .game import Battle, critical_strategy, leading_strategy, random_strategy
from .mirror import MirrorRecord, MirrorReport, case_tag, mirror_check, mirror_offset
from .routes import route_report
