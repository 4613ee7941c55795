from .delays import Delay, Support, cofilter_witness, regression
from .paths import (PathSeq, apply_delay, concatenate, congruent, delay_normal_form, map_path,
                    reverse, standard_support, strong_normal_form, translate)
from .grids import (PathGrid, caterpillar_grid, caterpillar_indices, connection_grid, delay_related,
                    validate_grid)
from .homotopy import (DEFAULT_BUDGET, bounded_homotopy_reachable, immediate_homotopy,
                       telescopic_stage)
