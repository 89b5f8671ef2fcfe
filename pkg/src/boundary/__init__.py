from src.boundary.grids import (
    AxisGrid, CircleGrid, axis_grid_from_config, make_axis_grid,
    make_circle_grid)
from src.boundary.sampling import sample
from src.boundary.search import (
    SupEstimate, adaptive_inf, adaptive_sup, inf_with_config, sup_with_config)
