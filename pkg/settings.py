"""
Default settings values. Do not edit this file directly. Create a
local_settings.py file, copy/paste stuff from here and edit it there.
"""

import math
import os

PROJECT_NAME = "nugap"
VERSION = '0.3.0'

BASE_PATH = os.path.dirname(os.path.abspath(__file__))
SRC_DIR = os.path.join(BASE_PATH, 'src')

# Imaginary axis grid, log-uniform in |y| and mirrored to negative y.
GRID_YMIN = 1e-6
GRID_YMAX = 1e6
GRID_N = 4096
GRID_REFINE_ITERS = 40
# How many of the best grid samples get a refinement pass.
GRID_REFINE_CANDIDATES = 8

# Disc circles used for winding numbers. The last two radii decide
# stabilization of the index.
CIRCLE_RADII = [0.9, 0.99, 0.999, 0.9999]
CIRCLE_N = 8192
WINDING_PHASE_STEP_CAP = math.pi / 2
WINDING_MAX_BISECTION_DEPTH = 20

# Expression evaluation.
POLE_TOLERANCE = 1e-300
# Zero disables branch cut reporting; Arg s = pi settles the cut.
BRANCH_CUT_TOLERANCE = 0.0
OVERFLOW_THRESHOLD = 1e150

# min |f| on a contour must beat max(ABS, REL * max |f|).
INVERTIBILITY_ABS_TOL = 1e-9
INVERTIBILITY_REL_TOL = 1e-6

# Fraction of failed samples tolerated before a sweep is rejected.
FAILURE_FRACTION_LIMIT = 0.01

# Closed loop entries count as bounded below this sup.
LOOP_ENTRY_SUP_LIMIT = 1e8
LOOP_FAILURE_FRACTION = 0.001

# Stable diffusion evaluators switch to Taylor ratios inside this |sqrt(s)|.
DIFFUSION_SERIES_RADIUS = 0.25
DIFFUSION_SERIES_DEGREE = 12

# Diffusion parameters this close to 0 or 1 get a warning.
PARAMETER_WARNING_MARGIN = 1e-3

# Worker threads for grid sampling. 0 means one per CPU.
THREADS = int(os.environ.get('NU_GAP_THREADS', '0') or 0)
SAMPLE_CHUNK_SIZE = 2048

try:
    from local_settings import *
except ImportError:
    pass
