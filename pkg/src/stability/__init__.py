from src.stability.loop import (
    LoopReport, closed_loop_check, closed_loop_entries, loop_denominator)
from src.stability.probe import ProbeReport, ProbeResult, robustness_probe
