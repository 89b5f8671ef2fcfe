from src.numetric.chordal import (
    KappaResult, chordal_density, kappa_distance, kappa_pointwise,
    specialized_diffusion_density)
from src.numetric.metric import NuReport, nu_metric
from src.numetric.positivity import (
    PositivityReport, asymptotic_margin, coprimeness_margin, re_positivity_check)
