from src.plants.delays import (
    delay_pole_factorization, delay_zero_factorization, retarded_factorization)
from src.plants.diffusion import diffusion_factorization
from src.plants.factorization import Factorization, FactorEvaluator
from src.plants.mobius import mobius_to_disc, mobius_to_halfplane
from src.plants.specs import PlantSpec, build_plant, parse_plant_spec
