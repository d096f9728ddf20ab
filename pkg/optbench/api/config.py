from dataclasses import dataclass


@dataclass(frozen=True)
class AuditConfig:
    # local refinement of each claimed optimum
    refine_iterations: int = 200
    simplex_scale: float = 1e-2  # fraction of the box width per coordinate
    stationarity_threshold: float = 1e-3
    # tolerance tiers for claimed values
    exact_tolerance: float = 1e-8
    rounded_tolerance: float = 5e-4
    approx_tolerance: float = 5e-2
    discrepancy_factor: float = 10.0


@dataclass(frozen=True)
class ProbeConfig:
    samples: int = 64
    perturbation: float = 1e-3  # fraction of the box width per coordinate
    tolerance: float = 1e-8
    min_samples: int = 16


@dataclass(frozen=True)
class NelderMeadParams:
    alpha: float = 1.0  # reflection
    gamma: float = 2.0  # expansion
    rho: float = 0.5  # contraction
    sigma: float = 0.5  # shrink
    initial_scale: float = 0.05  # fraction of the box width
    min_diameter: float = 1e-12


@dataclass(frozen=True)
class DEParams:
    f: float = 0.5
    cr: float = 0.9
    population_factor: int = 10
