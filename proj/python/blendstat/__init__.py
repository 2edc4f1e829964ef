from ._core import (
    DomainError,
    InfeasibleError,
    StructuralError,
    blend,
    blended_null_probability,
    confidence_interval,
    kl_divergence,
    lfdr_lower_bound,
    maxent_alternative,
    maximin_bruteforce,
    sellke_bound,
    t_cdf,
    two_sided_p,
)

__all__ = [
    "DomainError",
    "InfeasibleError",
    "StructuralError",
    "blend",
    "blended_null_probability",
    "confidence_interval",
    "kl_divergence",
    "lfdr_lower_bound",
    "maxent_alternative",
    "maximin_bruteforce",
    "sellke_bound",
    "t_cdf",
    "two_sided_p",
]
