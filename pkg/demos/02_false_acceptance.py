"""
A population with irrational members that still looks rational
==============================================================

90% of people choose theta(1,2) and 10% choose theta(2,1), which violates
SARP. Aggregated choices are nonetheless a mixture of rational types.
"""

from stochrat import (
    PopulationDistribution,
    axiom_check,
    explain_population,
    induced_probabilities,
    solve_mixture,
)

nu = PopulationDistribution({"1,2": "9/10", "2,1": "1/10"})
pi = induced_probabilities(nu)
print("region probabilities:", {k: str(v) for k, v in pi.as_dict().items()})
print("passes the closed-form test:", axiom_check(pi))

mu = solve_mixture(pi)
print("a rational mixture that reproduces them:")
for theta, w in mu.as_dict().items():
    if w:
        print(f"  {theta}: {w}")

verdict = explain_population(nu)
print("population verdict:", verdict.rationalizable, "-", verdict.explanation())

# Half the population can be irrational and the data still pass.
nu = PopulationDistribution({"1,2": "1/2", "2,1": "1/4", "2,3": "1/4"})
print("half irrational, accepted:", explain_population(nu).rationalizable)
