"""
Sampling can create false acceptances and false rejections
=========================================================

Cross-section samples may draw different people in each period; panel
samples draw the same people. Multinomial samples are random draws with
replacement from the population.
"""

from stochrat import (
    PopulationDistribution,
    SampleWeights,
    axiom_check,
    cross_section_probabilities,
    multinomial_draw,
    observed_probabilities,
    panel_probabilities,
)

# Everyone is rational, but period 1 only reaches theta(2,2) and period 2 only theta(1,1).
nu = PopulationDistribution({"1,1": "1/2", "2,2": "1/2"})
s1 = SampleWeights.for_population(nu, {"2,2": "1/2"})
s2 = SampleWeights.for_population(nu, {"1,1": "1/2"})
print("cross-section, all rational population:", axiom_check(cross_section_probabilities(s1, s2)))

# The same people in both periods can never be rejected when all are rational.
print("panel, same population:", axiom_check(panel_probabilities(s1)))

# 99.9% irrational, yet a panel sample of the rational 0.1% passes.
eps = "1/1000"
nu = PopulationDistribution({"1,2": eps, "2,1": "999/1000"})
s = SampleWeights.for_population(nu, {"1,2": eps})
print("panel, 99.9% irrational population:", axiom_check(panel_probabilities(s)))

nu = PopulationDistribution({"1,2": "9/10", "2,1": "1/10"})
c1, c2 = multinomial_draw(nu, 1000, seed=42)
print("multinomial n=1000 counts:", {str(t): v for t, v in c1.as_dict().items() if v})
print("multinomial sample passes:", axiom_check(observed_probabilities(c1, c2)))
