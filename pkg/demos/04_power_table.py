"""
How often does a multinomial sample pass?
=========================================

For populations that never choose the crossing point, a sample passes
exactly when budget 1 has at least as many region-1 choices as budget 2.
We compute that probability three ways for two benchmark populations.
"""

from stochrat import (
    TABLE2_POPULATIONS,
    power_brute_force,
    power_closed_form,
    power_monte_carlo,
    reproduce_table2,
)

for row in reproduce_table2():
    print(f"{row.population:>12}  n={row.n:<5} P(pass)={row.rounded}")

uniform = TABLE2_POPULATIONS["uniform"]
print()
print("n=4 closed form :", power_closed_form(uniform, 4).acceptance_probability)
print("n=4 enumeration :", power_brute_force(uniform, 4).exact_value)
mc = power_monte_carlo(uniform, 4, reps=200_000, seed=1)
print(f"n=4 Monte Carlo : {mc.acceptance_probability:.4f} +/- {mc.standard_error:.4f}")

# With a quarter of the population irrational, detection stays near a coin flip.
r = power_closed_form(uniform, 1000)
print(f"uniform, n=1000: power to detect irrational types = {r.power:.4f}")
