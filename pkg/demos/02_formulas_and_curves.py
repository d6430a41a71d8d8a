# %% [markdown]
# # Closed-form values and regime curves
#
# Every evaluator returns a `BoundValue`: a lower and upper end, an exactness
# tag and a regime label. Values are exact rationals throughout.

# %%
from fractions import Fraction

from wheelramsey.formulas import (
    continuity_defects,
    cycle_star_ratio,
    cycle_star_value,
    cycle_wheel_bounds,
    cycle_wheel_ratio,
    figure_csv,
    star_wheel_value,
)

for m, n in [(2, 3), (4, 3), (5, 3), (20, 5)]:
    print(f"star-wheel m={m} n={n}:", star_wheel_value(m, n).render())

# %% [markdown]
# Cycle versus wheel moves through three regimes as m/n shrinks. Below n/2 the
# band index q = ceil(n/m) picks one of two linear pieces.

# %%
n = 36
for m in (40, 30, 18, 16, 13, 9):
    b = cycle_wheel_bounds(m, n)
    print(f"m={m:2d}: {b.regime.case:18s} q={b.regime.q} {b.render()}")

# %% [markdown]
# The leading coefficient divided by n, as a function of x = m/n, is continuous
# across every band boundary. The check compares each boundary value with an
# exact linear extrapolation from the left.

# %%
print("wheel curve defects:", continuity_defects(cycle_wheel_ratio))
print("star curve defects:", continuity_defects(cycle_star_ratio))
for x in (Fraction(1, 5), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1)):
    print(f"x={x}: wheel {cycle_wheel_ratio(x)}, star {cycle_star_ratio(x)}")

# %% [markdown]
# Below m = n/2 the wheel lower bound comes from the clique coloring that avoids
# a star, so the two curves share their lower bound there.

# %%
print(cycle_star_value(4, 8).render(), "|", cycle_wheel_bounds(4, 8).render())
print(figure_csv(2, 60, 6))
