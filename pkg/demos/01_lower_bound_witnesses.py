# %% [markdown]
# # Lower-bound colorings
#
# Each generator builds a red/blue coloring of a complete graph that avoids a
# red copy of one family and a blue copy of another. A certified coloring on
# N vertices proves R(F1, F2) >= N + 1.

# %%
from wheelramsey.constructions import GENERATORS, build_witness, certify
from wheelramsey.detectors import contains_family
from wheelramsey.formulas import cycle_wheel_bounds

report = certify(build_witness("cycle-wheel", 3, 2))
print(report.header())

# %% [markdown]
# The coloring is two red cliques on 2m-1 vertices with everything between
# them blue. Red has no 6-cycle since each clique has only five vertices.
# Blue is bipartite, so no wheel fits (every wheel has a triangle).

# %%
print("red C6 present:", contains_family(report.coloring.red, report.avoided_red).found)
print("blue W4 present:", contains_family(report.coloring.blue, report.avoided_blue).found)
print("formula lower bound:", cycle_wheel_bounds(3, 2).lower)

# %% [markdown]
# Every registered generator, with the parameters used below:

# %%
params = {"star-wheel": (4, 3), "mindeg-wheel": (20, 3), "cycle-wheel": (4, 3),
          "cycle-fan": (3, 4), "cycle-star": (3, 7), "matching-fan": (1, 3)}
for name in sorted(GENERATORS):
    r = certify(build_witness(name, *params[name]))
    print(f"{name:13s} N={r.coloring.n:3d} avoids red {r.avoided_red}, blue {r.avoided_blue}"
          f" -> R >= {r.claimed_bound} certified={r.certified}")

# %% [markdown]
# The text format round-trips, so a witness can be handed to `wheelramsey verify`.

# %%
text = certify(build_witness("matching-fan", 1, 3)).to_text()
print(text[:300])
