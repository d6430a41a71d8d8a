# %% [markdown]
# # Exhaustive search for small Ramsey numbers
#
# Good colorings are grown one vertex at a time and only one representative per
# isomorphism class is kept. The first N with no good coloring is R(F1, F2).

# %%
import time

from wheelramsey.graph import FamilySpec
from wheelramsey.search import ramsey_number, verify_witness

for red, blue in [("C4", "C4"), ("C6", "C4"), ("S2", "W6"), ("M2", "F2")]:
    t = time.perf_counter()
    out = ramsey_number(FamilySpec.parse(red), FamilySpec.parse(blue), 10)
    print(f"R({red},{blue}) = {out.value}  [{out.status.value}, {time.perf_counter() - t:.2f}s]")
    for line in out.transcript:
        print("   ", line)

# %% [markdown]
# The returned witness is a coloring on R-1 vertices. An independent check
# confirms that it avoids both families.

# %%
out = ramsey_number(FamilySpec.parse("C6"), FamilySpec.parse("C4"), 10)
print(verify_witness(out.witness, FamilySpec.parse("C6"), FamilySpec.parse("C4")).render())

# %% [markdown]
# A node budget turns an expensive search into a lower-bound report.

# %%
out = ramsey_number(FamilySpec.parse("C6"), FamilySpec.parse("C6"), 10, budget=2000)
print(out.status.value, out.value, out.transcript[-1])
