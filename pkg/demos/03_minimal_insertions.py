# %% [markdown]
# # How far from minimal is the construction?
#
# The construction inserts `m*n**2 - n` letters; the search below allows up to 4.  Exhaustive search finds
# the true minimum on tiny inputs.

# %%
import itertools

from cyceq import SearchBudget, brute_force_equalize, equalize, exhaustive_theorem_sweep

for u, v in [("123", "132"), ("12344", "42431"), ("0123", "1032"), ("abc", "cba")]:
    cert = equalize(u, v)
    best = brute_force_equalize(u, v, SearchBudget(4))
    print(
        f"{u} {v}: construction inserts {cert.insertion.inserted_total:3d}, "
        f"minimum {best.inserted_count if best.found else '> 4'}"
    )

# %% [markdown]
# Distribution of the minimum over all ternary pairs of length 3 with
# equal letter counts.

# %%
from collections import Counter

tally = Counter()
for u in itertools.product("012", repeat=3):
    for v in itertools.permutations(u):
        r = brute_force_equalize(u, v, SearchBudget(3))
        tally[r.inserted_count if r.found else "> 3"] += 1
print(dict(tally))

# %% [markdown]
# Sweep: every pair up to length 3 over three letters.  Equal counts must be
# equalized, unequal counts must resist every insertion of up to 2 letters.

# %%
report = exhaustive_theorem_sweep(3, "012", SearchBudget(2))
print(report.equal_pairs, report.unequal_pairs, report.counterexamples)
