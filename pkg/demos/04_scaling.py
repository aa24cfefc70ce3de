# %% [markdown]
# # Running time
#
# The expanded words have `m * n**2` letters; construction time tracks that.

# %%
import time

from cyceq import equalize

for n in (25, 50, 100, 200, 400):
    u = [str(i) for i in range(n)]
    for name, v in (("one cycle", u[1:] + u[:1]), ("identity", u)):
        if name == "identity" and n > 100:
            continue
        start = time.perf_counter()
        cert = equalize(u, v)
        elapsed = time.perf_counter() - start
        print(f"n={n:4d} {name:9s} m={cert.construction.m:4d} "
              f"length={cert.expanded_length:9d} {elapsed:6.3f}s")
