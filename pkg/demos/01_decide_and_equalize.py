# %% [markdown]
# # Deciding and constructing
#
# Two words of the same length are cyclically equalizable exactly when they
# use each letter the same number of times.  `equalize` goes further and
# produces the insertion.

# %%
from cyceq import equalize, is_cyclically_equalizable, parikh, verify_certificate
from cyceq.tables import render_tables

print(parikh("12344"), parikh("42431"))
print(is_cyclically_equalizable("12344", "42431"))
print(is_cyclically_equalizable("01", "11"))

# %% [markdown]
# A single cycle: `v = 30421` is `u = 01234` permuted by `(0 3 2 4 1)`.
# The expanded words have length `n**2 = 25` and differ by a rotation of
# `n + 1 = 6`.

# %%
cert = equalize("01234", "30421")
print("u' =", cert.u_expanded)
print("v' =", cert.v_expanded)
print("offset", cert.offset.value, "| distinguished", cert.distinguished)
print(render_tables(cert))

# %% [markdown]
# Two cycles, `(0 3 2)(1 4)`: one pair of words per cycle, interleaved
# column by column.  Length `2 * 25`, rotation `2 * 6`.

# %%
cert = equalize("01234", "34021")
print(cert.construction.permutation, cert.expanded_length, cert.offset.value)
print(render_tables(cert))

# %% [markdown]
# Repeated letters are lifted to distinct copies first and mapped back at
# the end, so the output only uses the original alphabet.

# %%
cert = equalize("acbcac", "cbaacc")
print(cert.construction.lift.backward)
print(cert.u_expanded)
print(cert.v_expanded)
print(verify_certificate(cert))
