# %% [markdown]
# # Certificates
#
# A certificate holds both words, both expansions, the distinguished
# positions, the insertion and the rotation.  The checker trusts none of it.

# %%
from dataclasses import replace

from cyceq import (
    CyclicOffset,
    EqualizationCertificate,
    SimultaneousInsertion,
    Word,
    apply_insertion,
    find_common_insertion,
    verify_certificate,
)
from cyceq.document import dumps, loads

ins = SimultaneousInsertion(tuple(map(Word, ["14", "5", "", "56"])))
for w in ("121", "334", "135"):
    print(w, "->", apply_insertion(w, ins))

# %%
cert = EqualizationCertificate.from_expanded(
    "12344", "42431", "123124424", "424123124", [0, 1, 2, 5, 6], 6
)
print(verify_certificate(cert))
print(verify_certificate(replace(cert, offset=CyclicOffset(5, 9))))
print(verify_certificate(replace(cert, v_expanded=Word("424123125"))))

# %% [markdown]
# Someone hands over only the expanded words: recover a distinguished set.

# %%
print(find_common_insertion("123", "132", "1213", "1312"))
print(find_common_insertion("01", "10", "0110", "0110"))

# %% [markdown]
# The JSON document is what `cyceq equalize --json` writes and
# `cyceq verify` reads.

# %%
text = dumps(cert)
print(text)
print(verify_certificate(loads(text)))
