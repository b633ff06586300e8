# %% [markdown]
# # Zeckendorf codes and multiples of Fibonacci numbers
# The base-phi exponents of N are the shifts i with N*F[n] = sum F[n+i].

# %%
from phibase import nf_identity, nl_identity, zeck_encode
from phibase.tables import discrepancies, table

for n in (6, 7, 8, 9, 10):
    print(n, "=", zeck_encode(n))

# %%
for row in table(12, "fib"):
    print(row.text)

# %% [markdown]
# The identities hold for negative n as well.

# %%
print([nf_identity(12, k) for k in (-9, -1, 0, 7)])
print([nl_identity(12, k) for k in (-9, -1, 0, 7)])

# %% [markdown]
# Two rows of the classical printed tables do not survive an exact check.

# %%
for d in discrepancies():
    print(d.location, "|", d.paper_value, "|", d.witness)
