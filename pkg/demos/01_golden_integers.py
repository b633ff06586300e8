# %% [markdown]
# # Golden integers
# Numbers of the form a + b*phi add and multiply exactly with Python ints.
# phi**2 == phi + 1 is the only rule needed.

# %%
from phibase import PHI, GoldenInt, phi_pow

print(PHI * PHI)                   # 1+1*phi
print(GoldenInt(2, 3) * GoldenInt(1, 1))

# %% [markdown]
# Powers of phi carry Fibonacci coefficients, for negative exponents too.

# %%
for n in range(-4, 6):
    print(n, phi_pow(n))

# %% [markdown]
# The conjugate sends phi to 1 - phi = -1/phi.  A number plus its conjugate
# is always an ordinary integer; for phi**n that integer is the Lucas number.

# %%
x = phi_pow(7)
print(x.conj(), x + x.conj())      # ..., 29+0*phi

# %% [markdown]
# Signs are decided exactly.  F[n] - F[n-1]*phi shrinks toward zero, yet the
# sign never needs a float (the float shown is only a diagnostic).

# %%
for n in (10, 11, 200, 201):
    y = phi_pow(n).conj()
    print(n, y.sign(), float(y.approx(120)))
