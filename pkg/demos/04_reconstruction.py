# %% [markdown]
# # Recovering N from half of its digits
# Digits above the point, with Lucas weights, give N up to a +1 that depends
# on the parity of the lowest positive digit.  The fractional digits, with
# d0 and that same parity bit, give N as well.

# %%
from phibase import (
    double_from_lucas,
    encode,
    from_negative,
    from_positive,
    parity_hint,
    split,
    theorem_consistency,
)

for n in (2, 5, 6, 9, 12, 100, 12345):
    d = encode(n)
    s = split(d)
    hint = parity_hint(d)
    print(
        f"{n:>6} {str(d):>30}  "
        f"pos={from_positive(s.beta_plus, s.d0)}  "
        f"neg={from_negative(s.beta_minus, s.d0, hint)} ({hint.value})  "
        f"2N={double_from_lucas(d)}"
    )

# %% [markdown]
# Without the parity bit the fractional digits are ambiguous by exactly one.

# %%
d = encode(9)
s = split(d)
print(from_negative(s.beta_minus, s.d0, parity_hint(d).flipped()))

# %%
print(all(theorem_consistency(n).ok for n in range(1, 5000)))
