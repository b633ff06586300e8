# %% [markdown]
# # Base-phi digit strings
# Every positive integer is a sum of non-adjacent powers of phi.

# %%
from phibase import decode, decode_integer, encode, parse, split

for n in range(1, 13):
    print(f"{n:>3}  {encode(n)}")

# %% [markdown]
# Decoding is exact; strings that are not integers come back as a + b*phi.

# %%
print(decode_integer(parse("100.01")))
print(decode(parse("10.1")))        # sqrt(5) == -1 + 2*phi

# %% [markdown]
# The parser only accepts canonical strings.

# %%
for text in ["11.01", "1.10", "1.0.1", "01.1"]:
    try:
        parse(text)
    except ValueError as exc:
        print(type(exc).__name__, "-", exc)

# %% [markdown]
# Splitting separates the digits above the point, d0, and the fraction.

# %%
print(split(encode(6)))
