# %% [markdown]
# # Batch verification
# The same sweeps are available from the shell:
#     phibase verify 1 100000 --suites thm1,thm2 --workers 4
#     phibase verify 2 12 --suites prop1 --format json --out report.json

# %%
from phibase.verify import VerifyReport, verify

report = verify(1, 300, ["roundtrip", "thm1", "thm2", "corollary", "lemmas"])
print(report.summary)

# %%
report = verify(2, 12, ["prop1"])
print(report.to_text())

# %%
again = VerifyReport.from_json(report.to_json())
print(again.to_dict() == report.to_dict())
