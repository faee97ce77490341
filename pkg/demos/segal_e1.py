"""First page of the skeletal spectral sequence for a group nerve.

``E^1_{j,k}`` is the reduced homology of ``X_j / S X_j``.  For a discrete
space everything sits in row 0 and ``E^2`` must already equal the homology of
the realization, which we compute independently from the total complex.
"""
from pathlib import Path

from suspsplit import commuting_nerve, read_group, segal_E1

data = Path(__file__).resolve().parent.parent / "data"
page = segal_E1(commuting_nerve(read_group(data / "z2.csv"), 4))

for j in sorted(page.columns):
    print(f"E1[{j},0] = {page.entry(j, 0)}")
print("d1 o d1 = 0:", page.d1_squared_zero)
for d in page.degrees_checked:
    print(f"E2[{d}] = {page.e2[0].describe(d)}   realization: {page.total.describe(d)}")
print("agree:", page.agree)
