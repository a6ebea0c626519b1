# # Scanning target primes
#
# How small can p be before the lift loses distance?  There is no theorem
# below p*, so measure it.

# %%
import numpy as np

from ldicode import CodeSpec, detection_distance, prime_scan, threshold
from ldicode.modular import rank_mod

rng = np.random.default_rng(0)

# %% [markdown]
# A random three-register code over q = 3 with three generators.

# %%
while True:
    g = rng.integers(0, 3, size=(3, 6))
    if rank_mod(g, 3) == 3:
        break
code = CodeSpec(3, g)
print(g)

# %%
source = detection_distance(code.generators, 3).distance
print("distance over q = 3:", source)
entries = prime_scan(code, [2, 3, 5, 7, 11, 13], source_distance=source)
for e in entries:
    if e.error:
        print(f"p={e.p:2d}  {e.error}")
        continue
    print(
        f"p={e.p:2d}  distance={e.distance.distance}  preserved={e.preserved}  "
        f"max|entry|={e.verification.max_entry_observed}"
    )

# %% [markdown]
# p = 2 drops to distance 1 while every larger prime keeps distance 2.  The
# guarantee only starts at p*, far beyond anything scanned here.

# %%
print("p* at the source distance:", threshold(code, source))
