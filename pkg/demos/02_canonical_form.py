# # Canonical form
#
# Row operations, register swaps and Hadamard swaps bring independent
# generators to [I_k X2 | Z1 Z2].  Every step is logged and can be replayed.

# %%
from pathlib import Path

from ldicode import CodeSpec, NoCanonicalForm, canonicalize, read_code_file, replay
from ldicode.canonical import step_to_dict

DATA = Path(__file__).resolve().parent / "data"

# %%
code = read_code_file(DATA / "four_qubit_ea.code")
print(code.generators)
canon = canonicalize(code)
print(canon.code.generators)
print("Hadamard swaps on registers:", canon.hadamards)

# %% [markdown]
# Register 4 is the only register whose X column survives after the first
# three pivots, so it is the one rotated.  The log replays onto the input.

# %%
for step in canon.log:
    print(step_to_dict(step))
assert replay(canon.log, code) == canon.code

# %% [markdown]
# Blocks of the canonical form, as used by the lift.

# %%
print("Z1 =\n", canon.z1)
print("X2 has", canon.x2.shape[1], "columns")

# %% [markdown]
# Not every code has this shape.  X1 and Z1 on two qudits are independent but
# no choice of Hadamards gives the X half rank two.

# %%
try:
    canonicalize(CodeSpec(2, [[1, 0, 0, 0], [0, 0, 1, 0]]))
except NoCanonicalForm as exc:
    print("no canonical form:", exc)
