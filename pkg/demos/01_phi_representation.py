# # Paulis as integer vectors
#
# A phase-free n-qudit Pauli X^a Z^b is stored as the vector (a | b) of length
# 2n.  Multiplying operators adds vectors, and two operators commute exactly when
# their symplectic product vanishes mod q.

# %%
import numpy as np

from ldicode import (
    PhiVector,
    code_from_paulis,
    commutator_matrix,
    compose,
    format_pauli_string,
    min_entanglement,
    parse_pauli_string,
    symplectic_product,
    weight,
)

# %% [markdown]
# Strings use one token per register.  `Y` is only accepted for qubits, where
# it is X Z up to a phase.

# %%
zxzi = parse_pauli_string("Z X Z I", 2)
yxxz = parse_pauli_string("Y X X Z", 2)
print(zxzi, "weight", weight(zxzi))
print(yxxz, "weight", weight(yxxz))
print("product:", format_pauli_string(compose(zxzi, yxxz)))

# %% [markdown]
# Over q = 3 the clock and shift operators have order three.

# %%
v = parse_pauli_string("X^2Z I XZ^2", 3)
print(v.entries)
acc = PhiVector.zeros(3, 3)
for _ in range(3):
    acc = compose(acc, v)
print("v composed three times:", acc.entries)

# %% [markdown]
# Commutation.  Without a modulus the product is an exact integer, which is
# what the lift later works with.

# %%
a, b = PhiVector((1, 0)), PhiVector((0, 1))
print("X vs Z over the integers:", symplectic_product(a, b))
print("X vs Z mod 2:", symplectic_product(a, b, 2))
print("X^2 vs Z^2 mod 3:", symplectic_product(PhiVector((2, 0)), PhiVector((0, 2)), 3))

# %% [markdown]
# A whole code: the four-qubit entanglement-assisted code.  Only the first two
# generators clash, so one entangled pair is enough.

# %%
code = code_from_paulis(["Z X Z I", "Z Z I Z", "Y X X Z", "Z Y Y X"], 2)
print(np.asarray(commutator_matrix(code).entries))
rep = min_entanglement(code)
print("c =", rep.c, " s =", rep.s, " clashing pairs:", rep.noncommuting_pairs)
