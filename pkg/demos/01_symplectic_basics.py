"""
The symplectic lattice H and its transvections
==============================================

H is the first homology of a genus-g surface with one boundary circle:
a free abelian group on a_1..a_g, b_1..b_g with the intersection pairing
<a_i, b_i> = 1.  Everything downstream (wedge powers, the nilpotent
quotient, the membership theorems) is built on this pairing.
"""

from jmrep import (
    HVector,
    SymplecticMatrix,
    basis_label,
    basis_vector,
    make_J,
    pairing,
    symplectic_check,
    symplectic_inverse,
    transvection,
)

g = 2

# the standard basis: indices 1..g are the a_i, indices g+1..2g the b_i
for k in range(1, 2 * g + 1):
    print(f"x_{k} = {basis_label(k, g)} = {basis_vector(g, k).coeffs}")

# the pairing in matrix form is J; <u, v> = u^T J^T v with our rows
J = make_J(g)
print("\nJ =")
for row in J.rows:
    print(" ", row)

a1, b1, a2 = basis_vector(g, 1), basis_vector(g, 3), basis_vector(g, 2)
print("\n<a1, b1> =", pairing(a1, b1))
print("<b1, a1> =", pairing(b1, a1))
print("<a1, a2> =", pairing(a1, a2))

# a Dehn twist about a curve in class v acts on H as the transvection
# u -> u + <u, v> v; the matrix depends only on v up to sign
v = a1 + b1
T = transvection(v)
print("\ntransvection at a1 + b1:")
for row in T.rows:
    print(" ", row)
print("preserves the pairing:", symplectic_check(T))
print("T(a1) =", (T * a1).coeffs, " = a1 + <a1, v> v")

# inverses come from the pairing, no rational arithmetic needed
Tinv = symplectic_inverse(T)
print("T * T^-1 = identity:", (T * Tinv) == SymplecticMatrix.identity(g))

# a sanity check that fails loudly: doubling a basis vector is not symplectic
D = HVector((2, 0, 0, 0))
print("\n<2a1, b1> =", pairing(D, b1), " (so no symplectic map sends a1 there alone)")
