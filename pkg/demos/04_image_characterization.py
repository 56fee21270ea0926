"""
Which pairs (r, R) come from mapping classes
============================================

Not every pair does.  Over a fixed symplectic R the fiber of realizable
pairs is a single coset of the integral lattice inside the half-integer
3-forms, pinned down by parities E_ijk computed from R alone.  This is a
complete, effective characterization: membership is a parity check.
"""

import random

from jmrep import (
    Rho2Element,
    SymplecticMatrix,
    Wedge3,
    basis_vector,
    canonical_lift,
    compute_E,
    mcg_membership,
    transvection,
)

g = 2

# over the identity the parities all vanish: the fiber is the integral lattice
I = SymplecticMatrix.identity(g)
print("integral r over I:", mcg_membership(Rho2Element(Wedge3.basis(g, 1, 2, 3), I)))
print("half-integral r over I:", mcg_membership(Rho2Element(Wedge3(g, {(1, 2, 3): 1}), I)))

# a cross-handle transvection forces half-integral coefficients
X = transvection(basis_vector(g, 3) + basis_vector(g, 4))
odd = {t: v for t, v in compute_E(X).items() if v % 2}
print("\nodd parities of the b1+b2 transvection:", odd)
print("(0, X) accepted:", mcg_membership(Rho2Element(Wedge3.zero(g), X)))

# canonical_lift picks the coset representative with coefficients in {0, 1/2}
lift = canonical_lift(X)
print("canonical lift fiber:", lift.r)
print("lift accepted:", mcg_membership(lift))

# shifting by any integral 3-form stays inside; by a half form, outside
shift = Wedge3.basis(g, 1, 3, 4)
print("lift + integral shift:", mcg_membership(Rho2Element(lift.r + shift, X)))
half = Wedge3(g, {(1, 2, 4): 1})
print("lift + half shift:", mcg_membership(Rho2Element(lift.r + half, X)))

# the accepted set is closed under the group law, as it must be for an image
rng = random.Random(11)
R = X
for _ in range(5):
    k = rng.randint(1, 2 * g)
    R = R * transvection(basis_vector(g, k))
print("\nrandom product accepted via its lift:", mcg_membership(canonical_lift(R)))
