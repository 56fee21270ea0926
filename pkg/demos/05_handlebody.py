"""
The handlebody subgroup inside the image
========================================

Fill the surface's b-handles with disks and it bounds a handlebody.
Mapping classes extending over that handlebody form a subgroup, and
their pairs (r, R) are cut out by three effective conditions: a block
shape on R, the usual parities, and the absence of all-a terms in r.
The same set also has a dynamical description: preserve the Phi_2-image
of the loops that die in the handlebody.
"""

from jmrep import (
    Rho2Element,
    SymplecticMatrix,
    Wedge3,
    catalog,
    handlebody_failures,
    handlebody_membership,
    preserves_phi2_b,
    tau2_from_endo,
    torelli_handlebody_basis,
)

g = 3
I = SymplecticMatrix.identity(g)

# b-type 3-forms extend, all-a ones do not
good = Rho2Element(Wedge3.basis(g, 4, 5, 6), I)
bad = Rho2Element(Wedge3.basis(g, 1, 2, 3), I)
print("b1^b2^b3 over I:", handlebody_membership(good))
print("a1^a2^a3 over I:", handlebody_membership(bad), handlebody_failures(bad))

# both verdicts agree with the dynamical test on the handlebody kernel image
print("dynamical test agrees:", preserves_phi2_b(good), preserves_phi2_b(bad))

# inside the Torelli group (R = identity) the handlebody part is free
# abelian; here is its basis, one generator per surviving triple type
basis = torelli_handlebody_basis(g)
print(f"\nTorelli handlebody basis has {len(basis)} generators:")
for f in basis[:5]:
    print("  ", f.r)
print("   ...")

# the shipped catalog knows which of its automorphisms extend
for entry in catalog(g):
    f = tau2_from_endo(entry.spec)
    verdict = handlebody_membership(f)
    assert verdict == entry.claimed_handlebody
    print(f"{entry.name:22s} extends over the handlebody: {verdict}")
