"""Exact characterization of which pairs (r, R) come from mapping classes.

For a symplectic R define, for each triple i < j < k,

    E_ijk = .(row_i(RJ), row_j(R), row_k(R))
          - .(row_i(R), row_j(RJ), row_k(R))
          + .(row_i(R), row_j(R), row_k(RJ))

with .(w, y, z) = sum_n w_n y_n z_n.  A pair (r, R) is the degree-two
value of a mapping class of the one-boundary surface iff every doubled
coefficient of r is congruent to E_ijk mod 2.  In particular the fiber
over R is a coset of the integral lattice W3(H), and canonical_lift
picks the representative with doubled coefficients in {0, 1}.

A pair comes from a mapping class of the handlebody iff additionally the
upper-right g x g block of R vanishes and r has no a^a^a terms.
"""

from __future__ import annotations

import itertools

from .linalg import (
    SymplecticMatrix,
    basis_vector,
    make_J,
    triple_dot,
    zero_vector,
)
from .phi2 import Phi2Element, phi2_b_membership
from .rho2 import Rho2Element, act_on_phi2, rho2_inv
from .wedge import Wedge2, Wedge3


def compute_E(R: SymplecticMatrix) -> dict:
    """The complete map (i, j, k) -> E_ijk over all triples i < j < k."""
    if not isinstance(R, SymplecticMatrix):
        raise TypeError("compute_E needs a SymplecticMatrix")
    n = 2 * R.genus
    RJ = R * make_J(R.genus)
    E = {}
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        ri, rj, rk = R.row(i), R.row(j), R.row(k)
        si, sj, sk = RJ.row(i), RJ.row(j), RJ.row(k)
        E[(i, j, k)] = (
            triple_dot(si, rj, rk)
            - triple_dot(ri, sj, rk)
            + triple_dot(ri, rj, sk)
        )
    return E


def mcg_membership(f: Rho2Element) -> bool:
    """True iff (r, R) is the degree-two value of some mapping class."""
    E = compute_E(f.R)
    return all((f.r.twice(*t) - e) % 2 == 0 for t, e in E.items())


def canonical_lift(R: SymplecticMatrix) -> Rho2Element:
    """The member over R whose doubled coefficients all lie in {0, 1}."""
    E = compute_E(R)
    r = Wedge3(R.genus, {t: e % 2 for t, e in E.items()})
    return Rho2Element(r, R)


def handlebody_sp_check(R: SymplecticMatrix) -> bool:
    """True iff the upper-right g x g block of R is zero.

    Equivalently R maps the span of b_1..b_g into itself.  The b_i are
    the classes killed by filling in the handlebody, so every matrix
    induced by a handlebody mapping class has this block shape.
    """
    g = R.genus
    return all(R.entry(i, g + j) == 0 for i in range(1, g + 1) for j in range(1, g + 1))


def handlebody_failures(f: Rho2Element) -> tuple:
    """Names of the handlebody membership conditions that fail.

    Condition 1: upper-right block of R is zero.
    Condition 2: the E-congruences of mcg_membership hold.
    Condition 3: r has no a^a^a terms (no triple with k <= g).
    """
    g = f.genus
    failed = []
    if not handlebody_sp_check(f.R):
        failed.append("condition 1")
    if not mcg_membership(f):
        failed.append("condition 2")
    if any(t[2] <= g for t, _ in f.r.terms()):
        failed.append("condition 3")
    return tuple(failed)


def handlebody_membership(f: Rho2Element) -> bool:
    """True iff (r, R) is the degree-two value of a handlebody mapping class."""
    return not handlebody_failures(f)


def torelli_handlebody_basis(genus: int) -> list:
    """Free basis of the image of the handlebody Torelli group.

    Returns the elements (w, I) for w running over the integral basis
    b_i^b_j^b_k, a_i^b_j^b_k, a_i^a_j^b_k with 1 <= i, j, k <= g
    (indices increasing inside each factor type).
    """
    if genus < 1:
        raise ValueError("genus must be >= 1")
    g = genus
    ident = SymplecticMatrix.identity(g)
    out = []
    for i, j, k in itertools.combinations(range(1, g + 1), 3):
        out.append(Rho2Element(Wedge3.basis(g, g + i, g + j, g + k), ident))
    for i in range(1, g + 1):
        for j, k in itertools.combinations(range(1, g + 1), 2):
            out.append(Rho2Element(Wedge3.basis(g, i, g + j, g + k), ident))
    for i, j in itertools.combinations(range(1, g + 1), 2):
        for k in range(1, g + 1):
            out.append(Rho2Element(Wedge3.basis(g, i, j, g + k), ident))
    return out


def _b_image_generators(genus: int):
    """Generators of phi_2(b): (0, b_i), (a_i^b_j, 0) and (b_i^b_j, 0)."""
    g = genus
    zero2 = Wedge2.zero(g)
    zerov = zero_vector(g)
    gens = [Phi2Element(zero2, basis_vector(g, g + i)) for i in range(1, g + 1)]
    gens += [
        Phi2Element(Wedge2.basis(g, i, g + j), zerov)
        for i in range(1, g + 1)
        for j in range(1, g + 1)
    ]
    gens += [
        Phi2Element(Wedge2.basis(g, g + i, g + j), zerov)
        for i, j in itertools.combinations(range(1, g + 1), 2)
    ]
    return gens


def preserves_phi2_b(f: Rho2Element) -> bool:
    """True iff the action of f and of f^-1 maps phi_2(b) into itself.

    The action of any pair is an automorphism of Phi_2, so it is enough
    to check a generating set of phi_2(b) in both directions.
    """
    gens = _b_image_generators(f.genus)
    for h in (f, rho2_inv(f)):
        for p in gens:
            if not phi2_b_membership(act_on_phi2(h, p)):
                return False
    return True
