"""The degree-two Johnson-Morita representation as a semidirect product.

An element is a pair (r, R) with r in (1/2)W3(H) and R symplectic; the
group law is

    (r_f, R_f) (r_g, R_g) = (r_f + R_f r_g, R_f R_g),

where R acts on W3(H) columnwise, and (r, R) acts on Phi_2 by

    (r, R) * (eta, y) = (R eta - kappa(R y) + R kappa(y) + r(R y), R y)

with r(.) the homomorphism induced by the wedge embedding.  Note that the
r-term is evaluated at R y; this is the expansion that makes * a left
action compatible with the group law above.

tau2_from_endo sends a free-group endomorphism f to the pair (r, R)
whose action realizes f on the image of phi_2.  Writing
f(0, x_i) = (w_i, h_i), the matrix R has columns h_i, and r is the
decode of

    tau2~(f) + kappa - R kappa,   where  tau2~(f)(y) = W(R^-1 y)

and W is the linear extension of x_i -> w_i.  The precomposition with
R^-1 is what makes tau2~ satisfy the crossed-homomorphism law
tau2~(fg) = tau2~(f) + R_f tau2~(g); the raw generator images W alone do
not.  The correction by kappa - R kappa is a principal crossed
homomorphism, and the corrected value lands in (1/2)W3(H) exactly when
the endomorphism acts like a mapping class at this level (otherwise
wedge3_decode raises NotInWedge3).
"""

from __future__ import annotations

from .errors import GenusMismatch, NotSymplectic
from .linalg import (
    HVector,
    IntMatrix,
    SymplecticMatrix,
    basis_vector,
    symplectic_check,
)
from .phi2 import Phi2Element, phi2_eval_word
from .wedge import (
    HomHW2,
    Wedge3,
    kappa,
    kappa_hom,
    sp_action_on_hom,
    wedge2_sp_action,
    wedge3_apply,
    wedge3_decode,
    wedge3_embed,
    wedge3_of,
    wedge3_sp_action,
)
from .words import EndomorphismSpec


class Rho2Element:
    """A pair (r, R) in the semidirect product (1/2)W3(H) x| Sp(2g, Z)."""

    __slots__ = ("r", "R")

    def __init__(self, r: Wedge3, R: SymplecticMatrix):
        if not isinstance(r, Wedge3):
            raise TypeError("r must be a Wedge3")
        if not isinstance(R, SymplecticMatrix):
            raise TypeError("R must be a SymplecticMatrix")
        if r.genus != R.genus:
            raise GenusMismatch(f"genus {r.genus} vs {R.genus}")
        self.r = r
        self.R = R

    @property
    def genus(self) -> int:
        return self.R.genus

    @classmethod
    def identity(cls, genus: int) -> "Rho2Element":
        return cls(Wedge3.zero(genus), SymplecticMatrix.identity(genus))

    def __mul__(self, other: "Rho2Element") -> "Rho2Element":
        return rho2_mul(self, other)

    def inv(self) -> "Rho2Element":
        return rho2_inv(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Rho2Element)
            and self.r == other.r
            and self.R == other.R
        )

    def __hash__(self) -> int:
        return hash(("Rho2Element", self.r, self.R))

    def __repr__(self) -> str:
        return f"Rho2Element(r={self.r!r}, R={self.R!r})"


def rho2_mul(f: Rho2Element, g: Rho2Element) -> Rho2Element:
    """(r_f, R_f)(r_g, R_g) = (r_f + R_f r_g, R_f R_g)."""
    if f.genus != g.genus:
        raise GenusMismatch(f"genus {f.genus} vs {g.genus}")
    return Rho2Element(f.r + wedge3_sp_action(f.R, g.r), f.R * g.R)


def rho2_inv(f: Rho2Element) -> Rho2Element:
    """(r, R)^-1 = (-(R^-1 r), R^-1)."""
    Rinv = f.R.inverse()
    return Rho2Element(-wedge3_sp_action(Rinv, f.r), Rinv)


def act_on_phi2(f: Rho2Element, p: Phi2Element) -> Phi2Element:
    """The left action of (r, R) on Phi_2.

    (r, R) * (eta, y) = (R eta - kappa(Ry) + R kappa(y) + r(Ry), Ry).
    """
    if f.genus != p.genus:
        raise GenusMismatch(f"genus {f.genus} vs {p.genus}")
    R = f.R
    Ry = R * p.y
    eta = (
        wedge2_sp_action(R, p.eta)
        - kappa(Ry)
        + wedge2_sp_action(R, kappa(p.y))
        + wedge3_apply(f.r, Ry)
    )
    return Phi2Element(eta, Ry)


def tau2_tilde_from_endo(endo: EndomorphismSpec):
    """Raw degree-two data of an endomorphism.

    Evaluates phi_2 on each generator image, giving pairs (w_i, h_i);
    returns (W, R) where W: x_i -> w_i is a HomHW2 and R is the matrix
    with columns h_i.  Raises NotSymplectic if R fails the symplectic
    identity.
    """
    g = endo.genus
    pairs = [phi2_eval_word(w) for w in endo.images]
    n = 2 * g
    rows = tuple(
        tuple(pairs[col].y.coeffs[row] for col in range(n)) for row in range(n)
    )
    M = IntMatrix(rows)
    if not symplectic_check(M):
        raise NotSymplectic("endomorphism abelianization is not symplectic")
    return HomHW2(tuple(p.eta for p in pairs)), SymplecticMatrix(rows)


def tau2_from_endo(endo: EndomorphismSpec) -> Rho2Element:
    """The pair (r, R) realizing the endomorphism's action on phi_2(pi).

    Computes the crossed homomorphism W o R^-1, corrects by
    kappa - R kappa, and decodes the result into (1/2)W3(H).
    Raises NotSymplectic or NotInWedge3 when the input does not act
    like a mapping class at this level.
    """
    W, R = tau2_tilde_from_endo(endo)
    crossed = W.precompose(R.inverse())
    kh = kappa_hom(endo.genus)
    m = crossed + kh - sp_action_on_hom(R, kh)
    return Rho2Element(wedge3_decode(m), R)


def principal_crossed_hom(m: HomHW2, R: SymplecticMatrix) -> HomHW2:
    """The principal crossed homomorphism m - R m at R."""
    return m - sp_action_on_hom(R, m)


def morita_shift(genus: int) -> Wedge3:
    """The comparison element -(1/2) (sum_i a_i + b_i) ^ (sum_i a_i ^ b_i)."""
    u = HVector((1,) * (2 * genus))
    total = Wedge3.zero(genus)
    for i in range(1, genus + 1):
        total = total + wedge3_of(u, basis_vector(genus, i), basis_vector(genus, i + genus))
    # total is integral with doubled values 2*c; the shift has doubled values -c
    return Wedge3(genus, {t: -(c // 2) for t, c in total.terms()})


def morita_tau2_prime(f: Rho2Element) -> HomHW2:
    """The variant crossed homomorphism embed(r) + (m - R m) with the fixed shift m.

    It differs from embed(r) by a principal crossed homomorphism, so both
    represent the same first-cohomology class.
    """
    mh = wedge3_embed(morita_shift(f.genus))
    return wedge3_embed(f.r) + principal_crossed_hom(mh, f.R)
