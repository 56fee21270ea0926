"""The two-step nilpotent quotient Phi_2 of the surface group.

Phi_2 is the set (1/2)W2(H) x H with multiplication

    (eta, y) (nu, z) = (eta + nu + (1/2) y^z, y + z),

a central extension of H by (1/2)W2(H).  The quotient map phi_2 from
pi_1 sends xi_i to (0, x_i); its image is the subgroup of pairs whose
eta-coefficients match the parity of the products of the coordinates of
y, and the image of the handlebody subgroup 'b' (loops that die in the
handlebody) is cut out by the conditions of phi2_b_membership.

Coefficients of eta follow the doubled-integer convention of the wedge
module throughout.
"""

from __future__ import annotations

from .errors import GenusMismatch
from .linalg import HVector, zero_vector
from .wedge import Wedge2, half_wedge2_of
from .words import FreeWord


class Phi2Element:
    """An element (eta, y) of Phi_2."""

    __slots__ = ("eta", "y")

    def __init__(self, eta: Wedge2, y: HVector):
        if not isinstance(eta, Wedge2) or not isinstance(y, HVector):
            raise TypeError("Phi2Element needs (Wedge2, HVector)")
        if eta.genus != y.genus:
            raise GenusMismatch(f"genus {eta.genus} vs {y.genus}")
        self.eta = eta
        self.y = y

    @property
    def genus(self) -> int:
        return self.y.genus

    @classmethod
    def identity(cls, genus: int) -> "Phi2Element":
        return cls(Wedge2.zero(genus), zero_vector(genus))

    @classmethod
    def of_generator(cls, genus: int, k: int) -> "Phi2Element":
        """phi_2(xi_k) = (0, x_k) for positive k, inverse for negative."""
        from .linalg import basis_vector

        if k == 0 or abs(k) > 2 * genus:
            raise ValueError(f"letter {k} out of range")
        v = basis_vector(genus, abs(k))
        return cls(Wedge2.zero(genus), v if k > 0 else -v)

    def __mul__(self, other: "Phi2Element") -> "Phi2Element":
        return phi2_mul(self, other)

    def inv(self) -> "Phi2Element":
        return phi2_inv(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Phi2Element)
            and self.eta == other.eta
            and self.y == other.y
        )

    def __hash__(self) -> int:
        return hash(("Phi2Element", self.eta, self.y))

    def __repr__(self) -> str:
        return f"Phi2Element(eta={self.eta!r}, y={self.y!r})"


def phi2_mul(p: Phi2Element, q: Phi2Element) -> Phi2Element:
    """(eta, y)(nu, z) = (eta + nu + (1/2) y^z, y + z)."""
    if p.genus != q.genus:
        raise GenusMismatch(f"genus {p.genus} vs {q.genus}")
    return Phi2Element(p.eta + q.eta + half_wedge2_of(p.y, q.y), p.y + q.y)


def phi2_inv(p: Phi2Element) -> Phi2Element:
    """(eta, y)^-1 = (-eta, -y); the (1/2) y^y correction vanishes."""
    return Phi2Element(-p.eta, -p.y)


def phi2_eval_word(w: FreeWord) -> Phi2Element:
    """phi_2 of a word: the ordered product of (0, x_k)^(+-1) over its letters."""
    g = w.genus
    n = 2 * g
    y = [0] * (n + 1)  # 1-based
    eta = {}
    for s in w.letters:
        k = abs(s)
        sign = 1 if s > 0 else -1
        # eta += (1/2) y ^ (sign x_k), in doubled units
        for p in range(1, k):
            if y[p]:
                key = (p, k)
                eta[key] = eta.get(key, 0) + sign * y[p]
        for q in range(k + 1, n + 1):
            if y[q]:
                key = (k, q)
                eta[key] = eta.get(key, 0) - sign * y[q]
        y[k] += sign
    return Phi2Element(Wedge2(g, eta), HVector(y[1:]))


def phi2_pi_membership(p: Phi2Element) -> bool:
    """True iff (eta, y) is the phi_2-image of some word.

    Writing y = sum l_i x_i, the condition is that every doubled
    coefficient of eta is congruent to l_i * l_j mod 2.
    """
    n = 2 * p.genus
    l = p.y.coeffs
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (p.eta.twice(i, j) - l[i - 1] * l[j - 1]) % 2:
                return False
    return True


def phi2_b_membership(p: Phi2Element) -> bool:
    """True iff (eta, y) is the phi_2-image of a loop bounding in the handlebody.

    Writing y = sum l_i b_i, the conditions are: y has no a-part, eta has no
    a^a terms, the a^b coefficients of eta are integers, and the doubled
    b^b coefficients are congruent to l_i * l_j mod 2.
    """
    g = p.genus
    if any(p.y.coeffs[:g]):
        return False
    for (i, j), t in p.eta.terms():
        if j <= g:
            return False  # a^a term
        if i <= g:
            if t % 2:
                return False  # a^b coefficient must be integral
    l = p.y.coeffs
    for i in range(g + 1, 2 * g + 1):
        for j in range(i + 1, 2 * g + 1):
            if (p.eta.twice(i, j) - l[i - 1] * l[j - 1]) % 2:
                return False
    return True


def phi2_word_synthesis(p: Phi2Element) -> FreeWord:
    """Produce a word whose phi_2-image is exactly p.

    The word is the generator string xi_1^l_1 ... xi_2g^l_2g followed by
    central commutator corrections [xi_i, xi_j]^n_ij.  Raises ValueError
    when p fails phi2_pi_membership.
    """
    if not phi2_pi_membership(p):
        raise ValueError("element is not in the image of phi_2")
    g = p.genus
    n = 2 * g
    l = p.y.coeffs
    letters = []
    for i in range(1, n + 1):
        li = l[i - 1]
        letters += [i if li > 0 else -i] * abs(li)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            # the generator string contributes l_i l_j in doubled units
            diff = p.eta.twice(i, j) - l[i - 1] * l[j - 1]
            count = diff // 2
            if count > 0:
                letters += [i, j, -i, -j] * count
            elif count < 0:
                letters += [j, i, -j, -i] * (-count)
    return FreeWord(g, letters)
