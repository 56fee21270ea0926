"""Exterior algebra over the half-integers for the lattice H = Z^(2g).

Elements of (1/2)W2(H) and (1/2)W3(H) are sparse maps from strictly
increasing index pairs/triples to half-integer coefficients.  Every
coefficient is stored as its DOUBLED integer value (the "twice"
convention), so all arithmetic stays in Z; a stored value t means the
coefficient t/2.  Constructors drop zero terms, so equality of the
canonical forms is plain structural equality.

The bridge between W3(H) and Hom(H, (1/2)W2(H)) is

    (x_i ^ x_j ^ x_k)(y) = <y,x_k> x_i^x_j + <y,x_i> x_j^x_k + <y,x_j> x_k^x_i

extended linearly, with <u, v> the intersection pairing from linalg.
wedge3_decode inverts this embedding exactly (or raises NotInWedge3).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import GenusMismatch, NotInWedge3
from .linalg import (
    HVector,
    IntMatrix,
    SymplecticMatrix,
    basis_label,
    basis_vector,
)


def _fmt_terms(twice_map, genus):
    parts = []
    for idx, t in sorted(twice_map.items()):
        mono = "^".join(basis_label(i, genus) for i in idx)
        coeff = Fraction(t, 2)
        if coeff == 1:
            parts.append(f"+{mono}")
        elif coeff == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'}{abs(coeff)}*{mono}")
    return " ".join(parts) if parts else "0"


def _build_twice(genus, terms, arity):
    n = 2 * genus
    if isinstance(terms, Mapping):
        items = terms.items()
    else:
        items = terms
    out = {}
    for idx, t in items:
        idx = tuple(idx)
        if len(idx) != arity or any(not isinstance(i, int) for i in idx):
            raise ValueError(f"bad index tuple {idx!r}")
        if not all(1 <= i <= n for i in idx) or any(
            idx[k] >= idx[k + 1] for k in range(arity - 1)
        ):
            raise ValueError(
                f"index tuple {idx} must be strictly increasing within 1..{n}"
            )
        if isinstance(t, bool) or not isinstance(t, int):
            raise ValueError(f"doubled coefficient must be an integer, got {t!r}")
        if t:
            out[idx] = out.get(idx, 0) + t
    return {k: v for k, v in out.items() if v}


class Wedge2:
    """Element of (1/2)W2(H): sparse map from pairs (i<j) to doubled coefficients."""

    __slots__ = ("genus", "_twice")

    def __init__(self, genus: int, terms=()):
        if genus < 1:
            raise ValueError("genus must be >= 1")
        self.genus = genus
        self._twice = _build_twice(genus, terms, 2)

    @classmethod
    def zero(cls, genus: int) -> "Wedge2":
        return cls(genus)

    @classmethod
    def basis(cls, genus: int, i: int, j: int) -> "Wedge2":
        """The integral element x_i ^ x_j (coefficient 1, so twice = 2)."""
        return cls(genus, {(i, j): 2})

    def twice(self, i: int, j: int) -> int:
        """Doubled coefficient of x_i ^ x_j (i < j)."""
        return self._twice.get((i, j), 0)

    def terms(self):
        """Sorted tuple of ((i, j), doubled coefficient), zero terms omitted."""
        return tuple(sorted(self._twice.items()))

    def is_zero(self) -> bool:
        return not self._twice

    def is_integral(self) -> bool:
        return all(t % 2 == 0 for t in self._twice.values())

    def _check(self, other):
        if not isinstance(other, Wedge2):
            raise TypeError(f"expected Wedge2, got {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __add__(self, other: "Wedge2") -> "Wedge2":
        self._check(other)
        out = dict(self._twice)
        for k, t in other._twice.items():
            out[k] = out.get(k, 0) + t
        return Wedge2(self.genus, out)

    def __sub__(self, other: "Wedge2") -> "Wedge2":
        self._check(other)
        out = dict(self._twice)
        for k, t in other._twice.items():
            out[k] = out.get(k, 0) - t
        return Wedge2(self.genus, out)

    def __neg__(self) -> "Wedge2":
        return Wedge2(self.genus, {k: -t for k, t in self._twice.items()})

    def __rmul__(self, n: int) -> "Wedge2":
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return Wedge2(self.genus, {k: n * t for k, t in self._twice.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Wedge2)
            and self.genus == other.genus
            and self._twice == other._twice
        )

    def __hash__(self) -> int:
        return hash(("Wedge2", self.genus, frozenset(self._twice.items())))

    def __repr__(self) -> str:
        return f"Wedge2(g={self.genus}: {_fmt_terms(self._twice, self.genus)})"


class Wedge3:
    """Element of (1/2)W3(H): sparse map from triples (i<j<k) to doubled coefficients."""

    __slots__ = ("genus", "_twice")

    def __init__(self, genus: int, terms=()):
        if genus < 1:
            raise ValueError("genus must be >= 1")
        self.genus = genus
        self._twice = _build_twice(genus, terms, 3)

    @classmethod
    def zero(cls, genus: int) -> "Wedge3":
        return cls(genus)

    @classmethod
    def basis(cls, genus: int, i: int, j: int, k: int) -> "Wedge3":
        """The integral element x_i ^ x_j ^ x_k (coefficient 1, so twice = 2)."""
        return cls(genus, {(i, j, k): 2})

    def twice(self, i: int, j: int, k: int) -> int:
        return self._twice.get((i, j, k), 0)

    def terms(self):
        return tuple(sorted(self._twice.items()))

    def is_zero(self) -> bool:
        return not self._twice

    def is_integral(self) -> bool:
        """True iff every coefficient is an integer (all doubled values even)."""
        return all(t % 2 == 0 for t in self._twice.values())

    def _check(self, other):
        if not isinstance(other, Wedge3):
            raise TypeError(f"expected Wedge3, got {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __add__(self, other: "Wedge3") -> "Wedge3":
        self._check(other)
        out = dict(self._twice)
        for k, t in other._twice.items():
            out[k] = out.get(k, 0) + t
        return Wedge3(self.genus, out)

    def __sub__(self, other: "Wedge3") -> "Wedge3":
        self._check(other)
        out = dict(self._twice)
        for k, t in other._twice.items():
            out[k] = out.get(k, 0) - t
        return Wedge3(self.genus, out)

    def __neg__(self) -> "Wedge3":
        return Wedge3(self.genus, {k: -t for k, t in self._twice.items()})

    def __rmul__(self, n: int) -> "Wedge3":
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return Wedge3(self.genus, {k: n * t for k, t in self._twice.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Wedge3)
            and self.genus == other.genus
            and self._twice == other._twice
        )

    def __hash__(self) -> int:
        return hash(("Wedge3", self.genus, frozenset(self._twice.items())))

    def __repr__(self) -> str:
        return f"Wedge3(g={self.genus}: {_fmt_terms(self._twice, self.genus)})"


def wedge2_of(u: HVector, v: HVector) -> Wedge2:
    """The integral product u ^ v; coefficient of x_i^x_j is u_i v_j - u_j v_i."""
    if u.genus != v.genus:
        raise GenusMismatch(f"genus {u.genus} vs {v.genus}")
    n = 2 * u.genus
    uc, vc = u.coeffs, v.coeffs
    out = {}
    for i in range(n):
        if not (uc[i] or vc[i]):
            continue
        for j in range(i + 1, n):
            c = uc[i] * vc[j] - uc[j] * vc[i]
            if c:
                out[(i + 1, j + 1)] = 2 * c
    return Wedge2(u.genus, out)


def half_wedge2_of(u: HVector, v: HVector) -> Wedge2:
    """(1/2) u ^ v, the correction term of the two-step nilpotent product."""
    if u.genus != v.genus:
        raise GenusMismatch(f"genus {u.genus} vs {v.genus}")
    n = 2 * u.genus
    uc, vc = u.coeffs, v.coeffs
    out = {}
    for i in range(n):
        if not (uc[i] or vc[i]):
            continue
        for j in range(i + 1, n):
            c = uc[i] * vc[j] - uc[j] * vc[i]
            if c:
                out[(i + 1, j + 1)] = c
    return Wedge2(u.genus, out)


def _det3(a, b, c, p, q, r):
    # determinant of the 3x3 matrix with rows taken from columns a,b,c at
    # positions p,q,r (0-based)
    return (
        a[p] * (b[q] * c[r] - b[r] * c[q])
        - b[p] * (a[q] * c[r] - a[r] * c[q])
        + c[p] * (a[q] * b[r] - a[r] * b[q])
    )


def wedge3_of(u: HVector, v: HVector, w: HVector) -> Wedge3:
    """The integral product u ^ v ^ w; coefficients are 3x3 minors."""
    if not (u.genus == v.genus == w.genus):
        raise GenusMismatch("mixed genera in wedge3_of")
    n = 2 * u.genus
    uc, vc, wc = u.coeffs, v.coeffs, w.coeffs
    out = {}
    support = [i for i in range(n) if uc[i] or vc[i] or wc[i]]
    for p, q, r in itertools.combinations(support, 3):
        d = _det3(uc, vc, wc, p, q, r)
        if d:
            out[(p + 1, q + 1, r + 1)] = 2 * d
    return Wedge3(u.genus, out)


def kappa(y: HVector) -> Wedge2:
    """The half-integral marking homomorphism evaluated at y.

    kappa is linear with kappa(a_i) = (1/2) a_i^b_i and
    kappa(b_i) = -(1/2) a_i^b_i, i.e. kappa(x_i) = (1/2) x_i ^ C x_i.
    """
    g = y.genus
    out = {}
    for i in range(g):
        t = y.coeffs[i] - y.coeffs[i + g]
        if t:
            out[(i + 1, i + 1 + g)] = t
    return Wedge2(g, out)


class HomHW2:
    """Homomorphism H -> (1/2)W2(H), stored by the images of x_1..x_2g."""

    __slots__ = ("genus", "images")

    def __init__(self, images: Iterable[Wedge2]):
        images = tuple(images)
        if not images:
            raise ValueError("need 2g images")
        g = images[0].genus
        if len(images) != 2 * g or any(w.genus != g for w in images):
            raise GenusMismatch("need exactly 2g images of uniform genus")
        self.genus = g
        self.images = images

    @classmethod
    def zero(cls, genus: int) -> "HomHW2":
        return cls(tuple(Wedge2.zero(genus) for _ in range(2 * genus)))

    def image_of(self, n: int) -> Wedge2:
        """Value at the basis vector x_n (1-based)."""
        return self.images[n - 1]

    def evaluate(self, v: HVector) -> Wedge2:
        """Value at an arbitrary vector, by linearity."""
        if v.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {v.genus}")
        out = Wedge2.zero(self.genus)
        for c, img in zip(v.coeffs, self.images):
            if c:
                out = out + c * img
        return out

    def precompose(self, M: IntMatrix) -> "HomHW2":
        """The homomorphism m o M, i.e. x_n -> m(M x_n)."""
        if M.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {M.genus}")
        n = 2 * self.genus
        new = []
        for col in range(1, n + 1):
            acc = Wedge2.zero(self.genus)
            for i in range(1, n + 1):
                c = M.entry(i, col)
                if c:
                    acc = acc + c * self.images[i - 1]
            new.append(acc)
        return HomHW2(new)

    def _check(self, other):
        if not isinstance(other, HomHW2):
            raise TypeError(f"expected HomHW2, got {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __add__(self, other: "HomHW2") -> "HomHW2":
        self._check(other)
        return HomHW2(a + b for a, b in zip(self.images, other.images))

    def __sub__(self, other: "HomHW2") -> "HomHW2":
        self._check(other)
        return HomHW2(a - b for a, b in zip(self.images, other.images))

    def __neg__(self) -> "HomHW2":
        return HomHW2(-a for a in self.images)

    def is_zero(self) -> bool:
        return all(w.is_zero() for w in self.images)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomHW2)
            and self.genus == other.genus
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash(("HomHW2", self.images))

    def __repr__(self) -> str:
        g = self.genus
        body = ", ".join(
            f"{basis_label(i + 1, g)} -> {_fmt_terms(w._twice, g)}"
            for i, w in enumerate(self.images)
        )
        return f"HomHW2({body})"


def kappa_hom(genus: int) -> HomHW2:
    """kappa as a HomHW2: x_i -> (1/2) x_i ^ C x_i extended linearly."""
    return HomHW2(tuple(kappa(basis_vector(genus, i)) for i in range(1, 2 * genus + 1)))


def _j_contract(v: HVector):
    """Tuple t with t[k-1] = <v, x_k> = (Jv)_k for k = 1..2g."""
    g = v.genus
    return tuple(-v.coeffs[k + g] for k in range(g)) + tuple(
        v.coeffs[k] for k in range(g)
    )


def wedge3_apply(r: Wedge3, v: HVector) -> Wedge2:
    """Evaluate the homomorphism induced by r in W3(H) at the vector v."""
    if r.genus != v.genus:
        raise GenusMismatch(f"genus {r.genus} vs {v.genus}")
    jv = _j_contract(v)
    out = {}
    for (i, j, k), t in r._twice.items():
        ck = jv[k - 1]
        if ck:
            key = (i, j)
            out[key] = out.get(key, 0) + t * ck
        ci = jv[i - 1]
        if ci:
            key = (j, k)
            out[key] = out.get(key, 0) + t * ci
        cj = jv[j - 1]
        if cj:
            # x_k ^ x_i = -(x_i ^ x_k)
            key = (i, k)
            out[key] = out.get(key, 0) - t * cj
    return Wedge2(r.genus, out)


def wedge3_embed(r: Wedge3) -> HomHW2:
    """The embedding of (1/2)W3(H) into Hom(H, (1/2)W2(H))."""
    g = r.genus
    return HomHW2(
        tuple(wedge3_apply(r, basis_vector(g, n)) for n in range(1, 2 * g + 1))
    )


def wedge2_sp_action(R: IntMatrix, w: Wedge2) -> Wedge2:
    """R acting on W2(H): x_i ^ x_j -> (R x_i) ^ (R x_j), extended linearly."""
    if R.genus != w.genus:
        raise GenusMismatch(f"genus {R.genus} vs {w.genus}")
    n = 2 * w.genus
    out = {}
    for (i, j), t in w._twice.items():
        ci = R.col(i)
        cj = R.col(j)
        for p in range(n):
            for q in range(p + 1, n):
                c = ci[p] * cj[q] - ci[q] * cj[p]
                if c:
                    key = (p + 1, q + 1)
                    out[key] = out.get(key, 0) + t * c
    return Wedge2(w.genus, out)


def wedge3_sp_action(R: IntMatrix, r: Wedge3) -> Wedge3:
    """R acting on W3(H) by R(x_i^x_j^x_k) = Rx_i ^ Rx_j ^ Rx_k.

    This is the unique action making wedge3_embed equivariant with the
    conjugation action on Hom(H, (1/2)W2(H)).
    """
    if R.genus != r.genus:
        raise GenusMismatch(f"genus {R.genus} vs {r.genus}")
    n = 2 * r.genus
    cols = [R.col(j + 1) for j in range(n)]
    out = {}
    for (i, j, k), t in r._twice.items():
        ci, cj, ck = cols[i - 1], cols[j - 1], cols[k - 1]
        support = [p for p in range(n) if ci[p] or cj[p] or ck[p]]
        for p, q, s in itertools.combinations(support, 3):
            d = _det3(ci, cj, ck, p, q, s)
            if d:
                key = (p + 1, q + 1, s + 1)
                out[key] = out.get(key, 0) + t * d
    return Wedge3(r.genus, out)


def sp_action_on_hom(R: SymplecticMatrix, m: HomHW2) -> HomHW2:
    """The change-of-basis action (R m)(y) = R(m(R^-1 y)) on HomHW2."""
    if not isinstance(R, SymplecticMatrix):
        raise TypeError("sp_action_on_hom needs a SymplecticMatrix")
    if R.genus != m.genus:
        raise GenusMismatch(f"genus {R.genus} vs {m.genus}")
    pushed = HomHW2(tuple(wedge2_sp_action(R, w) for w in m.images))
    return pushed.precompose(R.inverse())


def _pairs(n):
    return list(itertools.combinations(range(1, n + 1), 2))


def _triples(n):
    return list(itertools.combinations(range(1, n + 1), 3))


def _fraction_inverse(M):
    """Gauss-Jordan inverse of a square Fraction matrix (raises on singular)."""
    n = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        inv = Fraction(1) / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


@lru_cache(maxsize=None)
def _decode_solver(genus: int):
    """Precompute an exact left inverse of the W3 embedding for this genus.

    Rows of the system are indexed by (basis vector n, pair (p, q)); columns
    by basis triples.  Entries are the integer coefficients of the embedding,
    in coefficient (not doubled) units.  Returns (triples, row_index, A, P)
    where P = (A~A)^-1 A~ over Fractions.
    """
    n = 2 * genus
    triples = _triples(n)
    pairs = _pairs(n)
    row_index = [(bv, pq) for bv in range(1, n + 1) for pq in pairs]
    if not triples:
        return triples, row_index, [], []
    cols = []
    for t in triples:
        h = wedge3_embed(Wedge3.basis(genus, *t))
        col = []
        for bv, (p, q) in row_index:
            tw = h.image_of(bv).twice(p, q)
            assert tw % 2 == 0
            col.append(tw // 2)
        cols.append(col)
    A = [[cols[c][r] for c in range(len(triples))] for r in range(len(row_index))]
    At = [[A[r][c] for r in range(len(row_index))] for c in range(len(triples))]
    AtA = [
        [Fraction(sum(x * y for x, y in zip(r1, r2))) for r2 in At] for r1 in At
    ]
    AtA_inv = _fraction_inverse(AtA)
    P = [
        [sum(AtA_inv[i][k] * At[k][j] for k in range(len(triples))) for j in range(len(row_index))]
        for i in range(len(triples))
    ]
    return triples, row_index, A, P


def wedge3_decode(m: HomHW2) -> Wedge3:
    """Exact left inverse of wedge3_embed.

    Solves the linear system over the rationals; raises NotInWedge3 when the
    system is inconsistent or the solution has a denominator not dividing 2.
    """
    genus = m.genus
    triples, row_index, A, P = _decode_solver(genus)
    vec = [m.image_of(bv).twice(p, q) for bv, (p, q) in row_index]
    if not triples:
        if any(vec):
            raise NotInWedge3("nonzero homomorphism but W3(H) is trivial at this genus")
        return Wedge3.zero(genus)
    # solution in doubled units: A (t/2) = vec/2  <=>  A t = vec
    t = []
    for row in P:
        val = sum(c * v for c, v in zip(row, vec) if v)
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise NotInWedge3("solution has denominator beyond 2")
            val = val.numerator
        t.append(int(val))
    for r, row in enumerate(A):
        if sum(c * x for c, x in zip(row, t)) != vec[r]:
            raise NotInWedge3("homomorphism is not in the image of W3(H)")
    return Wedge3(genus, {tr: tv for tr, tv in zip(triples, t) if tv})
