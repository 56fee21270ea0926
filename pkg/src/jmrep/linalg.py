"""Exact integer linear algebra on the symplectic lattice H = Z^(2g).

H is the first homology of a genus-g surface with one boundary circle, with
symplectic basis a_1..a_g, b_1..b_g.  Throughout the package the basis is
also written x_1..x_2g with x_i = a_i and x_(i+g) = b_i, and every index
that appears in a public signature is 1-based to match that notation.

All arithmetic uses plain Python integers, so results are exact at any size.
The intersection pairing is <u, v> = v~ J u (v~ = transpose), which makes
<a_i, b_i> = +1 and gives the contraction identity <R x_n, x_k> = (JR)_kn.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import GenusMismatch, NotSymplectic


def _as_int_tuple(values: Iterable) -> tuple:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"expected an integer, got {v!r}")
        out.append(v)
    return tuple(out)


def basis_label(i: int, genus: int) -> str:
    """Name of the basis vector x_i: 'a1'..'ag' then 'b1'..'bg'."""
    if not 1 <= i <= 2 * genus:
        raise ValueError(f"basis index {i} out of range for genus {genus}")
    return f"a{i}" if i <= genus else f"b{i - genus}"


class HVector:
    """An element of H, stored as a tuple of 2g integer coordinates."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        coeffs = _as_int_tuple(coeffs)
        if len(coeffs) == 0 or len(coeffs) % 2:
            raise ValueError("coordinate length must be 2g for some g >= 1")
        self.coeffs = coeffs

    @property
    def genus(self) -> int:
        return len(self.coeffs) // 2

    def coeff(self, i: int) -> int:
        """Coordinate along x_i (1-based)."""
        if not 1 <= i <= len(self.coeffs):
            raise ValueError(f"index {i} out of range")
        return self.coeffs[i - 1]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "HVector") -> None:
        if not isinstance(other, HVector):
            raise TypeError(f"expected HVector, got {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __add__(self, other: "HVector") -> "HVector":
        self._check(other)
        return HVector(x + y for x, y in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "HVector") -> "HVector":
        self._check(other)
        return HVector(x - y for x, y in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "HVector":
        return HVector(-x for x in self.coeffs)

    def __rmul__(self, n: int) -> "HVector":
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return HVector(n * x for x in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, HVector) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("HVector", self.coeffs))

    def __repr__(self) -> str:
        g = self.genus
        terms = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            lbl = basis_label(i, g)
            if c == 1:
                terms.append(f"+{lbl}")
            elif c == -1:
                terms.append(f"-{lbl}")
            else:
                terms.append(f"{c:+d}*{lbl}")
        body = " ".join(terms) if terms else "0"
        return f"HVector({body})"


def zero_vector(genus: int) -> HVector:
    return HVector((0,) * (2 * genus))


def basis_vector(genus: int, i: int) -> HVector:
    """The basis vector x_i of H (1-based)."""
    if not 1 <= i <= 2 * genus:
        raise ValueError(f"basis index {i} out of range for genus {genus}")
    return HVector(tuple(1 if k == i else 0 for k in range(1, 2 * genus + 1)))


class IntMatrix:
    """A square integer matrix of even dimension 2g, acting on column vectors."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(_as_int_tuple(row) for row in rows)
        n = len(rows)
        if n == 0 or n % 2:
            raise ValueError("dimension must be 2g for some g >= 1")
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def genus(self) -> int:
        return len(self.rows) // 2

    @classmethod
    def identity(cls, genus: int):
        n = 2 * genus
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        """Entry in row i, column j (1-based)."""
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        return self.rows[i - 1]

    def col(self, j: int) -> tuple:
        return tuple(row[j - 1] for row in self.rows)

    def column_vector(self, j: int) -> HVector:
        """Column j as an element of H, i.e. the image of x_j."""
        return HVector(self.col(j))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            if other.dim != self.dim:
                raise GenusMismatch(f"dimension {self.dim} vs {other.dim}")
            cols = tuple(zip(*other.rows))
            rows = tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
            if isinstance(self, SymplecticMatrix) and isinstance(other, SymplecticMatrix):
                return SymplecticMatrix(rows)
            return IntMatrix(rows)
        if isinstance(other, HVector):
            if other.genus != self.genus:
                raise GenusMismatch(f"genus {self.genus} vs {other.genus}")
            return HVector(
                sum(a * b for a, b in zip(row, other.coeffs)) for row in self.rows
            )
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("IntMatrix", self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"{type(self).__name__}([{body}])"


def make_J(genus: int) -> IntMatrix:
    """The intersection-form matrix with g x g blocks (0 -I; I 0)."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(genus):
        rows[i][i + genus] = -1
        rows[i + genus][i] = 1
    return IntMatrix(rows)


def make_C(genus: int) -> IntMatrix:
    """The handle-swap involution with blocks (0 I; I 0): a_i <-> b_i."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(genus):
        rows[i][i + genus] = 1
        rows[i + genus][i] = 1
    return IntMatrix(rows)


def symplectic_check(M: IntMatrix) -> bool:
    """True iff M J M~ = J, i.e. M preserves the intersection pairing."""
    J = make_J(M.genus)
    return M * J * M.transpose() == J


class SymplecticMatrix(IntMatrix):
    """An IntMatrix verified to satisfy M J M~ = J at construction time."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        if not symplectic_check(self):
            raise NotSymplectic("matrix fails M J M~ = J")

    def inverse(self) -> "SymplecticMatrix":
        return symplectic_inverse(self)


def symplectic_inverse(M: SymplecticMatrix) -> SymplecticMatrix:
    """Exact inverse via M^-1 = J M~ J^-1, with J^-1 = -J."""
    if not isinstance(M, SymplecticMatrix):
        raise NotSymplectic("symplectic_inverse needs a SymplecticMatrix")
    J = make_J(M.genus)
    return SymplecticMatrix((-(J * M.transpose() * J)).rows)


class BlockConstraints(NamedTuple):
    """Report on the three g x g block identities of a symplectic matrix.

    Writing M = (S T; P Q):  (i) Q S~ - P T~ = I, (ii) S T~ symmetric,
    (iii) P Q~ symmetric.
    """

    qs_minus_pt_identity: bool
    st_symmetric: bool
    pq_symmetric: bool

    def all_hold(self) -> bool:
        return self.qs_minus_pt_identity and self.st_symmetric and self.pq_symmetric


def _blk_mul_t(A, B):
    # A @ B~ for g x g blocks given as tuples of rows
    return tuple(
        tuple(sum(a * b for a, b in zip(ra, rb)) for rb in B) for ra in A
    )


def _blk_symmetric(A) -> bool:
    n = len(A)
    return all(A[i][j] == A[j][i] for i in range(n) for j in range(n))


def block_constraints(M: SymplecticMatrix) -> BlockConstraints:
    """Evaluate the block identities (i)-(iii) for a symplectic matrix."""
    g = M.genus
    S = tuple(row[:g] for row in M.rows[:g])
    T = tuple(row[g:] for row in M.rows[:g])
    P = tuple(row[:g] for row in M.rows[g:])
    Q = tuple(row[g:] for row in M.rows[g:])
    QSt = _blk_mul_t(Q, S)
    PTt = _blk_mul_t(P, T)
    diff = tuple(
        tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(QSt, PTt)
    )
    ident = all(
        diff[i][j] == (1 if i == j else 0) for i in range(g) for j in range(g)
    )
    return BlockConstraints(
        qs_minus_pt_identity=ident,
        st_symmetric=_blk_symmetric(_blk_mul_t(S, T)),
        pq_symmetric=_blk_symmetric(_blk_mul_t(P, Q)),
    )


def pairing(u: HVector, v: HVector) -> int:
    """Intersection pairing <u, v> = v~ J u; <a_i, b_i> = +1."""
    if u.genus != v.genus:
        raise GenusMismatch(f"genus {u.genus} vs {v.genus}")
    g = u.genus
    uc, vc = u.coeffs, v.coeffs
    return sum(uc[i] * vc[i + g] - uc[i + g] * vc[i] for i in range(g))


def triple_dot(w, y, z) -> int:
    """Coordinatewise triple product sum_i w_i y_i z_i of three sequences."""
    if len(w) != len(y) or len(y) != len(z):
        raise ValueError("triple_dot needs sequences of equal length")
    return sum(a * b * c for a, b, c in zip(w, y, z))


def transvection(v: HVector) -> SymplecticMatrix:
    """The symplectic transvection x -> x + <x, v> v along v."""
    n = 2 * v.genus
    g = v.genus
    # row vector v~J: (v~J)_j = sum_k v_k J_kj; J has -I upper right, I lower left
    vJ = tuple(
        v.coeffs[j + g] if j < g else -v.coeffs[j - g] for j in range(n)
    )
    rows = tuple(
        tuple((1 if i == j else 0) + v.coeffs[i] * vJ[j] for j in range(n))
        for i in range(n)
    )
    return SymplecticMatrix(rows)
