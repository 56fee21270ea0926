"""Words and endomorphisms of the free group pi_1 of a one-boundary surface.

pi_1(S_{g,1}) is free on 2g generators, written xi_1..xi_2g where
xi_i = alpha_i and xi_(i+g) = beta_i.  A word is a sequence of nonzero
letters in {-2g..-1, 1..2g}; a positive letter k is the generator xi_k
and -k its inverse.  Words are stored as given; reduction is explicit.

The distinguished boundary word is the product of commutators
[alpha_1, beta_1] ... [alpha_g, beta_g]; an endomorphism spec that fixes
it exactly (up to free reduction) is the action of a mapping class.
"""

from __future__ import annotations

from typing import Iterable

from .errors import GenusMismatch, WordLengthExceeded
from .linalg import HVector, IntMatrix


def _check_letters(genus: int, letters) -> tuple:
    n = 2 * genus
    out = []
    for s in letters:
        if isinstance(s, bool) or not isinstance(s, int) or s == 0 or abs(s) > n:
            raise ValueError(f"letter {s!r} out of range for genus {genus}")
        out.append(s)
    return tuple(out)


class FreeWord:
    """A word in the free group on xi_1..xi_2g, possibly unreduced."""

    __slots__ = ("genus", "letters")

    def __init__(self, genus: int, letters: Iterable[int] = ()):
        if genus < 1:
            raise ValueError("genus must be >= 1")
        self.genus = genus
        self.letters = _check_letters(genus, letters)

    @classmethod
    def identity(cls, genus: int) -> "FreeWord":
        return cls(genus)

    @classmethod
    def generator(cls, genus: int, k: int) -> "FreeWord":
        return cls(genus, (k,))

    def __len__(self) -> int:
        return len(self.letters)

    def _check(self, other):
        if not isinstance(other, FreeWord):
            raise TypeError(f"expected FreeWord, got {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        """Concatenation (no reduction)."""
        self._check(other)
        return FreeWord(self.genus, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.genus, tuple(-s for s in reversed(self.letters)))

    def reduced(self) -> "FreeWord":
        return word_reduce(self)

    def is_reduced(self) -> bool:
        return all(
            self.letters[i] != -self.letters[i + 1]
            for i in range(len(self.letters) - 1)
        )

    def abelianization(self) -> HVector:
        """Exponent-sum vector in H."""
        counts = [0] * (2 * self.genus)
        for s in self.letters:
            counts[abs(s) - 1] += 1 if s > 0 else -1
        return HVector(counts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeWord)
            and self.genus == other.genus
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash(("FreeWord", self.genus, self.letters))

    def __repr__(self) -> str:
        if not self.letters:
            return f"FreeWord(g={self.genus}: 1)"
        body = " ".join(
            f"x{s}" if s > 0 else f"x{-s}^-1" for s in self.letters
        )
        return f"FreeWord(g={self.genus}: {body})"


def word_reduce(w: FreeWord) -> FreeWord:
    """Free reduction: cancel adjacent inverse pairs until none remain."""
    stack = []
    for s in w.letters:
        if stack and stack[-1] == -s:
            stack.pop()
        else:
            stack.append(s)
    return FreeWord(w.genus, stack)


class EndomorphismSpec:
    """An endomorphism of the free group, given by the images of xi_1..xi_2g."""

    __slots__ = ("genus", "images")

    def __init__(self, genus: int, images: Iterable[FreeWord]):
        images = tuple(images)
        if len(images) != 2 * genus:
            raise ValueError(f"need exactly {2 * genus} images, got {len(images)}")
        for w in images:
            if not isinstance(w, FreeWord):
                raise TypeError("images must be FreeWord instances")
            if w.genus != genus:
                raise GenusMismatch(f"genus {genus} vs image genus {w.genus}")
        self.genus = genus
        self.images = images

    @classmethod
    def identity(cls, genus: int) -> "EndomorphismSpec":
        return cls(genus, tuple(FreeWord.generator(genus, k) for k in range(1, 2 * genus + 1)))

    @classmethod
    def from_letter_lists(cls, genus: int, lists) -> "EndomorphismSpec":
        return cls(genus, tuple(FreeWord(genus, ls) for ls in lists))

    def __call__(self, w: FreeWord, max_letters: int | None = None) -> FreeWord:
        return endo_apply(self, w, max_letters=max_letters)

    def abelianization(self) -> IntMatrix:
        """The induced matrix on H; column n is the exponent sum of images[n]."""
        cols = [w.abelianization().coeffs for w in self.images]
        n = 2 * self.genus
        return IntMatrix(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    def is_identity(self) -> bool:
        return all(
            word_reduce(w).letters == (k,)
            for k, w in enumerate(self.images, start=1)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EndomorphismSpec)
            and self.genus == other.genus
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash(("EndomorphismSpec", self.genus, self.images))

    def __repr__(self) -> str:
        body = ", ".join(
            f"x{k} -> {' '.join(str(s) for s in w.letters) or '1'}"
            for k, w in enumerate(self.images, start=1)
        )
        return f"EndomorphismSpec(g={self.genus}: {body})"


def endo_apply(e: EndomorphismSpec, w: FreeWord, max_letters: int | None = None) -> FreeWord:
    """Apply the substitution to a word and freely reduce the result.

    Cancellation happens on the fly; if the partial result ever exceeds
    max_letters the function raises WordLengthExceeded.
    """
    if e.genus != w.genus:
        raise GenusMismatch(f"genus {e.genus} vs {w.genus}")
    stack = []
    for s in w.letters:
        img = e.images[abs(s) - 1].letters
        it = img if s > 0 else tuple(-t for t in reversed(img))
        for t in it:
            if stack and stack[-1] == -t:
                stack.pop()
            else:
                stack.append(t)
        if max_letters is not None and len(stack) > max_letters:
            raise WordLengthExceeded(
                f"substitution exceeded {max_letters} letters"
            )
    return FreeWord(w.genus, stack)


def endo_compose(e1: EndomorphismSpec, e2: EndomorphismSpec,
                 max_letters: int | None = None) -> EndomorphismSpec:
    """The composite 'apply e2 first, then e1'.

    Its images are endo_apply(e1, e2.images[n]), matching the convention
    that matrices act on column vectors on the left.
    """
    if e1.genus != e2.genus:
        raise GenusMismatch(f"genus {e1.genus} vs {e2.genus}")
    return EndomorphismSpec(
        e1.genus,
        tuple(endo_apply(e1, w, max_letters=max_letters) for w in e2.images),
    )


def boundary_word(genus: int) -> FreeWord:
    """The boundary circle [alpha_1, beta_1] ... [alpha_g, beta_g]."""
    letters = []
    for i in range(1, genus + 1):
        letters += [i, i + genus, -i, -(i + genus)]
    return FreeWord(genus, letters)
