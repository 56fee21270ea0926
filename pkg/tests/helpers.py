"""Seeded random generators shared across the test modules.

Every function takes an explicit random.Random so failures reproduce from the
seed in the calling test.
"""

import itertools

from jmrep import (
    EndomorphismSpec,
    FreeWord,
    HVector,
    Phi2Element,
    Rho2Element,
    SymplecticMatrix,
    Wedge2,
    Wedge3,
    WordLengthExceeded,
    canonical_lift,
    catalog,
    endo_compose,
    phi2_eval_word,
    transvection,
)

WORD_GUARD = 10_000


def rand_vector(rng, g, bound=3):
    return HVector(tuple(rng.randint(-bound, bound) for _ in range(2 * g)))


def rand_nonzero_vector(rng, g, bound=2):
    while True:
        v = rand_vector(rng, g, bound)
        if any(v.coeffs):
            return v


def rand_wedge2(rng, g, bound=4):
    pairs = list(itertools.combinations(range(1, 2 * g + 1), 2))
    return Wedge2(g, {p: rng.randint(-bound, bound) for p in pairs})


def rand_wedge3(rng, g, bound=4):
    triples = list(itertools.combinations(range(1, 2 * g + 1), 3))
    return Wedge3(g, {t: rng.randint(-bound, bound) for t in triples})


def rand_integral_wedge3(rng, g, bound=3):
    triples = list(itertools.combinations(range(1, 2 * g + 1), 3))
    return Wedge3(g, {t: 2 * rng.randint(-bound, bound) for t in triples})


def rand_transvection(rng, g, bound=1):
    return transvection(rand_nonzero_vector(rng, g, bound))


def rand_symplectic(rng, g, length=8):
    M = SymplecticMatrix.identity(g)
    for _ in range(rng.randint(1, length)):
        M = M * rand_transvection(rng, g)
    return M


def rand_word(rng, g, max_len=12):
    letters = [s for s in range(-2 * g, 2 * g + 1) if s != 0]
    return FreeWord(g, [rng.choice(letters) for _ in range(rng.randint(0, max_len))])


def catalog_specs(g):
    out = []
    for entry in catalog(g):
        out.append(entry.spec)
        out.append(entry.inverse_spec)
    return out


def rand_catalog_product(rng, g, specs=None, max_factors=8):
    """Random product of catalog automorphisms, redrawn if the word-length
    guard trips."""
    if specs is None:
        specs = catalog_specs(g)
    while True:
        try:
            e = EndomorphismSpec.identity(g)
            for _ in range(rng.randint(1, max_factors)):
                e = endo_compose(rng.choice(specs), e, max_letters=WORD_GUARD)
            return e
        except WordLengthExceeded:
            continue


def rand_member(rng, g, R=None, bound=3):
    """Random element satisfying the parity congruences: canonical lift
    shifted by an integral wedge."""
    if R is None:
        R = rand_symplectic(rng, g)
    lift = canonical_lift(R)
    return Rho2Element(lift.r + rand_integral_wedge3(rng, g, bound), R)


def rand_pi_point(rng, g, max_len=12):
    return phi2_eval_word(rand_word(rng, g, max_len))


def rand_phi2(rng, g, bound=3):
    return Phi2Element(rand_wedge2(rng, g, bound), rand_vector(rng, g, bound))
