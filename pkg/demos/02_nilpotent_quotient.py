"""
The two-step nilpotent quotient of the surface group
====================================================

The fundamental group of the one-boundary surface is free on
alpha_1..alpha_g, beta_1..beta_g.  Killing the second stage of its lower
central series leaves Phi_2: pairs (eta, y) with y in H and eta a
half-integer 2-form, multiplied by

    (eta, y)(nu, z) = (eta + nu + (1/2) y ^ z,  y + z).

Words map into Phi_2 by sending the k-th generator to (0, x_k).
"""

from jmrep import (
    FreeWord,
    Phi2Element,
    boundary_word,
    phi2_b_membership,
    phi2_eval_word,
    phi2_inv,
    phi2_mul,
    phi2_pi_membership,
    phi2_word_synthesis,
)

g = 2

# generators commute only up to a central 2-form
p = phi2_eval_word(FreeWord(g, [1]))        # alpha_1
q = phi2_eval_word(FreeWord(g, [3]))        # beta_1
comm = phi2_mul(phi2_mul(p, q), phi2_mul(phi2_inv(p), phi2_inv(q)))
print("image of [alpha_1, beta_1]:", comm)

# that central element is exactly what the boundary word evaluates to
bd = boundary_word(g)
print("boundary word:", bd)
print("phi_2(boundary):", phi2_eval_word(bd))

# not every pair (eta, y) comes from a word: the doubled eta-coefficients
# must match the parity of the products of the coordinates of y
inside = phi2_eval_word(FreeWord(g, [1, 3, 2, -3]))
print("\nevaluated point is a member:", phi2_pi_membership(inside))
shifted = Phi2Element(inside.eta, inside.y + inside.y)
print("same eta over doubled y:", phi2_pi_membership(shifted))

# membership is effective: a word mapping to any member can be written down
word = phi2_word_synthesis(inside)
print("resynthesized word:", word.letters)
print("round trip agrees:", phi2_eval_word(word) == inside)

# the handlebody kernel subgroup (loops that bound once the b-handles are
# filled) has a smaller image, cut out by integrality conditions
on_b = phi2_eval_word(FreeWord(g, [3, 4]))
print("\nbeta_1 beta_2 in the handlebody image:", phi2_b_membership(on_b))
print("alpha_1 in the handlebody image:", phi2_b_membership(p))
