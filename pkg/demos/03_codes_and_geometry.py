"""Additive MDS codes, equivalence moves, and their projective geometry.

An additive code over F_{q^h} is an F_q-subspace of F_{q^h}^n.  Its
generator rows expand to an F_q-linear code of dimension k_fq = h*k, and
the column blocks of that expansion form a projective h-system whose
hyperplane geometry computes the minimum distance without enumerating
codewords.  Run with:  python3 demos/03_codes_and_geometry.py
"""

import random

from addmds import (
    apply_move,
    field_create,
    is_mds,
    is_pseudo_arc,
    linear_equivalence_witness,
    min_distance,
    project,
    random_move,
    rs_code,
    system_from_code,
    system_min_distance,
    to_standard_form,
)

f4 = field_create(2, 1, 2)

# 1. The length-(q^h + 1) RS-style code: k message symbols, evaluations at
#    every field element plus a point at infinity.
code = rs_code(f4, k=2)
print("code:", code)
print("n =", code.n, " F_2-dimension =", code.k_fq,
      " codewords =", 4 ** 2 ** 1)  # q^(hk)
d = min_distance(code)
print("d =", d, " MDS:", is_mds(code), " singleton:", code.n - 2 + 1)

# 2. Shortening at a position drops n and k by one and stays MDS.
short = project(code, (0,))
print("shortened:", short.n, min_distance(short), is_mds(short))

# 3. Equivalence moves: a column permutation plus one invertible
#    F_q-linear map per position.
rng = random.Random(7)
move = random_move(f4, code.n, rng)
scrambled = apply_move(code, move)
print("scrambled distance:", min_distance(scrambled))

# standard form re-interpolates so the last row and first column maps are
# the identity; the move that achieves it is returned and checked
std, std_move = to_standard_form(scrambled)
print("standard form reproduced by move:",
      apply_move(scrambled, std_move) == std)

# 4. The scrambled code is still equivalent to a linear one; the witness
#    search proves it and hands back the move that linearizes.
wit = linear_equivalence_witness(scrambled)
print("witness g:", wit.g.coeffs)
linearized = apply_move(scrambled, wit.linearizing_move())
print("after witness move, field-linear:", linearized.is_field_linear())

# 5. Geometry: blocks of the h-system are (h-1)-spaces in PG(kh-1, q).
system = system_from_code(code)
print("\nsystem:", system)
print("pseudo-arc (any k blocks span):", is_pseudo_arc(system))
print("hyperplane distance == Hamming distance:",
      system_min_distance(system) == d)

# the same bridge holds for the scrambled code
assert system_min_distance(system_from_code(scrambled)) == d
print("bridge survives equivalence moves: True")
