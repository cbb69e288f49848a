"""Linearized polynomials: the F_q-linear maps on F_{q^h} in closed form.

A q-polynomial sum f_i X^(q^i) evaluates to an F_q-linear map.  Its h x h
Dickson matrix turns composition into matrix product, so invertibility is
a determinant test.  Run with:  python3 demos/02_linearized_maps.py
"""

import random

from addmds import LinearizedPoly, field_create, invertible_linearized
from addmds import linalg

f9 = field_create(3, 1, 2)

# 1. Build f(X) = 4X + X^3 over GF(9) and evaluate it.
#    (4 is a primitive element, so the two coefficient norms differ and
#    the map is invertible; 2X + X^3 would be singular.)
f = LinearizedPoly(f9, (4, 1))
print("f coeffs:", f.coeffs, " f(5) =", f(5))
print("linear over F_3:", all(
    f(f9.add(x, y)) == f9.add(f(x), f(y))
    for x in range(9) for y in range(9)))

# 2. Dickson matrix and the three equivalent invertibility tests.
print("dickson:", f.dickson())
print("det nonzero:", f.dickson_det() != 0,
      " is_invertible:", f.is_invertible(),
      " bijective:", len({f(x) for x in range(9)}) == 9)

# 3. Composition is matrix multiplication on the Dickson side.
g = LinearizedPoly(f9, (1, 4))
lhs = f.compose(g).dickson()
rhs = linalg.mat_mul(f9, f.dickson(), g.dickson())
print("M_{fog} == M_f M_g:", lhs == rhs)

# 4. Inverse map, still a q-polynomial.
finv = f.inverse()
print("f^-1 coeffs:", finv.coeffs,
      " f(f^-1(x)) == x:", all(f(finv(x)) == x for x in range(9)))

# 5. There are (q^h - 1)(q^h - q) invertible maps for h = 2.
inv = invertible_linearized(f9)
print("invertible maps over GF(9):", len(inv))

# 6. Semilinearity: f(ax) = a^sigma f(x) happens iff the coefficient
#    support sits in one residue class mod the subfield degree.
mono = LinearizedPoly.monomial(f9, 1, f9.omega)
print("monomial semilinear over F_9:", mono.is_semilinear(2))
dense = random.Random(0).choice([p for p in inv if p.zero_coeff_count() == 0])
print("dense map semilinear over F_9:", dense.is_semilinear(2))

# 7. Interpolation: any images of a basis extend to a unique q-polynomial.
values = [f(w) for w in f9.omega_powers]
print("interpolation recovers f:", LinearizedPoly.from_values(f9, values) == f)
