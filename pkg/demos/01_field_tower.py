"""Tour of the field tower layer: build F_p < F_q < F_{q^h}, do arithmetic.

Every element of F_{q^h} is a plain int packing e*h base-p digits in
little-endian order.  Run with:  python3 demos/01_field_tower.py
"""

from addmds import field_create

# 1. Build GF(9) as a degree-2 extension of GF(3).
f9 = field_create(p=3, e=1, h=2)
print("tower:", f9.descriptor())
print("size:", f9.size, " q:", f9.q)

# 2. Arithmetic.  Element 5 has digits [2, 1], i.e. 2 + 1*x.
a, b = 5, 7
print(f"digits of {a}:", f9.digits(a))
print(f"{a} + {b} =", f9.add(a, b))
print(f"{a} * {b} =", f9.mul(a, b))
print(f"{a}^-1   =", f9.inv(a), " check:", f9.mul(a, f9.inv(a)))

# 3. The multiplicative group is cyclic; omega generates it.
print("omega:", f9.omega)
print("powers:", [f9.pow_int(f9.omega, i) for i in range(8)])

# 4. Frobenius x -> x^q fixes exactly the subfield F_q.
for x in range(f9.size):
    assert (f9.frob(x, 1) == x) == f9.in_subfield(x, 1)
print("frobenius fixed field = F_3  (checked all 9 elements)")

# 5. Trace down to F_q and the dual basis pairing.
print("trace of omega:", f9.trace_to_fq(f9.omega))
print("dual basis of (1, x):", f9.dual_basis())

# coords() expands an element over the F_q-basis; it is F_q-linear
u, v = 4, 8
lhs = f9.coords(f9.add(u, v))
rhs = tuple(f9.add(x, y) for x, y in zip(f9.coords(u), f9.coords(v)))
print("coords additive:", lhs == rhs)

# 6. A proper tower: GF(16) over GF(4) over GF(2).
f16 = field_create(p=2, e=2, h=2)
print("\nGF(16) over GF(4):  q =", f16.q, " subfield elements:",
      [x for x in range(f16.size) if f16.in_subfield(x, 1)])
