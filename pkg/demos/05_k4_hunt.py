"""Hunting a k = 4 additive MDS code that is not equivalent to a linear one.

Over F_25 = F_5(s), start from the linear (6, 5^8) MDS matrix (I | 1 | a),
replace the last column's action on two rows by alpha and a non-semilinear
q-polynomial w = g(beta X), and keep only candidates passing an exact
elimination screen for the MDS property.  The verified example shows both
5-column projections are equivalent to linear codes while the full code is
not: linearity of all projections does not lift when n is small.
Run with:  python3 demos/05_k4_hunt.py
"""

import json

from addmds import (
    base_mds_matrix,
    example_to_dict,
    field_create,
    k4_example_search,
    mds_screen,
    nq_bounds,
    screen_conditions,
    verify_k4_example,
)

f25 = field_create(5, 1, 2)

# 1. The linear base: systematic Vandermonde, columns normalized.
base = base_mds_matrix(f25, k=4, n=6)
for row in base:
    print([f25.digits(x) for x in row])

# 2. The screen: each 3-subset of the first five columns forces either a
#    pair of forbidden scalars for w or a constraint on alpha alone.
lambda_pairs, alpha_constraints = screen_conditions(f25, base)
print("forbidden scalar pairs:", lambda_pairs)
print("alpha constraints:", len(alpha_constraints))

# 3. Lexicographic search over (alpha, beta, g).
example = k4_example_search(f25, n=6)
print("\nfound: alpha =", f25.digits(example.alpha),
      " beta =", f25.digits(example.beta),
      " g =", example.g.coeffs)
assert mds_screen(f25, base, example.alpha, example.beta, example.g)

# 4. Full verification: brute-force MDS over all 5^8 codewords, witness
#    searches for both projections, exhaustive negative for the full code.
report = verify_k4_example(example)
print("assertions:", json.dumps(report["assertions"], indent=2, sort_keys=True))
print("all hold:", report["ok"])

# 5. Context: the linearity-lifting threshold q^e + k = 9 exceeds n = 6,
#    so the example does not contradict the lifting theorem; it shows the
#    hypothesis on n is needed.
ctx = report["context"]
print("n =", ctx["n"], " threshold =", ctx["simplified_threshold_qe_plus_k"],
      " hypothesis met:", ctx["theorem_hypothesis_met"])
print("residual MDS length bounds n_q(k):", ctx["nq_bounds_residual"])

# 6. The example serializes for the CLI's verify-example verb.
blob = json.dumps(example_to_dict(example), sort_keys=True)
print("serialized bytes:", len(blob))
print("MDS length bound helper, n_q(k) at q=5, k=4:", nq_bounds(5, 4))
