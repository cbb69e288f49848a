"""Independent reimplementations used to cross-check the library.

Everything here is written naively from definitions: dense polynomial
arithmetic over F_p for field operations, pointwise map comparison for
conjugacy triples, and plain subset enumeration for matchings.  Slow on
purpose; tests only feed it small inputs.
"""

from itertools import combinations, product


# ---------------------------------------------------------------------------
# F_p[x] arithmetic on digit lists (index = degree)

def poly_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def poly_add(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim([(x + y) % p for x, y in zip(a, b)])


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) > dm:
        c = (a[-1] * lead_inv) % p
        shift = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % p
        a = poly_trim(a)
        if not a:
            break
    return a


def unpack(x, p, d):
    digs = []
    for _ in range(d):
        digs.append(x % p)
        x //= p
    return digs


def pack(digs, p):
    x = 0
    for c in reversed(digs):
        x = x * p + c
    return x


def field_mul(x, y, modulus_digits, p):
    d = len(modulus_digits) - 1
    prod = poly_mod(poly_mul(unpack(x, p, d), unpack(y, p, d), p),
                    list(modulus_digits), p)
    return pack(prod + [0] * (d - len(prod)), p)


def field_add(x, y, p, d):
    return pack([(a + b) % p for a, b in zip(unpack(x, p, d), unpack(y, p, d))], p)


# ---------------------------------------------------------------------------
# linearized maps evaluated from the definition

def lin_eval(tower, coeffs, x):
    acc = 0
    for i, c in enumerate(coeffs):
        if c:
            acc = tower.add(acc, tower.mul(c, tower.pow_int(x, tower.q ** i)))
    return acc


def maps_equal(tower, coeffs_a, coeffs_b):
    return all(lin_eval(tower, coeffs_a, x) == lin_eval(tower, coeffs_b, x)
               for x in tower.elements())


def is_bijective(tower, coeffs):
    seen = {lin_eval(tower, coeffs, x) for x in tower.elements()}
    return len(seen) == tower.size


# ---------------------------------------------------------------------------
# codes by brute force

def brute_codewords(code):
    t = code.tower
    words = []
    for combo in product(t.fq_elements, repeat=code.k_fq):
        w = [0] * code.n
        for c, row in zip(combo, code.gen):
            if c:
                for j in range(code.n):
                    if row[j]:
                        w[j] = t.add(w[j], t.mul(c, row[j]))
        words.append(tuple(w))
    return words


def brute_min_distance(code):
    best = None
    for w in brute_codewords(code):
        wt = sum(1 for x in w if x)
        if wt and (best is None or wt < best):
            best = wt
    return best


# ---------------------------------------------------------------------------
# conjugacy triples by pointwise comparison

def brute_triples(tower, f_coeffs, g_coeffs, f_inv_coeffs, g_inv_coeffs):
    out = []
    for a in tower.nonzero():
        for b in tower.nonzero():
            for c in tower.nonzero():
                ok = True
                for x in tower.elements():
                    lhs = tower.mul(a, lin_eval(tower, f_coeffs,
                                    tower.mul(b, lin_eval(tower, f_inv_coeffs, x))))
                    rhs = lin_eval(tower, g_coeffs,
                                   tower.mul(c, lin_eval(tower, g_inv_coeffs, x)))
                    if lhs != rhs:
                        ok = False
                        break
                if ok:
                    out.append((a, b, c))
    return out


def brute_max_matching(triples):
    best = 0
    for r in range(len(triples), 0, -1):
        if r <= best:
            break
        for sub in combinations(triples, r):
            if (len({t[0] for t in sub}) == r
                    and len({t[1] for t in sub}) == r
                    and len({t[2] for t in sub}) == r):
                best = r
                break
        if best:
            break
    return best
