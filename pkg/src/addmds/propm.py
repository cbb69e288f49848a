"""Conjugation-triple machinery for pairs of invertible linearized polynomials.

For invertible f, g and nonzero field elements b, c write

    conj(f, b) = f(b f^{-1}(X)),   conj(g, c) = g(c g^{-1}(X)).

A *triple* (a, b, c) for the pair (f, g) is one with a*conj(f, b) = conj(g, c)
as polynomials.  The pair's *score* m is the largest number of triples that
are pairwise distinct in every coordinate; (1,1,1) is always a triple, so
m >= 1, and m <= q^h - 1 since the a-values are distinct and nonzero.

The score controls when interpolation maps of an additive MDS code force
linearity, which is why this module ships exhaustive verifiers for the
supporting facts: the inverse-pair transfer, the zero-coefficient count
equality (with its matrix-identity certificate), the dense-inverse property
of two-term polynomials, and the score-threshold-implies-monomial check.
All verifiers enumerate complete small towers and return JSON-ready
reports; none of them sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .errors import BudgetExceeded, NotInvertible
from .linpoly import LinearizedPoly, invertible_linearized

DEFAULT_TRIPLE_BUDGET = 1 << 22

_BUCKET_CACHE = {}
_SCORE_CACHE = {}


def _conj_buckets(f: LinearizedPoly):
    """Map: normalized conj(f,b) coefficient vector -> list of (b, leading coeff).

    Normalization divides by the first nonzero coefficient, so two
    conjugates are proportional iff they share a bucket key.
    """
    t = f.tower
    key = (t.key, f.coeffs)
    hit = _BUCKET_CACHE.get(key)
    if hit is not None:
        return hit
    finv = f.inverse()
    buckets = {}
    for b in t.nonzero():
        u = f.compose(LinearizedPoly.scalar(t, b)).compose(finv)
        lead = next(c for c in u.coeffs if c)
        lead_inv = t.inv(lead)
        norm = tuple(t.mul(lead_inv, c) for c in u.coeffs)
        buckets.setdefault(norm, []).append((b, lead))
    _BUCKET_CACHE[key] = buckets
    return buckets


def prop_triples(f: LinearizedPoly, g: LinearizedPoly):
    """All (a, b, c) in (F_{q^h}*)^3 with a*conj(f,b) = conj(g,c), sorted by (b, c)."""
    if not f.is_invertible() or not g.is_invertible():
        raise NotInvertible("triples are defined for invertible pairs only")
    t = f.tower
    bf = _conj_buckets(f)
    bg = _conj_buckets(g)
    out = []
    for norm, blist in bf.items():
        clist = bg.get(norm)
        if not clist:
            continue
        for b, lb in blist:
            lb_inv = t.inv(lb)
            for c, lc in clist:
                out.append((t.mul(lc, lb_inv), b, c))
    out.sort(key=lambda x: (x[1], x[2]))
    return out


# ---------------------------------------------------------------------------
# exact maximum matching

def _exact_matching(levels, stop_at=None):
    """Largest set picking at most one (a, c) per level, all a and c distinct.

    levels: list of (b, [(a, c), ...]).  Exact depth-first search with a
    greedy warm start and a remaining-levels bound; optionally stops as soon
    as ``stop_at`` is reached (the returned size is then a lower bound).
    """
    order = sorted(range(len(levels)), key=lambda i: (len(levels[i][1]), levels[i][0]))
    used_a, used_c = set(), set()
    greedy = []
    for i in order:
        b, opts = levels[i]
        for a, c in opts:
            if a not in used_a and c not in used_c:
                greedy.append((a, b, c))
                used_a.add(a)
                used_c.add(c)
                break
    best = greedy
    if stop_at is not None and len(best) >= stop_at:
        return best

    chosen = []
    used_a, used_c = set(), set()

    def dfs(pos):
        nonlocal best
        if stop_at is not None and len(best) >= stop_at:
            return
        if len(chosen) > len(best):
            best = list(chosen)
        if pos == len(order) or len(chosen) + len(order) - pos <= len(best):
            return
        b, opts = levels[order[pos]]
        for a, c in opts:
            if a in used_a or c in used_c:
                continue
            chosen.append((a, b, c))
            used_a.add(a)
            used_c.add(c)
            dfs(pos + 1)
            chosen.pop()
            used_a.discard(a)
            used_c.discard(c)
        dfs(pos + 1)  # skip this level

    dfs(0)
    return best


def _levels_from_triples(triples):
    by_b = {}
    for a, b, c in triples:
        by_b.setdefault(b, []).append((a, c))
    return sorted(by_b.items())


def _score(f, g, stop_at=None, budget=None):
    """(m or lower bound, witness triples); exact when stop_at is None."""
    triples = prop_triples(f, g)
    cap = DEFAULT_TRIPLE_BUDGET if budget is None else budget
    if len(triples) > cap:
        raise BudgetExceeded(f"{len(triples)} candidate triples exceed budget {cap}")
    key = (f.tower.key, f.coeffs, g.coeffs)
    if stop_at is None and key in _SCORE_CACHE:
        return _SCORE_CACHE[key]
    found = _exact_matching(_levels_from_triples(triples), stop_at)
    result = (len(found), sorted(found, key=lambda x: (x[1], x[2])))
    if stop_at is None:
        _SCORE_CACHE[key] = result
    return result


@dataclass(frozen=True)
class PropWitness:
    f: LinearizedPoly
    g: LinearizedPoly
    triples: tuple

    def __post_init__(self):
        t = self.f.tower
        finv, ginv = self.f.inverse(), self.g.inverse()
        for idx, (a, b, c) in enumerate(self.triples):
            if not (a and b and c):
                raise ValueError("triples must have nonzero entries")
            lhs = self.f.compose(LinearizedPoly.scalar(t, b)).compose(finv).scale(a)
            rhs = self.g.compose(LinearizedPoly.scalar(t, c)).compose(ginv)
            if lhs != rhs:
                raise ValueError(f"triple {idx} fails the defining identity")
        for i, j in combinations(range(len(self.triples)), 2):
            ti, tj = self.triples[i], self.triples[j]
            if ti[0] == tj[0] or ti[1] == tj[1] or ti[2] == tj[2]:
                raise ValueError("triples share a coordinate value")
        one = (1, 1, 1)
        if one in self.triples and self.triples[0] != one:
            raise ValueError("(1,1,1) must come first when present")


def max_prop_m(f: LinearizedPoly, g: LinearizedPoly, budget: int | None = None):
    """Exact maximum score m and an optimal witness.

    When some optimum contains the guaranteed triple (1,1,1) the returned
    witness does, listed first.
    """
    m, picked = _score(f, g, budget=budget)
    one = (1, 1, 1)
    if one not in picked:
        # retry with (1,1,1) forced: drop its level, ban a = 1 and c = 1
        triples = [tr for tr in prop_triples(f, g)
                   if tr[1] != 1 and tr[0] != 1 and tr[2] != 1]
        forced = _exact_matching(_levels_from_triples(triples))
        if 1 + len(forced) >= m:
            m = 1 + len(forced)
            picked = [one] + sorted(forced, key=lambda x: (x[1], x[2]))
    else:
        picked = [one] + [tr for tr in picked if tr != one]
    return m, PropWitness(f, g, tuple(picked))


# ---------------------------------------------------------------------------
# normalization (nonzero constant coefficient)

def twist_to_nonzero_f0(f: LinearizedPoly):
    """(f composed with X^{q^e}, e) with the result's coefficient 0 nonzero.

    Triples transform as (a, b, c) -> (a, b^{q^{h-e}}, c) when f is twisted,
    so scores and zero-coefficient counts are unchanged.
    """
    e = min((f.tower.h - i) % f.tower.h for i in f.support())
    return f.frobenius_twist(e), e


# ---------------------------------------------------------------------------
# certificate for the zero-coefficient-count fact

def _minor_no_top_left(m):
    return [row[1:] for row in m[1:]]


def shift_minus_one_matrix(tower, size):
    """First column all -1, ones on the shifted diagonal; B^frobenius = L*B."""
    minus1 = tower.neg(1)
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        out[i][0] = minus1
        if i + 1 < size:
            out[i][i + 1] = 1
    return out


@dataclass(frozen=True)
class ZeroCoeffCertificate:
    """Matrix identity satisfied by every triple of a normalized pair.

    With Mhat_f the transposed-inverse-Dickson minor (top row and first
    column removed), D_f = diag(f_1..f_{h-1}) and B_j the vector
    (b_j^{q^i} - b_j) for i = 1..h-1, every triple satisfies
    a_j * Mhat_f * D_f * B_j = Mhat_g * D_g * C_j, and B_j's entrywise
    q-th power equals L * B_j.
    """
    f: LinearizedPoly
    g: LinearizedPoly
    triples: tuple
    mf_hat: tuple
    mg_hat: tuple
    df: tuple
    dg: tuple
    bs: tuple
    cs: tuple
    lmat: tuple

    def validate(self) -> bool:
        t = self.f.tower
        mfdf = linalg.mat_mul(t, [list(r) for r in self.mf_hat], [list(r) for r in self.df])
        mgdg = linalg.mat_mul(t, [list(r) for r in self.mg_hat], [list(r) for r in self.dg])
        for (a, _b, _c), bj, cj in zip(self.triples, self.bs, self.cs):
            lhs = [t.mul(a, x) for x in linalg.mat_vec(t, mfdf, list(bj))]
            rhs = linalg.mat_vec(t, mgdg, list(cj))
            if lhs != rhs:
                return False
            frob_b = [t.frob(x) for x in bj]
            if frob_b != linalg.mat_vec(t, [list(r) for r in self.lmat], list(bj)):
                return False
        return True


def _diff_vector(tower, x):
    return tuple(tower.sub(tower.frob(x, i), x) for i in range(1, tower.h))


def build_zero_coeff_certificate(f: LinearizedPoly, g: LinearizedPoly, triples) -> ZeroCoeffCertificate:
    """Certificate for a pair already normalized to f_0 != 0, g_0 != 0."""
    t = f.tower
    if f.coeffs[0] == 0 or g.coeffs[0] == 0:
        raise ValueError("normalize the pair first (constant coefficients nonzero)")
    mf_hat = _minor_no_top_left(linalg.transpose(f.inverse().dickson()))
    mg_hat = _minor_no_top_left(linalg.transpose(g.inverse().dickson()))
    df = [[f.coeffs[i] if i == j else 0 for j in range(1, t.h)] for i in range(1, t.h)]
    dg = [[g.coeffs[i] if i == j else 0 for j in range(1, t.h)] for i in range(1, t.h)]
    bs = tuple(_diff_vector(t, b) for _a, b, _c in triples)
    cs = tuple(_diff_vector(t, c) for _a, _b, c in triples)
    return ZeroCoeffCertificate(
        f, g, tuple(triples),
        tuple(tuple(r) for r in mf_hat), tuple(tuple(r) for r in mg_hat),
        tuple(tuple(r) for r in df), tuple(tuple(r) for r in dg),
        bs, cs,
        tuple(tuple(r) for r in shift_minus_one_matrix(t, t.h - 1)),
    )


# ---------------------------------------------------------------------------
# lemma verifiers (exhaustive on small towers)

def _poly_json(f):
    return [f.tower.digits(c) for c in f.coeffs]


def verify_inverse_lemma(f: LinearizedPoly, g: LinearizedPoly) -> dict:
    """Scores of (f,g), (f^{-1}, f^{-1}g), (g^{-1}, g^{-1}f) agree.

    The witness of (f,g) transfers: (a,b,c) -> (b^{-1}, a^{-1}, c^{-1}) for
    the first derived pair and (a,b,c) -> (c^{-1}, a, b^{-1}) for the second.
    Both transferred sets are validated triple by triple.
    """
    t = f.tower
    m, witness = max_prop_m(f, g)
    finv, ginv = f.inverse(), g.inverse()
    pair1 = (finv, finv.compose(g))
    pair2 = (ginv, ginv.compose(f))
    m1, _ = _score(*pair1)
    m2, _ = _score(*pair2)
    tr1 = [(t.inv(b), t.inv(a), t.inv(c)) for a, b, c in witness.triples]
    tr2 = [(t.inv(c), a, t.inv(b)) for a, b, c in witness.triples]
    ok1 = _triples_valid(*pair1, tr1)
    ok2 = _triples_valid(*pair2, tr2)
    return {
        "f": _poly_json(f),
        "g": _poly_json(g),
        "m": m,
        "m_inverse_pair_f": m1,
        "m_inverse_pair_g": m2,
        "scores_equal": m == m1 == m2,
        "lemma_inequalities_hold": m <= m1 and m <= m2,
        "transferred_triples_f": [[t.digits(x) for x in tr] for tr in tr1],
        "transferred_valid_f": ok1,
        "transferred_triples_g": [[t.digits(x) for x in tr] for tr in tr2],
        "transferred_valid_g": ok2,
        "ok": (m == m1 == m2) and ok1 and ok2,
    }


def _triples_valid(f, g, triples):
    t = f.tower
    finv, ginv = f.inverse(), g.inverse()
    for a, b, c in triples:
        lhs = f.compose(LinearizedPoly.scalar(t, b)).compose(finv).scale(a)
        rhs = g.compose(LinearizedPoly.scalar(t, c)).compose(ginv)
        if lhs != rhs:
            return False
    return True


def zero_coeff_bound(tower) -> int:
    return max(tower.q ** (tower.h - 1), tower.h * tower.q - 1)


def verify_zero_coeff_lemma(tower, pair_limit: int | None = None) -> dict:
    """Exhaustive check: score above the bound forces equal zero counts >= 1.

    Every pair of invertible polynomials is scored exactly.  For qualifying
    pairs the zero-coefficient counts of f and g must agree and be positive.
    The matrix-identity certificate is built and validated on the witness of
    every pair (after twisting both entries to nonzero constant term).
    """
    inv_polys = invertible_linearized(tower)
    total = len(inv_polys) ** 2
    if pair_limit is not None and total > pair_limit:
        raise BudgetExceeded(f"{total} pairs exceed limit {pair_limit}")
    bound = zero_coeff_bound(tower)
    records = []
    qualifying = 0
    violations = []
    max_m = 0
    for f in inv_polys:
        fn, ef = twist_to_nonzero_f0(f)
        for g in inv_polys:
            gn, eg = twist_to_nonzero_f0(g)
            m, witness = max_prop_m(fn, gn)
            max_m = max(max_m, m)
            cert = build_zero_coeff_certificate(fn, gn, witness.triples)
            cert_ok = cert.validate()
            zf, zg = f.zero_coeff_count(), g.zero_coeff_count()
            record = {
                "f": _poly_json(f),
                "g": _poly_json(g),
                "m": m,
                "zero_counts": [zf, zg],
                "certificate_ok": cert_ok,
            }
            records.append(record)
            if m > bound:
                qualifying += 1
                if not (zf == zg >= 1):
                    violations.append(record)
            if not cert_ok:
                violations.append(record)
    return {
        "tower": tower.descriptor(),
        "bound": bound,
        "pairs": total,
        "qualifying_pairs": qualifying,
        "max_m": max_m,
        "violations": violations,
        "ok": not violations,
        "records": records,
    }


def verify_two_nonzero_lemma(tower) -> dict:
    """Two-term invertible polynomials with coprime support gap have dense inverses.

    Support {i, l} avoids semi-linearity over every intermediate field
    exactly when gcd(l - i, h) = 1; for those, f^{-1} must have no zero
    coefficient.  Exhaustive over all two-term coefficient vectors.
    """
    h = tower.h
    candidates = 0
    qualifying = 0
    violations = []
    for i, l in combinations(range(h), 2):
        coprime = math.gcd(l - i, h) == 1
        for ci in tower.nonzero():
            for cl in tower.nonzero():
                coeffs = [0] * h
                coeffs[i], coeffs[l] = ci, cl
                f = LinearizedPoly(tower, tuple(coeffs))
                candidates += 1
                if not coprime or not f.is_invertible():
                    continue
                qualifying += 1
                if f.inverse().zero_coeff_count() != 0:
                    violations.append(_poly_json(f))
    return {
        "tower": tower.descriptor(),
        "two_term_candidates": candidates,
        "qualifying": qualifying,
        "violations": violations,
        "ok": not violations,
    }


def verify_semilinear_criterion(tower) -> dict:
    """f(a f^{-1}(X)) collapses to a monomial exactly per the support test.

    The predicted collapse set is the subfield of degree gcd over all
    support-index differences of f.  Exhaustive over every invertible f
    and every a != 0.
    """
    checked = 0
    violations = []
    for f in invertible_linearized(tower):
        s = f.conjugation_subfield_degree()
        for a in tower.nonzero():
            checked += 1
            collapsed = f.conjugate(a).is_scalar()
            predicted = tower.in_subfield(a, s)
            if collapsed != predicted:
                violations.append({
                    "f": _poly_json(f),
                    "a": tower.digits(a),
                    "collapsed": collapsed,
                    "predicted": predicted,
                })
    return {
        "tower": tower.descriptor(),
        "pairs": checked,
        "violations": violations,
        "ok": not violations,
    }


def verify_lm_prop_implication(tower, n: int) -> dict:
    """Exhaustive check that score >= n-3 forces both entries to be monomials.

    Pairs of monomials pass by definition.  For the rest, the cheap upper
    bound min(#distinct a, #distinct b, #distinct c) over the triple list
    prunes most pairs; survivors get an early-stopping exact search.
    """
    threshold = n - 3
    if threshold < 1:
        raise ValueError("need n >= 4")
    inv_polys = invertible_linearized(tower)
    checked = 0
    monomial_pairs = 0
    pruned = 0
    violations = []
    max_m_nonmonomial = 0
    for f in inv_polys:
        for g in inv_polys:
            checked += 1
            if f.is_monomial() and g.is_monomial():
                monomial_pairs += 1
                continue
            triples = prop_triples(f, g)
            upper = min(len({x[0] for x in triples}),
                        len({x[1] for x in triples}),
                        len({x[2] for x in triples}))
            if upper < threshold:
                pruned += 1
                continue
            size, picked = _score(f, g, stop_at=threshold)
            if size >= threshold:
                violations.append({
                    "f": _poly_json(f),
                    "g": _poly_json(g),
                    "m_at_least": size,
                    "witness": [[tower.digits(x) for x in tr] for tr in picked],
                })
            else:
                max_m_nonmonomial = max(max_m_nonmonomial, size)
    return {
        "tower": tower.descriptor(),
        "n": n,
        "threshold": threshold,
        "pairs": checked,
        "monomial_pairs": monomial_pairs,
        "pruned_by_upper_bound": pruned,
        "max_m_nonmonomial_seen": max_m_nonmonomial,
        "violations": violations,
        "ok": not violations,
    }
