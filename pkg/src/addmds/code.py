"""Additive codes over F_{q^h}: F_q-linear subspaces of F_{q^h}^n.

A code is held as a generator matrix whose k_fq rows are F_q-independent
vectors over F_{q^h}; the code is the set of F_q-combinations of the rows,
so |C| = q^k_fq.  The stored row basis is preserved exactly (several
constructions rely on a structured basis); equality of codes compares the
canonical reduced row echelon form of the F_q-coordinate expansion.

Distance work enumerates codewords.  Enumeration is a hard-capped budgeted
operation, vectorised with numpy lookup tables when the tower has them.

Equivalence moves are coordinate permutations combined with per-coordinate
invertible q-linearized substitutions; they preserve cardinality and weight
distribution.  ``linear_equivalence_witness`` decides, for an MDS code,
whether some move turns it into an F_{q^h}-linear code, returning either an
explicit witness or a definitive negative (the search space is a complete
set of representatives, so "None" is a certificate, not a timeout).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import linalg
from .errors import BudgetExceeded, NonInvertibleMap, NotMds
from .gf import FieldTower
from .linpoly import LinearizedPoly, random_invertible

DEFAULT_CODEWORD_BUDGET = 1 << 24
DEFAULT_CANDIDATE_BUDGET = 1 << 22


class AdditiveCode:
    def __init__(self, tower: FieldTower, rows, n: int | None = None, check: bool = True):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise ValueError("ragged generator matrix")
        elif n is None:
            raise ValueError("zero code needs an explicit length")
        self.tower = tower
        self.gen = rows
        self.n = n
        self.k_fq = len(rows)
        self._cache = {}
        if check and rows:
            if linalg.mat_rank(tower, self.expansion()) != self.k_fq:
                raise ValueError("generator rows are not F_q-independent")

    # -- representations ------------------------------------------------------

    def expansion(self):
        """k_fq x (n*h) matrix of omega-basis coordinates, entries in F_q."""
        if "expansion" not in self._cache:
            t = self.tower
            self._cache["expansion"] = [
                [c for x in row for c in t.coords(x)] for row in self.gen
            ]
        return self._cache["expansion"]

    def _reassemble(self, exp_rows):
        t = self.tower
        h = t.h
        return tuple(
            tuple(t.from_coords(row[j * h:(j + 1) * h]) for j in range(self.n))
            for row in exp_rows
        )

    def canonical_rows(self):
        """Basis-independent generator: RREF over F_q of the expansion."""
        if "canonical" not in self._cache:
            red, _ = linalg.mat_rref(self.tower, self.expansion())
            self._cache["canonical"] = self._reassemble(red)
        return self._cache["canonical"]

    def __eq__(self, other):
        return (isinstance(other, AdditiveCode)
                and self.tower.key == other.tower.key
                and self.n == other.n
                and self.canonical_rows() == other.canonical_rows())

    def __hash__(self):
        return hash((self.tower.key, self.n, self.canonical_rows()))

    def __repr__(self):
        return f"AdditiveCode(n={self.n}, k_fq={self.k_fq}, q^h={self.tower.size})"

    def message_length(self) -> int:
        """k with k_fq = h*k; raises NotMds when h does not divide k_fq."""
        if self.k_fq % self.tower.h:
            raise NotMds(f"h = {self.tower.h} does not divide k_fq = {self.k_fq}")
        return self.k_fq // self.tower.h

    def codewords(self):
        """Iterate all q^k_fq codewords (pure python; keep it for small codes)."""
        t = self.tower
        fq = t.fq_elements
        for combo in product(fq, repeat=self.k_fq):
            w = [0] * self.n
            for c, row in zip(combo, self.gen):
                if c:
                    for j in range(self.n):
                        if row[j]:
                            w[j] = t.add(w[j], t.mul(c, row[j]))
            yield tuple(w)

    def is_field_linear(self) -> bool:
        """True iff the code is closed under multiplication by omega."""
        t = self.tower
        red, pivots = linalg.mat_rref(t, self.expansion())
        red = red[: len(pivots)]
        for row in self.gen:
            scaled = [t.mul(t.omega, x) for x in row]
            v = [c for x in scaled for c in t.coords(x)]
            for rr, pc in zip(red, pivots):
                if v[pc]:
                    f = v[pc]
                    v = [t.sub(a, t.mul(f, b)) for a, b in zip(v, rr)]
            if any(v):
                return False
        return True

    def field_linear_rows(self):
        """Canonical F_{q^h}-basis (RREF over the big field); requires linearity."""
        if not self.is_field_linear():
            raise ValueError("code is not F_{q^h}-linear")
        red, pivots = linalg.mat_rref(self.tower, [list(r) for r in self.gen])
        return [tuple(r) for r in red[: len(pivots)]]

    def structured_basis(self) -> "AdditiveCode":
        """Regenerate a field-linear code on the basis (g_i, omega*g_i, ...)."""
        t = self.tower
        rows = []
        for g in self.field_linear_rows():
            for l in range(t.h):
                rows.append(tuple(t.mul(t.omega_powers[l], x) for x in g))
        return AdditiveCode(t, rows, check=False)


# ---------------------------------------------------------------------------
# weight enumeration

def _budget_total(code, budget):
    total = code.tower.q ** code.k_fq
    cap = DEFAULT_CODEWORD_BUDGET if budget is None else budget
    if total > cap:
        raise BudgetExceeded(f"{total} codewords exceed budget {cap}")
    return total


def _weights_numpy(code, total, chunk=1 << 16):
    t = code.tower
    q = t.q
    fq = t.fq_elements
    luts = [[np.array([t.mul(c, code.gen[i][j]) for c in fq], dtype=np.int64)
             for j in range(code.n)] for i in range(code.k_fq)]
    add = t.add_np
    for lo in range(0, total, chunk):
        hi = min(total, lo + chunk)
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = [(idx // q**i) % q for i in range(code.k_fq)]
        weights = np.zeros(hi - lo, dtype=np.int64)
        for j in range(code.n):
            acc = np.zeros(hi - lo, dtype=np.int64)
            for i in range(code.k_fq):
                acc = add[acc, luts[i][j][digits[i]]].astype(np.int64)
            weights += acc != 0
        yield lo, weights


def _weights_python(code, total):
    w = []
    for cw in code.codewords():
        w.append(sum(1 for x in cw if x))
    yield 0, np.array(w, dtype=np.int64)


def _weight_stream(code, budget):
    total = _budget_total(code, budget)
    if code.tower.add_np is not None:
        return _weights_numpy(code, total)
    return _weights_python(code, total)


def min_distance(code: AdditiveCode, budget: int | None = None) -> int:
    """Minimum Hamming weight over the nonzero codewords (exhaustive)."""
    if code.k_fq == 0:
        raise ValueError("zero code has no minimum distance")
    best = code.n + 1
    for lo, weights in _weight_stream(code, budget):
        if lo == 0:
            weights = weights[1:]
        if len(weights):
            best = min(best, int(weights.min()))
    return best


def weight_enumerator(code: AdditiveCode, budget: int | None = None):
    """List A_0..A_n with A_w = number of codewords of weight w."""
    counts = np.zeros(code.n + 1, dtype=np.int64)
    if code.k_fq == 0:
        counts[0] = 1
        return [int(c) for c in counts]
    for _, weights in _weight_stream(code, budget):
        counts += np.bincount(weights, minlength=code.n + 1)
    return [int(c) for c in counts]


def is_mds(code: AdditiveCode, budget: int | None = None) -> bool:
    """d = n - k + 1 with k = k_fq / h; False when h does not divide k_fq."""
    if code.k_fq == 0 or code.k_fq % code.tower.h:
        return False
    k = code.k_fq // code.tower.h
    if k > code.n:
        return False
    return min_distance(code, budget) == code.n - k + 1


# ---------------------------------------------------------------------------
# constructions

def rs_code(tower: FieldTower, k: int) -> AdditiveCode:
    """Extended Reed-Solomon code of length q^h + 1 and dimension k over F_{q^h}.

    Evaluation points are all field elements in int order followed by the
    point at infinity, whose value is the top polynomial coefficient.  Rows
    come in the structured order g_0, omega*g_0, ..., omega^(h-1)*g_0, g_1, ...
    """
    if not (1 <= k <= tower.size):
        raise ValueError("need 1 <= k <= q^h")
    rows = []
    for i in range(k):
        base = [tower.pow_int(x, i) for x in range(tower.size)]
        base.append(1 if i == k - 1 else 0)
        for l in range(tower.h):
            w = tower.omega_powers[l]
            rows.append(tuple(tower.mul(w, x) for x in base))
    return AdditiveCode(tower, rows, check=False)


def project(code: AdditiveCode, positions) -> AdditiveCode:
    """Shorten: codewords vanishing on ``positions``, those coordinates removed."""
    positions = sorted(set(positions))
    if any(not (0 <= j < code.n) for j in positions):
        raise ValueError("projection position out of range")
    t = code.tower
    cond = [[c for j in positions for c in t.coords(row[j])] for row in code.gen]
    kernel = linalg.left_nullspace(t, cond) if positions else \
        [[1 if i == r else 0 for i in range(code.k_fq)] for r in range(code.k_fq)]
    keep = [j for j in range(code.n) if j not in positions]
    new_rows = []
    for v in kernel:
        row = []
        for j in keep:
            acc = 0
            for c, grow in zip(v, code.gen):
                if c and grow[j]:
                    acc = t.add(acc, t.mul(c, grow[j]))
            row.append(acc)
        new_rows.append(tuple(row))
    return AdditiveCode(t, new_rows, n=len(keep), check=False)


# ---------------------------------------------------------------------------
# equivalence moves

@dataclass(frozen=True)
class EquivalenceMove:
    """new_word[j] = maps[j](old_word[perm[j]]) with invertible maps."""
    perm: tuple
    maps: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a permutation")
        if len(self.maps) != len(self.perm):
            raise ValueError("need one map per coordinate")
        for f in self.maps:
            if not f.is_invertible():
                raise NonInvertibleMap(f"coordinate map {f.coeffs} is singular")


def identity_move(tower: FieldTower, n: int) -> EquivalenceMove:
    ident = LinearizedPoly.identity(tower)
    return EquivalenceMove(tuple(range(n)), (ident,) * n)


def random_move(tower: FieldTower, n: int, rng) -> EquivalenceMove:
    perm = list(range(n))
    rng.shuffle(perm)
    maps = tuple(random_invertible(tower, rng) for _ in range(n))
    return EquivalenceMove(tuple(perm), maps)


def apply_move(code: AdditiveCode, move: EquivalenceMove) -> AdditiveCode:
    if len(move.perm) != code.n:
        raise ValueError("move length does not match the code")
    rows = tuple(
        tuple(move.maps[j](row[move.perm[j]]) for j in range(code.n))
        for row in code.gen
    )
    return AdditiveCode(code.tower, rows, n=code.n, check=False)


def compose_moves(second: EquivalenceMove, first: EquivalenceMove) -> EquivalenceMove:
    """Move equal to applying ``first`` then ``second``."""
    n = len(first.perm)
    perm = tuple(first.perm[second.perm[j]] for j in range(n))
    maps = tuple(second.maps[j].compose(first.maps[second.perm[j]]) for j in range(n))
    return EquivalenceMove(perm, maps)


def inverse_move(move: EquivalenceMove) -> EquivalenceMove:
    n = len(move.perm)
    inv_perm = [0] * n
    for j, pj in enumerate(move.perm):
        inv_perm[pj] = j
    maps = tuple(move.maps[inv_perm[i]].inverse() for i in range(n))
    return EquivalenceMove(tuple(inv_perm), maps)


# ---------------------------------------------------------------------------
# interpolation and standard form

@dataclass(frozen=True)
class InterpolationForm:
    """C = {(x_0..x_{k-1}, sum_j maps[0][j](x_j), ..., sum_j maps[n-k-1][j](x_j))}."""
    tower: object
    n: int
    k: int
    maps: tuple  # (n-k) rows of k LinearizedPolys

    def build_code(self) -> AdditiveCode:
        t = self.tower
        rows = []
        for i in range(self.k):
            for l in range(t.h):
                w = t.omega_powers[l]
                row = [0] * self.n
                row[i] = w
                for r in range(self.n - self.k):
                    row[self.k + r] = self.maps[r][i](w)
                rows.append(tuple(row))
        return AdditiveCode(t, rows, n=self.n, check=False)


def to_interpolation_form(code: AdditiveCode) -> InterpolationForm:
    """Express each trailing coordinate as a sum of maps of the first k.

    Requires the first k coordinates to form an information set and every
    interpolation map to be invertible; both hold for MDS codes, and NotMds
    is raised otherwise.
    """
    t = code.tower
    h = t.h
    k = code.message_length()
    if code.n < k:
        raise NotMds("length is smaller than the message length")
    exp_first = [row[: k * h] for row in code.expansion()]
    try:
        inv = linalg.mat_inv(t, exp_first)
    except Exception:
        raise NotMds("first k coordinates are not an information set")
    rows_mat = linalg.mat_mul(t, inv, [list(r) for r in code.gen])
    values = [[None] * k for _ in range(code.n - k)]
    for i in range(k):
        for l in range(h):
            w = rows_mat[i * h + l]
            for r in range(code.n - k):
                if values[r][i] is None:
                    values[r][i] = []
                values[r][i].append(w[k + r])
    maps = []
    for r in range(code.n - k):
        row = []
        for i in range(k):
            f = LinearizedPoly.from_values(t, values[r][i])
            if not f.is_invertible():
                raise NotMds(f"interpolation map at ({k + r}, {i}) is singular")
            row.append(f)
        maps.append(tuple(row))
    return InterpolationForm(t, code.n, k, tuple(maps))


def to_standard_form(code: AdditiveCode):
    """Equivalent code whose row-(k) maps and column-0 maps are the identity.

    Returns (standard_code, move) with apply_move(code, move) == standard_code
    reproducing the returned generator exactly.
    """
    t = code.tower
    form = to_interpolation_form(code)
    k, n = form.k, form.n
    ident = LinearizedPoly.identity(t)
    if n == k:
        return code, identity_move(t, n)
    phi = [form.maps[0][j] for j in range(k)]
    psi = [ident]
    for r in range(1, n - k):
        psi.append(form.maps[r][0].compose(phi[0].inverse()).inverse())
    move = EquivalenceMove(tuple(range(n)), tuple(phi) + tuple(psi))
    return apply_move(code, move), move


@dataclass(frozen=True)
class LinearWitness:
    """Witness that a standard-form code is equivalent to a linear one.

    Every interpolation map of the standard form equals g o (a X) o g^(-1)
    for the stored scalars; applying g^(-1) in every coordinate after the
    standard-form move produces an F_{q^h}-linear code.
    """
    g: LinearizedPoly
    scalars: tuple  # (n-k) x k scalar matrix
    standard_move: EquivalenceMove

    def linearizing_move(self) -> EquivalenceMove:
        n = len(self.standard_move.perm)
        ginv = self.g.inverse()
        post = EquivalenceMove(tuple(range(n)), (ginv,) * n)
        return compose_moves(post, self.standard_move)


def linear_equivalence_witness(code: AdditiveCode, budget: int | None = None):
    """Search for g making every standard-form map a scalar conjugate.

    Candidates run over all invertible g with g_0 = 1 in lex order; this set
    is complete up to the symmetries that fix conjugacy (right composition
    with scalars and with Frobenius powers), so returning None certifies
    that no equivalence to a linear code exists.
    """
    t = code.tower
    std, move = to_standard_form(code)
    form = to_interpolation_form(std)
    k, n = form.k, form.n
    cap = DEFAULT_CANDIDATE_BUDGET if budget is None else budget
    n_candidates = t.size ** (t.h - 1)
    if n_candidates > cap:
        raise BudgetExceeded(f"{n_candidates} witness candidates exceed budget {cap}")
    targets = [(r, j) for r in range(1, n - k) for j in range(1, k)]
    for rest in product(range(t.size), repeat=t.h - 1):
        g = LinearizedPoly(t, (1,) + rest)
        if not g.is_invertible():
            continue
        ginv = g.inverse()
        scalars = [[1] * k for _ in range(n - k)]
        ok = True
        for r, j in targets:
            u = ginv.compose(form.maps[r][j]).compose(g)
            if any(u.coeffs[1:]):
                ok = False
                break
            scalars[r][j] = u.coeffs[0]
        if ok:
            return LinearWitness(g, tuple(tuple(r) for r in scalars), move)
    return None


# ---------------------------------------------------------------------------
# serialization

def code_to_dict(code: AdditiveCode) -> dict:
    t = code.tower
    return {
        "field": t.descriptor(),
        "n": code.n,
        "k_fq": code.k_fq,
        "rows": [[t.digits(x) for x in row] for row in code.gen],
    }


def code_from_dict(data: dict, tower: FieldTower | None = None) -> AdditiveCode:
    t = tower if tower is not None else FieldTower.from_descriptor(data["field"])
    rows = [[t.from_digits(d) for d in row] for row in data["rows"]]
    return AdditiveCode(t, rows, n=data["n"])
