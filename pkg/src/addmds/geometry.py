"""Systems of F_q-subspaces attached to additive codes.

An additive code with generator rows g_1..g_m over F_{q^h} induces, for each
coordinate j, the subspace of F_q^m spanned by the columns of the m x h
matrix whose i-th row is coords(g_i[j]).  The ordered list of these
subspaces determines the weight distribution: a message vector hits weight
equal to the number of subspaces it does not annihilate.  This module keeps
those subspace lists as first-class objects, converts codes to and from
them, evaluates their minimum distance and arc property directly, and
decides membership in the multiplication spread (the partition of F_q^(hk)
into the F_{q^h}-point subspaces under the omega-power identification).

Blocks are stored exactly as given so that ``code_from_system`` inverts
``system_from_code`` on the nose; comparisons use reduced echelon forms of
the blocks, which depend only on the subspaces.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from . import linalg
from .code import DEFAULT_CODEWORD_BUDGET, AdditiveCode
from .errors import BudgetExceeded, DimensionMismatch, SpanFailure
from .gf import FieldTower


class ProjectiveHSystem:
    """Ordered tuple of subspaces of F_q^dim, each given by generator vectors."""

    def __init__(self, tower: FieldTower, dim: int, blocks):
        blocks = tuple(tuple(tuple(u) for u in blk) for blk in blocks)
        for blk in blocks:
            for u in blk:
                if len(u) != dim:
                    raise ValueError("generator length differs from dim")
                if any(not tower.in_fq(c) for c in u):
                    raise ValueError("generator entries must lie in F_q")
        self.tower = tower
        self.dim = dim
        self.blocks = blocks
        self.n = len(blocks)
        self._cache = {}

    def block_rank(self, j: int) -> int:
        return linalg.mat_rank(self.tower, [list(u) for u in self.blocks[j]])

    def canonical_blocks(self):
        if "canonical" not in self._cache:
            out = []
            for blk in self.blocks:
                if blk:
                    red, piv = linalg.mat_rref(self.tower, [list(u) for u in blk])
                    out.append(tuple(tuple(r) for r in red[: len(piv)]))
                else:
                    out.append(())
            self._cache["canonical"] = tuple(out)
        return self._cache["canonical"]

    def __eq__(self, other):
        return (isinstance(other, ProjectiveHSystem)
                and self.tower.key == other.tower.key
                and self.dim == other.dim
                and self.canonical_blocks() == other.canonical_blocks())

    def __hash__(self):
        return hash((self.tower.key, self.dim, self.canonical_blocks()))

    def __repr__(self):
        return f"ProjectiveHSystem(dim={self.dim}, n={self.n}, q={self.tower.q})"


def system_from_code(code: AdditiveCode) -> ProjectiveHSystem:
    """Column spans of the coordinate maps, one block per code position."""
    t = code.tower
    h = t.h
    blocks = []
    for j in range(code.n):
        rows = [t.coords(code.gen[i][j]) for i in range(code.k_fq)]
        blocks.append(tuple(tuple(rows[i][c] for i in range(code.k_fq))
                            for c in range(h)))
    return ProjectiveHSystem(t, code.k_fq, blocks)


def code_from_system(system: ProjectiveHSystem) -> AdditiveCode:
    """Rebuild the code whose coordinate maps have the given column spans.

    Blocks with fewer than h generators are padded with zero vectors.  The
    united generators must span F_q^dim, otherwise the reconstructed rows
    would be dependent and SpanFailure is raised.
    """
    t = system.tower
    h = t.h
    padded = []
    for blk in system.blocks:
        if len(blk) > h:
            raise ValueError(f"a block has {len(blk)} generators, at most h = {h} allowed")
        padded.append(list(blk) + [(0,) * system.dim] * (h - len(blk)))
    stacked = [list(u) for blk in system.blocks for u in blk]
    if linalg.mat_rank(t, stacked) != system.dim:
        raise SpanFailure("blocks do not span the ambient space")
    rows = []
    for i in range(system.dim):
        rows.append(tuple(t.from_coords([blk[c][i] for c in range(h)])
                          for blk in padded))
    return AdditiveCode(t, rows, n=system.n, check=False)


# ---------------------------------------------------------------------------
# metric and arc structure

def _scan_python(system, total):
    t = system.tower
    fq = t.fq_elements
    best = system.n + 1
    for m in product(fq, repeat=system.dim):
        if not any(m):
            continue
        w = 0
        for blk in system.blocks:
            hit = False
            for u in blk:
                acc = 0
                for mi, ui in zip(m, u):
                    if mi and ui:
                        acc = t.add(acc, t.mul(mi, ui))
                if acc:
                    hit = True
                    break
            w += hit
        best = min(best, w)
    return best


def _scan_numpy(system, total, chunk=1 << 16):
    t = system.tower
    q = t.q
    fq_arr = np.array(t.fq_elements, dtype=np.int64)
    add, mul = t.add_np, t.mul_np
    best = system.n + 1
    for lo in range(0, total, chunk):
        hi = min(total, lo + chunk)
        idx = np.arange(lo, hi, dtype=np.int64)
        elems = [fq_arr[(idx // q**i) % q] for i in range(system.dim)]
        weights = np.zeros(hi - lo, dtype=np.int64)
        for blk in system.blocks:
            hit = np.zeros(hi - lo, dtype=bool)
            for u in blk:
                acc = np.zeros(hi - lo, dtype=np.int64)
                for i, ui in enumerate(u):
                    if ui:
                        acc = add[acc, mul[elems[i], ui]].astype(np.int64)
                hit |= acc != 0
            weights += hit
        if lo == 0:
            weights = weights[1:]
        if len(weights):
            best = min(best, int(weights.min()))
    return best


def system_min_distance(system: ProjectiveHSystem, budget: int | None = None) -> int:
    """Minimum over nonzero messages of the number of blocks not annihilated.

    Equals the minimum distance of any code realising the system.
    """
    total = system.tower.q ** system.dim
    cap = DEFAULT_CODEWORD_BUDGET if budget is None else budget
    if total > cap:
        raise BudgetExceeded(f"{total} messages exceed budget {cap}")
    if system.tower.add_np is not None:
        return _scan_numpy(system, total)
    return _scan_python(system, total)


def is_pseudo_arc(system: ProjectiveHSystem) -> bool:
    """Every block has rank h and every dim/h of them span the ambient space.

    This is the geometric face of the MDS property: a code is MDS exactly
    when its system is a pseudo-arc.
    """
    t = system.tower
    if system.dim % t.h:
        raise DimensionMismatch(f"dim = {system.dim} is not a multiple of h = {t.h}")
    k = system.dim // t.h
    if any(system.block_rank(j) != t.h for j in range(system.n)):
        return False
    for subset in combinations(range(system.n), k):
        stacked = [list(u) for j in subset for u in system.blocks[j]]
        if linalg.mat_rank(t, stacked) != system.dim:
            return False
    return True


# ---------------------------------------------------------------------------
# the multiplication spread

def multiplication_matrix(tower: FieldTower, alpha: int):
    """h x h matrix M with coords(alpha * x) = coords(x) @ M; row l = coords(alpha * omega^l)."""
    return [list(tower.coords(tower.mul(alpha, w))) for w in tower.omega_powers]


def _block_to_point(tower, u):
    """Dual-basis reading of a vector in F_q^(hk) as a point of F_{q^h}^k."""
    h = tower.h
    delta = tower.dual_basis()
    out = []
    for i in range(0, len(u), h):
        acc = 0
        for l in range(h):
            if u[i + l]:
                acc = tower.add(acc, tower.mul(u[i + l], delta[l]))
        out.append(acc)
    return tuple(out)


def _normalize_point(tower, point):
    for x in point:
        if x:
            inv = tower.inv(x)
            return tuple(tower.mul(inv, y) for y in point)
    return None


def desarguesian_membership(tower: FieldTower, generators, point_len: int | None = None):
    """Decide whether the span of ``generators`` is a multiplication-spread member.

    The spread partitions F_q^(hk) into the h-dimensional subspaces obtained
    by reading each vector blockwise through the trace-dual basis and fixing
    a projective point of F_{q^h}^k.  Returns the normalized point, or None
    when the span is not a member.
    """
    gens = [tuple(u) for u in generators]
    if not gens:
        return None
    dim = len(gens[0])
    if any(len(u) != dim for u in gens):
        raise ValueError("ragged generator list")
    if dim % tower.h:
        raise ValueError(f"vector length {dim} is not a multiple of h = {tower.h}")
    if point_len is not None and dim != point_len * tower.h:
        raise ValueError("generator length does not match the requested point length")
    if linalg.mat_rank(tower, [list(u) for u in gens]) != tower.h:
        return None
    ref = None
    for u in gens:
        pt = _normalize_point(tower, _block_to_point(tower, u))
        if pt is None:
            continue
        if ref is None:
            ref = pt
        elif pt != ref:
            return None
    return ref


def desarguesian_block(tower: FieldTower, point):
    """Generators of the spread member at ``point``; inverse of membership."""
    h = tower.h
    if not any(point):
        raise ValueError("the zero tuple is not a projective point")
    gens = []
    for l in range(h):
        wl = tower.omega_powers[l]
        u = []
        for x in point:
            y = tower.mul(wl, x)
            u.extend(tower.trace_to_fq(tower.mul(y, wt)) for wt in tower.omega_powers)
        gens.append(tuple(u))
    return tuple(gens)


# ---------------------------------------------------------------------------
# projection

def project_system(system: ProjectiveHSystem, index: int) -> ProjectiveHSystem:
    """Quotient the ambient space by block ``index`` and drop that block."""
    if not (0 <= index < system.n):
        raise ValueError("block index out of range")
    t = system.tower
    red, pivots = linalg.mat_rref(t, [list(u) for u in system.blocks[index]])
    red = red[: len(pivots)]
    keep = [c for c in range(system.dim) if c not in pivots]
    new_blocks = []
    for j in range(system.n):
        if j == index:
            continue
        blk = []
        for u in system.blocks[j]:
            v = list(u)
            for rr, pc in zip(red, pivots):
                if v[pc]:
                    f = v[pc]
                    v = [t.sub(a, t.mul(f, b)) for a, b in zip(v, rr)]
            blk.append(tuple(v[c] for c in keep))
        new_blocks.append(tuple(blk))
    return ProjectiveHSystem(t, len(keep), new_blocks)


# ---------------------------------------------------------------------------
# serialization

def system_to_dict(system: ProjectiveHSystem) -> dict:
    t = system.tower
    return {
        "field": t.descriptor(),
        "dim": system.dim,
        "blocks": [[[t.digits(c) for c in u] for u in blk] for blk in system.blocks],
    }


def system_from_dict(data: dict, tower: FieldTower | None = None) -> ProjectiveHSystem:
    t = tower if tower is not None else FieldTower.from_descriptor(data["field"])
    blocks = [[[t.from_digits(d) for d in u] for u in blk] for blk in data["blocks"]]
    return ProjectiveHSystem(t, data["dim"], blocks)
