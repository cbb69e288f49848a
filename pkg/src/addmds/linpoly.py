"""q-linearized polynomials over F_{q^h}, reduced modulo X^(q^h) - X.

A polynomial f(X) = sum_{i<h} f_i X^(q^i) is stored as its coefficient
tuple (f_0, ..., f_{h-1}).  Evaluation is F_q-linear.  Composition reduces
exponent indices mod h, matching the quotient by X^(q^h) - X.

The Dickson matrix D(f)[i][j] = f_{(j-i) mod h}^(q^i) turns composition
into matrix multiplication, so f is invertible iff det D(f) != 0, and the
compositional inverse can be read off the first row of D(f)^(-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import linalg
from .errors import InvalidSubfield, NotInvertible

_INV_CACHE = {}


@dataclass(frozen=True)
class LinearizedPoly:
    tower: object
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.tower.h:
            raise ValueError("need exactly h coefficients")

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, tower):
        return cls(tower, (1,) + (0,) * (tower.h - 1))

    @classmethod
    def zero(cls, tower):
        return cls(tower, (0,) * tower.h)

    @classmethod
    def monomial(cls, tower, c, i):
        """c * X^(q^i)"""
        v = [0] * tower.h
        v[i % tower.h] = c
        return cls(tower, tuple(v))

    @classmethod
    def scalar(cls, tower, c):
        return cls.monomial(tower, c, 0)

    @classmethod
    def from_values(cls, tower, values):
        """The unique f with f(omega^l) = values[l] for l < h (Moore solve)."""
        key = "moore_inv"
        if key not in tower._cache:
            v = [[tower.frob(w, i) for i in range(tower.h)] for w in tower.omega_powers]
            tower._cache[key] = linalg.mat_inv(tower, v)
        vinv = tower._cache[key]
        return cls(tower, tuple(linalg.mat_vec(tower, vinv, list(values))))

    # -- basic queries ------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def support(self):
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def zero_coeff_count(self):
        return sum(1 for c in self.coeffs if c == 0)

    def is_monomial(self):
        return len(self.support()) == 1

    def is_scalar(self):
        """True iff the map is x -> c*x for some c (possibly zero)."""
        return not any(self.coeffs[1:])

    def conjugation_subfield_degree(self) -> int:
        """The s with: conjugate(self, a) is scalar exactly for a in F_{q^s}.

        Equals gcd(h, all differences of support indices); divides h.
        """
        sup = self.support()
        if not sup:
            raise ValueError("zero polynomial")
        d = self.tower.h
        for i in sup[1:]:
            d = math.gcd(d, i - sup[0])
        return d

    def is_semilinear(self, s: int) -> bool:
        """True iff f(a X) = a^(q^i) f(X) for all a in F_{q^s} and some i.

        Equivalent to the support lying in a single residue class mod s.
        """
        t = self.tower
        if t.h % s:
            raise InvalidSubfield(f"s = {s} does not divide h = {t.h}")
        sup = self.support()
        if not sup:
            raise ValueError("zero polynomial")
        return all(j % s == sup[0] % s for j in sup)

    # -- algebra --------------------------------------------------------------

    def __call__(self, x: int) -> int:
        t = self.tower
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = t.add(acc, t.mul(c, t.frob(x, i)))
        return acc

    def __add__(self, other):
        t = self.tower
        t.check_same(other.tower)
        return LinearizedPoly(t, tuple(t.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        t = self.tower
        t.check_same(other.tower)
        return LinearizedPoly(t, tuple(t.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: int):
        t = self.tower
        return LinearizedPoly(t, tuple(t.mul(c, v) for v in self.coeffs))

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """self(other(X)), exponent indices reduced mod h."""
        t = self.tower
        t.check_same(other.tower)
        h = t.h
        f, g = self.coeffs, other.coeffs
        out = [0] * h
        for i in range(h):
            fi = f[i]
            if not fi:
                continue
            for j in range(h):
                gj = g[j]
                if gj:
                    l = (i + j) % h
                    out[l] = t.add(out[l], t.mul(fi, t.frob(gj, i)))
        return LinearizedPoly(t, tuple(out))

    def dickson(self):
        """h x h matrix D[i][j] = f_{(j-i) mod h}^(q^i)."""
        t = self.tower
        h = t.h
        return [[t.frob(self.coeffs[(j - i) % h], i) for j in range(h)] for i in range(h)]

    def dickson_det(self) -> int:
        return linalg.mat_det(self.tower, self.dickson())

    def is_invertible(self) -> bool:
        return self.dickson_det() != 0

    def inverse(self) -> "LinearizedPoly":
        """Compositional inverse; raises NotInvertible if singular."""
        t = self.tower
        key = (t.key, self.coeffs)
        hit = _INV_CACHE.get(key)
        if hit is not None:
            return hit
        try:
            dinv = linalg.mat_inv(t, self.dickson())
        except NotInvertible:
            raise NotInvertible(f"no compositional inverse: {self.coeffs}")
        out = LinearizedPoly(t, tuple(dinv[0]))
        assert self.compose(out).coeffs == LinearizedPoly.identity(t).coeffs
        _INV_CACHE[key] = out
        _INV_CACHE[(t.key, out.coeffs)] = self
        return out

    def conjugate(self, a: int) -> "LinearizedPoly":
        """f o (aX) o f^(-1), i.e. the map x -> f(a * f^(-1)(x))."""
        if a == 0:
            raise ValueError("conjugating scalar must be nonzero")
        t = self.tower
        return self.compose(LinearizedPoly.scalar(t, a)).compose(self.inverse())

    def frobenius_twist(self, e: int) -> "LinearizedPoly":
        """self o X^(q^e): a cyclic shift of the coefficient vector."""
        h = self.tower.h
        e %= h
        return LinearizedPoly(self.tower, tuple(self.coeffs[(l - e) % h] for l in range(h)))

    def to_json(self):
        t = self.tower
        return [t.digits(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, tower, data):
        return cls(tower, tuple(tower.from_digits(d) for d in data))

    def __repr__(self):
        return f"LinearizedPoly{self.coeffs}"


def all_linearized(tower):
    """All q-linearized polynomials over the tower, lex order on coefficients."""
    for coeffs in product(range(tower.size), repeat=tower.h):
        yield LinearizedPoly(tower, coeffs)


def invertible_linearized(tower):
    """All invertible q-linearized polynomials, lex order on coefficients."""
    key = "invertible_lps"
    if key not in tower._cache:
        tower._cache[key] = tuple(f for f in all_linearized(tower) if f.is_invertible())
    return tower._cache[key]


def random_invertible(tower, rng) -> LinearizedPoly:
    while True:
        f = LinearizedPoly(tower, tuple(rng.randrange(tower.size) for _ in range(tower.h)))
        if f.is_invertible():
            return f
