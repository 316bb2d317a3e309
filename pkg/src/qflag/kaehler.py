"""Exact Lefschetz/Hodge laboratory on a constant-coefficient model.

The model is the classical rank-n complex exterior algebra on generators
dz_1..dz_n, dzbar_1..dzbar_n over the Gaussian rationals, with Hermitian
form sigma = i * sum_j dz_j ^ dzbar_j.  Every operator of the Hermitian
structure axioms is realised exactly here: the Lefschetz operator L, the
counting operator H, the primitive decomposition, the Hodge map defined
componentwise by the Weil formula

    star(L^j w) = (-1)^(k(k+1)/2) i^(a-b) (j! / (n-j-k)!) L^(n-j-k) w

for w primitive of bidegree (a, b), k = a + b, the metric
g(w, v) = star(w ^ star(v*)), and the adjoint Lefschetz operator
Lambda = star^-1 o L o star.

The triple (L, Lambda, H) satisfies [H, L] = 2L, [L, Lambda] = H and
[H, Lambda] = -2 Lambda.  (The first identity is sometimes printed as
[H, L] = 2H; that form fails already on the unit and is a typo, because H
is a scalar on each degree.  We implement and verify [H, L] = 2L.)
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

# sl2_check inverts the Hodge map on the full 4^n-dimensional algebra,
# so its model rank is capped.
SL2_RANK_BOUND = 3


class GaussScalar:
    """Exact Gaussian rational a + b*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussScalar is immutable")

    @classmethod
    def one(cls):
        return cls(1, 0)

    @classmethod
    def i_unit(cls):
        return cls(0, 1)

    @classmethod
    def i_power(cls, exponent: int) -> "GaussScalar":
        re, im = ((1, 0), (0, 1), (-1, 0), (0, -1))[exponent % 4]
        return cls(re, im)

    def conj(self) -> "GaussScalar":
        return GaussScalar(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other):
        other = _coerce(other)
        return GaussScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussScalar(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce(other)
        return GaussScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return GaussScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussScalar")
        return GaussScalar(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __eq__(self, other):
        other = _coerce(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re} {sign} {abs(self.im)}*i"


def _coerce(value) -> GaussScalar:
    if isinstance(value, GaussScalar):
        return value
    return GaussScalar(value, 0)


# basis keys are (I, J): ascending tuples of 1-based indices, standing for
# dz_{I} ^ dzbar_{J} in that order
Key = tuple[tuple[int, ...], tuple[int, ...]]

SCALAR_KEY: Key = ((), ())


def _generators(key: Key) -> tuple[tuple[int, int], ...]:
    holo, anti = key
    return tuple((0, i) for i in holo) + tuple((1, j) for j in anti)


def _sort_sign(seq: tuple[tuple[int, int], ...]) -> tuple[int, Key | None]:
    """Koszul sign sorting odd generators; None key on a repeat."""
    if len(set(seq)) != len(seq):
        return 0, None
    inversions = 0
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                inversions += 1
    holo = tuple(sorted(g[1] for g in items if g[0] == 0))
    anti = tuple(sorted(g[1] for g in items if g[0] == 1))
    return (-1) ** inversions, (holo, anti)


class ExtForm:
    """Element of the model exterior algebra; immutable in practice."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Key, GaussScalar] | None = None):
        self.n = n
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                coeff = _coerce(coeff)
                if not coeff.is_zero():
                    self.terms[key] = coeff

    @classmethod
    def zero(cls, n: int) -> "ExtForm":
        return cls(n, {})

    @classmethod
    def unit(cls, n: int) -> "ExtForm":
        return cls(n, {SCALAR_KEY: GaussScalar.one()})

    @classmethod
    def basis(cls, n: int, key: Key) -> "ExtForm":
        return cls(n, {key: GaussScalar.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ExtForm") -> "ExtForm":
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return ExtForm(self.n, terms)

    def __sub__(self, other: "ExtForm") -> "ExtForm":
        return self + other.scale(-1)

    def __neg__(self) -> "ExtForm":
        return self.scale(-1)

    def scale(self, factor) -> "ExtForm":
        factor = _coerce(factor)
        return ExtForm(self.n, {k: c * factor for k, c in self.terms.items()})

    def wedge(self, other: "ExtForm") -> "ExtForm":
        out: dict[Key, GaussScalar] = {}
        for key1, c1 in self.terms.items():
            gen1 = _generators(key1)
            for key2, c2 in other.terms.items():
                sign, key = _sort_sign(gen1 + _generators(key2))
                if key is None:
                    continue
                add = c1 * c2 * sign
                out[key] = out[key] + add if key in out else add
        return ExtForm(self.n, out)

    def conjugate(self) -> "ExtForm":
        """The * involution: antilinear, (w ^ v)* = (-1)^(kl) v* ^ w*,
        with (dz_i)* = dzbar_i.  On a basis monomial this reverses and
        stars the generators, which lands back in canonical order with the
        accumulated reversal signs below."""
        out: dict[Key, GaussScalar] = {}
        for (holo, anti), coeff in self.terms.items():
            a, b = len(holo), len(anti)
            k = a + b
            exponent = k * (k - 1) // 2 + a * (a - 1) // 2 + b * (b - 1) // 2
            sign = -1 if exponent % 2 else 1
            key = (anti, holo)
            add = coeff.conj() * sign
            out[key] = out[key] + add if key in out else add
        return ExtForm(self.n, out)

    def bidegree_component(self, a: int, b: int) -> "ExtForm":
        return ExtForm(
            self.n,
            {
                k: c
                for k, c in self.terms.items()
                if len(k[0]) == a and len(k[1]) == b
            },
        )

    def degree_component(self, k: int) -> "ExtForm":
        return ExtForm(
            self.n,
            {key: c for key, c in self.terms.items() if len(key[0]) + len(key[1]) == k},
        )

    def bidegrees(self) -> list[tuple[int, int]]:
        return sorted({(len(k[0]), len(k[1])) for k in self.terms})

    def homogeneous_bidegree(self) -> tuple[int, int]:
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError(f"form is not homogeneous: bidegrees {degs}")
        return degs[0]

    def __eq__(self, other):
        return (
            isinstance(other, ExtForm)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "0"

        def label(key):
            holo, anti = key
            parts = [f"dz{i}" for i in holo] + [f"dzbar{j}" for j in anti]
            return "^".join(parts) if parts else "1"

        return " + ".join(
            f"({self.terms[k]})*{label(k)}" for k in sorted(self.terms)
        )


# -- basis enumeration ------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def bidegree_keys(n: int, a: int, b: int) -> tuple[Key, ...]:
    indices = range(1, n + 1)
    return tuple(
        (holo, anti)
        for holo in combinations(indices, a)
        for anti in combinations(indices, b)
    )


@functools.lru_cache(maxsize=None)
def all_keys(n: int) -> tuple[Key, ...]:
    keys: list[Key] = []
    for k in range(2 * n + 1):
        for a in range(k + 1):
            b = k - a
            if a <= n and b <= n:
                keys.extend(bidegree_keys(n, a, b))
    return tuple(keys)


# -- the Hermitian structure -------------------------------------------------------


def fundamental_form(n: int) -> ExtForm:
    """sigma = i * sum_j dz_j ^ dzbar_j; real, central, bidegree (1, 1)."""
    if n < 1:
        raise ValueError("model dimension must be at least 1")
    return ExtForm(
        n, {((j,), (j,)): GaussScalar.i_unit() for j in range(1, n + 1)}
    )


def lefschetz_L(omega: ExtForm) -> ExtForm:
    return fundamental_form(omega.n).wedge(omega)


def counting_H(omega: ExtForm) -> ExtForm:
    n = omega.n
    terms = {
        key: coeff * (len(key[0]) + len(key[1]) - n)
        for key, coeff in omega.terms.items()
    }
    return ExtForm(n, terms)


def _lefschetz_power(omega: ExtForm, power: int) -> ExtForm:
    out = omega
    for _ in range(power):
        out = lefschetz_L(out)
    return out


def primitive_test(omega: ExtForm) -> bool:
    """True iff L^(n-a-b+1) annihilates the (a, b)-form; forms above the
    middle degree are primitive only when zero."""
    if omega.is_zero():
        return True
    a, b = omega.homogeneous_bidegree()
    n = omega.n
    if a + b > n:
        return False
    return _lefschetz_power(omega, n - a - b + 1).is_zero()


# -- exact linear algebra over GaussScalar ------------------------------------------


def _eliminate(rows: list[list[GaussScalar]]) -> tuple[list[list[GaussScalar]], list[int]]:
    """Row-reduce in place; returns (rows, pivot column indices)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = GaussScalar.one() / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _solve(columns: list[list[GaussScalar]], target: list[GaussScalar]) -> list[GaussScalar]:
    """Solve sum_m x_m columns[m] = target exactly; raises if inconsistent."""
    nrows = len(target)
    aug = [
        [columns[m][r] for m in range(len(columns))] + [target[r]]
        for r in range(nrows)
    ]
    reduced, pivots = _eliminate(aug)
    ncols = len(columns)
    solution = [GaussScalar() for _ in range(ncols)]
    for row, col in zip(reduced, pivots):
        if col == ncols:
            raise ArithmeticError("inconsistent linear system in exact solve")
        solution[col] = row[ncols]
    # rows beyond the pivots must be zero
    for i in range(len(pivots), nrows):
        if reduced[i][ncols]:
            raise ArithmeticError("inconsistent linear system in exact solve")
    return solution


def _kernel_basis(columns: list[list[GaussScalar]], width: int) -> list[list[GaussScalar]]:
    """Kernel of the matrix with the given columns (width = #columns)."""
    if width == 0:
        return []
    nrows = len(columns[0]) if columns else 0
    rows = [[columns[m][r] for m in range(width)] for r in range(nrows)]
    reduced, pivots = _eliminate(rows)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [GaussScalar() for _ in range(width)]
        vec[f] = GaussScalar.one()
        for row, col in zip(reduced, pivots):
            vec[col] = -row[f]
        basis.append(vec)
    return basis


def _coords(omega: ExtForm, keys: tuple[Key, ...]) -> list[GaussScalar]:
    return [omega.terms.get(key, GaussScalar()) for key in keys]


# -- Lefschetz decomposition and the Hodge map --------------------------------------


@functools.lru_cache(maxsize=None)
def _primitive_basis(n: int, a: int, b: int) -> tuple[ExtForm, ...]:
    """Basis of the primitive (a, b)-forms, as the exact kernel of
    L^(n-a-b+1) on the bidegree block."""
    if a + b > n:
        return ()
    keys = bidegree_keys(n, a, b)
    power = n - a - b + 1
    image_keys = bidegree_keys(n, a + power, b + power)
    columns = [
        _coords(_lefschetz_power(ExtForm.basis(n, key), power), image_keys)
        for key in keys
    ]
    kernel = _kernel_basis(columns, len(keys))
    out = []
    for vec in kernel:
        form = ExtForm(n, dict(zip(keys, vec)))
        out.append(form)
    return tuple(out)


def lefschetz_decompose(omega: ExtForm) -> list[tuple[int, ExtForm]]:
    """Components (j, w_j) with omega = sum_j L^j(w_j), each w_j primitive.

    Worked blockwise per bidegree: on the (a, b) block the candidates are
    L^j applied to the primitive basis of (a-j, b-j), and the direct-sum
    property makes the exact solve unique.
    """
    n = omega.n
    pieces: dict[int, ExtForm] = {}
    for a, b in omega.bidegrees():
        component = omega.bidegree_component(a, b)
        keys = bidegree_keys(n, a, b)
        candidates: list[tuple[int, ExtForm]] = []
        columns: list[list[GaussScalar]] = []
        for j in range(min(a, b) + 1):
            for prim in _primitive_basis(n, a - j, b - j):
                candidates.append((j, prim))
                columns.append(_coords(_lefschetz_power(prim, j), keys))
        solution = _solve(columns, _coords(component, keys))
        for (j, prim), coeff in zip(candidates, solution):
            if coeff.is_zero():
                continue
            add = prim.scale(coeff)
            pieces[j] = pieces[j] + add if j in pieces else add
    return [(j, pieces[j]) for j in sorted(pieces) if not pieces[j].is_zero()]


def hodge_star(omega: ExtForm) -> ExtForm:
    """Hodge map by the Weil formula on Lefschetz components."""
    n = omega.n
    out = ExtForm.zero(n)
    for j, prim in lefschetz_decompose(omega):
        for a, b in prim.bidegrees():
            part = prim.bidegree_component(a, b)
            k = a + b
            sign = -1 if (k * (k + 1) // 2) % 2 else 1
            coeff = (
                GaussScalar.i_power(a - b)
                * sign
                * Fraction(factorial(j), factorial(n - j - k))
            )
            out = out + _lefschetz_power(part, n - j - k).scale(coeff)
    return out


@functools.lru_cache(maxsize=None)
def _star_images(n: int) -> dict[Key, ExtForm]:
    return {key: hodge_star(ExtForm.basis(n, key)) for key in all_keys(n)}


@functools.lru_cache(maxsize=None)
def _star_inverse_images(n: int) -> dict[Key, ExtForm]:
    """Exact inverse of the Hodge map, solved blockwise: the star maps the
    (a, b) block bijectively onto the (n-b, n-a) block."""
    images = _star_images(n)
    inverse: dict[Key, ExtForm] = {}
    for k in range(2 * n + 1):
        for a in range(k + 1):
            b = k - a
            if a > n or b > n:
                continue
            src = bidegree_keys(n, a, b)
            dst = bidegree_keys(n, n - b, n - a)
            columns = [_coords(images[key], dst) for key in src]
            for pos, target_key in enumerate(dst):
                rhs = [
                    GaussScalar.one() if q == pos else GaussScalar()
                    for q in range(len(dst))
                ]
                solution = _solve(columns, rhs)
                inverse[target_key] = ExtForm(n, dict(zip(src, solution)))
    return inverse


def _apply(images: dict[Key, ExtForm], omega: ExtForm) -> ExtForm:
    out = ExtForm.zero(omega.n)
    for key, coeff in omega.terms.items():
        out = out + images[key].scale(coeff)
    return out


def hodge_star_inverse(omega: ExtForm) -> ExtForm:
    return _apply(_star_inverse_images(omega.n), omega)


def adjoint_Lambda(omega: ExtForm) -> ExtForm:
    """Dual Lefschetz operator star^-1 o L o star."""
    return hodge_star_inverse(lefschetz_L(_apply(_star_images(omega.n), omega)))


def metric(omega: ExtForm, nu: ExtForm) -> GaussScalar:
    """g(w, v) = star(w ^ star(v*)) on matching degrees, zero otherwise;
    sesquilinear, conjugate-linear in the second slot."""
    n = omega.n
    total = GaussScalar()
    degrees = {len(k[0]) + len(k[1]) for k in omega.terms} & {
        len(k[0]) + len(k[1]) for k in nu.terms
    }
    for k in degrees:
        w = omega.degree_component(k)
        v = nu.degree_component(k)
        result = hodge_star(w.wedge(hodge_star(v.conjugate())))
        for key, coeff in result.terms.items():
            assert key == SCALAR_KEY, "metric must land in degree zero"
            total = total + coeff
    return total


# -- verification suites -------------------------------------------------------------


def sl2_check(n: int) -> bool:
    """Check [H, L] = 2L, [L, Lambda] = H, [H, Lambda] = -2 Lambda on the
    whole model algebra."""
    if n > SL2_RANK_BOUND:
        raise ValueError(f"sl2_check is capped at model rank {SL2_RANK_BOUND}")
    star = _star_images(n)
    star_inv = _star_inverse_images(n)

    def lam(form):
        return _apply(star_inv, lefschetz_L(_apply(star, form)))

    for key in all_keys(n):
        e = ExtForm.basis(n, key)
        le, he = lefschetz_L(e), counting_H(e)
        if counting_H(le) - lefschetz_L(he) != le.scale(2):
            return False
        if lefschetz_L(lam(e)) - lam(le) != he:
            return False
        if counting_H(lam(e)) - lam(he) != lam(e).scale(-2):
            return False
    return True


def lefschetz_power_bijective(n: int, k: int) -> bool:
    """L^(n-k) as a map from degree k to degree 2n-k is an isomorphism."""
    if not 0 <= k < n:
        raise ValueError("require 0 <= k < n")
    src = [key for key in all_keys(n) if len(key[0]) + len(key[1]) == k]
    dst = [key for key in all_keys(n) if len(key[0]) + len(key[1]) == 2 * n - k]
    assert len(src) == len(dst)
    columns = []
    for key in src:
        image = _lefschetz_power(ExtForm.basis(n, key), n - k)
        columns.append([image.terms.get(d, GaussScalar()) for d in dst])
    rows = [[columns[m][r] for m in range(len(src))] for r in range(len(dst))]
    _, pivots = _eliminate(rows)
    return len(pivots) == len(src)


def gram_matrix(n: int, a: int, b: int) -> list[list[GaussScalar]]:
    keys = bidegree_keys(n, a, b)
    forms = [ExtForm.basis(n, key) for key in keys]
    return [[metric(p, q) for q in forms] for p in forms]


def hermitian_positive_definite(matrix: list[list[GaussScalar]]) -> bool:
    """Sylvester criterion with exact leading principal minors."""
    size = len(matrix)
    for i in range(size):
        for j in range(size):
            if matrix[i][j] != matrix[j][i].conj():
                return False
    for lead in range(1, size + 1):
        sub = [row[:lead] for row in matrix[:lead]]
        det = _determinant_gauss(sub)
        if det.im != 0 or det.re <= 0:
            return False
    return True


def _determinant_gauss(matrix: list[list[GaussScalar]]) -> GaussScalar:
    size = len(matrix)
    work = [row[:] for row in matrix]
    det = GaussScalar.one()
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col]), None)
        if pivot is None:
            return GaussScalar()
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = GaussScalar.one() / work[col][col]
        for r in range(col + 1, size):
            if work[r][col]:
                factor = work[r][col] * inv
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return det


def gram_positive_definite(n: int) -> bool:
    """The metric Gram matrix of every bidegree block is Hermitian
    positive-definite."""
    for a in range(n + 1):
        for b in range(n + 1):
            if not hermitian_positive_definite(gram_matrix(n, a, b)):
                return False
    return True


def lambda_is_metric_adjoint(n: int) -> bool:
    """g(L w, v) = g(w, Lambda v) across consecutive degrees."""
    keys_by_degree: dict[int, list[Key]] = {}
    for key in all_keys(n):
        keys_by_degree.setdefault(len(key[0]) + len(key[1]), []).append(key)
    for k in range(2 * n):
        for key1 in keys_by_degree.get(k, []):
            w = ExtForm.basis(n, key1)
            lw = lefschetz_L(w)
            for key2 in keys_by_degree.get(k + 1, []):
                v = ExtForm.basis(n, key2)
                if metric(lw, v) != metric(w, adjoint_Lambda(v)):
                    return False
    return True
