"""Root systems and weights for series A, B, C, D, E6, E7.

Conventions. The bilinear form is normalised so every shortest simple root
has (a_i, a_i) = 2, the symmetrizers are d_i = 2/(a_i, a_i), and the Cartan
matrix is a_ij = (a_i^v, a_j) = d_i (a_i, a_j).  Note d_i <= 1 for long
roots, the reciprocal of the common convention, and the resulting B/C
Cartan matrices are the transposes of the Humphreys/Bourbaki ones.  All
downstream formulas in this package use these conventions consistently;
compare against external tables only after transposing.

Node numbering is Bourbaki.  Positive roots are enumerated by reflection
closure from the simple roots, so no per-series root tables are needed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

SERIES = ("A", "B", "C", "D", "E6", "E7")

# classical positive-root counts, used as a guard on the closure algorithm
def positive_root_count(series: str, rank: int) -> int:
    return {
        "A": rank * (rank + 1) // 2,
        "B": rank * rank,
        "C": rank * rank,
        "D": rank * (rank - 1),
        "E6": 36,
        "E7": 63,
    }[series]


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[Fraction, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    highest_root: tuple[int, ...]

    def __repr__(self):
        return f"RootSystem({self.series}{self.rank})"


@dataclass(frozen=True)
class Weight:
    """Weight in the fundamental-weight basis; exact rational coords."""

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coords) -> "Weight":
        return cls(tuple(Fraction(c) for c in coords))

    def is_dominant_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, factor) -> "Weight":
        factor = Fraction(factor)
        return Weight(tuple(factor * c for c in self.coords))


def fundamental_weight(rs: RootSystem, node: int, multiple: int = 1) -> Weight:
    _check_node(rs, node)
    return Weight(
        tuple(Fraction(multiple if j == node else 0) for j in range(1, rs.rank + 1))
    )


def weyl_vector(rs: RootSystem) -> Weight:
    return Weight(tuple(Fraction(1) for _ in range(rs.rank)))


# -- construction -------------------------------------------------------------


def _validate_rank(series: str, rank: int):
    if series == "A" and rank >= 1:
        return
    if series in ("B", "C") and rank >= 2:
        return
    # D_3 = A_3 is accepted as an exceptional-isomorphism cross-check
    if series == "D" and rank >= 3:
        return
    if series == "E6" and rank == 6:
        return
    if series == "E7" and rank == 7:
        return
    raise ValueError(f"invalid rank {rank} for series {series}")


def _edges(series: str, rank: int) -> list[tuple[int, int]]:
    """Dynkin diagram edges, 0-based, Bourbaki numbering."""
    if series in ("A", "B", "C"):
        return [(i, i + 1) for i in range(rank - 1)]
    if series == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    if series == "E6":
        return [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
    if series == "E7":
        return [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)]
    raise ValueError(f"unknown series {series}")


def _root_lengths(series: str, rank: int) -> list[int]:
    """(a_i, a_i) per node, shortest normalised to 2."""
    if series == "B":
        return [4] * (rank - 1) + [2]
    if series == "C":
        return [2] * (rank - 1) + [4]
    return [2] * rank


def _simple_root_gram(series: str, rank: int) -> list[list[Fraction]]:
    """Symmetric matrix of (a_i, a_j)."""
    lengths = _root_lengths(series, rank)
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        gram[i][i] = Fraction(lengths[i])
    for i, j in _edges(series, rank):
        # joined nodes of lengths 2,2 pair to -1; 2,4 or 4,4 pair to -2
        val = Fraction(-1) if lengths[i] == lengths[j] == 2 else Fraction(-2)
        gram[i][j] = val
        gram[j][i] = val
    return gram


def _reflection_closure(cartan: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """All positive roots, as integer vectors in the simple-root basis.

    Start from the simple roots and close under the simple reflections
    s_i(b) = b - (b, a_i^v) a_i, keeping vectors with all coefficients
    nonnegative.  Every positive root is reachable this way.
    """
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = set(simple)
    while frontier:
        fresh = set()
        for beta in frontier:
            for i in range(rank):
                pairing = sum(cartan[i][j] * beta[j] for j in range(rank))
                image = list(beta)
                image[i] -= pairing
                image = tuple(image)
                if image in roots or any(c < 0 for c in image):
                    continue
                if all(c == 0 for c in image):
                    continue
                fresh.add(image)
        roots |= fresh
        frontier = fresh
    return sorted(roots)


@functools.lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    if series not in SERIES:
        raise ValueError(f"unknown series {series!r}, expected one of {SERIES}")
    _validate_rank(series, rank)
    gram = _simple_root_gram(series, rank)
    symmetrizers = tuple(Fraction(2, int(gram[i][i])) for i in range(rank))
    cartan_rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            entry = symmetrizers[i] * gram[i][j]
            assert entry.denominator == 1, "Cartan matrix must be integral"
            row.append(int(entry))
        assert row[i] == 2
        cartan_rows.append(tuple(row))
    cartan = tuple(cartan_rows)

    positive = _reflection_closure(cartan)
    assert len(positive) == positive_root_count(series, rank), (
        f"{series}{rank}: closure found {len(positive)} positive roots, "
        f"expected {positive_root_count(series, rank)}"
    )
    peak = tuple(max(r[j] for r in positive) for j in range(rank))
    assert peak in positive, "componentwise maximum is not itself a root"
    return RootSystem(
        series=series,
        rank=rank,
        cartan=cartan,
        symmetrizers=symmetrizers,
        positive_roots=tuple(positive),
        highest_root=peak,
    )


# -- exact linear algebra on the Cartan matrix ---------------------------------


def _solve_cartan(rs: RootSystem, rhs: list[Fraction]) -> list[Fraction]:
    """Solve A x = rhs exactly by Gaussian elimination."""
    n = rs.rank
    aug = [[Fraction(rs.cartan[i][j]) for j in range(n)] + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def weight_to_root_basis(rs: RootSystem, weight: Weight) -> tuple[Fraction, ...]:
    """Coordinates x with weight = sum x_i a_i, solved from
    (weight, a_j^v) = coords_j, i.e. A x = coords."""
    if len(weight.coords) != rs.rank:
        raise ValueError("weight has wrong rank")
    return tuple(_solve_cartan(rs, list(weight.coords)))


def bilinear_form(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    """(lam, mu) via root-basis conversion and (a_i, a_j) = a_ij / d_i."""
    x = weight_to_root_basis(rs, lam)
    # (lam, a_j) = mu-independent pairing; use (lam, a_j^v)/d_j = coords_j/d_j
    # on the second slot to avoid a second solve.
    total = Fraction(0)
    for j in range(rs.rank):
        if mu.coords[j]:
            total += x[j] * mu.coords[j] / rs.symmetrizers[j]
    return total


def inverse_cartan_entry(rs: RootSystem, node: int) -> Fraction:
    """Diagonal entry (A^-1)_ss; the same for A and its transpose."""
    _check_node(rs, node)
    rhs = [Fraction(1 if j == node - 1 else 0) for j in range(rs.rank)]
    return _solve_cartan(rs, rhs)[node - 1]


def _check_node(rs: RootSystem, node: int):
    if not 1 <= node <= rs.rank:
        raise ValueError(f"node {node} out of range 1..{rs.rank}")


# -- representation dimensions ---------------------------------------------------


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """dim V_lam by the Weyl product over positive roots.

    Uses (lam, a_j) = coords_j / d_j, so each factor is an exact rational;
    the final product is asserted to be a positive integer.
    """
    if not lam.is_dominant_integral():
        raise ValueError(f"weight {lam.coords} is not dominant integral")
    shifted = [lam.coords[j] + 1 for j in range(rs.rank)]  # lam + rho
    rho = [Fraction(1)] * rs.rank
    num = Fraction(1)
    den = Fraction(1)
    for beta in rs.positive_roots:
        num *= sum(
            beta[j] * shifted[j] / rs.symmetrizers[j] for j in range(rs.rank)
        )
        den *= sum(beta[j] * rho[j] / rs.symmetrizers[j] for j in range(rs.rank))
    dim = num / den
    assert dim.denominator == 1 and dim > 0, "Weyl product must be a positive integer"
    return int(dim)


def cominuscule_nodes(rs: RootSystem) -> tuple[int, ...]:
    """Nodes whose coefficient in the highest root equals 1 (1-based, sorted)."""
    return tuple(
        i + 1 for i, c in enumerate(rs.highest_root) if c == 1
    )
