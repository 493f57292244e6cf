"""Induced K_0-maps between crossed products, their kernel/image structure,
the direct-summand lemma for paired maps, and rank arithmetic for the
six-term exact sequence of free and amalgamated products.

Every map is handled through integral coordinates relative to the tabulated
Z-bases; the rational flattened characters are only used to find those
coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import lattice as lat
from .ktables import (
    SCHEMAS,
    Z2,
    Z3,
    Z6,
    CharacterVector,
    SlotSchema,
    Tables,
    ThetaWindow,
    Z4,
    flat_matrix,
    load_tables,
    rieffel_vector,
    unit_vector,
)

# K_0(A_theta x Z_n) = Z^r(n)
R_RANKS = {2: 6, 3: 8, 4: 9, 6: 10}

CITED_K1_VANISHES = "K_1(A_theta x Z_n) = 0 for n = 2, 3, 4, 6 (cited)"
CITED_K0_ATHETA = "K_0(A_theta) = K_1(A_theta) = Z^2 (cited)"
CITED_FREE_VERTICAL = "vertical map K_0(A_theta x Z_m,n) -> K_1(A_theta) is onto a free abelian group (cited)"


class NonIntegralImage(ValueError):
    pass


class PreconditionViolated(ValueError):
    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)


@lru_cache(maxsize=None)
def default_tables() -> Tables:
    return load_tables()


@dataclass(frozen=True)
class SlotMap:
    """Linear formula giving each target slot in terms of source slots."""

    source: SlotSchema
    target: SlotSchema
    rows: tuple[dict[str, Fraction], ...]

    def __call__(self, x: CharacterVector) -> CharacterVector:
        if x.schema != self.source:
            raise ValueError(f"expected a {self.source.name} vector")
        entries = []
        for formula in self.rows:
            total = 0 * x.entries[0]
            for label, k in formula.items():
                total = total + x[label] * k
            entries.append(total)
        return CharacterVector(self.target, tuple(entries))


_Q = Fraction(1, 4)

# Z_2 -> Z_4, W -> Z^2
IOTA = SlotMap(Z2, Z4, (
    {"tau": Fraction(1)}, {}, {},
    {"tau00": _Q}, {"tau11": _Q}, {"tau01": _Q, "tau10": _Q},
))
# Z_2 -> Z_6, W -> X^3
IOTA_PRIME = SlotMap(Z2, Z6, (
    {"tau": Fraction(1)}, {}, {}, {},
    {"tau00": _Q}, {"tau00": _Q, "tau11": _Q, "tau01": _Q, "tau10": _Q},
))
# Z_3 -> Z_6, Y -> X^2
KAPPA = SlotMap(Z3, Z6, (
    {"tau": Fraction(1)}, {},
    {"S10": Fraction(1)}, {"S10": Fraction(1), "S11": Fraction(1), "S12": Fraction(1)},
    {}, {},
))


@dataclass(frozen=True)
class MapReport:
    name: str
    source_rank: int
    target_rank: int
    coord_matrix: lat.IntMatrix
    kernel: lat.IntMatrix
    image_rank: int
    image_is_summand: bool
    kernel_is_summand: bool
    image_basis: lat.IntMatrix = field(default_factory=list)
    completion: lat.IntMatrix | None = None
    images: tuple[CharacterVector, ...] = ()

    @property
    def kernel_rank(self) -> int:
        return len(self.kernel)

    @property
    def cokernel_rank(self) -> int:
        return self.target_rank - self.image_rank

    def exact_sequence_ranks(self) -> tuple[int, int, int, int]:
        """(kernel, source, image, cokernel) ranks."""
        return (self.kernel_rank, self.source_rank, self.image_rank, self.cokernel_rank)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "source_rank": self.source_rank,
            "target_rank": self.target_rank,
            "coord_matrix": self.coord_matrix,
            "kernel": self.kernel,
            "image_rank": self.image_rank,
            "image_is_summand": self.image_is_summand,
            "kernel_is_summand": self.kernel_is_summand,
            "completion": self.completion,
        }


def express_in_basis(v: CharacterVector, basis, what: str = "vector") -> list[int]:
    try:
        return lat.solve_integral(flat_matrix(basis), v.flat())
    except lat.RationalButNotIntegral as exc:
        raise NonIntegralImage(f"{what} has non-integral coordinates {[str(x) for x in exc.solution]}") from exc
    except lat.NoRationalSolution as exc:
        raise NonIntegralImage(f"{what} is outside the span of the target basis") from exc


def map_report(name: str, images, target_basis, source_rank: int | None = None) -> MapReport:
    images = tuple(images)
    coords = [express_in_basis(v, target_basis, f"{name} image {k}") for k, v in enumerate(images, 1)]
    return report_from_matrix(name, coords, len(target_basis), images=images)


def report_from_matrix(name: str, coords: lat.IntMatrix, target_rank: int, images=()) -> MapReport:
    kernel = lat.kernel_basis(coords)
    basis = lat.row_basis(coords)
    summand = lat.is_direct_summand(coords)
    completion = lat.complete_to_basis(coords, target_rank) if summand else None
    return MapReport(
        name=name,
        source_rank=len(coords),
        target_rank=target_rank,
        coord_matrix=coords,
        kernel=kernel,
        image_rank=len(basis),
        image_is_summand=summand,
        kernel_is_summand=lat.is_direct_summand(kernel) if kernel else True,
        image_basis=basis,
        completion=completion,
        images=tuple(images),
    )


def induced_iota_star(window: ThetaWindow = ThetaWindow.LOW, tables: Tables | None = None) -> MapReport:
    t = tables or default_tables()
    return map_report("iota_*", (IOTA(x) for x in t.xi(window)), t.eta)


def induced_iota_prime_star(window: ThetaWindow = ThetaWindow.LOW, tables: Tables | None = None) -> MapReport:
    t = tables or default_tables()
    return map_report("iota'_*", (IOTA_PRIME(x) for x in t.xi(window)), t.mu)


def induced_kappa_star(tables: Tables | None = None) -> MapReport:
    t = tables or default_tables()
    return map_report("kappa_*", (KAPPA(x) for x in t.lam), t.mu)


def inclusion_map(d: int, n: int, window: ThetaWindow = ThetaWindow.LOW, tables: Tables | None = None) -> MapReport:
    """K_0 map induced by the inclusion of the Z_d crossed product into the Z_n one."""
    if (d, n) == (2, 4):
        return induced_iota_star(window, tables)
    if (d, n) == (2, 6):
        return induced_iota_prime_star(window, tables)
    if (d, n) == (3, 6):
        return induced_kappa_star(tables)
    raise ValueError(f"no canonical inclusion Z_{d} -> Z_{n} in scope")


def unit_and_rieffel_images(n: int, window: ThetaWindow = ThetaWindow.LOW, tables: Tables | None = None) -> MapReport:
    """i_*: K_0(A_theta) = Z[1] + Z[e_theta] -> K_0(A_theta x Z_n)."""
    if n not in SCHEMAS:
        raise ValueError(f"n must be one of {sorted(SCHEMAS)}")
    t = tables or default_tables()
    return map_report(f"i_* (n={n})", (unit_vector(n), rieffel_vector(n)), t.basis(n, window))


def _kernel_contained(f: MapReport, g: MapReport) -> bool:
    for x in f.kernel:
        if not g.kernel:
            return False
        try:
            lat.solve_integral(g.kernel, x)
        except (lat.NoRationalSolution, lat.RationalButNotIntegral):
            return False
    return True


def check_lemma_hypotheses(f: MapReport, g: MapReport) -> None:
    if f.source_rank != g.source_rank:
        raise PreconditionViolated("f and g share a source", f"{f.source_rank} != {g.source_rank}")
    if not f.image_is_summand:
        raise PreconditionViolated("image of f is a direct summand", f.name)
    if not g.image_is_summand:
        raise PreconditionViolated("image of g is a direct summand", g.name)
    if not _kernel_contained(f, g):
        raise PreconditionViolated("ker f is contained in ker g", f"{f.name} vs {g.name}")


def summand_lemma_check(f: MapReport, g: MapReport) -> bool:
    """Verify that x -> (f(x), g(x)) has direct summand image, after checking
    the lemma's hypotheses (raises ``PreconditionViolated`` naming the one that fails)."""
    check_lemma_hypotheses(f, g)
    return lat.is_direct_summand(lat.hstack(f.coord_matrix, g.coord_matrix))


@dataclass(frozen=True)
class KGroupResult:
    case_label: str
    k0_rank: int
    k1_rank: int
    image_rank: int
    kernel: lat.IntMatrix
    trail: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "case": self.case_label,
            "k0_rank": self.k0_rank,
            "k1_rank": self.k1_rank,
            "image_rank": self.image_rank,
            "kernel": self.kernel,
            "trail": list(self.trail),
        }


def _difference_map(f: MapReport, g: MapReport) -> lat.IntMatrix:
    return lat.hstack(f.coord_matrix, [[-x for x in row] for row in g.coord_matrix])


def _lemma_in_some_order(f: MapReport, g: MapReport) -> str:
    """The lemma is symmetric in f and g up to swapping blocks; try both orders."""
    try:
        ok = summand_lemma_check(f, g)
        order = f"lemma applied with f={f.name}, g={g.name}"
    except PreconditionViolated as first:
        try:
            ok = summand_lemma_check(g, f)
        except PreconditionViolated:
            raise first from None
        order = f"lemma applied with f={g.name}, g={f.name}"
    if not ok:
        raise PreconditionViolated("paired map has direct summand image", order)
    return order


def check_table_ranks(ns, tables: Tables, window: ThetaWindow = ThetaWindow.LOW) -> None:
    for n in ns:
        got = lat.rational_rank(flat_matrix(tables.basis(n, window)))
        if got != R_RANKS[n]:
            raise PreconditionViolated(f"r({n}) = {R_RANKS[n]} matches the table rank", f"table rank {got}")


def _natsume(label: str, m: int, n: int, f: MapReport, g: MapReport, k1_of_base: int, trail: list[str]) -> KGroupResult:
    if f.target_rank != R_RANKS[m] or g.target_rank != R_RANKS[n]:
        raise PreconditionViolated("map targets match r(m), r(n)", f"{f.target_rank}, {g.target_rank}")
    trail.append(_lemma_in_some_order(f, g))
    h = _difference_map(f, g)
    if not lat.is_direct_summand(h):
        raise PreconditionViolated("image of i_1* - i_2* is a direct summand")
    s = lat.rank(h)
    kernel = lat.kernel_basis(h)
    trail.append(f"image of i_1* - i_2* is a rank-{s} direct summand of Z^{R_RANKS[m] + R_RANKS[n]}")
    # K_0 is an extension of the free group ker(K_1(base) -> 0) = Z^k1_of_base
    # by the free cokernel, hence free of the summed rank.
    return KGroupResult(
        case_label=label,
        k0_rank=R_RANKS[m] + R_RANKS[n] - s + k1_of_base,
        k1_rank=len(kernel),
        image_rank=s,
        kernel=kernel,
        trail=tuple(trail),
    )


def natsume_amalgamated(m: int, n: int, d: int, f: MapReport, g: MapReport, tables: Tables | None = None) -> KGroupResult:
    """K-group ranks of A_theta x (Z_m *_{Z_d} Z_n) from the two inclusion maps."""
    t = tables or default_tables()
    check_table_ranks({m, n, d}, t)
    if f.source_rank != R_RANKS[d] or g.source_rank != R_RANKS[d]:
        raise PreconditionViolated("maps have source K_0(A_theta x Z_d)", f"r({d}) = {R_RANKS[d]}")
    trail = [CITED_K1_VANISHES]
    return _natsume(f"amalg:{m},{n};{d}", m, n, f, g, 0, trail)


def natsume_free(m: int, n: int, window: ThetaWindow = ThetaWindow.LOW, tables: Tables | None = None) -> KGroupResult:
    """K-group ranks of A_theta x (Z_m * Z_n)."""
    t = tables or default_tables()
    check_table_ranks({m, n}, t, window)
    f = unit_and_rieffel_images(m, window, t)
    g = unit_and_rieffel_images(n, window, t)
    for rep in (f, g):
        if rep.kernel or not rep.image_is_summand:
            raise PreconditionViolated("i_* is injective onto a direct summand", rep.name)
    trail = [CITED_K1_VANISHES, CITED_K0_ATHETA, CITED_FREE_VERTICAL]
    return _natsume(f"free:{m},{n}", m, n, f, g, 2, trail)


AMALGAMATED_CASES = ((4, 4, 2), (4, 6, 2), (6, 6, 2), (6, 6, 3))
FREE_CASES = ((2, 2), (2, 3), (2, 4), (2, 6), (3, 3), (3, 4), (3, 6), (4, 4), (4, 6), (6, 6))


def amalgamated_case(m: int, n: int, d: int, window: ThetaWindow = ThetaWindow.LOW, tables: Tables | None = None) -> KGroupResult:
    t = tables or default_tables()
    f = inclusion_map(d, m, window, t)
    g = inclusion_map(d, n, window, t)
    return natsume_amalgamated(m, n, d, f, g, t)
