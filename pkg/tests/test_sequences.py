import pytest

from rotkit import lattice as lat
from rotkit.ktables import ThetaWindow, builtin_tables, combination
from rotkit.sequences import (
    AMALGAMATED_CASES,
    FREE_CASES,
    IOTA,
    R_RANKS,
    NonIntegralImage,
    PreconditionViolated,
    amalgamated_case,
    express_in_basis,
    induced_iota_prime_star,
    induced_iota_star,
    induced_kappa_star,
    map_report,
    natsume_amalgamated,
    natsume_free,
    report_from_matrix,
    summand_lemma_check,
    unit_and_rieffel_images,
)

WINDOWS = (ThetaWindow.LOW, ThetaWindow.HIGH)
TABLES = builtin_tables()


def reports_with_targets():
    for w in WINDOWS:
        yield induced_iota_star(w), TABLES.eta
        yield induced_iota_prime_star(w), TABLES.mu
        for n in (2, 3, 4, 6):
            yield unit_and_rieffel_images(n, w), TABLES.basis(n, w)
    yield induced_kappa_star(), TABLES.mu


def all_reports():
    return [rep for rep, _ in reports_with_targets()]


def test_iota_examples():
    rep = induced_iota_star()
    assert rep.coord_matrix[0] == [1, 1, -2, 1, 1, -2, 1, 0, -1]
    assert rep.coord_matrix[1] == [1, 0, 0, 0, 0, 0, 0, 0, 0]
    assert rep.kernel == [[0, 0, 1, -1, 0, 0]]
    assert rep.exact_sequence_ranks() == (1, 6, 5, 4)


def test_iota_prime_examples():
    rep = induced_iota_prime_star()
    assert rep.coord_matrix[5] == [0, 0, 2, 2, 1, 1, -1, 1, -2, 3]
    assert rep.kernel == [[0, 0, 1, 0, -1, 0], [0, 0, 0, 1, -1, 0]]
    assert rep.exact_sequence_ranks() == (2, 6, 4, 6)


def test_kappa_examples():
    rep = induced_kappa_star()
    assert rep.coord_matrix[1] == [0, 1, 0, 0, 1, 0, 0, 0, 0, 0]
    assert rep.coord_matrix[7] == [0, 0, 1, 1, 1, 0, 0, 0, -1, 2]
    assert lat.row_basis(rep.kernel) == lat.row_basis([[0, 0, 0, 1, 0, -1, 0, 0], [0, 0, 0, 0, 1, 0, -1, 0]])
    assert rep.exact_sequence_ranks() == (2, 8, 6, 4)
    assert rep.image_is_summand and rep.kernel_is_summand


def test_rieffel_examples():
    assert unit_and_rieffel_images(6).coord_matrix[1] == [0, -1, 4, 3, 2, 1, -2, 2, -3, 6]
    assert unit_and_rieffel_images(3).coord_matrix[1] == [0, -1, 1, -1, 1, -1, 1, 3]
    assert unit_and_rieffel_images(2, ThetaWindow.LOW).coord_matrix[1] == [0, -1, 1, -1, 1, 2]


def test_rieffel_flip_coefficients_follow_window_sign():
    # in general the expansion is (0, -1, -c, c, 1, 2)
    for w in WINDOWS:
        assert unit_and_rieffel_images(2, w).coord_matrix[1] == [0, -1, -w.c, w.c, 1, 2]


@pytest.mark.parametrize("rep", all_reports(), ids=lambda r: r.name)
def test_rank_nullity(rep):
    assert rep.image_rank + rep.kernel_rank == rep.source_rank
    assert rep.image_rank + rep.cokernel_rank == rep.target_rank


@pytest.mark.parametrize("rep, target", list(reports_with_targets()), ids=lambda r: getattr(r, "name", ""))
def test_coordinates_reproduce_images(rep, target):
    assert len(rep.images) == rep.source_rank
    for coords, image in zip(rep.coord_matrix, rep.images):
        assert combination(coords, target) == image


@pytest.mark.parametrize("rep", all_reports(), ids=lambda r: r.name)
def test_completion_witness(rep):
    assert rep.image_is_summand
    stacked = rep.image_basis + rep.completion
    assert len(stacked) == rep.target_rank
    assert abs(lat.det(stacked)) == 1


def test_window_independence():
    lo, hi = induced_iota_star(ThetaWindow.LOW), induced_iota_star(ThetaWindow.HIGH)
    assert (lo.kernel, lo.image_rank, lo.image_is_summand) == (hi.kernel, hi.image_rank, hi.image_is_summand)


def test_non_integral_image():
    # xi6 pushed forward is not an integral combination of the first eight eta's
    xi6 = IOTA(TABLES.xi_low[5])
    with pytest.raises(NonIntegralImage):
        express_in_basis(xi6, TABLES.eta[:8])
    with pytest.raises(NonIntegralImage):
        map_report("half", [TABLES.eta[0] * 1], [TABLES.eta[0] * 2])


def test_lemma_examples():
    iota, iota_p = induced_iota_star(), induced_iota_prime_star()
    assert summand_lemma_check(iota, iota)
    assert summand_lemma_check(iota, iota_p)
    ident = report_from_matrix("id", lat.identity(2), 2)
    zero = report_from_matrix("zero", lat.zeros(2, 2), 2)
    assert summand_lemma_check(ident, zero)


def test_lemma_names_the_failed_hypothesis():
    iota, iota_p = induced_iota_star(), induced_iota_prime_star()
    with pytest.raises(PreconditionViolated) as info:
        summand_lemma_check(iota_p, iota)
    assert info.value.hypothesis == "ker f is contained in ker g"
    doubled = report_from_matrix("2id", [[2, 0], [0, 1]], 2)
    with pytest.raises(PreconditionViolated) as info:
        summand_lemma_check(doubled, doubled)
    assert info.value.hypothesis == "image of f is a direct summand"
    with pytest.raises(PreconditionViolated) as info:
        summand_lemma_check(iota, induced_kappa_star())
    assert info.value.hypothesis == "f and g share a source"


@pytest.mark.parametrize("case, expected", [
    ((4, 4, 2), (13, 1)), ((4, 6, 2), (14, 1)), ((6, 6, 2), (16, 2)), ((6, 6, 3), (14, 2)),
])
@pytest.mark.parametrize("w", WINDOWS, ids=lambda w: w.name.lower())
def test_amalgamated_ranks(case, expected, w):
    res = amalgamated_case(*case, window=w)
    assert (res.k0_rank, res.k1_rank) == expected
    assert res.kernel == lat.kernel_basis(
        lat.hstack(*[r.coord_matrix for r in (
            _leg(case[2], case[0], w), _leg(case[2], case[1], w, negate=True))]))


def _leg(d, n, w, negate=False):
    from rotkit.sequences import inclusion_map

    rep = inclusion_map(d, n, w)
    if negate:
        return report_from_matrix(rep.name, [[-x for x in row] for row in rep.coord_matrix], rep.target_rank)
    return rep


def test_natsume_amalgamated_rejects_wrong_source():
    with pytest.raises(PreconditionViolated):
        natsume_amalgamated(4, 6, 3, induced_iota_star(), induced_iota_prime_star())


@pytest.mark.parametrize("m, n", FREE_CASES)
@pytest.mark.parametrize("w", WINDOWS, ids=lambda w: w.name.lower())
def test_free_ranks(m, n, w):
    res = natsume_free(m, n, w)
    assert res.k0_rank == R_RANKS[m] + R_RANKS[n]
    assert res.k1_rank == 0
    assert any("cited" in line for line in res.trail)


def test_free_examples():
    assert natsume_free(2, 3).k0_rank == 14
    assert natsume_free(6, 6).k0_rank == 20
    assert natsume_free(2, 2).k0_rank == 12


def test_case_lists():
    assert len(FREE_CASES) == 10
    assert AMALGAMATED_CASES == ((4, 4, 2), (4, 6, 2), (6, 6, 2), (6, 6, 3))


def test_report_json():
    data = induced_iota_star().to_json()
    assert data["kernel"] == [[0, 0, 1, -1, 0, 0]]
    assert data["image_rank"] == 5
