"""Toric ideals, reduced bases, standard pairs and the dual-route checks."""

import random

import pytest

from toricip import (
    Binomial,
    ConsistencyError,
    NonGenericCostError,
    NotPureError,
    StandardPair,
    groebner_basis,
    initial_ideal,
    is_gomory_family,
    normal_form,
    radical,
    standard_pair_decomposition,
    standard_pairs,
    tdi_check,
    toric_ideal,
    triangulation_from_radical,
)
from toricip.linalg import dot, mat_vec

from fixtures import (
    C_GOMORY,
    C_LOWFACE,
    C_SIMPLE,
    GOMORY_PAIRS,
    LOWFACE_FACES,
    LOWFACE_OPTIMUM,
    LOWFACE_PAIRS,
    LOWFACE_VALUE,
)


def pairs_by_face(pairs):
    out = {}
    for sp in pairs:
        out.setdefault(sp.face, set()).add(sp.root)
    return out


def assert_in_kernel(P, binomials):
    for g in binomials:
        diff = tuple(p - m for p, m in zip(g.plus, g.minus))
        assert all(v == 0 for v in mat_vec(P.A, diff))
        # saturated ideal: reduced elements have coprime terms
        assert all(p == 0 or m == 0 for p, m in zip(g.plus, g.minus))


# ---------------------------------------------------------------------------
# toric ideal generators


def test_toric_ideal_simple(problem_simple):
    gens = toric_ideal(problem_simple)
    assert gens == (Binomial((1, 1, 0), (0, 0, 1)),)
    assert_in_kernel(problem_simple, gens)


def test_toric_ideal_lowface(problem_lowface):
    gens = toric_ideal(problem_lowface)
    assert_in_kernel(problem_lowface, gens)
    # generators stay generators under every cost order used later
    assert len(gens) >= problem_lowface.n - problem_lowface.d


# ---------------------------------------------------------------------------
# reduced bases


def test_groebner_basis_lowface(problem_lowface):
    gb = groebner_basis(problem_lowface, C_LOWFACE)
    assert len(gb) == 20
    assert_in_kernel(problem_lowface, gb)
    for g in gb:
        assert dot(C_LOWFACE, g.plus) > dot(C_LOWFACE, g.minus)
    # leading terms generate minimally: no lead divides another
    leads = [g.plus for g in gb]
    for i, u in enumerate(leads):
        for j, v in enumerate(leads):
            if i != j:
                assert any(a > b for a, b in zip(u, v))


def test_reduced_basis_ignores_seed_presentation(problem_lowface):
    base = groebner_basis(problem_lowface, C_LOWFACE)
    gens = list(toric_ideal(problem_lowface))
    for trial in range(5):
        rng = random.Random(trial)
        shuffled = []
        for g in gens:
            shuffled.append(Binomial(g.minus, g.plus) if rng.random() < 0.5 else g)
        rng.shuffle(shuffled)
        assert groebner_basis(problem_lowface, C_LOWFACE, seed=tuple(shuffled)) == base


def test_basis_cache_round_trip(problem_gomory):
    a = groebner_basis(problem_gomory, C_GOMORY)
    b = groebner_basis(problem_gomory, C_GOMORY)
    assert a is b


def test_kernel_is_reported():
    from toricip import kernel_implementation

    assert kernel_implementation() in ("cython", "python")


# ---------------------------------------------------------------------------
# initial ideals and genericity


def test_initial_ideal_generic_flag(problem_lowface):
    assert initial_ideal(problem_lowface, C_LOWFACE).generic
    assert not initial_ideal(problem_lowface, (0,) * 6).generic
    with pytest.raises(NonGenericCostError):
        standard_pair_decomposition(problem_lowface, (0,) * 6)


def test_initial_ideal_generators_are_leads(problem_lowface):
    ini = initial_ideal(problem_lowface, C_LOWFACE)
    assert ini.generators == tuple(g.plus for g in ini.basis)


# ---------------------------------------------------------------------------
# normal forms


def test_normal_form_simple(problem_simple):
    # c = (1,1,0) prefers the single variable, c = (0,0,1) the product
    assert normal_form(problem_simple, (1, 1, 0), (1, 1, 0)) == (0, 0, 1)
    assert normal_form(problem_simple, C_SIMPLE, (0, 0, 1)) == (1, 1, 0)
    assert normal_form(problem_simple, C_SIMPLE, (1, 1, 0)) == (1, 1, 0)


def test_normal_form_lowface(problem_lowface):
    x = normal_form(problem_lowface, C_LOWFACE, LOWFACE_OPTIMUM)
    assert x == LOWFACE_OPTIMUM
    assert dot(C_LOWFACE, x) == LOWFACE_VALUE


def test_normal_form_matches_enumeration(problem_lowface):
    # reduction and exhaustive fiber search must pick the same point
    from toricip import ip_solve_bruteforce

    for u in ((1, 1, 1, 1, 0, 0), (0, 2, 1, 0, 3, 1), (2, 0, 1, 0, 1, 2)):
        b = tuple(mat_vec(problem_lowface.original_A, u))
        x = normal_form(problem_lowface, C_LOWFACE, u)
        sol = ip_solve_bruteforce(problem_lowface, C_LOWFACE, b)
        assert x == sol.x
        assert dot(C_LOWFACE, x) == sol.objective_value
        assert tuple(mat_vec(problem_lowface.original_A, x)) == b


def test_normal_form_validates(problem_simple):
    from toricip import ValidationError

    with pytest.raises(ValidationError):
        normal_form(problem_simple, C_SIMPLE, (1, -1, 0))
    with pytest.raises(ValidationError):
        normal_form(problem_simple, C_SIMPLE, (1, 1))


# ---------------------------------------------------------------------------
# standard pairs


def test_standard_pairs_lowface_exact(problem_lowface):
    pairs = standard_pair_decomposition(problem_lowface, C_LOWFACE)
    assert len(pairs) == 70
    got = pairs_by_face(pairs)
    want = {f: set(r) for f, r in LOWFACE_PAIRS.items()}
    assert got == want


def test_standard_pairs_gomory_exact(problem_gomory):
    pairs = standard_pair_decomposition(problem_gomory, C_GOMORY)
    got = pairs_by_face(pairs)
    want = {f: set(r) for f, r in GOMORY_PAIRS.items()}
    assert got == want
    assert is_gomory_family(problem_gomory, C_GOMORY)


def test_lowface_is_not_gomory(problem_lowface):
    assert not is_gomory_family(problem_lowface, C_LOWFACE)


def test_standard_pairs_zero_ideal():
    assert standard_pairs((), 3) == (StandardPair((0, 0, 0), (0, 1, 2)),)
    assert standard_pairs(((0, 0, 0),), 3) == ()


def test_standard_pairs_antichain(problem_lowface, problem_gomory):
    for P, c in ((problem_lowface, C_LOWFACE), (problem_gomory, C_GOMORY)):
        pairs = standard_pair_decomposition(P, c)
        for a in pairs:
            for b in pairs:
                if a is b:
                    continue
                contained = set(a.face) <= set(b.face) and all(
                    a.root[j] == b.root[j] for j in range(P.n) if j not in b.face
                )
                assert not contained, (a, b)


def test_standard_pairs_cover_exactly(problem_gomory):
    # over a box one past the generator exponents: a point avoids every
    # generator iff exactly >= 1 pair covers it
    ini = initial_ideal(problem_gomory, C_GOMORY)
    pairs = standard_pairs(ini.generators, problem_gomory.n)
    n = problem_gomory.n
    maxexp = [max(g[j] for g in ini.generators) for j in range(n)]

    def boxed(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(maxexp[len(prefix)] + 2):
            yield from boxed(prefix + [v])

    for v in boxed([]):
        standard = not any(all(g[j] <= v[j] for j in range(n)) for g in ini.generators)
        covered = any(
            all(v[j] == sp.root[j] for j in range(n) if j not in sp.face) for sp in pairs
        )
        assert covered == standard, v


# ---------------------------------------------------------------------------
# radicals and triangulation reconstruction


def test_radical_lowface(problem_lowface):
    ini = initial_ideal(problem_lowface, C_LOWFACE)
    rad = radical(ini.generators)
    assert all(sups == tuple(sorted(set(sups))) for sups in rad)
    delta = triangulation_from_radical(problem_lowface, rad, c=C_LOWFACE)
    assert delta.face_sets() == LOWFACE_FACES
    bare = triangulation_from_radical(problem_lowface, rad)
    assert bare.face_sets() == LOWFACE_FACES


def test_radical_minimality():
    rad = radical(((2, 0, 0), (1, 1, 0), (0, 3, 0)))
    # support {0} absorbs {0,1}
    assert rad == ((0,), (1,))


def test_triangulation_from_radical_not_pure(problem_simple):
    with pytest.raises(NotPureError):
        triangulation_from_radical(problem_simple, ((0, 1), (2,)))


def test_triangulation_from_radical_wrong_cost(problem_simple):
    # radical says {x3}: maximal face (0,1); the cost induces ((0,2),(1,2))
    with pytest.raises(ConsistencyError):
        triangulation_from_radical(problem_simple, ((2,),), c=(1, 1, 0))


# ---------------------------------------------------------------------------
# total dual integrality


def test_tdi_simple(problem_simple):
    assert tdi_check(problem_simple, C_SIMPLE)
    assert tdi_check(problem_simple, (1, 1, 0))


def test_tdi_rejects_nonunimodular(problem_lowface, problem_gomory):
    assert not tdi_check(problem_lowface, C_LOWFACE)
    assert not tdi_check(problem_gomory, C_GOMORY)


def test_tdi_nongeneric(problem_simple):
    with pytest.raises(NonGenericCostError):
        tdi_check(problem_simple, (0, 0, 0))
