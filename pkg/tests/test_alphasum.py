from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taitcount import (
    BudgetError,
    ExactWeight,
    alpha_from_mask,
    contract,
    contraction_witness,
    edge_weights_from_alpha,
    generate,
    laplacian,
    spanning_tree_sum,
    sym_rank_certificate,
    tait0_alpha,
    tait_brute,
    term_weight,
)
from conftest import face_two_coloring

SMALL_FAMILIES = [
    ("triangle", {}),
    ("k4", {}),
    ("bipyramid", {"size": 3}),
    ("octahedron", {}),
]


def test_alpha_from_mask():
    assert alpha_from_mask(3, 0) == (1, 1, 1)
    assert alpha_from_mask(3, 5) == (-1, 1, -1)
    with pytest.raises(ValueError, match="out of range"):
        alpha_from_mask(3, 8)


def test_edge_weights_k4_constant_alpha(k4):
    assert edge_weights_from_alpha(k4, (1, 1, 1, 1)) == (-1,) * 6
    assert edge_weights_from_alpha(k4, (-1, -1, -1, -1)) == (1,) * 6


@pytest.mark.parametrize("flipped", [0, 1, 2, 3])
def test_edge_weights_k4_one_face_flipped(k4, flipped):
    alpha = tuple(-1 if f == flipped else 1 for f in range(4))
    x = edge_weights_from_alpha(k4, alpha)
    zeros = {e for e, w in enumerate(x) if w == 0}
    assert zeros == set(k4.faces[flipped].edges)  # exactly the flipped boundary
    assert all(w == -1 for e, w in enumerate(x) if e not in zeros)


def test_edge_weights_octahedron_two_coloring(octahedron):
    color = face_two_coloring(octahedron)
    alpha = tuple(1 if c == 0 else -1 for c in color)
    assert edge_weights_from_alpha(octahedron, alpha) == (0,) * 12


def test_edge_weights_validation(k4):
    with pytest.raises(ValueError, match="face signs"):
        edge_weights_from_alpha(k4, (1, 1, 1))
    with pytest.raises(ValueError, match="\\+1 or -1"):
        edge_weights_from_alpha(k4, (1, 1, 1, 0))


@settings(deadline=None, max_examples=60)
@given(data=st.data(), idx=st.integers(0, len(SMALL_FAMILIES) - 1))
def test_negation_flips_weights(data, idx):
    family, kw = SMALL_FAMILIES[idx]
    g = generate(family, **kw)
    nf = len(g.faces)
    mask = data.draw(st.integers(0, (1 << nf) - 1))
    alpha = alpha_from_mask(nf, mask)
    neg = tuple(-s for s in alpha)
    x = edge_weights_from_alpha(g, alpha)
    assert edge_weights_from_alpha(g, neg) == tuple(-w for w in x)
    # the Laplacian negates with the weights, so the rank is unchanged
    assert (
        sym_rank_certificate(laplacian(g, x)).rank
        == sym_rank_certificate(laplacian(g, tuple(-w for w in x))).rank
    )


def test_term_weight_k4_cases(k4):
    # constant alpha: rank 3 is odd, the term is dropped by the parity filter
    x1 = edge_weights_from_alpha(k4, alpha_from_mask(4, 0))
    assert term_weight(k4, x1).is_zero
    # balanced 2-2 split: rank 2, value (-1)/(-3) = +1/3
    mask22 = next(
        m for m in range(16) if bin(m).count("1") == 2
    )
    x3 = edge_weights_from_alpha(k4, alpha_from_mask(4, mask22))
    w = term_weight(k4, x3)
    assert (w.sign, w.halfrank) == (-1, 1)
    assert w.value == Fraction(1, 3)
    # zero weights: empty pivot set, weight exactly 1
    w0 = term_weight(k4, (0,) * 6)
    assert (w0.sign, w0.halfrank) == (1, 0)
    assert w0.value == 1


def test_exact_weight_zero():
    assert ExactWeight.zero().is_zero
    assert ExactWeight.zero().value == 0


def test_contraction_witness_k4(k4):
    x1 = edge_weights_from_alpha(k4, alpha_from_mask(4, 0))
    wit1 = contraction_witness(k4, x1)
    assert len(wit1.w_star) == 1  # a single vertex: contraction is the identity
    assert wit1.contracted_vertex_count == 4
    assert wit1.tree_sum == -1

    mask22 = 0b0011
    x3 = edge_weights_from_alpha(k4, alpha_from_mask(4, mask22))
    wit3 = contraction_witness(k4, x3)
    assert wit3.contracted_vertex_count == 3
    assert wit3.tree_sum == -1

    wit0 = contraction_witness(k4, (0,) * 6)
    assert wit0.contracted_vertex_count == 1
    assert len(wit0.w_star) == 4
    assert wit0.tree_sum == 1


@pytest.mark.parametrize("family,kw", SMALL_FAMILIES)
def test_witness_tree_sum_matches_enumeration(family, kw):
    g = generate(family, **kw)
    nf = len(g.faces)
    for mask in range(1 << nf):
        x = edge_weights_from_alpha(g, alpha_from_mask(nf, mask))
        wit = contraction_witness(g, x)
        assert spanning_tree_sum(contract(g, wit.w_star), x) == wit.tree_sum
        assert wit.tree_sum != 0


@pytest.mark.parametrize("family,kw", SMALL_FAMILIES)
def test_even_rank_negation_agreement(family, kw):
    g = generate(family, **kw)
    nf = len(g.faces)
    full = (1 << nf) - 1
    for mask in range(1 << nf):
        x = edge_weights_from_alpha(g, alpha_from_mask(nf, mask))
        xneg = edge_weights_from_alpha(g, alpha_from_mask(nf, mask ^ full))
        assert term_weight(g, x) == term_weight(g, xneg)


def test_tait0_k4_value_and_histogram(k4):
    res = tait0_alpha(k4)
    assert res.tait0 == 2
    assert res.histogram_dict() == {2: 6, 3: 10}
    assert res.terms == 16


def test_tait0_triangle(triangle):
    assert tait0_alpha(triangle).tait0 == 2


@pytest.mark.parametrize("family,kw", SMALL_FAMILIES + [("apollonian", {"depth": 1})])
def test_tait0_matches_brute(family, kw):
    g = generate(family, **kw)
    assert tait0_alpha(g).tait0 == tait_brute(g) // 3


@pytest.mark.parametrize("family,kw", SMALL_FAMILIES)
def test_scan_matches_per_term_weights(family, kw):
    """The optimized scan must agree term-by-term with the certificate route."""
    g = generate(family, **kw)
    nf = len(g.faces)
    total = Fraction(0)
    ranks = Counter()
    for mask in range(1 << nf):
        x = edge_weights_from_alpha(g, alpha_from_mask(nf, mask))
        total += term_weight(g, x).value
        ranks[sym_rank_certificate(laplacian(g, x)).rank] += 1
    res = tait0_alpha(g)
    assert total == res.tait0
    assert dict(ranks) == res.histogram_dict()


@pytest.mark.parametrize("family,kw", SMALL_FAMILIES + [("apollonian", {"depth": 1})])
def test_kernel_paths_agree(family, kw):
    g = generate(family, **kw)
    assert tait0_alpha(g, kernel="python") == tait0_alpha(g, kernel="compiled")


def test_sign_symmetry_path(octahedron, bipyramid3):
    for g in (octahedron, bipyramid3):
        assert tait0_alpha(g, sign_symmetry=True) == tait0_alpha(g)


def test_threads_do_not_change_result(apollonian1):
    r1 = tait0_alpha(apollonian1, threads=1)
    r2 = tait0_alpha(apollonian1, threads=2)
    r3 = tait0_alpha(apollonian1, threads=5)
    assert r1 == r2 == r3


def test_budget_and_argument_errors(octahedron):
    with pytest.raises(BudgetError, match="sign vectors"):
        tait0_alpha(octahedron, max_faces=5)
    with pytest.raises(ValueError, match="threads"):
        tait0_alpha(octahedron, threads=0)
    with pytest.raises(ValueError, match="kernel"):
        tait0_alpha(octahedron, kernel="fortran")
