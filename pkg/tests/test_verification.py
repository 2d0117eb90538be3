import copy
import random

import pytest

from permcover import coxeter as cx
from permcover.assembly import tomei_complex
from permcover.errors import VerificationError
from permcover.verification import (
    coxeter_relation_failures_exact,
    coxeter_relation_failures_states,
    step_image_is_adjacent,
    crosscheck_words_vs_states,
    noncommuting_pairs_exact,
    noncommuting_pairs_states,
    phi_step_word,
    theta_conjugator,
    verify_all,
    verify_closed,
    verify_degree,
    verify_euler,
    verify_orientation_alternation,
    verify_qr_identity,
    verify_tomei_isomorphism,
)


def corrupt_self_pair(m, cell=0, j=0):
    bad = copy.deepcopy(m)
    other = bad.pairing[cell][j]
    bad.pairing[cell][j] = cell
    bad.pairing[other][j] = other
    return bad


def corrupt_ridge(m, a):
    """Swap partners across facet ``a`` between two glued pairs: pairings
    stay fixed-point-free involutions but some ridge cycle through a breaks."""
    bad = copy.deepcopy(m)
    p = bad.pairing
    c, d = 0, p[0][a]
    for x in range(m.num_cells):
        y = p[x][a]
        if len({c, d, x, y}) == 4:
            break
    p[c][a], p[y][a] = y, c
    p[x][a], p[d][a] = d, x
    return bad


def corrupt_sign(m, cell=0):
    bad = copy.deepcopy(m)
    bad.sign[cell] = -bad.sign[cell]
    return bad


def corrupt_degree(m):
    """Move one cell onto another simplex of the same orientation."""
    bad = copy.deepcopy(m)
    a = bad.image[0]
    b = next(i for i, s in enumerate(bad.simplex_signs) if s == bad.simplex_signs[a] and i != a)
    bad.image[0] = b
    return bad


def test_all_checks_pass_on_fixtures(double_complex, tet_complex):
    for m in list(double_complex.values()) + [tet_complex]:
        checks = verify_all(m)
        assert all(c.ok for c in checks), [c.to_dict() for c in checks if not c.ok]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tomei_checks(n):
    t = tomei_complex(n)
    assert verify_closed(t).ok
    assert verify_orientation_alternation(t).ok
    assert verify_degree(t).value == 1 << (n - 1)
    assert verify_tomei_isomorphism(t).ok


def test_degree_values(double_complex, tet_complex):
    assert verify_degree(double_complex[2]).value == 2
    assert verify_degree(double_complex[3]).value == 4
    assert verify_degree(tet_complex).value == 18


def test_qr_certificate(double_complex, tet_complex):
    c = verify_qr_identity(double_complex[3])
    assert c.ok and c.value == {"q": 4, "r": 2, "k": 1}
    c = verify_qr_identity(tet_complex)
    assert c.ok and c.value == {"q": 18, "r": 24, "k": 108}
    assert c.detail["k_over_q"] == c.detail["r_over_2n"] == "6"


def test_euler_check(tet_complex):
    assert verify_euler(tomei_complex(3)).value == 0
    assert verify_euler(tet_complex).value == -216


def test_self_pair_detected(tet_complex):
    check = verify_closed(corrupt_self_pair(tet_complex, 5, 2))
    assert not check.ok and check.detail["reason"] == "self_paired"
    assert (check.detail["cell"], check.detail["facet"]) in {(5, 2), (tet_complex.pairing[5][2], 2)}


@pytest.mark.parametrize("fixture", ["tet", "tomei"])
def test_broken_ridge_detected(tet_complex, fixture):
    m = tet_complex if fixture == "tet" else tomei_complex(3)
    for a in range(len(m.pairing[0])):
        check = verify_closed(corrupt_ridge(m, a))
        assert not check.ok
        assert check.detail["reason"] in {"ridge_cycle", "face_orbit"}


def test_flipped_sign_detected(tet_complex):
    bad = corrupt_sign(tet_complex, 7)
    assert not verify_orientation_alternation(bad).ok
    assert not verify_degree(bad).ok


def test_non_uniform_degree_detected(tet_complex):
    check = verify_degree(corrupt_degree(tet_complex))
    assert not check.ok and check.detail["reason"] == "non_uniform"
    with pytest.raises(VerificationError):
        check.require()


def test_exact_relations():
    for n in (1, 2, 3):
        assert coxeter_relation_failures_exact(n) == []
    assert (1, 2) in noncommuting_pairs_exact(2)


def test_state_relations(tet_complex, double_complex):
    assert coxeter_relation_failures_states(tet_complex) == []
    assert coxeter_relation_failures_states(double_complex[3]) == []
    assert noncommuting_pairs_states(tet_complex)


def test_crosscheck_double_simplex(double_cc):
    rep = crosscheck_words_vs_states(double_cc[2], max_len=4)
    assert rep.ok and rep.words == sum(6 ** k for k in range(5))


def test_crosscheck_tetrahedron_sampled(tet_cc, tet_closure):
    rep = crosscheck_words_vs_states(tet_cc, max_len=5, samples=100, seed=3, closure=tet_closure)
    assert rep.ok and rep.words == 100


def test_crosscheck_empty_word(tet_cc, tet_closure):
    rep = crosscheck_words_vs_states(tet_cc, max_len=0, closure=tet_closure)
    assert rep.ok and rep.words == 1


def test_word_level_propositions(tet_cc):
    rng = random.Random(11)
    for _ in range(40):
        w = cx.random_word(range(1, 7), rng.randint(0, 5), rng)
        for omega in range(1, 7):
            assert theta_conjugator(2, w, omega) is not None
            assert phi_step_word(tet_cc, w, omega) is not None
            assert step_image_is_adjacent(tet_cc, w, omega)
