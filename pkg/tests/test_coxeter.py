import functools
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from permcover import coxeter as cx
from permcover import fixtures, perm
from permcover.cycles import barycentric_subdivide, colorize
from permcover.errors import ClosureBudgetExceeded, WordBudgetExceeded
from permcover.permutahedron import enumerate_omega, is_subset, mask_of, ridge_pairs


def words(n, max_size):
    return st.lists(st.integers(1, (1 << (n + 1)) - 2), max_size=max_size).map(tuple)


@functools.lru_cache(maxsize=None)
def tetrahedron():
    return colorize(barycentric_subdivide(fixtures.boundary_simplex(2)))


def reachable(machine):
    seen = {machine.initial()}
    todo = [machine.initial()]
    while todo:
        st_ = todo.pop()
        for w in machine.omegas:
            nxt = machine.step(st_, w)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def test_free_product_multiplication():
    assert cx.fword_multiply((3,), (3,)) == ()
    assert cx.fword_multiply((1, 2), (2, 4)) == (1, 4)
    assert cx.fword_multiply((), (5, 1)) == (5, 1)
    assert cx.reduce_word((1, 2, 2, 1, 3)) == (3,)


@given(words(2, 6), words(2, 6), words(2, 6))
def test_free_product_associative(a, b, c):
    a, b, c = map(cx.reduce_word, (a, b, c))
    assert cx.fword_multiply(cx.fword_multiply(a, b), c) == cx.fword_multiply(a, cx.fword_multiply(b, c))
    assert cx.fword_multiply(a, cx.fword_inverse(a)) == ()


def test_psi_on_generators():
    assert cx.psi_single(mask_of({1}), (mask_of({2}),)) == (mask_of({2}),)
    assert cx.psi_single(5, (5,)) == (5,)
    assert cx.psi_single(3, (1,)) == (3, 1, 3)


@given(st.integers(1, 6), words(2, 6))
def test_psi_is_an_involution(omega, w):
    w = cx.reduce_word(w)
    assert cx.psi_single(omega, cx.psi_single(omega, w)) == w


@given(st.integers(1, 6), words(2, 5), words(2, 5))
def test_psi_is_a_homomorphism(omega, a, b):
    a, b = cx.reduce_word(a), cx.reduce_word(b)
    lhs = cx.psi_single(omega, cx.fword_multiply(a, b))
    rhs = cx.fword_multiply(cx.psi_single(omega, a), cx.psi_single(omega, b))
    assert lhs == rhs


def test_generator_relations_exact():
    for n in (1, 2, 3):
        for w in enumerate_omega(n):
            assert cx.exact_equal(n, cx.exact_of_word((w, w)), cx.IDENTITY)
        for a, b in ridge_pairs(n):
            assert cx.exact_equal(n, cx.exact_of_word((a, b)), cx.exact_of_word((b, a)))
            ta = cx.theta(cx.exact_of_word((a, b)))
            assert ta == cx.theta(cx.exact_of_word((b, a)))


def test_non_nested_generators_do_not_commute():
    a, b = mask_of({1}), mask_of({2})
    assert not cx.exact_equal(2, cx.exact_of_word((a, b)), cx.exact_of_word((b, a)))


@settings(max_examples=60, deadline=None)
@given(words(2, 4), words(2, 4), words(2, 4))
def test_semidirect_product_associative(a, b, c):
    u, v, w = map(cx.exact_of_word, (a, b, c))
    left = cx.exact_multiply(cx.exact_multiply(u, v), w)
    right = cx.exact_multiply(u, cx.exact_multiply(v, w))
    assert cx.exact_equal(2, left, right)


@settings(max_examples=60, deadline=None)
@given(words(2, 5))
def test_exact_inverse(a):
    u = cx.exact_of_word(a)
    assert cx.exact_equal(2, cx.exact_multiply(u, cx.exact_inverse(u)), cx.IDENTITY)
    assert cx.exact_equal(2, cx.exact_of_word(a[::-1]), cx.exact_inverse(u))


@settings(max_examples=80, deadline=None)
@given(words(2, 5), st.integers(1, 6))
def test_theta_step_is_a_conjugate_of_the_letter(w, omega):
    z = cx.fword_multiply(cx.theta(cx.exact_of_word((omega,) + w)),
                          cx.fword_inverse(cx.theta(cx.exact_of_word(w))))
    half = len(z) // 2
    assert len(z) % 2 == 1 and z == z[::-1] and z[half] == omega
    assert all(is_subset(omega, g) and g != omega for g in z[:half])


def test_eta():
    assert cx.eta((mask_of({1}), mask_of({2}))) == 0
    assert cx.eta((mask_of({1}),)) == 1
    assert cx.eta((mask_of({1, 2}), mask_of({3}))) == 3


def test_lambda_on_double_triangle(double_cc):
    cc = double_cc[2]
    assert cx.lambda_eval((4, 4), cc) == (0, 1)
    for w in [(1,), (1, 2, 3), (6, 5, 4, 3, 1)]:
        assert cx.lambda_eval(w, cc) == (1, 0)


@given(words(2, 6), words(2, 6))
def test_lambda_is_multiplicative(a, b):
    cc = tetrahedron()
    a, b = cx.reduce_word(a), cx.reduce_word(b)
    assert cx.lambda_eval(cx.fword_multiply(a, b), cc) == perm.compose(
        cx.lambda_eval(a, cc), cx.lambda_eval(b, cc))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_closure_of_double_simplex_is_trivial(double_cc, n):
    assert len(cx.d_closure(double_cc[n])) == 1


def test_closure_of_tetrahedron(tet_closure):
    assert len(tet_closure) == 9
    for d, row in enumerate(tet_closure.action):
        for k in range(len(tet_closure.omegas)):
            assert tet_closure.action[row[k]][k] == d


def test_closure_tables_match_word_arithmetic(tet_cc, tet_closure):
    """Every table is λ∘ψ for some ψ found by breadth-first search on
    ψ-composites, computed with explicit word arithmetic."""
    omegas = tet_closure.omegas
    found = {}
    frontier = [()]
    while frontier and len(found) < len(tet_closure):
        nxt = []
        for psi in frontier:
            table = tuple(cx.lambda_eval(cx.psi_apply(psi, (g,)), tet_cc) for g in omegas)
            if table not in found:
                found[table] = psi
                nxt.extend(psi + (w,) for w in omegas)
        frontier = nxt
    assert set(found) == set(tet_closure.tables)


def test_closure_budget(tet_cc):
    with pytest.raises(ClosureBudgetExceeded):
        cx.d_closure(tet_cc, max_d=3)


def test_word_budget():
    with pytest.raises(WordBudgetExceeded):
        cx.exact_of_word((1, 3, 2, 3, 1, 5, 4, 6) * 3, max_len=4)


def test_double_simplex_machine(double_cc):
    cc = double_cc[2]
    m = cx.CosetMachine(cc, cx.d_closure(cc))
    states = reachable(m)
    assert len(states) == 4
    assert {s.e for s in states} == {0, 1, 2, 3}
    assert m.in_gamma(())
    assert not m.in_gamma((1,))
    for a, b in itertools.permutations(enumerate_omega(2), 2):
        same_size = bin(a).count("1") == bin(b).count("1")
        assert m.in_gamma((a, b)) == same_size


@pytest.mark.parametrize("exact", [True, False])
def test_machine_relations_on_reachable_states(tet_cc, tet_closure, exact):
    m = cx.CosetMachine(tet_cc, tet_closure, exact_gamma=exact)
    states = reachable(m)
    for s in states:
        for w in m.omegas:
            assert m.step(m.step(s, w), w) == s
        for a, b in ridge_pairs(2):
            assert m.step(m.step(s, a), b) == m.step(m.step(s, b), a)
    assert len(states) == (432 if exact else len(states))


def test_psi_h_membership(double_cc, tet_cc):
    assert cx.psi_h_member((), tet_cc)
    for n, cc in double_cc.items():
        assert all(cx.psi_h_member((w,), cc) for w in enumerate_omega(n))


def test_psi_h_witness_on_tetrahedron(tet_cc):
    found = None
    for psi in itertools.chain(((w,) for w in range(1, 7)),
                               itertools.product(range(1, 7), repeat=2)):
        found = cx.psi_h_witness(psi, tet_cc)
        if found is not None:
            break
    assert found is not None
    a, b, x = found
    assert a != b
    image = cx.lambda_eval(cx.psi_apply(psi, x), tet_cc)[tet_cc.base]
    plain = cx.lambda_eval(x, tet_cc)[tet_cc.base]
    assert (image, plain) == (a, b)
