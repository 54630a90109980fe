import itertools

import pytest

from partial_ybe import families
from partial_ybe.catalog import example
from partial_ybe.core import COUNTABLE, PartialBijection
from partial_ybe.errors import MissingWindow, UnknownExample
from partial_ybe.solution import (SOLUTION_AXIOMS, Axiom, AxiomReport, PartialSolution, r_apply,
                                  verify, verify_all)

FOUR = SOLUTION_AXIOMS


def holds(S, axiom, window=None):
    return verify(S, axiom, window).holds


def mutated_s0():
    S = example("squarefree3")
    gammas = S.gammas[:2] + (PartialBijection.from_mapping({0: 0, 1: 1, 2: 2}),)
    return PartialSolution(S.carrier, S.sigmas, gammas)


class TestExamples:
    def test_r_apply(self):
        assert r_apply(example("squarefree3"), 0, 2) == (2, 1)
        assert r_apply(example("trivial3"), 0, 2) == (2, 0)
        assert r_apply(example("squarefree3"), 0, 1) is None

    def test_squarefree3_sigma2_is_transposition(self):
        S = example("squarefree3")
        assert dict(S.sigma(2).items()) == {0: 1, 1: 0, 2: 2}
        assert S.sigma(2) == S.gamma(2)

    def test_etingof4_is_total(self):
        S = example("etingof4")
        assert len(S.pairs()) == 16

    def test_trivial3_relations_are_commutations(self):
        S = example("trivial3")
        for x, y in S.pairs():
            assert S.r(x, y) == (y, x)

    def test_unknown_example(self):
        with pytest.raises(UnknownExample):
            example("nope")


@pytest.mark.parametrize("name", ["squarefree3", "trivial3"])
def test_all_axioms_hold(name):
    for report in verify_all(example(name)):
        assert report.holds, report
        assert report.witness is None


def test_etingof4_axioms():
    S = example("etingof4")
    for a in (Axiom.NON_DEGENERATE, Axiom.INVOLUTIVE, Axiom.BRAIDED):
        assert holds(S, a)
    rep = verify(S, Axiom.SQUARE_FREE)
    assert not rep.holds and rep.witness.args == (2,)


def test_mutation_breaks_involutivity():
    rep = verify(mutated_s0(), Axiom.INVOLUTIVE)
    assert not rep.holds
    x, y = rep.witness.args
    assert mutated_s0().in_domain(x, y) or mutated_s0().in_domain(y, x) is False


def test_report_witness_invariant():
    with pytest.raises(ValueError):
        AxiomReport(Axiom.BRAIDED, True, witness=object())
    with pytest.raises(ValueError):
        AxiomReport(Axiom.BRAIDED, False)


def test_report_json_shape():
    rep = verify(mutated_s0(), Axiom.INVOLUTIVE).to_json()
    assert set(rep) == {"axiom", "holds", "witness", "skipped"}
    assert rep["holds"] is False and rep["witness"]["args"]


def test_missing_window():
    with pytest.raises(MissingWindow):
        verify(example("thompson"), Axiom.BRAIDED)


def test_axiom_parse():
    assert Axiom.parse("square-free") is Axiom.SQUARE_FREE
    with pytest.raises(ValueError):
        Axiom.parse("commutative")


def _classical_r(S):
    n = S.size
    return {(x, y): S.r(x, y) for x in range(n) for y in range(n)}


def test_classical_braid_relation_oracle():
    """r12 r23 r12 == r23 r12 r23 on X^3 by direct application."""
    S = example("etingof4")
    r = _classical_r(S)

    def r12(t):
        return r[t[0], t[1]] + (t[2],)

    def r23(t):
        return (t[0],) + r[t[1], t[2]]

    for t in itertools.product(range(4), repeat=3):
        assert r12(r23(r12(t))) == r23(r12(r23(t)))
    for (x, y), (a, b) in r.items():
        assert r[a, b] == (x, y)


def test_classical_non_square_free_agrees_with_brute_force():
    S = example("etingof4")
    brute = [x for x in range(4) if S.r(x, x) != (x, x)]
    assert brute == [2, 3]
    assert verify(S, Axiom.SQUARE_FREE).witness.args == (brute[0],)


def test_involutive_solutions_satisfy_inverse_identity():
    for name in ("squarefree3", "trivial3", "etingof4"):
        S = example(name)
        for x, y in S.pairs():
            sx_y, gy_x = S.r(x, y)
            assert gy_x == S.sigma(sx_y).inverse()(x)
            assert S.r(sx_y, gy_x) == (x, y)


def test_parallel_matches_sequential():
    for S, w in ((example("thompson"), 12), (example("etingof4"), None), (mutated_s0(), None)):
        for a in FOUR:
            assert verify(S, a, w) == verify(S, a, w, parallel=True)


class TestThompson:
    S = example("thompson")

    def test_lemma_cases(self):
        assert self.S.r(5, 2) == (2, 6)
        assert self.S.r(1, 2) is None
        assert self.S.r(2, 5) == (4, 2)

    @pytest.mark.parametrize("i", range(12))
    def test_case_table(self, i):
        for j in range(12):
            if i <= j - 2:
                expected = (j - 1, i)
            elif i == j - 1:
                expected = None
            elif i == j:
                expected = (j, i)
            else:
                expected = (j, i + 1)
            assert self.S.r(i, j) == expected

    def test_closed_forms(self):
        for n in range(15):
            s, g = self.S.sigma(n), self.S.gamma(n)
            for k in range(40):
                assert s(k) == (k if k <= n else None if k == n + 1 else k - 1)
                expect_g = (k if k <= n - 2 else None if k == n - 1 else n if k == n else k + 1)
                assert g(k) == expect_g

    def test_axioms_at_window(self):
        for rep in verify_all(self.S, 20):
            assert rep.holds, rep

    def test_undefined_set(self):
        N = 20
        undefined = {(x, y) for x in range(N) for y in range(N) if not self.S.in_domain(x, y)}
        assert undefined == {(n, n + 1) for n in range(N - 1)}


def test_window_monotone(monkeypatch):
    def broken_sigma(n):
        base = families.thompson_sigma(n)
        if n != 7:
            return base
        # swaps the images of 7 and 9 relative to sigma_7
        return PartialBijection.from_pieces([((0, 6), 0), ((10, None), -1)], {7: 8, 9: 7})

    monkeypatch.setitem(families.FAMILIES, "broken", (broken_sigma, families.thompson_gamma))
    S = PartialSolution(COUNTABLE, family="broken")
    assert verify(S, Axiom.INVOLUTIVE, 7).holds
    first = None
    for w in range(8, 14):
        rep = verify(S, Axiom.INVOLUTIVE, w)
        assert not rep.holds
        first = first or rep.witness
        assert rep.witness == first
