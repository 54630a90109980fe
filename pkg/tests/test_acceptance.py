"""Acceptance criteria 1-10. Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines
inline; they are also printed in the terminal summary.
"""

import itertools
import random

import pytest

from oracles import RewritingOracle, all_words, make_model
from partial_ybe import example
from partial_ybe.core import restricted_inv, restricted_mul
from partial_ybe.cycles import decompose, derive_cycle_set, retract, verify_cycle_set
from partial_ybe.monoid import Letter, format_word, inverse_word, pi, pi_trace, psi, reconstruct, words_equal
from partial_ybe.reversing import Closed, NoRelation, check_left_distributivity, oplus, reverse
from partial_ybe.solution import SOLUTION_AXIOMS, Axiom, verify
from partial_ybe.thompson import f_normal_form, f_words_equal, window_checks

S0 = example("squarefree3")
T3 = example("trivial3")
E4 = example("etingof4")
T = example("thompson")

VERDICTS = []


def verdict(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    VERDICTS.append(line)
    print(line)
    assert ok, line


def random_word(rng, n_letters, max_len, min_len=0):
    return tuple(Letter(rng.randrange(n_letters), rng.random() < 0.5)
                 for _ in range(rng.randint(min_len, max_len)))


def test_criterion_1_axiom_suite():
    bad = [(name, r.axiom.value) for name, S in (("squarefree3", S0), ("trivial3", T3))
           for r in (verify(S, a) for a in SOLUTION_AXIOMS) if not r.holds]
    bad += [("etingof4", a.value) for a in (Axiom.NON_DEGENERATE, Axiom.INVOLUTIVE, Axiom.BRAIDED)
            if not verify(E4, a).holds]
    verdict(1, not bad, f"squarefree3, trivial3 all four axioms; etingof4 three axioms; "
                        f"failures {bad}")


def test_criterion_2_thompson_window_20():
    reports = [verify(T, a, window=20) for a in SOLUTION_AXIOMS]
    undefined = [(x, y) for x in range(20) for y in range(20) if not T.in_domain(x, y)]
    ok = all(r.holds for r in reports) and undefined == [(n, n + 1) for n in range(19)]
    verdict(2, ok, f"axioms {[(r.axiom.value, r.holds) for r in reports]}; "
                   f"undefined pairs {len(undefined)} == 19 of the form (n, n+1)")


def test_criterion_3_psi_laws():
    rng = random.Random(3)
    failures = checked = 0
    for S, n in ((S0, 3), (T, 10)):
        for _ in range(1000):
            u, v = random_word(rng, n, 6), random_word(rng, n, 6)
            w = u + v
            pw = psi(S, w)
            ok = (pw == restricted_mul(psi(S, u), psi(S, v))
                  and pw.fun.domain == pw.bij.range
                  and psi(S, w + inverse_word(w) + w) == pw
                  and psi(S, inverse_word(w)) == restricted_inv(pw))
            checked += 1
            failures += not ok
    verdict(3, failures == 0, f"{checked} random words over squarefree3 and thompson@10, "
                              f"{failures} failures")


def test_criterion_4_relation_soundness():
    failures = checked = 0
    for S, window in ((S0, None), (T, 15)):
        for x, y in S.pairs(window):
            a, b = S.r(x, y)
            checked += 1
            failures += pi(S, (Letter(x), Letter(y))) != pi(S, (Letter(a), Letter(b)))
    verdict(4, failures == 0, f"{checked} pairs of D, {failures} failures")


def test_criterion_5_reconstruct_roundtrip():
    rng = random.Random(5)
    failures = 0
    for S, n in ((S0, 3), (T, 10)):
        for _ in range(1000):
            w = random_word(rng, n, 6)
            back = reconstruct(S, pi_trace(S, w))
            failures += not (back == w and words_equal(S, back, w))
    verdict(5, failures == 0, f"2000 random words, {failures} failures")


def test_criterion_6_reversing_figure():
    fig = reverse(E4, (Letter(0), Letter(1)), (Letter(1), Letter(0)))
    blocked = reverse(S0, (Letter(0),), (Letter(1),))
    ok = (isinstance(fig, Closed) and fig.u == (Letter(2), Letter(2))
          and fig.v == (Letter(3), Letter(3)) and isinstance(blocked, NoRelation))
    fig_text = (f"closed u={format_word(fig.u)} v={format_word(fig.v)}"
                if isinstance(fig, Closed) else type(fig).__name__)
    verdict(6, ok, f"etingof4 '0 1' / '1 0' {fig_text}; squarefree3 '0' / '1' {blocked}")


def test_criterion_7_partial_brace_laws():
    letters = [(Letter(i, s),) for i in range(3) for s in (False, True)]
    rng = random.Random(0)
    randoms = [tuple(random_word(rng, 3, 3, 1) for _ in range(3)) for _ in range(300)]
    triples = list(itertools.product(letters, repeat=3)) + randoms
    fails = {"unit": 0, "absorption": 0, "commutativity": 0, "wagner": 0, "distributivity": 0}
    skipped = dict.fromkeys(fails, 0)
    examples = []

    def tally(law, result, case):
        if result is None:
            skipped[law] += 1
        elif not result:
            fails[law] += 1
            if len(examples) < 3:
                examples.append(f"{law} {' / '.join(format_word(w) for w in case)}")

    def same(a, b):
        return None if a is None or b is None else words_equal(S0, a, b)

    for a, g, h in triples:
        tally("unit", oplus(S0, g, ()) == g, (g,))
        tally("absorption", oplus(S0, g, g) == g, (g,))
        tally("commutativity", same(oplus(S0, g, h), oplus(S0, h, g)), (g, h))
        tally("wagner", same(oplus(S0, g + inverse_word(g) + g, h), oplus(S0, g, h)), (g, h))
        tally("distributivity", check_left_distributivity(S0, a, g, h), (a, g, h))
    total = sum(fails.values())
    verdict(7, total == 0, f"{len(triples)} triples ({len(randoms)} random); "
                           f"contradictions {fails}; skipped {skipped}; e.g. {examples}")


def test_criterion_8_cycle_sets():
    def by_name(reports):
        return {r.axiom.value: r.holds for r in reports}

    s0 = by_name(verify_cycle_set(derive_cycle_set(S0)))
    e4 = by_name(verify_cycle_set(derive_cycle_set(E4)))
    th = by_name(verify_cycle_set(derive_cycle_set(T), window=20))
    core = (Axiom.CYCLE_IDENTITY.value, Axiom.NON_DEGENERATE.value)
    ok = all(s0.values()) and all(e4[a] for a in core) and all(th.values())
    verdict(8, ok, f"squarefree3 {s0}; etingof4 {e4} (not square-free, as a solution); "
                   f"thompson@20 {th}")


def test_criterion_9_analysis():
    parts = decompose(S0), decompose(E4)
    sizes = [retract(S).quotient.size for S in (E4, S0)]
    windows = [window_checks(N) for N in range(3, 31)]
    ok = (parts[0] is not None and parts[1] is None and sizes == [4, 3]
          and all(w.irretractable and w.invariant_subsets for w in windows))
    verdict(9, ok, f"decompose {parts}; retract sizes {sizes}; thompson windows 3..30 "
                   f"irretractable and invariant: {all(w.irretractable and w.invariant_subsets for w in windows)}")


def test_criterion_10_f_word_problem():
    oracle = RewritingOracle(bound=4 + 5)
    unreached = [w for w in all_words(5, 4) if not oracle.reaches_normal_form(w)]
    # the faithful PL model separates what the normal form separates
    evaluate = make_model(left_first=False)
    by_model, by_nf = {}, {}
    for w in all_words(3, 3):
        by_model.setdefault(evaluate(w), set()).add(w)
        by_nf.setdefault(f_normal_form(w), set()).add(w)
    partitions_agree = sorted(map(sorted, by_model.values())) == sorted(map(sorted, by_nf.values()))
    eqs = f_words_equal("2 1", "1 3") and f_words_equal("3 1", "1 4")
    count = window_checks(5).relation_count
    ok = not unreached and not oracle.disagreements and partitions_agree and eqs and count == 10
    verdict(10, ok, f"{sum(1 for _ in all_words(5, 4))} words, {len(unreached)} unreached, "
                    f"{len(oracle.disagreements)} disagreements; PL partition agrees: "
                    f"{partitions_agree}; relations hold: {eqs}; window 5 count {count}")
