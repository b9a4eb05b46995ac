"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""

import math
import random
import time
from fractions import Fraction
from itertools import product

from bdlword import fixtures as F
from bdlword.bdl import (Growth, Verdict, classify, deviation_series, fk_build,
                         representation_from_lengths, scan_boundedness, scan_path)
from bdlword.fixedpoint import Window, generate_window, is_prefix_of_fixed_point, parikh_path
from bdlword.morphimage import image_normal_constraints, image_of_fixed_point
from bdlword.spectral import EQ1, candidate_normal_space, char_poly, eigen_classify
from bdlword.substitution import IntMatrix, default_seed
from bdlword.wordcore import Alphabet, FiniteWord, parikh

SQRT10 = math.sqrt(10)


def check(record, number, ok, detail):
    record(number, bool(ok), detail)
    assert ok, detail


def test_criterion_1_unit_spectrum(record_criterion):
    t0 = time.perf_counter()
    rep = eigen_classify(F.PSI_UNIT.incidence, 1e-9)
    elapsed = time.perf_counter() - t0
    classes = rep.eigen_classes
    big = sorted(r.modulus for r in classes if r.modulus_class is not EQ1)
    units = [r for r in classes if r.modulus_class is EQ1]
    ok = (len(big) == 2
          and abs(big[0] - (SQRT10 - 2)) <= 1e-9 and abs(big[1] - (2 + SQRT10)) <= 1e-9
          and len(units) == 1 and units[0].exact == "-1" and units[0].error_radius == 0
          and elapsed < 1)
    check(record_criterion, 1, ok,
          f"moduli {big} + {[u.exact for u in units]} certified, {elapsed:.3f}s")


def test_criterion_2_candidate_normal(record_criterion):
    space = candidate_normal_space(F.PSI_UNIT.incidence, 1e-9)
    f = space.exact_basis[0] if space.exact_basis else None
    ok = space.dim == 1 and f in ((3, -1, 0), (-3, 1, 0))
    check(record_criterion, 2, ok, f"dim {space.dim}, integer basis {f}")


def test_criterion_3_power_identities(record_criterion):
    f = F.PSI_UNIT_NORMAL
    bad = []
    for n in range(9):
        for letter, expected in (("A", 3 * (-1) ** n), ("B", (-1) ** (n + 1)), ("C", 0)):
            w = FiniteWord(F.ABC, F.PSI_UNIT.iterate(letter, n))
            if parikh(w).dot(f) != expected:
                bad.append((letter, n))
    check(record_criterion, 3, not bad, f"n = 0..8, mismatches {bad}")


def test_criterion_4_fk_family(record_criterion):
    t0 = time.perf_counter()
    values = [fk_build(k, expand=False).value for k in range(11)]
    expanded = [fk_build(k, expand=True) for k in range(5)]
    word_values = [parikh(fam.word).dot(F.PSI_UNIT_NORMAL) for fam in expanded]
    prefixes = [is_prefix_of_fixed_point(F.PSI_UNIT, None, expanded[k].word) for k in range(4)]
    elapsed = time.perf_counter() - t0
    ok = (values == [k + 2 for k in range(11)] and word_values == values[:5]
          and all(prefixes) and elapsed < 10)
    check(record_criterion, 4, ok,
          f"values {values}, expansion agrees k<=4, prefixes k<=3 {prefixes}, {elapsed:.2f}s")


def test_criterion_5_unit_scan(record_criterion):
    t0 = time.perf_counter()
    rep = scan_boundedness(F.PSI_UNIT, F.PSI_UNIT_NORMAL, 10 ** 6)
    elapsed = time.perf_counter() - t0
    ok = rep.exact and rep.verdict is Growth.GROWING and rep.max_abs >= 5 and elapsed < 30
    check(record_criterion, 5, ok,
          f"{rep.verdict}, max {rep.max_abs}, blocks {' '.join(map(str, rep.block_maxima))}, "
          f"strict doubling rule {rep.doubling_rule}, {elapsed:.1f}s")


def test_criterion_6_small_root(record_criterion):
    rep = eigen_classify(F.PSI_SMALL.incidence, 1e-9)
    moduli = sorted(rep.moduli(), reverse=True)
    verdict = classify(F.PSI_SMALL).verdict
    ok = (all(abs(m - e) <= 1e-3 for m, e in zip(moduli, (5.0593, 2.6549, 0.5956)))
          and verdict is Verdict.GUARANTEED)
    check(record_criterion, 6, ok, f"moduli {[round(m, 6) for m in moduli]}, {verdict}")


def test_criterion_7_erasing_counterexample(record_criterion):
    t0 = time.perf_counter()
    cons = image_normal_constraints(F.PHI_ERASE_C.incidence, F.PSI_SMALL.incidence, 1e-9)
    N = 10 ** 5
    path = parikh_path(image_of_fixed_point(F.PHI_ERASE_C, F.PSI_SMALL, None, N, N))
    small = []
    for f in product(range(-5, 6), repeat=2):
        if f == (0, 0):
            continue
        rep = scan_path(path, f, N)
        if rep.max_abs < 50:
            small.append((f, rep.max_abs))
    elapsed = time.perf_counter() - t0
    ok = cons.rank == 2 and cons.only_zero and not small and elapsed < 60
    check(record_criterion, 7, ok,
          f"constraint rank {cons.rank}, null space {'{0}' if cons.only_zero else 'nontrivial'}, "
          f"grid directions with max < 50: {small}, {elapsed:.1f}s")


def test_criterion_8_properties(record_criterion):
    rng = random.Random(0)
    failures = []
    fixtures = (F.PSI_UNIT, F.PSI_SMALL, F.THUE_MORSE, F.FIBONACCI)

    # Parikh telescoping
    for s in fixtures:
        w = generate_window(s, None, 2000, 2000)
        path = parikh_path(w)
        for n in range(-2000, 2000):
            step = path.at(n + 1) - path.at(n)
            if step != s.alphabet.unit(w.letter(n)):
                failures.append(("telescoping", n))
                break

    # abelianization
    for s in fixtures:
        letters = s.alphabet.letters
        for _ in range(100):
            w = FiniteWord(s.alphabet, "".join(rng.choice(letters) for _ in range(rng.randint(0, 50))))
            if parikh(s(w)) != s.incidence @ parikh(w):
                failures.append(("abelianization", w.letters))

    # deviation identity and gap law on random windows with exact lengths
    for _ in range(50):
        d = rng.randint(2, 4)
        alphabet = Alphabet("ABCD"[:d])
        n = rng.randint(1, 80)
        win = Window(alphabet, "".join(rng.choice(alphabet.letters) for _ in range(n)),
                     "".join(rng.choice(alphabet.letters) for _ in range(n)))
        path = parikh_path(win)
        lengths = tuple(Fraction(rng.randint(1, 30), rng.randint(1, 8)) for _ in range(d))
        eta = Fraction(rng.randint(1, 30), rng.randint(1, 8))
        rep = representation_from_lengths(lengths, path, eta)
        for k, e in zip(path.indices, deviation_series(rep)):
            psi = path.at(int(k)).counts
            if e != abs(sum((l - eta) * c for l, c in zip(lengths, psi))):
                failures.append(("deviation identity", int(k)))
        gaps = {}
        for k in range(-n, n):
            gaps.setdefault(win.letter(k), set()).add(rep.x(k + 1) - rep.x(k))
        if any(len(g) != 1 for g in gaps.values()):
            failures.append(("gap law", win.dump()))

    # Cayley-Hamilton
    mats = [s.incidence for s in fixtures]
    for _ in range(100):
        d = rng.randint(1, 4)
        mats.append(IntMatrix([[rng.randint(0, 5) for _ in range(d)] for _ in range(d)]))
    for M in mats:
        if not char_poly(M).at_matrix(M).is_zero():
            failures.append(("cayley-hamilton", M.tolist()))

    check(record_criterion, 8, not failures, f"failures {failures[:5]}")


def test_criterion_9_sanity_fixtures(record_criterion):
    tm = scan_boundedness(F.THUE_MORSE, (1, -1), 10 ** 5)
    seed = default_seed(F.FIBONACCI)
    fib = classify(F.FIBONACCI)
    second = min(fib.spectrum.moduli())
    golden = (1 + math.sqrt(5)) / 2
    window = generate_window(F.FIBONACCI, seed, 1000, 1000)
    ok = (tm.max_abs == 1 and tm.verdict is Growth.BOUNDED_SO_FAR
          and seed.power == 2 and len(window) == 2000
          and fib.verdict is Verdict.GUARANTEED and abs(second - 1 / golden) <= 1e-9)
    check(record_criterion, 9, ok,
          f"Thue-Morse max {tm.max_abs} {tm.verdict}; Fibonacci seed power {seed.power}, "
          f"{fib.verdict}, second modulus {second:.12f}")
