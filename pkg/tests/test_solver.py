import collections
import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repconcat.concat import repeated_concat_mod
from repconcat.modmath import CapacityError, DomainError, val
from repconcat.oracle import brute_force_solve
from repconcat.sets import EMPTY, NATURALS, Finite, Progression, contains
from repconcat.solver import NEXT_STEPS, STEP_LABELS, CongruenceProblem, solve, solve_prime_power

KMAX = 400


def oracle_set(n, b, a, m, kmax=KMAX):
    return brute_force_solve(CongruenceProblem(n, b, a, m), kmax)


def members(s, kmax=KMAX):
    return [k for k in range(1, kmax + 1) if contains(s, k)]


def check_segments(labels):
    """Every prime-power segment follows the algorithm's control-flow edges."""
    segments, current = [], []
    for label in labels:
        if label in ("I", "CRT") and current:
            segments.append(current)
            current = []
        if label != "CRT":
            current.append(label)
    if current:
        segments.append(current)
    for seg in segments:
        assert seg[0] == "I"
        for here, there in zip(seg, seg[1:] + [None]):
            assert there in NEXT_STEPS[here], seg


# -- golden example -----------------------------------------------------------


def test_k1_two_adic_branch():
    s, trace = solve_prime_power(18, 3, 2, 2, 4)
    assert s == Progression(1, 4, 1)
    assert trace.labels() == ["I", "II", "III", "VII", "VIII", "X", "XI", "IX"]
    assert trace.find("I").bindings["d"] == 2
    ii = trace.find("II").bindings
    assert (ii["L"], ii["alpha1"], ii["beta"], ii["alpha2"], ii["a1"]) == (3, 3, 1, 4, 1)
    assert ii["a2"] == 11 and ii["a2_signed"] == -5
    vii = trace.find("VII").bindings
    assert (vii["mu1"], vii["mu2"], vii["nu1"], vii["nu2"]) == (1, 1, 3, 1)
    assert trace.find("VIII").bindings["f"] == 1


def test_k2_primitive_root_branch():
    s, trace = solve_prime_power(18, 3, 2, 13, 1)
    assert s == Progression(3, 13, 3)
    assert trace.labels() == ["I", "II", "XII", "XIII", "XIV"]
    ii = trace.find("II").bindings
    assert (ii["L"], ii["alpha1"], ii["beta"], ii["alpha2"], ii["a1"], ii["a2"]) == (3, 1, 1, 2, 3, 79)
    xiii = trace.find("XIII").bindings
    assert (xiii["g"], xiii["ind_b"], xiii["ind_a2"], xiii["f"]) == (2, 124, 24, 12)
    assert trace.find("XIV").bindings == {"residue": 3, "modulus": 13}


def test_general_modulus_golden():
    s, trace = solve(CongruenceProblem(18, 3, 2, 208))
    assert s == Progression(29, 52, 29)
    assert trace.labels()[-1] == "CRT"
    check_segments(trace.labels())
    assert oracle_set(18, 3, 2, 208) == members(s)


# -- spec examples ------------------------------------------------------------


def test_parity_obstruction():
    # n even and b^L * r + n keeps every n(k)_3 even
    assert oracle_set(18, 3, 5, 2, 100) == []
    s, _ = solve_prime_power(18, 3, 5, 2, 1)
    assert s == EMPTY


@pytest.mark.parametrize("n, b, p, alpha", [(16, 3, 2, 4), (250, 7, 5, 3), (169, 10, 13, 2), (27, 3, 3, 3)])
def test_modulus_divides_n_and_a(n, b, p, alpha):
    s, _ = solve_prime_power(n, b, 2 * p**alpha, p, alpha)
    assert s == NATURALS


def test_decimal_18_mod_100():
    # every 18(k)_10 ends in ...18
    assert oracle_set(18, 10, 18, 100) == list(range(1, KMAX + 1))
    s, _ = solve(CongruenceProblem(18, 10, 18, 100))
    assert s == NATURALS


def test_modulus_one():
    s, trace = solve(CongruenceProblem(18, 3, 2, 1))
    assert s == NATURALS
    assert trace.labels() == ["CRT"]


def test_errors():
    with pytest.raises(DomainError):
        solve_prime_power(18, 3, 2, 4, 1)
    with pytest.raises(CapacityError):
        solve_prime_power(18, 3, 2, 2, 63)
    with pytest.raises(DomainError):
        CongruenceProblem(0, 3, 2, 5)
    with pytest.raises(DomainError):
        CongruenceProblem(1, 1, 2, 5)


# -- one problem per branch ---------------------------------------------------

BRANCHES = [
    # (n, b, a, p, alpha, expected labels, expected text)
    (3, 2, -2, 3, 1, "I", "none"),  # d does not divide a
    (6, 2, -3, 3, 1, "I-II", "all k ≥ 1"),  # alpha2 = 0
    (1, 2, -2, 2, 3, "I-II-III", "none"),  # parity of b and a2 differ
    (1, 2, 7, 2, 3, "I-II-III-IV", "k ≥ 3"),  # b even, a2 = 0
    (1, 3, 13, 3, 3, "I-II-XII-IV", "k ≥ 3"),  # p | b, a2 = 0, odd p
    (3, 2, -3, 2, 2, "I-II-XII-IV-V", "none"),  # delta*L does not divide epsilon
    (1, 2, -3, 2, 3, "I-II-III-IV-V-VI", "none"),  # candidate k fails
    (1, 3, 1, 3, 2, "I-II-XII-IV-V-VI", "k ∈ {1}"),  # single k
    (3, 3, -3, 2, 1, "I-II-III-VII-VIII-IX", "k ≡ 1 (mod 2)"),  # mu1*L even
    (1, 7, -2, 2, 2, "I-II-III-VII-VIII", "none"),  # f does not divide nu2
    (1, 7, -3, 2, 2, "I-II-III-VII-VIII-X", "k ≡ 1 (mod 2)"),  # f = 2^(alpha2-2)
    (1, 3, -2, 2, 2, "I-II-III-VII-VIII-X-XI", "none"),  # parity conflict
    (1, 3, 0, 2, 3, "I-II-III-VII-VIII-X-XI-IX", "k ≡ 0 (mod 4)"),
    (1, 2, -1, 3, 1, "I-II-XII", "none"),  # [p | b] != [p | a2]
    (4, 2, -3, 3, 2, "I-II-XII-XIII", "none"),  # f does not divide ind a2
    (2, 3, -2, 2, 1, "I-II-XII-XIII", "all k ≥ 1"),  # trivial unit group mod 2
    (1, 2, -3, 3, 1, "I-II-XII-XIII-XIV", "k ≡ 0 (mod 2)"),
    (18, 3, 2, 13, 1, "I-II-XII-XIII-XIV", "k ≡ 3 (mod 13)"),
]


@pytest.mark.parametrize("n, b, a, p, alpha, labels, text", BRANCHES)
def test_branch(n, b, a, p, alpha, labels, text):
    s, trace = solve_prime_power(n, b, a, p, alpha)
    assert "-".join(trace.labels()) == labels
    assert str(s) == text
    assert members(s) == oracle_set(n, b, a, p**alpha)


def test_step_vii_rejection_unreachable():
    # a2 = 1 - a1(1 - b^L) is 1 mod 4 whenever b^L is, so mu1*L even forces mu2 = 0
    for alpha in range(1, 7):
        for b in range(3, 64, 2):
            for n in range(1, 40):
                for a in range(2**alpha):
                    _, trace = solve_prime_power(n, b, a, 2, alpha)
                    assert trace.labels()[-1] != "VII"


def test_step_vi_forms_agree():
    """b^(eps/delta) = a2 mod p^alpha2  <=>  b1^(eps/delta) = a3 mod p^(alpha2-eps)."""
    for p in (2, 3, 5):
        for alpha2 in range(1, 7):
            m2 = p**alpha2
            for b in range(p, 200, p):
                delta = val(b, p)
                b1 = b // p**delta
                for a2 in range(1, m2):
                    if a2 % p:
                        continue
                    eps = val(a2, p)
                    if eps % delta:
                        continue
                    a3 = a2 // p**eps
                    lhs = pow(b, eps // delta, m2) == a2
                    rhs = pow(b1, eps // delta, p ** (alpha2 - eps)) == a3 % p ** (alpha2 - eps)
                    assert lhs == rhs


# -- randomized oracle equivalence ---------------------------------------------


def test_prime_power_oracle_equivalence_and_coverage():
    rng = random.Random(4242)
    fired = collections.Counter()
    powers = [(p, e) for p in (2, 3, 5, 7, 13) for e in range(1, 9) if p**e <= 10**5]
    for _ in range(1500):
        p, e = rng.choice(powers)
        m = p**e
        b = rng.choice([rng.randint(2, 16), p * rng.randint(1, 4)])
        n = rng.choice([rng.randint(1, 300), rng.randint(1, 10**6), p ** rng.randint(1, 6) * rng.randint(1, 50)])
        k0 = rng.randint(1, 4)
        a = rng.choice([rng.randint(-m, m), repeated_concat_mod(n, k0, b, m)])
        s, trace = solve_prime_power(n, b, a, p, e)
        fired.update(trace.labels())
        check_segments(trace.labels())
        assert members(s, 300) == oracle_set(n, b, a, m, 300), (n, b, a, p, e)
    assert set(STEP_LABELS) <= set(fired), sorted(fired)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 10**6),
    st.integers(2, 16),
    st.integers(-(10**5), 10**5),
    st.integers(1, 10**4),
)
def test_solve_matches_oracle(n, b, a, m):
    problem = CongruenceProblem(n, b, a, m)
    s, trace = solve(problem)
    check_segments(trace.labels())
    assert members(s) == brute_force_solve(problem, KMAX)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 10**6), st.integers(2, 16), st.integers(-(10**5), 10**5), st.integers(1, 10**4), st.integers(-3, 3))
def test_shifting_a_by_m_changes_nothing(n, b, a, m, shift):
    s1, _ = solve(CongruenceProblem(n, b, a, m))
    s2, _ = solve(CongruenceProblem(n, b, a + shift * m, m))
    assert s1 == s2


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10**6), st.integers(2, 16), st.integers(-(10**5), 10**5), st.integers(1, 10**5))
def test_canonical_form(n, b, a, m):
    s, _ = solve(CongruenceProblem(n, b, a, m))
    if isinstance(s, Progression):
        assert s.residue == s.min % s.modulus
        assert repeated_concat_mod(n, s.min, b, m) == a % m
        below = s.min - s.modulus
        if below >= 1:
            assert repeated_concat_mod(n, below, b, m) != a % m
    if isinstance(s, Finite):
        assert len(s.elements) == 1


def test_large_modulus_runs_fast():
    start = time.perf_counter()
    m = (2**31 - 1) * 3**10
    s, _ = solve(CongruenceProblem(123456, 10, 7, m))
    assert time.perf_counter() - start < 5
    if isinstance(s, Progression):
        assert repeated_concat_mod(123456, s.min, 10, m) == 7
