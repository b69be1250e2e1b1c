import pytest

from heckebasis.laurent import PrimeDividesQ
from heckebasis.modarith import (
    GenericityReport,
    HypothesisViolated,
    ResidueSet,
    compute_e,
    compute_e_prime,
    multiplicative_order,
    set_a,
    set_a0,
    sweep_a_sets,
    verify_a_sets,
)


def test_residue_set_canonicalization():
    assert ResidueSet.from_residues(6, [1, 3, 5]) == ResidueSet(2, (1,))
    assert ResidueSet.from_residues(6, [0, 1, 2, 3, 4, 5]) == ResidueSet(
        1, (0,)
    )
    assert ResidueSet.from_residues(4, []) == ResidueSet(1, ())
    assert ResidueSet.from_residues(12, [2, 6, 10]) == ResidueSet(4, (2,))
    assert ResidueSet.from_residues(4, [1, 2]) == ResidueSet(4, (1, 2))
    assert ResidueSet.from_residues(4, [-3, 6]) == ResidueSet(4, (1, 2))
    with pytest.raises(ValueError):
        ResidueSet.from_residues(0, [0])


def test_residue_set_membership_and_rescale():
    s = ResidueSet.from_residues(4, [2])
    assert s.contains(2) and s.contains(6) and s.contains(-2)
    assert not s.contains(0) and not s.contains(3)
    assert s.rescale(8) == {2, 6}
    with pytest.raises(ValueError):
        s.rescale(6)
    assert s.same_subset(ResidueSet.from_residues(8, [2, 6]))
    assert not s.same_subset(ResidueSet.from_residues(4, [0]))
    assert ResidueSet(1, ()).same_subset(ResidueSet.from_residues(9, []))


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 7) == 6
    assert multiplicative_order(1, 7) == 1
    assert multiplicative_order(2, 5) == 4
    with pytest.raises(PrimeDividesQ):
        multiplicative_order(7, 7)
    with pytest.raises(ValueError):
        multiplicative_order(2, 6)


def test_compute_e_pinned_values():
    assert compute_e(2, 7) == 3  # 1 + 2 + 4 = 7
    assert compute_e(8, 7) == 7  # q = 1 mod 7
    assert compute_e(4, 5) == 2  # 1 + 4 = 5
    assert compute_e(1, 3) == 3
    with pytest.raises(PrimeDividesQ):
        compute_e(14, 7)
    with pytest.raises(ValueError):
        compute_e(2, 9)


def test_compute_e_equals_order_or_ell():
    for ell in (2, 3, 5, 7, 11, 13, 17, 19):
        for q in range(1, 40):
            if q % ell == 0:
                continue
            e = compute_e(q, ell)
            if q % ell == 1:
                assert e == ell
            else:
                assert e == multiplicative_order(q, ell)
                assert pow(q, e, ell) == 1


def test_compute_e_prime_pinned_and_relation():
    assert compute_e_prime(2, 2, 7) == 3  # powers of 4 mod 7: 1+4+2 = 7
    assert compute_e_prime(2, 1, 7) == compute_e(2, 7)
    assert compute_e_prime(3, 2, 5) == 2  # 9 = 4, 1+4 = 5
    with pytest.raises(ValueError):
        compute_e_prime(2, 0, 7)
    # e' = e for a = 1; e' = e/2 exactly when a = 2 and e even
    for ell in (3, 5, 7, 11, 13, 17):
        for q in range(2, 30):
            if q % ell in (0, 1):
                continue
            e = compute_e(q, ell)
            assert compute_e_prime(q, 1, ell) == e
            if pow(q, 2, ell) != 1:
                want = e // 2 if e % 2 == 0 else e
                assert compute_e_prime(q, 2, ell) == want


def test_compute_e_prime_large_step_has_no_post_check():
    # a = 3, q of order 6 mod 7: e = 6 but e' = order of q^3 = 2;
    # the e/e' relation is only pinned for a in {1, 2}
    assert multiplicative_order(3, 7) == 6
    assert compute_e_prime(3, 3, 7) == 2


def test_set_a_pinned_values():
    assert set_a(2, 1, 0, 5) == ResidueSet(4, (2,))
    assert set_a(3, 2, 1, 13).is_empty()
    # q = 1 mod ell with b = 0: 1 = -1 impossible for ell > 2
    assert set_a(6, 1, 0, 5).is_empty()
    with pytest.raises(PrimeDividesQ):
        set_a(10, 1, 0, 5)


def test_set_a_brute_force_agreement():
    for ell in (3, 5, 7, 11, 13):
        for q in range(2, 20):
            if q % ell == 0:
                continue
            for a in (1, 2, 3):
                for b in (0, 1, 2):
                    s = set_a(q, a, b, ell)
                    for j in range(0, 3 * ell):
                        in_set = pow(q, a * j, ell) == (-pow(q, b, ell)) % ell
                        assert s.contains(j) == in_set, (q, a, b, ell, j)


def test_set_a0_pinned_values():
    assert set_a0(5, 1, 0).is_empty()
    assert set_a0(2, 1, 1) == ResidueSet(2, (0,))
    assert set_a0(6, 2, 1) == ResidueSet(3, (2,))
    assert set_a0(4, 1, 0) == ResidueSet(4, (2,))
    with pytest.raises(ValueError):
        set_a0(1, 1, 0)


def test_set_a0_odd_e_always_empty():
    for e in range(3, 20, 2):
        for a in range(0, e):
            for b in range(0, e):
                assert set_a0(e, a, b).is_empty()


def test_set_a0_cyclotomic_vs_congruence_sweep():
    # the assert inside set_a0 compares the cyclotomic route against the
    # congruence route; drive it over the full box
    for e in range(2, 31):
        for a in range(0, e + 1):
            for b in range(0, e + 1):
                s = set_a0(e, a, b)
                if e % 2 == 0:
                    c = (b + e // 2) % e
                    for j in range(2 * e):
                        assert s.contains(j) == ((a * j - c) % e == 0)
                else:
                    assert s.is_empty()


def test_verify_reports():
    r = verify_a_sets(2, 1, 0, 5)
    assert isinstance(r, GenericityReport)
    assert r.e == 4 and r.e_prime == 4 and r.equal
    assert r.set_q == ResidueSet(4, (2,)) == r.set_root
    d = r.to_json_dict()
    assert d == {
        "e": 4,
        "ePrime": 4,
        "A": {"modulus": 4, "residues": [2]},
        "A0": {"modulus": 4, "residues": [2]},
        "equal": True,
    }
    r13 = verify_a_sets(3, 2, 1, 13)
    assert r13.equal and r13.set_q.is_empty() and r13.e == 3
    r5 = verify_a_sets(4, 1, 0, 5)
    assert r5.equal and r5.e == 2 and r5.set_q == ResidueSet(2, (1,))


def test_verify_hypothesis_violations_name_the_condition():
    with pytest.raises(HypothesisViolated, match="not prime"):
        verify_a_sets(2, 1, 0, 6)
    with pytest.raises(HypothesisViolated, match="divides"):
        verify_a_sets(10, 1, 0, 5)
    with pytest.raises(HypothesisViolated, match="is 1 mod"):
        verify_a_sets(6, 1, 0, 5)
    with pytest.raises(HypothesisViolated, match="q\\^a"):
        verify_a_sets(4, 2, 0, 5)  # 4^2 = 16 = 1 mod 5
    with pytest.raises(HypothesisViolated, match="not positive"):
        verify_a_sets(2, 0, 0, 5)
    # ell = 2 forces q odd hence q = 1 mod 2
    with pytest.raises(HypothesisViolated):
        verify_a_sets(3, 1, 0, 2)


def test_sweep_counts_and_passes():
    out = sweep_a_sets(13, 13)
    assert out["allEqual"] and out["failures"] == []
    # recount independently
    from heckebasis.laurent import is_prime

    expected = 0
    for ell in range(2, 14):
        if not is_prime(ell):
            continue
        for q in range(2, 14):
            if q % ell in (0, 1):
                continue
            for a in (1, 2):
                if pow(q, a, ell) == 1:
                    continue
                expected += 4  # b in {0, 1, 2, 3}
    assert out["checked"] == expected
