"""Matrix representations, characters, Schur elements, a-invariants.

The six G2(3,1) representations and their invariants are pinned
exactly; structural identities (trace decomposition of tau, dual-basis
orthogonality, the group-algebra specialization at u = 1) serve as
independent oracles for the Schur machinery.
"""

from fractions import Fraction

import pytest

from heckebasis.coxeter import UnsupportedType, build_datum
from heckebasis.hecke import t_basis, tau
from heckebasis.laurent import LaurentPoly, ZeroPolynomial
from heckebasis.reps import (
    MatrixRep,
    NegativeAInvariant,
    NonIntegralSchurElement,
    NotARepresentation,
    a_invariant,
    builtin_g2_reps,
    check_representation,
    one_dim_reps,
    rep_trace,
    schur_element,
    schur_table,
    schur_table_json_dict,
)

U = LaurentPoly.monomial(1)


@pytest.fixture(scope="module")
def g2():
    return build_datum("g2", 2, [3, 1])


@pytest.fixture(scope="module")
def g2_reps(g2):
    return builtin_g2_reps(g2)


class TestBuiltinReps:
    def test_all_six_pass_relation_check(self, g2_reps):
        for rep in g2_reps:
            assert check_representation(rep).ok, rep.name

    def test_names_and_dimensions(self, g2_reps):
        assert [(r.name, r.dimension) for r in g2_reps] == [
            ("ind", 1),
            ("eps1", 1),
            ("rho+", 2),
            ("rho-", 2),
            ("eps2", 1),
            ("eps", 1),
        ]

    def test_pinned_matrix_entries(self, g2_reps):
        by_name = {r.name: r for r in g2_reps}
        rho_plus = by_name["rho+"]
        assert rho_plus.generator_images[0][1][0] == U * U + U + 1
        assert rho_plus.generator_images[0][0][0] == LaurentPoly.constant(-1)
        assert rho_plus.generator_images[1][0][1] == U
        rho_minus = by_name["rho-"]
        assert rho_minus.generator_images[0][1][0] == U * U - U + 1
        assert by_name["ind"].generator_images[1][0][0] == U
        assert by_name["eps2"].generator_images[0][0][0] == LaurentPoly.constant(-1)

    def test_requires_g2_with_weights_3_1(self):
        other = build_datum("g2", 2, [1, 1])
        with pytest.raises(UnsupportedType):
            builtin_g2_reps(other)
        b2 = build_datum("b", 2, [3, 1])
        with pytest.raises(UnsupportedType):
            builtin_g2_reps(b2)

    def test_corrupted_rep_fails_check(self, g2):
        u3 = LaurentPoly.monomial(3)
        bad = MatrixRep(
            "bad",
            g2,
            [
                [[-1, 0], [U * U + 1, u3]],  # (2,1) entry missing the u term
                [[U, U], [0, -1]],
            ],
        )
        check = check_representation(bad)
        assert not check.ok
        assert any("braid" in v for v in check.violations)
        with pytest.raises(NotARepresentation):
            schur_element(bad)

    def test_wrong_quadratic_detected(self, g2):
        bad = MatrixRep("bad-quad", g2, [[[U]], [[U]]])  # u != u^3 on s1
        check = check_representation(bad)
        assert any("quadratic" in v for v in check.violations)

    def test_one_dim_reps_match_builtins(self, g2, g2_reps):
        index, sign = one_dim_reps(g2)
        assert check_representation(index).ok
        assert check_representation(sign).ok
        by_name = {r.name: r for r in g2_reps}
        assert schur_element(index) == schur_element(by_name["ind"])
        assert schur_element(sign) == schur_element(by_name["eps"])


class TestTraces:
    def test_trace_examples(self, g2, g2_reps):
        by_name = {r.name: r for r in g2_reps}
        rho_plus = by_name["rho+"]
        assert rep_trace(rho_plus, g2.identity) == LaurentPoly.constant(2)
        alpha, beta = g2.generators()
        assert rep_trace(rho_plus, alpha) == LaurentPoly.monomial(3) - 1
        assert rep_trace(by_name["ind"], beta) == U

    def test_character_is_class_function_of_trace_kind(self, g2, g2_reps):
        # trace(T_w) = trace(T_(w^-1)) for these representations: each
        # image matrix is conjugate to its own transpose-by-inverse; this
        # holds here and pins the character sweep against direct products.
        from heckebasis.reps import rep_matrix, _trace

        for rep in g2_reps:
            for w in g2.elements():
                direct = _trace(rep_matrix(rep, w))
                assert rep_trace(rep, w) == direct


class TestSchurElements:
    def test_index_schur_is_poincare_polynomial(self, g2, g2_reps):
        poincare = LaurentPoly.zero()
        for w in g2.elements():
            poincare = poincare + LaurentPoly.monomial(g2.weight(w))
        assert schur_element(g2_reps[0]) == poincare
        assert poincare.coefficient(0) == 1
        assert poincare.coefficient(12) == 1

    def test_pinned_a_invariants_and_leading_coefficients(self, g2, g2_reps):
        rows = schur_table(g2, g2_reps)
        assert [(r["name"], r["aInvariant"], r["fLambda"]) for r in rows] == [
            ("ind", 0, 1),
            ("eps1", 1, 1),
            ("rho+", 3, 2),
            ("rho-", 3, 2),
            ("eps2", 7, 1),
            ("eps", 12, 1),
        ]

    def test_schur_valuations(self, g2_reps):
        by_name = {r.name: r for r in g2_reps}
        assert schur_element(by_name["ind"]).valuation() == 0
        assert schur_element(by_name["eps"]).valuation() == -12
        assert schur_element(by_name["rho+"]).valuation() == -3

    def test_group_algebra_specialization(self, g2, g2_reps):
        # At u = 1 the algebra is the group algebra, where the Schur
        # element of an irreducible is |W| / dim.
        for rep in g2_reps:
            c = schur_element(rep)
            assert c.evaluate(Fraction(1)) == Fraction(g2.size, rep.dimension)

    def test_integer_coefficients(self, g2, g2_reps):
        for rep in g2_reps:
            assert schur_element(rep).has_integer_coefficients()

    def test_trace_decomposition_of_tau(self, g2, g2_reps):
        # Cleared of denominators: (prod of all c) * tau(T_w) equals
        # sum over reps of (prod of the other c's) * trace(T_w).
        schurs = [schur_element(rep) for rep in g2_reps]
        total_product = LaurentPoly.one()
        for c in schurs:
            total_product = total_product * c
        cofactors = []
        for i in range(len(schurs)):
            prod = LaurentPoly.one()
            for j, c in enumerate(schurs):
                if j != i:
                    prod = prod * c
            cofactors.append(prod)
        for w in g2.elements():
            lhs = total_product * tau(t_basis(g2, w))
            rhs = LaurentPoly.zero()
            for rep, cof in zip(g2_reps, cofactors):
                rhs = rhs + cof * rep_trace(rep, w)
            assert lhs == rhs

    def test_dual_basis_orthogonality_all_pairs(self, g2, g2_reps):
        # sum over w of u^-L(w) tr(T_w, r1) tr(T_(w^-1), r2)
        # = dim * schur for r1 = r2, zero otherwise: 36 pairs.
        sums = {}
        for r1 in g2_reps:
            for r2 in g2_reps:
                total = LaurentPoly.zero()
                for w in g2.elements():
                    inv = g2.inverse(w)
                    total = total + (
                        LaurentPoly.monomial(-g2.weight(w))
                        * rep_trace(r1, w)
                        * rep_trace(r2, inv)
                    )
                sums[r1.name, r2.name] = total
        for r1 in g2_reps:
            for r2 in g2_reps:
                if r1.name == r2.name:
                    assert sums[r1.name, r2.name] == (
                        schur_element(r1) * r1.dimension
                    )
                else:
                    assert sums[r1.name, r2.name].is_zero()


class TestAInvariant:
    def test_examples(self):
        assert a_invariant(LaurentPoly({-3: 2, 0: 1})) == (3, 2)
        assert a_invariant(LaurentPoly.one()) == (0, 1)

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            a_invariant(LaurentPoly.zero())

    def test_negative_a_rejected(self):
        with pytest.raises(NegativeAInvariant):
            a_invariant(LaurentPoly.monomial(2))

    def test_non_integer_leading_rejected(self):
        with pytest.raises(NonIntegralSchurElement):
            a_invariant(LaurentPoly({-1: Fraction(1, 2)}))


class TestSignAInvariantLaw:
    def test_a_of_sign_is_weight_of_longest_element(self):
        datums = [
            build_datum("g2", 2, [3, 1]),
            build_datum("b", 2, [1, 2]),
            build_datum("b", 3, [1, 2]),
            build_datum("b", 2, [3, 2]),
            build_datum("b", 3, [3, 2]),
            build_datum("a", 2, [1, 1]),
            build_datum("a", 3, [1, 1, 1]),
        ]
        for d in datums:
            _, sign = one_dim_reps(d)
            a, f = a_invariant(schur_element(sign))
            assert a == d.weight(d.longest_element())
            assert f == 1


class TestJsonExport:
    def test_shape(self, g2, g2_reps):
        data = schur_table_json_dict(g2, g2_reps)
        assert data["datum"]["type"] == "g2"
        assert len(data["reps"]) == 6
        row = data["reps"][2]
        assert set(row) == {"name", "dim", "schur", "aInvariant", "fLambda"}
        # rendered Schur element parses back bit-exactly
        assert str(LaurentPoly.parse(row["schur"])) == row["schur"]
