#include "arithchar/chevalley.hpp"
#include "arithchar/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace arithchar;

namespace {

IntegralLieAlgebra algebra(char const *t, std::size_t center = 0)
{
	return build_chevalley_basis(RootSystem(CartanType::parse(t)), center);
}

} // namespace

TEST(Chevalley, Sl2Table)
{
	auto L = algebra("A1");
	ASSERT_EQ(L.dim(), 3u);
	// basis: x_a, x_-a, h
	auto h = L.table().bracket_basis(0, 1);
	EXPECT_EQ(h, L.element(2));
	EXPECT_EQ(L.table().bracket_basis(2, 0), Rational(2) * L.element(0));
	EXPECT_EQ(L.table().bracket_basis(2, 1), Rational(-2) * L.element(1));
}

TEST(Chevalley, A2SimpleBracket)
{
	auto L = algebra("A2");
	auto r = L.table().bracket_basis(0, 1);
	EXPECT_EQ(abs(r.coords[2]), 1);
	EXPECT_EQ(L.structure_constant(0, 1), 1); // extraspecial sign is +
	auto es = L.extraspecial_pair(2);
	ASSERT_TRUE(es.has_value());
	EXPECT_EQ(*es, std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(Chevalley, CenterIsCentral)
{
	auto L = algebra("A1", 1);
	ASSERT_EQ(L.dim(), 4u);
	for (std::size_t i = 0; i < L.dim(); ++i)
	{
		EXPECT_TRUE(L.table().bracket_basis(3, i).is_zero());
		EXPECT_TRUE(L.table().bracket_basis(i, 3).is_zero());
	}
	EXPECT_EQ(L.basis_id(3), "z1");
	EXPECT_EQ(L.basis_id(0), "x(1)");
	EXPECT_EQ(L.basis_id(1), "x(-1)");
}

TEST(Chevalley, BracketExamples)
{
	auto L = algebra("A2");
	std::size_t h1 = L.coroot(0), h2 = L.coroot(1);
	EXPECT_TRUE(bracket(L, L.element(h1), L.element(h2)).is_zero());
	auto const &rs = L.root_system();
	for (std::size_t a = 0; a < rs.size(); ++a)
		for (int b = 0; b < rs.rank(); ++b)
			EXPECT_EQ(bracket(L, L.element(L.coroot(b)), L.element(a)),
			          Rational(rs.cartan_integer(rs.root(a), rs.root(b))) * L.element(a));

	std::mt19937_64 rng(7);
	std::uniform_int_distribution<int> d(-5, 5);
	for (int trial = 0; trial < 20; ++trial)
	{
		LieElement x = L.zero(), y = L.zero();
		for (std::size_t i = 0; i < L.dim(); ++i)
		{
			x.coords[i] = d(rng);
			y.coords[i] = Rational(d(rng), 3);
			y.coords[i].canonicalize();
		}
		EXPECT_TRUE(bracket(L, x, x).is_zero());
		EXPECT_EQ(bracket(L, x, y), Rational(-1) * bracket(L, y, x));
		LieElement xi = x;
		EXPECT_TRUE(bracket(L, xi, Rational(3) * y).is_integral());
	}
	EXPECT_THROW(bracket(L, LieElement::zero(3), L.zero()), Error);
}

TEST(Chevalley, SignConstraints)
{
	auto L = algebra("A1");
	EXPECT_TRUE(verify_sign_constraints(L, {1, 1}));
	EXPECT_TRUE(verify_sign_constraints(L, {2, Rational(1, 2)}));
	EXPECT_FALSE(verify_sign_constraints(L, {2, 1}));
	EXPECT_THROW(verify_sign_constraints(L, {1}), Error);
}

TEST(Chevalley, RescalingByCharacterStaysChevalley)
{
	// c_alpha = prod t_i^{m_i(alpha)} times a sign even in alpha satisfies both constraints
	for (char const *t : {"A2", "B2", "G2", "C3"})
	{
		auto L = algebra(t);
		auto const &rs = L.root_system();
		std::vector<Rational> tvals = {Rational(2), Rational(-3, 5), Rational(7), Rational(1, 2)};
		std::vector<Rational> c(rs.size());
		for (std::size_t a = 0; a < rs.size(); ++a)
		{
			Rational v = 1;
			auto const &m = rs.simple_coords(a);
			for (std::size_t i = 0; i < m.size(); ++i)
			{
				Rational p = 1;
				for (long k = 0; k < std::abs(m[i]); ++k)
					p *= tvals[i];
				v = m[i] >= 0 ? Rational(v * p) : Rational(v / p);
			}
			c[a] = v;
		}
		ASSERT_TRUE(verify_sign_constraints(L, c)) << t;
		auto R = rescale(L, c);
		EXPECT_TRUE(verify_chevalley(R).ok()) << t;
	}
}

TEST(Chevalley, AdjointMatrix)
{
	auto L = algebra("A1");
	EXPECT_TRUE(adjoint_matrix(L, L.zero()).is_zero());
	auto m = adjoint_matrix(L, L.element(2));
	Matrix<Rational> want = Matrix<Rational>::diagonal({2, -2, 0});
	EXPECT_EQ(m, want);
	EXPECT_THROW(adjoint_matrix(L, LieElement::zero(2)), Error);

	// linear in x
	auto A = algebra("B2");
	LieElement x = A.element(0) + Rational(3) * A.element(5);
	LieElement y = Rational(-2) * A.element(A.coroot(1)) + A.element(2);
	EXPECT_EQ(adjoint_matrix(A, x + y), adjoint_matrix(A, x) + adjoint_matrix(A, y));
}

TEST(Chevalley, PrincipalNilpotent)
{
	auto L1 = algebra("A1");
	auto x1 = principal_nilpotent(L1);
	EXPECT_EQ(x1, L1.element(0));
	EXPECT_TRUE(adjoint_matrix(L1, x1).pow(3).is_zero());

	auto L2 = algebra("A2");
	auto x2 = principal_nilpotent(L2);
	EXPECT_EQ(x2, L2.element(0) + L2.element(1));
	auto ad = adjoint_matrix(L2, x2);
	EXPECT_FALSE(ad.pow(4).is_zero());
	EXPECT_TRUE(ad.pow(5).is_zero());
}

TEST(Chevalley, VerificationAllTypes)
{
	for (auto t : supported_types())
	{
		auto L = build_chevalley_basis(RootSystem(t), 1);
		auto rep = verify_chevalley(L, 2000, 3);
		EXPECT_TRUE(rep.ok()) << to_string(t);
		EXPECT_TRUE(rep.magnitude) << to_string(t);
		EXPECT_TRUE(rep.jacobi) << to_string(t);
		EXPECT_TRUE(rep.squared_norm_clause) << to_string(t);
		// c_{-a,-b} = c_{a,b} cannot hold alongside [x_a, x_{-a}] = h_a
		if (rep.pairs_checked > 0)
			EXPECT_FALSE(rep.negation_symmetric) << to_string(t);
		EXPECT_EQ(rep.negation_symmetric_mismatches, rep.pairs_checked);
	}
}

TEST(Chevalley, GlRealizationCrossCheck)
{
	for (char const *t : {"A1", "A2", "A3", "A4"})
	{
		for (std::size_t center : {0u, 1u})
		{
			auto L = algebra(t, center);
			auto images = gl_realization(L);
			EXPECT_TRUE(check_realization(L, images)) << t;
		}
	}
	auto L = build_chevalley_basis(RootSystem(CartanType::parse("A2")), 1,
	                               Matrix<Rational>({{Rational(-1)}}));
	EXPECT_TRUE(check_realization(L, gl_realization(L)));
	EXPECT_THROW(gl_realization(algebra("B2")), Error);
	EXPECT_THROW(build_chevalley_basis(RootSystem(CartanType::parse("A2")), 1,
	                                   Matrix<Rational>({{Rational(2)}})),
	             Error);
}
