#include "arithchar/charmorph.hpp"
#include "arithchar/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace arithchar;

namespace {

Rational q(long a, long b = 1)
{
	Rational r(a, b);
	r.canonicalize();
	return r;
}

// e_k of a list of numbers from the coefficients of prod (1 + t_i x)
RatVec elementary_oracle(RatVec const &t)
{
	RatVec c = {Rational(1)};
	for (auto const &x : t)
	{
		RatVec next(c.size() + 1, Rational(0));
		for (std::size_t i = 0; i < c.size(); ++i)
		{
			next[i] += c[i];
			next[i + 1] += c[i] * x;
		}
		c = next;
	}
	return RatVec(c.begin() + 1, c.end());
}

// sum of principal k x k minors
RatVec principal_minors(Matrix<Rational> const &a)
{
	std::size_t n = a.rows();
	RatVec out(n, Rational(0));
	for (unsigned mask = 1; mask < (1u << n); ++mask)
	{
		std::vector<std::size_t> idx;
		for (std::size_t i = 0; i < n; ++i)
			if (mask >> i & 1)
				idx.push_back(i);
		Matrix<Rational> m(idx.size(), idx.size());
		for (std::size_t i = 0; i < idx.size(); ++i)
			for (std::size_t j = 0; j < idx.size(); ++j)
				m(i, j) = a(idx[i], idx[j]);
		out[idx.size() - 1] += m.det();
	}
	return out;
}

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

} // namespace

TEST(Charmorph, Gl2Invariants)
{
	auto inv = fundamental_invariants(CartanType::parse("A1"));
	ASSERT_EQ(inv.size(), 2u);
	EXPECT_EQ(inv[0], var(2, 0) + var(2, 1));
	EXPECT_EQ(inv[1], var(2, 0) * var(2, 1));
}

TEST(Charmorph, B2Invariants)
{
	auto t = CartanType::parse("B2");
	auto inv = fundamental_invariants(t);
	ASSERT_EQ(inv.size(), 2u);
	auto s0 = var(2, 0) * var(2, 0), s1 = var(2, 1) * var(2, 1);
	EXPECT_EQ(inv[0], s0 + s1);
	EXPECT_EQ(inv[1], s0 * s1);
	// Reynolds oracle over the 8 signed permutations
	EXPECT_EQ(reynolds_symmetrize(t, {2, 0}), Rational(1, 2) * inv[0]);
	EXPECT_EQ(reynolds_symmetrize(t, {2, 2}), inv[1]);
	EXPECT_TRUE(reynolds_symmetrize(t, {1, 0}).is_zero());
}

TEST(Charmorph, G2InvariantDegrees)
{
	auto t = CartanType::parse("G2");
	auto inv = fundamental_invariants(t);
	ASSERT_EQ(inv.size(), 2u);
	EXPECT_EQ(inv[0].degree(), 2);
	EXPECT_EQ(inv[1].degree(), 6);
	for (auto const &p : inv)
	{
		EXPECT_TRUE(p.is_homogeneous());
		EXPECT_TRUE(is_weyl_invariant(t, p));
		EXPECT_EQ(reynolds_symmetrize(t, {0, 0, 0}), Polynomial::constant(3, 1));
	}
	// averaging the generators reproduces them
	for (auto const &p : inv)
	{
		Polynomial avg(3);
		for (auto const &[e, c] : p.terms())
			avg += c * reynolds_symmetrize(t, e);
		EXPECT_EQ(avg, p);
	}
	// on the root plane every degree 4 invariant is a multiple of p2^2
	RatVec plane = {1, 2, -3}, other = {q(1, 2), -5, q(9, 2)};
	for (Exponent e : {Exponent{4, 0, 0}, Exponent{2, 2, 0}, Exponent{3, 1, 0}, Exponent{2, 1, 1}})
	{
		auto r = reynolds_symmetrize(t, e);
		auto p2sq = inv[0] * inv[0];
		EXPECT_EQ(r.evaluate(plane) * p2sq.evaluate(other), r.evaluate(other) * p2sq.evaluate(plane));
	}
}

TEST(Charmorph, InvariantsAllTypes)
{
	for (auto t : supported_types())
	{
		auto inv = fundamental_invariants(t);
		EXPECT_EQ(inv.size(), torus_dimension(t) - (t.family == Family::G ? 1 : 0)) << to_string(t);
		for (auto const &p : inv)
			EXPECT_TRUE(is_weyl_invariant(t, p)) << to_string(t) << " " << p.to_string();
		// product of degrees equals |W| (A_n counts the extra degree-1 center invariant)
		std::size_t prod = 1;
		for (auto const &p : inv)
			prod *= static_cast<std::size_t>(p.degree());
		EXPECT_EQ(prod, classical_weyl_order(t)) << to_string(t);
	}
	EXPECT_THROW(fundamental_invariants(CartanType{Family::B, 1}), Error);
}

TEST(Charmorph, ChiTorus)
{
	auto t = CartanType::parse("A1");
	EXPECT_EQ(chi_torus(t, {3, 5}).values, (RatVec{8, 15}));
	EXPECT_EQ(chi_torus(t, {5, 3}), chi_torus(t, {3, 5}));
	EXPECT_EQ(chi_torus(CartanType::parse("A2"), {1, 2, 3}).values, (RatVec{6, 11, 6}));
	EXPECT_EQ(chi_torus_gl({1, 2, 3}).values, (RatVec{6, 11, 6}));
	EXPECT_THROW(chi_torus(t, {1, 2, 3}), Error);

	std::mt19937_64 rng(11);
	std::uniform_int_distribution<int> d(-9, 9);
	for (auto ty : supported_types())
	{
		RootSystem rs(ty);
		auto w = rs.weyl_group();
		for (int trial = 0; trial < 5; ++trial)
		{
			RatVec p;
			for (std::size_t i = 0; i < torus_dimension(ty); ++i)
				p.push_back(q(d(rng), 1 + (d(rng) + 9) % 4));
			auto base = chi_torus(ty, p);
			for (auto const &g : w)
				EXPECT_EQ(chi_torus(ty, g.ambient * p), base) << to_string(ty);
		}
	}
}

TEST(Charmorph, ChiGl)
{
	EXPECT_EQ(chi_gl(Matrix<Rational>::diagonal({2, 7})).values, (RatVec{9, 14}));
	EXPECT_EQ(chi_gl(Matrix<Rational>({{0, 1}, {2, 0}})).values, (RatVec{0, -2}));
	// companion matrix of l^3 - l - 1
	Matrix<Rational> comp({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
	EXPECT_EQ(chi_gl(comp).values, (RatVec{0, -1, 1}));
	EXPECT_THROW(chi_gl(Matrix<Rational>(2, 3)), Error);

	std::mt19937_64 rng(5);
	std::uniform_int_distribution<int> d(-6, 6);
	for (std::size_t n = 1; n <= 5; ++n)
		for (int trial = 0; trial < 20; ++trial)
		{
			Matrix<Rational> a(n, n);
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					a(i, j) = q(d(rng), 1 + (d(rng) + 6) % 3);
			EXPECT_EQ(chi_gl(a).values, principal_minors(a));
		}
}

TEST(Charmorph, RestrictionAndConjugation)
{
	std::mt19937_64 rng(99);
	std::uniform_int_distribution<int> d(-5, 5);
	for (std::size_t n = 2; n <= 4; ++n)
		for (int trial = 0; trial < 30; ++trial)
		{
			RatVec eig;
			for (std::size_t i = 0; i < n; ++i)
				eig.push_back(q(d(rng), 1 + (d(rng) + 5) % 3));
			Matrix<Rational> g(n, n);
			do
			{
				for (std::size_t i = 0; i < n; ++i)
					for (std::size_t j = 0; j < n; ++j)
						g(i, j) = d(rng);
			} while (g.det() == 0);
			auto a = g * Matrix<Rational>::diagonal(eig) * g.inverse();
			EXPECT_EQ(chi_gl(a), chi_torus_gl(eig));
			EXPECT_EQ(chi_torus_gl(eig).values, elementary_oracle(eig));
			Matrix<Rational> h(n, n);
			do
			{
				for (std::size_t i = 0; i < n; ++i)
					for (std::size_t j = 0; j < n; ++j)
						h(i, j) = q(d(rng), 2);
			} while (h.det() == 0);
			EXPECT_EQ(chi_gl(h * a * h.inverse()), chi_gl(a));
		}
}

TEST(Charmorph, IntegralInputsGiveIntegralInvariants)
{
	std::mt19937_64 rng(3);
	std::uniform_int_distribution<int> d(-20, 20);
	for (int trial = 0; trial < 50; ++trial)
	{
		Matrix<Rational> a(3, 3);
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < 3; ++j)
				a(i, j) = d(rng);
		for (auto const &c : chi_gl(a).values)
			EXPECT_TRUE(is_integer(c));
	}
	for (auto t : supported_types())
	{
		RatVec p;
		for (std::size_t i = 0; i < torus_dimension(t); ++i)
			p.push_back(d(rng));
		for (auto const &c : chi_torus(t, p).values)
			EXPECT_TRUE(is_integer(c)) << to_string(t);
	}
	// off the root plane too
	EXPECT_EQ(chi_torus(CartanType::parse("G2"), {1, 0, 0}).values, (RatVec{1, 4}));
}

TEST(Charmorph, Reynolds)
{
	auto a1 = CartanType::parse("A1");
	EXPECT_EQ(reynolds_symmetrize(a1, {1, 0}), Rational(1, 2) * (var(2, 0) + var(2, 1)));
	auto e2 = fundamental_invariants(a1)[1];
	EXPECT_EQ(reynolds_symmetrize(a1, {1, 1}), e2);
	for (auto t : supported_types())
	{
		Exponent e(torus_dimension(t), 0);
		e[0] = 2;
		if (e.size() > 1)
			e[1] = 1;
		EXPECT_TRUE(is_weyl_invariant(t, reynolds_symmetrize(t, e))) << to_string(t);
	}
}

TEST(Charmorph, NewtonIdentities)
{
	RatVec t = {1, 2, 3, q(-1, 2)};
	CharPoint e = chi_torus_gl(t);
	RatVec p = power_sums(e);
	for (std::size_t k = 1; k <= t.size(); ++k)
	{
		Rational s = 0;
		for (auto const &x : t)
		{
			Rational m = 1;
			for (std::size_t i = 0; i < k; ++i)
				m *= x;
			s += m;
		}
		EXPECT_EQ(p[k - 1], s);
	}
	EXPECT_EQ(elementary_from_power_sums(p), e);
}

TEST(Charmorph, PolynomialBasics)
{
	auto x = var(2, 0), y = var(2, 1);
	auto p = x * x - Rational(3) * y + Polynomial::constant(2, q(1, 2));
	EXPECT_EQ(p.evaluate({2, 1}), q(3, 2));
	EXPECT_EQ(p.degree(), 2);
	EXPECT_FALSE(p.is_homogeneous());
	EXPECT_EQ((p - p).degree(), -1);
	EXPECT_EQ(pow(x + y, 2), x * x + Rational(2) * x * y + y * y);
	// swap substitution
	Matrix<Rational> s({{0, 1}, {1, 0}});
	EXPECT_EQ(p.substitute(s), y * y - Rational(3) * x + Polynomial::constant(2, q(1, 2)));
	EXPECT_EQ(p.to_string(), "t1^2 - 3*t2 + 1/2");
	EXPECT_THROW(x + var(3, 0), Error);
}
