// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include "arithchar/arakelov.hpp"
#include "arithchar/charmorph.hpp"
#include "arithchar/chevalley.hpp"
#include "arithchar/cli.hpp"
#include "arithchar/curve.hpp"
#include "arithchar/torsor.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

using namespace arithchar;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

namespace {

// pinned tolerances and limits
constexpr double degree_tol = 1e-9;
constexpr double clause_tol = 1e-9;
constexpr double stabilizer_tol = 1e-12;
constexpr double moved_min = 1e-6;
constexpr double structure_seconds = 10.0;
constexpr double restriction_seconds = 5.0;

int failures = 0;

void report(int id, std::string const &title, bool ok, std::string const &detail)
{
	fmt::print("{} [{}] {}: {}\n", ok ? "PASS" : "FAIL", id, title, detail);
	std::fflush(stdout);
	if (!ok)
		++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1, 2: Chevalley bases ----

// largest l with beta - l alpha a root, found by walking the root list
int string_below(RootSystem const &rs, RatVec const &alpha, RatVec const &beta)
{
	int l = 0;
	RatVec v = beta;
	while (true)
	{
		for (std::size_t i = 0; i < v.size(); ++i)
			v[i] -= alpha[i];
		if (!rs.find(v))
			return l;
		++l;
	}
}

RatVec add(RatVec a, RatVec const &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

void criterion_structure_constants()
{
	auto t0 = std::chrono::steady_clock::now();
	std::size_t entries = 0, pairs = 0, bad = 0;
	for (auto t : supported_types())
	{
		RootSystem rs(t);
		auto L = build_chevalley_basis(rs);
		for (std::size_t i = 0; i < L.dim(); ++i)
			for (std::size_t j = 0; j < L.dim(); ++j)
				for (auto const &[k, c] : L.table().at(i, j))
				{
					++entries;
					bad += !is_integer(c);
				}
		for (std::size_t a = 0; a < rs.size(); ++a)
			for (std::size_t b = 0; b < rs.size(); ++b)
			{
				auto sum = rs.find(add(rs.root(a), rs.root(b)));
				if (!sum)
					continue;
				++pairs;
				Rational c = 0;
				std::size_t hits = 0;
				for (auto const &[k, v] : L.table().at(L.root_vector(a), L.root_vector(b)))
				{
					hits += k == L.root_vector(*sum);
					if (k == L.root_vector(*sum))
						c = v;
					else
						++bad;
				}
				int l = string_below(rs, rs.root(a), rs.root(b));
				if (hits != 1 || abs(c) != l + 1)
					++bad;
			}
	}
	double s = seconds_since(t0);
	report(1, "structure constants integral with |c| = l + 1", bad == 0 && s < structure_seconds,
	       fmt::format("{} table entries, {} root pairs, {} violations, {:.2f} s (limit {} s)", entries, pairs, bad, s,
	                   structure_seconds));
}

using Vec = RatVec;

Vec bracket_vec(BracketTable const &T, Vec const &x, Vec const &y)
{
	Vec r(T.dim(), Rational(0));
	for (std::size_t i = 0; i < T.dim(); ++i)
	{
		if (x[i] == 0)
			continue;
		for (std::size_t j = 0; j < T.dim(); ++j)
		{
			if (y[j] == 0)
				continue;
			for (auto const &[k, c] : T.at(i, j))
				r[k] += x[i] * y[j] * c;
		}
	}
	return r;
}

bool jacobi_zero(BracketTable const &T, std::size_t i, std::size_t j, std::size_t k)
{
	auto e = [&](std::size_t m) {
		Vec v(T.dim(), Rational(0));
		v[m] = 1;
		return v;
	};
	auto s = add(add(bracket_vec(T, bracket_vec(T, e(i), e(j)), e(k)), bracket_vec(T, bracket_vec(T, e(j), e(k)), e(i))),
	             bracket_vec(T, bracket_vec(T, e(k), e(i)), e(j)));
	for (auto const &c : s)
		if (c != 0)
			return false;
	return true;
}

void criterion_jacobi()
{
	std::mt19937_64 rng(2024);
	std::size_t triples = 0, bad = 0;
	for (auto t : supported_types())
	{
		auto L = build_chevalley_basis(RootSystem(t));
		auto const &T = L.table();
		std::size_t d = L.dim();
		if (t.rank <= 3)
		{
			for (std::size_t i = 0; i < d; ++i)
				for (std::size_t j = 0; j < d; ++j)
					for (std::size_t k = 0; k < d; ++k)
					{
						++triples;
						bad += !jacobi_zero(T, i, j, k);
					}
		}
		else
		{
			std::uniform_int_distribution<std::size_t> u(0, d - 1);
			for (int s = 0; s < 10000; ++s)
			{
				++triples;
				bad += !jacobi_zero(T, u(rng), u(rng), u(rng));
			}
		}
	}
	report(2, "Jacobi identity exact", bad == 0, fmt::format("{} triples, {} nonzero", triples, bad));
}

// ---- 3: Chevalley restriction ----

RatVec elementary_of(RatVec const &t)
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

void criterion_restriction()
{
	auto t0 = std::chrono::steady_clock::now();
	std::mt19937_64 rng(31337);
	std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
	std::size_t trials = 0, bad = 0;
	for (int n = 2; n <= 4; ++n)
	{
		auto type = CartanType::parse(fmt::format("A{}", n - 1));
		for (int s = 0; s < 500; ++s)
		{
			RatVec eig;
			for (int i = 0; i < n; ++i)
			{
				Rational q(num(rng), den(rng));
				q.canonicalize();
				eig.push_back(q);
			}
			Matrix<Rational> g(n, n);
			do
			{
				for (int i = 0; i < n; ++i)
					for (int j = 0; j < n; ++j)
						g(i, j) = num(rng);
			} while (g.det() == 0);
			auto a = g * Matrix<Rational>::diagonal(eig) * g.inverse();
			++trials;
			auto lhs = chi_gl(a);
			bad += !(lhs == chi_torus(type, eig) && lhs.values == elementary_of(eig));
		}
	}
	double s = seconds_since(t0);
	report(3, "chi_gl(g D g^-1) = chi_torus(diag D)", bad == 0 && s < restriction_seconds,
	       fmt::format("{} matrices (n = 2, 3, 4), {} mismatches, {:.2f} s (limit {} s)", trials, bad, s,
	                   restriction_seconds));
}

// ---- 4: arithmetic degree ----

// sigma(a + b w) at every archimedean place, from w^2 = s w + c
std::vector<std::complex<double>> embeddings(NumberField const &K, FieldElement const &x)
{
	double a = x.a.get_d(), b = x.b.get_d();
	if (K.degree() == 1)
		return {a};
	double s = K.omega_s().get_d(), c = K.omega_c().get_d();
	std::complex<double> disc = std::sqrt(std::complex<double>(s * s + 4 * c));
	std::complex<double> w1 = (s + disc) / 2.0, w2 = (s - disc) / 2.0;
	if (K.d() > 0)
		return {a + b * w1, a + b * w2};
	// one complex place: pick the root with positive imaginary part
	return {a + b * (w1.imag() > 0 ? w1 : w2)};
}

FieldElement random_element(NumberField const &K, std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> num(-60, 60), den(1, 9);
	while (true)
	{
		Rational a(num(rng), den(rng)), b(K.degree() == 2 ? num(rng) : 0, den(rng));
		a.canonicalize();
		b.canonicalize();
		FieldElement x(K, a, b);
		if (!x.is_zero())
			return x;
	}
}

void criterion_degree()
{
	std::mt19937_64 rng(4);
	std::uniform_real_distribution<double> metric(0.2, 5.0);
	double worst = 0;
	std::size_t samples = 0;
	for (char const *name : {"Q", "Q(sqrt(2))", "Q(i)", "Q(sqrt(-5))"})
	{
		auto K = NumberField::parse(name);
		auto I = FractionalIdeal::generated_by(K, {FieldElement(6), K.degree() == 2 ? FieldElement(K, 2, 1) : FieldElement(4)});
		MetrizedLineBundle L{I, {}};
		for (int i = 0; i < K.places(); ++i)
			L.rho.push_back(metric(rng));
		double ref = arithmetic_degree(K, L);
		for (int s = 0; s < 200; ++s)
		{
			auto x = random_element(K, rng);
			++samples;
			worst = std::max(worst, std::fabs(product_formula_residual(K, x)));
			// archimedean side against the exact norm
			auto sig = embeddings(K, x);
			double arch = 0;
			for (int i = 0; i < K.places(); ++i)
				arch += K.epsilon(i) * std::log(std::abs(sig[static_cast<std::size_t>(i)]));
			worst = std::max(worst, std::fabs(arch - std::log(std::fabs(x.norm().get_d()))));
			worst = std::max(worst, std::fabs(arithmetic_degree(K, L, x) - ref));
		}
	}
	auto K = NumberField::quadratic(-5);
	auto P = FractionalIdeal::generated_by(K, {FieldElement(2), FieldElement(K, 1, 1)});
	double via2 = arithmetic_degree(K, standard_bundle(P), FieldElement(2));
	double via_w = arithmetic_degree(K, standard_bundle(P), FieldElement(K, 1, 1));
	double worked = std::max(std::fabs(via2 + std::log(2.0)), std::fabs(via_w + std::log(2.0)));
	report(4, "product formula and section independence", worst < degree_tol && worked < degree_tol,
	       fmt::format("{} elements over 4 fields, max residual {:.3g}; deg (2, 1 + sqrt -5) via 2: {:.15f}, via "
	                   "1 + sqrt -5: {:.15f}, -log 2 = {:.15f} (tol {})",
	                   samples, worst, via2, via_w, -std::log(2.0), degree_tol));
}

// ---- 5, 6: compatible metrics ----

MatrixXcd random_invertible(std::size_t n, bool complex, std::mt19937_64 &rng)
{
	std::uniform_real_distribution<double> u(-2, 2);
	auto m = static_cast<Eigen::Index>(n);
	while (true)
	{
		MatrixXcd g(m, m);
		for (Eigen::Index i = 0; i < m; ++i)
			for (Eigen::Index j = 0; j < m; ++j)
				g(i, j) = {u(rng), complex ? u(rng) : 0.0};
		if (std::abs(g.determinant()) > 0.2)
			return g;
	}
}

MatrixXcd random_unitary(std::size_t n, bool complex, std::mt19937_64 &rng)
{
	MatrixXcd q = Eigen::HouseholderQR<MatrixXcd>(random_invertible(n, complex, rng)).householderQ();
	return q;
}

// g = k1 a k2 with log singular values uniform in [-1.5, 1.5]
MatrixXcd random_kak(std::size_t n, bool complex, std::mt19937_64 &rng)
{
	std::uniform_real_distribution<double> u(-1.5, 1.5);
	Eigen::VectorXcd a(static_cast<Eigen::Index>(n));
	for (Eigen::Index i = 0; i < a.size(); ++i)
		a(i) = std::exp(u(rng));
	return random_unitary(n, complex, rng) * a.asDiagonal() * random_unitary(n, complex, rng);
}

void criterion_compatibility()
{
	std::mt19937_64 rng(77);
	std::normal_distribution<double> N(0, 1);
	std::size_t witnessed = 0, witnessed_bad = 0, perturbed = 0, undetected = 0;
	double worst = 0;
	for (auto place : {PlaceKind::Real, PlaceKind::Complex})
		for (std::size_t n : {2u, 3u})
		{
			auto cd = canonical_form(n, place);
			auto I = MatrixXd::Identity(cd.dim(), cd.dim());
			for (int s = 0; s < 100; ++s)
			{
				auto H = act(cd, random_kak(n, place == PlaceKind::Complex, rng), canonical_metric(cd)).H;
				auto rep = verify_compatibility(cd, H);
				MatrixXd th = fine_involution(cd, H);
				double sq = (th * th - I).norm();
				double iso = (th.transpose() * H * th - H).norm() / H.norm();
				worst = std::max({worst, sq, iso});
				++witnessed;
				witnessed_bad += !(rep.ok() && rep.involution && rep.inverse_relation && rep.definiteness &&
				                   rep.orthogonality && sq < clause_tol && iso < clause_tol);

				if (place != PlaceKind::Real)
					continue;
				// half the smallest eigenvalue keeps H + S positive definite
				MatrixXd S(cd.dim(), cd.dim());
				for (Eigen::Index i = 0; i < S.rows(); ++i)
					for (Eigen::Index j = 0; j <= i; ++j)
						S(i, j) = S(j, i) = N(rng);
				double lmin = Eigen::SelfAdjointEigenSolver<MatrixXd>(H).eigenvalues().minCoeff();
				MatrixXd Hp = H + 0.5 * lmin / S.norm() * S;
				++perturbed;
				undetected += verify_compatibility(cd, Hp).ok();
			}
		}
	report(5, "compatibility clauses on witnessed metrics, detection of perturbations",
	       witnessed_bad == 0 && undetected == 0,
	       fmt::format("{} witnessed metrics ({} failing, max own residual {:.3g}, tol {}); {} SPD perturbations, {} "
	                   "passing all clauses",
	                   witnessed, witnessed_bad, worst, clause_tol, perturbed, undetected));
}

void criterion_stabilizer()
{
	std::mt19937_64 rng(606);
	double worst_fixed = 0, least_moved = INFINITY;
	std::size_t trials = 0;
	for (auto place : {PlaceKind::Real, PlaceKind::Complex})
		for (std::size_t n : {2u, 3u})
		{
			bool cx = place == PlaceKind::Complex;
			auto cd = canonical_form(n, place);
			auto can = canonical_metric(cd);
			for (int s = 0; s < 100; ++s)
			{
				++trials;
				auto k = random_unitary(n, cx, rng);
				worst_fixed = std::max(worst_fixed, (act(cd, k, can).H - can.H).cwiseAbs().maxCoeff());
				// scalars act trivially, so remove |det g| before comparing
				auto g = random_invertible(n, cx, rng);
				MatrixXcd ng = g / std::pow(std::abs(g.determinant()), 1.0 / double(n));
				least_moved = std::min(least_moved, (act(cd, ng, can).H - can.H).cwiseAbs().maxCoeff());
			}
		}
	report(6, "orthogonal elements fix the canonical metric, others move it",
	       worst_fixed <= stabilizer_tol && least_moved > moved_min,
	       fmt::format("{} trials per kind; max drift under k {:.3g} (tol {}); min displacement under g {:.3g} (> {})",
	                   trials, worst_fixed, stabilizer_tol, least_moved, moved_min));
}

// ---- 7, 8, 9: curves ----

Matrix<FieldElement> random_int_matrix(std::size_t n, long lo, long hi, std::mt19937_64 &rng)
{
	std::uniform_int_distribution<long> u(lo, hi);
	Matrix<FieldElement> m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			m(i, j) = FieldElement(u(rng));
	return m;
}

// integer coefficients of a monic rational polynomial, highest first
std::vector<long> int_coeffs(CharacteristicCurve const &C)
{
	std::vector<long> c;
	for (auto const &x : C.poly)
		c.push_back(x.a.get_num().get_si());
	return c;
}

long mod(long a, long p) { return ((a % p) + p) % p; }

long eval_mod(std::vector<long> const &c, long x, long p)
{
	long r = 0;
	for (long k : c)
		r = mod(r * x + k, p);
	return r;
}

// e_1..e_n of a tuple mod p
std::vector<long> elementary_mod(std::vector<long> const &t, long p)
{
	std::vector<long> e = {1};
	for (long x : t)
	{
		std::vector<long> next(e.size() + 1, 0);
		for (std::size_t i = 0; i < e.size(); ++i)
		{
			next[i] = mod(next[i] + e[i], p);
			next[i + 1] = mod(next[i + 1] + e[i] * x, p);
		}
		e = next;
	}
	return e;
}

std::size_t cameral_count_mod(std::vector<long> const &c, std::size_t n, long p)
{
	// p(x) = x^n + c_1 x^{n-1} + ...; the relations are e_k(t) = (-1)^k c_k
	std::size_t count = 0;
	std::vector<long> t(n, 0);
	std::function<void(std::size_t)> walk = [&](std::size_t i) {
		if (i == n)
		{
			auto e = elementary_mod(t, p);
			for (std::size_t k = 1; k <= n; ++k)
				if (mod(e[k] - (k % 2 ? -c[k] : c[k]), p) != 0)
					return;
			++count;
			return;
		}
		for (long v = 0; v < p; ++v)
		{
			t[i] = v;
			walk(i + 1);
		}
	};
	walk(0);
	return count;
}

// discriminant of a monic quadratic or cubic from its closed form
Integer own_disc(std::vector<long> const &c)
{
	if (c.size() == 3)
	{
		Integer b = c[1], d = c[2];
		return b * b - 4 * d;
	}
	Integer b = c[1], cc = c[2], d = c[3];
	return b * b * cc * cc - 4 * cc * cc * cc - 4 * b * b * b * d - 27 * d * d + 18 * b * cc * d;
}

void criterion_covering()
{
	std::mt19937_64 rng(5150);
	auto Q = NumberField::rational();
	std::size_t curves = 0, bad = 0;
	std::uint64_t max_p = 0;
	for (std::size_t n : {2u, 3u})
	{
		int done = 0;
		while (done < 50)
		{
			auto h = make_higgs_field(Q, random_int_matrix(n, -9, 9, rng));
			auto S = spectral_curve(h);
			if (S.degenerate)
				continue;
			++done;
			++curves;
			auto C = cameral_curve(h);
			auto s = covering_degree_check(S);
			auto c = covering_degree_check(C);
			long p = static_cast<long>(s.p);
			max_p = std::max(max_p, s.p);
			auto coeffs = int_coeffs(S);
			std::size_t roots = 0;
			for (long x = 0; x < p; ++x)
				roots += eval_mod(coeffs, x, p) == 0;
			std::size_t fact = n == 2 ? 2 : 6;
			bool ok = s.passed && c.passed && s.count == n && roots == n && c.count == fact && c.p == s.p &&
			          cameral_count_mod(coeffs, n, p) == fact && own_disc(coeffs) % p != 0;
			bad += !ok;
		}
	}
	report(7, "spectral fibers have n points, cameral fibers n!", bad == 0,
	       fmt::format("{} random curves (50 per n = 2, 3), {} failures, split primes up to {}", curves, bad, max_p));
}

// lowest degree first, trailing zeros trimmed
using PolyP = std::vector<long>;

PolyP trim(PolyP a)
{
	while (!a.empty() && a.back() == 0)
		a.pop_back();
	return a;
}

long inv_mod(long a, long p)
{
	long r = 1, e = p - 2;
	a = mod(a, p);
	while (e)
	{
		if (e & 1)
			r = r * a % p;
		a = a * a % p;
		e >>= 1;
	}
	return r;
}

PolyP rem_mod(PolyP a, PolyP const &b, long p)
{
	long lead = inv_mod(b.back(), p);
	a = trim(a);
	while (a.size() >= b.size())
	{
		long q = a.back() * lead % p;
		std::size_t shift = a.size() - b.size();
		for (std::size_t i = 0; i < b.size(); ++i)
			a[shift + i] = mod(a[shift + i] - q * b[i], p);
		a = trim(a);
	}
	return a;
}

bool repeated_factor_mod(std::vector<long> const &coeffs, long p)
{
	PolyP f(coeffs.rbegin(), coeffs.rend());
	for (auto &x : f)
		x = mod(x, p);
	PolyP df;
	for (std::size_t i = 1; i < f.size(); ++i)
		df.push_back(mod(static_cast<long>(i) * f[i], p));
	PolyP a = trim(f), b = trim(df);
	while (!b.empty())
	{
		auto r = rem_mod(a, b, p);
		a = b;
		b = r;
	}
	return a.size() > 1;
}

void criterion_ramification()
{
	std::mt19937_64 rng(808);
	auto Q = NumberField::rational();
	std::vector<Matrix<FieldElement>> fields{Matrix<FieldElement>({{FieldElement(0), FieldElement(1)},
	                                                               {FieldElement(2), FieldElement(0)}})};
	while (fields.size() < 21)
	{
		auto m = random_int_matrix(2 + fields.size() % 2, -6, 6, rng);
		if (!spectral_curve(make_higgs_field(Q, m)).degenerate)
			fields.push_back(m);
	}
	std::size_t bad = 0, ramified_total = 0;
	std::string fixture;
	for (auto const &m : fields)
	{
		auto S = spectral_curve(make_higgs_field(Q, m));
		auto coeffs = int_coeffs(S);
		Integer disc = own_disc(coeffs);
		std::set<std::uint64_t> repeated, divides, reported;
		for (long p = 2; p < 100; ++p)
		{
			if (!is_prime(static_cast<std::uint64_t>(p)))
				continue;
			if (repeated_factor_mod(coeffs, p))
				repeated.insert(static_cast<std::uint64_t>(p));
			if (disc % p == 0)
				divides.insert(static_cast<std::uint64_t>(p));
		}
		for (auto const &e : ramification(S, 99).ramified)
			reported.insert(e.p);
		ramified_total += repeated.size();
		bad += !(repeated == divides && reported == divides && S.discriminant == FieldElement(Rational(disc)));
		if (fixture.empty())
			fixture = fmt::format("{} has disc {} and ramified set {{{}}}", S.presentation()[0], disc.get_str(),
			                      fmt::join(reported, ", "));
	}
	report(8, "primes below 100 with repeated factors = primes dividing disc", bad == 0,
	       fmt::format("{} curves, {} mismatches, {} ramified primes in total; {}", fields.size(), bad, ramified_total,
	                   fixture));
}

// sum of the principal k x k minors
RatVec minor_sums(Matrix<FieldElement> const &phi)
{
	std::size_t n = phi.rows();
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
				m(i, j) = phi(idx[i], idx[j]).a;
		out[idx.size() - 1] += m.det();
	}
	return out;
}

void criterion_twisted()
{
	std::mt19937_64 rng(99);
	auto Q = NumberField::rational();
	std::size_t trials = 0, bad = 0;
	for (long m : {2, 3, 5})
	{
		auto L = FractionalIdeal::generated_by(Q, {FieldElement(m)});
		for (int s = 0; s < 100; ++s)
		{
			std::size_t n = 2 + s % 3;
			auto phi = random_int_matrix(n, -5, 5, rng);
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					phi(i, j) = phi(i, j) * FieldElement(m);
			auto pt = characteristic_point(make_higgs_field(Q, phi, L));
			auto oracle = minor_sums(phi);
			++trials;
			bool ok = pt.integral();
			Integer mk = 1;
			for (std::size_t k = 0; k < n; ++k)
			{
				mk *= m;
				ok = ok && pt.c[k] == FieldElement(oracle[k]) && is_integer(oracle[k] / mk) &&
				     pt.bound[k] == FractionalIdeal::generated_by(Q, {FieldElement(Rational(mk))}) &&
				     pt.certificate[k].has_value() && pt.bound[k].contains(pt.c[k]);
			}
			bad += !ok;
		}
	}
	report(9, "c_k(phi) lies in L^k for phi with entries in L = (m)", bad == 0,
	       fmt::format("{} Higgs fields (m = 2, 3, 5; n = 2..4), {} failures", trials, bad));
}

// ---- 10: CLI ----

std::string run_cli(std::vector<std::string> args, int &code)
{
	args.insert(args.begin(), "arithchar");
	std::ostringstream out, err;
	code = cli::run(args, out, err);
	return out.str() + "\x1f" + err.str();
}

void criterion_cli()
{
	auto dir = std::filesystem::temp_directory_path();
	auto torsor = (dir / "acceptance_torsor.json").string();
	std::ofstream(torsor) << R"j({"field": "Q(sqrt(-5))", "rank": 2,
		"ideals": [{"generators": ["2", "1+w"]}, [[1, 0], [0, 1]]],
		"metrics": [[[2, [0.5, 1]], [[0.5, -1], 3]]]})j";
	std::vector<std::vector<std::string>> runs = {
	    {"rootsys", "--type", "B3", "--weyl"},
	    {"chevalley", "--type", "D4", "--center", "1", "--verify"},
	    {"chi", "--matrix", "[[1,2,0],[0,\"1/2\",1],[3,0,-1]]"},
	    {"chi", "--torus-point", "[1,2,3]", "--type", "G2"},
	    {"degree", "--field", "Q(sqrt(-5))", "--ideal", "{\"generators\":[\"2\",\"1+w\"]}", "--metrics", "[1]"},
	    {"slope", "--torsor", torsor, "--char", "3"},
	    {"curve", "--matrix", "[[0,1],[2,0]]", "--field", "Q"},
	    {"curve", "--matrix", "[[0,1,0],[0,0,1],[6,-11,6]]", "--field", "Q", "--cameral"},
	    {"curve", "--matrix", "[[1,0],[0,1]]", "--fibers", "50"},
	};
	std::size_t verbs = 0, differing = 0, rejected = 0;
	int i = 0;
	for (auto const &args : runs)
	{
		int c1 = 0, c2 = 0;
		auto first = run_cli(args, c1), second = run_cli(args, c2);
		++verbs;
		differing += first != second || c1 != c2;
		if (c1 != 0)
			continue;
		auto path = (dir / fmt::format("acceptance_out{}.json", i++)).string();
		std::ofstream(path) << first.substr(0, first.find('\x1f'));
		std::vector<std::string> v = {"verify", "--input", path};
		int v1 = 0, v2 = 0;
		auto a = run_cli(v, v1), b = run_cli(v, v2);
		++verbs;
		differing += a != b || v1 != v2;
		rejected += v1 != 0;
	}
	report(10, "CLI output byte-identical across runs", differing == 0 && rejected == 0,
	       fmt::format("{} invocations run twice (every verb, verify on each output), {} differing, {} outputs "
	                   "rejected by verify",
	                   verbs, differing, rejected));
}

} // namespace

int main()
{
	criterion_structure_constants();
	criterion_jacobi();
	criterion_restriction();
	criterion_degree();
	criterion_compatibility();
	criterion_stabilizer();
	criterion_covering();
	criterion_ramification();
	criterion_twisted();
	criterion_cli();
	fmt::print("{} of 10 criteria passed\n", 10 - failures);
	return failures == 0 ? 0 : 1;
}
