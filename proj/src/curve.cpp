#include "arithchar/curve.hpp"
#include "arithchar/charmorph.hpp"
#include "arithchar/error.hpp"

#include <algorithm>
#include <cmath>

namespace arithchar {

namespace {

std::size_t factorial(std::size_t n)
{
	std::size_t f = 1;
	for (std::size_t i = 2; i <= n; ++i)
		f *= i;
	return f;
}

void require_field(NumberField const &K, FieldElement const &x)
{
	if (x.d != 0 && x.d != K.d() && !x.is_rational())
		throw Error(ErrorCode::UnsupportedBase, "entry " + x.to_string() + " lies in another field");
}

// e_1..e_n of the tuple in F: coefficients of prod (1 + l_i x)
std::vector<GF::Elem> elementary(GF const &F, std::vector<GF::Elem> const &l)
{
	std::vector<GF::Elem> e(l.size() + 1, F.zero());
	e[0] = F.one();
	for (std::size_t i = 0; i < l.size(); ++i)
		for (std::size_t k = i + 1; k >= 1; --k)
			e[k] = F.add(e[k], F.mul(e[k - 1], l[i]));
	return e;
}

// coefficient with sign for "... + c*x^k"; wraps two-term values
std::string coefficient_term(FieldElement const &c, std::string const &mono, bool first)
{
	bool compound = !c.is_rational() && c.a != 0;
	bool neg = !compound && (c.is_rational() ? c.a < 0 : c.b < 0);
	FieldElement mag = neg ? -c : c;
	std::string body;
	if (mono.empty())
		body = compound ? "(" + mag.to_string() + ")" : mag.to_string();
	else if (mag == FieldElement(1))
		body = mono;
	else
		body = (compound ? "(" + mag.to_string() + ")" : mag.to_string()) + "*" + mono;
	if (first)
		return (neg ? "-" : "") + body;
	return (neg ? " - " : " + ") + body;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n)
{
	std::vector<std::uint64_t> out;
	for (std::uint64_t p = 2; p <= n; ++p)
		if (is_prime(p))
			out.push_back(p);
	return out;
}

std::vector<PrimeFiber> patterns_above(CharacteristicCurve const &C, std::uint64_t p)
{
	if (!is_prime(p))
		throw Error(ErrorCode::ParseError, std::to_string(p) + " is not prime");
	std::vector<PrimeFiber> out;
	for (auto const &P : prime_ideals_above(C.base, p))
	{
		PrimeFiber fb;
		fb.p = p;
		fb.f = P.f;
		fb.e = P.e;
		fb.pattern = fq::factor_pattern(P.residue, reduce_poly(P, C.poly));
		out.push_back(std::move(fb));
	}
	return out;
}

void require_spectral_nondegenerate(CharacteristicCurve const &C)
{
	if (C.kind != CurveKind::Spectral)
		throw Error(ErrorCode::UnsupportedType, "fiber analysis needs a spectral curve");
	if (C.degenerate)
		throw Error(ErrorCode::DegenerateCurve, "discriminant is zero");
}

std::vector<Integer> divisors(Integer n)
{
	n = abs(n);
	std::vector<Integer> small, large;
	for (Integer d = 1; d * d <= n; ++d)
		if (n % d == 0)
		{
			small.push_back(d);
			if (d * d != n)
				large.push_back(n / d);
		}
	small.insert(small.end(), large.rbegin(), large.rend());
	return small;
}

} // namespace

HiggsField make_higgs_field(NumberField const &K, Matrix<FieldElement> const &phi)
{
	return make_higgs_field(K, phi, FractionalIdeal::unit(K));
}

HiggsField make_higgs_field(NumberField const &K, Matrix<FieldElement> const &phi, FractionalIdeal const &L)
{
	if (!phi.square() || phi.rows() == 0)
		throw Error(ErrorCode::NonSquare, "Higgs field must be a nonempty square matrix");
	if (!(L.field() == K))
		throw Error(ErrorCode::UnsupportedBase, "twist lives over another field");
	HiggsField h{K, Matrix<FieldElement>(phi.rows(), phi.cols()), L, {}};
	for (std::size_t i = 0; i < phi.rows(); ++i)
		for (std::size_t j = 0; j < phi.cols(); ++j)
		{
			auto const &x = phi(i, j);
			require_field(K, x);
			FieldElement y = x.is_rational() ? FieldElement(K, x.a, 0) : x;
			auto coords = L.coordinates(y);
			if (!coords)
				throw Error(ErrorCode::MembershipFailure,
				            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
				                x.to_string() + " is not in " + L.to_string());
			h.matrix(i, j) = y;
			h.entry_membership.push_back(*coords);
		}
	return h;
}

bool CharacteristicPoint::integral() const
{
	return std::all_of(certificate.begin(), certificate.end(), [](auto const &c) { return c.has_value(); });
}

CharacteristicPoint characteristic_point(HiggsField const &phi)
{
	auto cp = char_poly(phi.matrix);
	CharacteristicPoint pt;
	FractionalIdeal Lk = FractionalIdeal::unit(phi.field);
	for (std::size_t k = 1; k < cp.size(); ++k)
	{
		FieldElement c = k % 2 ? -cp[k] : cp[k];
		c = FieldElement(phi.field, c.a, c.b);
		Lk = Lk * phi.twist;
		pt.c.push_back(c);
		pt.bound.push_back(Lk);
		// zero lies in every ideal; coordinates() handles it
		pt.certificate.push_back(Lk.coordinates(c));
	}
	return pt;
}

std::size_t CharacteristicCurve::degree() const
{
	return kind == CurveKind::Spectral ? n : factorial(n);
}

std::vector<std::string> CharacteristicCurve::presentation() const
{
	std::vector<std::string> out;
	if (kind == CurveKind::Spectral)
	{
		std::string s;
		for (std::size_t i = 0; i < poly.size(); ++i)
		{
			if (poly[i].is_zero())
				continue;
			std::size_t k = poly.size() - 1 - i;
			std::string mono = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
			s += coefficient_term(poly[i], mono, s.empty());
		}
		out.push_back(s.empty() ? "0" : s);
		return out;
	}
	for (std::size_t k = 1; k <= n; ++k)
	{
		std::string s = elementary_symmetric(n, k).to_string();
		if (!invariants[k - 1].is_zero())
			s += coefficient_term(-invariants[k - 1], "", false);
		out.push_back(s);
	}
	return out;
}

FieldElement polynomial_discriminant(std::vector<FieldElement> const &p)
{
	if (p.empty() || !(p[0] == FieldElement(1)))
		throw Error(ErrorCode::DimensionMismatch, "discriminant needs a monic polynomial");
	std::size_t n = p.size() - 1;
	if (n == 0)
		throw Error(ErrorCode::DimensionMismatch, "discriminant of a constant");
	if (n == 1)
		return FieldElement(1);
	std::vector<FieldElement> dp;
	for (std::size_t i = 0; i < n; ++i)
		dp.push_back(p[i] * FieldElement(static_cast<long>(n - i)));
	// Sylvester matrix: n - 1 shifted copies of p, n shifted copies of p'
	std::size_t m = 2 * n - 1;
	Matrix<FieldElement> S(m, m);
	for (std::size_t r = 0; r + 1 < n; ++r)
		for (std::size_t j = 0; j <= n; ++j)
			S(r, r + j) = p[j];
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t j = 0; j < n; ++j)
			S(n - 1 + r, r + j) = dp[j];
	FieldElement res = S.det();
	return (n * (n - 1) / 2) % 2 ? -res : res;
}

FieldElement discriminant(HiggsField const &phi)
{
	return polynomial_discriminant(char_poly(phi.matrix));
}

CharacteristicCurve spectral_curve(HiggsField const &phi)
{
	CharacteristicCurve C;
	C.kind = CurveKind::Spectral;
	C.base = phi.field;
	C.n = phi.rank();
	for (auto const &c : char_poly(phi.matrix))
		C.poly.push_back(FieldElement(phi.field, c.a, c.b));
	C.invariants = characteristic_point(phi).c;
	C.discriminant = polynomial_discriminant(C.poly);
	C.discriminant = FieldElement(phi.field, C.discriminant.a, C.discriminant.b);
	C.degenerate = C.discriminant.is_zero();
	return C;
}

CharacteristicCurve cameral_curve(HiggsField const &phi)
{
	auto C = spectral_curve(phi);
	C.kind = CurveKind::Cameral;
	return C;
}

FqPoly reduce_poly(PrimeIdeal const &P, std::vector<FieldElement> const &p)
{
	FqPoly f;
	for (auto it = p.rbegin(); it != p.rend(); ++it)
		f.push_back(reduce(P, *it));
	return fq::normalize(f, P.residue);
}

std::vector<PrimeFiber> fibers_above(CharacteristicCurve const &C, std::uint64_t p)
{
	require_spectral_nondegenerate(C);
	return patterns_above(C, p);
}

std::vector<std::pair<unsigned, unsigned>> fiber(CharacteristicCurve const &C, std::uint64_t p)
{
	if (C.base.degree() != 1)
		throw Error(ErrorCode::UnsupportedBase, "fiber() is for curves over Q; use fibers_above");
	return fibers_above(C, p).front().pattern;
}

RamificationReport ramification(CharacteristicCurve const &C, std::uint64_t pmax)
{
	if (C.kind != CurveKind::Spectral)
		throw Error(ErrorCode::UnsupportedType, "ramification needs a spectral curve");
	RamificationReport rep;
	rep.discriminant = C.discriminant;
	// sigma(disc) = 0 iff disc = 0
	rep.archimedean_collisions.assign(static_cast<std::size_t>(C.base.places()), C.degenerate);
	for (auto p : primes_up_to(pmax))
	{
		std::vector<PrimeFiber> fibers;
		try
		{
			fibers = patterns_above(C, p);
		}
		catch (Error const &e)
		{
			if (e.code() != ErrorCode::NonIntegral)
				throw;
			rep.nonintegral.push_back(p);
			continue;
		}
		bool repeated = std::any_of(fibers.begin(), fibers.end(), [](PrimeFiber const &fb) {
			return std::any_of(fb.pattern.begin(), fb.pattern.end(), [](auto fe) { return fe.second > 1; });
		});
		if (repeated)
			rep.ramified.push_back({p, std::move(fibers)});
	}
	return rep;
}

std::vector<GF::Elem> spectral_points(CharacteristicCurve const &C, PrimeIdeal const &P)
{
	return fq::roots(P.residue, reduce_poly(P, C.poly));
}

std::vector<std::vector<GF::Elem>> cameral_points(CharacteristicCurve const &C, PrimeIdeal const &P)
{
	GF const &F = P.residue;
	std::size_t n = C.n;
	std::vector<GF::Elem> a;
	for (auto const &c : C.invariants)
		a.push_back(reduce(P, c));
	// every coordinate of a solution is a root of prod (x - t_i) = p_phi, so
	// restricting to roots loses nothing; the full field is used when small
	std::vector<GF::Elem> cand;
	double work = std::pow(static_cast<double>(F.order()), static_cast<double>(n) - 1);
	if (work <= 2e6)
		cand = F.elements();
	else
		cand = spectral_points(C, P);

	std::vector<std::vector<GF::Elem>> out;
	std::vector<std::size_t> idx(n - 1, 0);
	if (cand.empty())
		return out;
	while (true)
	{
		std::vector<GF::Elem> t;
		GF::Elem rest = a[0];
		for (auto i : idx)
		{
			t.push_back(cand[i]);
			rest = F.sub(rest, cand[i]);
		}
		t.push_back(rest);
		auto e = elementary(F, t);
		bool ok = true;
		for (std::size_t k = 2; k <= n && ok; ++k)
			ok = e[k] == a[k - 1];
		if (ok)
			out.push_back(t);
		std::size_t k = 0;
		while (k < idx.size() && ++idx[k] == cand.size())
			idx[k++] = 0;
		if (k == idx.size())
			break;
	}
	return out;
}

std::vector<Rational> rational_spectral_points(CharacteristicCurve const &C)
{
	if (C.base.degree() != 1)
		throw Error(ErrorCode::UnsupportedBase, "rational points need base Q");
	std::vector<Integer> c;
	for (auto const &x : C.poly)
	{
		if (!is_integer(x.a))
			throw Error(ErrorCode::NonIntegral, "p_phi has non-integral coefficients");
		c.push_back(x.a.get_num());
	}
	std::vector<Rational> roots;
	// strip the factor x^m
	while (c.size() > 1 && c.back() == 0)
	{
		c.pop_back();
		if (roots.empty())
			roots.emplace_back(0);
	}
	if (c.size() > 1)
		for (auto const &d : divisors(c.back()))
			for (Integer r : {Integer(d), Integer(-d)})
			{
				Integer v = 0;
				for (auto const &k : c)
					v = v * r + k;
				if (v == 0)
					roots.emplace_back(r);
			}
	std::sort(roots.begin(), roots.end());
	return roots;
}

std::vector<std::vector<Rational>> rational_cameral_points(CharacteristicCurve const &C)
{
	auto roots = rational_spectral_points(C);
	std::vector<std::vector<Rational>> out;
	std::size_t n = C.n;
	if (roots.empty())
		return out;
	std::vector<std::size_t> idx(n, 0);
	while (true)
	{
		std::vector<Rational> e(n + 1, Rational(0));
		e[0] = 1;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t k = i + 1; k >= 1; --k)
				e[k] += e[k - 1] * roots[idx[i]];
		bool ok = true;
		for (std::size_t k = 1; k <= n && ok; ++k)
			ok = e[k] == C.invariants[k - 1].a;
		if (ok)
		{
			std::vector<Rational> t;
			for (auto i : idx)
				t.push_back(roots[i]);
			out.push_back(t);
		}
		std::size_t k = 0;
		while (k < n && ++idx[k] == roots.size())
			idx[k++] = 0;
		if (k == n)
			break;
	}
	return out;
}

CoveringCheck covering_degree_check(CharacteristicCurve const &C)
{
	if (C.degenerate)
		throw Error(ErrorCode::DegenerateCurve, "discriminant is zero");
	Integer dK = C.base.discriminant();
	for (std::uint64_t p = 2; p < 1000000; ++p)
	{
		if (!is_prime(p) || (C.base.degree() == 2 && dK % p == 0))
			continue;
		for (auto const &P : prime_ideals_above(C.base, p))
		{
			if (P.f != 1)
				continue;
			FqPoly f;
			GF::Elem disc;
			try
			{
				f = reduce_poly(P, C.poly);
				disc = reduce(P, C.discriminant);
			}
			catch (Error const &e)
			{
				if (e.code() != ErrorCode::NonIntegral)
					throw;
				continue;
			}
			if (P.residue.is_zero(disc))
				continue;
			auto pat = fq::factor_pattern(P.residue, f);
			if (pat.size() != C.n)
				continue;
			CoveringCheck chk;
			chk.p = p;
			chk.expected = C.degree();
			chk.count = C.kind == CurveKind::Spectral ? spectral_points(C, P).size() : cameral_points(C, P).size();
			chk.passed = chk.count == chk.expected;
			return chk;
		}
	}
	throw Error(ErrorCode::DegenerateCurve, "no split prime found below 10^6");
}

} // namespace arithchar
