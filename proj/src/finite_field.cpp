#include "arithchar/finite_field.hpp"
#include "arithchar/error.hpp"

#include <algorithm>

namespace arithchar {

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

namespace {

constexpr std::uint64_t max_prime = (1ull << 31);

std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
	std::uint64_t r = 1 % p;
	a %= p;
	while (e)
	{
		if (e & 1)
			r = r * a % p;
		a = a * a % p;
		e >>= 1;
	}
	return r;
}

} // namespace

GF::GF(std::uint64_t p) : p_(p), k_(1)
{
	if (p >= max_prime || !is_prime(p))
		throw Error(ErrorCode::ParseError, "GF needs a prime below 2^31, got " + std::to_string(p));
}

GF::GF(std::uint64_t p, std::uint64_t s, std::uint64_t c) : GF(p)
{
	k_ = 2;
	s_ = s % p;
	c_ = c % p;
	// x^2 - s x - c has no root
	for (std::uint64_t x = 0; x < p && p < 4096; ++x)
		if ((x * x % p + p * 2 - s_ * x % p - c_) % p == 0)
			throw Error(ErrorCode::ParseError, "reducible modulus for GF(p^2)");
	if (p >= 4096)
	{
		std::uint64_t disc = (s_ * s_ + 4 * c_) % p;
		if (disc == 0 || powmod_u(disc, (p - 1) / 2, p) == 1)
			throw Error(ErrorCode::ParseError, "reducible modulus for GF(p^2)");
	}
}

GF GF::quadratic(std::uint64_t p)
{
	if (p == 2)
		return GF(2, 1, 1);
	for (std::uint64_t n = 2; n < p; ++n)
		if (powmod_u(n, (p - 1) / 2, p) == p - 1)
			return GF(p, 0, n);
	throw Error(ErrorCode::ParseError, "no quadratic non-residue");
}

GF::Elem GF::from_int(std::int64_t v) const
{
	std::int64_t m = v % static_cast<std::int64_t>(p_);
	if (m < 0)
		m += static_cast<std::int64_t>(p_);
	return {static_cast<std::uint64_t>(m), 0};
}

GF::Elem GF::gen() const
{
	if (k_ != 2)
		throw Error(ErrorCode::DimensionMismatch, "prime field has no generator x");
	return {0, 1};
}

GF::Elem GF::from_rational(Rational const &q) const
{
	Integer pz(static_cast<unsigned long>(p_));
	Integer num = q.get_num() % pz, den = q.get_den() % pz;
	if (den == 0)
		throw Error(ErrorCode::NonIntegral, "denominator divisible by " + std::to_string(p_));
	if (num < 0)
		num += pz;
	Elem n{num.get_ui(), 0}, d{den.get_ui(), 0};
	return mul(n, inv(d));
}

GF::Elem GF::add(Elem a, Elem b) const { return {(a.c0 + b.c0) % p_, (a.c1 + b.c1) % p_}; }
GF::Elem GF::sub(Elem a, Elem b) const { return {(a.c0 + p_ - b.c0) % p_, (a.c1 + p_ - b.c1) % p_}; }
GF::Elem GF::neg(Elem a) const { return sub(zero(), a); }

GF::Elem GF::mul(Elem a, Elem b) const
{
	if (k_ == 1)
		return {a.c0 * b.c0 % p_, 0};
	std::uint64_t hi = a.c1 * b.c1 % p_;
	std::uint64_t c0 = (a.c0 * b.c0 % p_ + hi * c_ % p_) % p_;
	std::uint64_t c1 = (a.c0 * b.c1 % p_ + a.c1 * b.c0 % p_ + hi * s_ % p_) % p_;
	return {c0, c1};
}

GF::Elem GF::pow(Elem a, std::uint64_t e) const
{
	Elem r = one();
	while (e)
	{
		if (e & 1)
			r = mul(r, a);
		a = mul(a, a);
		e >>= 1;
	}
	return r;
}

GF::Elem GF::inv(Elem a) const
{
	if (is_zero(a))
		throw Error(ErrorCode::SingularMatrix, "inverse of zero in a finite field");
	return pow(a, order() - 2);
}

std::vector<GF::Elem> GF::elements() const
{
	std::vector<Elem> out;
	out.reserve(order());
	for (std::uint64_t c1 = 0; c1 < (k_ == 1 ? 1 : p_); ++c1)
		for (std::uint64_t c0 = 0; c0 < p_; ++c0)
			out.push_back({c0, c1});
	return out;
}

std::string GF::to_string(Elem a) const
{
	if (k_ == 1 || a.c1 == 0)
		return std::to_string(a.c0);
	return std::to_string(a.c0) + "+" + std::to_string(a.c1) + "x";
}

namespace fq {

int degree(FqPoly const &f) { return static_cast<int>(f.size()) - 1; }

FqPoly normalize(FqPoly f, GF const &F)
{
	while (!f.empty() && F.is_zero(f.back()))
		f.pop_back();
	return f;
}

FqPoly add(GF const &F, FqPoly const &a, FqPoly const &b)
{
	FqPoly r(std::max(a.size(), b.size()), F.zero());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i];
	for (std::size_t i = 0; i < b.size(); ++i)
		r[i] = F.add(r[i], b[i]);
	return normalize(std::move(r), F);
}

FqPoly sub(GF const &F, FqPoly const &a, FqPoly const &b)
{
	FqPoly r(std::max(a.size(), b.size()), F.zero());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i];
	for (std::size_t i = 0; i < b.size(); ++i)
		r[i] = F.sub(r[i], b[i]);
	return normalize(std::move(r), F);
}

FqPoly mul(GF const &F, FqPoly const &a, FqPoly const &b)
{
	if (a.empty() || b.empty())
		return {};
	FqPoly r(a.size() + b.size() - 1, F.zero());
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
	return normalize(std::move(r), F);
}

std::pair<FqPoly, FqPoly> divmod(GF const &F, FqPoly const &a, FqPoly const &b)
{
	if (b.empty())
		throw Error(ErrorCode::SingularMatrix, "polynomial division by zero");
	FqPoly r = normalize(a, F);
	if (r.size() < b.size())
		return {{}, r};
	FqPoly q(r.size() - b.size() + 1, F.zero());
	GF::Elem lead_inv = F.inv(b.back());
	while (r.size() >= b.size())
	{
		std::size_t shift = r.size() - b.size();
		GF::Elem c = F.mul(r.back(), lead_inv);
		q[shift] = c;
		for (std::size_t i = 0; i < b.size(); ++i)
			r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
		r = normalize(std::move(r), F);
	}
	return {normalize(std::move(q), F), r};
}

FqPoly mod(GF const &F, FqPoly const &a, FqPoly const &b) { return divmod(F, a, b).second; }

FqPoly monic(GF const &F, FqPoly const &a)
{
	if (a.empty())
		return a;
	GF::Elem li = F.inv(a.back());
	FqPoly r(a);
	for (auto &c : r)
		c = F.mul(c, li);
	return r;
}

FqPoly gcd(GF const &F, FqPoly a, FqPoly b)
{
	a = normalize(std::move(a), F);
	b = normalize(std::move(b), F);
	while (!b.empty())
	{
		FqPoly r = mod(F, a, b);
		a = std::move(b);
		b = std::move(r);
	}
	return monic(F, a);
}

FqPoly derivative(GF const &F, FqPoly const &a)
{
	if (a.size() <= 1)
		return {};
	FqPoly r(a.size() - 1);
	for (std::size_t i = 1; i < a.size(); ++i)
		r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.characteristic())), a[i]);
	return normalize(std::move(r), F);
}

FqPoly powmod(GF const &F, FqPoly const &a, std::uint64_t e, FqPoly const &m)
{
	FqPoly r = mod(F, {F.one()}, m);
	FqPoly base = mod(F, a, m);
	while (e)
	{
		if (e & 1)
			r = mod(F, mul(F, r, base), m);
		base = mod(F, mul(F, base, base), m);
		e >>= 1;
	}
	return r;
}

GF::Elem evaluate(GF const &F, FqPoly const &a, GF::Elem x)
{
	GF::Elem r = F.zero();
	for (auto it = a.rbegin(); it != a.rend(); ++it)
		r = F.add(F.mul(r, x), *it);
	return r;
}

namespace {

bool is_one(FqPoly const &f) { return f.size() == 1 && f[0] == GF::Elem{1, 0}; }

// f has only exponents divisible by p; returns g with g^p = f
FqPoly pth_root(GF const &F, FqPoly const &f)
{
	std::uint64_t const p = F.characteristic();
	// a^{1/p} = a^{q/p} in F_q
	std::uint64_t e = F.order() / p;
	FqPoly g;
	for (std::size_t i = 0; i < f.size(); i += p)
		g.push_back(F.pow(f[i], e));
	return normalize(std::move(g), F);
}

void squarefree_rec(GF const &F, FqPoly f, unsigned mult, std::vector<std::pair<FqPoly, unsigned>> &out)
{
	if (degree(f) <= 0)
		return;
	unsigned const p = static_cast<unsigned>(F.characteristic());
	FqPoly g = derivative(F, f);
	if (g.empty())
	{
		squarefree_rec(F, pth_root(F, f), mult * p, out);
		return;
	}
	FqPoly c = gcd(F, f, g);
	FqPoly w = divmod(F, f, c).first;
	unsigned i = 1;
	while (!is_one(w))
	{
		FqPoly y = gcd(F, w, c);
		FqPoly z = divmod(F, w, y).first;
		if (degree(z) > 0)
			out.emplace_back(monic(F, z), i * mult);
		++i;
		w = y;
		c = divmod(F, c, y).first;
	}
	if (degree(c) > 0)
		squarefree_rec(F, pth_root(F, monic(F, c)), mult * p, out);
}

} // namespace

std::vector<std::pair<FqPoly, unsigned>> squarefree(GF const &F, FqPoly const &f)
{
	FqPoly m = monic(F, normalize(f, F));
	if (m.empty())
		throw Error(ErrorCode::DegenerateCurve, "square-free decomposition of the zero polynomial");
	std::vector<std::pair<FqPoly, unsigned>> out;
	squarefree_rec(F, m, 1, out);
	return out;
}

std::vector<std::pair<unsigned, FqPoly>> distinct_degree(GF const &F, FqPoly const &f)
{
	std::vector<std::pair<unsigned, FqPoly>> out;
	FqPoly rest = monic(F, f);
	FqPoly x = {F.zero(), F.one()};
	FqPoly h = mod(F, x, rest);
	unsigned d = 1;
	while (degree(rest) >= 2 * static_cast<int>(d))
	{
		h = powmod(F, h, F.order(), rest);
		FqPoly g = gcd(F, rest, sub(F, h, x));
		if (!is_one(g))
		{
			out.emplace_back(d, g);
			rest = divmod(F, rest, g).first;
			h = mod(F, h, rest);
		}
		++d;
	}
	if (degree(rest) > 0)
		out.emplace_back(static_cast<unsigned>(degree(rest)), rest);
	return out;
}

std::vector<std::pair<unsigned, unsigned>> factor_pattern(GF const &F, FqPoly const &f)
{
	std::vector<std::pair<unsigned, unsigned>> out;
	for (auto const &[g, e] : squarefree(F, f))
		for (auto const &[d, h] : distinct_degree(F, g))
			for (int k = 0; k < degree(h) / static_cast<int>(d); ++k)
				out.emplace_back(d, e);
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<GF::Elem> roots(GF const &F, FqPoly const &f)
{
	std::vector<GF::Elem> out;
	for (auto const &x : F.elements())
		if (F.is_zero(evaluate(F, f, x)))
			out.push_back(x);
	return out;
}

} // namespace fq

FqPoly reduce_mod_p(GF const &F, std::vector<Rational> const &coeffs_high_first)
{
	FqPoly r;
	for (auto it = coeffs_high_first.rbegin(); it != coeffs_high_first.rend(); ++it)
		r.push_back(F.from_rational(*it));
	return fq::normalize(std::move(r), F);
}

} // namespace arithchar
