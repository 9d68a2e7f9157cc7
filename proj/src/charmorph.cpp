#include "arithchar/charmorph.hpp"
#include "arithchar/error.hpp"

#include <sstream>

namespace arithchar {

Polynomial Polynomial::constant(std::size_t nvars, Rational const &c)
{
	Polynomial p(nvars);
	p.add_term(Exponent(nvars, 0), c);
	return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i)
{
	Exponent e(nvars, 0);
	e.at(i) = 1;
	return monomial(e);
}

Polynomial Polynomial::monomial(Exponent const &e, Rational const &c)
{
	Polynomial p(e.size());
	p.add_term(e, c);
	return p;
}

int Polynomial::degree() const
{
	int d = -1;
	for (auto const &[e, c] : terms_)
	{
		int s = 0;
		for (auto x : e)
			s += static_cast<int>(x);
		d = std::max(d, s);
	}
	return d;
}

bool Polynomial::is_homogeneous() const
{
	int d = degree();
	for (auto const &[e, c] : terms_)
	{
		int s = 0;
		for (auto x : e)
			s += static_cast<int>(x);
		if (s != d)
			return false;
	}
	return true;
}

void Polynomial::add_term(Exponent const &e, Rational const &c)
{
	if (e.size() != nvars_)
		throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
	if (c == 0)
		return;
	auto [it, fresh] = terms_.try_emplace(e, c);
	if (!fresh)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void Polynomial::require_same(Polynomial const &o) const
{
	if (o.nvars_ != nvars_)
		throw Error(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
}

Polynomial &Polynomial::operator+=(Polynomial const &o)
{
	require_same(o);
	for (auto const &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

Polynomial &Polynomial::operator-=(Polynomial const &o)
{
	require_same(o);
	for (auto const &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

Polynomial &Polynomial::operator*=(Rational const &s)
{
	if (s == 0)
	{
		terms_.clear();
		return *this;
	}
	for (auto &[e, c] : terms_)
		c *= s;
	return *this;
}

Polynomial operator*(Polynomial const &a, Polynomial const &b)
{
	a.require_same(b);
	Polynomial r(a.nvars_);
	for (auto const &[ea, ca] : a.terms_)
		for (auto const &[eb, cb] : b.terms_)
		{
			Exponent e(ea);
			for (std::size_t i = 0; i < e.size(); ++i)
				e[i] += eb[i];
			r.add_term(e, ca * cb);
		}
	return r;
}

Polynomial pow(Polynomial const &p, unsigned e)
{
	Polynomial r = Polynomial::constant(p.nvars(), 1);
	for (unsigned i = 0; i < e; ++i)
		r = r * p;
	return r;
}

Rational Polynomial::evaluate(RatVec const &point) const
{
	if (point.size() != nvars_)
		throw Error(ErrorCode::DimensionMismatch, "evaluation point has the wrong length");
	Rational s = 0;
	for (auto const &[e, c] : terms_)
	{
		Rational m = c;
		for (std::size_t i = 0; i < e.size(); ++i)
			for (unsigned k = 0; k < e[i]; ++k)
				m *= point[i];
		s += m;
	}
	return s;
}

Polynomial Polynomial::substitute(Matrix<Rational> const &m) const
{
	if (m.rows() != nvars_ || m.cols() != nvars_)
		throw Error(ErrorCode::DimensionMismatch, "substitution matrix has the wrong shape");
	std::vector<Polynomial> lin;
	for (std::size_t i = 0; i < nvars_; ++i)
	{
		Polynomial l(nvars_);
		for (std::size_t j = 0; j < nvars_; ++j)
			l += m(i, j) * variable(nvars_, j);
		lin.push_back(std::move(l));
	}
	// cache powers of each linear form; degrees stay small
	std::vector<std::vector<Polynomial>> powers(nvars_);
	auto power = [&](std::size_t i, unsigned k) -> Polynomial const & {
		auto &v = powers[i];
		if (v.empty())
			v.push_back(constant(nvars_, 1));
		while (v.size() <= k)
			v.push_back(v.back() * lin[i]);
		return v[k];
	};
	Polynomial r(nvars_);
	for (auto const &[e, c] : terms_)
	{
		Polynomial t = constant(nvars_, c);
		for (std::size_t i = 0; i < nvars_; ++i)
			if (e[i] > 0)
				t = t * power(i, e[i]);
		r += t;
	}
	return r;
}

std::string Polynomial::to_string() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	// highest degree terms first reads more naturally
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		auto const &[e, c] = *it;
		bool unit = true;
		for (auto x : e)
			unit = unit && x == 0;
		if (!first)
			os << (c < 0 ? " - " : " + ");
		else if (c < 0)
			os << "-";
		first = false;
		Rational a = arithchar::abs(c);
		bool wrote = false;
		if (a != 1 || unit)
		{
			os << arithchar::to_string(a);
			wrote = true;
		}
		for (std::size_t i = 0; i < e.size(); ++i)
		{
			if (e[i] == 0)
				continue;
			if (wrote)
				os << "*";
			os << "t" << i + 1;
			if (e[i] > 1)
				os << "^" << e[i];
			wrote = true;
		}
	}
	return os.str();
}

Polynomial elementary_symmetric(std::size_t n, std::size_t k)
{
	Polynomial p(n);
	if (k > n)
		return p;
	// walk the k-subsets in lexicographic order
	std::vector<std::size_t> idx(k);
	for (std::size_t i = 0; i < k; ++i)
		idx[i] = i;
	while (true)
	{
		Exponent e(n, 0);
		for (auto i : idx)
			e[i] = 1;
		p.add_term(e, 1);
		std::size_t pos = k;
		while (pos > 0 && idx[pos - 1] == n - k + pos - 1)
			--pos;
		if (pos == 0)
			break;
		++idx[pos - 1];
		for (std::size_t j = pos; j < k; ++j)
			idx[j] = idx[j - 1] + 1;
	}
	return p;
}

namespace {

// e_k(t_1^2, ..., t_n^2)
Polynomial elementary_of_squares(std::size_t n, std::size_t k)
{
	Polynomial e = elementary_symmetric(n, k);
	Polynomial r(n);
	for (auto const &[ex, c] : e.terms())
	{
		Exponent sq(ex);
		for (auto &x : sq)
			x *= 2;
		r.add_term(sq, c);
	}
	return r;
}

} // namespace

std::size_t torus_dimension(CartanType t)
{
	require_supported(t);
	switch (t.family)
	{
	case Family::A: return static_cast<std::size_t>(t.rank) + 1;
	case Family::G: return 3;
	default: return static_cast<std::size_t>(t.rank);
	}
}

std::vector<Polynomial> gl_invariants(std::size_t n)
{
	std::vector<Polynomial> out;
	for (std::size_t k = 1; k <= n; ++k)
		out.push_back(elementary_symmetric(n, k));
	return out;
}

std::vector<Polynomial> fundamental_invariants(CartanType t)
{
	require_supported(t);
	std::size_t const n = torus_dimension(t);
	std::vector<Polynomial> out;
	switch (t.family)
	{
	case Family::A: return gl_invariants(n);
	case Family::B:
	case Family::C:
		for (std::size_t k = 1; k <= n; ++k)
			out.push_back(elementary_of_squares(n, k));
		return out;
	case Family::D:
		for (std::size_t k = 1; k + 1 <= n; ++k)
			out.push_back(elementary_of_squares(n, k));
		out.push_back(elementary_symmetric(n, n));
		return out;
	case Family::G:
	{
		// u_i = 3 t_i - (t_1 + t_2 + t_3) is 3x the projection to the root
		// plane; both invariants are scaled to have integer coefficients
		Polynomial s = elementary_symmetric(3, 1);
		std::vector<Polynomial> u;
		for (std::size_t i = 0; i < 3; ++i)
			u.push_back(Rational(3) * Polynomial::variable(3, i) - s);
		Polynomial p2 = elementary_symmetric(3, 1) * elementary_symmetric(3, 1) -
		                Rational(3) * elementary_symmetric(3, 2);
		Polynomial prod = u[0] * u[1] * u[2];
		out.push_back(p2);
		out.push_back(prod * prod);
		return out;
	}
	}
	return out;
}

namespace {

CharPoint evaluate_all(std::vector<Polynomial> const &inv, RatVec const &point)
{
	CharPoint c;
	for (auto const &p : inv)
		c.values.push_back(p.evaluate(point));
	return c;
}

} // namespace

CharPoint chi_torus(CartanType t, RatVec const &point)
{
	if (point.size() != torus_dimension(t))
		throw Error(ErrorCode::DimensionMismatch,
		            "torus point for " + to_string(t) + " needs " +
		                std::to_string(torus_dimension(t)) + " coordinates");
	return evaluate_all(fundamental_invariants(t), point);
}

CharPoint chi_torus_gl(RatVec const &point)
{
	return evaluate_all(gl_invariants(point.size()), point);
}

CharPoint chi_gl(Matrix<Rational> const &a)
{
	auto poly = char_poly(a);
	CharPoint c;
	for (std::size_t k = 1; k < poly.size(); ++k)
		c.values.push_back(k % 2 ? Rational(-poly[k]) : poly[k]);
	return c;
}

Polynomial reynolds_symmetrize(CartanType t, Exponent const &e)
{
	RootSystem rs(t);
	if (e.size() != rs.ambient_dim())
		throw Error(ErrorCode::DimensionMismatch, "exponent length differs from the torus dimension");
	Polynomial m = Polynomial::monomial(e);
	auto w = rs.weyl_group();
	Polynomial sum(e.size());
	for (auto const &g : w)
		sum += m.substitute(g.ambient);
	return Rational(1, static_cast<unsigned long>(w.size())) * sum;
}

bool is_weyl_invariant(CartanType t, Polynomial const &p)
{
	RootSystem rs(t);
	if (p.nvars() != rs.ambient_dim())
		throw Error(ErrorCode::DimensionMismatch, "polynomial variable count differs from the torus dimension");
	// the simple reflections generate W
	for (auto const &g : rs.weyl_group())
		if (g.word.size() == 1 && !(p.substitute(g.ambient) == p))
			return false;
	return true;
}

RatVec power_sums(CharPoint const &elementary)
{
	auto const &e = elementary.values;
	std::size_t const n = e.size();
	RatVec p(n);
	// p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}
	for (std::size_t k = 1; k <= n; ++k)
	{
		Rational s = (k % 2 ? 1 : -1) * Rational(static_cast<long>(k)) * e[k - 1];
		for (std::size_t i = 1; i < k; ++i)
			s += (i % 2 ? 1 : -1) * e[i - 1] * p[k - i - 1];
		p[k - 1] = s;
	}
	return p;
}

CharPoint elementary_from_power_sums(RatVec const &p)
{
	std::size_t const n = p.size();
	RatVec e(n);
	// k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i, e_0 = 1
	for (std::size_t k = 1; k <= n; ++k)
	{
		Rational s = 0;
		for (std::size_t i = 1; i <= k; ++i)
		{
			Rational ek = k == i ? Rational(1) : e[k - i - 1];
			s += (i % 2 ? 1 : -1) * ek * p[i - 1];
		}
		e[k - 1] = s / static_cast<long>(k);
	}
	return {e};
}

} // namespace arithchar
