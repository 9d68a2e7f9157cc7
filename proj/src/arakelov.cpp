#include "arithchar/arakelov.hpp"
#include "arithchar/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace arithchar {

namespace {

bool squarefree_int(std::int64_t d)
{
	std::int64_t n = d < 0 ? -d : d;
	for (std::int64_t k = 2; k * k <= n; ++k)
		if (n % (k * k) == 0)
			return false;
	return true;
}

std::string strip_spaces(std::string const &s)
{
	std::string out;
	for (char ch : s)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			out += ch;
	return out;
}

Integer lcm(Integer const &a, Integer const &b)
{
	Integer r;
	mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return r;
}

Integer gcd(Integer const &a, Integer const &b)
{
	Integer r;
	mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return r;
}

// floor division remainder in [0, m)
Integer mod_pos(Integer const &a, Integer const &m)
{
	Integer r;
	mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
	return r;
}

} // namespace

NumberField NumberField::quadratic(std::int64_t d)
{
	if (d == 0 || d == 1 || !squarefree_int(d))
		throw Error(ErrorCode::UnsupportedBase,
		            "quadratic field needs a squarefree d other than 0 and 1, got " + std::to_string(d));
	NumberField K;
	K.d_ = d;
	return K;
}

NumberField NumberField::parse(std::string const &text)
{
	std::string s = strip_spaces(text);
	if (s == "Q")
		return rational();
	if (s == "Q(i)")
		return quadratic(-1);
	std::string inner;
	if (s.rfind("Q(sqrt(", 0) == 0 && s.size() > 9 && s.substr(s.size() - 2) == "))")
		inner = s.substr(7, s.size() - 9);
	else
		throw Error(ErrorCode::UnsupportedBase, "unknown field '" + text + "' (expected Q, Q(i) or Q(sqrt(d)))");
	try
	{
		std::size_t used = 0;
		long long d = std::stoll(inner, &used);
		if (used != inner.size())
			throw Error(ErrorCode::UnsupportedBase, "bad field parameter in '" + text + "'");
		return quadratic(d);
	}
	catch (std::logic_error const &)
	{
		throw Error(ErrorCode::UnsupportedBase, "bad field parameter in '" + text + "'");
	}
}

Integer NumberField::omega_s() const
{
	if (d_ == 0)
		return 0;
	return (d_ % 4 + 4) % 4 == 1 ? 1 : 0;
}

Integer NumberField::omega_c() const
{
	if (d_ == 0)
		return 0;
	return omega_s() == 1 ? Integer((d_ - 1) / 4) : Integer(static_cast<long>(d_));
}

std::vector<Rational> NumberField::omega_min_poly() const
{
	if (d_ == 0)
		return {1, 0};
	return {1, Rational(-omega_s()), Rational(-omega_c())};
}

Integer NumberField::discriminant() const
{
	if (d_ == 0)
		return 1;
	return omega_s() == 1 ? Integer(static_cast<long>(d_)) : Integer(4 * d_);
}

std::string NumberField::name() const
{
	if (d_ == 0)
		return "Q";
	if (d_ == -1)
		return "Q(i)";
	return "Q(sqrt(" + std::to_string(d_) + "))";
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(NumberField const &K, Rational const &a_, Rational const &b_)
    : d(K.d()), a(a_), b(b_)
{
	if (d == 0 && b != 0)
		throw Error(ErrorCode::UnsupportedBase, "Q has no w coordinate");
}

FieldElement FieldElement::in(NumberField const &K) const
{
	if (d != 0 && d != K.d())
		throw Error(ErrorCode::UnsupportedBase, "element does not belong to " + K.name());
	FieldElement r = *this;
	r.d = K.d();
	return r;
}

NumberField FieldElement::field() const
{
	return d == 0 ? NumberField::rational() : NumberField::quadratic(d);
}

namespace {

std::int64_t common_field(FieldElement const &x, FieldElement const &y)
{
	if (x.d != 0 && y.d != 0 && x.d != y.d)
		throw Error(ErrorCode::UnsupportedBase, "elements of different fields");
	return x.d != 0 ? x.d : y.d;
}

struct OmegaData
{
	Rational s, c;
};

OmegaData omega_data(std::int64_t d)
{
	if (d == 0)
		return {0, 0};
	NumberField K = NumberField::quadratic(d);
	return {Rational(K.omega_s()), Rational(K.omega_c())};
}

} // namespace

FieldElement FieldElement::conj() const
{
	auto w = omega_data(d);
	FieldElement r = *this;
	r.a = a + b * w.s;
	r.b = -b;
	return r;
}

Rational FieldElement::norm() const
{
	if (d == 0)
		return a;
	auto w = omega_data(d);
	return a * a + a * b * w.s - b * b * w.c;
}

Rational FieldElement::trace() const
{
	if (d == 0)
		return a;
	auto w = omega_data(d);
	return 2 * a + b * w.s;
}

FieldElement FieldElement::inverse() const
{
	if (is_zero())
		throw Error(ErrorCode::SingularMatrix, "inverse of zero field element");
	if (b == 0)
	{
		FieldElement r = *this;
		r.a = 1 / a;
		return r;
	}
	FieldElement c = conj();
	Rational n = norm();
	c.a /= n;
	c.b /= n;
	return c;
}

FieldElement &FieldElement::operator+=(FieldElement const &o)
{
	d = common_field(*this, o);
	a += o.a;
	b += o.b;
	return *this;
}

FieldElement &FieldElement::operator-=(FieldElement const &o)
{
	d = common_field(*this, o);
	a -= o.a;
	b -= o.b;
	return *this;
}

FieldElement &FieldElement::operator*=(FieldElement const &o)
{
	d = common_field(*this, o);
	auto w = omega_data(d);
	Rational bb = b * o.b;
	Rational na = a * o.a + bb * w.c;
	Rational nb = a * o.b + b * o.a + bb * w.s;
	a = na;
	b = nb;
	return *this;
}

FieldElement &FieldElement::operator/=(FieldElement const &o)
{
	d = common_field(*this, o);
	FieldElement inv = o.inverse();
	inv.d = d;
	return *this *= inv;
}

FieldElement FieldElement::operator-() const
{
	FieldElement r = *this;
	r.a = -a;
	r.b = -b;
	return r;
}

bool operator==(FieldElement const &x, FieldElement const &y)
{
	return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
}

std::string FieldElement::to_string() const
{
	if (b == 0)
		return arithchar::to_string(a);
	std::string wpart;
	Rational mb = arithchar::abs(b);
	wpart = mb == 1 ? "w" : arithchar::to_string(mb) + "*w";
	if (a == 0)
		return (b < 0 ? "-" : "") + wpart;
	return arithchar::to_string(a) + (b < 0 ? " - " : " + ") + wpart;
}

FieldElement parse_field_element(NumberField const &K, std::string const &text)
{
	std::string s = strip_spaces(text);
	if (s.empty())
		throw Error(ErrorCode::ParseError, "empty field element");
	Rational a = 0, b = 0;
	std::size_t i = 0;
	while (i < s.size())
	{
		std::size_t j = i + 1;
		while (j < s.size() && s[j] != '+' && s[j] != '-')
			++j;
		std::string term = s.substr(i, j - i);
		bool neg = false;
		if (!term.empty() && (term[0] == '+' || term[0] == '-'))
		{
			neg = term[0] == '-';
			term = term.substr(1);
		}
		if (term.empty())
			throw Error(ErrorCode::ParseError, "bad field element '" + text + "'");
		Rational coef;
		bool is_w = false;
		if (term == "w")
		{
			coef = 1;
			is_w = true;
		}
		else if (term.size() > 2 && term.substr(term.size() - 2) == "*w")
		{
			coef = parse_rational(term.substr(0, term.size() - 2));
			is_w = true;
		}
		else
			coef = parse_rational(term);
		if (neg)
			coef = -coef;
		(is_w ? b : a) += coef;
		i = j;
	}
	return FieldElement(K, a, b);
}

// ---------------------------------------------------------------------------

namespace {

using IntRow = std::vector<Integer>;

Integer abs(Integer const &z) { return z < 0 ? Integer(-z) : z; }

// Hermite normal form of the lattice spanned by rows in Z^n (n = 1 or 2),
// lower triangular with positive diagonal and reduced off-diagonal entries.
Matrix<Integer> hnf_rows(std::vector<IntRow> rows, std::size_t n)
{
	Matrix<Integer> h(n, n);
	for (std::size_t col = n; col-- > 0;)
	{
		// gcd-reduce column col among the remaining rows
		while (true)
		{
			std::size_t best = rows.size();
			for (std::size_t r = 0; r < rows.size(); ++r)
				if (rows[r][col] != 0 &&
				    (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])))
					best = r;
			if (best == rows.size())
				throw Error(ErrorCode::ZeroIdeal, "generators do not span a full-rank lattice");
			bool done = true;
			for (std::size_t r = 0; r < rows.size(); ++r)
			{
				if (r == best || rows[r][col] == 0)
					continue;
				Integer q;
				mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[best][col].get_mpz_t());
				for (std::size_t k = 0; k < n; ++k)
					rows[r][k] -= q * rows[best][k];
				if (rows[r][col] != 0)
					done = false;
			}
			if (done)
			{
				IntRow piv = rows[best];
				rows.erase(rows.begin() + static_cast<long>(best));
				if (piv[col] < 0)
					for (auto &x : piv)
						x = -x;
				for (std::size_t k = 0; k < n; ++k)
					h(col, k) = piv[k];
				break;
			}
		}
	}
	// reduce entries below the diagonal
	for (std::size_t r = 1; r < n; ++r)
		for (std::size_t c = 0; c < r; ++c)
		{
			Integer q;
			mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(c, c).get_mpz_t());
			for (std::size_t k = 0; k < n; ++k)
				h(r, k) -= q * h(c, k);
		}
	return h;
}

} // namespace

FractionalIdeal FractionalIdeal::generated_by(NumberField const &K, std::vector<FieldElement> const &gens)
{
	std::size_t const n = static_cast<std::size_t>(K.degree());
	std::vector<FieldElement> zgens;
	FieldElement w = K.d() == 0 ? FieldElement(0) : FieldElement(K, 0, 1);
	for (auto const &g : gens)
	{
		if (g.d != 0 && g.d != K.d())
			throw Error(ErrorCode::UnsupportedBase, "generator from another field");
		if (g.is_zero())
			continue;
		zgens.push_back(g);
		if (n == 2)
			zgens.push_back(g * w);
	}
	if (zgens.empty())
		throw Error(ErrorCode::ZeroIdeal, "the zero ideal is not a fractional ideal");
	Integer den = 1;
	for (auto const &g : zgens)
		den = lcm(den, lcm(g.a.get_den(), g.b.get_den()));
	std::vector<IntRow> rows;
	for (auto const &g : zgens)
	{
		Rational x = g.a * den, y = g.b * den;
		if (n == 1)
			rows.push_back({x.get_num()});
		else
			rows.push_back({x.get_num(), y.get_num()});
	}
	Matrix<Integer> h = hnf_rows(rows, n);
	Integer g = den;
	for (auto const &x : h.data())
		g = gcd(g, x);
	if (g != 1)
	{
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				h(i, j) /= g;
		den /= g;
	}
	return FractionalIdeal(K, std::move(h), std::move(den));
}

FractionalIdeal FractionalIdeal::from_hnf(NumberField const &K, Matrix<Integer> const &hnf, Integer const &den)
{
	std::size_t const n = static_cast<std::size_t>(K.degree());
	if (hnf.rows() != n || hnf.cols() != n)
		throw Error(ErrorCode::DimensionMismatch, "HNF must be " + std::to_string(n) + "x" + std::to_string(n));
	if (den <= 0)
		throw Error(ErrorCode::ParseError, "ideal denominator must be positive");
	std::vector<FieldElement> gens;
	for (std::size_t i = 0; i < n; ++i)
	{
		Rational x(hnf(i, 0), den), y(n == 2 ? hnf(i, 1) : Integer(0), den);
		x.canonicalize();
		y.canonicalize();
		gens.push_back(n == 2 ? FieldElement(K, x, y) : FieldElement(x));
	}
	FractionalIdeal I = generated_by(K, gens);
	// the rows must already span an O_K-module
	std::vector<IntRow> rows;
	for (std::size_t i = 0; i < n; ++i)
		rows.push_back(hnf.row(i));
	Matrix<Integer> h = hnf_rows(rows, n);
	Integer g = den;
	for (auto const &x : h.data())
		g = gcd(g, x);
	Integer d2 = den / g;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			h(i, j) /= g;
	if (!(h == I.hnf_) || d2 != I.den_)
		throw Error(ErrorCode::MembershipFailure, "lattice is not closed under multiplication by w");
	return I;
}

std::vector<FieldElement> FractionalIdeal::basis() const
{
	std::size_t const n = static_cast<std::size_t>(K_.degree());
	std::vector<FieldElement> out;
	for (std::size_t i = 0; i < n; ++i)
	{
		Rational x(hnf_(i, 0), den_);
		x.canonicalize();
		if (n == 1)
		{
			out.emplace_back(x);
			continue;
		}
		Rational y(hnf_(i, 1), den_);
		y.canonicalize();
		out.emplace_back(K_, x, y);
	}
	return out;
}

Rational FractionalIdeal::norm() const
{
	Integer num = 1, den = 1;
	for (std::size_t i = 0; i < hnf_.rows(); ++i)
	{
		num *= hnf_(i, i);
		den *= den_;
	}
	Rational r(num, den);
	r.canonicalize();
	return r;
}

std::optional<std::vector<Integer>> FractionalIdeal::coordinates(FieldElement const &x) const
{
	if (x.d != 0 && x.d != K_.d())
		throw Error(ErrorCode::UnsupportedBase, "element from another field");
	Rational X = x.a * den_, Y = x.b * den_;
	if (!is_integer(X) || !is_integer(Y))
		return std::nullopt;
	if (K_.degree() == 1)
	{
		if (!mpz_divisible_p(X.get_num().get_mpz_t(), hnf_(0, 0).get_mpz_t()))
			return std::nullopt;
		return std::vector<Integer>{Integer(X.get_num() / hnf_(0, 0))};
	}
	Integer y = Y.get_num();
	if (!mpz_divisible_p(y.get_mpz_t(), hnf_(1, 1).get_mpz_t()))
		return std::nullopt;
	Integer t = y / hnf_(1, 1);
	Integer rest = X.get_num() - t * hnf_(1, 0);
	if (!mpz_divisible_p(rest.get_mpz_t(), hnf_(0, 0).get_mpz_t()))
		return std::nullopt;
	return std::vector<Integer>{Integer(rest / hnf_(0, 0)), t};
}

bool FractionalIdeal::contains(FieldElement const &x) const { return coordinates(x).has_value(); }

FractionalIdeal FractionalIdeal::operator*(FractionalIdeal const &o) const
{
	if (!(o.K_ == K_))
		throw Error(ErrorCode::UnsupportedBase, "ideals of different fields");
	std::vector<FieldElement> gens;
	for (auto const &x : basis())
		for (auto const &y : o.basis())
			gens.push_back(x * y);
	return generated_by(K_, gens);
}

FractionalIdeal FractionalIdeal::pow(unsigned k) const
{
	FractionalIdeal r = unit(K_);
	for (unsigned i = 0; i < k; ++i)
		r = r * *this;
	return r;
}

std::string FractionalIdeal::to_string() const
{
	std::string s = "[";
	for (std::size_t i = 0; i < hnf_.rows(); ++i)
	{
		s += i ? ",[" : "[";
		for (std::size_t j = 0; j < hnf_.cols(); ++j)
			s += (j ? "," : "") + hnf_(i, j).get_str();
		s += "]";
	}
	s += "]";
	if (den_ != 1)
		s += "/" + den_.get_str();
	return s;
}

Rational ideal_norm(NumberField const &K, FractionalIdeal const &I)
{
	if (!(I.field() == K))
		throw Error(ErrorCode::UnsupportedBase, "ideal belongs to " + I.field().name());
	return I.norm();
}

// ---------------------------------------------------------------------------

namespace {

// x = u + v sqrt(d) with exact u, v
std::pair<Rational, Rational> sqrt_coords(NumberField const &K, FieldElement const &x)
{
	if (K.d() == 0)
		return {x.a, 0};
	if (K.omega_s() == 1)
		return {x.a + x.b / 2, x.b / 2};
	return {x.a, x.b};
}

} // namespace

double log_abs(Rational const &q)
{
	if (q == 0)
		throw Error(ErrorCode::SingularMatrix, "log of zero");
	long en = 0, ed = 0;
	double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
	double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
	return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

std::vector<std::complex<double>> minkowski_embed(NumberField const &K, FieldElement const &x)
{
	if (x.d != 0 && x.d != K.d())
		throw Error(ErrorCode::UnsupportedBase, "element from another field");
	auto [u, v] = sqrt_coords(K, x);
	double const r = std::sqrt(std::fabs(static_cast<double>(K.d())));
	double const ud = u.get_d(), vd = v.get_d();
	if (K.d() == 0)
		return {ud};
	if (K.d() > 0)
		return {ud + vd * r, ud - vd * r};
	return {std::complex<double>(ud, vd * r)};
}

std::vector<double> log_abs_embeddings(NumberField const &K, FieldElement const &x)
{
	if (x.is_zero())
		throw Error(ErrorCode::SingularMatrix, "log|sigma(0)| is undefined");
	auto [u, v] = sqrt_coords(K, x);
	if (K.d() == 0)
		return {log_abs(u)};
	if (K.d() < 0)
		return {0.5 * log_abs(Rational(u * u - v * v * K.d()))};
	// the embedding where u and v sqrt d have the same sign has no cancellation
	double const r = std::sqrt(static_cast<double>(K.d()));
	double big = std::log(std::fabs(u.get_d()) + std::fabs(v.get_d()) * r);
	double small = log_abs(Rational(u * u - v * v * K.d())) - big;
	bool first_big = (u >= 0) == (v >= 0);
	return first_big ? std::vector<double>{big, small} : std::vector<double>{small, big};
}

PlaceFactorization factor_prime(NumberField const &K, std::uint64_t p)
{
	GF F(p);
	PlaceFactorization out;
	out.prime = p;
	if (K.degree() == 1)
	{
		out.splitting = {{1, 1}};
		return out;
	}
	out.splitting = fq::factor_pattern(F, reduce_mod_p(F, K.omega_min_poly()));
	return out;
}

std::vector<PrimeIdeal> prime_ideals_above(NumberField const &K, std::uint64_t p)
{
	GF F(p);
	std::vector<PrimeIdeal> out;
	Integer pz(static_cast<unsigned long>(p));
	if (K.degree() == 1)
	{
		out.push_back({FractionalIdeal::generated_by(K, {FieldElement(Rational(pz))}), p, 1, 1, F, F.zero()});
		return out;
	}
	auto m = reduce_mod_p(F, K.omega_min_poly());
	auto rts = fq::roots(F, m);
	if (rts.empty())
	{
		GF R(p, mod_pos(K.omega_s(), pz).get_ui(), mod_pos(K.omega_c(), pz).get_ui());
		out.push_back({FractionalIdeal::generated_by(K, {FieldElement(Rational(pz))}), p, 2, 1, R, R.gen()});
		return out;
	}
	unsigned e = rts.size() == 1 ? 2 : 1;
	for (auto const &r : rts)
	{
		FieldElement gen(K, -Rational(static_cast<unsigned long>(r.c0)), 1);
		auto I = FractionalIdeal::generated_by(K, {FieldElement(Rational(pz)), gen});
		out.push_back({I, p, 1, e, F, r});
	}
	return out;
}

GF::Elem reduce(PrimeIdeal const &P, FieldElement const &x)
{
	GF const &F = P.residue;
	return F.add(F.from_rational(x.a), F.mul(F.from_rational(x.b), P.omega_image));
}

namespace {

long vp(Integer n, std::uint64_t p)
{
	long k = 0;
	Integer pz(static_cast<unsigned long>(p));
	n = abs(n);
	while (n != 0 && mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t()))
	{
		n /= pz;
		++k;
	}
	return k;
}

} // namespace

long valuation(PrimeIdeal const &P, FieldElement const &x)
{
	if (x.is_zero())
		throw Error(ErrorCode::SingularMatrix, "valuation of zero");
	Integer m = lcm(x.a.get_den(), x.b.get_den());
	FieldElement y = x * FieldElement(Rational(m));
	long k = 0;
	FractionalIdeal power = P.ideal;
	while (power.contains(y))
	{
		++k;
		power = power * P.ideal;
	}
	return k - static_cast<long>(P.e) * vp(m, P.p);
}

std::vector<std::uint64_t> prime_divisors(Integer n)
{
	n = abs(n);
	if (n == 0)
		throw Error(ErrorCode::SingularMatrix, "prime divisors of zero");
	std::vector<std::uint64_t> out;
	for (unsigned long q = 2; Integer(q) * q <= n; ++q)
	{
		if (mpz_divisible_ui_p(n.get_mpz_t(), q))
		{
			out.push_back(q);
			while (mpz_divisible_ui_p(n.get_mpz_t(), q))
				n /= q;
		}
	}
	if (n > 1)
	{
		if (!n.fits_ulong_p())
			throw Error(ErrorCode::NonIntegral, "prime factor too large");
		out.push_back(n.get_ui());
	}
	return out;
}

// ---------------------------------------------------------------------------

void validate(MetrizedLineBundle const &L)
{
	int places = L.ideal.field().places();
	if (static_cast<int>(L.rho.size()) != places)
		throw Error(ErrorCode::DimensionMismatch,
		            "need " + std::to_string(places) + " metric factors, got " + std::to_string(L.rho.size()));
	for (double r : L.rho)
		if (!(r > 0) || !std::isfinite(r))
			throw Error(ErrorCode::SingularForm, "metric factors must be positive and finite");
}

MetrizedLineBundle standard_bundle(FractionalIdeal const &I)
{
	return {I, std::vector<double>(static_cast<std::size_t>(I.field().places()), 1.0)};
}

MetrizedLineBundle principal_bundle(NumberField const &K, FieldElement const &x)
{
	MetrizedLineBundle L{FractionalIdeal::generated_by(K, {x}), {}};
	for (double l : log_abs_embeddings(K, x.in(K)))
		L.rho.push_back(std::exp(-l));
	return L;
}

double arithmetic_degree(NumberField const &K, MetrizedLineBundle const &L, FieldElement const &section)
{
	FieldElement s = section.in(K);
	validate(L);
	if (!(L.ideal.field() == K))
		throw Error(ErrorCode::UnsupportedBase, "bundle lives over " + L.ideal.field().name());
	double deg = log_abs(s.norm()) - log_abs(L.ideal.norm());
	auto logs = log_abs_embeddings(K, s);
	for (int i = 0; i < K.places(); ++i)
		deg -= K.epsilon(i) * (std::log(L.rho[static_cast<std::size_t>(i)]) + logs[static_cast<std::size_t>(i)]);
	return deg;
}

double arithmetic_degree(NumberField const &K, MetrizedLineBundle const &L)
{
	return arithmetic_degree(K, L, L.ideal.basis().front());
}

MetrizedLineBundle tensor(MetrizedLineBundle const &a, MetrizedLineBundle const &b)
{
	validate(a);
	validate(b);
	MetrizedLineBundle r{a.ideal * b.ideal, a.rho};
	for (std::size_t i = 0; i < r.rho.size(); ++i)
		r.rho[i] *= b.rho[i];
	return r;
}

double product_formula_residual(NumberField const &K, FieldElement const &elem)
{
	FieldElement x = elem.in(K);
	Rational n = x.norm();
	std::vector<std::uint64_t> primes = prime_divisors(n.get_num());
	for (auto p : prime_divisors(n.get_den()))
		primes.push_back(p);
	// x can have opposite valuations at two primes above p, hiding p from N(x)
	for (auto const &z : {x.a.get_den(), x.b.get_den()})
		if (z != 1)
			for (auto p : prime_divisors(z))
				primes.push_back(p);
	std::sort(primes.begin(), primes.end());
	primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
	double finite = 0;
	for (auto p : primes)
		for (auto const &P : prime_ideals_above(K, p))
			finite += static_cast<double>(valuation(P, x)) * static_cast<double>(P.f) *
			          std::log(static_cast<double>(p));
	double arch = 0;
	auto logs = log_abs_embeddings(K, x);
	for (int i = 0; i < K.places(); ++i)
		arch += K.epsilon(i) * logs[static_cast<std::size_t>(i)];
	return finite - arch;
}

} // namespace arithchar
