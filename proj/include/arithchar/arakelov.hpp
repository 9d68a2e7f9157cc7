#pragma once

#include "arithchar/finite_field.hpp"
#include "arithchar/matrix.hpp"
#include "arithchar/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace arithchar {

/// Q (d = 0) or Q(sqrt d) for squarefree d != 0, 1.
///
/// The integral basis is {1, w} with w = (1 + sqrt d)/2 when d = 1 mod 4 and
/// w = sqrt d otherwise.
class NumberField
{
  public:
	NumberField() = default;
	static NumberField rational() { return NumberField(); }
	/// Throws Error(UnsupportedBase) unless d is squarefree and not 0 or 1.
	static NumberField quadratic(std::int64_t d);
	/// "Q", "Q(i)", "Q(sqrt(-5))", "Q(sqrt(2))".
	static NumberField parse(std::string const &text);

	std::int64_t d() const { return d_; }
	int degree() const { return d_ == 0 ? 1 : 2; }
	int r1() const { return d_ > 0 ? 2 : d_ == 0 ? 1 : 0; }
	int r2() const { return d_ < 0 ? 1 : 0; }
	int places() const { return r1() + r2(); }
	bool place_is_real(int i) const { return i < r1(); }
	/// 1 for real places, 2 for complex ones.
	int epsilon(int i) const { return place_is_real(i) ? 1 : 2; }

	/// w^2 = s w + c.
	Integer omega_s() const;
	Integer omega_c() const;
	/// Minimal polynomial of w, highest degree first (x for Q).
	std::vector<Rational> omega_min_poly() const;
	/// Field discriminant: d or 4d (1 for Q).
	Integer discriminant() const;

	std::string name() const;

	friend bool operator==(NumberField const &, NumberField const &) = default;

  private:
	std::int64_t d_ = 0;
};

/// a + b w. A value with d = 0 is rational and combines with any field.
struct FieldElement
{
	std::int64_t d = 0;
	Rational a = 0;
	Rational b = 0;

	FieldElement() = default;
	FieldElement(int v) : a(v) {}
	FieldElement(long v) : a(v) {}
	FieldElement(Rational const &v) : a(v) {}
	FieldElement(NumberField const &K, Rational const &a_, Rational const &b_);

	bool is_zero() const { return a == 0 && b == 0; }
	bool is_rational() const { return b == 0; }
	/// In O_K: both coordinates integral.
	bool is_integral() const { return is_integer(a) && is_integer(b); }
	NumberField field() const;
	/// The same value viewed in K (norms and traces are taken relative to
	/// the field recorded in d); throws UnsupportedBase on a mismatch.
	FieldElement in(NumberField const &K) const;

	FieldElement conj() const;
	Rational norm() const;
	Rational trace() const;
	FieldElement inverse() const; ///< throws SingularMatrix on zero

	std::string to_string() const; ///< "a + b*w"

	FieldElement &operator+=(FieldElement const &o);
	FieldElement &operator-=(FieldElement const &o);
	FieldElement &operator*=(FieldElement const &o);
	FieldElement &operator/=(FieldElement const &o);
	FieldElement operator-() const;
	friend FieldElement operator+(FieldElement x, FieldElement const &y) { return x += y; }
	friend FieldElement operator-(FieldElement x, FieldElement const &y) { return x -= y; }
	friend FieldElement operator*(FieldElement x, FieldElement const &y) { return x *= y; }
	friend FieldElement operator/(FieldElement x, FieldElement const &y) { return x /= y; }
	friend bool operator==(FieldElement const &x, FieldElement const &y);
};

inline std::ostream &operator<<(std::ostream &os, FieldElement const &x) { return os << x.to_string(); }

/// Parses "a", "a + b*w", "b*w", "a - w" etc. with rational a, b.
FieldElement parse_field_element(NumberField const &K, std::string const &text);

/// Nonzero fractional ideal, stored as (1/den) times an integral lattice in
/// Hermite normal form over the basis {1, w}: rows (h00, 0) and (h10, h11)
/// with 0 <= h10 < h00, h11 > 0 (one row (h00) over Q).
class FractionalIdeal
{
  public:
	/// O_K-module generated by gens; throws ZeroIdeal if all are zero.
	static FractionalIdeal generated_by(NumberField const &K, std::vector<FieldElement> const &gens);
	static FractionalIdeal unit(NumberField const &K) { return generated_by(K, {FieldElement(1)}); }
	/// From an HNF matrix (rows as above) and denominator; validates O_K-closure.
	static FractionalIdeal from_hnf(NumberField const &K, Matrix<Integer> const &hnf, Integer const &den = 1);

	NumberField const &field() const { return K_; }
	Matrix<Integer> const &hnf() const { return hnf_; }
	Integer const &denominator() const { return den_; }

	/// Z-basis of the ideal as field elements.
	std::vector<FieldElement> basis() const;
	Rational norm() const;
	bool contains(FieldElement const &x) const;
	/// Integer coordinates of x over basis(); nullopt if x is not a member.
	std::optional<std::vector<Integer>> coordinates(FieldElement const &x) const;
	bool is_integral() const { return den_ == 1; }

	FractionalIdeal operator*(FractionalIdeal const &o) const;
	FractionalIdeal pow(unsigned k) const;
	friend bool operator==(FractionalIdeal const &, FractionalIdeal const &) = default;

	std::string to_string() const;

  private:
	FractionalIdeal(NumberField K, Matrix<Integer> hnf, Integer den)
	    : K_(K), hnf_(std::move(hnf)), den_(std::move(den))
	{}

	NumberField K_;
	Matrix<Integer> hnf_;
	Integer den_ = 1;
};

/// [O_K : I] for integral I, extended multiplicatively; throws if I lives over another field.
Rational ideal_norm(NumberField const &K, FractionalIdeal const &I);

/// sigma(x) for every archimedean place: real places first (sqrt d -> +sqrt d,
/// then -sqrt d), the complex place taken once with sqrt d -> i sqrt|d|.
std::vector<std::complex<double>> minkowski_embed(NumberField const &K, FieldElement const &x);

/// log|sigma_i(x)| for every place, computed without cancellation loss.
std::vector<double> log_abs_embeddings(NumberField const &K, FieldElement const &x);

/// log|q| for a nonzero rational without overflow.
double log_abs(Rational const &q);

struct PlaceFactorization
{
	std::uint64_t prime = 0;
	std::vector<std::pair<unsigned, unsigned>> splitting; ///< (f, e)
};

/// Splitting of p in O_K from the factorization of w's minimal polynomial mod p.
PlaceFactorization factor_prime(NumberField const &K, std::uint64_t p);

/// A prime of O_K with its residue field and reduction map.
struct PrimeIdeal
{
	FractionalIdeal ideal;
	std::uint64_t p;
	unsigned f;
	unsigned e;
	GF residue;
	GF::Elem omega_image; ///< image of w in the residue field
};

/// Every prime ideal above p, ordered by the residue image of w.
std::vector<PrimeIdeal> prime_ideals_above(NumberField const &K, std::uint64_t p);

/// Reduction of a P-integral element; throws NonIntegral otherwise.
GF::Elem reduce(PrimeIdeal const &P, FieldElement const &x);

/// ord_P(x) for nonzero x.
long valuation(PrimeIdeal const &P, FieldElement const &x);

/// Rational primes dividing a nonzero integer, ascending (trial division).
std::vector<std::uint64_t> prime_divisors(Integer n);

/// Fractional ideal with one positive metric factor rho_sigma per place.
struct MetrizedLineBundle
{
	FractionalIdeal ideal;
	std::vector<double> rho;
};

/// Ideal with every rho equal to 1.
MetrizedLineBundle standard_bundle(FractionalIdeal const &I);
/// x O_K with rho_sigma = 1/|sigma(x)|, so that x has unit length at every
/// place; isomorphic to the trivial bundle, hence of degree 0.
MetrizedLineBundle principal_bundle(NumberField const &K, FieldElement const &x);
/// Throws unless there is one positive finite rho per place.
void validate(MetrizedLineBundle const &L);

/// deg = log(|N(s)| / N(I)) - sum_sigma eps_sigma log(rho_sigma |sigma(s)|) for
/// a nonzero s in K.
double arithmetic_degree(NumberField const &K, MetrizedLineBundle const &L, FieldElement const &s);
/// Same with s the first basis vector of the ideal.
double arithmetic_degree(NumberField const &K, MetrizedLineBundle const &L);

/// Ideal product and metric product.
MetrizedLineBundle tensor(MetrizedLineBundle const &a, MetrizedLineBundle const &b);

/// sum_P ord_P(x) log N(P) - sum_sigma eps_sigma log|sigma(x)|, with the
/// finite part assembled prime by prime; zero by the product formula.
double product_formula_residual(NumberField const &K, FieldElement const &x);

} // namespace arithchar
