#pragma once

#include "arithchar/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arithchar {

/// F_p or F_{p^2} = F_p[x]/(x^2 - s x - c) for a prime p < 2^31.
class GF
{
  public:
	struct Elem
	{
		std::uint64_t c0 = 0, c1 = 0; ///< c0 + c1 x
		friend bool operator==(Elem const &, Elem const &) = default;
	};

	/// Prime field; throws Error(ParseError) if p is not prime or too large.
	explicit GF(std::uint64_t p);
	/// Quadratic extension with x^2 = s x + c; throws unless the quadratic is irreducible.
	GF(std::uint64_t p, std::uint64_t s, std::uint64_t c);
	/// Some quadratic extension of F_p.
	static GF quadratic(std::uint64_t p);

	std::uint64_t characteristic() const { return p_; }
	int degree() const { return k_; }
	std::uint64_t order() const { return k_ == 1 ? p_ : p_ * p_; }

	Elem zero() const { return {}; }
	Elem one() const { return {1, 0}; }
	Elem from_int(std::int64_t v) const;
	Elem gen() const; ///< x (only in degree 2)
	/// Image of a p-integral rational; throws NonIntegral if p divides the denominator.
	Elem from_rational(Rational const &q) const;

	Elem add(Elem a, Elem b) const;
	Elem sub(Elem a, Elem b) const;
	Elem neg(Elem a) const;
	Elem mul(Elem a, Elem b) const;
	Elem pow(Elem a, std::uint64_t e) const;
	Elem inv(Elem a) const; ///< throws SingularMatrix on zero
	bool is_zero(Elem a) const { return a.c0 == 0 && a.c1 == 0; }

	/// All field elements in a fixed order (for brute-force enumeration).
	std::vector<Elem> elements() const;

	std::string to_string(Elem a) const;

  private:
	std::uint64_t p_;
	int k_;
	std::uint64_t s_ = 0, c_ = 0;
};

bool is_prime(std::uint64_t n);

/// Polynomial over a GF, coefficients low degree first, no trailing zeros.
using FqPoly = std::vector<GF::Elem>;

namespace fq {

int degree(FqPoly const &f);
FqPoly normalize(FqPoly f, GF const &F);
FqPoly add(GF const &F, FqPoly const &a, FqPoly const &b);
FqPoly sub(GF const &F, FqPoly const &a, FqPoly const &b);
FqPoly mul(GF const &F, FqPoly const &a, FqPoly const &b);
/// (quotient, remainder); b nonzero.
std::pair<FqPoly, FqPoly> divmod(GF const &F, FqPoly const &a, FqPoly const &b);
FqPoly mod(GF const &F, FqPoly const &a, FqPoly const &b);
FqPoly monic(GF const &F, FqPoly const &a);
FqPoly gcd(GF const &F, FqPoly a, FqPoly b);
FqPoly derivative(GF const &F, FqPoly const &a);
/// a^e mod m.
FqPoly powmod(GF const &F, FqPoly const &a, std::uint64_t e, FqPoly const &m);
GF::Elem evaluate(GF const &F, FqPoly const &a, GF::Elem x);

/// Square-free decomposition: pairs (g_i, e_i), g_i square-free and monic,
/// pairwise coprime, with f = lc * prod g_i^{e_i}.
std::vector<std::pair<FqPoly, unsigned>> squarefree(GF const &F, FqPoly const &f);

/// Distinct-degree factorization of a square-free monic polynomial: pairs
/// (d, h_d) where h_d is the product of the irreducible factors of degree d.
std::vector<std::pair<unsigned, FqPoly>> distinct_degree(GF const &F, FqPoly const &f);

/// Multiset of (residue degree, multiplicity) of the irreducible factors of
/// a nonzero polynomial, sorted ascending.
std::vector<std::pair<unsigned, unsigned>> factor_pattern(GF const &F, FqPoly const &f);

/// Roots in F by exhaustive evaluation, with multiplicity ignored.
std::vector<GF::Elem> roots(GF const &F, FqPoly const &f);

} // namespace fq

/// Reduces a rational polynomial (highest degree first) mod p.
FqPoly reduce_mod_p(GF const &F, std::vector<Rational> const &coeffs_high_first);

} // namespace arithchar
