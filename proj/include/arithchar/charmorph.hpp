#pragma once

#include "arithchar/matrix.hpp"
#include "arithchar/rational.hpp"
#include "arithchar/rootsys.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace arithchar {

using Exponent = std::vector<unsigned>;

/// Multivariate polynomial with exact rational coefficients. Zero terms are
/// never stored, so == is structural equality.
class Polynomial
{
  public:
	Polynomial() = default;
	explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

	static Polynomial constant(std::size_t nvars, Rational const &c);
	static Polynomial variable(std::size_t nvars, std::size_t i);
	static Polynomial monomial(Exponent const &e, Rational const &c = 1);

	std::size_t nvars() const { return nvars_; }
	std::map<Exponent, Rational> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	/// Total degree; -1 for the zero polynomial.
	int degree() const;
	bool is_homogeneous() const;

	void add_term(Exponent const &e, Rational const &c);

	Rational evaluate(RatVec const &point) const;
	/// p(M t): every variable t_i is replaced by sum_j M_ij t_j.
	Polynomial substitute(Matrix<Rational> const &m) const;

	std::string to_string() const;

	Polynomial &operator+=(Polynomial const &o);
	Polynomial &operator-=(Polynomial const &o);
	Polynomial &operator*=(Rational const &s);
	friend Polynomial operator+(Polynomial a, Polynomial const &b) { return a += b; }
	friend Polynomial operator-(Polynomial a, Polynomial const &b) { return a -= b; }
	friend Polynomial operator*(Rational const &s, Polynomial a) { return a *= s; }
	friend Polynomial operator*(Polynomial const &a, Polynomial const &b);
	friend bool operator==(Polynomial const &, Polynomial const &) = default;

  private:
	void require_same(Polynomial const &o) const;

	std::size_t nvars_ = 0;
	std::map<Exponent, Rational> terms_;
};

Polynomial pow(Polynomial const &p, unsigned e);

inline std::ostream &operator<<(std::ostream &os, Polynomial const &p) { return os << p.to_string(); }

/// e_k(t_1, ..., t_n) as a polynomial in n variables.
Polynomial elementary_symmetric(std::size_t n, std::size_t k);

/// A point of c = t//W: the values of the fundamental invariants.
struct CharPoint
{
	RatVec values;
	friend bool operator==(CharPoint const &, CharPoint const &) = default;
};

/// The torus coordinates the invariants of a type are written in.
///
/// A_n uses the n+1 diagonal coordinates of gl_{n+1}, B/C/D the n standard
/// coordinates, G2 the three coordinates of its ambient space.
std::size_t torus_dimension(CartanType t);

/// Generators of F[t]^W: A_n gives e_1..e_{n+1} (gl_{n+1} model), B_n and
/// C_n give e_k(t^2), D_n gives e_1..e_{n-1}(t^2) and t_1...t_n, G2 gives
/// the degree 2 and 6 invariants of the trace-free part, scaled to have
/// integer coefficients.
std::vector<Polynomial> fundamental_invariants(CartanType t);

/// e_1..e_n on the diagonal of gl_n.
std::vector<Polynomial> gl_invariants(std::size_t n);

/// Evaluates the fundamental invariants at a torus point; throws DimensionMismatch.
CharPoint chi_torus(CartanType t, RatVec const &point);
CharPoint chi_torus_gl(RatVec const &point);

/// (c_1, ..., c_n) with det(lambda - A) = sum_k (-1)^k c_k lambda^{n-k}.
CharPoint chi_gl(Matrix<Rational> const &a);

/// (1/|W|) sum_w monomial(w t) over the ambient action of W.
Polynomial reynolds_symmetrize(CartanType t, Exponent const &e);

/// p(w t) = p(t) for every w in W.
bool is_weyl_invariant(CartanType t, Polynomial const &p);

/// Newton identities: power sums p_1..p_n from e_1..e_n and back.
RatVec power_sums(CharPoint const &elementary);
CharPoint elementary_from_power_sums(RatVec const &p);

} // namespace arithchar
