#pragma once

#include "arithchar/matrix.hpp"
#include "arithchar/rational.hpp"
#include "arithchar/rootsys.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arithchar {

enum class BasisKind { RootVector, Coroot, Central };

struct BasisVector
{
	BasisKind kind;
	std::size_t index; ///< root index, simple-root index or center index
};

/// Coordinates of a Lie algebra element over the Chevalley basis.
struct LieElement
{
	RatVec coords;

	static LieElement zero(std::size_t dim) { return {RatVec(dim, Rational(0))}; }
	static LieElement basis(std::size_t dim, std::size_t i)
	{
		auto e = zero(dim);
		e.coords[i] = 1;
		return e;
	}
	std::size_t size() const { return coords.size(); }
	bool is_zero() const;
	bool is_integral() const;

	LieElement &operator+=(LieElement const &o);
	LieElement &operator-=(LieElement const &o);
	LieElement &operator*=(Rational const &s);
	friend LieElement operator+(LieElement a, LieElement const &b) { return a += b; }
	friend LieElement operator-(LieElement a, LieElement const &b) { return a -= b; }
	friend LieElement operator*(Rational const &s, LieElement a) { return a *= s; }
	friend bool operator==(LieElement const &, LieElement const &) = default;
};

/// Sparse bracket table [e_i, e_j] = sum_k c_ijk e_k over a fixed basis.
class BracketTable
{
  public:
	using Terms = std::vector<std::pair<std::size_t, Rational>>;

	BracketTable() = default;
	explicit BracketTable(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

	std::size_t dim() const { return dim_; }
	Terms const &at(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }
	void set(std::size_t i, std::size_t j, Terms terms);

	LieElement bracket(LieElement const &x, LieElement const &y) const;
	LieElement bracket_basis(std::size_t i, std::size_t j) const;

	bool integral() const;
	bool antisymmetric() const;
	/// Jacobi sum of three basis vectors.
	LieElement jacobi(std::size_t i, std::size_t j, std::size_t k) const;
	bool jacobi_exhaustive() const;
	bool jacobi_sampled(std::size_t samples, std::uint64_t seed) const;

  private:
	std::size_t dim_ = 0;
	std::vector<Terms> cells_;
};

/// g_Z: Chevalley basis of [g, g] plus an integral basis of an abelian center.
///
/// Basis order: x_alpha for every root (root index order), h_i for the
/// simple roots, then z_1..z_c.
class IntegralLieAlgebra
{
  public:
	RootSystem const &root_system() const { return rs_; }
	std::size_t dim() const { return table_.dim(); }
	std::size_t center_rank() const { return center_rank_; }
	Matrix<Rational> const &center_basis() const { return center_basis_; }
	std::vector<BasisVector> const &basis() const { return basis_; }
	BracketTable const &table() const { return table_; }

	std::size_t root_vector(std::size_t root) const { return root; }
	std::size_t coroot(int simple) const { return rs_.size() + static_cast<std::size_t>(simple); }
	std::size_t central(std::size_t j) const { return rs_.size() + static_cast<std::size_t>(rs_.rank()) + j; }

	/// Stable identifier: "x(1,0)", "h1", "z1".
	std::string basis_id(std::size_t i) const;

	/// c_{alpha,beta} with [x_alpha, x_beta] = c x_{alpha+beta}; 0 when alpha+beta is not a root.
	long structure_constant(std::size_t a, std::size_t b) const;

	/// The extraspecial pair chosen for a non-simple positive root.
	std::optional<std::pair<std::size_t, std::size_t>> extraspecial_pair(std::size_t gamma) const;

	LieElement zero() const { return LieElement::zero(dim()); }
	LieElement element(std::size_t i) const { return LieElement::basis(dim(), i); }

  private:
	friend IntegralLieAlgebra build_chevalley_basis(RootSystem const &, std::size_t,
	                                                std::optional<Matrix<Rational>>);
	friend IntegralLieAlgebra rescale(IntegralLieAlgebra const &, std::vector<Rational> const &);

	explicit IntegralLieAlgebra(RootSystem rs) : rs_(std::move(rs)) {}

	RootSystem rs_;
	std::size_t center_rank_ = 0;
	Matrix<Rational> center_basis_;
	std::vector<BasisVector> basis_;
	BracketTable table_;
	std::vector<std::vector<long>> n_;
	std::map<std::size_t, std::pair<std::size_t, std::size_t>> extraspecial_;
};

/// Structure constants fixed by the extraspecial-pair convention: for every
/// non-simple positive root gamma the pair (alpha, beta), alpha minimal in
/// the root order, gets c_{alpha,beta} = +(l+1); every other constant
/// follows from antisymmetry and the Jacobi identity.
///
/// center_basis, if given, must be a unimodular integer matrix (rows = basis
/// of z_Z in the standard coordinates).
IntegralLieAlgebra build_chevalley_basis(RootSystem const &rs, std::size_t center_rank = 0,
                                         std::optional<Matrix<Rational>> center_basis = std::nullopt);

LieElement bracket(IntegralLieAlgebra const &L, LieElement const &x, LieElement const &y);

/// Column j is [x, e_j].
Matrix<Rational> adjoint_matrix(IntegralLieAlgebra const &L, LieElement const &x);

/// x_+ = sum of x_alpha over the simple roots.
LieElement principal_nilpotent(IntegralLieAlgebra const &L);

/// (i) c_a c_{-a} = 1 for all roots and (ii) c_a c_b = +-c_{a+b} whenever a+b is a root.
bool verify_sign_constraints(IntegralLieAlgebra const &L, std::vector<Rational> const &c);

/// Basis change x_alpha -> c_alpha x_alpha (c indexed by root). Requires
/// verify_sign_constraints(L, c).
IntegralLieAlgebra rescale(IntegralLieAlgebra const &L, std::vector<Rational> const &c);

struct ChevalleyReport
{
	bool integral = false;
	bool antisymmetric = false;
	bool jacobi = false;
	bool jacobi_exhaustive = false;
	bool cartan_abelian = false;   ///< [h_a, h_b] = 0
	bool cartan_action = false;    ///< [h_b, x_a] = <a, b> x_a
	bool coroot_span = false;      ///< [x_a, x_{-a}] in the Z-span of the h's
	bool sl2_triples = false;      ///< [x_a, x_{-a}] = h_a and [h_a, x_a] = 2 x_a
	bool magnitude = false;        ///< |c_{a,b}| = l + 1
	bool string_vanishing = false; ///< k = 0 gives [x_a, x_b] = 0
	bool negation_antisymmetric = false; ///< c_{-a,-b} = -c_{a,b}
	bool negation_symmetric = false;     ///< c_{-a,-b} = c_{a,b}
	bool squared_norm_clause = false;    ///< c^2 = k (l+1) (a+b,a+b)/(b,b)
	std::size_t pairs_checked = 0;
	std::size_t magnitude_mismatches = 0;
	std::size_t negation_symmetric_mismatches = 0;
	std::size_t squared_norm_mismatches = 0;

	/// Everything required of a Chevalley basis. negation_symmetric is
	/// reported but excluded: it contradicts [x_a, x_{-a}] = h_a.
	bool ok() const
	{
		return integral && antisymmetric && jacobi && cartan_abelian && cartan_action &&
		       coroot_span && sl2_triples && magnitude && string_vanishing &&
		       negation_antisymmetric && squared_norm_clause;
	}
};

/// Jacobi is checked exhaustively for rank <= 3, else on jacobi_samples random triples.
ChevalleyReport verify_chevalley(IntegralLieAlgebra const &L, std::size_t jacobi_samples = 10000,
                                 std::uint64_t seed = 1);

/// Matrix images in gl_n for type A_{n-1} (center rank 0 or 1): x_{e_i-e_j}
/// -> +-E_ij, h_i -> E_ii - E_{i+1,i+1}, z -> I. Throws UnsupportedType otherwise.
std::vector<Matrix<Rational>> gl_realization(IntegralLieAlgebra const &L);

/// True iff image([e_i, e_j]) = [image e_i, image e_j] for all basis pairs.
bool check_realization(IntegralLieAlgebra const &L, std::vector<Matrix<Rational>> const &images);

} // namespace arithchar
