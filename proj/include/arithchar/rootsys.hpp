#pragma once

#include "arithchar/matrix.hpp"
#include "arithchar/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arithchar {

enum class Family { A, B, C, D, G };

struct CartanType
{
	Family family;
	int rank;

	/// Parses "A2", "B3", "G2", ... and validates support.
	static CartanType parse(std::string const &text);

	friend bool operator==(CartanType const &, CartanType const &) = default;
};

std::string to_string(CartanType t);

/// Throws Error(UnsupportedType) outside A1-A4, B2-B4, C2-C4, D3-D4, G2.
void require_supported(CartanType t);

/// Every supported type, in a fixed order.
std::vector<CartanType> supported_types();

/// Classical Weyl group orders: (n+1)!, 2^n n!, 2^{n-1} n!, 12.
std::size_t classical_weyl_order(CartanType t);

/// Number of roots (for |Phi| sanity checks).
std::size_t classical_root_count(CartanType t);

using Root = RatVec;

/// One element of W, stored as a permutation of root indices.
struct WeylElement
{
	std::vector<int> word;         ///< simple reflection indices, applied right to left
	std::vector<std::size_t> perm; ///< perm[i] = index of w(root_i)
	Matrix<Rational> ambient;      ///< action on ambient coordinates
};

/// A split root system realized in an orthonormal ambient space.
///
/// The inner product is (u, v) = scale * dot(u, v); scale is 2 for type B so
/// short roots have squared length 2 in every type. Roots are ordered with
/// the positive roots first (height ascending, then simple coordinates
/// descending lexicographically), followed by their negatives in the same
/// order, so root index i + |Phi+| is -root_i.
class RootSystem
{
  public:
	explicit RootSystem(CartanType t);

	CartanType type() const { return type_; }
	int rank() const { return type_.rank; }
	std::size_t ambient_dim() const { return ambient_dim_; }
	Rational const &form_scale() const { return scale_; }

	std::vector<Root> const &roots() const { return roots_; }
	std::size_t size() const { return roots_.size(); }
	std::size_t positive_count() const { return roots_.size() / 2; }
	Root const &root(std::size_t i) const { return roots_[i]; }

	/// Index of the i-th simple root in roots().
	std::size_t simple_index(int i) const { return static_cast<std::size_t>(i); }
	std::vector<Root> simple_roots() const;
	std::vector<Root> positive_roots() const;

	/// Integer coordinates of root i in the simple-root basis.
	std::vector<long> const &simple_coords(std::size_t i) const
	{
		return coords_[i];
	}
	long height(std::size_t i) const;

	Rational inner(RatVec const &u, RatVec const &v) const;

	/// Gram matrix of the simple roots.
	Matrix<Rational> gram() const;
	/// Cartan matrix a_ij = <alpha_i, alpha_j> = 2 (alpha_i, alpha_j)/(alpha_j, alpha_j).
	Matrix<Rational> cartan_matrix() const;

	std::optional<std::size_t> find(RatVec const &v) const;
	std::size_t index_of(RatVec const &v) const; ///< throws NotARoot
	std::size_t negative(std::size_t i) const
	{
		return i < positive_count() ? i + positive_count()
		                            : i - positive_count();
	}
	bool is_positive(std::size_t i) const { return i < positive_count(); }
	std::optional<std::size_t> sum_index(std::size_t a, std::size_t b) const;

	/// <v, beta> = 2 (v, beta) / (beta, beta) for any ambient vector v.
	Rational coroot_pairing(RatVec const &v, Root const &beta) const;
	/// <alpha, beta> for roots; throws NotARoot.
	long cartan_integer(Root const &alpha, Root const &beta) const;

	/// sigma_alpha(v) = v - (2 (v, alpha)/(alpha, alpha)) alpha.
	RatVec reflect(RatVec const &v, Root const &alpha) const;

	/// (l, k) for the alpha-string beta - l alpha, ..., beta + k alpha.
	std::pair<int, int> root_string(Root const &alpha, Root const &beta) const;
	std::pair<int, int> root_string(std::size_t alpha, std::size_t beta) const;

	/// Coefficients of the coroot 2 alpha/(alpha, alpha) over the simple coroots.
	std::vector<long> coroot_coords(std::size_t i) const;

	/// Breadth-first enumeration over words in simple reflections; words are
	/// shortest, element 0 is the identity.
	std::vector<WeylElement> weyl_group() const;

	/// Permutation of root indices induced by sigma_{alpha_i}.
	std::vector<std::size_t> const &simple_reflection_perm(int i) const
	{
		return simple_perms_[i];
	}

  private:
	CartanType type_;
	std::size_t ambient_dim_ = 0;
	Rational scale_ = 1;
	std::vector<Root> roots_;
	std::vector<std::vector<long>> coords_;
	std::map<RatVec, std::size_t> lookup_;
	std::vector<std::vector<std::size_t>> simple_perms_;
};

} // namespace arithchar
