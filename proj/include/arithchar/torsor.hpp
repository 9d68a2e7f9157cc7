#pragma once

#include "arithchar/arakelov.hpp"
#include "arithchar/chevalley.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

namespace arithchar {

enum class PlaceKind { Real, Complex };

/// Canonical data of a real Lie algebra g with a maximal compact subgroup.
///
/// Forms and maps are real matrices over a fixed real basis of g. For gl_n
/// at a real place the basis is E_ij (index i*n + j); at a complex place it is
/// E_ij followed by i*E_ij, with <X, Y> = Re Tr(XY).
struct CartanData
{
	std::size_t n = 0; ///< matrix size; 0 for adjoint data of a semisimple algebra
	PlaceKind place = PlaceKind::Real;
	Eigen::MatrixXd H_K;      ///< <X, Y>
	Eigen::MatrixXd theta_K;  ///< Cartan involution
	Eigen::MatrixXd positive; ///< (X, Y) = -<X, theta_K Y>
	Eigen::MatrixXd center;   ///< columns spanning the split centre v (may be empty)

	Eigen::Index dim() const { return H_K.rows(); }
};

/// gl_n with theta_K(X) = -X^T (real) or -X^* (complex) and the trace form,
/// which is positive on the split centre R*I.
CartanData canonical_form(std::size_t n, PlaceKind place = PlaceKind::Real);

/// Split semisimple g over its Chevalley basis: Killing form and the
/// involution x_a -> -x_{-a}, h -> -h. Throws UnsupportedType if L has a centre.
CartanData adjoint_canonical_form(IntegralLieAlgebra const &L);

/// Real coordinates of a matrix in gl_n over the basis of cd and back.
Eigen::VectorXd to_coords(CartanData const &cd, Eigen::MatrixXcd const &X);
Eigen::MatrixXcd from_coords(CartanData const &cd, Eigen::VectorXd const &v);

/// Ad g as a real matrix. Throws SingularMatrix or DimensionMismatch.
Eigen::MatrixXd adjoint_action(CartanData const &cd, Eigen::MatrixXcd const &g);

/// H_K with its block on the split centre replaced by that of H. On g^1 the
/// two agree with H_K; on v any Euclidean metric is compatible.
Eigen::MatrixXd effective_form(CartanData const &cd, Eigen::MatrixXd const &H);

/// theta_H = -H_K^{-1} H with the effective H_K. Throws SingularForm if the
/// form is not invertible or H is not symmetric positive definite.
Eigen::MatrixXd fine_involution(CartanData const &cd, Eigen::MatrixXd const &H);

struct CompatibilityReport
{
	static constexpr double tolerance = 1e-9;

	bool involution = false;        ///< theta_H^2 = 1
	bool inverse_relation = false;  ///< H_K H^{-1} H_K = H
	bool eigenspace_split = false;  ///< g = k_H + p_H
	bool definiteness = false;      ///< H_K = -H < 0 on k_H, H_K = H > 0 on p_H
	bool orthogonality = false;     ///< k_H and p_H are H_K-orthogonal
	bool isometry = false;          ///< H_K: (g, H) -> (g*, H^{-1}) is an isometry
	double involution_residual = 0;
	double inverse_residual = 0;
	double projector_residual = 0;
	double definiteness_margin = 0; ///< smallest eigenvalue of the two restricted forms, relative
	double orthogonality_residual = 0;
	double isometry_residual = 0;
	Eigen::Index dim_k = 0;
	Eigen::Index dim_p = 0;

	bool decomposition() const { return eigenspace_split && definiteness && orthogonality; }
	bool ok() const { return involution && inverse_relation && decomposition() && isometry; }
};

CompatibilityReport verify_compatibility(CartanData const &cd, Eigen::MatrixXd const &H);

/// H with an optional witness g such that H = (Ad g)^T (.,.)_K (Ad g).
struct CompatibleMetric
{
	Eigen::MatrixXd H;
	std::optional<Eigen::MatrixXcd> witness;
};

CompatibleMetric canonical_metric(CartanData const &cd);

/// (H, g) -> (Ad g)^T H (Ad g); a right action, witness w -> w g.
CompatibleMetric act(CartanData const &cd, Eigen::MatrixXcd const &g, CompatibleMetric const &H);

/// Blocks of H over an orthonormal basis of g^1 and one of v.
struct CenterSplitting
{
	Eigen::MatrixXd semisimple;
	Eigen::MatrixXd center;
};

/// Throws SingularForm if H couples g^1 and v.
CenterSplitting split_metric(CartanData const &cd, Eigen::MatrixXd const &H);
Eigen::MatrixXd join_metric(CartanData const &cd, CenterSplitting const &blocks);

/// Rank-n O_K-module I_1 e_1 + ... + I_n e_n with a Hermitian Gram matrix of
/// the standard representation at every archimedean place.
struct ArithmeticTorsor
{
	NumberField field;
	std::size_t rank = 0;
	std::vector<FractionalIdeal> ideals;
	std::vector<Eigen::MatrixXcd> gram;
};

/// O_K^n with identity Gram matrices.
ArithmeticTorsor trivial_torsor(NumberField const &K, std::size_t n);

/// Throws DimensionMismatch, UnsupportedBase or SingularForm.
void validate(ArithmeticTorsor const &T);

/// The metric induced on gl_n at a place, witnessed by the Cholesky factor
/// g of the Gram matrix (h = g^* g).
CompatibleMetric adjoint_metric(ArithmeticTorsor const &T, int place);

/// det: ideal prod I_i with rho_sigma = sqrt(det h_sigma), the norm of
/// e_1 ^ ... ^ e_n.
MetrizedLineBundle determinant_bundle(ArithmeticTorsor const &T);

/// <det^k, mu> = k * deg_ar(det bundle).
double slope(ArithmeticTorsor const &T, long k);

/// Perfect pairing X_*(T) x X^*(T) -> Z given by an integer matrix.
struct CocharacterLattice
{
	std::size_t rank = 0;
	std::vector<std::vector<long>> pairing;

	/// Throws DimensionMismatch or SingularForm.
	static CocharacterLattice from_matrix(std::vector<std::vector<long>> m);
	static CocharacterLattice multiplicative() { return from_matrix({{1}}); }
	/// Diagonal torus of GL_n, standard coordinates on both sides.
	static CocharacterLattice general_linear(std::size_t n);
};

/// chi^T P mu. Throws DimensionMismatch.
long cochar_pairing(CocharacterLattice const &L, std::vector<long> const &chi, std::vector<long> const &mu);

} // namespace arithchar
