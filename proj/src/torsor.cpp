#include "arithchar/torsor.hpp"
#include "arithchar/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arithchar {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double tol = CompatibilityReport::tolerance;

MatrixXcd basis_matrix(CartanData const &cd, Index k)
{
	auto n = static_cast<Index>(cd.n);
	MatrixXcd b = MatrixXcd::Zero(n, n);
	Index m = k % (n * n);
	b(m / n, m % n) = k < n * n ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
	return b;
}

// |A - B| / max(1, |B|)
double rel(MatrixXd const &A, MatrixXd const &B)
{
	return (A - B).norm() / std::max(1.0, B.norm());
}

// orthonormal basis of the column space, singular values below a relative cut dropped
MatrixXd range_basis(MatrixXd const &P)
{
	Eigen::JacobiSVD<MatrixXd> svd(P, Eigen::ComputeThinU);
	auto const &s = svd.singularValues();
	double cut = 1e-8 * std::max(1.0, s.size() ? s(0) : 0.0);
	Index r = 0;
	while (r < s.size() && s(r) > cut)
		++r;
	return svd.matrixU().leftCols(r);
}

double min_eigenvalue(MatrixXd const &S)
{
	if (S.rows() == 0)
		return std::numeric_limits<double>::infinity();
	MatrixXd sym = (S + S.transpose()) / 2;
	return Eigen::SelfAdjointEigenSolver<MatrixXd>(sym, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

void require_gl(CartanData const &cd)
{
	if (cd.n == 0)
		throw Error(ErrorCode::UnsupportedType, "group action needs matrix (gl_n) Cartan data");
}

void require_spd(CartanData const &cd, MatrixXd const &H)
{
	if (H.rows() != cd.dim() || H.cols() != cd.dim())
		throw Error(ErrorCode::DimensionMismatch, "form has the wrong size");
	if (rel(H, H.transpose()) > tol)
		throw Error(ErrorCode::SingularForm, "form is not symmetric");
	if (Eigen::LLT<MatrixXd>(H).info() != Eigen::Success)
		throw Error(ErrorCode::SingularForm, "form is not positive definite");
}

// orthonormal bases of g^1 and v (Euclidean in the coordinates of cd)
std::pair<MatrixXd, MatrixXd> center_bases(CartanData const &cd)
{
	Index d = cd.dim();
	if (cd.center.cols() == 0)
		return {MatrixXd::Identity(d, d), MatrixXd(d, 0)};
	MatrixXd V = Eigen::HouseholderQR<MatrixXd>(cd.center).householderQ() * MatrixXd::Identity(d, cd.center.cols());
	MatrixXd comp = MatrixXd::Identity(d, d) - V * V.transpose();
	return {range_basis(comp), V};
}

} // namespace

CartanData canonical_form(std::size_t n, PlaceKind place)
{
	if (n == 0)
		throw Error(ErrorCode::DimensionMismatch, "gl_n needs n >= 1");
	CartanData cd;
	cd.n = n;
	cd.place = place;
	auto nn = static_cast<Index>(n * n);
	Index d = place == PlaceKind::Real ? nn : 2 * nn;
	cd.H_K = MatrixXd::Zero(d, d);
	cd.theta_K = MatrixXd::Zero(d, d);
	// provisional size so basis_matrix and to_coords see the right dimension
	cd.center = MatrixXd(d, 0);
	for (Index k = 0; k < d; ++k)
	{
		MatrixXcd bk = basis_matrix(cd, k);
		for (Index l = 0; l < d; ++l)
			cd.H_K(k, l) = (bk * basis_matrix(cd, l)).trace().real();
	}
	// theta_K(X) = -X^*; for real matrices this is -X^T
	cd.theta_K = MatrixXd::Zero(d, d);
	for (Index k = 0; k < d; ++k)
		cd.theta_K.col(k) = to_coords(cd, -basis_matrix(cd, k).adjoint());
	cd.positive = -cd.H_K * cd.theta_K;
	cd.center = to_coords(cd, MatrixXcd::Identity(static_cast<Index>(n), static_cast<Index>(n)));
	return cd;
}

CartanData adjoint_canonical_form(IntegralLieAlgebra const &L)
{
	if (L.center_rank() != 0)
		throw Error(ErrorCode::UnsupportedType, "adjoint Cartan data needs a semisimple algebra");
	auto const &rs = L.root_system();
	auto d = static_cast<Index>(L.dim());
	std::vector<Matrix<Rational>> ad;
	for (std::size_t i = 0; i < L.dim(); ++i)
		ad.push_back(adjoint_matrix(L, L.element(i)));
	CartanData cd;
	cd.H_K = MatrixXd::Zero(d, d);
	for (Index i = 0; i < d; ++i)
		for (Index j = 0; j < d; ++j)
		{
			auto prod = ad[static_cast<std::size_t>(i)] * ad[static_cast<std::size_t>(j)];
			Rational t = 0;
			for (std::size_t k = 0; k < prod.rows(); ++k)
				t += prod(k, k);
			cd.H_K(i, j) = t.get_d();
		}
	cd.theta_K = MatrixXd::Zero(d, d);
	for (std::size_t a = 0; a < rs.size(); ++a)
		cd.theta_K(static_cast<Index>(rs.negative(a)), static_cast<Index>(a)) = -1;
	for (auto i = static_cast<Index>(rs.size()); i < d; ++i)
		cd.theta_K(i, i) = -1;
	cd.positive = -cd.H_K * cd.theta_K;
	cd.center = MatrixXd(d, 0);
	return cd;
}

Eigen::VectorXd to_coords(CartanData const &cd, Eigen::MatrixXcd const &X)
{
	require_gl(cd);
	auto n = static_cast<Index>(cd.n);
	if (X.rows() != n || X.cols() != n)
		throw Error(ErrorCode::DimensionMismatch, "matrix size does not match gl_n");
	VectorXd v(cd.dim());
	for (Index i = 0; i < n; ++i)
		for (Index j = 0; j < n; ++j)
		{
			v(i * n + j) = X(i, j).real();
			if (cd.place == PlaceKind::Complex)
				v(n * n + i * n + j) = X(i, j).imag();
		}
	return v;
}

Eigen::MatrixXcd from_coords(CartanData const &cd, Eigen::VectorXd const &v)
{
	require_gl(cd);
	if (v.size() != cd.dim())
		throw Error(ErrorCode::DimensionMismatch, "coordinate vector has the wrong size");
	auto n = static_cast<Index>(cd.n);
	MatrixXcd X(n, n);
	for (Index i = 0; i < n; ++i)
		for (Index j = 0; j < n; ++j)
			X(i, j) = {v(i * n + j), cd.place == PlaceKind::Complex ? v(n * n + i * n + j) : 0.0};
	return X;
}

Eigen::MatrixXd adjoint_action(CartanData const &cd, Eigen::MatrixXcd const &g)
{
	require_gl(cd);
	auto n = static_cast<Index>(cd.n);
	if (g.rows() != n || g.cols() != n)
		throw Error(ErrorCode::DimensionMismatch, "group element has the wrong size");
	if (cd.place == PlaceKind::Real && g.imag().norm() > tol * std::max(1.0, g.norm()))
		throw Error(ErrorCode::DimensionMismatch, "complex group element at a real place");
	Eigen::FullPivLU<MatrixXcd> lu(g);
	if (!lu.isInvertible())
		throw Error(ErrorCode::SingularMatrix, "group element is not invertible");
	MatrixXcd ginv = lu.inverse();
	MatrixXd A(cd.dim(), cd.dim());
	for (Index k = 0; k < cd.dim(); ++k)
		A.col(k) = to_coords(cd, g * basis_matrix(cd, k) * ginv);
	return A;
}

Eigen::MatrixXd effective_form(CartanData const &cd, Eigen::MatrixXd const &H)
{
	if (cd.center.cols() == 0)
		return cd.H_K;
	MatrixXd const &V = cd.center;
	MatrixXd M = V.transpose() * cd.H_K * V;
	// H_K-orthogonal projection onto v; for gl_n it is X -> Re tr(X)/n I
	MatrixXd pi = V * M.inverse() * V.transpose() * cd.H_K;
	MatrixXd Q = MatrixXd::Identity(cd.dim(), cd.dim()) - pi;
	return Q.transpose() * cd.H_K * Q + pi.transpose() * H * pi;
}

Eigen::MatrixXd fine_involution(CartanData const &cd, Eigen::MatrixXd const &H)
{
	require_spd(cd, H);
	MatrixXd Heff = effective_form(cd, H);
	Eigen::FullPivLU<MatrixXd> lu(Heff);
	if (!lu.isInvertible())
		throw Error(ErrorCode::SingularForm, "canonical form is degenerate");
	return -lu.solve(H);
}

CompatibilityReport verify_compatibility(CartanData const &cd, Eigen::MatrixXd const &H)
{
	CompatibilityReport r;
	MatrixXd theta = fine_involution(cd, H);
	MatrixXd Heff = effective_form(cd, H);
	Index d = cd.dim();
	MatrixXd I = MatrixXd::Identity(d, d);
	double hk_scale = std::max(1.0, Heff.norm());

	// (1)
	r.involution_residual = (theta * theta - I).norm() / std::max(1.0, theta.squaredNorm());
	r.involution = r.involution_residual <= tol;

	// (2)
	r.inverse_residual = rel(Heff * H.llt().solve(Heff), H);
	r.inverse_relation = r.inverse_residual <= tol;

	// (3)
	MatrixXd Pk = (I + theta) / 2, Pp = (I - theta) / 2;
	r.projector_residual = std::max(rel(Pk * Pk, Pk), rel(Pp * Pp, Pp));
	MatrixXd Bk = range_basis(Pk), Bp = range_basis(Pp);
	r.dim_k = Bk.cols();
	r.dim_p = Bp.cols();
	r.eigenspace_split = r.dim_k + r.dim_p == d && r.projector_residual <= tol;

	MatrixXd Kk = Bk.transpose() * Heff * Bk, Kp = Bp.transpose() * Heff * Bp;
	MatrixXd Hk = Bk.transpose() * H * Bk, Hp = Bp.transpose() * H * Bp;
	r.definiteness_margin = std::min(min_eigenvalue(-Kk), min_eigenvalue(Kp)) / hk_scale;
	bool matches = (Kk + Hk).norm() <= tol * hk_scale && (Kp - Hp).norm() <= tol * hk_scale;
	r.definiteness = matches && r.definiteness_margin > tol;

	r.orthogonality_residual = (Bk.transpose() * Heff * Bp).norm() / hk_scale;
	r.orthogonality = r.orthogonality_residual <= tol;

	// (4) with H = L L^T: H_K is an isometry iff S = L^{-1} H_K L^{-T} is orthogonal
	Eigen::LLT<MatrixXd> llt(H);
	MatrixXd Linv = llt.matrixL().solve(I);
	MatrixXd S = Linv * Heff * Linv.transpose();
	r.isometry_residual = (S.transpose() * S - I).norm() / std::max(1.0, S.squaredNorm());
	r.isometry = r.isometry_residual <= tol;
	return r;
}

CompatibleMetric canonical_metric(CartanData const &cd)
{
	CompatibleMetric m{cd.positive, std::nullopt};
	if (cd.n > 0)
		m.witness = MatrixXcd::Identity(static_cast<Index>(cd.n), static_cast<Index>(cd.n));
	return m;
}

CompatibleMetric act(CartanData const &cd, Eigen::MatrixXcd const &g, CompatibleMetric const &H)
{
	MatrixXd A = adjoint_action(cd, g);
	CompatibleMetric out{A.transpose() * H.H * A, std::nullopt};
	if (H.witness)
		out.witness = *H.witness * g;
	return out;
}

CenterSplitting split_metric(CartanData const &cd, Eigen::MatrixXd const &H)
{
	require_spd(cd, H);
	auto [B1, Bv] = center_bases(cd);
	if ((B1.transpose() * H * Bv).norm() > tol * std::max(1.0, H.norm()))
		throw Error(ErrorCode::SingularForm, "metric couples g^1 and the centre");
	return {B1.transpose() * H * B1, Bv.transpose() * H * Bv};
}

Eigen::MatrixXd join_metric(CartanData const &cd, CenterSplitting const &blocks)
{
	auto [B1, Bv] = center_bases(cd);
	if (blocks.semisimple.rows() != B1.cols() || blocks.semisimple.cols() != B1.cols() ||
	    blocks.center.rows() != Bv.cols() || blocks.center.cols() != Bv.cols())
		throw Error(ErrorCode::DimensionMismatch, "block sizes do not match g^1 and v");
	return B1 * blocks.semisimple * B1.transpose() + Bv * blocks.center * Bv.transpose();
}

ArithmeticTorsor trivial_torsor(NumberField const &K, std::size_t n)
{
	ArithmeticTorsor T;
	T.field = K;
	T.rank = n;
	T.ideals.assign(n, FractionalIdeal::unit(K));
	auto m = static_cast<Index>(n);
	T.gram.assign(static_cast<std::size_t>(K.places()), MatrixXcd::Identity(m, m));
	return T;
}

void validate(ArithmeticTorsor const &T)
{
	if (T.rank == 0)
		throw Error(ErrorCode::DimensionMismatch, "torsor rank must be positive");
	if (T.ideals.size() != T.rank)
		throw Error(ErrorCode::DimensionMismatch, "need one ideal per basis vector");
	for (auto const &I : T.ideals)
		if (!(I.field() == T.field))
			throw Error(ErrorCode::UnsupportedBase, "ideal over a different field");
	if (T.gram.size() != static_cast<std::size_t>(T.field.places()))
		throw Error(ErrorCode::DimensionMismatch, "need one Gram matrix per archimedean place");
	auto m = static_cast<Index>(T.rank);
	for (std::size_t s = 0; s < T.gram.size(); ++s)
	{
		auto const &h = T.gram[s];
		if (h.rows() != m || h.cols() != m)
			throw Error(ErrorCode::DimensionMismatch, "Gram matrix has the wrong size");
		double scale = std::max(1.0, h.norm());
		if ((h - h.adjoint()).norm() > tol * scale)
			throw Error(ErrorCode::SingularForm, "Gram matrix is not Hermitian");
		if (T.field.place_is_real(static_cast<int>(s)) && h.imag().norm() > tol * scale)
			throw Error(ErrorCode::SingularForm, "complex Gram matrix at a real place");
		if (Eigen::LLT<MatrixXcd>(h).info() != Eigen::Success)
			throw Error(ErrorCode::SingularForm, "Gram matrix is not positive definite");
	}
}

CompatibleMetric adjoint_metric(ArithmeticTorsor const &T, int place)
{
	validate(T);
	if (place < 0 || place >= T.field.places())
		throw Error(ErrorCode::DimensionMismatch, "no such archimedean place");
	auto cd = canonical_form(T.rank, T.field.place_is_real(place) ? PlaceKind::Real : PlaceKind::Complex);
	Eigen::LLT<MatrixXcd> llt(T.gram[static_cast<std::size_t>(place)]);
	MatrixXcd g = llt.matrixU();
	return act(cd, g, canonical_metric(cd));
}

MetrizedLineBundle determinant_bundle(ArithmeticTorsor const &T)
{
	validate(T);
	MetrizedLineBundle L{FractionalIdeal::unit(T.field), {}};
	for (auto const &I : T.ideals)
		L.ideal = L.ideal * I;
	for (auto const &h : T.gram)
	{
		Eigen::LLT<MatrixXcd> llt(h);
		// sqrt(det h) = product of the Cholesky diagonal
		double rho = 1;
		for (Index i = 0; i < h.rows(); ++i)
			rho *= llt.matrixLLT()(i, i).real();
		L.rho.push_back(rho);
	}
	return L;
}

double slope(ArithmeticTorsor const &T, long k)
{
	return static_cast<double>(k) * arithmetic_degree(T.field, determinant_bundle(T));
}

CocharacterLattice CocharacterLattice::from_matrix(std::vector<std::vector<long>> m)
{
	std::vector<std::vector<Rational>> q;
	for (auto const &row : m)
	{
		if (row.size() != m.size())
			throw Error(ErrorCode::DimensionMismatch, "pairing matrix must be square");
		std::vector<Rational> r;
		for (long v : row)
			r.emplace_back(v);
		q.push_back(r);
	}
	if (m.empty() || Matrix<Rational>(q).det() == 0)
		throw Error(ErrorCode::SingularForm, "pairing is degenerate");
	CocharacterLattice L;
	L.rank = m.size();
	L.pairing = std::move(m);
	return L;
}

CocharacterLattice CocharacterLattice::general_linear(std::size_t n)
{
	std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
	for (std::size_t i = 0; i < n; ++i)
		m[i][i] = 1;
	return from_matrix(m);
}

long cochar_pairing(CocharacterLattice const &L, std::vector<long> const &chi, std::vector<long> const &mu)
{
	if (chi.size() != L.rank || mu.size() != L.rank)
		throw Error(ErrorCode::DimensionMismatch, "vector length does not match the lattice rank");
	long s = 0;
	for (std::size_t i = 0; i < L.rank; ++i)
		for (std::size_t j = 0; j < L.rank; ++j)
			s += chi[i] * L.pairing[i][j] * mu[j];
	return s;
}

} // namespace arithchar
