#include "arithchar/chevalley.hpp"
#include "arithchar/error.hpp"

#include <functional>
#include <random>

namespace arithchar {

bool LieElement::is_zero() const
{
	for (auto const &c : coords)
		if (c != 0)
			return false;
	return true;
}

bool LieElement::is_integral() const
{
	for (auto const &c : coords)
		if (!arithchar::is_integer(c))
			return false;
	return true;
}

LieElement &LieElement::operator+=(LieElement const &o)
{
	if (o.size() != size())
		throw Error(ErrorCode::DimensionMismatch, "Lie element length mismatch");
	for (std::size_t i = 0; i < size(); ++i)
		coords[i] += o.coords[i];
	return *this;
}

LieElement &LieElement::operator-=(LieElement const &o)
{
	if (o.size() != size())
		throw Error(ErrorCode::DimensionMismatch, "Lie element length mismatch");
	for (std::size_t i = 0; i < size(); ++i)
		coords[i] -= o.coords[i];
	return *this;
}

LieElement &LieElement::operator*=(Rational const &s)
{
	for (auto &c : coords)
		c *= s;
	return *this;
}

// ---------------------------------------------------------------------------
// BracketTable

void BracketTable::set(std::size_t i, std::size_t j, Terms terms)
{
	Terms clean;
	for (auto &[k, c] : terms)
		if (c != 0)
			clean.emplace_back(k, std::move(c));
	cells_[i * dim_ + j] = std::move(clean);
}

LieElement BracketTable::bracket(LieElement const &x, LieElement const &y) const
{
	if (x.size() != dim_ || y.size() != dim_)
		throw Error(ErrorCode::DimensionMismatch, "bracket operand length mismatch");
	LieElement r = LieElement::zero(dim_);
	for (std::size_t i = 0; i < dim_; ++i)
	{
		if (x.coords[i] == 0)
			continue;
		for (std::size_t j = 0; j < dim_; ++j)
		{
			if (y.coords[j] == 0)
				continue;
			Rational s = x.coords[i] * y.coords[j];
			for (auto const &[k, c] : at(i, j))
				r.coords[k] += s * c;
		}
	}
	return r;
}

LieElement BracketTable::bracket_basis(std::size_t i, std::size_t j) const
{
	LieElement r = LieElement::zero(dim_);
	for (auto const &[k, c] : at(i, j))
		r.coords[k] = c;
	return r;
}

bool BracketTable::integral() const
{
	for (auto const &cell : cells_)
		for (auto const &[k, c] : cell)
			if (!is_integer(c))
				return false;
	return true;
}

bool BracketTable::antisymmetric() const
{
	for (std::size_t i = 0; i < dim_; ++i)
		for (std::size_t j = i; j < dim_; ++j)
		{
			LieElement s = bracket_basis(i, j) + bracket_basis(j, i);
			if (!s.is_zero())
				return false;
		}
	return true;
}

LieElement BracketTable::jacobi(std::size_t i, std::size_t j, std::size_t k) const
{
	LieElement ei = LieElement::basis(dim_, i);
	LieElement ej = LieElement::basis(dim_, j);
	LieElement ek = LieElement::basis(dim_, k);
	return bracket(ei, bracket_basis(j, k)) + bracket(ej, bracket_basis(k, i)) +
	       bracket(ek, bracket_basis(i, j));
}

bool BracketTable::jacobi_exhaustive() const
{
	for (std::size_t i = 0; i < dim_; ++i)
		for (std::size_t j = 0; j < dim_; ++j)
			for (std::size_t k = 0; k < dim_; ++k)
				if (!jacobi(i, j, k).is_zero())
					return false;
	return true;
}

bool BracketTable::jacobi_sampled(std::size_t samples, std::uint64_t seed) const
{
	if (dim_ == 0)
		return true;
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<std::size_t> pick(0, dim_ - 1);
	for (std::size_t s = 0; s < samples; ++s)
		if (!jacobi(pick(rng), pick(rng), pick(rng)).is_zero())
			return false;
	return true;
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

/// Carter's recursion from the extraspecial signs.
class StructureConstants
{
  public:
	explicit StructureConstants(RootSystem const &rs) : rs_(rs), special_(rs.size(), std::vector<Rational>(rs.size()))
	{
		std::size_t const npos = rs.positive_count();
		for (std::size_t g = 0; g < npos; ++g)
		{
			std::vector<std::pair<std::size_t, std::size_t>> pairs;
			for (std::size_t a = 0; a < g; ++a)
				for (std::size_t b = a + 1; b < g; ++b)
					if (rs.sum_index(a, b) == g)
						pairs.emplace_back(a, b);
			if (pairs.empty())
				continue;
			auto [a0, b0] = pairs.front();
			extraspecial[g] = {a0, b0};
			special_[a0][b0] = rs.root_string(a0, b0).first + 1;
			for (std::size_t p = 1; p < pairs.size(); ++p)
			{
				auto [a, b] = pairs[p];
				special_[a][b] = solve_special(a, b, a0, b0, g);
			}
		}
	}

	/// N_{x,z} for roots with x + z a root.
	Rational n(std::size_t x, std::size_t z) const
	{
		bool px = rs_.is_positive(x), pz = rs_.is_positive(z);
		if (px && pz)
			return x < z ? special_[x][z] : Rational(-special_[z][x]);
		if (!px && !pz)
			return -n(rs_.negative(x), rs_.negative(z));
		std::size_t s = *rs_.sum_index(x, z);
		std::size_t e = rs_.negative(s);
		// N_{x,z}/(e,e) = N_{z,e}/(x,x) = N_{e,x}/(z,z)
		if (rs_.is_positive(e) == pz)
			return norm(e) / norm(x) * n(z, e);
		return norm(e) / norm(z) * n(e, x);
	}

	std::map<std::size_t, std::pair<std::size_t, std::size_t>> extraspecial;

  private:
	Rational norm(std::size_t i) const { return rs_.inner(rs_.root(i), rs_.root(i)); }

	// r = a, s = b, t = -a0, u = -b0 with r + s + t + u = 0:
	// N_{rs}N_{tu}/(r+s,r+s) + N_{st}N_{ru}/(s+t,s+t) + N_{tr}N_{su}/(t+r,t+r) = 0
	Rational solve_special(std::size_t a, std::size_t b, std::size_t a0, std::size_t b0,
	                       std::size_t g) const
	{
		std::size_t t = rs_.negative(a0), u = rs_.negative(b0);
		Rational rest = 0;
		if (auto st = rs_.sum_index(b, t))
			rest += n(b, t) * n(a, u) / norm(*st);
		if (auto tr = rs_.sum_index(t, a))
			rest += n(t, a) * n(b, u) / norm(*tr);
		Rational ntu = n(t, u);
		return -rest * norm(g) / ntu;
	}

	RootSystem const &rs_;
	std::vector<std::vector<Rational>> special_;
};

Matrix<Rational> commutator(Matrix<Rational> const &a, Matrix<Rational> const &b)
{
	return a * b - b * a;
}

} // namespace

std::string IntegralLieAlgebra::basis_id(std::size_t i) const
{
	auto const &b = basis_[i];
	switch (b.kind)
	{
	case BasisKind::RootVector: {
		std::string s = "x(";
		auto const &c = rs_.simple_coords(b.index);
		for (std::size_t k = 0; k < c.size(); ++k)
			s += (k ? "," : "") + std::to_string(c[k]);
		return s + ")";
	}
	case BasisKind::Coroot: return "h" + std::to_string(b.index + 1);
	case BasisKind::Central: return "z" + std::to_string(b.index + 1);
	}
	return "?";
}

long IntegralLieAlgebra::structure_constant(std::size_t a, std::size_t b) const
{
	return n_[a][b];
}

std::optional<std::pair<std::size_t, std::size_t>>
IntegralLieAlgebra::extraspecial_pair(std::size_t gamma) const
{
	auto it = extraspecial_.find(gamma);
	if (it == extraspecial_.end())
		return std::nullopt;
	return it->second;
}

IntegralLieAlgebra build_chevalley_basis(RootSystem const &rs, std::size_t center_rank,
                                         std::optional<Matrix<Rational>> center_basis)
{
	IntegralLieAlgebra L(rs);
	std::size_t const nroots = rs.size();
	std::size_t const r = static_cast<std::size_t>(rs.rank());
	std::size_t const dim = nroots + r + center_rank;

	L.center_rank_ = center_rank;
	if (center_basis)
	{
		auto const &u = *center_basis;
		if (u.rows() != center_rank || u.cols() != center_rank)
			throw Error(ErrorCode::DimensionMismatch, "center basis must be center_rank x center_rank");
		for (auto const &x : u.data())
			if (!is_integer(x))
				throw Error(ErrorCode::NonIntegral, "center basis must be integral");
		Rational d = u.det();
		if (d != 1 && d != -1)
			throw Error(ErrorCode::SingularMatrix, "center basis must be unimodular");
		L.center_basis_ = u;
	}
	else
		L.center_basis_ = Matrix<Rational>::identity(center_rank);

	for (std::size_t i = 0; i < nroots; ++i)
		L.basis_.push_back({BasisKind::RootVector, i});
	for (std::size_t i = 0; i < r; ++i)
		L.basis_.push_back({BasisKind::Coroot, i});
	for (std::size_t i = 0; i < center_rank; ++i)
		L.basis_.push_back({BasisKind::Central, i});

	StructureConstants sc(rs);
	L.extraspecial_ = sc.extraspecial;
	L.n_.assign(nroots, std::vector<long>(nroots, 0));

	BracketTable table(dim);
	for (std::size_t a = 0; a < nroots; ++a)
	{
		for (std::size_t b = 0; b < nroots; ++b)
		{
			if (b == rs.negative(a))
			{
				// [x_a, x_{-a}] = h_a in simple coroots
				auto c = rs.coroot_coords(a);
				BracketTable::Terms t;
				for (std::size_t i = 0; i < r; ++i)
					t.emplace_back(nroots + i, Rational(c[i]));
				table.set(a, b, std::move(t));
			}
			else if (auto s = rs.sum_index(a, b))
			{
				long v = to_int64(sc.n(a, b));
				L.n_[a][b] = v;
				table.set(a, b, {{*s, Rational(v)}});
			}
		}
		for (std::size_t i = 0; i < r; ++i)
		{
			long k = rs.cartan_integer(rs.root(a), rs.root(i));
			table.set(nroots + i, a, {{a, Rational(k)}});
			table.set(a, nroots + i, {{a, Rational(-k)}});
		}
	}
	L.table_ = std::move(table);
	return L;
}

LieElement bracket(IntegralLieAlgebra const &L, LieElement const &x, LieElement const &y)
{
	return L.table().bracket(x, y);
}

Matrix<Rational> adjoint_matrix(IntegralLieAlgebra const &L, LieElement const &x)
{
	std::size_t const n = L.dim();
	if (x.size() != n)
		throw Error(ErrorCode::DimensionMismatch, "adjoint of an element of the wrong length");
	Matrix<Rational> m(n, n);
	for (std::size_t j = 0; j < n; ++j)
	{
		LieElement col = L.table().bracket(x, L.element(j));
		for (std::size_t i = 0; i < n; ++i)
			m(i, j) = col.coords[i];
	}
	return m;
}

LieElement principal_nilpotent(IntegralLieAlgebra const &L)
{
	LieElement x = L.zero();
	for (int i = 0; i < L.root_system().rank(); ++i)
		x.coords[L.root_vector(L.root_system().simple_index(i))] = 1;
	return x;
}

bool verify_sign_constraints(IntegralLieAlgebra const &L, std::vector<Rational> const &c)
{
	RootSystem const &rs = L.root_system();
	if (c.size() != rs.size())
		throw Error(ErrorCode::DimensionMismatch, "one scalar per root expected");
	for (std::size_t a = 0; a < rs.size(); ++a)
		if (c[a] * c[rs.negative(a)] != 1)
			return false;
	for (std::size_t a = 0; a < rs.size(); ++a)
		for (std::size_t b = 0; b < rs.size(); ++b)
			if (auto s = rs.sum_index(a, b))
			{
				Rational lhs = c[a] * c[b];
				if (lhs != c[*s] && lhs != -c[*s])
					return false;
			}
	return true;
}

IntegralLieAlgebra rescale(IntegralLieAlgebra const &L, std::vector<Rational> const &c)
{
	if (!verify_sign_constraints(L, c))
		throw Error(ErrorCode::MembershipFailure, "scalars violate the sign constraints");
	RootSystem const &rs = L.root_system();
	std::size_t const nroots = rs.size();
	IntegralLieAlgebra R = L;
	// e'_i = s_i e_i with s = c on root vectors, 1 elsewhere
	std::vector<Rational> s(L.dim(), Rational(1));
	for (std::size_t a = 0; a < nroots; ++a)
		s[a] = c[a];
	BracketTable t(L.dim());
	for (std::size_t i = 0; i < L.dim(); ++i)
		for (std::size_t j = 0; j < L.dim(); ++j)
		{
			BracketTable::Terms terms;
			for (auto const &[k, v] : L.table().at(i, j))
				terms.emplace_back(k, s[i] * s[j] * v / s[k]);
			t.set(i, j, std::move(terms));
		}
	R.table_ = std::move(t);
	for (std::size_t a = 0; a < nroots; ++a)
		for (std::size_t b = 0; b < nroots; ++b)
			if (auto sum = rs.sum_index(a, b))
				R.n_[a][b] = to_int64(Rational(c[a] * c[b] * L.n_[a][b] / c[*sum]));
	return R;
}

ChevalleyReport verify_chevalley(IntegralLieAlgebra const &L, std::size_t jacobi_samples,
                                 std::uint64_t seed)
{
	ChevalleyReport rep;
	RootSystem const &rs = L.root_system();
	BracketTable const &t = L.table();
	std::size_t const nroots = rs.size();
	int const r = rs.rank();

	rep.integral = t.integral();
	rep.antisymmetric = t.antisymmetric();
	rep.jacobi_exhaustive = r <= 3;
	rep.jacobi = rep.jacobi_exhaustive ? t.jacobi_exhaustive()
	                                   : t.jacobi_sampled(jacobi_samples, seed);

	rep.cartan_abelian = true;
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < r; ++j)
			if (!t.bracket_basis(L.coroot(i), L.coroot(j)).is_zero())
				rep.cartan_abelian = false;

	rep.cartan_action = true;
	for (int i = 0; i < r; ++i)
		for (std::size_t a = 0; a < nroots; ++a)
		{
			LieElement want = L.element(a);
			want *= Rational(rs.cartan_integer(rs.root(a), rs.root(i)));
			if (!(t.bracket_basis(L.coroot(i), a) == want))
				rep.cartan_action = false;
		}

	rep.coroot_span = true;
	rep.sl2_triples = true;
	for (std::size_t a = 0; a < nroots; ++a)
	{
		LieElement h = t.bracket_basis(a, rs.negative(a));
		for (std::size_t k = 0; k < L.dim(); ++k)
		{
			bool in_cartan = k >= nroots && k < nroots + static_cast<std::size_t>(r);
			if ((!in_cartan && h.coords[k] != 0) || !is_integer(h.coords[k]))
				rep.coroot_span = false;
		}
		auto want = rs.coroot_coords(a);
		for (int i = 0; i < r; ++i)
			if (h.coords[L.coroot(i)] != want[i])
				rep.sl2_triples = false;
		LieElement hx = t.bracket(h, L.element(a));
		if (!(hx == Rational(2) * L.element(a)))
			rep.sl2_triples = false;
	}

	rep.magnitude = rep.string_vanishing = true;
	rep.negation_antisymmetric = rep.negation_symmetric = rep.squared_norm_clause = true;
	for (std::size_t a = 0; a < nroots; ++a)
		for (std::size_t b = 0; b < nroots; ++b)
		{
			if (b == a || b == rs.negative(a))
				continue;
			auto [l, k] = rs.root_string(a, b);
			LieElement br = t.bracket_basis(a, b);
			auto s = rs.sum_index(a, b);
			if (k == 0)
			{
				if (!br.is_zero())
					rep.string_vanishing = false;
				continue;
			}
			++rep.pairs_checked;
			Rational c = br.coords[*s];
			if (abs(c) != l + 1)
			{
				rep.magnitude = false;
				++rep.magnitude_mismatches;
			}
			Rational cneg = t.bracket_basis(rs.negative(a), rs.negative(b))
			                    .coords[rs.negative(*s)];
			if (cneg != -c)
				rep.negation_antisymmetric = false;
			if (cneg != c)
			{
				rep.negation_symmetric = false;
				++rep.negation_symmetric_mismatches;
			}
			Rational rhs = Rational(k * (l + 1)) * rs.inner(rs.root(*s), rs.root(*s)) /
			               rs.inner(rs.root(b), rs.root(b));
			if (c * c != rhs)
			{
				rep.squared_norm_clause = false;
				++rep.squared_norm_mismatches;
			}
		}
	return rep;
}

std::vector<Matrix<Rational>> gl_realization(IntegralLieAlgebra const &L)
{
	RootSystem const &rs = L.root_system();
	if (rs.type().family != Family::A || L.center_rank() > 1)
		throw Error(ErrorCode::UnsupportedType, "gl_n realization needs type A with center rank <= 1");
	std::size_t const n = rs.ambient_dim();
	std::size_t const nroots = rs.size();

	auto ends = [&](std::size_t a) {
		auto const &v = rs.root(a);
		std::size_t i = 0, j = 0;
		for (std::size_t k = 0; k < n; ++k)
		{
			if (v[k] == 1)
				i = k;
			if (v[k] == -1)
				j = k;
		}
		return std::pair{i, j};
	};
	auto elementary = [&](std::size_t a) {
		auto [i, j] = ends(a);
		Matrix<Rational> m(n, n);
		m(i, j) = 1;
		return m;
	};

	std::vector<Rational> sign(nroots, Rational(1));
	for (std::size_t g = 0; g < rs.positive_count(); ++g)
	{
		auto pair = L.extraspecial_pair(g);
		if (!pair)
			continue;
		auto [a, b] = *pair;
		Matrix<Rational> c = commutator(sign[a] * elementary(a), sign[b] * elementary(b));
		auto [i, j] = ends(g);
		sign[g] = c(i, j) / Rational(L.structure_constant(a, b));
		sign[rs.negative(g)] = sign[g];
	}

	std::vector<Matrix<Rational>> images;
	for (std::size_t a = 0; a < nroots; ++a)
		images.push_back(sign[a] * elementary(a));
	for (int i = 0; i < rs.rank(); ++i)
	{
		Matrix<Rational> h(n, n);
		h(i, i) = 1;
		h(i + 1, i + 1) = -1;
		images.push_back(h);
	}
	if (L.center_rank() == 1)
		images.push_back(L.center_basis()(0, 0) * Matrix<Rational>::identity(n));
	return images;
}

bool check_realization(IntegralLieAlgebra const &L, std::vector<Matrix<Rational>> const &images)
{
	if (images.size() != L.dim())
		throw Error(ErrorCode::DimensionMismatch, "one image per basis vector expected");
	std::size_t const n = images.empty() ? 0 : images[0].rows();
	for (std::size_t i = 0; i < L.dim(); ++i)
		for (std::size_t j = 0; j < L.dim(); ++j)
		{
			Matrix<Rational> lhs(n, n);
			for (auto const &[k, c] : L.table().at(i, j))
				lhs += c * images[k];
			if (!(lhs == commutator(images[i], images[j])))
				return false;
		}
	return true;
}

} // namespace arithchar
