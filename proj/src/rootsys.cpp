#include "arithchar/rootsys.hpp"
#include "arithchar/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

namespace arithchar {

namespace {

RatVec unit(std::size_t dim, std::size_t i, long c = 1)
{
	RatVec v(dim, Rational(0));
	v[i] = c;
	return v;
}

RatVec add(RatVec a, RatVec const &b, long c = 1)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += c * b[i];
	return a;
}

RatVec neg(RatVec a)
{
	for (auto &x : a)
		x = -x;
	return a;
}

bool supported(CartanType t)
{
	switch (t.family)
	{
	case Family::A: return t.rank >= 1 && t.rank <= 4;
	case Family::B: return t.rank >= 2 && t.rank <= 4;
	case Family::C: return t.rank >= 2 && t.rank <= 4;
	case Family::D: return t.rank >= 3 && t.rank <= 4;
	case Family::G: return t.rank == 2;
	}
	return false;
}

std::size_t factorial(std::size_t n)
{
	std::size_t f = 1;
	for (std::size_t k = 2; k <= n; ++k)
		f *= k;
	return f;
}

} // namespace

std::string to_string(CartanType t)
{
	char f = "ABCDG"[static_cast<int>(t.family)];
	return std::string(1, f) + std::to_string(t.rank);
}

void require_supported(CartanType t)
{
	if (!supported(t))
		throw Error(ErrorCode::UnsupportedType,
		            "unsupported type " + to_string(t));
}

CartanType CartanType::parse(std::string const &text)
{
	if (text.size() < 2)
		throw Error(ErrorCode::UnsupportedType, "unsupported type '" + text + "'");
	Family f;
	switch (text[0])
	{
	case 'A': f = Family::A; break;
	case 'B': f = Family::B; break;
	case 'C': f = Family::C; break;
	case 'D': f = Family::D; break;
	case 'G': f = Family::G; break;
	default:
		throw Error(ErrorCode::UnsupportedType, "unsupported type '" + text + "'");
	}
	std::string digits = text.substr(1);
	if (digits.size() != 1 || !std::isdigit(static_cast<unsigned char>(digits[0])))
		throw Error(ErrorCode::UnsupportedType, "unsupported type '" + text + "'");
	CartanType t{f, digits[0] - '0'};
	require_supported(t);
	return t;
}

std::vector<CartanType> supported_types()
{
	return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
	        {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 2},
	        {Family::C, 3}, {Family::C, 4}, {Family::D, 3}, {Family::D, 4},
	        {Family::G, 2}};
}

std::size_t classical_weyl_order(CartanType t)
{
	std::size_t n = static_cast<std::size_t>(t.rank);
	switch (t.family)
	{
	case Family::A: return factorial(n + 1);
	case Family::B:
	case Family::C: return (std::size_t{1} << n) * factorial(n);
	case Family::D: return (std::size_t{1} << (n - 1)) * factorial(n);
	case Family::G: return 12;
	}
	return 0;
}

std::size_t classical_root_count(CartanType t)
{
	std::size_t n = static_cast<std::size_t>(t.rank);
	switch (t.family)
	{
	case Family::A: return n * (n + 1);
	case Family::B:
	case Family::C: return 2 * n * n;
	case Family::D: return 2 * n * (n - 1);
	case Family::G: return 12;
	}
	return 0;
}

RootSystem::RootSystem(CartanType t) : type_(t)
{
	require_supported(t);
	std::size_t const n = static_cast<std::size_t>(t.rank);
	std::vector<Root> simple;
	std::vector<Root> all;

	switch (t.family)
	{
	case Family::A:
		ambient_dim_ = n + 1;
		for (std::size_t i = 0; i < n; ++i)
			simple.push_back(add(unit(n + 1, i), unit(n + 1, i + 1), -1));
		for (std::size_t i = 0; i <= n; ++i)
			for (std::size_t j = 0; j <= n; ++j)
				if (i != j)
					all.push_back(add(unit(n + 1, i), unit(n + 1, j), -1));
		break;
	case Family::B:
	case Family::C:
	case Family::D:
		ambient_dim_ = n;
		for (std::size_t i = 0; i + 1 < n; ++i)
			simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
		if (t.family == Family::B)
			simple.push_back(unit(n, n - 1));
		else if (t.family == Family::C)
			simple.push_back(unit(n, n - 1, 2));
		else
			simple.push_back(add(unit(n, n - 2), unit(n, n - 1)));
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j)
				for (long si : {1, -1})
					for (long sj : {1, -1})
						all.push_back(add(unit(n, i, si), unit(n, j, sj)));
		if (t.family != Family::D)
		{
			long const c = t.family == Family::B ? 1 : 2;
			for (std::size_t i = 0; i < n; ++i)
			{
				all.push_back(unit(n, i, c));
				all.push_back(unit(n, i, -c));
			}
		}
		if (t.family == Family::B)
			scale_ = 2;
		break;
	case Family::G:
		ambient_dim_ = 3;
		simple.push_back(RatVec{1, -1, 0});
		simple.push_back(RatVec{-2, 1, 1});
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < 3; ++j)
				if (i != j)
					all.push_back(add(unit(3, i), unit(3, j), -1));
		for (std::size_t i = 0; i < 3; ++i)
		{
			RatVec v(3, Rational(-1));
			v[i] = 2;
			all.push_back(v);
			all.push_back(neg(v));
		}
		break;
	}

	// simple-root coordinates via the (scale-free) Gram system
	std::size_t const r = simple.size();
	Matrix<Rational> g(r, r);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < r; ++j)
			g(i, j) = dot(simple[i], simple[j]);
	Matrix<Rational> ginv = g.inverse();

	auto coords_of = [&](Root const &v) {
		RatVec rhs(r);
		for (std::size_t i = 0; i < r; ++i)
			rhs[i] = dot(simple[i], v);
		RatVec c = ginv * rhs;
		std::vector<long> out;
		for (auto const &x : c)
			out.push_back(to_int64(x));
		return out;
	};

	std::vector<std::pair<std::vector<long>, Root>> pos;
	for (auto const &v : all)
	{
		auto c = coords_of(v);
		if (std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; }))
			pos.emplace_back(c, v);
	}
	std::sort(pos.begin(), pos.end(), [](auto const &a, auto const &b) {
		long ha = 0, hb = 0;
		for (long x : a.first)
			ha += x;
		for (long x : b.first)
			hb += x;
		if (ha != hb)
			return ha < hb;
		return a.first > b.first;
	});

	for (auto const &[c, v] : pos)
	{
		roots_.push_back(v);
		coords_.push_back(c);
	}
	for (auto const &[c, v] : pos)
	{
		roots_.push_back(neg(v));
		std::vector<long> nc = c;
		for (auto &x : nc)
			x = -x;
		coords_.push_back(nc);
	}
	for (std::size_t i = 0; i < roots_.size(); ++i)
		lookup_.emplace(roots_[i], i);

	for (int i = 0; i < rank(); ++i)
	{
		std::vector<std::size_t> perm(roots_.size());
		for (std::size_t k = 0; k < roots_.size(); ++k)
			perm[k] = index_of(reflect(roots_[k], roots_[i]));
		simple_perms_.push_back(std::move(perm));
	}
}

std::vector<Root> RootSystem::simple_roots() const
{
	return std::vector<Root>(roots_.begin(), roots_.begin() + rank());
}

std::vector<Root> RootSystem::positive_roots() const
{
	return std::vector<Root>(roots_.begin(), roots_.begin() + positive_count());
}

long RootSystem::height(std::size_t i) const
{
	long h = 0;
	for (long x : coords_[i])
		h += x;
	return h;
}

Rational RootSystem::inner(RatVec const &u, RatVec const &v) const
{
	return scale_ * dot(u, v);
}

Matrix<Rational> RootSystem::gram() const
{
	Matrix<Rational> g(rank(), rank());
	for (int i = 0; i < rank(); ++i)
		for (int j = 0; j < rank(); ++j)
			g(i, j) = inner(roots_[i], roots_[j]);
	return g;
}

Matrix<Rational> RootSystem::cartan_matrix() const
{
	Matrix<Rational> a(rank(), rank());
	for (int i = 0; i < rank(); ++i)
		for (int j = 0; j < rank(); ++j)
			a(i, j) = cartan_integer(roots_[i], roots_[j]);
	return a;
}

std::optional<std::size_t> RootSystem::find(RatVec const &v) const
{
	auto it = lookup_.find(v);
	if (it == lookup_.end())
		return std::nullopt;
	return it->second;
}

std::size_t RootSystem::index_of(RatVec const &v) const
{
	auto i = find(v);
	if (!i)
		throw Error(ErrorCode::NotARoot, "vector is not a root");
	return *i;
}

std::optional<std::size_t> RootSystem::sum_index(std::size_t a, std::size_t b) const
{
	return find(add(roots_[a], roots_[b]));
}

Rational RootSystem::coroot_pairing(RatVec const &v, Root const &beta) const
{
	if (v.size() != ambient_dim_ || beta.size() != ambient_dim_)
		throw Error(ErrorCode::DimensionMismatch, "ambient dimension mismatch");
	return 2 * dot(v, beta) / dot(beta, beta);
}

long RootSystem::cartan_integer(Root const &alpha, Root const &beta) const
{
	if (!find(beta) || !find(alpha))
		throw Error(ErrorCode::NotARoot, "cartan_integer expects roots");
	return to_int64(coroot_pairing(alpha, beta));
}

RatVec RootSystem::reflect(RatVec const &v, Root const &alpha) const
{
	if (!find(alpha))
		throw Error(ErrorCode::NotARoot, "reflection in a non-root");
	Rational c = coroot_pairing(v, alpha);
	RatVec out = v;
	for (std::size_t i = 0; i < out.size(); ++i)
		out[i] -= c * alpha[i];
	return out;
}

std::pair<int, int> RootSystem::root_string(Root const &alpha, Root const &beta) const
{
	return root_string(index_of(alpha), index_of(beta));
}

std::pair<int, int> RootSystem::root_string(std::size_t a, std::size_t b) const
{
	if (a == b || negative(a) == b)
		throw Error(ErrorCode::ProportionalRoots, "root string of proportional roots");
	Root const &alpha = roots_[a];
	int l = 0;
	RatVec v = roots_[b];
	while (find(v = add(v, alpha, -1)))
		++l;
	int k = 0;
	v = roots_[b];
	while (find(v = add(v, alpha, 1)))
		++k;
	return {l, k};
}

std::vector<long> RootSystem::coroot_coords(std::size_t i) const
{
	// alpha^v = sum_j c_j alpha_j (alpha_j,alpha_j)/(alpha,alpha) over simple coroots
	Root const &a = roots_[i];
	Rational na = inner(a, a);
	std::vector<long> out;
	for (int j = 0; j < rank(); ++j)
	{
		Rational nj = inner(roots_[j], roots_[j]);
		out.push_back(to_int64(Rational(coords_[i][j] * nj / na)));
	}
	return out;
}

std::vector<WeylElement> RootSystem::weyl_group() const
{
	std::size_t const dim = ambient_dim_;
	std::vector<Matrix<Rational>> refl;
	for (int i = 0; i < rank(); ++i)
	{
		Matrix<Rational> m(dim, dim);
		for (std::size_t c = 0; c < dim; ++c)
		{
			RatVec col = reflect(unit(dim, c), roots_[i]);
			for (std::size_t r = 0; r < dim; ++r)
				m(r, c) = col[r];
		}
		refl.push_back(std::move(m));
	}

	std::vector<WeylElement> group;
	std::map<std::vector<std::size_t>, std::size_t> seen;
	WeylElement id;
	id.perm.resize(roots_.size());
	for (std::size_t k = 0; k < roots_.size(); ++k)
		id.perm[k] = k;
	id.ambient = Matrix<Rational>::identity(dim);
	seen.emplace(id.perm, 0);
	group.push_back(std::move(id));

	for (std::size_t head = 0; head < group.size(); ++head)
	{
		for (int i = 0; i < rank(); ++i)
		{
			WeylElement const &w = group[head];
			std::vector<std::size_t> perm(roots_.size());
			for (std::size_t k = 0; k < roots_.size(); ++k)
				perm[k] = simple_perms_[i][w.perm[k]];
			if (seen.count(perm))
				continue;
			WeylElement next;
			next.word.push_back(i);
			next.word.insert(next.word.end(), w.word.begin(), w.word.end());
			next.ambient = refl[i] * w.ambient;
			next.perm = perm;
			seen.emplace(perm, group.size());
			group.push_back(std::move(next));
		}
	}
	return group;
}

} // namespace arithchar
