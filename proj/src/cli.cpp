#include "arithchar/cli.hpp"
#include "arithchar/arakelov.hpp"
#include "arithchar/charmorph.hpp"
#include "arithchar/chevalley.hpp"
#include "arithchar/curve.hpp"
#include "arithchar/error.hpp"
#include "arithchar/rootsys.hpp"
#include "arithchar/torsor.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace arithchar::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

constexpr double tol = 1e-9;
constexpr std::uint64_t default_fiber_bound = 100;

std::string real(double x) { return fmt::format("{:.17g}", x); }

json rat(Rational const &q) { return to_string(q); }

json ratvec(RatVec const &v)
{
	json a = json::array();
	for (auto const &x : v)
		a.push_back(rat(x));
	return a;
}

template <class T> json matrix_json(Matrix<T> const &m)
{
	json a = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		json row = json::array();
		for (std::size_t j = 0; j < m.cols(); ++j)
		{
			if constexpr (std::is_same_v<T, FieldElement>)
				row.push_back(m(i, j).to_string());
			else
				row.push_back(to_string(m(i, j)));
		}
		a.push_back(row);
	}
	return a;
}

json parse_json_text(std::string const &text, std::string const &what)
{
	try
	{
		return json::parse(text);
	}
	catch (json::parse_error const &e)
	{
		throw UsageError(what + " is not valid JSON: " + e.what());
	}
}

json read_json_file(std::string const &path)
{
	std::stringstream ss;
	if (path == "-")
		ss << std::cin.rdbuf();
	else
	{
		std::ifstream in(path);
		if (!in)
			throw UsageError("cannot read " + path);
		ss << in.rdbuf();
	}
	return parse_json_text(ss.str(), path);
}

Rational rational_of(json const &v)
{
	if (v.is_number_integer())
		return Rational(v.get<long>());
	if (v.is_string())
		return parse_rational(v.get<std::string>());
	throw UsageError("expected an integer or a rational string, got " + v.dump());
}

FieldElement element_of(NumberField const &K, json const &v)
{
	if (v.is_number_integer())
		return FieldElement(K, Rational(v.get<long>()), 0);
	if (v.is_string())
		return parse_field_element(K, v.get<std::string>()).in(K);
	throw UsageError("expected a field element, got " + v.dump());
}

void require_square(json const &m)
{
	if (!m.is_array() || m.empty())
		throw UsageError("matrix must be a nonempty JSON array of rows");
	for (auto const &row : m)
		if (!row.is_array() || row.size() != m.size())
			throw UsageError("matrix must be square");
}

Matrix<Rational> rational_matrix(json const &m)
{
	require_square(m);
	Matrix<Rational> a(m.size(), m.size());
	for (std::size_t i = 0; i < m.size(); ++i)
		for (std::size_t j = 0; j < m.size(); ++j)
			a(i, j) = rational_of(m[i][j]);
	return a;
}

Matrix<FieldElement> field_matrix(NumberField const &K, json const &m)
{
	require_square(m);
	Matrix<FieldElement> a(m.size(), m.size());
	for (std::size_t i = 0; i < m.size(); ++i)
		for (std::size_t j = 0; j < m.size(); ++j)
			a(i, j) = element_of(K, m[i][j]);
	return a;
}

json ideal_json(FractionalIdeal const &I)
{
	return json{{"hnf", matrix_json(I.hnf())}, {"den", to_string(I.denominator())}};
}

FractionalIdeal ideal_of(NumberField const &K, json const &v)
{
	auto hnf_of = [&](json const &h, Integer den) {
		if (!h.is_array() || h.empty())
			throw UsageError("ideal HNF must be a nonempty JSON array");
		std::vector<std::vector<Integer>> rows;
		for (auto const &row : h)
		{
			if (!row.is_array())
				throw UsageError("ideal HNF rows must be arrays");
			rows.emplace_back();
			for (auto const &x : row)
			{
				Rational q = rational_of(x);
				if (!is_integer(q))
					throw UsageError("ideal HNF entries must be integers");
				rows.back().push_back(q.get_num());
			}
		}
		return FractionalIdeal::from_hnf(K, Matrix<Integer>(rows), den);
	};
	if (v.is_array())
		return hnf_of(v, 1);
	if (v.is_object() && v.contains("generators"))
	{
		std::vector<FieldElement> g;
		for (auto const &x : v["generators"])
			g.push_back(element_of(K, x));
		return FractionalIdeal::generated_by(K, g);
	}
	if (v.is_object() && v.contains("hnf"))
	{
		Rational den = v.contains("den") ? rational_of(v["den"]) : Rational(1);
		if (!is_integer(den) || den <= 0)
			throw UsageError("ideal denominator must be a positive integer");
		return hnf_of(v["hnf"], den.get_num());
	}
	throw UsageError("ideal must be an HNF matrix, {\"hnf\", \"den\"} or {\"generators\"}");
}

double real_of(json const &v)
{
	if (v.is_number())
		return v.get<double>();
	if (v.is_string())
	{
		std::string s = v.get<std::string>();
		std::size_t used = 0;
		double x = 0;
		try
		{
			x = std::stod(s, &used);
		}
		catch (std::exception const &)
		{
			used = 0;
		}
		if (used == 0 || used != s.size())
			throw UsageError("not a decimal number: " + s);
		return x;
	}
	throw UsageError("expected a real number, got " + v.dump());
}

CartanType type_of(std::string const &text) { return CartanType::parse(text); }

// ---- verbs ----

json do_rootsys(CartanType t, bool weyl)
{
	RootSystem rs(t);
	json out;
	out["kind"] = "rootsys";
	out["type"] = to_string(t);
	out["rank"] = rs.rank();
	out["ambient_dim"] = rs.ambient_dim();
	out["form_scale"] = rat(rs.form_scale());
	json simple = json::array();
	for (auto const &r : rs.simple_roots())
		simple.push_back(ratvec(r));
	out["simple_roots"] = simple;
	out["positive_count"] = rs.positive_count();
	json roots = json::array();
	for (auto const &r : rs.roots())
		roots.push_back(ratvec(r));
	out["roots"] = roots;
	out["cartan_matrix"] = matrix_json(rs.cartan_matrix());
	if (weyl)
	{
		auto W = rs.weyl_group();
		json el = json::array();
		for (auto const &w : W)
			el.push_back(json{{"word", w.word}, {"matrix", matrix_json(w.ambient)}});
		out["weyl"] = json{{"order", W.size()}, {"elements", el}};
	}
	return out;
}

json report_json(ChevalleyReport const &r)
{
	return json{{"ok", r.ok()},
	            {"integral", r.integral},
	            {"antisymmetric", r.antisymmetric},
	            {"jacobi", r.jacobi},
	            {"jacobi_exhaustive", r.jacobi_exhaustive},
	            {"cartan_abelian", r.cartan_abelian},
	            {"cartan_action", r.cartan_action},
	            {"coroot_span", r.coroot_span},
	            {"sl2_triples", r.sl2_triples},
	            {"magnitude", r.magnitude},
	            {"string_vanishing", r.string_vanishing},
	            {"negation_antisymmetric", r.negation_antisymmetric},
	            {"negation_symmetric", r.negation_symmetric},
	            {"squared_norm_clause", r.squared_norm_clause},
	            {"pairs_checked", r.pairs_checked}};
}

json do_chevalley(CartanType t, std::size_t center, bool verify)
{
	auto L = build_chevalley_basis(RootSystem(t), center);
	json out;
	out["kind"] = "chevalley";
	out["type"] = to_string(t);
	out["center"] = center;
	out["dim"] = L.dim();
	json basis = json::array();
	for (std::size_t i = 0; i < L.dim(); ++i)
		basis.push_back(L.basis_id(i));
	out["basis"] = basis;
	json br = json::array();
	for (std::size_t i = 0; i < L.dim(); ++i)
		for (std::size_t j = i + 1; j < L.dim(); ++j)
		{
			auto const &terms = L.table().at(i, j);
			if (terms.empty())
				continue;
			json tj = json::array();
			for (auto const &[k, c] : terms)
				tj.push_back(json::array({L.basis_id(k), rat(c)}));
			br.push_back(json{{"x", L.basis_id(i)}, {"y", L.basis_id(j)}, {"bracket", tj}});
		}
	out["brackets"] = br;
	out["principal_nilpotent"] = ratvec(principal_nilpotent(L).coords);
	if (verify)
		out["verification"] = report_json(verify_chevalley(L));
	return out;
}

json do_chi_matrix(Matrix<Rational> const &a)
{
	json out;
	out["kind"] = "chi";
	out["type"] = fmt::format("gl_{}", a.rows());
	out["input"] = json{{"matrix", matrix_json(a)}};
	out["invariants"] = ratvec(chi_gl(a).values);
	return out;
}

json do_chi_torus(CartanType t, RatVec const &point)
{
	json out;
	out["kind"] = "chi";
	out["type"] = to_string(t);
	out["input"] = json{{"type", to_string(t)}, {"torus_point", ratvec(point)}};
	json polys = json::array();
	for (auto const &p : fundamental_invariants(t))
		polys.push_back(p.to_string());
	out["fundamental_invariants"] = polys;
	out["invariants"] = ratvec(chi_torus(t, point).values);
	return out;
}

json do_degree(NumberField const &K, FractionalIdeal const &I, std::vector<double> const &rho)
{
	MetrizedLineBundle L{I, rho};
	double deg = arithmetic_degree(K, L);
	json out;
	out["kind"] = "degree";
	out["field"] = K.name();
	out["ideal"] = ideal_json(I);
	out["norm"] = rat(I.norm());
	json m = json::array();
	for (double r : rho)
		m.push_back(real(r));
	out["metrics"] = m;
	out["section"] = I.basis().front().to_string();
	out["degree"] = real(deg);
	return out;
}

ArithmeticTorsor torsor_of(json const &t)
{
	if (!t.is_object() || !t.contains("field"))
		throw UsageError("torsor needs a \"field\"");
	auto K = NumberField::parse(t["field"].get<std::string>());
	ArithmeticTorsor T;
	T.field = K;
	if (t.contains("rank"))
		T.rank = t["rank"].get<std::size_t>();
	else if (t.contains("ideals"))
		T.rank = t["ideals"].size();
	else
		throw UsageError("torsor needs a \"rank\" or \"ideals\"");
	if (t.contains("ideals"))
		for (auto const &I : t["ideals"])
			T.ideals.push_back(ideal_of(K, I));
	else
		T.ideals.assign(T.rank, FractionalIdeal::unit(K));
	auto m = static_cast<Eigen::Index>(T.rank);
	if (t.contains("metrics"))
	{
		for (auto const &h : t["metrics"])
		{
			if (!h.is_array() || h.size() != T.rank)
				throw Error(ErrorCode::DimensionMismatch, "Gram matrix has the wrong size");
			Eigen::MatrixXcd g(m, m);
			for (Eigen::Index i = 0; i < m; ++i)
			{
				auto const &row = h[static_cast<std::size_t>(i)];
				if (!row.is_array() || row.size() != T.rank)
					throw Error(ErrorCode::DimensionMismatch, "Gram matrix has the wrong size");
				for (Eigen::Index j = 0; j < m; ++j)
				{
					auto const &x = row[static_cast<std::size_t>(j)];
					if (x.is_array() && x.size() == 2)
						g(i, j) = {real_of(x[0]), real_of(x[1])};
					else
						g(i, j) = real_of(x);
				}
			}
			T.gram.push_back(g);
		}
	}
	else
		T.gram.assign(static_cast<std::size_t>(K.places()), Eigen::MatrixXcd::Identity(m, m));
	validate(T);
	return T;
}

json torsor_json(ArithmeticTorsor const &T)
{
	json ideals = json::array();
	for (auto const &I : T.ideals)
		ideals.push_back(ideal_json(I));
	json metrics = json::array();
	for (std::size_t s = 0; s < T.gram.size(); ++s)
	{
		bool cx = !T.field.place_is_real(static_cast<int>(s));
		json h = json::array();
		for (Eigen::Index i = 0; i < T.gram[s].rows(); ++i)
		{
			json row = json::array();
			for (Eigen::Index j = 0; j < T.gram[s].cols(); ++j)
			{
				auto z = T.gram[s](i, j);
				if (cx)
					row.push_back(json::array({real(z.real()), real(z.imag())}));
				else
					row.push_back(real(z.real()));
			}
			h.push_back(row);
		}
		metrics.push_back(h);
	}
	return json{{"field", T.field.name()}, {"rank", T.rank}, {"ideals", ideals}, {"metrics", metrics}};
}

json do_slope(ArithmeticTorsor const &T, long k)
{
	auto det = determinant_bundle(T);
	json out;
	out["kind"] = "slope";
	out["torsor"] = torsor_json(T);
	out["char"] = k;
	out["det_ideal"] = ideal_json(det.ideal);
	json rho = json::array();
	for (double r : det.rho)
		rho.push_back(real(r));
	out["det_metrics"] = rho;
	json compat = json::array();
	for (int s = 0; s < T.field.places(); ++s)
	{
		auto cd = canonical_form(T.rank, T.field.place_is_real(s) ? PlaceKind::Real : PlaceKind::Complex);
		compat.push_back(verify_compatibility(cd, adjoint_metric(T, s).H).ok());
	}
	out["compatible"] = compat;
	out["degree"] = real(arithmetic_degree(T.field, det));
	out["slope"] = real(slope(T, k));
	return out;
}

json pattern_json(std::vector<std::pair<unsigned, unsigned>> const &pat)
{
	json a = json::array();
	for (auto [f, e] : pat)
		a.push_back(json::array({f, e}));
	return a;
}

json do_curve(NumberField const &K, Matrix<FieldElement> const &phi, std::optional<FractionalIdeal> const &twist,
              bool cameral, std::optional<std::uint64_t> fibers)
{
	auto L = twist ? *twist : FractionalIdeal::unit(K);
	auto h = make_higgs_field(K, phi, L);
	auto S = spectral_curve(h);
	auto C = cameral ? cameral_curve(h) : S;
	if (S.degenerate && fibers)
		throw Error(ErrorCode::DegenerateCurve, "discriminant is zero; fiber analysis refused");

	json out;
	out["kind"] = cameral ? "cameral" : "spectral";
	out["field"] = K.name();
	out["matrix"] = matrix_json(h.matrix);
	out["twist"] = ideal_json(L);
	out["n"] = C.n;
	json poly = json::array();
	for (auto const &c : C.poly)
		poly.push_back(c.to_string());
	out["poly"] = poly;
	json inv = json::array();
	for (auto const &c : C.invariants)
		inv.push_back(c.to_string());
	out["invariants"] = inv;
	auto pt = characteristic_point(h);
	json certs = json::array();
	for (std::size_t k = 0; k < pt.c.size(); ++k)
	{
		json cj{{"k", k + 1}, {"bound", ideal_json(pt.bound[k])}, {"member", pt.certificate[k].has_value()}};
		if (pt.certificate[k])
		{
			json co = json::array();
			for (auto const &z : *pt.certificate[k])
				co.push_back(to_string(z));
			cj["coordinates"] = co;
		}
		certs.push_back(cj);
	}
	out["certificates"] = certs;
	out["presentation"] = C.presentation();
	out["degree"] = C.degree();
	out["disc"] = C.discriminant.to_string();
	out["degenerate"] = C.degenerate;
	if (S.degenerate)
		return out;

	std::uint64_t bound = fibers.value_or(default_fiber_bound);
	auto rep = ramification(S, bound);
	out["fibers_bound"] = bound;
	json ram = json::array();
	for (auto const &e : rep.ramified)
	{
		if (K.degree() == 1)
			ram.push_back(json{{"p", e.p}, {"pattern", pattern_json(e.fibers.front().pattern)}});
		else
		{
			json primes = json::array();
			for (auto const &fb : e.fibers)
				primes.push_back(json{{"f", fb.f}, {"e", fb.e}, {"pattern", pattern_json(fb.pattern)}});
			ram.push_back(json{{"p", e.p}, {"primes", primes}});
		}
	}
	out["ramified"] = ram;
	out["nonintegral"] = rep.nonintegral;
	out["archimedean_collisions"] = rep.archimedean_collisions;
	auto chk = covering_degree_check(C);
	out["covering"] = json{{"p", chk.p}, {"count", chk.count}, {"expected", chk.expected}, {"passed", chk.passed}};
	return out;
}

// ---- verify ----

bool same_reals(json const &a, json const &b)
{
	auto x = real_of(a), y = real_of(b);
	return std::fabs(x - y) <= tol * std::max(1.0, std::fabs(y));
}

json do_verify(json const &in)
{
	if (!in.is_object() || !in.contains("kind"))
		throw UsageError("verify input must be a JSON object with a \"kind\"");
	std::string kind = in["kind"].get<std::string>();
	json checks;
	json regen;
	if (kind == "rootsys")
	{
		auto t = type_of(in["type"].get<std::string>());
		regen = do_rootsys(t, in.contains("weyl"));
		RootSystem rs(t);
		bool closed = true;
		for (auto const &a : rs.roots())
			for (auto const &b : rs.roots())
				closed = closed && rs.find(rs.reflect(b, a)).has_value();
		checks["root_count"] = rs.size() == classical_root_count(t);
		checks["reflection_closure"] = closed;
		checks["weyl_order"] = rs.weyl_group().size() == classical_weyl_order(t);
	}
	else if (kind == "chevalley")
	{
		auto t = type_of(in["type"].get<std::string>());
		std::size_t center = in["center"].get<std::size_t>();
		regen = do_chevalley(t, center, in.contains("verification"));
		checks["chevalley_basis"] = verify_chevalley(build_chevalley_basis(RootSystem(t), center)).ok();
	}
	else if (kind == "chi")
	{
		auto const &input = in["input"];
		if (input.contains("matrix"))
		{
			auto a = rational_matrix(input["matrix"]);
			regen = do_chi_matrix(a);
			// Newton: power sums are traces of powers
			auto p = power_sums(chi_gl(a));
			bool ok = true;
			auto ak = a;
			for (std::size_t k = 0; k < p.size(); ++k)
			{
				Rational tr = 0;
				for (std::size_t i = 0; i < ak.rows(); ++i)
					tr += ak(i, i);
				ok = ok && tr == p[k];
				ak = ak * a;
			}
			checks["newton_traces"] = ok;
		}
		else
		{
			auto t = type_of(input["type"].get<std::string>());
			RatVec point;
			for (auto const &x : input["torus_point"])
				point.push_back(rational_of(x));
			regen = do_chi_torus(t, point);
			bool inv = true;
			for (auto const &w : RootSystem(t).weyl_group())
				inv = inv && chi_torus(t, w.ambient * point) == chi_torus(t, point);
			checks["weyl_invariance"] = inv;
		}
	}
	else if (kind == "degree")
	{
		auto K = NumberField::parse(in["field"].get<std::string>());
		auto I = ideal_of(K, in["ideal"]);
		std::vector<double> rho;
		for (auto const &x : in["metrics"])
			rho.push_back(real_of(x));
		regen = do_degree(K, I, rho);
		MetrizedLineBundle L{I, rho};
		double d0 = arithmetic_degree(K, L);
		bool indep = true;
		for (auto const &s : I.basis())
			indep = indep && std::fabs(arithmetic_degree(K, L, s) - d0) <= tol;
		checks["section_independence"] = indep;
	}
	else if (kind == "slope")
	{
		auto T = torsor_of(in["torsor"]);
		long k = in["char"].get<long>();
		regen = do_slope(T, k);
		double deg = arithmetic_degree(T.field, determinant_bundle(T));
		checks["linear_in_char"] = std::fabs(slope(T, k) - static_cast<double>(k) * deg) <= tol * std::max(1.0, std::fabs(deg));
		bool compat = true;
		for (auto const &c : regen["compatible"])
			compat = compat && c.get<bool>();
		checks["compatible_metrics"] = compat;
	}
	else if (kind == "spectral" || kind == "cameral")
	{
		auto K = NumberField::parse(in["field"].get<std::string>());
		auto phi = field_matrix(K, in["matrix"]);
		auto L = ideal_of(K, in["twist"]);
		std::optional<std::uint64_t> bound;
		if (in.contains("fibers_bound"))
			bound = in["fibers_bound"].get<std::uint64_t>();
		regen = do_curve(K, phi, L, kind == "cameral", bound);
		std::vector<FieldElement> poly;
		for (auto const &c : in["poly"])
			poly.push_back(element_of(K, c));
		auto disc = polynomial_discriminant(poly);
		checks["disc_from_poly"] = disc == element_of(K, in["disc"]);
		if (in.contains("ramified"))
		{
			// p ramifies iff p divides the norm of the discriminant
			Rational N = disc.in(K).norm();
			std::set<std::uint64_t> expect, got;
			for (std::uint64_t p = 2; p <= *bound; ++p)
				if (is_prime(p) && is_integer(N) && N.get_num() % p == 0)
					expect.insert(p);
			for (auto const &e : in["ramified"])
				got.insert(e["p"].get<std::uint64_t>());
			checks["ramified_are_disc_divisors"] = in["nonintegral"].empty() ? expect == got : true;
		}
	}
	else
		throw UsageError("verify: unknown kind \"" + kind + "\"");

	// reproduce the document, comparing reals to 1e-9
	std::function<bool(json const &, json const &, std::string const &)> same;
	same = [&](json const &a, json const &b, std::string const &key) -> bool {
		static std::set<std::string> const reals{"degree", "slope", "metrics", "det_metrics"};
		if (a.is_number() && b.is_number())
			return a == b;
		if (a.type() != b.type())
			return false;
		if (a.is_object())
		{
			if (a.size() != b.size())
				return false;
			for (auto it = a.begin(); it != a.end(); ++it)
				if (!b.contains(it.key()) || !same(it.value(), b[it.key()], it.key()))
					return false;
			return true;
		}
		if (a.is_array())
		{
			if (a.size() != b.size())
				return false;
			for (std::size_t i = 0; i < a.size(); ++i)
				if (!same(a[i], b[i], key))
					return false;
			return true;
		}
		if (a.is_string() && reals.count(key))
			return same_reals(a, b);
		return a == b;
	};
	checks["reproduced"] = same(in, regen, "");

	bool ok = true;
	for (auto const &[k, v] : checks.items())
		ok = ok && v.get<bool>();
	json out;
	out["kind"] = "verification";
	out["input_kind"] = kind;
	out["ok"] = ok;
	out["checks"] = checks;
	return out;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Root systems, Chevalley bases, characteristic morphisms, arithmetic degrees and spectral curves"};
	app.require_subcommand(1);

	std::string type, matrix, torus_point, field = "Q", ideal, metrics, torsor_file, twist, input, file;
	bool weyl = false, verify_flag = false, cameral = false;
	std::size_t center = 0;
	long chr = 1;
	std::uint64_t fibers = 0;

	auto *rootsys = app.add_subcommand("rootsys", "roots, Cartan matrix and Weyl group of a split type");
	rootsys->add_option("--type", type, "A1-A4, B2-B4, C2-C4, D3-D4, G2")->required();
	rootsys->add_flag("--weyl", weyl, "list the Weyl group");

	auto *chev = app.add_subcommand("chevalley", "integral Chevalley basis and bracket table");
	chev->add_option("--type", type)->required();
	chev->add_option("--center", center, "rank of an added abelian centre");
	chev->add_flag("--verify", verify_flag, "run every Chevalley check");

	auto *chi = app.add_subcommand("chi", "characteristic morphism of a matrix or a torus point");
	auto *chi_m = chi->add_option("--matrix", matrix, "square rational matrix as JSON");
	auto *chi_p = chi->add_option("--torus-point", torus_point, "torus coordinates as JSON");
	auto *chi_t = chi->add_option("--type", type);
	chi->add_option("--file", file, "JSON object with the same keys");
	chi_m->excludes(chi_p);
	chi_p->needs(chi_t);

	auto *deg = app.add_subcommand("degree", "arithmetic degree of a metrized ideal");
	deg->add_option("--field", field, "Q, Q(i) or Q(sqrt(d))");
	deg->add_option("--ideal", ideal, "HNF matrix, {hnf, den} or {generators}");
	deg->add_option("--metrics", metrics, "one positive metric factor per archimedean place");
	deg->add_option("--file", file, "JSON object with the same keys");

	auto *slp = app.add_subcommand("slope", "slope <det^k, mu> of an arithmetic GL_n torsor");
	slp->add_option("--torsor", torsor_file, "torsor JSON file")->required();
	slp->add_option("--char", chr, "exponent k of det^k");

	auto *crv = app.add_subcommand("curve", "spectral or cameral curve of a Higgs field");
	crv->add_option("--matrix", matrix, "square matrix of field elements as JSON");
	crv->add_option("--field", field);
	crv->add_option("--twist", twist, "ideal L containing the entries");
	crv->add_flag("--cameral", cameral, "type A cameral curve");
	auto *crv_f = crv->add_option("--fibers", fibers, "scan primes up to this bound");
	crv->add_option("--file", file, "JSON object with the same keys");

	auto *ver = app.add_subcommand("verify", "check a JSON document produced by another verb");
	ver->add_option("--input", input, "file, or - for stdin")->required();

	std::vector<char const *> argv;
	for (auto const &a : args)
		argv.push_back(a.c_str());
	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return 0;
	}
	catch (CLI::ParseError const &e)
	{
		err << "usage error: " << e.what() << "\n";
		return 2;
	}

	try
	{
		json file_args = json::object();
		if (!file.empty())
		{
			file_args = read_json_file(file);
			if (!file_args.is_object())
				throw UsageError("--file must hold a JSON object");
		}
		// flag text, else the same key in --file
		auto arg = [&](std::string const &flag, char const *key) -> std::optional<json> {
			if (!flag.empty())
				return parse_json_text(flag, std::string("--") + key);
			if (file_args.contains(key))
				return file_args[key];
			return std::nullopt;
		};
		auto string_arg = [&](std::string const &flag, char const *key, std::string const &dflt) {
			if (!flag.empty() && flag != dflt)
				return flag;
			if (file_args.contains(key))
				return file_args[key].get<std::string>();
			return flag.empty() ? dflt : flag;
		};

		json result;
		if (*rootsys)
			result = do_rootsys(type_of(type), weyl);
		else if (*chev)
			result = do_chevalley(type_of(type), center, verify_flag);
		else if (*chi)
		{
			auto m = arg(matrix, "matrix");
			auto p = arg(torus_point, "torus_point");
			if (m && !p)
				result = do_chi_matrix(rational_matrix(*m));
			else if (p && !m)
			{
				RatVec point;
				if (!p->is_array())
					throw UsageError("--torus-point must be a JSON array");
				for (auto const &x : *p)
					point.push_back(rational_of(x));
				result = do_chi_torus(type_of(string_arg(type, "type", "")), point);
			}
			else
				throw UsageError("chi needs exactly one of --matrix or --torus-point");
		}
		else if (*deg)
		{
			auto K = NumberField::parse(string_arg(field, "field", "Q"));
			auto I = arg(ideal, "ideal");
			if (!I)
				throw UsageError("degree needs --ideal");
			std::vector<double> rho;
			auto m = arg(metrics, "metrics");
			if (m)
			{
				if (!m->is_array())
					throw UsageError("--metrics must be a JSON array");
				for (auto const &x : *m)
					rho.push_back(real_of(x));
			}
			else
				rho.assign(static_cast<std::size_t>(K.places()), 1.0);
			result = do_degree(K, ideal_of(K, *I), rho);
		}
		else if (*slp)
			result = do_slope(torsor_of(read_json_file(torsor_file)), chr);
		else if (*crv)
		{
			auto K = NumberField::parse(string_arg(field, "field", "Q"));
			auto m = arg(matrix, "matrix");
			if (!m)
				throw UsageError("curve needs --matrix");
			std::optional<FractionalIdeal> L;
			if (auto t = arg(twist, "twist"))
				L = ideal_of(K, *t);
			std::optional<std::uint64_t> bound;
			if (crv_f->count())
				bound = fibers;
			else if (file_args.contains("fibers"))
				bound = file_args["fibers"].get<std::uint64_t>();
			result = do_curve(K, field_matrix(K, *m), L, cameral || file_args.value("cameral", false), bound);
		}
		else if (*ver)
		{
			result = do_verify(read_json_file(input));
			out << result.dump(2) << "\n";
			return result["ok"].get<bool>() ? 0 : 1;
		}
		out << result.dump(2) << "\n";
		return 0;
	}
	catch (UsageError const &e)
	{
		err << "usage error: " << e.what() << "\n";
		return 2;
	}
	catch (json::exception const &e)
	{
		err << "usage error: malformed JSON input: " << e.what() << "\n";
		return 2;
	}
	catch (Error const &e)
	{
		if (e.code() == ErrorCode::UnsupportedType || e.code() == ErrorCode::ParseError)
		{
			err << "error: " << e.what() << "\n";
			return 2;
		}
		json ej;
		ej["kind"] = "error";
		ej["code"] = std::string(to_string(e.code()));
		ej["message"] = e.what();
		out << ej.dump(2) << "\n";
		return 1;
	}
}

} // namespace arithchar::cli
