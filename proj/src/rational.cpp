#include "arithchar/rational.hpp"
#include "arithchar/error.hpp"

#include <cctype>

namespace arithchar {

std::string_view to_string(ErrorCode code)
{
	switch (code)
	{
	case ErrorCode::UnsupportedType: return "UnsupportedType";
	case ErrorCode::NotARoot: return "NotARoot";
	case ErrorCode::ProportionalRoots: return "ProportionalRoots";
	case ErrorCode::DimensionMismatch: return "DimensionMismatch";
	case ErrorCode::NonSquare: return "NonSquare";
	case ErrorCode::ZeroIdeal: return "ZeroIdeal";
	case ErrorCode::SingularForm: return "SingularForm";
	case ErrorCode::SingularMatrix: return "SingularMatrix";
	case ErrorCode::MembershipFailure: return "MembershipFailure";
	case ErrorCode::DegenerateCurve: return "DegenerateCurve";
	case ErrorCode::UnsupportedBase: return "UnsupportedBase";
	case ErrorCode::NonIntegral: return "NonIntegral";
	case ErrorCode::ParseError: return "ParseError";
	}
	return "Unknown";
}

std::string to_string(Rational const &q)
{
	// mpq_class::get_str already omits "/1" for canonical integers
	return q.get_str();
}

std::string to_string(Integer const &z) { return z.get_str(); }

namespace {

bool valid_integer_text(std::string_view s)
{
	std::size_t i = 0;
	if (i < s.size() && (s[i] == '-' || s[i] == '+'))
		++i;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

Integer parse_integer(std::string_view s)
{
	if (!valid_integer_text(s))
		throw Error(ErrorCode::ParseError,
		            "not an integer: '" + std::string(s) + "'");
	if (s.front() == '+')
		s.remove_prefix(1);
	return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
	text = trim(text);
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Rational(parse_integer(text));
	Integer num = parse_integer(trim(text.substr(0, slash)));
	Integer den = parse_integer(trim(text.substr(slash + 1)));
	if (den == 0)
		throw Error(ErrorCode::ParseError, "zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

std::int64_t to_int64(Integer const &z)
{
	if (!z.fits_slong_p())
		throw Error(ErrorCode::NonIntegral, "integer out of int64 range");
	return z.get_si();
}

std::int64_t to_int64(Rational const &q)
{
	if (!is_integer(q))
		throw Error(ErrorCode::NonIntegral, "expected an integer, got " + to_string(q));
	return to_int64(q.get_num());
}

Rational dot(RatVec const &u, RatVec const &v)
{
	if (u.size() != v.size())
		throw Error(ErrorCode::DimensionMismatch, "dot product length mismatch");
	Rational s = 0;
	for (std::size_t i = 0; i < u.size(); ++i)
		s += u[i] * v[i];
	return s;
}

} // namespace arithchar
