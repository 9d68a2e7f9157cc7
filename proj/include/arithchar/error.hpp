#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithchar {

enum class ErrorCode {
	UnsupportedType,
	NotARoot,
	ProportionalRoots,
	DimensionMismatch,
	NonSquare,
	ZeroIdeal,
	SingularForm,
	SingularMatrix,
	MembershipFailure,
	DegenerateCurve,
	UnsupportedBase,
	NonIntegral,
	ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error
{
  public:
	Error(ErrorCode code, std::string const &what)
	    : std::runtime_error(what), code_(code)
	{}

	ErrorCode code() const noexcept { return code_; }

  private:
	ErrorCode code_;
};

} // namespace arithchar
