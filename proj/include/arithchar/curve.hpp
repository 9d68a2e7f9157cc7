#pragma once

#include "arithchar/arakelov.hpp"
#include "arithchar/finite_field.hpp"
#include "arithchar/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arithchar {

/// phi in gl_n(O_K) (x) L: an n x n matrix whose entries lie in the twist L.
struct HiggsField
{
	NumberField field;
	Matrix<FieldElement> matrix;
	FractionalIdeal twist;
	/// Coordinates of every entry (row-major) over twist.basis().
	std::vector<std::vector<Integer>> entry_membership;

	std::size_t rank() const { return matrix.rows(); }
};

/// Throws NonSquare, UnsupportedBase (entries over another field) or
/// MembershipFailure (an entry outside L).
HiggsField make_higgs_field(NumberField const &K, Matrix<FieldElement> const &phi);
HiggsField make_higgs_field(NumberField const &K, Matrix<FieldElement> const &phi, FractionalIdeal const &L);

/// c_1..c_n of phi with the bound c_k in L^k.
struct CharacteristicPoint
{
	std::vector<FieldElement> c;
	std::vector<FractionalIdeal> bound; ///< L^k
	/// Coordinates of c_k over bound[k-1].basis(); nullopt if not a member.
	std::vector<std::optional<std::vector<Integer>>> certificate;

	bool integral() const;
};

CharacteristicPoint characteristic_point(HiggsField const &phi);

enum class CurveKind { Spectral, Cameral };

struct CharacteristicCurve
{
	CurveKind kind = CurveKind::Spectral;
	NumberField base;
	std::size_t n = 0;
	/// Monic p_phi(x), highest degree first.
	std::vector<FieldElement> poly;
	/// a_k = c_k(phi); the cameral relations are e_k(t) = a_k.
	std::vector<FieldElement> invariants;
	FieldElement discriminant;
	bool degenerate = false;

	/// n for spectral curves, n! for cameral ones.
	std::size_t degree() const;
	/// "x^2 - 2" or {"t1 + t2", "t1*t2 + 2"}: the defining relations.
	std::vector<std::string> presentation() const;
};

CharacteristicCurve spectral_curve(HiggsField const &phi);
/// Type A only: O_K[t_1..t_n]/(e_k(t) - a_k).
CharacteristicCurve cameral_curve(HiggsField const &phi);

/// (-1)^{n(n-1)/2} Res(p, p') for a monic p given highest degree first.
FieldElement polynomial_discriminant(std::vector<FieldElement> const &p);
FieldElement discriminant(HiggsField const &phi);

/// p_phi reduced into the residue field of P; throws NonIntegral.
FqPoly reduce_poly(PrimeIdeal const &P, std::vector<FieldElement> const &p);

/// Fiber of a spectral curve over one prime P of the base.
struct PrimeFiber
{
	std::uint64_t p = 0;
	unsigned f = 1; ///< residue degree of P over p
	unsigned e = 1; ///< ramification index of P over p
	std::vector<std::pair<unsigned, unsigned>> pattern; ///< (f_i, e_i) of the cover over P
};

/// One entry per prime of O_K above p. Throws DegenerateCurve, NonIntegral.
std::vector<PrimeFiber> fibers_above(CharacteristicCurve const &C, std::uint64_t p);
/// Base Q: the (f_i, e_i) of p_phi mod p. Throws UnsupportedBase otherwise.
std::vector<std::pair<unsigned, unsigned>> fiber(CharacteristicCurve const &C, std::uint64_t p);

struct RamificationReport
{
	struct Entry
	{
		std::uint64_t p;
		std::vector<PrimeFiber> fibers;
	};

	FieldElement discriminant;
	std::vector<Entry> ramified;               ///< primes with a repeated factor
	std::vector<std::uint64_t> nonintegral;    ///< primes where p_phi is not integral
	std::vector<bool> archimedean_collisions;  ///< repeated eigenvalues under sigma
};

/// Scans every prime p <= pmax. Throws DegenerateCurve.
RamificationReport ramification(CharacteristicCurve const &C, std::uint64_t pmax);

/// Spectral roots or ordered cameral tuples in the residue field of P.
std::vector<GF::Elem> spectral_points(CharacteristicCurve const &C, PrimeIdeal const &P);
std::vector<std::vector<GF::Elem>> cameral_points(CharacteristicCurve const &C, PrimeIdeal const &P);

/// Rational points over Q of a curve with integral coefficients: roots of
/// p_phi, or ordered tuples solving the cameral relations.
std::vector<Rational> rational_spectral_points(CharacteristicCurve const &C);
std::vector<std::vector<Rational>> rational_cameral_points(CharacteristicCurve const &C);

struct CoveringCheck
{
	bool passed = false;
	std::uint64_t p = 0;     ///< the rational prime used
	std::size_t count = 0;   ///< points found over P
	std::size_t expected = 0;
};

/// Finds the least degree-one prime P of the base, unramified over Q, where
/// p_phi is integral, separable and split, and counts the fiber there.
/// Throws DegenerateCurve.
CoveringCheck covering_degree_check(CharacteristicCurve const &C);

} // namespace arithchar
