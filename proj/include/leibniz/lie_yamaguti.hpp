#ifndef LEIBNIZ_LIE_YAMAGUTI_HPP
#define LEIBNIZ_LIE_YAMAGUTI_HPP

#include "leibniz/products.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

/// Binary tensor b (n^3) and ternary tensor t (n^4):
/// [[e_i,e_j]] = sum_k b(i,j,k) e_k, {e_i,e_j,e_k} = sum_l t(i,j,k,l) e_l.
struct LieYamaguti
{
	std::size_t n = 0;
	std::vector<Rational> b;
	std::vector<Rational> t;

	static LieYamaguti zero(std::size_t n);

	Rational &b_at(std::size_t i, std::size_t j, std::size_t k) { return b[(i * n + j) * n + k]; }
	const Rational &b_at(std::size_t i, std::size_t j, std::size_t k) const { return b[(i * n + j) * n + k]; }
	Rational &t_at(std::size_t i, std::size_t j, std::size_t k, std::size_t l)
	{
		return t[((i * n + j) * n + k) * n + l];
	}
	const Rational &t_at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const
	{
		return t[((i * n + j) * n + k) * n + l];
	}

	Vector binary(std::span<const Rational> x, std::span<const Rational> y) const;
	Vector ternary(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z) const;
	/// z -> {e_i, e_j, z}.
	Matrix delta(std::size_t i, std::size_t j) const;
	/// z -> [[e_i, z]].
	Matrix ad(std::size_t i) const;

	friend bool operator==(const LieYamaguti &a, const LieYamaguti &b)
	{
		return a.n == b.n && a.b == b.b && a.t == b.t;
	}
};

/// Skew bilinear map m x m -> h, one h-vector per basis pair.
struct DeltaMap
{
	std::size_t h_dim = 0;
	std::size_t n = 0;
	std::vector<Vector> values;

	static DeltaMap zero(std::size_t h_dim, std::size_t n);
	Vector &at(std::size_t i, std::size_t j) { return values[i * n + j]; }
	const Vector &at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
	Vector of(std::span<const Rational> x, std::span<const Rational> y) const;
};

class LYError : public std::runtime_error
{
public:
	LYError(std::string condition, const std::string &detail)
	    : std::runtime_error(condition + ": " + detail), condition_(std::move(condition))
	{
	}
	const std::string &condition() const { return condition_; }

private:
	std::string condition_;
};

struct LYFailure
{
	/// "LY1" ... "LY6".
	std::string axiom;
	std::vector<std::size_t> tuple;
	Vector lhs;
	Vector rhs;
};

struct LYCheck
{
	bool holds = true;
	std::optional<LYFailure> failure;
	explicit operator bool() const { return holds; }
};

/// Axioms in the order LY1..LY6; within an axiom the lexicographically first
/// failing basis tuple is reported.
LYCheck validate_ly(const LieYamaguti &L);

/// Skew-symmetrized product and {x,y,z} = -1/4 (x.y).z.
LieYamaguti ly_from_leibniz(const StructureAlgebra &E);

/// Structure on m induced by a reductive decomposition g = h + m of a Lie
/// algebra; both subspaces given by basis vectors in g coordinates. Result is
/// expressed in the given m basis.
LieYamaguti ly_from_decomposition(const StructureAlgebra &g, const std::vector<Vector> &h_basis,
                                  const std::vector<Vector> &m_basis);

struct InnerDerivations
{
	/// delta(e_i, e_j) for i < j, in the order of `pairs`.
	std::vector<Matrix> matrices;
	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	/// Span inside gl(n), matrices flattened row-major.
	Subspace span;
};

InnerDerivations inner_derivations(const LieYamaguti &L);

/// g = h + m with the bracket ([a,b] + Delta(x,y)) + (a y - b x + [[x,y]]).
/// Coordinates put h first.
struct LYEnvelope
{
	StructureAlgebra g;
	StructureAlgebra h;
	ModuleAction action;
	DeltaMap delta;

	std::vector<Vector> h_basis() const;
	std::vector<Vector> m_basis() const;
};

/// Throws LYError with condition action-not-derivation, delta1, delta2,
/// delta3 or jacobi.
LYEnvelope ly_envelope(const LieYamaguti &L, const StructureAlgebra &h, const ModuleAction &action,
                       const DeltaMap &delta);

/// h = IDer(m) with commutator constants and Delta = delta.
LYEnvelope ly_envelope_default(const LieYamaguti &L);

struct TorsionCurvature
{
	/// n^3, same layout as LieYamaguti::b.
	std::vector<Rational> torsion;
	/// n^4, same layout as LieYamaguti::t.
	std::vector<Rational> curvature;
};

/// Canonical connection: T = -[[.,.]], R = -{.,.,.}.
TorsionCurvature torsion_curvature(const LieYamaguti &L);

} // namespace leibniz

#endif
