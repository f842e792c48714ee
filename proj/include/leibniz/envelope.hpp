#ifndef LEIBNIZ_ENVELOPE_HPP
#define LEIBNIZ_ENVELOPE_HPP

#include "leibniz/check.hpp"
#include "leibniz/products.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Enveloping Lie algebra (g, h, f) of a Leibniz algebra E. Coordinates on
/// g = h x E put the h block first.
struct EnvelopeTriple
{
	StructureAlgebra E;
	StructureAlgebra h;
	ModuleAction action;
	/// dim(h) x dim(E).
	Matrix f;
	StructureAlgebra g;
	/// Non-fatal observations (e.g. f not surjective).
	std::vector<std::string> notices;

	std::size_t e_dim() const { return E.dim(); }
	std::size_t h_dim() const { return h.dim(); }
	std::size_t g_dim() const { return h.dim() + E.dim(); }

	/// Assembles a triple without checking any of the envelope conditions.
	static EnvelopeTriple unchecked(StructureAlgebra E, StructureAlgebra h, ModuleAction action, Matrix f);
};

class EnvelopeError : public std::runtime_error
{
public:
	EnvelopeError(std::string condition, const std::string &detail)
	    : std::runtime_error(condition + ": " + detail), condition_(std::move(condition))
	{
	}
	const std::string &condition() const { return condition_; }

private:
	std::string condition_;
};

/// Checks every defining condition of an enveloping Lie algebra and the
/// consequences f(x.y) = [f x, f y] and J <= ker f <= ker lambda. Throws
/// EnvelopeError naming the first violated condition and basis tuple.
EnvelopeTriple validate_envelope(const StructureAlgebra &E, const StructureAlgebra &h, const ModuleAction &action,
                                 const Matrix &f);

/// h = E/M acting through the induced left multiplication, f = quotient map.
/// Requires J <= M <= ker(lambda) with M an ideal.
EnvelopeTriple canonical_envelope(const StructureAlgebra &E, const Subspace &M);

/// h = lambda(E) inside gl(E), f = lambda.
EnvelopeTriple lambda_envelope(const StructureAlgebra &E);

/// (h x| E, h, pi_h) for the hemisemidirect product E = h x|_H V.
EnvelopeTriple hemisemidirect_envelope(const StructureAlgebra &h, const ModuleAction &act);

/// x -> (s f(x), x), as a dim(g) x dim(E) matrix.
Matrix section_sigma(const EnvelopeTriple &t, const Rational &s);

/// Components of [sigma_s x, sigma_s y] relative to g = h + sigma_s(E):
/// the E part (the projected bracket) and the h part (Delta_s).
std::pair<Vector, Vector> projected_bracket_delta(const EnvelopeTriple &t, const Rational &s,
                                                  std::span<const Rational> x, std::span<const Rational> y);

/// pi_E [sigma_{1/2} e_i, sigma_{1/2} e_j] equals the skew-symmetrized product
/// for all basis pairs.
bool recovery_check(const EnvelopeTriple &t);

/// sigma_1 is an injective homomorphism into the hemisemidirect product of h
/// with E.
bool sigma_one_embed_check(const EnvelopeTriple &t);

/// Every invariant of an envelope triple, one entry per property.
std::vector<NamedCheck> verify_envelope(const EnvelopeTriple &t);

} // namespace leibniz

#endif
