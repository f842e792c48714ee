#ifndef LEIBNIZ_LOOPS_HPP
#define LEIBNIZ_LOOPS_HPP

#include "leibniz/check.hpp"
#include "leibniz/courant.hpp"
#include "leibniz/products.hpp"

#include <cstdint>

namespace leibniz {

/// x <>_s y = x + exp(s lambda(x)) y on a Leibniz algebra.
class LoopContext
{
public:
	LoopContext(StructureAlgebra E, Rational s, ExpMode mode = ExpMode::exact, double tol = 1e-9);

	const StructureAlgebra &algebra() const { return E_; }
	const Rational &s() const { return s_; }
	ExpMode mode() const { return mode_; }
	double tol() const { return tol_; }
	std::size_t dim() const { return E_.dim(); }
	/// The associative algebra generated by lambda(e_i) is nilpotent, so every
	/// lambda(x) is; exact mode then never fails.
	bool lambda_envelope_nilpotent() const { return envelope_nilpotent_; }

	// Exact mode. Throw std::domain_error when lambda(x) is not nilpotent.
	Matrix exp_lambda(std::span<const Rational> x, const Rational &factor) const;
	Vector product(std::span<const Rational> x, std::span<const Rational> y) const;
	Vector left_inverse(std::span<const Rational> x) const;
	Vector left_divide(std::span<const Rational> a, std::span<const Rational> b) const;
	Matrix left_inner_mapping(std::span<const Rational> a, std::span<const Rational> b) const;

	// Float mode; usable regardless of nilpotency.
	FloatMatrix exp_lambda(std::span<const double> x, double factor) const;
	FVector product(std::span<const double> x, std::span<const double> y) const;
	FVector left_inverse(std::span<const double> x) const;
	FVector left_divide(std::span<const double> a, std::span<const double> b) const;
	FloatMatrix left_inner_mapping(std::span<const double> a, std::span<const double> b) const;

private:
	StructureAlgebra E_;
	Rational s_;
	ExpMode mode_;
	double tol_;
	bool envelope_nilpotent_ = false;
	std::vector<double> constants_f_;
};

/// Nilpotency of the associative algebra generated by the given matrices.
bool associative_envelope_nilpotent(const std::vector<Matrix> &mats);

/// Identity, left division, left inverse property and A_l on `samples`
/// seeded random triples, in the context's mode.
std::vector<NamedCheck> loop_property_check(const LoopContext &ctx, std::size_t samples, std::uint64_t seed);

/// (xi, x) <> (eta, y) = (xi + exp(ad s xi) eta, x + exp(rho(s xi)) y) on
/// the hemisemidirect product; exact, requires nilpotent ad and rho.
Vector hemisemidirect_loop_product(const StructureAlgebra &h, const ModuleAction &act, const Rational &s,
                                   std::span<const Rational> a, std::span<const Rational> b);

/// Vector fields on E with polynomial components in dim(E) variables.
using PolyVectorField = VectorField;

/// (nabla_X Y)(x) = DY(x) X(x) - s X(x).Y(x).
PolyVectorField connection_eval(const StructureAlgebra &E, const Rational &s, const PolyVectorField &X,
                                const PolyVectorField &Y);
/// nabla_X Y - nabla_Y X - [X,Y].
PolyVectorField connection_torsion(const StructureAlgebra &E, const Rational &s, const PolyVectorField &X,
                                   const PolyVectorField &Y);
/// nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
PolyVectorField connection_curvature(const StructureAlgebra &E, const Rational &s, const PolyVectorField &X,
                                     const PolyVectorField &Y, const PolyVectorField &Z);
/// Constant field with the given value.
PolyVectorField constant_field(std::span<const Rational> v);

} // namespace leibniz

#endif
