#ifndef LEIBNIZ_PRODUCTS_HPP
#define LEIBNIZ_PRODUCTS_HPP

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Representation of a Lie algebra h on a vector space V: one V x V matrix
/// per basis vector of h.
class ModuleAction
{
public:
	ModuleAction() = default;

	/// Checks that the matrices define a Lie homomorphism from h into gl(V).
	static ModuleAction make(const StructureAlgebra &h, std::vector<Matrix> matrices);
	/// No validation; for deliberately broken actions in diagnostics.
	static ModuleAction unchecked(std::size_t v_dim, std::vector<Matrix> matrices);
	static ModuleAction trivial(std::size_t h_dim, std::size_t v_dim);

	std::size_t h_dim() const { return matrices_.size(); }
	std::size_t v_dim() const { return v_dim_; }
	const std::vector<Matrix> &matrices() const { return matrices_; }
	const Matrix &matrix(std::size_t i) const { return matrices_.at(i); }
	/// Matrix of the h element with coordinates xi.
	Matrix of(std::span<const Rational> xi) const;
	Vector act(std::span<const Rational> xi, std::span<const Rational> v) const;

private:
	std::size_t v_dim_ = 0;
	std::vector<Matrix> matrices_;
};

/// gl(d) with basis E11, E12, ..., Edd (row-major).
StructureAlgebra gl_algebra(std::size_t d);
/// The defining representation of gl(d) on Q^d.
ModuleAction gl_standard_action(const StructureAlgebra &gl, std::size_t d);
/// so(3) with [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
StructureAlgebra so3_algebra();
/// so(3) acting on Q^3 by the cross product.
ModuleAction so3_standard_action(const StructureAlgebra &so3);
/// aff(1): [e1,e2] = e2.
StructureAlgebra aff1_algebra();

/// Lie algebra on h + V with [(a,x),(b,y)] = ([a,b], a y - b x).
StructureAlgebra semidirect_lie(const StructureAlgebra &h, const ModuleAction &act);
/// (a,x).(b,y) = ([a,b], a y).
StructureAlgebra hemisemidirect(const StructureAlgebra &h, const ModuleAction &act);
/// [[(a,x),(b,y)]] = ([a,b], (a y - b x)/2).
StructureAlgebra demisemidirect(const StructureAlgebra &h, const ModuleAction &act);

namespace detail {
StructureAlgebra hemisemidirect_unchecked(const StructureAlgebra &h, const ModuleAction &act);
StructureAlgebra semidirect_unchecked(const StructureAlgebra &h, const ModuleAction &act);
}

struct OmniAlgebras
{
	StructureAlgebra hemisemidirect;
	StructureAlgebra demisemidirect;
};

/// gl(d) x Q^d with the standard action, in both flavours.
OmniAlgebras omni_algebras(std::size_t d);

/// (a,x) o (b,y) = (0, (a y + b x)/2).
Vector circle_product(const StructureAlgebra &h, const ModuleAction &act, std::span<const Rational> a,
                      std::span<const Rational> b);

struct GraphReport
{
	bool graph_closed_under_leibniz = false;
	bool graph_is_lie_subalgebra = false;
	bool circle_vanishes_on_graph = false;
};

/// Graph of x -> lambda(x) inside gl(n) x Q^n, tested against the omni
/// algebras of dimension n.
GraphReport graph_criterion(const StructureAlgebra &a);

/// Basis (lambda(e_i), e_i) of the graph, in omni coordinates.
std::vector<Vector> lambda_graph_basis(const StructureAlgebra &a);

} // namespace leibniz

#endif
