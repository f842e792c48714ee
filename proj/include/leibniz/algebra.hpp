#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include "leibniz/linalg.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

/// Subspace of Q^n stored as the nonzero rows of its reduced row-echelon
/// form, so equal subspaces compare equal.
class Subspace
{
public:
	Subspace() = default;
	static Subspace zero(std::size_t ambient);
	static Subspace full(std::size_t ambient);
	static Subspace span(std::size_t ambient, const std::vector<Vector> &generators);

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return basis_.size(); }
	const std::vector<Vector> &basis() const { return basis_; }
	const std::vector<std::size_t> &pivots() const { return pivots_; }

	bool contains(std::span<const Rational> v) const;
	bool contains(const Subspace &other) const;
	Subspace sum(const Subspace &other) const;
	Subspace with(const std::vector<Vector> &more) const;
	/// Subtracts multiples of basis rows so that every pivot coordinate of the
	/// result is zero.
	Vector reduce(std::span<const Rational> v) const;
	/// Standard coordinates that are not pivots; a canonical complement.
	std::vector<std::size_t> complement_coordinates() const;

	friend bool operator==(const Subspace &a, const Subspace &b)
	{
		return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
	}

private:
	std::size_t ambient_ = 0;
	std::vector<Vector> basis_;
	std::vector<std::size_t> pivots_;
};

/// Finite-dimensional algebra given by structure constants
/// e_i . e_j = sum_k c(i,j,k) e_k.
class StructureAlgebra
{
public:
	StructureAlgebra() = default;
	StructureAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> constants);
	/// Zero products on basis e1..en.
	static StructureAlgebra abelian(std::size_t dim, std::string name = "abelian");
	static std::vector<std::string> default_basis_names(std::size_t dim, const std::string &prefix = "e");

	const std::string &name() const { return name_; }
	std::size_t dim() const { return dim_; }
	const std::vector<std::string> &basis_names() const { return basis_names_; }
	const std::vector<Rational> &constants() const { return constants_; }

	const Rational &c(std::size_t i, std::size_t j, std::size_t k) const
	{
		return constants_[(i * dim_ + j) * dim_ + k];
	}
	Vector basis_product(std::size_t i, std::size_t j) const;
	Vector product(std::span<const Rational> x, std::span<const Rational> y) const;
	/// Matrix of y -> x.y.
	Matrix left_mul(std::span<const Rational> x) const;
	Matrix left_mul_basis(std::size_t i) const;
	/// Matrix of y -> y.x.
	Matrix right_mul_basis(std::size_t i) const;

	/// Cached, thread-safe results of check_leibniz / check_lie.
	bool is_leibniz() const;
	bool is_lie() const;

	StructureAlgebra renamed(std::string name) const;

	friend bool operator==(const StructureAlgebra &a, const StructureAlgebra &b)
	{
		return a.dim_ == b.dim_ && a.constants_ == b.constants_;
	}

private:
	struct FlagCache
	{
		std::once_flag leibniz_once;
		std::once_flag lie_once;
		bool leibniz = false;
		bool lie = false;
	};

	std::string name_;
	std::size_t dim_ = 0;
	std::vector<std::string> basis_names_;
	std::vector<Rational> constants_;
	std::shared_ptr<FlagCache> flags_ = std::make_shared<FlagCache>();
};

/// A failed identity on basis elements, with both sides.
struct IdentityFailure
{
	std::vector<std::size_t> indices;
	Vector lhs;
	Vector rhs;
};

struct IdentityCheck
{
	bool holds = true;
	std::optional<IdentityFailure> failure;
	explicit operator bool() const { return holds; }
};

/// x.(y.z) = (x.y).z + y.(x.z) on all basis triples.
IdentityCheck check_leibniz(const StructureAlgebra &a);
/// c(i,j,k) = -c(j,i,k) everywhere.
IdentityCheck check_skew(const StructureAlgebra &a);
bool check_lie(const StructureAlgebra &a);

StructureAlgebra skew_symmetrize(const StructureAlgebra &a);
/// (x.y + y.x)/2.
Vector symmetrized_part(const StructureAlgebra &a, std::span<const Rational> x, std::span<const Rational> y);

/// Smallest two-sided ideal containing every square.
Subspace squares_ideal(const StructureAlgebra &a);
/// Two-sided ideal generated by a subspace.
Subspace ideal_closure(const StructureAlgebra &a, const Subspace &s);
Subspace kernel_of_lambda(const StructureAlgebra &a);
bool is_ideal(const StructureAlgebra &a, const Subspace &s);

struct Quotient
{
	StructureAlgebra algebra;
	/// dim(A/M) x dim(A) matrix of the projection.
	Matrix projection;
	/// Coordinates of A spanning the complement used as quotient basis.
	std::vector<std::size_t> complement;
};

/// Throws std::invalid_argument("not an ideal ...") when m is not an ideal.
Quotient quotient_algebra(const StructureAlgebra &a, const Subspace &m);

/// Structure constants of the same algebra in the basis given by the columns
/// of `basis_change` (new e'_i = sum_k P(k,i) e_k).
StructureAlgebra change_basis(const StructureAlgebra &a, const Matrix &basis_change);

/// Coordinates of v in the list `basis` (which must be independent and span
/// a subspace containing v).
std::optional<Vector> coordinates_in(const std::vector<Vector> &basis, std::span<const Rational> v);

} // namespace leibniz

#endif
