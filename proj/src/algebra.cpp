#include "leibniz/algebra.hpp"

#include <set>
#include <stdexcept>

namespace leibniz {

// -------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::size_t ambient)
{
	Subspace s;
	s.ambient_ = ambient;
	return s;
}

Subspace Subspace::full(std::size_t ambient)
{
	std::vector<Vector> gens;
	for (std::size_t i = 0; i < ambient; ++i)
		gens.push_back(unit_vector(ambient, i));
	return span(ambient, gens);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector> &generators)
{
	Subspace s;
	s.ambient_ = ambient;
	if (generators.empty())
		return s;
	auto [red, pivots] = rref(Matrix::from_rows(ambient, generators));
	for (std::size_t r = 0; r < pivots.size(); ++r)
		s.basis_.push_back(red.row(r));
	s.pivots_ = std::move(pivots);
	return s;
}

Vector Subspace::reduce(std::span<const Rational> v) const
{
	if (v.size() != ambient_)
		throw std::invalid_argument("vector does not live in the ambient space");
	Vector r(v.begin(), v.end());
	for (std::size_t b = 0; b < basis_.size(); ++b)
	{
		Rational coeff = r[pivots_[b]];
		if (coeff == 0)
			continue;
		for (std::size_t k = 0; k < ambient_; ++k)
			if (basis_[b][k] != 0)
				r[k] -= coeff * basis_[b][k];
	}
	return r;
}

bool Subspace::contains(std::span<const Rational> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const
{
	if (other.ambient_ != ambient_)
		return false;
	for (const auto &v : other.basis_)
		if (!contains(v))
			return false;
	return true;
}

Subspace Subspace::with(const std::vector<Vector> &more) const
{
	std::vector<Vector> gens = basis_;
	gens.insert(gens.end(), more.begin(), more.end());
	return span(ambient_, gens);
}

Subspace Subspace::sum(const Subspace &other) const
{
	if (other.ambient_ != ambient_)
		throw std::invalid_argument("subspaces live in different spaces");
	return with(other.basis_);
}

std::vector<std::size_t> Subspace::complement_coordinates() const
{
	std::set<std::size_t> piv(pivots_.begin(), pivots_.end());
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < ambient_; ++i)
		if (!piv.count(i))
			out.push_back(i);
	return out;
}

// ------------------------------------------------------ StructureAlgebra

StructureAlgebra::StructureAlgebra(std::string name, std::vector<std::string> basis_names,
                                   std::vector<Rational> constants)
    : name_(std::move(name)), dim_(basis_names.size()), basis_names_(std::move(basis_names)),
      constants_(std::move(constants))
{
	if (constants_.size() != dim_ * dim_ * dim_)
		throw std::invalid_argument("structure tensor must have dim^3 entries");
	std::set<std::string> seen(basis_names_.begin(), basis_names_.end());
	if (seen.size() != basis_names_.size())
		throw std::invalid_argument("basis names must be pairwise distinct");
}

std::vector<std::string> StructureAlgebra::default_basis_names(std::size_t dim, const std::string &prefix)
{
	std::vector<std::string> names;
	for (std::size_t i = 0; i < dim; ++i)
		names.push_back(prefix + std::to_string(i + 1));
	return names;
}

StructureAlgebra StructureAlgebra::abelian(std::size_t dim, std::string name)
{
	return StructureAlgebra(std::move(name), default_basis_names(dim), std::vector<Rational>(dim * dim * dim));
}

Vector StructureAlgebra::basis_product(std::size_t i, std::size_t j) const
{
	Vector v(dim_);
	for (std::size_t k = 0; k < dim_; ++k)
		v[k] = c(i, j, k);
	return v;
}

Vector StructureAlgebra::product(std::span<const Rational> x, std::span<const Rational> y) const
{
	if (x.size() != dim_ || y.size() != dim_)
		throw std::invalid_argument("product: dimension mismatch");
	Vector r = zero_vector(dim_);
	for (std::size_t i = 0; i < dim_; ++i)
	{
		if (x[i] == 0)
			continue;
		for (std::size_t j = 0; j < dim_; ++j)
		{
			if (y[j] == 0)
				continue;
			Rational xy = x[i] * y[j];
			for (std::size_t k = 0; k < dim_; ++k)
				if (c(i, j, k) != 0)
					r[k] += xy * c(i, j, k);
		}
	}
	return r;
}

Matrix StructureAlgebra::left_mul(std::span<const Rational> x) const
{
	if (x.size() != dim_)
		throw std::invalid_argument("left_mul: dimension mismatch");
	Matrix m(dim_, dim_);
	for (std::size_t i = 0; i < dim_; ++i)
	{
		if (x[i] == 0)
			continue;
		for (std::size_t j = 0; j < dim_; ++j)
			for (std::size_t k = 0; k < dim_; ++k)
				if (c(i, j, k) != 0)
					m(k, j) += x[i] * c(i, j, k);
	}
	return m;
}

Matrix StructureAlgebra::left_mul_basis(std::size_t i) const { return left_mul(unit_vector(dim_, i)); }

Matrix StructureAlgebra::right_mul_basis(std::size_t i) const
{
	Matrix m(dim_, dim_);
	for (std::size_t j = 0; j < dim_; ++j)
		for (std::size_t k = 0; k < dim_; ++k)
			m(k, j) = c(j, i, k);
	return m;
}

bool StructureAlgebra::is_leibniz() const
{
	std::call_once(flags_->leibniz_once, [this] { flags_->leibniz = check_leibniz(*this).holds; });
	return flags_->leibniz;
}

bool StructureAlgebra::is_lie() const
{
	std::call_once(flags_->lie_once, [this] { flags_->lie = check_skew(*this).holds && is_leibniz(); });
	return flags_->lie;
}

StructureAlgebra StructureAlgebra::renamed(std::string name) const
{
	StructureAlgebra copy = *this;
	copy.name_ = std::move(name);
	return copy;
}

// -------------------------------------------------------------- checkers

IdentityCheck check_leibniz(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	std::vector<Vector> prod(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			prod[i * n + j] = a.basis_product(i, j);
	std::vector<Matrix> lam(n);
	for (std::size_t i = 0; i < n; ++i)
		lam[i] = a.left_mul_basis(i);

	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				Vector lhs = lam[i].apply(prod[j * n + k]);
				Vector rhs = add(a.right_mul_basis(k).apply(prod[i * n + j]), lam[j].apply(prod[i * n + k]));
				if (lhs != rhs)
					return {false, IdentityFailure{{i, j, k}, std::move(lhs), std::move(rhs)}};
			}
	return {};
}

IdentityCheck check_skew(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
		{
			Vector ij = a.basis_product(i, j);
			Vector ji = scale(Rational(-1), a.basis_product(j, i));
			if (ij != ji)
				return {false, IdentityFailure{{i, j}, std::move(ij), std::move(ji)}};
		}
	return {};
}

bool check_lie(const StructureAlgebra &a) { return check_skew(a).holds && check_leibniz(a).holds; }

StructureAlgebra skew_symmetrize(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	std::vector<Rational> c(n * n * n);
	const Rational half = rat(1, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				c[(i * n + j) * n + k] = half * (a.c(i, j, k) - a.c(j, i, k));
	return StructureAlgebra(a.name() + "_skew", a.basis_names(), std::move(c));
}

Vector symmetrized_part(const StructureAlgebra &a, std::span<const Rational> x, std::span<const Rational> y)
{
	return scale(rat(1, 2), add(a.product(x, y), a.product(y, x)));
}

// ---------------------------------------------------------------- ideals

Subspace ideal_closure(const StructureAlgebra &a, const Subspace &s)
{
	const std::size_t n = a.dim();
	Subspace current = s;
	// Each pass multiplies the current basis by all basis elements on both
	// sides; the dimension chain is monotone and bounded by n.
	while (true)
	{
		std::vector<Vector> more;
		for (const auto &v : current.basis())
			for (std::size_t i = 0; i < n; ++i)
			{
				Vector e = unit_vector(n, i);
				more.push_back(a.product(e, v));
				more.push_back(a.product(v, e));
			}
		Subspace next = current.with(more);
		if (next.dim() == current.dim())
			return current;
		current = std::move(next);
	}
}

Subspace squares_ideal(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	// Polarization: span{x.x} = span{e_i.e_i, e_i.e_j + e_j.e_i} in char 0.
	std::vector<Vector> gens;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
			gens.push_back(add(a.basis_product(i, j), a.basis_product(j, i)));
	return ideal_closure(a, Subspace::span(n, gens));
}

Subspace kernel_of_lambda(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	// Row (j,k) of the stacked map x -> lambda(x) reads sum_i x_i c(i,j,k).
	Matrix stacked(n * n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				stacked(j * n + k, i) = a.c(i, j, k);
	return Subspace::span(n, kernel_basis(stacked));
}

bool is_ideal(const StructureAlgebra &a, const Subspace &s)
{
	if (s.ambient_dim() != a.dim())
		throw std::invalid_argument("subspace ambient dimension differs from algebra dimension");
	const std::size_t n = a.dim();
	for (const auto &v : s.basis())
		for (std::size_t i = 0; i < n; ++i)
		{
			Vector e = unit_vector(n, i);
			if (!s.contains(a.product(e, v)) || !s.contains(a.product(v, e)))
				return false;
		}
	return true;
}

Quotient quotient_algebra(const StructureAlgebra &a, const Subspace &m)
{
	if (!is_ideal(a, m))
		throw std::invalid_argument("not an ideal: quotient requires a two-sided ideal");
	const std::size_t n = a.dim();
	auto comp = m.complement_coordinates();
	const std::size_t q = comp.size();

	Matrix proj(q, n);
	for (std::size_t i = 0; i < n; ++i)
	{
		Vector r = m.reduce(unit_vector(n, i));
		for (std::size_t a_idx = 0; a_idx < q; ++a_idx)
			proj(a_idx, i) = r[comp[a_idx]];
	}

	std::vector<Rational> c(q * q * q);
	std::vector<std::string> names;
	for (std::size_t a_idx = 0; a_idx < q; ++a_idx)
		names.push_back(a.basis_names()[comp[a_idx]]);
	for (std::size_t x = 0; x < q; ++x)
		for (std::size_t y = 0; y < q; ++y)
		{
			Vector image = proj.apply(a.basis_product(comp[x], comp[y]));
			for (std::size_t k = 0; k < q; ++k)
				c[(x * q + y) * q + k] = image[k];
		}
	return {StructureAlgebra(a.name() + "_quotient", std::move(names), std::move(c)), std::move(proj),
	        std::move(comp)};
}

StructureAlgebra change_basis(const StructureAlgebra &a, const Matrix &basis_change)
{
	const std::size_t n = a.dim();
	if (basis_change.rows() != n || basis_change.cols() != n)
		throw std::invalid_argument("basis change must be a square matrix of the algebra dimension");
	Matrix inv = inverse(basis_change);
	std::vector<Rational> c(n * n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Vector image = inv.apply(a.product(basis_change.column(i), basis_change.column(j)));
			for (std::size_t k = 0; k < n; ++k)
				c[(i * n + j) * n + k] = image[k];
		}
	return StructureAlgebra(a.name(), a.basis_names(), std::move(c));
}

std::optional<Vector> coordinates_in(const std::vector<Vector> &basis, std::span<const Rational> v)
{
	if (basis.empty())
		return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
	return solve_linear(Matrix::from_columns(v.size(), basis), v);
}

} // namespace leibniz
