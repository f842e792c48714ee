#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace leibniz {

/// Exact rational scalar. GMP keeps numerator/denominator canonical for every
/// value produced through arithmetic; values read from text go through
/// parse_rational, which canonicalizes.
using Rational = mpq_class;
using Vector = std::vector<Rational>;
using FVector = std::vector<double>;

/// Parses "p/q" or an integer. Decimal points and exponents are rejected so
/// that exact inputs never pass through a float.
Rational parse_rational(std::string_view text);
/// Canonical num/den; den must be nonzero.
Rational rat(long num, long den = 1);
std::string to_string(const Rational &q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector sub(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational &c, std::span<const Rational> v);
FVector to_float(std::span<const Rational> v);

class FloatMatrix;

/// Dense row-major matrix over Q.
class Matrix
{
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols);
	Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

	static Matrix identity(std::size_t n);
	static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
	/// Matrix whose columns are the given vectors (all of length `rows`).
	static Matrix from_columns(std::size_t rows, const std::vector<Vector> &cols);
	static Matrix from_rows(std::size_t cols, const std::vector<Vector> &rows);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }

	Rational &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
	const Rational &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
	const std::vector<Rational> &entries() const { return entries_; }

	Vector row(std::size_t r) const;
	Vector column(std::size_t c) const;
	Matrix transpose() const;
	bool is_zero() const;

	Vector apply(std::span<const Rational> v) const;
	Matrix operator*(const Matrix &o) const;
	Matrix operator+(const Matrix &o) const;
	Matrix operator-(const Matrix &o) const;
	Matrix operator-() const;
	Matrix scaled(const Rational &c) const;

	FloatMatrix to_float() const;

	friend bool operator==(const Matrix &a, const Matrix &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
	}

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Rational> entries_;
};

/// Commutator ab - ba.
Matrix commutator(const Matrix &a, const Matrix &b);

class FloatMatrix
{
public:
	FloatMatrix() = default;
	FloatMatrix(std::size_t rows, std::size_t cols);

	static FloatMatrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	double &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
	double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
	const std::vector<double> &entries() const { return entries_; }

	FVector apply(std::span<const double> v) const;
	FloatMatrix operator*(const FloatMatrix &o) const;
	FloatMatrix operator+(const FloatMatrix &o) const;
	FloatMatrix operator-() const;
	FloatMatrix scaled(double c) const;
	/// Max absolute row sum.
	double norm_inf() const;
	double max_abs_diff(const FloatMatrix &o) const;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<double> entries_;
};

struct RowEchelon
{
	Matrix reduced;
	std::vector<std::size_t> pivots;
};

RowEchelon rref(const Matrix &m);
std::size_t rank(const Matrix &m);

/// Basis of the null space; one vector per free column, with a 1 in that
/// column.
std::vector<Vector> kernel_basis(const Matrix &m);

/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<Vector> solve_linear(const Matrix &m, std::span<const Rational> b);

/// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix &m);

struct Nilpotency
{
	bool nilpotent = false;
	/// Least k with m^k = 0 (0 when not nilpotent).
	std::size_t index = 0;
};

Nilpotency is_nilpotent(const Matrix &m);

enum class ExpMode { exact, floating };

constexpr double default_exp_tolerance = 1e-12;

/// Finite series sum_{k<index} m^k/k!. Throws std::domain_error
/// "not nilpotent; use float mode" otherwise.
Matrix exp_exact(const Matrix &m);

/// Scaling and squaring with a Taylor kernel truncated once the remainder
/// bound drops below tol.
FloatMatrix exp_float(const FloatMatrix &m, double tol = default_exp_tolerance);

std::variant<Matrix, FloatMatrix> mat_exp(const Matrix &m, ExpMode mode,
                                          double tol = default_exp_tolerance);

} // namespace leibniz

#endif
