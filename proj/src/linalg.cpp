#include "leibniz/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace leibniz {

namespace {

bool all_digits(std::string_view s)
{
	return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text)
{
	auto trimmed = text;
	while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
		trimmed.remove_prefix(1);
	while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
		trimmed.remove_suffix(1);

	std::string_view body = trimmed;
	bool negative = false;
	if (!body.empty() && (body.front() == '-' || body.front() == '+'))
	{
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	auto slash = body.find('/');
	std::string_view num = body.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den))
		throw std::invalid_argument("not an exact rational: \"" + std::string(text) + "\"");

	mpz_class n(std::string(num), 10);
	mpz_class d(std::string(den), 10);
	if (d == 0)
		throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
	Rational q(negative ? mpz_class(-n) : n, d);
	q.canonicalize();
	return q;
}

Rational rat(long num, long den)
{
	if (den == 0)
		throw std::invalid_argument("zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

std::string to_string(const Rational &q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v(n, Rational(0));
	v.at(i) = 1;
	return v;
}

bool is_zero(std::span<const Rational> v)
{
	return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x == 0; });
}

Vector add(std::span<const Rational> a, std::span<const Rational> b)
{
	if (a.size() != b.size())
		throw std::invalid_argument("vector length mismatch");
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

Vector sub(std::span<const Rational> a, std::span<const Rational> b)
{
	if (a.size() != b.size())
		throw std::invalid_argument("vector length mismatch");
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] - b[i];
	return r;
}

Vector scale(const Rational &c, std::span<const Rational> v)
{
	Vector r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = c * v[i];
	return r;
}

FVector to_float(std::span<const Rational> v)
{
	FVector r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = v[i].get_d();
	return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
	if (entries_.size() != rows * cols)
		throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector> &cols)
{
	Matrix m(rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c)
	{
		if (cols[c].size() != rows)
			throw std::invalid_argument("column length mismatch");
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = cols[c][r];
	}
	return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector> &rows)
{
	Matrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r)
	{
		if (rows[r].size() != cols)
			throw std::invalid_argument("row length mismatch");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

Vector Matrix::row(std::size_t r) const
{
	return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
	              entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
	Vector v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

bool Matrix::is_zero() const { return leibniz::is_zero(entries_); }

Vector Matrix::apply(std::span<const Rational> v) const
{
	if (v.size() != cols_)
		throw std::invalid_argument("matrix-vector dimension mismatch");
	Vector r(rows_, Rational(0));
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			if (v[j] != 0 && (*this)(i, j) != 0)
				r[i] += (*this)(i, j) * v[j];
	return r;
}

Matrix Matrix::operator*(const Matrix &o) const
{
	if (cols_ != o.rows_)
		throw std::invalid_argument("matrix product dimension mismatch");
	Matrix p(rows_, o.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k)
		{
			const Rational &a = (*this)(i, k);
			if (a == 0)
				continue;
			for (std::size_t j = 0; j < o.cols_; ++j)
				if (o(k, j) != 0)
					p(i, j) += a * o(k, j);
		}
	return p;
}

Matrix Matrix::operator+(const Matrix &o) const
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw std::invalid_argument("matrix sum dimension mismatch");
	Matrix s(rows_, cols_);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		s.entries_[i] = entries_[i] + o.entries_[i];
	return s;
}

Matrix Matrix::operator-(const Matrix &o) const
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw std::invalid_argument("matrix difference dimension mismatch");
	Matrix s(rows_, cols_);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		s.entries_[i] = entries_[i] - o.entries_[i];
	return s;
}

Matrix Matrix::operator-() const { return scaled(Rational(-1)); }

Matrix Matrix::scaled(const Rational &c) const
{
	Matrix s(rows_, cols_);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		s.entries_[i] = c * entries_[i];
	return s;
}

FloatMatrix Matrix::to_float() const
{
	FloatMatrix f(rows_, cols_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			f(r, c) = (*this)(r, c).get_d();
	return f;
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

// ----------------------------------------------------------- FloatMatrix

FloatMatrix::FloatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

FloatMatrix FloatMatrix::identity(std::size_t n)
{
	FloatMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1.0;
	return m;
}

FVector FloatMatrix::apply(std::span<const double> v) const
{
	if (v.size() != cols_)
		throw std::invalid_argument("matrix-vector dimension mismatch");
	FVector r(rows_, 0.0);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			r[i] += (*this)(i, j) * v[j];
	return r;
}

FloatMatrix FloatMatrix::operator*(const FloatMatrix &o) const
{
	if (cols_ != o.rows_)
		throw std::invalid_argument("matrix product dimension mismatch");
	FloatMatrix p(rows_, o.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k)
			for (std::size_t j = 0; j < o.cols_; ++j)
				p(i, j) += (*this)(i, k) * o(k, j);
	return p;
}

FloatMatrix FloatMatrix::operator+(const FloatMatrix &o) const
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw std::invalid_argument("matrix sum dimension mismatch");
	FloatMatrix s(rows_, cols_);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		s.entries_[i] = entries_[i] + o.entries_[i];
	return s;
}

FloatMatrix FloatMatrix::operator-() const { return scaled(-1.0); }

FloatMatrix FloatMatrix::scaled(double c) const
{
	FloatMatrix s(rows_, cols_);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		s.entries_[i] = c * entries_[i];
	return s;
}

double FloatMatrix::norm_inf() const
{
	double best = 0.0;
	for (std::size_t i = 0; i < rows_; ++i)
	{
		double sum = 0.0;
		for (std::size_t j = 0; j < cols_; ++j)
			sum += std::abs((*this)(i, j));
		best = std::max(best, sum);
	}
	return best;
}

double FloatMatrix::max_abs_diff(const FloatMatrix &o) const
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw std::invalid_argument("matrix shape mismatch");
	double best = 0.0;
	for (std::size_t i = 0; i < entries_.size(); ++i)
		best = std::max(best, std::abs(entries_[i] - o.entries_[i]));
	return best;
}

// ------------------------------------------------------------ reductions

RowEchelon rref(const Matrix &m)
{
	Matrix a = m;
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col)
	{
		std::size_t sel = row;
		while (sel < a.rows() && a(sel, col) == 0)
			++sel;
		if (sel == a.rows())
			continue;
		if (sel != row)
			for (std::size_t c = 0; c < a.cols(); ++c)
				std::swap(a(sel, c), a(row, c));
		Rational inv = 1 / a(row, col);
		for (std::size_t c = col; c < a.cols(); ++c)
			a(row, c) *= inv;
		for (std::size_t r = 0; r < a.rows(); ++r)
		{
			if (r == row || a(r, col) == 0)
				continue;
			Rational factor = a(r, col);
			for (std::size_t c = col; c < a.cols(); ++c)
				if (a(row, c) != 0)
					a(r, c) -= factor * a(row, c);
		}
		pivots.push_back(col);
		++row;
	}
	return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix &m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix &m)
{
	auto [r, pivots] = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<Vector> basis;
	for (std::size_t free = 0; free < m.cols(); ++free)
	{
		if (is_pivot[free])
			continue;
		Vector v = zero_vector(m.cols());
		v[free] = 1;
		for (std::size_t i = 0; i < pivots.size(); ++i)
			v[pivots[i]] = -r(i, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<Vector> solve_linear(const Matrix &m, std::span<const Rational> b)
{
	if (b.size() != m.rows())
		throw std::invalid_argument("right-hand side length does not match row count");
	Matrix aug(m.rows(), m.cols() + 1);
	for (std::size_t r = 0; r < m.rows(); ++r)
	{
		for (std::size_t c = 0; c < m.cols(); ++c)
			aug(r, c) = m(r, c);
		aug(r, m.cols()) = b[r];
	}
	auto [red, pivots] = rref(aug);
	if (!pivots.empty() && pivots.back() == m.cols())
		return std::nullopt;
	Vector x = zero_vector(m.cols());
	for (std::size_t i = 0; i < pivots.size(); ++i)
		x[pivots[i]] = red(i, m.cols());
	return x;
}

Matrix inverse(const Matrix &m)
{
	if (!m.is_square())
		throw std::invalid_argument("inverse of a non-square matrix");
	const std::size_t n = m.rows();
	Matrix aug(n, 2 * n);
	for (std::size_t r = 0; r < n; ++r)
	{
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = 1;
	}
	auto [red, pivots] = rref(aug);
	if (pivots.size() < n || pivots[n - 1] != n - 1)
		throw std::domain_error("matrix is singular");
	Matrix inv(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			inv(r, c) = red(r, n + c);
	return inv;
}

Nilpotency is_nilpotent(const Matrix &m)
{
	if (!m.is_square())
		throw std::invalid_argument("nilpotency test needs a square matrix");
	const std::size_t n = m.rows();
	if (m.is_zero())
		return {true, 1};
	// Repeated squaring decides nilpotency (m^(2^k) = 0 for 2^k >= n);
	// the index then comes from a linear scan of powers.
	Matrix sq = m;
	std::size_t power = 1;
	while (power < n)
	{
		sq = sq * sq;
		power *= 2;
	}
	if (!sq.is_zero())
		return {false, 0};
	Matrix p = m;
	std::size_t k = 1;
	while (!p.is_zero())
	{
		p = p * m;
		++k;
	}
	return {true, k};
}

Matrix exp_exact(const Matrix &m)
{
	auto nil = is_nilpotent(m);
	if (!nil.nilpotent)
		throw std::domain_error("not nilpotent; use float mode");
	const std::size_t n = m.rows();
	Matrix sum = Matrix::identity(n);
	Matrix term = Matrix::identity(n);
	for (std::size_t k = 1; k < nil.index; ++k)
	{
		term = (term * m).scaled(rat(1, static_cast<long>(k)));
		sum = sum + term;
	}
	return sum;
}

FloatMatrix exp_float(const FloatMatrix &m, double tol)
{
	if (m.rows() != m.cols())
		throw std::invalid_argument("exponential of a non-square matrix");
	for (double x : m.entries())
		if (!std::isfinite(x))
			throw std::domain_error("matrix has non-finite entries");
	const std::size_t n = m.rows();
	double norm = m.norm_inf();
	int squarings = 0;
	while (norm > 0.5)
	{
		norm /= 2.0;
		++squarings;
	}
	FloatMatrix a = m.scaled(std::ldexp(1.0, -squarings));

	// Remainder of the order-k Taylor polynomial is bounded by
	// norm^(k+1)/(k+1)! * 1/(1 - norm/(k+2)).
	FloatMatrix sum = FloatMatrix::identity(n);
	FloatMatrix term = FloatMatrix::identity(n);
	double bound_term = 1.0;
	for (int k = 1; k < 60; ++k)
	{
		term = (term * a).scaled(1.0 / k);
		sum = sum + term;
		bound_term *= norm / (k + 1);
		double remainder = bound_term / (1.0 - norm / (k + 2));
		if (remainder < tol * 1e-3 || norm == 0.0)
			break;
	}
	for (int i = 0; i < squarings; ++i)
		sum = sum * sum;
	return sum;
}

std::variant<Matrix, FloatMatrix> mat_exp(const Matrix &m, ExpMode mode, double tol)
{
	if (mode == ExpMode::exact)
		return exp_exact(m);
	return exp_float(m.to_float(), tol);
}

} // namespace leibniz
