#ifndef LEIBNIZ_POLY_HPP
#define LEIBNIZ_POLY_HPP

#include "leibniz/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace leibniz {

using Exponent = std::vector<unsigned>;

/// Sparse polynomial over Q in a fixed number of variables. Zero
/// coefficients are never stored, so equal polynomials have equal term maps.
class Poly
{
public:
	Poly() = default;
	explicit Poly(std::size_t var_count) : n_(var_count) {}

	static Poly constant(std::size_t var_count, const Rational &c);
	/// x_{i+1}.
	static Poly variable(std::size_t var_count, std::size_t i);
	static Poly monomial(const Exponent &e, const Rational &c);

	std::size_t var_count() const { return n_; }
	const std::map<Exponent, Rational> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	unsigned degree() const;
	Rational coefficient(const Exponent &e) const;

	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	Poly operator+(const Poly &o) const;
	Poly operator-(const Poly &o) const;
	Poly operator-() const;
	Poly operator*(const Poly &o) const;
	Poly scaled(const Rational &c) const;

	Poly derivative(std::size_t i) const;
	Rational evaluate(std::span<const Rational> at) const;

	/// Graded-lex descending, e.g. "3/2*x1^2*x2 - x2"; zero prints as "0".
	std::string to_string(const std::vector<std::string> &vars) const;
	std::string to_string() const;

	friend bool operator==(const Poly &a, const Poly &b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
	void add_term(const Exponent &e, const Rational &c);
	void require_same(const Poly &o) const;

	std::size_t n_ = 0;
	std::map<Exponent, Rational> terms_;
};

std::vector<std::string> default_var_names(std::size_t n);

} // namespace leibniz

#endif
