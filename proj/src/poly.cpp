#include "leibniz/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace leibniz {

Poly Poly::constant(std::size_t var_count, const Rational &c)
{
	Poly p(var_count);
	p.add_term(Exponent(var_count, 0), c);
	return p;
}

Poly Poly::variable(std::size_t var_count, std::size_t i)
{
	if (i >= var_count)
		throw std::out_of_range("variable index out of range");
	Exponent e(var_count, 0);
	e[i] = 1;
	return monomial(e, Rational(1));
}

Poly Poly::monomial(const Exponent &e, const Rational &c)
{
	Poly p(e.size());
	p.add_term(e, c);
	return p;
}

unsigned Poly::degree() const
{
	unsigned d = 0;
	for (const auto &[e, c] : terms_)
		d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
	return d;
}

Rational Poly::coefficient(const Exponent &e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent &e, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void Poly::require_same(const Poly &o) const
{
	if (n_ != o.n_)
		throw std::invalid_argument("polynomials in different numbers of variables");
}

Poly &Poly::operator+=(const Poly &o)
{
	require_same(o);
	for (const auto &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	require_same(o);
	for (const auto &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

Poly Poly::operator+(const Poly &o) const
{
	Poly r = *this;
	return r += o;
}

Poly Poly::operator-(const Poly &o) const
{
	Poly r = *this;
	return r -= o;
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::operator*(const Poly &o) const
{
	require_same(o);
	Poly r(n_);
	Exponent e(n_);
	for (const auto &[e1, c1] : terms_)
		for (const auto &[e2, c2] : o.terms_)
		{
			for (std::size_t i = 0; i < n_; ++i)
				e[i] = e1[i] + e2[i];
			r.add_term(e, c1 * c2);
		}
	return r;
}

Poly Poly::scaled(const Rational &c) const
{
	Poly r(n_);
	if (c == 0)
		return r;
	for (const auto &[e, v] : terms_)
		r.terms_.emplace(e, v * c);
	return r;
}

Poly Poly::derivative(std::size_t i) const
{
	if (i >= n_)
		throw std::out_of_range("derivative: variable index out of range");
	Poly r(n_);
	for (const auto &[e, c] : terms_)
	{
		if (e[i] == 0)
			continue;
		Exponent d = e;
		--d[i];
		r.add_term(d, c * e[i]);
	}
	return r;
}

Rational Poly::evaluate(std::span<const Rational> at) const
{
	if (at.size() != n_)
		throw std::invalid_argument("evaluate: wrong number of coordinates");
	Rational sum = 0;
	for (const auto &[e, c] : terms_)
	{
		Rational term = c;
		for (std::size_t i = 0; i < n_; ++i)
			for (unsigned k = 0; k < e[i]; ++k)
				term *= at[i];
		sum += term;
	}
	return sum;
}

std::vector<std::string> default_var_names(std::size_t n)
{
	std::vector<std::string> names;
	for (std::size_t i = 0; i < n; ++i)
		names.push_back("x" + std::to_string(i + 1));
	return names;
}

std::string Poly::to_string(const std::vector<std::string> &vars) const
{
	if (vars.size() != n_)
		throw std::invalid_argument("to_string: wrong number of variable names");
	if (terms_.empty())
		return "0";
	std::vector<const std::pair<const Exponent, Rational> *> order;
	for (const auto &t : terms_)
		order.push_back(&t);
	auto total = [](const Exponent &e) { return std::accumulate(e.begin(), e.end(), 0u); };
	std::sort(order.begin(), order.end(), [&](auto *a, auto *b) {
		unsigned da = total(a->first), db = total(b->first);
		if (da != db)
			return da > db;
		return a->first > b->first;
	});

	std::string out;
	bool first = true;
	for (const auto *t : order)
	{
		const Exponent &e = t->first;
		Rational c = t->second;
		bool negative = c < 0;
		if (negative)
			c = -c;
		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		first = false;

		std::string factors;
		for (std::size_t i = 0; i < n_; ++i)
		{
			if (e[i] == 0)
				continue;
			if (!factors.empty())
				factors += "*";
			factors += vars[i];
			if (e[i] > 1)
				factors += "^" + std::to_string(e[i]);
		}
		if (factors.empty())
			out += c.get_str();
		else if (c == 1)
			out += factors;
		else
			out += c.get_str() + "*" + factors;
	}
	return out;
}

std::string Poly::to_string() const { return to_string(default_var_names(n_)); }

} // namespace leibniz
