#ifndef LEIBNIZ_COURANT_HPP
#define LEIBNIZ_COURANT_HPP

#include "leibniz/check.hpp"
#include "leibniz/poly.hpp"
#include "leibniz/random.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibniz {

/// n polynomial components in n variables.
template <class Tag>
struct PolyTuple
{
	std::vector<Poly> c;

	static PolyTuple zero(std::size_t n) { return PolyTuple{std::vector<Poly>(n, Poly(n))}; }
	/// Unit coordinate field / form: d/dx_{i+1} or dx_{i+1}.
	static PolyTuple unit(std::size_t n, std::size_t i)
	{
		PolyTuple t = zero(n);
		t.c[i] = Poly::constant(n, Rational(1));
		return t;
	}

	std::size_t var_count() const { return c.size(); }
	Poly &operator[](std::size_t i) { return c[i]; }
	const Poly &operator[](std::size_t i) const { return c[i]; }

	bool is_zero() const
	{
		for (const auto &p : c)
			if (!p.is_zero())
				return false;
		return true;
	}
	PolyTuple operator+(const PolyTuple &o) const
	{
		PolyTuple r = *this;
		for (std::size_t i = 0; i < c.size(); ++i)
			r.c[i] += o.c.at(i);
		return r;
	}
	PolyTuple operator-(const PolyTuple &o) const
	{
		PolyTuple r = *this;
		for (std::size_t i = 0; i < c.size(); ++i)
			r.c[i] -= o.c.at(i);
		return r;
	}
	PolyTuple operator-() const { return scaled(Rational(-1)); }
	PolyTuple scaled(const Rational &q) const
	{
		PolyTuple r = *this;
		for (auto &p : r.c)
			p = p.scaled(q);
		return r;
	}
	/// Multiplication by a function.
	PolyTuple times(const Poly &f) const
	{
		PolyTuple r = *this;
		for (auto &p : r.c)
			p = p * f;
		return r;
	}
	friend bool operator==(const PolyTuple &a, const PolyTuple &b) { return a.c == b.c; }
};

struct VectorFieldTag {};
struct OneFormTag {};
using VectorField = PolyTuple<VectorFieldTag>;
using OneForm = PolyTuple<OneFormTag>;

/// Skew 2-tensor stored on i < j; at(j,i) = -at(i,j), at(i,i) = 0.
template <class Tag>
struct SkewTensor
{
	std::size_t n = 0;
	std::vector<Poly> upper;

	static SkewTensor zero(std::size_t n)
	{
		return SkewTensor{n, std::vector<Poly>(n * (n > 0 ? n - 1 : 0) / 2, Poly(n))};
	}
	std::size_t index(std::size_t i, std::size_t j) const { return i * n - i * (i + 1) / 2 + (j - i - 1); }
	Poly at(std::size_t i, std::size_t j) const
	{
		if (i == j)
			return Poly(n);
		return i < j ? upper[index(i, j)] : -upper[index(j, i)];
	}
	void set(std::size_t i, std::size_t j, const Poly &p)
	{
		if (i == j)
			throw std::invalid_argument("diagonal of a skew tensor is zero");
		if (i < j)
			upper[index(i, j)] = p;
		else
			upper[index(j, i)] = -p;
	}
	bool is_zero() const
	{
		for (const auto &p : upper)
			if (!p.is_zero())
				return false;
		return true;
	}
	friend bool operator==(const SkewTensor &a, const SkewTensor &b) { return a.n == b.n && a.upper == b.upper; }
};

struct TwoFormTag {};
struct BivectorTag {};
/// sum_{i<j} w_ij dx_i ^ dx_j.
using TwoForm = SkewTensor<TwoFormTag>;
/// sum_{i<j} pi^ij d_i ^ d_j.
using Bivector = SkewTensor<BivectorTag>;

struct Section
{
	VectorField vf;
	OneForm form;

	static Section zero(std::size_t n) { return {VectorField::zero(n), OneForm::zero(n)}; }
	std::size_t var_count() const { return vf.var_count(); }
	bool is_zero() const { return vf.is_zero() && form.is_zero(); }
	Section operator+(const Section &o) const { return {vf + o.vf, form + o.form}; }
	Section operator-(const Section &o) const { return {vf - o.vf, form - o.form}; }
	Section operator-() const { return {-vf, -form}; }
	Section scaled(const Rational &q) const { return {vf.scaled(q), form.scaled(q)}; }
	Section times(const Poly &f) const { return {vf.times(f), form.times(f)}; }
	friend bool operator==(const Section &a, const Section &b) { return a.vf == b.vf && a.form == b.form; }
};

// ------------------------------------------------------ Cartan calculus

OneForm d(const Poly &f);
TwoForm d(const OneForm &theta);
Poly interior(const VectorField &xi, const OneForm &theta);
OneForm interior(const VectorField &xi, const TwoForm &omega);
/// xi(f) = sum xi_i df/dx_i.
Poly apply_field(const VectorField &xi, const Poly &f);
VectorField vf_bracket(const VectorField &a, const VectorField &b);
/// Cartan formula i_xi d theta + d i_xi theta.
OneForm lie_derivative(const VectorField &xi, const OneForm &theta);
/// Coordinate formula sum_i xi_i d_i theta_j + theta_i d_j xi_i.
OneForm lie_derivative_coordinates(const VectorField &xi, const OneForm &theta);
/// (pi# theta)^i = sum_j pi^ij theta_j.
VectorField sharp(const Bivector &pi, const OneForm &theta);

// --------------------------------------------------- standard Courant

/// 1/2 (i_xi1 theta2 + i_xi2 theta1).
Poly pairing(const Section &x, const Section &y);
/// f -> (0, df).
Section D(const Poly &f);
Section courant_bracket(const Section &x, const Section &y);
Section dorfman_product(const Section &x, const Section &y);
/// 1/3 of the cyclic sum of <[[x,y]], z>.
Poly t_function(const Section &x, const Section &y, const Section &z);
/// Cyclic sum of [[[[x,y]],z]].
Section jacobiator(const Section &x, const Section &y, const Section &z);
/// Closed form -1/4 ([[xi1,xi2],xi3], L_[xi1,xi2] theta3 - i_xi3 d(L_xi1 theta2 - L_xi2 theta1)).
Section courant_ternary(const Section &x, const Section &y, const Section &z);

/// Random section with polynomial components of degree <= max_degree.
Section random_section(Pcg &rng, std::size_t n, unsigned max_degree = 2);
Poly random_poly(Pcg &rng, std::size_t n, unsigned max_degree = 2);

/// Axioms 1-5 on the supplied triples/functions plus `samples` random ones.
std::vector<NamedCheck> axiom_suite(std::size_t n, const std::vector<Section> &sections,
                                    const std::vector<Poly> &functions, std::uint64_t seed, std::size_t samples);

/// Leibniz identity for the Dorfman product, the ideal identity
/// x.Df = D(rho(x) f) = 2 D<x,Df>, and the skew/symmetric decomposition.
std::vector<NamedCheck> dorfman_checks(std::size_t n, const std::vector<Section> &sections, std::uint64_t seed,
                                       std::size_t samples);

/// x.Df = D<x,Df> taken literally, for the given inputs; returns the first
/// input where the two sides differ.
std::optional<std::string> literal_ideal_identity_counterexample(const Section &x, const Poly &f);

struct GraphClosure
{
	bool closed = true;
	std::string witness;
};

/// Graph {(pi# theta, theta)} under the Courant bracket, tested on the
/// constant forms dx_i, the supplied forms and `samples` random ones.
GraphClosure poisson_graph_closure(const Bivector &pi, const std::vector<OneForm> &forms, std::uint64_t seed,
                                   std::size_t samples);
/// Graph {(xi, i_xi omega)}.
GraphClosure twoform_graph_closure(const TwoForm &omega, const std::vector<VectorField> &fields, std::uint64_t seed,
                                   std::size_t samples);

// ------------------------------------------------ Omega^1 / dC^infinity

struct HomotopyQuotient
{
	OneForm representative;
	Poly potential;
};

/// Potential h(theta) = sum_i int_0^1 theta_i(tx) x_i dt and representative
/// theta - d h(theta).
HomotopyQuotient homotopy_quotient(const OneForm &theta);

/// Element of (X ⋉ Omega^1/dC) ⋉ (X x Omega^1): (xi, [phi]) and (eta, theta).
struct DoubleSemidirect
{
	VectorField xi;
	/// Canonical representative of the class.
	OneForm phi;
	Section e;

	friend bool operator==(const DoubleSemidirect &a, const DoubleSemidirect &b)
	{
		return a.xi == b.xi && a.phi == b.phi && a.e == b.e;
	}
};

DoubleSemidirect double_semidirect_bracket(const DoubleSemidirect &a, const DoubleSemidirect &b);
/// sigma_s(x) = (s (xi, [theta]), x).
DoubleSemidirect double_semidirect_section(const Section &x, const Rational &s);

/// Text form "(xi components | form components)" with variables x1..xn.
std::string to_string(const Section &x);

} // namespace leibniz

#endif
