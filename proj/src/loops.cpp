#include "leibniz/loops.hpp"

#include "leibniz/parallel.hpp"
#include "leibniz/random.hpp"

#include <cmath>
#include <sstream>

namespace leibniz {

bool associative_envelope_nilpotent(const std::vector<Matrix> &mats)
{
	if (mats.empty())
		return true;
	const std::size_t n = mats.front().rows();
	// W_0 = Q^n, W_{k+1} = sum_i M_i W_k. The generated algebra is nilpotent
	// iff W_n = 0 (a nilpotent matrix algebra is strictly triangularizable).
	Subspace w = Subspace::full(n);
	for (std::size_t step = 0; step < n && w.dim() > 0; ++step)
	{
		std::vector<Vector> next;
		for (const auto &m : mats)
			for (const auto &v : w.basis())
				next.push_back(m.apply(v));
		w = Subspace::span(n, next);
	}
	return w.dim() == 0;
}

LoopContext::LoopContext(StructureAlgebra E, Rational s, ExpMode mode, double tol)
    : E_(std::move(E)), s_(std::move(s)), mode_(mode), tol_(tol)
{
	const std::size_t n = E_.dim();
	std::vector<Matrix> lams;
	for (std::size_t i = 0; i < n; ++i)
		lams.push_back(E_.left_mul_basis(i));
	envelope_nilpotent_ = associative_envelope_nilpotent(lams);
	if (envelope_nilpotent_)
	{
		Pcg rng(0x6c6f6f70);
		for (int k = 0; k < 32 && envelope_nilpotent_; ++k)
			envelope_nilpotent_ = is_nilpotent(E_.left_mul(sample_vector(rng, n))).nilpotent;
	}
	constants_f_.reserve(E_.constants().size());
	for (const auto &c : E_.constants())
		constants_f_.push_back(c.get_d());
}

// ------------------------------------------------------------------ exact

Matrix LoopContext::exp_lambda(std::span<const Rational> x, const Rational &factor) const
{
	return exp_exact(E_.left_mul(x).scaled(factor * s_));
}

Vector LoopContext::product(std::span<const Rational> x, std::span<const Rational> y) const
{
	return add(x, exp_lambda(x, 1).apply(y));
}

Vector LoopContext::left_inverse(std::span<const Rational> x) const
{
	return scale(Rational(-1), exp_lambda(x, -1).apply(x));
}

Vector LoopContext::left_divide(std::span<const Rational> a, std::span<const Rational> b) const
{
	return exp_lambda(a, -1).apply(sub(b, a));
}

Matrix LoopContext::left_inner_mapping(std::span<const Rational> a, std::span<const Rational> b) const
{
	Vector ab = product(a, b);
	return exp_lambda(ab, -1) * exp_lambda(a, 1) * exp_lambda(b, 1);
}

// ------------------------------------------------------------------ float

FloatMatrix LoopContext::exp_lambda(std::span<const double> x, double factor) const
{
	const std::size_t n = E_.dim();
	FloatMatrix m(n, n);
	double scale_by = factor * s_.get_d();
	for (std::size_t i = 0; i < n; ++i)
	{
		if (x[i] == 0.0)
			continue;
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				m(k, j) += scale_by * x[i] * constants_f_[(i * n + j) * n + k];
	}
	return exp_float(m, default_exp_tolerance);
}

namespace {

FVector fadd(std::span<const double> a, std::span<const double> b)
{
	FVector r(a.begin(), a.end());
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

FVector fsub(std::span<const double> a, std::span<const double> b)
{
	FVector r(a.begin(), a.end());
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] -= b[i];
	return r;
}

} // namespace

FVector LoopContext::product(std::span<const double> x, std::span<const double> y) const
{
	return fadd(x, exp_lambda(x, 1.0).apply(y));
}

FVector LoopContext::left_inverse(std::span<const double> x) const
{
	FVector r = exp_lambda(x, -1.0).apply(x);
	for (auto &v : r)
		v = -v;
	return r;
}

FVector LoopContext::left_divide(std::span<const double> a, std::span<const double> b) const
{
	return exp_lambda(a, -1.0).apply(fsub(b, a));
}

FloatMatrix LoopContext::left_inner_mapping(std::span<const double> a, std::span<const double> b) const
{
	FVector ab = product(a, b);
	return exp_lambda(ab, -1.0) * exp_lambda(a, 1.0) * exp_lambda(b, 1.0);
}

// -------------------------------------------------------- property check

namespace {

std::string text(const Vector &v)
{
	std::string s = "[";
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? "," : "") + v[i].get_str();
	return s + "]";
}

std::string text(const FVector &v)
{
	std::ostringstream os;
	os.precision(17);
	os << "[";
	for (std::size_t i = 0; i < v.size(); ++i)
		os << (i ? "," : "") << v[i];
	os << "]";
	return os.str();
}

struct ExactEq
{
	bool operator()(const Vector &a, const Vector &b) const { return a == b; }
};

struct FloatEq
{
	double tol;
	bool operator()(const FVector &a, const FVector &b) const
	{
		for (std::size_t i = 0; i < a.size(); ++i)
			if (!(std::fabs(a[i] - b[i]) <= tol))
				return false;
		return true;
	}
};

struct LoopSample
{
	Vector a, b, x, y;
};

using Witness = std::optional<std::string>;

template <class V, class Eq>
std::vector<Witness> check_sample(const LoopContext &ctx, const V &a, const V &b, const V &x, const V &y, Eq eq)
{
	std::vector<Witness> w(4);
	const V zero(ctx.dim());
	auto mismatch = [](const std::string &what, const V &l, const V &r) {
		return what + ": lhs=" + text(l) + ", rhs=" + text(r);
	};

	if (V l = ctx.product(zero, x); !eq(l, x))
		w[0] = mismatch("0<>x = x", l, x);
	else if (V r = ctx.product(x, zero); !eq(r, x))
		w[0] = mismatch("x<>0 = x", r, x);

	V ab = ctx.product(a, b);
	auto L = ctx.left_inner_mapping(a, b);
	if (V l = ctx.product(a, ctx.left_divide(a, b)); !eq(l, b))
		w[1] = mismatch("a<>(a\\b) = b", l, b);
	else if (V r = ctx.left_divide(a, ctx.product(a, x)); !eq(r, x))
		w[1] = mismatch("a\\(a<>x) = x", r, x);
	else
	{
		V lhs = ctx.product(a, ctx.product(b, x));
		V rhs = ctx.product(ab, L.apply(x));
		if (!eq(lhs, rhs))
			w[1] = mismatch("a<>(b<>x) = (a<>b)<>L(a,b)x", lhs, rhs);
	}

	V xi = ctx.left_inverse(x);
	if (V l = ctx.product(x, xi); !eq(l, zero))
		w[2] = mismatch("x<>x' = 0", l, zero);
	else if (V l2 = ctx.product(xi, x); !eq(l2, zero))
		w[2] = mismatch("x'<>x = 0", l2, zero);
	else if (V l3 = ctx.product(xi, ctx.product(x, y)); !eq(l3, y))
		w[2] = mismatch("x'<>(x<>y) = y", l3, y);
	else if (V l4 = ctx.product(x, ctx.product(xi, y)); !eq(l4, y))
		w[2] = mismatch("x<>(x'<>y) = y", l4, y);

	V lhs = L.apply(ctx.product(x, y));
	V rhs = ctx.product(L.apply(x), L.apply(y));
	if (!eq(lhs, rhs))
		w[3] = mismatch("L(a,b)(x<>y) = L(a,b)x<>L(a,b)y", lhs, rhs);
	return w;
}

std::string sample_text(std::size_t k, const LoopSample &s)
{
	return "sample " + std::to_string(k) + " a=" + text(s.a) + " b=" + text(s.b) + " x=" + text(s.x) +
	       " y=" + text(s.y);
}

} // namespace

std::vector<NamedCheck> loop_property_check(const LoopContext &ctx, std::size_t samples, std::uint64_t seed)
{
	const std::size_t n = ctx.dim();
	Pcg rng(seed);
	std::vector<LoopSample> draws;
	draws.reserve(samples);
	for (std::size_t k = 0; k < samples; ++k)
	{
		LoopSample s;
		s.a = sample_vector(rng, n);
		s.b = sample_vector(rng, n);
		s.x = sample_vector(rng, n);
		s.y = sample_vector(rng, n);
		draws.push_back(std::move(s));
	}

	std::vector<std::vector<Witness>> results(samples);
	parallel_for(samples, [&](std::size_t k) {
		const auto &s = draws[k];
		try
		{
			if (ctx.mode() == ExpMode::exact)
				results[k] = check_sample<Vector>(ctx, s.a, s.b, s.x, s.y, ExactEq{});
			else
				results[k] = check_sample<FVector>(ctx, to_float(s.a), to_float(s.b), to_float(s.x), to_float(s.y),
				                                   FloatEq{ctx.tol()});
		}
		catch (const std::domain_error &e)
		{
			results[k] = std::vector<Witness>(4, std::string(e.what()));
		}
	});

	const char *names[4] = {"identity", "left_loop", "left_inverse_property", "A_l"};
	std::vector<NamedCheck> out;
	for (std::size_t c = 0; c < 4; ++c)
	{
		NamedCheck check{names[c], true, ""};
		for (std::size_t k = 0; k < samples; ++k)
			if (results[k][c])
			{
				check.pass = false;
				check.witness = sample_text(k, draws[k]) + ": " + *results[k][c];
				break;
			}
		out.push_back(std::move(check));
	}
	return out;
}

Vector hemisemidirect_loop_product(const StructureAlgebra &h, const ModuleAction &act, const Rational &s,
                                   std::span<const Rational> a, std::span<const Rational> b)
{
	const std::size_t hd = h.dim();
	auto xi = a.subspan(0, hd), x = a.subspan(hd);
	auto eta = b.subspan(0, hd), y = b.subspan(hd);
	Vector first = add(xi, exp_exact(h.left_mul(xi).scaled(s)).apply(eta));
	Vector second = add(x, exp_exact(act.of(xi).scaled(s)).apply(y));
	first.insert(first.end(), second.begin(), second.end());
	return first;
}

// ------------------------------------------------------------ connection

PolyVectorField constant_field(std::span<const Rational> v)
{
	const std::size_t n = v.size();
	PolyVectorField f = PolyVectorField::zero(n);
	for (std::size_t i = 0; i < n; ++i)
		f[i] = Poly::constant(n, v[i]);
	return f;
}

PolyVectorField connection_eval(const StructureAlgebra &E, const Rational &s, const PolyVectorField &X,
                                const PolyVectorField &Y)
{
	const std::size_t n = E.dim();
	if (X.var_count() != n || Y.var_count() != n)
		throw std::invalid_argument("connection: fields must have dim(E) components");
	PolyVectorField out = PolyVectorField::zero(n);
	for (std::size_t k = 0; k < n; ++k)
		out[k] = apply_field(X, Y[k]);
	for (std::size_t i = 0; i < n; ++i)
	{
		if (X[i].is_zero())
			continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (Y[j].is_zero())
				continue;
			Poly xy = X[i] * Y[j];
			for (std::size_t k = 0; k < n; ++k)
				if (E.c(i, j, k) != 0)
					out[k] -= xy.scaled(s * E.c(i, j, k));
		}
	}
	return out;
}

PolyVectorField connection_torsion(const StructureAlgebra &E, const Rational &s, const PolyVectorField &X,
                                   const PolyVectorField &Y)
{
	return connection_eval(E, s, X, Y) - connection_eval(E, s, Y, X) - vf_bracket(X, Y);
}

PolyVectorField connection_curvature(const StructureAlgebra &E, const Rational &s, const PolyVectorField &X,
                                     const PolyVectorField &Y, const PolyVectorField &Z)
{
	return connection_eval(E, s, X, connection_eval(E, s, Y, Z)) -
	       connection_eval(E, s, Y, connection_eval(E, s, X, Z)) - connection_eval(E, s, vf_bracket(X, Y), Z);
}

} // namespace leibniz
