#include "leibniz/courant.hpp"

#include "leibniz/parallel.hpp"

#include <functional>
#include <numeric>

namespace leibniz {

// ------------------------------------------------------ Cartan calculus

OneForm d(const Poly &f)
{
	const std::size_t n = f.var_count();
	OneForm out = OneForm::zero(n);
	for (std::size_t i = 0; i < n; ++i)
		out[i] = f.derivative(i);
	return out;
}

TwoForm d(const OneForm &theta)
{
	const std::size_t n = theta.var_count();
	TwoForm out = TwoForm::zero(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			out.set(i, j, theta[j].derivative(i) - theta[i].derivative(j));
	return out;
}

Poly interior(const VectorField &xi, const OneForm &theta)
{
	const std::size_t n = xi.var_count();
	Poly out(n);
	for (std::size_t i = 0; i < n; ++i)
		if (!xi[i].is_zero() && !theta[i].is_zero())
			out += xi[i] * theta[i];
	return out;
}

OneForm interior(const VectorField &xi, const TwoForm &omega)
{
	const std::size_t n = xi.var_count();
	OneForm out = OneForm::zero(n);
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t i = 0; i < n; ++i)
			if (i != j && !xi[i].is_zero())
				out[j] += xi[i] * omega.at(i, j);
	return out;
}

Poly apply_field(const VectorField &xi, const Poly &f)
{
	const std::size_t n = xi.var_count();
	Poly out(n);
	for (std::size_t i = 0; i < n; ++i)
		if (!xi[i].is_zero())
			out += xi[i] * f.derivative(i);
	return out;
}

VectorField vf_bracket(const VectorField &a, const VectorField &b)
{
	const std::size_t n = a.var_count();
	VectorField out = VectorField::zero(n);
	for (std::size_t k = 0; k < n; ++k)
		out[k] = apply_field(a, b[k]) - apply_field(b, a[k]);
	return out;
}

OneForm lie_derivative(const VectorField &xi, const OneForm &theta)
{
	return interior(xi, d(theta)) + d(interior(xi, theta));
}

OneForm lie_derivative_coordinates(const VectorField &xi, const OneForm &theta)
{
	const std::size_t n = xi.var_count();
	OneForm out = OneForm::zero(n);
	for (std::size_t j = 0; j < n; ++j)
	{
		out[j] = apply_field(xi, theta[j]);
		for (std::size_t i = 0; i < n; ++i)
			if (!theta[i].is_zero())
				out[j] += theta[i] * xi[i].derivative(j);
	}
	return out;
}

VectorField sharp(const Bivector &pi, const OneForm &theta)
{
	const std::size_t n = pi.n;
	VectorField out = VectorField::zero(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (i != j && !theta[j].is_zero())
				out[i] += pi.at(i, j) * theta[j];
	return out;
}

// --------------------------------------------------- standard Courant

Poly pairing(const Section &x, const Section &y)
{
	return (interior(x.vf, y.form) + interior(y.vf, x.form)).scaled(rat(1, 2));
}

Section D(const Poly &f) { return {VectorField::zero(f.var_count()), d(f)}; }

Section courant_bracket(const Section &x, const Section &y)
{
	Poly spoil = interior(x.vf, y.form) - interior(y.vf, x.form);
	return {vf_bracket(x.vf, y.vf),
	        lie_derivative(x.vf, y.form) - lie_derivative(y.vf, x.form) - d(spoil).scaled(rat(1, 2))};
}

Section dorfman_product(const Section &x, const Section &y)
{
	return {vf_bracket(x.vf, y.vf), lie_derivative(x.vf, y.form) - interior(y.vf, d(x.form))};
}

Poly t_function(const Section &x, const Section &y, const Section &z)
{
	Poly sum = pairing(courant_bracket(x, y), z) + pairing(courant_bracket(y, z), x) +
	           pairing(courant_bracket(z, x), y);
	return sum.scaled(rat(1, 3));
}

Section jacobiator(const Section &x, const Section &y, const Section &z)
{
	return courant_bracket(courant_bracket(x, y), z) + courant_bracket(courant_bracket(y, z), x) +
	       courant_bracket(courant_bracket(z, x), y);
}

Section courant_ternary(const Section &x, const Section &y, const Section &z)
{
	VectorField xy = vf_bracket(x.vf, y.vf);
	OneForm inner = lie_derivative(x.vf, y.form) - lie_derivative(y.vf, x.form);
	Section s{vf_bracket(xy, z.vf), lie_derivative(xy, z.form) - interior(z.vf, d(inner))};
	return s.scaled(rat(-1, 4));
}

// ------------------------------------------------------------- sampling

namespace {

void monomials(std::size_t n, unsigned max_degree, Exponent &cur, std::size_t var, unsigned left,
               std::vector<Exponent> &out)
{
	if (var == n)
	{
		out.push_back(cur);
		return;
	}
	for (unsigned k = 0; k <= left; ++k)
	{
		cur[var] = k;
		monomials(n, max_degree, cur, var + 1, left - k, out);
	}
	cur[var] = 0;
}

} // namespace

Poly random_poly(Pcg &rng, std::size_t n, unsigned max_degree)
{
	std::vector<Exponent> all;
	Exponent cur(n, 0);
	monomials(n, max_degree, cur, 0, max_degree, all);
	Poly p(n);
	for (const auto &e : all)
		if (rng.chance(1, 3))
			p += Poly::monomial(e, sample_rational(rng));
	return p;
}

Section random_section(Pcg &rng, std::size_t n, unsigned max_degree)
{
	Section s = Section::zero(n);
	for (std::size_t i = 0; i < n; ++i)
		s.vf[i] = random_poly(rng, n, max_degree);
	for (std::size_t i = 0; i < n; ++i)
		s.form[i] = random_poly(rng, n, max_degree);
	return s;
}

std::string to_string(const Section &x)
{
	std::string out = "(";
	for (std::size_t i = 0; i < x.vf.var_count(); ++i)
		out += (i ? ", " : "") + x.vf[i].to_string();
	out += " | ";
	for (std::size_t i = 0; i < x.form.var_count(); ++i)
		out += (i ? ", " : "") + x.form[i].to_string();
	return out + ")";
}

namespace {

std::string form_text(const OneForm &f) { return to_string(Section{VectorField::zero(f.var_count()), f}); }
std::string field_text(const VectorField &v) { return to_string(Section{v, OneForm::zero(v.var_count())}); }

struct Triple
{
	Section x, y, z;
	Poly f, g;
	std::string label;
};

std::vector<Triple> make_triples(std::size_t n, const std::vector<Section> &sections,
                                 const std::vector<Poly> &functions, std::uint64_t seed, std::size_t samples)
{
	std::vector<Triple> triples;
	Pcg rng(seed);
	std::vector<Poly> fs = functions;
	if (fs.empty())
		fs.push_back(Poly::variable(n, 0));
	constexpr std::size_t supplied_cap = 64;
	const std::size_t m = sections.size();
	for (std::size_t a = 0; a < m && triples.size() < supplied_cap; ++a)
		for (std::size_t b = 0; b < m && triples.size() < supplied_cap; ++b)
			for (std::size_t c = 0; c < m && triples.size() < supplied_cap; ++c)
			{
				std::size_t k = triples.size();
				triples.push_back({sections[a], sections[b], sections[c], fs[k % fs.size()],
				                   fs[(k + 1) % fs.size()],
				                   "supplied (" + std::to_string(a) + "," + std::to_string(b) + "," +
				                       std::to_string(c) + ")"});
			}
	for (std::size_t k = 0; k < samples; ++k)
	{
		Triple t{random_section(rng, n), random_section(rng, n), random_section(rng, n), random_poly(rng, n),
		         random_poly(rng, n), "sample " + std::to_string(k)};
		triples.push_back(std::move(t));
	}
	return triples;
}

std::string inputs_text(const Triple &t)
{
	return t.label + ": x=" + to_string(t.x) + ", y=" + to_string(t.y) + ", z=" + to_string(t.z) +
	       ", f=" + t.f.to_string();
}

using Witness = std::optional<std::string>;

std::string sides(const Section &l, const Section &r) { return "lhs=" + to_string(l) + ", rhs=" + to_string(r); }
std::string sides(const Poly &l, const Poly &r) { return "lhs=" + l.to_string() + ", rhs=" + r.to_string(); }

/// Runs every check on every triple in parallel; for each check keeps the
/// lowest-index failure.
std::vector<NamedCheck> run_checks(const std::vector<Triple> &triples, const std::vector<std::string> &names,
                                   const std::function<std::vector<Witness>(const Triple &)> &fn)
{
	std::vector<std::vector<Witness>> results(triples.size());
	parallel_for(triples.size(), [&](std::size_t i) { results[i] = fn(triples[i]); });
	std::vector<NamedCheck> out;
	for (std::size_t c = 0; c < names.size(); ++c)
	{
		NamedCheck check{names[c], true, ""};
		for (std::size_t i = 0; i < triples.size(); ++i)
			if (results[i][c])
			{
				check.pass = false;
				check.witness = inputs_text(triples[i]) + "; " + *results[i][c];
				break;
			}
		out.push_back(std::move(check));
	}
	return out;
}

} // namespace

std::vector<NamedCheck> axiom_suite(std::size_t n, const std::vector<Section> &sections,
                                    const std::vector<Poly> &functions, std::uint64_t seed, std::size_t samples)
{
	auto triples = make_triples(n, sections, functions, seed, samples);
	return run_checks(
	    triples,
	    {"axiom1_jacobiator", "axiom2_anchor_homomorphism", "axiom3_leibniz_rule", "axiom4_rho_D_zero",
	     "axiom5_invariance"},
	    [](const Triple &t) {
		    std::vector<Witness> w(5);
		    const auto &[x, y, z, f, g, label] = t;
		    Section jac = jacobiator(x, y, z), dt = D(t_function(x, y, z));
		    if (jac != dt)
			    w[0] = sides(jac, dt);

		    VectorField l2 = courant_bracket(x, y).vf, r2 = vf_bracket(x.vf, y.vf);
		    if (l2 != r2)
			    w[1] = "lhs=" + field_text(l2) + ", rhs=" + field_text(r2);

		    Section l3 = courant_bracket(x, y.times(f));
		    Section r3 = courant_bracket(x, y).times(f) + y.times(apply_field(x.vf, f)) - D(f).times(pairing(x, y));
		    if (l3 != r3)
			    w[2] = sides(l3, r3);

		    Section df = D(f), dg = D(g);
		    Poly pdd = pairing(df, dg);
		    if (!df.vf.is_zero() || !pdd.is_zero())
			    w[3] = "rho(Df)=" + field_text(df.vf) + ", <Df,Dg>=" + pdd.to_string();

		    Poly l5 = apply_field(x.vf, pairing(y, z));
		    Poly r5 = pairing(courant_bracket(x, y) + D(pairing(x, y)), z) +
		              pairing(y, courant_bracket(x, z) + D(pairing(x, z)));
		    if (l5 != r5)
			    w[4] = sides(l5, r5);
		    return w;
	    });
}

std::vector<NamedCheck> dorfman_checks(std::size_t n, const std::vector<Section> &sections, std::uint64_t seed,
                                       std::size_t samples)
{
	auto triples = make_triples(n, sections, {}, seed ^ 0x9e3779b97f4a7c15ULL, samples);
	return run_checks(
	    triples,
	    {"dorfman_leibniz_identity", "dorfman_ideal_identity", "dorfman_skew_part", "dorfman_symmetric_part",
	     "ternary_closed_form", "lie_derivative_two_ways", "d_squared_zero"},
	    [](const Triple &t) {
		    std::vector<Witness> w(7);
		    const auto &[x, y, z, f, g, label] = t;
		    Section l1 = dorfman_product(x, dorfman_product(y, z));
		    Section r1 = dorfman_product(dorfman_product(x, y), z) + dorfman_product(y, dorfman_product(x, z));
		    if (l1 != r1)
			    w[0] = sides(l1, r1);

		    Section xdf = dorfman_product(x, D(f));
		    Section via_rho = D(apply_field(x.vf, f));
		    Section via_pairing = D(pairing(x, D(f))).scaled(2);
		    if (xdf != via_rho || xdf != via_pairing)
			    w[1] = "x.Df=" + to_string(xdf) + ", D(rho(x)f)=" + to_string(via_rho) +
			           ", 2D<x,Df>=" + to_string(via_pairing);

		    Section xy = dorfman_product(x, y), yx = dorfman_product(y, x);
		    Section skew = courant_bracket(x, y).scaled(2);
		    if (xy - yx != skew)
			    w[2] = sides(xy - yx, skew);
		    Section sym = D(pairing(x, y)).scaled(2);
		    if (xy + yx != sym)
			    w[3] = sides(xy + yx, sym);

		    Section closed = courant_ternary(x, y, z);
		    Section via_product = dorfman_product(xy, z).scaled(rat(-1, 4));
		    if (closed != via_product)
			    w[4] = sides(closed, via_product);

		    OneForm cartan = lie_derivative(x.vf, y.form), coord = lie_derivative_coordinates(x.vf, y.form);
		    if (cartan != coord)
			    w[5] = "cartan=" + form_text(cartan) + ", coordinates=" + form_text(coord);

		    if (!d(d(f)).is_zero())
			    w[6] = "d(df) != 0 for f=" + f.to_string();
		    return w;
	    });
}

std::optional<std::string> literal_ideal_identity_counterexample(const Section &x, const Poly &f)
{
	Section lhs = dorfman_product(x, D(f));
	Section rhs = D(pairing(x, D(f)));
	if (lhs == rhs)
		return std::nullopt;
	return "x=" + to_string(x) + ", f=" + f.to_string() + ": x.Df=" + to_string(lhs) + ", D<x,Df>=" + to_string(rhs);
}

// --------------------------------------------------------- graph tests

GraphClosure poisson_graph_closure(const Bivector &pi, const std::vector<OneForm> &forms, std::uint64_t seed,
                                   std::size_t samples)
{
	const std::size_t n = pi.n;
	std::vector<OneForm> all;
	for (std::size_t i = 0; i < n; ++i)
		all.push_back(OneForm::unit(n, i));
	all.insert(all.end(), forms.begin(), forms.end());
	Pcg rng(seed);
	for (std::size_t k = 0; k < samples; ++k)
		all.push_back(random_section(rng, n).form);

	for (std::size_t a = 0; a < all.size(); ++a)
		for (std::size_t b = a + 1; b < all.size(); ++b)
		{
			Section x{sharp(pi, all[a]), all[a]}, y{sharp(pi, all[b]), all[b]};
			Section br = courant_bracket(x, y);
			VectorField want = sharp(pi, br.form);
			if (br.vf != want)
				return {false, "theta1=" + form_text(all[a]) + ", theta2=" + form_text(all[b]) +
				                   ": bracket=" + to_string(br) + ", pi#(form part)=" + field_text(want)};
		}
	return {};
}

GraphClosure twoform_graph_closure(const TwoForm &omega, const std::vector<VectorField> &fields, std::uint64_t seed,
                                   std::size_t samples)
{
	const std::size_t n = omega.n;
	std::vector<VectorField> all;
	for (std::size_t i = 0; i < n; ++i)
		all.push_back(VectorField::unit(n, i));
	all.insert(all.end(), fields.begin(), fields.end());
	Pcg rng(seed);
	for (std::size_t k = 0; k < samples; ++k)
		all.push_back(random_section(rng, n).vf);

	for (std::size_t a = 0; a < all.size(); ++a)
		for (std::size_t b = a + 1; b < all.size(); ++b)
		{
			Section x{all[a], interior(all[a], omega)}, y{all[b], interior(all[b], omega)};
			Section br = courant_bracket(x, y);
			OneForm want = interior(br.vf, omega);
			if (br.form != want)
				return {false, "xi1=" + field_text(all[a]) + ", xi2=" + field_text(all[b]) + ": bracket=" +
				                   to_string(br) + ", i_(vector part) omega=" + form_text(want)};
		}
	return {};
}

// ------------------------------------------------ Omega^1 / dC^infinity

HomotopyQuotient homotopy_quotient(const OneForm &theta)
{
	const std::size_t n = theta.var_count();
	Poly h(n);
	for (std::size_t i = 0; i < n; ++i)
		for (const auto &[e, c] : theta[i].terms())
		{
			unsigned deg = std::accumulate(e.begin(), e.end(), 0u);
			Exponent up = e;
			++up[i];
			h += Poly::monomial(up, c / (deg + 1));
		}
	return {theta - d(h), h};
}

namespace {

Section act(const VectorField &xi, const OneForm &phi, const Section &e)
{
	return {vf_bracket(xi, e.vf), lie_derivative(xi, e.form) - interior(e.vf, d(phi))};
}

} // namespace

DoubleSemidirect double_semidirect_bracket(const DoubleSemidirect &a, const DoubleSemidirect &b)
{
	DoubleSemidirect out;
	out.xi = vf_bracket(a.xi, b.xi);
	out.phi = homotopy_quotient(lie_derivative(a.xi, b.phi) - lie_derivative(b.xi, a.phi)).representative;
	out.e = act(a.xi, a.phi, b.e) - act(b.xi, b.phi, a.e);
	return out;
}

DoubleSemidirect double_semidirect_section(const Section &x, const Rational &s)
{
	return {x.vf.scaled(s), homotopy_quotient(x.form.scaled(s)).representative, x};
}

} // namespace leibniz
