#include "leibniz/envelope.hpp"

#include <sstream>

namespace leibniz {

namespace {

std::string tuple_text(std::initializer_list<std::size_t> idx)
{
	std::ostringstream os;
	os << "(";
	bool first = true;
	for (auto i : idx)
	{
		os << (first ? "" : ",") << i;
		first = false;
	}
	os << ")";
	return os.str();
}

std::string vec_text(const Vector &v)
{
	std::ostringstream os;
	os << "[";
	for (std::size_t i = 0; i < v.size(); ++i)
		os << (i ? "," : "") << v[i].get_str();
	os << "]";
	return os.str();
}

Vector concat(const Vector &a, const Vector &b)
{
	Vector r = a;
	r.insert(r.end(), b.begin(), b.end());
	return r;
}

} // namespace

EnvelopeTriple EnvelopeTriple::unchecked(StructureAlgebra E, StructureAlgebra h, ModuleAction action, Matrix f)
{
	EnvelopeTriple t;
	t.g = detail::semidirect_unchecked(h, action).renamed(E.name() + "_envelope");
	t.E = std::move(E);
	t.h = std::move(h);
	t.action = std::move(action);
	t.f = std::move(f);
	return t;
}

EnvelopeTriple validate_envelope(const StructureAlgebra &E, const StructureAlgebra &h, const ModuleAction &action,
                                 const Matrix &f)
{
	const std::size_t n = E.dim(), hd = h.dim();
	if (f.rows() != hd || f.cols() != n || action.h_dim() != hd || action.v_dim() != n)
		throw EnvelopeError("dimension-mismatch", "f must be dim(h) x dim(E) and the action must act on E");

	if (auto lc = check_leibniz(E); !lc)
		throw EnvelopeError("not-leibniz", "E fails the Leibniz identity at " + tuple_text({lc.failure->indices[0],
		                                                                                  lc.failure->indices[1],
		                                                                                  lc.failure->indices[2]}));
	if (!check_lie(h))
		throw EnvelopeError("h-not-lie", "h is not a Lie algebra");

	for (std::size_t i = 0; i < hd; ++i)
		for (std::size_t j = 0; j < hd; ++j)
			if (action.of(h.basis_product(i, j)) != commutator(action.matrix(i), action.matrix(j)))
				throw EnvelopeError("action-not-homomorphism", "at h basis pair " + tuple_text({i, j}));

	// xi(x.y) = xi x . y + x . xi y
	for (std::size_t a = 0; a < hd; ++a)
	{
		const Matrix &xi = action.matrix(a);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
			{
				Vector lhs = xi.apply(E.basis_product(i, j));
				Vector rhs = add(E.product(xi.column(i), unit_vector(n, j)), E.product(unit_vector(n, i), xi.column(j)));
				if (lhs != rhs)
					throw EnvelopeError("action-not-derivation", "h basis " + std::to_string(a) + " on E basis pair " +
					                                                 tuple_text({i, j}) + ": " + vec_text(lhs) +
					                                                 " != " + vec_text(rhs));
			}
	}

	// [xi, f(x)] = f(xi x)
	for (std::size_t a = 0; a < hd; ++a)
		for (std::size_t i = 0; i < n; ++i)
		{
			Vector lhs = h.product(unit_vector(hd, a), f.column(i));
			Vector rhs = f.apply(action.matrix(a).column(i));
			if (lhs != rhs)
				throw EnvelopeError("f-not-equivariant", "h basis " + std::to_string(a) + ", E basis " +
				                                             std::to_string(i) + ": " + vec_text(lhs) +
				                                             " != " + vec_text(rhs));
		}

	// f(x) y = x . y
	for (std::size_t i = 0; i < n; ++i)
	{
		Matrix fx = action.of(f.column(i));
		for (std::size_t j = 0; j < n; ++j)
		{
			Vector lhs = fx.column(j);
			Vector rhs = E.basis_product(i, j);
			if (lhs != rhs)
				throw EnvelopeError("f-does-not-factor-lambda", "E basis pair " + tuple_text({i, j}) + ": " +
				                                                    vec_text(lhs) + " != " + vec_text(rhs));
		}
	}

	// Consequences: f is a Leibniz homomorphism, J <= ker f <= ker lambda.
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Vector lhs = f.apply(E.basis_product(i, j));
			Vector rhs = h.product(f.column(i), f.column(j));
			if (lhs != rhs)
				throw EnvelopeError("f-not-homomorphism", "E basis pair " + tuple_text({i, j}));
		}
	Subspace ker_f = Subspace::span(n, kernel_basis(f));
	if (!ker_f.contains(squares_ideal(E)))
		throw EnvelopeError("squares-ideal-not-in-ker-f", "J is not contained in ker f");
	if (!kernel_of_lambda(E).contains(ker_f))
		throw EnvelopeError("ker-f-not-in-ker-lambda", "ker f is not contained in ker lambda");

	EnvelopeTriple t = EnvelopeTriple::unchecked(E, h, action, f);
	if (rank(f) < hd)
		t.notices.push_back("f is not surjective: f(E) is a proper ideal of h");
	return t;
}

EnvelopeTriple canonical_envelope(const StructureAlgebra &E, const Subspace &M)
{
	const std::size_t n = E.dim();
	if (M.ambient_dim() != n)
		throw EnvelopeError("dimension-mismatch", "M must live in E");
	if (!is_ideal(E, M))
		throw EnvelopeError("not-an-ideal", "M is not a two-sided ideal of E");
	if (!M.contains(squares_ideal(E)))
		throw EnvelopeError("sandwich-lower", "the squares ideal J is not contained in M");
	if (!kernel_of_lambda(E).contains(M))
		throw EnvelopeError("sandwich-upper", "M is not contained in ker(lambda)");

	Quotient q = quotient_algebra(E, M);
	std::vector<Matrix> mats;
	for (std::size_t a : q.complement)
		mats.push_back(E.left_mul_basis(a));
	ModuleAction action = ModuleAction::unchecked(n, std::move(mats));
	return validate_envelope(E, q.algebra.renamed(E.name() + "_h"), action, q.projection);
}

EnvelopeTriple lambda_envelope(const StructureAlgebra &E)
{
	const std::size_t n = E.dim();
	auto flatten = [n](const Matrix &m) {
		Vector v(n * n);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				v[r * n + c] = m(r, c);
		return v;
	};
	auto unflatten = [n](const Vector &v) {
		Matrix m(n, n);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				m(r, c) = v[r * n + c];
		return m;
	};
	std::vector<Vector> lams;
	for (std::size_t i = 0; i < n; ++i)
		lams.push_back(flatten(E.left_mul_basis(i)));
	Subspace image = Subspace::span(n * n, lams);
	const auto &basis = image.basis();
	const std::size_t hd = basis.size();

	std::vector<Rational> c(hd * hd * hd);
	std::vector<Matrix> mats;
	for (const auto &b : basis)
		mats.push_back(unflatten(b));
	for (std::size_t a = 0; a < hd; ++a)
		for (std::size_t b = 0; b < hd; ++b)
		{
			auto coords = coordinates_in(basis, flatten(commutator(mats[a], mats[b])));
			if (!coords)
				throw EnvelopeError("lambda-image-not-subalgebra", "lambda(E) is not closed under commutators");
			for (std::size_t k = 0; k < hd; ++k)
				c[(a * hd + b) * hd + k] = (*coords)[k];
		}
	Matrix f(hd, n);
	for (std::size_t i = 0; i < n; ++i)
	{
		auto coords = coordinates_in(basis, lams[i]);
		for (std::size_t k = 0; k < hd; ++k)
			f(k, i) = (*coords)[k];
	}
	StructureAlgebra h(E.name() + "_lambda", StructureAlgebra::default_basis_names(hd, "d"), std::move(c));
	return validate_envelope(E, h, ModuleAction::unchecked(n, std::move(mats)), f);
}

EnvelopeTriple hemisemidirect_envelope(const StructureAlgebra &h, const ModuleAction &act)
{
	StructureAlgebra E = hemisemidirect(h, act);
	const std::size_t hd = h.dim(), n = E.dim();
	// h acts on h x V diagonally: xi(eta, y) = ([xi,eta], xi y).
	std::vector<Matrix> mats;
	for (std::size_t a = 0; a < hd; ++a)
		mats.push_back(E.left_mul_basis(a));
	Matrix pi_h(hd, n);
	for (std::size_t a = 0; a < hd; ++a)
		pi_h(a, a) = 1;
	return validate_envelope(E, h, ModuleAction::unchecked(n, std::move(mats)), pi_h);
}

Matrix section_sigma(const EnvelopeTriple &t, const Rational &s)
{
	const std::size_t hd = t.h_dim(), n = t.e_dim();
	Matrix sigma(hd + n, n);
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t a = 0; a < hd; ++a)
			sigma(a, i) = s * t.f(a, i);
		sigma(hd + i, i) = 1;
	}
	return sigma;
}

std::pair<Vector, Vector> projected_bracket_delta(const EnvelopeTriple &t, const Rational &s,
                                                  std::span<const Rational> x, std::span<const Rational> y)
{
	const std::size_t hd = t.h_dim();
	Matrix sigma = section_sigma(t, s);
	Vector b = t.g.product(sigma.apply(x), sigma.apply(y));
	// b = (eta, 0) + sigma_s(z)  =>  z = E block, eta = h block - s f(z).
	Vector e_part(b.begin() + static_cast<std::ptrdiff_t>(hd), b.end());
	Vector h_block(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(hd));
	Vector h_part = sub(h_block, scale(s, t.f.apply(e_part)));
	return {std::move(e_part), std::move(h_part)};
}

bool recovery_check(const EnvelopeTriple &t)
{
	const std::size_t n = t.e_dim();
	StructureAlgebra skew = skew_symmetrize(t.E);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			auto [e_part, h_part] = projected_bracket_delta(t, rat(1, 2), unit_vector(n, i), unit_vector(n, j));
			if (e_part != skew.basis_product(i, j))
				return false;
		}
	return true;
}

bool sigma_one_embed_check(const EnvelopeTriple &t)
{
	const std::size_t n = t.e_dim();
	StructureAlgebra hemi = detail::hemisemidirect_unchecked(t.h, t.action);
	Matrix sigma = section_sigma(t, Rational(1));
	if (rank(sigma) != n)
		return false;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Vector lhs = hemi.product(sigma.column(i), sigma.column(j));
			Vector rhs = sigma.apply(t.E.basis_product(i, j));
			if (lhs != rhs)
				return false;
		}
	return true;
}

std::vector<NamedCheck> verify_envelope(const EnvelopeTriple &t)
{
	std::vector<NamedCheck> checks;
	const std::size_t n = t.e_dim(), hd = t.h_dim();

	try
	{
		validate_envelope(t.E, t.h, t.action, t.f);
		checks.push_back({"envelope_conditions", true, ""});
	}
	catch (const EnvelopeError &e)
	{
		checks.push_back({"envelope_conditions", false, e.what()});
	}

	checks.push_back({"g_is_lie", check_lie(t.g), ""});
	checks.push_back({"recovery_at_s_1/2", recovery_check(t), ""});
	checks.push_back({"sigma_1_embeds_in_hemisemidirect", sigma_one_embed_check(t), ""});

	StructureAlgebra skew = skew_symmetrize(t.E);
	for (const Rational &s : {Rational(1), rat(1, 2), Rational(-2), rat(3, 7)})
	{
		NamedCheck scaling{"scaling_laws_s=" + s.get_str(), true, ""};
		NamedCheck reductive{"reductive_s=" + s.get_str(), true, ""};
		Matrix sigma = section_sigma(t, s);
		for (std::size_t i = 0; i < n && scaling.pass; ++i)
			for (std::size_t j = 0; j < n && scaling.pass; ++j)
			{
				auto [e_part, h_part] = projected_bracket_delta(t, s, unit_vector(n, i), unit_vector(n, j));
				Vector skew_ij = skew.basis_product(i, j);
				Vector want_e = scale(2 * s, skew_ij);
				Vector want_h = scale(-s * s, t.f.apply(skew_ij));
				if (e_part != want_e || h_part != want_h)
				{
					scaling.pass = false;
					scaling.witness = "basis pair " + tuple_text({i, j}) + ": got (" + vec_text(e_part) + ", " +
					                  vec_text(h_part) + "), expected (" + vec_text(want_e) + ", " +
					                  vec_text(want_h) + ")";
				}
			}
		for (std::size_t a = 0; a < hd && reductive.pass; ++a)
			for (std::size_t i = 0; i < n && reductive.pass; ++i)
			{
				Vector xi = concat(unit_vector(hd, a), zero_vector(n));
				Vector br = t.g.product(xi, sigma.column(i));
				Vector want = sigma.apply(t.action.matrix(a).column(i));
				if (br != want)
				{
					reductive.pass = false;
					reductive.witness = "h basis " + std::to_string(a) + ", E basis " + std::to_string(i) + ": " +
					                    vec_text(br) + " != " + vec_text(want);
				}
			}
		checks.push_back(std::move(scaling));
		checks.push_back(std::move(reductive));
	}

	NamedCheck f_skew{"f_of_skew_is_bracket", true, ""};
	for (std::size_t i = 0; i < n && f_skew.pass; ++i)
		for (std::size_t j = 0; j < n && f_skew.pass; ++j)
		{
			Vector lhs = t.f.apply(skew.basis_product(i, j));
			Vector rhs = t.h.product(t.f.column(i), t.f.column(j));
			if (lhs != rhs)
			{
				f_skew.pass = false;
				f_skew.witness = "basis pair " + tuple_text({i, j});
			}
		}
	checks.push_back(std::move(f_skew));
	return checks;
}

} // namespace leibniz
