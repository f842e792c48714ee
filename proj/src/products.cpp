#include "leibniz/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibniz {

ModuleAction ModuleAction::unchecked(std::size_t v_dim, std::vector<Matrix> matrices)
{
	for (const auto &m : matrices)
		if (m.rows() != v_dim || m.cols() != v_dim)
			throw std::invalid_argument("action matrix has the wrong shape");
	ModuleAction a;
	a.v_dim_ = v_dim;
	a.matrices_ = std::move(matrices);
	return a;
}

ModuleAction ModuleAction::make(const StructureAlgebra &h, std::vector<Matrix> matrices)
{
	if (matrices.size() != h.dim())
		throw std::invalid_argument("one action matrix per basis vector of h is required");
	std::size_t v_dim = matrices.empty() ? 0 : matrices.front().rows();
	ModuleAction a = unchecked(v_dim, std::move(matrices));
	for (std::size_t i = 0; i < h.dim(); ++i)
		for (std::size_t j = 0; j < h.dim(); ++j)
		{
			Matrix bracket_image = a.of(h.basis_product(i, j));
			if (bracket_image != commutator(a.matrices_[i], a.matrices_[j]))
				throw std::invalid_argument("action is not a Lie homomorphism at basis pair (" + std::to_string(i) +
				                            "," + std::to_string(j) + ")");
		}
	return a;
}

ModuleAction ModuleAction::trivial(std::size_t h_dim, std::size_t v_dim)
{
	return unchecked(v_dim, std::vector<Matrix>(h_dim, Matrix(v_dim, v_dim)));
}

Matrix ModuleAction::of(std::span<const Rational> xi) const
{
	if (xi.size() != matrices_.size())
		throw std::invalid_argument("action: coordinate length mismatch");
	Matrix m(v_dim_, v_dim_);
	for (std::size_t i = 0; i < xi.size(); ++i)
		if (xi[i] != 0)
			m = m + matrices_[i].scaled(xi[i]);
	return m;
}

Vector ModuleAction::act(std::span<const Rational> xi, std::span<const Rational> v) const { return of(xi).apply(v); }

// ----------------------------------------------------------- standard h

StructureAlgebra gl_algebra(std::size_t d)
{
	const std::size_t n = d * d;
	std::vector<Rational> c(n * n * n);
	std::vector<std::string> names;
	auto idx = [d](std::size_t p, std::size_t q) { return p * d + q; };
	for (std::size_t p = 0; p < d; ++p)
		for (std::size_t q = 0; q < d; ++q)
			names.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1));
	// [E_pq, E_rs] = delta_qr E_ps - delta_sp E_rq
	for (std::size_t p = 0; p < d; ++p)
		for (std::size_t q = 0; q < d; ++q)
			for (std::size_t r = 0; r < d; ++r)
				for (std::size_t s = 0; s < d; ++s)
				{
					std::size_t i = idx(p, q), j = idx(r, s);
					if (q == r)
						c[(i * n + j) * n + idx(p, s)] += 1;
					if (s == p)
						c[(i * n + j) * n + idx(r, q)] -= 1;
				}
	return StructureAlgebra("gl" + std::to_string(d), std::move(names), std::move(c));
}

ModuleAction gl_standard_action(const StructureAlgebra &gl, std::size_t d)
{
	std::vector<Matrix> mats;
	for (std::size_t p = 0; p < d; ++p)
		for (std::size_t q = 0; q < d; ++q)
		{
			Matrix e(d, d);
			e(p, q) = 1;
			mats.push_back(std::move(e));
		}
	return ModuleAction::make(gl, std::move(mats));
}

StructureAlgebra so3_algebra()
{
	std::vector<Rational> c(27);
	auto set = [&c](std::size_t i, std::size_t j, std::size_t k, long v) { c[(i * 3 + j) * 3 + k] = v; };
	set(0, 1, 2, 1);
	set(1, 0, 2, -1);
	set(1, 2, 0, 1);
	set(2, 1, 0, -1);
	set(2, 0, 1, 1);
	set(0, 2, 1, -1);
	return StructureAlgebra("so3", StructureAlgebra::default_basis_names(3), std::move(c));
}

ModuleAction so3_standard_action(const StructureAlgebra &so3)
{
	// e_i acts by the cross product with the i-th unit vector.
	std::vector<Matrix> mats;
	for (std::size_t i = 0; i < 3; ++i)
	{
		Matrix m(3, 3);
		for (std::size_t j = 0; j < 3; ++j)
			for (std::size_t k = 0; k < 3; ++k)
				m(k, j) = so3.c(i, j, k);
		mats.push_back(std::move(m));
	}
	return ModuleAction::make(so3, std::move(mats));
}

StructureAlgebra aff1_algebra()
{
	std::vector<Rational> c(8);
	c[(0 * 2 + 1) * 2 + 1] = 1;
	c[(1 * 2 + 0) * 2 + 1] = -1;
	return StructureAlgebra("aff1", StructureAlgebra::default_basis_names(2), std::move(c));
}

// -------------------------------------------------------------- products

namespace {

void require_lie(const StructureAlgebra &h, const ModuleAction &act)
{
	if (!h.is_lie())
		throw std::invalid_argument("h is not a Lie algebra");
	if (act.h_dim() != h.dim())
		throw std::invalid_argument("action does not match h");
}

// h's names followed by v1, v2, ...; primes are added to the prefix while it
// would clash with a name of h (iterated envelopes reuse v-names).
std::vector<std::string> sum_names(const StructureAlgebra &h, std::size_t v_dim)
{
	const auto &hn = h.basis_names();
	std::string prefix = "v";
	auto clashes = [&] {
		for (std::size_t i = 0; i < v_dim; ++i)
			if (std::find(hn.begin(), hn.end(), prefix + std::to_string(i + 1)) != hn.end())
				return true;
		return false;
	};
	while (clashes())
		prefix += "'";
	std::vector<std::string> names = hn;
	for (std::size_t i = 0; i < v_dim; ++i)
		names.push_back(prefix + std::to_string(i + 1));
	return names;
}

enum class Flavour { semidirect, hemi, demi };

StructureAlgebra build(const StructureAlgebra &h, const ModuleAction &act, Flavour flavour, std::string name)
{
	const std::size_t hd = h.dim(), vd = act.v_dim(), n = hd + vd;
	std::vector<Rational> c(n * n * n);
	auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational & { return c[(i * n + j) * n + k]; };
	// Weights of xi y (left factor acting) and of -eta x (right factor acting).
	Rational left_weight = 1, right_weight = 1;
	if (flavour == Flavour::hemi)
		right_weight = 0;
	else if (flavour == Flavour::demi)
		left_weight = right_weight = rat(1, 2);
	for (std::size_t i = 0; i < hd; ++i)
	{
		for (std::size_t j = 0; j < hd; ++j)
			for (std::size_t k = 0; k < hd; ++k)
				at(i, j, k) = h.c(i, j, k);
		// (xi_i, 0) with (0, v_j): left factor acts on the right one.
		for (std::size_t j = 0; j < vd; ++j)
			for (std::size_t k = 0; k < vd; ++k)
			{
				const Rational &a = act.matrix(i)(k, j);
				if (a == 0)
					continue;
				at(i, hd + j, hd + k) = left_weight * a;
				at(hd + j, i, hd + k) = -right_weight * a;
			}
	}
	return StructureAlgebra(std::move(name), sum_names(h, vd), std::move(c));
}

} // namespace

StructureAlgebra semidirect_lie(const StructureAlgebra &h, const ModuleAction &act)
{
	require_lie(h, act);
	return build(h, act, Flavour::semidirect, h.name() + "_semidirect");
}

StructureAlgebra hemisemidirect(const StructureAlgebra &h, const ModuleAction &act)
{
	require_lie(h, act);
	return build(h, act, Flavour::hemi, h.name() + "_hemisemidirect");
}

StructureAlgebra demisemidirect(const StructureAlgebra &h, const ModuleAction &act)
{
	require_lie(h, act);
	return build(h, act, Flavour::demi, h.name() + "_demisemidirect");
}

StructureAlgebra detail::hemisemidirect_unchecked(const StructureAlgebra &h, const ModuleAction &act)
{
	return build(h, act, Flavour::hemi, h.name() + "_hemisemidirect");
}

StructureAlgebra detail::semidirect_unchecked(const StructureAlgebra &h, const ModuleAction &act)
{
	return build(h, act, Flavour::semidirect, h.name() + "_semidirect");
}

OmniAlgebras omni_algebras(std::size_t d)
{
	if (d == 0)
		throw std::invalid_argument("omni algebras need d >= 1");
	auto gl = gl_algebra(d);
	auto act = gl_standard_action(gl, d);
	return {hemisemidirect(gl, act).renamed("omni_hemisemidirect_" + std::to_string(d)),
	        demisemidirect(gl, act).renamed("omni_lie_" + std::to_string(d))};
}

Vector circle_product(const StructureAlgebra &h, const ModuleAction &act, std::span<const Rational> a,
                      std::span<const Rational> b)
{
	const std::size_t hd = h.dim(), vd = act.v_dim();
	if (a.size() != hd + vd || b.size() != hd + vd)
		throw std::invalid_argument("circle product: dimension mismatch");
	auto xi = a.subspan(0, hd), x = a.subspan(hd);
	auto eta = b.subspan(0, hd), y = b.subspan(hd);
	Vector v = scale(rat(1, 2), add(act.act(xi, y), act.act(eta, x)));
	Vector out = zero_vector(hd);
	out.insert(out.end(), v.begin(), v.end());
	return out;
}

// ------------------------------------------------------------ graph test

std::vector<Vector> lambda_graph_basis(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	std::vector<Vector> basis;
	for (std::size_t i = 0; i < n; ++i)
	{
		Matrix lam = a.left_mul_basis(i);
		Vector g(n * n + n);
		for (std::size_t p = 0; p < n; ++p)
			for (std::size_t q = 0; q < n; ++q)
				g[p * n + q] = lam(p, q);
		g[n * n + i] = 1;
		basis.push_back(std::move(g));
	}
	return basis;
}

GraphReport graph_criterion(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	GraphReport report;
	if (n == 0)
	{
		report.graph_closed_under_leibniz = report.graph_is_lie_subalgebra = report.circle_vanishes_on_graph = true;
		return report;
	}
	// Omni products evaluated on (A, x) pairs directly rather than through
	// the (n^2 + n)-dimensional structure constants.
	auto basis = lambda_graph_basis(a);
	Subspace graph = Subspace::span(n * n + n, basis);
	std::vector<Matrix> lam;
	std::vector<Vector> vec;
	for (const auto &g : basis)
	{
		lam.emplace_back(n, n, Vector(g.begin(), g.begin() + static_cast<long>(n * n)));
		vec.emplace_back(g.begin() + static_cast<long>(n * n), g.end());
	}
	auto pack = [](const Matrix &m, const Vector &v) {
		Vector out = m.entries();
		out.insert(out.end(), v.begin(), v.end());
		return out;
	};

	bool closed_hemi = true, closed_demi = true, circle_zero = true;
	// Bracket restricted to the graph, transported to Q^n through the second
	// factor (injective on the graph).
	std::vector<Rational> restricted(n * n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Matrix comm = commutator(lam[i], lam[j]);
			Vector ay = lam[i].apply(vec[j]), bx = lam[j].apply(vec[i]);
			if (!graph.contains(pack(comm, ay)))
				closed_hemi = false;
			Vector half = scale(rat(1, 2), sub(ay, bx));
			if (!graph.contains(pack(comm, half)))
				closed_demi = false;
			for (std::size_t k = 0; k < n; ++k)
				restricted[(i * n + j) * n + k] = half[k];
			if (!is_zero(add(ay, bx)))
				circle_zero = false;
		}
	report.graph_closed_under_leibniz = closed_hemi;
	report.circle_vanishes_on_graph = circle_zero;
	bool restricted_lie = false;
	if (closed_demi)
		restricted_lie = check_lie(StructureAlgebra("graph", StructureAlgebra::default_basis_names(n), restricted));
	report.graph_is_lie_subalgebra = circle_zero && closed_demi && restricted_lie;
	return report;
}

} // namespace leibniz
