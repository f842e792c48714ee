#include "leibniz/lie_yamaguti.hpp"

#include "leibniz/parallel.hpp"

namespace leibniz {

LieYamaguti LieYamaguti::zero(std::size_t n)
{
	LieYamaguti L;
	L.n = n;
	L.b.assign(n * n * n, Rational(0));
	L.t.assign(n * n * n * n, Rational(0));
	return L;
}

Vector LieYamaguti::binary(std::span<const Rational> x, std::span<const Rational> y) const
{
	Vector out = zero_vector(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		if (x[i] == 0)
			continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (y[j] == 0)
				continue;
			Rational w = x[i] * y[j];
			for (std::size_t k = 0; k < n; ++k)
				if (b_at(i, j, k) != 0)
					out[k] += w * b_at(i, j, k);
		}
	}
	return out;
}

Vector LieYamaguti::ternary(std::span<const Rational> x, std::span<const Rational> y,
                            std::span<const Rational> z) const
{
	Vector out = zero_vector(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		if (x[i] == 0)
			continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (y[j] == 0)
				continue;
			for (std::size_t k = 0; k < n; ++k)
			{
				if (z[k] == 0)
					continue;
				Rational w = x[i] * y[j] * z[k];
				for (std::size_t l = 0; l < n; ++l)
					if (t_at(i, j, k, l) != 0)
						out[l] += w * t_at(i, j, k, l);
			}
		}
	}
	return out;
}

Matrix LieYamaguti::delta(std::size_t i, std::size_t j) const
{
	Matrix m(n, n);
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t l = 0; l < n; ++l)
			m(l, k) = t_at(i, j, k, l);
	return m;
}

Matrix LieYamaguti::ad(std::size_t i) const
{
	Matrix m(n, n);
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t l = 0; l < n; ++l)
			m(l, k) = b_at(i, k, l);
	return m;
}

DeltaMap DeltaMap::zero(std::size_t h_dim, std::size_t n)
{
	DeltaMap d;
	d.h_dim = h_dim;
	d.n = n;
	d.values.assign(n * n, zero_vector(h_dim));
	return d;
}

Vector DeltaMap::of(std::span<const Rational> x, std::span<const Rational> y) const
{
	Vector out = zero_vector(h_dim);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			if (x[i] == 0 || y[j] == 0)
				continue;
			Rational w = x[i] * y[j];
			for (std::size_t a = 0; a < h_dim; ++a)
				out[a] += w * at(i, j)[a];
		}
	return out;
}

// ------------------------------------------------------------ validation

namespace {

Vector bin_basis(const LieYamaguti &L, std::size_t i, std::size_t j)
{
	return Vector(L.b.begin() + static_cast<std::ptrdiff_t>((i * L.n + j) * L.n),
	              L.b.begin() + static_cast<std::ptrdiff_t>((i * L.n + j + 1) * L.n));
}

Vector tern_basis(const LieYamaguti &L, std::size_t i, std::size_t j, std::size_t k)
{
	std::size_t off = ((i * L.n + j) * L.n + k) * L.n;
	return Vector(L.t.begin() + static_cast<std::ptrdiff_t>(off), L.t.begin() + static_cast<std::ptrdiff_t>(off + L.n));
}

// {v, e_k, e_u} with v given in coordinates.
Vector tern_first(const LieYamaguti &L, std::span<const Rational> v, std::size_t k, std::size_t u)
{
	Vector out = zero_vector(L.n);
	for (std::size_t p = 0; p < L.n; ++p)
		if (v[p] != 0)
			for (std::size_t l = 0; l < L.n; ++l)
				out[l] += v[p] * L.t_at(p, k, u, l);
	return out;
}

Vector neg(const Vector &v) { return scale(Rational(-1), v); }

using Fail = std::optional<LYFailure>;

Fail check_ly1(const LieYamaguti &L)
{
	for (std::size_t i = 0; i < L.n; ++i)
		for (std::size_t j = 0; j < L.n; ++j)
		{
			Vector lhs = bin_basis(L, i, j), rhs = neg(bin_basis(L, j, i));
			if (lhs != rhs)
				return LYFailure{"LY1", {i, j}, lhs, rhs};
		}
	return std::nullopt;
}

Fail check_ly2(const LieYamaguti &L)
{
	for (std::size_t i = 0; i < L.n; ++i)
		for (std::size_t j = 0; j < L.n; ++j)
			for (std::size_t k = 0; k < L.n; ++k)
			{
				Vector lhs = tern_basis(L, i, j, k), rhs = neg(tern_basis(L, j, i, k));
				if (lhs != rhs)
					return LYFailure{"LY2", {i, j, k}, lhs, rhs};
			}
	return std::nullopt;
}

Fail check_ly3(const LieYamaguti &L)
{
	const std::size_t n = L.n;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				Vector sum = zero_vector(n);
				const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
				for (const auto &c : cyc)
				{
					sum = add(sum, L.binary(bin_basis(L, c[0], c[1]), unit_vector(n, c[2])));
					sum = add(sum, tern_basis(L, c[0], c[1], c[2]));
				}
				if (!is_zero(sum))
					return LYFailure{"LY3", {i, j, k}, sum, zero_vector(n)};
			}
	return std::nullopt;
}

Fail check_ly4(const LieYamaguti &L)
{
	const std::size_t n = L.n;
	return first_engaged<LYFailure>(n, [&](std::size_t i) -> Fail {
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t u = 0; u < n; ++u)
				{
					Vector sum = zero_vector(n);
					const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
					for (const auto &c : cyc)
						sum = add(sum, tern_first(L, bin_basis(L, c[0], c[1]), c[2], u));
					if (!is_zero(sum))
						return LYFailure{"LY4", {i, j, k, u}, sum, zero_vector(n)};
				}
		return std::nullopt;
	});
}

Fail check_ly5(const LieYamaguti &L, const std::vector<Matrix> &D)
{
	const std::size_t n = L.n;
	return first_engaged<LYFailure>(n, [&](std::size_t i) -> Fail {
		for (std::size_t j = 0; j < n; ++j)
		{
			const Matrix &d = D[i * n + j];
			for (std::size_t u = 0; u < n; ++u)
				for (std::size_t v = 0; v < n; ++v)
				{
					Vector lhs = d.apply(bin_basis(L, u, v));
					Vector rhs = add(L.binary(d.column(u), unit_vector(n, v)), L.binary(unit_vector(n, u), d.column(v)));
					if (lhs != rhs)
						return LYFailure{"LY5", {i, j, u, v}, lhs, rhs};
				}
		}
		return std::nullopt;
	});
}

Fail check_ly6(const LieYamaguti &L, const std::vector<Matrix> &D)
{
	const std::size_t n = L.n;
	return first_engaged<LYFailure>(n, [&](std::size_t i) -> Fail {
		for (std::size_t j = 0; j < n; ++j)
		{
			const Matrix &dxy = D[i * n + j];
			for (std::size_t u = 0; u < n; ++u)
				for (std::size_t v = 0; v < n; ++v)
				{
					const Matrix &duv = D[u * n + v];
					Matrix lhs = dxy * duv;
					Matrix rhs = duv * dxy;
					for (std::size_t p = 0; p < n; ++p)
					{
						if (dxy(p, u) != 0)
							rhs = rhs + D[p * n + v].scaled(dxy(p, u));
						if (dxy(p, v) != 0)
							rhs = rhs + D[u * n + p].scaled(dxy(p, v));
					}
					if (lhs == rhs)
						continue;
					for (std::size_t w = 0; w < n; ++w)
					{
						Vector l = lhs.column(w), r = rhs.column(w);
						if (l != r)
							return LYFailure{"LY6", {i, j, u, v, w}, l, r};
					}
				}
		}
		return std::nullopt;
	});
}

} // namespace

LYCheck validate_ly(const LieYamaguti &L)
{
	LYCheck out;
	auto finish = [&out](Fail f) {
		if (f)
		{
			out.holds = false;
			out.failure = std::move(f);
			return true;
		}
		return false;
	};
	if (finish(check_ly1(L)) || finish(check_ly2(L)) || finish(check_ly3(L)) || finish(check_ly4(L)))
		return out;
	std::vector<Matrix> D;
	D.reserve(L.n * L.n);
	for (std::size_t i = 0; i < L.n; ++i)
		for (std::size_t j = 0; j < L.n; ++j)
			D.push_back(L.delta(i, j));
	if (finish(check_ly5(L, D)) || finish(check_ly6(L, D)))
		return out;
	return out;
}

// -------------------------------------------------------- constructions

LieYamaguti ly_from_leibniz(const StructureAlgebra &E)
{
	if (!E.is_leibniz())
		throw LYError("not-leibniz", E.name() + " fails the Leibniz identity");
	const std::size_t n = E.dim();
	LieYamaguti L = LieYamaguti::zero(n);
	L.b = skew_symmetrize(E).constants();
	const Rational quarter = rat(-1, 4);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t p = 0; p < n; ++p)
			{
				if (E.c(i, j, p) == 0)
					continue;
				Rational w = quarter * E.c(i, j, p);
				for (std::size_t k = 0; k < n; ++k)
					for (std::size_t l = 0; l < n; ++l)
						if (E.c(p, k, l) != 0)
							L.t_at(i, j, k, l) += w * E.c(p, k, l);
			}
	return L;
}

LieYamaguti ly_from_decomposition(const StructureAlgebra &g, const std::vector<Vector> &h_basis,
                                  const std::vector<Vector> &m_basis)
{
	const std::size_t gd = g.dim(), hd = h_basis.size(), n = m_basis.size();
	if (!g.is_lie())
		throw LYError("not-lie", g.name() + " is not a Lie algebra");
	if (hd + n != gd)
		throw LYError("not-complementary", "dim h + dim m != dim g");
	std::vector<Vector> cols = h_basis;
	cols.insert(cols.end(), m_basis.begin(), m_basis.end());
	Matrix B = Matrix::from_columns(gd, cols);
	if (rank(B) != gd)
		throw LYError("not-complementary", "h and m do not span g");
	Matrix Binv = inverse(B);

	for (std::size_t a = 0; a < hd; ++a)
	{
		for (std::size_t c = 0; c < hd; ++c)
		{
			Vector co = Binv.apply(g.product(h_basis[a], h_basis[c]));
			for (std::size_t k = 0; k < n; ++k)
				if (co[hd + k] != 0)
					throw LYError("h-not-subalgebra", "[h" + std::to_string(a) + ", h" + std::to_string(c) +
					                                      "] leaves h");
		}
		for (std::size_t i = 0; i < n; ++i)
		{
			Vector co = Binv.apply(g.product(h_basis[a], m_basis[i]));
			for (std::size_t c = 0; c < hd; ++c)
				if (co[c] != 0)
					throw LYError("not-reductive", "[h" + std::to_string(a) + ", m" + std::to_string(i) +
					                                   "] leaves m");
		}
	}

	LieYamaguti L = LieYamaguti::zero(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Vector co = Binv.apply(g.product(m_basis[i], m_basis[j]));
			Vector delta = zero_vector(gd);
			for (std::size_t a = 0; a < hd; ++a)
				if (co[a] != 0)
					delta = add(delta, scale(co[a], h_basis[a]));
			for (std::size_t k = 0; k < n; ++k)
				L.b_at(i, j, k) = co[hd + k];
			if (is_zero(delta))
				continue;
			for (std::size_t k = 0; k < n; ++k)
			{
				Vector tk = Binv.apply(g.product(delta, m_basis[k]));
				for (std::size_t l = 0; l < n; ++l)
					L.t_at(i, j, k, l) = tk[hd + l];
			}
		}
	return L;
}

namespace {

Vector flatten(const Matrix &m)
{
	return m.entries();
}

Matrix unflatten(std::size_t n, const Vector &v)
{
	return Matrix(n, n, v);
}

} // namespace

InnerDerivations inner_derivations(const LieYamaguti &L)
{
	InnerDerivations out;
	std::vector<Vector> flat;
	for (std::size_t i = 0; i < L.n; ++i)
		for (std::size_t j = i + 1; j < L.n; ++j)
		{
			out.matrices.push_back(L.delta(i, j));
			out.pairs.emplace_back(i, j);
			flat.push_back(flatten(out.matrices.back()));
		}
	out.span = Subspace::span(L.n * L.n, flat);
	return out;
}

std::vector<Vector> LYEnvelope::h_basis() const
{
	std::vector<Vector> out;
	for (std::size_t a = 0; a < h.dim(); ++a)
		out.push_back(unit_vector(g.dim(), a));
	return out;
}

std::vector<Vector> LYEnvelope::m_basis() const
{
	std::vector<Vector> out;
	for (std::size_t i = h.dim(); i < g.dim(); ++i)
		out.push_back(unit_vector(g.dim(), i));
	return out;
}

LYEnvelope ly_envelope(const LieYamaguti &L, const StructureAlgebra &h, const ModuleAction &action,
                       const DeltaMap &delta)
{
	const std::size_t n = L.n, hd = h.dim();
	if (action.h_dim() != hd || action.v_dim() != n || delta.h_dim != hd || delta.n != n)
		throw LYError("dimension-mismatch", "action and Delta must match h and m");
	if (!h.is_lie())
		throw LYError("h-not-lie", h.name() + " is not a Lie algebra");
	for (std::size_t a = 0; a < hd; ++a)
		for (std::size_t c = 0; c < hd; ++c)
			if (action.of(h.basis_product(a, c)) != commutator(action.matrix(a), action.matrix(c)))
				throw LYError("action-not-homomorphism", "h basis pair (" + std::to_string(a) + "," +
				                                             std::to_string(c) + ")");

	for (std::size_t a = 0; a < hd; ++a)
	{
		const Matrix &xi = action.matrix(a);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
			{
				Vector lhs = xi.apply(bin_basis(L, i, j));
				Vector rhs = add(L.binary(xi.column(i), unit_vector(n, j)), L.binary(unit_vector(n, i), xi.column(j)));
				if (lhs != rhs)
					throw LYError("action-not-derivation", "binary product, h basis " + std::to_string(a) +
					                                           " on (" + std::to_string(i) + "," +
					                                           std::to_string(j) + ")");
				for (std::size_t k = 0; k < n; ++k)
				{
					Vector tl = xi.apply(tern_basis(L, i, j, k));
					Vector tr = L.ternary(xi.column(i), unit_vector(n, j), unit_vector(n, k));
					tr = add(tr, L.ternary(unit_vector(n, i), xi.column(j), unit_vector(n, k)));
					tr = add(tr, L.ternary(unit_vector(n, i), unit_vector(n, j), xi.column(k)));
					if (tl != tr)
						throw LYError("action-not-derivation", "ternary product, h basis " + std::to_string(a) +
						                                           " on (" + std::to_string(i) + "," +
						                                           std::to_string(j) + "," + std::to_string(k) + ")");
				}
			}
	}

	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (delta.at(i, j) != neg(delta.at(j, i)))
				throw LYError("delta-not-skew", "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");

	// Delta(x,y) z = {x,y,z}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Matrix dm = action.of(delta.at(i, j));
			for (std::size_t k = 0; k < n; ++k)
				if (dm.column(k) != tern_basis(L, i, j, k))
					throw LYError("delta1", "tuple (" + std::to_string(i) + "," + std::to_string(j) + "," +
					                            std::to_string(k) + ")");
		}

	// [xi, Delta(x,y)] = Delta(xi x, y) + Delta(x, xi y)
	for (std::size_t a = 0; a < hd; ++a)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
			{
				const Matrix &xi = action.matrix(a);
				Vector lhs = h.product(unit_vector(hd, a), delta.at(i, j));
				Vector rhs = add(delta.of(xi.column(i), unit_vector(n, j)), delta.of(unit_vector(n, i), xi.column(j)));
				if (lhs != rhs)
					throw LYError("delta2", "h basis " + std::to_string(a) + ", pair (" + std::to_string(i) + "," +
					                            std::to_string(j) + ")");
			}

	// cyclic sum of Delta([[x,y]], z)
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				Vector sum = delta.of(bin_basis(L, i, j), unit_vector(n, k));
				sum = add(sum, delta.of(bin_basis(L, j, k), unit_vector(n, i)));
				sum = add(sum, delta.of(bin_basis(L, k, i), unit_vector(n, j)));
				if (!is_zero(sum))
					throw LYError("delta3", "tuple (" + std::to_string(i) + "," + std::to_string(j) + "," +
					                            std::to_string(k) + ")");
			}

	const std::size_t gd = hd + n;
	std::vector<Rational> c(gd * gd * gd);
	auto at = [&](std::size_t p, std::size_t q, std::size_t r) -> Rational & { return c[(p * gd + q) * gd + r]; };
	for (std::size_t a = 0; a < hd; ++a)
	{
		for (std::size_t b = 0; b < hd; ++b)
			for (std::size_t r = 0; r < hd; ++r)
				at(a, b, r) = h.c(a, b, r);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t r = 0; r < n; ++r)
			{
				const Rational &v = action.matrix(a)(r, i);
				at(a, hd + i, hd + r) = v;
				at(hd + i, a, hd + r) = -v;
			}
	}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			for (std::size_t a = 0; a < hd; ++a)
				at(hd + i, hd + j, a) = delta.at(i, j)[a];
			for (std::size_t r = 0; r < n; ++r)
				at(hd + i, hd + j, hd + r) = L.b_at(i, j, r);
		}
	std::vector<std::string> names = h.basis_names();
	for (std::size_t i = 0; i < n; ++i)
		names.push_back("m" + std::to_string(i + 1));
	StructureAlgebra g("ly_envelope", std::move(names), std::move(c));
	if (!g.is_lie())
		throw LYError("jacobi", "the envelope bracket fails the Jacobi identity");
	return {std::move(g), h, action, delta};
}

LYEnvelope ly_envelope_default(const LieYamaguti &L)
{
	const std::size_t n = L.n;
	InnerDerivations ider = inner_derivations(L);
	const auto &basis = ider.span.basis();
	const std::size_t hd = basis.size();
	std::vector<Matrix> mats;
	for (const auto &v : basis)
		mats.push_back(unflatten(n, v));
	std::vector<Rational> c(hd * hd * hd);
	for (std::size_t a = 0; a < hd; ++a)
		for (std::size_t b = 0; b < hd; ++b)
		{
			auto co = coordinates_in(basis, flatten(commutator(mats[a], mats[b])));
			if (!co)
				throw LYError("ider-not-closed", "inner derivations are not closed under commutators");
			for (std::size_t r = 0; r < hd; ++r)
				c[(a * hd + b) * hd + r] = (*co)[r];
		}
	StructureAlgebra h("ider", StructureAlgebra::default_basis_names(hd, "d"), std::move(c));
	DeltaMap delta = DeltaMap::zero(hd, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			auto co = coordinates_in(basis, flatten(L.delta(i, j)));
			if (!co)
				throw LYError("ider-not-closed", "inner derivation outside its span");
			delta.at(i, j) = *co;
		}
	return ly_envelope(L, h, ModuleAction::unchecked(n, std::move(mats)), delta);
}

TorsionCurvature torsion_curvature(const LieYamaguti &L)
{
	TorsionCurvature tc;
	tc.torsion.reserve(L.b.size());
	for (const auto &v : L.b)
		tc.torsion.push_back(-v);
	tc.curvature.reserve(L.t.size());
	for (const auto &v : L.t)
		tc.curvature.push_back(-v);
	return tc;
}

} // namespace leibniz
