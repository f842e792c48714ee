#include "oracles.hpp"

#include "leibniz/corpus.hpp"
#include "leibniz/envelope.hpp"
#include "leibniz/lie_yamaguti.hpp"

#include <doctest.h>

using namespace leibniz;

namespace {

Vector bin(const LieYamaguti &L, const Vector &x, const Vector &y)
{
	const std::size_t n = L.n;
	Vector out(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				out[k] += x[i] * y[j] * L.b[(i * n + j) * n + k];
	return out;
}

Vector ter(const LieYamaguti &L, const Vector &x, const Vector &y, const Vector &z)
{
	const std::size_t n = L.n;
	Vector out(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				Rational w = x[i] * y[j] * z[k];
				if (w == 0)
					continue;
				for (std::size_t l = 0; l < n; ++l)
					out[l] += w * L.t[((i * n + j) * n + k) * n + l];
			}
	return out;
}

Vector plus(std::initializer_list<Vector> vs)
{
	Vector out(vs.begin()->size());
	for (const auto &v : vs)
		for (std::size_t i = 0; i < v.size(); ++i)
			out[i] += v[i];
	return out;
}

/// LY1-LY6 on random vectors, straight from the axioms.
bool ly_axioms_on_samples(const LieYamaguti &L, Pcg &rng, int samples)
{
	const std::size_t n = L.n;
	for (int s = 0; s < samples; ++s)
	{
		Vector x = sample_vector(rng, n), y = sample_vector(rng, n), z = sample_vector(rng, n);
		Vector u = sample_vector(rng, n), v = sample_vector(rng, n), w = sample_vector(rng, n);
		Vector zero(n);
		if (bin(L, x, x) != zero || ter(L, x, x, y) != zero)
			return false;
		Vector ly3 = plus({bin(L, bin(L, x, y), z), bin(L, bin(L, y, z), x), bin(L, bin(L, z, x), y), ter(L, x, y, z),
		                   ter(L, y, z, x), ter(L, z, x, y)});
		if (ly3 != zero)
			return false;
		Vector ly4 = plus({ter(L, bin(L, x, y), z, u), ter(L, bin(L, y, z), x, u), ter(L, bin(L, z, x), y, u)});
		if (ly4 != zero)
			return false;
		if (ter(L, x, y, bin(L, u, v)) != plus({bin(L, ter(L, x, y, u), v), bin(L, u, ter(L, x, y, v))}))
			return false;
		if (ter(L, x, y, ter(L, u, v, w)) !=
		    plus({ter(L, ter(L, x, y, u), v, w), ter(L, u, ter(L, x, y, v), w), ter(L, u, v, ter(L, x, y, w))}))
			return false;
	}
	return true;
}

/// Lie triple system [[x,y],z] on a Lie algebra, with zero binary product.
LieYamaguti triple_system(const StructureAlgebra &g)
{
	const std::size_t n = g.dim();
	LieYamaguti L = LieYamaguti::zero(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				Vector r = oracle::mul(g, oracle::mul(g, oracle::basis(n, i), oracle::basis(n, j)), oracle::basis(n, k));
				for (std::size_t l = 0; l < n; ++l)
					L.t_at(i, j, k, l) = r[l];
			}
	return L;
}

} // namespace

TEST_SUITE("lie_yamaguti")
{
	TEST_CASE("structure induced by a Leibniz algebra")
	{
		Pcg rng(12);
		for (const auto &E : leibniz_corpus(9, 8))
		{
			if (E.dim() > 6)
				continue;
			CAPTURE(E.name());
			auto L = ly_from_leibniz(E);
			for (int s = 0; s < 5; ++s)
			{
				Vector x = sample_vector(rng, E.dim()), y = sample_vector(rng, E.dim()), z = sample_vector(rng, E.dim());
				Vector xy = oracle::mul(E, x, y), yx = oracle::mul(E, y, x);
				CHECK(bin(L, x, y) == oracle::lin(rat(1, 2), xy, rat(-1, 2), yx));
				CHECK(ter(L, x, y, z) == oracle::lin(rat(-1, 4), oracle::mul(E, xy, z), 0, z));
				// Second form: -1/4 [[x,y]].z.
				CHECK(ter(L, x, y, z) == oracle::lin(rat(-1, 4), oracle::mul(E, bin(L, x, y), z), 0, z));
			}
			CHECK(validate_ly(L).holds);
			CHECK(ly_axioms_on_samples(L, rng, 10));
		}
	}

	TEST_CASE("non-Leibniz input is refused")
	{
		std::vector<Rational> c(8);
		c[0] = 1;
		StructureAlgebra bad("bad", StructureAlgebra::default_basis_names(2), c);
		CHECK_THROWS_AS(ly_from_leibniz(bad), LYError);
	}

	TEST_CASE("Lie triple systems are Lie-Yamaguti algebras")
	{
		Pcg rng(1);
		for (const auto &g : {so3_algebra(), gl_algebra(2), aff1_algebra()})
		{
			auto L = triple_system(g);
			CHECK(validate_ly(L).holds);
			CHECK(ly_axioms_on_samples(L, rng, 5));
		}
	}

	TEST_CASE("validation agrees with the sampled axioms and reports the axiom")
	{
		auto L = ly_from_leibniz(hemi_aff1());
		LieYamaguti broken = L;
		broken.b_at(0, 1, 1) += 1; // no longer skew
		auto r = validate_ly(broken);
		REQUIRE_FALSE(r.holds);
		CHECK(r.failure->axiom == "LY1");
		CHECK(r.failure->tuple == std::vector<std::size_t>{0, 1});

		LieYamaguti ternary_off = L;
		ternary_off.t_at(0, 1, 2, 2) += 1;
		ternary_off.t_at(1, 0, 2, 2) -= 1;
		auto r2 = validate_ly(ternary_off);
		Pcg rng(2);
		CHECK(r2.holds == ly_axioms_on_samples(ternary_off, rng, 10));
		CHECK_FALSE(r2.holds);

		LieYamaguti not_partially_skew = L;
		not_partially_skew.t_at(0, 0, 1, 1) = 1;
		auto r3 = validate_ly(not_partially_skew);
		REQUIRE_FALSE(r3.holds);
		CHECK(r3.failure->axiom == "LY2");
	}

	TEST_CASE("reductive decomposition round trip")
	{
		for (const auto &E : leibniz_corpus(10, 6))
		{
			if (E.dim() > 6)
				continue;
			CAPTURE(E.name());
			auto L = ly_from_leibniz(E);
			auto env = ly_envelope_default(L);
			CHECK(oracle::lie(env.g));
			CHECK(ly_from_decomposition(env.g, env.h_basis(), env.m_basis()) == L);
		}
		auto T = triple_system(so3_algebra());
		auto env = ly_envelope_default(T);
		CHECK(env.h.dim() == 3);
		CHECK(ly_from_decomposition(env.g, env.h_basis(), env.m_basis()) == T);
	}

	TEST_CASE("the sigma_{1/2} decomposition of an envelope gives the Leibniz structure")
	{
		for (const auto &E : leibniz_corpus(13, 4))
		{
			if (E.dim() > 6)
				continue;
			auto t = canonical_envelope(E, squares_ideal(E));
			Matrix sigma = section_sigma(t, rat(1, 2));
			std::vector<Vector> h_basis, m_basis;
			for (std::size_t a = 0; a < t.h_dim(); ++a)
				h_basis.push_back(unit_vector(t.g_dim(), a));
			for (std::size_t i = 0; i < t.e_dim(); ++i)
				m_basis.push_back(sigma.column(i));
			CHECK(ly_from_decomposition(t.g, h_basis, m_basis) == ly_from_leibniz(E));
		}
	}

	TEST_CASE("decompositions that are not reductive are refused")
	{
		// aff(1) = span(e1) + span(e2): [e1, e2] = e2 stays in m, fine; the
		// other way round [e2, e1] = -e2 lands in h.
		auto aff = aff1_algebra();
		CHECK_NOTHROW(ly_from_decomposition(aff, {{1, 0}}, {{0, 1}}));
		CHECK_THROWS_AS(ly_from_decomposition(aff, {{0, 1}}, {{1, 0}}), LYError);
		CHECK_THROWS_AS(ly_from_decomposition(aff, {{1, 0}}, {{1, 0}}), LYError);
	}

	TEST_CASE("torsion and curvature of the canonical connection")
	{
		auto L = ly_from_leibniz(leibniz2());
		auto tc = torsion_curvature(L);
		for (std::size_t i = 0; i < L.b.size(); ++i)
			CHECK(tc.torsion[i] == -L.b[i]);
		for (std::size_t i = 0; i < L.t.size(); ++i)
			CHECK(tc.curvature[i] == -L.t[i]);
	}

	TEST_CASE("inner derivations of the 2-dimensional algebra vanish")
	{
		// {x,y,z} = -1/4 (x.y).z and x.y lies in span(e1), which multiplies to 0.
		auto L = ly_from_leibniz(leibniz2());
		auto ider = inner_derivations(L);
		CHECK(ider.span.dim() == 0);
		auto env = ly_envelope_default(L);
		CHECK(env.g.dim() == 2);
	}
}
