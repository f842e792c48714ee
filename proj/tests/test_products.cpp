#include "oracles.hpp"

#include "leibniz/corpus.hpp"

#include <doctest.h>

using namespace leibniz;

namespace {

// (a, x) split of a vector in h + V coordinates.
std::pair<Vector, Vector> split(const Vector &v, std::size_t h)
{
	return {Vector(v.begin(), v.begin() + static_cast<long>(h)), Vector(v.begin() + static_cast<long>(h), v.end())};
}

Vector join(const Vector &a, const Vector &x)
{
	Vector out = a;
	out.insert(out.end(), x.begin(), x.end());
	return out;
}

} // namespace

TEST_SUITE("products")
{
	TEST_CASE("classical Lie algebras")
	{
		for (std::size_t d = 1; d <= 3; ++d)
			CHECK(oracle::lie(gl_algebra(d)));
		CHECK(oracle::lie(so3_algebra()));
		CHECK(oracle::lie(aff1_algebra()));
		CHECK(oracle::lie(heisenberg3()));
		// [E12, E21] = E11 - E22 in gl(2).
		auto gl2 = gl_algebra(2);
		CHECK(gl2.basis_product(1, 2) == Vector{1, 0, 0, -1});
		// so(3): [e1,e2] = e3.
		CHECK(so3_algebra().basis_product(0, 1) == Vector{0, 0, 1});
	}

	TEST_CASE("hemisemidirect product follows (a,x).(b,y) = ([a,b], a y)")
	{
		auto gl2 = gl_algebra(2);
		auto act = gl_standard_action(gl2, 2);
		auto hemi = hemisemidirect(gl2, act);
		Pcg rng(17);
		for (int trial = 0; trial < 20; ++trial)
		{
			Vector u = sample_vector(rng, 6), w = sample_vector(rng, 6);
			auto [a, x] = split(u, 4);
			auto [b, y] = split(w, 4);
			// a, b are row-major 2x2 matrices acting on column vectors.
			Matrix A(2, 2, a), B(2, 2, b);
			Matrix C = A * B - B * A;
			Vector expected = join(C.entries(), A.apply(y));
			CHECK(hemi.product(u, w) == expected);
		}
		CHECK(oracle::leibniz(hemi));
		CHECK_FALSE(oracle::lie(hemi));
	}

	TEST_CASE("demisemidirect is the skew-symmetrization and semidirect is Lie")
	{
		auto so3 = so3_algebra();
		auto act = so3_standard_action(so3);
		CHECK(demisemidirect(so3, act) == skew_symmetrize(hemisemidirect(so3, act)));
		CHECK(oracle::lie(semidirect_lie(so3, act)));
		for (std::size_t d = 1; d <= 3; ++d)
		{
			auto omni = omni_algebras(d);
			CHECK(oracle::leibniz(omni.hemisemidirect));
			CHECK(omni.demisemidirect == skew_symmetrize(omni.hemisemidirect));
			// From d = 2 on the omni-Lie bracket fails Jacobi; gl(1) x Q is still Lie.
			CHECK(oracle::leibniz(omni.demisemidirect) == (d == 1));
		}
	}

	TEST_CASE("module actions must be homomorphisms")
	{
		auto aff = aff1_algebra();
		CHECK_NOTHROW(aff1_line_action(aff));
		// e2 acting by 1 breaks [e1,e2] = e2 -> [rho e1, rho e2] = 0 != rho e2.
		CHECK_THROWS_AS(ModuleAction::make(aff, {Matrix(1, 1, {Rational(0)}), Matrix(1, 1, {Rational(1)})}),
		                std::invalid_argument);
		CHECK_THROWS_AS(hemisemidirect(leibniz2(), ModuleAction::trivial(2, 1)), std::invalid_argument);
	}

	TEST_CASE("circle product is the symmetric part of the hemisemidirect product")
	{
		auto gl2 = gl_algebra(2);
		auto act = gl_standard_action(gl2, 2);
		auto hemi = hemisemidirect(gl2, act);
		Pcg rng(2);
		for (int trial = 0; trial < 10; ++trial)
		{
			Vector u = sample_vector(rng, 6), w = sample_vector(rng, 6);
			auto [a, x] = split(u, 4);
			auto [b, y] = split(w, 4);
			Vector circ = circle_product(gl2, act, u, w);
			CHECK(circ == symmetrized_part(hemi, u, w));
			Matrix A(2, 2, a), B(2, 2, b);
			CHECK(circ == join(Vector(4), scale(rat(1, 2), add(A.apply(y), B.apply(x)))));
		}
	}

	TEST_CASE("graph criteria agree with the identity checkers")
	{
		auto algebras = leibniz_corpus(5, 8);
		algebras.push_back(so3_algebra());
		Pcg rng(77);
		for (int k = 0; k < 15; ++k)
			algebras.push_back(random_algebra(rng, 1 + rng.below(3)));
		for (const auto &a : algebras)
		{
			if (a.dim() > 6)
				continue;
			CAPTURE(a.name());
			auto g = graph_criterion(a);
			CHECK(g.graph_closed_under_leibniz == oracle::leibniz(a));
			CHECK(g.graph_is_lie_subalgebra == oracle::lie(a));
			if (oracle::leibniz(a))
				CHECK(g.circle_vanishes_on_graph == oracle::skew(a));
		}
	}

	TEST_CASE("graph basis vectors are (lambda(e_i), e_i)")
	{
		auto a = leibniz2();
		auto basis = lambda_graph_basis(a);
		REQUIRE(basis.size() == 2);
		// lambda(e2) sends e2 to e1: the matrix E12.
		CHECK(basis[1] == Vector{0, 1, 0, 0, 0, 1});
		CHECK(basis[0] == Vector{0, 0, 0, 0, 1, 0});
	}
}
