#include "oracles.hpp"

#include "leibniz/corpus.hpp"

#include <doctest.h>

using namespace leibniz;

TEST_SUITE("algebra")
{
	TEST_CASE("identity checkers agree with the oracle on corpus and random algebras")
	{
		auto corpus = leibniz_corpus(1, 12);
		Pcg rng(99);
		for (int k = 0; k < 40; ++k)
			corpus.push_back(random_algebra(rng, 1 + rng.below(3)));
		std::size_t non_leibniz = 0;
		for (const auto &a : corpus)
		{
			CAPTURE(a.name());
			bool leib = oracle::leibniz(a);
			CHECK(check_leibniz(a).holds == leib);
			CHECK(a.is_leibniz() == leib);
			CHECK(check_skew(a).holds == oracle::skew(a));
			CHECK(check_lie(a) == oracle::lie(a));
			non_leibniz += leib ? 0 : 1;
		}
		CHECK(non_leibniz > 10);
	}

	TEST_CASE("failure witness carries the tuple and both sides")
	{
		// e1.e1 = e1, e1.e2 = e1: e1.(e1.e1) = e1 but (e1.e1).e1 + e1.(e1.e1) = 2 e1.
		std::vector<Rational> c(8);
		c[0] = 1;
		c[(0 * 2 + 1) * 2 + 0] = 1;
		StructureAlgebra a("bad", StructureAlgebra::default_basis_names(2), c);
		auto r = check_leibniz(a);
		REQUIRE_FALSE(r.holds);
		REQUIRE(r.failure);
		CHECK(r.failure->indices == std::vector<std::size_t>{0, 0, 0});
		CHECK(r.failure->lhs == Vector{1, 0});
		CHECK(r.failure->rhs == Vector{2, 0});
	}

	TEST_CASE("two-dimensional nilpotent Leibniz algebra")
	{
		auto a = leibniz2();
		CHECK(a.is_leibniz());
		CHECK_FALSE(a.is_lie());
		CHECK(squares_ideal(a) == Subspace::span(2, {{1, 0}}));
		CHECK(kernel_of_lambda(a) == Subspace::span(2, {{1, 0}}));
		auto q = quotient_algebra(a, squares_ideal(a));
		CHECK(q.algebra.dim() == 1);
		CHECK(q.algebra.is_lie());
	}

	TEST_CASE("skew-symmetrization is half the commutator")
	{
		Pcg rng(4);
		for (const auto &a : leibniz_corpus(2, 6))
		{
			auto s = skew_symmetrize(a);
			CHECK(check_skew(s).holds);
			Vector x = sample_vector(rng, a.dim()), y = sample_vector(rng, a.dim());
			CHECK(s.product(x, y) ==
			      oracle::lin(rat(1, 2), oracle::mul(a, x, y), rat(-1, 2), oracle::mul(a, y, x)));
			CHECK(add(s.product(x, y), symmetrized_part(a, x, y)) == oracle::mul(a, x, y));
		}
	}

	TEST_CASE("squares ideal sits inside the kernel of lambda and E/J is Lie")
	{
		for (const auto &a : leibniz_corpus(3, 10))
		{
			CAPTURE(a.name());
			auto J = squares_ideal(a);
			CHECK(is_ideal(a, J));
			CHECK(kernel_of_lambda(a).contains(J));
			CHECK(is_ideal(a, kernel_of_lambda(a)));
			CHECK(quotient_algebra(a, J).algebra.is_lie());
			Pcg rng(8);
			Vector x = sample_vector(rng, a.dim());
			CHECK(J.contains(a.product(x, x)));
		}
	}

	TEST_CASE("basis change preserves the identities")
	{
		Pcg rng(21);
		for (const auto &a : leibniz_corpus(4, 6))
		{
			if (a.dim() > 6)
				continue;
			Matrix p = random_invertible(rng, a.dim());
			auto b = change_basis(a, p);
			CHECK(oracle::leibniz(b));
			CHECK(oracle::lie(b) == a.is_lie());
			// p maps new coordinates to old ones and is a homomorphism.
			Vector x = sample_vector(rng, a.dim()), y = sample_vector(rng, a.dim());
			CHECK(p.apply(b.product(x, y)) == a.product(p.apply(x), p.apply(y)));
		}
	}

	TEST_CASE("non-ideals are rejected by the quotient")
	{
		auto a = leibniz2();
		CHECK_FALSE(is_ideal(a, Subspace::span(2, {{0, 1}})));
		CHECK_THROWS_AS(quotient_algebra(a, Subspace::span(2, {{0, 1}})), std::invalid_argument);
	}

	TEST_CASE("subspaces compare by span")
	{
		auto s = Subspace::span(3, {{1, 1, 0}, {0, 2, 0}});
		auto t = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
		CHECK(s == t);
		CHECK(s.dim() == 2);
		CHECK(s.contains(Vector{3, -1, 0}));
		CHECK_FALSE(s.contains(Vector{0, 0, 1}));
		auto coords = coordinates_in({{1, 1, 0}, {0, 2, 0}}, Vector{3, 5, 0});
		REQUIRE(coords);
		CHECK(*coords == Vector{3, 1});
	}
}
