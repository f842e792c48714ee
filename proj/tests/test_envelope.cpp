#include "oracles.hpp"

#include "leibniz/corpus.hpp"
#include "leibniz/envelope.hpp"

#include <doctest.h>

#include <functional>

using namespace leibniz;

namespace {

std::vector<EnvelopeTriple> envelopes(std::uint64_t seed, std::size_t random_count)
{
	std::vector<EnvelopeTriple> out;
	for (const auto &E : leibniz_corpus(seed, random_count))
	{
		out.push_back(canonical_envelope(E, squares_ideal(E)));
		out.push_back(canonical_envelope(E, kernel_of_lambda(E)));
		out.push_back(lambda_envelope(E));
	}
	return out;
}

std::string condition_of(const std::function<void()> &fn)
{
	try
	{
		fn();
	}
	catch (const EnvelopeError &e)
	{
		return e.condition();
	}
	return "none";
}

} // namespace

TEST_SUITE("envelope")
{
	TEST_CASE("canonical envelope of the two-dimensional algebra")
	{
		auto E = leibniz2();
		auto t = canonical_envelope(E, squares_ideal(E));
		CHECK(t.h_dim() == 1);
		CHECK(t.g_dim() == 3);
		CHECK(t.f == Matrix(1, 2, {0, 1}));
		// h acts on E as lambda(e2): e2 -> e1.
		CHECK(t.action.matrix(0) == Matrix(2, 2, {0, 1, 0, 0}));
		CHECK(oracle::lie(t.g));
		CHECK(t.notices.empty());
	}

	TEST_CASE("projected bracket and Delta match the closed forms")
	{
		// E part of [sigma_s x, sigma_s y] is s(x.y - y.x); the h part is
		// s^2 [f x, f y] = s^2 f(x.y), and Delta subtracts s f of the E part.
		Pcg rng(31);
		const Rational svals[] = {1, rat(1, 2), -2, rat(3, 7)};
		for (const auto &t : envelopes(6, 6))
		{
			CAPTURE(t.E.name());
			for (const auto &s : svals)
			{
				Vector x = sample_vector(rng, t.e_dim()), y = sample_vector(rng, t.e_dim());
				Vector xy = oracle::mul(t.E, x, y), yx = oracle::mul(t.E, y, x);
				Vector skew = oracle::lin(rat(1, 2), xy, rat(-1, 2), yx);
				auto [bracket, delta] = projected_bracket_delta(t, s, x, y);
				CHECK(bracket == scale(2 * s, skew));
				CHECK(delta == scale(-s * s, t.f.apply(skew)));
			}
		}
	}

	TEST_CASE("every envelope in the corpus verifies")
	{
		for (const auto &t : envelopes(7, 8))
		{
			CAPTURE(t.E.name());
			CHECK(recovery_check(t));
			CHECK(sigma_one_embed_check(t));
			for (const auto &c : verify_envelope(t))
			{
				CAPTURE(c.name);
				CAPTURE(c.witness);
				CHECK(c.pass);
			}
		}
	}

	TEST_CASE("hemisemidirect envelope is (semidirect, h, projection)")
	{
		auto so3 = so3_algebra();
		auto act = so3_standard_action(so3);
		auto t = hemisemidirect_envelope(so3, act);
		CHECK(t.E == hemisemidirect(so3, act));
		CHECK(t.h_dim() == 3);
		CHECK(recovery_check(t));
		CHECK(all_pass(verify_envelope(t)));
	}

	TEST_CASE("ideal sandwich is enforced")
	{
		auto E = hemi_aff1();
		CHECK(condition_of([&] { canonical_envelope(E, Subspace::zero(E.dim())); }) == "sandwich-lower");
		CHECK(condition_of([&] { canonical_envelope(E, Subspace::full(E.dim())); }) == "sandwich-upper");
		auto L = leibniz2();
		CHECK(condition_of([&] { canonical_envelope(L, Subspace::span(2, {{0, 1}})); }) == "not-an-ideal");
	}

	TEST_CASE("validation names the violated condition")
	{
		auto E = leibniz2();
		auto t = canonical_envelope(E, squares_ideal(E));
		// f = 0 cannot reproduce x.y = f(x) y.
		CHECK(condition_of([&] { validate_envelope(E, t.h, t.action, Matrix(1, 2)); }) == "f-does-not-factor-lambda");
		CHECK(condition_of([&] { validate_envelope(E, t.h, t.action, Matrix(2, 2)); }) == "dimension-mismatch");
		std::vector<Rational> c(8);
		c[0] = 1;
		StructureAlgebra bad("bad", StructureAlgebra::default_basis_names(2), c);
		CHECK(condition_of([&] { validate_envelope(bad, t.h, ModuleAction::trivial(1, 2), Matrix(1, 2)); }) ==
		      "not-leibniz");
	}

	TEST_CASE("non-surjective f produces a notice")
	{
		// E = leibniz2, h = gl(E) restricted to span(lambda(e2)) plus an extra
		// central direction that f never hits.
		auto E = leibniz2();
		std::vector<Rational> c(8);
		StructureAlgebra h("h2", {"a", "z"}, c);
		auto act = ModuleAction::make(h, {Matrix(2, 2, {0, 1, 0, 0}), Matrix(2, 2)});
		auto t = validate_envelope(E, h, act, Matrix(2, 2, {0, 1, 0, 0}));
		CHECK(t.notices.size() == 1);
		CHECK(recovery_check(t));
	}
}
