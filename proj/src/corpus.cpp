#include "leibniz/corpus.hpp"

namespace leibniz {

StructureAlgebra leibniz2()
{
	std::vector<Rational> c(8);
	c[(1 * 2 + 1) * 2 + 0] = 1;
	return StructureAlgebra("leibniz2", StructureAlgebra::default_basis_names(2), std::move(c));
}

StructureAlgebra heisenberg3()
{
	std::vector<Rational> c(27);
	c[(0 * 3 + 2) * 3 + 1] = 1;
	c[(2 * 3 + 0) * 3 + 1] = -1;
	return StructureAlgebra("n3", {"E12", "E13", "E23"}, std::move(c));
}

ModuleAction heisenberg3_action(const StructureAlgebra &n3)
{
	const std::pair<std::size_t, std::size_t> entries[3] = {{0, 1}, {0, 2}, {1, 2}};
	std::vector<Matrix> mats;
	for (const auto &[r, c] : entries)
	{
		Matrix m(3, 3);
		m(r, c) = 1;
		mats.push_back(std::move(m));
	}
	return ModuleAction::make(n3, std::move(mats));
}

StructureAlgebra hemi_gl(std::size_t d)
{
	auto gl = gl_algebra(d);
	return hemisemidirect(gl, gl_standard_action(gl, d)).renamed("hemi_gl" + std::to_string(d));
}

ModuleAction aff1_line_action(const StructureAlgebra &aff1)
{
	return ModuleAction::make(aff1, {Matrix(1, 1, {Rational(1)}), Matrix(1, 1)});
}

StructureAlgebra hemi_aff1()
{
	auto a = aff1_algebra();
	return hemisemidirect(a, aff1_line_action(a)).renamed("hemi_aff1");
}

StructureAlgebra hemi_heisenberg3()
{
	auto n3 = heisenberg3();
	return hemisemidirect(n3, heisenberg3_action(n3)).renamed("hemi_n3");
}

StructureAlgebra hemi_so3()
{
	auto so3 = so3_algebra();
	return hemisemidirect(so3, so3_standard_action(so3)).renamed("hemi_so3");
}

StructureAlgebra direct_sum(const StructureAlgebra &a, const StructureAlgebra &b)
{
	const std::size_t p = a.dim(), q = b.dim(), n = p + q;
	std::vector<Rational> c(n * n * n);
	for (std::size_t i = 0; i < p; ++i)
		for (std::size_t j = 0; j < p; ++j)
			for (std::size_t k = 0; k < p; ++k)
				c[(i * n + j) * n + k] = a.c(i, j, k);
	for (std::size_t i = 0; i < q; ++i)
		for (std::size_t j = 0; j < q; ++j)
			for (std::size_t k = 0; k < q; ++k)
				c[((p + i) * n + p + j) * n + p + k] = b.c(i, j, k);
	return StructureAlgebra(a.name() + "+" + b.name(), StructureAlgebra::default_basis_names(n), std::move(c));
}

Matrix random_invertible(Pcg &rng, std::size_t n)
{
	for (;;)
	{
		Matrix m(n, n);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				m(r, c) = static_cast<long>(rng.below(5)) - 2;
		if (rank(m) == n)
			return m;
	}
}

StructureAlgebra random_nilpotent_leibniz(Pcg &rng, std::size_t dim)
{
	if (dim < 2)
		return StructureAlgebra::abelian(dim, "nil_leibniz_" + std::to_string(dim));
	const std::size_t central = 1 + rng.below(static_cast<std::uint32_t>(dim - 1));
	const std::size_t gens = dim - central;
	std::vector<Rational> c(dim * dim * dim);
	for (std::size_t i = 0; i < gens; ++i)
		for (std::size_t j = 0; j < gens; ++j)
			for (std::size_t k = gens; k < dim; ++k)
				if (rng.chance(1, 2))
					c[(i * dim + j) * dim + k] = sample_rational(rng);
	StructureAlgebra base("nil_leibniz_" + std::to_string(dim), StructureAlgebra::default_basis_names(dim),
	                      std::move(c));
	return change_basis(base, random_invertible(rng, dim));
}

StructureAlgebra random_algebra(Pcg &rng, std::size_t dim)
{
	std::vector<Rational> c(dim * dim * dim);
	for (auto &v : c)
		v = static_cast<long>(rng.below(3)) - 1;
	return StructureAlgebra("random_" + std::to_string(dim), StructureAlgebra::default_basis_names(dim), std::move(c));
}

std::vector<StructureAlgebra> leibniz_corpus(std::uint64_t seed, std::size_t random_count)
{
	std::vector<StructureAlgebra> out{leibniz2(),      hemi_gl(1),         hemi_gl(2),   hemi_gl(3),
	                                  hemi_aff1(),     hemi_heisenberg3(), hemi_so3(),   so3_algebra(),
	                                  aff1_algebra(),  heisenberg3()};
	Pcg rng(seed);
	for (std::size_t k = 0; k < random_count; ++k)
	{
		std::size_t dim = 2 + rng.below(4);
		StructureAlgebra a = random_nilpotent_leibniz(rng, dim);
		// Every third small one is summed with leibniz2 and re-based.
		if (k % 3 == 2 && dim <= 3)
			a = change_basis(direct_sum(a, leibniz2()), random_invertible(rng, dim + 2));
		out.push_back(a.renamed("random_nilpotent_" + std::to_string(k)));
	}
	return out;
}

} // namespace leibniz
