#ifndef LEIBNIZ_CORPUS_HPP
#define LEIBNIZ_CORPUS_HPP

#include "leibniz/products.hpp"
#include "leibniz/random.hpp"

#include <string>
#include <vector>

namespace leibniz {

/// e2.e2 = e1.
StructureAlgebra leibniz2();
/// Strictly upper-triangular 3x3 matrices: basis E12, E13, E23, [E12,E23] = E13.
StructureAlgebra heisenberg3();
ModuleAction heisenberg3_action(const StructureAlgebra &n3);

/// gl(d) x|_H Q^d.
StructureAlgebra hemi_gl(std::size_t d);
/// aff(1) x|_H Q with e1 -> 1, e2 -> 0.
StructureAlgebra hemi_aff1();
ModuleAction aff1_line_action(const StructureAlgebra &aff1);
/// n3 x|_H Q^3; all left multiplications nilpotent.
StructureAlgebra hemi_heisenberg3();
/// so(3) x|_H Q^3.
StructureAlgebra hemi_so3();

StructureAlgebra direct_sum(const StructureAlgebra &a, const StructureAlgebra &b);

/// Integer entries in [-2, 2], redrawn until invertible.
Matrix random_invertible(Pcg &rng, std::size_t n);

/// Two-step nilpotent Leibniz algebra (generators multiply into a central
/// part), in a random rational basis.
StructureAlgebra random_nilpotent_leibniz(Pcg &rng, std::size_t dim);

/// Dense constants in {-1, 0, 1}; almost never Leibniz.
StructureAlgebra random_algebra(Pcg &rng, std::size_t dim);

/// Fixed Leibniz algebras plus `random_count` seeded nilpotent ones of
/// dimension 2..5.
std::vector<StructureAlgebra> leibniz_corpus(std::uint64_t seed, std::size_t random_count);

} // namespace leibniz

#endif
