#ifndef LEIBNIZ_TESTS_ORACLES_HPP
#define LEIBNIZ_TESTS_ORACLES_HPP

// Reference computations written directly from the defining formulas, kept
// free of the library's own helpers wherever that is practical.

#include "leibniz/algebra.hpp"

#include <vector>

namespace oracle {

using leibniz::Rational;
using leibniz::StructureAlgebra;
using leibniz::Vector;

inline Vector mul(const StructureAlgebra &a, const Vector &x, const Vector &y)
{
	const std::size_t n = a.dim();
	Vector out(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			if (x[i] == 0 || y[j] == 0)
				continue;
			for (std::size_t k = 0; k < n; ++k)
				out[k] += x[i] * y[j] * a.constants()[(i * n + j) * n + k];
		}
	return out;
}

inline Vector lin(const Rational &a, const Vector &x, const Rational &b, const Vector &y)
{
	Vector out(x.size());
	for (std::size_t i = 0; i < x.size(); ++i)
		out[i] = a * x[i] + b * y[i];
	return out;
}

inline Vector basis(std::size_t n, std::size_t i)
{
	Vector v(n);
	v[i] = 1;
	return v;
}

/// x(yz) - (xy)z - y(xz) on every basis triple.
inline bool leibniz(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				Vector x = basis(n, i), y = basis(n, j), z = basis(n, k);
				Vector lhs = mul(a, x, mul(a, y, z));
				Vector rhs = lin(1, mul(a, mul(a, x, y), z), 1, mul(a, y, mul(a, x, z)));
				if (lhs != rhs)
					return false;
			}
	return true;
}

inline bool skew(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (mul(a, basis(n, i), basis(n, j)) != lin(-1, mul(a, basis(n, j), basis(n, i)), 0, Vector(n)))
				return false;
	return true;
}

inline bool lie(const StructureAlgebra &a) { return skew(a) && leibniz(a); }

} // namespace oracle

#endif
