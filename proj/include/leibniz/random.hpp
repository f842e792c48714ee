#ifndef LEIBNIZ_RANDOM_HPP
#define LEIBNIZ_RANDOM_HPP

#include "leibniz/linalg.hpp"

#include <cstdint>

namespace leibniz {

/// PCG32 (XSH-RR) on a 64-bit state. Fully determined by the seed, so every
/// sampled suite is reproducible.
class Pcg
{
public:
	explicit Pcg(std::uint64_t seed, std::uint64_t stream = 0x5851f42d4c957f2dULL)
	    : inc_((stream << 1u) | 1u)
	{
		next32();
		state_ += seed;
		next32();
	}

	std::uint32_t next32()
	{
		std::uint64_t old = state_;
		state_ = old * 6364136223846793005ULL + inc_;
		auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
		auto rot = static_cast<std::uint32_t>(old >> 59u);
		return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
	}

	std::uint64_t next64()
	{
		std::uint64_t hi = next32();
		return (hi << 32u) | next32();
	}

	/// Uniform in [0, bound); bound > 0. Rejection keeps it unbiased.
	std::uint32_t below(std::uint32_t bound)
	{
		std::uint32_t threshold = (0u - bound) % bound;
		for (;;)
		{
			std::uint32_t r = next32();
			if (r >= threshold)
				return r % bound;
		}
	}

	bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

private:
	std::uint64_t state_ = 0;
	std::uint64_t inc_;
};

/// Numerator in [-9, 9], denominator in {1, 2, 3}.
inline Rational sample_rational(Pcg &rng)
{
	long num = static_cast<long>(rng.below(19)) - 9;
	long den = static_cast<long>(rng.below(3)) + 1;
	return rat(num, den);
}

inline Vector sample_vector(Pcg &rng, std::size_t n)
{
	Vector v(n);
	for (auto &x : v)
		x = sample_rational(rng);
	return v;
}

} // namespace leibniz

#endif
