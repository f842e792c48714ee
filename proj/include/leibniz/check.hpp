#ifndef LEIBNIZ_CHECK_HPP
#define LEIBNIZ_CHECK_HPP

#include <string>
#include <vector>

namespace leibniz {

struct NamedCheck
{
	std::string name;
	bool pass = false;
	/// Failing tuple and both sides; empty on success.
	std::string witness;
};

inline bool all_pass(const std::vector<NamedCheck> &checks)
{
	for (const auto &c : checks)
		if (!c.pass)
			return false;
	return true;
}

} // namespace leibniz

#endif
