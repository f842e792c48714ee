#ifndef LEIBNIZ_CLI_PARSERS_HPP
#define LEIBNIZ_CLI_PARSERS_HPP

#include "leibniz/courant.hpp"
#include "leibniz/lie_yamaguti.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz::cli {

using Json = nlohmann::ordered_json;

/// Syntax error; line and column are 1-based (line is 1 for one-line input).
class ParseError : public std::runtime_error
{
public:
	ParseError(const std::string &what, std::size_t line, std::size_t column)
	    : std::runtime_error("line " + std::to_string(line) + ", position " + std::to_string(column) + ": " + what),
	      line_(line), column_(column)
	{
	}
	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/// Well-formed input that does not describe a valid object.
class SemanticError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

Json parse_json(std::string_view text);
std::string read_file(const std::string &path);

/// {"name", "dim", "basis", "products": [{"left","right","result":{label: "p/q"}}]}.
StructureAlgebra parse_algebra(std::string_view text);
Json algebra_to_json(const StructureAlgebra &a);

/// {"dim", "binary": [[i,j,k,"p/q"]...], "ternary": [[i,j,k,l,"p/q"]...]}.
LieYamaguti parse_ly(std::string_view text);
Json ly_to_json(const LieYamaguti &L);

/// {"basis": [["p/q", ...], ...]} in the algebra's coordinates.
Subspace parse_subspace(std::string_view text, std::size_t ambient);

/// expr := term (('+'|'-') term)*, term := factor ('*' factor)*, factor :=
/// rational | var ('^' nat)?; an optional sign may lead the expression.
Poly parse_poly(std::string_view text, const std::vector<std::string> &vars);

struct ParsedSection
{
	std::vector<std::string> vars;
	Section section;
};

/// {"vars": [...], "vector_field": {var: poly}, "one_form": {var: poly}}.
ParsedSection parse_section(std::string_view text);
Json section_to_json(const Section &s, const std::vector<std::string> &vars);

/// {"vars": [...], "entries": [[i, j, "poly"], ...]} with i < j or i > j
/// (skew extension), zero-based.
template <class Tag>
SkewTensor<Tag> parse_skew(std::string_view text, std::vector<std::string> *vars_out = nullptr);

/// Comma-separated rationals, e.g. "0,1/2,-3".
Vector parse_vector(std::string_view text);
/// Strict: integers or p/q only.
Rational parse_rational_arg(std::string_view text);

Json to_json(const Rational &q);
Json to_json(std::span<const Rational> v);
Json to_json(const Matrix &m);
Json to_json(std::span<const double> v);
Json to_json(const FloatMatrix &m);

} // namespace leibniz::cli

#endif
