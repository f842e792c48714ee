#include "leibniz/cli/parsers.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace leibniz::cli {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
	std::size_t line = 1, col = 1;
	for (std::size_t i = 0; i < byte && i < text.size(); ++i)
	{
		if (text[i] == '\n')
		{
			++line;
			col = 1;
		}
		else
			++col;
	}
	return {line, col};
}

Rational json_rational(const Json &v, const std::string &where)
{
	if (v.is_string())
	{
		try
		{
			return parse_rational(v.get<std::string>());
		}
		catch (const std::invalid_argument &e)
		{
			throw SemanticError(where + ": " + e.what());
		}
	}
	if (v.is_number_integer())
		return Rational(mpz_class(v.dump(), 10));
	throw SemanticError(where + ": expected a rational string \"p/q\" or an integer, got " + v.dump());
}

const Json &require(const Json &obj, const char *key, const std::string &where)
{
	if (!obj.is_object() || !obj.contains(key))
		throw SemanticError(where + ": missing \"" + key + "\"");
	return obj.at(key);
}

std::size_t json_index(const Json &v, std::size_t bound, const std::string &where)
{
	if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
		throw SemanticError(where + ": index must be a non-negative integer, got " + v.dump());
	auto i = v.get<std::size_t>();
	if (i >= bound)
		throw SemanticError(where + ": index " + std::to_string(i) + " out of range");
	return i;
}

std::vector<std::string> json_vars(const Json &doc)
{
	const Json &vars = require(doc, "vars", "section");
	if (!vars.is_array() || vars.empty())
		throw SemanticError("\"vars\" must be a non-empty array of names");
	std::vector<std::string> out;
	std::set<std::string> seen;
	for (const auto &v : vars)
	{
		if (!v.is_string())
			throw SemanticError("variable names must be strings");
		if (!seen.insert(v.get<std::string>()).second)
			throw SemanticError("duplicate variable \"" + v.get<std::string>() + "\"");
		out.push_back(v.get<std::string>());
	}
	return out;
}

} // namespace

Json parse_json(std::string_view text)
{
	try
	{
		return Json::parse(text.begin(), text.end());
	}
	catch (const Json::parse_error &e)
	{
		auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
		std::string msg = e.what();
		// Drop nlohmann's "[json.exception.parse_error.101] parse error at line x, column y: " prefix.
		if (auto p = msg.find(": "); p != std::string::npos && msg.rfind("[json.exception", 0) == 0)
			msg = msg.substr(p + 2);
		throw ParseError(msg, line, col);
	}
}

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw std::runtime_error("file not found: " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

// ------------------------------------------------------------- algebra

StructureAlgebra parse_algebra(std::string_view text)
{
	Json doc = parse_json(text);
	if (!doc.is_object())
		throw SemanticError("algebra file must be a JSON object");
	const Json &dim_j = require(doc, "dim", "algebra");
	if (!dim_j.is_number_unsigned())
		throw SemanticError("\"dim\" must be a non-negative integer");
	const auto n = dim_j.get<std::size_t>();
	std::vector<std::string> basis;
	if (doc.contains("basis"))
	{
		for (const auto &b : doc.at("basis"))
		{
			if (!b.is_string())
				throw SemanticError("basis labels must be strings");
			basis.push_back(b.get<std::string>());
		}
		if (basis.size() != n)
			throw SemanticError("\"basis\" has " + std::to_string(basis.size()) + " labels but dim is " +
			                    std::to_string(n));
	}
	else
		basis = StructureAlgebra::default_basis_names(n);
	std::map<std::string, std::size_t> index;
	for (std::size_t i = 0; i < n; ++i)
		if (!index.emplace(basis[i], i).second)
			throw SemanticError("duplicate basis label \"" + basis[i] + "\"");
	auto label = [&](const Json &v, const std::string &where) {
		if (!v.is_string())
			throw SemanticError(where + ": basis label must be a string");
		auto it = index.find(v.get<std::string>());
		if (it == index.end())
			throw SemanticError(where + ": unknown basis label \"" + v.get<std::string>() + "\"");
		return it->second;
	};

	std::vector<Rational> c(n * n * n);
	std::set<std::pair<std::size_t, std::size_t>> seen;
	if (doc.contains("products"))
	{
		const Json &products = doc.at("products");
		if (!products.is_array())
			throw SemanticError("\"products\" must be an array");
		for (std::size_t p = 0; p < products.size(); ++p)
		{
			const Json &entry = products[p];
			std::string where = "products[" + std::to_string(p) + "]";
			std::size_t i = label(require(entry, "left", where), where);
			std::size_t j = label(require(entry, "right", where), where);
			if (!seen.emplace(i, j).second)
				throw SemanticError(where + ": duplicate product " + basis[i] + "." + basis[j]);
			const Json &result = require(entry, "result", where);
			if (!result.is_object())
				throw SemanticError(where + ": \"result\" must be an object {label: \"p/q\"}");
			for (const auto &[key, value] : result.items())
			{
				std::size_t k = label(Json(key), where);
				c[(i * n + j) * n + k] = json_rational(value, where + "." + key);
			}
		}
	}
	std::string name = doc.contains("name") && doc.at("name").is_string() ? doc.at("name").get<std::string>()
	                                                                       : "algebra";
	return StructureAlgebra(std::move(name), std::move(basis), std::move(c));
}

Json algebra_to_json(const StructureAlgebra &a)
{
	const std::size_t n = a.dim();
	Json products = Json::array();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Json result = Json::object();
			for (std::size_t k = 0; k < n; ++k)
				if (a.c(i, j, k) != 0)
					result[a.basis_names()[k]] = to_json(a.c(i, j, k));
			if (!result.empty())
				products.push_back({{"left", a.basis_names()[i]}, {"right", a.basis_names()[j]}, {"result", result}});
		}
	return {{"name", a.name()}, {"dim", n}, {"basis", a.basis_names()}, {"products", products}};
}

// ------------------------------------------------------------------ LY

LieYamaguti parse_ly(std::string_view text)
{
	Json doc = parse_json(text);
	const Json &dim_j = require(doc, "dim", "lie-yamaguti");
	if (!dim_j.is_number_unsigned())
		throw SemanticError("\"dim\" must be a non-negative integer");
	const auto n = dim_j.get<std::size_t>();
	LieYamaguti L = LieYamaguti::zero(n);
	auto read = [&](const char *key, std::size_t arity) {
		if (!doc.contains(key))
			return;
		const Json &entries = doc.at(key);
		std::set<std::vector<std::size_t>> seen;
		for (std::size_t e = 0; e < entries.size(); ++e)
		{
			std::string where = std::string(key) + "[" + std::to_string(e) + "]";
			const Json &row = entries[e];
			if (!row.is_array() || row.size() != arity + 1)
				throw SemanticError(where + ": expected " + std::to_string(arity) + " indices and a value");
			std::vector<std::size_t> idx;
			for (std::size_t p = 0; p < arity; ++p)
				idx.push_back(json_index(row[p], n, where));
			if (!seen.insert(idx).second)
				throw SemanticError(where + ": duplicate entry");
			Rational v = json_rational(row[arity], where);
			if (arity == 3)
				L.b_at(idx[0], idx[1], idx[2]) = v;
			else
				L.t_at(idx[0], idx[1], idx[2], idx[3]) = v;
		}
	};
	read("binary", 3);
	read("ternary", 4);
	return L;
}

Json ly_to_json(const LieYamaguti &L)
{
	const std::size_t n = L.n;
	Json binary = Json::array(), ternary = Json::array();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				if (L.b_at(i, j, k) != 0)
					binary.push_back({i, j, k, to_json(L.b_at(i, j, k))});
				for (std::size_t l = 0; l < n; ++l)
					if (L.t_at(i, j, k, l) != 0)
						ternary.push_back({i, j, k, l, to_json(L.t_at(i, j, k, l))});
			}
	return {{"dim", n}, {"binary", binary}, {"ternary", ternary}};
}

Subspace parse_subspace(std::string_view text, std::size_t ambient)
{
	Json doc = parse_json(text);
	const Json &basis = require(doc, "basis", "subspace");
	std::vector<Vector> gens;
	for (std::size_t r = 0; r < basis.size(); ++r)
	{
		std::string where = "basis[" + std::to_string(r) + "]";
		if (!basis[r].is_array() || basis[r].size() != ambient)
			throw SemanticError(where + ": expected " + std::to_string(ambient) + " coordinates");
		Vector v;
		for (const auto &x : basis[r])
			v.push_back(json_rational(x, where));
		gens.push_back(std::move(v));
	}
	return Subspace::span(ambient, gens);
}

// ---------------------------------------------------------- polynomials

namespace {

class PolyParser
{
public:
	PolyParser(std::string_view text, const std::vector<std::string> &vars) : text_(text), vars_(vars) {}

	Poly parse()
	{
		Poly out(vars_.size());
		skip();
		bool negative = false;
		if (peek() == '-' || peek() == '+')
		{
			negative = take() == '-';
			skip();
		}
		Poly t = term();
		out += negative ? -t : t;
		for (skip(); pos_ < text_.size(); skip())
		{
			char op = peek();
			if (op != '+' && op != '-')
				fail("expected '+', '-' or end of input");
			take();
			skip();
			Poly next = term();
			out += op == '-' ? -next : next;
		}
		return out;
	}

private:
	char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
	char take() { return text_[pos_++]; }
	void skip()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}
	[[noreturn]] void fail(const std::string &what) const { throw ParseError(what, 1, pos_ + 1); }

	std::string digits()
	{
		std::string s;
		while (std::isdigit(static_cast<unsigned char>(peek())))
			s += take();
		return s;
	}

	Poly term()
	{
		Poly t = factor();
		for (skip(); peek() == '*'; skip())
		{
			take();
			skip();
			t = t * factor();
		}
		return t;
	}

	Poly factor()
	{
		const std::size_t n = vars_.size();
		char c = peek();
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			std::string num = digits();
			std::string den = "1";
			if (peek() == '.')
				fail("decimal numbers are not exact; write p/q");
			if (peek() == '/')
			{
				take();
				den = digits();
				if (den.empty())
					fail("expected a denominator");
			}
			mpz_class d(den, 10);
			if (d == 0)
				fail("zero denominator");
			Rational q(mpz_class(num, 10), d);
			q.canonicalize();
			return Poly::constant(n, q);
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			std::size_t start = pos_;
			std::string name;
			while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
				name += take();
			std::size_t idx = 0;
			while (idx < n && vars_[idx] != name)
				++idx;
			if (idx == n)
				throw ParseError("unknown variable '" + name + "'", 1, start + 1);
			Exponent e(n, 0);
			e[idx] = 1;
			skip();
			if (peek() == '^')
			{
				take();
				skip();
				std::string power = digits();
				if (power.empty())
					fail("expected a natural-number exponent");
				e[idx] = static_cast<unsigned>(std::stoul(power));
			}
			return Poly::monomial(e, Rational(1));
		}
		if (c == '\0')
			fail("unexpected end of input");
		fail(std::string("unexpected character '") + c + "'");
	}

	std::string_view text_;
	const std::vector<std::string> &vars_;
	std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string> &vars)
{
	return PolyParser(text, vars).parse();
}

ParsedSection parse_section(std::string_view text)
{
	Json doc = parse_json(text);
	ParsedSection out;
	out.vars = json_vars(doc);
	const std::size_t n = out.vars.size();
	out.section = Section::zero(n);
	auto read = [&](const char *key, std::vector<Poly> &dst) {
		if (!doc.contains(key))
			return;
		const Json &obj = doc.at(key);
		if (!obj.is_object())
			throw SemanticError(std::string("\"") + key + "\" must be an object {var: poly}");
		for (const auto &[var, value] : obj.items())
		{
			std::size_t idx = 0;
			while (idx < n && out.vars[idx] != var)
				++idx;
			if (idx == n)
				throw SemanticError(std::string(key) + ": unknown variable \"" + var + "\"");
			if (!value.is_string())
				throw SemanticError(std::string(key) + "." + var + ": polynomial must be a string");
			dst[idx] = parse_poly(value.get<std::string>(), out.vars);
		}
	};
	read("vector_field", out.section.vf.c);
	read("one_form", out.section.form.c);
	return out;
}

Json section_to_json(const Section &s, const std::vector<std::string> &vars)
{
	Json vf = Json::object(), form = Json::object();
	for (std::size_t i = 0; i < vars.size(); ++i)
	{
		if (!s.vf[i].is_zero())
			vf[vars[i]] = s.vf[i].to_string(vars);
		if (!s.form[i].is_zero())
			form[vars[i]] = s.form[i].to_string(vars);
	}
	return {{"vars", vars}, {"vector_field", vf}, {"one_form", form}};
}

template <class Tag>
SkewTensor<Tag> parse_skew(std::string_view text, std::vector<std::string> *vars_out)
{
	Json doc = parse_json(text);
	std::vector<std::string> vars = json_vars(doc);
	const std::size_t n = vars.size();
	auto out = SkewTensor<Tag>::zero(n);
	std::set<std::pair<std::size_t, std::size_t>> seen;
	if (doc.contains("entries"))
		for (std::size_t e = 0; e < doc.at("entries").size(); ++e)
		{
			const Json &row = doc.at("entries")[e];
			std::string where = "entries[" + std::to_string(e) + "]";
			if (!row.is_array() || row.size() != 3 || !row[2].is_string())
				throw SemanticError(where + ": expected [i, j, \"poly\"]");
			std::size_t i = json_index(row[0], n, where), j = json_index(row[1], n, where);
			if (i == j)
				throw SemanticError(where + ": diagonal entries of a skew tensor are zero");
			if (!seen.emplace(std::min(i, j), std::max(i, j)).second)
				throw SemanticError(where + ": duplicate entry");
			out.set(i, j, parse_poly(row[2].get<std::string>(), vars));
		}
	if (vars_out)
		*vars_out = vars;
	return out;
}

template SkewTensor<TwoFormTag> parse_skew(std::string_view, std::vector<std::string> *);
template SkewTensor<BivectorTag> parse_skew(std::string_view, std::vector<std::string> *);

Rational parse_rational_arg(std::string_view text) { return parse_rational(text); }

Vector parse_vector(std::string_view text)
{
	Vector v;
	std::size_t start = 0;
	for (;;)
	{
		std::size_t comma = text.find(',', start);
		v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
		if (comma == std::string_view::npos)
			break;
		start = comma + 1;
	}
	return v;
}

Json to_json(const Rational &q) { return q.get_str(); }

Json to_json(std::span<const Rational> v)
{
	Json a = Json::array();
	for (const auto &q : v)
		a.push_back(to_json(q));
	return a;
}

Json to_json(const Matrix &m)
{
	Json a = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		a.push_back(to_json(m.row(r)));
	return a;
}

Json to_json(std::span<const double> v)
{
	Json a = Json::array();
	for (double x : v)
		a.push_back(x);
	return a;
}

Json to_json(const FloatMatrix &m)
{
	Json a = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
	{
		Json row = Json::array();
		for (std::size_t c = 0; c < m.cols(); ++c)
			row.push_back(m(r, c));
		a.push_back(row);
	}
	return a;
}

} // namespace leibniz::cli
