#include "coskel/specparse.hpp"

#include <cctype>

#include "coskel/errors.hpp"

namespace coskel {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("spec parse error at position " + std::to_string(pos) +
                      ": " + what + " in '" + std::string(text) + "'");
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool try_consume(std::string_view word) {
    if (text.substr(pos, word.size()) != word) return false;
    pos += word.size();
    return true;
  }

  int parse_int() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<int>(value);
  }

  FactorType parse_factor() {
    if (try_consume("polygon:")) return FactorType{PolygonType(parse_int())};
    if (try_consume("simplex:")) return FactorType{SimplexType(parse_int())};
    fail("expected 'polygon:' or 'simplex:' factor");
  }

  PolytopeType parse_spec() {
    if (try_consume("polygon:")) return PolygonType(parse_int());
    if (try_consume("simplex:")) return SimplexType(parse_int());
    if (try_consume("wedge:")) {
      const int r = parse_int();
      expect(',');
      const int n = parse_int();
      return WedgeProductType(r, n);
    }
    if (try_consume("product:")) {
      expect('(');
      std::vector<FactorType> factors;
      factors.push_back(parse_factor());
      while (peek() == ',') {
        ++pos;
        factors.push_back(parse_factor());
      }
      expect(')');
      return ProductType(std::move(factors));
    }
    fail("expected 'polygon:', 'simplex:', 'product:' or 'wedge:'");
  }
};

} // namespace

PolytopeType parse_polytope_spec(std::string_view text) {
  Parser p{text};
  PolytopeType out = p.parse_spec();
  if (!p.done()) p.fail("trailing characters");
  return out;
}

std::string render_polytope_spec(const PolytopeType& p) {
  if (const auto* poly = std::get_if<PolygonType>(&p))
    return "polygon:" + std::to_string(poly->size());
  if (const auto* simp = std::get_if<SimplexType>(&p))
    return "simplex:" + std::to_string(simp->num_facets());
  if (const auto* w = std::get_if<WedgeProductType>(&p))
    return "wedge:" + std::to_string(w->gon()) + "," +
           std::to_string(w->simplex_facets());
  const auto& prod = std::get<ProductType>(p);
  std::string out = "product:(";
  bool first = true;
  for (const FactorType& f : prod.factors()) {
    if (!first) out += ',';
    first = false;
    if (const auto* poly = std::get_if<PolygonType>(&f))
      out += "polygon:" + std::to_string(poly->size());
    else
      out += "simplex:" + std::to_string(std::get<SimplexType>(f).num_facets());
  }
  out += ')';
  return out;
}

} // namespace coskel
