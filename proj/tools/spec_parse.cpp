#include "spec_parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string_view>

#include "omltopo/io.hpp"

namespace omltopo::cli {

namespace {

bool consume(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) == prefix) {
    s.remove_prefix(prefix.size());
    return true;
  }
  return false;
}

int parse_int(std::string_view& s) {
  std::size_t digits = 0;
  while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
  if (digits == 0)
    raise(ErrorKind::ParseError, "expected an integer in generator spec near \"" +
                                     std::string(s.substr(0, 8)) + "\"");
  const int value = std::stoi(std::string(s.substr(0, digits)));
  s.remove_prefix(digits);
  return value;
}

FiniteOml parse_generator(std::string_view& s);

FiniteOml parse_nested(std::string_view& s) {
  if (!consume(s, "gen:"))
    raise(ErrorKind::ParseError, "nested generator operands must start with \"gen:\"");
  return parse_generator(s);
}

FiniteOml parse_generator(std::string_view& s) {
  if (consume(s, "boolean:")) return make_boolean(parse_int(s));
  if (consume(s, "mo:")) return make_mo(parse_int(s));
  if (consume(s, "product:")) {
    FiniteOml a = parse_nested(s);
    if (!consume(s, ",")) raise(ErrorKind::ParseError, "product spec needs two operands");
    FiniteOml b = parse_nested(s);
    return make_product(a, b);
  }
  if (consume(s, "hsum:")) {
    FiniteOml a = parse_nested(s);
    if (!consume(s, ",")) raise(ErrorKind::ParseError, "hsum spec needs two operands");
    FiniteOml b = parse_nested(s);
    return make_horizontal_sum(a, b);
  }
  raise(ErrorKind::ParseError,
        "unknown generator \"" + std::string(s.substr(0, 12)) +
            "\"; expected boolean:K, mo:K, product:S,S or hsum:S,S");
}

}  // namespace

FiniteOml load_lattice(const std::string& argument) {
  std::string_view s(argument);
  if (consume(s, "gen:")) {
    FiniteOml lattice = parse_generator(s);
    if (!s.empty())
      raise(ErrorKind::ParseError, "trailing characters in generator spec: \"" + std::string(s) + "\"");
    return lattice;
  }

  std::ifstream in(argument, std::ios::binary);
  if (!in) raise(ErrorKind::IoError, "cannot read lattice file \"" + argument + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return validate(parse_lattice_json(buffer.str()));
}

}  // namespace omltopo::cli
