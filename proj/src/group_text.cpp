#include "algrec/group.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace algrec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(context));
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view s, std::string_view context) {
  std::vector<std::int64_t> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Strips "prefix(" ... ")" and returns the inside.
std::string_view inside(std::string_view s, std::string_view open, std::string_view context) {
  if (s.size() < open.size() + 1 || s.substr(0, open.size()) != open || s.back() != ')')
    throw ParseError("expected " + std::string(open) + "...) in '" + std::string(context) + "'");
  return s.substr(open.size(), s.size() - open.size() - 1);
}

template <class Ints> void join(std::ostringstream& os, const Ints& xs) {
  bool first = true;
  for (auto v : xs) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
}

} // namespace

std::string to_string(const GroupElement& x) {
  std::ostringstream os;
  switch (x.group().kind()) {
  case GroupKind::ZPower:
    os << '(';
    join(os, x.as_lattice().coords);
    os << ')';
    break;
  case GroupKind::Free: {
    const auto& w = x.as_word().letters;
    if (w.empty()) return "e";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ' ';
      os << (w[i] > 0 ? 'x' : 'X') << std::abs(int(w[i]));
    }
    break;
  }
  case GroupKind::Heisenberg: {
    const auto& h = x.as_heisenberg();
    os << "H(" << h.a << ',' << h.b << ',' << h.c << ')';
    break;
  }
  case GroupKind::LamplighterZ: {
    const auto& l = x.as_lamplighter();
    os << "L(" << l.position << ";{";
    join(os, l.lamps);
    os << "})";
    break;
  }
  case GroupKind::CyclicZ:
    os << x.as_residue().value << " mod " << x.group().modulus();
    break;
  }
  return os.str();
}

GroupElement parse_element(const GroupDescriptor& g, std::string_view text) {
  const std::string_view s = trim(text);
  switch (g.kind()) {
  case GroupKind::ZPower: {
    auto coords = parse_int_list(inside(s, "(", s), s);
    if (static_cast<int>(coords.size()) != g.rank())
      throw ParseError("expected " + std::to_string(g.rank()) + " coordinates in '" + std::string(s) + "'");
    return GroupElement::lattice(g, std::move(coords));
  }
  case GroupKind::Free: {
    std::vector<Letter> letters;
    if (s.empty() || s == "e") return identity(g);
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) {
      if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
        throw ParseError("bad free-group letter '" + tok + "'");
      std::int64_t i = parse_int(std::string_view(tok).substr(1), s);
      if (i < 1 || i > g.rank())
        throw ParseError("letter '" + tok + "' outside alphabet of " + g.to_string());
      letters.push_back(static_cast<Letter>(tok[0] == 'x' ? i : -i));
    }
    return GroupElement::word(g, std::move(letters));
  }
  case GroupKind::Heisenberg: {
    auto v = parse_int_list(inside(s, "H(", s), s);
    if (v.size() != 3) throw ParseError("expected H(a,b,c), got '" + std::string(s) + "'");
    return GroupElement::heisenberg(v[0], v[1], v[2]);
  }
  case GroupKind::LamplighterZ: {
    std::string_view body = inside(s, "L(", s);
    std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("expected L(x;{...}), got '" + std::string(s) + "'");
    std::int64_t pos = parse_int(body.substr(0, semi), s);
    std::string_view set = trim(body.substr(semi + 1));
    if (set.size() < 2 || set.front() != '{' || set.back() != '}')
      throw ParseError("expected lamp set {...} in '" + std::string(s) + "'");
    return GroupElement::lamplighter(pos, parse_int_list(set.substr(1, set.size() - 2), s));
  }
  case GroupKind::CyclicZ: {
    std::size_t at = s.find(" mod ");
    if (at == std::string_view::npos) throw ParseError("expected 'r mod m', got '" + std::string(s) + "'");
    std::int64_t r = parse_int(s.substr(0, at), s);
    std::int64_t m = parse_int(s.substr(at + 5), s);
    if (m != g.modulus())
      throw ParseError("modulus " + std::to_string(m) + " does not match " + g.to_string());
    return GroupElement::residue(g, r);
  }
  }
  throw std::logic_error("unknown group kind");
}

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "Heisenberg") return heisenberg();
  if (s == "LamplighterZ") return lamplighter_z();
  auto param = [&](std::string_view prefix) { return parse_int(inside(s, prefix, s), s); };
  if (s.starts_with("ZPower(")) return z_power(static_cast<int>(param("ZPower(")));
  if (s.starts_with("Free(")) return free(static_cast<int>(param("Free(")));
  if (s.starts_with("CyclicZ(")) return cyclic(param("CyclicZ("));
  throw ParseError("unknown group '" + std::string(s) +
                   "' (expected ZPower(d), Free(d), Heisenberg, LamplighterZ or CyclicZ(m))");
}

} // namespace algrec
