#include "algrec/scenario.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace algrec {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"group", {"kind"}},
      {"measure", {"type", "alpha", "cutoff", "minor_weight", "atoms"}},
      {"walk", {"steps", "tail"}},
      {"budget", {"radius", "max_elements", "max_products", "coverage_radius", "require_exhausted"}},
      {"run", {"seeds", "checkpoints", "out"}},
      {"free", {"j0", "lengths", "trials", "pool_size", "pool_length", "reflected_steps", "settle_margin",
                "growth_radius"}},
      {"identities", {"k_range", "nm_max", "z_max", "m_max"}},
  };
  return s;
}

template <class T> T parse_number(const std::string& field, std::string text) {
  boost::algorithm::trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ConfigError(field, "expected a number, got '" + text + "'");
  return value;
}

std::size_t parse_positive(const std::string& field, const std::string& text) {
  const auto v = parse_number<std::size_t>(field, text);
  if (v == 0) throw ConfigError(field, "must be positive");
  return v;
}

double parse_double(const std::string& field, std::string text) {
  boost::algorithm::trim(text);
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "expected a real number, got '" + text + "'");
  }
}

bool parse_bool(const std::string& field, std::string text) {
  boost::algorithm::trim(text);
  boost::algorithm::to_lower(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(field, "expected true or false, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text, const char* seps) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(seps));
  std::vector<std::string> out;
  for (auto& p : parts) {
    boost::algorithm::trim(p);
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

template <class T> std::vector<T> parse_list(const std::string& field, const std::string& text) {
  std::vector<T> out;
  for (const auto& p : split_list(text, ", ")) out.push_back(parse_number<T>(field, p));
  return out;
}

template <class T> std::string join(const std::vector<T>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational parse_weight(const std::string& field, const std::string& text) {
  try {
    return parse_rational(boost::algorithm::trim_copy(text));
  } catch (const std::exception& e) {
    throw ConfigError(field, std::string("bad weight: ") + e.what());
  }
}

} // namespace

std::string to_string(MeasureType t) {
  switch (t) {
  case MeasureType::Standard: return "standard";
  case MeasureType::HeavyTail: return "heavy-tail";
  case MeasureType::Atoms: return "atoms";
  }
  return "?";
}

ScenarioConfig parse_config(std::string_view text) {
  pt::ptree tree;
  {
    std::istringstream in{std::string(text)};
    try {
      pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
      throw ConfigError("line " + std::to_string(e.line()), e.message());
    }
  }

  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (it == schema().end()) throw ConfigError(section, "unknown section");
    if (!body.data().empty()) throw ConfigError(section, "key outside a section");
    for (const auto& [key, value] : body)
      if (!it->second.count(key)) throw ConfigError(section + "." + key, "unknown key");
  }

  ScenarioConfig c;
  auto get = [&](const std::string& path) { return tree.get_optional<std::string>(pt::ptree::path_type(path, '.')); };

  if (auto v = get("group.kind")) {
    try {
      c.group = GroupDescriptor::parse(boost::algorithm::trim_copy(*v));
    } catch (const std::exception& e) {
      throw ConfigError("group.kind", e.what());
    }
  } else {
    throw ConfigError("group.kind", "missing");
  }

  if (auto v = get("measure.type")) {
    const auto t = boost::algorithm::trim_copy(*v);
    if (t == "standard") c.measure.type = MeasureType::Standard;
    else if (t == "heavy-tail") c.measure.type = MeasureType::HeavyTail;
    else if (t == "atoms") c.measure.type = MeasureType::Atoms;
    else throw ConfigError("measure.type", "expected standard, heavy-tail or atoms, got '" + t + "'");
  }
  if (auto v = get("measure.alpha")) c.measure.alpha = parse_double("measure.alpha", *v);
  if (auto v = get("measure.cutoff")) c.measure.cutoff = parse_number<int>("measure.cutoff", *v);
  if (auto v = get("measure.minor_weight")) c.measure.minor_weight = parse_weight("measure.minor_weight", *v);
  if (auto v = get("measure.atoms")) {
    // "element @ weight | element @ weight ..."
    for (const auto& item : split_list(*v, "|")) {
      const auto at = item.rfind('@');
      if (at == std::string::npos) throw ConfigError("measure.atoms", "expected 'element @ weight', got '" + item + "'");
      const auto elem_text = boost::algorithm::trim_copy(item.substr(0, at));
      std::string canonical;
      try {
        canonical = to_string(parse_element(c.group, elem_text));
      } catch (const std::exception& e) {
        throw ConfigError("measure.atoms", e.what());
      }
      c.measure.atoms.emplace_back(canonical, parse_weight("measure.atoms", item.substr(at + 1)));
    }
  }

  if (auto v = get("walk.steps")) c.steps = parse_number<std::size_t>("walk.steps", *v);
  if (auto v = get("walk.tail")) c.tail = parse_positive("walk.tail", *v);

  if (auto v = get("budget.radius")) c.budget.radius = parse_positive("budget.radius", *v);
  if (auto v = get("budget.max_elements")) c.budget.max_elements = parse_positive("budget.max_elements", *v);
  if (auto v = get("budget.max_products")) c.budget.max_products = parse_positive("budget.max_products", *v);
  if (auto v = get("budget.coverage_radius")) c.coverage_radius = parse_positive("budget.coverage_radius", *v);
  if (auto v = get("budget.require_exhausted")) c.require_exhausted = parse_bool("budget.require_exhausted", *v);

  if (auto v = get("run.seeds")) c.seeds = parse_list<std::uint64_t>("run.seeds", *v);
  if (auto v = get("run.checkpoints")) c.checkpoints = parse_list<std::size_t>("run.checkpoints", *v);
  if (auto v = get("run.out")) c.out = boost::algorithm::trim_copy(*v);

  if (auto v = get("free.j0")) c.free.j0 = parse_number<std::size_t>("free.j0", *v);
  if (auto v = get("free.lengths")) c.free.lengths = parse_list<std::size_t>("free.lengths", *v);
  if (auto v = get("free.trials")) c.free.trials = parse_positive("free.trials", *v);
  if (auto v = get("free.pool_size")) c.free.pool_size = parse_positive("free.pool_size", *v);
  if (auto v = get("free.pool_length")) c.free.pool_length = parse_number<std::size_t>("free.pool_length", *v);
  if (auto v = get("free.reflected_steps")) c.free.reflected_steps = parse_number<std::size_t>("free.reflected_steps", *v);
  if (auto v = get("free.settle_margin")) c.free.settle_margin = parse_number<std::size_t>("free.settle_margin", *v);
  if (auto v = get("free.growth_radius")) c.free.growth_radius = parse_positive("free.growth_radius", *v);

  if (auto v = get("identities.k_range")) c.identities.k_range = parse_number<int>("identities.k_range", *v);
  if (auto v = get("identities.nm_max")) c.identities.nm_max = parse_number<int>("identities.nm_max", *v);
  if (auto v = get("identities.z_max")) c.identities.z_max = parse_number<int>("identities.z_max", *v);
  if (auto v = get("identities.m_max")) c.identities.m_max = parse_number<int>("identities.m_max", *v);

  validate_config(c);
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const ScenarioConfig& c) {
  try {
    const auto report = validate_symmetric(build_measure(c), 1);
    if (!report.symmetric)
      throw ConfigError("measure.atoms", "measure is not symmetric at atom " + report.offending_atom.value_or("?"));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("measure", e.what());
  }
  try {
    c.budget.validate(c.group);
  } catch (const std::exception& e) {
    throw ConfigError("budget", e.what());
  }
  if (c.coverage_radius > c.budget.radius)
    throw ConfigError("budget.coverage_radius", "must not exceed budget.radius (" + std::to_string(c.budget.radius) + ")");
  if (c.tail > c.steps && c.steps > 0)
    throw ConfigError("walk.tail", "must not exceed walk.steps (" + std::to_string(c.steps) + ")");
  if (c.seeds.empty()) throw ConfigError("run.seeds", "needs at least one seed");
  for (auto n : c.checkpoints)
    if (n == 0 || n > c.steps || n < c.tail)
      throw ConfigError("run.checkpoints", "each checkpoint must lie in [walk.tail, walk.steps], got " + std::to_string(n));
  if (c.out.empty()) throw ConfigError("run.out", "must not be empty");
  if (c.free.lengths.empty()) throw ConfigError("free.lengths", "needs at least one length");
  for (auto s : c.free.lengths)
    if (s == 0) throw ConfigError("free.lengths", "lengths must be positive");
  if (c.identities.k_range < 0) throw ConfigError("identities.k_range", "must be nonnegative");
  if (c.identities.nm_max < 1) throw ConfigError("identities.nm_max", "must be positive");
  if (c.identities.z_max < 1) throw ConfigError("identities.z_max", "must be positive");
  if (c.identities.m_max < 1) throw ConfigError("identities.m_max", "must be positive");
}

StepMeasure build_measure(const ScenarioConfig& c) {
  switch (c.measure.type) {
  case MeasureType::Standard: return uniform_standard_measure(c.group);
  case MeasureType::HeavyTail:
    if (!(c.group == GroupDescriptor::z_power(2)))
      throw ConfigError("measure.type", "heavy-tail is defined on ZPower(2), got " + c.group.to_string());
    if (!(c.measure.alpha > 1)) throw ConfigError("measure.alpha", "must exceed 1");
    if (c.measure.cutoff < 1) throw ConfigError("measure.cutoff", "must be positive");
    if (c.measure.minor_weight <= 0 || c.measure.minor_weight >= 1)
      throw ConfigError("measure.minor_weight", "must lie strictly between 0 and 1");
    return heavy_tail_measure_z2(c.measure.alpha, c.measure.cutoff, c.measure.minor_weight);
  case MeasureType::Atoms: {
    if (c.measure.atoms.empty()) throw ConfigError("measure.atoms", "needs at least one atom");
    std::vector<Atom> atoms;
    for (const auto& [text, w] : c.measure.atoms) atoms.push_back({parse_element(c.group, text), w});
    try {
      return StepMeasure(c.group, std::move(atoms));
    } catch (const std::exception& e) {
      throw ConfigError("measure.atoms", e.what());
    }
  }
  }
  throw ConfigError("measure.type", "unhandled");
}

std::string canonical_text(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "[group]\nkind = " << c.group.to_string() << "\n\n";
  os << "[measure]\ntype = " << to_string(c.measure.type) << '\n';
  os << "alpha = " << format_double(c.measure.alpha) << '\n';
  os << "cutoff = " << c.measure.cutoff << '\n';
  os << "minor_weight = " << to_string(c.measure.minor_weight) << '\n';
  os << "atoms = ";
  for (std::size_t i = 0; i < c.measure.atoms.size(); ++i)
    os << (i ? " | " : "") << c.measure.atoms[i].first << " @ " << to_string(c.measure.atoms[i].second);
  os << "\n\n";
  os << "[walk]\nsteps = " << c.steps << "\ntail = " << c.tail << "\n\n";
  os << "[budget]\nradius = " << c.budget.radius << "\nmax_elements = " << c.budget.max_elements
     << "\nmax_products = " << c.budget.max_products << "\ncoverage_radius = " << c.coverage_radius
     << "\nrequire_exhausted = " << (c.require_exhausted ? "true" : "false") << "\n\n";
  os << "[run]\nseeds = " << join(c.seeds) << "\ncheckpoints = " << join(c.checkpoints) << "\nout = " << c.out
     << "\n\n";
  os << "[free]\nj0 = " << c.free.j0 << "\nlengths = " << join(c.free.lengths) << "\ntrials = " << c.free.trials
     << "\npool_size = " << c.free.pool_size << "\npool_length = " << c.free.pool_length
     << "\nreflected_steps = " << c.free.reflected_steps << "\nsettle_margin = " << c.free.settle_margin
     << "\ngrowth_radius = " << c.free.growth_radius << "\n\n";
  os << "[identities]\nk_range = " << c.identities.k_range << "\nnm_max = " << c.identities.nm_max
     << "\nz_max = " << c.identities.z_max << "\nm_max = " << c.identities.m_max << '\n';
  return os.str();
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string config_hash(const ScenarioConfig& c) {
  ScenarioConfig copy = c;
  copy.out = "-";
  return fnv1a_hex(canonical_text(copy));
}

} // namespace algrec
