#include <doctest.h>

#include "algrec/closure.hpp"
#include "algrec/word_metric.hpp"

#include <random>
#include <set>

using namespace algrec;

namespace {

const GroupDescriptor kZ = GroupDescriptor::z_power(1);

GroupElement z(std::int64_t v) { return GroupElement::lattice(kZ, {v}); }

std::vector<GroupElement> zs(std::initializer_list<std::int64_t> vs) {
  std::vector<GroupElement> out;
  for (auto v : vs) out.push_back(z(v));
  return out;
}

ClosureBudget budget(std::size_t r) {
  ClosureBudget b;
  b.radius = r;
  return b;
}

std::set<std::string> texts(const std::vector<GroupElement>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(to_string(x));
  return out;
}

// All products of 1..max_len generators, kept if within the radius.
std::set<std::string> product_enumeration(const std::vector<GroupElement>& gens, std::size_t max_len, std::size_t r) {
  std::set<std::string> out;
  std::vector<GroupElement> layer = gens;
  std::set<std::string> seen_layer;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<GroupElement> next;
    std::set<std::string> next_seen;
    for (const auto& x : layer) {
      if (*word_length(x) <= r) out.insert(to_string(x));
      if (len == max_len) continue;
      for (const auto& s : gens) {
        GroupElement y = multiply(x, s);
        if (next_seen.insert(to_string(y)).second) next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }
  return out;
}

WalkTrace trace_of(const GroupDescriptor& g, std::vector<GroupElement> increments) {
  return trace_from_increments(g, 0, std::move(increments));
}

} // namespace

TEST_CASE("closure examples") {
  auto c = closure(zs({2, 3}), budget(10));
  CHECK(c.exhausted);
  CHECK(texts(c.elements) == texts(zs({2, 3, 4, 5, 6, 7, 8, 9, 10})));

  c = closure(zs({1, -1}), budget(3));
  CHECK(c.exhausted);
  CHECK(texts(c.elements) == texts(zs({-3, -2, -1, 0, 1, 2, 3})));

  const auto f2 = GroupDescriptor::free(2);
  c = closure({GroupElement::word(f2, {1})}, budget(4));
  CHECK(c.exhausted);
  CHECK(texts(c.elements) == std::set<std::string>{"x1", "x1 x1", "x1 x1 x1", "x1 x1 x1 x1"});
}

TEST_CASE("membership examples") {
  const auto c = closure(zs({2, 3}), budget(10));
  CHECK(contains(c, z(7)) == Membership::Present);
  CHECK(contains(c, z(1)) == Membership::AbsentWithinBudget);
  CHECK(contains(c, z(11)) == Membership::Unknown);
  CHECK(to_string(Membership::AbsentWithinBudget) == "AbsentWithinBudget");
  CHECK_THROWS_AS(contains(c, identity(GroupDescriptor::z_power(2))), DescriptorMismatch);

  ClosureBudget tight = budget(10);
  tight.max_elements = 3;
  const auto cut = closure(zs({2, 3}), tight);
  CHECK_FALSE(cut.exhausted);
  CHECK(cut.elements.size() == 3);
  CHECK(contains(cut, z(9)) == Membership::Unknown);
}

TEST_CASE("coverage examples") {
  CHECK(coverage_fraction(closure(zs({1, -1}), budget(5)), 3) == 1);
  CHECK(coverage_fraction(closure(zs({2, 3}), budget(10)), 2) == Rational(1, 5));
  const auto f2 = GroupDescriptor::free(2);
  CHECK(coverage_fraction(closure({GroupElement::word(f2, {1})}, budget(4)), 1) == Rational(1, 5));
  CHECK_THROWS_AS(coverage_fraction(closure(zs({1}), budget(4)), 5), std::invalid_argument);
}

TEST_CASE("identity appears only when derivable") {
  CHECK_FALSE(closure(zs({2, 3}), budget(6)).has(z(0)));
  const auto c6 = GroupDescriptor::cyclic(6);
  const auto c = closure({GroupElement::residue(c6, 1)}, budget(3));
  CHECK(c.has(identity(c6)));
  CHECK(c.elements.size() == 6);
}

TEST_CASE("budget validation") {
  CHECK_THROWS_AS(closure({}, budget(3)), std::invalid_argument);
  CHECK_THROWS_AS(closure(zs({1}), budget(0)), std::invalid_argument);
  CHECK_THROWS_AS(closure({GroupElement::heisenberg(1, 0, 0)}, budget(kMaxBfsRadius + 1)), std::invalid_argument);
  CHECK_NOTHROW(closure(zs({1}), budget(100)));
  CHECK_THROWS_AS(closure({z(1), identity(GroupDescriptor::z_power(2))}, budget(3)), DescriptorMismatch);
  ClosureBudget few = budget(10);
  few.max_products = 5;
  const auto c = closure(zs({1, -1}), few);
  CHECK_FALSE(c.exhausted);
  CHECK(c.products_performed == 5);
}

TEST_CASE("Z and Z/m closures match product enumeration") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 1 + rng() % 3;
    const std::size_t r = 4 + rng() % 9;
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(z(static_cast<std::int64_t>(rng() % 9) - 4));
    const auto c = closure(gens, budget(r));
    REQUIRE(c.exhausted);
    REQUIRE(texts(c.elements) == product_enumeration(gens, 12, r));
  }
  for (std::int64_t m = 1; m <= 12; ++m) {
    const auto g = GroupDescriptor::cyclic(m);
    for (int t = 0; t < 20; ++t) {
      std::vector<GroupElement> gens;
      for (std::size_t i = 0, k = 1 + rng() % 3; i < k; ++i)
        gens.push_back(GroupElement::residue(g, static_cast<std::int64_t>(rng() % m)));
      const auto c = closure(gens, budget(6));
      REQUIRE(texts(c.elements) == product_enumeration(gens, 12, 6));
    }
  }
}

TEST_CASE("monotonicity under extra generators") {
  std::mt19937_64 rng(21);
  for (const auto& g : {GroupDescriptor::z_power(2), GroupDescriptor::free(2), GroupDescriptor::heisenberg(),
                        GroupDescriptor::lamplighter_z()}) {
    const auto pool = ball(g, 2);
    for (int t = 0; t < 20; ++t) {
      std::vector<GroupElement> gens{pool[rng() % pool.size()], pool[rng() % pool.size()]};
      const auto small = closure(gens, budget(4));
      gens.push_back(pool[rng() % pool.size()]);
      const auto big = closure(gens, budget(4));
      REQUIRE(small.exhausted);
      REQUIRE(big.exhausted);
      for (const auto& x : small.elements) REQUIRE(big.has(x));
    }
  }
}

TEST_CASE("exhausted closures are closed within the radius") {
  std::mt19937_64 rng(4);
  for (const auto& g : {GroupDescriptor::z_power(2), GroupDescriptor::free(2), GroupDescriptor::heisenberg(),
                        GroupDescriptor::lamplighter_z(), GroupDescriptor::cyclic(10)}) {
    const auto pool = ball(g, 3);
    for (int t = 0; t < 10; ++t) {
      std::vector<GroupElement> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(pool[rng() % pool.size()]);
      const auto c = closure(gens, budget(4));
      REQUIRE(c.exhausted);
      for (const auto& x : c.elements) {
        REQUIRE(*word_length(x) <= 4);
        for (const auto& y : c.elements) {
          const auto xy = multiply(x, y);
          const auto len = word_length(xy, 8);
          if (len && *len <= 4) REQUIRE(c.has(xy));
        }
      }
    }
  }
}

TEST_CASE("closure is deterministic and sorted") {
  const auto m = uniform_standard_measure(GroupDescriptor::heisenberg());
  const auto t = generate_walk(m, 60, 3);
  const auto a = walk_closure(t, 10, 60, budget(4));
  const auto b = walk_closure(t, 10, 60, budget(4));
  CHECK(a.elements == b.elements);
  CHECK(a.products_performed == b.products_performed);
  CHECK(a.generator_range == std::pair<std::size_t, std::size_t>{10, 60});
  for (std::size_t i = 1; i < a.elements.size(); ++i) CHECK(to_string(a.elements[i - 1]) < to_string(a.elements[i]));
  CHECK_THROWS_AS(walk_closure(t, 0, 60, budget(4)), std::invalid_argument);
  CHECK_THROWS_AS(walk_closure(t, 5, 61, budget(4)), std::invalid_argument);
}

TEST_CASE("inverse-witness report examples") {
  const auto c6 = GroupDescriptor::cyclic(6);
  auto t = trace_of(c6, {GroupElement::residue(c6, 1), GroupElement::residue(c6, 4)}); // positions 1, 5
  auto r = inverse_witness_report(t, 1, budget(3));
  CHECK(r.entries.size() == 2);
  CHECK(r.present == 2);
  CHECK(r.present_fraction() == 1.0);

  t = trace_of(kZ, zs({1, 1, -1, -1, -1})); // positions 1, 2, 1, 0, -1
  r = inverse_witness_report(t, 1, budget(5));
  CHECK(r.closure_exhausted);
  CHECK(r.present == 5);
  for (const auto& e : r.entries) CHECK(e.inverse == Membership::Present);

  const auto f5 = GroupDescriptor::free(5);
  t = generate_walk(uniform_standard_measure(f5), 50, 1);
  r = inverse_witness_report(t, 1, budget(6));
  CHECK(r.entries.size() == 50);
  CHECK(r.present_fraction() >= 0.0);
  CHECK(r.present_fraction() < 1.0);
  CHECK_THROWS_AS(inverse_witness_report(WalkTrace{kZ, 0, {}, {}}, 1, budget(3)), std::invalid_argument);
}

TEST_CASE("dump and report formats") {
  const auto t = trace_of(kZ, zs({2, 1}));
  const auto c = walk_closure(t, 1, 2, budget(6));
  const auto dump = closure_dump(c, {"config_hash=abc"});
  CHECK(dump.rfind("# closure group=ZPower(1) generators=1..2 radius=6", 0) == 0);
  CHECK(dump.find("# config_hash=abc\n(2)\n(3)\n(4)\n(5)\n(6)\n") != std::string::npos);
  const auto csv = report_csv(inverse_witness_report(t, c));
  CHECK(csv.find("i,state,word_length\n1,AbsentWithinBudget,2\n2,AbsentWithinBudget,3\n") != std::string::npos);
}
