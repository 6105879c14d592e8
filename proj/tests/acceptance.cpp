// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fusionkit/affine_weyl.hpp"
#include "fusionkit/combinatorics.hpp"
#include "fusionkit/duality.hpp"
#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/orbit_algebra.hpp"
#include "oracles.hpp"

using namespace fusionkit;

namespace {

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

template <class K, class C>
std::string show(const LinearCombination<K, C>& e) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : e) {
    os << (first ? "" : " + ") << c << "*" << key.to_string();
    first = false;
  }
  return first ? "0" : os.str();
}

OrbitExpansion orbits(int N, std::initializer_list<std::pair<std::vector<int>, std::int64_t>> terms) {
  OrbitExpansion out;
  for (const auto& [entries, c] : terms) out.add(OrbitRep(N, entries), c);
  return out;
}

Expansion schur(std::initializer_list<std::pair<Partition, std::int64_t>> terms) {
  Expansion out;
  for (const auto& [p, c] : terms) out.add(p, c);
  return out;
}

WeightExpansion weights(std::initializer_list<std::pair<Weight, std::int64_t>> terms) {
  WeightExpansion out;
  for (const auto& [w, c] : terms) out.add(w, c);
  return out;
}

template <class T>
void expect_equal(Checker& c, const T& got, const T& want, const std::string& what) {
  c.expect(got == want, what + ": got " + show(got) + ", want " + show(want));
}

Expansion from_orbits(const OrbitExpansion& e) {
  Expansion out;
  for (const auto& [o, c] : e) out.add(orbit_to_partition(o), c);
  return out;
}

Expansion from_weights(const WeightExpansion& e) {
  Expansion out;
  for (const auto& [w, c] : e) out.add(weight_to_partition(w), c);
  return out;
}

const std::vector<std::pair<int, int>> kSweep{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {4, 3}};

void golden(Checker& c) {
  expect_equal(c, raw_orbit_product(OrbitRep(3, {2, 1, 0}), OrbitRep(3, {1, 1, 0})),
               orbits(3, {{{2, 2, 1}, 1}, {{1, 1, 0}, 1}, {{2, 0, 0}, 1}}), "[(2,1,0)]x[(1,1,0)]");
  expect_equal(c, raw_orbit_product(OrbitRep(3, {2, 2, 1}), OrbitRep(3, {1, 0, 0})),
               orbits(3, {{{2, 2, 2}, 1}, {{2, 1, 0}, 1}}), "[(2,2,1)]x[(1,0,0)]");
  expect_equal(c, raw_orbit_product(OrbitRep(4, {3, 2, 1}), OrbitRep(4, {1, 1, 0})),
               orbits(4, {{{3, 1, 0}, 1}, {{2, 2, 0}, 1}, {{3, 3, 2}, 1}}), "[(3,2,1)]x[(1,1,0)]");
  expect_equal(c, raw_orbit_product(OrbitRep(3, {2, 1, 0}), OrbitRep(3, {2, 1, 0})),
               orbits(3, {{{2, 2, 2}, 1}, {{1, 1, 1}, 1}, {{2, 1, 0}, 3}, {{0, 0, 0}, 1}}), "[(2,1,0)]x[(2,1,0)]");
  c.expect(orbit_elements(OrbitRep(3, {2, 1, 0})).size() == 6, "six elements of [(2,1,0)]");
  expect_equal(c, raw_orbit_product(OrbitRep(4, {3, 3, 2}), OrbitRep(4, {2, 1, 1})),
               orbits(4, {{{3, 1, 0}, 1}, {{0, 0, 0}, 1}}), "[(3,3,2)]x[(2,1,1)]");

  const FusionContext c43(4, 3), c44(4, 4), c33(3, 3);
  expect_equal(c, pieri_h(Partition{2, 2}, 1, c43), schur({{{2, 2, 1}, 1}, {{3, 2}, 1}}), "S(2,2) h1");
  expect_equal(c, pieri_h(Partition{2, 1, 1}, 1, c43), schur({{{1}, 1}, {{2, 2, 1}, 1}, {{3, 1, 1}, 1}}), "S(2,1,1) h1");
  expect_equal(c, multiply_by_h_sequence(Partition{3, 2, 1}, {2, 1}, c43),
               schur({{{2, 2, 1}, 3}, {{3, 3, 3}, 1}, {{3, 2}, 1}, {{3, 1, 1}, 1}, {{1}, 1}}), "S(3,2,1) h2 h1");

  const SkewShape skew(Partition{4, 2, 2, 1}, Partition{3, 2, 1});
  c.expect(count_cylindric_tableaux(skew, Content{2, 1}, c43) == 1, "K=1 at k=3");
  c.expect(count_cylindric_tableaux(skew, Content{2, 1}, c44) == 3, "K=3 at k=4");
  c.expect(count_cylindric_tableaux(SkewShape(Partition{3, 3, 2, 1}, Partition{3, 2, 1}), Content{2, 1}, c43) == 3,
           "K=3 for (3,3,2,1)/(3,2,1)");

  expect_equal(c, multiply(Partition{2, 1}, Partition{2, 1}, c33), schur({{{3}, 1}, {{3, 3}, 1}, {{2, 1}, 2}, {{}, 1}}),
               "S(2,1)^2 at (3,3)");
  expect_equal(c, multiply(Partition{2, 1}, Partition{2, 2}, c43),
               schur({{{3, 2, 2}, 1}, {{3, 3, 1}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 1}}), "S(2,1) S(2,2) at (4,3)");
  expect_equal(c, fixed_product(OrbitRep(3, {2, 1, 0}), OrbitRep(3, {2, 1, 0})),
               orbits(3, {{{2, 2, 2}, 1}, {{1, 1, 1}, 1}, {{2, 1, 0}, 2}, {{0, 0, 0}, 1}}), "fixed [(2,1,0)].[(2,1,0)]");

  std::int64_t tableaux = 0;
  const WeightSpaces adjoint = weight_multiplicities(Weight{1, 1}, 3);
  for (const auto& [w, m] : adjoint) tableaux += m;
  c.expect(tableaux == 8, "8 tableaux of shape (2,1)");
  c.expect(adjoint.coefficient(LatticeWeight{{0, 0}}) == 2, "zero weight multiplicity 2");

  expect_equal(c, racah_speiser_tensor(Weight{1, 1}, Weight{2, 0}, 3),
               weights({{Weight{3, 1}, 1}, {Weight{1, 2}, 1}, {Weight{2, 0}, 1}, {Weight{0, 1}, 1}}),
               "V(1,1) x V(2,0)");
  expect_equal(c, kac_walton_fusion(Weight{1, 1}, Weight{2, 0}, FusionContext(3, 2)), weights({{Weight{0, 1}, 1}}),
               "V(1,1) x_2 V(2,0)");

  InfiniteOrbitExpansion tc;
  for (const auto& e : std::vector<std::vector<int>>{{2, 2, 1}, {1, 1}, {2}, {2, 1, 1, 1}}) tc.add(InfiniteOrbitRep(3, e), 1);
  c.expect(tensor_orbit_product(InfiniteOrbitRep(3, {2, 1}), InfiniteOrbitRep(3, {1, 1})) == tc, "infinite-orbit product");

  const ScOrbit sc = sc_orbit(OrbitRep(4, {2, 2, 1}));
  c.expect(sc.members == std::vector<OrbitRep>{OrbitRep(4, {1, 1, 0}), OrbitRep(4, {2, 2, 1}), OrbitRep(4, {3, 0, 0}),
                                               OrbitRep(4, {3, 3, 2})},
           "SC-orbit of [(2,2,1)]");
}

void three_way(Checker& c) {
  for (const auto& [N, k] : kSweep) {
    const FusionContext ctx(N, k);
    for (const auto& p : basis(ctx))
      for (const auto& q : basis(ctx)) {
        const Expansion jt = multiply(p, q, ctx);
        const std::string what = "(" + std::to_string(N) + "," + std::to_string(k) + ") " + p.to_string() + "*" + q.to_string();
        expect_equal(c, from_weights(kac_walton_fusion(partition_to_weight(p, N), partition_to_weight(q, N), ctx)), jt,
                     what + " kac-walton");
        expect_equal(c, from_orbits(fixed_product(partition_to_orbit(p, ctx), partition_to_orbit(q, ctx))), jt,
                     what + " orbit");
      }
  }
}

void special_products(Checker& c) {
  for (int N = 2; N <= 5; ++N)
    for (int k = 1; k <= 4; ++k) {
      const FusionContext ctx(N, k);
      for (const auto& w : level_weights(ctx))
        for (int m = 0; m <= k; ++m) {
          const OrbitExpansion special = special_orbit_product(weight_to_orbit(w, ctx), m);
          bool unit = true;
          for (const auto& [o, coeff] : special) unit = unit && coeff == 1;
          c.expect(unit, "0/1 coefficients for " + w.to_string() + " m=" + std::to_string(m));
          expect_equal(c, from_orbits(special), pieri_h(weight_to_partition(w), m, ctx),
                       "special product " + w.to_string() + " m=" + std::to_string(m));
        }
    }
}

void gepner_witten(Checker& c) {
  for (int k = 1; k <= 5; ++k) {
    const FusionTable t = full_table(FusionContext(2, k));
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int x = 0; x <= k; ++x)
          c.expect(t.constants.at(t.index_of(Partition{a}), t.index_of(Partition{b}), t.index_of(Partition{x})) ==
                       gepner_witten_a1(a, b, x, k),
                   "k=" + std::to_string(k) + " (" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(x) + ")");
  }
}

void feingold_weiner(Checker& c) {
  for (int k = 1; k <= 3; ++k) {
    const RelationReport r = fw_a2_relation_check(FusionContext(3, k));
    c.expect(r.triples_checked > 0, "triples checked at k=" + std::to_string(k));
    for (const auto& v : r.violations)
      c.expect(false, v.lhs.to_string() + "*" + v.rhs.to_string() + "->" + v.target.to_string() + " raw " +
                          std::to_string(v.raw) + " fusion " + std::to_string(v.fusion));
  }
}

void non_associativity(Checker& c) {
  const OrbitRep a(3, {2, 1, 0}), b(3, {1, 1, 0}), x(3, {1, 0, 0});
  using Product = std::function<OrbitExpansion(const OrbitRep&, const OrbitRep&)>;
  auto left = [](const OrbitExpansion& e, const OrbitRep& y, const Product& f) {
    OrbitExpansion out;
    for (const auto& [o, m] : e) out.add_scaled(f(o, y), m);
    return out;
  };
  auto right = [](const OrbitRep& y, const OrbitExpansion& e, const Product& f) {
    OrbitExpansion out;
    for (const auto& [o, m] : e) out.add_scaled(f(y, o), m);
    return out;
  };
  const Product raw = [](const OrbitRep& p, const OrbitRep& q) { return raw_orbit_product(p, q); };
  const Product fixed = [](const OrbitRep& p, const OrbitRep& q) { return fixed_product(p, q); };
  const OrbitExpansion lhs = left(raw(a, b), x, raw);
  const OrbitExpansion rhs = right(a, raw(b, x), raw);
  expect_equal(c, lhs, orbits(3, {{{2, 2, 2}, 1}, {{1, 1, 1}, 1}, {{2, 1, 0}, 3}, {{0, 0, 0}, 1}}), "([a]x[b])x[c]");
  expect_equal(c, rhs, orbits(3, {{{2, 2, 2}, 1}, {{1, 1, 1}, 1}, {{2, 1, 0}, 4}, {{0, 0, 0}, 1}}), "[a]x([b]x[c])");
  OrbitExpansion diff = lhs;
  diff -= rhs;
  c.expect(diff == OrbitExpansion::single(a, -1), "raw triple products differ only at [(2,1,0)]");

  const auto all = all_orbits(FusionContext(3, 3));
  for (const auto& p : all)
    for (const auto& q : all)
      for (const auto& r : all)
        c.expect(left(fixed(p, q), r, fixed) == right(p, fixed(q, r), fixed),
                 "fixed associativity " + p.to_string() + q.to_string() + r.to_string());
}

void axioms(Checker& c) {
  for (const auto& [N, k] : kSweep) {
    const AxiomReport r = verify_fusion_axioms(full_table(FusionContext(N, k)).constants);
    for (const auto& check : r.checks)
      c.expect(check.passed, "(" + std::to_string(N) + "," + std::to_string(k) + ") " + check.name + ": " + check.witness);
    c.expect(r.checks.size() == 7, "all seven checks ran");
  }
}

void duality(Checker& c) {
  for (const auto& [N, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}}) {
    const DualityReport r = verify_rank_level_duality(N, k);
    c.expect(r.isomorphic, "(" + std::to_string(N) + "," + std::to_string(k) + ") " + r.witness);
  }
  c.expect(basis(FusionContext(2, 3)).size() == 4, "dim F(A_1,3) = 4");
  c.expect(basis(FusionContext(3, 2)).size() == 6, "dim F(A_2,2) = 6");
  c.expect(quotient_table(FusionContext(2, 3)).dim() == 2, "F'(A_1,3) has 2 classes");
  c.expect(quotient_table(FusionContext(3, 2)).dim() == 2, "F'(A_2,2) has 2 classes");
}

void stability(Checker& c) {
  const auto box = oracle::all_partitions_in_box(3, 3);
  for (int N = 3; N <= 4; ++N)
    for (const auto& p : box)
      for (const auto& q : box) {
        const Weight a = partition_to_weight(p, N), b = partition_to_weight(q, N);
        const int k = std::max<int>(1, static_cast<int>(p[0] + q[0]));
        expect_equal(c, kac_walton_fusion(a, b, FusionContext(N, k)), racah_speiser_tensor(a, b, N),
                     "N=" + std::to_string(N) + " " + p.to_string() + "*" + q.to_string());

        const auto ia = InfiniteOrbitRep::from_orbit(partition_to_orbit(weight_to_partition(a), FusionContext(N, 3)));
        const auto ib = InfiniteOrbitRep::from_orbit(partition_to_orbit(weight_to_partition(b), FusionContext(N, 3)));
        const int base = std::max<int>(1, static_cast<int>(ia.support() + ib.support()));
        const InfiniteOrbitExpansion reference = tensor_orbit_product(ia, ib, base);
        for (int extra = 1; extra <= 2; ++extra)
          c.expect(tensor_orbit_product(ia, ib, base + extra) == reference,
                   "embedding length for " + ia.to_string() + "x" + ib.to_string());
      }
}

void properties(Checker& c) {
  for (const auto& p : oracle::all_partitions_in_box(6, 6))
    c.expect(conjugate(conjugate(p)) == p, "conjugate involution " + p.to_string());
  for (int N = 2; N <= 5; ++N)
    for (int k = 1; k <= 5; ++k) {
      const FusionContext ctx(N, k);
      const auto ws = level_weights(ctx);
      c.expect(static_cast<std::int64_t>(ws.size()) == oracle::binomial(N - 1 + k, N - 1), "level weight count");
      c.expect(static_cast<std::int64_t>(basis(ctx).size()) == oracle::binomial(N - 1 + k, N - 1), "basis size");
      for (const auto& w : ws)
        c.expect(partition_to_weight(orbit_to_partition(weight_to_orbit(w, ctx)), N) == w, "round trip " + w.to_string());
    }
  for (int trial = 0; trial < 200; ++trial) {
    const FusionContext ctx(static_cast<int>(oracle::uniform(2, 4)), static_cast<int>(oracle::uniform(1, 4)));
    const auto b = basis(ctx);
    const Partition p = b[static_cast<std::size_t>(oracle::uniform(0, static_cast<std::int64_t>(b.size()) - 1))];
    std::vector<std::int64_t> eps(static_cast<std::size_t>(oracle::uniform(1, 3)));
    for (auto& e : eps) e = oracle::uniform(0, ctx.k);
    Expansion iterated = Expansion::single(p);
    for (auto e : eps) {
      Expansion next;
      for (const auto& [x, m] : iterated) next.add_scaled(pieri_h(x, static_cast<int>(e), ctx), m);
      iterated = std::move(next);
    }
    expect_equal(c, multiply_by_h_sequence(p, eps, ctx), iterated, "Kostka vs Pieri for " + p.to_string());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"golden examples", golden},
      {"three-way oracle equivalence", three_way},
      {"special orbit products match Pieri", special_products},
      {"Gepner-Witten closure", gepner_witten},
      {"Feingold-Weiner A_2 relation", feingold_weiner},
      {"non-associativity witness", non_associativity},
      {"fusion axioms", axioms},
      {"rank-level duality", duality},
      {"stability", stability},
      {"property suite", properties},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      error = e.what();
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << c.count() - c.failed() << "/" << c.count() << " checks, " << seconds << "s)\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
    all = all && c.passed();
  }
  return all ? 0 : 1;
}
