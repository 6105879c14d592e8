#include "fusionkit/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusionkit/affine_weyl.hpp"
#include "fusionkit/combinatorics.hpp"
#include "fusionkit/duality.hpp"
#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/io.hpp"
#include "fusionkit/orbit_algebra.hpp"

namespace fusionkit::cli {

namespace {

using nlohmann::json;

enum class Style { partition, weight, orbit };

struct Term {
  std::string label;
  Partition key;
  std::int64_t mult;
};

// Graded-lex on `key`, then by label text for keys that tie.
std::vector<Term> sorted(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.key != b.key) return GradedLex{}(a.key, b.key);
    return a.label < b.label;
  });
  return terms;
}

std::string render_text(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(t.mult) + "*" + t.label;
  }
  return out;
}

json render_json(const std::vector<Term>& terms) {
  json arr = json::array();
  for (const auto& t : terms) arr.push_back({{"label", t.label}, {"mult", t.mult}});
  return arr;
}

std::vector<Term> partition_terms(const Expansion& e, Style style, const FusionContext& ctx) {
  std::vector<Term> out;
  for (const auto& [p, c] : e) {
    std::string label = style == Style::weight  ? partition_to_weight(p, ctx.N).to_string()
                        : style == Style::orbit ? partition_to_orbit(p, ctx).to_string()
                                                : p.to_string();
    out.push_back({std::move(label), p, c});
  }
  return sorted(std::move(out));
}

std::vector<Term> tensor_terms(const Expansion& e, Style style, int N) {
  std::vector<Term> out;
  for (const auto& [p, c] : e)
    out.push_back({style == Style::weight ? partition_to_weight(p, N).to_string() : p.to_string(), p, c});
  return sorted(std::move(out));
}

Style style_of(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t");
  if (pos != std::string::npos && text[pos] == '{') return Style::weight;
  if (pos != std::string::npos && text[pos] == '(') return Style::orbit;
  return Style::partition;
}

// Accepts a partition (at most N rows), a weight, or an orbit tuple.
Partition parse_label(const std::string& text, int N, std::optional<FusionContext> ctx) {
  switch (style_of(text)) {
    case Style::weight: {
      const Weight w = parse_weight(text);
      if (w.rank() != N) throw ParseError("weight '" + text + "' needs " + std::to_string(N - 1) + " coefficients");
      return weight_to_partition(w);
    }
    case Style::orbit: {
      const OrbitRep o = parse_orbit(text, N);
      if (ctx && o.k() != ctx->k) throw ParseError("orbit '" + text + "' needs " + std::to_string(ctx->k) + " entries");
      return orbit_to_partition(o);
    }
    case Style::partition:
      break;
  }
  const Partition p = parse_partition(text);
  if (p.length() > static_cast<std::size_t>(N))
    throw ParseError("partition '" + text + "' has more than N=" + std::to_string(N) + " rows");
  return reduce_full_columns(p, N);
}

Partition require_in_box(const Partition& p, const FusionContext& ctx, const std::string& text) {
  if (!p.fits_in(ctx.N - 1, ctx.k))
    throw ParseError("'" + text + "' is not a level-" + std::to_string(ctx.k) + " label of A_" + std::to_string(ctx.N - 1));
  return p;
}

Expansion weights_to_partitions(const WeightExpansion& e) {
  Expansion out;
  for (const auto& [w, c] : e) out.add(weight_to_partition(w), c);
  return out;
}

Expansion orbits_to_partitions(const OrbitExpansion& e) {
  Expansion out;
  for (const auto& [o, c] : e) out.add(orbit_to_partition(o), c);
  return out;
}

struct Options {
  std::string format = "text";
  std::optional<std::string> cache_dir;
  int N = 0;
  int k = 0;
  std::string lhs, rhs, fuse_method, tensor_method;
  std::string a, b;
  bool raw = false, fixed = false;
  std::string outer, inner, content;
  std::string lambda;
  std::string out_path;
  bool verify_axioms = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int fuse() {
    const FusionContext ctx(o_.N, o_.k);
    const Partition p = require_in_box(parse_label(o_.lhs, ctx.N, ctx), ctx, o_.lhs);
    const Partition q = require_in_box(parse_label(o_.rhs, ctx.N, ctx), ctx, o_.rhs);
    const Style style = style_of(o_.lhs);

    std::map<std::string, std::function<Expansion()>> methods{
        {"jacobi-trudi", [&] { return multiply(p, q, ctx); }},
        {"orbit", [&] { return orbits_to_partitions(fixed_product(partition_to_orbit(p, ctx), partition_to_orbit(q, ctx))); }},
        {"kac-walton",
         [&] {
           return weights_to_partitions(kac_walton_fusion(partition_to_weight(p, ctx.N), partition_to_weight(q, ctx.N), ctx));
         }},
    };
    std::vector<std::string> chosen;
    if (o_.fuse_method == "all") chosen = {"jacobi-trudi", "orbit", "kac-walton"};
    else chosen = {o_.fuse_method};
    return compare(chosen, methods, [&](const Expansion& e) { return partition_terms(e, style, ctx); },
                   {{"N", ctx.N}, {"k", ctx.k}, {"lhs", o_.lhs}, {"rhs", o_.rhs}});
  }

  int tensor() {
    if (o_.N < 2) throw ParseError("--N must be >= 2");
    const int N = o_.N;
    const Partition p = parse_label(o_.lhs, N, std::nullopt);
    const Partition q = parse_label(o_.rhs, N, std::nullopt);
    const Style style = style_of(o_.lhs) == Style::weight ? Style::weight : Style::partition;
    std::map<std::string, std::function<Expansion()>> methods{
        {"pieri", [&] { return tensor_multiply(p, q, N); }},
        {"racah-speiser",
         [&] { return weights_to_partitions(racah_speiser_tensor(partition_to_weight(p, N), partition_to_weight(q, N), N)); }},
    };
    std::vector<std::string> chosen;
    if (o_.tensor_method == "all") chosen = {"pieri", "racah-speiser"};
    else chosen = {o_.tensor_method};
    return compare(chosen, methods, [&](const Expansion& e) { return tensor_terms(e, style, N); },
                   {{"N", N}, {"lhs", o_.lhs}, {"rhs", o_.rhs}});
  }

  int orbit_product() {
    const FusionContext ctx(o_.N, o_.k);
    const OrbitRep a = parse_orbit(o_.a, ctx.N);
    const OrbitRep b = parse_orbit(o_.b, ctx.N);
    for (const auto* x : {&a, &b})
      if (x->k() != ctx.k) throw ParseError("orbit " + x->to_string() + " needs " + std::to_string(ctx.k) + " entries");
    const OrbitExpansion e = o_.fixed ? fixed_product(a, b) : raw_orbit_product(a, b);
    std::vector<Term> terms;
    for (const auto& [orbit, c] : e) {
      const auto entries = orbit.entries();
      terms.push_back({orbit.to_string(), Partition(std::vector<std::int64_t>(entries.begin(), entries.end())), c});
    }
    terms = sorted(std::move(terms));
    emit_expansion(terms, {{"N", ctx.N}, {"k", ctx.k}, {"a", o_.a}, {"b", o_.b}, {"product", o_.fixed ? "fixed" : "raw"}});
    return kExitOk;
  }

  int kostka() {
    const FusionContext ctx(o_.N, o_.k);
    const Partition outer = parse_partition(o_.outer);
    const Partition inner = parse_partition(o_.inner);
    if (outer.length() > static_cast<std::size_t>(ctx.N))
      throw ParseError("outer shape '" + o_.outer + "' has more than N rows");
    const Content content(parse_counts(o_.content));
    const std::int64_t value = count_cylindric_tableaux(SkewShape(outer, inner), content, ctx);
    if (json_out()) {
      out_ << json{{"N", ctx.N}, {"k", ctx.k}, {"outer", outer.to_string()}, {"inner", inner.to_string()},
                   {"content", std::vector<std::int64_t>(content.counts().begin(), content.counts().end())},
                   {"kostka", value}}
                  .dump()
           << "\n";
    } else {
      out_ << value << "\n";
    }
    return kExitOk;
  }

  int weights() {
    if (o_.N < 2) throw ParseError("--N must be >= 2");
    const Partition p = parse_label(o_.lambda, o_.N, std::nullopt);
    if (p.length() >= static_cast<std::size_t>(o_.N)) throw ParseError("'" + o_.lambda + "' is not a weight of A_N-1");
    const WeightSpaces spaces = weight_multiplicities(partition_to_weight(p, o_.N), o_.N);
    std::vector<Term> terms;
    std::int64_t dim = 0;
    for (const auto& [w, c] : spaces) {
      terms.push_back({w.to_string(), Partition{}, c});
      dim += c;
    }
    if (json_out()) {
      out_ << json{{"schema", kExpansionSchema}, {"N", o_.N}, {"lambda", o_.lambda}, {"dimension", dim},
                   {"terms", render_json(terms)}}
                  .dump()
           << "\n";
    } else {
      out_ << render_text(terms) << "\n";
    }
    return kExitOk;
  }

  int table() {
    const FusionContext ctx(o_.N, o_.k);
    const auto dir = resolve_cache_dir(o_.cache_dir);
    std::optional<FusionTable> t = cache_lookup(dir, ctx, err_);
    bool cached = t.has_value();
    if (!t) {
      t = full_table(ctx);
      try {
        cache_store(dir, *t);
      } catch (const std::exception& e) {
        err_ << "warning: could not write cache in " << dir.string() << ": " << e.what() << "\n";
      }
    }
    if (!o_.out_path.empty()) write_json_atomic(o_.out_path, table_to_json(*t));

    std::optional<AxiomReport> report;
    if (o_.verify_axioms) report = verify_fusion_axioms(t->constants);

    if (json_out()) {
      json j = table_to_json(*t);
      if (report) {
        json checks = json::array();
        for (const auto& c : report->checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
        j["axioms"] = std::move(checks);
      }
      out_ << j.dump() << "\n";
    } else {
      out_ << "N=" << ctx.N << " k=" << ctx.k << " dim=" << t->dim() << (cached ? " (cached)" : "") << "\n";
      if (report)
        for (const auto& c : report->checks)
          out_ << c.name << ": " << (c.passed ? "pass" : "FAIL " + c.witness) << "\n";
    }
    return report && !report->all_passed() ? kExitMismatch : kExitOk;
  }

  int duality() {
    const DualityReport r = verify_rank_level_duality(o_.N, o_.k);
    if (json_out()) {
      out_ << json{{"schema", kDualitySchema}, {"N", r.N},           {"k", r.k},
                   {"dim", r.dim},             {"dual_dim", r.dual_dim}, {"classes", r.classes},
                   {"dual_classes", r.dual_classes}, {"isomorphic", r.isomorphic},
                   {"witness", r.isomorphic ? json(nullptr) : json(r.witness)}}
                  .dump()
           << "\n";
    } else {
      out_ << "F(A_" << r.N - 1 << "," << r.k << "): dim " << r.dim << ", " << r.classes << " classes\n"
           << "F(A_" << r.k - 1 << "," << r.N << "): dim " << r.dual_dim << ", " << r.dual_classes << " classes\n"
           << (r.isomorphic ? "quotients isomorphic via conjugation" : "NOT isomorphic: " + r.witness) << "\n";
    }
    return r.isomorphic ? kExitOk : kExitMismatch;
  }

 private:
  bool json_out() const { return o_.format == "json"; }

  void emit_expansion(const std::vector<Term>& terms, json meta) {
    if (json_out()) {
      meta["schema"] = kExpansionSchema;
      meta["terms"] = render_json(terms);
      out_ << meta.dump() << "\n";
    } else {
      out_ << render_text(terms) << "\n";
    }
  }

  int compare(const std::vector<std::string>& chosen, const std::map<std::string, std::function<Expansion()>>& methods,
              const std::function<std::vector<Term>(const Expansion&)>& terms_of, json meta) {
    std::vector<std::pair<std::string, Expansion>> results;
    for (const auto& name : chosen) results.emplace_back(name, methods.at(name)());
    const bool agree = std::all_of(results.begin(), results.end(),
                                   [&](const auto& r) { return r.second == results.front().second; });
    meta["method"] = chosen.size() == 1 ? chosen.front() : "all";
    if (chosen.size() == 1) {
      emit_expansion(terms_of(results.front().second), std::move(meta));
      return kExitOk;
    }
    if (json_out()) {
      json per = json::object();
      for (const auto& [name, e] : results) per[name] = render_json(terms_of(e));
      meta["methods"] = std::move(per);
      meta["agree"] = agree;
      meta["terms"] = agree ? render_json(terms_of(results.front().second)) : json::array();
      meta["schema"] = kExpansionSchema;
      out_ << meta.dump() << "\n";
    } else {
      for (const auto& [name, e] : results) out_ << name << ": " << render_text(terms_of(e)) << "\n";
      out_ << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? kExitOk : kExitMismatch;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fusion coefficients and tensor products for type A", "fusionkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", o.cache_dir, "Table cache directory");

  auto add_rank = [&](CLI::App* sub) { sub->add_option("--N", o.N, "Rank parameter: algebra A_{N-1}")->required(); };
  auto add_level = [&](CLI::App* sub) { sub->add_option("--k", o.k, "Level")->required(); };

  auto* fuse = app.add_subcommand("fuse", "Fusion product of two level-k labels");
  add_rank(fuse);
  add_level(fuse);
  fuse->add_option("--lhs", o.lhs, "Partition [..], weight {..} or orbit (..)")->required();
  fuse->add_option("--rhs", o.rhs, "Partition [..], weight {..} or orbit (..)")->required();
  fuse->add_option("--method", o.fuse_method, "Algorithm")
      ->default_val("jacobi-trudi")
      ->check(CLI::IsMember({"jacobi-trudi", "orbit", "kac-walton", "all"}));

  auto* tensor = app.add_subcommand("tensor", "Tensor product decomposition for sl_N");
  add_rank(tensor);
  tensor->add_option("--lhs", o.lhs, "Partition [..] or weight {..}")->required();
  tensor->add_option("--rhs", o.rhs, "Partition [..] or weight {..}")->required();
  tensor->add_option("--method", o.tensor_method, "Algorithm")
      ->default_val("pieri")
      ->check(CLI::IsMember({"pieri", "racah-speiser", "all"}));

  auto* orbit = app.add_subcommand("orbit-product", "Product of S_k-orbits of Z_N^k");
  add_rank(orbit);
  add_level(orbit);
  orbit->add_option("--a", o.a, "Orbit tuple (..)")->required();
  orbit->add_option("--b", o.b, "Orbit tuple (..)")->required();
  auto* raw_flag = orbit->add_flag("--raw", o.raw, "Raw (non-associative) product; the default");
  orbit->add_flag("--fixed", o.fixed, "Associative fixed product")->excludes(raw_flag);

  auto* kostka = app.add_subcommand("kostka", "Fusion skew Kostka number");
  add_rank(kostka);
  add_level(kostka);
  kostka->add_option("--outer", o.outer, "Outer partition")->required();
  kostka->add_option("--inner", o.inner, "Inner partition")->default_val("[]");
  kostka->add_option("--content", o.content, "Content counts, e.g. 2,1")->required();

  auto* weights = app.add_subcommand("weights", "Weight multiplicities of an irreducible sl_N module");
  add_rank(weights);
  weights->add_option("--lambda", o.lambda, "Highest weight {..} or partition [..]")->required();

  auto* table = app.add_subcommand("table", "Build or load the full fusion table");
  add_rank(table);
  add_level(table);
  table->add_option("--out", o.out_path, "Also write the table JSON here");
  table->add_flag("--verify-axioms", o.verify_axioms, "Check the fusion-algebra axioms");

  auto* duality = app.add_subcommand("duality", "Rank-level duality check between (N,k) and (k,N)");
  add_rank(duality);
  add_level(duality);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(o, out, err);
  try {
    if (*fuse) return runner.fuse();
    if (*tensor) return runner.tensor();
    if (*orbit) return runner.orbit_product();
    if (*kostka) return runner.kostka();
    if (*weights) return runner.weights();
    if (*table) return runner.table();
    if (*duality) return runner.duality();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace fusionkit::cli
