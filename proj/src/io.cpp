#include "fusionkit/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <system_error>

#include <unistd.h>

#include "fusionkit/orbit_algebra.hpp"

namespace fusionkit {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Integers between `open` and `close`, comma separated; an empty list is allowed.
std::vector<std::int64_t> bracketed(const std::string& raw, char open, char close, const char* grammar) {
  const std::string text = trim(raw);
  auto fail = [&](const std::string& why) {
    throw ParseError("cannot parse '" + raw + "': " + why + "; expected " + grammar);
  };
  if (text.size() < 2 || text.front() != open || text.back() != close) fail("wrong brackets");
  const std::string body = trim(text.substr(1, text.size() - 2));
  std::vector<std::int64_t> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = body.find(',', pos);
    const std::string token = trim(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    std::int64_t v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc() || ptr != last) fail("bad entry '" + token + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class F>
auto rethrow_as_parse(const std::string& raw, const char* grammar, F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("cannot parse '" + raw + "': " + e.what() + "; expected " + grammar);
  }
}

}  // namespace

Partition parse_partition(const std::string& text) {
  static constexpr const char* grammar = "a partition like [3,2,1] or []";
  auto parts = bracketed(text, '[', ']', grammar);
  return rethrow_as_parse(text, grammar, [&] { return Partition(std::move(parts)); });
}

Weight parse_weight(const std::string& text) {
  static constexpr const char* grammar = "a weight like {1,0,2}";
  auto coeffs = bracketed(text, '{', '}', grammar);
  return rethrow_as_parse(text, grammar, [&] { return Weight(std::move(coeffs)); });
}

OrbitRep parse_orbit(const std::string& text, int N) {
  static constexpr const char* grammar = "an orbit tuple like (2,1,0) with entries in 0..N-1";
  const auto values = bracketed(text, '(', ')', grammar);
  return rethrow_as_parse(text, grammar, [&] {
    std::vector<int> entries;
    for (auto v : values) {
      if (v < 0 || v >= N) throw std::invalid_argument("entry " + std::to_string(v) + " outside 0.." + std::to_string(N - 1));
      entries.push_back(static_cast<int>(v));
    }
    if (entries.empty()) throw std::invalid_argument("empty tuple");
    return standard_form(Tuple(N, std::move(entries)));
  });
}

std::vector<std::int64_t> parse_counts(const std::string& raw) {
  static constexpr const char* grammar = "counts like 2,1 or [2,1]";
  std::string text = trim(raw);
  if (text.empty() || (text.front() != '[' && text.front() != '(')) text = "[" + text + "]";
  else if (text.front() == '(') text = "[" + text.substr(1, text.size() - 2) + "]";
  auto out = bracketed(text, '[', ']', grammar);
  for (auto v : out)
    if (v < 0) throw ParseError("cannot parse '" + raw + "': negative count; expected " + grammar);
  return out;
}

json table_to_json(const FusionTable& t) {
  json basis = json::array();
  for (const auto& p : t.basis) basis.push_back(std::vector<std::int64_t>(p.parts().begin(), p.parts().end()));
  const std::size_t n = t.dim();
  json constants = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      json row = json::array();
      for (std::size_t c = 0; c < n; ++c)
        if (const auto v = t.constants.at(a, b, c); v != 0) row.push_back({c, v});
      constants.push_back(std::move(row));
    }
  return {{"schema", kTableSchema}, {"N", t.ctx.N}, {"k", t.ctx.k}, {"basis", std::move(basis)},
          {"constants", std::move(constants)}};
}

FusionTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != kTableSchema)
    throw std::runtime_error(std::string("table document is not ") + kTableSchema);
  try {
    const FusionContext ctx(j.at("N").get<int>(), j.at("k").get<int>());
    FusionTable t{ctx, basis(ctx), {}};
    const auto& jb = j.at("basis");
    if (jb.size() != t.dim()) throw std::runtime_error("basis has the wrong size");
    for (std::size_t i = 0; i < t.dim(); ++i)
      if (Partition(jb.at(i).get<std::vector<std::int64_t>>()) != t.basis[i])
        throw std::runtime_error("basis entry " + std::to_string(i) + " is out of order");
    const std::size_t n = t.dim();
    const auto& jc = j.at("constants");
    if (jc.size() != n * n) throw std::runtime_error("constants have the wrong size");
    t.constants = StructureConstants(n);
    for (std::size_t pair = 0; pair < n * n; ++pair)
      for (const auto& entry : jc.at(pair)) {
        const auto c = entry.at(0).get<std::size_t>();
        const auto v = entry.at(1).get<std::int64_t>();
        if (c >= n || v <= 0) throw std::runtime_error("bad constant entry");
        t.constants.at(pair / n, pair % n, c) = v;
      }
    return t;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed table document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed table document: ") + e.what());
  }
}

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("FUSIONKIT_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "fusionkit";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "fusionkit";
  return fs::temp_directory_path() / "fusionkit";
}

fs::path cache_file(const fs::path& dir, const FusionContext& ctx) {
  return dir / ("table_N" + std::to_string(ctx.N) + "_k" + std::to_string(ctx.k) + ".json");
}

std::optional<FusionTable> cache_lookup(const fs::path& dir, const FusionContext& ctx, std::ostream& warn) {
  const fs::path path = cache_file(dir, ctx);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  try {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file");
    FusionTable t = table_from_json(json::parse(in));
    if (t.ctx != ctx) throw std::runtime_error("table is for a different (N,k)");
    return t;
  } catch (const std::exception& e) {
    warn << "warning: ignoring cache file " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void write_json_atomic(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << j.dump() << "\n";
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

fs::path cache_store(const fs::path& dir, const FusionTable& t) {
  const fs::path path = cache_file(dir, t.ctx);
  write_json_atomic(path, table_to_json(t));
  return path;
}

}  // namespace fusionkit
