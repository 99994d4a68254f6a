#include "fpg/verify.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "fpg/abelian.hpp"
#include "fpg/cayley.hpp"
#include "fpg/identify.hpp"
#include "fpg/low_index.hpp"
#include "fpg/reidemeister_schreier.hpp"
#include "fpg/schreier_sims.hpp"
#include "fpg/surface.hpp"
#include "fpg/tietze.hpp"
#include "fpg/todd_coxeter.hpp"
#include "fpg/word_table.hpp"

#ifndef FPG_VERSION
#define FPG_VERSION "0.0.0"
#endif

namespace fpg {

using nlohmann::json;

const char* toolkit_version() { return FPG_VERSION; }

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("FPG_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1 && n <= 256) return static_cast<unsigned>(n);
  }
  return 1;
}

namespace {

// Operation table: name -> JSON type of the expected value.
const std::map<std::string, json::value_t>& operations() {
  static const std::map<std::string, json::value_t> ops{
      {"index", json::value_t::number_unsigned},
      {"is_normal", json::value_t::boolean},
      {"contained_in", json::value_t::boolean},
      {"action_order", json::value_t::number_unsigned},
      {"identify_quotient", json::value_t::string},
      {"element_orders", json::value_t::string},
      {"abelian_invariants", json::value_t::string},
      {"homology_statement", json::value_t::object},
      {"fixed_cosets", json::value_t::number_unsigned},
      {"normalizer_index", json::value_t::array},
      {"quotient_derived", json::value_t::object},
      {"embedded_quotient", json::value_t::object},
      {"low_index", json::value_t::object},
      {"etale_cover", json::value_t::array},
      {"beauville_bound", json::value_t::string},
      {"canonical_degree", json::value_t::number_unsigned},
  };
  return ops;
}

bool type_matches(const json& value, json::value_t want) {
  if (want == json::value_t::number_unsigned) return value.is_number_integer() && value.get<long long>() >= 0;
  return value.type() == want;
}

std::string require_string(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) throw ManifestError(where + ": '" + key + "' must be a string");
  return j[key].get<std::string>();
}

}  // namespace

std::vector<std::string> manifest_operations() {
  std::vector<std::string> out;
  for (const auto& [name, type] : operations()) out.push_back(name);
  return out;
}

Manifest parse_manifest(const json& doc, const std::function<std::string(const std::string&)>& read) {
  if (!doc.is_object()) throw ManifestError("manifest: top level must be an object");
  if (!doc.contains("schema_version") || doc["schema_version"] != kManifestSchemaVersion)
    throw ManifestError("manifest: unsupported schema_version");
  Manifest m;
  m.presentation_name = require_string(doc, "presentation", "manifest");
  m.presentation_text = read(m.presentation_name);

  std::set<std::string> word_names;
  if (doc.contains("word_files")) {
    if (!doc["word_files"].is_array()) throw ManifestError("manifest: 'word_files' must be an array");
    for (const auto& f : doc["word_files"]) {
      if (!f.is_string()) throw ManifestError("manifest: word file names must be strings");
      const auto name = f.get<std::string>();
      if (!word_names.insert(name).second) throw ManifestError("manifest: word file '" + name + "' listed twice");
      m.word_files.emplace_back(name, read(name));
    }
  }
  if (doc.contains("subgroups")) {
    if (!doc["subgroups"].is_object()) throw ManifestError("manifest: 'subgroups' must be an object");
    for (const auto& [name, file] : doc["subgroups"].items()) {
      if (!file.is_string() || !word_names.count(file.get<std::string>()))
        throw ManifestError("manifest: subgroup '" + name + "' must name a listed word file");
      m.subgroups[name] = file.get<std::string>();
    }
  }
  if (doc.contains("max_cosets")) {
    if (!doc["max_cosets"].is_number_unsigned() || doc["max_cosets"].get<std::size_t>() == 0)
      throw ManifestError("manifest: 'max_cosets' must be a positive integer");
    m.max_cosets = doc["max_cosets"].get<std::size_t>();
  }

  std::set<std::string> ids;
  if (doc.contains("checks")) {
    if (!doc["checks"].is_array()) throw ManifestError("manifest: 'checks' must be an array");
    for (const auto& c : doc["checks"]) {
      if (!c.is_object()) throw ManifestError("manifest: each check must be an object");
      ManifestCheck check;
      check.id = require_string(c, "id", "check");
      const std::string where = "check '" + check.id + "'";
      if (!ids.insert(check.id).second) throw ManifestError(where + ": duplicate id");
      check.op = require_string(c, "op", where);
      const auto op = operations().find(check.op);
      if (op == operations().end()) throw ManifestError(where + ": unknown op '" + check.op + "'");
      if (c.contains("args")) {
        if (!c["args"].is_object()) throw ManifestError(where + ": 'args' must be an object");
        check.args = c["args"];
      }
      for (const char* key : {"subgroup", "within", "in", "via", "contains"})
        if (check.args.contains(key)) {
          if (!check.args[key].is_string() || !m.subgroups.count(check.args[key].get<std::string>()))
            throw ManifestError(where + ": '" + key + "' must name a declared subgroup");
        }
      if (!c.contains("expected")) throw ManifestError(where + ": missing 'expected'");
      check.expected = c["expected"];
      if (!type_matches(check.expected, op->second))
        throw ManifestError(where + ": expected value has the wrong type for '" + check.op + "'");
      if (c.contains("anchor")) check.anchor = require_string(c, "anchor", where);
      if (c.contains("extended")) {
        if (!c["extended"].is_boolean()) throw ManifestError(where + ": 'extended' must be a boolean");
        check.extended = c["extended"].get<bool>();
      }
      m.checks.push_back(std::move(check));
    }
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ManifestError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  json doc;
  try {
    doc = json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw ManifestError(path.string() + ": " + e.what());
  }
  const auto dir = path.parent_path();
  return parse_manifest(doc, [&](const std::string& name) { return slurp(dir / name); });
}

bool Report::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::fail; });
}

json Report::to_json(bool include_timing) const {
  json out;
  out["schema_version"] = kReportSchemaVersion;
  out["toolkit_version"] = toolkit_version();
  out["inputs"] = json::object();
  for (const auto& [name, digest] : digests) out["inputs"][name] = "sha256:" + digest;
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"skipped", 0}};
  out["checks"] = json::array();
  for (const auto& c : checks) {
    ++counts[to_string(c.status)];
    json j{{"id", c.id},           {"op", c.op},       {"anchor", c.anchor}, {"status", to_string(c.status)},
           {"computed", c.computed}, {"expected", c.expected}};
    if (!c.message.empty()) j["message"] = c.message;
    if (include_timing) j["elapsed_ms"] = c.elapsed_ms;
    out["checks"].push_back(std::move(j));
  }
  out["counts"] = counts;
  out["overall"] = pass() ? "pass" : "fail";
  return out;
}

namespace {

// Shared, lazily built data for one manifest run.
class Context {
 public:
  explicit Context(const Manifest& m)
      : m_(m), g_(parse_presentation(m.presentation_text)), words_(g_), limits_{m.max_cosets} {
    std::map<std::string, std::vector<std::size_t>> loaded;
    for (const auto& [name, text] : m.word_files) loaded[name] = words_.load(text, name);
    for (const auto& [sub, file] : m.subgroups) {
      auto& gens = subgroup_words_[sub];
      for (auto i : loaded[file])
        if (words_.entries()[i].name.empty()) gens.push_back(words_.expand_entry(i));
    }
  }

  const Presentation& group() const { return g_; }
  const std::vector<Word>& words(const std::string& sub) const { return subgroup_words_.at(sub); }

  const CosetTable& table(const std::string& sub) {
    return cached(tables_, sub, [&] { return todd_coxeter(g_, words(sub), limits_); });
  }

  const ReidemeisterSchreier& rs(const std::string& sub) {
    const CosetTable& t = table(sub);
    return cached(rs_, sub, [&] { return ReidemeisterSchreier(g_, t); });
  }

  const TietzeResult& simplified(const std::string& sub) {
    const ReidemeisterSchreier& r = rs(sub);
    return cached(tietze_, sub, [&] { return eliminate_generators(r.presentation()); });
  }

  // Words of `sub` rewritten over the presentation of `within`.
  std::vector<Word> rewritten(const std::string& sub, const std::string& within) {
    const ReidemeisterSchreier& r = rs(within);
    std::vector<Word> out;
    for (const Word& w : words(sub)) out.push_back(r.rewrite(w));
    return out;
  }

  const CosetTable& table_within(const std::string& sub, const std::string& within) {
    const ReidemeisterSchreier& r = rs(within);
    auto gens = rewritten(sub, within);
    return cached(staged_, sub + "/" + within, [&] { return todd_coxeter(r.presentation(), gens, limits_); });
  }

 private:
  // Failures are cached too, so a diverging enumeration is attempted once.
  template <class T>
  struct Slot {
    std::unique_ptr<T> value;
    std::exception_ptr error;
  };

  template <class T, class F>
  const T& cached(std::map<std::string, Slot<T>>& cache, const std::string& key, F&& make) {
    std::lock_guard lock(mu_);
    auto [it, fresh] = cache.try_emplace(key);
    if (fresh) {
      try {
        it->second.value = std::make_unique<T>(make());
      } catch (...) {
        it->second.error = std::current_exception();
      }
    }
    if (it->second.error) std::rethrow_exception(it->second.error);
    return *it->second.value;
  }

  const Manifest& m_;
  Presentation g_;
  WordTable words_;
  EnumerationLimits limits_;
  std::map<std::string, std::vector<Word>> subgroup_words_;
  std::recursive_mutex mu_;
  std::map<std::string, Slot<CosetTable>> tables_;
  std::map<std::string, Slot<ReidemeisterSchreier>> rs_;
  std::map<std::string, Slot<TietzeResult>> tietze_;
  std::map<std::string, Slot<CosetTable>> staged_;
};

std::string arg_string(const json& args, const char* key) {
  if (!args.contains(key) || !args[key].is_string())
    throw std::invalid_argument(std::string("missing string argument '") + key + "'");
  return args[key].get<std::string>();
}

long arg_long(const json& args, const char* key) {
  if (!args.contains(key) || !args[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer argument '") + key + "'");
  return args[key].get<long>();
}

SurfaceInvariants arg_invariants(const json& args, const char* key) {
  if (!args.contains(key) || !args[key].is_array() || args[key].size() != 4)
    throw std::invalid_argument(std::string("argument '") + key + "' must be [chi, q, pg, K2]");
  const auto& a = args[key];
  return SurfaceInvariants(a[0].get<long>(), a[1].get<long>(), a[2].get<long>(), a[3].get<long>());
}

json invariants_json(const SurfaceInvariants& s) { return json::array({s.chi, s.q, s.pg, s.K2}); }

std::string squash(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

// Presentation and table of `subgroup`, either in the whole group or, when
// `within` is given, inside that subgroup's presentation.
struct Located {
  const Presentation* p;
  const CosetTable* t;
};

Located locate(Context& ctx, const json& args) {
  const std::string sub = arg_string(args, "subgroup");
  if (args.contains("within")) {
    const std::string within = args["within"].get<std::string>();
    return {&ctx.rs(within).presentation(), &ctx.table_within(sub, within)};
  }
  return {&ctx.group(), &ctx.table(sub)};
}

json run_op(Context& ctx, const ManifestCheck& c) {
  const json& a = c.args;
  const std::string& op = c.op;
  if (op == "index") return locate(ctx, a).t->index();
  if (op == "is_normal") return is_normal(*locate(ctx, a).t);
  if (op == "contained_in") {
    const CosetTable& big = ctx.table(arg_string(a, "in"));
    const auto& ws = ctx.words(arg_string(a, "subgroup"));
    return std::all_of(ws.begin(), ws.end(), [&](const Word& w) { return contains(big, w); });
  }
  if (op == "action_order") {
    const mpz_class n = group_order(coset_action(*locate(ctx, a).t));
    return json(n.get_ui());
  }
  if (op == "identify_quotient") {
    const Located l = locate(ctx, a);
    return identify(quotient_on_fixed(*l.p, *l.t)).name;
  }
  if (op == "element_orders") {
    const Located l = locate(ctx, a);
    return format_element_orders(fingerprint(quotient_on_fixed(*l.p, *l.t)));
  }
  if (op == "abelian_invariants") {
    if (!a.contains("subgroup")) return to_string(abelian_invariants(ctx.group()));
    const std::string sub = arg_string(a, "subgroup");
    if (a.contains("within")) {
      const std::string within = a["within"].get<std::string>();
      return to_string(
          abelian_invariants(subgroup_presentation(ctx.rs(within).presentation(), ctx.table_within(sub, within))));
    }
    return to_string(abelian_invariants(ctx.rs(sub).presentation()));
  }
  if (op == "homology_statement") {
    // H1 by the direct route and, if `via` is given, through that subgroup;
    // then which of the candidate statements it equals.
    const std::string sub = arg_string(a, "subgroup");
    const std::string direct = to_string(abelian_invariants(ctx.rs(sub).presentation()));
    json out{{"group", direct}};
    if (a.contains("via")) {
      const std::string via = a["via"].get<std::string>();
      const std::string staged = to_string(
          abelian_invariants(subgroup_presentation(ctx.rs(via).presentation(), ctx.table_within(sub, via))));
      out["staged_agrees"] = staged == direct;
    }
    if (!a.contains("statements") || !a["statements"].is_object())
      throw std::invalid_argument("'statements' must map labels to groups");
    std::vector<std::string> hits;
    for (const auto& [label, text] : a["statements"].items())
      if (squash(text.get<std::string>()) == squash(direct)) hits.push_back(label);
    out["matches"] = hits.size() == 1 ? json(hits.front()) : json(hits);
    return out;
  }
  if (op == "fixed_cosets") return fixed_cosets(*locate(ctx, a).t).size();
  if (op == "normalizer_index") {
    const auto n = normalizer_index(*locate(ctx, a).t);
    return json::array({n.norm_over_sub, n.group_over_norm});
  }
  if (op == "quotient_derived") {
    const Located l = locate(ctx, a);
    const CayleyTable q = quotient_on_fixed(*l.p, *l.t);
    return json{{"derived_order", derived_subgroup(q).size()}, {"abelianization_order", abelianization_order(q)}};
  }
  if (op == "embedded_quotient") {
    // Inside N(H)/H, the labels whose representatives lie in `via`.
    const std::string sub = arg_string(a, "subgroup");
    const CosetTable& t = ctx.table(sub);
    const CosetTable& big = ctx.table(arg_string(a, "via"));
    const CayleyTable q = quotient_on_fixed(ctx.group(), t);
    const auto fixed = fixed_cosets(t);
    const auto reps = representatives(t);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < fixed.size(); ++i)
      if (contains(big, reps[fixed[i]])) labels.push_back(static_cast<Label>(i));
    json out{{"order", labels.size()}};
    if (!is_subgroup(q, labels)) {
      out["subgroup"] = false;
      return out;
    }
    out["normal"] = is_normal_in(q, labels);
    out["equals_derived"] = labels == derived_subgroup(q);
    std::vector<std::vector<Label>> rows(labels.size(), std::vector<Label>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j)
        rows[i][j] = static_cast<Label>(
            std::find(labels.begin(), labels.end(), q(labels[i], labels[j])) - labels.begin());
    out["name"] = identify(CayleyTable(std::move(rows))).name;
    return out;
  }
  if (op == "low_index") {
    SubgroupSearchOptions opts;
    const long index = arg_long(a, "index");
    if (index < 1) throw std::invalid_argument("'index' must be positive");
    opts.max_index = static_cast<std::size_t>(index);
    opts.exact_index = opts.max_index;
    opts.normal_only = a.value("normal_only", false);
    if (a.contains("budget")) opts.node_budget = a["budget"].get<std::uint64_t>();
    const Presentation* p = &ctx.group();
    std::vector<Word> wanted;
    if (a.contains("within")) {
      const std::string within = a["within"].get<std::string>();
      const TietzeResult& tz = ctx.simplified(within);
      p = &tz.presentation;
      if (a.contains("contains"))
        for (const Word& w : ctx.rewritten(a["contains"].get<std::string>(), within)) wanted.push_back(map_word(tz, w));
    } else if (a.contains("contains")) {
      wanted = ctx.words(a["contains"].get<std::string>());
    }
    const auto res = low_index_subgroups(*p, opts);
    json out{{"classes", res.classes.size()}, {"complete", res.complete}};
    if (a.contains("contains")) out["containing"] = classes_containing(*p, res.classes, wanted).size();
    if (a.value("fast_path", false)) {
      if (!opts.normal_only) throw std::invalid_argument("fast_path needs normal_only");
      out["fast_path_agrees"] = normal_subgroups_abelian_quotient(*p, opts.max_index) == res.classes;
    }
    // Optional projection, for searches whose class count is not pinned down.
    if (a.contains("fields")) {
      json kept = json::object();
      for (const auto& f : a["fields"]) {
        const auto key = f.get<std::string>();
        if (!out.contains(key)) throw std::invalid_argument("low_index has no field '" + key + "'");
        kept[key] = out[key];
      }
      return kept;
    }
    return out;
  }
  if (op == "etale_cover") {
    const long degree = arg_long(a, "degree");
    const long q = arg_long(a, "cover_q");
    return invariants_json(etale_cover_invariants(arg_invariants(a, "base"), degree, q));
  }
  if (op == "beauville_bound") return beauville_bound(arg_long(a, "pg")).get_str();
  if (op == "canonical_degree")
    return canonical_degree_chain(arg_invariants(a, "invariants"), arg_long(a, "image_degree"));
  throw std::invalid_argument("unknown op " + op);
}

}  // namespace

Report run_manifest(const Manifest& m, const RunOptions& options) {
  Report report;
  report.digests[m.presentation_name] = sha256_hex(m.presentation_text);
  for (const auto& [name, text] : m.word_files) report.digests[name] = sha256_hex(text);

  Context ctx(m);
  std::vector<const ManifestCheck*> order;
  for (const auto& c : m.checks) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->id < y->id; });
  report.checks.resize(order.size());

  auto run_one = [&](std::size_t i) {
    const ManifestCheck& c = *order[i];
    CheckResult& r = report.checks[i];
    r.id = c.id;
    r.op = c.op;
    r.anchor = c.anchor;
    r.expected = c.expected;
    if (c.extended && !options.include_extended) {
      r.status = CheckStatus::skipped;
      r.message = "extended check; not run by default";
      return;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      r.computed = run_op(ctx, c);
      r.status = r.computed == c.expected ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.message = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(order.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < order.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < order.size();) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace fpg
