// fpg: command-line front end for the finitely presented group toolkit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fpg/abelian.hpp"
#include "fpg/cayley.hpp"
#include "fpg/identify.hpp"
#include "fpg/low_index.hpp"
#include "fpg/reidemeister_schreier.hpp"
#include "fpg/tietze.hpp"
#include "fpg/todd_coxeter.hpp"
#include "fpg/verify.hpp"
#include "fpg/word_table.hpp"

using namespace fpg;

namespace {

enum Exit { kOk = 0, kOperation = 1, kUsage = 2, kVerification = 3 };

// Input problems (unreadable or malformed files) map to the usage exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load_presentation(const std::string& path) {
  try {
    return parse_presentation(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

// Word arguments name a word file (unnamed entries are the words; --defs
// files are loaded first) or are an inline comma-separated list.
class WordSource {
 public:
  WordSource(const Presentation& p, const std::vector<std::string>& defs) : table_(p) {
    for (const auto& d : defs) load(d);
  }

  std::vector<Word> operator()(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
      std::vector<Word> out;
      for (auto i : load(arg))
        if (table_.entries()[i].name.empty()) out.push_back(table_.expand_entry(i));
      return out;
    }
    try {
      return parse_word_list(arg, table_.ambient());
    } catch (const ParseError& e) {
      throw InputError("words '" + arg + "': " + e.what());
    }
  }

 private:
  std::vector<std::size_t> load(const std::string& path) {
    const std::string text = slurp(path);
    try {
      return table_.load(text, path);
    } catch (const ParseError& e) {
      throw InputError(path + ":" + e.what());
    } catch (const WordTableError& e) {
      throw InputError(e.what());
    }
  }

  WordTable table_;
};

EnumerationLimits limits_from(std::size_t max_cosets, const std::string& strategy) {
  EnumerationLimits lim;
  lim.max_cosets = max_cosets;
  lim.strategy = strategy == "felsch" ? Strategy::felsch : Strategy::hlt;
  return lim;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

std::string cycles_of(const CosetTable& t, const Presentation& p) {
  const auto perms = coset_action(t);
  std::string out;
  for (std::size_t g = 0; g < perms.size(); ++g)
    out += (g ? "  " : "") + p.generator_names()[g] + "=" + perms[g].cycles();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fpg: finitely presented group computations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", toolkit_version());

  std::string file, subgroup, strategy = "hlt", export_path, json_path, within, contains;
  std::vector<std::string> defs;
  std::size_t max_cosets = 1'000'000, max_index = 0, exact = 0;
  std::uint64_t budget = 0;
  bool normal = false, extended = false, no_timing = false;
  unsigned threads = default_thread_count();

  auto* parse = app.add_subcommand("parse", "Print the normalized presentation");
  parse->add_option("FILE", file, "presentation file")->required();

  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants of the group or a subgroup");
  abelianize->add_option("FILE", file)->required();
  abelianize->add_option("--subgroup", subgroup, "word file or comma list");
  abelianize->add_option("--defs", defs, "word files with named definitions");
  abelianize->add_option("--max", max_cosets, "coset limit");

  auto* cosets = app.add_subcommand("cosets", "Enumerate the cosets of a subgroup");
  cosets->add_option("FILE", file)->required();
  cosets->add_option("--subgroup", subgroup, "word file or comma list")->required();
  cosets->add_option("--defs", defs);
  cosets->add_option("--strategy", strategy)->check(CLI::IsMember({"hlt", "felsch"}));
  cosets->add_option("--max", max_cosets, "coset limit");
  cosets->add_option("--table", export_path, "write the coset table as text");
  cosets->add_option("--json", json_path, "write the coset table as JSON");

  auto* low = app.add_subcommand("low-index", "Conjugacy classes of subgroups of small index");
  low->add_option("FILE", file)->required();
  low->add_option("--max", max_index, "largest index")->required()->check(CLI::Range(1, 1000));
  low->add_option("--exact", exact, "only this index");
  low->add_flag("--normal", normal, "normal subgroups only");
  low->add_option("--budget", budget, "node budget");
  low->add_option("--within", within, "search a subgroup of finite index instead");
  low->add_option("--contains", contains, "count classes containing these words");
  low->add_option("--defs", defs);
  low->add_option("--json", json_path, "write the class list as JSON");

  auto* normalizer = app.add_subcommand("normalizer", "Normalizer of a subgroup and its quotient");
  normalizer->add_option("FILE", file)->required();
  normalizer->add_option("--subgroup", subgroup)->required();
  normalizer->add_option("--defs", defs);
  normalizer->add_option("--max", max_cosets);

  auto* verify = app.add_subcommand("verify", "Run a verification manifest");
  verify->add_option("MANIFEST", file)->required();
  verify->add_option("--json", json_path, "write the report");
  verify->add_flag("--extended", extended, "also run extended checks");
  verify->add_option("--threads", threads, "worker threads (default FPG_THREADS or 1)")->check(CLI::Range(1, 256));
  verify->add_flag("--no-timing", no_timing, "omit timing fields from the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) {
      std::cout << format_presentation(load_presentation(file));
      return kOk;
    }
    if (*verify) {
      Manifest m;
      try {
        m = load_manifest(file);
      } catch (const ManifestError& e) {
        throw InputError(e.what());
      }
      RunOptions opts;
      opts.include_extended = extended;
      opts.threads = threads;
      Report report;
      try {
        report = run_manifest(m, opts);
      } catch (const ParseError& e) {
        throw InputError(m.presentation_name + ": " + e.what());
      } catch (const WordTableError& e) {
        throw InputError(e.what());
      }
      for (const auto& c : report.checks) {
        std::cout << to_string(c.status) << "  " << c.id;
        if (c.status == CheckStatus::fail) {
          std::cout << "  computed " << c.computed.dump() << ", expected " << c.expected.dump();
          if (!c.message.empty()) std::cout << " (" << c.message << ")";
        }
        std::cout << '\n';
      }
      std::cout << "overall " << (report.pass() ? "pass" : "fail") << '\n';
      if (!json_path.empty()) write_file(json_path, report.to_json(!no_timing).dump(2) + "\n");
      return report.pass() ? kOk : kVerification;
    }

    const Presentation p = load_presentation(file);
    WordSource words(p, defs);

    if (*abelianize) {
      if (subgroup.empty()) {
        std::cout << to_string(abelian_invariants(p)) << '\n';
      } else {
        const auto t = todd_coxeter(p, words(subgroup), limits_from(max_cosets, "hlt"));
        std::cout << to_string(abelian_invariants(subgroup_presentation(p, t))) << '\n';
      }
      return kOk;
    }
    if (*cosets) {
      const auto t = todd_coxeter(p, words(subgroup), limits_from(max_cosets, strategy));
      std::cout << t.index() << '\n';
      if (!export_path.empty()) write_file(export_path, format_table(t));
      if (!json_path.empty()) {
        nlohmann::json j{{"generators", p.generator_names()}, {"index", t.index()}, {"rows", nlohmann::json::array()}};
        for (Coset c = 0; c < t.index(); ++c) {
          const auto r = t.row(c);
          j["rows"].push_back(std::vector<Coset>(r.begin(), r.end()));
        }
        write_file(json_path, j.dump(2) + "\n");
      }
      return kOk;
    }
    if (*normalizer) {
      const auto t = todd_coxeter(p, words(subgroup), limits_from(max_cosets, "hlt"));
      const auto n = normalizer_index(t);
      std::cout << "index " << t.index() << '\n';
      std::cout << "fixed cosets " << fixed_cosets(t).size() << '\n';
      std::cout << "|N:H| " << n.norm_over_sub << "  |G:N| " << n.group_over_norm << '\n';
      const CayleyTable q = quotient_on_fixed(p, t);
      try {
        const IsoClass k = identify(q);
        std::cout << "N/H " << k.name << "  element orders " << format_element_orders(k.fingerprint) << '\n';
      } catch (const NotInCatalog&) {
        std::cout << "N/H order " << q.order() << " (not in catalog)\n";
      }
      return kOk;
    }
    if (*low) {
      SubgroupSearchOptions opts;
      opts.max_index = max_index;
      if (exact) opts.exact_index = exact;
      opts.normal_only = normal;
      if (budget) opts.node_budget = budget;
      Presentation q = p;
      std::vector<Word> wanted = contains.empty() ? std::vector<Word>{} : words(contains);
      if (!within.empty()) {
        const auto t = todd_coxeter(p, words(within), limits_from(max_cosets, "hlt"));
        const ReidemeisterSchreier rs(p, t);
        const TietzeResult tz = eliminate_generators(rs.presentation());
        for (auto& w : wanted) w = map_word(tz, rs.rewrite(w));
        q = tz.presentation;
      }
      const auto res = low_index_subgroups(q, opts);
      nlohmann::json j{{"complete", res.complete}, {"nodes", res.nodes}, {"classes", nlohmann::json::array()}};
      for (std::size_t k = 0; k < res.classes.size(); ++k) {
        const auto& t = res.classes[k];
        const bool has = !contains.empty() && !classes_containing(q, std::span(&t, 1), wanted).empty();
        std::cout << k + 1 << ": index " << t.index() << (is_normal(t) ? " normal" : "") << (has ? " containing" : "")
                  << "  " << cycles_of(t, q) << '\n';
        j["classes"].push_back({{"index", t.index()}, {"normal", is_normal(t)}, {"table", format_table(t)}});
        if (!contains.empty()) j["classes"].back()["containing"] = has;
      }
      std::cout << res.classes.size() << " classes" << (res.complete ? "" : " (incomplete: budget exhausted)") << '\n';
      if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
      return res.complete ? kOk : kOperation;
    }
  } catch (const InputError& e) {
    std::cerr << "fpg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "fpg: " << e.what() << '\n';
    return kOperation;
  }
  return kUsage;
}
