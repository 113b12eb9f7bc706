#include "vc/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "vc/error.hpp"
#include "vc/nf2.hpp"
#include "vc/parallel.hpp"
#include "vc/reduce.hpp"
#include "vc/sampling.hpp"
#include "vc/words.hpp"

namespace vc::cli {

namespace {

struct Config {
  std::uint64_t cap = kDefaultEvaluationCap;
  std::optional<unsigned> threads;
  std::uint64_t seed = 1;
  std::string format = "auto";
  bool force = false;
  bool unsafe = false;
  std::size_t order_cap = kDefaultOrderCap;

  unsigned workers() const { return threads ? *threads : default_workers(); }
  CountOptions count_options() const { return {cap, force, workers()}; }
  bool json(bool json_by_default) const { return format == "json" || (format == "auto" && json_by_default); }
};

struct GroupArgs {
  std::string name;
  std::string file;
};

void add_group_options(CLI::App* cmd, GroupArgs& args) {
  auto* name = cmd->add_option("--group", args.name, "catalog group name, e.g. Q8, C4xC2, heisenberg(3)");
  auto* file = cmd->add_option("--group-file", args.file, "group file with a Cayley table");
  name->excludes(file);
}

GroupTable load_group(const GroupArgs& args, const Config& cfg) {
  if (args.name.empty() && args.file.empty()) throw InputError("one of --group or --group-file is required");
  GroupTable::Options opts{cfg.unsafe, cfg.order_cap};
  if (!args.file.empty()) return load_group_file(args.file, opts);
  GroupTable g = group_from_name(args.name, cfg.order_cap);
  // Named groups pass the same gate as files.
  if (!cfg.unsafe) g.require_theorem_ready();
  return g;
}

Word read_word(const std::string& text, std::optional<int> nvars) {
  return nvars ? parse_word(text, *nvars) : parse_word(text);
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ----------------------------------------------------------------- catalog

int do_catalog(const Config& cfg, std::ostream& out) {
  const auto builders = catalog_builders();
  const auto names = standard_catalog_names();
  if (cfg.json(false)) {
    Json b = Json::array();
    for (const auto& x : builders)
      b.push_back({{"builder", x.name}, {"parameters", x.parameters}, {"description", x.description}});
    Json s = Json::array();
    for (const auto& n : names) {
      GroupTable g = group_from_name(n, cfg.order_cap);
      s.push_back({{"name", g.name()}, {"order", g.order()}, {"prime", *g.prime()},
                   {"abelian", g.is_abelian()}, {"center", g.center().size()},
                   {"derived", g.derived().size()}, {"classes", g.conjugacy_class_count()}});
    }
    print(out, {{"builders", b}, {"standard", s}});
    return kExitOk;
  }
  out << "builders:\n";
  for (const auto& x : builders) out << "  " << x.name << x.parameters << "  " << x.description << '\n';
  out << "standard groups (name order |Z| |G'| classes):\n";
  for (const auto& n : names) {
    GroupTable g = group_from_name(n, cfg.order_cap);
    out << "  " << g.name() << ' ' << g.order() << ' ' << g.center().size() << ' ' << g.derived().size() << ' '
        << g.conjugacy_class_count() << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- count

int do_count(const Config& cfg, const GroupArgs& ga, const std::string& word_text, std::optional<int> nvars,
             const std::string& restrict_spec, std::ostream& out) {
  GroupTable g = load_group(ga, cfg);
  Word w = read_word(word_text, nvars);
  Restriction r = restrict_spec.empty() ? Restriction::full(g, w.nvars())
                                        : parse_restriction(restrict_spec, g, w.nvars());
  CountResult res = count_solutions(g, w, r, cfg.count_options());
  const bool full = restrict_spec.empty() || r.search_space() == power_bound(g, w.nvars() + 1);
  // The bound is only a theorem for full counts on class-2 p-groups.
  const bool asserted = full && g.is_class2() && g.is_p_group();
  if (cfg.json(true)) {
    Json j = {{"word", format_word(w)}, {"group", g.name()}, {"n", w.nvars()}, {"count", res.count},
              {"bound", res.bound}, {"bound_ok", res.bound_ok}, {"space", res.search_space}};
    if (!restrict_spec.empty()) j["restrict"] = restrict_spec;
    print(out, j);
  } else {
    out << "N(" << g.name() << ", " << format_word(w) << ") = " << res.count << " over " << res.search_space
        << " tuples; |G|^(n-1) = " << res.bound << (res.bound_ok ? " (holds)" : " (VIOLATED)") << '\n';
  }
  return asserted && !res.bound_ok ? kExitViolation : kExitOk;
}

// ------------------------------------------------------------------ fibers

int do_fibers(const Config& cfg, const GroupArgs& ga, const std::string& word_text, std::optional<int> nvars,
              std::ostream& out) {
  GroupTable g = load_group(ga, cfg);
  Word w = read_word(word_text, nvars);
  auto fibers = fiber_histogram(g, w, cfg.count_options());
  if (cfg.json(true)) {
    Json f = Json::array();
    for (Element x = 0; x < g.order(); ++x) f.push_back({{"element", x}, {"label", g.label(x)}, {"size", fibers[x]}});
    print(out, {{"word", format_word(w)}, {"group", g.name()}, {"n", w.nvars()}, {"fibers", f}});
  } else {
    for (Element x = 0; x < g.order(); ++x) out << g.label(x) << ' ' << fibers[x] << '\n';
  }
  return kExitOk;
}

// ----------------------------------------------------------------- collect

int do_collect(const Config& cfg, const std::string& word_text, std::optional<int> nvars,
               std::optional<std::int64_t> modulus, std::ostream& out) {
  Word w = read_word(word_text, nvars);
  NormalForm2 nf = collect(w);
  if (modulus) nf = reduce_exponents_mod(nf, *modulus);
  if (cfg.json(false)) {
    Json comm = Json::array();
    for (int i = 1; i <= nf.nvars(); ++i)
      for (int j = i + 1; j <= nf.nvars(); ++j) comm.push_back({{"i", i}, {"j", j}, {"k", nf.comm(i, j)}});
    Json j = {{"word", format_word(w)}, {"n", nf.nvars()}, {"normal_form", format_normal_form(nf)},
              {"k", nf.gen_exponents()}, {"kij", comm}};
    if (modulus) j["modulus"] = *modulus;
    print(out, j);
  } else {
    out << format_normal_form(nf) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------- certificate

int do_certificate(const Config& cfg, const GroupArgs& ga, const std::string& word_text, std::optional<int> nvars,
                   const std::string& mode_text, std::ostream& out, std::ostream& err) {
  const Mode mode = parse_mode(mode_text);
  GroupTable g = load_group(ga, cfg);
  g.require_theorem_ready();
  Word w = read_word(word_text, nvars);
  Theorem8Result red = theorem8_reduce(w, *g.prime(), static_cast<std::int64_t>(g.order()));
  Theorem7Result res = theorem7_count(g, red.w_doubleprime, mode, cfg.workers());
  ReplayResult rep = replay(g, res.certificate);

  Certificate cert = std::move(res.certificate);
  cert.steps.insert(cert.steps.begin(), red.steps.begin(), red.steps.end());
  cert.word = format_word(w);
  Json j = to_json(cert);
  j["replay"] = rep.ok;
  if (!rep.ok) j["replay_error"] = rep.message;
  if (cfg.json(true)) {
    print(out, j);
  } else {
    out << to_string(mode) << " value " << cert.value << ", bound " << cert.bound
        << (cert.holds ? " (holds)" : " (VIOLATED)") << ", replay " << (rep.ok ? "ok" : rep.message) << '\n';
  }
  if (!rep.ok || !cert.holds) {
    err << "violation: group " << g.name() << ", word " << cert.word << ", mode " << to_string(mode) << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int do_verify(const Config& cfg, const std::vector<std::string>& groups, const std::string& group_file,
              std::size_t samples, int max_nvars, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.samples = samples;
  opts.seed = cfg.seed;
  opts.max_nvars = max_nvars;
  opts.count = cfg.count_options();
  if (max_nvars < 1) throw InputError("--nvars must be at least 1");

  std::vector<GroupTable> tables;
  if (!group_file.empty()) tables.push_back(load_group({"", group_file}, cfg));
  for (const auto& name : groups) tables.push_back(load_group({name, ""}, cfg));
  if (tables.empty())
    for (const auto& name : standard_catalog_names()) {
      GroupTable g = group_from_name(name, cfg.order_cap);
      if (g.order() <= 27) tables.push_back(std::move(g));
    }

  bool all = true;
  Json results = Json::array();
  for (const auto& g : tables) {
    bool holds = true;
    results.push_back(verify_group(g, opts, holds));
    all = all && holds;
  }
  Json j = {{"seed", cfg.seed}, {"samples", samples}, {"max_nvars", max_nvars}, {"groups", results}, {"holds", all}};
  if (cfg.json(true)) {
    print(out, j);
  } else {
    for (const auto& r : results)
      out << r["group"].get<std::string>() << ": " << r["checked"].get<std::size_t>() << " words, "
          << r["violations"].size() << " violations\n";
  }
  if (!all) {
    err << "bound chain violated; rerun with --format json for reproduction data\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

std::uint64_t corpus_seed(std::uint64_t seed, const std::string& group_name) {
  // FNV-1a over the name, then mixed with the seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : group_name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Json verify_group(const GroupTable& g, const VerifyOptions& options, bool& holds) {
  g.require_theorem_ready();
  Rng rng(corpus_seed(options.seed, g.name()));
  const auto modulus = static_cast<std::int64_t>(g.order());
  Json violations = Json::array();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const int n = static_cast<int>(rng.range(1, options.max_nvars));
    const Word w = random_normal_form(rng, n, modulus).to_word();
    VerifyReport rep = verify_amit(g, w, options.count);
    ++checked;
    if (!rep.holds) {
      Json v = to_json(rep);
      v["sample"] = i;
      violations.push_back(std::move(v));
    }
  }
  holds = violations.empty();
  return {{"group", g.name()}, {"order", g.order()}, {"checked", checked}, {"violations", violations},
          {"holds", holds}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts solutions of w = 1 in finite class-2 nilpotent groups.", "vc"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::optional<unsigned> threads;
  app.add_option("--cap", cfg.cap, "evaluation cap on |S| for brute force")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "worker count (overrides VC_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled corpora");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"auto", "text", "json"}));
  app.add_flag("--force", cfg.force, "ignore the evaluation cap");
  app.add_flag("--unsafe", cfg.unsafe, "accept groups that are not class-2 p-groups");
  app.add_option("--order-cap", cfg.order_cap, "largest accepted group order")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "list group builders and the standard groups");

  GroupArgs ga;
  std::string word;
  std::optional<int> nvars;
  std::string restrict_spec;
  auto* count = app.add_subcommand("count", "brute-force N(G, w)");
  add_group_options(count, ga);
  count->add_option("--word", word, "word, e.g. \"[x1,x2]^2 x3\"")->required();
  count->add_option("--nvars", nvars, "number of variables (default: largest index in the word)");
  count->add_option("--restrict", restrict_spec, "COORD:full|derived|center, comma separated");

  auto* fibers = app.add_subcommand("fibers", "sizes of the fibers of the verbal map");
  add_group_options(fibers, ga);
  fibers->add_option("--word", word)->required();
  fibers->add_option("--nvars", nvars);

  std::optional<std::int64_t> modulus;
  auto* collect_cmd = app.add_subcommand("collect", "class-2 normal form of a word");
  collect_cmd->add_option("--word", word)->required();
  collect_cmd->add_option("--nvars", nvars);
  collect_cmd->add_option("--modulus", modulus, "reduce exponents into [0, M)")->check(CLI::PositiveNumber);

  std::string mode = "exact";
  auto* certificate = app.add_subcommand("certificate", "reduction and recursion certificate");
  add_group_options(certificate, ga);
  certificate->add_option("--word", word)->required();
  certificate->add_option("--nvars", nvars);
  certificate->add_option("--mode", mode)->check(CLI::IsMember({"exact", "bound"}));

  std::vector<std::string> verify_groups;
  std::string verify_file;
  std::size_t samples = 500;
  int max_nvars = 3;
  auto* verify = app.add_subcommand("verify", "check the bound chain on sampled words");
  verify->add_option("--group", verify_groups, "group name; repeatable (default: standard groups of order <= 27)");
  verify->add_option("--group-file", verify_file);
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--nvars", max_nvars, "largest number of variables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.threads = threads;

  try {
    if (*catalog) return do_catalog(cfg, out);
    if (*count) return do_count(cfg, ga, word, nvars, restrict_spec, out);
    if (*fibers) return do_fibers(cfg, ga, word, nvars, out);
    if (*collect_cmd) return do_collect(cfg, word, nvars, modulus, out);
    if (*certificate) return do_certificate(cfg, ga, word, nvars, mode, out, err);
    if (*verify) return do_verify(cfg, verify_groups, verify_file, samples, max_nvars, out, err);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"vc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace vc::cli
