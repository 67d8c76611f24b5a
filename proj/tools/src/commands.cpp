#include "commands.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bsr/bs_roots.hpp"
#include "bsr/char_zero.hpp"
#include "bsr/errors.hpp"
#include "bsr/frobenius.hpp"
#include "bsr/ideal_io.hpp"
#include "bsr/monomial.hpp"
#include "bsr/nu.hpp"
#include "bsr/numeric.hpp"

namespace bsr::cli {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// flag parsing helpers

Int parse_int_flag(const std::string& text, const char* flag) {
  if (text.empty()) throw parse_error(std::string(flag) + ": empty value", 0);
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) throw parse_error(std::string(flag) + ": not an integer", 0);
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error(std::string(flag) + ": not an integer: " + text, i);
  return Int(text);
}

std::vector<Int> parse_primes_csv(const std::string& csv) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    std::erase(item, ' ');
    if (item.empty()) continue;
    out.push_back(parse_int_flag(item, "--primes"));
  }
  if (out.empty()) throw parse_error("--primes: no primes given", 0);
  return out;
}

// ---------------------------------------------------------------------------
// rendering helpers

std::string rat_str(const Rat& v) {
  Int num = numerator(v), den = denominator(v);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

json rats_to_json(const std::set<Rat>& values) {
  json arr = json::array();
  for (const Rat& v : values) arr.push_back(rat_to_json(v));
  return arr;
}

json rats_to_json(const std::vector<Rat>& values) {
  json arr = json::array();
  for (const Rat& v : values) arr.push_back(rat_to_json(v));
  return arr;
}

json ints_to_json(const std::set<Int>& values) {
  json arr = json::array();
  for (const Int& v : values) arr.push_back(int_to_json(v));
  return arr;
}

json digits_to_json(const PAdicBranch& branch) {
  json arr = json::array();
  for (const Int& d : branch.digits) arr.push_back(int_to_json(d));
  return arr;
}

const char* status_str(RootStatus s) {
  switch (s) {
    case RootStatus::certified: return "certified";
    case RootStatus::periodic_uncertified: return "periodic-uncertified";
    case RootStatus::unresolved: break;
  }
  return "unresolved";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// cache: append-only JSONL {"key", "payload", "sum"}; the checksum guards
// against torn writes, the last valid record for a key wins.

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<std::string> cache_lookup(const std::string& path, const std::string& key,
                                        std::ostream& err) {
  std::ifstream in(path);
  if (!in) return std::nullopt;  // not an error: first run creates the file
  std::optional<std::string> hit;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (rec.is_discarded() || !rec.is_object() || !rec.contains("key") ||
        !rec.contains("payload") || !rec.contains("sum") || !rec["key"].is_string() ||
        !rec["payload"].is_string() || !rec["sum"].is_string()) {
      err << "warning: cache record " << lineno << " is corrupt, skipping\n";
      continue;
    }
    if (rec["key"].get<std::string>() != key) continue;
    std::string payload = rec["payload"].get<std::string>();
    if (fnv1a_hex(payload) != rec["sum"].get<std::string>()) {
      err << "warning: cache record " << lineno << " failed its checksum, skipping\n";
      continue;
    }
    hit = std::move(payload);
  }
  return hit;
}

void cache_store(const std::string& path, const std::string& key,
                 const std::string& payload, std::ostream& err) {
  std::ofstream out(path, std::ios::app);
  json rec{{"key", key}, {"payload", payload}, {"sum", fnv1a_hex(payload)}};
  if (out) out << rec.dump() << "\n";
  if (!out) err << "warning: cache file '" << path << "' is not writable, result not cached\n";
}

// ---------------------------------------------------------------------------
// per-command execution: each returns the rendered output text

NuEngineOptions engine_options(const CommandConfig& cfg) {
  NuEngineOptions engine;
  engine.jobs = cfg.jobs;
  return engine;
}

std::string run_nu(const CommandConfig& cfg, const MonomialIdeal& a) {
  if (cfg.j_text.empty()) throw precondition_error("nu: --J is required");
  MonomialIdeal j = parse_ideal(cfg.j_text, a.dim());
  Int q = parse_int_flag(cfg.q_text, "--q");
  Int value = nu(NuQuery{a, j, q}, engine_options(cfg));
  if (cfg.format == "table") return value.str() + "\n";
  return dump(json{{"nu", int_to_json(value)}});
}

std::string run_nu_set(const CommandConfig& cfg, const MonomialIdeal& a) {
  PrimePower q(Int(cfg.p), cfg.e);
  std::set<Int> set;
  if (cfg.method == "chain") {
    set = nu_set_chain(a, q);
  } else {
    set = nu_set_grid(a, q, default_grid(a).scaled(cfg.grid_scale), engine_options(cfg));
    if (cfg.method == "both" && nu_set_chain(a, q) != set)
      throw std::logic_error("nu-set: grid and chain disagree");
  }
  if (cfg.format == "table") {
    std::ostringstream out;
    out << "level " << cfg.e << " (p=" << cfg.p << ", method=" << cfg.method << "):";
    for (const Int& n : set) out << " " << n;
    out << "\n";
    return out.str();
  }
  return dump(json{{"level", cfg.e},
                   {"method", cfg.method},
                   {"p", int_to_json(Int(cfg.p))},
                   {"set", ints_to_json(set)}});
}

std::string run_bs_roots(const CommandConfig& cfg, const MonomialIdeal& a) {
  BsOptions opts;
  opts.levels = cfg.levels;
  opts.certify = !cfg.no_certify;
  opts.certify_samples = cfg.samples;
  opts.grid_scale = cfg.grid_scale;
  opts.jobs = cfg.jobs;
  opts.engine = engine_options(cfg);
  RootReport report = bs_roots(a, Int(cfg.p), opts);

  if (cfg.format == "table") {
    std::ostringstream out;
    out << "p=" << report.p << " levels=" << report.levels << "\n";
    for (const ReportedRoot& r : report.roots) {
      out << "  " << rat_str(r.value) << "  " << status_str(r.status);
      if (r.certificate)
        out << "  (J=" << render_ideal(r.certificate->j) << ", d=" << r.certificate->d
            << ", slope=" << rat_str(r.certificate->slope)
            << ", samples=" << r.certificate->samples << ")";
      out << "\n";
    }
    if (!report.unresolved.empty())
      out << "  unresolved branches: " << report.unresolved.size() << "\n";
    return out.str();
  }

  json roots = json::array();
  for (const ReportedRoot& r : report.roots) {
    json entry{{"value", rat_to_json(r.value)}, {"status", status_str(r.status)}};
    if (r.certificate)
      entry["certificate"] = json{{"J", render_ideal(r.certificate->j)},
                                  {"d", r.certificate->d},
                                  {"slope", rat_to_json(r.certificate->slope)},
                                  {"samples", r.certificate->samples}};
    roots.push_back(std::move(entry));
  }
  json unresolved = json::array();
  for (const PAdicBranch& b : report.unresolved) unresolved.push_back(digits_to_json(b));
  json out{{"p", int_to_json(report.p)},
           {"level_reached", report.levels},
           {"roots", std::move(roots)},
           {"unresolved", std::move(unresolved)}};
  if (report.empty_level) out["empty_level"] = *report.empty_level;
  return dump(out);
}

json law_to_json(const AffineLaw& law) {
  return json{{"J", render_ideal(law.j)},
              {"m", int_to_json(law.m)},
              {"q_start", int_to_json(law.q_start)},
              {"slope", rat_to_json(law.slope)},
              {"samples", law.samples}};
}

Char0Options char0_options(const CommandConfig& cfg) {
  Char0Options opts;
  opts.m_max = cfg.m_max;
  opts.grid_scale = cfg.grid_scale;
  opts.check_grid_stability = cfg.check_grid;
  opts.jobs = cfg.jobs;
  opts.engine = engine_options(cfg);
  return opts;
}

std::string run_char0(const CommandConfig& cfg, const MonomialIdeal& a, std::ostream& err) {
  Char0Result result = char0_roots(a, char0_options(cfg));
  if (result.grid_limited && *result.grid_limited)
    err << "warning: enlarging the witness grid changed the recovered roots; "
           "rerun with a larger --grid-scale\n";

  if (cfg.format == "table") {
    std::ostringstream out;
    for (const Char0Root& r : result.roots)
      out << "  " << rat_str(r.value) << "  (J=" << render_ideal(r.law.j)
          << ", m=" << r.law.m << ", slope=" << rat_str(r.law.slope)
          << ", q_start=" << r.law.q_start << ", samples=" << r.law.samples << ")\n";
    if (result.grid_limited)
      out << "  grid-limited: " << (*result.grid_limited ? "yes" : "no") << "\n";
    return out.str();
  }

  json roots = json::array();
  for (const Char0Root& r : result.roots)
    roots.push_back(json{{"value", rat_to_json(r.value)}, {"witness", law_to_json(r.law)}});
  json out{{"roots", std::move(roots)}};
  if (result.grid_limited) out["grid_limited"] = *result.grid_limited;
  return dump(out);
}

std::string run_compare(const CommandConfig& cfg, const MonomialIdeal& a) {
  std::vector<Int> primes = parse_primes_csv(cfg.primes_csv);
  BsOptions bs_opts;
  bs_opts.levels = cfg.levels;
  bs_opts.certify_samples = cfg.samples;
  bs_opts.grid_scale = cfg.grid_scale;
  bs_opts.jobs = cfg.jobs;
  bs_opts.engine = engine_options(cfg);
  ComparisonReport report = compare_char_p(a, primes, char0_options(cfg), bs_opts);

  if (cfg.format == "table") {
    std::ostringstream out;
    out << "char0:";
    for (const Rat& v : report.char0.values()) out << " " << rat_str(v);
    out << "\n";
    for (const PrimeComparison& pc : report.per_prime) {
      out << "p=" << pc.p << (pc.matches ? "  matches" : "  differs") << "\n";
      out << "  char-p:";
      for (const Rat& v : pc.char_p_roots) out << " " << rat_str(v);
      out << "\n  char0 in Z_(p):";
      for (const Rat& v : pc.char0_in_zp) out << " " << rat_str(v);
      out << "\n";
      if (!pc.missing_in_char_p.empty()) {
        out << "  missing in char-p:";
        for (const Rat& v : pc.missing_in_char_p) out << " " << rat_str(v);
        out << "\n";
      }
      if (!pc.extra_in_char_p.empty()) {
        out << "  extra in char-p:";
        for (const Rat& v : pc.extra_in_char_p) out << " " << rat_str(v);
        out << "\n";
      }
    }
    return out.str();
  }

  json per_prime = json::array();
  for (const PrimeComparison& pc : report.per_prime)
    per_prime.push_back(json{{"p", int_to_json(pc.p)},
                             {"char_p", rats_to_json(pc.char_p_roots)},
                             {"char0_in_zp", rats_to_json(pc.char0_in_zp)},
                             {"missing_in_char_p", rats_to_json(pc.missing_in_char_p)},
                             {"extra_in_char_p", rats_to_json(pc.extra_in_char_p)},
                             {"matches", pc.matches}});
  return dump(json{{"char0", rats_to_json(report.char0.values())},
                   {"primes", std::move(per_prime)}});
}

std::string run_cartier(const CommandConfig& cfg, const MonomialIdeal& a) {
  MonomialIdeal image = cartier_image(a, PrimePower(Int(cfg.p), cfg.e));
  if (cfg.format == "table") return render_ideal(image) + "\n";
  return dump(json{{"image", ideal_to_json(image)}, {"rendered", render_ideal(image)}});
}

std::string run_bracket(const CommandConfig& cfg, const MonomialIdeal& a) {
  Int q = parse_int_flag(cfg.q_text, "--q");
  MonomialIdeal result = bracket_power(a, q);
  if (cfg.format == "table") return render_ideal(result) + "\n";
  return dump(json{{"bracket", ideal_to_json(result)}, {"rendered", render_ideal(result)}});
}

// Cache key: command, canonical ideal form, and every flag that affects the
// rendered payload. --jobs is deliberately excluded (results are identical).
std::optional<std::string> cache_key(const CommandConfig& cfg, const MonomialIdeal& a) {
  std::ostringstream key;
  if (cfg.command == "bs-roots") {
    key << "bs-roots|" << render_ideal(a) << "|p=" << cfg.p << "|levels=" << cfg.levels
        << "|certify=" << (cfg.no_certify ? 0 : 1) << "|samples=" << cfg.samples
        << "|grid-scale=" << cfg.grid_scale;
  } else if (cfg.command == "char0-roots") {
    key << "char0-roots|" << render_ideal(a) << "|m-max=" << cfg.m_max
        << "|grid-scale=" << cfg.grid_scale << "|check-grid=" << cfg.check_grid;
  } else if (cfg.command == "compare") {
    std::ostringstream primes;
    for (const Int& p : parse_primes_csv(cfg.primes_csv)) primes << p << ",";
    key << "compare|" << render_ideal(a) << "|primes=" << primes.str()
        << "|levels=" << cfg.levels << "|samples=" << cfg.samples
        << "|m-max=" << cfg.m_max << "|grid-scale=" << cfg.grid_scale;
  } else {
    return std::nullopt;  // cheap commands are never cached
  }
  key << "|format=" << cfg.format;
  return key.str();
}

int run_impl(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<std::size_t> vars;
  if (cfg.vars > 0) vars = cfg.vars;
  MonomialIdeal a = parse_ideal(cfg.ideal_text, vars);

  std::optional<std::string> key;
  if (!cfg.cache_path.empty()) {
    key = cache_key(cfg, a);
    if (key) {
      if (std::optional<std::string> hit = cache_lookup(cfg.cache_path, *key, err)) {
        out << *hit;
        return 0;
      }
    }
  }

  std::string payload;
  if (cfg.command == "nu") payload = run_nu(cfg, a);
  else if (cfg.command == "nu-set") payload = run_nu_set(cfg, a);
  else if (cfg.command == "bs-roots") payload = run_bs_roots(cfg, a);
  else if (cfg.command == "char0-roots") payload = run_char0(cfg, a, err);
  else if (cfg.command == "compare") payload = run_compare(cfg, a);
  else if (cfg.command == "cartier") payload = run_cartier(cfg, a);
  else if (cfg.command == "bracket") payload = run_bracket(cfg, a);
  else throw precondition_error("unknown command: " + cfg.command);

  if (key) cache_store(cfg.cache_path, *key, payload, err);
  out << payload;
  return 0;
}

}  // namespace

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(cfg, out, err);
  } catch (const resource_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 3;
  } catch (const json::exception& ex) {
    err << "error: invalid JSON input: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace bsr::cli
