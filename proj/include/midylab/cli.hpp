#pragma once

// Command-line surface of midylab. `run` takes the arguments after the
// program name and writes results to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 domain or precondition error, 2 usage error,
// 3 bounded search exhausted.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "midylab/arith.hpp"
#include "midylab/errors.hpp"
#include "midylab/expansion.hpp"
#include "midylab/jenkins.hpp"
#include "midylab/midy.hpp"
#include "midylab/natural.hpp"
#include "midylab/order.hpp"
#include "midylab/progression.hpp"

namespace midylab::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kSearchExhausted = 3,
};

// Naturals that fit a 64-bit word are emitted as JSON numbers, larger ones
// as decimal strings.
inline Json to_json(const Natural& n) {
  if (fits_u64(n)) return Json(n.convert_to<std::uint64_t>());
  return Json(n.str());
}

inline Json to_json(const std::vector<Natural>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

inline Json to_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PrimeWitness>) {
          return Json{{"prime", to_json(c.prime)},
                      {"nu_n", c.nu_n},
                      {"nu_d", c.nu_d},
                      {"tolerated", c.tolerated}};
        } else if constexpr (std::is_same_v<T, NumeratorWitness>) {
          return Json{{"x", to_json(c.x)}};
        } else {
          return Json{{"gcd", to_json(c.g)}};
        }
      },
      cert);
}

inline std::string describe(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PrimeWitness>) {
          std::string s = "p=" + c.prime.str() + ", v_p(N)=" +
                          std::to_string(c.nu_n) + ", v_p(d)=" +
                          std::to_string(c.nu_d);
          if (c.tolerated != c.nu_d) {
            s += ", tolerated=" + std::to_string(c.tolerated);
          }
          return s;
        } else if constexpr (std::is_same_v<T, NumeratorWitness>) {
          return "x=" + c.x.str();
        } else {
          return "gcd=" + c.g.str();
        }
      },
      cert);
}

// Digits as one string when every digit is below 10, otherwise as a
// bracketed list of decimal digit values.
inline std::string digit_string(std::span<const std::uint32_t> digits) {
  const bool plain = std::all_of(digits.begin(), digits.end(),
                                 [](std::uint32_t d) { return d < 10; });
  std::string s;
  if (plain) {
    for (auto d : digits) s += static_cast<char>('0' + d);
    return s;
  }
  s = "[";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(digits[i]);
  }
  return s + "]";
}

inline std::string format_factorization(const Factorization& f) {
  std::string s;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0) s += '*';
    s += f.factors[i].prime.str() + "^" + std::to_string(f.factors[i].exponent);
  }
  return s;
}

// Inverse of format_factorization; nullopt on malformed text.
inline std::optional<Factorization> parse_factorization(std::string_view text) {
  Factorization f;
  if (text.empty()) return f;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('*', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t caret = item.find('^');
    if (caret == std::string_view::npos) return std::nullopt;
    try {
      Natural p = parse_natural(item.substr(0, caret));
      const Natural e = parse_natural(item.substr(caret + 1));
      if (e == 0 || e > 100000) return std::nullopt;
      if (!f.factors.empty() && f.factors.back().prime >= p) return std::nullopt;
      f.factors.push_back({std::move(p), e.convert_to<unsigned>()});
    } catch (const Error&) {
      return std::nullopt;
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return f;
}

// Append-only factorization cache, one `n=p^e*p^e...` line per entry.
// Entries read back are only trusted after they multiply out to n with
// every listed base prime; others are recomputed and appended again.
class FactorCache {
 public:
  explicit FactorCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const auto f = parse_factorization(std::string_view(line).substr(eq + 1));
      if (f) entries_[line.substr(0, eq)] = *f;
    }
  }

  Factorization get(const Natural& n) {
    const std::string key = n.str();
    {
      std::lock_guard lock(mutex_);
      const auto it = entries_.find(key);
      if (it != entries_.end() && valid(n, it->second)) {
        ++hits_;
        return it->second;
      }
    }
    Factorization f = factor(n);
    std::lock_guard lock(mutex_);
    entries_[key] = f;
    std::ofstream(path_, std::ios::app) << key << '=' << format_factorization(f)
                                        << '\n';
    return f;
  }

  std::size_t hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
  }

 private:
  static bool valid(const Natural& n, const Factorization& f) {
    if (f.value() != n) return false;
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& p) { return is_prime(p.prime); });
  }

  std::string path_;
  mutable std::mutex mutex_;
  std::map<std::string, Factorization> entries_;
  std::size_t hits_ = 0;
};

// One line of `scan` output.
struct ScanRow {
  Natural n;
  Natural base;
  Natural order;
  std::vector<Natural> midy_set;
  std::vector<std::pair<Natural, Certificate>> excluded;
};

inline ScanRow scan_row(const MidyContext& ctx) {
  ScanRow row{ctx.modulus, ctx.base, ctx.order, {}, {}};
  for (auto& [d, verdict] : midy_verdicts(ctx)) {
    if (verdict.holds) {
      row.midy_set.push_back(d);
    } else {
      row.excluded.emplace_back(d, *verdict.certificate);
    }
  }
  return row;
}

// Rows for every N in [from, to] coprime to b, ascending in N. Work is
// spread over `jobs` threads; the result does not depend on `jobs`.
inline std::vector<ScanRow> scan(const Natural& b, std::uint64_t from,
                                 std::uint64_t to, unsigned jobs,
                                 FactorCache* cache = nullptr) {
  if (to < from) return {};
  const std::uint64_t count = to - from + 1;
  std::vector<std::optional<ScanRow>> slots(count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::uint64_t i = next++; i < count; i = next++) {
        const Natural N(from + i);
        if (N < 1 || gcd(N, b) != 1) continue;
        Factorization f = cache ? cache->get(N) : factor(N);
        slots[i] = scan_row(make_context(b, N, std::move(f)));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<ScanRow> rows;
  for (auto& slot : slots) {
    if (slot) rows.push_back(std::move(*slot));
  }
  return rows;
}

inline std::string join(const std::vector<Natural>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += sep;
    s += values[i].str();
  }
  return s;
}

inline std::string set_string(const std::vector<Natural>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ", ";
    s += values[i].str();
  }
  return s + "}";
}

namespace detail {

struct NaturalArg {
  std::string text;
  Natural value() const { return parse_natural(text); }
};

inline CLI::Validator decimal() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        if (s.empty() || !std::all_of(s.begin(), s.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
          return "expected a decimal natural number, got '" + s + "'";
        }
        return {};
      },
      "NATURAL");
}

inline void add_base(CLI::App* sub, std::string& base) {
  sub->add_option("--base", base, "numeration base (2..62)")
      ->required()
      ->check(CLI::Range(2, 62));
}

inline void format_option(CLI::App* sub, std::string& format,
                          std::vector<std::string> choices) {
  sub->add_option("--format", format, "output format")
      ->check(CLI::IsMember(choices));
}

inline Factorization factorization_of(const Natural& n, FactorCache* cache) {
  if (n < 1) throw DomainError("modulus must be at least 1");
  return cache ? cache->get(n) : factor(n);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Midy's property, multiplicative orders and primes = 1 mod q^v",
               "midylab"};
  app.require_subcommand(1, 1);

  std::string base, n_text, x_text, d_text, format = "text", method = "ppl2",
                                            route = "both", cache_path;
  std::string q_text, from_text, to_text;
  std::vector<std::string> prime_specs;
  unsigned v = 1, jobs = 1;
  std::size_t blocks = 0, count = 1;
  std::uint64_t bound = kDefaultSearchBound;

  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache", cache_path, "factorization cache file");
  };

  auto* order_cmd = app.add_subcommand("order", "multiplicative order |b|_N");
  detail::add_base(order_cmd, base);
  order_cmd->add_option("N", n_text)->required()->check(detail::decimal());
  detail::format_option(order_cmd, format, {"text", "json"});
  add_cache(order_cmd);

  auto* factor_cmd = app.add_subcommand("factor", "prime factorization of N");
  factor_cmd->add_option("N", n_text)->required()->check(detail::decimal());
  detail::format_option(factor_cmd, format, {"text", "json"});

  auto* expand_cmd =
      app.add_subcommand("expand", "period of x/N in base b, optional block sum");
  detail::add_base(expand_cmd, base);
  expand_cmd->add_option("X", x_text)->required()->check(detail::decimal());
  expand_cmd->add_option("N", n_text)->required()->check(detail::decimal());
  expand_cmd->add_option("--blocks", blocks, "number of blocks d")
      ->check(CLI::PositiveNumber);
  detail::format_option(expand_cmd, format, {"text", "json"});

  auto* check_cmd =
      app.add_subcommand("midy-check", "decide whether d is in M_b(N)");
  detail::add_base(check_cmd, base);
  check_cmd->add_option("N", n_text)->required()->check(detail::decimal());
  check_cmd->add_option("D", d_text)->required()->check(detail::decimal());
  check_cmd->add_option("--method", method, "decider")
      ->check(CLI::IsMember({"ppl2", "ppl3", "direct", "all"}));
  detail::format_option(check_cmd, format, {"text", "json"});
  add_cache(check_cmd);

  auto* set_cmd = app.add_subcommand("midy-set", "the Midy set M_b(N)");
  detail::add_base(set_cmd, base);
  set_cmd->add_option("N", n_text)->required()->check(detail::decimal());
  detail::format_option(set_cmd, format, {"text", "json"});
  add_cache(set_cmd);

  auto* guel_cmd = app.add_subcommand(
      "guel", "gcd, Midy and witness statements when every v_p(N) > v_p(d)");
  detail::add_base(guel_cmd, base);
  guel_cmd->add_option("N", n_text)->required()->check(detail::decimal());
  guel_cmd->add_option("D", d_text)->required()->check(detail::decimal());
  detail::format_option(guel_cmd, format, {"text", "json"});

  auto* jenkins_cmd = app.add_subcommand(
      "jenkins", "Jenkins' criterion for N = prod p_i^h_i");
  detail::add_base(jenkins_cmd, base);
  jenkins_cmd->add_option("--d", d_text)->required()->check(detail::decimal());
  jenkins_cmd->add_option("--prime", prime_specs, "prime power as P:H")
      ->required();
  jenkins_cmd->add_option("--route", route, "criterion route")
      ->check(CLI::IsMember({"formula", "gcd", "both"}));
  detail::format_option(jenkins_cmd, format, {"text", "json"});

  auto* structure_cmd = app.add_subcommand(
      "structure", "decide q^v in M_b(N) from the shape of N");
  detail::add_base(structure_cmd, base);
  structure_cmd->add_option("N", n_text)->required()->check(detail::decimal());
  structure_cmd->add_option("--q", q_text)->required()->check(detail::decimal());
  structure_cmd->add_option("--v", v)->check(CLI::PositiveNumber);
  detail::format_option(structure_cmd, format, {"text", "json"});

  auto* primes_cmd = app.add_subcommand(
      "primes", "primes = 1 mod q^v from successive Midy witnesses");
  detail::add_base(primes_cmd, base);
  primes_cmd->add_option("--q", q_text)->required()->check(detail::decimal());
  primes_cmd->add_option("--v", v)->required()->check(CLI::PositiveNumber);
  primes_cmd->add_option("--count", count)->required()->check(
      CLI::PositiveNumber);
  primes_cmd->add_option("--bound", bound, "search bound per step");
  detail::format_option(primes_cmd, format, {"text", "json"});

  auto* scan_cmd = app.add_subcommand("scan", "Midy sets for a range of N");
  detail::add_base(scan_cmd, base);
  scan_cmd->add_option("--from", from_text)->required()->check(detail::decimal());
  scan_cmd->add_option("--to", to_text)->required()->check(detail::decimal());
  scan_cmd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1u, 256u));
  std::string scan_format = "csv";
  scan_cmd->add_option("--format", scan_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  add_cache(scan_cmd);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("midylab");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  if (cache_path.empty()) {
    if (const char* env = std::getenv("MIDYLAB_CACHE")) cache_path = env;
  }
  std::optional<FactorCache> cache;
  if (!cache_path.empty()) cache.emplace(cache_path);
  FactorCache* cache_ptr = cache ? &*cache : nullptr;

  const bool json = format == "json";

  try {
    const Natural b = base.empty() ? Natural(10) : parse_natural(base);

    if (order_cmd->parsed()) {
      const Natural N = parse_natural(n_text);
      const auto record =
          order_record(b, N, detail::factorization_of(N, cache_ptr));
      if (json) {
        out << Json{{"base", to_json(b)},
                    {"n", to_json(N)},
                    {"order", to_json(record.order)}}
                   .dump()
            << '\n';
      } else {
        out << record.order << '\n';
      }
    } else if (factor_cmd->parsed()) {
      const Natural N = parse_natural(n_text);
      const auto f = factor(N);
      if (json) {
        Json factors = Json::array();
        for (const auto& [p, e] : f.factors) {
          factors.push_back(Json{{"p", to_json(p)}, {"e", e}});
        }
        Json obj{{"n", to_json(N)}, {"factors", factors}};
        if (f.probable) obj["probable"] = true;
        out << obj.dump() << '\n';
      } else {
        out << N << '=' << format_factorization(f) << '\n';
        if (f.probable) {
          err << "note: factors above 2^64 passed a strong probable-prime "
                 "test only\n";
        }
      }
    } else if (expand_cmd->parsed()) {
      const Natural x = parse_natural(x_text), N = parse_natural(n_text);
      const auto e = period_digits(x, N, b);
      std::optional<BlockDecomposition> dec;
      if (blocks > 0) dec = blocks_and_sum(e, blocks);
      if (json) {
        Json obj{{"base", to_json(b)},
                 {"n", to_json(N)},
                 {"x", to_json(x)},
                 {"order", e.digits.size()},
                 {"digits", e.digits}};
        if (dec) {
          obj["d"] = dec->d;
          obj["blocks"] = to_json(dec->blocks);
          obj["sum"] = to_json(dec->sum);
        }
        out << obj.dump() << '\n';
      } else {
        out << "period: " << digit_string(e.digits) << '\n';
        out << "length: " << e.digits.size() << '\n';
        if (dec) {
          out << "blocks:";
          for (std::size_t j = 0; j < dec->d; ++j) {
            out << ' '
                << digit_string(std::span(e.digits).subspan(j * dec->k, dec->k));
          }
          out << '\n' << "sum: " << dec->sum << '\n';
          const Natural nines = boost::multiprecision::pow(b, dec->k) - 1;
          out << "sum / (b^k - 1): ";
          if (dec->sum % nines == 0) {
            out << dec->sum / nines << '\n';
          } else {
            out << "not a multiple\n";
          }
        }
      }
    } else if (check_cmd->parsed()) {
      const Natural N = parse_natural(n_text), d = parse_natural(d_text);
      const auto ctx = make_context(b, N, detail::factorization_of(N, cache_ptr));
      std::vector<MidyVerdict> verdicts;
      if (method == "ppl2" || method == "all") {
        verdicts.push_back(midy_check_ppl2(ctx, d));
      }
      if (method == "ppl3" || method == "all") {
        verdicts.push_back(midy_check_ppl3(ctx, d));
      }
      if (method == "direct" || method == "all") {
        verdicts.push_back(midy_direct(b, N, d));
      }
      for (const auto& verdict : verdicts) {
        if (json) {
          Json obj{{"base", to_json(b)},
                   {"n", to_json(N)},
                   {"d", to_json(d)},
                   {"method", std::string(to_string(verdict.method))},
                   {"holds", verdict.holds}};
          obj["certificate"] =
              verdict.certificate ? to_json(*verdict.certificate) : Json();
          out << obj.dump() << '\n';
        } else {
          out << to_string(verdict.method) << ": "
              << (verdict.holds ? "true" : "false");
          if (verdict.certificate) {
            out << " (" << describe(*verdict.certificate) << ')';
          }
          out << '\n';
        }
      }
      const bool agree = std::all_of(
          verdicts.begin(), verdicts.end(),
          [&](const MidyVerdict& v) { return v.holds == verdicts.front().holds; });
      if (!agree) err << "warning: deciders disagree\n";
    } else if (set_cmd->parsed()) {
      const Natural N = parse_natural(n_text);
      const auto set =
          midy_set(make_context(b, N, detail::factorization_of(N, cache_ptr)));
      if (json) {
        out << Json{{"base", to_json(b)},
                    {"n", to_json(N)},
                    {"order", to_json(set.order)},
                    {"midy_set", to_json(set.members)}}
                   .dump()
            << '\n';
      } else {
        out << set_string(set.members) << '\n';
      }
    } else if (guel_cmd->parsed()) {
      const Natural N = parse_natural(n_text), d = parse_natural(d_text);
      const auto t = guel_triple(b, N, d);
      if (json) {
        out << Json{{"base", to_json(b)},
                    {"n", to_json(N)},
                    {"d", to_json(d)},
                    {"coprime", t.coprime},
                    {"holds", t.midy},
                    {"witnessed", t.witnessed}}
                   .dump()
            << '\n';
      } else {
        out << "gcd(b^k - 1, N) = 1: " << std::boolalpha << t.coprime << '\n'
            << "d in M_b(N): " << t.midy << '\n'
            << "witness q | d: " << t.witnessed << '\n';
      }
    } else if (jenkins_cmd->parsed()) {
      std::vector<PrimePower> primes;
      for (const auto& spec : prime_specs) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos) {
          err << "error: --prime expects P:H, got '" << spec << "'\n";
          return kUsageError;
        }
        Natural h;
        try {
          primes.push_back({parse_natural(spec.substr(0, colon)), 0});
          h = parse_natural(spec.substr(colon + 1));
        } catch (const DomainError& e) {
          err << "error: " << e.what() << '\n';
          return kUsageError;
        }
        primes.back().exponent = to_unsigned(h);
      }
      const Natural d = parse_natural(d_text);
      const auto inst = JenkinsInstance::make(b, d, primes);
      const Natural N = inst.modulus();
      Json factors = Json::array();
      for (const auto& p : inst.primes()) {
        factors.push_back(Json{{"p", to_json(p.prime)}, {"h", p.exponent}});
      }
      auto emit = [&](const char* name, bool holds) {
        if (json) {
          out << Json{{"base", to_json(b)},
                      {"d", to_json(d)},
                      {"n", to_json(N)},
                      {"factors", factors},
                      {"method", name},
                      {"holds", holds}}
                     .dump()
              << '\n';
        } else {
          out << name << ": " << (holds ? "true" : "false") << '\n';
        }
      };
      if (route == "formula" || route == "both") {
        if (!json) {
          const auto dec = jenkins_decompose(inst);
          for (std::size_t j = 0; j < dec.rows.size(); ++j) {
            const auto& p = inst.primes()[j];
            const auto& row = dec.rows[j];
            out << "p=" << p.prime << " h=" << p.exponent << " m=" << p.lift
                << " k=" << p.k << " c=" << row.c << " alpha=[";
            for (std::size_t i = 0; i < row.alpha.size(); ++i) {
              out << (i ? "," : "") << row.alpha[i];
            }
            out << "] y=" << row.y << '\n';
          }
        }
        emit("formula", jenkins_check(inst));
      }
      if (route == "gcd" || route == "both") emit("gcd", jenkins_check_gcd(inst));
    } else if (structure_cmd->parsed()) {
      const Natural N = parse_natural(n_text), q = parse_natural(q_text);
      const auto eval = evaluate_prime_power_structure(b, N, q, v);
      if (json) {
        out << Json{{"base", to_json(b)},
                    {"n", to_json(N)},
                    {"q", to_json(q)},
                    {"v", v},
                    {"holds", eval.holds},
                    {"readings_agree", eval.readings_agree()}}
                   .dump()
            << '\n';
      } else {
        out << (eval.holds ? "true" : "false") << '\n';
        if (!eval.readings_agree()) {
          err << "note: formula and per-prime readings disagree\n";
        }
      }
    } else if (primes_cmd->parsed()) {
      const Natural q = parse_natural(q_text);
      const auto trace = prime_progression(b, q, v, count, bound);
      std::vector<Natural> ps, ms;
      for (const auto& s : trace.steps) {
        ps.push_back(s.prime);
        ms.push_back(s.modulus);
      }
      if (json) {
        Json obj{{"base", to_json(b)},
                 {"q", to_json(q)},
                 {"v", v},
                 {"primes", to_json(ps)},
                 {"moduli", to_json(ms)}};
        if (trace.probable) obj["probable"] = true;
        out << obj.dump() << '\n';
      } else {
        for (const auto& s : trace.steps) {
          out << s.prime << " = 1 mod " << s.modulus << '\n';
        }
        if (trace.probable) {
          err << "note: primes above 2^64 passed a strong probable-prime test "
                 "only\n";
        }
      }
    } else if (scan_cmd->parsed()) {
      const Natural from = parse_natural(from_text), to = parse_natural(to_text);
      const auto rows = scan(b, to_u64(from), to_u64(to), jobs, cache_ptr);
      if (scan_format == "json") {
        for (const auto& row : rows) {
          Json excluded = Json::array();
          for (const auto& [d, cert] : row.excluded) {
            excluded.push_back(Json{{"d", to_json(d)}, {"certificate", to_json(cert)}});
          }
          out << Json{{"n", to_json(row.n)},
                      {"base", to_json(row.base)},
                      {"order", to_json(row.order)},
                      {"midy_set", to_json(row.midy_set)},
                      {"excluded", excluded}}
                     .dump()
              << '\n';
        }
      } else {
        out << "n,base,order,midy_set\n";
        for (const auto& row : rows) {
          out << row.n << ',' << row.base << ',' << row.order << ','
              << join(row.midy_set, ';') << '\n';
        }
      }
    }
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kSearchExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace midylab::cli
