#include "plethora/cli.hpp"

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "plethora/factorization.hpp"
#include "plethora/io.hpp"
#include "plethora/max_terms.hpp"
#include "plethora/plethysm.hpp"
#include "plethora/tableaux.hpp"

namespace plethora::cli {
namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string cache;
  std::string nu, mu, alpha, order = "lex", target;
  std::uint64_t vars = 0, max_degree = 0, n = 0;
  bool distinct = false;
};

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string literal(const Partition& p) { return format_partition(p); }

std::string product(const ProductKey& k) {
  return literal(k.nu) + " o " + literal(k.mu);
}

json key_json(const ProductKey& k) {
  return {{"nu", to_json(k.nu)}, {"mu", to_json(k.mu)}};
}

json weights_json(std::uint64_t degree,
                  const std::map<Partition, Integer, LexDescending>& w) {
  SchurExpansion f(degree);
  for (const auto& [alpha, c] : w) f.add(alpha, c);
  return to_json(f);
}

void print_terms(std::ostream& out,
                 const std::map<Partition, Integer, LexDescending>& terms) {
  for (const auto& [lambda, c] : terms)
    out << literal(lambda) << ": " << c.get_str() << '\n';
}

std::string ssyt_text(const SemistandardTableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    if (!s.empty()) s += '/';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(row[i]);
    }
  }
  return s;
}

json ssyt_json(const SemistandardTableau& t) { return t.rows(); }

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (!o.cache.empty())
      owned_ = std::make_unique<PlethysmEngine>(o.cache);
    else
      owned_ = std::make_unique<PlethysmEngine>();
  }

  PlethysmEngine& engine() { return *owned_; }

  void plethysm() {
    const auto f = engine().plethysm(parse_partition(o_.nu),
                                     parse_partition(o_.mu));
    if (o_.json)
      out_ << to_json(*f).dump() << '\n';
    else
      print_terms(out_, f->terms());
  }

  void coeff() {
    const Integer c = engine().coefficient(parse_partition(o_.nu),
                                           parse_partition(o_.mu),
                                           parse_partition(o_.alpha));
    if (o_.json)
      out_ << json{{"coefficient", c.get_str()}}.dump() << '\n';
    else
      out_ << c.get_str() << '\n';
  }

  void max() {
    const Partition nu = parse_partition(o_.nu), mu = parse_partition(o_.mu);
    if (o_.order == "dominance") {
      if (nu.empty() || mu.empty())
        throw std::invalid_argument("max: both partitions must be nonempty");
      const auto w = maximal_pleth_weights(mu, nu);
      if (o_.json)
        out_ << weights_json(nu.size() * mu.size(), w).dump() << '\n';
      else
        print_terms(out_, w);
      return;
    }
    const Partition p =
        o_.order == "lex" ? max_lex(nu, mu) : max_translex(nu, mu);
    if (o_.json)
      out_ << to_json(p).dump() << '\n';
    else
      out_ << literal(p) << '\n';
  }

  void maximal_dominance() {
    const auto f = engine().plethysm(parse_partition(o_.nu),
                                     parse_partition(o_.mu));
    std::map<Partition, Integer, LexDescending> top;
    for (const auto& [alpha, c] : f->terms()) {
      bool dominated = false;
      for (const auto& [beta, d] : f->terms())
        if (beta != alpha && dominates(beta, alpha)) dominated = true;
      if (!dominated) top.emplace(alpha, c);
    }
    if (o_.json)
      out_ << weights_json(f->degree(), top).dump() << '\n';
    else
      print_terms(out_, top);
  }

  void ssyt() {
    const Partition lambda = parse_partition(o_.nu);
    const Part vars = static_cast<Part>(o_.vars ? o_.vars : lambda.size());
    const auto all = enumerate_ssyt(lambda, vars);
    if (o_.json) {
      json arr = json::array();
      for (const auto& t : all) arr.push_back(ssyt_json(t));
      out_ << arr.dump() << '\n';
    } else {
      for (const auto& t : all) out_ << ssyt_text(t) << '\n';
    }
  }

  void plethystic() {
    const Partition nu = parse_partition(o_.nu), mu = parse_partition(o_.mu);
    const Part vars =
        static_cast<Part>(o_.vars ? o_.vars : nu.size() * mu.size());
    const auto all = enumerate_plethystic(mu, nu, vars);
    if (o_.json) {
      json arr = json::array();
      for (const auto& t : all) {
        json rows = json::array();
        for (const auto& row : t.rows()) {
          json cells = json::array();
          for (const auto& cell : row) cells.push_back(ssyt_json(cell));
          rows.push_back(std::move(cells));
        }
        arr.push_back(std::move(rows));
      }
      out_ << arr.dump() << '\n';
      return;
    }
    for (const auto& t : all) {
      std::string line;
      for (const auto& row : t.rows()) {
        if (!line.empty()) line += " / ";
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) line += ' ';
          line += '[' + ssyt_text(row[i]) + ']';
        }
      }
      out_ << line << '\n';
    }
  }

  void verify() {
    const std::string& what = o_.target;
    if (what == "theorem-a") return coincidences();
    if (what == "theorem-b") return classification();
    if (what == "square") return square();
    return cross_check();
  }

  void partitions() {
    const auto all = enumerate_partitions(o_.n, o_.distinct);
    if (o_.json) {
      json arr = json::array();
      for (const auto& p : all) arr.push_back(to_json(p));
      out_ << arr.dump() << '\n';
    } else {
      for (const auto& p : all) out_ << literal(p) << '\n';
    }
  }

  void double_bracket() {
    const Partition alpha = parse_partition(o_.alpha);
    if (!has_distinct_parts(alpha))
      throw std::invalid_argument("double-bracket: parts must be distinct");
    const Partition p = plethora::double_bracket(alpha);
    if (o_.json)
      out_ << to_json(p).dump() << '\n';
    else
      out_ << literal(p) << '\n';
  }

 private:
  std::uint64_t degree_or(std::uint64_t fallback) const {
    return o_.max_degree ? o_.max_degree : fallback;
  }

  void coincidences() {
    const auto sweep = verify_theorem_A(engine(), degree_or(12));
    if (o_.json) {
      json arr = json::array();
      for (const auto& r : sweep.degrees) {
        json classes = json::array();
        for (const auto& c : r.classes) {
          json members = json::array();
          for (const auto& k : c) members.push_back(key_json(k));
          classes.push_back(std::move(members));
        }
        arr.push_back({{"degree", r.degree},
                       {"classes", std::move(classes)},
                       {"elapsed_ms", r.elapsed_ms}});
      }
      out_ << arr.dump() << '\n';
    } else {
      for (const auto& r : sweep.degrees) {
        out_ << "degree " << r.degree << ": " << r.classes.size()
             << " classes\n";
        for (const auto& c : r.classes) {
          std::string line;
          for (const auto& k : c) line += (line.empty() ? "" : " = ") + product(k);
          out_ << "  " << line << '\n';
        }
      }
    }
    if (!sweep.passed()) {
      std::string msg = "theorem-a:";
      for (const auto& c : sweep.unexpected)
        msg += " unexpected class starting " + product(c.front()) + ";";
      for (const auto& c : sweep.missing)
        msg += " missing class starting " + product(c.front()) + ";";
      throw VerificationFailed(msg);
    }
  }

  void classification() {
    const auto report = verify_theorem_B(engine(), degree_or(12));
    if (o_.json) {
      json rows = json::array(), bad = json::array();
      for (const auto& r : report.rows) {
        json row = key_json(r.key);
        row["terms"] = r.terms;
        row["homogeneous"] = r.homogeneous;
        row["indecomposable"] = r.indecomposable;
        rows.push_back(std::move(row));
      }
      for (const auto& k : report.violations) bad.push_back(key_json(k));
      out_ << json{{"max_degree", report.max_degree},
                   {"rows", std::move(rows)},
                   {"violations", std::move(bad)},
                   {"elapsed_ms", report.elapsed_ms}}
                  .dump()
           << '\n';
    } else {
      for (const auto& r : report.rows) {
        if (!r.homogeneous) continue;
        out_ << product(r.key) << ": homogeneous"
             << (r.indecomposable ? ", indecomposable" : "") << '\n';
      }
      out_ << report.rows.size() << " products, "
           << report.violations.size() << " violations\n";
    }
    if (!report.passed()) {
      std::string msg = "theorem-b: unexpected classification for";
      for (const auto& k : report.violations) msg += ' ' + product(k) + ';';
      throw VerificationFailed(msg);
    }
  }

  void square() {
    const auto report = verify_square_formula(engine(), degree_or(14) / 2);
    if (o_.json)
      out_ << json{{"max_n", report.max_n}, {"failures", report.failures}}.dump()
           << '\n';
    else
      out_ << "n <= " << report.max_n << ": "
           << (report.passed() ? "ok" : "FAILED") << '\n';
    if (!report.passed()) {
      std::string msg = "square: identity fails for n =";
      for (auto n : report.failures) msg += ' ' + std::to_string(n);
      throw VerificationFailed(msg);
    }
  }

  void cross_check() {
    const std::uint64_t top = degree_or(10);
    if (top > kPowerSumOracleBound)
      throw std::domain_error("cross-check: max degree exceeds oracle bound " +
                              std::to_string(kPowerSumOracleBound));
    std::size_t checked = 0;
    std::vector<ProductKey> bad;
    for (std::uint64_t d = 1; d <= top; ++d)
      for (const auto& k : products_of_degree(d)) {
        ++checked;
        if (*engine().plethysm(k.nu, k.mu) != plethysm_powersum(k.nu, k.mu))
          bad.push_back(k);
      }
    if (o_.json) {
      json arr = json::array();
      for (const auto& k : bad) arr.push_back(key_json(k));
      out_ << json{{"max_degree", top},
                   {"checked", checked},
                   {"mismatches", std::move(arr)}}
                  .dump()
           << '\n';
    } else {
      out_ << checked << " products, " << bad.size() << " mismatches\n";
    }
    if (!bad.empty())
      throw VerificationFailed("cross-check: algorithms disagree on " +
                               product(bad.front()));
  }

  const Options& o_;
  std::ostream& out_;
  std::unique_ptr<PlethysmEngine> owned_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact plethysm of Schur functions", "plethora"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--cache", o.cache, "Append-only plethysm cache file");

  auto* pl = app.add_subcommand("plethysm", "Schur expansion of s_NU o s_MU");
  pl->add_option("NU", o.nu)->required();
  pl->add_option("MU", o.mu)->required();

  auto* co = app.add_subcommand("coeff", "Coefficient of s_ALPHA");
  co->add_option("NU", o.nu)->required();
  co->add_option("MU", o.mu)->required();
  co->add_option("ALPHA", o.alpha)->required();

  auto* mx = app.add_subcommand("max", "Maximal constituent in an order");
  mx->add_option("NU", o.nu)->required();
  mx->add_option("MU", o.mu)->required();
  mx->add_option("--order", o.order)
      ->check(CLI::IsMember({"lex", "translex", "dominance"}));

  auto* md = app.add_subcommand(
      "maximal-dominance", "Dominance-maximal terms of the full expansion");
  md->add_option("NU", o.nu)->required();
  md->add_option("MU", o.mu)->required();

  auto* tb = app.add_subcommand("tableaux", "Enumerate tableaux");
  tb->require_subcommand(1);
  tb->fallthrough();
  auto* ss = tb->add_subcommand("ssyt", "Semistandard tableaux of shape NU");
  ss->add_option("NU", o.nu)->required();
  ss->add_option("--vars", o.vars, "Largest entry");
  auto* pt = tb->add_subcommand("plethystic",
                                "Plethystic tableaux of outer shape NU, "
                                "inner shape MU");
  pt->add_option("NU", o.nu)->required();
  pt->add_option("MU", o.mu)->required();
  pt->add_option("--vars", o.vars, "Largest inner entry");

  auto* vf = app.add_subcommand("verify", "Verification sweeps");
  vf->add_option("WHAT", o.target)
      ->required()
      ->check(CLI::IsMember({"theorem-a", "theorem-b", "square", "cross-check"}));
  vf->add_option("--max-degree", o.max_degree);

  auto* pa = app.add_subcommand("partitions", "Partitions of N");
  pa->add_option("N", o.n)->required();
  pa->add_flag("--distinct", o.distinct);

  auto* db = app.add_subcommand("double-bracket", "The partition 2[ALPHA]");
  db->add_option("ALPHA", o.alpha)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    Session s(o, out);
    if (pl->parsed()) s.plethysm();
    else if (co->parsed()) s.coeff();
    else if (mx->parsed()) s.max();
    else if (md->parsed()) s.maximal_dominance();
    else if (ss->parsed()) s.ssyt();
    else if (pt->parsed()) s.plethystic();
    else if (vf->parsed()) s.verify();
    else if (pa->parsed()) s.partitions();
    else if (db->parsed()) s.double_bracket();
  } catch (const VerificationFailed& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace plethora::cli
