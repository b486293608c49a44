#include "commands.hpp"

#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "cache.hpp"
#include "expr.hpp"
#include "json.hpp"
#include "polyring/lyndon.hpp"
#include "polyring/transforms.hpp"
#include "suites.hpp"

namespace polyring::cli {

using nlohmann::json;
using polytope::Polytope;
using ring::Ambient;
using ring::FormalSum;

namespace {

// Raised for bad arguments found after CLI parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string cache;
  int jobs = 1;
};

json strings(const std::vector<Int>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(x.str());
  return a;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

Polytope single(const FormalSum& s) {
  if (s.terms().size() != 1 || s.terms().begin()->second != 1) throw UsageError("expected a single polytope");
  return s.terms().begin()->first;
}

int homogeneous_dim(const FormalSum& s) {
  if (s.is_zero()) throw UsageError("expression is zero");
  const int n = s.terms().begin()->first.dim();
  for (auto& [p, c] : s.terms())
    if (p.dim() != n) throw UsageError("expression is not homogeneous");
  return n;
}

polytope::FlagVector flag_of(const FormalSum& s) {
  const int n = homogeneous_dim(s);
  std::vector<Int> e(n >= 0 ? (std::size_t{1} << n) : 1);
  for (auto& [p, c] : s.terms())
    for (std::size_t m = 0; m < e.size(); ++m) e[m] += c * p.flag().entries()[m];
  return polytope::FlagVector(n, e);
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

lyndon::Alphabet parse_alphabet(const std::string& s) {
  if (s == "odd") return lyndon::Alphabet::odd();
  if (s == "all" || s == "naturals") return lyndon::Alphabet::naturals();
  std::vector<int> letters;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      letters.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad alphabet letter: " + tok);
    }
  }
  return lyndon::Alphabet::of(letters);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rings of polytopes, quasi-symmetric functions and flag vectors"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--cache", opt.cache, "cache file, loaded first if present and saved afterwards");
  app.add_option("--jobs", opt.jobs, "worker threads for verify")->check(CLI::PositiveNumber);

  std::string expr;
  auto* build = app.add_subcommand("build", "canonical form of an expression");
  build->add_option("expr", expr)->required();
  auto* flag = app.add_subcommand("flag", "flag vector of a homogeneous expression");
  flag->add_option("expr", expr)->required();

  int r = -1;
  std::string route = "flag";
  auto* fpoly = app.add_subcommand("fpoly", "generalized f-polynomial");
  fpoly->add_option("expr", expr)->required();
  fpoly->add_option("--r", r, "expand in this many variables")->check(CLI::NonNegativeNumber);
  fpoly->add_option("--route", route)->check(CLI::IsMember({"flag", "operator"}));
  auto* ehr = app.add_subcommand("ehrenborg", "Ehrenborg's quasi-symmetric function F");
  ehr->add_option("expr", expr)->required();
  auto* frp = app.add_subcommand("frp", "f_RP");
  frp->add_option("expr", expr)->required();

  std::string alphabet = "1,2";
  int weight = -1, k_table = -1;
  auto* lyn = app.add_subcommand("lyndon", "Lyndon words and generator counts");
  lyn->add_option("--alphabet", alphabet, "comma-separated letters, odd or all");
  lyn->add_option("--weight", weight)->check(CLI::PositiveNumber);
  lyn->add_option("--k-table", k_table, "k_n for n up to this bound")->check(CLI::PositiveNumber);

  int n = 0;
  bool det = false;
  auto* bbm = app.add_subcommand("bb-matrix", "flag numbers of the Omega^n basis");
  bbm->add_option("n", n)->required()->check(CLI::Range(1, 8));
  bbm->add_flag("--det", det);

  int dim = -1;
  auto* proj = app.add_subcommand("project", "projection onto the BB basis");
  proj->add_option("expr", expr)->required();
  proj->add_option("--dim", dim)->required()->check(CLI::NonNegativeNumber);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();

  std::string action, path;
  auto* cache = app.add_subcommand("cache", "save or load the registry and BB tables");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"load", "save"}));
  cache->add_option("path", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed() && !is_suite(suite)) throw UsageError("unknown suite: " + suite);
    if (!opt.cache.empty() && std::filesystem::exists(opt.cache)) load_cache(opt.cache);

    int status = kOk;
    if (build->parsed()) {
      FormalSum s = parse_expression(expr, Ambient::RP);
      json terms = json::array();
      std::ostringstream text;
      text << s.str();
      for (auto& [p, c] : s.terms()) {
        std::vector<int> profile;
        for (auto x : p.rank_profile()) profile.push_back(static_cast<int>(x));
        terms.push_back({{"coeff", c.str()}, {"dim", p.dim()}, {"digest", p.digest()}, {"rank_profile", profile}});
        text << "\n  " << c << " x [dim " << p.dim() << ", key " << p.digest() << ", ranks " << join_ints(profile, " ")
             << "]";
      }
      emit(out, opt, {{"expr", s.str()}, {"terms", terms}}, text.str());
    } else if (flag->parsed()) {
      auto f = flag_of(parse_expression(expr, Ambient::RP));
      json entries = json::array();
      std::ostringstream text;
      for (unsigned m = 0; m < f.entries().size(); ++m) {
        auto S = polytope::FlagVector::set_of(m);
        entries.push_back({{"S", S}, {"value", f.entries()[m].str()}});
        text << "f{" << join_ints(S) << "} = " << f.entries()[m] << "\n";
      }
      std::string t = text.str();
      if (!t.empty()) t.pop_back();
      emit(out, opt, {{"dim", f.dim()}, {"flags", entries}}, t);
    } else if (fpoly->parsed()) {
      FormalSum s = parse_expression(expr, Ambient::P);
      if (route == "operator") {
        const int rv = r >= 0 ? r : homogeneous_dim(s);
        qsym::MultiPoly total(rv);
        for (auto& [p, c] : s.terms()) total += c * transforms::f_poly_operator_route(p, rv);
        emit(out, opt, {{"r", rv}, {"poly", total.str()}}, total.str());
      } else {
        auto f = transforms::f_poly(s);
        if (r >= 0) {
          auto e = qsym::expand(f, r);
          emit(out, opt, {{"r", r}, {"poly", e.str()}}, e.str());
        } else {
          emit(out, opt, json::parse(f.json()), f.str());
        }
      }
    } else if (ehr->parsed()) {
      auto f = transforms::ehrenborg_F(parse_expression(expr, Ambient::RP));
      emit(out, opt, json::parse(f.json()), f.str());
    } else if (frp->parsed()) {
      auto f = transforms::f_RP(parse_expression(expr, Ambient::RP));
      emit(out, opt, json::parse(f.json()), f.str());
    } else if (lyn->parsed()) {
      if (k_table > 0) {
        auto series = lyndon::series_exponents(lyndon::fibonacci_series(k_table), k_table);
        json rows = json::array();
        std::ostringstream text;
        text << "n  k_n(1,2)  k_n(odd)  k_n(series)  k_n(moebius)  N_n";
        for (int m = 1; m <= k_table; ++m) {
          Int a = lyndon::count_lyndon(lyndon::Alphabet::of({1, 2}), m), b = lyndon::odd_generator_count(m);
          Int c = series[m], d = lyndon::k_via_moebius(m), e = lyndon::odd_partition_count(m);
          rows.push_back({{"n", m}, {"lyndon_12", a.str()}, {"odd", b.str()}, {"series", c.str()},
                          {"moebius", d.str()}, {"N", e.str()}});
          text << "\n" << m << "  " << a << "  " << b << "  " << c << "  " << d << "  " << e;
        }
        emit(out, opt, {{"k_table", rows}}, text.str());
      } else {
        if (weight < 1) throw UsageError("lyndon needs --weight or --k-table");
        auto words = lyndon::lyndon_words(parse_alphabet(alphabet), weight);
        std::ostringstream text;
        for (auto& w : words) text << "[" << join_ints(w) << "]\n";
        text << words.size() << " words";
        emit(out, opt, {{"weight", weight}, {"words", words}, {"count", words.size()}}, text.str());
      }
    } else if (bbm->parsed()) {
      const auto& b = transforms::bb_basis(n);
      json rows = json::array();
      std::ostringstream text;
      text << "rows: Omega^" << n << " words; columns: S in Psi^" << n << "\n      ";
      for (auto& S : b.psi) text << " {" << join_ints(S) << "}";
      for (std::size_t i = 0; i < b.matrix.size(); ++i) {
        rows.push_back({{"word", b.omega_words[i]}, {"flags", strings(b.matrix[i])}});
        text << "\n" << b.omega_words[i];
        for (auto& x : b.matrix[i]) text << " " << x;
      }
      json j{{"n", n}, {"columns", b.psi}, {"rows", rows}};
      if (det) {
        Int d = transforms::bb_det(n);
        j["det"] = d.str();
        text << "\ndet = " << d;
      }
      emit(out, opt, j, text.str());
    } else if (proj->parsed()) {
      FormalSum x = transforms::project_bb(parse_expression(expr, Ambient::P), dim);
      emit(out, opt, {{"dim", dim}, {"projection", x.str()}}, x.str());
    } else if (verify->parsed()) {
      Report rep = run_suite(suite, opt.jobs);
      out << (opt.json ? rep.json() + "\n" : rep.text());
      if (rep.failed()) status = kVerifyFailed;
    } else if (cache->parsed()) {
      CacheStats st = action == "save" ? save_cache(path) : load_cache(path);
      emit(out, opt, {{"action", action}, {"path", path}, {"polytopes", st.polytopes}, {"bb_tables", st.bb_tables}},
           action + " " + path + ": " + std::to_string(st.polytopes) + " polytopes, " + std::to_string(st.bb_tables) +
               " BB tables");
    }

    if (!opt.cache.empty()) save_cache(opt.cache);
    return status;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << "\n";
    return kIOError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIOError;
  }
}

}  // namespace polyring::cli
