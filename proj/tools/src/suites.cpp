#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "catalogue.hpp"
#include "identities.hpp"
#include "polyring/lyndon.hpp"
#include "polyring/transforms.hpp"

namespace polyring::cli {

using polytope::Polytope;
using qsym::QSymFunction;
using ring::Ambient;
using ring::FormalSum;

int Report::failed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](auto& c) { return !c.pass; }));
}

std::string Report::json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::json::array();
  for (auto& c : checks) j["checks"].push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  j["failed"] = failed();
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

std::string Report::text() const {
  std::ostringstream os;
  for (auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << suite << ": " << checks.size() - failed() << "/" << checks.size() << " passed in " << static_cast<long>(elapsed_ms)
     << " ms\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"phi-unit", "dehn-sommerville", "image-equations", "join-cone", "comodule",
                                              "operators", "lyndon-counts", "bb", "appendix-c"};
  return names;
}

bool is_suite(const std::string& name) {
  auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<CheckResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) out[i] = tasks[i]();
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

namespace {

Task check(std::string name, std::function<bool()> body, std::string detail = "") {
  return [name = std::move(name), body = std::move(body), detail = std::move(detail)] {
    try {
      return CheckResult{name, body(), detail};
    } catch (const std::exception& e) {
      return CheckResult{name, false, std::string("exception: ") + e.what()};
    }
  };
}

FormalSum rp(const Polytope& p) { return FormalSum(Ambient::RP, p); }
FormalSum pp(const Polytope& p) { return FormalSum(Ambient::P, p); }

std::vector<Task> phi_unit_tasks() {
  std::vector<Task> t;
  for (auto& [name, p] : catalogue()) {
    t.push_back(check("phi-unit P " + name, [p] { return phi_unit(p, Ambient::P); }));
    t.push_back(check("phi-unit RP " + name, [p] { return phi_unit(p, Ambient::RP); }));
  }
  return t;
}

std::vector<Task> dehn_sommerville_tasks() {
  std::vector<Task> t;
  for (auto& [name, p] : catalogue())
    if (p.dim() >= 1) t.push_back(check("bbr " + name, [p] { return transforms::dehn_sommerville_check(p); }));
  t.push_back(check("bbr rejects a perturbed simplex(3)", [] {
    auto e = polytope::simplex(3).flag().entries();
    e[1] += 1;
    return !transforms::dehn_sommerville_check(polytope::FlagVector(3, e));
  }));
  return t;
}

std::vector<Task> image_equation_tasks() {
  using transforms::Flavor;
  std::vector<Task> t;
  for (int n = 1; n <= 4; ++n)
    for (auto& [w, p] : omega_polytopes(n)) {
      const int r = n + 1;
      t.push_back(check("f " + w, [p, n, r] {
        return transforms::verify_image_equations(qsym::expand(transforms::f_poly(pp(p)), r), n, Flavor::P);
      }));
      t.push_back(check("f_RP " + w, [p, n, r] {
        return transforms::verify_image_equations(qsym::expand(transforms::f_RP(rp(p)), r), n, Flavor::RP);
      }));
      t.push_back(check("F " + w, [p, n, r] {
        return transforms::verify_image_equations(qsym::expand(transforms::ehrenborg_F(rp(p)), r), n, Flavor::F);
      }));
      t.push_back(check("mutations of " + w + " break an equation", [p, n, r] {
        const auto& base = p.flag().entries();
        for (std::size_t m = 1; m < base.size(); ++m) {
          auto e = base;
          e[m] += 1;
          polytope::FlagVector f(n, e);
          if (transforms::verify_image_equations(qsym::expand(transforms::f_poly(f), r), n, Flavor::P)) return false;
          if (transforms::verify_image_equations(qsym::expand(transforms::f_RP(f), r), n, Flavor::RP)) return false;
          if (transforms::verify_image_equations(qsym::expand(transforms::ehrenborg_F(f), r), n, Flavor::F))
            return false;
        }
        return true;
      }, "every nonempty S, all three flavours"));
    }
  return t;
}

std::vector<Task> join_cone_tasks() {
  std::vector<Task> t;
  std::vector<NamedPolytope> small{{"pt", polytope::point()},
                                   {"cube(1)", polytope::cube(1)},
                                   {"simplex(2)", polytope::simplex(2)},
                                   {"cube(2)", polytope::cube(2)}};
  for (auto& [a, p] : small)
    for (auto& [b, q] : small) {
      t.push_back(check("join formula " + a + " * " + b, [p, q] { return join_formula(p, q); }));
      t.push_back(check("f_RP multiplicative " + a + " * " + b, [p, q] { return frp_multiplicative(p, q); }));
    }
  for (auto& [name, p] : catalogue()) {
    t.push_back(check("cone formula " + name, [p] { return cone_formula(p); }));
    t.push_back(check("f_RP = F* + a f " + name, [p] { return frp_identity(p); }));
    if (p.dim() <= 3)
      t.push_back(check("theta invariance of F " + name, [p] {
        QSymFunction f = transforms::ehrenborg_F(rp(p));
        for (int k = 1; k <= p.dim() + 1; ++k)
          if (!qsym::theta_invariant(f, k, p.dim() + 1)) return false;
        return true;
      }));
  }
  for (int n = 1; n <= 4; ++n)
    for (auto& [name, p] : std::vector<NamedPolytope>{{"simplex(" + std::to_string(n) + ")", polytope::simplex(n)},
                                                      {"cube(" + std::to_string(n) + ")", polytope::cube(n)}})
      t.push_back(check("simple collapse " + name, [p] {
        auto f = transforms::f_poly(pp(p));
        const int r = std::max(2, p.dim());
        auto f1 = qsym::expand(f, 1);
        std::vector<qsym::MultiPoly> im{qsym::MultiPoly::alpha(r), qsym::expand(qsym::sigma(1), r)};
        return f1.substitute(im) == qsym::expand(f, r);
      }));
  t.push_back(check("no simple collapse for C cube(2)", [] {
    auto f = transforms::f_poly(pp(polytope::cone(polytope::cube(2))));
    auto f1 = qsym::expand(f, 1);
    std::vector<qsym::MultiPoly> im{qsym::MultiPoly::alpha(3), qsym::expand(qsym::sigma(1), 3)};
    return f1.substitute(im) != qsym::expand(f, 3);
  }));
  t.push_back(check("f separates flag vectors on the catalogue", [] {
    auto cat = catalogue();
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = i + 1; j < cat.size(); ++j) {
        bool same_flag = cat[i].second.flag() == cat[j].second.flag();
        bool same_f = transforms::f_poly(pp(cat[i].second)) == transforms::f_poly(pp(cat[j].second));
        if (same_flag != same_f) return false;
      }
    return true;
  }));
  return t;
}

std::vector<Task> comodule_tasks() {
  std::vector<Task> t;
  using namespace polytope;
  std::vector<NamedPolytope> hopf{{"pt", point()}, {"cube(1)", cube(1)}, {"simplex(2)", simplex(2)}, {"cube(2)", cube(2)}};
  for (auto& [name, p] : hopf) t.push_back(check("antipode axiom " + name, [p] { return antipode_axiom(p); }));
  std::vector<NamedPolytope> co{{"simplex(2)", simplex(2)}, {"cube(2)", cube(2)}, {"simplex(3)", simplex(3)}};
  for (auto& [name, p] : co) {
    t.push_back(check("coassociativity " + name, [p] { return comodule_coassociative(p); }));
    t.push_back(check("counit " + name, [p] { return comodule_counit(p); }));
  }
  for (auto& [a, p] : co)
    for (auto& [b, q] : co)
      if (p.dim() + q.dim() <= 5)
        t.push_back(check("multiplicative " + a + " x " + b, [p, q] { return comodule_multiplicative(p, q); }));
  for (auto& name : {"simplex(2)", "simplex(3)"}) {
    Polytope p = std::string(name) == "simplex(2)" ? simplex(2) : simplex(3);
    t.push_back(check(std::string("(1 x F) Delta_RP = Delta_L ") + name, [p] { return comodule_interrelation(p); }));
  }
  for (auto& [name, p] : catalogue(3))
    t.push_back(check("F*(l_alpha P) = f(P) " + name, [p] { return F_star_of_l_alpha(p); }));
  return t;
}

std::vector<Task> operator_tasks() {
  std::vector<Task> t;
  auto cat = catalogue(3);
  for (auto& [name, p] : cat) {
    for (Ambient a : {Ambient::P, Ambient::RP}) {
      const std::string tag = a == Ambient::P ? " P " : " RP ";
      FormalSum s(a, p);
      t.push_back(check("[d,C]" + tag + name, [s] { return commutator_d_C(s); }));
      t.push_back(check("Phi C" + tag + name, [s] { return phi_C(s); }));
      t.push_back(check("Phi B" + tag + name, [s] { return phi_B(s); }));
      t.push_back(check("Phi [B,C]" + tag + name, [s] { return phi_BC(s); }));
      if (a == Ambient::RP) t.push_back(check("Phi A" + tag + name, [s] { return phi_A(s); }));
    }
    t.push_back(check("qsym C, B, A on f " + name, [p] { return qsym_operators_P(p); }));
    t.push_back(check("qsym C, B, A on f_RP and F* " + name, [p] { return qsym_operators_RP(p); }));
  }
  FormalSum e = rp(polytope::empty());
  t.push_back(check("[d,C] RP empty", [e] { return commutator_d_C(e); }));
  t.push_back(check("Phi C RP empty", [e] { return phi_C(e); }));
  t.push_back(check("Phi B RP empty", [e] { return phi_B(e); }));
  t.push_back(check("Phi A RP empty", [e] { return phi_A(e); }));
  t.push_back(check("Phi [B,C] RP empty", [e] { return phi_BC(e); }));
  return t;
}

std::vector<Task> lyndon_tasks() {
  using namespace lyndon;
  std::vector<Task> t;
  t.push_back(check("k_1..k_7 by three routes", [] {
    const std::vector<Int> expect{1, 1, 1, 1, 2, 2, 4};
    auto series = series_exponents(fibonacci_series(7), 7);
    for (int n = 1; n <= 7; ++n) {
      if (count_lyndon(Alphabet::of({1, 2}), n) != expect[n - 1]) return false;
      if (odd_generator_count(n) != expect[n - 1]) return false;
      if (series[n] != expect[n - 1]) return false;
    }
    return true;
  }));
  t.push_back(check("Moebius formula agrees for n <= 12", [] {
    auto series = series_exponents(fibonacci_series(12), 12);
    for (int n = 1; n <= 12; ++n)
      if (k_via_moebius(n) != series[n]) return false;
    return true;
  }));
  t.push_back(check("counts agree for 3 <= n <= 12", [] {
    auto series = series_exponents(fibonacci_series(12), 12);
    for (int n = 3; n <= 12; ++n) {
      Int a = count_lyndon(Alphabet::of({1, 2}), n), b = count_lyndon(Alphabet::odd(), n);
      if (a != b || a != series[n]) return false;
    }
    return true;
  }));
  t.push_back(check("k_5, k_7, k_11 and N_6", [] {
    return k_prime(5) == 2 && k_prime(7) == 4 && k_prime(11) == 18 && odd_partition_count(6) == 4;
  }));
  t.push_back(check("k_{n+1} >= k_n >= N_n - 2 for n <= 12", [] {
    auto k = series_exponents(fibonacci_series(13), 13);
    for (int n = 1; n <= 12; ++n)
      if (k[n + 1] < k[n] || k[n] < odd_partition_count(n) - 2) return false;
    return true;
  }));
  t.push_back(check("truncated products", [] {
    auto v = [](std::vector<long> c) { return std::vector<Int>(c.begin(), c.end()); };
    return product_polynomial({1, 1}) == v({1, -1, -1, 1}) &&
           product_polynomial({1, 1, 1}) == v({1, -1, -1, 0, 1, 1, -1}) &&
           product_polynomial({1, 1, 1, 1}) == v({1, -1, -1, 0, 0, 2, 0, 0, -1, -1, 1}) &&
           product_polynomial({1, 1, 1, 1, 2}) ==
               v({1, -1, -1, 0, 0, 0, 2, 2, -1, -1, -2, -1, -1, 2, 2, 0, 0, 0, -1, -1, 1});
  }));
  return t;
}

std::vector<Task> bb_tasks() {
  std::vector<Task> t;
  t.push_back(check("K^2 = [[1,3],[1,4]]", [] {
    return transforms::bb_basis(2).matrix == transforms::IntMatrix{{1, 3}, {1, 4}};
  }));
  for (int n = 1; n <= 6; ++n)
    t.push_back(check("|det K^" + std::to_string(n) + "| = 1", [n] { return abs(transforms::bb_det(n)) == 1; }));
  t.push_back(check("|Psi^n| = |Omega^n| = c_n for n <= 10", [] {
    for (int n = 1; n <= 10; ++n) {
      Int c = lyndon::fibonacci(n);
      if (Int(transforms::psi_sets(n).size()) != c || Int(transforms::omega_words(n).size()) != c) return false;
    }
    return true;
  }));
  for (auto& [name, p] : catalogue())
    if (p.dim() >= 1)
      t.push_back(check("projection keeps f " + name, [p] {
        FormalSum x = transforms::project_bb(pp(p), p.dim());
        return transforms::f_poly(x) == transforms::f_poly(pp(p));
      }));
  t.push_back(check("bb_multiply(I, simplex(2)) keeps f", [] {
    auto x = transforms::bb_multiply(pp(polytope::cube(1)), pp(polytope::simplex(2)));
    return transforms::f_poly(x) == transforms::f_poly(pp(polytope::product(polytope::cube(1), polytope::simplex(2))));
  }));
  return t;
}

QSymFunction M(std::initializer_list<int> w, long c = 1) { return QSymFunction::monomial(qsym::Composition(w), c); }

std::vector<Task> explicit_image_tasks() {
  using namespace polytope;
  std::vector<Task> t;
  auto F = [](const FormalSum& s) { return transforms::ehrenborg_F(s); };
  auto s1 = qsym::sigma(1), s2 = qsym::sigma(2), s3 = qsym::sigma(3), s4 = qsym::sigma(4);
  Polytope I = cube(1), D2 = simplex(2), I2 = cube(2), D3 = simplex(3), CI2 = cone(I2), BD2 = bipyramid(D2);
  t.push_back(check("F(pt) = M[1]", [=] { return F(rp(point())) == M({1}); }));
  t.push_back(check("F(I) = M[2] + 2M[1,1]", [=] { return F(rp(I)) == M({2}) + M({1, 1}, 2) && F(rp(I)) == s1 * s1; }));
  for (int m = 3; m <= 5; ++m)
    t.push_back(check("F(polygon(" + std::to_string(m) + "))", [=] {
      return F(rp(polygon(m))) == M({3}) + Int(m) * (s1 * s2 - s3);
    }));
  t.push_back(check("F(4 D2 - 3 I2) = M[3]", [=] { return F(4 * rp(D2) - 3 * rp(I2)) == M({3}); }));
  t.push_back(check("F(I2 - D2) = s1 s2 - s3", [=] { return F(rp(I2) - rp(D2)) == s1 * s2 - s3; }));
  t.push_back(check("F(5 D3 - 6 CI2 + 2 BD2) = M[4] + 2M[3,1]", [=] {
    return F(5 * rp(D3) - 6 * rp(CI2) + 2 * rp(BD2)) == M({4}) + M({3, 1}, 2);
  }));
  t.push_back(check("F(-D3 + 3 CI2 - 2 BD2) = M[1,3] - M[3,1]", [=] {
    return F(-rp(D3) + 3 * rp(CI2) - 2 * rp(BD2)) == M({1, 3}) - M({3, 1});
  }));
  t.push_back(check("F(-CI2 + BD2) = M[2,2] + M[3,1] + 2(s1 s3 - 2 s4)", [=] {
    return F(-rp(CI2) + rp(BD2)) == M({2, 2}) + M({3, 1}) + Int(2) * (s1 * s3 - Int(2) * s4);
  }));
  return t;
}

}  // namespace

Report run_suite(const std::string& name, int jobs) {
  std::vector<Task> tasks;
  if (name == "phi-unit")
    tasks = phi_unit_tasks();
  else if (name == "dehn-sommerville")
    tasks = dehn_sommerville_tasks();
  else if (name == "image-equations")
    tasks = image_equation_tasks();
  else if (name == "join-cone")
    tasks = join_cone_tasks();
  else if (name == "comodule")
    tasks = comodule_tasks();
  else if (name == "operators")
    tasks = operator_tasks();
  else if (name == "lyndon-counts")
    tasks = lyndon_tasks();
  else if (name == "bb")
    tasks = bb_tasks();
  else if (name == "appendix-c")
    tasks = explicit_image_tasks();
  else
    throw DomainError("unknown suite: " + name);
  auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = name;
  r.checks = run_tasks(tasks, jobs);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace polyring::cli
