#include "polyring/transforms.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace polyring::transforms {

using qsym::Composition;
using ring::Ambient;

namespace {

std::vector<int> sorted_set(unsigned mask) {
  auto s = FlagVector::set_of(mask);
  std::sort(s.begin(), s.end());
  return s;
}

void require_nonempty(const FormalSum& s) {
  for (auto& [p, c] : s.terms())
    if (p.is_empty()) throw DomainError("the empty polytope has no f-polynomial");
}

}  // namespace

QSymFunction f_poly(const FlagVector& f) {
  const int n = f.dim();
  if (n < 0) throw DomainError("the empty polytope has no f-polynomial");
  QSymFunction out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const Int& v = f.at_mask(mask);
    if (v == 0) continue;
    auto S = sorted_set(mask);
    if (S.empty()) {
      out.add({}, v, n);
      continue;
    }
    Composition w{n - S.back()};
    for (std::size_t i = S.size() - 1; i > 0; --i) w.push_back(S[i] - S[i - 1]);
    out.add(w, v, S.front());
  }
  return out;
}

QSymFunction f_poly(const FormalSum& s) {
  require_nonempty(s);
  QSymFunction out;
  for (auto& [p, c] : s.terms()) out += c * f_poly(p.flag());
  return out;
}

MultiPoly f_poly_operator_route(const Polytope& p, int r) {
  if (r < 0) throw DomainError("variable count must be >= 0");
  if (p.is_empty()) throw DomainError("the empty polytope has no f-polynomial");
  // exponent vector (alpha slot unused) -> d_{j_m} ... d_{j_1} P
  std::map<std::vector<int>, FormalSum> states;
  states.emplace(std::vector<int>(r + 1, 0), FormalSum(Ambient::P, p));
  for (int m = 1; m <= r; ++m) {
    std::map<std::vector<int>, FormalSum> next;
    for (auto& [e, s] : states) {
      for (int j = 0; j <= s.max_dim(); ++j) {
        FormalSum t = j ? ring::d_k(s, j) : s;
        if (t.is_zero()) continue;
        auto e2 = e;
        e2[m] = j;
        next.emplace(std::move(e2), std::move(t));
      }
    }
    states = std::move(next);
  }
  MultiPoly out(r);
  for (auto& [e, s] : states) {
    const AlphaPoly xi = ring::xi_alpha(s);
    for (auto& [power, c] : xi.coeffs()) {
      auto e2 = e;
      e2[0] = power;
      out.add(e2, c);
    }
  }
  return out;
}

QSymFunction ehrenborg_F(const FlagVector& f) {
  const int n = f.dim();
  if (n < 0) return QSymFunction::one();
  QSymFunction out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const Int& v = f.at_mask(mask);
    if (v == 0) continue;
    auto S = sorted_set(mask);
    if (S.empty()) {
      out.add({n + 1}, v);
      continue;
    }
    Composition w{S.front() + 1};
    for (std::size_t i = 1; i < S.size(); ++i) w.push_back(S[i] - S[i - 1]);
    w.push_back(n - S.back());
    out.add(w, v);
  }
  return out;
}

QSymFunction ehrenborg_F(const FormalSum& s) {
  QSymFunction out;
  for (auto& [p, c] : s.terms()) out += c * (p.is_empty() ? QSymFunction::one() : ehrenborg_F(p.flag()));
  return out;
}

QSymFunction ehrenborg_F_chains(const Polytope& p) {
  const auto& L = p.lattice();
  std::vector<std::map<Composition, Int>> chains(L.size());
  chains[L.bottom()][{}] = 1;
  for (auto& row : L.by_rank())
    for (int y : row) {
      if (y == L.bottom()) continue;
      L.downset(y).for_each([&](std::size_t x) {
        if (static_cast<int>(x) == y) return;
        const int step = L.rank(y) - L.rank(static_cast<int>(x));
        for (auto& [w, c] : chains[x]) {
          Composition w2 = w;
          w2.push_back(step);
          chains[y][w2] += c;
        }
      });
    }
  QSymFunction out;
  for (auto& [w, c] : chains[L.top()]) out.add(w, c);
  return out;
}

QSymFunction ehrenborg_F_coaction(const FormalSum& s) {
  QSymFunction out;
  for (auto& [w, d] : ring::coaction_R(s.in(Ambient::RP))) out.add(w, d.coeff(polytope::empty()));
  return out;
}

QSymFunction F_star(const FormalSum& s) { return qsym::star(ehrenborg_F(s)); }

QSymFunction f_RP(const FlagVector& f) {
  QSymFunction out = qsym::star(ehrenborg_F(f));
  if (f.dim() >= 0) out += QSymFunction::alpha_power(1) * f_poly(f);
  return out;
}

QSymFunction f_RP(const FormalSum& s) {
  QSymFunction out;
  for (auto& [w, d] : ring::coaction_R(s.in(Ambient::RP))) {
    Composition rev(w.rbegin(), w.rend());
    const AlphaPoly eps = ring::epsilon_alpha(d);
    for (auto& [power, c] : eps.coeffs()) out.add(rev, c, power);
  }
  return out;
}

EquationResult image_equations(const MultiPoly& g, int n, Flavor flavor) {
  const int r = g.r();
  const int degree = flavor == Flavor::P ? n : n + 1;
  if (!g.is_homogeneous(degree)) throw DomainError("image equations need a homogeneous polynomial of the right degree");
  if (r < n) throw DomainError("image equations need r >= n");
  auto identity = [&] {
    std::vector<MultiPoly> im;
    for (int i = 0; i <= r; ++i) im.push_back(MultiPoly::var(r, i));
    return im;
  };
  const MultiPoly zero(r);
  EquationResult res;
  for (int q = 1; q < r; ++q) {
    auto lhs = identity(), rhs = identity();
    lhs[q + 1] = Int(-1) * MultiPoly::t(r, q);
    rhs[q] = zero;
    rhs[q + 1] = zero;
    if (g.substitute(lhs) != g.substitute(rhs)) {
      res.ok = false;
      res.failed.push_back("type1 q=" + std::to_string(q));
    }
  }
  if (flavor != Flavor::F && r >= 1) {
    auto lhs = identity(), rhs = identity();
    lhs[0] = Int(-1) * MultiPoly::alpha(r);
    lhs[r] = MultiPoly::alpha(r);
    if (flavor == Flavor::RP) rhs[0] = zero;
    rhs[r] = zero;
    if (g.substitute(lhs) != g.substitute(rhs)) {
      res.ok = false;
      res.failed.push_back("alpha");
    }
  }
  return res;
}

bool verify_image_equations(const MultiPoly& g, int n, Flavor flavor) { return image_equations(g, n, flavor).ok; }

bool dehn_sommerville_check(const FlagVector& f) {
  const int n = f.dim();
  if (n < 0) return true;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    auto E = sorted_set(mask);
    E.insert(E.begin(), -1);
    E.push_back(n);
    for (std::size_t t = 0; t + 1 < E.size(); ++t) {
      const int i = E[t], k = E[t + 1];
      if (k - i < 2) continue;
      Int lhs = 0;
      for (int j = i + 1; j <= k - 1; ++j) {
        const Int& v = f.at_mask(mask | (1u << j));
        lhs += ((j - i - 1) % 2) ? -v : v;
      }
      Int rhs = ((k - i - 1) % 2) ? 2 * f.at_mask(mask) : Int(0);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool dehn_sommerville_check(const Polytope& p) { return dehn_sommerville_check(p.flag()); }

Int determinant(const IntMatrix& m0) {
  IntMatrix m = m0;
  const std::size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw DomainError("determinant needs a square matrix");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

int rank(RatMatrix m) {
  int r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Rational> solve(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("solve: size mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw DomainError("solve: singular system");
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::vector<std::vector<int>> psi_sets(int n) {
  if (n < 1) throw DomainError("psi_sets needs n >= 1");
  std::vector<std::vector<int>> out;
  const unsigned bits = static_cast<unsigned>(n - 1);
  for (unsigned mask = 0; mask < (1u << bits); ++mask) {
    if (mask & (mask >> 1)) continue;
    out.push_back(sorted_set(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> omega_words(int n) {
  if (n < 1) throw DomainError("omega_words needs n >= 1");
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n - 1) {
      out.push_back(cur + "CC");
      return;
    }
    cur.push_back('C');
    self(self);
    cur.back() = 'B';
    if (cur.size() < 2 || cur[cur.size() - 2] != 'B') self(self);
    cur.pop_back();
  };
  rec(rec);
  // C sorts before B
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](char x, char y) { return (x == 'C' ? 0 : 1) < (y == 'C' ? 0 : 1); });
  });
  return out;
}

namespace {

struct BBCache {
  std::mutex mu;
  std::map<int, std::shared_ptr<const BBBasis>> table;
};

BBCache& bb_cache() {
  static BBCache c;
  return c;
}

BBBasis basis_skeleton(int n) {
  BBBasis b;
  b.n = n;
  b.psi = psi_sets(n);
  b.omega_words = omega_words(n);
  for (auto& w : b.omega_words) b.omega.push_back(polytope::from_word(w));
  return b;
}

}  // namespace

const BBBasis& bb_basis(int n) {
  if (n < 1 || n > 8) throw DomainError("bb_basis supports 1 <= n <= 8");
  BBCache& cache = bb_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.table.find(n);
    if (it != cache.table.end()) return *it->second;
  }
  auto b = std::make_shared<BBBasis>(basis_skeleton(n));
  for (auto& q : b->omega) {
    std::vector<Int> row;
    for (auto& S : b->psi) row.push_back(q.flag_number(S));
    b->matrix.push_back(std::move(row));
  }
  std::lock_guard lock(cache.mu);
  return *cache.table.emplace(n, std::move(b)).first->second;
}

Int bb_det(int n) { return determinant(bb_basis(n).matrix); }

void install_bb_basis(int n, const IntMatrix& matrix) {
  if (n < 1 || n > 8) throw DomainError("bb_basis supports 1 <= n <= 8");
  auto b = std::make_shared<BBBasis>(basis_skeleton(n));
  if (matrix.size() != b->omega.size()) throw DomainError("cached BB table has the wrong shape");
  for (auto& row : matrix)
    if (row.size() != b->psi.size()) throw DomainError("cached BB table has the wrong shape");
  b->matrix = matrix;
  BBCache& cache = bb_cache();
  std::lock_guard lock(cache.mu);
  cache.table.try_emplace(n, std::move(b));
}

std::vector<int> cached_bb_dims() {
  BBCache& cache = bb_cache();
  std::lock_guard lock(cache.mu);
  std::vector<int> out;
  for (auto& [n, b] : cache.table) out.push_back(n);
  return out;
}

FormalSum project_bb(const FormalSum& s, int n) {
  require_nonempty(s);
  for (auto& [p, c] : s.terms())
    if (p.dim() != n) throw DomainError("project_bb needs a homogeneous sum of dimension n");
  if (n == 0) return s.in(Ambient::P);
  const BBBasis& b = bb_basis(n);
  const std::size_t m = b.psi.size();
  RatMatrix kt(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) kt[j][i] = b.matrix[i][j];
  std::vector<Rational> rhs(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (auto& [p, c] : s.terms()) rhs[j] += Rational(c * p.flag_number(b.psi[j]));
  auto x = solve(kt, rhs);
  FormalSum out(Ambient::P);
  for (std::size_t i = 0; i < m; ++i) out.add(b.omega[i], as_integer(x[i]));
  return out;
}

FormalSum bb_multiply(const FormalSum& x, const FormalSum& y) {
  if (!x.is_homogeneous() || !y.is_homogeneous()) throw DomainError("bb_multiply needs homogeneous inputs");
  if (x.is_zero() || y.is_zero()) return FormalSum(Ambient::P);
  FormalSum prod = ring::mul_product(x.in(Ambient::P), y.in(Ambient::P));
  FormalSum out = project_bb(prod, x.max_dim() + y.max_dim());
  if (f_poly(out) != f_poly(x) * f_poly(y)) throw std::logic_error("bb_multiply: f is not multiplicative");
  return out;
}

namespace {

// g expanded in r = deg + 2 variables with substitution helpers.
struct Expanded {
  int r;
  MultiPoly g;
  explicit Expanded(const QSymFunction& f) : r(std::max(f.max_degree(), 0) + 2), g(qsym::expand(f, r)) {}

  MultiPoly t(int i) const { return i <= r ? MultiPoly::t(r, i) : MultiPoly(r); }
  MultiPoly alpha() const { return MultiPoly::alpha(r); }
  MultiPoly sigma1() const {
    MultiPoly s(r);
    for (int i = 1; i <= r; ++i) s += t(i);
    return s;
  }
  // g(a, t_s, t_{s+1}, ...)
  MultiPoly shifted(const MultiPoly& a, int s) const {
    std::vector<MultiPoly> im{a};
    for (int i = 1; i <= r; ++i) im.push_back(t(s + i - 1));
    return g.substitute(im);
  }
  // g(a, t_1, ..., t_{m-1}, 0, ...)
  MultiPoly truncated(const MultiPoly& a, int m) const {
    std::vector<MultiPoly> im{a};
    for (int i = 1; i <= r; ++i) im.push_back(i < m ? t(i) : MultiPoly(r));
    return g.substitute(im);
  }
};

QSymFunction constant_term(const QSymFunction& g) { return QSymFunction::monomial({}, g.coeff({}, 0)); }

// t_1 g + sum_{m=2}^{r+1} (t_m + t_{m-1}) g(alpha, t_m, t_{m+1}, ...)
MultiPoly a_core(const Expanded& e) {
  MultiPoly out = e.t(1) * e.g;
  for (int m = 2; m <= e.r + 1; ++m) out += (e.t(m) + e.t(m - 1)) * e.shifted(e.alpha(), m);
  return out;
}

}  // namespace

QSymFunction C_qsym(const QSymFunction& g) {
  Expanded e(g);
  MultiPoly out = (e.alpha() + e.sigma1()) * e.g;
  for (int m = 1; m <= e.r; ++m) out += e.t(m) * e.truncated(e.t(m), m);
  return qsym::lift(out);
}

QSymFunction A_qsym(const QSymFunction& g) {
  Expanded e(g);
  MultiPoly out = e.alpha() * e.truncated(e.alpha(), 1) + a_core(e);
  return qsym::lift(out);
}

QSymFunction B_qsym(const QSymFunction& g) { return Int(2) * C_qsym(g) - A_qsym(g); }

QSymFunction C_RP_qsym(const QSymFunction& g) {
  return (QSymFunction::alpha_power(1) + qsym::sigma(1)) * g;
}

QSymFunction A_RP_qsym(const QSymFunction& g) { return A_qsym(g) - qsym::sigma(1) * constant_term(g); }

QSymFunction B_RP_qsym(const QSymFunction& g) { return Int(2) * C_RP_qsym(g) - A_RP_qsym(g); }

QSymFunction C0_qsym(const QSymFunction& g) { return qsym::sigma(1) * g; }

QSymFunction A0_qsym(const QSymFunction& g) {
  if (!g.alpha_free()) throw DomainError("A0 acts on alpha-free functions");
  Expanded e(g);
  return qsym::lift(a_core(e)) - qsym::sigma(1) * constant_term(g);
}

QSymFunction B0_qsym(const QSymFunction& g) { return Int(2) * C0_qsym(g) - A0_qsym(g); }

Rational PhiAlpha::value(const nc::NCPolynomial& d) const {
  Rational s = 0;
  for (auto& [w, c] : d.terms()) {
    const int k = qsym::weight(w);
    if (k <= n) s += c * by_weight[k](w);
  }
  return s;
}

namespace {

Int coefficient_sum(const FormalSum& s) {
  Int v = 0;
  for (auto& [p, c] : s.terms()) v += c;
  return v;
}

nc::DualFunctional phi_component(const Polytope& p, int k) {
  nc::DualFunctional psi(k);
  FormalSum s(Ambient::P, p);
  for (auto& w : nc::basis_words(k)) psi.set(w, Rational(coefficient_sum(ring::apply_operator(w, s))));
  return psi;
}

}  // namespace

PhiAlpha phi_alpha(const Polytope& p) {
  if (p.is_empty()) throw DomainError("phi_alpha is defined on nonempty polytopes");
  PhiAlpha out;
  out.n = p.dim();
  for (int k = 0; k <= out.n; ++k) out.by_weight.push_back(phi_component(p, k));
  return out;
}

nc::DualFunctional phi0(const Polytope& p) {
  if (p.is_empty()) throw DomainError("phi0 is defined on nonempty polytopes");
  return phi_component(p, p.dim());
}

nc::DualFunctional phi0(const FormalSum& s) {
  require_nonempty(s);
  if (!s.is_homogeneous()) throw DomainError("phi0 needs a homogeneous sum");
  if (s.is_zero()) return nc::DualFunctional(0);
  const int n = s.max_dim();
  std::map<nc::Word, Rational> acc;
  for (auto& [p, c] : s.terms()) {
    const nc::DualFunctional psi = phi0(p);
    for (auto& [w, v] : psi.values()) acc[w] += Rational(c) * v;
  }
  nc::DualFunctional out(n);
  for (auto& [w, v] : acc) out.set(w, v);
  return out;
}

bool phi_image_law(const PhiAlpha& phi) {
  const int n = phi.n;
  for (int w = 0; w <= n; ++w)
    for (auto& d : nc::basis_words(w)) {
      Rational lhs = 0;
      for (int k = 0; k <= n - w; ++k) {
        nc::Word zd = d;
        if (k) zd.insert(zd.begin(), k);
        Rational v = phi.by_weight[w + k](zd);
        lhs += ((n - w - k) % 2) ? -v : v;
      }
      if (lhs != phi.by_weight[w](d)) return false;
    }
  return true;
}

std::pair<Int, FormalSum> apply_nc(const nc::NCPolynomial& a, const FormalSum& s) {
  Int l = 1;
  for (auto& [w, c] : a.terms()) {
    Int den = boost::multiprecision::denominator(c);
    l = l / boost::multiprecision::gcd(l, den) * den;
  }
  FormalSum out(s.ambient());
  for (auto& [w, c] : a.terms()) out += as_integer(c * l) * ring::apply_operator(w, s);
  return {l, out};
}

}  // namespace polyring::transforms
