#include "polyring/ncalg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace polyring::nc {

NCPolynomial NCPolynomial::word(const Word& w, const Rational& c) {
  NCPolynomial p;
  p.add(w, c);
  return p;
}

bool NCPolynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](auto& t) { return is_integer(t.second); });
}

void NCPolynomial::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  for (int x : w)
    if (x < 1) throw DomainError("generator index must be >= 1");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational NCPolynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPolynomial operator*(const Rational& c, const NCPolynomial& a) {
  NCPolynomial r;
  for (auto& [w, v] : a.terms_) r.add(w, c * v);
  return r;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) { return nc_multiply(a, b); }

std::string NCPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [w, c0] : terms_) {
    Rational c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string body;
    for (std::size_t i = 0; i < w.size(); ++i) body += (i ? "*" : "") + std::string("Z[") + std::to_string(w[i]) + "]";
    if (body.empty())
      out += to_string(c);
    else
      out += (c == 1 ? "" : to_string(c) + "*") + body;
  }
  return out;
}

NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r;
  for (auto& [u, c] : a.terms())
    for (auto& [v, d] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, c * d);
    }
  return r;
}

NCTensor leibnitz_coproduct(const NCPolynomial& a) {
  NCTensor out;
  for (auto& [w, c] : a.terms()) {
    // each letter Z_k splits as Z_i (x) Z_{k-i}
    std::vector<std::pair<Word, Word>> acc{{{}, {}}};
    for (int k : w) {
      std::vector<std::pair<Word, Word>> next;
      for (auto& [l, r] : acc)
        for (int i = 0; i <= k; ++i) {
          Word l2 = l, r2 = r;
          if (i) l2.push_back(i);
          if (k - i) r2.push_back(k - i);
          next.emplace_back(std::move(l2), std::move(r2));
        }
      acc = std::move(next);
    }
    for (auto& pr : acc) {
      auto [it, inserted] = out.try_emplace(pr, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

NCPolynomial tensor_multiply(const NCTensor& t) {
  NCPolynomial r;
  for (auto& [pr, c] : t) {
    Word w = pr.first;
    w.insert(w.end(), pr.second.begin(), pr.second.end());
    r.add(w, c);
  }
  return r;
}

Rational counit(const NCPolynomial& a) { return a.coeff({}); }

namespace {

// chi(Z_n) = -sum_{i<n} chi(Z_i) Z_{n-i}
const NCPolynomial& antipode_gen(int n) {
  static std::mutex mu;
  static std::vector<NCPolynomial> cache{NCPolynomial::one()};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    NCPolynomial s;
    for (int i = 0; i < m; ++i) s -= cache[i] * NCPolynomial::gen(m - i);
    cache.push_back(s);
  }
  return cache[n];
}

}  // namespace

NCPolynomial antipode(const NCPolynomial& a) {
  NCPolynomial r;
  for (auto& [w, c] : a.terms()) {
    NCPolynomial t = NCPolynomial::one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * NCPolynomial(antipode_gen(*it));
    r += c * t;
  }
  return r;
}

NCPolynomial euler_relation(int n) {
  NCPolynomial r;
  for (int i = 0; i <= n; ++i) {
    Word w;
    if (i) w.push_back(i);
    if (n - i) w.push_back(n - i);
    r.add(w, (i % 2) ? -1 : 1);
  }
  return r;
}

bool is_basis_word(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == 1) return false;
  return true;
}

std::vector<Word> basis_words(int n) {
  std::vector<Word> out;
  for (auto& w : qsym::compositions(n))
    if (is_basis_word(w)) out.push_back(w);
  return out;
}

namespace {

struct NormalFormMemo {
  std::shared_mutex mu;
  std::map<Word, NCPolynomial> table;
};

NormalFormMemo& nf_memo() {
  static NormalFormMemo m;
  return m;
}

NCPolynomial normal_form_word(const Word& w) {
  if (is_basis_word(w)) return NCPolynomial::word(w);
  NormalFormMemo& memo = nf_memo();
  {
    std::shared_lock lock(memo.mu);
    auto it = memo.table.find(w);
    if (it != memo.table.end()) return it->second;
  }
  std::size_t p = 1;
  while (w[p] != 1) ++p;
  const int m = w[p - 1];
  Word prefix(w.begin(), w.begin() + (p - 1));
  Word suffix(w.begin() + (p + 1), w.end());
  NCPolynomial middle;
  if (m == 1) {
    middle.add({2}, 2);
  } else {
    // Z_m Z_1 = (-1)^m [Z_1 Z_m - (1 + (-1)^{m+1}) Z_{m+1} - sum_{i=2}^{m-1} (-1)^i Z_i Z_{m+1-i}]
    Rational sign = (m % 2) ? -1 : 1;
    middle.add({1, m}, sign);
    middle.add({m + 1}, -sign * ((m % 2) ? 2 : 0));
    for (int i = 2; i <= m - 1; ++i) middle.add({i, m + 1 - i}, -sign * ((i % 2) ? -1 : 1));
  }
  NCPolynomial result;
  for (auto& [mw, c] : middle.terms()) {
    Word nw = prefix;
    nw.insert(nw.end(), mw.begin(), mw.end());
    nw.insert(nw.end(), suffix.begin(), suffix.end());
    result += c * normal_form_word(nw);
  }
  std::unique_lock lock(memo.mu);
  memo.table.emplace(w, result);
  return result;
}

}  // namespace

NCPolynomial normal_form_U(const NCPolynomial& a) {
  NCPolynomial r;
  for (auto& [w, c] : a.terms()) r += c * normal_form_word(w);
  return r;
}

Rational pairing(const qsym::QSymFunction& m, const NCPolynomial& a) {
  if (!m.alpha_free()) throw DomainError("pairing needs an alpha-free function");
  Rational s = 0;
  for (auto& [w, c] : a.terms()) s += c * Rational(m.coeff(w));
  return s;
}

DualFunctional DualFunctional::from_all_words(int n, const std::map<Word, Rational>& values) {
  DualFunctional psi(n);
  auto value = [&](const Word& w) {
    auto it = values.find(w);
    return it == values.end() ? Rational(0) : it->second;
  };
  for (auto& w : basis_words(n)) psi.set(w, value(w));
  for (auto& w : qsym::compositions(n))
    if (psi(w) != value(w)) throw DomainError("not a functional on D: inconsistent on the Euler ideal");
  return psi;
}

void DualFunctional::set(const Word& w, const Rational& v) {
  if (qsym::weight(w) != n_ || !is_basis_word(w)) throw DomainError("not a basis word of the functional's weight");
  if (v == 0)
    values_.erase(w);
  else
    values_[w] = v;
}

Rational DualFunctional::operator()(const NCPolynomial& a) const {
  Rational s = 0;
  const NCPolynomial nf = normal_form_U(a);
  for (auto& [w, c] : nf.terms()) {
    auto it = values_.find(w);
    if (it != values_.end()) s += c * it->second;
  }
  return s;
}

std::string DualFunctional::str() const {
  if (values_.empty()) return "0";
  std::string out;
  for (auto& [w, c0] : values_) {
    Rational c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string name;
    for (std::size_t i = 0; i < w.size(); ++i)
      name += (i ? " " : "") + (w[i] == 1 ? std::string("d") : "d" + std::to_string(w[i]));
    if (w.size() > 1) name = "(" + name + ")";
    out += (c == 1 ? "" : to_string(c) + "*") + name + "*";
  }
  return out;
}

qsym::QSymFunction dstar_to_qsym(const DualFunctional& psi) {
  qsym::QSymFunction out;
  for (auto& w : qsym::compositions(psi.weight())) {
    Word rev(w.rbegin(), w.rend());
    out.add(w, as_integer(psi(rev)));
  }
  return out;
}

std::vector<NCPolynomial> s_series(int nmax) {
  if (nmax < 1) throw DomainError("nmax must be >= 1");
  std::vector<NCPolynomial> out;
  for (int k = 1; k <= nmax; ++k) {
    NCPolynomial s;
    for (auto& w : qsym::compositions(k)) {
      int l = static_cast<int>(w.size());
      s.add(w, Rational((l % 2) ? 1 : -1) / l);
    }
    out.push_back(s);
  }
  return out;
}

NCPolynomial d_even_formula(int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  NCPolynomial out;
  for (int i = 1; i <= k; ++i) {
    Rational c = Rational(binomial(2 * i - 2, i - 1)) / (Rational(i) * Rational(Int(1) << (2 * i - 1)));
    if ((i - 1) % 2) c = -c;
    // j_1 + ... + j_{2i} = i + k with j >= 1
    for (auto& js : qsym::compositions(i + k)) {
      if (static_cast<int>(js.size()) != 2 * i) continue;
      Word w;
      for (int j : js) w.push_back(2 * j - 1);
      out.add(w, c);
    }
  }
  return out;
}

}  // namespace polyring::nc
