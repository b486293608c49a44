#include "polyring/qsym.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace polyring::qsym {

int weight(const Composition& w) { return std::accumulate(w.begin(), w.end(), 0); }

bool CompositionLess::operator()(const Composition& a, const Composition& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) return {Composition{}};
  // bit i of mask set = cut after position i+1
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Composition c;
    int part = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask >> i & 1) {
        c.push_back(part);
        part = 1;
      } else {
        ++part;
      }
    }
    c.push_back(part);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), CompositionLess());
  return out;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(int r, const Int& c) {
  MultiPoly p(r);
  p.add(std::vector<int>(r + 1, 0), c);
  return p;
}

MultiPoly MultiPoly::var(int r, int i) {
  if (i < 0 || i > r) throw DomainError("variable index out of range");
  MultiPoly p(r);
  std::vector<int> e(r + 1, 0);
  e[i] = 1;
  p.add(e, 1);
  return p;
}

void MultiPoly::add(const std::vector<int>& exps, const Int& c) {
  if (c == 0) return;
  if (static_cast<int>(exps.size()) != r_ + 1) throw DomainError("exponent vector has wrong length");
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int MultiPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.r_ != r_) throw DomainError("variable count mismatch");
  for (auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.r_ != r_) throw DomainError("variable count mismatch");
  for (auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.r_ != b.r_) throw DomainError("variable count mismatch");
  MultiPoly r(a.r_);
  std::vector<int> e(a.r_ + 1);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (int i = 0; i <= a.r_; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const Int& c, const MultiPoly& a) {
  MultiPoly r(a.r_);
  for (auto& [e, v] : a.terms_) r.add(e, c * v);
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != r_ + 1) throw DomainError("substitution needs one image per variable");
  const int r2 = images[0].r();
  std::vector<std::vector<MultiPoly>> powers(r_ + 1);
  auto power = [&](int i, int e) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(r2, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  MultiPoly out(r2);
  for (auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(r2, c);
    for (int i = 0; i <= r_; ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::with_vars(int r) const {
  MultiPoly out(r);
  for (auto& [e, c] : terms_) {
    std::vector<int> e2(r + 1, 0);
    for (int i = 0; i <= r_; ++i) {
      if (e[i] == 0) continue;
      if (i > r) throw DomainError("polynomial uses a dropped variable");
      e2[i] = e[i];
    }
    out.add(e2, c);
  }
  return out;
}

bool MultiPoly::is_homogeneous(int degree) const {
  for (auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (int i = 0; i <= r_; ++i) {
      int e = it->first[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += i == 0 ? "a" : "t" + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += c.str();
    else
      out += (c == 1 ? "" : c.str() + "*") + mono;
  }
  return out;
}

// ------------------------------------------------------------- QSymFunction

bool QSymFunction::KeyLess::operator()(const Key& a, const Key& b) const {
  if (a.first != b.first) return a.first > b.first;
  CompositionLess less;
  if (less(a.second, b.second)) return true;
  if (less(b.second, a.second)) return false;
  return false;
}

QSymFunction QSymFunction::monomial(const Composition& w, const Int& c, int alpha) {
  QSymFunction f;
  f.add(w, c, alpha);
  return f;
}

bool QSymFunction::alpha_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](auto& t) { return t.first.first == 0; });
}

int QSymFunction::max_degree() const {
  int m = -1;
  for (auto& [k, c] : terms_) m = std::max(m, k.first + weight(k.second));
  return m;
}

void QSymFunction::add(const Composition& w, const Int& c, int alpha) {
  if (c == 0) return;
  for (int part : w)
    if (part < 1) throw DomainError("composition parts must be positive");
  if (alpha < 0) throw DomainError("negative alpha power");
  auto [it, inserted] = terms_.try_emplace(Key{alpha, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int QSymFunction::coeff(const Composition& w, int alpha) const {
  auto it = terms_.find(Key{alpha, w});
  return it == terms_.end() ? Int(0) : it->second;
}

QSymFunction& QSymFunction::operator+=(const QSymFunction& o) {
  for (auto& [k, c] : o.terms_) add(k.second, c, k.first);
  return *this;
}

QSymFunction& QSymFunction::operator-=(const QSymFunction& o) {
  for (auto& [k, c] : o.terms_) add(k.second, -c, k.first);
  return *this;
}

QSymFunction operator*(const Int& c, const QSymFunction& a) {
  QSymFunction r;
  for (auto& [k, v] : a.terms_) r.add(k.second, c * v, k.first);
  return r;
}

QSymFunction operator*(const QSymFunction& a, const QSymFunction& b) { return quasi_shuffle(a, b); }

std::string QSymFunction::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [k, c0] : terms_) {
    Int c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string body;
    if (k.first == 1) body = "a";
    if (k.first > 1) body = "a^" + std::to_string(k.first);
    if (!k.second.empty()) {
      std::string m = "M[";
      for (std::size_t i = 0; i < k.second.size(); ++i) m += (i ? "," : "") + std::to_string(k.second[i]);
      m += "]";
      body += body.empty() ? m : "*" + m;
    }
    if (body.empty())
      out += c.str();
    else
      out += (c == 1 ? "" : c.str() + "*") + body;
  }
  return out;
}

std::string QSymFunction::json() const {
  nlohmann::json j = nlohmann::json::array();
  for (auto& [k, c] : terms_) j.push_back({{"comp", k.second}, {"alpha", k.first}, {"coeff", c.str()}});
  return j.dump();
}

// ------------------------------------------------------------- operations

std::map<Composition, Int, CompositionLess> quasi_shuffle(const Composition& a, const Composition& b) {
  std::map<Composition, Int, CompositionLess> out;
  Composition cur;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      out[cur] += 1;
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
      cur.push_back(a[i] + b[j]);
      self(self, i + 1, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

QSymFunction quasi_shuffle(const QSymFunction& a, const QSymFunction& b) {
  QSymFunction r;
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms())
      for (auto& [w, m] : quasi_shuffle(ka.second, kb.second)) r.add(w, ca * cb * m, ka.first + kb.first);
  return r;
}

QTensor coproduct(const QSymFunction& a) {
  if (!a.alpha_free()) throw DomainError("coproduct is defined on alpha-free functions");
  QTensor t;
  for (auto& [k, c] : a.terms()) {
    const Composition& w = k.second;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      auto key = std::make_pair(Composition(w.begin(), w.begin() + i), Composition(w.begin() + i, w.end()));
      auto [it, inserted] = t.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) t.erase(it);
      }
    }
  }
  return t;
}

QSymFunction star(const QSymFunction& a) {
  QSymFunction r;
  for (auto& [k, c] : a.terms()) r.add(Composition(k.second.rbegin(), k.second.rend()), c, k.first);
  return r;
}

QSymFunction sigma(int i) {
  if (i < 1) throw DomainError("sigma index must be >= 1");
  return QSymFunction::monomial(Composition(i, 1));
}

MultiPoly expand(const QSymFunction& a, int r) {
  if (r < 0) throw DomainError("variable count must be >= 0");
  MultiPoly out(r);
  std::vector<int> pos;
  std::vector<int> e(r + 1);
  for (auto& [k, c] : a.terms()) {
    const Composition& w = k.second;
    const int len = static_cast<int>(w.size());
    if (len > r) continue;
    auto rec = [&](auto&& self, int idx, int start) -> void {
      if (idx == len) {
        std::fill(e.begin(), e.end(), 0);
        e[0] = k.first;
        for (int i = 0; i < len; ++i) e[pos[i]] = w[i];
        out.add(e, c);
        return;
      }
      for (int l = start; l <= r - (len - idx - 1); ++l) {
        pos.push_back(l);
        self(self, idx + 1, l + 1);
        pos.pop_back();
      }
    };
    rec(rec, 0, 1);
  }
  return out;
}

QSymFunction lift(const MultiPoly& p) {
  QSymFunction f;
  for (auto& [e, c] : p.terms()) {
    Composition w;
    bool prefix = true, ended = false;
    for (int i = 1; i <= p.r(); ++i) {
      if (e[i] == 0)
        ended = true;
      else if (ended)
        prefix = false;
      else
        w.push_back(e[i]);
    }
    if (prefix) f.add(w, c, e[0]);
  }
  if (expand(f, p.r()) != p) throw DomainError("polynomial is not quasi-symmetric");
  return f;
}

bool is_quasisymmetric(const MultiPoly& p, int r) {
  if (r <= 1) return true;
  MultiPoly q = p.with_vars(r);
  MultiPoly first;
  for (int i = 1; i <= r; ++i) {
    std::vector<MultiPoly> images;
    images.push_back(MultiPoly::alpha(r - 1));
    for (int j = 1; j <= r; ++j) {
      if (j < i)
        images.push_back(MultiPoly::t(r - 1, j));
      else if (j == i)
        images.push_back(MultiPoly(r - 1));
      else
        images.push_back(MultiPoly::t(r - 1, j - 1));
    }
    MultiPoly s = q.substitute(images);
    if (i == 1)
      first = s;
    else if (s != first)
      return false;
  }
  return true;
}

bool theta_invariant(const QSymFunction& a, int k, int n) {
  if (k < 1) throw DomainError("theta index must be >= 1");
  const int base = std::max(n, k - 1);
  const int r = base + 2;
  MultiPoly g = expand(a, r);
  // new variables: alpha, t_1..t_base, s = t_{base+1}
  const int r2 = base + 1;
  std::vector<MultiPoly> images{MultiPoly::alpha(r2)};
  for (int j = 1; j <= r; ++j) {
    if (j < k)
      images.push_back(MultiPoly::t(r2, j));
    else if (j == k)
      images.push_back(MultiPoly::t(r2, r2));
    else if (j == k + 1)
      images.push_back(Int(-1) * MultiPoly::t(r2, r2));
    else
      images.push_back(MultiPoly::t(r2, j - 2));
  }
  return g.substitute(images) == expand(a, base).with_vars(r2);
}

}  // namespace polyring::qsym
