#ifndef STRATA_POLY_HPP
#define STRATA_POLY_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Sparse multivariate polynomial over Rat in a fixed number of variables.
// Variable names live with the owning container (see StrataElement::symbols);
// the polynomial itself only knows exponent vectors.
class Poly {
 public:
  using Expo = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(const Rat& c, int nvars) : nvars_(nvars) {
    if (c != 0) terms_[Expo(nvars, 0)] = c;
  }

  static Poly constant(const Rat& c, int nvars) { return Poly(c, nvars); }

  static Poly variable(int i, int nvars) {
    Poly p(nvars);
    Expo e(nvars, 0);
    e.at(i) = 1;
    p.terms_[e] = Rat(1);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0));
  }

  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    auto it = terms_.find(Expo(nvars_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  Poly& operator+=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_[e] = c;
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_[e] = -c;
      } else {
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Poly operator*(const Poly& o) const {
    check_vars(o);
    Poly r(nvars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        Expo e = ea;
        for (int i = 0; i < nvars_; ++i) e[i] += eb[i];
        Rat& slot = r.terms_[e];
        slot += ca * cb;
        if (slot == 0) r.terms_.erase(e);
      }
    return r;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  Poly operator*(const Rat& c) const {
    Poly r = *this;
    r *= c;
    return r;
  }

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rat eval(const std::vector<Rat>& point) const {
    Rat out(0);
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) t *= rat_pow(point.at(i), (unsigned)e[i]);
      out += t;
    }
    return out;
  }

  // x_i -> m * x_i for every variable: each monomial scales by m^{|expo|}.
  Poly scale_vars(const Rat& m) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      Rat v = c * rat_pow(m, (unsigned)s);
      if (v != 0) r.terms_[e] = v;
    }
    return r;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rat a = c;
      if (!first) {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool has_var = false;
      for (int x : e)
        if (x) has_var = true;
      if (!has_var || a != 1) {
        os << rat_str(a);
        if (has_var) os << "*";
      }
      bool inner_first = true;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!inner_first) os << "*";
        inner_first = false;
        os << names.at(i);
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void check_vars(const Poly& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("polynomial variable-count mismatch");
  }

  int nvars_ = 0;
  std::map<Expo, Rat> terms_;
};

// Newton-form interpolation through (nodes[i], values[i]) with exact
// arithmetic. Nodes must be pairwise distinct.
class NewtonPoly {
 public:
  NewtonPoly(std::vector<Rat> nodes, const std::vector<Rat>& values)
      : nodes_(std::move(nodes)), dd_(values) {
    size_t n = nodes_.size();
    if (values.size() != n || n == 0)
      throw std::invalid_argument("interpolation size mismatch");
    for (size_t level = 1; level < n; ++level)
      for (size_t i = n - 1; i >= level; --i) {
        Rat den = nodes_[i] - nodes_[i - level];
        if (den == 0) throw std::invalid_argument("repeated node");
        dd_[i] = (dd_[i] - dd_[i - 1]) / den;
        if (i == level) break;
      }
  }

  Rat eval(const Rat& x) const {
    Rat out(0);
    for (size_t i = dd_.size(); i-- > 0;) {
      out *= (x - nodes_[i]);
      out += dd_[i];
    }
    return out;
  }

  // Expands into dense monomial coefficients c_0 + c_1 x + ...
  std::vector<Rat> monomial_coeffs() const {
    std::vector<Rat> acc{Rat(0)};
    for (size_t i = dd_.size(); i-- > 0;) {
      // acc = acc*(x - nodes_[i]) + dd_[i]
      std::vector<Rat> next(acc.size() + 1, Rat(0));
      for (size_t j = 0; j < acc.size(); ++j) {
        next[j + 1] += acc[j];
        next[j] -= acc[j] * nodes_[i];
      }
      next[0] += dd_[i];
      while (next.size() > 1 && next.back() == 0) next.pop_back();
      acc = std::move(next);
    }
    return acc;
  }

 private:
  std::vector<Rat> nodes_;
  std::vector<Rat> dd_;
};

}  // namespace strata

#endif
