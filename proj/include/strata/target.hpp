#ifndef STRATA_TARGET_HPP
#define STRATA_TARGET_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Effective curve class: a point of the free monoid N^curve_rank.
struct CurveClass {
  std::vector<long> c;

  CurveClass() = default;
  explicit CurveClass(std::vector<long> v) : c(std::move(v)) {
    for (long x : c)
      if (x < 0) throw std::invalid_argument("curve class must be effective");
  }

  static CurveClass zero(int rank) {
    return CurveClass(std::vector<long>((size_t)rank, 0));
  }

  int rank() const { return (int)c.size(); }
  bool is_zero() const {
    for (long x : c)
      if (x) return false;
    return true;
  }
  long total() const {
    long s = 0;
    for (long x : c) s += x;
    return s;
  }

  CurveClass operator+(const CurveClass& o) const {
    if (c.size() != o.c.size())
      throw std::invalid_argument("curve class rank mismatch");
    CurveClass r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  CurveClass& operator+=(const CurveClass& o) { return *this = *this + o; }

  bool operator==(const CurveClass& o) const { return c == o.c; }
  bool operator!=(const CurveClass& o) const { return c != o.c; }
  bool operator<(const CurveClass& o) const { return c < o.c; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

// Element of the modeled Chow ring: sparse combination of target basis
// elements (indices into Target::labels).
using Chow = std::map<int, Rat>;

// Finite exact model of the target geometry. Immutable after load.
class Target {
 public:
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<int> codims;
  int curve_rank = 0;
  // pairing[gen][basis index], meaningful only on codim-1 basis elements
  std::vector<std::vector<long>> pairing;
  Chow c1S, c1TX;

  int basis_size() const { return (int)labels.size(); }
  int unit() const { return unit_; }

  int basis_index(const std::string& label) const {
    for (int i = 0; i < basis_size(); ++i)
      if (labels[i] == label) return i;
    throw std::invalid_argument("unknown basis label: " + label);
  }

  const std::vector<std::pair<int, Rat>>& product_row(int i, int j) const {
    return prod_.at((size_t)i * labels.size() + j);
  }

  void set_product(int i, int j, std::vector<std::pair<int, Rat>> row) {
    prod_.at((size_t)i * labels.size() + j) = std::move(row);
  }

  void init_tables() {
    prod_.assign(labels.size() * labels.size(), {});
    integ_.assign(labels.size(), Rat(0));
  }

  void set_integral(int i, const Rat& v) { integ_.at(i) = v; }
  const Rat& integral_of_basis(int i) const { return integ_.at(i); }

  Chow chow_product(const Chow& a, const Chow& b) const {
    Chow out;
    for (const auto& [i, ca] : a)
      for (const auto& [j, cb] : b)
        for (const auto& [k, ck] : product_row(i, j)) {
          Rat& slot = out[k];
          slot += ca * cb * ck;
          if (slot == 0) out.erase(k);
        }
    return out;
  }

  Chow chow_power(const Chow& a, int e) const {
    Chow out{{unit_, Rat(1)}};
    for (int i = 0; i < e; ++i) out = chow_product(out, a);
    return out;
  }

  Chow chow_unit() const { return Chow{{unit_, Rat(1)}}; }

  Rat integral(const Chow& a) const {
    Rat out(0);
    for (const auto& [i, c] : a) out += c * integ_.at(i);
    return out;
  }

  // Codimension of a homogeneous element; throws on mixed degrees.
  // Returns -1 for the zero element.
  int codim_of(const Chow& a) const {
    int d = -1;
    for (const auto& [i, c] : a) {
      if (c == 0) continue;
      if (d == -1)
        d = codims.at(i);
      else if (d != codims.at(i))
        throw std::invalid_argument("element is not homogeneous");
    }
    return d;
  }

  // b = integral over beta of a codimension-1 class D.
  Rat degree_pairing(const CurveClass& beta, const Chow& D) const {
    if (beta.rank() != curve_rank)
      throw std::invalid_argument("curve class rank mismatch");
    int cd = codim_of(D);
    if (cd != -1 && cd != 1)
      throw std::invalid_argument("degree pairing needs a codim-1 class");
    Rat out(0);
    for (const auto& [i, c] : D)
      for (int gIdx = 0; gIdx < curve_rank; ++gIdx)
        out += c * Rat(pairing.at(gIdx).at(i)) * Rat(beta.c.at(gIdx));
    return out;
  }

  // Strict validation; throws std::invalid_argument on the first violation.
  void validate() const {
    int nb = basis_size();
    if (nb == 0) throw std::invalid_argument("empty basis");
    int units = 0;
    for (int i = 0; i < nb; ++i) {
      if (codims[i] < 0 || codims[i] > dim)
        throw std::invalid_argument("basis codim out of range");
      if (codims[i] == 0) ++units;
    }
    if (units != 1)
      throw std::invalid_argument("need exactly one codim-0 basis element");
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) {
        for (const auto& [k, c] : product_row(i, j)) {
          if (c == 0) continue;
          if (codims[k] != codims[i] + codims[j])
            throw std::invalid_argument("non-graded product");
        }
        // commutativity
        auto a = row_map(i, j), b = row_map(j, i);
        if (a != b) throw std::invalid_argument("non-commutative product");
      }
    // unit acts as identity
    for (int i = 0; i < nb; ++i) {
      auto r = row_map(unit_, i);
      Chow expect{{i, Rat(1)}};
      if (r != expect) throw std::invalid_argument("unit is not an identity");
    }
    // associativity on all basis triples
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        for (int k = 0; k < nb; ++k) {
          Chow ij = row_map(i, j);
          Chow left = chow_product(ij, Chow{{k, Rat(1)}});
          Chow jk = row_map(j, k);
          Chow right = chow_product(Chow{{i, Rat(1)}}, jk);
          if (left != right)
            throw std::invalid_argument("non-associative product");
        }
    for (int i = 0; i < nb; ++i)
      if (integ_.at(i) != 0 && codims[i] != dim)
        throw std::invalid_argument("integral supported off top codimension");
    if ((int)pairing.size() != curve_rank)
      throw std::invalid_argument("pairing matrix has wrong rank");
    for (const auto& row : pairing)
      if ((int)row.size() != nb)
        throw std::invalid_argument("pairing row has wrong width");
    if (codim_of(c1S) > 1 || codim_of(c1TX) > 1)
      throw std::invalid_argument("c1 classes must be codim 1");
  }

  void find_unit() {
    unit_ = -1;
    for (int i = 0; i < basis_size(); ++i)
      if (codims[i] == 0) unit_ = i;
    if (unit_ < 0) throw std::invalid_argument("no codim-0 basis element");
  }

 private:
  Chow row_map(int i, int j) const {
    Chow m;
    for (const auto& [k, c] : product_row(i, j))
      if (c != 0) m[k] = c;
    return m;
  }

  std::vector<std::vector<std::pair<int, Rat>>> prod_;
  std::vector<Rat> integ_;
  int unit_ = 0;
};

using TargetPtr = std::shared_ptr<const Target>;

// X = point: one basis element, no curve classes.
inline TargetPtr make_point_target() {
  auto t = std::make_shared<Target>();
  t->name = "point";
  t->dim = 0;
  t->labels = {"1"};
  t->codims = {0};
  t->curve_rank = 0;
  t->init_tables();
  t->set_product(0, 0, {{0, Rat(1)}});
  t->set_integral(0, Rat(1));
  t->find_unit();
  t->validate();
  return t;
}

// X = P^m with hyperplane class H, line class L, S = O(s).
inline TargetPtr make_projective_space(int m, long s) {
  if (m < 1) throw std::invalid_argument("projective space needs m >= 1");
  auto t = std::make_shared<Target>();
  t->name = "P" + std::to_string(m) + ":" + std::to_string(s);
  t->dim = m;
  for (int i = 0; i <= m; ++i) {
    t->labels.push_back(i == 0 ? "1" : (i == 1 ? "H" : "H^" + std::to_string(i)));
    t->codims.push_back(i);
  }
  t->curve_rank = 1;
  t->init_tables();
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      if (i + j <= m)
        t->set_product(i, j, {{i + j, Rat(1)}});
      else
        t->set_product(i, j, {});
    }
  t->set_integral(m, Rat(1));
  t->pairing.assign(1, std::vector<long>((size_t)m + 1, 0));
  t->pairing[0][1] = 1;  // integral of H over the line class
  if (s != 0) t->c1S = Chow{{1, Rat(s)}};
  t->c1TX = Chow{{1, Rat(m + 1)}};
  t->find_unit();
  t->validate();
  return t;
}

// All ordered splittings of beta into k componentwise parts, lexicographic.
inline std::vector<std::vector<CurveClass>> enumerate_splittings(
    const CurveClass& beta, int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1 parts");
  std::vector<std::vector<CurveClass>> out;
  std::vector<CurveClass> cur((size_t)k, CurveClass::zero(beta.rank()));
  // Per coordinate, compositions multiply; recurse over parts directly.
  std::function<void(int, CurveClass)> rec = [&](int part, CurveClass rest) {
    if (part == k - 1) {
      cur[(size_t)part] = rest;
      out.push_back(cur);
      return;
    }
    // enumerate all componentwise sub-vectors of rest, lexicographically
    std::vector<long> v((size_t)beta.rank(), 0);
    while (true) {
      cur[(size_t)part] = CurveClass(v);
      CurveClass rem = rest;
      bool ok = true;
      for (int i = 0; i < beta.rank(); ++i) {
        rem.c[(size_t)i] -= v[(size_t)i];
        if (rem.c[(size_t)i] < 0) ok = false;
      }
      if (ok) rec(part + 1, rem);
      // next sub-vector <= rest
      int i = beta.rank() - 1;
      while (i >= 0) {
        if (v[(size_t)i] < rest.c[(size_t)i]) {
          ++v[(size_t)i];
          break;
        }
        v[(size_t)i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  };
  rec(0, beta);
  std::sort(out.begin(), out.end(),
            [](const std::vector<CurveClass>& a,
               const std::vector<CurveClass>& b) {
              for (size_t i = 0; i < a.size(); ++i) {
                if (a[i].c != b[i].c) return a[i].c < b[i].c;
              }
              return false;
            });
  return out;
}

}  // namespace strata

#endif
