#ifndef WELLCOVER_MONOMIALS_HPP
#define WELLCOVER_MONOMIALS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wellcover/vertex_set.hpp"

namespace wellcover {

// Exact field of coefficients. Arbitrary-precision rationals keep Gaussian
// elimination free of overflow and rounding concerns.
using Rational = boost::multiprecision::cpp_rational;

// A monomial in a fixed number of variables, stored as an exponent vector.
// Variables are indexed from 0; printing uses 1-based names x1, x2, ...
class GeneralMonomial {
 public:
  explicit GeneralMonomial(int nvars) : exponents_(check_nvars(nvars), 0) {}

  static GeneralMonomial variable(int nvars, int i) {
    GeneralMonomial m(nvars);
    m.check_var(i);
    m.exponents_[static_cast<std::size_t>(i)] = 1;
    return m;
  }

  static GeneralMonomial from_exponents(std::vector<int> exponents) {
    GeneralMonomial m(static_cast<int>(exponents.size()));
    for (int e : exponents)
      if (e < 0) throw std::invalid_argument("negative exponent");
    m.exponents_ = std::move(exponents);
    return m;
  }

  int nvars() const { return static_cast<int>(exponents_.size()); }
  int exponent(int i) const {
    check_var(i);
    return exponents_[static_cast<std::size_t>(i)];
  }
  const std::vector<int>& exponents() const { return exponents_; }

  int degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

  VertexSet support() const {
    VertexSet s;
    for (int i = 0; i < nvars(); ++i)
      if (exponents_[static_cast<std::size_t>(i)] > 0) s.add(i);
    return s;
  }

  GeneralMonomial radical() const {
    GeneralMonomial m(nvars());
    for (int i = 0; i < nvars(); ++i)
      m.exponents_[static_cast<std::size_t>(i)] = exponents_[static_cast<std::size_t>(i)] > 0;
    return m;
  }

  bool is_squarefree() const {
    for (int e : exponents_)
      if (e > 1) return false;
    return true;
  }

  bool is_one() const { return degree() == 0; }

  bool divides(const GeneralMonomial& other) const {
    check_same_ring(other);
    for (int i = 0; i < nvars(); ++i)
      if (exponents_[static_cast<std::size_t>(i)] > other.exponents_[static_cast<std::size_t>(i)])
        return false;
    return true;
  }

  GeneralMonomial times(const GeneralMonomial& other) const {
    check_same_ring(other);
    GeneralMonomial m(nvars());
    for (int i = 0; i < nvars(); ++i)
      m.exponents_[static_cast<std::size_t>(i)] =
          exponents_[static_cast<std::size_t>(i)] + other.exponents_[static_cast<std::size_t>(i)];
    return m;
  }

  GeneralMonomial times_variable(int i) const {
    check_var(i);
    GeneralMonomial m = *this;
    ++m.exponents_[static_cast<std::size_t>(i)];
    return m;
  }

  // Lexicographic order with variable 0 most significant: at the first
  // index where the exponents differ, the larger exponent wins.
  static bool lex_less(const GeneralMonomial& a, const GeneralMonomial& b) {
    a.check_same_ring(b);
    for (int i = 0; i < a.nvars(); ++i) {
      const int ea = a.exponents_[static_cast<std::size_t>(i)];
      const int eb = b.exponents_[static_cast<std::size_t>(i)];
      if (ea != eb) return ea < eb;
    }
    return false;
  }

  friend bool operator==(const GeneralMonomial&, const GeneralMonomial&) = default;

  // 1-based variable names: x1*x3^2. The empty product prints as 1.
  std::string str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
      const int e = exponents_[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!first) out << '*';
      first = false;
      out << 'x' << (i + 1);
      if (e > 1) out << '^' << e;
    }
    if (first) out << '1';
    return out.str();
  }

 private:
  static int check_nvars(int nvars) {
    if (nvars < 1 || nvars > 64) throw std::invalid_argument("variable count out of range");
    return nvars;
  }
  void check_var(int i) const {
    if (i < 0 || i >= nvars()) throw std::out_of_range("variable index out of range");
  }
  void check_same_ring(const GeneralMonomial& other) const {
    if (nvars() != other.nvars())
      throw std::invalid_argument("monomials from different polynomial rings");
  }

  std::vector<int> exponents_;
};

// Comparator placing the lex-largest monomial first (leading term order).
struct LexGreater {
  bool operator()(const GeneralMonomial& a, const GeneralMonomial& b) const {
    return GeneralMonomial::lex_less(b, a);
  }
};

// A square-free monomial is just its support set.
struct SquareFreeMonomial {
  VertexSet support;

  GeneralMonomial general(int nvars) const {
    GeneralMonomial m(nvars);
    for (int i : support) m = m.times_variable(i);
    return m;
  }
};

// Monomial ideal given by generators; membership is divisibility by some
// generator. Construction keeps only a minimal generating set.
class MonomialIdeal {
 public:
  MonomialIdeal(int nvars, std::vector<GeneralMonomial> generators) : nvars_(nvars) {
    for (const GeneralMonomial& g : generators) {
      if (g.nvars() != nvars) throw std::invalid_argument("generator from a different ring");
      if (g.is_one()) throw std::invalid_argument("unit ideal not supported");
    }
    // Keep generators not strictly divisible by another generator, one copy each.
    for (std::size_t i = 0; i < generators.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
        if (i == j) continue;
        if (generators[j].divides(generators[i]) &&
            (generators[i] != generators[j] || j < i))
          redundant = true;
      }
      if (!redundant) generators_.push_back(generators[i]);
    }
    std::sort(generators_.begin(), generators_.end(), GeneralMonomial::lex_less);
    squarefree_ = true;
    for (const GeneralMonomial& g : generators_) squarefree_ &= g.is_squarefree();
  }

  int nvars() const { return nvars_; }
  const std::vector<GeneralMonomial>& generators() const { return generators_; }
  bool squarefree() const { return squarefree_; }

  bool contains(const GeneralMonomial& m) const {
    for (const GeneralMonomial& g : generators_)
      if (g.divides(m)) return true;
    return false;
  }

  // The coset of a monomial is zero in the quotient ring exactly when the
  // monomial lies in the ideal.
  bool is_zero_in_ring(const GeneralMonomial& m) const { return contains(m); }

 private:
  int nvars_;
  std::vector<GeneralMonomial> generators_;
  bool squarefree_ = false;
};

// A homogeneous linear form with nonzero rational coefficients.
class LinearForm {
 public:
  LinearForm(int nvars, std::map<int, Rational> coefficients)
      : nvars_(nvars), coefficients_(std::move(coefficients)) {
    if (nvars < 1 || nvars > 64) throw std::invalid_argument("variable count out of range");
    if (coefficients_.empty()) throw std::invalid_argument("linear form must be nonzero");
    for (const auto& [i, c] : coefficients_) {
      if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
      if (c == 0) throw std::invalid_argument("zero coefficient in linear form");
    }
  }

  // Coefficient-one sum of the given variables.
  static LinearForm sum_of(int nvars, VertexSet vars) {
    std::map<int, Rational> coeffs;
    for (int i : vars) coeffs.emplace(i, 1);
    return LinearForm(nvars, std::move(coeffs));
  }

  int nvars() const { return nvars_; }
  const std::map<int, Rational>& coefficients() const { return coefficients_; }

  VertexSet support() const {
    VertexSet s;
    for (const auto& [i, c] : coefficients_) s.add(i);
    return s;
  }

  std::string str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : coefficients_) {
      if (c > 0 && !first) out << '+';
      if (c == -1)
        out << '-';
      else if (c != 1)
        out << c.str() << '*';
      out << 'x' << (i + 1);
      first = false;
    }
    return out.str();
  }

 private:
  int nvars_;
  std::map<int, Rational> coefficients_;
};

// A polynomial with rational coefficients, stored leading term first.
class Polynomial {
 public:
  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 64) throw std::invalid_argument("variable count out of range");
  }

  static Polynomial from_linear(const LinearForm& f) {
    Polynomial p(f.nvars());
    for (const auto& [i, c] : f.coefficients())
      p.add_term(GeneralMonomial::variable(f.nvars(), i), c);
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<GeneralMonomial, Rational, LexGreater>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GeneralMonomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial from a different ring");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial times(const Polynomial& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial from a different ring");
    Polynomial p(nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : other.terms_) p.add_term(ma.times(mb), ca * cb);
    return p;
  }

  // Delete every term whose monomial lies in the ideal: the normal form of
  // the coset in the quotient by a monomial ideal.
  Polynomial reduce(const MonomialIdeal& ideal) const {
    if (ideal.nvars() != nvars_) throw std::invalid_argument("ideal from a different ring");
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_)
      if (!ideal.contains(m)) p.add_term(m, c);
    return p;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c;
      if (a < 0) {
        out << '-';
        a = -a;
      } else if (!first) {
        out << '+';
      }
      if (a != 1 || m.is_one()) {
        out << a.str();
        if (!m.is_one()) out << '*';
      }
      if (!m.is_one()) out << m.str();
      first = false;
    }
    return out.str();
  }

 private:
  int nvars_;
  std::map<GeneralMonomial, Rational, LexGreater> terms_;
};

inline Polynomial multiply_and_reduce(const Polynomial& f, const Polynomial& g,
                                      const MonomialIdeal& ideal) {
  return f.times(g).reduce(ideal);
}

}  // namespace wellcover

#endif
