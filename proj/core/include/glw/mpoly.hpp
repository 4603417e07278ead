#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glw {

using Int = boost::multiprecision::cpp_int;

struct MPolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Variable families of the coefficient rings: N, the Casimir symbols C_k,
// the power symbols p_k, the chromatic variable x, and the left/right tensor
// copies pL_k / pR_k. The declaration order of Kind fixes the variable order
// N < C_k < p_k < x < pL_k < pR_k used everywhere output must be
// deterministic.
struct Var {
  enum class Kind : unsigned char { N = 0, C, P, X, PL, PR };

  Kind kind{Kind::N};
  int index{0};  // k >= 1 for the indexed families, 0 otherwise

  static Var n() { return {Kind::N, 0}; }
  static Var c(int k) { return indexed(Kind::C, k); }
  static Var p(int k) { return indexed(Kind::P, k); }
  static Var x() { return {Kind::X, 0}; }
  static Var pl(int k) { return indexed(Kind::PL, k); }
  static Var pr(int k) { return indexed(Kind::PR, k); }

  std::string name() const;
  static std::optional<Var> from_name(std::string_view s);

  friend constexpr bool operator==(const Var&, const Var&) = default;
  friend constexpr auto operator<=>(const Var&, const Var&) = default;

private:
  static Var indexed(Kind kind, int k) {
    if (k < 1) throw MPolyError("variable index must be >= 1");
    return {kind, k};
  }
};

// Exponent vector of a single term. Entries are sorted by variable and
// exponents are nonzero; only N may carry a negative exponent.
class Monomial {
public:
  Monomial() = default;
  static Monomial of(Var v, int exp);

  const std::vector<std::pair<Var, int>>& factors() const { return f_; }
  bool is_unit() const { return f_.empty(); }
  int exponent(Var v) const;
  int total_degree() const;

  Monomial times(const Monomial& o) const;
  Monomial pow(int e) const;  // e >= 0
  Monomial without(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  static Monomial make(std::vector<std::pair<Var, int>> f);
  std::vector<std::pair<Var, int>> f_;
};

// Sparse multivariate polynomial over arbitrary-precision integers,
// Laurent in N only.
class MPoly {
public:
  MPoly() = default;  // zero
  MPoly(long long v) : MPoly(Int(v)) {}
  explicit MPoly(Int v);

  static MPoly var(Var v, int exp = 1);
  static MPoly n(int exp = 1) { return var(Var::n(), exp); }
  static MPoly c(int k) { return var(Var::c(k)); }
  static MPoly p(int k) { return var(Var::p(k)); }
  static MPoly x() { return var(Var::x()); }
  static MPoly pl(int k) { return var(Var::pl(k)); }
  static MPoly pr(int k) { return var(Var::pr(k)); }

  bool is_zero() const { return t_.empty(); }
  const std::map<Monomial, Int>& terms() const { return t_; }
  Int coefficient(const Monomial& m) const;
  // The set of variables occurring in some term.
  std::vector<Var> variables() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  bool operator==(const MPoly&) const = default;

  // Ring homomorphism extending `rule`; unlisted variables are fixed.
  // A variable with a negative exponent may only be sent to +-(a monomial
  // in N), otherwise the image would leave the ring.
  MPoly substitute(const std::map<Var, MPoly>& rule) const;

  // Coefficient polynomial of v^exp, with v removed from the terms.
  MPoly coeff_of(Var v, int exp) const;
  std::optional<int> degree_in(Var v) const;      // nullopt for the zero poly
  std::optional<int> min_degree_in(Var v) const;

  std::string to_text() const;
  static MPoly parse_text(const std::string& text);
  std::string to_json() const;
  static MPoly from_json(const std::string& text);

private:
  void add_term(const Monomial& m, const Int& coeff);
  std::map<Monomial, Int> t_;
};

MPoly pow(const MPoly& a, int e);  // e >= 0

// Names matching the operation surface: coefficient extraction and degrees
// in the distinguished variable N.
inline MPoly coeff_in_n(const MPoly& a, int j) { return a.coeff_of(Var::n(), j); }
inline std::optional<int> degree_in_n(const MPoly& a) { return a.degree_in(Var::n()); }
inline std::optional<int> min_degree_in_n(const MPoly& a) { return a.min_degree_in(Var::n()); }

}  // namespace glw
