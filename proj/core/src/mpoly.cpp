#include "glw/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace glw {

namespace {

const char* kind_prefix(Var::Kind k) {
  switch (k) {
    case Var::Kind::N: return "N";
    case Var::Kind::C: return "C";
    case Var::Kind::P: return "p";
    case Var::Kind::X: return "x";
    case Var::Kind::PL: return "pL";
    case Var::Kind::PR: return "pR";
  }
  return "?";
}

}  // namespace

std::string Var::name() const {
  std::string s = kind_prefix(kind);
  if (index > 0) s += std::to_string(index);
  return s;
}

std::optional<Var> Var::from_name(std::string_view s) {
  auto parse_index = [](std::string_view t) -> std::optional<int> {
    if (t.empty() || (t.size() > 1 && t[0] == '0')) return std::nullopt;
    int v = 0;
    for (char ch : t) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      v = v * 10 + (ch - '0');
      if (v > 1'000'000) return std::nullopt;
    }
    return v;
  };
  if (s == "N") return Var::n();
  if (s == "x") return Var::x();
  if (s.size() >= 2 && s[0] == 'C') {
    if (auto k = parse_index(s.substr(1)); k && *k >= 1) return Var::c(*k);
    return std::nullopt;
  }
  if (s.size() >= 3 && s[0] == 'p' && (s[1] == 'L' || s[1] == 'R')) {
    if (auto k = parse_index(s.substr(2)); k && *k >= 1)
      return s[1] == 'L' ? Var::pl(*k) : Var::pr(*k);
    return std::nullopt;
  }
  if (s.size() >= 2 && s[0] == 'p') {
    if (auto k = parse_index(s.substr(1)); k && *k >= 1) return Var::p(*k);
    return std::nullopt;
  }
  return std::nullopt;
}

Monomial Monomial::make(std::vector<std::pair<Var, int>> f) {
  Monomial m;
  m.f_ = std::move(f);
  for (const auto& [v, e] : m.f_) {
    assert(e != 0);
    if (e < 0 && v != Var::n())
      throw MPolyError("negative exponent on variable " + v.name());
  }
  assert(std::is_sorted(m.f_.begin(), m.f_.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; }));
  return m;
}

Monomial Monomial::of(Var v, int exp) {
  if (exp == 0) return {};
  return make({{v, exp}});
}

int Monomial::exponent(Var v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<std::pair<Var, int>> out;
  out.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.emplace_back(a->first, e);
      ++a, ++b;
    }
  }
  return make(std::move(out));
}

Monomial Monomial::pow(int e) const {
  if (e < 0) throw MPolyError("monomial power must be nonnegative");
  if (e == 0) return {};
  std::vector<std::pair<Var, int>> out = f_;
  for (auto& [v, k] : out) k *= e;
  return make(std::move(out));
}

Monomial Monomial::without(Var v) const {
  std::vector<std::pair<Var, int>> out;
  out.reserve(f_.size());
  for (const auto& fe : f_)
    if (fe.first != v) out.push_back(fe);
  return make(std::move(out));
}

MPoly::MPoly(Int v) {
  if (v != 0) t_.emplace(Monomial{}, std::move(v));
}

MPoly MPoly::var(Var v, int exp) {
  MPoly r;
  r.t_.emplace(Monomial::of(v, exp), Int(1));
  return r;
}

Int MPoly::coefficient(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Int(0) : it->second;
}

std::vector<Var> MPoly::variables() const {
  std::set<Var> vs;
  for (const auto& [m, c] : t_)
    for (const auto& [v, e] : m.factors()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

void MPoly::add_term(const Monomial& m, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = t_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) t_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

MPoly pow(const MPoly& a, int e) {
  if (e < 0) throw MPolyError("polynomial power must be nonnegative");
  MPoly r{1};
  for (int i = 0; i < e; ++i) r *= a;
  return r;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& rule) const {
  MPoly out;
  for (const auto& [m, coeff] : t_) {
    MPoly term{coeff};
    for (const auto& [v, e] : m.factors()) {
      auto it = rule.find(v);
      if (it == rule.end()) {
        term *= MPoly::var(v, e);
      } else if (e >= 0) {
        term *= glw::pow(it->second, e);
      } else {
        // Inverting the image: it must be a single +-1 monomial in N.
        const MPoly& img = it->second;
        if (img.t_.size() != 1) throw MPolyError("substitution into N^(<0) needs a monomial image");
        const auto& [im, ic] = *img.t_.begin();
        if (ic != 1 && ic != -1)
          throw MPolyError("substitution into N^(<0) needs a unit coefficient");
        for (const auto& [iv, ie] : im.factors())
          if (iv != Var::n()) throw MPolyError("substitution into N^(<0) must stay a power of N");
        Int c = (ic == -1 && (e % 2 != 0)) ? Int(-1) : Int(1);
        MPoly f{c};
        f *= MPoly::var(Var::n(), im.exponent(Var::n()) * e);
        term *= f;
      }
    }
    out += term;
  }
  return out;
}

MPoly MPoly::coeff_of(Var v, int exp) const {
  MPoly out;
  for (const auto& [m, c] : t_)
    if (m.exponent(v) == exp) out.add_term(m.without(v), c);
  return out;
}

std::optional<int> MPoly::degree_in(Var v) const {
  if (t_.empty()) return std::nullopt;
  int best = std::numeric_limits<int>::min();
  for (const auto& [m, c] : t_) best = std::max(best, m.exponent(v));
  return best;
}

std::optional<int> MPoly::min_degree_in(Var v) const {
  if (t_.empty()) return std::nullopt;
  int best = std::numeric_limits<int>::max();
  for (const auto& [m, c] : t_) best = std::min(best, m.exponent(v));
  return best;
}

namespace {

// Display order: ascending exponent of N, then ascending total degree, then
// the plain monomial order. Fixed once so printed values are reproducible.
bool print_less(const Monomial& a, const Monomial& b) {
  int na = a.exponent(Var::n()), nb = b.exponent(Var::n());
  if (na != nb) return na < nb;
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a < b;
}

std::string monomial_text(const Monomial& m) {
  // Within a term, higher powers first; ties follow the variable order.
  auto fs = m.factors();
  std::stable_sort(fs.begin(), fs.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string s;
  for (const auto& [v, e] : fs) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string MPoly::to_text() const {
  if (t_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Int>*> order;
  order.reserve(t_.size());
  for (const auto& tc : t_) order.push_back(&tc);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return print_less(a->first, b->first); });
  std::string out;
  bool first = true;
  for (auto* tc : order) {
    const auto& [m, c] = *tc;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string vars = monomial_text(m);
    if (vars.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += vars;
    }
  }
  return out;
}

namespace {

struct TextParser {
  const std::string& s;
  size_t pos = 0;

  explicit TextParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw MPolyError("polynomial parse error at " + std::to_string(pos) + ": " + what);
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }

  int small_int() {
    Int v = integer();
    if (v < -1'000'000 || v > 1'000'000) fail("exponent out of range");
    return static_cast<int>(v);
  }

  std::optional<Var> var_name() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])))) {
      ++pos;
    }
    if (pos == start) return std::nullopt;
    auto v = Var::from_name(s.substr(start, pos - start));
    if (!v) fail("unknown variable '" + s.substr(start, pos - start) + "'");
    return v;
  }

  MPoly term() {
    MPoly t{1};
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        t *= MPoly(integer());
        any = true;
      } else if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
        Var v = *var_name();
        int e = 1;
        if (peek() == '^') {
          ++pos;
          e = small_int();
        }
        if (e < 0 && v != Var::n()) fail("negative exponent on " + v.name());
        t *= MPoly::var(v, e);
        any = true;
      } else {
        fail("expected factor");
      }
      if (peek() == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return t;
  }
};

}  // namespace

MPoly MPoly::parse_text(const std::string& text) {
  TextParser p(text);
  MPoly out;
  bool negative = false;
  if (p.peek() == '-') {
    ++p.pos;
    negative = true;
  } else if (p.peek() == '+') {
    ++p.pos;
  }
  if (p.eof()) throw MPolyError("empty polynomial text");
  for (;;) {
    MPoly t = p.term();
    out += negative ? -t : t;
    if (p.eof()) break;
    char op = p.peek();
    if (op != '+' && op != '-') p.fail("expected '+' or '-'");
    negative = op == '-';
    ++p.pos;
  }
  return out;
}

std::string MPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  std::vector<const std::pair<const Monomial, Int>*> order;
  for (const auto& tc : t_) order.push_back(&tc);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return print_less(a->first, b->first); });
  for (auto* tc : order) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [v, e] : tc->first.factors()) mono[v.name()] = e;
    terms.push_back({{"coeff", tc->second.str()}, {"mono", mono}});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

MPoly MPoly::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MPolyError(std::string("polynomial json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw MPolyError("polynomial json: missing terms array");
  MPoly out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("mono"))
      throw MPolyError("polynomial json: malformed term");
    Int coeff;
    try {
      coeff = Int(t["coeff"].get<std::string>());
    } catch (...) {
      throw MPolyError("polynomial json: bad coefficient");
    }
    MPoly term{coeff};
    for (const auto& [name, exp] : t["mono"].items()) {
      auto v = Var::from_name(name);
      if (!v || !exp.is_number_integer())
        throw MPolyError("polynomial json: bad monomial entry '" + name + "'");
      int e = exp.get<int>();
      if (e < 0 && *v != Var::n()) throw MPolyError("polynomial json: negative exponent on " + name);
      term *= MPoly::var(*v, e);
    }
    out += term;
  }
  return out;
}

}  // namespace glw
