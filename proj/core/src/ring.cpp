#include "laplink/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace laplink {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw UsageError("monomial exponent overflow");
  }
  return r;
}

std::int32_t checked_mul(std::int32_t a, std::int32_t b) {
  std::int32_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw UsageError("monomial exponent overflow");
  }
  return r;
}

void add_term(std::map<Monomial, BigInt>& acc, const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

VariableSet::VariableSet(int genus) : genus_(genus) {
  if (genus < 0) throw UsageError("genus must be non-negative");
  if (genus > 1024) throw UsageError("genus out of supported range");
}

std::string VariableSet::name(int index) const {
  if (index < 0 || index >= count()) throw Error("variable index out of range");
  if (genus_ <= 2) {
    static const char* kAlias[4] = {"x", "y", "u", "v"};
    return kAlias[index];
  }
  const int pair = index / 2 + 1;
  return (index % 2 == 0 ? "x" : "y") + std::to_string(pair);
}

std::optional<int> VariableSet::index_of(std::string_view name) const {
  if (name.empty()) return std::nullopt;
  if (genus_ <= 2) {
    static const char* kAlias[4] = {"x", "y", "u", "v"};
    for (int i = 0; i < count(); ++i) {
      if (name == kAlias[i]) return i;
    }
  }
  // Indexed spelling x<k>/y<k>, always accepted.
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
    int k = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      if (k > 100000) return std::nullopt;
      k = k * 10 + (name[i] - '0');
    }
    if (k < 1 || k > genus_) return std::nullopt;
    return 2 * (k - 1) + (name[0] == 'y' ? 1 : 0);
  }
  return std::nullopt;
}

Monomial Monomial::from_exponents(std::vector<std::int32_t> exps) {
  Monomial m;
  m.exp_ = std::move(exps);
  return m;
}

bool Monomial::is_identity() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::int32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exp_.size() != other.exp_.size()) {
    throw UsageError("monomials over different variable sets");
  }
  Monomial r(*this);
  for (size_t i = 0; i < exp_.size(); ++i) {
    r.exp_[i] = checked_add(r.exp_[i], other.exp_[i]);
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r(*this);
  for (auto& e : r.exp_) {
    if (e == std::numeric_limits<std::int32_t>::min()) {
      throw UsageError("monomial exponent overflow");
    }
    e = -e;
  }
  return r;
}

Monomial Monomial::pow(std::int32_t k) const {
  Monomial r(*this);
  for (auto& e : r.exp_) e = checked_mul(e, k);
  return r;
}

bool canonical_term_less(const Monomial& a, const Monomial& b) {
  std::int64_t da = 0, db = 0;
  for (auto e : a.exponents()) da += std::abs(static_cast<std::int64_t>(e));
  for (auto e : b.exponents()) db += std::abs(static_cast<std::int64_t>(e));
  if (da != db) return da < db;
  for (int i = 0; i < a.var_count(); ++i) {
    const std::int64_t ea = a.exponent(i), eb = b.exponent(i);
    if (ea == eb) continue;
    const std::int64_t ma = std::abs(ea), mb = std::abs(eb);
    if (ma != mb) return ma > mb;
    return ea > eb;  // same magnitude: positive before negative
  }
  return false;
}

LaurentPoly LaurentPoly::constant(VariableSet vars, BigInt c) {
  LaurentPoly p(vars);
  if (c != 0) p.terms_.emplace(Monomial(vars.count()), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::term(VariableSet vars, Monomial m, BigInt c) {
  if (m.var_count() != vars.count()) {
    throw UsageError("monomial does not match the variable set");
  }
  LaurentPoly p(vars);
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

BigInt LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

namespace {
void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.vars() == b.vars())) {
    throw UsageError("polynomials over different variable sets (genus " +
                     std::to_string(a.vars().genus()) + " vs " +
                     std::to_string(b.vars().genus()) + ")");
  }
}
}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  require_same_vars(*this, other);
  LaurentPoly r(*this);
  for (const auto& [m, c] : other.terms_) add_term(r.terms_, m, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  return *this + (-other);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  require_same_vars(*this, other);
  LaurentPoly r(vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      add_term(r.terms_, ma * mb, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r(vars_);
  for (const auto& [m, c] : terms_) add_term(r.terms_, m.inverse(), c);
  return r;
}

BigInt LaurentPoly::augment() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::substitute(std::span<const Monomial> images) const {
  if (static_cast<int>(images.size()) != vars_.count()) {
    throw UsageError("substitution must supply one monomial per variable");
  }
  for (const auto& im : images) {
    if (im.var_count() != vars_.count()) {
      throw UsageError("substitution image does not match the variable set");
    }
  }
  LaurentPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial image(vars_.count());
    for (int i = 0; i < vars_.count(); ++i) {
      if (m.exponent(i) != 0) image = image * images[static_cast<size_t>(i)].pow(m.exponent(i));
    }
    add_term(r.terms_, image, c);
  }
  return r;
}

LaurentPoly LaurentPoly::sign_normalized() const {
  if (terms_.empty()) return *this;
  const Monomial* lead = nullptr;
  for (const auto& [m, c] : terms_) {
    if (lead == nullptr || canonical_term_less(m, *lead)) lead = &m;
  }
  if (terms_.at(*lead) < 0) return -*this;
  return *this;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, BigInt>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return canonical_term_less(a->first, b->first);
  });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    const bool neg = t->second < 0;
    const BigInt mag = neg ? BigInt(-t->second) : t->second;
    std::string body;
    if (m.is_identity()) {
      body = mag.str();
    } else {
      if (mag != 1) body = mag.str();
      for (int i = 0; i < vars_.count(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!body.empty()) body += ' ';
        body += vars_.name(i) + "^" + std::to_string(m.exponent(i));
      }
    }
    if (first) {
      out = neg ? "- " + body : body;
      first = false;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out;
}

namespace {

struct Scanner {
  std::string_view s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("polynomial parse error at offset " + std::to_string(i) + ": " + what +
                     " in \"" + std::string(s) + "\"");
  }

  BigInt digits() {
    const size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected digits");
    return BigInt(std::string(s.substr(start, i - start)));
  }

  std::int32_t exponent() {
    bool neg = false;
    if (!eof() && peek() == '-') {
      neg = true;
      ++i;
    }
    const size_t start = i;
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > std::numeric_limits<std::int32_t>::max()) fail("exponent out of range");
      ++i;
    }
    if (i == start) fail("expected exponent digits after '^'");
    return static_cast<std::int32_t>(neg ? -v : v);
  }

  std::string ident() {
    const size_t start = i;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
    return std::string(s.substr(start, i - start));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(VariableSet vars, std::string_view text) {
  Scanner sc{text};
  sc.ws();
  if (sc.eof()) sc.fail("empty polynomial");

  std::map<Monomial, BigInt> acc;
  bool first = true;
  while (true) {
    sc.ws();
    if (sc.eof()) break;
    int sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
      sign = sc.peek() == '-' ? -1 : 1;
      ++sc.i;
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    sc.ws();
    if (sc.eof()) sc.fail("expected a term");

    bool has_any = false;
    BigInt coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = sc.digits();
      has_any = true;
    }
    std::vector<std::int32_t> exps(static_cast<size_t>(vars.count()), 0);
    while (true) {
      sc.ws();
      if (sc.eof() || !std::isalpha(static_cast<unsigned char>(sc.peek()))) break;
      const std::string name = sc.ident();
      const auto idx = vars.index_of(name);
      if (!idx) {
        sc.fail("unknown variable '" + name + "' for genus " + std::to_string(vars.genus()));
      }
      std::int32_t e = 1;
      if (!sc.eof() && sc.peek() == '^') {
        ++sc.i;
        e = sc.exponent();
      }
      exps[static_cast<size_t>(*idx)] = checked_add(exps[static_cast<size_t>(*idx)], e);
      has_any = true;
    }
    if (!has_any) sc.fail("expected a term");
    add_term(acc, Monomial::from_exponents(std::move(exps)), sign < 0 ? BigInt(-coeff) : coeff);
    first = false;
  }

  LaurentPoly p(vars);
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.emplace(m, std::move(c));
  }
  return p;
}

std::string monomial_str(const VariableSet& vars, const Monomial& m) {
  if (m.var_count() != vars.count()) throw UsageError("monomial does not match the variable set");
  if (m.is_identity()) return "1";
  std::string out;
  for (int i = 0; i < vars.count(); ++i) {
    if (m.exponent(i) == 0) continue;
    if (!out.empty()) out += ' ';
    out += vars.name(i) + "^" + std::to_string(m.exponent(i));
  }
  return out;
}

Monomial parse_monomial(const VariableSet& vars, std::string_view text) {
  const LaurentPoly p = LaurentPoly::parse(vars, text);
  if (p.terms().size() != 1 || p.terms().begin()->second != 1) {
    throw UsageError("expected a monomial (a single term with coefficient 1), got \"" +
                     std::string(text) + "\"");
  }
  return p.terms().begin()->first;
}

}  // namespace laplink
