#include "cellkit/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cellkit {

namespace {
const Int kZero = 0;
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms) : terms_(terms) {
  normalize();
}

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int c, std::int32_t exp) {
  LaurentPoly f;
  if (c != 0) f.terms_.emplace_back(exp, std::move(c));
  return f;
}

LaurentPoly LaurentPoly::v_pow(std::int32_t exp) { return monomial(1, exp); }

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

const Int& LaurentPoly::coeff(std::int32_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::int32_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return kZero;
}

std::int32_t LaurentPoly::min_exp() const {
  assert(!terms_.empty());
  return terms_.front().first;
}

std::int32_t LaurentPoly::max_exp() const {
  assert(!terms_.empty());
  return terms_.back().first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f = *this;
  for (auto& [e, c] : f.terms_) c = -c;
  return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  add_shifted(g, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.cbegin();
  auto b = g.terms_.cbegin();
  while (a != terms_.cend() || b != g.terms_.cend()) {
    if (b == g.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.cend() || b->first < a->first) {
      out.emplace_back(b->first, -b->second);
      ++b;
    } else {
      Int c = a->second - b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

void LaurentPoly::add_shifted(const LaurentPoly& f, std::int32_t shift) {
  if (f.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + f.terms_.size());
  auto a = terms_.cbegin();
  auto b = f.terms_.cbegin();
  while (a != terms_.cend() || b != f.terms_.cend()) {
    std::int32_t be = b == f.terms_.cend() ? 0 : b->first + shift;
    if (b == f.terms_.cend() || (a != terms_.cend() && a->first < be)) {
      out.push_back(*a++);
    } else if (a == terms_.cend() || be < a->first) {
      out.emplace_back(be, b->second);
      ++b;
    } else {
      Int c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly out;
  if (f.is_zero() || g.is_zero()) return out;
  // Term counts here stay tiny; quadratic accumulation is fine.
  for (const auto& [ef, cf] : f.terms_) {
    LaurentPoly scaled;
    scaled.terms_.reserve(g.terms_.size());
    for (const auto& [eg, cg] : g.terms_) scaled.terms_.emplace_back(ef + eg, cf * cg);
    out.add_shifted(scaled, 0);
  }
  return out;
}

void LaurentPoly::sub_mul(const LaurentPoly& f, const LaurentPoly& g) {
  *this -= f * g;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly f;
  f.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    f.terms_.emplace_back(-it->first, it->second);
  return f;
}

LaurentPoly LaurentPoly::shifted(std::int32_t k) const {
  LaurentPoly f = *this;
  for (auto& [e, c] : f.terms_) e += k;
  return f;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << 'v';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [e, c] : terms_) {
    std::size_t hc = static_cast<std::size_t>((c % 0x7fffffffffffffe7ll).convert_to<long long>());
    h ^= (static_cast<std::size_t>(static_cast<std::uint32_t>(e)) + 0x9e3779b9u) + (h << 6) + (h >> 2);
    h ^= hc + 0x9e3779b9u + (h << 6) + (h >> 2);
  }
  return h;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

LaurentPoly symmetric_completion(const LaurentPoly& q) {
  LaurentPoly m;
  for (const auto& [e, c] : q.terms()) {
    if (e == 0) {
      m += LaurentPoly::constant(c);
    } else if (e > 0) {
      m += LaurentPoly{{e, c}, {-e, c}};
    }
  }
  return m;
}

}  // namespace cellkit
