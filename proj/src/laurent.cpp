#include "blowup/laurent.hpp"

#include <cctype>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

BiLaurentPoly BiLaurentPoly::monomial(int k, int i, const Rat& c) {
  BiLaurentPoly p;
  p.add_term(k, i, c);
  return p;
}

BiLaurentPoly BiLaurentPoly::constant(const Rat& c) { return monomial(0, 0, c); }

Rat BiLaurentPoly::coeff(int k, int i) const {
  auto it = terms_.find({k, i});
  return it == terms_.end() ? Rat(0) : it->second;
}

void BiLaurentPoly::add_term(int k, int i, const Rat& c) {
  if (c == 0) return;
  if (i < 0) throw Error(ErrorCode::dimension_mismatch, "negative u-exponent");
  ZUMonomial m{k, i};
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiLaurentPoly BiLaurentPoly::operator+(const BiLaurentPoly& o) const {
  BiLaurentPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m.k, m.i, c);
  return out;
}

BiLaurentPoly BiLaurentPoly::operator-(const BiLaurentPoly& o) const {
  BiLaurentPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m.k, m.i, -c);
  return out;
}

BiLaurentPoly BiLaurentPoly::operator-() const {
  BiLaurentPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

BiLaurentPoly BiLaurentPoly::operator*(const BiLaurentPoly& o) const {
  BiLaurentPoly out;
  for (const auto& [m, c] : terms_)
    for (const auto& [n, d] : o.terms_) out.add_term(m.k + n.k, m.i + n.i, c * d);
  return out;
}

BiLaurentPoly BiLaurentPoly::operator*(const Rat& c) const {
  BiLaurentPoly out;
  if (c == 0) return out;
  for (const auto& [m, d] : terms_) out.terms_.emplace(m, c * d);
  return out;
}

BiLaurentPoly BiLaurentPoly::shifted(int k, int i) const {
  BiLaurentPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.k + k, m.i + i, c);
  return out;
}

BiLaurentPoly BiLaurentPoly::truncate_u(int n) const {
  BiLaurentPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.i > n) break;  // terms are ordered by u-degree first
    out.terms_.emplace(m, c);
  }
  return out;
}

int BiLaurentPoly::deg_u() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.i;
}

int BiLaurentPoly::min_z() const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.k < best) best = m.k;
    first = false;
  }
  return best;
}

int BiLaurentPoly::max_z() const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.k > best) best = m.k;
    first = false;
  }
  return best;
}

BiLaurentPoly BiLaurentPoly::to_v_chart() const {
  BiLaurentPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.i - m.k, m.i, c);
  return out;
}

bool BiLaurentPoly::is_u_holomorphic() const {
  for (const auto& [m, c] : terms_)
    if (m.k < 0) return false;
  return true;
}

bool BiLaurentPoly::is_v_holomorphic() const {
  for (const auto& [m, c] : terms_)
    if (m.k > m.i) return false;
  return true;
}

std::string BiLaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool has_vars = (m.k != 0 || m.i != 0);
    if (a != 1 || !has_vars) {
      os << a.get_str();
      if (has_vars) os << "*";
    }
    if (m.k != 0) {
      os << "z";
      if (m.k != 1) os << "^" << m.k;
      if (m.i != 0) os << "*";
    }
    if (m.i != 0) {
      os << "u";
      if (m.i != 1) os << "^" << m.i;
    }
  }
  return os.str();
}

Section operator+(const Section& a, const Section& b) {
  return {a[0] + b[0], a[1] + b[1]};
}

Section operator-(const Section& a, const Section& b) {
  return {a[0] - b[0], a[1] - b[1]};
}

Section operator*(const Rat& c, const Section& s) { return {s[0] * c, s[1] * c}; }

Section truncate_u(const Section& s, int n) {
  return {s[0].truncate_u(n), s[1].truncate_u(n)};
}

bool is_zero(const Section& s) { return s[0].is_zero() && s[1].is_zero(); }

BundleData validate_bundle(int j, const BiLaurentPoly& p) {
  if (j < 0)
    throw Error(ErrorCode::window_violation, "splitting type j must be >= 0");
  for (const auto& [m, c] : p.terms()) {
    const bool ok = m.i >= 1 && m.i <= 2 * j - 2 && m.k >= m.i - j + 1 &&
                    m.k <= j - 1;
    if (!ok) {
      std::ostringstream os;
      os << "monomial z^" << m.k << "*u^" << m.i
         << " of p lies outside the admissible window for j = " << j;
      throw Error(ErrorCode::window_violation, os.str());
    }
  }
  return BundleData{j, p};
}

Section transition_apply(const BundleData& b, const Section& v) {
  return {v[0].shifted(b.j, 0) + b.p * v[1], v[1].shifted(-b.j, 0)};
}

Section transition_apply_inverse(const BundleData& b, const Section& s) {
  return {s[0].shifted(-b.j, 0) - b.p * s[1], s[1].shifted(b.j, 0)};
}

namespace {

// Recursive-descent parser for the p grammar. Whitespace insignificant.
class PolyParser {
public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  BiLaurentPoly parse() {
    skip_ws();
    BiLaurentPoly out = parse_term(parse_sign());
    skip_ws();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      int sign;
      if (c == '+') {
        sign = 1;
      } else if (c == '-') {
        sign = -1;
      } else {
        fail("expected '+', '-' or end of input");
      }
      ++pos_;
      skip_ws();
      out = out + parse_term(sign);
      skip_ws();
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::ostringstream os;
    os << "parse error at position " << pos_ << ": " << expected;
    throw Error(ErrorCode::parse_error, os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int parse_sign() {
    int sign = 1;
    while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      if (text_[pos_] == '-') sign = -sign;
      ++pos_;
      skip_ws();
    }
    return sign;
  }

  bool digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class parse_nat() {
    if (!digit()) fail("expected a digit");
    std::string s;
    while (digit()) s += text_[pos_++];
    return mpz_class(s);
  }

  int parse_int() {
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    mpz_class n = parse_nat();
    if (!n.fits_sint_p()) fail("exponent out of range");
    return sign * static_cast<int>(n.get_si());
  }

  // term := coeff? ('*'? atom)*
  BiLaurentPoly parse_term(int sign) {
    Rat coeff(sign);
    bool saw_anything = false;
    if (digit()) {
      mpz_class num = parse_nat();
      mpz_class den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        den = parse_nat();
        if (den == 0) fail("zero denominator");
      }
      coeff *= Rat(num, den);
      coeff.canonicalize();
      saw_anything = true;
      skip_ws();
    }
    int k = 0, i = 0;
    for (;;) {
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!(pos_ < text_.size() && (text_[pos_] == 'z' || text_[pos_] == 'u')))
          fail("expected 'z' or 'u' after '*'");
      }
      if (pos_ < text_.size() && text_[pos_] == 'z') {
        ++pos_;
        skip_ws();
        int e = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_ws();
          e = parse_int();
        }
        k += e;
        saw_anything = true;
        skip_ws();
      } else if (pos_ < text_.size() && text_[pos_] == 'u') {
        ++pos_;
        skip_ws();
        int e = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_ws();
          e = parse_int();
          if (e < 0) fail("u-exponent must be non-negative");
        }
        i += e;
        saw_anything = true;
        skip_ws();
      } else {
        break;
      }
    }
    if (!saw_anything) fail("expected a coefficient, 'z' or 'u'");
    return BiLaurentPoly::monomial(k, i, coeff);
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

BiLaurentPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace blowup
