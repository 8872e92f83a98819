#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

/// Monomial z^k u^i on the U chart of the blown-up plane. k may be negative
/// (z is Laurent); i is never negative. The same struct doubles as xi^k v^i
/// on the V chart, where (z, u) = (xi^-1, xi v).
struct ZUMonomial {
  int k = 0;  // exponent of z
  int i = 0;  // exponent of u, >= 0

  friend auto operator<=>(const ZUMonomial&, const ZUMonomial&) = default;
};

/// Canonical term order: u-degree ascending, then z-exponent ascending.
/// Keeping the map in this order makes equality structural and printing
/// deterministic.
struct ZUOrder {
  bool operator()(const ZUMonomial& a, const ZUMonomial& b) const {
    if (a.i != b.i) return a.i < b.i;
    return a.k < b.k;
  }
};

/// Sparse exact polynomial in z (integer exponents) and u (non-negative
/// exponents) over the rationals. Zero coefficients are never stored.
class BiLaurentPoly {
public:
  using TermMap = std::map<ZUMonomial, Rat, ZUOrder>;

  BiLaurentPoly() = default;
  static BiLaurentPoly monomial(int k, int i, const Rat& c = Rat(1));
  static BiLaurentPoly constant(const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rat coeff(int k, int i) const;

  void add_term(int k, int i, const Rat& c);

  BiLaurentPoly operator+(const BiLaurentPoly& o) const;
  BiLaurentPoly operator-(const BiLaurentPoly& o) const;
  BiLaurentPoly operator-() const;
  BiLaurentPoly operator*(const BiLaurentPoly& o) const;
  BiLaurentPoly operator*(const Rat& c) const;
  bool operator==(const BiLaurentPoly& o) const { return terms_ == o.terms_; }

  /// Multiply by the monomial z^k u^i.
  BiLaurentPoly shifted(int k, int i) const;

  /// Drop all terms of u-degree > n.
  BiLaurentPoly truncate_u(int n) const;

  int deg_u() const;       // -1 for the zero polynomial
  int min_z() const;       // 0 for the zero polynomial
  int max_z() const;       // 0 for the zero polynomial
  int span_z() const { return is_zero() ? 0 : max_z() - min_z(); }

  /// Substitution z = xi^-1, u = xi v: z^k u^i -> xi^(i-k) v^i. Involutive.
  BiLaurentPoly to_v_chart() const;

  bool is_u_holomorphic() const;  // every monomial has k >= 0
  bool is_v_holomorphic() const;  // every monomial has k <= i

  /// Canonical text form, e.g. "u", "3*z*u^2 - 1/2*z^-1*u", "0".
  std::string to_string() const;

private:
  TermMap terms_;
};

/// Rank-2 section/cochain data on the U chart: a pair of polynomials.
using Section = std::array<BiLaurentPoly, 2>;

Section operator+(const Section& a, const Section& b);
Section operator-(const Section& a, const Section& b);
Section operator*(const Rat& c, const Section& s);
Section truncate_u(const Section& s, int n);
bool is_zero(const Section& s);

/// Validated local model (j, p) of a rank-2 bundle on the blown-up plane:
/// transition matrix [[z^j, p], [0, z^-j]] from the U to the V frame, with
/// p supported in the admissible window 1 <= i <= 2j-2, i-j+1 <= k <= j-1.
struct BundleData {
  int j = 0;
  BiLaurentPoly p;

  int p_deg_u() const { return p.is_zero() ? 0 : p.deg_u(); }
  int p_span_z() const { return p.span_z(); }
};

/// Checks the support window of Thm-style normal form and returns the
/// validated pair. Throws WindowViolation naming the offending monomial.
BundleData validate_bundle(int j, const BiLaurentPoly& p);

/// Applies the transition matrix to a V-frame section, yielding its U-frame
/// expression: (v0, v1) -> (z^j v0 + p v1, z^-j v1).
Section transition_apply(const BundleData& b, const Section& v);

/// Inverse transition, U-frame to V-frame values:
/// (a, b) -> (z^-j a - p b, z^j b).
Section transition_apply_inverse(const BundleData& b, const Section& s);

/// Parses the shared text grammar for p:
///   poly := term (('+'|'-') term)* ;  term := coeff? ('*'? atom)* ;
///   atom := 'z' ('^' int)? | 'u' ('^' nat)? ;  coeff := int ('/' nat)? ;
/// Whitespace is insignificant. Throws ParseError with position info.
BiLaurentPoly parse_poly(const std::string& text);

}  // namespace blowup
