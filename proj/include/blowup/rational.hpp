#pragma once

#include <gmpxx.h>

#include <string>

namespace blowup {

/// Exact rational scalar. GMP's mpq_class already maintains the canonical
/// form we rely on everywhere: lowest terms, positive denominator, zero
/// stored as 0/1.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// Accepts "n" or "n/d" with an optional leading sign.
Rat rat_from_string(const std::string& text);

}  // namespace blowup
