#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "rellich/rational.hpp"

namespace rellich {

// Fixed, ordered symbol universe. The order is load-bearing: it defines the
// graded-lexicographic monomial order and hence every canonical form and
// printed rendering.
enum class Symbol : uint8_t {
  Dim = 0,   // n
  Alpha,     // α
  Beta,      // β
  S,         // s (Schmincke variable / generic weight exponent)
  Alpha0,    // α₀ .. α₄: iterated-log family parameters
  Alpha1,
  Alpha2,
  Alpha3,
  Alpha4,
  Gamma,     // γ (log scale)
};

constexpr int kNumSymbols = 10;

const char* symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(const std::string& name);

inline Symbol log_alpha_symbol(int m) {
  // α_m for the iterated-log families, m in [0, 4].
  return static_cast<Symbol>(static_cast<int>(Symbol::Alpha0) + m);
}

// Partial map Symbol -> Rational.
class Bindings {
 public:
  Bindings() = default;

  Bindings& set(Symbol s, Rational v) {
    values_[static_cast<size_t>(s)] = std::move(v);
    return *this;
  }
  const std::optional<Rational>& get(Symbol s) const {
    return values_[static_cast<size_t>(s)];
  }
  bool has(Symbol s) const { return values_[static_cast<size_t>(s)].has_value(); }

 private:
  std::array<std::optional<Rational>, kNumSymbols> values_;
};

}  // namespace rellich
