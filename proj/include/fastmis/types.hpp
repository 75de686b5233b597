#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace fastmis {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// All randomized components draw from one seeded engine so runs are replayable.
using Rng = std::mt19937_64;

// Thrown when a caller breaks an operation's precondition (dead vertex,
// non-independent solution, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed graph, solution or log input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, std::string_view message) {
  if (!condition) throw ContractViolation(std::string(message));
}

// Builds the message only on failure; for checks on hot paths.
template <class MakeMessage>
  requires std::is_invocable_r_v<std::string, MakeMessage>
inline void require(bool condition, MakeMessage&& make_message) {
  if (!condition) throw ContractViolation(make_message());
}

// Uniform index in [0, bound). bound must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace fastmis
