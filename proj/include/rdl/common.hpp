#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdl {

// Vertices are 1-based positive integers; a prefix [n] is {1,...,n}.
using Vertex = std::uint32_t;
using ColorId = int;

using VertexSet = std::vector<Vertex>;  // sorted, distinct
using VertexSeq = std::vector<Vertex>;  // distinct, order significant

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid scheme/operation parameters (q not prime, k < 2, n = 0, ...).
struct ParamError : Error {
  using Error::Error;
};

// Input exceeds an exact-search budget; caller should fall back to a heuristic.
struct BudgetError : Error {
  using Error::Error;
};

// A documented precondition or postcondition did not hold.
struct ContractError : Error {
  using Error::Error;
};

// A heuristic search gave up without finding a certified object.
struct SearchError : Error {
  using Error::Error;
};

// An outcome that contradicts a theorem-backed contract; always a bug or a
// counterexample worth reporting, never silently swallowed.
struct InternalError : Error {
  using Error::Error;
};

inline bool is_sorted_distinct(const VertexSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] <= s[i - 1]) return false;
  return true;
}

}  // namespace rdl
