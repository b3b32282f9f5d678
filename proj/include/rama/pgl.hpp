#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rama/ntheory.hpp"

namespace rama {

enum class Kind : std::uint8_t { PSL = 0, PGL = 1 };

// One canonical representative per projective class of 2x2 matrices mod m.
// PSL: the lexicographically smaller of {M, -M} by (a,b,c,d).
// PGL (prime modulus): scaled so the first nonzero entry in row-major
// order equals 1.
struct ProjMatrix {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;
  std::uint32_t mod = 1;
  Kind kind = Kind::PSL;

  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;

  // dense key: ((a*m + b)*m + c)*m + d, unique per canonical matrix
  std::uint64_t packed() const {
    auto m = static_cast<std::uint64_t>(mod);
    return ((static_cast<std::uint64_t>(a) * m + b) * m + c) * m + d;
  }
};

// Canonicalize an arbitrary integer matrix mod m. Validates invertibility
// (and det = 1 mod m for PSL); throws std::invalid_argument otherwise.
ProjMatrix canonical(long long a, long long b, long long c, long long d,
                     long long m, Kind kind);

ProjMatrix identity(long long m, Kind kind);

// Canonical product; throws std::invalid_argument on modulus/kind mismatch.
ProjMatrix mul(const ProjMatrix& x, const ProjMatrix& y);

ProjMatrix inverse(const ProjMatrix& x);

// |PSL2(Z/mZ)| for odd m via the multiplicative formula
// m^3 * prod_{p|m} (1 - p^-2) / 2 (and 1 for m = 1); |PGL2(Z/qZ)| = q^3 - q
// for prime q. Throws std::invalid_argument for even m, or a non-prime
// modulus in the PGL case.
std::uint64_t group_order(long long m, Kind kind);

struct GroupSpec {
  long long modulus;
  Kind kind;
  std::uint64_t order;
};

GroupSpec make_group_spec(long long m, Kind kind);

// The quaternion-to-matrix embedding. With i = sqrt(-1) mod m the raw
// matrix is [x0+i*x1, x2+i*x3; -x2+i*x3, x0-i*x1]. When p is a square
// mod m the 1/sqrt(p) factor normalizes det to 1 and the result lives in
// PSL; when p is a non-residue mod a prime m the factor is omitted and
// the result lives in PGL (bipartite case). Throws ConstructionError
// naming the failing residue condition.
ProjMatrix lift_generator(const QuaternionSolution& s, long long m);

// Bijection between canonical matrices and dense indices 0..order-1,
// index 0 = identity.
class VertexTable {
 public:
  VertexTable() = default;

  std::uint64_t size() const { return keys_.size(); }
  ProjMatrix matrix_of(std::uint32_t idx) const;
  std::optional<std::uint32_t> find(const ProjMatrix& g) const;
  std::uint32_t index_of(const ProjMatrix& g) const;  // throws if absent

 private:
  friend std::pair<VertexTable, std::vector<std::uint32_t>> orbit_closure(
      const std::vector<ProjMatrix>& gens, std::uint64_t order_budget);

  // returns index, inserting if new
  std::uint32_t find_or_insert(std::uint64_t key);
  void reserve(std::uint64_t expected);

  std::vector<std::uint64_t> keys_;   // index -> packed matrix
  std::vector<std::uint32_t> slots_;  // open addressing, value = index + 1
  std::uint64_t mask_ = 0;
  long long mod_ = 1;
  Kind kind_ = Kind::PSL;
};

// Closes the orbit of the identity under right multiplication by gens,
// recording one adjacency slot per generator in order. The single pass
// both enumerates the group and proves connectivity: the table covers the
// whole group iff its size equals the group order. Throws ResourceError
// when the orbit exceeds order_budget.
std::pair<VertexTable, std::vector<std::uint32_t>> orbit_closure(
    const std::vector<ProjMatrix>& gens, std::uint64_t order_budget);

// Vertex table for the full group; throws ResourceError when spec.order is
// over the memory budget and ConstructionError when gens fail to generate.
VertexTable enumerate_group(const GroupSpec& spec,
                            const std::vector<ProjMatrix>& gens);

inline constexpr std::uint64_t kOrderBudget = 12'000'000;

}  // namespace rama
