#include "rama/pgl.hpp"

#include <stdexcept>
#include <string>

#include "rama/errors.hpp"

namespace rama {

namespace {

long long mod_norm(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// inverse of a unit mod m (extended gcd); -1 when not a unit
long long inv_mod(long long a, long long m) {
  long long r0 = m, r1 = mod_norm(a, m);
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  return r0 == 1 ? mod_norm(t0, m) : -1;
}

// canonical form, preconditions already checked (hot path of mul)
inline ProjMatrix canon_fast(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                             std::uint64_t d, std::uint32_t m, Kind kind) {
  if (kind == Kind::PSL) {
    std::uint64_t na = a ? m - a : 0, nb = b ? m - b : 0;
    std::uint64_t nc = c ? m - c : 0, nd = d ? m - d : 0;
    bool neg_smaller =
        na != a ? na < a : (nb != b ? nb < b : (nc != c ? nc < c : nd < d));
    if (neg_smaller) { a = na; b = nb; c = nc; d = nd; }
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
            static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d),
            m, kind};
  }
  std::uint64_t first = a ? a : (b ? b : (c ? c : d));
  std::uint64_t inv = static_cast<std::uint64_t>(inv_mod(first, m));
  return {static_cast<std::uint32_t>(a * inv % m),
          static_cast<std::uint32_t>(b * inv % m),
          static_cast<std::uint32_t>(c * inv % m),
          static_cast<std::uint32_t>(d * inv % m), m, kind};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

ProjMatrix canonical(long long a, long long b, long long c, long long d,
                     long long m, Kind kind) {
  if (m < 1) throw std::invalid_argument("canonical: modulus must be >= 1");
  a = mod_norm(a, m); b = mod_norm(b, m);
  c = mod_norm(c, m); d = mod_norm(d, m);
  long long det = mod_norm(a * d - b * c, m);
  if (m > 1 && inv_mod(det, m) < 0)
    throw std::invalid_argument("canonical: matrix not invertible mod m");
  if (kind == Kind::PSL && m > 1 && det != 1)
    throw std::invalid_argument("canonical: PSL requires det = 1 mod m");
  if (kind == Kind::PGL) {
    long long first = a ? a : (b ? b : (c ? c : d));
    if (m > 1 && inv_mod(first, m) < 0)
      throw std::invalid_argument(
          "canonical: PGL normalization needs a unit leading entry "
          "(prime modulus)");
  }
  return canon_fast(a, b, c, d, static_cast<std::uint32_t>(m), kind);
}

ProjMatrix identity(long long m, Kind kind) {
  if (m < 1) throw std::invalid_argument("identity: modulus must be >= 1");
  std::uint32_t one = m == 1 ? 0 : 1;
  return {one, 0, 0, one, static_cast<std::uint32_t>(m), kind};
}

ProjMatrix mul(const ProjMatrix& x, const ProjMatrix& y) {
  if (x.mod != y.mod || x.kind != y.kind)
    throw std::invalid_argument("mul: modulus/kind mismatch");
  std::uint64_t m = x.mod;
  // entries < 2^32, products accumulate in u64 with one reduction each
  std::uint64_t a = (static_cast<std::uint64_t>(x.a) * y.a + static_cast<std::uint64_t>(x.b) * y.c) % m;
  std::uint64_t b = (static_cast<std::uint64_t>(x.a) * y.b + static_cast<std::uint64_t>(x.b) * y.d) % m;
  std::uint64_t c = (static_cast<std::uint64_t>(x.c) * y.a + static_cast<std::uint64_t>(x.d) * y.c) % m;
  std::uint64_t d = (static_cast<std::uint64_t>(x.c) * y.b + static_cast<std::uint64_t>(x.d) * y.d) % m;
  return canon_fast(a, b, c, d, x.mod, x.kind);
}

ProjMatrix inverse(const ProjMatrix& x) {
  std::uint32_t m = x.mod;
  // adjugate; det = 1 in PSL, and PGL ignores the scalar det anyway
  std::uint64_t a = x.d;
  std::uint64_t b = x.b ? m - x.b : 0;
  std::uint64_t c = x.c ? m - x.c : 0;
  std::uint64_t d = x.a;
  return canon_fast(a, b, c, d, m, x.kind);
}

std::uint64_t group_order(long long m, Kind kind) {
  if (m < 1 || (m > 1 && m % 2 == 0))
    throw std::invalid_argument("group_order: m must be odd");
  if (m == 1) return 1;
  if (kind == Kind::PGL) {
    if (!is_prime(m))
      throw std::invalid_argument("group_order: PGL requires a prime modulus");
    return static_cast<std::uint64_t>(m) * m * m - m;
  }
  __int128 order = static_cast<__int128>(m) * m * m;
  for (auto [p, e] : factorize(m)) {
    (void)e;
    order = order / (p * p) * (p * p - 1);
  }
  order /= 2;
  if (order > static_cast<__int128>(UINT64_MAX))
    throw std::overflow_error("group_order: order exceeds 64 bits");
  return static_cast<std::uint64_t>(order);
}

GroupSpec make_group_spec(long long m, Kind kind) {
  return {m, kind, group_order(m, kind)};
}

ProjMatrix lift_generator(const QuaternionSolution& s, long long m) {
  if (m < 3 || m % 2 == 0)
    throw ConstructionError("lift_generator: modulus must be odd and >= 3");
  if (s.p % m == 0)
    throw ConstructionError("lift_generator: p divides m");
  auto i = sqrt_mod(m - 1, m);
  if (!i)
    throw ConstructionError("-1 is not a quadratic residue mod " +
                            std::to_string(m));
  long long a = mod_norm(s.x0 + *i * s.x1, m);
  long long b = mod_norm(s.x2 + *i * s.x3, m);
  long long c = mod_norm(-s.x2 + *i * s.x3, m);
  long long d = mod_norm(s.x0 - *i * s.x1, m);
  auto sp = sqrt_mod(s.p, m);
  if (sp) {
    // det of the raw matrix is p; dividing by sqrt(p) makes it 1
    long long inv = inv_mod(*sp, m);
    if (inv < 0)
      throw ConstructionError("sqrt(p) is not a unit mod " + std::to_string(m));
    return canonical(a * inv % m, b * inv % m, c * inv % m, d * inv % m, m,
                     Kind::PSL);
  }
  if (!is_prime(m))
    throw ConstructionError(
        "p is not a quadratic residue mod " + std::to_string(m) +
        " and the modulus is composite; the bipartite construction needs a "
        "prime modulus");
  return canonical(a, b, c, d, m, Kind::PGL);
}

ProjMatrix VertexTable::matrix_of(std::uint32_t idx) const {
  std::uint64_t key = keys_.at(idx);
  auto m = static_cast<std::uint64_t>(mod_);
  std::uint32_t d = static_cast<std::uint32_t>(key % m); key /= m;
  std::uint32_t c = static_cast<std::uint32_t>(key % m); key /= m;
  std::uint32_t b = static_cast<std::uint32_t>(key % m); key /= m;
  std::uint32_t a = static_cast<std::uint32_t>(key);
  return {a, b, c, d, static_cast<std::uint32_t>(mod_), kind_};
}

std::optional<std::uint32_t> VertexTable::find(const ProjMatrix& g) const {
  if (g.mod != static_cast<std::uint64_t>(mod_) || g.kind != kind_)
    return std::nullopt;
  std::uint64_t key = g.packed();
  std::uint64_t h = splitmix64(key) & mask_;
  while (slots_[h] != 0) {
    std::uint32_t idx = slots_[h] - 1;
    if (keys_[idx] == key) return idx;
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

std::uint32_t VertexTable::index_of(const ProjMatrix& g) const {
  auto r = find(g);
  if (!r) throw std::invalid_argument("VertexTable: matrix not in table");
  return *r;
}

std::uint32_t VertexTable::find_or_insert(std::uint64_t key) {
  std::uint64_t h = splitmix64(key) & mask_;
  while (slots_[h] != 0) {
    std::uint32_t idx = slots_[h] - 1;
    if (keys_[idx] == key) return idx;
    h = (h + 1) & mask_;
  }
  auto idx = static_cast<std::uint32_t>(keys_.size());
  keys_.push_back(key);
  slots_[h] = idx + 1;
  return idx;
}

void VertexTable::reserve(std::uint64_t expected) {
  std::uint64_t cap = 16;
  while (cap < expected * 2) cap <<= 1;
  slots_.assign(cap, 0);
  mask_ = cap - 1;
  keys_.reserve(expected);
}

std::pair<VertexTable, std::vector<std::uint32_t>> orbit_closure(
    const std::vector<ProjMatrix>& gens, std::uint64_t order_budget) {
  if (gens.empty()) throw std::invalid_argument("orbit_closure: no generators");
  if (order_budget > kOrderBudget)
    throw ResourceError("orbit_closure: order budget above the desk-scale cap");
  long long m = gens[0].mod;
  Kind kind = gens[0].kind;
  for (const auto& g : gens)
    if (g.mod != gens[0].mod || g.kind != kind)
      throw std::invalid_argument("orbit_closure: mixed moduli/kinds");

  VertexTable table;
  table.mod_ = m;
  table.kind_ = kind;
  table.reserve(order_budget);
  std::vector<std::uint32_t> adjacency;
  adjacency.reserve(order_budget * gens.size());

  table.find_or_insert(identity(m, kind).packed());
  std::uint32_t head = 0;
  while (head < table.keys_.size()) {
    ProjMatrix v = table.matrix_of(head);
    for (const auto& g : gens) {
      ProjMatrix w = mul(v, g);
      std::uint32_t idx = table.find_or_insert(w.packed());
      if (table.keys_.size() > order_budget)
        throw ResourceError("orbit_closure: orbit exceeded the order budget");
      adjacency.push_back(idx);
    }
    ++head;
  }
  return {std::move(table), std::move(adjacency)};
}

VertexTable enumerate_group(const GroupSpec& spec,
                            const std::vector<ProjMatrix>& gens) {
  if (spec.order > kOrderBudget)
    throw ResourceError("enumerate_group: group order " +
                        std::to_string(spec.order) +
                        " is over the memory budget");
  auto [table, adjacency] = orbit_closure(gens, spec.order);
  (void)adjacency;
  if (table.size() != spec.order)
    throw ConstructionError(
        "enumerate_group: generators span a proper subgroup (orbit " +
        std::to_string(table.size()) + " of " + std::to_string(spec.order) +
        ")");
  return std::move(table);
}

}  // namespace rama
