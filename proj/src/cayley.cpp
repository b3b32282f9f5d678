#include "rama/cayley.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <set>
#include <stdexcept>

#include "rama/errors.hpp"
#include "rama/splitmix64.hpp"

namespace rama {

namespace {

constexpr std::uint16_t kFormatVersion = 1;
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint8_t kind_byte(const CayleyGraph& g) {
  if (g.prov == Provenance::Random) return 2;
  return g.kind == Kind::PSL ? 0 : 1;
}

// Streams the serialized form to a sink while folding the FNV-1a checksum.
template <typename Sink>
std::uint64_t stream_graph(const CayleyGraph& g, Sink&& sink) {
  std::uint64_t h = kFnvOffset;
  auto put = [&](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= kFnvPrime;
    }
    sink(data, len);
  };
  auto put_u16 = [&](std::uint16_t v) {
    unsigned char b[2] = {static_cast<unsigned char>(v),
                          static_cast<unsigned char>(v >> 8)};
    put(b, 2);
  };
  auto put_u32 = [&](std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    put(b, 4);
  };
  auto put_u64 = [&](std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    put(b, 8);
  };

  put("LPSG", 4);
  put_u16(kFormatVersion);
  unsigned char kb[2] = {kind_byte(g), 0};
  put(kb, 2);
  put_u64(g.p);
  put_u64(g.m);
  put_u64(g.seed);
  put_u64(g.n);
  put_u16(g.k);
  put_u16(0);
  for (const auto& gen : g.generators) {
    put_u32(gen.a); put_u32(gen.b); put_u32(gen.c); put_u32(gen.d);
  }
  for (std::uint32_t v : g.adjacency) put_u32(v);
  return h;
}

struct Reader {
  const unsigned char* p;
  const unsigned char* end;
  void need(std::size_t n) const {
    if (static_cast<std::size_t>(end - p) < n)
      throw std::runtime_error("load: file truncated");
  }
  void raw(void* out, std::size_t n) {
    need(n);
    std::memcpy(out, p, n);
    p += n;
  }
  std::uint16_t u16() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(p[0] | (p[1] << 8));
    p += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    p += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    p += 8;
    return v;
  }
};

// Uniform element of PSL2(Z/qZ): uniform entries until invertible, then
// conditioned on det being a square and scaled by 1/sqrt(det).
ProjMatrix sample_psl(SplitMix64& rng, long long q) {
  for (;;) {
    long long a = static_cast<long long>(rng.next_below(q));
    long long b = static_cast<long long>(rng.next_below(q));
    long long c = static_cast<long long>(rng.next_below(q));
    long long d = static_cast<long long>(rng.next_below(q));
    long long det = ((a * d - b * c) % q + q) % q;
    if (det == 0) continue;
    if (legendre(det, q) != 1) continue;  // square half the time
    long long s = *sqrt_mod(det, q);
    // divide by sqrt(det); inverse exists since q is prime
    long long inv = 1, base = s, e = q - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % q;
      base = base * base % q;
      e >>= 1;
    }
    return canonical(a * inv % q, b * inv % q, c * inv % q, d * inv % q, q,
                     Kind::PSL);
  }
}

}  // namespace

const VertexTable& CayleyGraph::vertex_table() const {
  if (!table) {
    if (generators.empty())
      throw std::logic_error("vertex_table: graph has no generator list");
    auto [t, adj] = orbit_closure(generators, n);
    if (t.size() != n || adj != adjacency)
      throw std::runtime_error(
          "vertex_table: rebuilt orbit disagrees with stored adjacency");
    table = std::make_shared<const VertexTable>(std::move(t));
  }
  return *table;
}

CayleyGraph build_lps(long long p, long long m) {
  if (!is_prime(p) || p % 4 != 1)
    throw ConstructionError("p must be a prime congruent to 1 mod 4");
  if (m < 5 || m % 2 == 0)
    throw ConstructionError("m must be odd and >= 5");
  if (m % p == 0)
    throw ConstructionError("p must not divide m");
  auto sols = enumerate_generator_solutions(p);
  std::vector<ProjMatrix> gens;
  gens.reserve(sols.size());
  for (const auto& s : sols) gens.push_back(lift_generator(s, m));
  Kind kind = gens.front().kind;

  auto spec = make_group_spec(m, kind);
  if (spec.order > kOrderBudget)
    throw ResourceError("build_lps: " + std::to_string(spec.order) +
                        " vertices is over the memory budget");
  auto [table, adjacency] = orbit_closure(gens, spec.order);
  if (table.size() != spec.order)
    throw ConstructionError("build_lps: generators span a proper subgroup");

  CayleyGraph g;
  g.n = spec.order;
  g.k = static_cast<std::uint16_t>(gens.size());
  g.kind = kind;
  g.prov = Provenance::LPS;
  g.p = static_cast<std::uint64_t>(p);
  g.m = static_cast<std::uint64_t>(m);
  g.generators = std::move(gens);
  g.adjacency = std::move(adjacency);
  g.table = std::make_shared<const VertexTable>(std::move(table));
  return g;
}

CayleyGraph build_random_cayley(long long q, std::uint64_t seed) {
  if (q < 5 || !is_prime(q))
    throw ConstructionError("build_random_cayley: q must be an odd prime >= 5");
  auto spec = make_group_spec(q, Kind::PSL);
  if (spec.order > kOrderBudget)
    throw ResourceError("build_random_cayley: group order over budget");

  SplitMix64 rng(seed);
  ProjMatrix id = identity(q, Kind::PSL);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<ProjMatrix> gens;
    for (int i = 0; i < 3; ++i) {
      ProjMatrix s = sample_psl(rng, q);
      gens.push_back(s);
      gens.push_back(inverse(s));
    }
    std::set<std::uint64_t> distinct;
    bool ok = true;
    for (const auto& s : gens) {
      if (s == id) { ok = false; break; }
      distinct.insert(s.packed());
    }
    if (!ok || distinct.size() != 6) continue;
    auto [table, adjacency] = orbit_closure(gens, spec.order);
    if (table.size() != spec.order) continue;  // not connected, resample

    CayleyGraph g;
    g.n = spec.order;
    g.k = 6;
    g.kind = Kind::PSL;
    g.prov = Provenance::Random;
    g.m = static_cast<std::uint64_t>(q);
    g.seed = seed;
    g.generators = std::move(gens);
    g.adjacency = std::move(adjacency);
    g.table = std::make_shared<const VertexTable>(std::move(table));
    return g;
  }
  throw ResourceError("build_random_cayley: 1000 attempts exhausted");
}

std::uint64_t checksum(const CayleyGraph& g) {
  return stream_graph(g, [](const void*, std::size_t) {});
}

void save(const CayleyGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save: cannot open " + path.string());
  std::uint64_t h = stream_graph(g, [&](const void* data, std::size_t len) {
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
  });
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(h >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
  if (!out) throw std::runtime_error("save: write failed for " + path.string());
}

CayleyGraph load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw std::runtime_error("load: cannot open " + path.string());
  auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  std::vector<unsigned char> buf(size);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(size));
  if (!in) throw std::runtime_error("load: read failed for " + path.string());
  if (size < 52 + 8) throw std::runtime_error("load: file truncated");

  // checksum covers everything before the trailing 8 bytes
  std::uint64_t h = kFnvOffset;
  for (std::size_t i = 0; i + 8 < size; ++i) {
    h ^= buf[i];
    h *= kFnvPrime;
  }
  std::uint64_t stored = 0;
  for (int i = 0; i < 8; ++i)
    stored |= static_cast<std::uint64_t>(buf[size - 8 + i]) << (8 * i);
  if (h != stored) throw std::runtime_error("load: checksum mismatch");

  Reader r{buf.data(), buf.data() + size - 8};
  char magic[4];
  r.raw(magic, 4);
  if (std::memcmp(magic, "LPSG", 4) != 0)
    throw std::runtime_error("load: bad magic");
  std::uint16_t version = r.u16();
  if (version != kFormatVersion)
    throw std::runtime_error("load: unsupported format version " +
                             std::to_string(version));
  std::uint8_t kb;
  r.raw(&kb, 1);
  unsigned char reserved;
  r.raw(&reserved, 1);
  if (kb > 2) throw std::runtime_error("load: bad kind byte");

  CayleyGraph g;
  g.prov = kb == 2 ? Provenance::Random : Provenance::LPS;
  g.kind = kb == 1 ? Kind::PGL : Kind::PSL;
  g.p = r.u64();
  g.m = r.u64();
  g.seed = r.u64();
  g.n = r.u64();
  g.k = r.u16();
  r.u16();
  auto mod = static_cast<std::uint32_t>(g.m);
  for (std::uint16_t i = 0; i < g.k; ++i) {
    std::uint32_t a = r.u32(), b = r.u32(), c = r.u32(), d = r.u32();
    g.generators.push_back(ProjMatrix{a, b, c, d, mod, g.kind});
  }
  g.adjacency.resize(g.n * g.k);
  for (auto& v : g.adjacency) {
    v = r.u32();
    if (v >= g.n) throw std::runtime_error("load: vertex index out of range");
  }
  if (r.p != r.end) throw std::runtime_error("load: trailing bytes");
  return g;
}

}  // namespace rama
