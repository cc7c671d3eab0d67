#include "cpe/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "cpe/errors.hpp"

namespace cpe {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

namespace {

class Writer {
 public:
  template <class T>
  void put(T v) {
    const auto* p = reinterpret_cast<const char*>(&v);
    bytes_.insert(bytes_.end(), p, p + sizeof(T));
  }
  void put_array(const std::vector<double>& a) {
    const auto* p = reinterpret_cast<const char*>(a.data());
    bytes_.insert(bytes_.end(), p, p + a.size() * sizeof(double));
  }
  const std::vector<char>& bytes() const { return bytes_; }

 private:
  std::vector<char> bytes_;
};

class Reader {
 public:
  explicit Reader(std::vector<char> b) : bytes_(std::move(b)) {}
  template <class T>
  T get() {
    need(sizeof(T));
    T v;
    std::memcpy(&v, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  void get_array(std::vector<double>& a) {
    need(a.size() * sizeof(double));
    std::memcpy(a.data(), bytes_.data() + pos_, a.size() * sizeof(double));
    pos_ += a.size() * sizeof(double);
  }
  std::size_t pos() const { return pos_; }
  std::size_t size() const { return bytes_.size(); }
  void need(std::size_t n) const {
    if (pos_ + n > bytes_.size()) throw FormatFault("truncated snapshot", bytes_.size());
  }

 private:
  std::vector<char> bytes_;
  std::size_t pos_ = 0;
};

std::vector<char> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFault("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SnapshotHeader parse_header(Reader& r) {
  r.need(4);
  char magic[4];
  for (char& c : magic) c = r.get<char>();
  if (std::memcmp(magic, "CPE1", 4) != 0) throw FormatFault("bad magic", 0);
  SnapshotHeader h;
  h.version = r.get<std::uint32_t>();
  if (h.version != kSnapshotVersion)
    throw FormatFault("unsupported version " + std::to_string(h.version), 4);
  const std::size_t dims_at = r.pos();
  h.nx = static_cast<int>(r.get<std::uint32_t>());
  h.ny = static_cast<int>(r.get<std::uint32_t>());
  h.nz = static_cast<int>(r.get<std::uint32_t>());
  try {
    Grid check(h.nx, h.ny, h.nz);
  } catch (const ConstraintFault& e) {
    throw FormatFault(std::string("invalid grid dimensions: ") + e.what(), dims_at);
  }
  h.time = r.get<double>();
  h.gamma = r.get<double>();
  h.mu = r.get<double>();
  h.lambda = r.get<double>();
  h.kappa = r.get<double>();
  h.R = r.get<double>();
  h.epsilon = r.get<double>();
  return h;
}

}  // namespace

void write_snapshot(const std::string& path, const State& state, double time,
                    const PhysParams& params) {
  const Grid& g = state.grid();
  Writer w;
  for (char c : {'C', 'P', 'E', '1'}) w.put(c);
  w.put(kSnapshotVersion);
  w.put(static_cast<std::uint32_t>(g.nx()));
  w.put(static_cast<std::uint32_t>(g.ny()));
  w.put(static_cast<std::uint32_t>(g.nz()));
  w.put(time);
  for (double x : {params.gamma(), params.mu(), params.lambda(), params.kappa(),
                   params.gas_constant(), params.epsilon()})
    w.put(x);
  w.put_array(state.v[0].raw());
  w.put_array(state.v[1].raw());
  w.put_array(state.sigma.raw());
  w.put_array(state.p.raw());

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFault("cannot open '" + path + "' for writing");
  out.write(w.bytes().data(), static_cast<std::streamsize>(w.bytes().size()));
  if (!out) throw IoFault("write to '" + path + "' failed");
}

SnapshotHeader read_snapshot_header(const std::string& path) {
  Reader r(slurp(path));
  return parse_header(r);
}

Snapshot read_snapshot(const std::string& path) {
  Reader r(slurp(path));
  const SnapshotHeader h = parse_header(r);
  const Grid grid(h.nx, h.ny, h.nz);
  const std::size_t expect =
      kSnapshotHeaderBytes + 8 * (3 * grid.size3() + grid.size2());
  if (r.size() < expect) throw FormatFault("truncated snapshot", r.size());
  if (r.size() > expect) throw FormatFault("trailing bytes after snapshot", expect);
  State s(grid);
  r.get_array(s.v[0].raw());
  r.get_array(s.v[1].raw());
  r.get_array(s.sigma.raw());
  r.get_array(s.p.raw());
  PhysParams params;
  try {
    params = PhysParams(h.gamma, h.mu, h.lambda, h.kappa, h.R, h.epsilon);
  } catch (const ConstraintFault& e) {
    throw FormatFault(std::string("invalid parameters: ") + e.what(), 32);
  }
  return Snapshot{std::move(s), h.time, params};
}

}  // namespace cpe
