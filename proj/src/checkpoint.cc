// Binary checkpoints of a beta table

#include "msarea/checkpoint.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace msarea {
namespace {

constexpr char kMagic[4] = {'M', 'S', 'B', '1'};

class Writer {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* c = static_cast<const unsigned char*>(p);
    buf_.insert(buf_.end(), c, c + n);
  }
  template <class T>
  void le(T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
      buf_.push_back(static_cast<unsigned char>(static_cast<std::uint64_t>(value) >> (8 * i)));
  }
  std::vector<unsigned char>& buffer() { return buf_; }

 private:
  std::vector<unsigned char> buf_;
};

class Reader {
 public:
  Reader(const unsigned char* data, std::size_t size) : p_(data), end_(data + size) {}

  const unsigned char* take(std::size_t n) {
    if (static_cast<std::size_t>(end_ - p_) < n)
      throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: truncated file");
    const auto* r = p_;
    p_ += n;
    return r;
  }
  template <class T>
  T le() {
    const auto* b = take(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
      v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return static_cast<T>(v);
  }
  bool done() const { return p_ == end_; }

 private:
  const unsigned char* p_;
  const unsigned char* end_;
};

void put_value(Writer& w, double x) { w.le(std::bit_cast<std::uint64_t>(x)); }

void put_value(Writer& w, const DyadicRational& x) {
  const mpz_class& num = x.numerator();
  std::size_t count = 0;
  std::vector<unsigned char> mag((mpz_sizeinbase(num.get_mpz_t(), 2) + 7) / 8 + 1);
  mpz_export(mag.data(), &count, -1, 1, -1, 0, num.get_mpz_t());
  w.le<std::uint64_t>(count);
  w.le<std::uint8_t>(x.sign() < 0 ? 1 : 0);
  w.bytes(mag.data(), count);
  w.le<std::uint64_t>(x.exponent());
}

void get_value(Reader& r, double& x) { x = std::bit_cast<double>(r.le<std::uint64_t>()); }

void get_value(Reader& r, DyadicRational& x) {
  const auto count = r.le<std::uint64_t>();
  const auto sign = r.le<std::uint8_t>();
  if (sign > 1)
    throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: bad sign byte");
  const auto* mag = r.take(count);
  mpz_class num;
  if (count)
    mpz_import(num.get_mpz_t(), count, -1, 1, -1, 0, mag);
  if (sign)
    num = -num;
  const auto exponent = r.le<std::uint64_t>();
  if (exponent > (std::uint64_t(1) << 40))
    throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: exponent out of range");
  x = DyadicRational::from_parts(std::move(num), static_cast<std::int64_t>(exponent));
}

std::vector<unsigned char> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CheckpointError(CheckpointError::Kind::io, "checkpoint: cannot open " + path.string());
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad())
    throw CheckpointError(CheckpointError::Kind::io, "checkpoint: read failed for " + path.string());
  return data;
}

// Checks magic, version and digest, then parses the header.
CheckpointInfo verify_header(const std::vector<unsigned char>& data, Reader& r) {
  if (data.size() < sizeof(kMagic) + 4 + 8 || std::memcmp(data.data(), kMagic, sizeof(kMagic)) != 0)
    throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: bad magic");
  r.take(sizeof(kMagic));
  CheckpointInfo info;
  info.version = r.le<std::uint32_t>();
  if (info.version != kCheckpointVersion)
    throw CheckpointError(CheckpointError::Kind::version_mismatch,
                          "checkpoint: version " + std::to_string(info.version) + ", expected " +
                              std::to_string(kCheckpointVersion));
  const std::size_t body = data.size() - 8;
  Reader tail(data.data() + body, 8);
  if (tail.le<std::uint64_t>() != fnv1a64(data.data(), body))
    throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: digest mismatch");
  const auto mode = r.le<std::uint8_t>();
  if (mode > 1)
    throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: unknown mode byte");
  info.mode = static_cast<Mode>(mode);
  info.m_done = static_cast<std::int64_t>(r.le<std::uint64_t>());
  const auto rows = r.le<std::uint32_t>();
  if (rows > 64)
    throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: implausible row count");
  for (std::uint32_t i = 0; i < rows; ++i)
    info.row_lengths.push_back(r.le<std::uint64_t>());
  return info;
}

}  // namespace

std::uint64_t fnv1a64(const unsigned char* data, std::size_t size) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

template <class V>
void checkpoint_save(const BetaTable<V>& table, const std::filesystem::path& path) {
  Writer w;
  w.bytes(kMagic, sizeof(kMagic));
  w.le<std::uint32_t>(kCheckpointVersion);
  w.le<std::uint8_t>(static_cast<std::uint8_t>(BetaTable<V>::mode));
  w.le<std::uint64_t>(static_cast<std::uint64_t>(table.m_done()));
  const int rows = table.m_done() >= 1 ? top_row(table.m_done()) + 1 : 0;
  w.le<std::uint32_t>(static_cast<std::uint32_t>(rows));
  for (int n = 0; n < rows; ++n)
    w.le<std::uint64_t>(table.row(n).size());
  for (int n = 0; n < rows; ++n)
    for (const auto& v : table.row(n))
      put_value(w, v);
  auto& buf = w.buffer();
  w.le<std::uint64_t>(fnv1a64(buf.data(), buf.size()));

  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw CheckpointError(CheckpointError::Kind::io, "checkpoint: cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    out.flush();
    if (!out)
      throw CheckpointError(CheckpointError::Kind::io, "checkpoint: write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw CheckpointError(CheckpointError::Kind::io, "checkpoint: rename failed: " + ec.message());
}

template <class V>
BetaTable<V> checkpoint_load(const std::filesystem::path& path) {
  const auto data = read_file(path);
  Reader r(data.data(), data.size());
  const auto info = verify_header(data, r);
  if (info.mode != BetaTable<V>::mode)
    throw CheckpointError(CheckpointError::Kind::mode_mismatch,
                          std::string("checkpoint: file holds a ") + to_string(info.mode) + " table, expected " +
                              to_string(BetaTable<V>::mode));
  std::vector<std::vector<V>> rows(info.row_lengths.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (info.row_lengths[n] > data.size())
      throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: implausible row length");
    rows[n].resize(info.row_lengths[n]);
    for (auto& v : rows[n])
      get_value(r, v);
  }
  r.le<std::uint64_t>();  // digest, already verified
  if (!r.done())
    throw CheckpointError(CheckpointError::Kind::corrupt, "checkpoint: trailing bytes");
  try {
    return BetaTable<V>::from_rows(std::move(rows), info.m_done);
  } catch (const std::invalid_argument& e) {
    throw CheckpointError(CheckpointError::Kind::corrupt, std::string("checkpoint: ") + e.what());
  }
}

CheckpointInfo checkpoint_inspect(const std::filesystem::path& path) {
  const auto data = read_file(path);
  Reader r(data.data(), data.size());
  return verify_header(data, r);
}

template void checkpoint_save(const BetaTable<double>&, const std::filesystem::path&);
template void checkpoint_save(const BetaTable<DyadicRational>&, const std::filesystem::path&);
template BetaTable<double> checkpoint_load(const std::filesystem::path&);
template BetaTable<DyadicRational> checkpoint_load(const std::filesystem::path&);

}  // namespace msarea
