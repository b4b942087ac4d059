// Binary checkpoints of a beta table
//
// Layout, all integers little-endian:
//   "MSB1"  u32 version  u8 mode  u64 m_done  u32 row_count  u64 row_length[row_count]
//   values, row by row:
//     float: IEEE-754 binary64
//     exact: u64 magnitude byte count, u8 sign (1 = negative), magnitude bytes
//            (least significant first), u64 exponent
//   u64 FNV-1a digest of every preceding byte

#pragma once

#include "msarea/beta_table.h"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace msarea {

inline constexpr std::uint32_t kCheckpointVersion = 1;

class CheckpointError : public std::runtime_error {
 public:
  enum class Kind { io, corrupt, version_mismatch, mode_mismatch };

  CheckpointError(Kind kind, const std::string& what) : std::runtime_error(what), kind(kind) {}
  Kind kind;
};

struct CheckpointInfo {
  std::uint32_t version = 0;
  Mode mode = Mode::float64;
  std::int64_t m_done = 0;
  std::vector<std::uint64_t> row_lengths;
};

// Written to a temporary sibling first, then renamed over path.
template <class V>
void checkpoint_save(const BetaTable<V>& table, const std::filesystem::path& path);

template <class V>
BetaTable<V> checkpoint_load(const std::filesystem::path& path);

// Header of a verified checkpoint without decoding values.
CheckpointInfo checkpoint_inspect(const std::filesystem::path& path);

std::uint64_t fnv1a64(const unsigned char* data, std::size_t size);

}  // namespace msarea
