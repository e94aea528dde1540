#pragma once

#include <string>

#include "logse/grid.hpp"

namespace logse {

/// Snapshot file layout: a text header of `key: value` lines terminated
/// by one blank line, then the raw field payload -- every node of the
/// full lattice (boundary zeros included) as little-endian complex
/// doubles (re, im), row-major with the last axis fastest. Payload size
/// is exactly 16 * prod(J_i + 1) bytes.
struct SnapshotMeta {
  double time = 0.0;
  std::string scheme = "bdf1";
  double lambda = -1.0;
  double tau = 0.0;
};

struct Snapshot {
  GridFunction field;
  SnapshotMeta meta;
};

void write_snapshot(const std::string& path, const GridFunction& u,
                    const SnapshotMeta& meta);

/// Bitwise round-trip of write_snapshot. Throws std::runtime_error on a
/// malformed header or a short payload.
Snapshot read_snapshot(const std::string& path);

}  // namespace logse
