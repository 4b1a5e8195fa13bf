#pragma once

#include <cstdint>
#include <string>

#include "drcl/param_vector.hpp"

namespace drcl {

struct CheckpointMeta {
    std::string config_hash;
    std::uint64_t seed = 0;
    std::int64_t task = -1; // last completed task, -1 for "initial"
};

// Versioned binary container: magic "DRCL", u32 version, u64 header length,
// JSON header (d, layout, meta, payload hash), then d little-endian f64.
// Round trips are bitwise exact.
void save_checkpoint(const ParamVector& params, const CheckpointMeta& meta,
                     const std::string& path);

struct LoadedCheckpoint {
    ParamVector params;
    CheckpointMeta meta;
};

// Throws CheckpointVersionError / CheckpointHashError /
// CheckpointTruncationError / FormatError as appropriate.
LoadedCheckpoint load_checkpoint(const std::string& path);

} // namespace drcl
