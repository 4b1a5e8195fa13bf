#pragma once

#include <string>

#include "drcl/tasks.hpp"

namespace drcl {

// Big-endian IDX (MNIST family). Images: magic 0x00000803, u8, 3 dims,
// pixels scaled to [0,1]. Labels: magic 0x00000801, u8, 1 dim.
// Malformed files throw FormatError naming the observed magic or the
// expected-vs-actual byte counts.
Dataset load_idx_images(const std::string& path);
std::vector<int> load_idx_labels(const std::string& path);
Dataset load_idx_pair(const std::string& images_path, const std::string& labels_path);

} // namespace drcl
