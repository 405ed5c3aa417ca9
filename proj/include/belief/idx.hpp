#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "belief/ann.hpp"

namespace belief {

// IDX ingestion: big-endian magic 0x00000803 (images) / 0x00000801 (labels).
// Keeps only samples whose label appears in keep_labels, mapping it to the
// associated bit.  28x28 images are reduced to 10x10 by block averaging
// (cell (i,j) covers source rows [i*28/10, (i+1)*28/10) and likewise for
// columns) and each cell binarized by mean >= byte_threshold.
dataset load_idx_dataset(const std::string& images_path, const std::string& labels_path,
                         const std::map<std::uint8_t, std::uint8_t>& keep_labels,
                         bool downsample_28_to_10 = true, std::uint8_t byte_threshold = 128);

// Raw IDX writers, used by tests and the bundled fixture.
void write_idx_images(const std::string& path,
                      const std::vector<std::vector<std::uint8_t>>& images, std::size_t rows,
                      std::size_t cols);
void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels);

// Deterministic stand-in for a 30-sample handwritten-digit subset: 15 ring
// images labelled 0 and 15 vertical-stroke images labelled 1, all 28x28
// grayscale, pairwise distinct after downsampling and binarization.  Writes
// <dir>/digits-images.idx and <dir>/digits-labels.idx, returns the two paths.
std::pair<std::string, std::string> write_synthetic_digits(const std::string& dir);

// The images themselves, for tests that inspect the generator.
std::vector<std::vector<std::uint8_t>> synthetic_digit_images();
std::vector<std::uint8_t> synthetic_digit_labels();

}  // namespace belief
