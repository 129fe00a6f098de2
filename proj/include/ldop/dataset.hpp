#pragma once

#include "ldop/descriptor_io.hpp"
#include "ldop/encoder.hpp"
#include "ldop/image.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ldop {

/// root/<class label>/<image>. Paths are relative to the root.
struct DatasetItem {
    std::string relative_path;
    std::string label;
};

/// Lists .pgm/.pnm/.ppm/.png files one directory below `root`, sorted by
/// class then file name. Throws IoError if root is not a directory and
/// ArgumentError if no images are found.
[[nodiscard]] std::vector<DatasetItem> scan_dataset(const std::filesystem::path& root);

/// Grayscale load followed by an unconditional resize to size x size.
[[nodiscard]] GrayImage load_preprocessed(const std::filesystem::path& path, int size);

struct ExtractionFailure {
    std::string path;
    std::string message;
    bool io_error;
};

struct ExtractionResult {
    std::vector<DescriptorRecord> records; // input order; empty on any failure
    std::vector<ExtractionFailure> failures;
};

/// Loads, preprocesses and describes every item. Output order follows the
/// input order for any worker count.
[[nodiscard]] ExtractionResult extract_dataset(const std::filesystem::path& root,
                                               const std::vector<DatasetItem>& items,
                                               const std::vector<Segment>& layout, int directions,
                                               int size, int workers);

} // namespace ldop
