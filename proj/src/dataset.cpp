#include "ldop/dataset.hpp"

#include "ldop/error.hpp"
#include "ldop/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <system_error>

namespace ldop {

namespace fs = std::filesystem;

namespace {

bool is_image_file(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".pgm" || ext == ".pnm" || ext == ".ppm" || ext == ".png";
}

bool hidden(const fs::path& p) {
    const auto name = p.filename().string();
    return !name.empty() && name.front() == '.';
}

} // namespace

std::vector<DatasetItem> scan_dataset(const fs::path& root) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError("dataset root " + root.string() + " is not a readable directory");
    }
    std::vector<DatasetItem> items;
    for (const auto& class_dir : fs::directory_iterator(root)) {
        if (!class_dir.is_directory() || hidden(class_dir.path())) {
            continue;
        }
        const std::string label = class_dir.path().filename().string();
        for (const auto& file : fs::directory_iterator(class_dir.path())) {
            if (file.is_regular_file() && !hidden(file.path()) && is_image_file(file.path())) {
                items.push_back({fs::relative(file.path(), root).generic_string(), label});
            }
        }
    }
    if (items.empty()) {
        throw ArgumentError("no images found under " + root.string() + " (expected root/<class>/<image>)");
    }
    std::sort(items.begin(), items.end(), [](const DatasetItem& a, const DatasetItem& b) {
        return a.label != b.label ? a.label < b.label : a.relative_path < b.relative_path;
    });
    return items;
}

GrayImage load_preprocessed(const fs::path& path, int size) {
    return resize_bilinear(load_gray(path), size, size);
}

ExtractionResult extract_dataset(const fs::path& root, const std::vector<DatasetItem>& items,
                                 const std::vector<Segment>& layout, int directions, int size, int workers) {
    std::vector<std::optional<DescriptorRecord>> slots(items.size());
    std::vector<std::optional<ExtractionFailure>> errors(items.size());
    parallel_for(items.size(), workers, [&](std::size_t i) {
        const auto& item = items[i];
        try {
            const auto img = load_preprocessed(root / item.relative_path, size);
            slots[i] = DescriptorRecord{item.relative_path, item.label, describe(img, layout, directions)};
        } catch (const IoError& e) {
            errors[i] = ExtractionFailure{item.relative_path, e.what(), true};
        } catch (const std::exception& e) {
            errors[i] = ExtractionFailure{item.relative_path, e.what(), false};
        }
    });

    ExtractionResult result;
    for (auto& e : errors) {
        if (e) {
            result.failures.push_back(std::move(*e));
        }
    }
    if (result.failures.empty()) {
        result.records.reserve(items.size());
        for (auto& s : slots) {
            result.records.push_back(std::move(*s));
        }
    }
    return result;
}

} // namespace ldop
