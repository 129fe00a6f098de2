#pragma once

#include "ldop/distance.hpp"
#include "ldop/encoder.hpp"
#include "ldop/error.hpp"

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ldop {

enum class DescriptorChoice { Ldop, LdopMulti, Lbp };

/// Inclusive radius range; a single radius has lo == hi.
struct RadiusRange {
    int lo = 2;
    int hi = 4;

    friend bool operator==(const RadiusRange&, const RadiusRange&) = default;
};

struct RunConfig {
    DescriptorChoice descriptor = DescriptorChoice::LdopMulti;
    int directions = 8;
    int radius = 2;             // ldop and lbp
    RadiusRange radii{2, 4};    // ldop-multi and maps
    DistanceMeasure distance = DistanceMeasure::ChiSquare;
    std::vector<std::size_t> gammas{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::filesystem::path dataset;
    std::filesystem::path descriptors; // descriptor file read by evaluate/query
    std::filesystem::path out;         // empty: stdout where that makes sense
    std::filesystem::path csv;         // optional CSV export from extract
    std::filesystem::path json;        // optional JSON metrics from evaluate
    int image_size = 64;
    int workers = 1;
};

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitIo = 2;

[[nodiscard]] DescriptorChoice parse_descriptor_choice(std::string_view name);

/// "3" -> {3,3}; "24" -> {2,4} (one digit per bound); "2-6" and "2:6" are
/// also accepted. Every radius must be in [2, 12] with lo <= hi.
[[nodiscard]] RadiusRange parse_radius_spec(std::string_view spec);

/// Comma-separated radius specs, e.g. "2,3,4,23,24".
[[nodiscard]] std::vector<RadiusRange> parse_radius_specs(std::string_view list);

/// "1-10", "5" or "1,2,5" (ranges may be mixed into the list).
[[nodiscard]] std::vector<std::size_t> parse_gamma_list(std::string_view text);

[[nodiscard]] std::vector<Segment> layout_for(const RunConfig& config);

/// Each command writes results to `out` (or the configured file) and
/// diagnostics to `err`, and returns an exit code. Library exceptions are
/// translated to exit codes by the caller.
int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, const std::vector<RadiusRange>& specs, std::ostream& out,
              std::ostream& err);
int cmd_query(const RunConfig& config, const std::filesystem::path& image, std::size_t gamma, std::ostream& out,
              std::ostream& err);
int cmd_maps(const RunConfig& config, const std::filesystem::path& image, std::ostream& out, std::ostream& err);

/// Runs fn and maps exceptions onto exit codes (IoError -> 2, others -> 1),
/// printing the message to err.
template <typename Fn>
int run_guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace ldop
