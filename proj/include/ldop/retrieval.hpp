#pragma once

#include "ldop/descriptor_io.hpp"
#include "ldop/distance.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldop {

/// Immutable, exhaustively scanned descriptor database. Classes are numbered
/// in order of first appearance; entries keep their input order, which also
/// decides distance ties.
class DatasetIndex {
public:
    /// Throws ArgumentError on an empty input or mixed layouts.
    explicit DatasetIndex(std::vector<DescriptorRecord> records);

    [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }
    [[nodiscard]] const DescriptorRecord& entry(std::size_t i) const { return records_[i]; }
    [[nodiscard]] std::span<const DescriptorRecord> entries() const noexcept { return records_; }

    [[nodiscard]] std::size_t class_count() const noexcept { return class_labels_.size(); }
    [[nodiscard]] std::size_t class_of(std::size_t entry) const { return entry_class_[entry]; }
    [[nodiscard]] std::size_t class_size(std::size_t cls) const { return class_sizes_[cls]; }
    [[nodiscard]] const std::string& class_label(std::size_t cls) const { return class_labels_[cls]; }
    [[nodiscard]] std::optional<std::size_t> find_class(std::string_view label) const;
    /// Entry indices of a class, ascending.
    [[nodiscard]] std::span<const std::size_t> class_members(std::size_t cls) const { return members_[cls]; }

private:
    std::vector<DescriptorRecord> records_;
    std::vector<std::size_t> entry_class_;
    std::vector<std::string> class_labels_;
    std::vector<std::size_t> class_sizes_;
    std::vector<std::vector<std::size_t>> members_;
};

struct Match {
    std::size_t index;
    double distance;

    friend bool operator==(const Match&, const Match&) = default;
};

/// The min(gamma, size) nearest entries, ascending by distance then by index.
/// Throws ArgumentError for gamma == 0 or a layout mismatch.
[[nodiscard]] std::vector<Match> query(const DatasetIndex& index, const Descriptor& q, std::size_t gamma,
                                       DistanceMeasure m);

struct PrecisionRecall {
    double precision; // percent
    double recall;    // percent
};

/// Precision over the retrieved list (denominator = retrieved.size(), i.e.
/// gamma clamped to the database size) and recall against the full size of
/// the query's class. The query itself counts as a relevant hit.
[[nodiscard]] PrecisionRecall precision_recall(std::span<const Match> retrieved, std::string_view query_label,
                                               const DatasetIndex& index);

/// Normalized modified retrieval rank for one query (fraction in [0, 1]).
/// ranks: 1-based positions of the relevant items in the full ranking;
/// relevant_count: NG. Window K = 2 NG; ranks beyond K count as 1.25 K.
[[nodiscard]] double nmrr(std::span<const std::size_t> ranks, std::size_t relevant_count);

struct MetricsRow {
    std::size_t gamma;
    double arp;
    double arr;
    double f_score;

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct MetricsReport {
    std::vector<MetricsRow> rows;
    double anmrr = 0.0; // percent, lower is better

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Uses every entry as a query against the whole index. ARP/ARR average
/// per-class means; ANMRR averages over all queries.
[[nodiscard]] MetricsReport evaluate(const DatasetIndex& index, std::span<const std::size_t> gammas,
                                     DistanceMeasure m, int workers = 1);

/// ANMRR (percent) with every entry as a query.
[[nodiscard]] double anmrr(const DatasetIndex& index, DistanceMeasure m, int workers = 1);

/// gamma,ARP,ARR,F-score rows then an "ANMRR,<value>" footer; six decimals.
void write_metrics_csv(std::ostream& out, const MetricsReport& report);
[[nodiscard]] std::string metrics_json(const MetricsReport& report);

} // namespace ldop
