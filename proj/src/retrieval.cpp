#include "ldop/retrieval.hpp"

#include "ldop/error.hpp"
#include "ldop/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <fmt/format.h>
#include "json.hpp"

namespace ldop {

DatasetIndex::DatasetIndex(std::vector<DescriptorRecord> records) : records_(std::move(records)) {
    if (records_.empty()) {
        throw ArgumentError("cannot build an index from an empty dataset");
    }
    const Descriptor& first = records_.front().descriptor;
    entry_class_.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& rec = records_[i];
        if (!rec.descriptor.same_layout(first)) {
            throw ArgumentError("descriptor layout of " + rec.id + " differs from " + records_.front().id);
        }
        auto cls = find_class(rec.label);
        if (!cls) {
            cls = class_labels_.size();
            class_labels_.push_back(rec.label);
            class_sizes_.push_back(0);
            members_.emplace_back();
        }
        entry_class_.push_back(*cls);
        ++class_sizes_[*cls];
        members_[*cls].push_back(i);
    }
}

std::optional<std::size_t> DatasetIndex::find_class(std::string_view label) const {
    const auto it = std::find(class_labels_.begin(), class_labels_.end(), label);
    if (it == class_labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - class_labels_.begin());
}

namespace {

// Ranks the first `depth` entries of the index by distance to `q`.
std::vector<Match> ranked(const DatasetIndex& index, std::span<const double> q, std::size_t depth, DistanceMeasure m) {
    const std::size_t n = index.size();
    std::vector<Match> all(n);
    for (std::size_t i = 0; i < n; ++i) {
        all[i] = {i, distance(q, index.entry(i).descriptor.values, m)};
    }
    depth = std::min(depth, n);
    const auto closer = [](const Match& a, const Match& b) {
        return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
    };
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(depth), all.end(), closer);
    all.resize(depth);
    return all;
}

struct QueryOutcome {
    std::vector<std::size_t> hits; // relevant items in the top gamma, per gamma
    double nmrr = 0.0;
};

QueryOutcome run_query(const DatasetIndex& index, std::size_t qi, std::span<const std::size_t> gammas,
                       DistanceMeasure m) {
    const std::size_t cls = index.class_of(qi);
    const std::size_t ng = index.class_size(cls);
    const std::size_t gamma_max = gammas.empty() ? 0 : *std::max_element(gammas.begin(), gammas.end());
    const auto list = ranked(index, index.entry(qi).descriptor.values, std::max(gamma_max, 2 * ng), m);

    QueryOutcome out;
    std::vector<std::size_t> prefix_hits(list.size() + 1, 0);
    std::vector<std::size_t> ranks;
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
        const bool relevant = index.class_of(list[pos].index) == cls;
        prefix_hits[pos + 1] = prefix_hits[pos] + (relevant ? 1 : 0);
        if (relevant) {
            ranks.push_back(pos + 1);
        }
    }
    for (const auto g : gammas) {
        out.hits.push_back(prefix_hits[std::min(g, list.size())]);
    }
    out.nmrr = nmrr(ranks, ng);
    return out;
}

void require_gammas(std::span<const std::size_t> gammas) {
    if (std::find(gammas.begin(), gammas.end(), std::size_t{0}) != gammas.end()) {
        throw ArgumentError("gamma must be at least 1");
    }
}

} // namespace

std::vector<Match> query(const DatasetIndex& index, const Descriptor& q, std::size_t gamma, DistanceMeasure m) {
    if (gamma == 0) {
        throw ArgumentError("gamma must be at least 1");
    }
    if (!q.same_layout(index.entry(0).descriptor)) {
        throw ArgumentError("query descriptor layout does not match the index");
    }
    return ranked(index, q.values, gamma, m);
}

PrecisionRecall precision_recall(std::span<const Match> retrieved, std::string_view query_label,
                                 const DatasetIndex& index) {
    const auto cls = index.find_class(query_label);
    if (!cls) {
        throw ArgumentError("unknown class label '" + std::string(query_label) + "'");
    }
    if (retrieved.empty()) {
        throw ArgumentError("empty retrieval list");
    }
    const auto hits = static_cast<double>(std::count_if(
        retrieved.begin(), retrieved.end(), [&](const Match& mt) { return index.class_of(mt.index) == *cls; }));
    return {100.0 * hits / static_cast<double>(retrieved.size()),
            100.0 * hits / static_cast<double>(index.class_size(*cls))};
}

double nmrr(std::span<const std::size_t> ranks, std::size_t relevant_count) {
    if (relevant_count == 0) {
        throw ArgumentError("NMRR needs at least one relevant item");
    }
    const double ng = static_cast<double>(relevant_count);
    const double window = 2.0 * ng;
    double sum = 0.0;
    std::size_t counted = 0;
    for (const auto r : ranks) {
        if (counted == relevant_count) {
            break;
        }
        sum += static_cast<double>(r) <= window ? static_cast<double>(r) : 1.25 * window;
        ++counted;
    }
    sum += static_cast<double>(relevant_count - counted) * 1.25 * window;
    const double avr = sum / ng;
    const double mrr = avr - 0.5 - ng / 2.0;
    return mrr / (1.25 * window - 0.5 - ng / 2.0);
}

MetricsReport evaluate(const DatasetIndex& index, std::span<const std::size_t> gammas, DistanceMeasure m,
                       int workers) {
    require_gammas(gammas);
    const std::size_t n = index.size();
    std::vector<QueryOutcome> outcomes(n);
    parallel_for(n, workers, [&](std::size_t qi) { outcomes[qi] = run_query(index, qi, gammas, m); });

    MetricsReport report;
    for (std::size_t g = 0; g < gammas.size(); ++g) {
        const double retrieved = static_cast<double>(std::min(gammas[g], n));
        double arp = 0.0;
        double arr = 0.0;
        for (std::size_t cls = 0; cls < index.class_count(); ++cls) {
            double ap = 0.0;
            double ar = 0.0;
            for (const auto qi : index.class_members(cls)) {
                const auto hits = static_cast<double>(outcomes[qi].hits[g]);
                ap += 100.0 * hits / retrieved;
                ar += 100.0 * hits / static_cast<double>(index.class_size(cls));
            }
            arp += ap / static_cast<double>(index.class_size(cls));
            arr += ar / static_cast<double>(index.class_size(cls));
        }
        arp /= static_cast<double>(index.class_count());
        arr /= static_cast<double>(index.class_count());
        const double f = arp + arr > 0.0 ? 2.0 * arp * arr / (arp + arr) : 0.0;
        report.rows.push_back({gammas[g], arp, arr, f});
    }
    double total = 0.0;
    for (const auto& o : outcomes) {
        total += o.nmrr;
    }
    report.anmrr = 100.0 * total / static_cast<double>(n);
    return report;
}

double anmrr(const DatasetIndex& index, DistanceMeasure m, int workers) {
    return evaluate(index, {}, m, workers).anmrr;
}

void write_metrics_csv(std::ostream& out, const MetricsReport& report) {
    out << "gamma,ARP,ARR,F-score\n";
    for (const auto& row : report.rows) {
        out << fmt::format("{},{:.6f},{:.6f},{:.6f}\n", row.gamma, row.arp, row.arr, row.f_score);
    }
    out << fmt::format("ANMRR,{:.6f}\n", report.anmrr);
}

std::string metrics_json(const MetricsReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"gamma", row.gamma}, {"ARP", row.arp}, {"ARR", row.arr}, {"F-score", row.f_score}});
    }
    return nlohmann::json{{"rows", rows}, {"ANMRR", report.anmrr}}.dump(2);
}

} // namespace ldop
