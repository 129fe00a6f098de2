#include "ldop/commands.hpp"

#include "ldop/dataset.hpp"
#include "ldop/descriptor_io.hpp"
#include "ldop/order.hpp"
#include "ldop/parallel.hpp"
#include "ldop/retrieval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

namespace ldop {

namespace fs = std::filesystem;

namespace {

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ArgumentError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

std::string spec_label(const RadiusRange& r) {
    if (r.lo == r.hi) {
        return std::to_string(r.lo);
    }
    return r.hi < 10 ? fmt::format("{}{}", r.lo, r.hi) : fmt::format("{}-{}", r.lo, r.hi);
}

std::vector<Segment> ldop_layout(const RadiusRange& r) {
    std::vector<Segment> layout;
    for (int radius = r.lo; radius <= r.hi; ++radius) {
        layout.push_back({DescriptorKind::Ldop, radius});
    }
    return layout;
}

void require_path(const fs::path& p, std::string_view flag) {
    if (p.empty()) {
        throw ArgumentError("missing required option " + std::string(flag));
    }
}

int report_failures(const std::vector<ExtractionFailure>& failures, std::ostream& err) {
    bool io = false;
    for (const auto& f : failures) {
        err << "failed: " << f.path << ": " << f.message << '\n';
        io = io || f.io_error;
    }
    err << failures.size() << " image(s) could not be processed\n";
    return io ? kExitIo : kExitInput;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    return out;
}

std::uint16_t scale_to_byte(std::uint64_t value, std::uint64_t lo, std::uint64_t hi) {
    if (hi <= lo) {
        return 0;
    }
    return static_cast<std::uint16_t>(
        std::lround(255.0 * static_cast<double>(value - lo) / static_cast<double>(hi - lo)));
}

} // namespace

DescriptorChoice parse_descriptor_choice(std::string_view name) {
    if (name == "ldop") return DescriptorChoice::Ldop;
    if (name == "ldop-multi") return DescriptorChoice::LdopMulti;
    if (name == "lbp") return DescriptorChoice::Lbp;
    throw ArgumentError("unknown descriptor '" + std::string(name) + "' (expected ldop, ldop-multi or lbp)");
}

RadiusRange parse_radius_spec(std::string_view spec) {
    RadiusRange range;
    const auto sep = spec.find_first_of("-:");
    if (sep != std::string_view::npos) {
        range = {parse_int(spec.substr(0, sep), "radius spec"), parse_int(spec.substr(sep + 1), "radius spec")};
    } else if (spec.size() == 2) {
        range = {parse_int(spec.substr(0, 1), "radius spec"), parse_int(spec.substr(1, 1), "radius spec")};
    } else {
        const int r = parse_int(spec, "radius spec");
        range = {r, r};
    }
    if (range.lo < 2 || range.hi > 12 || range.lo > range.hi) {
        throw ArgumentError("radius spec '" + std::string(spec) +
                            "' must describe radii with 2 <= R1 <= R2 <= 12");
    }
    return range;
}

std::vector<RadiusRange> parse_radius_specs(std::string_view list) {
    std::vector<RadiusRange> specs;
    for (const auto part : split(list, ',')) {
        specs.push_back(parse_radius_spec(part));
    }
    return specs;
}

std::vector<std::size_t> parse_gamma_list(std::string_view text) {
    std::vector<std::size_t> gammas;
    for (const auto part : split(text, ',')) {
        const auto dash = part.find('-');
        const int lo = parse_int(part.substr(0, dash), "gamma");
        const int hi = dash == std::string_view::npos ? lo : parse_int(part.substr(dash + 1), "gamma");
        if (lo < 1 || hi < lo) {
            throw ArgumentError("invalid gamma entry '" + std::string(part) + "'");
        }
        for (int g = lo; g <= hi; ++g) {
            gammas.push_back(static_cast<std::size_t>(g));
        }
    }
    return gammas;
}

std::vector<Segment> layout_for(const RunConfig& config) {
    switch (config.descriptor) {
        case DescriptorChoice::Ldop:
            if (config.radius < 2) {
                throw ArgumentError("LDOP radius must be at least 2");
            }
            return {{DescriptorKind::Ldop, config.radius}};
        case DescriptorChoice::LdopMulti:
            return ldop_layout(config.radii);
        case DescriptorChoice::Lbp:
            return {{DescriptorKind::Lbp, config.radius}};
    }
    return {};
}

int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err) {
    require_path(config.dataset, "--dataset");
    require_path(config.out, "--out");
    const auto layout = layout_for(config);
    const auto items = scan_dataset(config.dataset);
    const auto result =
        extract_dataset(config.dataset, items, layout, config.directions, config.image_size, config.workers);
    if (!result.failures.empty()) {
        return report_failures(result.failures, err);
    }
    write_descriptors(config.out, result.records);
    if (!config.csv.empty()) {
        auto csv = open_output(config.csv);
        write_descriptor_csv(csv, result.records);
    }
    out << fmt::format("wrote {} descriptors of length {} to {}\n", result.records.size(),
                       result.records.front().descriptor.values.size(), config.out.string());
    return kExitOk;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream&) {
    require_path(config.descriptors, "--descriptors");
    const DatasetIndex index(read_descriptors(config.descriptors));
    const auto report = evaluate(index, config.gammas, config.distance, config.workers);
    if (config.out.empty()) {
        write_metrics_csv(out, report);
    } else {
        auto file = open_output(config.out);
        write_metrics_csv(file, report);
    }
    if (!config.json.empty()) {
        auto file = open_output(config.json);
        file << metrics_json(report) << '\n';
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& config, const std::vector<RadiusRange>& specs, std::ostream& out,
              std::ostream& err) {
    require_path(config.dataset, "--dataset");
    if (specs.empty()) {
        throw ArgumentError("sweep needs at least one radius spec");
    }
    if (config.gammas.empty()) {
        throw ArgumentError("sweep needs a gamma value");
    }
    const std::size_t gamma = *std::max_element(config.gammas.begin(), config.gammas.end());
    const auto items = scan_dataset(config.dataset);

    std::vector<std::optional<GrayImage>> images(items.size());
    std::vector<std::optional<ExtractionFailure>> errors(items.size());
    parallel_for(items.size(), config.workers, [&](std::size_t i) {
        try {
            images[i] = load_preprocessed(config.dataset / items[i].relative_path, config.image_size);
        } catch (const IoError& e) {
            errors[i] = ExtractionFailure{items[i].relative_path, e.what(), true};
        } catch (const std::exception& e) {
            errors[i] = ExtractionFailure{items[i].relative_path, e.what(), false};
        }
    });
    std::vector<ExtractionFailure> failures;
    for (auto& e : errors) {
        if (e) {
            failures.push_back(std::move(*e));
        }
    }
    if (!failures.empty()) {
        return report_failures(failures, err);
    }

    std::ostringstream table;
    table << "spec,F-score@" << gamma << '\n';
    const std::size_t gammas[] = {gamma};
    for (const auto& spec : specs) {
        const auto layout = ldop_layout(spec);
        std::vector<DescriptorRecord> records(items.size());
        parallel_for(items.size(), config.workers, [&](std::size_t i) {
            records[i] = {items[i].relative_path, items[i].label, describe(*images[i], layout, config.directions)};
        });
        const DatasetIndex index(std::move(records));
        const auto report = evaluate(index, gammas, config.distance, config.workers);
        table << fmt::format("{},{:.6f}\n", spec_label(spec), report.rows.front().f_score);
    }
    if (config.out.empty()) {
        out << table.str();
    } else {
        auto file = open_output(config.out);
        file << table.str();
    }
    return kExitOk;
}

int cmd_query(const RunConfig& config, const fs::path& image, std::size_t gamma, std::ostream& out,
              std::ostream&) {
    require_path(config.descriptors, "--descriptors");
    require_path(image, "--image");
    const DatasetIndex index(read_descriptors(config.descriptors));
    const auto& reference = index.entry(0).descriptor;
    const auto img = load_preprocessed(image, config.image_size);
    const auto q = describe(img, reference.layout, reference.directions);
    const auto matches = query(index, q, gamma, config.distance);
    out << "rank,path,class,distance\n";
    for (std::size_t i = 0; i < matches.size(); ++i) {
        const auto& entry = index.entry(matches[i].index);
        out << fmt::format("{},{},{},{:.10g}\n", i + 1, entry.id, entry.label, matches[i].distance);
    }
    return kExitOk;
}

int cmd_maps(const RunConfig& config, const fs::path& image, std::ostream& out, std::ostream&) {
    require_path(image, "--image");
    require_path(config.out, "--out");
    const auto img = load_gray(image);
    std::error_code ec;
    fs::create_directories(config.out, ec);
    if (ec) {
        throw IoError("cannot create output directory " + config.out.string() + ": " + ec.message());
    }
    const RadiusRange radii =
        config.descriptor == DescriptorChoice::Ldop ? RadiusRange{config.radius, config.radius} : config.radii;
    const std::uint64_t code_max = (std::uint64_t{1} << config.directions) - 1;

    const auto emit = [&](const std::string& name, int rows, int cols, const auto& values, auto scale) {
        std::vector<std::uint16_t> pixels(values.size());
        std::transform(values.begin(), values.end(), pixels.begin(), scale);
        write_pgm(GrayImage(cols, rows, std::move(pixels)), config.out / name);
        out << (config.out / name).string() << '\n';
    };

    const auto lbp = lbp_map(img, {config.directions, 1});
    emit("lbp.pgm", lbp.rows, lbp.cols, lbp.codes, [&](std::uint32_t c) { return scale_to_byte(c, 0, code_max); });
    for (int R = radii.lo; R <= radii.hi; ++R) {
        const NeighborSpec spec{config.directions, R};
        const auto ldop = ldop_map(img, spec);
        emit(fmt::format("ldop_R{}.pgm", R), ldop.rows, ldop.cols, ldop.codes,
             [&](std::uint32_t c) { return scale_to_byte(c, 0, code_max); });
        const std::uint64_t omega_max = factorial(R);
        for (int k = 1; k <= config.directions; ++k) {
            const auto omap = order_map(img, k, spec);
            emit(fmt::format("order_R{}_k{}.pgm", R, k), omap.rows, omap.cols, omap.cells,
                 [&](std::uint32_t w) { return scale_to_byte(w, 1, omega_max); });
        }
    }
    return kExitOk;
}

} // namespace ldop
