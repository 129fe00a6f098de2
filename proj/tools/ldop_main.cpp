// Command-line front end: extract, evaluate, sweep, query, maps.

#include "ldop/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Local directional order pattern descriptors and face-retrieval evaluation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value configuration file (command-line flags take precedence)");

    std::string descriptor = "ldop-multi";
    int radius = 2;
    std::string radii = "2-4";
    int neighbors = 8;
    std::string distance = "chisq";
    std::string gamma;
    std::string dataset;
    std::string descriptors;
    std::string out;
    std::string csv;
    std::string json;
    int size = 64;
    int workers = 1;

    app.add_option("--descriptor", descriptor, "ldop | ldop-multi | lbp")
        ->check(CLI::IsMember({"ldop", "ldop-multi", "lbp"}))
        ->capture_default_str();
    auto* radius_opt = app.add_option("--radius", radius, "radius for ldop (default 2) and lbp (default 1)");
    app.add_option("--radii", radii, "radius range for ldop-multi and maps, e.g. 2-4 or 24")->capture_default_str();
    app.add_option("--neighbors", neighbors, "number of directions N")->check(CLI::Range(2, 16))->capture_default_str();
    app.add_option("--distance", distance, "euclidean | cosine | l1 | d1 | chisq")
        ->check(CLI::IsMember({"euclidean", "cosine", "l1", "d1", "chisq"}))
        ->capture_default_str();
    app.add_option("--gamma", gamma, "retrieval depths, e.g. 1-10 or 1,5,10");
    app.add_option("--dataset", dataset, "dataset root laid out as <root>/<class>/<image>");
    app.add_option("--descriptors", descriptors, "descriptor file produced by extract");
    app.add_option("--out", out, "output file (directory for maps)");
    app.add_option("--csv", csv, "extract: also write descriptors as CSV");
    app.add_option("--json", json, "evaluate: also write metrics as JSON");
    app.add_option("--size", size, "side of the square preprocessing resize")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto* extract = app.add_subcommand("extract", "compute one descriptor per dataset image");
    auto* evaluate = app.add_subcommand("evaluate", "ARP/ARR/F-score per gamma and ANMRR");
    auto* sweep = app.add_subcommand("sweep", "F-score for a list of radius specs");
    std::string specs = "2,3,4,5,6,23,24,25,26";
    sweep->add_option("--specs", specs, "radius specs; one digit = radius, two digits = range")->capture_default_str();
    auto* query = app.add_subcommand("query", "rank the database against one image");
    std::string query_image;
    query->add_option("--image", query_image, "query image")->required();
    auto* maps = app.add_subcommand("maps", "dump LBP, LDOP and order-index maps as PGM");
    std::string maps_image;
    maps->add_option("--image", maps_image, "input image")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ldop::kExitOk : ldop::kExitInput;
    }

    return ldop::run_guarded(std::cerr, [&]() -> int {
        ldop::RunConfig config;
        config.descriptor = ldop::parse_descriptor_choice(descriptor);
        config.directions = neighbors;
        if (radius_opt->count() > 0) {
            config.radius = radius;
        } else {
            config.radius = config.descriptor == ldop::DescriptorChoice::Lbp ? 1 : 2;
        }
        config.radii = ldop::parse_radius_spec(radii);
        config.distance = *ldop::parse_distance(distance);
        if (!gamma.empty()) {
            config.gammas = ldop::parse_gamma_list(gamma);
        } else if (sweep->parsed()) {
            config.gammas = {10};
        }
        config.dataset = dataset;
        config.descriptors = descriptors;
        config.out = out;
        config.csv = csv;
        config.json = json;
        config.image_size = size;
        config.workers = workers;

        if (extract->parsed()) {
            return ldop::cmd_extract(config, std::cout, std::cerr);
        }
        if (evaluate->parsed()) {
            return ldop::cmd_evaluate(config, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            return ldop::cmd_sweep(config, ldop::parse_radius_specs(specs), std::cout, std::cerr);
        }
        if (query->parsed()) {
            const auto depth = gamma.empty() ? std::size_t{10} : config.gammas.back();
            return ldop::cmd_query(config, query_image, depth, std::cout, std::cerr);
        }
        return ldop::cmd_maps(config, maps_image, std::cout, std::cerr);
    });
}
