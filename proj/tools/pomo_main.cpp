#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pomo/errors.hpp"
#include "pomo/reports.hpp"

namespace {

pomo::PosetDocument read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return pomo::parse_document(buffer.str(), "<stdin>");
    }
    return pomo::load_document(path);
}

void emit(const pomo::CommandResult& result, const std::string& json_path) {
    std::cout << result.text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) pomo::fail(pomo::ErrorKind::ValidationError, "cannot write '" + json_path + "'");
        out << result.data.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morse matchings on finite posets: validation, filtrations, homology"};
    app.require_subcommand(1);

    pomo::CommandOptions opt;
    std::string json_path;
    bool permissive = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--permissive", permissive,
                      "accept uncertified homology-trivial links (default: strict)");
        cmd->add_option("--budget", opt.budget, "collapse search step budget")
            ->default_val(100000);
        cmd->add_option("--seed", opt.seed, "random seed")->default_val(0);
        cmd->add_option("--json", json_path, "write the structured report to this path");
    };

    std::string file, file2, element;

    auto* validate = app.add_subcommand("validate", "check the Morse function and matching");
    validate->add_option("file", file, "input .poset file ('-' for stdin)")->required();
    validate->add_flag("--height", opt.use_height, "use the height function, ignoring f values");
    validate->add_flag("--relative", opt.relative, "relative mode over the A down-set");
    add_common(validate);

    auto* critical = app.add_subcommand("critical", "list critical points by level");
    critical->add_option("file", file)->required();
    critical->add_flag("--height", opt.use_height);
    critical->add_flag("--relative", opt.relative);
    add_common(critical);

    auto* filtration = app.add_subcommand("filtration", "build and verify the filtration");
    filtration->add_option("file", file)->required();
    filtration->add_flag("--height", opt.use_height);
    filtration->add_flag("--relative", opt.relative);
    add_common(filtration);

    auto* relative_filtration =
        app.add_subcommand("relative-filtration", "filtration over the A down-set");
    relative_filtration->add_option("file", file)->required();
    relative_filtration->add_flag("--height", opt.use_height);
    add_common(relative_filtration);

    auto* homology = app.add_subcommand("homology", "reduced homology of the order complex");
    homology->add_option("file", file)->required();
    add_common(homology);

    auto* descending =
        app.add_subcommand("descending-link", "descending link of one element and its homology");
    descending->add_option("file", file)->required();
    descending->add_option("element", element, "element identifier")->required();
    add_common(descending);

    auto* hregular = app.add_subcommand("hregular", "check h-regularity of the poset");
    hregular->add_option("file", file)->required();
    add_common(hregular);

    auto* join_cmd = app.add_subcommand("join", "ordinal sum of two posets (canonical output)");
    join_cmd->add_option("left", file)->required();
    join_cmd->add_option("right", file2)->required();
    add_common(join_cmd);

    auto* opposite_cmd = app.add_subcommand("opposite", "opposite poset (canonical output)");
    opposite_cmd->add_option("file", file)->required();
    add_common(opposite_cmd);

    auto* search = app.add_subcommand("search", "heuristic minimization of critical points");
    search->add_option("file", file)->required();
    search->add_option("--restarts", opt.restarts, "greedy restarts")->default_val(32);
    add_common(search);

    auto* exhaustive =
        app.add_subcommand("exhaustive", "certified minimum critical count (small posets)");
    exhaustive->add_option("file", file)->required();
    exhaustive->add_option("--limit", opt.limit, "element count limit")->default_val(12);
    add_common(exhaustive);

    CLI11_PARSE(app, argc, argv);
    if (permissive) opt.mode = pomo::Mode::Permissive;
    if (relative_filtration->parsed()) opt.relative = true;

    try {
        pomo::CommandResult result;
        if (validate->parsed()) result = pomo::cmd_validate(read_input(file), opt);
        else if (critical->parsed()) result = pomo::cmd_critical(read_input(file), opt);
        else if (filtration->parsed() || relative_filtration->parsed())
            result = pomo::cmd_filtration(read_input(file), opt);
        else if (homology->parsed()) result = pomo::cmd_homology(read_input(file), opt);
        else if (descending->parsed())
            result = pomo::cmd_descending_link(read_input(file), element, opt);
        else if (hregular->parsed()) result = pomo::cmd_hregular(read_input(file), opt);
        else if (join_cmd->parsed())
            result = pomo::cmd_join(read_input(file), read_input(file2), opt);
        else if (opposite_cmd->parsed()) result = pomo::cmd_opposite(read_input(file), opt);
        else if (search->parsed()) result = pomo::cmd_search(read_input(file), opt);
        else if (exhaustive->parsed()) result = pomo::cmd_exhaustive(read_input(file), opt);

        emit(result, json_path);
        return result.exit_code;
    } catch (const pomo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
