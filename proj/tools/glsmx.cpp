#include "glsmx/cli.hpp"
#include "glsmx/errors.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

int main(int argc, char** argv)
{
    using namespace glsmx;
    CLI::App app{"glsmx: exact checks for GLSM wall-crossing computations"};
    std::string command, config_path, out_path;
    std::optional<int> y_order, q_order;
    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(cli::commands()));
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--y-order", y_order, "Override truncations.y_max");
    app.add_option("--q-order", q_order, "Override truncations.q_max");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        nlohmann::json doc = nlohmann::json::object();
        std::string base = ".";
        if (!config_path.empty()) {
            doc = cli::read_config_document(config_path);
            auto dir = std::filesystem::path(config_path).parent_path().string();
            if (!dir.empty()) base = dir;
        }
        if (y_order) doc["truncations"]["y_max"] = *y_order;
        if (q_order) doc["truncations"]["q_max"] = *q_order;
        cli::Report rep = cli::run(command, cli::parse_config(doc, base));
        std::string text = rep.to_json().dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) throw ConfigError("cannot write " + out_path);
            out << text;
        }
        return rep.all_pass() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
