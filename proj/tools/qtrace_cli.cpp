// qtrace: analyze triangulated surfaces, verify the invariant suite, normal forms
#include "qtrace/suite.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

using namespace qtrace;
using nlohmann::json;

namespace {

// a file path, or the name of a built-in fixture (T3, S4, P5, A11)
SurfaceSpec resolve_surface(const std::string& arg) {
    if (std::filesystem::exists(arg)) return load_spec(arg);
    return builtin(arg);
}

void write_json(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("IOError", "cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string field(const json& j, const char* key) {
    if (!j.contains(key)) return "-";
    const json& v = j.at(key);
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void summary(const json& r) {
    std::cout << r["surface"].get<std::string>() << (r["reduced"].get<bool>() ? " (reduced)" : "")
              << " n=" << r["params"]["n"] << " order=" << r["params"]["order"];
    const json& c = r.value("center", json::object());
    if (field(c, "status") == "checked")
        std::cout << " rank=" << field(c, "rank") << " formula=" << field(c, "rank_formula")
                  << " pi_degree=" << field(c, "pi_degree") << " center_equal=" << field(c, "equal");
    else if (r.contains("trace"))
        std::cout << " trace skipped: " << r["trace"]["reason"].get<std::string>();
    else
        std::cout << " theorem checks skipped";
    std::cout << "\n";
    for (const auto& e : r.value("ledger", json::array()))
        if (!e["pass"].get<bool>()) std::cout << "  FAIL " << e["id"].get<std::string>() << " " << e["detail"].get<std::string>() << "\n";
    for (const auto& w : r.value("warnings", json::array())) std::cout << "  warning: " << w.get<std::string>() << "\n";
}

template <typename F>
json sweep(const Grid& g, F run) {
    std::vector<std::future<json>> jobs;
    for (int n : g.n)
        for (long long o : g.order) jobs.push_back(std::async(std::launch::async, run, n, o));
    json out = json::array();
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum trace matrices, center lattices and ranks"};
    app.require_subcommand(1);

    std::string surface, json_path, grid_text, matrix_path;
    int n = 2;
    long long order = 3;
    std::vector<long long> orders;
    bool reduced = false;
    std::uint64_t seed = kDefaultSeed;

    auto* an = app.add_subcommand("analyze", "full pipeline on one surface");
    an->add_option("--surface", surface, "surface JSON file or built-in name")->required();
    an->add_option("--n", n, "rank n >= 2");
    an->add_option("--order", order, "order m'' of q-hat squared");
    an->add_flag("--reduced", reduced, "use the reduced vertex set");
    an->add_option("--json", json_path, "write the report here");
    an->add_option("--grid", grid_text, "sweep, e.g. \"n=2,3;order=3,5\"");
    an->add_option("--seed", seed, "recorded in the report");

    auto* ve = app.add_subcommand("verify", "run the invariant suite; exit 0 iff all pass");
    ve->add_option("--surface", surface, "surface JSON file or built-in name")->required();
    ve->add_option("--n", n, "rank n >= 2");
    ve->add_option("--order", orders, "orders m'' (repeatable)");
    ve->add_option("--json", json_path, "write the failure list here");
    ve->add_option("--grid", grid_text, "sweep, e.g. \"n=2,3;order=3,5\"");
    ve->add_option("--seed", seed, "seed for randomized checks");

    auto* nfc = app.add_subcommand("normal-form", "anti-symmetric normal form of a matrix file");
    nfc->add_option("--matrix", matrix_path, "JSON array of rows, or {\"data\": ...}")->required();
    nfc->add_option("--json", json_path, "write the report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*an) {
            const SurfaceSpec spec = resolve_surface(surface);
            auto run = [&](int nn, long long oo) {
                json r = analyze(spec, {nn, oo, reduced});
                r["seed"] = seed;
                return r;
            };
            json out;
            if (!grid_text.empty()) {
                out = {{"schema", kSchema}, {"grid", sweep(parse_grid(grid_text), run)}};
                for (const auto& r : out["grid"]) summary(r);
            } else {
                out = run(n, order);
                summary(out);
            }
            write_json(json_path, out);
            return 0;
        }
        if (*ve) {
            const SurfaceSpec spec = resolve_surface(surface);
            if (orders.empty()) orders = {3, 5};
            auto run = [&](int nn, const std::vector<long long>& oo) {
                json r = to_json(verify(spec, nn, oo, seed));
                r["surface"] = spec.name;
                r["n"] = nn;
                r["orders"] = oo;
                r["seed"] = seed;
                return r;
            };
            json out;
            bool ok = true;
            if (!grid_text.empty()) {
                const Grid g = parse_grid(grid_text);
                std::vector<std::future<json>> jobs;
                for (int nn : g.n) jobs.push_back(std::async(std::launch::async, run, nn, g.order));
                out = {{"schema", kSchema}, {"grid", json::array()}};
                for (auto& j : jobs) out["grid"].push_back(j.get());
            } else {
                out = {{"schema", kSchema}, {"grid", json::array({run(n, orders)})}};
            }
            for (const auto& r : out["grid"]) {
                const bool rok = r["ok"].get<bool>();
                ok = ok && rok;
                std::cout << r["surface"].get<std::string>() << " n=" << r["n"] << " orders=" << r["orders"].dump()
                          << ": " << r["checks"].size() << " checks, " << r["failures"].size() << " failed, "
                          << r["skipped"].size() << " skipped\n";
                for (const auto& c : r["checks"])
                    if (!c["pass"].get<bool>()) std::cout << "  FAIL " << c["id"].get<std::string>() << " " << c["detail"].get<std::string>() << "\n";
                for (const auto& s : r["skipped"])
                    std::cout << "  skip " << s["id"].get<std::string>() << ": " << s["reason"].get<std::string>() << "\n";
            }
            write_json(json_path, out);
            return ok ? 0 : 1;
        }
        if (*nfc) {
            std::ifstream in(matrix_path);
            if (!in) throw Error("IOError", "cannot open " + matrix_path);
            json j = json::parse(in);
            if (j.is_object()) j = j.at("data");
            const json r = normal_form_report(matrix_from_json(j));
            std::cout << "h =";
            for (const auto& h : r["h"]) std::cout << " " << h.dump();
            std::cout << "  zeros = " << r["zero_count"] << "  verified = " << r["verified"] << "\n";
            write_json(json_path, r);
            return r["verified"].get<bool>() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
