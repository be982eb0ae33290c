#include "sk/certify.hpp"
#include "sk/curve.hpp"
#include "sk/dyadic.hpp"
#include "sk/extremal.hpp"
#include "sk/json_io.hpp"
#include "sk/metrics.hpp"
#include "sk/render.hpp"
#include "sk/rivals.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

unsigned depth_budget() {
    const char* raw = std::getenv("SK_DEPTH_BUDGET");
    if (!raw || !*raw) return 64;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1 || value > 4096) {
        throw std::domain_error("SK_DEPTH_BUDGET must be an integer between 1 and 4096");
    }
    return static_cast<unsigned>(value);
}

void check_depth(unsigned depth, const std::string& what) {
    const unsigned budget = depth_budget();
    if (depth > budget) {
        throw std::domain_error(what + " " + std::to_string(depth) + " exceeds the depth budget " +
                                std::to_string(budget) + " (set SK_DEPTH_BUDGET to change it)");
    }
}

std::string ratio_text(const sk::ExactRatio& r) {
    return r.str() + " (~" + std::to_string(r.to_double()) + ")";
}

void emit(const json& doc, bool as_json, const std::string& text) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Sierpinski-Knopp traversal toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate the curve at a time");
    std::string eval_t;
    unsigned eval_depth = 32;
    eval_cmd->add_option("--t", eval_t, "time in [0,1]: dyadic 'm/2^e' or decimal like 0.3")->required();
    eval_cmd->add_option("--depth", eval_depth, "resolution depth for decimal times");

    // slr
    auto* slr_cmd = app.add_subcommand("slr", "square-to-linear ratio between two times");
    std::string slr_t1, slr_t2;
    slr_cmd->add_option("--t1", slr_t1, "first dyadic time")->required();
    slr_cmd->add_option("--t2", slr_t2, "second dyadic time")->required();

    // locality
    auto* loc_cmd = app.add_subcommand("locality", "attained and certified locality bounds");
    unsigned loc_depth = 8;
    std::optional<unsigned> loc_certified;
    std::string loc_sweep;
    std::string loc_csv;
    loc_cmd->add_option("--depth", loc_depth, "sample grid depth");
    loc_cmd->add_option("--certified", loc_certified, "also certify an upper bound, refining to this depth");
    loc_cmd->add_option("--sweep", loc_sweep, "depth range LO:HI; reports one line per depth");
    loc_cmd->add_option("--csv", loc_csv, "write sweep results to a CSV file");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "check a sample table against the curve");
    std::string cert_input;
    std::string cert_tol;
    cert_cmd->add_option("--input", cert_input, "table JSON file, or '-' for stdin")->required();
    cert_cmd->add_option("--tol", cert_tol, "tolerance on squared distances (dyadic; defaults by encoding)");

    // tiling
    auto* tile_cmd = app.add_subcommand("tiling", "list the fractions of a given order");
    unsigned tile_order = 3;
    tile_cmd->add_option("--order", tile_order, "subdivision order");

    // render
    auto* render_cmd = app.add_subcommand("render", "render the traversal as SVG");
    sk::RenderSpec render_spec;
    std::string render_out;
    render_cmd->add_option("--order", render_spec.order, "subdivision order");
    render_cmd->add_option("--size", render_spec.canvas_size, "canvas width in pixels");
    render_cmd->add_flag("--subdivision", render_spec.show_subdivision, "draw the triangle edges");
    render_cmd->add_flag("!--no-arrow", render_spec.arrow_at_end, "omit the direction arrowhead");
    render_cmd->add_option("--out", render_out, "output file (default stdout)");

    // rival
    auto* rival_cmd = app.add_subcommand("rival", "locality scan of a rival curve");
    std::string rival_name = "hilbert";
    unsigned rival_depth = 8;
    rival_cmd->add_option("--curve", rival_name, "rival curve name (hilbert)");
    rival_cmd->add_option("--depth", rival_depth, "sample grid depth");

    // extremal
    auto* ext_cmd = app.add_subcommand("extremal", "grid search for the largest constrained triangle");
    unsigned ext_resolution = 512;
    ext_cmd->add_option("--resolution", ext_resolution, "grid resolution per side");

    // export-table
    auto* export_cmd = app.add_subcommand("export-table", "write the curve's own sample table");
    unsigned export_depth = 6;
    std::string export_out;
    export_cmd->add_option("--depth", export_depth, "table depth");
    export_cmd->add_option("--out", export_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (eval_cmd->parsed()) {
        if (eval_t.find('.') != std::string::npos) {
            check_depth(eval_depth, "evaluation depth");
            char* end = nullptr;
            const double t = std::strtod(eval_t.c_str(), &end);
            if (end == eval_t.c_str() || *end != '\0') {
                throw std::invalid_argument("cannot parse decimal time '" + eval_t + "'");
            }
            const sk::RealEvaluation r = sk::evaluate_real(t, eval_depth);
            emit(json{{"t", t},
                      {"depth", eval_depth},
                      {"point", sk::to_json(r.point)},
                      {"squared_error_bound", sk::to_json(r.squared_error_bound)}},
                 as_json,
                 "s(" + eval_t + ") ~ (" + r.point.x.str() + ", " + r.point.y.str() +
                     "), squared error <= " + r.squared_error_bound.str() + " at depth " +
                     std::to_string(eval_depth) + "\n");
        } else {
            const sk::Dyadic t = sk::Dyadic::parse(eval_t);
            const sk::Point p = sk::evaluate(t);
            emit(json{{"t", sk::to_json(t)}, {"point", sk::to_json(p)}}, as_json,
                 "s(" + t.str() + ") = (" + p.x.str() + ", " + p.y.str() + ")\n");
        }
        return 0;
    }

    if (slr_cmd->parsed()) {
        const sk::Dyadic t1 = sk::Dyadic::parse(slr_t1);
        const sk::Dyadic t2 = sk::Dyadic::parse(slr_t2);
        const sk::ExactRatio value = sk::slr(t1, t2);
        emit(json{{"t1", sk::to_json(t1)}, {"t2", sk::to_json(t2)}, {"slr", sk::to_json(value)}}, as_json,
             "slr(" + t1.str() + ", " + t2.str() + ") = " + ratio_text(value) + "\n");
        return 0;
    }

    if (loc_cmd->parsed()) {
        if (!loc_sweep.empty()) {
            const auto colon = loc_sweep.find(':');
            if (colon == std::string::npos) {
                throw std::invalid_argument("--sweep expects LO:HI");
            }
            const unsigned lo = static_cast<unsigned>(std::stoul(loc_sweep.substr(0, colon)));
            const unsigned hi = static_cast<unsigned>(std::stoul(loc_sweep.substr(colon + 1)));
            if (lo < 1 || hi < lo) throw std::invalid_argument("--sweep range must satisfy 1 <= LO <= HI");
            check_depth(hi, "sweep depth");

            json rows = json::array();
            std::string text;
            std::string csv = "depth,attained_max,certified_upper\n";
            for (unsigned d = lo; d <= hi; ++d) {
                const sk::LocalityReport attained = sk::locality_dyadic(d);
                std::string certified_str;
                json row{{"depth", d}, {"attained_max", sk::to_json(attained.attained_max)}};
                if (d >= 2) {
                    const sk::LocalityReport cert = sk::locality_certified(d);
                    certified_str = cert.certified_upper->str();
                    row["certified_upper"] = sk::to_json(*cert.certified_upper);
                }
                rows.push_back(row);
                text += "depth " + std::to_string(d) + ": attained " + attained.attained_max.str();
                if (!certified_str.empty()) text += ", certified upper " + certified_str;
                text += "\n";
                csv += std::to_string(d) + "," + attained.attained_max.str() + "," + certified_str + "\n";
            }
            if (!loc_csv.empty()) {
                std::ofstream out(loc_csv);
                if (!out) throw std::invalid_argument("cannot open CSV output file '" + loc_csv + "'");
                out << csv;
            }
            emit(rows, as_json, text);
            return 0;
        }

        check_depth(loc_depth, "locality depth");
        sk::LocalityReport report = sk::locality_dyadic(loc_depth);
        if (loc_certified) {
            check_depth(*loc_certified, "certification depth");
            const sk::LocalityReport cert = sk::locality_certified(*loc_certified);
            report.certified_upper = cert.certified_upper;
        }
        std::string text = "depth " + std::to_string(loc_depth) + ": attained max " +
                           ratio_text(report.attained_max) + " at t1 = " + report.witness.t1.str() +
                           ", t2 = " + report.witness.t2.str() + "\n";
        if (report.certified_upper) {
            text += "certified upper bound (all pairs): " + ratio_text(*report.certified_upper) + "\n";
        }
        emit(sk::to_json(report), as_json, text);
        return 0;
    }

    if (cert_cmd->parsed()) {
        sk::CandidateTable table;
        if (cert_input == "-") {
            table = sk::load_table(std::cin);
        } else {
            table = sk::load_table_file(cert_input);
        }
        const sk::Dyadic tol =
            cert_tol.empty() ? sk::default_tolerance(table.encoding) : sk::Dyadic::parse(cert_tol);
        const sk::Verdict verdict = sk::certify(table, tol);
        std::string text = verdict.pass ? "PASS: " : "FAIL: ";
        text += verdict.statement + "\n";
        emit(sk::to_json(verdict), as_json, text);
        return verdict.pass ? 0 : 2;
    }

    if (tile_cmd->parsed()) {
        check_depth(tile_order, "tiling order");
        const auto cells = sk::tiling(tile_order);
        if (as_json) {
            json arr = json::array();
            for (const auto& f : cells) arr.push_back(sk::to_json(f));
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& f : cells) {
                std::cout << "fraction " << f.index << " of order " << f.order << ": entry (" << f.entry.x.str()
                          << ", " << f.entry.y.str() << "), apex (" << f.right_angle.x.str() << ", "
                          << f.right_angle.y.str() << "), exit (" << f.exit.x.str() << ", " << f.exit.y.str()
                          << ")\n";
            }
        }
        return 0;
    }

    if (render_cmd->parsed()) {
        const std::string svg = sk::render_traversal_svg(render_spec);
        if (render_out.empty()) {
            std::cout << svg;
        } else {
            std::ofstream out(render_out, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot open output file '" + render_out + "'");
            out << svg;
        }
        return 0;
    }

    if (rival_cmd->parsed()) {
        if (rival_name != "hilbert") {
            throw std::domain_error("unknown rival curve '" + rival_name + "' (available: hilbert)");
        }
        check_depth(rival_depth, "rival depth");
        const sk::LocalityReport report = sk::rival_locality(sk::RivalCurveId::Hilbert, rival_depth);
        emit(sk::to_json(report), as_json,
             "hilbert depth " + std::to_string(rival_depth) + ": attained max " +
                 ratio_text(report.attained_max) + " at t1 = " + report.witness.t1.str() +
                 ", t2 = " + report.witness.t2.str() + "\n");
        return 0;
    }

    if (ext_cmd->parsed()) {
        const sk::ExtremalSearchResult result = sk::grid_search(ext_resolution);
        emit(json{{"max_area", result.max_area},
                  {"argmax", json::array({result.argmax.a, result.argmax.b, result.argmax.c})}},
             as_json,
             "max area " + std::to_string(result.max_area) + " at sides (" +
                 std::to_string(result.argmax.a) + ", " + std::to_string(result.argmax.b) + ", " +
                 std::to_string(result.argmax.c) + ")\n");
        return 0;
    }

    if (export_cmd->parsed()) {
        check_depth(export_depth, "table depth");
        const sk::CandidateTable table = sk::export_reference_table(export_depth);
        const std::string doc = sk::table_to_json_text(table);
        if (export_out.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(export_out, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot open output file '" + export_out + "'");
            out << doc;
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
