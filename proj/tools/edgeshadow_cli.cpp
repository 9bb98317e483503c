// Command-line front end: generate shadow tables, verify them against the
// embedded reference corpus, evaluate the edge expansion, and run residual
// convergence studies.
//
// Exit codes: 0 success, 1 verification mismatch / slope out of tolerance,
// 2 solver or domain failure (message on stderr).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgeshadow/evaluator.hpp"
#include "edgeshadow/goldens.hpp"
#include "edgeshadow/latex.hpp"

using namespace edgeshadow;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string geometry = "crack";
    std::string kind = "primal";
};

Geometry geometry_of(const std::string& name) {
    auto g = Geometry::from_name(name);
    if (!g) throw DomainError("unknown geometry '" + name + "' (use crack or vnotch90)");
    return *g;
}

Kind kind_of(const std::string& name) {
    if (name == "primal") return Kind::Primal;
    if (name == "dual") return Kind::Dual;
    throw DomainError("unknown kind '" + name + "' (use primal or dual)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file " + path);
    out << content;
}

// --- generate ---------------------------------------------------------------

struct GenerateOpts : CommonOpts {
    std::vector<int> j{1};
    std::optional<int> j_to;
    int max_h = 0;
    int max_f = 0;
    std::optional<int> max_order;
    std::string format = "dsl";
    std::string output;
};

std::string render_table(const ShadowTable& table, Kind kind, const std::string& format) {
    std::vector<GoldenEntry> entries;
    for (const auto& [key, poly] : table.entries()) {
        GoldenEntry e;
        e.geometry = table.geometry().name();
        e.kind = key.kind;
        e.h = key.h;
        e.j = key.j;
        e.f = key.f;
        e.poly = poly;
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const GoldenEntry& a, const GoldenEntry& b) {
        return std::tuple(a.j, a.h, a.f) < std::tuple(b.j, b.h, b.f);
    });

    std::ostringstream os;
    if (format == "dsl") {
        for (const auto& e : entries) os << emit_entry(e, EmitFormat::Dsl);
    } else if (format == "json") {
        os << "[\n";
        for (std::size_t i = 0; i < entries.size(); ++i)
            os << "  " << emit_entry(entries[i], EmitFormat::Json) << (i + 1 < entries.size() ? ",\n" : "\n");
        os << "]\n";
    } else if (format == "latex") {
        // one eqnarray block per (j, h), ascending f, mirroring the table layout
        const char* fn = kind == Kind::Primal ? "\\phi" : "\\psi";
        std::size_t i = 0;
        while (i < entries.size()) {
            std::size_t begin = i;
            os << "\\begin{eqnarray}\n";
            while (i < entries.size() && entries[i].j == entries[begin].j && entries[i].h == entries[begin].h) {
                const auto& e = entries[i];
                os << fn << "_{" << e.h << "," << e.j << "," << e.f << "} & = & " << emit_poly_latex(e.poly);
                ++i;
                os << (i < entries.size() && entries[i].j == entries[begin].j && entries[i].h == entries[begin].h
                           ? " \\\\\n"
                           : "\n");
            }
            os << "\\end{eqnarray}\n";
        }
    } else if (format == "text") {
        const char* fn = kind == Kind::Primal ? "phi" : "psi";
        for (const auto& e : entries) {
            os << fn << "[h=" << e.h << ",j=" << e.j << ",f=" << e.f << "] = ";
            std::ostringstream body;
            body << e.poly;
            os << body.str() << "\n";
        }
    } else {
        throw DomainError("unknown format '" + format + "'");
    }
    return os.str();
}

int cmd_generate(const GenerateOpts& opt) {
    Geometry g = geometry_of(opt.geometry);
    Kind kind = kind_of(opt.kind);
    std::vector<int> js = opt.j;
    if (opt.j_to) {
        if (js.size() != 1) throw DomainError("--j-to needs exactly one --j");
        for (int j = js[0] + 1; j <= *opt.j_to; ++j) js.push_back(j);
    }
    ShadowTable table = build_table(g, kind, js, opt.max_h, opt.max_f, opt.max_order);
    write_output(opt.output, render_table(table, kind, opt.format));
    return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyOpts : CommonOpts {
    std::vector<int> j;
    bool all = false;
    bool filtered_geometry = false;
    bool filtered_kind = false;
    std::string golden_dir;
};

int cmd_verify(const VerifyOpts& opt) {
    std::vector<GoldenEntry> corpus;
    std::string corpus_source = "embedded corpus";
    std::string dir = opt.golden_dir;
    if (dir.empty())
        if (const char* env = std::getenv("SHADOW_GOLDEN_DIR")) dir = env;
    if (!dir.empty()) {
        corpus = load_corpus_dir(dir);
        corpus_source = dir;
    } else {
        corpus = embedded_corpus();
    }

    // scope filter
    std::vector<GoldenEntry> scoped;
    for (const auto& e : corpus) {
        if (!opt.all) {
            if (opt.filtered_geometry && to_string(e.geometry) != opt.geometry) continue;
            if (opt.filtered_kind && to_string(e.kind) != opt.kind) continue;
            if (!opt.j.empty() && std::find(opt.j.begin(), opt.j.end(), e.j) == opt.j.end()) continue;
        }
        scoped.push_back(e);
    }
    if (scoped.empty()) {
        std::cout << "verify: no corpus entries in scope (" << corpus_source << ")\n";
        return 0;
    }

    std::size_t total = 0, matched = 0, excluded = 0;
    std::vector<std::string> diffs;
    for (GeometryName gname : {GeometryName::Crack, GeometryName::VNotch90}) {
        Geometry g = Geometry::of(gname);
        ShadowTable table(g);
        std::vector<GoldenEntry> group;
        for (const auto& e : scoped)
            if (e.geometry == gname) group.push_back(e);
        if (group.empty()) continue;
        for (const auto& e : group) solve_shadow(e.key(), table);
        VerifyReport report = verify(table, group);
        total += report.total;
        matched += report.matched;
        for (const auto& m : report.mismatches) {
            std::ostringstream os;
            if (is_corpus_erratum(m.geometry, m.key)) {
                ++excluded;
                os << "known-erratum " << to_string(m.geometry) << " " << to_string(m.key) << ": " << m.first_diff;
            } else {
                os << "MISMATCH " << to_string(m.geometry) << " " << to_string(m.key) << ": " << m.first_diff;
            }
            diffs.push_back(os.str());
        }
    }

    std::size_t mismatched = total - matched - excluded;
    std::cout << "verified " << total << " entries against " << corpus_source << ": " << matched << " matched, "
              << mismatched << " mismatched";
    if (excluded > 0) std::cout << ", " << excluded << " known errata excluded (docs/errata.md)";
    std::cout << "\n";
    for (const auto& d : diffs) std::cout << "  " << d << "\n";
    return mismatched == 0 ? 0 : 1;
}

// --- eval -------------------------------------------------------------------

struct EvalOpts : CommonOpts {
    int j = 1;
    int K = 0;
    int mode = 0;
    double R = 1.0;
    double rho = 0.0;
    double phi = 0.0;
    double theta = 0.0;
    bool breakdown = false;
};

int cmd_eval(const EvalOpts& opt) {
    SeriesSpec spec;
    spec.geometry = geometry_of(opt.geometry);
    spec.kind = kind_of(opt.kind);
    spec.j = opt.j;
    spec.K = opt.K;
    spec.mode = opt.mode;
    spec.R = opt.R;
    ShadowTable table(spec.geometry);
    for (int h = 0; h <= opt.K; h += 2)
        for (int f = 0; h + f <= opt.K; ++f) solve_shadow({spec.kind, h, opt.j, f}, table);

    EdgePoint p{opt.rho, opt.phi, opt.theta};
    double tau = eval_tau(spec, table, p);
    ordered_json doc;
    doc["tau"] = tau;
    doc["rho"] = opt.rho;
    doc["phi"] = opt.phi;
    doc["theta"] = opt.theta;
    if (opt.breakdown) {
        auto parts = ordered_json::array();
        for (int h = 0; h <= opt.K; h += 2)
            for (int f = 0; h + f <= opt.K; ++f) {
                // contribution of the single (h, f) term
                double n2 = static_cast<double>(opt.mode) * opt.mode;
                double dtheta_factor = 1.0;
                for (int i = 0; i < h / 2; ++i) dtheta_factor *= -n2;
                double angular = eval(table.at({spec.kind, h, opt.j, f}), opt.phi);
                double alpha = spec.geometry.eigenvalue(opt.j).to_double();
                if (spec.kind == Kind::Dual) alpha = -alpha;
                double radial = std::pow(opt.rho, alpha + h + f) / std::pow(opt.R, h + f);
                double a_theta = opt.mode == 0 ? 1.0 : std::cos(opt.mode * opt.theta);
                ordered_json part;
                part["h"] = h;
                part["f"] = f;
                part["value"] = dtheta_factor * a_theta * radial * angular;
                parts.push_back(std::move(part));
            }
        doc["terms"] = std::move(parts);
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

// --- residual ---------------------------------------------------------------

struct ResidualOpts : CommonOpts {
    int j = 1;
    int K = 0;
    int mode = 0;
    double R = 1.0;
    double rho_min = 1e-3;
    double rho_max = 1e-2;
    int samples = 16;
    double tolerance = 0.3;
    std::string csv_path;
};

int cmd_residual(const ResidualOpts& opt) {
    SeriesSpec spec;
    spec.geometry = geometry_of(opt.geometry);
    spec.kind = kind_of(opt.kind);
    spec.j = opt.j;
    spec.K = opt.K;
    spec.mode = opt.mode;
    spec.R = opt.R;
    ShadowTable table(spec.geometry);
    for (int h = 0; h <= opt.K; h += 2)
        for (int f = 0; h + f <= opt.K; ++f) solve_shadow({spec.kind, h, opt.j, f}, table);

    SlopeReport report = residual_slope(spec, table, opt.rho_min, opt.rho_max, opt.samples);

    std::ostringstream csv;
    csv << "rho,abs_delta_tau\n";
    char line[80];
    for (const auto& [rho, delta] : report.samples) {
        std::snprintf(line, sizeof line, "%.12e,%.12e\n", rho, delta);
        csv << line;
    }
    if (!opt.csv_path.empty()) {
        write_output(opt.csv_path, csv.str());
    } else {
        std::cout << csv.str();
    }

    bool pass = std::abs(report.slope - report.expected) <= opt.tolerance;
    ordered_json doc;
    doc["slope"] = report.slope;
    doc["intercept"] = report.intercept;
    doc["expected"] = report.expected;
    doc["tolerance"] = opt.tolerance;
    doc["pass"] = pass;
    std::cout << doc.dump(2) << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge eigenfunction / shadow table generator and validator"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* sg = app.add_subcommand("generate", "solve shadow tables and print them");
    sg->add_option("--geometry", gen.geometry, "crack | vnotch90");
    sg->add_option("--kind", gen.kind, "primal | dual");
    sg->add_option("--j", gen.j, "eigenvalue index (repeatable)");
    sg->add_option("--j-to", gen.j_to, "extend a single --j to an inclusive range");
    sg->add_option("--max-h", gen.max_h, "largest theta-derivative order (even)");
    sg->add_option("--max-f", gen.max_f, "largest radial shadow order");
    sg->add_option("--max-order", gen.max_order, "optional cap on h+f (triangular layout)");
    sg->add_option("--format", gen.format, "dsl | latex | json | text");
    sg->add_option("--output,-o", gen.output, "output path (default stdout)");

    VerifyOpts ver;
    auto* sv = app.add_subcommand("verify", "regenerate tables and compare with the reference corpus");
    auto* vg = sv->add_option("--geometry", ver.geometry, "restrict to a geometry");
    auto* vk = sv->add_option("--kind", ver.kind, "restrict to primal or dual");
    sv->add_option("--j", ver.j, "restrict to eigenvalue indices (repeatable)");
    sv->add_flag("--all", ver.all, "verify the whole corpus");
    sv->add_option("--golden", ver.golden_dir, "directory of .dsl files overriding the embedded corpus");

    EvalOpts ev;
    auto* se = app.add_subcommand("eval", "evaluate the truncated edge expansion at a point");
    se->add_option("--geometry", ev.geometry);
    se->add_option("--kind", ev.kind);
    se->add_option("--j", ev.j);
    se->add_option("--K", ev.K, "truncation order: include h+f <= K");
    se->add_option("--mode", ev.mode, "Fourier mode of the intensity function");
    se->add_option("--R", ev.R, "edge radius");
    se->add_option("--rho", ev.rho);
    se->add_option("--phi", ev.phi);
    se->add_option("--theta", ev.theta);
    se->add_flag("--breakdown", ev.breakdown, "include per-(h,f) contributions");

    ResidualOpts res;
    auto* sr = app.add_subcommand("residual", "finite-difference Laplacian residual slope study");
    sr->add_option("--geometry", res.geometry);
    sr->add_option("--kind", res.kind);
    sr->add_option("--j", res.j);
    sr->add_option("--K", res.K);
    sr->add_option("--mode", res.mode);
    sr->add_option("--R", res.R);
    sr->add_option("--rho-min", res.rho_min);
    sr->add_option("--rho-max", res.rho_max);
    sr->add_option("--samples", res.samples);
    sr->add_option("--tolerance", res.tolerance, "acceptable |slope - expected| (default 0.3)");
    sr->add_option("--csv", res.csv_path, "write the rho,|delta tau| samples to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sg->parsed()) return cmd_generate(gen);
        if (sv->parsed()) {
            ver.filtered_geometry = vg->count() > 0;
            ver.filtered_kind = vk->count() > 0;
            return cmd_verify(ver);
        }
        if (se->parsed()) return cmd_eval(ev);
        if (sr->parsed()) return cmd_residual(res);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
