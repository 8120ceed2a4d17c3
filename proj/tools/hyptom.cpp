#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyptom/constructions.hpp"
#include "hyptom/io.hpp"
#include "hyptom/suites.hpp"
#include "hyptom/svg.hpp"

namespace {

using namespace hyptom;

HPoint parse_center(const std::string& spec) {
    auto colon = spec.find(':');
    auto comma = spec.find(',', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || comma == std::string::npos)
        throw std::runtime_error("bad point spec '" + spec + "', expected model:u,v");
    ModelPoint mp;
    mp.model = model_from_name(spec.substr(0, colon));
    mp.u = std::stod(spec.substr(colon + 1, comma - colon - 1));
    mp.v = std::stod(spec.substr(comma + 1));
    return from_model(mp);
}

// "cos:2", "sin:3:0.5", comma-separated mixtures
std::vector<FourierTerm> parse_terms(const std::string& spec) {
    std::vector<FourierTerm> terms;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        auto end = spec.find(',', pos);
        if (end == std::string::npos) end = spec.size();
        std::string item = spec.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;
        auto c1 = item.find(':');
        if (c1 == std::string::npos)
            throw std::runtime_error("bad term '" + item + "', expected cos:k[:amp]");
        std::string fn = item.substr(0, c1);
        auto c2 = item.find(':', c1 + 1);
        int k = std::stoi(item.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                      : c2 - c1 - 1));
        double amp = c2 == std::string::npos ? 1.0 : std::stod(item.substr(c2 + 1));
        FourierTerm t;
        t.k = k;
        if (fn == "cos")
            t.cos_amp = amp;
        else if (fn == "sin")
            t.sin_amp = amp;
        else
            throw std::runtime_error("bad term '" + item + "', expected cos or sin");
        terms.push_back(t);
    }
    if (terms.empty()) throw std::runtime_error("empty term list");
    return terms;
}

double eval_terms(const std::vector<FourierTerm>& terms, double th) {
    double s = 0.0;
    for (const auto& t : terms)
        s += t.cos_amp * std::cos(t.k * th) + t.sin_amp * std::sin(t.k * th);
    return s;
}

Body load_body(const std::string& path) {
    return body_from_json(json::parse(read_file(path)));
}

int cmd_construct(const std::string& kind, const std::string& center_spec, double radius,
                  double circumradius, double r0, double c, double eps,
                  const std::string& f_spec, int m, const std::string& out) {
    HPoint center = parse_center(center_spec);
    Body K = [&]() -> Body {
        if (kind == "disc") return disc_body(center, radius);
        if (kind == "reuleaux") return reuleaux({center, circumradius});
        if (kind == "perturbed") return perturbed_radial(c, eps, parse_terms(f_spec), center);
        if (kind == "slab") {
            auto terms = parse_terms(f_spec);
            return slab_body(r0, eps, [&](double th) { return eval_terms(terms, th); }, m);
        }
        throw std::runtime_error("unknown kind '" + kind +
                                 "' (disc, reuleaux, perturbed, slab)");
    }();
    write_file_atomic(out, to_json(K).dump(2) + "\n");
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

struct ColumnStat {
    int n = 0;
    double lo = 0.0, hi = 0.0;
    void feed(double x) {
        lo = n ? std::min(lo, x) : x;
        hi = n ? std::max(hi, x) : x;
        ++n;
    }
};

int cmd_measure(const std::string& body_path, const std::string& pencil_spec, int m,
                double tol, const std::string& out, const std::string& data_out) {
    Body K = load_body(body_path);
    Pencil P{parse_center(pencil_spec), m};
    bool inside = contains(K, P.p) && interior_margin(K, P.p) > 0.0;
    if (!inside) throw std::runtime_error("pencil center lies outside the body");
    MeasurementTable T = pencil_profile(K, P);

    ColumnStat proj, sec, wid;
    int dn = 0, misses = 0;
    double max_mid_off = 0.0;
    for (int k = 0; k < (int)T.rows.size(); ++k) {
        const MeasurementRow& r = T.rows[k];
        proj.feed(r.projection);
        if (r.width) wid.feed(*r.width);
        if (r.section)
            sec.feed(*r.section);
        else
            ++misses;
        if (r.double_normal) ++dn;
    }
    for (int k = 0; k < P.m; ++k) {
        Geodesic L = pencil_line(P, k);
        SectionResult S = section(K, L);
        if (S.hit)
            max_mid_off = std::max(
                max_mid_off,
                std::fabs(0.5 * (S.chord.t_lo + S.chord.t_hi) - foot_coord(P.p, L)));
    }

    if (!out.empty()) {
        if (out.size() > 5 && out.compare(out.size() - 5, 5, ".json") == 0)
            write_file_atomic(out, to_json(T).dump(2) + "\n");
        else
            write_file_atomic(out, to_csv(T));
        std::printf("wrote %s\n", out.c_str());
    }
    if (!data_out.empty()) {
        write_file_atomic(data_out, to_csv(measure_projections(K, P)));
        std::printf("wrote %s\n", data_out.c_str());
    }

    auto verdict = [&](const ColumnStat& s) { return s.hi - s.lo <= tol ? "yes" : "no"; };
    std::printf("rows: %zu\n", T.rows.size());
    std::printf("projection: min %.10g  max %.10g  spread %.3e  constant@%g: %s\n", proj.lo,
                proj.hi, proj.hi - proj.lo, tol, verdict(proj));
    if (sec.n)
        std::printf("section:    min %.10g  max %.10g  spread %.3e  constant@%g: %s\n",
                    sec.lo, sec.hi, sec.hi - sec.lo, tol, verdict(sec));
    if (misses) std::printf("section misses: %d\n", misses);
    if (wid.n)
        std::printf("width:      min %.10g  max %.10g  spread %.3e  constant@%g: %s\n",
                    wid.lo, wid.hi, wid.hi - wid.lo, tol, verdict(wid));
    std::printf("double normals: %d of %zu rows\n", dn, T.rows.size());
    std::printf("symmetric about pencil center@%g: %s (max chord midpoint offset %.3e)\n",
                tol, max_mid_off <= tol ? "yes" : "no", max_mid_off);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
    std::vector<SuiteReport> reports;
    if (suite == "all")
        reports = run_all_suites(seed);
    else
        reports.push_back(run_suite(suite, seed));

    bool all_pass = true;
    for (const SuiteReport& R : reports) {
        std::printf("[suite %s] %s: %s\n", R.suite.c_str(), R.anchor.c_str(),
                    R.statement.c_str());
        for (const CheckResult& c : R.checks) {
            std::printf("  [%s] %-42s value %-13.6g tol %-10g%s\n", c.pass ? "PASS" : "FAIL",
                        c.name.c_str(), c.value, c.tolerance,
                        c.detail.empty() ? "" : ("  " + c.detail).c_str());
            all_pass = all_pass && c.pass;
        }
        std::printf("  suite %s: %s\n", R.suite.c_str(), R.pass() ? "PASS" : "FAIL");
    }

    if (!out.empty()) {
        json j;
        if (reports.size() == 1)
            j = to_json(reports[0]);
        else {
            j = json::array();
            for (const auto& R : reports) j.push_back(to_json(R));
        }
        write_file_atomic(out, j.dump(2) + "\n");
        std::printf("wrote %s\n", out.c_str());
    }
    return all_pass ? 0 : 1;
}

int cmd_reconstruct(const std::string& data_path, const std::string& pencil_spec, int m,
                    const std::string& out) {
    Pencil P{parse_center(pencil_spec), m};
    std::vector<ProjectionDatum> data = data_from_csv(read_file(data_path), P);
    Body K = reconstruct_from_projections(data);
    write_file_atomic(out, to_json(K).dump(2) + "\n");
    std::printf("reconstructed from %zu data, wrote %s\n", data.size(), out.c_str());
    return 0;
}

int cmd_render(const std::string& body_path, const std::string& lines_path,
               const std::string& out) {
    Body K = load_body(body_path);
    std::vector<RenderLine> lines;
    if (!lines_path.empty()) {
        json j = json::parse(read_file(lines_path));
        if (!j.is_array()) throw std::runtime_error("geodesics file must hold an array");
        for (const json& item : j) {
            RenderLine rl;
            rl.g = geodesic_from_json(item);
            rl.proj = projection(K, rl.g);
            SectionResult S = section(K, rl.g);
            if (S.hit) rl.sec = S.chord;
            lines.push_back(rl);
        }
    }
    write_file_atomic(out, render_svg(K, lines));
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric tomography in the hyperbolic plane"};
    app.require_subcommand(1);

    std::string kind, center = "disc:0,0", f_spec = "sin:1", out;
    double radius = 0.5, circumradius = 1.0, r0 = 0.7, c = 0.8, eps = 0.03, tol = 1e-9;
    int m = 360;
    std::uint64_t seed = 0;
    std::string body_path, pencil = "disc:0,0", data_path, lines_path, suite, data_out;

    CLI::App* con = app.add_subcommand("construct", "build a body and write it as JSON");
    con->add_option("--kind", kind, "disc | reuleaux | perturbed | slab")->required();
    con->add_option("--center", center, "base point, model:u,v");
    con->add_option("--radius", radius, "disc radius");
    con->add_option("--circumradius", circumradius, "reuleaux circumradius");
    con->add_option("--r0", r0, "slab half-length");
    con->add_option("--c", c, "radial base radius");
    con->add_option("--eps", eps, "perturbation size");
    con->add_option("--f", f_spec, "terms, e.g. cos:2 or sin:3:0.5,cos:2:0.5");
    con->add_option("--m", m, "slab direction count");
    con->add_option("--out", out, "output body JSON")->required();

    CLI::App* mea = app.add_subcommand("measure", "tabulate a pencil of measurements");
    mea->add_option("--body", body_path, "body JSON")->required();
    mea->add_option("--pencil", pencil, "pencil center, model:u,v");
    mea->add_option("--m", m, "number of pencil lines");
    mea->add_option("--tol", tol, "constancy tolerance");
    mea->add_option("--out", out, "output table (.csv or .json)");
    mea->add_option("--data-out", data_out, "projection data CSV for reconstruct");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name, or 'all'")->required();
    ver->add_option("--seed", seed, "seed for randomized checks");
    ver->add_option("--out", out, "report JSON path");

    CLI::App* rec = app.add_subcommand("reconstruct", "rebuild a body from projection data");
    rec->add_option("--data", data_path, "projection data CSV")->required();
    rec->add_option("--pencil", pencil, "pencil center, model:u,v");
    rec->add_option("--m", m, "pencil line count the data came from");
    rec->add_option("--out", out, "output body JSON")->required();

    CLI::App* ren = app.add_subcommand("render", "draw the disc view as SVG");
    ren->add_option("--body", body_path, "body JSON")->required();
    ren->add_option("--lines", lines_path, "geodesics JSON (array)");
    ren->add_option("--out", out, "output SVG")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (con->parsed())
            return cmd_construct(kind, center, radius, circumradius, r0, c, eps, f_spec, m,
                                 out);
        if (mea->parsed()) return cmd_measure(body_path, pencil, m, tol, out, data_out);
        if (ver->parsed()) return cmd_verify(suite, seed, out);
        if (rec->parsed()) return cmd_reconstruct(data_path, pencil, m, out);
        if (ren->parsed()) return cmd_render(body_path, lines_path, out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
