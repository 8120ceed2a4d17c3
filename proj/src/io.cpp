#include "hyptom/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hyptom {

json to_json(const ModelPoint& mp) {
    return json{{"model", model_name(mp.model)}, {"u", mp.u}, {"v", mp.v}};
}

ModelPoint modelpoint_from_json(const json& j) {
    return {model_from_name(j.at("model").get<std::string>()), j.at("u").get<double>(),
            j.at("v").get<double>()};
}

json to_json(const Geodesic& g) {
    ModelPoint p = to_model(g.c, Model::disc);
    ModelPoint q = to_model(point_at(g, 1.0), Model::disc);
    return json{{"kind", "geodesic"}, {"p", to_json(p)}, {"q", to_json(q)}};
}

Geodesic geodesic_from_json(const json& j) {
    if (j.at("kind") != "geodesic") throw std::invalid_argument("expected a geodesic object");
    return geodesic_through(from_model(modelpoint_from_json(j.at("p"))),
                            from_model(modelpoint_from_json(j.at("q"))));
}

json to_json(const Body& K) {
    return std::visit([](const auto& b) -> json {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) {
            json coeffs = json::array();
            for (const auto& t : b.terms) coeffs.push_back({t.k, t.cos_amp, t.sin_amp});
            return json{{"kind", "radial"},
                        {"center", to_json(to_model(b.center, Model::disc))},
                        {"c", b.c0},
                        {"eps", 1.0},
                        {"f", "fourier"},
                        {"coeffs", coeffs}};
        } else if constexpr (std::is_same_v<T, ArcBody>) {
            json discs = json::array();
            for (const auto& d : b.discs)
                discs.push_back({{"center", to_json(to_model(d.center, Model::disc))},
                                 {"radius", d.radius}});
            return json{{"kind", "arcs"}, {"discs", discs}};
        } else {
            json planes = json::array();
            for (const auto& g : b.planes) planes.push_back(to_json(g));
            return json{{"kind", "halfplanes"}, {"planes", planes}};
        }
    }, K);
}

Body body_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "radial") {
        double eps = j.value("eps", 1.0);
        std::vector<FourierTerm> terms;
        for (const auto& c : j.value("coeffs", json::array())) {
            FourierTerm t;
            t.k = c.at(0).get<int>();
            t.cos_amp = eps * c.at(1).get<double>();
            t.sin_amp = eps * c.at(2).get<double>();
            terms.push_back(t);
        }
        return make_radial_body(from_model(modelpoint_from_json(j.at("center"))),
                                j.at("c").get<double>(), std::move(terms));
    }
    if (kind == "arcs") {
        std::vector<Disc> discs;
        for (const auto& d : j.at("discs"))
            discs.push_back({from_model(modelpoint_from_json(d.at("center"))),
                             d.at("radius").get<double>()});
        return make_arc_body(std::move(discs));
    }
    if (kind == "halfplanes") {
        std::vector<Geodesic> planes;
        for (const auto& g : j.at("planes")) planes.push_back(geodesic_from_json(g));
        return make_halfplane_body(std::move(planes));
    }
    throw std::invalid_argument("unknown body kind: " + kind);
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string to_csv(const MeasurementTable& T) {
    std::string out = "theta,projection,section,width,double_normal\n";
    for (const auto& r : T.rows) {
        out += fmt(r.theta) + "," + fmt(r.projection) + ",";
        if (r.section) out += fmt(*r.section);
        out += ",";
        if (r.width) out += fmt(*r.width);
        out += ",";
        out += r.double_normal ? "1" : "0";
        out += "\n";
    }
    return out;
}

MeasurementTable table_from_csv(const std::string& text) {
    MeasurementTable T;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 || line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 5)
            throw std::invalid_argument("measurement csv: bad field count at line " +
                                        std::to_string(lineno));
        MeasurementRow r;
        r.theta = std::stod(f[0]);
        r.projection = std::stod(f[1]);
        if (!f[2].empty()) r.section = std::stod(f[2]);
        if (!f[3].empty()) r.width = std::stod(f[3]);
        r.double_normal = f[4] == "1";
        T.rows.push_back(r);
    }
    return T;
}

json to_json(const MeasurementTable& T) {
    json rows = json::array();
    for (const auto& r : T.rows) {
        json row{{"theta", r.theta},
                 {"projection", r.projection},
                 {"double_normal", r.double_normal}};
        row["section"] = r.section ? json(*r.section) : json();
        row["width"] = r.width ? json(*r.width) : json();
        rows.push_back(row);
    }
    return json{{"rows", rows}};
}

std::string to_csv(const std::vector<ProjectionDatum>& data) {
    std::string out = "theta,ell,ell_prime,t\n";
    for (const auto& d : data)
        out += fmt(d.theta) + "," + fmt(d.ell) + "," + fmt(d.ell_prime) + "," + fmt(d.t) + "\n";
    return out;
}

std::vector<ProjectionDatum> data_from_csv(const std::string& text, const Pencil& P) {
    std::vector<ProjectionDatum> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    constexpr double kPi = 3.1415926535897932384626433832795;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 || line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 4)
            throw std::invalid_argument("projection csv: bad field count at line " +
                                        std::to_string(lineno));
        ProjectionDatum d;
        d.theta = std::stod(f[0]);
        d.ell = std::stod(f[1]);
        d.ell_prime = std::stod(f[2]);
        d.t = std::stod(f[3]);
        int k = static_cast<int>(std::lround(d.theta * P.m / kPi));
        Geodesic L = pencil_line(P, k);
        if (std::fabs(kPi * k / P.m - d.theta) > 1e-9)
            throw std::invalid_argument("projection csv: theta off the pencil at line " +
                                        std::to_string(lineno));
        d.L = L;
        out.push_back(d);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

} // namespace hyptom
