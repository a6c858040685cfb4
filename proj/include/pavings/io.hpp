#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "map2d.hpp"
#include "paving.hpp"
#include "series.hpp"

namespace pavings {

using json = nlohmann::json;

namespace detail {

// Dart arrays are 1-based on disk, 0-based in memory.
inline json perm_to_json(const Permutation& p) {
    json arr = json::array();
    for (int i = 0; i < p.size(); ++i) arr.push_back(p(i) + 1);
    return arr;
}

inline Permutation perm_from_json(const json& arr, int n, const std::string& key) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
        throw std::runtime_error("paving io: field '" + key + "' must be an array of length n");
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const json& v = arr[static_cast<size_t>(i)];
        if (!v.is_number_integer())
            throw std::runtime_error("paving io: field '" + key + "' must contain integers");
        img[static_cast<size_t>(i)] = v.get<int>() - 1;
    }
    return Permutation(std::move(img));
}

} // namespace detail

inline json paving_to_json(const Paving& p) {
    return json{{"n", p.n},
                {"alpha", detail::perm_to_json(p.alpha)},
                {"beta", detail::perm_to_json(p.beta)},
                {"gamma", detail::perm_to_json(p.gamma)}};
}

// Accepts either involution-triple form {n, alpha, beta, gamma} or
// quadruple form {n, alpha, sigma, phi}; validation errors propagate.
inline Paving paving_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::runtime_error("paving io: missing integer field 'n'");
    const int n = j["n"].get<int>();
    if (n < 0) throw std::runtime_error("paving io: negative n");
    if (!j.contains("alpha")) throw std::runtime_error("paving io: missing field 'alpha'");
    const Permutation alpha = detail::perm_from_json(j["alpha"], n, "alpha");
    if (j.contains("beta") && j.contains("gamma"))
        return paving_from_involutions(alpha, detail::perm_from_json(j["beta"], n, "beta"),
                                       detail::perm_from_json(j["gamma"], n, "gamma"));
    if (j.contains("sigma") && j.contains("phi"))
        return paving_from_quadruple(alpha, detail::perm_from_json(j["sigma"], n, "sigma"),
                                     detail::perm_from_json(j["phi"], n, "phi"));
    throw std::runtime_error("paving io: need either beta+gamma or sigma+phi");
}

inline json map2d_to_json(const Map2D& m) {
    return json{{"n", m.n},
                {"alpha", detail::perm_to_json(m.alpha)},
                {"sigma", detail::perm_to_json(m.sigma)}};
}

inline Map2D map2d_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::runtime_error("map io: missing integer field 'n'");
    const int n = j["n"].get<int>();
    if (n < 0) throw std::runtime_error("map io: negative n");
    if (!j.contains("alpha") || !j.contains("sigma"))
        throw std::runtime_error("map io: need fields 'alpha' and 'sigma'");
    return Map2D(detail::perm_from_json(j["alpha"], n, "alpha"),
                 detail::perm_from_json(j["sigma"], n, "sigma"));
}

inline json paving_stats_to_json(const PavingStats& st) {
    return json{{"f0", st.f0},
                {"f1", st.f1},
                {"f2", st.f2},
                {"f3", st.f3},
                {"complexity", st.complexity},
                {"euler_characteristic", st.euler_characteristic},
                {"connected", st.connected}};
}

inline json map_stats_to_json(const MapStats& st) {
    return json{{"vertices", st.vertices},
                {"edges", st.edges},
                {"faces", st.faces},
                {"components", st.components},
                {"euler_characteristic", st.euler_characteristic},
                {"genus_per_component", st.genus_per_component}};
}

// Rationals print as "p/q", integers as plain decimal strings.
inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::runtime_error("series io: bad rational '" + s + "'");
    }
}

inline json series_to_json(const Series& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order; ++k) coeffs.push_back(rational_to_string(s[k]));
    return json{{"order", s.order}, {"coeffs", coeffs}};
}

inline Series series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::runtime_error("series io: need fields 'order' and 'coeffs'");
    Series s(j["order"].get<int>());
    const json& coeffs = j["coeffs"];
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != s.order + 1)
        throw std::runtime_error("series io: coeffs length must be order+1");
    for (int k = 0; k <= s.order; ++k)
        s[k] = rational_from_string(coeffs[static_cast<size_t>(k)].get<std::string>());
    return s;
}

inline json enumeration_report_to_json(const EnumerationReport& rep) {
    json j{{"n", rep.n},
           {"total_triples", rep.total_triples.str()},
           {"transitive_triples", rep.transitive_triples.str()},
           {"rooted_count", rep.rooted_count.str()},
           {"iso_classes", rep.iso_classes.str()}};
    if (!rep.class_representatives.empty()) {
        json reps = json::array();
        for (const ClassRepresentative& cr : rep.class_representatives)
            reps.push_back(json{{"paving", paving_to_json(cr.paving)},
                                {"stats", paving_stats_to_json(cr.stats)}});
        j["class_representatives"] = std::move(reps);
    }
    return j;
}

inline json asymptotic_report_to_json(const AsymptoticReport& rep) {
    std::ostringstream asym;
    asym.precision(25);
    asym << rep.asymptote;
    return json{{"k", rep.k},
                {"exact", rep.exact.str()},
                {"asymptote", asym.str()},
                {"ratio", rep.ratio}};
}

// OEIS-style b-file: lines "n a(n)", '#' starts a comment line.
inline std::vector<std::pair<long long, BigInt>> read_bfile(std::istream& in) {
    std::vector<std::pair<long long, BigInt>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long long n;
        std::string value;
        if (!(ls >> n >> value))
            throw std::runtime_error("b-file: malformed line " + std::to_string(lineno));
        try {
            rows.emplace_back(n, BigInt(value));
        } catch (const std::exception&) {
            throw std::runtime_error("b-file: bad integer on line " + std::to_string(lineno));
        }
    }
    return rows;
}

inline void write_bfile(std::ostream& out, const std::vector<std::pair<long long, BigInt>>& rows) {
    for (const auto& [n, a] : rows) out << n << " " << a.str() << "\n";
}

inline std::vector<std::pair<long long, BigInt>> read_bfile_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    return read_bfile(in);
}

inline json read_json_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void write_json_path(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace pavings
