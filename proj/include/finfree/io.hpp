// File formats:
//   roots file       UTF-8 text, one decimal per line, '#' comments
//   polynomial JSON  {"degree": N, "etilde": ["1", "-3/2", ...]} with
//                    coefficients as strings parsed as exact decimals or
//                    fractions

#ifndef FINFREE_IO_HPP
#define FINFREE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "finfree/poly.hpp"

namespace finfree::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Scalar>
MonicPoly<Scalar> read_roots_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open roots file: " + path);
    std::vector<Scalar> roots;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            try {
                roots.push_back(parse_scalar<Scalar>(token));
            } catch (const std::exception& e) {
                throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    if (roots.empty()) throw ParseError(path + ": no roots found");
    Vec<Scalar> v(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) v[i] = roots[i];
    return from_roots<Scalar>(std::move(v));
}

template <typename Scalar>
MonicPoly<Scalar> read_poly_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polynomial file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
    if (!j.contains("degree") || !j.contains("etilde"))
        throw ParseError(path + ": expected keys 'degree' and 'etilde'");
    const int degree = j["degree"].get<int>();
    const auto& arr = j["etilde"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != degree + 1)
        throw ParseError(path + ": etilde must hold degree+1 entries");
    Vec<Scalar> et(degree + 1);
    for (int k = 0; k <= degree; ++k) {
        try {
            if (arr[k].is_string())
                et[k] = parse_scalar<Scalar>(arr[k].template get<std::string>());
            else
                et[k] = parse_scalar<Scalar>(arr[k].dump());
        } catch (const std::exception& e) {
            throw ParseError(path + ": etilde[" + std::to_string(k) + "]: " + e.what());
        }
    }
    try {
        return from_etilde<Scalar>(std::move(et));
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Dispatch on extension: *.json is coefficient JSON, anything else is a
// roots file.
template <typename Scalar>
MonicPoly<Scalar> load_poly(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return read_poly_json<Scalar>(path);
    return read_roots_file<Scalar>(path);
}

template <typename Scalar>
void write_poly_json(const MonicPoly<Scalar>& p, std::ostream& out) {
    nlohmann::json j;
    j["degree"] = p.degree;
    std::vector<std::string> coeffs(p.degree + 1);
    for (int k = 0; k <= p.degree; ++k) coeffs[k] = format_number(p.etilde[k]);
    j["etilde"] = coeffs;
    out << j.dump(2) << "\n";
}

template <typename Scalar>
void write_poly_json(const MonicPoly<Scalar>& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_poly_json(p, out);
}

}  // namespace finfree::io

#endif  // FINFREE_IO_HPP
