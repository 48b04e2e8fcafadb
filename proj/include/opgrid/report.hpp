#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace opgrid {

struct Vertex {
    long n = 0;
    long s = 0;  // second index: k, l, or m depending on the grid
    bool operator==(const Vertex&) const = default;
};

inline std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.n) + "," + std::to_string(v.s) + ")";
}

/// Structured outcome of one verification; pass implies found == expected.
struct VerificationReport {
    std::string check;
    std::string grid;
    Vertex vertex;
    std::string circuit;
    std::string expected;
    std::string found;
    bool pass = false;
};

inline std::string to_json_line(const VerificationReport& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["grid"] = r.grid;
    j["vertex"] = {r.vertex.n, r.vertex.s};
    j["circuit"] = r.circuit;
    j["expected"] = r.expected;
    j["found"] = r.found;
    j["pass"] = r.pass;
    return j.dump();
}

inline std::string to_text_line(const VerificationReport& r) {
    std::string s = r.pass ? "pass " : "FAIL ";
    s += r.grid + " " + r.check + " @" + to_string(r.vertex);
    if (!r.circuit.empty()) s += " [" + r.circuit + "]";
    s += " expected=" + r.expected + " found=" + r.found;
    return s;
}

inline bool all_pass(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace opgrid
