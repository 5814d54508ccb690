#include "ecshor/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ecshor {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json conventions_to_json(const ConventionConfig& c) {
    ordered_json j;
    j["qft_final_swaps"] = c.qft_final_swaps;
    j["qft_exponent_sign"] = c.qft_exponent_sign;
    j["qft_b_conjugate"] = c.qft_b_conjugate;
    j["register_halves_order"] = c.register_halves_order == HalvesOrder::a_high ? "a-high" : "b-high";
    j["postparse_endian_flip"] = c.postparse_endian_flip;
    return j;
}

ConventionConfig conventions_from_json(const nlohmann::json& j) {
    ConventionConfig c;
    c.qft_final_swaps = j.at("qft_final_swaps").get<bool>();
    c.qft_exponent_sign = j.at("qft_exponent_sign").get<int>();
    c.qft_b_conjugate = j.at("qft_b_conjugate").get<bool>();
    c.register_halves_order =
        j.at("register_halves_order").get<std::string>() == "a-high" ? HalvesOrder::a_high
                                                                     : HalvesOrder::b_high;
    c.postparse_endian_flip = j.at("postparse_endian_flip").get<bool>();
    return c;
}

// noise parameters are stored as fixed-precision strings to keep the
// document float-free and byte-stable
std::string fraction_string(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

}  // namespace

Counts ResultsDocument::to_counts() const {
    Counts c;
    c.shots = shots;
    c.map = counts;
    return c;
}

std::string to_json(const ResultsDocument& doc) {
    ordered_json j;
    j["experiment"] = doc.experiment;
    j["backend"] = doc.backend;
    j["physical_qubits"] = doc.physical_qubits;
    j["shots"] = doc.shots;
    ordered_json counts = ordered_json::object();
    for (const auto& [key, count] : doc.counts) counts[key] = count;  // std::map: sorted keys
    j["counts"] = counts;
    if (doc.extensions) {
        const auto& e = *doc.extensions;
        ordered_json ext;
        ext["n"] = e.n;
        ext["mode"] = e.mode;
        ext["p_index"] = e.p_index;
        ext["q_index"] = e.q_index;
        if (e.secret_k) ext["secret_k"] = *e.secret_k;
        ext["seed"] = e.seed;
        ext["noise_eps"] = fraction_string(e.noise_eps);
        ext["readout_flip"] = fraction_string(e.readout_flip);
        ext["conventions"] = conventions_to_json(e.conventions);
        ext["version"] = e.version;
        j["extensions"] = ext;
    }
    return j.dump(4) + "\n";
}

ResultsDocument from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    ResultsDocument doc;
    try {
        doc.experiment = j.at("experiment").get<std::string>();
        doc.backend = j.at("backend").get<std::string>();
        doc.physical_qubits = j.at("physical_qubits").get<std::vector<int>>();
        doc.shots = j.at("shots").get<int64_t>();
        for (const auto& [key, value] : j.at("counts").items())
            doc.counts[key] = value.get<int64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("missing or malformed field: ") + e.what());
    }
    if (j.contains("extensions")) {
        const auto& ext = j.at("extensions");
        ResultsExtensions e;
        try {
            e.n = ext.at("n").get<int>();
            e.mode = ext.at("mode").get<std::string>();
            e.p_index = ext.at("p_index").get<int>();
            e.q_index = ext.at("q_index").get<int>();
            if (ext.contains("secret_k")) e.secret_k = ext.at("secret_k").get<int>();
            e.seed = ext.at("seed").get<uint64_t>();
            e.noise_eps = std::stod(ext.at("noise_eps").get<std::string>());
            e.readout_flip = std::stod(ext.at("readout_flip").get<std::string>());
            e.conventions = conventions_from_json(ext.at("conventions"));
            e.version = ext.at("version").get<std::string>();
        } catch (const std::exception& ex) {
            throw SchemaError(std::string("malformed extensions block: ") + ex.what());
        }
        doc.extensions = e;
    }
    return doc;
}

void save_results(const ResultsDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << to_json(doc);
}

ResultsDocument load_results(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

int counts_key_width_bits(const ResultsDocument& doc) {
    if (doc.counts.empty()) throw SchemaError("empty counts");
    size_t width = doc.counts.begin()->first.size();
    if (width == 0 || width % 2 != 0) throw SchemaError("counts key width must be even and nonzero");
    for (const auto& [key, count] : doc.counts) {
        (void)count;
        if (key.size() != width) throw SchemaError("non-uniform counts key width");
        for (char c : key)
            if (c != '0' && c != '1') throw SchemaError("non-binary counts key: " + key);
    }
    return static_cast<int>(width / 2);
}

}  // namespace ecshor
