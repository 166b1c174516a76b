#include "oqho/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oqho/errors.hpp"

namespace oqho {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("input is not valid JSON");
    return j;
}

RealMatrix matrix_from(const json& j, const std::string& name, std::size_t rows,
                       std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw ValidationError(name + ": expected " + std::to_string(rows) + " rows");
    RealMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ValidationError(name + ": row " + std::to_string(i + 1) + " must have " +
                                  std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!row[k].is_number())
                throw ValidationError(name + ": entries must be numbers");
            const double v = row[k].get<double>();
            if (!std::isfinite(v)) throw ValidationError(name + ": entries must be finite");
            m(i, k) = v;
        }
    }
    return m;
}

std::size_t even_positive(const json& j, const std::string& name) {
    if (!j.is_number_unsigned() && !j.is_number_integer())
        throw ValidationError(name + ": expected a positive integer");
    const long long v = j.get<long long>();
    if (v <= 0 || v % 2 != 0) throw ValidationError(name + ": must be even and positive");
    return static_cast<std::size_t>(v);
}

RealMatrix theta_from(const json& j, std::size_t n) {
    if (j.is_string()) {
        if (j.get<std::string>() != "canonical")
            throw ValidationError("theta: the only named form is \"canonical\"");
        return canonical_theta(n);
    }
    return matrix_from(j, "theta", n, n);
}

}  // namespace

OscillatorModel parse_model(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw ValidationError("model: expected a JSON object");
    for (const char* key : {"n", "m", "theta", "R"})
        if (!j.contains(key)) throw ValidationError(std::string("model: missing field ") + key);

    const std::size_t n = even_positive(j["n"], "n");
    const std::size_t m = even_positive(j["m"], "m");
    RealMatrix theta = theta_from(j["theta"], n);
    RealMatrix r = matrix_from(j["R"], "R", n, n);

    const bool has_m = j.contains("M");
    const bool has_coupling = j.contains("coupling");
    if (has_m == has_coupling)
        throw ValidationError("model: exactly one of M or coupling must be given");

    if (has_m) {
        return OscillatorModel::make(std::move(theta), std::move(r),
                                     matrix_from(j["M"], "M", m, n));
    }
    const json& c = j["coupling"];
    if (!c.is_object() || !c.contains("shape") || !c.contains("epsilon"))
        throw ValidationError("coupling: expected { shape, epsilon }");
    if (!c["epsilon"].is_number()) throw ValidationError("coupling.epsilon: expected a number");
    const double eps = c["epsilon"].get<double>();
    if (!(eps >= 0.0) || !std::isfinite(eps))
        throw ValidationError("coupling.epsilon: must be finite and nonnegative");
    return OscillatorModel::make_coupled(std::move(theta), std::move(r),
                                         matrix_from(c["shape"], "coupling.shape", m, n), eps);
}

OscillatorModel load_model(const std::string& path) { return parse_model(read_file(path)); }

namespace {
SubsystemSpec subsystem_from(const json& j, std::size_t p_other, const std::string& tag) {
    if (!j.is_object()) throw ValidationError(tag + ": expected an object");
    for (const char* key : {"n", "m", "p", "theta", "R", "Mshape", "Lshape", "D"})
        if (!j.contains(key)) throw ValidationError(tag + ": missing field " + key);
    SubsystemSpec s;
    s.n = even_positive(j["n"], tag + ".n");
    s.m = even_positive(j["m"], tag + ".m");
    s.p = even_positive(j["p"], tag + ".p");
    s.Theta = theta_from(j["theta"], s.n);
    s.R = matrix_from(j["R"], tag + ".R", s.n, s.n);
    s.Mshape = matrix_from(j["Mshape"], tag + ".Mshape", s.m, s.n);
    s.Lshape = matrix_from(j["Lshape"], tag + ".Lshape", p_other, s.n);
    const json& d = j["D"];
    if (!d.is_array() || d.size() != s.p)
        throw ValidationError(tag + ".D: expected " + std::to_string(s.p) + " row indices");
    for (const auto& idx : d) {
        if (!idx.is_number_integer() && !idx.is_number_unsigned())
            throw ValidationError(tag + ".D: indices must be integers");
        const long long v = idx.get<long long>();
        if (v < 1) throw ValidationError(tag + ".D: indices are 1-based");
        s.d_rows.push_back(static_cast<std::size_t>(v));
    }
    finalize_selection(s);
    return s;
}
}  // namespace

NetworkDescription parse_network(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw ValidationError("network: expected a JSON object");
    for (const char* key : {"subsystems", "R12", "epsilon"})
        if (!j.contains(key)) throw ValidationError(std::string("network: missing field ") + key);
    const json& subs = j["subsystems"];
    if (!subs.is_array() || subs.size() != 2)
        throw ValidationError("network: subsystems must list exactly two oscillators");

    // p of the partner fixes the Lshape row count, so read the declared p first
    const std::size_t p1 = even_positive(subs[0].contains("p") ? subs[0]["p"] : json(),
                                         "subsystems[0].p");
    const std::size_t p2 = even_positive(subs[1].contains("p") ? subs[1]["p"] : json(),
                                         "subsystems[1].p");

    NetworkDescription net;
    net.sub1 = subsystem_from(subs[0], p2, "subsystems[0]");
    net.sub2 = subsystem_from(subs[1], p1, "subsystems[1]");
    net.R12 = matrix_from(j["R12"], "R12", net.sub1.n, net.sub2.n);
    if (!j["epsilon"].is_number()) throw ValidationError("epsilon: expected a number");
    net.epsilon = j["epsilon"].get<double>();
    if (!(net.epsilon >= 0.0) || !std::isfinite(net.epsilon))
        throw ValidationError("epsilon: must be finite and nonnegative");
    return net;
}

NetworkDescription load_network(const std::string& path) {
    return parse_network(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << contents;
    if (!out) throw ValidationError("failed writing output file: " + path);
}

}  // namespace oqho
