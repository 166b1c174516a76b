#pragma once

#include <string>

#include "oqho/interconnect.hpp"
#include "oqho/model.hpp"

namespace oqho {

// Parses a single-oscillator description:
//   { "n": int, "m": int, "theta": "canonical" | n x n array, "R": n x n array,
//     "M": m x n array  XOR  "coupling": { "shape": m x n array, "epsilon": number } }
OscillatorModel parse_model(const std::string& json_text);
OscillatorModel load_model(const std::string& path);

struct NetworkDescription {
    SubsystemSpec sub1, sub2;
    RealMatrix R12;
    double epsilon = 0.0;
};

// Parses a two-oscillator network:
//   { "subsystems": [ { "n", "m", "p", "theta", "R", "Mshape", "Lshape", "D" }, x2 ],
//     "R12": n1 x n2 array, "epsilon": number }
// where "D" lists 1-based selected channel rows in conjugate pairs.
NetworkDescription parse_network(const std::string& json_text);
NetworkDescription load_network(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace oqho
