#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oqho/matrix.hpp"

namespace oqho {

// Minimal ordered JSON document for reports. Keys keep insertion order and
// every floating-point number is printed with 12 significant digits, so a
// given input always serialises to the same bytes.
class JValue {
public:
    enum class Kind { null, boolean, integer, number, string, array, object };

    JValue() : kind_(Kind::null) {}
    static JValue boolean(bool b);
    static JValue integer(long long v);
    static JValue number(double v);
    static JValue string(std::string s);
    static JValue array();
    static JValue object();

    Kind kind() const { return kind_; }

    JValue& set(const std::string& key, JValue v);  // object append
    JValue& push(JValue v);                         // array append

    std::string dump(int indent = 2) const;

private:
    void write(std::string& out, int indent, int depth) const;

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    double num_ = 0.0;
    std::string str_;
    std::vector<JValue> arr_;
    std::vector<std::pair<std::string, JValue>> obj_;
};

// %.12g
std::string format_number(double v);

JValue to_json(const RealMatrix& m);
// complex entries as [re, im] pairs
JValue to_json(const ComplexMatrix& m);
JValue to_json(const std::vector<double>& v);
JValue to_json(const std::vector<Complex>& v);

// FNV-1a 64-bit hex digest of raw bytes; used to echo the input identity.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace oqho
