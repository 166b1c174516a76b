#include "oqho/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "oqho/errors.hpp"

namespace oqho {

JValue JValue::boolean(bool b) {
    JValue v;
    v.kind_ = Kind::boolean;
    v.bool_ = b;
    return v;
}

JValue JValue::integer(long long i) {
    JValue v;
    v.kind_ = Kind::integer;
    v.int_ = i;
    return v;
}

JValue JValue::number(double d) {
    if (!std::isfinite(d)) throw NumericError("report: refusing to serialise a non-finite number");
    JValue v;
    v.kind_ = Kind::number;
    v.num_ = d;
    return v;
}

JValue JValue::string(std::string s) {
    JValue v;
    v.kind_ = Kind::string;
    v.str_ = std::move(s);
    return v;
}

JValue JValue::array() {
    JValue v;
    v.kind_ = Kind::array;
    return v;
}

JValue JValue::object() {
    JValue v;
    v.kind_ = Kind::object;
    return v;
}

JValue& JValue::set(const std::string& key, JValue v) {
    obj_.emplace_back(key, std::move(v));
    return *this;
}

JValue& JValue::push(JValue v) {
    arr_.push_back(std::move(v));
    return *this;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {
void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}
}  // namespace

void JValue::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
    switch (kind_) {
        case Kind::null: out += "null"; break;
        case Kind::boolean: out += bool_ ? "true" : "false"; break;
        case Kind::integer: out += std::to_string(int_); break;
        case Kind::number: out += format_number(num_); break;
        case Kind::string: write_escaped(out, str_); break;
        case Kind::array: {
            if (arr_.empty()) {
                out += "[]";
                break;
            }
            // arrays of scalars stay on one line; nested structures wrap
            bool scalar_only = true;
            for (const auto& v : arr_)
                if (v.kind_ == Kind::array || v.kind_ == Kind::object) scalar_only = false;
            out += '[';
            for (std::size_t i = 0; i < arr_.size(); ++i) {
                if (!scalar_only) {
                    out += '\n';
                    out += pad;
                }
                arr_[i].write(out, indent, depth + 1);
                if (i + 1 < arr_.size()) out += scalar_only ? ", " : ",";
            }
            if (!scalar_only) {
                out += '\n';
                out += close_pad;
            }
            out += ']';
            break;
        }
        case Kind::object: {
            if (obj_.empty()) {
                out += "{}";
                break;
            }
            out += '{';
            for (std::size_t i = 0; i < obj_.size(); ++i) {
                out += '\n';
                out += pad;
                write_escaped(out, obj_[i].first);
                out += ": ";
                obj_[i].second.write(out, indent, depth + 1);
                if (i + 1 < obj_.size()) out += ',';
            }
            out += '\n';
            out += close_pad;
            out += '}';
            break;
        }
    }
}

std::string JValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

JValue to_json(const RealMatrix& m) {
    JValue rows = JValue::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        JValue row = JValue::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push(JValue::number(m(i, j)));
        rows.push(std::move(row));
    }
    return rows;
}

JValue to_json(const ComplexMatrix& m) {
    JValue rows = JValue::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        JValue row = JValue::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            JValue pair = JValue::array();
            pair.push(JValue::number(m(i, j).real()));
            pair.push(JValue::number(m(i, j).imag()));
            row.push(std::move(pair));
        }
        rows.push(std::move(row));
    }
    return rows;
}

JValue to_json(const std::vector<double>& v) {
    JValue arr = JValue::array();
    for (double x : v) arr.push(JValue::number(x));
    return arr;
}

JValue to_json(const std::vector<Complex>& v) {
    JValue arr = JValue::array();
    for (const auto& x : v) {
        JValue pair = JValue::array();
        pair.push(JValue::number(x.real()));
        pair.push(JValue::number(x.imag()));
        arr.push(std::move(pair));
    }
    return arr;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace oqho
