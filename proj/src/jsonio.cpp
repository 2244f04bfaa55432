#include "aco/jsonio.hpp"

#include <cmath>
#include <cstdio>

namespace aco::jsonio {

namespace {

void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

bool is_scalar(const Value& v) {
    return !std::holds_alternative<Array>(v.v) &&
           !std::holds_alternative<Object>(v.v);
}

void dump_into(std::string& out, const Value& value, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::nullptr_t>) {
                out += "null";
            } else if constexpr (std::is_same_v<T, bool>) {
                out += v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, long long>) {
                out += std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                out += format_double(v, 17);
            } else if constexpr (std::is_same_v<T, std::string>) {
                escape_into(out, v);
            } else if constexpr (std::is_same_v<T, Array>) {
                if (v.empty()) {
                    out += "[]";
                    return;
                }
                bool flat = true;
                for (const Value& e : v) flat = flat && is_scalar(e);
                if (flat) {
                    out += '[';
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        if (i) out += ", ";
                        dump_into(out, v[i], 0);
                    }
                    out += ']';
                } else {
                    out += "[\n";
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        out += pad_in;
                        dump_into(out, v[i], depth + 1);
                        if (i + 1 < v.size()) out += ',';
                        out += '\n';
                    }
                    out += pad + ']';
                }
            } else if constexpr (std::is_same_v<T, Object>) {
                if (v.empty()) {
                    out += "{}";
                    return;
                }
                out += "{\n";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    out += pad_in;
                    escape_into(out, v[i].first);
                    out += ": ";
                    dump_into(out, v[i].second, depth + 1);
                    if (i + 1 < v.size()) out += ',';
                    out += '\n';
                }
                out += pad + '}';
            }
        },
        value.v);
}

}  // namespace

std::string format_double(double x, int sig_digits) {
    if (!std::isfinite(x)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig_digits, x);
    return buf;
}

std::string dump(const Value& value) {
    std::string out;
    dump_into(out, value, 0);
    out += '\n';
    return out;
}

}  // namespace aco::jsonio
