#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace aco::jsonio {

// Minimal order-preserving JSON value. The command-line tools promise
// byte-stable output with a fixed number of significant digits, which rules
// out shortest-round-trip serializers; this writer formats every double with
// the same "%.17g".

struct Value;
using Array = std::vector<Value>;
using Object = std::vector<std::pair<std::string, Value>>;

struct Value {
    using Variant =
        std::variant<std::nullptr_t, bool, long long, double, std::string, Array,
                     Object>;
    Variant v;

    Value() : v(nullptr) {}
    Value(bool b) : v(b) {}
    Value(int i) : v(static_cast<long long>(i)) {}
    Value(long long i) : v(i) {}
    Value(std::size_t i) : v(static_cast<long long>(i)) {}
    Value(double d) : v(d) {}
    Value(const char* s) : v(std::string(s)) {}
    Value(std::string s) : v(std::move(s)) {}
    Value(Array a) : v(std::move(a)) {}
    Value(Object o) : v(std::move(o)) {}
};

/// Fixed-precision decimal rendering, printf "%.{sig_digits}g".
std::string format_double(double x, int sig_digits);

/// Pretty-print with two-space indentation; scalar-only arrays stay on one
/// line. Ends with a newline.
std::string dump(const Value& value);

}  // namespace aco::jsonio
