#pragma once

#include <string>

#include "padic/radial.hpp"

namespace padic {

// %.17g: enough significant digits to round-trip any double, and a stable
// byte representation for report diffing.
std::string fmt_double(double v);

// Minimal deterministic JSON writer used for all machine-readable output.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(double v);
    JsonWriter& value(long long v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& raw(const std::string& text);
    JsonWriter& newline();
    std::string str() const { return out_; }

private:
    void separator();
    std::string out_;
    bool need_comma_ = false;
};

std::string escape_json(const std::string& s);

// File-format parsing (strict field validation, std::invalid_argument on a
// malformed document) and the matching serializers.
RadialFunction parse_radial_function_json(const std::string& text);
std::string radial_function_to_json(const RadialFunction& f);

RadialSymbol parse_radial_symbol_json(const std::string& text);
std::string radial_symbol_to_json(const RadialSymbol& b);

KernelSpec parse_kernel_json(const std::string& text);
std::string kernel_to_json(const KernelSpec& k);

// CLI shorthand: "powercutoff:A", "twosided:A,B", "tabulated:J=V[,J=V...]"
KernelSpec parse_kernel_shorthand(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace padic
