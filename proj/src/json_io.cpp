#include "padic/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace padic {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
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
    return out;
}

void JsonWriter::separator() {
    if (need_comma_) out_ += ',';
    need_comma_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    separator();
    out_ += '"';
    out_ += escape_json(name);
    out_ += "\":";
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    out_ += fmt_double(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    separator();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separator();
    out_ += '"';
    out_ += escape_json(v);
    out_ += '"';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::raw(const std::string& text) {
    separator();
    out_ += text;
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::newline() {
    out_ += '\n';
    return *this;
}

namespace {

json parse_checked(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON document");
    return j;
}

double number_field(const json& j, const std::string& name) {
    if (!j.contains(name) || !j.at(name).is_number()) {
        throw std::invalid_argument("missing numeric field '" + name + "'");
    }
    return j.at(name).get<double>();
}

int int_field(const json& j, const std::string& name) {
    if (!j.contains(name) || !j.at(name).is_number_integer()) {
        throw std::invalid_argument("missing integer field '" + name + "'");
    }
    return j.at(name).get<int>();
}

RadialFunction radial_from_json(const json& j) {
    RadialFunction f;
    f.prime = int_field(j, "prime");
    f.dim = int_field(j, "dim");
    f.k_min = int_field(j, "k_min");
    f.k_max = int_field(j, "k_max");
    if (!j.contains("shell_values") || !j.at("shell_values").is_array()) {
        throw std::invalid_argument("missing array field 'shell_values'");
    }
    f.shell_values.clear();
    for (const auto& v : j.at("shell_values")) {
        if (!v.is_number()) throw std::invalid_argument("shell_values must be numbers");
        f.shell_values.push_back(v.get<double>());
    }
    f.tail_value = j.contains("tail_value") ? number_field(j, "tail_value") : 0.0;
    f.validate();
    return f;
}

void radial_to_writer(JsonWriter& w, const RadialFunction& f) {
    w.begin_object();
    w.key("prime").value(f.prime);
    w.key("dim").value(f.dim);
    w.key("k_min").value(f.k_min);
    w.key("k_max").value(f.k_max);
    w.key("shell_values").begin_array();
    for (double v : f.shell_values) w.value(v);
    w.end_array();
    w.key("tail_value").value(f.tail_value);
    w.end_object();
}

} // namespace

RadialFunction parse_radial_function_json(const std::string& text) {
    return radial_from_json(parse_checked(text));
}

std::string radial_function_to_json(const RadialFunction& f) {
    JsonWriter w;
    radial_to_writer(w, f);
    return w.str();
}

RadialSymbol parse_radial_symbol_json(const std::string& text) {
    const json j = parse_checked(text);
    RadialSymbol b;
    b.profile = radial_from_json(j);
    b.value_at_zero = j.contains("value_at_zero") ? number_field(j, "value_at_zero") : 0.0;
    return b;
}

std::string radial_symbol_to_json(const RadialSymbol& b) {
    JsonWriter w;
    w.begin_object();
    w.key("prime").value(b.profile.prime);
    w.key("dim").value(b.profile.dim);
    w.key("k_min").value(b.profile.k_min);
    w.key("k_max").value(b.profile.k_max);
    w.key("shell_values").begin_array();
    for (double v : b.profile.shell_values) w.value(v);
    w.end_array();
    w.key("tail_value").value(b.profile.tail_value);
    w.key("value_at_zero").value(b.value_at_zero);
    w.end_object();
    return w.str();
}

KernelSpec parse_kernel_json(const std::string& text) {
    const json j = parse_checked(text);
    if (!j.contains("variant") || !j.at("variant").is_string()) {
        throw std::invalid_argument("kernel JSON needs a 'variant' string");
    }
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "tabulated") {
        if (!j.contains("values") || !j.at("values").is_object()) {
            throw std::invalid_argument("tabulated kernel needs a 'values' object");
        }
        std::map<int, double> table;
        for (const auto& [k, v] : j.at("values").items()) {
            if (!v.is_number()) throw std::invalid_argument("kernel values must be numbers");
            table[std::stoi(k)] = v.get<double>();
        }
        return KernelSpec::tabulated(std::move(table));
    }
    if (variant == "power_cutoff") return KernelSpec::power_cutoff(number_field(j, "a"));
    if (variant == "two_sided_power") {
        return KernelSpec::two_sided_power(number_field(j, "a"), number_field(j, "b"));
    }
    throw std::invalid_argument("unknown kernel variant '" + variant + "'");
}

std::string kernel_to_json(const KernelSpec& k) {
    JsonWriter w;
    w.begin_object();
    switch (k.family()) {
        case KernelSpec::Family::Tabulated: {
            w.key("variant").value(std::string("tabulated"));
            w.key("values").begin_object();
            for (const auto& [j, v] : k.table()) {
                w.key(std::to_string(j)).value(v);
            }
            w.end_object();
            break;
        }
        case KernelSpec::Family::PowerCutoff:
            w.key("variant").value(std::string("power_cutoff"));
            w.key("a").value(k.low_exponent());
            break;
        case KernelSpec::Family::TwoSidedPower:
            w.key("variant").value(std::string("two_sided_power"));
            w.key("a").value(k.low_exponent());
            w.key("b").value(k.high_decay());
            break;
    }
    w.end_object();
    return w.str();
}

KernelSpec parse_kernel_shorthand(const std::string& text) {
    const auto colon = text.find(':');
    const std::string family = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) parts.push_back(item);
        return parts;
    };
    auto to_double = [](const std::string& s) {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad number in kernel shorthand: " + s);
        return v;
    };
    if (family == "powercutoff") {
        const auto parts = split(args, ',');
        if (parts.size() != 1) throw std::invalid_argument("powercutoff:A expected");
        return KernelSpec::power_cutoff(to_double(parts[0]));
    }
    if (family == "twosided") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) throw std::invalid_argument("twosided:A,B expected");
        return KernelSpec::two_sided_power(to_double(parts[0]), to_double(parts[1]));
    }
    if (family == "tabulated") {
        std::map<int, double> table;
        for (const auto& entry : split(args, ',')) {
            const auto eq = entry.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("tabulated:J=V[,J=V...] expected");
            }
            table[std::stoi(entry.substr(0, eq))] = to_double(entry.substr(eq + 1));
        }
        return KernelSpec::tabulated(std::move(table));
    }
    throw std::invalid_argument("unknown kernel family '" + family + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

} // namespace padic
